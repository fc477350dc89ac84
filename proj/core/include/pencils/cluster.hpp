#ifndef PENCILS_CLUSTER_HPP
#define PENCILS_CLUSTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "pencils/multipoly.hpp"

namespace pencils {

/// A point of the base-point cluster, either in the plane (level 0) or
/// infinitely near (level >= 1, reached by blowing up its parent).
struct ClusterPoint {
    int id = -1;
    int level = 0;
    int parent = -1;  // -1 for plane points

    /// Which projective variable the ambient affine chart sets to 1
    /// (0 = X, 1 = Y, 2 = Z). Inherited from the plane ancestor.
    int plane_var = 2;
    /// Plane points only: affine coordinates in that chart.
    FieldElement px, py;

    /// Level >= 1 only: position on the parent's exceptional divisor. The
    /// x-primary chart at center c is the direction y/x = c; the y-primary
    /// chart is used only at center 0 (the direction x = 0).
    BlowupChart chart = BlowupChart::XPrimary;
    FieldElement center;

    /// Ids of the points this one is proximate to, ascending. Always
    /// contains the parent; a second entry makes the point a satellite.
    std::vector<int> proximate_to;

    /// Multiplicity of a generic pencil member at this point.
    int generic_mult = 0;

    /// Owners of the local coordinate axes when they are exceptional
    /// divisors: {x = 0} is E of x0_exc, {y = 0} is E of y0_exc.
    std::optional<int> x0_exc, y0_exc;

    bool is_satellite() const { return proximate_to.size() >= 2; }
};

/// The weighted cluster of base points of a pencil, stored as a forest in
/// insertion order (parents always precede children).
class Cluster {
public:
    explicit Cluster(FieldPtr field) : field_(std::move(field)) {}

    const FieldPtr& field() const { return field_; }
    const std::vector<ClusterPoint>& points() const { return points_; }
    const ClusterPoint& point(int id) const { return points_[id]; }
    int size() const { return static_cast<int>(points_.size()); }

    /// Adds a plane point; returns its id.
    int add_root(int plane_var, const FieldElement& px, const FieldElement& py,
                 int generic_mult);
    /// Adds an infinitely near point on the parent's exceptional divisor,
    /// deriving proximities and axis bookkeeping; returns its id.
    int add_child(int parent, BlowupChart chart, const FieldElement& center,
                  int generic_mult);

    std::vector<int> children(int id) const;
    std::vector<int> roots() const;

    /// Sum of squared generic multiplicities; equals d^2 for a pencil of
    /// degree-d curves with no fixed component.
    long multiplicity_checksum() const;

    /// Verifies the proximity inequality at every point and the checksum
    /// against the given degree; throws InternalError on failure.
    void validate(int degree) const;

    std::string describe() const;

private:
    FieldPtr field_;
    std::vector<ClusterPoint> points_;
};

}  // namespace pencils

#endif
