#include "pencils/cluster.hpp"

#include <algorithm>
#include <sstream>

#include "pencils/errors.hpp"

namespace pencils {

int Cluster::add_root(int plane_var, const FieldElement& px,
                      const FieldElement& py, int generic_mult) {
    ClusterPoint p;
    p.id = size();
    p.level = 0;
    p.plane_var = plane_var;
    p.px = px;
    p.py = py;
    p.center = field_->zero();
    p.generic_mult = generic_mult;
    points_.push_back(std::move(p));
    return points_.back().id;
}

int Cluster::add_child(int parent, BlowupChart chart, const FieldElement& center,
                       int generic_mult) {
    if (parent < 0 || parent >= size())
        throw InternalError("Cluster::add_child: bad parent id");
    const ClusterPoint& par = points_[parent];
    ClusterPoint p;
    p.id = size();
    p.level = par.level + 1;
    p.parent = parent;
    p.plane_var = par.plane_var;
    p.px = field_->zero();
    p.py = field_->zero();
    p.chart = chart;
    p.center = center;
    p.generic_mult = generic_mult;
    p.proximate_to.push_back(parent);
    if (chart == BlowupChart::XPrimary) {
        // E of the parent is the new {x = 0}; the old {y = 0} axis survives
        // through the origin only in the center-0 direction.
        p.x0_exc = parent;
        if (center.is_zero() && par.y0_exc) {
            p.y0_exc = par.y0_exc;
            p.proximate_to.push_back(*par.y0_exc);
        }
    } else {
        if (!center.is_zero())
            throw InternalError("Cluster::add_child: y-primary chart needs center 0");
        // the direction x = 0: E of the parent is the new {y = 0}, and the
        // old {x = 0} axis passes through this point.
        p.y0_exc = parent;
        if (par.x0_exc) {
            p.x0_exc = par.x0_exc;
            p.proximate_to.push_back(*par.x0_exc);
        }
    }
    std::sort(p.proximate_to.begin(), p.proximate_to.end());
    points_.push_back(std::move(p));
    return points_.back().id;
}

std::vector<int> Cluster::children(int id) const {
    std::vector<int> out;
    for (auto& p : points_)
        if (p.parent == id) out.push_back(p.id);
    return out;
}

std::vector<int> Cluster::roots() const {
    std::vector<int> out;
    for (auto& p : points_)
        if (p.parent < 0) out.push_back(p.id);
    return out;
}

long Cluster::multiplicity_checksum() const {
    long s = 0;
    for (auto& p : points_)
        s += static_cast<long>(p.generic_mult) * p.generic_mult;
    return s;
}

void Cluster::validate(int degree) const {
    if (multiplicity_checksum() != static_cast<long>(degree) * degree)
        throw InternalError("cluster checksum mismatch: sum of squared "
                            "multiplicities differs from degree^2");
    for (auto& p : points_) {
        long prox_sum = 0;
        for (auto& q : points_)
            if (std::find(q.proximate_to.begin(), q.proximate_to.end(), p.id) !=
                q.proximate_to.end())
                prox_sum += q.generic_mult;
        if (p.generic_mult < prox_sum)
            throw InternalError("proximity inequality fails at cluster point " +
                                std::to_string(p.id));
        if (p.generic_mult <= 0)
            throw InternalError("nonpositive multiplicity at cluster point " +
                                std::to_string(p.id));
    }
}

std::string Cluster::describe() const {
    static const char* chart_names[] = {"X", "Y", "Z"};
    std::ostringstream os;
    for (auto& p : points_) {
        os << "p" << p.id << ": level " << p.level;
        if (p.parent < 0) {
            os << ", chart " << chart_names[p.plane_var] << "=1 at ("
               << p.px.to_string() << ", " << p.py.to_string() << ")";
        } else {
            os << ", over p" << p.parent << " at direction ";
            if (p.chart == BlowupChart::XPrimary)
                os << p.center.to_string();
            else
                os << "infinity";
        }
        os << ", mult " << p.generic_mult;
        if (p.is_satellite()) {
            os << ", satellite of {";
            for (size_t i = 0; i < p.proximate_to.size(); ++i)
                os << (i ? ", " : "") << "p" << p.proximate_to[i];
            os << "}";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace pencils
