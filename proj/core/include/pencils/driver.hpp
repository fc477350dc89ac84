#ifndef PENCILS_DRIVER_HPP
#define PENCILS_DRIVER_HPP

#include <string>
#include <vector>

#include "pencils/base_points.hpp"
#include "pencils/enumerator.hpp"

namespace pencils {

/// An integral component of a special fiber, as found by the search.
struct CurveComponent {
    MultiPoly form;  // canonical degree-e form
    int degree = 0;
    std::vector<int> actual_mults;  // m_p(C) per cluster point
    Candidate candidate;            // the W that produced it
};

/// One special fiber: the member lambda*F + mu*G together with its complete
/// factorization into found components.
struct Fiber {
    FieldElement lambda, mu;  // scaled so the first nonzero entry is 1
    std::vector<std::pair<int, int>> factorization;  // (component index, exp)
    MultiPoly member_form;
};

struct VerificationEntry {
    int fiber = -1;  // -1 for component-level checks
    bool pass = false;
    std::string detail;
};

struct DriverOptions {
    int max_degree = -1;  // debug override of the e <= d loop bound
    bool verify = true;
    unsigned long probe_seed = 0;
    int threads = 1;
    bool dump_candidates = false;
};

struct DriverResult {
    Cluster cluster;
    std::vector<long> candidate_counts;             // per degree e = 1..d
    std::vector<std::vector<Candidate>> candidates;  // filled when dumping
    std::vector<CurveComponent> components;
    std::vector<Fiber> fibers;
    std::vector<VerificationEntry> verification;
};

/// The full search: enumerate candidates degree by degree and keep those
/// passing the three filters (dimension 0, no exceptional part, no earlier
/// component divides), ordered by (degree, canonical form).
std::vector<CurveComponent> special_fiber_components(const Pencil& pencil,
                                                     const Cluster& cluster,
                                                     const DriverOptions& options);

/// Assigns each component to its unique member via the linear system
/// "P divides lambda*F + mu*G" and computes exponents by exact division.
std::vector<Fiber> group_into_fibers(const std::vector<CurveComponent>& components,
                                     const Pencil& pencil);

/// Independent end-to-end re-check: refactors every fiber and re-verifies
/// the component invariants. Failures become report entries, not throws.
std::vector<VerificationEntry> verify_output(
    const std::vector<CurveComponent>& components,
    const std::vector<Fiber>& fibers, const Pencil& pencil,
    const Cluster& cluster);

/// Resolves base points, runs the search, groups fibers, and verifies.
DriverResult run_driver(const Pencil& pencil, const DriverOptions& options = {});

}  // namespace pencils

#endif
