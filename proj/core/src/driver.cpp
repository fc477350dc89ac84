#include "pencils/driver.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "pencils/errors.hpp"
#include "pencils/linear_systems.hpp"

namespace pencils {

namespace {

// filters (1) and (2), plus (3) against the frozen lower-degree components
bool candidate_passes(const Pencil& pencil, const Cluster& cluster,
                      const Candidate& w,
                      const std::vector<CurveComponent>& earlier,
                      MultiPoly& curve_out, std::vector<int>& mults_out) {
    ConditionSystem sys =
        impose_cluster_conditions(pencil.field, w.e, w, cluster);
    auto rk = rank_and_kernel(sys.conditions);
    if (sys.unknown_count - rk.rank - 1 != 0) return false;

    auto monomials = monomials_of_degree(w.e);
    MultiPoly curve(pencil.field, 3);
    for (int u = 0; u < sys.unknown_count; ++u)
        curve.add_term(monomials[u], rk.kernel[0][u]);
    if (curve.is_zero())
        throw InternalError("zero member in a zero-dimensional system");
    curve = curve.canonical_form();

    auto actual = actual_multiplicities(cluster, curve);
    for (int p = 0; p < cluster.size(); ++p)
        if (actual[p] != w.v[p]) return false;

    for (auto& q : earlier)
        if (is_component(q.form, curve)) return false;

    curve_out = std::move(curve);
    mults_out = std::move(actual);
    return true;
}

}  // namespace

std::vector<CurveComponent> special_fiber_components(const Pencil& pencil,
                                                     const Cluster& cluster,
                                                     const DriverOptions& options) {
    int d = pencil.degree;
    int emax = options.max_degree > 0 ? std::min(options.max_degree, d) : d;
    int threads = std::max(1, options.threads);
    std::vector<CurveComponent> components;

    for (int e = 1; e <= emax; ++e) {
        auto candidates = enumerate_candidates(cluster, e, d);
        size_t n = candidates.size();
        std::vector<char> keep(n, 0);
        std::vector<MultiPoly> curves(n);
        std::vector<std::vector<int>> mults(n);

        auto work = [&](size_t first, size_t stride) {
            for (size_t i = first; i < n; i += stride)
                keep[i] = candidate_passes(pencil, cluster, candidates[i],
                                           components, curves[i], mults[i]);
        };
        if (threads == 1 || n < 2) {
            work(0, 1);
        } else {
            std::vector<std::thread> pool;
            int k = std::min<size_t>(threads, n);
            pool.reserve(k);
            for (int t = 0; t < k; ++t) pool.emplace_back(work, t, k);
            for (auto& th : pool) th.join();
        }

        // deterministic merge in candidate order, deduplicating by form
        std::vector<CurveComponent> fresh;
        for (size_t i = 0; i < n; ++i) {
            if (!keep[i]) continue;
            bool dup = false;
            for (auto& c : fresh)
                if (c.form == curves[i]) { dup = true; break; }
            if (dup) continue;
            fresh.push_back({std::move(curves[i]), e, std::move(mults[i]),
                             candidates[i]});
        }
        std::sort(fresh.begin(), fresh.end(),
                  [](const CurveComponent& a, const CurveComponent& b) {
                      return a.form.cmp(b.form) < 0;
                  });
        for (auto& c : fresh) components.push_back(std::move(c));
    }
    return components;
}

std::vector<Fiber> group_into_fibers(const std::vector<CurveComponent>& components,
                                     const Pencil& pencil) {
    const FieldPtr& field = pencil.field;
    std::vector<Fiber> fibers;

    for (size_t i = 0; i < components.size(); ++i) {
        const MultiPoly& P = components[i].form;
        // remainders are linear in the member, so P | lambda*F + mu*G is a
        // homogeneous 2-unknown linear system over K
        MultiPoly r1 = pencil.F.mod(P);
        MultiPoly r2 = pencil.G.mod(P);
        std::map<Monomial, std::pair<FieldElement, FieldElement>, GrlexDesc> rows;
        for (auto& [m, c] : r1.terms())
            rows[m] = {c, field->zero()};
        for (auto& [m, c] : r2.terms()) {
            auto it = rows.find(m);
            if (it == rows.end())
                rows[m] = {field->zero(), c};
            else
                it->second.second = c;
        }
        KMatrix mat(field, 0, 2);
        for (auto& [m, pr] : rows) mat.append_row({pr.first, pr.second});
        auto rk = rank_and_kernel(mat);
        if (rk.kernel.empty())
            throw InternalError("component divides no pencil member");
        if (rk.kernel.size() > 1)
            throw InternalError("component divides every pencil member");
        FieldElement lambda = rk.kernel[0][0], mu = rk.kernel[0][1];
        FieldElement scale =
            (lambda.is_zero() ? mu : lambda).inverse();
        lambda = lambda * scale;
        mu = mu * scale;

        Fiber* fiber = nullptr;
        for (auto& f : fibers)
            if (f.lambda == lambda && f.mu == mu) { fiber = &f; break; }
        if (!fiber) {
            Fiber f;
            f.lambda = lambda;
            f.mu = mu;
            f.member_form = pencil.F * lambda + pencil.G * mu;
            fibers.push_back(std::move(f));
            fiber = &fibers.back();
        }
        // exponent by repeated exact division
        int exp = 0;
        MultiPoly rest = fiber->member_form;
        while (true) {
            auto q = rest.divide_exact(P);
            if (!q) break;
            rest = std::move(*q);
            ++exp;
        }
        if (exp < 1) throw InternalError("vanishing exponent in a fiber");
        fiber->factorization.emplace_back(static_cast<int>(i), exp);
    }
    return fibers;
}

std::vector<VerificationEntry> verify_output(
    const std::vector<CurveComponent>& components,
    const std::vector<Fiber>& fibers, const Pencil& pencil,
    const Cluster& cluster) {
    std::vector<VerificationEntry> report;
    int d = pencil.degree;

    for (size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        auto actual = actual_multiplicities(cluster, c.form);
        long dot = 0, sq = 0;
        for (int p = 0; p < cluster.size(); ++p) {
            dot += static_cast<long>(actual[p]) * cluster.point(p).generic_mult;
            sq += static_cast<long>(actual[p]) * actual[p];
        }
        std::ostringstream os;
        bool ok = actual == c.actual_mults &&
                  dot == static_cast<long>(c.degree) * d &&
                  static_cast<long>(c.degree) * c.degree <= sq;
        os << "component " << i << ": e*d = " << dot << ", sum m^2 = " << sq;
        report.push_back({-1, ok, os.str()});
    }

    for (size_t i = 0; i < fibers.size(); ++i) {
        const auto& f = fibers[i];
        MultiPoly rest = f.member_form;
        bool ok = true;
        for (auto& [ci, exp] : f.factorization) {
            for (int k = 0; k < exp && ok; ++k) {
                auto q = rest.divide_exact(components[ci].form);
                if (!q)
                    ok = false;
                else
                    rest = std::move(*q);
            }
        }
        if (ok && !(rest.is_constant() && !rest.is_zero())) ok = false;
        std::ostringstream os;
        os << "fiber " << i << ": residual degree "
           << (rest.is_zero() ? -1 : rest.total_degree());
        report.push_back({static_cast<int>(i), ok, os.str()});
    }
    return report;
}

DriverResult run_driver(const Pencil& pencil, const DriverOptions& options) {
    BasePointOptions bp;
    bp.probe = options.verify;
    bp.probe_seed = options.probe_seed;

    DriverResult result{compute_base_points(pencil, bp), {}, {}, {}, {}, {}};

    int d = pencil.degree;
    int emax = options.max_degree > 0 ? std::min(options.max_degree, d) : d;
    for (int e = 1; e <= emax; ++e) {
        auto cs = enumerate_candidates(result.cluster, e, d);
        result.candidate_counts.push_back(static_cast<long>(cs.size()));
        if (options.dump_candidates) result.candidates.push_back(std::move(cs));
    }

    result.components =
        special_fiber_components(pencil, result.cluster, options);
    result.fibers = group_into_fibers(result.components, pencil);
    if (options.verify) {
        result.verification = verify_output(result.components, result.fibers,
                                            pencil, result.cluster);
        for (auto& entry : result.verification)
            if (!entry.pass)
                throw InternalError("verification failed: " + entry.detail);
    }
    return result;
}

}  // namespace pencils
