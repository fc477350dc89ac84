#include "pencils/enumerator.hpp"

#include "pencils/errors.hpp"

namespace pencils {

bool candidate_is_valid(const Cluster& cluster, int d, const Candidate& w) {
    int n = cluster.size();
    if (static_cast<int>(w.v.size()) != n || w.e < 1) return false;
    long e = w.e;
    long sum_v = 0, sum_v2 = 0, sum_vm = 0;
    for (int p = 0; p < n; ++p) {
        long vp = w.v[p];
        if (vp < 0 || vp > e) return false;  // (a)
        sum_v += vp;
        sum_v2 += vp * vp;
        sum_vm += vp * cluster.point(p).generic_mult;
    }
    for (int p = 0; p < n; ++p) {  // (b)
        long prox = 0;
        for (int q = 0; q < n; ++q)
            for (int t : cluster.point(q).proximate_to)
                if (t == p) prox += w.v[q];
        if (w.v[p] < prox) return false;
    }
    if (e * e > sum_v2) return false;  // (c)
    long kl = -3 * e;                  // K * L on the plane
    bool d1 = kl + sum_v >= 0 && e * e + kl + 2 >= sum_v2 - sum_v;
    bool d2 = e * e == sum_v2 && kl + sum_v == -2;
    bool d3 = kl + sum_v == -1 && e * e - sum_v2 == -1;
    if (!d1 && !d2 && !d3) return false;  // (d)
    return e * d == sum_vm;               // (e)
}

std::vector<Candidate> enumerate_candidates(const Cluster& cluster, int e, int d) {
    if (e < 1 || e > d) throw InternalError("enumerate_candidates: bad degree");
    int n = cluster.size();
    std::vector<Candidate> out;
    Candidate w;
    w.e = e;
    w.v.assign(n, 0);

    // suffix sums of generic multiplicities for the (e) bound
    std::vector<long> tail(n + 1, 0);
    for (int p = n; p-- > 0;)
        tail[p] = tail[p + 1] + cluster.point(p).generic_mult;

    // running consumption of each point's proximity budget (condition (b));
    // parents precede their proximate points, so budgets are known in time
    std::vector<long> used(n, 0);

    long target = static_cast<long>(e) * d;

    auto dfs = [&](auto&& self, int p, long sum_vm) -> void {
        if (sum_vm > target || sum_vm + static_cast<long>(e) * tail[p] < target)
            return;
        if (p == n) {
            if (candidate_is_valid(cluster, d, w)) out.push_back(w);
            return;
        }
        const auto& prox = cluster.point(p).proximate_to;
        for (int val = 0; val <= e; ++val) {
            bool fits = true;
            for (int t : prox)
                if (used[t] + val > w.v[t]) { fits = false; break; }
            if (!fits) break;  // larger values only overflow more
            w.v[p] = val;
            for (int t : prox) used[t] += val;
            self(self, p + 1, sum_vm + static_cast<long>(val) *
                                           cluster.point(p).generic_mult);
            for (int t : prox) used[t] -= val;
        }
        w.v[p] = 0;
    };
    dfs(dfs, 0, 0);
    return out;
}

std::vector<int> effective_classes(int e) {
    if (e < 1) throw InternalError("effective_classes: nonpositive degree");
    return {e};
}

}  // namespace pencils
