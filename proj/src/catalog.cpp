#include "mwrc/catalog.hpp"

#include "mwrc/alignment.hpp"
#include "mwrc/errors.hpp"

#include <algorithm>

namespace mwrc {

namespace {

long long pos(long long x) { return x > 0 ? x : 0; }

struct Shape2x2 {
    int m11, m21, m12, m22, n;
    long long sum() const { return static_cast<long long>(m11) + m21 + m12 + m22; }
};

Shape2x2 shape_2x2(const NetworkConfig& c) {
    if (c.num_clusters() != 2 || c.users_in(0) != 2 || c.users_in(1) != 2)
        throw ValidationError("classify_2x2: expected 2 clusters of 2 users");
    Shape2x2 s{c.antennas(0, 0), c.antennas(0, 1), c.antennas(1, 0), c.antennas(1, 1),
               c.relay_antennas};
    if (s.m11 < s.m21 || s.m12 < s.m22 || s.m21 < s.m22)
        throw ValidationError("classify_2x2: config must be catalog-canonical");
    return s;
}

struct Shape2x3 {
    int m[2][3];
    int n;
    long long cluster_sum(int l) const {
        return static_cast<long long>(m[l][0]) + m[l][1] + m[l][2];
    }
    long long cluster_weak(int l) const { return static_cast<long long>(m[l][1]) + m[l][2]; }
};

Shape2x3 shape_2x3(const NetworkConfig& c) {
    if (c.num_clusters() != 2 || c.users_in(0) != 3 || c.users_in(1) != 3)
        throw ValidationError("classify_2x3: expected 2 clusters of 3 users");
    if (!is_user_canonical(c))
        throw ValidationError("classify_2x3: config must be user-canonical");
    Shape2x3 s{};
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 3; ++k) s.m[l][k] = c.antennas(l, k);
    s.n = c.relay_antennas;
    return s;
}

// The three-way min shared by Eq. (9) and Eq. (10): whichever Lemma 1
// condition each cluster hits once the relay keeps sum/3 dimensions.
Rational thirds_min(const Shape2x2& s) {
    const long long sm = s.sum();
    return std::min({Rational(2 * sm, 3),
                     Rational(4 * (static_cast<long long>(s.m11) + s.m21 + s.m22) - 2 * s.m12, 3),
                     Rational(4 * (static_cast<long long>(s.m21) + s.m12 + s.m22) - 2 * s.m11, 3)});
}

Rational eq9_value(const Shape2x2& s) {
    return std::max({Rational(pos(static_cast<long long>(s.m12) + s.m22 - s.n) + s.n),
                     Rational(static_cast<long long>(s.m11) + s.m21), thirds_min(s)});
}

Rational eq10_value(const Shape2x2& s) {
    return std::max({Rational(s.n),
                     Rational(pos(static_cast<long long>(s.m11) + s.m21 - s.n) + s.n),
                     Rational(pos(static_cast<long long>(s.m12) + s.m22 - s.n) + s.n),
                     thirds_min(s)});
}

std::string classify_2x2_label(const Shape2x2& s, Rational& achievable) {
    const long long two_n = 2LL * s.n;
    if (s.n <= s.m21 + s.m22) {
        // Part (i): relay-limited, bound 2N.
        if (s.n <= s.m21) {
            achievable = two_n;
            return "P1.i.C1";
        }
        if (s.n <= s.m11 && s.n <= s.m12) {
            achievable = two_n;
            return "P1.i.C2.cond1";
        }
        if (s.m11 < s.n && s.n <= s.m12) {
            if (s.m11 + s.m21 + s.m22 >= two_n) {
                achievable = two_n;
                return "P1.i.C2.cond2.1";
            }
            achievable = static_cast<long long>(s.m11) + s.m21 + s.m22;
            return "P1.i.C2.cond2.2";
        }
        if (s.m12 < s.n && s.n <= s.m11) {
            if (s.m21 + s.m12 + s.m22 >= two_n) {
                achievable = two_n;
                return "P1.i.C2.cond3.1";
            }
            achievable = std::max(Rational(static_cast<long long>(s.m21) + s.m12 + s.m22),
                                  Rational(static_cast<long long>(s.n) + s.m21));
            return "P1.i.C2.cond3.2";
        }
        if (s.sum() >= 3LL * s.n) {
            achievable = two_n;
            return "P1.i.C2.cond4.1";
        }
        achievable = eq9_value(s);
        return "P1.i.C2.cond4.2";
    }

    // Part (ii): weak-user limited, bound 2(M_2^1 + M_2^2).
    const long long bound = 2LL * (s.m21 + s.m22);
    if (s.n >= 2 * (s.m21 + s.m22)) {
        achievable = bound;
        return "P1.ii.C1";
    }
    if (s.n <= s.m11 && s.n <= s.m12) {
        achievable = bound;
        return "P1.ii.C2.cond1";
    }
    if (s.m11 < s.n && s.n <= s.m12) {
        if (s.n >= 2 * s.m21 + s.m22) {
            achievable = bound;
            return "P1.ii.C2.cond2.1";
        }
        if (s.m11 >= s.m21 + s.m22) {
            achievable = bound;
            return "P1.ii.C2.cond2.2";
        }
        achievable = std::max(Rational(static_cast<long long>(s.n) + s.m22),
                              Rational(static_cast<long long>(s.m11) + s.m21 + s.m22));
        return "P1.ii.C2.cond2.3";
    }
    if (s.m12 < s.n && s.n <= s.m11) {
        if (s.n >= s.m21 + 2 * s.m22) {
            achievable = bound;
            return "P1.ii.C2.cond3.1";
        }
        if (s.m12 >= s.m21 + s.m22) {
            achievable = bound;
            return "P1.ii.C2.cond3.2";
        }
        achievable = std::max(Rational(static_cast<long long>(s.m21) + s.m12 + s.m22),
                              Rational(static_cast<long long>(s.n) + s.m21));
        return "P1.ii.C2.cond3.3";
    }
    if (s.m11 >= s.m21 + s.m22 && s.m12 >= s.m21 + s.m22) {
        achievable = bound;
        return "P1.ii.C2.cond4.1";
    }
    if (s.m12 >= 2 * s.m21 + s.m22) {
        achievable = bound;
        return "P1.ii.C2.cond4.2";
    }
    if (s.m11 >= s.m21 + 2 * s.m22) {
        achievable = bound;
        return "P1.ii.C2.cond4.3";
    }
    achievable = eq10_value(s);
    return "P1.ii.C2.cond4.4";
}

// ---------------------------------------------------------------------------
// Strategy construction
// ---------------------------------------------------------------------------

void add_pair(StrategyDescriptor& d, int cluster, int ui, int uj, int dims) {
    if (dims > 0) d.aligned_dims[{cluster, ui, uj}] += dims;
}

void add_mac(StrategyDescriptor& d, int cluster, int user, int streams) {
    if (streams > 0) d.mac_streams[{cluster, user}] += streams;
}

struct UserBudget {
    int send = 0;
    int recv = 0;
};

std::vector<std::vector<UserBudget>> budgets_after_ssa(const NetworkConfig& cfg,
                                                       const StrategyDescriptor& d) {
    std::vector<std::vector<UserBudget>> b(cfg.num_clusters());
    for (int l = 0; l < cfg.num_clusters(); ++l)
        for (int k = 0; k < cfg.users_in(l); ++k) {
            const int cap = cfg.antennas(l, k) * d.extension_factor;
            b[l].push_back({cap, cap});
        }
    for (const auto& [key, dims] : d.aligned_dims)
        for (int user : {key.user_i, key.user_j}) {
            b[key.cluster][user].send -= dims;
            b[key.cluster][user].recv -= dims;
        }
    return b;
}

// Balanced two-user MAC fill; consumes up to `want` streams.
void mac_fill_pair_cluster(StrategyDescriptor& d, int cluster,
                           std::vector<std::vector<UserBudget>>& b, int& want) {
    auto& u0 = b[cluster][0];
    auto& u1 = b[cluster][1];
    const int xmax = std::min(u0.send, u1.recv);
    const int ymax = std::min(u1.send, u0.recv);
    const int t = std::min(want, xmax + ymax);
    if (t <= 0) return;
    int x = std::min(xmax, (t + 1) / 2);
    int y = t - x;
    if (y > ymax) {
        y = ymax;
        x = t - y;
    }
    add_mac(d, cluster, 0, x);
    add_mac(d, cluster, 1, y);
    u0.send -= x;
    u1.recv -= x;
    u1.send -= y;
    u0.recv -= y;
    want -= t;
}

// Fill `want` MAC streams into the 2x2 network's clusters in the given
// order, spilling into the later one when the first saturates.
void mac_fill_2x2(StrategyDescriptor& d, const NetworkConfig& cfg, int want,
                  std::initializer_list<int> cluster_order) {
    auto budgets = budgets_after_ssa(cfg, d);
    for (int cluster : cluster_order) {
        if (want == 0) break;
        mac_fill_pair_cluster(d, cluster, budgets, want);
    }
    if (want > 0) throw PlanError("strategy: MAC streams exceed cluster capacity");
}

// Subset-antenna SSA scheme: the relay keeps `total`/2 dimensions via a
// two-symbol extension when `total` is odd; the clusters contribute a1/a2
// dimensions at that relay size (a1 + a2 == total/2, in un-extended units
// times two).
StrategyDescriptor half_sum_scheme(int ext_a1, int ext_a2, int total) {
    StrategyDescriptor d;
    d.extension_factor = (total % 2 != 0) ? 2 : 1;
    d.relay_antennas_used = (total + 1) / 2;
    add_pair(d, 0, 0, 1, ext_a1);
    add_pair(d, 1, 0, 1, ext_a2);
    return d;
}

// Cluster-1-difference flavour: cluster 1 shares M_1^1 + M_2^1 - total/2,
// cluster 2 saturates at M_2^2.
StrategyDescriptor half_sum_cluster1_diff(const Shape2x2& s) {
    const int total = s.m11 + s.m21 + s.m22;
    const int ext = (total % 2 != 0) ? 2 : 1;
    const int dims = ext * total / 2;
    return half_sum_scheme(ext * (s.m11 + s.m21) - dims, ext * s.m22, total);
}

// Cluster-2-difference flavour: cluster 1 saturates at M_2^1, cluster 2
// shares M_1^2 + M_2^2 - total/2.
StrategyDescriptor half_sum_cluster2_diff(const Shape2x2& s) {
    const int total = s.m21 + s.m12 + s.m22;
    const int ext = (total % 2 != 0) ? 2 : 1;
    const int dims = ext * total / 2;
    return half_sum_scheme(ext * s.m21, dims - ext * s.m21, total);
}

// The relay keeps sum/3 dimensions (threefold extension when needed); both
// clusters align whatever Lemma 1 grants there, idle dimensions allowed.
StrategyDescriptor thirds_scheme(const Shape2x2& s) {
    StrategyDescriptor d;
    const long long sm = s.sum();
    d.extension_factor = (sm % 3 != 0) ? 3 : 1;
    const int dims = static_cast<int>(d.extension_factor * sm / 3);
    d.relay_antennas_used = static_cast<int>((sm + 2) / 3);
    const int e = d.extension_factor;
    add_pair(d, 0, 0, 1, shared_dim(dims, e * s.m11, e * s.m21));
    add_pair(d, 1, 0, 1, shared_dim(dims, e * s.m12, e * s.m22));
    return d;
}

// SSA split across both clusters at the full relay: cluster 1 takes as much
// of the target as its share admits, cluster 2 the rest.
StrategyDescriptor ssa_split(int share1, int share2, int target) {
    StrategyDescriptor d;
    d.relay_antennas_used = target;
    const int a1 = std::min(share1, target);
    const int a2 = target - a1;
    if (a2 > share2) throw PlanError("strategy: SSA split exceeds cluster-2 share");
    add_pair(d, 0, 0, 1, a1);
    add_pair(d, 1, 0, 1, a2);
    return d;
}

StrategyDescriptor strategy_2x2(const std::string& label, const NetworkConfig& cfg) {
    const Shape2x2 s = shape_2x2(cfg);
    const int n = s.n;

    if (label == "P1.i.C1") {
        StrategyDescriptor d;
        d.relay_antennas_used = n;
        add_pair(d, 0, 0, 1, n);
        return d;
    }
    if (label == "P1.i.C2.cond1") return ssa_split(s.m21, s.m22, n);
    if (label == "P1.i.C2.cond2.1") return ssa_split(s.m11 + s.m21 - n, s.m22, n);
    if (label == "P1.i.C2.cond2.2") return half_sum_cluster1_diff(s);
    if (label == "P1.i.C2.cond3.1") return ssa_split(s.m21, s.m12 + s.m22 - n, n);
    if (label == "P1.i.C2.cond3.2") {
        const long long sum3 = static_cast<long long>(s.m21) + s.m12 + s.m22;
        if (sum3 >= static_cast<long long>(n) + s.m21) return half_sum_cluster2_diff(s);
        StrategyDescriptor d;  // cluster 1 SSA, cluster 2 multiple-access
        d.relay_antennas_used = n;
        add_pair(d, 0, 0, 1, s.m21);
        mac_fill_2x2(d, cfg, n - s.m21, {1, 0});
        return d;
    }
    if (label == "P1.i.C2.cond4.1")
        return ssa_split(s.m11 + s.m21 - n, s.m12 + s.m22 - n, n);
    if (label == "P1.i.C2.cond4.2") {
        const Rational value = eq9_value(s);
        if (value == Rational(pos(static_cast<long long>(s.m12) + s.m22 - n) + n)) {
            StrategyDescriptor d;  // cluster 2 SSA, cluster 1 multiple-access
            d.relay_antennas_used = n;
            const int s2 = static_cast<int>(pos(static_cast<long long>(s.m12) + s.m22 - n));
            add_pair(d, 1, 0, 1, s2);
            mac_fill_2x2(d, cfg, n - s2, {0, 1});
            return d;
        }
        if (value == Rational(static_cast<long long>(s.m11) + s.m21)) {
            StrategyDescriptor d;  // cluster 1 SSA, cluster 2 multiple-access
            d.relay_antennas_used = n;
            const int s1 = s.m11 + s.m21 - n;
            add_pair(d, 0, 0, 1, s1);
            mac_fill_2x2(d, cfg, n - s1, {1, 0});
            return d;
        }
        return thirds_scheme(s);
    }

    if (label == "P1.ii.C1") {
        StrategyDescriptor d;
        d.relay_antennas_used = 2 * (s.m21 + s.m22);
        add_mac(d, 0, 0, s.m21);
        add_mac(d, 0, 1, s.m21);
        add_mac(d, 1, 0, s.m22);
        add_mac(d, 1, 1, s.m22);
        return d;
    }
    if (label == "P1.ii.C2.cond1" || label == "P1.ii.C2.cond2.2" ||
        label == "P1.ii.C2.cond3.2" || label == "P1.ii.C2.cond4.1") {
        StrategyDescriptor d;  // both clusters saturate at the M_2^l subset
        d.relay_antennas_used = s.m21 + s.m22;
        add_pair(d, 0, 0, 1, s.m21);
        add_pair(d, 1, 0, 1, s.m22);
        return d;
    }
    if (label == "P1.ii.C2.cond2.1" || label == "P1.ii.C2.cond4.2") {
        StrategyDescriptor d;  // cluster 2 SSA, cluster 1 multiple-access
        d.relay_antennas_used = 2 * s.m21 + s.m22;
        add_pair(d, 1, 0, 1, s.m22);
        add_mac(d, 0, 0, s.m21);
        add_mac(d, 0, 1, s.m21);
        return d;
    }
    if (label == "P1.ii.C2.cond3.1" || label == "P1.ii.C2.cond4.3") {
        StrategyDescriptor d;  // cluster 1 SSA, cluster 2 multiple-access
        d.relay_antennas_used = s.m21 + 2 * s.m22;
        add_pair(d, 0, 0, 1, s.m21);
        add_mac(d, 1, 0, s.m22);
        add_mac(d, 1, 1, s.m22);
        return d;
    }
    if (label == "P1.ii.C2.cond2.3") {
        if (Rational(static_cast<long long>(n) + s.m22) >=
            Rational(static_cast<long long>(s.m11) + s.m21 + s.m22)) {
            StrategyDescriptor d;
            d.relay_antennas_used = n;
            add_pair(d, 1, 0, 1, s.m22);
            mac_fill_2x2(d, cfg, n - s.m22, {0, 1});
            return d;
        }
        return half_sum_cluster1_diff(s);
    }
    if (label == "P1.ii.C2.cond3.3") {
        const long long sum3 = static_cast<long long>(s.m21) + s.m12 + s.m22;
        if (sum3 >= static_cast<long long>(n) + s.m21) return half_sum_cluster2_diff(s);
        StrategyDescriptor d;
        d.relay_antennas_used = n;
        add_pair(d, 0, 0, 1, s.m21);
        mac_fill_2x2(d, cfg, n - s.m21, {1, 0});
        return d;
    }
    if (label == "P1.ii.C2.cond4.4") {
        const Rational value = eq10_value(s);
        if (value == Rational(n)) {
            StrategyDescriptor d;
            d.relay_antennas_used = n;
            mac_fill_2x2(d, cfg, n, {0, 1});
            return d;
        }
        const long long s1 = pos(static_cast<long long>(s.m11) + s.m21 - n);
        if (value == Rational(s1 + n)) {
            StrategyDescriptor d;
            d.relay_antennas_used = n;
            add_pair(d, 0, 0, 1, static_cast<int>(s1));
            mac_fill_2x2(d, cfg, n - static_cast<int>(s1), {1, 0});
            return d;
        }
        const long long s2 = pos(static_cast<long long>(s.m12) + s.m22 - n);
        if (value == Rational(s2 + n)) {
            StrategyDescriptor d;
            d.relay_antennas_used = n;
            add_pair(d, 1, 0, 1, static_cast<int>(s2));
            mac_fill_2x2(d, cfg, n - static_cast<int>(s2), {0, 1});
            return d;
        }
        return thirds_scheme(s);
    }
    throw PlanError("strategy: unknown 2x2 regime label " + label);
}

// ---------------------------------------------------------------------------
// 2x3 catalog
// ---------------------------------------------------------------------------

// Exact best aligned-dimension allocation on one 3-user cluster: edge caps
// from Lemma 1, vertex caps from antenna counts.
struct TriangleAlloc {
    int a01 = 0, a02 = 0, a12 = 0;
    int total() const { return a01 + a02 + a12; }
};

TriangleAlloc best_triangle(int s01, int s02, int s12, int c0, int c1, int c2, int budget) {
    TriangleAlloc best;
    int best_total = -1;
    for (int a01 = std::min({s01, c0, c1, budget}); a01 >= 0; --a01) {
        for (int a02 = std::min({s02, c0 - a01, c2, budget - a01}); a02 >= 0; --a02) {
            const int a12 = std::min({s12, c1 - a01, c2 - a02, budget - a01 - a02});
            if (a01 + a02 + a12 > best_total) {
                best = {a01, a02, a12};
                best_total = best.total();
            }
            if (best_total == budget) return best;
        }
        if (best_total == budget) return best;
    }
    return best;
}

long long pairwise_share_sum_2x3(const Shape2x3& s) {
    long long total = 0;
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) total += shared_dim(s.n, s.m[l][i], s.m[l][j]);
    return total;
}

StrategyDescriptor strategy_2x3(const std::string& label, const NetworkConfig& cfg) {
    const Shape2x3 s = shape_2x3(cfg);
    const int n = s.n;
    const long long weak1 = s.cluster_weak(0), weak2 = s.cluster_weak(1);
    const long long sum1 = s.cluster_sum(0), sum2 = s.cluster_sum(1);

    auto weak_mac = [&](StrategyDescriptor& d, int l) {
        add_mac(d, l, 0, s.m[l][1] + s.m[l][2]);
        add_mac(d, l, 1, s.m[l][1]);
        add_mac(d, l, 2, s.m[l][2]);
    };
    auto full_mac = [&](StrategyDescriptor& d, int l) {
        for (int k = 0; k < 3; ++k) add_mac(d, l, k, s.m[l][k]);
    };
    auto weak_ssa = [&](StrategyDescriptor& d, int l) {
        add_pair(d, l, 0, 1, s.m[l][1]);
        add_pair(d, l, 0, 2, s.m[l][2]);
    };

    if (label == "T3.bind-2N.twrc") {
        StrategyDescriptor d;
        d.relay_antennas_used = n;
        add_pair(d, s.m[0][1] >= n ? 0 : 1, 0, 1, n);
        return d;
    }
    if (label.starts_with("T3.bind-2N.cond")) {
        StrategyDescriptor d;
        d.relay_antennas_used = n;
        int budget = n;
        for (int l = 0; l < 2 && budget > 0; ++l) {
            const TriangleAlloc a = best_triangle(
                shared_dim(n, s.m[l][0], s.m[l][1]), shared_dim(n, s.m[l][0], s.m[l][2]),
                shared_dim(n, s.m[l][1], s.m[l][2]), s.m[l][0], s.m[l][1], s.m[l][2], budget);
            add_pair(d, l, 0, 1, a.a01);
            add_pair(d, l, 0, 2, a.a02);
            add_pair(d, l, 1, 2, a.a12);
            budget -= a.total();
        }
        if (budget > 0) throw PlanError("strategy: pairwise shares cannot cover the relay");
        return d;
    }
    if (label == "T3.bind-sum.mac") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(sum1 + sum2);
        full_mac(d, 0);
        full_mac(d, 1);
        return d;
    }
    if (label == "T3.bind-weak.mac") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(2 * (weak1 + weak2));
        weak_mac(d, 0);
        weak_mac(d, 1);
        return d;
    }
    if (label == "T3.bind-weak.ssa") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(weak1 + weak2);
        weak_ssa(d, 0);
        weak_ssa(d, 1);
        return d;
    }
    if (label == "T3.bind-weak.hybrid2") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(2 * weak1 + weak2);
        weak_ssa(d, 1);
        weak_mac(d, 0);
        return d;
    }
    if (label == "T3.bind-weak.hybrid1") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(weak1 + 2 * weak2);
        weak_ssa(d, 0);
        weak_mac(d, 1);
        return d;
    }
    if (label == "T3.bind-mix1.mac") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(sum1 + 2 * weak2);
        full_mac(d, 0);
        weak_mac(d, 1);
        return d;
    }
    if (label == "T3.bind-mix1.subset") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(sum1 + weak2);
        full_mac(d, 0);
        weak_ssa(d, 1);
        return d;
    }
    if (label == "T3.bind-mix2.mac") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(2 * weak1 + sum2);
        weak_mac(d, 0);
        full_mac(d, 1);
        return d;
    }
    if (label == "T3.bind-mix2.subset") {
        StrategyDescriptor d;
        d.relay_antennas_used = static_cast<int>(weak1 + sum2);
        weak_ssa(d, 0);
        full_mac(d, 1);
        return d;
    }
    throw PlanError("strategy: unknown 2x3 regime label " + label);
}

// ---------------------------------------------------------------------------
// Symmetric L x K catalog
// ---------------------------------------------------------------------------

NetworkConfig symmetric_config(int clusters, int users, int antennas, int relay) {
    NetworkConfig cfg;
    cfg.clusters.assign(clusters, std::vector<int>(users, antennas));
    cfg.relay_antennas = relay;
    return cfg;
}

StrategyDescriptor strategy_symmetric(const std::string& label, const NetworkConfig& cfg) {
    const int L = cfg.num_clusters();
    const int K = cfg.users_in(0);
    const int M = cfg.antennas(0, 0);
    const int N = cfg.relay_antennas;

    if (label == "T4.mac") {
        StrategyDescriptor d;
        d.relay_antennas_used = K * L * M;
        for (int l = 0; l < L; ++l)
            for (int k = 0; k < K; ++k) add_mac(d, l, k, M);
        return d;
    }
    if (label == "T4.ssa") {
        StrategyDescriptor d;
        d.relay_antennas_used = N;
        const int share = shared_dim(N, M, M);
        std::vector<PairKey> pairs;
        for (int l = 0; l < L; ++l)
            for (int i = 0; i < K; ++i)
                for (int j = i + 1; j < K; ++j) pairs.push_back({l, i, j});
        const int pair_count = static_cast<int>(pairs.size());

        auto user_loads_ok = [&](const std::vector<int>& alloc) {
            std::vector<std::vector<int>> load(L, std::vector<int>(K, 0));
            for (int p = 0; p < pair_count; ++p) {
                load[pairs[p].cluster][pairs[p].user_i] += alloc[p];
                load[pairs[p].cluster][pairs[p].user_j] += alloc[p];
            }
            for (const auto& cluster : load)
                for (int streams : cluster)
                    if (streams > M) return false;
            return true;
        };

        // Preferred allocation: every pair carries ceil(2N / (LK(K-1)))
        // dimensions except the last, which takes the remainder.
        const int ceil_n = (2 * N + L * K * (K - 1) - 1) / (L * K * (K - 1));
        std::vector<int> alloc(pair_count, ceil_n);
        alloc[pair_count - 1] = N - (pair_count - 1) * ceil_n;
        const bool remainder_ok = alloc[pair_count - 1] >= 0 && ceil_n <= share &&
                                  user_loads_ok(alloc);
        if (!remainder_ok) {
            // Fall back to the balanced round-robin fill, which respects the
            // per-user antenna budgets in the corner cases where the
            // remainder split does not.
            alloc.assign(pair_count, 0);
            std::vector<std::vector<int>> rem(L, std::vector<int>(K, M));
            int budget = N;
            bool progress = true;
            while (budget > 0 && progress) {
                progress = false;
                for (int p = 0; p < pair_count; ++p) {
                    if (budget == 0) break;
                    if (alloc[p] < share && rem[pairs[p].cluster][pairs[p].user_i] > 0 &&
                        rem[pairs[p].cluster][pairs[p].user_j] > 0) {
                        ++alloc[p];
                        --rem[pairs[p].cluster][pairs[p].user_i];
                        --rem[pairs[p].cluster][pairs[p].user_j];
                        --budget;
                        progress = true;
                    }
                }
            }
            if (budget > 0)
                throw PlanError("strategy: SSA pair allocation cannot cover the relay");
        }
        for (int p = 0; p < pair_count; ++p)
            add_pair(d, pairs[p].cluster, pairs[p].user_i, pairs[p].user_j, alloc[p]);
        return d;
    }
    throw PlanError("strategy: unknown symmetric regime label " + label);
}

}  // namespace

int StrategyDescriptor::streams_sent_by(int cluster, int user) const {
    int total = 0;
    for (const auto& [key, dims] : aligned_dims)
        if (key.cluster == cluster && (key.user_i == user || key.user_j == user)) total += dims;
    if (auto it = mac_streams.find({cluster, user}); it != mac_streams.end()) total += it->second;
    return total;
}

void validate_descriptor(const NetworkConfig& config, const StrategyDescriptor& desc) {
    if (desc.extension_factor < 1) throw PlanError("descriptor: extension_factor must be >= 1");
    if (desc.relay_antennas_used < 0 || desc.relay_antennas_used > config.relay_antennas)
        throw PlanError("descriptor: relay_antennas_used exceeds relay antennas");

    const int dims = desc.total_relay_dims();
    if (dims > desc.relay_antennas_used * desc.extension_factor)
        throw PlanError("descriptor: total relay dimension use exceeds N' * extension_factor");

    for (const auto& [key, count] : desc.aligned_dims) {
        if (key.cluster < 0 || key.cluster >= config.num_clusters())
            throw PlanError("descriptor: aligned pair cluster out of range");
        const int users = config.users_in(key.cluster);
        if (key.user_i < 0 || key.user_j >= users || key.user_i >= key.user_j)
            throw PlanError("descriptor: aligned pair users out of range");
        if (count < 0) throw PlanError("descriptor: negative aligned dimension count");
        // The relay only listens to the dimensions the scheme uses, so the
        // shared-dimension cap is evaluated there.
        const int limit =
            shared_dim(dims, desc.extension_factor * config.antennas(key.cluster, key.user_i),
                       desc.extension_factor * config.antennas(key.cluster, key.user_j));
        if (count > limit)
            throw PlanError("descriptor: aligned pair requests " + std::to_string(count) +
                            " dims, shared dimension limit is " + std::to_string(limit));
    }
    for (const auto& [key, count] : desc.mac_streams) {
        if (key.cluster < 0 || key.cluster >= config.num_clusters() || key.user < 0 ||
            key.user >= config.users_in(key.cluster))
            throw PlanError("descriptor: MAC user out of range");
        if (count < 0) throw PlanError("descriptor: negative MAC stream count");
    }
    for (int l = 0; l < config.num_clusters(); ++l)
        for (int k = 0; k < config.users_in(l); ++k)
            if (desc.streams_sent_by(l, k) > config.antennas(l, k) * desc.extension_factor)
                throw PlanError("descriptor: user (" + std::to_string(l) + "," +
                                std::to_string(k) + ") streams exceed M * extension_factor");
}

std::string to_string(Optimality o) {
    switch (o) {
        case Optimality::optimal: return "optimal";
        case Optimality::suboptimal_known_gap: return "suboptimal-known-gap";
        case Optimality::unknown: return "unknown";
    }
    return "unknown";
}

DoFReport classify_2x2(const NetworkConfig& config) {
    DoFReport report;
    report.breakdown = dof_upper_bound(config);
    report.upper_bound = report.breakdown.bound;

    Rational achievable{0};
    report.regime = classify_2x2_label(shape_2x2(config), achievable);
    report.achievable = achievable;
    report.optimal =
        (achievable == report.upper_bound) ? Optimality::optimal : Optimality::unknown;
    report.strategy = regime_strategy(report.regime, config);
    return report;
}

std::array<long long, 5> upper_bound_terms_2x3(const NetworkConfig& config) {
    const Shape2x3 s = shape_2x3(config);
    const long long a1 = s.cluster_sum(0), a2 = s.cluster_sum(1);
    const long long b1 = 2 * s.cluster_weak(0), b2 = 2 * s.cluster_weak(1);
    return {2LL * s.n, a1 + a2, b1 + b2, a1 + b2, b1 + a2};
}

DoFReport classify_2x3(const NetworkConfig& config) {
    const Shape2x3 s = shape_2x3(config);
    const int n = s.n;
    const long long weak1 = s.cluster_weak(0), weak2 = s.cluster_weak(1);
    const long long sum1 = s.cluster_sum(0), sum2 = s.cluster_sum(1);

    DoFReport report;
    report.breakdown = dof_upper_bound(config);
    const auto terms = upper_bound_terms_2x3(config);
    const long long bound = *std::min_element(terms.begin(), terms.end());
    report.upper_bound = bound;

    static constexpr std::array<const char*, 5> kTermNames = {"2N", "sum", "weak", "mix1", "mix2"};

    auto certify = [&](const std::string& label) {
        report.regime = label;
        report.achievable = bound;
        report.optimal = Optimality::optimal;
        report.strategy = regime_strategy(label, config);
    };

    for (int idx = 0; idx < 5; ++idx) {
        if (terms[idx] != bound) continue;
        switch (idx) {
            case 0: {
                if (n <= std::max(s.m[0][1], s.m[1][1])) {
                    certify("T3.bind-2N.twrc");
                    return report;
                }
                const bool big1 = s.m[0][0] >= n, big2 = s.m[1][0] >= n;
                const std::string label = big1 && big2   ? "T3.bind-2N.cond1"
                                          : big1         ? "T3.bind-2N.cond2"
                                          : big2         ? "T3.bind-2N.cond3"
                                                         : "T3.bind-2N.cond4";
                if (big1 && big2) {  // weak sums >= N whenever 2N binds
                    certify(label);
                    return report;
                }
                if (pairwise_share_sum_2x3(s) >= n) {
                    certify(label);
                    return report;
                }
                break;
            }
            case 1:
                if (n >= sum1 + sum2) {
                    certify("T3.bind-sum.mac");
                    return report;
                }
                break;
            case 2: {
                if (n >= 2 * (weak1 + weak2)) {
                    certify("T3.bind-weak.mac");
                    return report;
                }
                if (s.m[0][0] >= weak1 + weak2 && s.m[1][0] >= weak1 + weak2) {
                    certify("T3.bind-weak.ssa");
                    return report;
                }
                if (n >= 2 * weak1 + weak2 && s.m[1][0] >= 2 * weak1 + weak2) {
                    certify("T3.bind-weak.hybrid2");
                    return report;
                }
                if (n >= weak1 + 2 * weak2 && s.m[0][0] >= weak1 + 2 * weak2) {
                    certify("T3.bind-weak.hybrid1");
                    return report;
                }
                break;
            }
            case 3:
                if (n >= sum1 + 2 * weak2) {
                    certify("T3.bind-mix1.mac");
                    return report;
                }
                if (n >= sum1 + weak2 && s.m[1][0] >= sum1 + weak2) {
                    certify("T3.bind-mix1.subset");
                    return report;
                }
                break;
            case 4:
                if (n >= 2 * weak1 + sum2) {
                    certify("T3.bind-mix2.mac");
                    return report;
                }
                if (n >= weak1 + sum2 && s.m[0][0] >= weak1 + sum2) {
                    certify("T3.bind-mix2.subset");
                    return report;
                }
                break;
        }
    }

    for (int idx = 0; idx < 5; ++idx) {
        if (terms[idx] == bound) {
            report.regime = std::string("T3.bind-") + kTermNames[idx] + ".unknown";
            break;
        }
    }
    report.optimal = Optimality::unknown;
    return report;
}

DoFReport classify_symmetric(int clusters, int users, int antennas, int relay_antennas) {
    if (clusters < 1 || users < 2 || antennas < 1 || relay_antennas < 1)
        throw ValidationError("classify_symmetric: need L >= 1, K >= 2, M >= 1, N >= 1");

    const NetworkConfig cfg = symmetric_config(clusters, users, antennas, relay_antennas);
    const long long klm = static_cast<long long>(users) * clusters * antennas;
    const long long pairs = static_cast<long long>(clusters) * users * (users - 1) / 2;

    DoFReport report;
    report.breakdown = dof_upper_bound(cfg);
    report.upper_bound = std::min(klm, 2LL * relay_antennas);

    if (relay_antennas >= klm) {
        report.regime = "T4.mac";
        report.achievable = klm;
        report.optimal = Optimality::optimal;
        report.strategy = regime_strategy(report.regime, cfg);
    } else if (pairs * (2LL * antennas - relay_antennas) >= relay_antennas) {
        report.regime = "T4.ssa";
        report.achievable = 2LL * relay_antennas;
        report.optimal = Optimality::optimal;
        report.strategy = regime_strategy(report.regime, cfg);
    } else {
        report.regime = "T4.unknown";
        report.optimal = Optimality::unknown;
    }
    return report;
}

DoFReport classify(const NetworkConfig& config) {
    validate(config);
    if (!is_user_canonical(config)) throw ValidationError("classify: config must be canonical");

    const int L = config.num_clusters();
    if (L == 2 && config.users_in(0) == 2 && config.users_in(1) == 2) return classify_2x2(config);
    if (L == 2 && config.users_in(0) == 3 && config.users_in(1) == 3) return classify_2x3(config);
    if (config.is_symmetric())
        return classify_symmetric(L, config.users_in(0), config.antennas(0, 0),
                                  config.relay_antennas);

    DoFReport report;
    report.breakdown = dof_upper_bound(config);
    report.upper_bound = report.breakdown.bound;
    report.regime = "uncataloged";
    report.optimal = Optimality::unknown;
    return report;
}

std::optional<StrategyDescriptor> regime_strategy(const std::string& label,
                                                  const NetworkConfig& config) {
    if (label.ends_with(".unknown") || label == "uncataloged") return std::nullopt;

    StrategyDescriptor desc;
    if (label.starts_with("P1.")) desc = strategy_2x2(label, config);
    else if (label.starts_with("T3.")) desc = strategy_2x3(label, config);
    else if (label.starts_with("T4.")) desc = strategy_symmetric(label, config);
    else throw PlanError("regime_strategy: unknown label " + label);

    validate_descriptor(config, desc);
    return desc;
}

std::optional<long long> theorem2_optimal_2x2(const NetworkConfig& config) {
    const Shape2x2 s = shape_2x2(config);
    const long long two_n = 2LL * s.n;
    const long long weak_pair = static_cast<long long>(s.m21) + s.m22;

    const bool cond1 = s.n <= s.m11 && s.n <= s.m12;
    const bool cond2 = s.m11 < s.n && s.n <= s.m12;
    const bool cond3 = s.m12 < s.n && s.n <= s.m11;
    const bool cond4 = s.n > s.m11 && s.n > s.m12;

    if (s.n <= s.m21) return two_n;
    if (s.n <= weak_pair) {
        if (cond1) return two_n;
        if (cond2 && s.m11 + s.m21 + s.m22 >= two_n) return two_n;
        if (cond3 && s.m21 + s.m12 + s.m22 >= two_n) return two_n;
        if (cond4 && s.sum() >= 3LL * s.n) return two_n;
        return std::nullopt;
    }
    if (s.n >= 2 * weak_pair) return 2 * weak_pair;
    if (cond1) return 2 * weak_pair;
    if (cond2 && (s.n >= 2 * s.m21 + s.m22 || s.m11 >= weak_pair)) return 2 * weak_pair;
    if (cond3 && (s.n >= s.m21 + 2 * s.m22 || s.m12 >= weak_pair)) return 2 * weak_pair;
    if (cond4 && ((s.m11 >= weak_pair && s.m12 >= weak_pair) || s.m12 >= 2 * s.m21 + s.m22 ||
                  s.m11 >= s.m21 + 2 * s.m22))
        return 2 * weak_pair;
    return std::nullopt;
}

std::optional<long long> corollary1_symmetric(int m1, int m2, int n) {
    if (m1 < m2 || m2 < 1 || n < 1)
        throw ValidationError("corollary1_symmetric: need M1 >= M2 >= 1, N >= 1");
    if (n <= 2 * m2) {
        if (n <= m1 || 3LL * n <= 2LL * (m1 + m2)) return 2LL * n;
        return std::nullopt;
    }
    if (n >= 4 * m2 || n <= m1 || m1 >= 2 * m2) return 4LL * m2;
    return std::nullopt;
}

}  // namespace mwrc
