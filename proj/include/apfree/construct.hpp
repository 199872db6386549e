#pragma once

// Explicit patch-avoiding sets, built and certified at construction time:
//  - self-similar attractors from integer translation sets (contraction
//    delta/(N-1+delta), translations a in A, A patch-free),
//  - discrete integer towers B_n under x -> (eta+1)(N-1)x + a,
//  - block concatenations of patch-free grid sets along the first axis.

#include "core.hpp"
#include "detect.hpp"

#include <numeric>

namespace apfree {

struct IfsSystem {
    int d = 1;
    long long N = 2;
    Rat delta;
    GridSet A;
    int m = 1;  // patch directions the avoidance certificate refers to
    int k = 3;
    Rat epsilon;
    Rat ratio;        // contraction factor delta/(N-1+delta)
    bool guaranteed;  // all hypotheses of the avoidance guarantee hold
};

// Validates: delta in (0,1], N >= 2, A nonempty and free of size-k axis
// patches along the first m directions. `guaranteed` additionally needs
// 0 < eps < 1/8, delta <= 1/24, N = ceil(1/(8 eps)), and k >= 3 when d = 1.
inline IfsSystem build_ifs(GridSet A, Rat delta, int k, Rat epsilon, int m = 0) {
    if (m == 0) m = A.dim();
    const int d = A.dim();
    const long long N = A.side();
    if (delta <= 0 || delta > 1) throw ParameterError("build_ifs: delta must lie in (0, 1]");
    if (N < 2) throw ParameterError("build_ifs: side must be >= 2");
    if (k < 2) throw ParameterError("build_ifs: k must be >= 2");
    if (epsilon < 0 || epsilon >= Rat(1, 2))
        throw ParameterError("build_ifs: epsilon must lie in [0, 1/2)");
    if (m < 1 || m > d) throw ParameterError("build_ifs: need 1 <= m <= dim");
    if (A.size() == 0) throw ParameterError("build_ifs: empty translation set");
    if (grid_contains_patch(A, k, m).contains)
        throw ConstructionError("build_ifs: translation set contains a size-k patch");
    IfsSystem sys{d, N, delta, std::move(A), m, k, epsilon, Rat(0), false};
    sys.ratio = sys.delta / (Rat(N - 1) + sys.delta);
    bool eps_ok = epsilon > 0 && epsilon < Rat(1, 8);
    bool n_matches = eps_ok && Int(N) == rat_ceil(1 / (8 * epsilon));
    sys.guaranteed = eps_ok && sys.delta <= Rat(1, 24) && n_matches && (d >= 2 || k >= 3);
    return sys;
}

// Similarity dimension log|A| / log((N-1)/delta + 1); exact-input logs taken
// in doubles. Equals the attractor's dimension under the open set condition.
inline double ifs_dimension(const IfsSystem& sys) {
    if (sys.A.size() == 0) throw ParameterError("ifs_dimension: empty translation set");
    double denom_arg = to_double((Rat(sys.N - 1) / sys.delta) + 1);
    return std::log(static_cast<double>(sys.A.size())) / std::log(denom_arg);
}

// Open set condition with witness cube (0, N-1+delta)^d, decided exactly:
// each map sends the cube into (a, a+delta)^d, so containment is automatic
// and only pairwise disjointness needs checking.
inline bool verify_open_set_condition(const IfsSystem& sys) {
    const auto& pts = sys.A.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            bool disjoint = false;
            for (int c = 0; c < sys.d && !disjoint; ++c) {
                Rat ai(pts[i][c]), aj(pts[j][c]);
                if (ai + sys.delta <= aj || aj + sys.delta <= ai) disjoint = true;
            }
            if (!disjoint) return false;
        }
    return true;
}

// Depth-n iteration of the maps applied to the origin: all points
// sum_{i=1..depth} ratio^(i-1) * a_i. Exact rational coordinates.
inline PointSet prefractal(const IfsSystem& sys, int depth, std::uint64_t max_points = 2'000'000) {
    if (depth < 0) throw ParameterError("prefractal: depth must be >= 0");
    double total = std::pow(static_cast<double>(sys.A.size()), depth);
    if (total > static_cast<double>(max_points))
        throw BudgetError("prefractal: would generate " + std::to_string(total) +
                          " points, budget " + std::to_string(max_points));
    std::vector<RatVec> level{RatVec(sys.d, Rat(0))};
    for (int n = 0; n < depth; ++n) {
        std::vector<RatVec> next;
        next.reserve(level.size() * sys.A.size());
        for (const auto& a : sys.A.points())
            for (const auto& p : level) {
                RatVec q(sys.d);
                for (int c = 0; c < sys.d; ++c) q[c] = sys.ratio * p[c] + a[c];
                next.push_back(std::move(q));
            }
        level = std::move(next);
    }
    return PointSet::from_points(sys.d, std::move(level));
}

struct DiscreteSystem {
    long long N = 2;
    long long eta = 6;
    std::vector<long long> A;  // digits, sorted, 0 included
    int k = 3;
    Int xi;                          // expansion factor (eta+1)(N-1)
    std::vector<std::vector<Int>> levels;  // B_0 .. B_depth, each sorted
};

// Levels of the expanding system x -> xi*x + a. Validates 0 in A, digits in
// {0..N-1}, eta >= 6, no k-term AP in A; verifies the digit-shift identity
// B_n = union_a (B_{n-1} + xi^(n-1) a) and the diameter bound
// max(B_n) <= (6/5) xi^(n-1) (N-1) on every built level.
inline DiscreteSystem build_discrete(std::vector<long long> A, long long N, long long eta, int k,
                                     int depth, std::uint64_t max_points = 2'000'000) {
    if (N < 2) throw ParameterError("build_discrete: N must be >= 2");
    if (eta < 6) throw ParameterError("build_discrete: eta must be >= 6");
    if (k < 2) throw ParameterError("build_discrete: k must be >= 2");
    if (depth < 0) throw ParameterError("build_discrete: depth must be >= 0");
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    if (A.empty() || A.front() != 0)
        throw ParameterError("build_discrete: digit set must contain 0");
    for (long long a : A)
        if (a < 0 || a >= N) throw ParameterError("build_discrete: digits must lie in {0..N-1}");
    if (grid_contains_patch(GridSet::from_1d(N, A), k, 1).contains)
        throw ConstructionError("build_discrete: digit set contains a k-term AP");
    double total = std::pow(static_cast<double>(A.size()), depth);
    if (total > static_cast<double>(max_points))
        throw BudgetError("build_discrete: level would exceed point budget");

    DiscreteSystem sys;
    sys.N = N;
    sys.eta = eta;
    sys.A = A;
    sys.k = k;
    sys.xi = Int(eta + 1) * Int(N - 1);
    sys.levels.push_back({Int(0)});
    Int xi_pow = 1;  // xi^(n-1) while building level n
    for (int n = 1; n <= depth; ++n) {
        const auto& prev = sys.levels.back();
        std::vector<Int> cur;
        cur.reserve(prev.size() * A.size());
        for (long long a : A)
            for (const Int& b : prev) cur.push_back(sys.xi * b + a);
        std::sort(cur.begin(), cur.end());
        cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
        // digit-shift identity: appending the digit at the top scale instead
        // of the bottom one must give the same set
        std::vector<Int> alt;
        alt.reserve(prev.size() * A.size());
        for (long long a : A) {
            Int shift = xi_pow * a;
            for (const Int& b : prev) alt.push_back(b + shift);
        }
        std::sort(alt.begin(), alt.end());
        alt.erase(std::unique(alt.begin(), alt.end()), alt.end());
        if (alt != cur) throw ConstructionError("build_discrete: digit-shift identity failed");
        // max(B_n) <= (6/5) xi^(n-1) (N-1), compared in integers
        if (5 * cur.back() > 6 * xi_pow * Int(N - 1))
            throw ConstructionError("build_discrete: diameter bound violated");
        sys.levels.push_back(std::move(cur));
        xi_pow *= sys.xi;
    }
    return sys;
}

// Dimension-type exponent log|A| / log((eta+1)(N-1)) of the full tower.
inline double zeta_lower_formula(std::size_t A_size, long long N, long long eta) {
    if (A_size < 1) throw ParameterError("zeta_lower_formula: empty digit set");
    long long xi = (eta + 1) * (N - 1);
    if (xi < 2) throw ParameterError("zeta_lower_formula: expansion factor must be >= 2");
    return std::log(static_cast<double>(A_size)) / std::log(static_cast<double>(xi));
}

struct BlockLevel {
    Int t;      // translation along the first axis
    GridSet block;
    Int M;      // cumulative extent: union so far sits in [0, M)^d
    double density = 0;   // |union| / M^d
    bool density_ok = false;  // density >= delta_min / 4^d
};

struct BlockSet {
    int d = 1;
    int k = 3;
    std::vector<BlockLevel> levels;
    std::vector<std::vector<Int>> points;  // the union, sorted

    PointSet to_point_set() const {
        std::vector<RatVec> pts;
        pts.reserve(points.size());
        for (const auto& p : points) {
            RatVec v;
            v.reserve(p.size());
            for (const Int& c : p) v.emplace_back(c);
            pts.push_back(std::move(v));
        }
        return PointSet::from_points(d, std::move(pts));
    }
};

// Concatenate patch-free blocks along the first axis: block n+1 is shifted by
// t_{n+1} = M_n + 2*side_{n+1}, after which M_{n+1} = M_n + 3*side_{n+1}.
// Each side must exceed the current extent, which forces distinct blocks to
// stay so far apart that no size-k axis patch can straddle them.
inline BlockSet build_block_set(const std::vector<GridSet>& blocks, int k) {
    if (blocks.empty()) throw ParameterError("build_block_set: need at least one block");
    if (k < 2) throw ParameterError("build_block_set: k must be >= 2");
    const int d = blocks.front().dim();
    Rat delta_min;
    bool first = true;
    for (const auto& b : blocks) {
        if (b.dim() != d) throw ParameterError("build_block_set: mixed block dimensions");
        if (b.size() == 0) throw ParameterError("build_block_set: empty block");
        if (grid_contains_patch(b, k, d).contains)
            throw ConstructionError("build_block_set: block contains a size-k patch");
        Rat dens = Rat(static_cast<long long>(b.size()));
        for (int c = 0; c < d; ++c) dens /= b.side();
        if (first || dens < delta_min) delta_min = dens;
        first = false;
    }
    Rat dens_floor = delta_min;
    for (int c = 0; c < d; ++c) dens_floor /= 4;

    BlockSet out;
    out.d = d;
    out.k = k;
    Int M = 0;
    std::vector<std::vector<Int>> uni;
    for (std::size_t n = 0; n < blocks.size(); ++n) {
        const auto& b = blocks[n];
        Int side(b.side());
        Int t;
        if (n == 0) {
            t = 0;
            M = side;
        } else {
            if (!(side > M))
                throw ParameterError("build_block_set: each side must exceed the current extent");
            t = M + 2 * side;
            M = M + 3 * side;
        }
        for (const auto& p : b.points()) {
            std::vector<Int> q;
            q.reserve(d);
            for (int c = 0; c < d; ++c) q.emplace_back(Int(p[c]) + (c == 0 ? t : Int(0)));
            uni.push_back(std::move(q));
        }
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        BlockLevel level{t, b, M, 0.0, false};
        Rat dens = Rat(static_cast<long long>(uni.size()));
        Rat md(M);
        Rat mpow = 1;
        for (int c = 0; c < d; ++c) mpow *= md;
        dens /= mpow;
        level.density = to_double(dens);
        level.density_ok = dens >= dens_floor;
        out.levels.push_back(std::move(level));
    }
    out.points = std::move(uni);
    return out;
}

}  // namespace apfree
