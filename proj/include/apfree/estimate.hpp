#pragma once

// Empirical dimension estimators for finite point sets: anchored box
// counting with a least-squares slope fit, local covering profiles on ball
// restrictions, and the prefix exponent of integer sets. Counting is exact
// (rational floors and comparisons); only the final logs are floating point.

#include "core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace apfree {

// Number of half-open grid boxes [i*side, (i+1)*side)^d, anchored at the
// origin, meeting the set. Exact.
inline long long box_count(const PointSet& ps, const Rat& side) {
    if (side <= 0) throw ParameterError("box_count: side must be positive");
    if (ps.empty()) return 0;
    std::set<std::vector<Int>> boxes;
    for (const auto& p : ps.points()) {
        std::vector<Int> idx;
        idx.reserve(p.size());
        for (const auto& c : p) idx.push_back(rat_floor(c / side));
        boxes.insert(std::move(idx));
    }
    return static_cast<long long>(boxes.size());
}

struct BoxDimFit {
    double dimension = 0;   // least-squares slope of ln count vs ln(1/side)
    double residual = 0;    // RMS residual of the fit
    bool reliable = false;  // scale span >= 100 between coarsest and finest
    std::vector<std::pair<double, long long>> samples;  // (side, count)
};

// Least-squares box dimension over >= 3 strictly decreasing scales.
inline BoxDimFit box_dim_fit(const PointSet& ps, const std::vector<Rat>& sides) {
    if (sides.size() < 3) throw ParameterError("box_dim_fit: need at least 3 scales");
    for (std::size_t i = 0; i < sides.size(); ++i) {
        if (sides[i] <= 0) throw ParameterError("box_dim_fit: sides must be positive");
        if (i > 0 && sides[i] >= sides[i - 1])
            throw ParameterError("box_dim_fit: sides must be strictly decreasing");
    }
    if (ps.empty()) throw ParameterError("box_dim_fit: empty point set");
    BoxDimFit fit;
    std::vector<double> xs, ys;
    for (const auto& s : sides) {
        long long c = box_count(ps, s);
        fit.samples.emplace_back(to_double(s), c);
        xs.push_back(-std::log(to_double(s)));
        ys.push_back(std::log(static_cast<double>(c)));
    }
    const auto n = static_cast<double>(xs.size());
    double xbar = 0, ybar = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= n;
    ybar /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    fit.dimension = sxy / sxx;
    double intercept = ybar - fit.dimension * xbar;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (fit.dimension * xs[i] + intercept);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    fit.reliable = sides.front() >= 100 * sides.back();
    return fit;
}

struct CoveringQuery {
    RatVec center;
    Rat R;  // restriction ball radius (closed, Euclidean)
    Rat r;  // covering ball radius
};

struct CoveringSample {
    long long restricted = 0;  // points inside the closed ball B(center, R)
    long long covering = 0;    // covering number N(B(center,R) ∩ set, r)
    bool exact = true;         // false: anchored-box covering, upper bound only
    double local_dim = 0;      // log(covering)/log(R/r), 0 when covering <= 1
};

struct CoveringProfile {
    std::vector<CoveringSample> samples;
    double max_local_dim = 0;
    bool exact = true;  // all samples exact
};

namespace detail {

inline CoveringSample covering_sample(const PointSet& ps, const CoveringQuery& q) {
    const int d = ps.dim();
    if (static_cast<int>(q.center.size()) != d)
        throw ParameterError("covering_profile: center dimension mismatch");
    if (q.r <= 0 || q.R <= 0 || q.r >= q.R)
        throw ParameterError("covering_profile: need 0 < r < R");
    CoveringSample out;
    const Rat R2 = q.R * q.R;
    std::vector<RatVec> inside;
    for (const auto& p : ps.points()) {
        Rat s2 = 0;
        for (int c = 0; c < d; ++c) {
            Rat diff = p[c] - q.center[c];
            s2 += diff * diff;
        }
        if (s2 <= R2) inside.push_back(p);
    }
    out.restricted = static_cast<long long>(inside.size());
    if (inside.empty()) {
        out.covering = 0;
    } else if (d == 1) {
        // greedy sweep: minimal number of closed intervals of length 2r
        std::vector<Rat> xs;
        xs.reserve(inside.size());
        for (const auto& p : inside) xs.push_back(p[0]);
        std::sort(xs.begin(), xs.end());
        long long count = 0;
        std::size_t i = 0;
        while (i < xs.size()) {
            ++count;
            Rat end = xs[i] + 2 * q.r;
            while (i < xs.size() && xs[i] <= end) ++i;
        }
        out.covering = count;
    } else {
        // boxes of side 2r/ceil(sqrt(d)) fit inside radius-r balls, so the
        // anchored box count upper-bounds the covering number
        long long quot = 1;
        while (quot * quot < d) ++quot;
        Rat side = 2 * q.r / quot;
        std::set<std::vector<Int>> boxes;
        for (const auto& p : inside) {
            std::vector<Int> idx;
            idx.reserve(p.size());
            for (const auto& c : p) idx.push_back(rat_floor(c / side));
            boxes.insert(std::move(idx));
        }
        out.covering = static_cast<long long>(boxes.size());
        out.exact = false;
    }
    if (out.covering > 1) out.local_dim = std::log(static_cast<double>(out.covering)) /
                                          std::log(to_double(q.R / q.r));
    return out;
}

}  // namespace detail

// Local covering counts over (center, R, r) queries; the maximum of
// log N(B(x,R), r) / log(R/r) probes the regularity (Assouad-type) exponent.
inline CoveringProfile covering_profile(const PointSet& ps,
                                        const std::vector<CoveringQuery>& queries) {
    if (queries.empty()) throw ParameterError("covering_profile: no queries");
    CoveringProfile prof;
    for (const auto& q : queries) {
        CoveringSample s = detail::covering_sample(ps, q);
        prof.max_local_dim = std::max(prof.max_local_dim, s.local_dim);
        prof.exact = prof.exact && s.exact;
        prof.samples.push_back(std::move(s));
    }
    return prof;
}

struct PrefixDim {
    double value = 0;
    long long count = 0;  // members in [1, N]
    bool empty = false;   // no members in [1, N]
};

// Prefix exponent log |set ∩ [1, N]| / log N of an integer set.
inline PrefixDim zeta_prefix_dim(const std::vector<Int>& members, const Int& N) {
    if (N < 2) throw ParameterError("zeta_prefix_dim: need N >= 2");
    PrefixDim out;
    for (const auto& x : members)
        if (x >= 1 && x <= N) ++out.count;
    if (out.count == 0) {
        out.empty = true;
        return out;
    }
    out.value = std::log(static_cast<double>(out.count)) / std::log(to_double(N));
    return out;
}

}  // namespace apfree
