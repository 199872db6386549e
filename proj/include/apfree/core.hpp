#pragma once

// Core geometric types: finite point sets with exact rational coordinates,
// integer grid subsets, patch orientations (orthonormal m-frames in R^d),
// and patch generation / frame-change operations.

#include "rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace apfree {

using RatVec = std::vector<Rat>;

// Finite subset of R^d, canonically sorted (lexicographic) and deduplicated.
class PointSet {
public:
    static PointSet from_points(int d, std::vector<RatVec> pts) {
        if (d < 1) throw ParameterError("PointSet: dimension must be >= 1");
        for (const auto& p : pts)
            if (static_cast<int>(p.size()) != d)
                throw ParameterError("PointSet: point arity does not match dimension");
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        PointSet q;
        q.d_ = d;
        q.pts_ = std::move(pts);
        return q;
    }

    int dim() const { return d_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const RatVec& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<RatVec>& points() const { return pts_; }
    bool contains(const RatVec& p) const {
        return std::binary_search(pts_.begin(), pts_.end(), p);
    }

    // sup-norm diameter, exact.
    Rat diameter_max_norm() const {
        Rat best = 0;
        for (int c = 0; c < d_; ++c) {
            Rat lo = pts_.empty() ? Rat(0) : pts_[0][c], hi = lo;
            for (const auto& p : pts_) {
                if (p[c] < lo) lo = p[c];
                if (p[c] > hi) hi = p[c];
            }
            if (hi - lo > best) best = hi - lo;
        }
        return best;
    }

    // squared Euclidean diameter, exact.
    Rat diameter_sq() const {
        Rat best = 0;
        for (std::size_t i = 0; i < pts_.size(); ++i)
            for (std::size_t j = i + 1; j < pts_.size(); ++j) {
                Rat s = 0;
                for (int c = 0; c < d_; ++c) {
                    Rat t = pts_[i][c] - pts_[j][c];
                    s += t * t;
                }
                if (s > best) best = s;
            }
        return best;
    }

private:
    int d_ = 1;
    std::vector<RatVec> pts_;
};

// Subset of the integer grid {0..N-1}^m, canonically sorted.
class GridSet {
public:
    static GridSet from_points(int m, long long N, std::vector<std::vector<long long>> pts) {
        if (m < 1) throw ParameterError("GridSet: dimension must be >= 1");
        if (N < 1) throw ParameterError("GridSet: side must be >= 1");
        for (const auto& p : pts) {
            if (static_cast<int>(p.size()) != m)
                throw ParameterError("GridSet: point arity does not match dimension");
            for (long long c : p)
                if (c < 0 || c >= N) throw ParameterError("GridSet: coordinate outside {0..side-1}");
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        GridSet g;
        g.m_ = m;
        g.N_ = N;
        g.pts_ = std::move(pts);
        for (const auto& p : g.pts_) g.codes_.push_back(g.encode(p));
        return g;
    }

    static GridSet from_1d(long long N, const std::vector<long long>& xs) {
        std::vector<std::vector<long long>> pts;
        pts.reserve(xs.size());
        for (long long x : xs) pts.push_back({x});
        return from_points(1, N, std::move(pts));
    }

    int dim() const { return m_; }
    long long side() const { return N_; }
    std::size_t size() const { return pts_.size(); }
    const std::vector<std::vector<long long>>& points() const { return pts_; }
    const std::vector<long long>& operator[](std::size_t i) const { return pts_[i]; }

    unsigned long long encode(const std::vector<long long>& p) const {
        unsigned long long code = 0;
        for (long long c : p) code = code * static_cast<unsigned long long>(N_) + static_cast<unsigned long long>(c);
        return code;
    }

    bool contains(const std::vector<long long>& p) const {
        for (long long c : p)
            if (c < 0 || c >= N_) return false;
        return std::binary_search(codes_.begin(), codes_.end(), encode(p));
    }

    PointSet to_point_set() const {
        std::vector<RatVec> out;
        out.reserve(pts_.size());
        for (const auto& p : pts_) {
            RatVec v;
            v.reserve(m_);
            for (long long c : p) v.emplace_back(c);
            out.push_back(std::move(v));
        }
        return PointSet::from_points(m_, std::move(out));
    }

private:
    int m_ = 1;
    long long N_ = 1;
    std::vector<std::vector<long long>> pts_;
    std::vector<unsigned long long> codes_;
};

// Orthonormal m-frame in R^d: the directions a patch varies along.
// Rational entries; orthonormality is checked exactly, with a small numeric
// tolerance admitted for frames that only approximate a rotation (flagged).
class Orientation {
public:
    static constexpr double kOrthoTol = 1e-9;

    static Orientation from_columns(int d, std::vector<RatVec> cols) {
        if (d < 1) throw ParameterError("Orientation: ambient dimension must be >= 1");
        int m = static_cast<int>(cols.size());
        if (m < 1 || m > d) throw ParameterError("Orientation: need 1 <= m <= d columns");
        for (const auto& v : cols)
            if (static_cast<int>(v.size()) != d)
                throw ParameterError("Orientation: column arity does not match dimension");
        bool exact = true;
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                Rat dot = 0;
                for (int c = 0; c < d; ++c) dot += cols[i][c] * cols[j][c];
                Rat want = (i == j) ? Rat(1) : Rat(0);
                if (dot != want) {
                    exact = false;
                    if (std::abs(to_double(dot - want)) > kOrthoTol)
                        throw ParameterError("Orientation: columns not orthonormal");
                }
            }
        Orientation o;
        o.d_ = d;
        o.m_ = m;
        o.cols_ = std::move(cols);
        o.exact_ = exact;
        return o;
    }

    int ambient_dim() const { return d_; }
    int patch_dim() const { return m_; }
    const std::vector<RatVec>& columns() const { return cols_; }
    const RatVec& column(int i) const { return cols_[i]; }

    // Orthonormal exactly in rational arithmetic (e.g. signed permutations,
    // Pythagorean rotations); false means numerically approximate.
    bool is_exact() const { return exact_; }

    bool is_axis() const {
        for (int i = 0; i < m_; ++i)
            for (int c = 0; c < d_; ++c)
                if (cols_[i][c] != ((c == i) ? Rat(1) : Rat(0))) return false;
        return true;
    }

    // Every column is +-1 in one coordinate and 0 elsewhere, distinct rows.
    bool is_signed_permutation() const {
        std::vector<bool> used(d_, false);
        for (const auto& v : cols_) {
            int hit = -1;
            for (int c = 0; c < d_; ++c) {
                if (v[c] == 0) continue;
                if (hit >= 0 || (v[c] != 1 && v[c] != -1)) return false;
                hit = c;
            }
            if (hit < 0 || used[hit]) return false;
            used[hit] = true;
        }
        return true;
    }

private:
    int d_ = 1, m_ = 1;
    std::vector<RatVec> cols_;
    bool exact_ = true;
};

// First m standard basis vectors of R^d.
inline Orientation make_axis_orientation(int d, int m) {
    if (d < 1 || m < 1 || m > d)
        throw ParameterError("make_axis_orientation: need 1 <= m <= d");
    std::vector<RatVec> cols(m, RatVec(d, Rat(0)));
    for (int i = 0; i < m; ++i) cols[i][i] = 1;
    return Orientation::from_columns(d, std::move(cols));
}

// Patch shape parameters: k points per direction, proximity budget epsilon
// (fraction of the gap), and the directions the patch varies along.
struct PatchSpec {
    int k;
    Rat epsilon;
    Orientation orientation;

    static PatchSpec make(int k, Rat epsilon, Orientation o) {
        if (k < 2) throw ParameterError("PatchSpec: k must be >= 2");
        if (epsilon < 0 || epsilon >= Rat(1, 2))
            throw ParameterError("PatchSpec: epsilon must lie in [0, 1/2)");
        return PatchSpec{k, std::move(epsilon), std::move(o)};
    }
};

// A concrete patch instance: base point t, gap delta > 0, orientation, k.
struct Patch {
    RatVec t;
    Rat delta;
    Orientation orientation;
    int k;

    static Patch make(RatVec t, Rat delta, Orientation o, int k) {
        if (k < 2) throw ParameterError("Patch: k must be >= 2");
        if (delta <= 0) throw ParameterError("Patch: delta must be > 0");
        if (static_cast<int>(t.size()) != o.ambient_dim())
            throw ParameterError("Patch: base point arity does not match orientation");
        return Patch{std::move(t), std::move(delta), std::move(o), k};
    }
};

// All k^m points t + delta * sum_i x_i v_i, x in {0..k-1}^m.
inline PointSet patch_points(const Patch& p) {
    const int m = p.orientation.patch_dim();
    const int d = p.orientation.ambient_dim();
    double total = std::pow(static_cast<double>(p.k), m);
    if (total > 4e6) throw BudgetError("patch_points: k^m exceeds point budget");
    std::vector<RatVec> pts;
    std::vector<int> x(m, 0);
    for (;;) {
        RatVec pt = p.t;
        for (int i = 0; i < m; ++i) {
            if (x[i] == 0) continue;
            Rat s = p.delta * x[i];
            for (int c = 0; c < d; ++c) pt[c] += s * p.orientation.column(i)[c];
        }
        pts.push_back(std::move(pt));
        int i = 0;
        while (i < m && x[i] == p.k - 1) x[i++] = 0;
        if (i == m) break;
        ++x[i];
    }
    PointSet q = PointSet::from_points(d, std::move(pts));
    if (q.size() != static_cast<std::size_t>(std::llround(total)))
        throw ConstructionError("patch_points: degenerate orientation collapsed points");
    return q;
}

namespace detail {

// Full orthonormal basis of R^d whose first m vectors are the orientation
// columns. Exact (rational) for signed permutations; otherwise completed by
// Gram-Schmidt in doubles.
inline std::pair<std::vector<RatVec>, bool> complete_frame(const Orientation& o) {
    const int d = o.ambient_dim(), m = o.patch_dim();
    std::vector<RatVec> basis = o.columns();
    if (o.is_signed_permutation()) {
        std::vector<bool> used(d, false);
        for (const auto& v : basis)
            for (int c = 0; c < d; ++c)
                if (v[c] != 0) used[c] = true;
        for (int c = 0; c < d; ++c) {
            if (used[c]) continue;
            RatVec e(d, Rat(0));
            e[c] = 1;
            basis.push_back(std::move(e));
        }
        return {std::move(basis), true};
    }
    if (m == d) return {std::move(basis), o.is_exact()};  // nothing to complete
    std::vector<std::vector<double>> num;
    for (const auto& v : basis) {
        std::vector<double> w(d);
        for (int c = 0; c < d; ++c) w[c] = to_double(v[c]);
        num.push_back(std::move(w));
    }
    for (int c = 0; c < d && static_cast<int>(num.size()) < d; ++c) {
        std::vector<double> w(d, 0.0);
        w[c] = 1.0;
        for (const auto& u : num) {
            double dot = 0;
            for (int i = 0; i < d; ++i) dot += u[i] * w[i];
            for (int i = 0; i < d; ++i) w[i] -= dot * u[i];
        }
        double norm = 0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-7) continue;  // candidate axis already spanned
        for (double& x : w) x /= norm;
        num.push_back(w);
    }
    if (static_cast<int>(num.size()) != d)
        throw ConstructionError("complete_frame: failed to extend orientation to a basis");
    for (int i = m; i < d; ++i) {
        RatVec v(d);
        for (int c = 0; c < d; ++c) v[c] = Rat(num[i][c]);
        basis.push_back(std::move(v));
    }
    return {std::move(basis), false};
}

}  // namespace detail

// Coordinates of q in an orthonormal frame whose first patch_dim axes are the
// orientation columns. Exact for signed permutations; the completion axes are
// numeric otherwise (the first patch_dim output coordinates stay exact either
// way, being plain rational inner products).
inline PointSet rotate_into_frame(const PointSet& q, const Orientation& o) {
    if (q.dim() != o.ambient_dim())
        throw ParameterError("rotate_into_frame: dimension mismatch");
    auto [basis, exact] = detail::complete_frame(o);
    (void)exact;
    const int d = q.dim();
    std::vector<RatVec> out;
    out.reserve(q.size());
    for (const auto& p : q.points()) {
        RatVec c(d);
        for (int i = 0; i < d; ++i) {
            Rat dot = 0;
            for (int j = 0; j < d; ++j) dot += basis[i][j] * p[j];
            c[i] = dot;
        }
        out.push_back(std::move(c));
    }
    return PointSet::from_points(d, std::move(out));
}

}  // namespace apfree
