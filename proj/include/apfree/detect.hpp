#pragma once

// Patch-containment decision procedures.
//
// The workhorse is an exact feasibility test over (t, delta): for an axis
// orientation and the sup norm, the constraints |t_c + x_c*delta - y_c| <=
// eps*delta are, per assignment of patch slots to points, a conjunction of
// two-sided linear bounds on delta alone (t eliminated coordinate-wise by a
// 1-D Helly argument), so containment reduces to interval intersection in
// exact rational arithmetic. In one ambient dimension the Euclidean and sup
// norms coincide, giving an exact Euclidean decision there as well.
//
// Euclidean decisions in d >= 2 are sandwiched: sup-norm infeasibility at eps
// refutes exactly; otherwise a convex minimax (golden-section over the
// inverse gap, minimal enclosing ball inside) locates a candidate witness
// which is certified by exact rational verification. Margins below
// kBoundaryTol are reported boundary-uncertain instead of decided.

#include "core.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

namespace apfree {

enum class Norm { euclidean, max };

struct DetectionResult {
    bool contains = false;
    std::optional<Patch> witness;
    std::uint64_t assignments_checked = 0;
    std::uint64_t pruned = 0;
    bool complete = true;           // false: heuristic search, a miss is inconclusive
    bool exact = true;              // decision certified in exact arithmetic
    bool boundary_uncertain = false;
    Norm norm = Norm::euclidean;
};

struct MinEpsilonResult {
    bool infinite = false;  // no admissible eps in [0, 1/2)
    Rat value = 0;          // exact minimum when !infinite && exact
    double approx = 0.0;    // numeric value (also reported when infinite/inexact)
    bool exact = true;
    std::uint64_t assignments_checked = 0;
};

inline constexpr double kBoundaryTol = 1e-9;

namespace detail {

// Best rational approximation with bounded denominator (continued fractions).
inline Rat rat_approx(double v, const Int& max_den) {
    if (!std::isfinite(v)) throw ParameterError("rat_approx: non-finite value");
    bool neg = v < 0;
    double x = neg ? -v : v;
    Int h0 = 0, k0 = 1, h1 = 1, k1 = 0;
    double frac = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        Int a(static_cast<long long>(fl));
        Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1, k0 = k1, h1 = h2, k1 = k2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (k1 == 0) return Rat(0);
    Rat r(h1, k1);
    return neg ? Rat(-r) : r;
}

// Patch slot offsets for an axis patch of dimension mp: x in {0..k-1}^mp,
// stored as (j1, j2) with j2 = 0 when mp == 1, in lexicographic order.
inline std::vector<std::array<int, 2>> patch_slots(int k, int mp) {
    std::vector<std::array<int, 2>> slots;
    if (mp == 1) {
        for (int j = 0; j < k; ++j) slots.push_back({j, 0});
    } else {
        for (int j1 = 0; j1 < k; ++j1)
            for (int j2 = 0; j2 < k; ++j2) slots.push_back({j1, j2});
    }
    return slots;
}

// Exact sup-norm feasibility search over slot->point assignments for axis
// patches with mp <= 2. Drives both containment and assignment harvesting.
class AxisSearch {
public:
    AxisSearch(const PointSet& q, int k, int mp, Rat eps)
        : q_(q), k_(k), mp_(mp), eps_(std::move(eps)), slots_(patch_slots(k, mp)) {}

    std::uint64_t assignments_checked = 0;
    std::uint64_t pruned = 0;

    // Visitor receives (chosen point indices per slot, delta interval [lo,hi]);
    // return true to stop the search.
    bool search(const std::function<bool(const std::vector<int>&, const Rat&, const Rat&)>& visit) {
        chosen_.assign(slots_.size(), -1);
        used_.assign(q_.size(), 0);
        visit_ = &visit;
        return dfs(0, Rat(0), std::nullopt);
    }

private:
    const PointSet& q_;
    int k_, mp_;
    Rat eps_;
    std::vector<std::array<int, 2>> slots_;
    std::vector<int> chosen_;
    std::vector<char> used_;
    const std::function<bool(const std::vector<int>&, const Rat&, const Rat&)>* visit_ = nullptr;

    bool dfs(std::size_t s, Rat lo, std::optional<Rat> hi) {
        if (s == slots_.size()) {
            ++assignments_checked;
            // k >= 2 guarantees a slot pair with offset gap >= 1, so hi is set
            // and lo > 0.
            return (*visit_)(chosen_, lo, *hi);
        }
        const int d = q_.dim();
        for (int p = 0; p < static_cast<int>(q_.size()); ++p) {
            if (used_[p]) continue;
            Rat lo2 = lo;
            std::optional<Rat> hi2 = hi;
            bool ok = true;
            for (std::size_t b = 0; b < s && ok; ++b) {
                const auto& ya = q_[p];
                const auto& yb = q_[chosen_[b]];
                for (int c = 0; c < d && ok; ++c) {
                    long long dx = (c < mp_) ? slots_[s][c] - slots_[b][c] : 0;
                    Rat dy = ya[c] - yb[c];
                    if (dx < 0) {
                        dx = -dx;
                        dy = -dy;
                    }
                    if (dx == 0) {
                        if (dy < 0) dy = -dy;
                        if (dy == 0) continue;
                        if (eps_ == 0) {
                            ok = false;
                            break;
                        }
                        Rat b_lo = dy / (2 * eps_);
                        if (b_lo > lo2) lo2 = b_lo;
                    } else {
                        if (dy <= 0) {
                            ok = false;
                            break;
                        }
                        Rat b_lo = dy / (Rat(dx) + 2 * eps_);
                        Rat b_hi = dy / (Rat(dx) - 2 * eps_);
                        if (b_lo > lo2) lo2 = b_lo;
                        if (!hi2 || b_hi < *hi2) hi2 = b_hi;
                    }
                    if (hi2 && lo2 > *hi2) ok = false;
                }
            }
            if (!ok) {
                ++pruned;
                continue;
            }
            chosen_[s] = p;
            used_[p] = 1;
            bool stop = dfs(s + 1, std::move(lo2), std::move(hi2));
            used_[p] = 0;
            chosen_[s] = -1;
            if (stop) return true;
        }
        return false;
    }
};

// Witness with the minimal feasible delta of an assignment: t_c sits at the
// lower end of its feasible interval.
inline Patch make_axis_witness(const PointSet& q, const std::vector<std::array<int, 2>>& slots,
                               const std::vector<int>& chosen, int mp, const Rat& eps,
                               const Rat& delta, int k) {
    const int d = q.dim();
    RatVec t(d);
    for (int c = 0; c < d; ++c) {
        bool first = true;
        Rat best = 0;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            Rat lo = q[chosen[i]][c] - eps * delta;
            if (c < mp) lo -= Rat(slots[i][c]) * delta;
            if (first || lo > best) {
                best = lo;
                first = false;
            }
        }
        t[c] = best;
    }
    return Patch::make(std::move(t), delta, make_axis_orientation(d, mp), k);
}

// Exact sup-norm distance check: every patch point within eps*delta of some
// point of q.
inline bool verify_patch_max(const PointSet& q, const Patch& p, const Rat& eps) {
    PointSet pp = patch_points(p);
    Rat tol = eps * p.delta;
    for (const auto& x : pp.points()) {
        bool near = false;
        for (const auto& y : q.points()) {
            bool within = true;
            for (int c = 0; c < q.dim() && within; ++c) {
                Rat diff = x[c] - y[c];
                if (diff < 0) diff = -diff;
                if (diff > tol) within = false;
            }
            if (within) {
                near = true;
                break;
            }
        }
        if (!near) return false;
    }
    return true;
}

// Exact Euclidean check via squared distances.
inline bool verify_patch_euclid(const PointSet& q, const Patch& p, const Rat& eps) {
    PointSet pp = patch_points(p);
    Rat tol_sq = eps * eps * p.delta * p.delta;
    for (const auto& x : pp.points()) {
        bool near = false;
        for (const auto& y : q.points()) {
            Rat s = 0;
            for (int c = 0; c < q.dim(); ++c) {
                Rat diff = x[c] - y[c];
                s += diff * diff;
            }
            if (s <= tol_sq) {
                near = true;
                break;
            }
        }
        if (!near) return false;
    }
    return true;
}

// Minimal enclosing ball of few low-dimensional points (subset enumeration;
// exact enough in doubles for the sizes that occur here).
struct Ball {
    std::vector<double> center;
    double radius = 0;
};

inline Ball min_enclosing_ball(const std::vector<std::vector<double>>& pts) {
    const int n = static_cast<int>(pts.size());
    const int d = static_cast<int>(pts[0].size());
    auto dist = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (int c = 0; c < d; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
        return std::sqrt(s);
    };
    auto covers = [&](const Ball& b) {
        for (const auto& p : pts)
            if (dist(b.center, p) > b.radius + 1e-12 * (1 + b.radius)) return false;
        return true;
    };
    Ball best;
    best.radius = std::numeric_limits<double>::infinity();
    // circumballs of subsets of size 1..d+1 (center in the affine hull)
    std::vector<int> idx;
    std::function<void(int, int)> rec = [&](int start, int want) {
        if (want == 0) {
            const auto& p0 = pts[idx[0]];
            int s = static_cast<int>(idx.size());
            std::vector<std::vector<double>> G(s - 1, std::vector<double>(s, 0.0));
            for (int i = 1; i < s; ++i) {
                for (int j = 1; j < s; ++j) {
                    double g = 0;
                    for (int c = 0; c < d; ++c)
                        g += (pts[idx[i]][c] - p0[c]) * (pts[idx[j]][c] - p0[c]);
                    G[i - 1][j - 1] = 2 * g;
                }
                double rhs = 0;
                for (int c = 0; c < d; ++c) rhs += (pts[idx[i]][c] - p0[c]) * (pts[idx[i]][c] - p0[c]);
                G[i - 1][s - 1] = rhs;
            }
            // gaussian elimination
            int rows = s - 1;
            bool singular = false;
            for (int col = 0; col < rows && !singular; ++col) {
                int piv = col;
                for (int r = col + 1; r < rows; ++r)
                    if (std::abs(G[r][col]) > std::abs(G[piv][col])) piv = r;
                if (std::abs(G[piv][col]) < 1e-12) {
                    singular = true;
                    break;
                }
                std::swap(G[col], G[piv]);
                for (int r = 0; r < rows; ++r) {
                    if (r == col) continue;
                    double f = G[r][col] / G[col][col];
                    for (int cc = col; cc <= rows; ++cc) G[r][cc] -= f * G[col][cc];
                }
            }
            if (!singular || s == 1) {
                Ball b;
                b.center = p0;
                for (int i = 1; i < s; ++i) {
                    double lam = G[i - 1][rows] / G[i - 1][i - 1];
                    for (int c = 0; c < d; ++c) b.center[c] += lam * (pts[idx[i]][c] - p0[c]);
                }
                b.radius = dist(b.center, p0);
                if (b.radius < best.radius && covers(b)) best = b;
            }
            return;
        }
        for (int i = start; i <= n - want; ++i) {
            idx.push_back(i);
            rec(i + 1, want - 1);
            idx.pop_back();
        }
    };
    for (int s = 1; s <= std::min(n, d + 1); ++s) rec(0, s);
    return best;
}

}  // namespace detail

// Scan an integer grid set for an axis patch of size k varying along the
// first mp coordinate directions: t over members, integer delta ascending.
inline DetectionResult grid_contains_patch(const GridSet& g, int k, int mp) {
    if (k < 2) throw ParameterError("grid_contains_patch: k must be >= 2");
    if (mp < 1 || mp > g.dim())
        throw ParameterError("grid_contains_patch: need 1 <= patch dim <= grid dim");
    DetectionResult res;
    res.norm = Norm::euclidean;
    const long long N = g.side();
    const long long dmax = (k == 1) ? 0 : (N - 1) / (k - 1);
    for (const auto& t : g.points()) {
        for (long long delta = 1; delta <= dmax; ++delta) {
            bool fits = true;
            for (int c = 0; c < mp; ++c)
                if (t[c] + (k - 1) * delta > N - 1) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            ++res.assignments_checked;
            std::vector<long long> x(mp, 0);
            std::vector<long long> pt = t;
            bool all_in = true;
            for (;;) {
                if (!g.contains(pt)) {
                    all_in = false;
                    ++res.pruned;
                    break;
                }
                int i = 0;
                while (i < mp && x[i] == k - 1) {
                    pt[i] -= (k - 1) * delta;
                    x[i++] = 0;
                }
                if (i == mp) break;
                ++x[i];
                pt[i] += delta;
            }
            if (all_in) {
                res.contains = true;
                RatVec tr(g.dim());
                for (int c = 0; c < g.dim(); ++c) tr[c] = t[c];
                res.witness = Patch::make(std::move(tr), Rat(delta),
                                          make_axis_orientation(g.dim(), mp), k);
                return res;
            }
        }
    }
    return res;
}

// Does q contain a (k, eps)-patch with the given orientation? See the header
// comment for the exactness contract per (dimension, norm) regime.
inline DetectionResult contains_kev_ap(const PointSet& q, const PatchSpec& spec,
                                       Norm norm = Norm::euclidean) {
    if (q.empty()) throw ParameterError("contains_kev_ap: empty point set");
    const Orientation& o = spec.orientation;
    if (q.dim() != o.ambient_dim())
        throw ParameterError("contains_kev_ap: dimension mismatch");

    if (!o.is_axis()) {
        PointSet rq = rotate_into_frame(q, o);
        PatchSpec axis_spec = PatchSpec::make(
            spec.k, spec.epsilon, make_axis_orientation(o.ambient_dim(), o.patch_dim()));
        DetectionResult res = contains_kev_ap(rq, axis_spec, norm);
        if (!(o.is_exact() && (o.is_signed_permutation() || o.patch_dim() == o.ambient_dim())))
            res.exact = false;  // numeric frame completion
        // witness t is reported in the rotated frame; delta and shape carry over
        return res;
    }

    const int d = q.dim(), mp = o.patch_dim(), k = spec.k;
    const Rat& eps = spec.epsilon;
    DetectionResult res;
    res.norm = norm;

    double slot_count = std::pow(static_cast<double>(k), mp);
    if (slot_count > static_cast<double>(q.size())) return res;  // pigeonhole, exact

    if (mp >= 3) {
        // Heuristic: candidate gaps from first-coordinate differences, bases
        // from points; candidates verified exactly, a miss is inconclusive.
        res.complete = false;
        std::vector<Rat> deltas;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) {
                Rat diff = q[j][0] - q[i][0];
                if (diff <= 0) continue;
                for (int g = 1; g < k; ++g) deltas.push_back(diff / g);
            }
        std::sort(deltas.begin(), deltas.end());
        deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
        std::uint64_t work = 0;
        for (const Rat& delta : deltas) {
            for (const auto& y : q.points()) {
                if (++work > 20000) return res;
                RatVec t = y;
                ++res.assignments_checked;
                Patch cand = Patch::make(t, delta, o, k);
                bool hit = (norm == Norm::max) ? detail::verify_patch_max(q, cand, eps)
                                               : detail::verify_patch_euclid(q, cand, eps);
                if (hit) {
                    res.contains = true;
                    res.complete = true;  // a verified hit is conclusive
                    res.witness = std::move(cand);
                    return res;
                }
            }
        }
        return res;
    }

    auto slots = detail::patch_slots(k, mp);
    detail::AxisSearch search(q, k, mp, eps);

    if (norm == Norm::max || d == 1) {
        bool found = search.search([&](const std::vector<int>& chosen, const Rat& lo, const Rat&) {
            res.contains = true;
            res.witness = detail::make_axis_witness(q, slots, chosen, mp, eps, lo, k);
            return true;
        });
        res.assignments_checked = search.assignments_checked;
        res.pruned = search.pruned;
        (void)found;
        return res;
    }

    // Euclidean, d >= 2: harvest sup-norm-feasible assignments, then refine.
    struct Cand {
        std::vector<int> chosen;
        Rat lo, hi;
    };
    std::vector<Cand> cands;
    search.search([&](const std::vector<int>& chosen, const Rat& lo, const Rat& hi) {
        cands.push_back({chosen, lo, hi});
        return cands.size() >= 20000;
    });
    res.assignments_checked = search.assignments_checked;
    res.pruned = search.pruned;
    if (cands.empty()) return res;  // sup-norm infeasible refutes Euclidean, exact

    double best_r = std::numeric_limits<double>::infinity();
    std::vector<double> best_u;
    double best_w = 0;
    const Cand* best_cand = nullptr;
    for (const auto& cand : cands) {
        std::vector<std::vector<double>> y;
        std::vector<std::vector<double>> xoff;
        for (std::size_t i = 0; i < cand.chosen.size(); ++i) {
            std::vector<double> yv(d), xv(d, 0.0);
            for (int c = 0; c < d; ++c) yv[c] = to_double(q[cand.chosen[i]][c]);
            for (int c = 0; c < mp; ++c) xv[c] = slots[i][c];
            y.push_back(std::move(yv));
            xoff.push_back(std::move(xv));
        }
        auto radius_at = [&](double w) {
            std::vector<std::vector<double>> centers(y.size(), std::vector<double>(d));
            for (std::size_t i = 0; i < y.size(); ++i)
                for (int c = 0; c < d; ++c) centers[i][c] = w * y[i][c] - xoff[i][c];
            return detail::min_enclosing_ball(centers);
        };
        double wa = 1.0 / to_double(cand.hi), wb = 1.0 / to_double(cand.lo);
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = wb - gr * (wb - wa), x2 = wa + gr * (wb - wa);
        double f1 = radius_at(x1).radius, f2 = radius_at(x2).radius;
        for (int it = 0; it < 120; ++it) {
            if (f1 < f2) {
                wb = x2;
                x2 = x1;
                f2 = f1;
                x1 = wb - gr * (wb - wa);
                f1 = radius_at(x1).radius;
            } else {
                wa = x1;
                x1 = x2;
                f1 = f2;
                x2 = wa + gr * (wb - wa);
                f2 = radius_at(x2).radius;
            }
        }
        double w = 0.5 * (wa + wb);
        detail::Ball b = radius_at(w);
        if (b.radius < best_r) {
            best_r = b.radius;
            best_u = b.center;
            best_w = w;
            best_cand = &cand;
        }
    }

    double eps_d = to_double(eps);
    if (best_r <= eps_d * (1 + kBoundaryTol) && best_cand) {
        // attempt exact certification with progressively finer rounding
        for (int bits : {24, 44, 60}) {
            Int max_den = Int(1) << bits;
            Rat w = detail::rat_approx(best_w, max_den);
            if (w <= 0) continue;
            Rat delta = 1 / w;
            RatVec t(d);
            for (int c = 0; c < d; ++c) t[c] = detail::rat_approx(best_u[c], max_den) * delta;
            Patch cand = Patch::make(t, delta, o, k);
            if (detail::verify_patch_euclid(q, cand, eps)) {
                res.contains = true;
                res.witness = std::move(cand);
                return res;
            }
        }
    }
    // not certified: decide numerically with a margin
    res.exact = false;
    res.contains = best_r <= eps_d;
    res.boundary_uncertain = std::abs(best_r - eps_d) <= kBoundaryTol * std::max(1.0, eps_d);
    return res;
}

// Smallest eps in [0, 1/2) for which q contains a (k, eps)-patch with the
// given orientation, or infinity. Exact for d == 1 and for the sup norm with
// axis orientations and patch dimension <= 2: per assignment the scaled
// deviation 2s(w) is a maximum of lines in w = 1/delta, minimized exactly
// over the positive crossings.
inline MinEpsilonResult min_epsilon(const PointSet& q, int k, const Orientation& o,
                                    Norm norm = Norm::euclidean) {
    if (q.empty()) throw ParameterError("min_epsilon: empty point set");
    if (k < 2) throw ParameterError("min_epsilon: k must be >= 2");
    if (q.dim() != o.ambient_dim()) throw ParameterError("min_epsilon: dimension mismatch");

    if (!o.is_axis()) {
        PointSet rq = rotate_into_frame(q, o);
        MinEpsilonResult res =
            min_epsilon(rq, k, make_axis_orientation(o.ambient_dim(), o.patch_dim()), norm);
        if (!(o.is_exact() && (o.is_signed_permutation() || o.patch_dim() == o.ambient_dim())))
            res.exact = false;
        return res;
    }

    const int d = q.dim(), mp = o.patch_dim();
    MinEpsilonResult res;
    double slot_count = std::pow(static_cast<double>(k), mp);
    if (slot_count > static_cast<double>(q.size())) {
        res.infinite = true;
        res.approx = std::numeric_limits<double>::infinity();
        return res;
    }

    if (mp >= 3 || (norm == Norm::euclidean && d >= 2)) {
        // numeric: bisect eps over the containment decision
        Rat lo = 0, hi(1, 2);
        auto spec_at = [&](const Rat& e) { return PatchSpec::make(k, e, o); };
        DetectionResult at_hi = contains_kev_ap(q, spec_at(Rat(4999, 10000)), norm);
        if (!at_hi.contains) {
            res.infinite = true;
            res.exact = false;
            res.approx = std::numeric_limits<double>::infinity();
            return res;
        }
        for (int it = 0; it < 48; ++it) {
            Rat mid = (lo + hi) / 2;
            DetectionResult r = contains_kev_ap(q, spec_at(mid), norm);
            res.assignments_checked += r.assignments_checked;
            (r.contains ? hi : lo) = mid;
        }
        res.exact = false;
        res.value = hi;
        res.approx = to_double(hi);
        return res;
    }

    // exact path: enumerate order-compatible assignments, minimize max of lines
    auto slots = detail::patch_slots(k, mp);
    const int n = static_cast<int>(q.size());
    std::vector<int> chosen(slots.size(), -1);
    std::vector<char> used(n, 0);
    std::optional<Rat> best;  // best 2s so far

    auto assignment_min = [&]() -> std::optional<Rat> {
        // lines a + b*w with a = x_{i,c} - x_{i',c}, b = y_{i',c} - y_{i,c}
        struct Line {
            Rat a, b;
        };
        std::vector<Line> lines;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = 0; j < chosen.size(); ++j) {
                if (i == j) continue;
                for (int c = 0; c < d; ++c) {
                    Rat a = Rat((c < mp) ? slots[i][c] - slots[j][c] : 0);
                    Rat b = q[chosen[j]][c] - q[chosen[i]][c];
                    lines.push_back({std::move(a), std::move(b)});
                }
            }
        auto value_at = [&](const Rat& w) {
            Rat v = lines[0].a + lines[0].b * w;
            for (const auto& ln : lines) {
                Rat lv = ln.a + ln.b * w;
                if (lv > v) v = lv;
            }
            return v;
        };
        std::optional<Rat> mn;
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                Rat db = lines[i].b - lines[j].b;
                if (db == 0) continue;
                Rat w = (lines[j].a - lines[i].a) / db;
                if (w <= 0) continue;
                Rat v = value_at(w);
                if (!mn || v < *mn) mn = v;
            }
        return mn;  // always set for distinct points (argued in tests)
    };

    std::uint64_t nodes = 0;
    std::function<void(std::size_t)> dfs = [&](std::size_t s) {
        if (++nodes > 20'000'000) throw BudgetError("min_epsilon: assignment space too large");
        if (s == slots.size()) {
            ++res.assignments_checked;
            auto mn = assignment_min();
            if (mn && (!best || *mn < *best)) best = *mn;
            return;
        }
        for (int p = 0; p < n; ++p) {
            if (used[p]) continue;
            bool ok = true;
            // order compatibility valid for every eps < 1/2: offsets differing
            // in a patch coordinate force a strict coordinate increase
            for (std::size_t b = 0; b < s && ok; ++b)
                for (int c = 0; c < mp && ok; ++c) {
                    int dx = slots[s][c] - slots[b][c];
                    Rat dy = q[p][c] - q[chosen[b]][c];
                    if (dx > 0 && dy <= 0) ok = false;
                    if (dx < 0 && dy >= 0) ok = false;
                }
            if (!ok) continue;
            chosen[s] = p;
            used[p] = 1;
            dfs(s + 1);
            used[p] = 0;
        }
    };
    dfs(0);

    if (!best || *best >= Rat(1)) {  // 2s >= 1 means eps >= 1/2
        res.infinite = true;
        res.approx = best ? to_double(*best / 2) : std::numeric_limits<double>::infinity();
        return res;
    }
    res.value = *best / 2;
    res.approx = to_double(res.value);
    return res;
}

}  // namespace apfree
