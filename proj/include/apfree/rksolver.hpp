#pragma once

// Exact extremal numbers: the largest subset of {0..N-1}^d containing no
// size-k axis patch along the first m coordinate directions. Small scale by
// design: a branch-and-bound over cells in lexicographic order (include-first,
// so the final incumbent is the lexicographically least optimal witness),
// with window bounds from previously solved sizes, plus an independent
// bitmask brute-force oracle for tiny grids.

#include "core.hpp"
#include "detect.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <random>

namespace apfree {

struct SolveBudget {
    std::chrono::milliseconds time_limit{0};  // 0 = unlimited
    std::uint64_t node_limit = 0;             // 0 = unlimited
};

// Exact values of the same (k, m) family at smaller sides, keyed by side.
using RkTable = std::map<long long, long long>;

struct RkRecord {
    enum class Status { exact, bounded, timeout };
    int k = 0;
    int d = 1;
    int m = 1;
    long long N = 0;
    Status status = Status::exact;
    long long value = 0;  // meaningful when exact
    long long lower = 0;  // certified (witness) in every status
    long long upper = 0;
    std::vector<std::vector<long long>> witness;  // the incumbent set

    GridSet witness_grid() const {
        return GridSet::from_points(d, N, witness);
    }
};

namespace detail {

struct PatchList {
    // per cell: patches whose lexicographically last cell is this one,
    // listed as the other member cells
    std::vector<std::vector<std::vector<std::uint32_t>>> by_last;
    // per cell: for every patch through it, the other member cells
    std::vector<std::vector<std::vector<std::uint32_t>>> by_cell;
    std::size_t total = 0;
};

inline PatchList build_patches(int k, int d, int m, long long N) {
    PatchList pl;
    const std::uint64_t cells = [&] {
        std::uint64_t c = 1;
        for (int i = 0; i < d; ++i) {
            c *= static_cast<std::uint64_t>(N);
            if (c > 400000) throw BudgetError("grid too large for exact solver");
        }
        return c;
    }();
    pl.by_last.resize(cells);
    pl.by_cell.resize(cells);
    std::vector<long long> stride(d, 1);
    for (int c = d - 2; c >= 0; --c) stride[c] = stride[c + 1] * N;
    const long long dmax = (N - 1) / (k - 1);
    std::vector<long long> t(d, 0);
    for (;;) {
        for (long long delta = 1; delta <= dmax; ++delta) {
            bool fits = true;
            for (int c = 0; c < m; ++c)
                if (t[c] + static_cast<long long>(k - 1) * delta > N - 1) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            long long base = 0;
            for (int c = 0; c < d; ++c) base += t[c] * stride[c];
            std::vector<std::uint32_t> cells_of;
            std::vector<int> x(m, 0);
            for (;;) {
                long long idx = base;
                for (int c = 0; c < m; ++c) idx += delta * x[c] * stride[c];
                cells_of.push_back(static_cast<std::uint32_t>(idx));
                int i = m - 1;
                while (i >= 0 && x[i] == k - 1) x[i--] = 0;
                if (i < 0) break;
                ++x[i];
            }
            std::uint32_t last = *std::max_element(cells_of.begin(), cells_of.end());
            std::vector<std::uint32_t> others;
            for (std::uint32_t c : cells_of)
                if (c != last) others.push_back(c);
            pl.by_last[last].push_back(others);
            for (std::size_t i = 0; i < cells_of.size(); ++i) {
                std::vector<std::uint32_t> rest;
                for (std::size_t j = 0; j < cells_of.size(); ++j)
                    if (j != i) rest.push_back(cells_of[j]);
                pl.by_cell[cells_of[i]].push_back(std::move(rest));
            }
            ++pl.total;
        }
        int c = d - 1;
        while (c >= 0 && t[c] == N - 1) t[c--] = 0;
        if (c < 0) break;
        ++t[c];
    }
    return pl;
}

struct BitSet {
    std::vector<std::uint64_t> w;
    explicit BitSet(std::size_t n) : w((n + 63) / 64, 0) {}
    bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint32_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(std::uint32_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
};

struct BudgetExpired {};

}  // namespace detail

// Exhaustive bitmask search, only for N^m <= 24 cells. Independent of the
// branch-and-bound path by construction (no shared search logic).
inline long long brute_oracle(int k, int m, long long N) {
    if (k < 2 || m < 1 || N < 1) throw ParameterError("brute_oracle: need k>=2, m>=1, N>=1");
    double cells_d = std::pow(static_cast<double>(N), m);
    if (cells_d > 24) throw ParameterError("brute_oracle: grid exceeds 24 cells");
    const int cells = static_cast<int>(cells_d + 0.5);
    detail::PatchList pl = detail::build_patches(k, m, m, N);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t last = 0; last < pl.by_last.size(); ++last)
        for (const auto& others : pl.by_last[last]) {
            std::uint32_t pm = std::uint32_t(1) << last;
            for (std::uint32_t c : others) pm |= std::uint32_t(1) << c;
            masks.push_back(pm);
        }
    long long best = 0;
    const std::uint32_t limit = (cells == 32) ? 0xffffffffu : ((std::uint32_t(1) << cells) - 1);
    for (std::uint32_t s = 0;; ++s) {
        int pc = __builtin_popcount(s);
        if (pc > best) {
            bool free_ = true;
            for (std::uint32_t pm : masks)
                if ((s & pm) == pm) {
                    free_ = false;
                    break;
                }
            if (free_) best = pc;
        }
        if (s == limit) break;
    }
    return best;
}

// Branch-and-bound exact solve of the extremal number for {0..N-1}^d with
// patches along the first m directions. `table` (optional) supplies exact
// values of the same (k, d, m) family at smaller sides, used for suffix
// bounds (d == 1) and certified upper bounds on timeout.
inline RkRecord solve_exact_grid(int k, int d, int m, long long N, const SolveBudget& budget = {},
                                 const RkTable* table = nullptr) {
    if (k < 2 || m < 1 || d < m || N < 1)
        throw ParameterError("solve_exact_grid: need k>=2, 1<=m<=d, N>=1");
    RkRecord rec;
    rec.k = k;
    rec.d = d;
    rec.m = m;
    rec.N = N;
    detail::PatchList pl = detail::build_patches(k, d, m, N);
    const std::uint32_t cells = static_cast<std::uint32_t>(pl.by_last.size());

    auto decode = [&](std::uint32_t idx) {
        std::vector<long long> p(d);
        long long v = idx;
        for (int c = d - 1; c >= 0; --c) {
            p[c] = v % N;
            v /= N;
        }
        return p;
    };

    if (pl.total == 0) {  // grid shorter than any patch: everything fits
        rec.status = RkRecord::Status::exact;
        rec.value = rec.lower = rec.upper = cells;
        for (std::uint32_t i = 0; i < cells; ++i) rec.witness.push_back(decode(i));
        return rec;
    }

    detail::BitSet chosen(cells);
    long long best = -1;
    std::vector<std::uint32_t> best_cells;
    std::vector<std::uint32_t> cur;
    std::uint64_t nodes = 0;
    const bool timed = budget.time_limit.count() > 0;
    const auto deadline = std::chrono::steady_clock::now() + budget.time_limit;

    // suffix measured in cells for d >= 2; in window length for d == 1
    auto suffix_bound = [&](std::uint32_t i) -> long long {
        long long rest = static_cast<long long>(cells - i);
        if (d == 1 && table) {
            auto it = table->find(static_cast<long long>(cells - i));
            if (it != table->end() && it->second < rest) rest = it->second;
        }
        return rest;
    };

    std::function<void(std::uint32_t)> dfs = [&](std::uint32_t i) {
        if ((++nodes & 16383) == 0) {
            if (timed && std::chrono::steady_clock::now() > deadline) throw detail::BudgetExpired{};
            if (budget.node_limit && nodes > budget.node_limit) throw detail::BudgetExpired{};
        }
        long long count = static_cast<long long>(cur.size());
        if (i == cells) {
            if (count > best) {
                best = count;
                best_cells = cur;
            }
            return;
        }
        if (count + suffix_bound(i) <= best) return;
        bool legal = true;
        for (const auto& others : pl.by_last[i]) {
            bool complete = true;
            for (std::uint32_t c : others)
                if (!chosen.test(c)) {
                    complete = false;
                    break;
                }
            if (complete) {
                legal = false;
                break;
            }
        }
        if (legal) {
            chosen.set(i);
            cur.push_back(i);
            dfs(i + 1);
            cur.pop_back();
            chosen.clear(i);
        }
        dfs(i + 1);
    };

    bool expired = false;
    try {
        dfs(0);
    } catch (const detail::BudgetExpired&) {
        expired = true;
    }

    rec.lower = std::max<long long>(best, 0);
    for (std::uint32_t c : best_cells) rec.witness.push_back(decode(c));
    if (!expired) {
        rec.status = RkRecord::Status::exact;
        rec.value = rec.upper = rec.lower;
        return rec;
    }
    // certified structural upper bound: restrict to the side-(N-1) subgrid
    long long trivial = cells;
    rec.upper = trivial;
    if (table) {
        auto it = table->find(N - 1);
        if (it != table->end()) {
            long long shell = 1;
            for (int c = 0; c < d; ++c) shell *= N;
            long long inner = 1;
            for (int c = 0; c < d; ++c) inner *= (N - 1);
            long long bound = it->second + (shell - inner);
            if (bound < rec.upper) rec.upper = bound;
        }
    }
    rec.status = (rec.upper < trivial) ? RkRecord::Status::bounded : RkRecord::Status::timeout;
    return rec;
}

inline RkRecord solve_exact(int k, int m, long long N, const SolveBudget& budget = {},
                            const RkTable* table = nullptr) {
    return solve_exact_grid(k, m, m, N, budget, table);
}

// Randomized greedy lower-bound witness. seed == 0 keeps the natural cell
// order (deterministic canonical greedy); otherwise the order is shuffled
// with mt19937_64(seed).
inline GridSet greedy_lower(int k, int m, long long N, std::uint64_t seed = 0) {
    if (k < 2 || m < 1 || N < 1) throw ParameterError("greedy_lower: need k>=2, m>=1, N>=1");
    detail::PatchList pl = detail::build_patches(k, m, m, N);
    const std::uint32_t cells = static_cast<std::uint32_t>(pl.by_cell.size());
    std::vector<std::uint32_t> order(cells);
    for (std::uint32_t i = 0; i < cells; ++i) order[i] = i;
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    detail::BitSet chosen(cells);
    std::vector<std::vector<long long>> out;
    for (std::uint32_t c : order) {
        bool legal = true;
        for (const auto& rest : pl.by_cell[c]) {
            bool complete = true;
            for (std::uint32_t o : rest)
                if (!chosen.test(o)) {
                    complete = false;
                    break;
                }
            if (complete) {
                legal = false;
                break;
            }
        }
        if (!legal) continue;
        chosen.set(c);
        std::vector<long long> p(m);
        long long v = c;
        for (int i = m - 1; i >= 0; --i) {
            p[i] = v % N;
            v /= N;
        }
        out.push_back(std::move(p));
    }
    return GridSet::from_points(m, N, std::move(out));
}

// Product identity: the extremal number for {0..N-1}^d with patches along m
// directions equals N^(d-m) times the m-dimensional value.
inline Int r_full_dim(int k, int d, int m, long long N, long long r_value) {
    if (k < 2 || m < 1 || d < m || N < 1)
        throw ParameterError("r_full_dim: need k>=2, 1<=m<=d, N>=1");
    if (r_value < 0) throw ParameterError("r_full_dim: negative extremal value");
    Int scale = 1;
    for (int i = 0; i < d - m; ++i) scale *= N;
    return scale * r_value;
}

}  // namespace apfree
