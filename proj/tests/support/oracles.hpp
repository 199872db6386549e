#pragma once

// Independent oracles used only by the test suite:
//  - formula evaluation at 100-decimal-digit precision (the implementation
//    under test works in double; agreement is checked at 1e-12 relative),
//  - a from-scratch minimal-tolerance search for 1-D point sets that shares
//    no code with the library's exact routine.

#include <apfree/apfree.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracles {

using Big = boost::multiprecision::cpp_bin_float_100;
using apfree::Int;
using apfree::Rat;

inline Big to_big(const Rat& r) {
    return Big(boost::multiprecision::numerator(r)) /
           Big(boost::multiprecision::denominator(r));
}

inline Big to_big(const Int& n) { return Big(n); }

inline double rel_diff(double impl, const Big& oracle) {
    Big mag = abs(oracle);
    Big denom = mag > 1 ? mag : Big(1);
    Big diff = abs(Big(impl) - oracle);
    return static_cast<double>(diff / denom);
}

// d + log(1 - k^-m) / log(k * ceil(sqrt(d)/(2 eps)))
inline Big basic_upper(int k, const Rat& eps, int d, int m) {
    Int B = apfree::ceil_sqrt_over(d, 2 * eps);
    Big inner = 1 - pow(Big(1) / k, m);
    return d + log(inner) / log(Big(k) * to_big(B));
}

// log 2 / log((2k - 2 - 4 eps) / (k - 2 - 4 eps))
inline Big classic_1d_lower(int k, const Rat& eps) {
    Big num = Big(2 * k - 2) - 4 * to_big(eps);
    Big den = Big(k - 2) - 4 * to_big(eps);
    return log(Big(2)) / log(num / den);
}

// d (1 - log32/L) + (log r - m log N8)/L, L = log(4/eps), N8 = ceil(1/(8 eps))
inline Big construction_lower(int /*k*/, const Rat& eps, int d, int m, long long r) {
    Int N8 = apfree::rat_ceil(1 / (8 * eps));
    Big L = log(4 / to_big(eps));
    return d * (1 - log(Big(32)) / L) + (log(Big(r)) - m * log(to_big(N8))) / L;
}

// log(K^d N^(d-m) r) / log(N K), K = ceil(sqrt(d)/eps)
inline Big window_quotient(const Rat& eps, int d, int m, long long N, long long r) {
    Int K = apfree::ceil_sqrt_over(d, eps);
    return (d * log(to_big(K)) + (d - m) * log(Big(N)) + log(Big(r))) /
           (log(Big(N)) + log(to_big(K)));
}

// ln of the subexponential lower bound C N 2^(-n 2^((n-1)/2) (log2 N)^(1/n)
// + (1/(2n)) log2 log2 N)
inline Big r_lower_subexp_ln(int k, long long N, const Big& C = Big(1)) {
    int n = 0;
    while ((1LL << n) < k) ++n;
    Big l2N = log(Big(N)) / log(Big(2));
    Big expo = -n * pow(Big(2), Big(n - 1) / 2) * pow(l2N, Big(1) / n);
    if (l2N > 0) expo += (Big(1) / (2 * n)) * (log(l2N) / log(Big(2)));
    return log(C) + log(Big(N)) + log(Big(2)) * expo;
}

// coefficient of the loglog upper bound: ln(bound) = ln N - 2^-E * lnlnln N
inline Big r_upper_loglog_coeff(long long N) { return log(log(log(Big(N)))); }

// coefficient of the explicit upper bound at tolerance eps, exponent delta
inline Big explicit_upper_coeff(const Rat& eps, const Big& delta) {
    Int M = apfree::rat_ceil(1 / eps);
    Big L1 = log(to_big(M));
    Big L2 = log(L1);
    Big L3 = log(L2);
    Big num = L3 - pow(L2, -delta);
    Big den = (1 + exp(-pow(L2, 1 - delta))) * L1 + exp(-exp(L2 * (1 - pow(L2, -delta))));
    return num / den;
}

// 1 - (log(32 C) + ln2 (n 2^((n-1)/2) (log2 N8)^(1/n) + (1/(2n)) log2 log2 N8))
//     / log(4/eps)
inline Big construction_lower_subexp(int k, const Rat& eps, const Big& C = Big(1)) {
    Int N8 = apfree::rat_ceil(1 / (8 * eps));
    int n = 0;
    while ((1LL << n) < k) ++n;
    Big L = log(4 / to_big(eps));
    Big l2N8 = log(to_big(N8)) / log(Big(2));
    Big inner = n * pow(Big(2), Big(n - 1) / 2) * pow(l2N8, Big(1) / n);
    if (l2N8 > 0) inner += (Big(1) / (2 * n)) * (log(l2N8) / log(Big(2)));
    return 1 - (log(32 * C) + log(Big(2)) * inner) / L;
}

inline Big threshold_1d_lower(const Rat& eps, long long rF) {
    Int F = apfree::rat_floor(1 / (10 * eps));
    return log(Big(rF)) / log(10 * to_big(F));
}

inline Big threshold_1d_upper(const Rat& eps, long long rM) {
    Int M = apfree::rat_ceil(1 / eps);
    return (log(Big(rM) + 1) / log(to_big(M)) + Big(1) / 2) / 2;
}

// Minimal tolerance for a 1-D set under the axis frame, found by brute
// numeric search over slot assignments: for an assignment y_0..y_{k-1} and
// step D, the best centering gives s(D) = range_j(y_j - j D) / (2 D); s is
// minimized over D by golden section on a bracket derived from the data.
inline double min_eps_numeric_1d(const std::vector<double>& pts, int k) {
    const int n = static_cast<int>(pts.size());
    if (n < k) return std::numeric_limits<double>::infinity();
    std::vector<int> idx(k);
    double best = std::numeric_limits<double>::infinity();
    auto eval = [&](double D) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int j = 0; j < k; ++j) {
            double v = pts[idx[j]] - j * D;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return (hi - lo) / (2 * D);
    };
    auto search_assignment = [&]() {
        // bracket: D between (min gap)/k and span
        double span = 0;
        for (int j = 1; j < k; ++j)
            span = std::max(span, std::fabs(pts[idx[j]] - pts[idx[0]]));
        if (span == 0) return;  // repeated point: never happens for sorted distinct input
        double a = span / (4.0 * k * k), b = 4.0 * span;
        const double gr = 0.6180339887498949;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = eval(x1), f2 = eval(x2);
        for (int it = 0; it < 300; ++it) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = eval(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = eval(x2);
            }
        }
        best = std::min(best, eval((a + b) / 2));
    };
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    // enumerate ordered selections of k distinct indices
    std::vector<int> stack;
    std::vector<bool> used(n, false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(stack.size()) == k) {
            for (int j = 0; j < k; ++j) idx[j] = stack[j];
            search_assignment();
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            used[i] = true;
            stack.push_back(i);
            rec();
            stack.pop_back();
            used[i] = false;
        }
    };
    rec();
    return best;
}

}  // namespace oracles
