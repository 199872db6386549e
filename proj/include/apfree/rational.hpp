#pragma once

// Exact arithmetic foundation: arbitrary-precision integers and rationals
// plus the handful of exact helpers (floor/ceil, sqrt ceilings, parsing)
// the rest of the library leans on.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apfree {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// floor(a/b) for integers, b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(rat_num(r), rat_den(r)); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline long long to_ll(const Int& n) {
    if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
        throw ParameterError("integer out of machine range: " + n.str());
    return n.convert_to<long long>();
}

// Smallest integer n with n >= sqrt(d)/q for rational q > 0, decided exactly:
// n >= sqrt(d)/q  <=>  (n*q)^2 >= d (both sides nonnegative).
inline Int ceil_sqrt_over(const Int& d, const Rat& q) {
    if (d < 0 || q <= 0) throw ParameterError("ceil_sqrt_over: need d >= 0, q > 0");
    if (d == 0) return 0;
    Int n = Int(std::max(0.0, std::floor(std::sqrt(to_double(d)) / to_double(q)))) - 2;
    if (n < 0) n = 0;
    auto ok = [&](const Int& m) {
        Rat mq = Rat(m) * q;
        return mq >= 0 && mq * mq >= d;
    };
    while (!ok(n)) ++n;
    return n;
}

// "p/q", "-3", "0.125", "2e-3" -> exact rational.
inline Rat parse_rational(const std::string& s) {
    auto fail = [&]() -> Rat { throw ParameterError("cannot parse rational: '" + s + "'"); };
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) return fail();
    if (auto slash = t.find('/'); slash != std::string::npos) {
        std::string p = t.substr(0, slash), q = t.substr(slash + 1);
        if (p.empty() || q.empty()) return fail();
        try {
            Int num(p), den(q);
            if (den == 0) throw ParameterError("zero denominator: '" + s + "'");
            return Rat(num, den);
        } catch (const std::runtime_error&) {
            return fail();
        }
    }
    // [sign] digits [. digits] [e [sign] digits]
    std::size_t i = 0;
    bool neg = false;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = (t[i++] == '-');
    std::string int_part, frac_part, exp_part;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) int_part += t[i++];
    if (i < t.size() && t[i] == '.') {
        ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) frac_part += t[i++];
    }
    long long e10 = 0;
    if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) eneg = (t[i++] == '-');
        if (i >= t.size()) return fail();
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
            e10 = e10 * 10 + (t[i++] - '0');
        if (eneg) e10 = -e10;
    }
    if (i != t.size() || (int_part.empty() && frac_part.empty())) return fail();
    Int num(int_part.empty() ? "0" : int_part);
    for (char c : frac_part) num = num * 10 + (c - '0');
    Int den = 1;
    long long shift = e10 - static_cast<long long>(frac_part.size());
    for (long long j = 0; j < shift; ++j) num *= 10;
    for (long long j = 0; j < -shift; ++j) den *= 10;
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

inline std::string format_rational(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace apfree
