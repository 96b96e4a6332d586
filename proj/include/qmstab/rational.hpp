#pragma once

// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and rationals, plus the small helpers (printing, parsing, lcm
// scaling) that certificates are built from.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmstab {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in rings of different dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An operation was handed a value outside its domain (zero polynomial,
/// empty list, degenerate box, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A certificate failed its own re-verification before being emitted.
/// Seeing this means a bug in the library, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline BigInt numerator(const Rational& q) { return mp::numerator(q); }
inline BigInt denominator(const Rational& q) { return mp::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const BigInt& q) { return q.sign(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return mp::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return mp::abs(a / gcd(a, b) * b);
}

/// "p" for integers and "p/q" otherwise; this is also the JSON wire form.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

/// Parses "[-]p" or "[-]p/q" with q > 0. Throws DomainError otherwise.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
        throw DomainError("not a rational literal: '" + std::string(text) + "'");
    BigInt d(std::string{den});
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational q(BigInt(std::string{num}), d);
    return negative ? Rational(-q) : q;
}

/// Smallest positive integer L such that L*v is integral; 1 for an empty vector.
inline BigInt common_denominator(const std::vector<Rational>& v) {
    BigInt l = 1;
    for (const auto& q : v) l = lcm(l, denominator(q));
    return l;
}

/// Scales v to the primitive integer vector on the same ray. Zero stays zero.
inline std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
    const BigInt l = common_denominator(v);
    std::vector<BigInt> out;
    out.reserve(v.size());
    BigInt g = 0;
    for (const auto& q : v) {
        out.push_back(numerator(q) * (l / denominator(q)));
        g = gcd(g, mp::abs(out.back()));
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

/// Exact b^e for integral e of either sign; b != 0 when e < 0.
inline Rational power(const Rational& b, std::int64_t e) {
    if (e < 0) {
        if (b == 0) throw DomainError("zero raised to a negative power");
        return Rational(1) / power(b, -e);
    }
    Rational result = 1;
    Rational base = b;
    auto k = static_cast<std::uint64_t>(e);
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base *= base;
    }
    return result;
}

}  // namespace qmstab
