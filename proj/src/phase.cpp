#include "orbi/phase.hpp"

#include <cmath>
#include <numeric>

#include "orbi/error.hpp"

namespace orbi {

namespace {

using i128 = __int128;

std::int64_t checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw DomainError("PhaseOverflow");
    return std::int64_t(v);
}

i128 gcd128(i128 a, i128 b) {
    while (b) { i128 t = a % b; a = b; b = t; }
    return a;
}

// Reduce n/d mod 1 into [0,1) with gcd(n,d)=1, d>0. The int64 fast path
// carries virtually all traffic; 128-bit division is a library call.
void reduce_mod1(i128 n, i128 d, std::int64_t &num, std::int64_t &den) {
    if (d == 0) throw DomainError("ZeroDenominator");
    if (d < 0) { n = -n; d = -d; }
    if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
        std::int64_t a = std::int64_t(n) % std::int64_t(d);
        if (a < 0) a += std::int64_t(d);
        std::int64_t g = a == 0 ? std::int64_t(d) : std::gcd(a, std::int64_t(d));
        num = a / g;
        den = std::int64_t(d) / g;
        return;
    }
    n %= d;
    if (n < 0) n += d;
    i128 g = n == 0 ? d : gcd128(n, d);
    num = checked(n / g);
    den = checked(d / g);
}

} // namespace

Phase::Phase(std::int64_t n, std::int64_t d) {
    reduce_mod1(n, d, num, den);
}

Phase Phase::operator+(const Phase &o) const {
    Phase r;
    reduce_mod1(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den,
                r.num, r.den);
    return r;
}

Phase Phase::operator-(const Phase &o) const { return *this + (-o); }

Phase Phase::operator-() const {
    Phase r;
    if (num != 0) { r.num = den - num; r.den = den; }
    return r;
}

Phase Phase::times(std::int64_t n) const {
    Phase r;
    reduce_mod1(i128(num) * n, i128(den), r.num, r.den);
    return r;
}

bool Phase::operator<(const Phase &o) const {
    return i128(num) * o.den < i128(o.num) * den;
}

std::complex<double> Phase::eval() const {
    double x = 2.0 * M_PI * double(num) / double(den);
    return {std::cos(x), std::sin(x)};
}

std::string Phase::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Phase Phase::parse(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Phase(std::stoll(s), 1);
    return Phase(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DomainError("ZeroDenominator");
    if (d < 0) { n = -n; d = -d; }
    if (n <= 0) throw DomainError("NonPositiveRadicand");
    std::int64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

Rational Rational::operator*(const Rational &o) const {
    // Cross-reduce before multiplying to keep intermediates small.
    std::int64_t g1 = std::gcd(num, o.den), g2 = std::gcd(o.num, den);
    i128 n = i128(num / g1) * (o.num / g2);
    i128 d = i128(den / g2) * (o.den / g1);
    if (n > INT64_MAX || d > INT64_MAX) throw DomainError("RationalOverflow");
    return Rational(std::int64_t(n), std::int64_t(d));
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(std::stoll(s), 1);
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
}

FValue fvalue_mul(const FValue &a, const FValue &b) {
    return FValue(a.phase + b.phase, a.radicand * b.radicand);
}

std::complex<double> fvalue_eval(const FValue &a, int precision_bits) {
    // double precision is the only supported target; higher requests would
    // silently miss their error bound
    if (precision_bits < 53)
        throw DomainError("PrecisionTooLow");
    if (precision_bits > 53)
        throw DomainError("PrecisionUnsupported", {{"bits", precision_bits}});
    return std::sqrt(a.radicand.value()) * a.phase.eval();
}

} // namespace orbi
