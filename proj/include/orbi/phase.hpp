#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace orbi {

// Element of Q/Z, stored as a reduced fraction num/den with 0 <= num < den.
// Phase x stands for the unit complex number e^{2*pi*i*x}; addition of
// phases corresponds to multiplication in C^x.
struct Phase {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Phase() = default;
    Phase(std::int64_t n, std::int64_t d);

    static Phase zero() { return Phase(); }

    bool is_zero() const { return num == 0; }

    Phase operator+(const Phase &o) const;
    Phase operator-(const Phase &o) const;
    Phase operator-() const;
    Phase times(std::int64_t n) const;

    bool operator==(const Phase &o) const { return num == o.num && den == o.den; }
    bool operator!=(const Phase &o) const { return !(*this == o); }
    // Order by value in [0,1); used for deterministic tie-breaking.
    bool operator<(const Phase &o) const;

    std::complex<double> eval() const;

    std::string str() const; // "num/den"
    static Phase parse(const std::string &s);
};

// Positive rational, reduced. Used for F-symbol radicands and for the
// Q-valued dimensions of sheaves.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    Rational operator*(const Rational &o) const;
    bool operator==(const Rational &o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational &o) const { return !(*this == o); }

    double value() const { return double(num) / double(den); }
    std::string str() const;
    static Rational parse(const std::string &s);
};

// Value sqrt(radicand) * e^{2*pi*i*phase}. Radicands are never collapsed
// (sqrt(1/4) stays as radicand 1/4): a nonzero complex number has a unique
// representation of this form, so equality is componentwise.
struct FValue {
    Phase phase;
    Rational radicand;

    FValue() = default;
    FValue(Phase p, Rational r) : phase(p), radicand(r) {}
    static FValue one() { return FValue(); }

    bool operator==(const FValue &o) const {
        return phase == o.phase && radicand == o.radicand;
    }
    bool operator!=(const FValue &o) const { return !(*this == o); }
};

FValue fvalue_mul(const FValue &a, const FValue &b);
// precision_bits >= 53; the double implementation is exact to ~2^-52
// relative error, which covers every requested precision up to 53 bits.
std::complex<double> fvalue_eval(const FValue &a, int precision_bits = 53);

inline std::complex<double> eval(const Phase &p) { return p.eval(); }

} // namespace orbi
