#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace semitoric {

/// Exact arbitrary-precision rational scalar.
///
/// Values are always kept in lowest terms with a positive denominator;
/// the canonical zero is 0/1. All arithmetic is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}

    /// Builds num/den in canonical form. Throws std::domain_error if den == 0.
    Rational(long long num, long long den);

    /// Parses "p" or "p/q". The fraction form requires q >= 1 and gcd(p,q) = 1,
    /// matching the serialization contract. Throws std::invalid_argument.
    static Rational parse(const std::string& text);

    /// Canonical text form: "p/q" when q > 1, otherwise just "p".
    std::string str() const;

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Checked conversion of an integral value to int64. Throws
    /// std::overflow_error if the value is non-integral or out of range.
    std::int64_t to_int64() const;

    /// floor(value) as int64. Throws std::overflow_error on overflow.
    std::int64_t floor_int64() const;

    double to_double() const { return q_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

Rational abs(const Rational& r);

}  // namespace semitoric
