#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace fps {

using Integer = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, always in canonical form:
/// gcd(|numerator|, denominator) = 1, denominator > 0, zero is 0/1.
/// All arithmetic is exact; nothing in this library rounds.
class Rational {
  public:
    Rational() = default;  // zero
    Rational(int n) : q_(n) {}
    Rational(long long n) : q_(n) {}
    explicit Rational(Integer n) : q_(std::move(n)) {}
    Rational(long long num, long long den);
    Rational(Integer num, Integer den);
    Rational(double) = delete;  // no silent float ingestion

    Integer numerator() const;
    Integer denominator() const;

    bool is_zero() const { return q_.is_zero(); }
    int sign() const { return q_.sign(); }

    /// Canonical text form "p/q", with "/q" omitted when q = 1: "-1/30", "0", "3".
    std::string str() const;
    /// Parses the canonical text form. Rejects anything else.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // NotInvertibleError on zero divisor

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

  private:
    boost::multiprecision::cpp_rational q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fps
