#pragma once

#include <string>

#include "exalg/int.hpp"

namespace exalg {

/// Arbitrary-precision rational in lowest terms: gcd(num, den) = 1, den > 0,
/// canonical zero is 0/1. Immutable value type.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}
    Rational(Int n, Int d);  // normalizes; throws DivisionByZero if d == 0
    explicit Rational(Int n) : num_(std::move(n)), den_(1) {}

    const Int& num() const noexcept { return num_; }
    const Int& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_integer() const noexcept { return den_.is_one(); }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational inv() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(long e) const;

    int cmp(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

    double to_double() const;
    std::string str() const;  // "a" or "a/b"

    void encode(std::string& out) const {
        num_.encode(out);
        den_.encode(out);
    }
    static Rational decode(const std::string& in, size_t& pos) {
        Int n = Int::decode(in, pos);
        Int d = Int::decode(in, pos);
        return Rational(std::move(n), std::move(d));
    }

  private:
    Int num_, den_;

    struct raw_tag {};
    Rational(Int n, Int d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace exalg
