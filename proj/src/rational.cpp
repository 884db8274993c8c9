#include "exalg/rational.hpp"

#include <ostream>

namespace exalg {

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) fail(Err::DivisionByZero, "rational with zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = Int(1);
        return;
    }
    Int g = Int::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
}

Rational Rational::operator-() const { return Rational(-num_, den_, raw_tag{}); }

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    Int g = Int::gcd(a.den_, b.den_);
    if (g.is_one()) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    Int bd = b.den_.divexact(g);
    Int t = a.num_ * bd + b.num_ * a.den_.divexact(g);
    return Rational(std::move(t), a.den_ * bd);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    // Cross-reduce before multiplying; the result is then already in lowest terms.
    Int g1 = Int::gcd(a.num_, b.den_);
    Int g2 = Int::gcd(b.num_, a.den_);
    Int n = a.num_.divexact(g1) * b.num_.divexact(g2);
    Int d = a.den_.divexact(g2) * b.den_.divexact(g1);
    return Rational(std::move(n), std::move(d), Rational::raw_tag{});
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(Err::DivisionByZero, "rational division by zero");
    return a * b.inv();
}

Rational Rational::inv() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    if (num_.sign() < 0) return Rational(-den_, -num_, raw_tag{});
    return Rational(den_, num_, raw_tag{});
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    return Rational(base.num_.pow(n), base.den_.pow(n), raw_tag{});
}

int Rational::cmp(const Rational& o) const {
    if (den_ == o.den_) return num_.cmp(o.num_);
    return (num_ * o.den_).cmp(o.num_ * den_);
}

double Rational::to_double() const {
    if (num_.is_small() && den_.is_small())
        return static_cast<double>(num_.small()) / static_cast<double>(den_.small());
    mpq_class q(num_.to_mpz(), den_.to_mpz());
    return q.get_d();
}

std::string Rational::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace exalg
