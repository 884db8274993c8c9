#pragma once

#include <complex>
#include <optional>
#include <string>

#include "exalg/rational.hpp"

namespace exalg {

/// Element of Q or of a quadratic extension Q(sqrt(d)): value = a + b*sqrt(d).
///
/// Canonical form: b == 0 implies d == 0 (plain rational), so equal values
/// always have identical representations. d is carried per value; two values
/// with distinct nonzero d never combine (FieldMismatch), while rationals
/// promote into any extension.
class Scalar {
  public:
    Scalar() : d_(0) {}
    Scalar(long long n) : a_(n), d_(0) {}
    Scalar(int n) : a_(n), d_(0) {}
    Scalar(Rational r) : a_(std::move(r)), d_(0) {}
    Scalar(long long num, long long den) : a_(num, den), d_(0) {}

    /// a + b*sqrt(d); canonicalizes b == 0. d must be a non-square (not 0, 1).
    static Scalar quad(Rational a, Rational b, long long d);
    /// sqrt(d) itself (b = 1).
    static Scalar root_of(long long d) { return quad(Rational(0), Rational(1), d); }
    /// The imaginary unit, d = -1.
    static Scalar i() { return root_of(-1); }

    const Rational& rat_part() const noexcept { return a_; }
    const Rational& quad_part() const noexcept { return b_; }
    long long disc() const noexcept { return d_; }

    bool is_rational() const noexcept { return d_ == 0; }
    bool is_zero() const noexcept { return d_ == 0 && a_.is_zero(); }
    bool is_one() const noexcept { return d_ == 0 && a_.is_one(); }
    /// True unless the value has a nonzero imaginary component (d < 0).
    bool is_real() const noexcept { return d_ >= 0; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar inv() const;

    /// Field (Galois) conjugate a - b*sqrt(d), for any d.
    Scalar conj() const;
    /// Complex conjugate: flips the sqrt part only when d < 0 (real values
    /// are their own complex conjugate).
    Scalar cconj() const { return d_ < 0 ? conj() : *this; }
    /// |x|^2 as a rational, for d < 0 values.
    Rational norm_sq_complex() const;

    bool operator==(const Scalar& y) const { return d_ == y.d_ && a_ == y.a_ && b_ == y.b_; }
    bool operator!=(const Scalar& y) const { return !(*this == y); }

    /// Sign of the real value under the principal embedding sqrt(d) > 0.
    /// Throws NotReal for values with d < 0.
    int sign() const;
    /// Sign under the other embedding sqrt(d) -> -sqrt(d).
    int sign_conj() const { return conj().sign(); }
    Scalar abs() const { return sign() < 0 ? -*this : *this; }
    int cmp(const Scalar& y) const { return (*this - y).sign(); }

    /// Exact square root within Q or Q(sqrt(d)) if one exists.
    /// field_hint: ambient discriminant to try for plain rationals (so that
    /// sqrt(1/2) can resolve to (1/2)*sqrt(2) inside a d=2 computation).
    /// Throws NegativeInput when the value is provably negative (principal
    /// embedding) or not real.
    std::optional<Scalar> sqrt_in_field(long long field_hint = 0) const;

    /// Principal-embedding value; throws NotReal when d < 0.
    double to_double() const;
    /// Real/imaginary pair (exact for the real axis when d >= 0).
    std::complex<double> to_complex() const;

    /// Canonical text form per the file-format grammar:
    ///   "a", "a/b", "a/b+c/e*sqrt(D)", "c/e*sqrt(D)", with '-' prefixes.
    std::string str() const;
    static Scalar parse(const std::string& text);

    void encode(std::string& out) const;
    static Scalar decode(const std::string& in, size_t& pos);
    size_t hash() const;

  private:
    Rational a_, b_;
    long long d_;

    // Joint discriminant of two operands; throws FieldMismatch.
    static long long join(const Scalar& x, const Scalar& y);
};

std::ostream& operator<<(std::ostream& os, const Scalar& v);

/// sqrt(n) for a nonnegative integer as s*sqrt(d), extracting square factors
/// by bounded trial division plus a perfect-square check on the remainder.
/// Returns {s, d}; d == 1 means the root is exact. nullopt when the remainder
/// is too large to carry as a discriminant (callers fall back to floats).
std::optional<std::pair<Int, long long>> squarefree_split(const Int& n);

}  // namespace exalg
