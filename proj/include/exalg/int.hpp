#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "exalg/error.hpp"

namespace exalg {

/// Signed integer with an int64 fast path and a GMP tier for values that
/// do not fit. Values are immutable and canonical: the big tier is used
/// only when the value is outside the int64 range, so equal values always
/// have equal representations.
class Int {
  public:
    Int() noexcept : v_(0) {}
    Int(long long v) noexcept : v_(v) {}
    Int(int v) noexcept : v_(v) {}
    explicit Int(const std::string& decimal);

    static Int from_mpz(const mpz_class& z);

    bool is_small() const noexcept { return big_ == nullptr; }
    long long small() const noexcept { return v_; }
    mpz_class to_mpz() const;

    bool is_zero() const noexcept { return big_ == nullptr && v_ == 0; }
    bool is_one() const noexcept { return big_ == nullptr && v_ == 1; }
    int sign() const noexcept;
    bool is_even() const noexcept;

    Int operator-() const;
    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);

    /// Truncated division with remainder (sign of remainder follows a).
    static void divrem(const Int& a, const Int& b, Int& q, Int& r);
    /// Exact division; undefined if b does not divide a.
    Int divexact(const Int& b) const;

    static Int gcd(const Int& a, const Int& b);  // nonnegative
    static Int lcm(const Int& a, const Int& b);
    Int abs() const;
    Int pow(unsigned long e) const;

    /// If x >= 0 is a perfect square, set root = floor sqrt (exact) and
    /// return true; otherwise return false.
    static bool sqrt_exact(const Int& x, Int& root);

    double to_double() const;
    std::string str() const;

    int cmp(const Int& o) const;
    bool operator==(const Int& o) const { return cmp(o) == 0; }
    bool operator!=(const Int& o) const { return cmp(o) != 0; }
    bool operator<(const Int& o) const { return cmp(o) < 0; }
    bool operator<=(const Int& o) const { return cmp(o) <= 0; }
    bool operator>(const Int& o) const { return cmp(o) > 0; }
    bool operator>=(const Int& o) const { return cmp(o) >= 0; }

    /// Appends a canonical byte encoding (used for hashing group elements).
    void encode(std::string& out) const;
    static Int decode(const std::string& in, size_t& pos);

  private:
    long long v_;
    std::shared_ptr<const mpz_class> big_;

    static Int make(mpz_class z);  // demotes to the small tier when possible
};

std::ostream& operator<<(std::ostream& os, const Int& v);

}  // namespace exalg
