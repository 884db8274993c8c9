#include "exalg/int.hpp"

#include <climits>
#include <ostream>

namespace exalg {

const char* err_name(Err e) {
    switch (e) {
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::FieldMismatch: return "FieldMismatch";
        case Err::NegativeInput: return "NegativeInput";
        case Err::NotReal: return "NotReal";
        case Err::DimensionMismatch: return "DimensionMismatch";
        case Err::NotSquare: return "NotSquare";
        case Err::NotSymmetric: return "NotSymmetric";
        case Err::NotRealSymmetric: return "NotRealSymmetric";
        case Err::Singular: return "Singular";
        case Err::WrongDimension: return "WrongDimension";
        case Err::WrongQubitCount: return "WrongQubitCount";
        case Err::NotNormalized: return "NotNormalized";
        case Err::PhaseOutOfRange: return "PhaseOutOfRange";
        case Err::EmptySubset: return "EmptySubset";
        case Err::NegativeEigenvalue: return "NegativeEigenvalue";
        case Err::NotEigenvector: return "NotEigenvector";
        case Err::UnknownConstant: return "UnknownConstant";
        case Err::LimitExceeded: return "LimitExceeded";
        case Err::OrbitCapExceeded: return "OrbitCapExceeded";
        case Err::NotFinite: return "NotFinite";
        case Err::MaxDimExceeded: return "MaxDimExceeded";
        case Err::NotClosed: return "NotClosed";
        case Err::NotCommuting: return "NotCommuting";
        case Err::NotDiagonalizable: return "NotDiagonalizable";
        case Err::ParseError: return "ParseError";
        case Err::Cancelled: return "Cancelled";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

Int Int::make(mpz_class z) {
    Int r;
    if (z.fits_slong_p()) {
        r.v_ = z.get_si();
    } else {
        r.v_ = 0;
        r.big_ = std::make_shared<const mpz_class>(std::move(z));
    }
    return r;
}

Int::Int(const std::string& decimal) {
    mpz_class z;
    if (z.set_str(decimal, 10) != 0) fail(Err::ParseError, "bad integer literal '" + decimal + "'");
    *this = make(std::move(z));
}

Int Int::from_mpz(const mpz_class& z) { return make(z); }

mpz_class Int::to_mpz() const {
    if (big_) return *big_;
    mpz_class z;
    // set via long; long long == long on this platform family
    z = static_cast<long>(v_);
    return z;
}

int Int::sign() const noexcept {
    if (big_) return mpz_sgn(big_->get_mpz_t());
    return v_ > 0 ? 1 : (v_ < 0 ? -1 : 0);
}

bool Int::is_even() const noexcept {
    if (big_) return mpz_even_p(big_->get_mpz_t()) != 0;
    return (v_ & 1) == 0;
}

Int Int::operator-() const {
    if (!big_ && v_ != LLONG_MIN) return Int(-v_);
    return make(-to_mpz());
}

Int operator+(const Int& a, const Int& b) {
    if (a.is_small() && b.is_small()) {
        long long r;
        if (!__builtin_add_overflow(a.v_, b.v_, &r)) return Int(r);
    }
    return Int::make(a.to_mpz() + b.to_mpz());
}

Int operator-(const Int& a, const Int& b) {
    if (a.is_small() && b.is_small()) {
        long long r;
        if (!__builtin_sub_overflow(a.v_, b.v_, &r)) return Int(r);
    }
    return Int::make(a.to_mpz() - b.to_mpz());
}

Int operator*(const Int& a, const Int& b) {
    if (a.is_small() && b.is_small()) {
        long long r;
        if (!__builtin_mul_overflow(a.v_, b.v_, &r)) return Int(r);
    }
    return Int::make(a.to_mpz() * b.to_mpz());
}

void Int::divrem(const Int& a, const Int& b, Int& q, Int& r) {
    if (b.is_zero()) fail(Err::DivisionByZero, "integer division by zero");
    if (a.is_small() && b.is_small() && !(a.v_ == LLONG_MIN && b.v_ == -1)) {
        q = Int(a.v_ / b.v_);
        r = Int(a.v_ % b.v_);
        return;
    }
    mpz_class qq, rr;
    mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    q = make(std::move(qq));
    r = make(std::move(rr));
}

Int Int::divexact(const Int& b) const {
    Int q, r;
    divrem(*this, b, q, r);
    return q;
}

Int Int::gcd(const Int& a, const Int& b) {
    if (a.is_small() && b.is_small()) {
        unsigned long long x = a.v_ < 0 ? 0ULL - (unsigned long long)a.v_ : (unsigned long long)a.v_;
        unsigned long long y = b.v_ < 0 ? 0ULL - (unsigned long long)b.v_ : (unsigned long long)b.v_;
        while (y != 0) {
            unsigned long long t = x % y;
            x = y;
            y = t;
        }
        if (x <= (unsigned long long)LLONG_MAX) return Int((long long)x);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return make(std::move(g));
}

Int Int::lcm(const Int& a, const Int& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    Int g = gcd(a, b);
    return (a.abs().divexact(g)) * b.abs();
}

Int Int::abs() const { return sign() < 0 ? -*this : *this; }

Int Int::pow(unsigned long e) const {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), to_mpz().get_mpz_t(), e);
    return make(std::move(r));
}

bool Int::sqrt_exact(const Int& x, Int& root) {
    if (x.sign() < 0) return false;
    mpz_class z = x.to_mpz();
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return false;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    root = make(std::move(r));
    return true;
}

double Int::to_double() const {
    if (!big_) return static_cast<double>(v_);
    return big_->get_d();
}

std::string Int::str() const {
    if (!big_) return std::to_string(v_);
    return big_->get_str();
}

int Int::cmp(const Int& o) const {
    if (!big_ && !o.big_) return v_ < o.v_ ? -1 : (v_ > o.v_ ? 1 : 0);
    // Canonical form: a big value never equals a small one.
    int c = mpz_cmp(to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

// LEB128 varints with a zigzag map keep canonical keys compact: typical
// small entries cost one or two bytes.
void put_varint(std::string& out, unsigned long long u) {
    while (u >= 0x80) {
        out.push_back(char(u | 0x80));
        u >>= 7;
    }
    out.push_back(char(u));
}

unsigned long long get_varint(const std::string& in, size_t& pos) {
    unsigned long long u = 0;
    int shift = 0;
    for (;;) {
        if (pos >= in.size()) fail(Err::Internal, "truncated varint");
        unsigned char byte = (unsigned char)in[pos++];
        u |= (unsigned long long)(byte & 0x7F) << shift;
        if (!(byte & 0x80)) return u;
        shift += 7;
    }
}

unsigned long long zigzag(long long v) {
    return ((unsigned long long)v << 1) ^ (unsigned long long)(v >> 63);
}

long long unzigzag(unsigned long long u) {
    return (long long)(u >> 1) ^ -(long long)(u & 1);
}

}  // namespace

void Int::encode(std::string& out) const {
    // low bit of the first varint tags the tier: 0 small, 1 big
    if (!big_) {
        put_varint(out, zigzag(v_) << 1);
        return;
    }
    size_t count = 0;
    void* raw = mpz_export(nullptr, &count, -1, 1, 0, 0, big_->get_mpz_t());
    put_varint(out, ((unsigned long long)count << 1) | 1);
    out.push_back(big_->get_mpz_t()->_mp_size > 0 ? '\x00' : '\x01');
    out.append(static_cast<char*>(raw), count);
    free(raw);
}

Int Int::decode(const std::string& in, size_t& pos) {
    unsigned long long head = get_varint(in, pos);
    if ((head & 1) == 0) return Int(unzigzag(head >> 1));
    size_t len = size_t(head >> 1);
    if (pos + 1 + len > in.size()) fail(Err::Internal, "truncated big-integer encoding");
    bool negative = in[pos++] != '\x00';
    mpz_class z;
    mpz_import(z.get_mpz_t(), len, -1, 1, 0, 0, in.data() + pos);
    pos += len;
    if (negative) z = -z;
    return make(std::move(z));
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

}  // namespace exalg
