#include "exalg/scalar.hpp"

#include <cmath>
#include <ostream>

namespace exalg {

Scalar Scalar::quad(Rational a, Rational b, long long d) {
    Scalar s;
    s.a_ = std::move(a);
    if (b.is_zero()) return s;
    if (d == 0 || d == 1) fail(Err::FieldMismatch, "discriminant must be a non-square integer");
    if (d > 1) {
        long long r = std::llround(std::sqrt(static_cast<double>(d)));
        if (r * r == d)
            fail(Err::FieldMismatch, "discriminant " + std::to_string(d) + " is a perfect square");
    }
    s.b_ = std::move(b);
    s.d_ = d;
    return s;
}

long long Scalar::join(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    fail(Err::FieldMismatch, "cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                                 std::to_string(y.d_) + ")");
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.a_ = -a_;
    s.b_ = -b_;
    s.d_ = b_.is_zero() ? 0 : d_;
    return s;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    long long d = Scalar::join(x, y);
    return Scalar::quad(x.a_ + y.a_, x.b_ + y.b_, d == 0 ? -1 : d);
    // (d passed as -1 only when both operands rational, in which case b == 0
    //  and quad() canonicalizes back to a plain rational)
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    long long d = Scalar::join(x, y);
    if (d == 0) {
        Scalar s;
        s.a_ = x.a_ * y.a_;
        return s;
    }
    Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
    Rational b = x.a_ * y.b_ + x.b_ * y.a_;
    return Scalar::quad(std::move(a), std::move(b), d);
}

Scalar Scalar::inv() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    if (d_ == 0) return Scalar(a_.inv());
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // because d is not a square.
    Rational n = a_ * a_ - b_ * b_ * Rational(d_);
    if (n.is_zero()) fail(Err::Internal, "zero norm in quadratic field");
    return quad(a_ / n, -b_ / n, d_);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) fail(Err::DivisionByZero, "scalar division by zero");
    return x * y.inv();
}

Scalar Scalar::conj() const {
    if (d_ == 0) return *this;
    return quad(a_, -b_, d_);
}

Rational Scalar::norm_sq_complex() const {
    if (d_ >= 0) fail(Err::Internal, "norm_sq_complex on a real-disc value");
    return a_ * a_ + b_ * b_ * Rational(-d_);
}

int Scalar::sign() const {
    if (d_ == 0) return a_.sign();
    if (d_ < 0) fail(Err::NotReal, "sign of a non-real value");
    int sa = a_.sign(), sb = b_.sign();
    if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? 0 : 1;
    if (sa <= 0 && sb <= 0) return -1;
    // Opposite signs: compare a^2 against b^2 d.
    int c = (a_ * a_).cmp(b_ * b_ * Rational(d_));
    if (sb > 0) return c < 0 ? 1 : (c > 0 ? -1 : 0);  // a < 0 < b
    return c > 0 ? 1 : (c < 0 ? -1 : 0);              // b < 0 < a
}

namespace {

// Exact square root of a nonnegative rational, if it is one.
std::optional<Rational> rational_sqrt(const Rational& x) {
    Int rn, rd;
    if (!Int::sqrt_exact(x.num(), rn)) return std::nullopt;
    if (!Int::sqrt_exact(x.den(), rd)) return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace

std::optional<std::pair<Int, long long>> squarefree_split(const Int& n) {
    if (n.sign() < 0) fail(Err::NegativeInput, "squarefree_split of a negative integer");
    if (n.is_zero()) return {{Int(0), 1}};
    Int root;
    if (Int::sqrt_exact(n, root)) return {{root, 1}};

    if (n.is_small()) {
        unsigned long long rest = (unsigned long long)n.small();
        unsigned long long s = 1;
        for (unsigned long long p = 2; p <= 10000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
            while (rest % (p * p) == 0) {
                s *= p;
                rest /= (p * p);
            }
        }
        // The remainder may still hide the square of a prime above the trial
        // bound; look for it behind each small square-free cofactor.
        auto perfect = [](unsigned long long v, unsigned long long& root) {
            unsigned long long r = (unsigned long long)std::llround(std::sqrt((double)v));
            for (unsigned long long c = r > 1 ? r - 1 : 0; c <= r + 1; c++)
                if (c * c == v) {
                    root = c;
                    return true;
                }
            return false;
        };
        for (unsigned long long cof = 1; cof <= 1000 && cof <= rest; cof++) {
            unsigned long long root;
            if (rest % cof == 0 && perfect(rest / cof, root)) {
                s *= root;
                rest = cof;
                break;
            }
        }
        if (rest == 1) return {{Int((long long)s), 1}};
        if (rest > (unsigned long long)(1e15)) return std::nullopt;
        return {{Int((long long)s), (long long)rest}};
    }

    // Big tier: pull out small square factors, then require the remainder to
    // be a perfect square or to fit the small tier.
    Int s(1), rest = n, q, r;
    for (long long p = 2; p <= 100; p += (p == 2 ? 1 : 2)) {
        Int p2(p * p);
        for (;;) {
            Int::divrem(rest, p2, q, r);
            if (!r.is_zero()) break;
            s = s * Int(p);
            rest = q;
        }
    }
    if (Int::sqrt_exact(rest, root)) return {{s * root, 1}};
    if (rest.is_small()) {
        auto inner = squarefree_split(rest);
        if (!inner) return std::nullopt;
        return {{s * inner->first, inner->second}};
    }
    return std::nullopt;
}

std::optional<Scalar> Scalar::sqrt_in_field(long long field_hint) const {
    if (d_ < 0) fail(Err::NegativeInput, "square root of a non-real value");
    if (d_ == 0) {
        if (a_.sign() < 0) fail(Err::NegativeInput, "square root of a negative value");
        if (auto r = rational_sqrt(a_)) return Scalar(*r);
        if (field_hint > 0) {
            // try u*sqrt(hint): need x/hint to be a rational square
            if (auto u = rational_sqrt(a_ / Rational(field_hint)))
                return quad(Rational(0), *u, field_hint);
        }
        return std::nullopt;
    }
    int s_main = sign();
    if (s_main < 0) fail(Err::NegativeInput, "square root of a negative value");
    if (sign_conj() < 0) return std::nullopt;  // not totally positive: no root in the field
    // Solve (u + v*sqrt(d))^2 = a + b*sqrt(d): u^2 + v^2 d = a, 2uv = b.
    Rational disc = a_ * a_ - b_ * b_ * Rational(d_);
    auto r = rational_sqrt(disc);
    if (!r) return std::nullopt;
    Rational half(1, 2);
    for (const Rational& cand : {(a_ + *r) * half, (a_ - *r) * half}) {
        if (cand.sign() <= 0) continue;
        auto u = rational_sqrt(cand);
        if (!u) continue;
        Rational v = b_ / (*u * Rational(2));
        Scalar root = quad(*u, v, d_);
        if (root * root == *this) return root.sign() >= 0 ? root : -root;
    }
    // b != 0 with u = 0 would force b = 0; nothing else to try.
    return std::nullopt;
}

double Scalar::to_double() const {
    if (d_ < 0) fail(Err::NotReal, "to_double of a non-real value");
    if (d_ == 0) return a_.to_double();
    if (a_.sign() * b_.sign() >= 0)
        return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
    // Opposite signs cancel; route through the conjugate so the relative
    // error stays at a few ulp: a + b sqrt(d) = (a^2 - b^2 d) / (a - b sqrt(d)).
    Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    double denom = a_.to_double() - b_.to_double() * std::sqrt(static_cast<double>(d_));
    return norm.to_double() / denom;
}

std::complex<double> Scalar::to_complex() const {
    if (d_ >= 0) return {to_double(), 0.0};
    return {a_.to_double(), b_.to_double() * std::sqrt(static_cast<double>(-d_))};
}

std::string Scalar::str() const {
    if (d_ == 0) return a_.str();
    std::string out;
    std::string bterm = b_.abs().str() + "*sqrt(" + std::to_string(d_) + ")";
    if (a_.is_zero()) {
        if (b_.sign() < 0) out.push_back('-');
        out += bterm;
    } else {
        out = a_.str();
        out.push_back(b_.sign() < 0 ? '-' : '+');
        out += bterm;
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() != c) return false;
        i++;
        return true;
    }
    [[noreturn]] void die(const std::string& what) const {
        fail(Err::ParseError, what + " at position " + std::to_string(i) + " in '" + s + "'");
    }
};

Int parse_int(Cursor& c) {
    std::string digits;
    if (c.eat('-')) digits.push_back('-');
    while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) digits.push_back(c.s[c.i++]);
    if (digits.empty() || digits == "-") c.die("expected integer");
    return Int(digits);
}

Rational parse_rational(Cursor& c) {
    Int n = parse_int(c);
    if (c.eat('/')) return Rational(n, parse_int(c));
    return Rational(n);
}

// term := rational ['*' sqrt] | ['-'] sqrt, where sqrt := "sqrt(" int ")"
struct Term {
    Rational coeff;
    long long d = 0;  // 0: plain rational term
};

Term parse_term(Cursor& c) {
    Term t;
    if (c.s.compare(c.i, 5, "sqrt(") == 0) {
        t.coeff = Rational(1);
    } else if (c.s.compare(c.i, 6, "-sqrt(") == 0) {
        t.coeff = Rational(-1);
        c.i++;
    } else {
        t.coeff = parse_rational(c);
        if (!c.eat('*')) return t;
    }
    if (c.s.compare(c.i, 5, "sqrt(") != 0) c.die("expected sqrt(");
    c.i += 5;
    Int d = parse_int(c);
    if (!c.eat(')')) c.die("expected )");
    if (!d.is_small()) c.die("discriminant out of range");
    t.d = d.small();
    return t;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Cursor c{text};
    Term first = parse_term(c);
    Rational a, b;
    long long d = 0;
    auto apply = [&](const Term& t, bool negate) {
        Rational co = negate ? -t.coeff : t.coeff;
        if (t.d == 0) {
            a = a + co;
        } else {
            if (d != 0 && d != t.d) c.die("mixed discriminants");
            d = t.d;
            b = b + co;
        }
    };
    apply(first, false);
    if (!c.eof()) {
        bool neg = c.peek() == '-';
        if (!c.eat('+') && !c.eat('-')) c.die("expected + or -");
        apply(parse_term(c), neg);
    }
    if (!c.eof()) c.die("trailing characters");
    if (b.is_zero()) return Scalar(a);
    return quad(a, b, d);
}

void Scalar::encode(std::string& out) const {
    a_.encode(out);
    b_.num().encode(out);
    if (!b_.is_zero()) {
        b_.den().encode(out);
        // canonical form guarantees b != 0 iff d != 0, so d needs no +-0 care
        unsigned long long zz = ((unsigned long long)d_ << 1) ^ (unsigned long long)(d_ >> 63);
        while (zz >= 0x80) {
            out.push_back(char(zz | 0x80));
            zz >>= 7;
        }
        out.push_back(char(zz));
    }
}

Scalar Scalar::decode(const std::string& in, size_t& pos) {
    Rational a = Rational::decode(in, pos);
    Int bn = Int::decode(in, pos);
    if (bn.is_zero()) return Scalar(a);
    Int bd = Int::decode(in, pos);
    unsigned long long zz = 0;
    int shift = 0;
    for (;;) {
        if (pos >= in.size()) fail(Err::Internal, "truncated scalar encoding");
        unsigned char byte = (unsigned char)in[pos++];
        zz |= (unsigned long long)(byte & 0x7F) << shift;
        if (!(byte & 0x80)) break;
        shift += 7;
    }
    long long d = (long long)(zz >> 1) ^ -(long long)(zz & 1);
    return quad(std::move(a), Rational(std::move(bn), std::move(bd)), d);
}

size_t Scalar::hash() const {
    std::string bytes;
    encode(bytes);
    return std::hash<std::string>{}(bytes);
}

std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.str(); }

}  // namespace exalg
