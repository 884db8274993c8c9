#include "exalg/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace exalg {

namespace {

// Clears denominators row by row so Bareiss stays in Z[sqrt(d)], then runs
// one-step fraction-free elimination. Only rank/pivot structure and the
// determinant scale are needed by callers; track the row multipliers and
// swap sign for det.
struct BareissEchelon {
    Matrix u;                 // echelon form (fraction-free entries)
    std::vector<int> pivot_cols;
    int rank = 0;
    int swap_sign = 1;
    Scalar row_scale = Scalar(1);  // product of the denominator-clearing multipliers
};

Scalar row_denominator_clear(Matrix& m, int row) {
    Int l(1);
    for (int j = 0; j < m.cols(); j++) {
        const Scalar& x = m.at(row, j);
        l = Int::lcm(l, x.rat_part().den());
        l = Int::lcm(l, x.quad_part().den());
    }
    Scalar f = Scalar(Rational(l));
    if (!l.is_one())
        for (int j = 0; j < m.cols(); j++) m.at(row, j) = f * m.at(row, j);
    return f;
}

BareissEchelon bareiss(const Matrix& a) {
    BareissEchelon r;
    r.u = a;
    Matrix& u = r.u;
    for (int i = 0; i < u.rows(); i++) r.row_scale = r.row_scale * row_denominator_clear(u, i);

    Scalar prev = Scalar(1);
    int row = 0;
    for (int col = 0; col < u.cols() && row < u.rows(); col++) {
        int p = -1;
        for (int i = row; i < u.rows(); i++)
            if (!u.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < u.cols(); j++) std::swap(u.at(p, j), u.at(row, j));
            r.swap_sign = -r.swap_sign;
        }
        const Scalar pivot = u.at(row, col);
        for (int i = row + 1; i < u.rows(); i++) {
            const Scalar f = u.at(i, col);
            for (int j = col; j < u.cols(); j++)
                u.at(i, j) = (pivot * u.at(i, j) - f * u.at(row, j)) / prev;
        }
        prev = pivot;
        r.pivot_cols.push_back(col);
        row++;
    }
    r.rank = row;
    return r;
}

}  // namespace

Echelon rref(const Matrix& a) {
    BareissEchelon be = bareiss(a);
    Echelon e;
    e.pivot_cols = be.pivot_cols;
    e.rank = be.rank;
    e.rref = be.u;
    Matrix& m = e.rref;
    // Back-substitute to reduced form; exact field divisions.
    for (int r = e.rank - 1; r >= 0; r--) {
        int pc = e.pivot_cols[r];
        const Scalar pivot = m.at(r, pc);
        for (int j = pc; j < m.cols(); j++) m.at(r, j) = m.at(r, j) / pivot;
        for (int i = 0; i < r; i++) {
            const Scalar f = m.at(i, pc);
            if (f.is_zero()) continue;
            for (int j = pc; j < m.cols(); j++) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
    }
    return e;
}

RankKernel rank_kernel(const Matrix& a) {
    Echelon e = rref(a);
    RankKernel rk;
    rk.rank = e.rank;
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    for (int free = 0; free < a.cols(); free++) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(a.cols());
        v[free] = Scalar(1);
        for (int r = 0; r < e.rank; r++) v[e.pivot_cols[r]] = -e.rref.at(r, free);
        rk.kernel.push_back(std::move(v));
    }
    return rk;
}

Polynomial charpoly(const Matrix& a) {
    if (!a.is_square()) fail(Err::NotSquare, "charpoly");
    const int n = a.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    Matrix m = a;
    for (int k = 1; k <= n; k++) {
        c[n - k] = -(m.trace() / Scalar(k));
        if (k < n) {
            for (int i = 0; i < n; i++) m.at(i, i) = m.at(i, i) + c[n - k];
            m = a * m;
        }
    }
    return Polynomial(std::move(c));
}

std::vector<std::complex<double>> poly_roots_numeric(const std::vector<std::complex<double>>& monic) {
    const int n = int(monic.size()) - 1;
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (int i = 0; i < n; i++) {
        w *= seed;
        z[i] = w;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (int k = n; k >= 0; k--) acc = acc * x + monic[k];
        return acc;
    };
    for (int iter = 0; iter < 500; iter++) {
        double moved = 0.0;
        for (int i = 0; i < n; i++) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; j++)
                if (j != i) denom *= (z[i] - z[j]);
            std::complex<double> delta = eval(z[i]) / denom;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-15) break;
    }
    return z;
}

namespace {

// Rational roots of a rational-coefficient polynomial by the rational root
// theorem with bounded trial-division factoring of the end coefficients.
// Deflates p; sets complete=false when the candidate set could not be built
// (caller falls back to the float spectrum). Zero roots must be stripped
// beforehand.
std::vector<std::pair<Rational, int>> extract_rational_roots(Polynomial& p, bool& complete) {
    complete = true;
    std::vector<std::pair<Rational, int>> out;
    if (p.degree() < 1) return out;

    // scale to integer coefficients
    Int l(1);
    for (int k = 0; k <= p.degree(); k++) l = Int::lcm(l, p.coeff(k).rat_part().den());
    std::vector<Int> ic(p.degree() + 1);
    for (int k = 0; k <= p.degree(); k++)
        ic[k] = (p.coeff(k).rat_part() * Rational(l)).num();

    auto divisors = [&complete](const Int& v) {
        std::vector<Int> ds;
        Int n = v.abs();
        if (n.is_zero()) return ds;
        std::vector<std::pair<Int, int>> fac;
        Int rest = n, q, r;
        for (long long pr = 2; pr <= 20000; pr += (pr == 2 ? 1 : 2)) {
            if (rest.is_small() && rest.small() < pr * pr) break;
            int e = 0;
            for (;;) {
                Int::divrem(rest, Int(pr), q, r);
                if (!r.is_zero()) break;
                rest = q;
                e++;
            }
            if (e) fac.push_back({Int(pr), e});
        }
        if (!rest.is_one()) {
            if (rest.is_small())
                fac.push_back({rest, 1});
            else {
                complete = false;  // could not fully factor; exact path gives up
                return ds;
            }
        }
        ds.push_back(Int(1));
        for (auto& [pp, e] : fac) {
            size_t base = ds.size();
            Int pe(1);
            for (int t = 1; t <= e; t++) {
                pe = pe * pp;
                for (size_t i = 0; i < base; i++) ds.push_back(ds[i] * pe);
            }
            if (ds.size() > 512) {
                complete = false;
                return std::vector<Int>{};
            }
        }
        return ds;
    };

    std::vector<Int> ps = divisors(ic[0]);
    std::vector<Int> qs = divisors(ic.back());
    if (!complete) return out;
    if (ps.size() * qs.size() > 4096) {
        complete = false;
        return out;
    }
    for (const Int& q : qs) {
        for (const Int& pnum : ps) {
            for (int s = 1; s >= -1; s -= 2) {
                Rational cand(s > 0 ? pnum : -pnum, q);
                int mult = 0;
                while (p.degree() >= 1 && p.has_root(Scalar(cand))) {
                    p = p.deflate(Scalar(cand));
                    mult++;
                }
                if (mult) out.push_back({cand, mult});
                if (p.degree() < 1) return out;
            }
        }
    }
    return out;
}

// Roots of a monic-after-scaling rational quadratic, exact in Q(sqrt(disc)).
// Returns false when the discriminant cannot be carried exactly.
bool quadratic_roots(const Polynomial& q, std::vector<EigenPair>& out) {
    Rational lead = q.coeff(2).rat_part();
    Rational B = q.coeff(1).rat_part() / lead;
    Rational C = q.coeff(0).rat_part() / lead;
    Rational disc = B * B - Rational(4) * C;
    Rational half(1, 2);
    if (disc.is_zero()) {
        out.push_back({Scalar(-B * half), 2});
        return true;
    }
    Int nd = disc.num() * disc.den();
    auto split = squarefree_split(nd.abs());
    if (!split) return false;
    auto [s, d] = *split;
    Rational scale = Rational(s, disc.den());
    if (nd.sign() < 0) d = -d;
    if (d == 1) {
        out.push_back({Scalar((-B + scale) * half), 1});
        out.push_back({Scalar((-B - scale) * half), 1});
    } else {
        out.push_back({Scalar::quad(-B * half, scale * half, d), 1});
        out.push_back({Scalar::quad(-B * half, -scale * half, d), 1});
    }
    return true;
}

}  // namespace

EigenResult eigen_quadratic(const Matrix& a) {
    Polynomial p = charpoly(a);
    EigenResult res;
    bool all_rational = true;
    for (int k = 0; k <= p.degree(); k++)
        if (!p.coeff(k).is_rational()) all_rational = false;

    if (all_rational) {
        Polynomial q = p;
        // strip zero roots first
        int zero_mult = 0;
        while (q.degree() > 0 && q.coeff(0).is_zero()) {
            q = q.deflate(Scalar(0));
            zero_mult++;
        }
        std::vector<EigenPair> found;
        if (zero_mult) found.push_back({Scalar(0), zero_mult});

        bool ok = true;
        if (q.degree() == 1) {
            found.push_back(
                {Scalar(-(q.coeff(0).rat_part() / q.coeff(1).rat_part())), 1});
        } else if (q.degree() == 2) {
            ok = quadratic_roots(q, found);
        } else if (q.degree() >= 3) {
            bool complete = true;
            auto roots = extract_rational_roots(q, complete);
            ok = complete;
            if (ok) {
                for (auto& [r, m] : roots) found.push_back({Scalar(r), m});
                if (q.degree() == 2)
                    ok = quadratic_roots(q, found);
                else if (q.degree() == 1)
                    found.push_back(
                        {Scalar(-(q.coeff(0).rat_part() / q.coeff(1).rat_part())), 1});
                else if (q.degree() > 0)
                    ok = false;  // irreducible factor of degree >= 3 remains
            }
        }
        if (ok)
            res.pairs = std::move(found);
        else
            all_rational = false;  // fall through to the float path
        if (all_rational) {
            std::sort(res.pairs.begin(), res.pairs.end(), [](const EigenPair& x, const EigenPair& y) {
                auto cx = x.value.to_complex(), cy = y.value.to_complex();
                return cx.real() != cy.real() ? cx.real() > cy.real() : cx.imag() > cy.imag();
            });
            return res;
        }
    }

    res.exact = false;
    std::vector<std::complex<double>> monic(p.degree() + 1);
    std::complex<double> lead = p.coeff(p.degree()).to_complex();
    for (int k = 0; k <= p.degree(); k++) monic[k] = p.coeff(k).to_complex() / lead;
    res.approx = poly_roots_numeric(monic);
    double scale = 1.0;
    for (auto& c : monic) scale = std::max(scale, std::abs(c));
    for (auto& z : res.approx) {
        std::complex<double> acc = 0.0;
        for (int k = p.degree(); k >= 0; k--) acc = acc * z + monic[k];
        res.residual = std::max(res.residual, std::abs(acc) / scale);
    }
    if (res.residual > 1e-10)
        fail(Err::Internal, "numeric eigenvalue residual " + std::to_string(res.residual));
    std::sort(res.approx.begin(), res.approx.end(), [](auto x, auto y) {
        return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag();
    });
    return res;
}

Inertia congruence_signature(const Matrix& s) {
    if (!s.is_square() || !s.is_symmetric()) fail(Err::NotSymmetric, "congruence_signature");
    for (const auto& x : s.entries())
        if (!x.is_real()) fail(Err::NotSymmetric, "entries must be real-embeddable");
    Matrix m = s;
    const int n = m.rows();
    Inertia sig;
    for (int i = 0; i < n; i++) {
        if (m.at(i, i).is_zero()) {
            int j = -1;
            for (int k = i + 1; k < n; k++)
                if (!m.at(i, k).is_zero()) {
                    j = k;
                    break;
                }
            if (j < 0) continue;  // zero row in the remaining block
            // Make the diagonal nonzero: add (or subtract) row/col j into i.
            // One of the two signs must produce a nonzero diagonal entry.
            for (int sign = 0; sign < 2; sign++) {
                Matrix t = m;
                for (int c = 0; c < n; c++)
                    t.at(i, c) = sign ? t.at(i, c) - m.at(j, c) : t.at(i, c) + m.at(j, c);
                for (int r = 0; r < n; r++)
                    t.at(r, i) = sign ? t.at(r, i) - m.at(r, j) : t.at(r, i) + m.at(r, j);
                if (!t.at(i, i).is_zero()) {
                    m = t;
                    break;
                }
            }
        }
        const Scalar pivot = m.at(i, i);
        if (pivot.is_zero()) continue;
        for (int r = i + 1; r < n; r++) {
            const Scalar f = m.at(r, i) / pivot;
            if (f.is_zero()) continue;
            for (int c = 0; c < n; c++) m.at(r, c) = m.at(r, c) - f * m.at(i, c);
            for (int c = 0; c < n; c++) m.at(c, r) = m.at(c, r) - f * m.at(c, i);
        }
    }
    for (int i = 0; i < n; i++) {
        int sg = m.at(i, i).sign();
        if (sg > 0)
            sig.positives++;
        else if (sg < 0)
            sig.negatives++;
        else
            sig.zeros++;
    }
    return sig;
}

Scalar det(const Matrix& a) {
    if (!a.is_square()) fail(Err::NotSquare, "det");
    if (a.rows() == 0) return Scalar(1);
    BareissEchelon be = bareiss(a);
    if (be.rank < a.rows()) return Scalar(0);
    Scalar d = be.u.at(a.rows() - 1, a.cols() - 1);
    if (be.swap_sign < 0) d = -d;
    return d / be.row_scale;
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) fail(Err::NotSquare, "inverse");
    const int n = a.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    Echelon e = rref(aug);
    for (int i = 0; i < n; i++)
        if (i >= e.rank || e.pivot_cols[i] != i) fail(Err::Singular, "matrix is singular");
    Matrix inv(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) inv.at(i, j) = e.rref.at(i, n + j);
    return inv;
}

std::optional<std::vector<Scalar>> solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
    if (int(b.size()) != a.rows()) fail(Err::DimensionMismatch, "solve_linear rhs size");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = rref(aug);
    for (int r = 0; r < e.rank; r++)
        if (e.pivot_cols[r] == a.cols()) return std::nullopt;  // inconsistent
    std::vector<Scalar> x(a.cols());
    for (int r = 0; r < e.rank; r++) x[e.pivot_cols[r]] = e.rref.at(r, a.cols());
    return x;
}

std::optional<std::vector<Scalar>> span_coordinates(const Matrix& rows, const std::vector<Scalar>& v) {
    // coordinates c with rows^T c = v
    return solve_linear(rows.transpose(), v);
}

}  // namespace exalg
