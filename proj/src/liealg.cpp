#include "exalg/liealg.hpp"

#include <algorithm>

namespace exalg {
namespace lie {

namespace {

std::vector<Scalar> flatten(const Matrix& m) { return m.flatten(); }

Matrix reshape(const std::vector<Scalar>& v, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) m.at(i, j) = v[size_t(i) * n + j];
    return m;
}

Matrix rows_matrix(const std::vector<Matrix>& mats) {
    int n2 = mats[0].rows() * mats[0].cols();
    Matrix rows(int(mats.size()), n2);
    for (size_t i = 0; i < mats.size(); i++) {
        auto f = flatten(mats[i]);
        for (int j = 0; j < n2; j++) rows.at(int(i), j) = f[j];
    }
    return rows;
}

}  // namespace

LieAlgebraBasis LieAlgebraBasis::empty(int ambient) {
    LieAlgebraBasis b;
    b.ambient_ = ambient;
    b.span_rows_ = Matrix(0, ambient * ambient);
    return b;
}

LieAlgebraBasis LieAlgebraBasis::from(std::vector<Matrix> basis) {
    if (basis.empty()) fail(Err::DimensionMismatch, "empty basis");
    int n = basis[0].rows();
    for (auto& m : basis)
        if (!m.is_square() || m.rows() != n)
            fail(Err::DimensionMismatch, "basis matrices must be square of equal size");
    LieAlgebraBasis b;
    b.ambient_ = n;
    b.span_rows_ = rows_matrix(basis);
    if (rank_kernel(b.span_rows_).rank != int(basis.size()))
        fail(Err::DimensionMismatch, "basis matrices are linearly dependent");
    b.basis_ = std::move(basis);
    return b;
}

std::optional<std::vector<Scalar>> LieAlgebraBasis::coords(const Matrix& m) const {
    if (m.rows() != ambient_ || m.cols() != ambient_)
        fail(Err::DimensionMismatch, "coords dimension mismatch");
    return solve_linear(span_rows_.transpose(), flatten(m));
}

bool LieAlgebraBasis::is_bracket_closed() const {
    for (int i = 0; i < dim(); i++)
        for (int j = i + 1; j < dim(); j++)
            if (!in_span(commutator(basis_[i], basis_[j]))) return false;
    return true;
}

LieAlgebraBasis lie_closure(const std::vector<Matrix>& gens, int maxdim) {
    if (gens.empty()) fail(Err::DimensionMismatch, "no generators");
    if (maxdim < 1) fail(Err::MaxDimExceeded, "maxdim must be >= 1");
    int n = gens[0].rows();
    const int n2 = n * n;

    // maintain an RREF row space; add vectors until bracket-stable
    std::vector<std::vector<Scalar>> rows;  // current RREF rows
    auto refresh = [&](std::vector<std::vector<Scalar>> cand) {
        Matrix m(int(cand.size()), n2);
        for (size_t i = 0; i < cand.size(); i++)
            for (int j = 0; j < n2; j++) m.at(int(i), j) = cand[i][j];
        Echelon e = rref(m);
        rows.clear();
        for (int r = 0; r < e.rank; r++) {
            std::vector<Scalar> v(n2);
            for (int j = 0; j < n2; j++) v[j] = e.rref.at(r, j);
            rows.push_back(std::move(v));
        }
    };

    std::vector<std::vector<Scalar>> seed;
    for (auto& g : gens) {
        if (!g.is_square() || g.rows() != n)
            fail(Err::DimensionMismatch, "generators must be square of equal size");
        seed.push_back(flatten(g));
    }
    refresh(std::move(seed));

    for (;;) {
        if (int(rows.size()) > maxdim)
            fail(Err::MaxDimExceeded,
                 "closure dimension exceeded " + std::to_string(maxdim));
        std::vector<Matrix> mats;
        for (auto& v : rows) mats.push_back(reshape(v, n));
        // residual test against the current span
        Matrix span(int(rows.size()), n2);
        for (size_t i = 0; i < rows.size(); i++)
            for (int j = 0; j < n2; j++) span.at(int(i), j) = rows[i][j];
        Matrix spanT = span.transpose();

        std::vector<std::vector<Scalar>> next = rows;
        bool grew = false;
        for (size_t i = 0; i < mats.size(); i++)
            for (size_t j = i + 1; j < mats.size(); j++) {
                Matrix br = commutator(mats[i], mats[j]);
                if (br.is_zero()) continue;
                if (!solve_linear(spanT, flatten(br))) {
                    next.push_back(flatten(br));
                    grew = true;
                }
            }
        if (!grew) {
            std::vector<Matrix> basis;
            for (auto& v : rows) basis.push_back(reshape(v, n));
            return LieAlgebraBasis::from(std::move(basis));
        }
        refresh(std::move(next));
    }
}

StructureConstants structure_constants(const LieAlgebraBasis& b) {
    const int d = b.dim();
    StructureConstants sc(d);
    for (int i = 0; i < d; i++)
        for (int j = i + 1; j < d; j++) {
            Matrix br = commutator(b.element(i), b.element(j));
            auto co = b.coords(br);
            if (!co)
                fail(Err::NotClosed, "bracket [b" + std::to_string(i + 1) + ",b" +
                                         std::to_string(j + 1) + "] leaves the span");
            for (int k = 0; k < d; k++) {
                sc.at(i, j, k) = (*co)[k];
                sc.at(j, i, k) = -(*co)[k];
            }
        }
    return sc;
}

bool jacobi_holds(const StructureConstants& sc) {
    const int d = sc.dim();
    for (int i = 0; i < d; i++)
        for (int j = i + 1; j < d; j++)
            for (int k = j + 1; k < d; k++)
                for (int l = 0; l < d; l++) {
                    Scalar acc;
                    for (int m = 0; m < d; m++) {
                        acc = acc + sc.at(j, k, m) * sc.at(i, m, l) +
                              sc.at(k, i, m) * sc.at(j, m, l) + sc.at(i, j, m) * sc.at(k, m, l);
                    }
                    if (!acc.is_zero()) return false;
                }
    return true;
}

Matrix killing_form(const LieAlgebraBasis& b) {
    StructureConstants sc = structure_constants(b);
    const int d = b.dim();
    Matrix kil(d, d);
    for (int i = 0; i < d; i++)
        for (int j = i; j < d; j++) {
            Scalar acc;
            for (int m = 0; m < d; m++)
                for (int n = 0; n < d; n++) acc = acc + sc.at(i, m, n) * sc.at(j, n, m);
            kil.at(i, j) = acc;
            kil.at(j, i) = acc;
        }
    return kil;
}

std::vector<Matrix> adjoint_rep(const LieAlgebraBasis& b) {
    StructureConstants sc = structure_constants(b);
    const int d = b.dim();
    std::vector<Matrix> ads;
    for (int i = 0; i < d; i++) {
        Matrix ad(d, d);
        for (int j = 0; j < d; j++)
            for (int k = 0; k < d; k++) ad.at(k, j) = sc.at(i, j, k);
        ads.push_back(std::move(ad));
    }
    return ads;
}

LieAlgebraBasis derived_algebra(const LieAlgebraBasis& b) {
    std::vector<Matrix> brackets;
    for (int i = 0; i < b.dim(); i++)
        for (int j = i + 1; j < b.dim(); j++) {
            Matrix br = commutator(b.element(i), b.element(j));
            if (!br.is_zero()) brackets.push_back(std::move(br));
        }
    if (brackets.empty()) return LieAlgebraBasis::empty(b.ambient());
    Matrix rows = rows_matrix(brackets);
    Echelon e = rref(rows);
    std::vector<Matrix> basis;
    for (int r = 0; r < e.rank; r++) {
        std::vector<Scalar> v(rows.cols());
        for (int j = 0; j < rows.cols(); j++) v[j] = e.rref.at(r, j);
        basis.push_back(reshape(v, b.ambient()));
    }
    return LieAlgebraBasis::from(std::move(basis));
}

LieAlgebraBasis center(const LieAlgebraBasis& b) {
    StructureConstants sc = structure_constants(b);
    const int d = b.dim();
    Matrix m(d * d, d);
    for (int j = 0; j < d; j++)
        for (int k = 0; k < d; k++)
            for (int i = 0; i < d; i++) m.at(j * d + k, i) = sc.at(i, j, k);
    RankKernel rk = rank_kernel(m);
    std::vector<Matrix> basis;
    for (auto& coef : rk.kernel) {
        Matrix z = Matrix::zero(b.ambient(), b.ambient());
        for (int i = 0; i < d; i++)
            if (!coef[i].is_zero()) z = z + coef[i] * b.element(i);
        basis.push_back(std::move(z));
    }
    if (basis.empty()) return LieAlgebraBasis::empty(b.ambient());
    return LieAlgebraBasis::from(std::move(basis));
}

bool is_semisimple(const LieAlgebraBasis& b) { return !det(killing_form(b)).is_zero(); }

Inertia killing_signature(const LieAlgebraBasis& b) {
    Matrix kil = killing_form(b);
    for (auto& e : kil.entries())
        if (!e.is_real())
            fail(Err::NotSymmetric, "Killing matrix is not real (complex structure constants)");
    return congruence_signature(kil);
}

namespace {

// exact comparison of weight vectors (entries are rational in all supported
// cases; quadratic entries compare through the principal embedding)
int cmp_alpha(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    for (size_t k = 0; k < a.size(); k++) {
        int c = a[k].cmp(b[k]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace

RootDatum roots_relative(const LieAlgebraBasis& b, const std::vector<Matrix>& cartan) {
    if (cartan.empty()) fail(Err::DimensionMismatch, "empty Cartan list");
    for (size_t i = 0; i < cartan.size(); i++) {
        if (!b.in_span(cartan[i]))
            fail(Err::DimensionMismatch, "Cartan element outside the algebra span");
        for (size_t j = i + 1; j < cartan.size(); j++)
            if (!commutator(cartan[i], cartan[j]).is_zero())
                fail(Err::NotCommuting, "Cartan elements do not commute");
    }
    const int d = b.dim();

    // ad action of each Cartan element in basis coordinates
    std::vector<Matrix> ad_h;
    for (auto& h : cartan) {
        Matrix a(d, d);
        for (int j = 0; j < d; j++) {
            auto co = b.coords(commutator(h, b.element(j)));
            if (!co) fail(Err::NotClosed, "[h, basis] leaves the span");
            for (int k = 0; k < d; k++) a.at(k, j) = (*co)[k];
        }
        ad_h.push_back(std::move(a));
    }

    // simultaneous eigenspace refinement
    struct Space {
        std::vector<std::vector<Scalar>> cols;  // coordinate vectors
        std::vector<Scalar> alpha;
    };
    std::vector<Space> spaces(1);
    spaces[0].cols.resize(d);
    for (int i = 0; i < d; i++) {
        spaces[0].cols[i] = std::vector<Scalar>(d);
        spaces[0].cols[i][i] = Scalar(1);
    }

    for (auto& A : ad_h) {
        std::vector<Space> next;
        for (auto& sp : spaces) {
            const int k = int(sp.cols.size());
            Matrix s(d, k);
            for (int c = 0; c < k; c++)
                for (int r = 0; r < d; r++) s.at(r, c) = sp.cols[c][r];
            // restriction R with A*S = S*R (columns solve exactly)
            Matrix r(k, k);
            for (int c = 0; c < k; c++) {
                std::vector<Scalar> img(d);
                for (int rr = 0; rr < d; rr++) {
                    Scalar acc;
                    for (int m = 0; m < d; m++) acc = acc + A.at(rr, m) * sp.cols[c][m];
                    img[rr] = acc;
                }
                auto sol = solve_linear(s, img);
                if (!sol) fail(Err::Internal, "invariant subspace solve failed");
                for (int rr = 0; rr < k; rr++) r.at(rr, c) = (*sol)[rr];
            }
            EigenResult eig = eigen_quadratic(r);
            if (!eig.exact)
                fail(Err::NotDiagonalizable, "ad eigenvalue outside the rational field");
            int total = 0;
            for (auto& [lambda, mult] : eig.pairs) {
                if (!lambda.is_rational())
                    fail(Err::NotDiagonalizable,
                         "irrational ad eigenvalue " + lambda.str());
                Matrix shifted = r;
                for (int t = 0; t < k; t++) shifted.at(t, t) = shifted.at(t, t) - lambda;
                RankKernel rk = rank_kernel(shifted);
                if (int(rk.kernel.size()) != mult)
                    fail(Err::NotDiagonalizable, "defective ad eigenvalue " + lambda.str());
                Space child;
                child.alpha = sp.alpha;
                child.alpha.push_back(lambda);
                for (auto& w : rk.kernel) {
                    std::vector<Scalar> lifted(d);
                    for (int rr = 0; rr < d; rr++) {
                        Scalar acc;
                        for (int c = 0; c < k; c++) acc = acc + sp.cols[c][rr] * w[c];
                        lifted[rr] = acc;
                    }
                    child.cols.push_back(std::move(lifted));
                }
                total += mult;
                next.push_back(std::move(child));
            }
            if (total != k) fail(Err::NotDiagonalizable, "ad restriction is defective");
        }
        spaces = std::move(next);
    }

    RootDatum datum;
    datum.cartan = cartan;

    // collect nonzero weights; verify [h, x] = alpha(h) x on every vector
    std::vector<std::vector<Scalar>> zero_space;
    for (auto& sp : spaces) {
        bool zero = true;
        for (auto& a : sp.alpha)
            if (!a.is_zero()) zero = false;
        if (zero) {
            for (auto& c : sp.cols) zero_space.push_back(c);
            continue;
        }
        Root root;
        root.alpha = sp.alpha;
        for (auto& c : sp.cols) {
            Matrix x = Matrix::zero(b.ambient(), b.ambient());
            for (int i = 0; i < d; i++)
                if (!c[i].is_zero()) x = x + c[i] * b.element(i);
            for (size_t hi = 0; hi < cartan.size(); hi++) {
                if (commutator(cartan[hi], x) != sp.alpha[hi] * x)
                    fail(Err::Internal, "root vector check failed");
            }
            root.space.push_back(std::move(x));
        }
        datum.roots.push_back(std::move(root));
    }
    std::sort(datum.roots.begin(), datum.roots.end(),
              [](const Root& a, const Root& b2) { return cmp_alpha(a.alpha, b2.alpha) > 0; });
    datum.zero_weight_dim = int(zero_space.size());

    // completeness: zero-weight space == span(cartan) + center
    std::vector<Matrix> expected;
    for (auto& h : cartan) expected.push_back(h);
    {
        StructureConstants sc = structure_constants(b);
        Matrix m(d * d, d);
        for (int j = 0; j < d; j++)
            for (int k = 0; k < d; k++)
                for (int i = 0; i < d; i++) m.at(j * d + k, i) = sc.at(i, j, k);
        for (auto& coef : rank_kernel(m).kernel) {
            Matrix z = Matrix::zero(b.ambient(), b.ambient());
            for (int i = 0; i < d; i++)
                if (!coef[i].is_zero()) z = z + coef[i] * b.element(i);
            expected.push_back(std::move(z));
        }
    }
    Matrix exp_rows = rows_matrix(expected);
    int exp_rank = rank_kernel(exp_rows).rank;
    bool complete = exp_rank == datum.zero_weight_dim;
    if (complete) {
        // mutual containment: every zero-weight vector lies in the expected span
        Matrix expT = exp_rows.transpose();
        for (auto& c : zero_space) {
            Matrix z = Matrix::zero(b.ambient(), b.ambient());
            for (int i = 0; i < d; i++)
                if (!c[i].is_zero()) z = z + c[i] * b.element(i);
            if (!solve_linear(expT, z.flatten())) {
                complete = false;
                break;
            }
        }
    }
    datum.complete = complete;
    return datum;
}

TableReport verify_chevalley_table(const std::map<std::string, Matrix>& candidate) {
    static const char* names[8] = {"x1", "x2", "x3", "y1", "y2", "y3", "h1", "h2"};
    for (auto* n : names)
        if (!candidate.count(n)) fail(Err::DimensionMismatch, std::string("missing element ") + n);

    // [row, col] -> expected combination, per the sl(3,C) commutator table
    using Combo = std::map<std::string, long long>;
    static const std::map<std::pair<std::string, std::string>, Combo> table = {
        {{"x1", "x2"}, {{"x3", -1}}}, {{"x1", "x3"}, {}},
        {{"x1", "y1"}, {{"h1", 1}}},  {{"x1", "y2"}, {}},
        {{"x1", "y3"}, {{"y2", 1}}},  {{"x1", "h1"}, {{"x1", -2}}},
        {{"x1", "h2"}, {{"x1", 1}}},  {{"x2", "x3"}, {}},
        {{"x2", "y1"}, {}},           {{"x2", "y2"}, {{"h2", 1}}},
        {{"x2", "y3"}, {{"y1", -1}}}, {{"x2", "h1"}, {{"x2", 1}}},
        {{"x2", "h2"}, {{"x2", -2}}}, {{"x3", "y1"}, {{"x2", 1}}},
        {{"x3", "y2"}, {{"x1", -1}}}, {{"x3", "y3"}, {{"h1", 1}, {"h2", 1}}},
        {{"x3", "h1"}, {{"x3", -1}}}, {{"x3", "h2"}, {{"x3", -1}}},
        {{"y1", "y2"}, {{"y3", 1}}},  {{"y1", "y3"}, {}},
        {{"y1", "h1"}, {{"y1", 2}}},  {{"y1", "h2"}, {{"y1", -1}}},
        {{"y2", "y3"}, {}},           {{"y2", "h1"}, {{"y2", -1}}},
        {{"y2", "h2"}, {{"y2", 2}}},  {{"y3", "h1"}, {{"y3", 1}}},
        {{"y3", "h2"}, {{"y3", 1}}},  {{"h1", "h2"}, {}},
    };

    auto combo_matrix = [&](const Combo& c, int n) {
        Matrix m = Matrix::zero(n, n);
        for (auto& [name, coef] : c) m = m + Scalar(coef) * candidate.at(name);
        return m;
    };
    auto combo_str = [](const Combo& c) {
        if (c.empty()) return std::string("0");
        std::string out;
        for (auto& [name, coef] : c) {
            if (!out.empty() && coef > 0) out += "+";
            if (coef == -1)
                out += "-";
            else if (coef != 1)
                out += std::to_string(coef);
            out += name;
        }
        return out;
    };

    TableReport report;
    const int n = candidate.begin()->second.rows();
    for (auto& [pair, combo] : table) {
        Matrix lhs = commutator(candidate.at(pair.first), candidate.at(pair.second));
        Matrix rhs = combo_matrix(combo, n);
        if (lhs != rhs) {
            TableMismatch m;
            m.pair = "[" + pair.first + "," + pair.second + "]";
            m.expected = combo_str(combo);
            m.computed = "differs from the table";
            report.mismatches.push_back(std::move(m));
        }
    }
    return report;
}

bool commutes_with(const LieAlgebraBasis& a, const LieAlgebraBasis& b,
                   std::vector<CrossBracket>* witness) {
    if (a.ambient() != b.ambient()) fail(Err::DimensionMismatch, "different ambient sizes");
    bool all_zero = true;
    for (int i = 0; i < a.dim(); i++)
        for (int j = 0; j < b.dim(); j++) {
            Matrix br = commutator(a.element(i), b.element(j));
            if (!br.is_zero()) {
                all_zero = false;
                if (witness) witness->push_back({i, j, std::move(br)});
            }
        }
    return all_zero;
}

}  // namespace lie
}  // namespace exalg
