#include "exalg/gates.hpp"

#include <map>

namespace exalg {
namespace gates {

namespace {

using IRows = std::vector<std::vector<long long>>;

Matrix scaled(const IRows& rows, long long num, long long den) {
    return Matrix::from_ints(rows, Rational(num, den));
}

Matrix diag8(std::initializer_list<long long> d) {
    Matrix m(8, 8);
    int i = 0;
    for (long long v : d) {
        m.at(i, i) = Scalar(v);
        i++;
    }
    return m;
}

// Adjoint matrix in basis order (x1,x2,x3,y1,y2,y3,h1,h2): column j holds the
// coordinates of the bracket with basis element j.
Matrix ad_from_cols(const std::vector<std::vector<std::pair<int, long long>>>& cols) {
    Matrix m(8, 8);
    for (int j = 0; j < 8; j++)
        for (auto& [row, val] : cols[j]) m.at(row - 1, j) = Scalar(val);
    return m;
}

std::map<std::string, NamedConstant> build_registry() {
    std::map<std::string, NamedConstant> reg;
    auto put = [&](const std::string& name, Matrix m, const std::string& prov) {
        reg.emplace(name, NamedConstant{name, std::move(m), prov});
    };

    put("pauli.i", Matrix::identity(2), "Pauli basis");
    put("pauli.x", pauli_matrix("X"), "Pauli basis");
    put("pauli.y", pauli_matrix("Y"), "Pauli basis");
    put("pauli.z", pauli_matrix("Z"), "Pauli basis");

    put("s2", scaled({{1, -1, 1, 1}, {1, 1, -1, 1}, {1, -1, -1, -1}, {1, 1, 1, -1}}, 1, 2),
        "two-qubit gate S2");

    put("s3",
        scaled({{0, 0, 0, 0, 1, 1, 1, -1},
                {1, 1, 1, -1, 0, 0, 0, 0},
                {0, 0, 0, 0, 1, 1, -1, 1},
                {1, -1, 1, 1, 0, 0, 0, 0},
                {1, 1, -1, 1, 0, 0, 0, 0},
                {-1, 1, 1, 1, 0, 0, 0, 0},
                {0, 0, 0, 0, 1, -1, 1, 1},
                {0, 0, 0, 0, -1, 1, 1, 1}},
               1, 2),
        "three-qubit gate S3");

    put("x_a4",
        scaled({{0, 1, -1, -1, 0, 0, 1, 0},
                {0, 1, 1, -1, 0, 0, -1, 0},
                {0, 1, 1, 1, 0, 0, 1, 0},
                {-1, 0, 0, 0, 1, 1, 0, -1},
                {-1, 0, 0, 0, 1, -1, 0, 1},
                {-1, 0, 0, 0, -1, 1, 0, 1},
                {-1, 0, 0, 0, -1, -1, 0, -1},
                {0, 1, -1, 1, 0, 0, -1, 0}},
               1, 2),
        "A4 generator x");

    put("y_a4",
        scaled({{0, -1, 1, -1, 0, 0, 1, 0},
                {0, 1, 1, 1, 0, 0, 1, 0},
                {0, 1, 1, -1, 0, 0, -1, 0},
                {-1, 0, 0, 0, 1, 1, 0, -1},
                {-1, 0, 0, 0, 1, -1, 0, 1},
                {-1, 0, 0, 0, -1, 1, 0, 1},
                {-1, 0, 0, 0, -1, -1, 0, -1},
                {0, -1, 1, 1, 0, 0, -1, 0}},
               1, 2),
        "A4 generator y");

    put("we8.g1", kron(pauli_matrix("X"), reg.at("s2").matrix), "W'(E8) generator sx (x) S2");
    put("we8.g2", reg.at("s3").matrix, "W'(E8) generator S3");

    // Standard Chevalley basis of sl(3,C).
    put("sl3.x1", Matrix::from_ints({{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}), "sl3 basis");
    put("sl3.x2", Matrix::from_ints({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), "sl3 basis");
    put("sl3.x3", Matrix::from_ints({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}), "sl3 basis");
    put("sl3.y1", Matrix::from_ints({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}), "sl3 basis");
    put("sl3.y2", Matrix::from_ints({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}), "sl3 basis");
    put("sl3.y3", Matrix::from_ints({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}), "sl3 basis");
    put("sl3.h1", Matrix::from_ints({{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}), "sl3 basis");
    put("sl3.h2", Matrix::from_ints({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}), "sl3 basis");

    // Adjoint representation of the standard basis. Two cells of the reference
    // copies disagree with the commutator table and are restored from it.
    put("sl3.ad.x1",
        ad_from_cols({{}, {{3, -1}}, {}, {{7, 1}}, {}, {{5, 1}}, {{1, -2}}, {{1, 1}}}),
        "adjoint of x1");
    put("sl3.ad.x2",
        ad_from_cols({{{3, 1}}, {}, {}, {}, {{8, 1}}, {{4, -1}}, {{2, 1}}, {{2, -2}}}),
        "adjoint of x2");
    put("sl3.ad.x3",
        ad_from_cols({{}, {}, {}, {{2, 1}}, {{1, -1}}, {{7, 1}, {8, 1}}, {{3, -1}}, {{3, -1}}}),
        "adjoint of x3");
    put("sl3.ad.y1",
        ad_from_cols({{{7, -1}}, {}, {{2, -1}}, {}, {{6, 1}}, {}, {{4, 2}}, {{4, -1}}}),
        "adjoint of y1");
    put("sl3.ad.y2",
        ad_from_cols({{}, {{8, -1}}, {{1, 1}}, {{6, -1}}, {}, {}, {{5, -1}}, {{5, 2}}}),
        "adjoint of y2");
    put("sl3.ad.y3",
        ad_from_cols({{{5, -1}}, {{4, 1}}, {{7, -1}, {8, -1}}, {}, {}, {}, {{6, 1}}, {{6, 1}}}),
        "adjoint of y3");
    put("sl3.ad.h1", diag8({2, -1, 1, -2, 1, -1, 0, 0}), "adjoint of h1");
    put("sl3.ad.h2", diag8({-1, 2, 1, 1, -2, -1, 0, 0}), "adjoint of h2");

    put("sl3.ad.h1p", diag8({1, 0, 1, -1, 0, -1, 0, 0}), "Cartan h1' for the adjoint image");
    put("sl3.ad.h2p", diag8({0, 1, 1, 0, -1, -1, 0, 0}), "Cartan h2' for the adjoint image");

    // Chevalley basis of the derived algebra of the A4 Lie closure, with
    // global scales 1, 1, 2, 1/4, 1/4, 1/8, 1/2, 1/2.
    put("ga4.x1",
        scaled({{0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 1, 0, 0, 1, 0},
                {0, 0, 0, -1, 0, 0, -1, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0}},
               1, 1),
        "gA4' basis x1");
    put("ga4.x2",
        scaled({{0, 1, -1, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, -1, 0, 0, 0, 0, 0}},
               1, 1),
        "gA4' basis x2");
    put("ga4.x3",
        scaled({{0, 0, 0, 1, 0, 0, 1, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 1, 0, 0, 1, 0}},
               2, 1),
        "gA4' basis x3");
    put("ga4.y1",
        scaled({{0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, -1, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, -1, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0}},
               1, 4),
        "gA4' basis y1");
    put("ga4.y2",
        scaled({{0, 0, 0, 0, 0, 0, 0, 0},
                {1, 0, 0, 0, 0, 0, 0, 1},
                {-1, 0, 0, 0, 0, 0, 0, -1},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0}},
               1, 4),
        "gA4' basis y2");
    put("ga4.y3",
        scaled({{0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {1, 0, 0, 0, 0, 0, 0, 1},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {1, 0, 0, 0, 0, 0, 0, 1},
                {0, 0, 0, 0, 0, 0, 0, 0}},
               1, 8),
        "gA4' basis y3");
    put("ga4.h1",
        scaled({{0, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, -1, 0, 0, 0, 0, 0},
                {0, -1, 1, 0, 0, 0, 0, 0},
                {0, 0, 0, -1, 0, 0, -1, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, -1, 0, 0, -1, 0},
                {0, 0, 0, 0, 0, 0, 0, 0}},
               1, 2),
        "gA4' basis h1");
    put("ga4.h2",
        scaled({{1, 0, 0, 0, 0, 0, 0, 1},
                {0, -1, 1, 0, 0, 0, 0, 0},
                {0, 1, -1, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {1, 0, 0, 0, 0, 0, 0, 1}},
               1, 2),
        "gA4' basis h2");

    // sl(2,C) summand of the S4 Lie algebra.
    put("s4sl2.e1",
        scaled({{1, 0, -1, 0, 1, -1, 0, 0},
                {0, -1, 0, 0, -1, 1, 0, 1},
                {-1, 0, 1, 0, -1, 1, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {1, -1, -1, 0, 0, 0, 0, 1},
                {-1, 1, 1, 0, 0, 0, 0, -1},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, 0, 0, 1, -1, 0, -1}},
               1, 1),
        "gS4 sl2 basis e1");
    put("s4sl2.e2",
        scaled({{0, 2, 0, 0, 2, -2, 0, -2},
                {0, -1, 0, 0, -1, 1, 0, 1},
                {0, -2, 0, 0, -2, 2, 0, 2},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, 0, 0, 1, -1, 0, -1},
                {0, -1, 0, 0, -1, 1, 0, 1},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 1, 0, 0, 1, -1, 0, -1}},
               1, 2),
        "gS4 sl2 basis e2");
    put("s4sl2.e3",
        scaled({{0, 0, 0, 0, 0, 0, 0, 0},
                {2, -1, -2, 0, 1, -1, 0, 1},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {2, -1, -2, 0, 1, -1, 0, 1},
                {-2, 1, 2, 0, -1, 1, 0, -1},
                {0, 0, 0, 0, 0, 0, 0, 0},
                {-2, 1, 2, 0, -1, 1, 0, -1}},
               1, 2),
        "gS4 sl2 basis e3");

    // sl(2,R) in the spin basis {sz, raising, lowering}: the basis whose
    // Killing matrix is 4[[2,0,0],[0,0,1],[0,1,0]].
    put("sl2.h", pauli_matrix("Z"), "sl2 split real form");
    put("sl2.e", Matrix::from_ints({{0, 1}, {0, 0}}), "sl2 split real form");
    put("sl2.f", Matrix::from_ints({{0, 0}, {1, 0}}), "sl2 split real form");

    // su(2) adjoint triple with imaginary entries.
    const Scalar i = Scalar::i();
    const Scalar o(0);
    put("appendix.ad_pauli.z", Matrix({{o, -i, o}, {i, o, o}, {o, o, o}}), "adjoint of sigma_z");
    put("appendix.ad_pauli.x", Matrix({{o, o, o}, {o, o, -i}, {o, i, o}}), "adjoint of sigma_x");
    put("appendix.ad_pauli.y", Matrix({{o, o, i}, {o, o, o}, {-i, o, o}}), "adjoint of sigma_y");

    return reg;
}

const std::map<std::string, NamedConstant>& registry() {
    static const std::map<std::string, NamedConstant> reg = build_registry();
    return reg;
}

}  // namespace

const NamedConstant& constant_info(const std::string& name) {
    auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        if (name == "b" || name == "we7.b" || name == "w_e7.b")
            fail(Err::UnknownConstant,
                 "the W'(E7) generator 'b' is defined only in an external reference and is not "
                 "registered");
        fail(Err::UnknownConstant, "no constant named '" + name + "'");
    }
    return it->second;
}

const Matrix& constant(const std::string& name) { return constant_info(name).matrix; }

std::vector<std::string> constant_names() {
    std::vector<std::string> names;
    for (auto& [k, v] : registry()) names.push_back(k);
    return names;
}

std::array<Matrix, 3> observable_triple(TripleKind kind) {
    std::array<Matrix, 3> two = {pauli_matrix("XZ"), pauli_matrix("ZX"), pauli_matrix("YY")};
    if (kind == TripleKind::two_qubit) return two;
    Matrix z = pauli_matrix("Z");
    return {kron(z, two[0]), kron(z, two[1]), kron(z, two[2])};
}

const SignPattern& s2_sign_pattern() {
    static const SignPattern p{{{+1, -1, -1}, {-1, +1, -1}, {-1, -1, +1}, {+1, +1, +1}}};
    return p;
}

std::string SignPattern::str() const {
    std::string out;
    for (auto& r : rows) {
        for (int s : r) out.push_back(s > 0 ? '+' : '-');
        out.push_back(' ');
    }
    if (!out.empty()) out.pop_back();
    return out;
}

SignPattern joint_eigensign_check(const Matrix& gate, const std::array<Matrix, 3>& triple) {
    for (int a = 0; a < 3; a++)
        for (int b = a + 1; b < 3; b++)
            if (!commutator(triple[a], triple[b]).is_zero())
                fail(Err::NotCommuting, "observable triple must commute pairwise");
    SignPattern pattern;
    for (int i = 0; i < gate.rows(); i++) {
        std::vector<Scalar> v(gate.cols());
        Scalar norm;
        for (int j = 0; j < gate.cols(); j++) {
            v[j] = gate.at(i, j);
            norm = norm + (v[j].is_real() ? v[j] * v[j] : Scalar(v[j].norm_sq_complex()));
        }
        if (norm != Scalar(1))
            fail(Err::NotNormalized, "gate row " + std::to_string(i + 1) + " is not unit norm");
        std::array<int, 3> signs{};
        for (int k = 0; k < 3; k++) {
            std::vector<Scalar> w = triple[k].apply(v);
            bool plus = true, minus = true;
            for (int j = 0; j < gate.cols(); j++) {
                if (w[j] != v[j]) plus = false;
                if (w[j] != -v[j]) minus = false;
            }
            if (plus == minus) {
                Error e(Err::NotEigenvector, "row " + std::to_string(i + 1) +
                                                 " is not an eigenvector of observable " +
                                                 std::to_string(k + 1));
                e.detail_a = i + 1;
                e.detail_b = k + 1;
                throw e;
            }
            signs[k] = plus ? +1 : -1;
        }
        pattern.rows.push_back(signs);
    }
    return pattern;
}

PureState row_state(const Matrix& gate, int i) {
    if (i < 0 || i >= gate.rows()) fail(Err::DimensionMismatch, "row index out of range");
    int n = 0;
    while ((1 << n) < gate.cols()) n++;
    if ((1 << n) != gate.cols()) fail(Err::WrongDimension, "gate width must be a power of two");
    std::vector<Scalar> amps(gate.cols());
    for (int j = 0; j < gate.cols(); j++) amps[j] = gate.at(i, j);
    return PureState::exact(n, std::move(amps));  // throws NotNormalized for bad rows
}

std::vector<RowReport> gate_entanglement_report(const Matrix& gate) {
    if (gate.cols() != 8) fail(Err::WrongDimension, "row profiles need an 8-column gate");
    std::vector<RowReport> out;
    for (int i = 0; i < gate.rows(); i++) {
        RowReport r;
        r.profile = entanglement_profile(row_state(gate, i));
        r.b_type = is_b_type(r.profile);
        out.push_back(std::move(r));
    }
    return out;
}

bool is_orthogonal(const Matrix& g) {
    return g.is_square() && (g * g.transpose()).is_identity();
}

}  // namespace gates
}  // namespace exalg
