#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exalg/linalg.hpp"

using namespace exalg;

namespace {

Matrix random_rational_matrix(std::mt19937_64& rng, int n, int m, long long lo = -6, long long hi = 6) {
    std::uniform_int_distribution<long long> num(lo, hi);
    std::uniform_int_distribution<long long> den(1, 4);
    Matrix a(n, m);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < m; j++) a.at(i, j) = Scalar(num(rng), den(rng));
    return a;
}

// Test-only oracle: characteristic polynomial by cofactor expansion of
// det(tI - A) over polynomial entries. Independent of the Faddeev-LeVerrier
// path in the library.
using Poly = std::vector<Scalar>;  // ascending coefficients

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

Poly poly_add(const Poly& a, const Poly& b, const Scalar& factor) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Scalar(0));
    for (size_t j = 0; j < b.size(); j++) r[j] = r[j] + factor * b[j];
    return r;
}

Poly det_poly(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc{Scalar(0)};
    for (size_t j = 0; j < n; j++) {
        std::vector<std::vector<Poly>> minor;
        for (size_t r = 1; r < n; r++) {
            std::vector<Poly> row;
            for (size_t c = 0; c < n; c++)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][j], det_poly(minor));
        acc = poly_add(acc, term, Scalar(j % 2 ? -1 : 1));
    }
    return acc;
}

Polynomial charpoly_oracle(const Matrix& a) {
    int n = a.rows();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            if (i == j)
                m[i][j] = Poly{-a.at(i, j), Scalar(1)};
            else
                m[i][j] = Poly{-a.at(i, j)};
        }
    return Polynomial(det_poly(m));
}

Matrix companion(const std::vector<Scalar>& monic_coeffs) {  // ascending, last == 1
    int n = int(monic_coeffs.size()) - 1;
    Matrix c(n, n);
    for (int i = 1; i < n; i++) c.at(i, i - 1) = Scalar(1);
    for (int i = 0; i < n; i++) c.at(i, n - 1) = -monic_coeffs[i];
    return c;
}

Matrix random_unimodular(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> pick(0, n - 1), mult(-3, 3);
    Matrix p = Matrix::identity(n);
    for (int k = 0; k < 3 * n; k++) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Scalar f(mult(rng));
        for (int c = 0; c < n; c++) p.at(i, c) = p.at(i, c) + f * p.at(j, c);
    }
    return p;
}

}  // namespace

TEST_CASE("matrix products and kron") {
    std::mt19937_64 rng(2);
    Matrix a = random_rational_matrix(rng, 3, 3);
    CHECK(commutator(a, a).is_zero());
    for (int it = 0; it < 30; it++) {
        Matrix x = random_rational_matrix(rng, 3, 4);
        Matrix y = random_rational_matrix(rng, 4, 2);
        CHECK((x * y).transpose() == y.transpose() * x.transpose());
        Matrix c = random_rational_matrix(rng, 2, 3);
        Matrix d = random_rational_matrix(rng, 3, 2);
        // kron(A,B) kron(C,D) = kron(AC, BD)
        CHECK(kron(x, c) * kron(y, d) == kron(x * y, c * d));
    }
    // block structure of kron
    Matrix m({{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(3)}});
    Matrix k = kron(m, Matrix::identity(2));
    CHECK(k.at(0, 2) == Scalar(2));
    CHECK(k.at(1, 3) == Scalar(2));
    CHECK(k.at(2, 2) == Scalar(3));
}

TEST_CASE("rank and kernel") {
    auto rk = rank_kernel(Matrix::identity(8));
    CHECK(rk.rank == 8);
    CHECK(rk.kernel.empty());

    rk = rank_kernel(Matrix::zero(3, 3));
    CHECK(rk.rank == 0);
    REQUIRE(rk.kernel.size() == 3);
    for (int i = 0; i < 3; i++) CHECK(rk.kernel[i][i] == Scalar(1));

    // rho_BC of the B state, rank 2 by hand reduction (rows 2..4 coincide)
    Matrix rho = Matrix::from_ints({{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}},
                                   Rational(1, 4));
    rk = rank_kernel(rho);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.size() == 2);
    // kernel vectors annihilate
    for (auto& v : rk.kernel) {
        auto image = rho.apply(v);
        for (auto& x : image) CHECK(x.is_zero());
    }
}

TEST_CASE("charpoly matches examples and the cofactor oracle") {
    Matrix d({{Scalar(1, 4), Scalar(0)}, {Scalar(0), Scalar(3, 4)}});
    Polynomial p = charpoly(d);
    CHECK(p == Polynomial({Scalar(3, 16), Scalar(-1), Scalar(1)}));

    CHECK(charpoly(Matrix::zero(2, 2)) == Polynomial({Scalar(0), Scalar(0), Scalar(1)}));

    std::mt19937_64 rng(3);
    for (int n = 2; n <= 4; n++)
        for (int it = 0; it < 10; it++) {
            Matrix a = random_rational_matrix(rng, n, n);
            CHECK(charpoly(a) == charpoly_oracle(a));
        }
    CHECK_THROWS_AS(charpoly(Matrix::zero(2, 3)), Error);
}

TEST_CASE("Cayley-Hamilton spot checks") {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 6; n++) {
        Matrix a = random_rational_matrix(rng, n, n);
        CHECK(charpoly(a).eval_matrix(a).is_zero());
    }
}

TEST_CASE("eigen_quadratic exact paths") {
    Matrix d({{Scalar(1), Scalar(0), Scalar(0)},
              {Scalar(0), Scalar(1), Scalar(0)},
              {Scalar(0), Scalar(0), Scalar(0)}});
    auto e = eigen_quadratic(d);
    REQUIRE(e.exact);
    REQUIRE(e.pairs.size() == 2);
    CHECK(e.pairs[0].value == Scalar(1));
    CHECK(e.pairs[0].multiplicity == 2);
    CHECK(e.pairs[1].value == Scalar(0));

    // Killing matrix of sl(2,R) in the appendix: eigenvalues 8, 4, -4
    Matrix k = Matrix::from_ints({{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}, Rational(4));
    e = eigen_quadratic(k);
    REQUIRE(e.exact);
    REQUIRE(e.pairs.size() == 3);
    CHECK(e.pairs[0].value == Scalar(8));
    CHECK(e.pairs[1].value == Scalar(4));
    CHECK(e.pairs[2].value == Scalar(-4));

    // companion of t^4 - (3/8)t^3 + (1/256)t^2: the B-state spectrum
    Matrix c = companion({Scalar(0), Scalar(0), Scalar(1, 256), Scalar(-3, 8), Scalar(1)});
    e = eigen_quadratic(c);
    REQUIRE(e.exact);
    Scalar l1 = Scalar::quad(Rational(3, 16), Rational(1, 8), 2);
    Scalar l2 = Scalar::quad(Rational(3, 16), Rational(-1, 8), 2);
    REQUIRE(e.pairs.size() == 3);
    CHECK(e.pairs[0].value == l1);
    CHECK(e.pairs[1].value == l2);
    CHECK(e.pairs[2].value == Scalar(0));
    CHECK(e.pairs[2].multiplicity == 2);

    // eigenvalue sum equals trace (property)
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; it++) {
        Matrix a = random_rational_matrix(rng, 3, 3);
        auto ee = eigen_quadratic(a);
        if (!ee.exact) continue;
        Scalar sum;
        for (auto& [v, m] : ee.pairs)
            for (int t = 0; t < m; t++) sum = sum + v;
        CHECK(sum == a.trace());
    }
}

TEST_CASE("eigen_quadratic float fallback") {
    // t^3 - 2: irrational real cube root, conjugate complex pair
    Matrix c = companion({Scalar(-2), Scalar(0), Scalar(0), Scalar(1)});
    auto e = eigen_quadratic(c);
    REQUIRE(!e.exact);
    REQUIRE(e.approx.size() == 3);
    CHECK(e.residual <= 1e-10);
    double real_root = std::cbrt(2.0);
    bool found = false;
    for (auto& z : e.approx)
        if (std::abs(z - std::complex<double>(real_root, 0)) < 1e-9) found = true;
    CHECK(found);
}

TEST_CASE("congruence signature") {
    CHECK(congruence_signature(-Matrix::identity(3)) == Inertia{0, 3, 0});

    Matrix k = Matrix::from_ints({{4, 1, 1}, {1, 0, 2}, {1, 2, 0}}, Rational(24));
    CHECK(congruence_signature(k) == Inertia{2, 1, 0});

    Matrix z = Matrix::zero(2, 2);
    CHECK(congruence_signature(z) == Inertia{0, 0, 2});

    // invariance under congruence by unimodular integer matrices
    std::mt19937_64 rng(6);
    for (int it = 0; it < 25; it++) {
        Matrix a = random_rational_matrix(rng, 4, 4);
        Matrix s = a + a.transpose();
        Inertia base = congruence_signature(s);
        Matrix p = random_unimodular(rng, 4);
        Inertia moved = congruence_signature(p.transpose() * s * p);
        CHECK(base == moved);
    }

    CHECK_THROWS_AS(congruence_signature(random_rational_matrix(rng, 3, 3)), Error);

    // quadratic-field entries: sign decisions go through exact embeddings
    Matrix q({{Scalar::root_of(2), Scalar(0)},
              {Scalar(0), Scalar(1) - Scalar::root_of(2)}});
    CHECK(congruence_signature(q) == Inertia{1, 1, 0});

    // complex entries are rejected even when symmetric
    Matrix c({{Scalar::i()}});
    CHECK_THROWS_AS(congruence_signature(c), Error);
}

TEST_CASE("inverse and solve") {
    CHECK(inverse(Matrix::identity(4)) == Matrix::identity(4));

    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; it++) {
        Matrix a = random_rational_matrix(rng, 4, 4);
        if (det(a).is_zero()) continue;
        CHECK((a * inverse(a)).is_identity());
    }

    Matrix sing = Matrix::from_ints({{1, 2}, {2, 4}});
    CHECK_THROWS_AS(inverse(sing), Error);
    CHECK(det(sing).is_zero());

    // consistent and inconsistent systems
    Matrix a = Matrix::from_ints({{1, 2}, {2, 4}});
    auto sol = solve_linear(a, {Scalar(3), Scalar(6)});
    REQUIRE(sol.has_value());
    auto image = a.apply(*sol);
    CHECK(image[0] == Scalar(3));
    CHECK(image[1] == Scalar(6));
    CHECK(!solve_linear(a, {Scalar(3), Scalar(7)}).has_value());
}

TEST_CASE("det agrees with cofactor oracle") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 15; it++) {
        Matrix a = random_rational_matrix(rng, 4, 4);
        // oracle: constant term of charpoly_oracle is det(-A) = (-1)^n det(A)
        Polynomial p = charpoly_oracle(a);
        CHECK(det(a) == p.coeff(0));  // n = 4: (+1)^4
    }
    // quadratic-field entries
    Matrix q({{Scalar::root_of(2), Scalar(1)}, {Scalar(1), Scalar::root_of(2)}});
    CHECK(det(q) == Scalar(1));
    CHECK((q * inverse(q)).is_identity());
}
