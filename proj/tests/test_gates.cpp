#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "exalg/gates.hpp"

using namespace exalg;
using namespace exalg::gates;

TEST_CASE("registry basics") {
    const Matrix& s2 = constant("s2");
    CHECK(s2.rows() == 4);
    CHECK(s2.at(0, 0) == Scalar(1, 2));
    CHECK(s2.at(0, 1) == Scalar(-1, 2));

    CHECK(constant("sl3.h1") ==
          Matrix({{Scalar(0), Scalar(0), Scalar(0)},
                  {Scalar(0), Scalar(1), Scalar(0)},
                  {Scalar(0), Scalar(0), Scalar(-1)}}));

    const Matrix& xa4 = constant("x_a4");
    CHECK(xa4.rows() == 8);
    CHECK(xa4.at(0, 1) == Scalar(1, 2));
    CHECK(xa4.at(0, 2) == Scalar(-1, 2));

    CHECK_THROWS_AS(constant("nope"), Error);
    // the W'(E7) generator is deliberately absent, with a pointed message
    try {
        constant("we7.b");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::UnknownConstant);
        CHECK(std::string(e.what()).find("external reference") != std::string::npos);
    }
    CHECK(constant_names().size() > 30);
}

TEST_CASE("reference gates are exactly orthogonal") {
    for (const char* name : {"s2", "s3", "x_a4", "y_a4", "we8.g1"}) {
        const Matrix& g = constant(name);
        CHECK(is_orthogonal(g));
        CHECK((g.transpose() * g).is_identity());
    }
    // S2^{-1} = S2^T from the stored entries
    CHECK(inverse(constant("s2")) == constant("s2").transpose());
}

TEST_CASE("observable triples") {
    auto two = observable_triple(TripleKind::two_qubit);
    CHECK(two[0] == pauli_matrix("XZ"));
    CHECK(two[1] == pauli_matrix("ZX"));
    CHECK(two[2] == pauli_matrix("YY"));
    for (auto& o : two) {
        CHECK(o.is_hermitian());
        CHECK((o * o).is_identity());
        for (auto& e : o.entries()) CHECK(e.is_real());
    }
    for (int a = 0; a < 3; a++)
        for (int b = 0; b < 3; b++) CHECK(commutator(two[a], two[b]).is_zero());

    // product of the triple members is +I (each reference sign row multiplies to +1)
    CHECK((two[0] * two[1] * two[2]).is_identity());

    auto three = observable_triple(TripleKind::three_qubit);
    for (int k = 0; k < 3; k++) CHECK(three[k] == kron(pauli_matrix("Z"), two[k]));
    // sz^3 = sz: the three-qubit triple multiplies to sz (x) I
    CHECK(three[0] * three[1] * three[2] == kron(pauli_matrix("Z"), Matrix::identity(4)));
}

TEST_CASE("joint eigensign of S2 matches the reference sign matrix") {
    auto pattern = joint_eigensign_check(constant("s2"), observable_triple(TripleKind::two_qubit));
    CHECK(pattern == s2_sign_pattern());
    CHECK(pattern.str() == "+-- -+- --+ +++");
    // every row's signs multiply to +1, consistent with triple product = +I
    for (auto& r : pattern.rows) CHECK(r[0] * r[1] * r[2] == 1);
}

TEST_CASE("joint eigensign of S3 under the three-qubit triple") {
    auto pattern = joint_eigensign_check(constant("s3"), observable_triple(TripleKind::three_qubit));
    CHECK(pattern.rows.size() == 8);
    // sign product per row = first-qubit sz eigenvalue (+1 on rows supported
    // in the left block, -1 on the right block)
    const int expect[8] = {-1, +1, -1, +1, +1, +1, -1, -1};
    for (int i = 0; i < 8; i++)
        CHECK(pattern.rows[i][0] * pattern.rows[i][1] * pattern.rows[i][2] == expect[i]);
}

TEST_CASE("identity rows are not joint eigenvectors") {
    try {
        joint_eigensign_check(Matrix::identity(4), observable_triple(TripleKind::two_qubit));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::NotEigenvector);
        CHECK(e.detail_a == 1);  // row 1
        CHECK(e.detail_b == 1);  // first observable
    }
}

TEST_CASE("row states") {
    PureState r1 = row_state(constant("s2"), 0);
    CHECK(r1.amps() == std::vector<Scalar>{Scalar(1, 2), Scalar(-1, 2), Scalar(1, 2), Scalar(1, 2)});

    PureState x1 = row_state(constant("x_a4"), 0);
    // (|001> - |010> - |011> + |110>)/2
    CHECK(x1.amp(1) == Scalar(1, 2));
    CHECK(x1.amp(2) == Scalar(-1, 2));
    CHECK(x1.amp(3) == Scalar(-1, 2));
    CHECK(x1.amp(6) == Scalar(1, 2));

    CHECK_THROWS_AS(row_state(Matrix::from_ints({{1, 1}, {0, 1}}), 0), Error);
}

TEST_CASE("A4 generator entanglement: columns balanced, rows one tangle short") {
    // The balance claimed for these generators holds for the COLUMN states of
    // the stored matrices (their rows have two-tangle multiset {0,1/4,1/4}).
    for (const char* name : {"x_a4", "y_a4"}) {
        auto col_rep = gate_entanglement_report(constant(name).transpose());
        REQUIRE(col_rep.size() == 8);
        for (auto& r : col_rep) {
            CHECK(r.b_type);
            REQUIRE(r.profile.tau3.is_exact());
            CHECK(*r.profile.tau3.exact == Scalar(1, 4));  // the common tangle value
        }

        auto row_rep = gate_entanglement_report(constant(name));
        for (auto& r : row_rep) {
            CHECK(!r.b_type);
            CHECK(*r.profile.tau3.exact == Scalar(1, 4));
            std::multiset<std::string> two = {r.profile.tau_ab.str(), r.profile.tau_ac.str(),
                                              r.profile.tau_bc.str()};
            CHECK(two == std::multiset<std::string>{"0", "1/4", "1/4"});
        }
    }
    // x and y rows carry the same tangle data (rows similar up to permutation)
    auto xr = gate_entanglement_report(constant("x_a4"));
    auto yr = gate_entanglement_report(constant("y_a4"));
    std::multiset<std::string> xs, ys;
    for (int i = 0; i < 8; i++) {
        xs.insert(xr[i].profile.tau3.str() + "|" + xr[i].profile.tau_ab.str());
        ys.insert(yr[i].profile.tau3.str() + "|" + yr[i].profile.tau_ab.str());
    }
    CHECK(xs == ys);
}

TEST_CASE("S3 rows are not all B-type") {
    auto rep = gate_entanglement_report(constant("s3"));
    int b_count = 0;
    for (auto& r : rep) b_count += r.b_type;
    CHECK(b_count < 8);
    // each S3 row is a product state on one factor: no three-tangle at all
    for (auto& r : rep) {
        REQUIRE(r.profile.tau3.is_exact());
        CHECK(r.profile.tau3.exact->is_zero());
        CHECK(!r.b_type);
    }
}

TEST_CASE("adjoint constants satisfy the bracket homomorphism") {
    // ad_[x,y] = [ad_x, ad_y] on a few pairs, linking the 3x3 and 8x8 data
    const char* names[8] = {"x1", "x2", "x3", "y1", "y2", "y3", "h1", "h2"};
    auto ad = [&](int i) { return constant(std::string("sl3.ad.") + names[i]); };
    auto el = [&](int i) { return constant(std::string("sl3.") + names[i]); };
    // [h1, x1] = 2 x1 (the footnote example)
    CHECK(commutator(el(6), el(0)) == Scalar(2) * el(0));
    CHECK(commutator(ad(6), ad(0)) == Scalar(2) * ad(0));
    // [x1, y1] = h1 both downstairs and upstairs
    CHECK(commutator(el(0), el(3)) == el(6));
    CHECK(commutator(ad(0), ad(3)) == ad(6));
    // kron builds Eq. (4) members from Eq. (3)
    CHECK(kron(pauli_matrix("Z"), pauli_matrix("XZ")) ==
          observable_triple(TripleKind::three_qubit)[0]);
}
