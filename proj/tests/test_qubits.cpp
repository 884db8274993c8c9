#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exalg/qubits.hpp"

using namespace exalg;

namespace {

const Scalar half(1, 2);

PureState b_state() {
    // (|000> + |101> + |110> + |111>) / 2
    std::vector<Scalar> amps(8);
    amps[0] = amps[5] = amps[6] = amps[7] = half;
    return PureState::exact(3, amps);
}

PureState ghz_state() {
    std::vector<Scalar> amps(8);
    amps[0] = amps[7] = Scalar::quad(Rational(0), Rational(1, 2), 2);  // 1/sqrt2
    return PureState::exact(3, amps);
}

PureState w_state() {
    std::vector<Scalar> amps(8);
    amps[1] = amps[2] = amps[4] = Scalar::quad(Rational(0), Rational(1, 3), 3);  // 1/sqrt3
    return PureState::exact(3, amps);
}

// Rational points on the unit 7-sphere via stereographic projection:
// x0 = (1-|y|^2)/(1+|y|^2), xi = 2 yi / (1+|y|^2).
PureState random_rational_state(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> pick(-3, 3);
    while (true) {
        Rational y[7], norm;
        for (auto& v : y) {
            v = Rational(pick(rng), 1 + std::abs(pick(rng)));
            norm = norm + v * v;
        }
        Rational denom = Rational(1) + norm;
        std::vector<Scalar> amps(8);
        amps[0] = Scalar((Rational(1) - norm) / denom);
        for (int k = 0; k < 7; k++) amps[k + 1] = Scalar(Rational(2) * y[k] / denom);
        if (amps[0].is_zero() && amps[1].is_zero()) continue;
        return PureState::exact(3, amps);
    }
}

Matrix reference_rho_bc() {
    return Matrix::from_ints({{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}},
                             Rational(1, 4));
}

Matrix reference_rho_ab() {
    return Matrix::from_ints({{1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 2}},
                             Rational(1, 4));
}

}  // namespace

TEST_CASE("pauli matrices") {
    CHECK(pauli_matrix("I") == Matrix::identity(2));
    Matrix yy = pauli_matrix("YY");
    // the i's cancel: antidiag(-1, 1, 1, -1)
    Matrix expect = Matrix::from_ints(
        {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
    CHECK(yy == expect);
    for (const char* p : {"XZ", "ZX", "YY", "XX", "ZZ"}) {
        Matrix m = pauli_matrix(p);
        CHECK(m.is_hermitian());
        CHECK((m * m).is_identity());
    }
    CHECK(pauli_matrix("XZ") == kron(pauli_matrix("X"), pauli_matrix("Z")));
}

TEST_CASE("generic_state builds the named representatives") {
    Scalar rt2inv = Scalar::quad(Rational(0), Rational(1, 2), 2);
    PureState ghz = generic_state({rt2inv, Scalar(0), Scalar(0), Scalar(0), rt2inv}, 0.0);
    CHECK(ghz.amps() == ghz_state().amps());

    PureState b = generic_state({half, Scalar(0), half, half, half}, 0.0);
    CHECK(b.amps() == b_state().amps());

    PureState product = generic_state({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}, 0.0);
    CHECK(product.amp(0) == Scalar(1));

    CHECK_THROWS_AS(generic_state({half, half, half, half, half}, 0.0), Error);  // not normalized
    CHECK_THROWS_AS(generic_state({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}, 4.0),
                    Error);  // phase out of range

    // non-exact phase gives a float-tagged state
    Scalar l(1, 2);
    PureState f = generic_state({l, l, l, l, Scalar(0)}, 1.0);
    CHECK(!f.is_exact());
}

TEST_CASE("reduce reproduces the reference B-state density matrices") {
    PureState b = b_state();
    CHECK(reduce(b, {2, 3}).m == reference_rho_bc());
    CHECK(reduce(b, {1, 2}).m == reference_rho_ab());
    CHECK(reduce(b, {1, 3}).m == reference_rho_ab());  // rho_AC coincides with rho_AB

    Matrix rho_a = reduce(b, {1}).m;
    CHECK(rho_a == Matrix({{Scalar(1, 4), Scalar(0)}, {Scalar(0), Scalar(3, 4)}}));

    // reduce(|000>, {A,B}) = |00><00|
    std::vector<Scalar> zero(8);
    zero[0] = Scalar(1);
    Matrix rho = reduce(PureState::exact(3, zero), {1, 2}).m;
    CHECK(rho.at(0, 0) == Scalar(1));
    CHECK(rho.trace() == Scalar(1));

    CHECK_THROWS_AS(reduce(b, {}), Error);
}

TEST_CASE("reduce preserves trace and hermiticity") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 50; it++) {
        PureState s = random_rational_state(rng);
        for (auto& keep : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 3}}) {
            DensityMatrix rho = reduce(s, keep);
            CHECK(rho.m.trace() == Scalar(1));
            CHECK(rho.m.is_hermitian());
        }
    }
}

TEST_CASE("spin flip") {
    // maximally mixed is invariant
    Matrix quarter = Scalar(1, 4) * Matrix::identity(4);
    CHECK(spin_flip(DensityMatrix{quarter}).m == quarter);

    // |00><00| -> |11><11|
    Matrix p00 = Matrix::zero(4, 4);
    p00.at(0, 0) = Scalar(1);
    Matrix f = spin_flip(DensityMatrix{p00}).m;
    CHECK(f.at(3, 3) == Scalar(1));
    CHECK(f.at(0, 0) == Scalar(0));

    CHECK_THROWS_AS(spin_flip(DensityMatrix{Matrix::identity(2)}), Error);
}

TEST_CASE("B-state spectrum of rho * rho~ lives in Q(sqrt2)") {
    PureState b = b_state();
    for (auto& keep : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}) {
        DensityMatrix rho = reduce(b, keep);
        Matrix prod = rho.m * spin_flip(rho).m;
        // charpoly: t^4 - (3/8) t^3 + (1/256) t^2, frozen from the eigenvalue set
        Polynomial expect({Scalar(0), Scalar(0), Scalar(1, 256), Scalar(-3, 8), Scalar(1)});
        CHECK(charpoly(prod) == expect);
        auto eig = eigen_quadratic(prod);
        REQUIRE(eig.exact);
        CHECK(eig.pairs[0].value == Scalar::quad(Rational(3, 16), Rational(1, 8), 2));
        CHECK(eig.pairs[1].value == Scalar::quad(Rational(3, 16), Rational(-1, 8), 2));
        CHECK(eig.pairs[2].value == Scalar(0));
        CHECK(eig.pairs[2].multiplicity == 2);
    }
}

TEST_CASE("concurrence of pure two-qubit states") {
    Scalar rt2inv = Scalar::quad(Rational(0), Rational(1, 2), 2);
    PureState bell = PureState::exact(2, {rt2inv, Scalar(0), Scalar(0), rt2inv});
    CHECK(*concurrence_pure2(bell).exact == Scalar(1));

    PureState sep = PureState::exact(2, {Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
    CHECK(*concurrence_pure2(sep).exact == Scalar(0));

    PureState h2 = PureState::exact(2, {half, half, half, -half});
    CHECK(*concurrence_pure2(h2).exact == Scalar(1));

    CHECK_THROWS_AS(concurrence_pure2(b_state()), Error);
}

TEST_CASE("mixed concurrence (Wootters)") {
    // rho_AB of |B>: concurrence 1/2, tangle 1/4
    DensityMatrix rho{reference_rho_ab()};
    MValue c = concurrence_mixed2(rho);
    REQUIRE(c.is_exact());
    CHECK(*c.exact == half);
    CHECK(*tangle_mixed2(rho).exact == Scalar(1, 4));

    // maximally mixed: 0
    DensityMatrix mixed{Scalar(1, 4) * Matrix::identity(4)};
    CHECK(*concurrence_mixed2(mixed).exact == Scalar(0));

    CHECK_THROWS_AS(concurrence_mixed2(DensityMatrix{Matrix::identity(2)}), Error);
}

TEST_CASE("mixed concurrence equals pure concurrence on projectors") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long long> pick(-3, 3);
    for (int it = 0; it < 60; it++) {
        Rational y[3], norm;
        for (auto& v : y) {
            v = Rational(pick(rng), 1 + std::abs(pick(rng)));
            norm = norm + v * v;
        }
        Rational denom = Rational(1) + norm;
        std::vector<Scalar> amps(4);
        amps[0] = Scalar((Rational(1) - norm) / denom);
        for (int k = 0; k < 3; k++) amps[k + 1] = Scalar(Rational(2) * y[k] / denom);
        PureState s = PureState::exact(2, amps);
        // projector |s><s|
        Matrix proj(4, 4);
        for (int i = 0; i < 4; i++)
            for (int j = 0; j < 4; j++) proj.at(i, j) = amps[i] * amps[j].cconj();
        MValue cm = concurrence_mixed2(DensityMatrix{proj});
        MValue cp = concurrence_pure2(s);
        if (cm.is_exact() && cp.is_exact()) {
            CHECK(*cm.exact == *cp.exact);
        } else {
            CHECK(std::abs(cm.value - cp.value) < 1e-9);
        }
    }
}

TEST_CASE("three-tangle of the named states") {
    CHECK(*three_tangle(ghz_state()).exact == Scalar(1));
    CHECK(*three_tangle(w_state()).exact == Scalar(0));
    CHECK(*three_tangle(b_state()).exact == Scalar(1, 4));
    std::vector<Scalar> zero(8);
    zero[0] = Scalar(1);
    CHECK(*three_tangle(PureState::exact(3, zero)).exact == Scalar(0));
}

TEST_CASE("one-tangles") {
    CHECK(*one_tangle(b_state(), 1).exact == Scalar(3, 4));
    CHECK(*one_tangle(ghz_state(), 1).exact == Scalar(1));
    std::vector<Scalar> zero(8);
    zero[0] = Scalar(1);
    CHECK(*one_tangle(PureState::exact(3, zero), 2).exact == Scalar(0));
}

TEST_CASE("entanglement profiles of B, W, GHZ") {
    EntanglementProfile b = entanglement_profile(b_state());
    CHECK(*b.tau3.exact == Scalar(1, 4));
    CHECK(*b.tau_ab.exact == Scalar(1, 4));
    CHECK(*b.tau_ac.exact == Scalar(1, 4));
    CHECK(*b.tau_bc.exact == Scalar(1, 4));
    CHECK(*b.tau_a.exact == Scalar(3, 4));
    CHECK(*b.tau_b.exact == Scalar(3, 4));
    CHECK(*b.tau_c.exact == Scalar(3, 4));
    for (auto& r : b.residuals) CHECK(r.exact->is_zero());
    CHECK(is_b_type(b));

    EntanglementProfile w = entanglement_profile(w_state());
    CHECK(*w.tau3.exact == Scalar(0));
    CHECK(*w.tau_ab.exact == Scalar(4, 9));
    CHECK(*w.tau_bc.exact == Scalar(4, 9));
    CHECK(*w.tau_a.exact == Scalar(8, 9));
    for (auto& r : w.residuals) CHECK(r.exact->is_zero());
    CHECK(!is_b_type(w));

    EntanglementProfile g = entanglement_profile(ghz_state());
    CHECK(*g.tau3.exact == Scalar(1));
    CHECK(*g.tau_ab.exact == Scalar(0));
    CHECK(*g.tau_a.exact == Scalar(1));
    for (auto& r : g.residuals) CHECK(r.exact->is_zero());
    CHECK(!is_b_type(g));
}

TEST_CASE("monogamy residuals vanish on random exact states") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 200; it++) {
        PureState s = random_rational_state(rng);
        EntanglementProfile p = entanglement_profile(s);
        for (auto& r : p.residuals) {
            REQUIRE(r.is_exact());
            CHECK(r.exact->is_zero());
        }
    }
}

TEST_CASE("three-tangle is permutation invariant") {
    std::mt19937_64 rng(13);
    auto permute = [](const PureState& s, const int perm[3]) {
        std::vector<Scalar> out(8);
        for (int idx = 0; idx < 8; idx++) {
            int bits[3] = {(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
            int nidx = (bits[perm[0]] << 2) | (bits[perm[1]] << 1) | bits[perm[2]];
            out[nidx] = s.amp(idx);
        }
        return PureState::exact(3, out);
    };
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int it = 0; it < 50; it++) {
        PureState s = random_rational_state(rng);
        Scalar base = *three_tangle(s).exact;
        for (auto& perm : perms) CHECK(*three_tangle(permute(s, perm)).exact == base);
    }
}

TEST_CASE("three-tangle invariant under single-qubit sign flips") {
    std::mt19937_64 rng(14);
    for (int it = 0; it < 30; it++) {
        PureState s = random_rational_state(rng);
        Scalar base = *three_tangle(s).exact;
        for (int q = 0; q < 3; q++) {
            std::vector<Scalar> flipped(8);
            for (int idx = 0; idx < 8; idx++) {
                bool neg = (idx >> (2 - q)) & 1;
                flipped[idx] = neg ? -s.amp(idx) : s.amp(idx);
            }
            CHECK(*three_tangle(PureState::exact(3, flipped)).exact == base);
        }
    }
}

TEST_CASE("two-qubit concurrence invariant under single-qubit sign flips") {
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<long long> pick(-3, 3);
    for (int it = 0; it < 30; it++) {
        Rational y[3], norm;
        for (auto& v : y) {
            v = Rational(pick(rng), 1 + std::abs(pick(rng)));
            norm = norm + v * v;
        }
        Rational denom = Rational(1) + norm;
        std::vector<Scalar> amps(4);
        amps[0] = Scalar((Rational(1) - norm) / denom);
        for (int k = 0; k < 3; k++) amps[k + 1] = Scalar(Rational(2) * y[k] / denom);
        PureState s = PureState::exact(2, amps);
        MValue base = concurrence_pure2(s);
        REQUIRE(base.is_exact());
        for (int q = 0; q < 2; q++) {
            std::vector<Scalar> flipped(4);
            for (int idx = 0; idx < 4; idx++) {
                bool neg = (idx >> (1 - q)) & 1;
                flipped[idx] = neg ? -amps[idx] : amps[idx];
            }
            CHECK(*concurrence_pure2(PureState::exact(2, flipped)).exact == *base.exact);
        }
    }
}

TEST_CASE("float path: three-tangle stable under random local unitaries") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    for (int it = 0; it < 20; it++) {
        PureState s = random_rational_state(rng);
        double base = three_tangle(s).value;
        // apply a random SU(2) on each qubit (floats)
        auto amps = s.to_float_amps();
        for (int q = 0; q < 3; q++) {
            double t = angle(rng), ph1 = angle(rng), ph2 = angle(rng);
            std::complex<double> u00 = std::polar(std::cos(t), ph1);
            std::complex<double> u01 = std::polar(std::sin(t), ph2);
            std::complex<double> u10 = -std::conj(u01);
            std::complex<double> u11 = std::conj(u00);
            std::vector<std::complex<double>> next(8);
            for (int idx = 0; idx < 8; idx++) {
                int bit = (idx >> (2 - q)) & 1;
                int base_idx = idx & ~(1 << (2 - q));
                int idx0 = base_idx, idx1 = base_idx | (1 << (2 - q));
                next[idx] += (bit ? u10 : u00) * amps[idx0];
                next[idx] += (bit ? u11 : u01) * amps[idx1];
            }
            amps = next;
        }
        PureState rotated = PureState::floating(3, amps);
        CHECK(std::abs(three_tangle(rotated).value - base) < 1e-9);
        // the full profile stays consistent on the float path
        EntanglementProfile p = entanglement_profile(rotated);
        for (auto& r : p.residuals) CHECK(std::abs(r.value) < 1e-8);
    }
}
