#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exalg/gates.hpp"
#include "exalg/json_io.hpp"

using namespace exalg;
using io::json;

TEST_CASE("matrix json round-trip over the whole registry") {
    for (auto& name : gates::constant_names()) {
        const Matrix& m = gates::constant(name);
        Matrix back = io::matrix_from_json(io::matrix_to_json(m));
        CHECK(back == m);
    }
}

TEST_CASE("matrix json rejects malformed input") {
    json good = io::matrix_to_json(gates::constant("s2"));
    CHECK(io::matrix_from_json(good) == gates::constant("s2"));

    json bad = good;
    bad.erase("rows");
    CHECK_THROWS_AS(io::matrix_from_json(bad), Error);

    bad = good;
    bad["entries"][0][1] = "not a scalar";
    CHECK_THROWS_AS(io::matrix_from_json(bad), Error);

    bad = good;
    bad["field"] = json{{"type", "quadratic"}};  // missing d
    CHECK_THROWS_AS(io::matrix_from_json(bad), Error);

    // entry outside the declared field
    bad = good;
    bad["entries"][0][0] = "1/2*sqrt(2)";
    CHECK_THROWS_AS(io::matrix_from_json(bad), Error);
}

TEST_CASE("state json round-trip") {
    std::vector<Scalar> amps(8);
    amps[0] = amps[5] = amps[6] = amps[7] = Scalar(1, 2);
    PureState b = PureState::exact(3, amps);
    PureState back = io::state_from_json(io::state_to_json(b));
    CHECK(back.amps() == b.amps());
    CHECK(back.qubits() == 3);

    // quadratic amplitudes carry the field tag
    std::vector<Scalar> g(8);
    g[0] = g[7] = Scalar::quad(Rational(0), Rational(1, 2), 2);
    json j = io::state_to_json(PureState::exact(3, g));
    CHECK(j["field"]["type"] == "quadratic");
    CHECK(j["field"]["d"] == 2);
    CHECK(io::state_from_json(j).amps() == g);

    json bad = j;
    bad["amps"][0] = "1";  // breaks normalization
    CHECK_THROWS_AS(io::state_from_json(bad), Error);
}

TEST_CASE("generator and basis files") {
    auto gens = std::vector<Matrix>{gates::constant("x_a4"), gates::constant("y_a4")};
    auto back = io::gens_from_json(io::gens_to_json(gens));
    REQUIRE(back.size() == 2);
    CHECK(back[0] == gens[0]);
    CHECK(back[1] == gens[1]);

    io::NamedBasis nb;
    nb.names = {"h1", ""};
    nb.matrices = {gates::constant("sl3.h1"), gates::constant("sl3.h2")};
    io::NamedBasis nb2 = io::basis_from_json(io::basis_to_json(nb));
    REQUIRE(nb2.matrices.size() == 2);
    CHECK(nb2.names[0] == "h1");
    CHECK(nb2.names[1].empty());
    CHECK(nb2.matrices[0] == nb.matrices[0]);

    CHECK_THROWS_AS(io::gens_from_json(json::array()), Error);
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), Error);
}

TEST_CASE("random scalar matrices survive the file format") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 7);
    for (int it = 0; it < 20; it++) {
        Matrix m(3, 4);
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 4; j++) {
                Rational a(num(rng), den(rng));
                Rational b(num(rng), den(rng));
                m.at(i, j) = (it % 2) ? Scalar::quad(a, b, -1)
                                      : (b.is_zero() ? Scalar(a) : Scalar::quad(a, b, 5));
            }
        CHECK(io::matrix_from_json(io::matrix_to_json(m)) == m);
    }
}

TEST_CASE("json serialization is byte-stable") {
    json j1 = io::matrix_to_json(gates::constant("ga4.y3"));
    json j2 = io::matrix_to_json(gates::constant("ga4.y3"));
    CHECK(j1.dump(2) == j2.dump(2));
}
