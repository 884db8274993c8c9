#include "exalg/json_io.hpp"

#include <fstream>

namespace exalg {
namespace io {

namespace {

long long field_disc(const std::vector<Scalar>& entries) {
    long long d = 0;
    for (auto& e : entries)
        if (!e.is_rational()) {
            if (d != 0 && d != e.disc())
                fail(Err::FieldMismatch, "entries mix distinct quadratic fields");
            d = e.disc();
        }
    return d;
}

json field_json(long long d) {
    if (d == 0) return json{{"type", "rational"}};
    return json{{"type", "quadratic"}, {"d", d}};
}

long long field_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type"))
        fail(Err::ParseError, where + ": field must be an object with a type");
    std::string type = j.at("type").get<std::string>();
    if (type == "rational") return 0;
    if (type == "quadratic") {
        if (!j.contains("d") || !j.at("d").is_number_integer())
            fail(Err::ParseError, where + ": quadratic field needs an integer d");
        return j.at("d").get<long long>();
    }
    fail(Err::ParseError, where + ": unknown field type '" + type + "'");
}

Scalar parse_entry(const json& cell, long long d, const std::string& where) {
    if (!cell.is_string()) fail(Err::ParseError, where + ": entries must be scalar strings");
    Scalar s = Scalar::parse(cell.get<std::string>());
    if (!s.is_rational() && s.disc() != d)
        fail(Err::ParseError,
             where + ": entry '" + cell.get<std::string>() + "' is outside the declared field");
    return s;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); i++) {
        json row = json::array();
        for (int j = 0; j < m.cols(); j++) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"field", field_json(field_disc(m.entries()))},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object()) fail(Err::ParseError, "matrix: expected an object");
    for (const char* key : {"field", "rows", "cols", "entries"})
        if (!j.contains(key)) fail(Err::ParseError, std::string("matrix: missing '") + key + "'");
    long long d = field_from_json(j.at("field"), "matrix.field");
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    if (rows < 1 || cols < 1) fail(Err::ParseError, "matrix: rows/cols must be positive");
    const json& entries = j.at("entries");
    if (!entries.is_array() || int(entries.size()) != rows)
        fail(Err::ParseError, "matrix.entries: expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; i++) {
        const json& row = entries.at(i);
        if (!row.is_array() || int(row.size()) != cols)
            fail(Err::ParseError,
                 "matrix.entries[" + std::to_string(i) + "]: expected " + std::to_string(cols) +
                     " columns");
        for (int c = 0; c < cols; c++)
            m.at(i, c) = parse_entry(row.at(c), d,
                                     "matrix.entries[" + std::to_string(i) + "][" +
                                         std::to_string(c) + "]");
    }
    return m;
}

json state_to_json(const PureState& s) {
    if (!s.is_exact()) fail(Err::ParseError, "float states have no exact file form");
    json amps = json::array();
    for (auto& a : s.amps()) amps.push_back(a.str());
    return json{{"qubits", s.qubits()},
                {"field", field_json(field_disc(s.amps()))},
                {"amps", std::move(amps)}};
}

PureState state_from_json(const json& j) {
    if (!j.is_object()) fail(Err::ParseError, "state: expected an object");
    for (const char* key : {"qubits", "field", "amps"})
        if (!j.contains(key)) fail(Err::ParseError, std::string("state: missing '") + key + "'");
    int n = j.at("qubits").get<int>();
    long long d = field_from_json(j.at("field"), "state.field");
    const json& amps = j.at("amps");
    if (!amps.is_array()) fail(Err::ParseError, "state.amps: expected an array");
    std::vector<Scalar> a;
    for (size_t k = 0; k < amps.size(); k++)
        a.push_back(parse_entry(amps.at(k), d, "state.amps[" + std::to_string(k) + "]"));
    return PureState::exact(n, std::move(a));
}

json gens_to_json(const std::vector<Matrix>& gens) {
    json arr = json::array();
    for (auto& g : gens) arr.push_back(matrix_to_json(g));
    return arr;
}

std::vector<Matrix> gens_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        fail(Err::ParseError, "generators: expected a non-empty array of matrices");
    std::vector<Matrix> gens;
    for (auto& item : j) gens.push_back(matrix_from_json(item));
    return gens;
}

json basis_to_json(const NamedBasis& b) {
    json arr = json::array();
    for (size_t i = 0; i < b.matrices.size(); i++) {
        if (i < b.names.size() && !b.names[i].empty())
            arr.push_back(json{{"name", b.names[i]}, {"matrix", matrix_to_json(b.matrices[i])}});
        else
            arr.push_back(matrix_to_json(b.matrices[i]));
    }
    return arr;
}

NamedBasis basis_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        fail(Err::ParseError, "basis: expected a non-empty array");
    NamedBasis b;
    for (auto& item : j) {
        if (item.is_object() && item.contains("matrix")) {
            b.names.push_back(item.value("name", ""));
            b.matrices.push_back(matrix_from_json(item.at("matrix")));
        } else {
            b.names.push_back("");
            b.matrices.push_back(matrix_from_json(item));
        }
    }
    return b;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(Err::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(Err::ParseError, "cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace io
}  // namespace exalg
