#pragma once

#include <array>

#include "exalg/qubits.hpp"

namespace exalg {
namespace gates {

/// A registered constant matrix with its source location.
struct NamedConstant {
    std::string name;
    Matrix matrix;
    std::string provenance;
};

/// Read-only registry of every constant matrix the toolkit reproduces:
/// gates, observables, Lie-algebra bases and adjoint representations.
/// Throws UnknownConstant for unregistered names.
const Matrix& constant(const std::string& name);
const NamedConstant& constant_info(const std::string& name);
std::vector<std::string> constant_names();

enum class TripleKind { two_qubit, three_qubit };

/// {sx x sz, sz x sx, sy x sy} or its sz x (.) three-qubit lift:
/// pairwise commuting Hermitian involutions.
std::array<Matrix, 3> observable_triple(TripleKind kind);

/// Per-row eigenvalue signs of a gate against a commuting observable triple.
struct SignPattern {
    std::vector<std::array<int, 3>> rows;
    bool operator==(const SignPattern& o) const { return rows == o.rows; }
    std::string str() const;
};

/// The reference eigen-sign matrix of the S2 gate.
const SignPattern& s2_sign_pattern();

/// Verifies every row of `gate` is a joint eigenvector of the triple and
/// returns the sign pattern; throws NotEigenvector(row, observable) if not.
SignPattern joint_eigensign_check(const Matrix& gate, const std::array<Matrix, 3>& triple);

/// Row i of a gate as a pure state (width must be a power of two, unit norm).
PureState row_state(const Matrix& gate, int i);

struct RowReport {
    EntanglementProfile profile;
    bool b_type = false;
};

/// Entanglement profile of each row state of an 8-column gate.
std::vector<RowReport> gate_entanglement_report(const Matrix& gate);

/// G * G^T == I, exactly.
bool is_orthogonal(const Matrix& g);

}  // namespace gates
}  // namespace exalg
