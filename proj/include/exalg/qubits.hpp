#pragma once

#include <array>
#include <complex>
#include <optional>

#include "exalg/linalg.hpp"

namespace exalg {

/// n-qubit pure state, basis order |q1 q2 ... qn> with q1 the leftmost /
/// most significant qubit. Amplitudes are exact scalars, or complex doubles
/// for the float-tagged variant (non-exact phases, random local unitaries).
class PureState {
  public:
    static PureState exact(int qubits, std::vector<Scalar> amps);       // checks norm
    static PureState floating(int qubits, std::vector<std::complex<double>> amps);

    int qubits() const noexcept { return n_; }
    bool is_exact() const noexcept { return famps_.empty(); }
    const std::vector<Scalar>& amps() const { return amps_; }
    const std::vector<std::complex<double>>& famps() const { return famps_; }
    std::vector<std::complex<double>> to_float_amps() const;

    const Scalar& amp(size_t idx) const { return amps_[idx]; }

  private:
    int n_ = 0;
    std::vector<Scalar> amps_;
    std::vector<std::complex<double>> famps_;
};

/// Hermitian unit-trace operator on k qubits.
struct DensityMatrix {
    Matrix m;
    int qubits() const;
    static DensityMatrix from_matrix(Matrix m);  // validates hermiticity and trace
};

/// A measurement-style value: exact when the computation stayed in the
/// scalar tower, with a double projection always available.
struct MValue {
    std::optional<Scalar> exact;
    double value = 0.0;

    MValue() = default;
    MValue(Scalar s) : exact(std::move(s)), value(exact->to_double()) {}
    explicit MValue(double v) : value(v) {}
    bool is_exact() const { return exact.has_value(); }
    std::string str() const;
};

/// 2^n x 2^n tensor product of Pauli matrices for a string over {I,X,Y,Z}.
Matrix pauli_matrix(const std::string& letters);

/// Five-parameter generic state  l0|000> + l1 e^{i phi}|100> + l2|101> +
/// l3|110> + l4|111>. Exact for phi in {0, pi}; float state otherwise.
PureState generic_state(const std::array<Scalar, 5>& lambda, double phi);

/// Partial trace onto the kept qubits (1-based, in the given order).
DensityMatrix reduce(const PureState& s, const std::vector<int>& keep);

/// (sigma_y x sigma_y) rho* (sigma_y x sigma_y) for a two-qubit rho.
DensityMatrix spin_flip(const DensityMatrix& rho);

/// C = 2|ad - bc| for a two-qubit pure state.
MValue concurrence_pure2(const PureState& s);

/// Wootters concurrence max{0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4)} of a
/// two-qubit density matrix, eigenvalues of rho*rho~ in decreasing order.
MValue concurrence_mixed2(const DensityMatrix& rho);

/// Squared mixed-state concurrence. Exact whenever rho*rho~ has rank <= 2
/// with a rational eigenvalue product (always the case for reductions of
/// exact pure three-qubit states).
MValue tangle_mixed2(const DensityMatrix& rho);

/// Three-tangle 4|d1 - 2 d2 + 4 d3| of a three-qubit state.
MValue three_tangle(const PureState& s);

/// Linear entropy 4 det(rho_party) of one qubit against the rest.
MValue one_tangle(const PureState& s, int party);

struct EntanglementProfile {
    MValue tau3;
    MValue tau_ab, tau_ac, tau_bc;        // two-tangles
    MValue tau_a, tau_b, tau_c;           // one-tangles
    std::array<MValue, 3> residuals;      // tau_X - (tau3 + tau_XY + tau_XZ)
    bool all_exact() const;
};

EntanglementProfile entanglement_profile(const PureState& s);

/// B-type balance: tau3 = tau_AB = tau_AC = tau_BC > 0 (exact equality on
/// the exact path, 1e-9 tolerance on the float path).
bool is_b_type(const EntanglementProfile& p);

}  // namespace exalg
