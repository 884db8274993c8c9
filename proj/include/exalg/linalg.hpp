#pragma once

#include <complex>
#include <optional>

#include "exalg/matrix.hpp"

namespace exalg {

struct RankKernel {
    int rank = 0;
    std::vector<std::vector<Scalar>> kernel;  // reduced-echelon derived basis
};

/// Rank and an exact kernel basis (deterministic: pivots are the first
/// nonzero entry in a column-major scan, kernel vectors come from the RREF
/// free columns in ascending order).
RankKernel rank_kernel(const Matrix& a);

/// Monic characteristic polynomial det(tI - A) via Faddeev-LeVerrier
/// (divisions by integers only, valid over any characteristic-0 field).
Polynomial charpoly(const Matrix& a);

struct EigenPair {
    Scalar value;
    int multiplicity = 1;
};

struct EigenResult {
    bool exact = true;
    std::vector<EigenPair> pairs;                // exact path
    std::vector<std::complex<double>> approx;    // float fallback, all n roots
    double residual = 0.0;                       // max |p(root)| scale for the float path
};

/// Exact spectrum when the characteristic polynomial splits into rational
/// linear factors times at most one quadratic (roots then live in
/// Q(sqrt(disc))); otherwise a float spectrum tagged inexact with residual
/// tolerance 1e-10.
EigenResult eigen_quadratic(const Matrix& a);

struct Inertia {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
    bool operator==(const Inertia& o) const {
        return positives == o.positives && negatives == o.negatives && zeros == o.zeros;
    }
};

/// Sylvester inertia of a symmetric matrix with real-embeddable entries,
/// by exact symmetric congruence (Lagrange) reduction.
Inertia congruence_signature(const Matrix& s);

/// Exact determinant (fraction-free Bareiss elimination).
Scalar det(const Matrix& a);

Matrix inverse(const Matrix& a);  // throws Singular

/// Exact solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const Matrix& a, const std::vector<Scalar>& b);

/// Coordinates of v in the row span of `rows` (each row one spanning vector),
/// or nullopt if v is outside the span.
std::optional<std::vector<Scalar>> span_coordinates(const Matrix& rows,
                                                    const std::vector<Scalar>& v);

/// Reduced row echelon form with pivot columns (field arithmetic, exact).
struct Echelon {
    Matrix rref;
    std::vector<int> pivot_cols;
    int rank = 0;
};
Echelon rref(const Matrix& a);

/// Roots of a polynomial with real or complex coefficients by
/// Durand-Kerner iteration (the float fallback path).
std::vector<std::complex<double>> poly_roots_numeric(const std::vector<std::complex<double>>& monic);

}  // namespace exalg
