#pragma once

#include <map>
#include <optional>

#include "exalg/linalg.hpp"

namespace exalg {
namespace lie {

/// A list of linearly independent square matrices spanning a subspace of
/// gl(n), kept in the caller's order (structure constants, Killing data and
/// adjoint matrices are all relative to this order).
class LieAlgebraBasis {
  public:
    static LieAlgebraBasis from(std::vector<Matrix> basis);  // checks independence
    /// Zero-dimensional subalgebra of gl(ambient) (derived algebra of an
    /// abelian algebra, center of a semisimple one).
    static LieAlgebraBasis empty(int ambient);

    int dim() const { return int(basis_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<Matrix>& basis() const { return basis_; }
    const Matrix& element(int i) const { return basis_[i]; }

    /// Coordinates of m in the span, or nullopt when outside.
    std::optional<std::vector<Scalar>> coords(const Matrix& m) const;
    bool in_span(const Matrix& m) const { return coords(m).has_value(); }

    /// Every pairwise bracket stays in the span.
    bool is_bracket_closed() const;

  private:
    std::vector<Matrix> basis_;
    Matrix span_rows_;  // dim x ambient^2 flattened copy for coordinate solves
    int ambient_ = 0;
};

/// Smallest bracket-closed span containing the generators, with a
/// deterministic echelonized basis. Throws MaxDimExceeded.
LieAlgebraBasis lie_closure(const std::vector<Matrix>& gens, int maxdim);

/// c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k.
class StructureConstants {
  public:
    StructureConstants(int dim) : dim_(dim), c_(size_t(dim) * dim * dim) {}
    const Scalar& at(int i, int j, int k) const { return c_[(size_t(i) * dim_ + j) * dim_ + k]; }
    Scalar& at(int i, int j, int k) { return c_[(size_t(i) * dim_ + j) * dim_ + k]; }
    int dim() const { return dim_; }

  private:
    int dim_;
    std::vector<Scalar> c_;
};

/// Exact structure constants; throws NotClosed if a bracket leaves the span.
StructureConstants structure_constants(const LieAlgebraBasis& b);

/// Jacobi identity as a tensor contraction (exact).
bool jacobi_holds(const StructureConstants& sc);

/// Killing matrix B_ij = c_im^n c_jn^m (adjoint-trace normalization, I_ad = 1).
Matrix killing_form(const LieAlgebraBasis& b);

/// ad matrices in the basis coordinates: (ad b_i)[k][j] = c[i][j][k].
std::vector<Matrix> adjoint_rep(const LieAlgebraBasis& b);

LieAlgebraBasis derived_algebra(const LieAlgebraBasis& b);
LieAlgebraBasis center(const LieAlgebraBasis& b);

/// Cartan criterion: Killing form nondegenerate.
bool is_semisimple(const LieAlgebraBasis& b);

/// Inertia of the (real, symmetric) Killing matrix.
Inertia killing_signature(const LieAlgebraBasis& b);

struct Root {
    std::vector<Scalar> alpha;       // weight per Cartan element
    std::vector<Matrix> space;       // root-space basis
};

struct RootDatum {
    std::vector<Matrix> cartan;
    std::vector<Root> roots;         // nonzero weights, deterministic order
    int zero_weight_dim = 0;
    bool complete = false;           // zero-weight space == cartan + center
};

/// Simultaneous ad-eigenspace decomposition relative to a commuting,
/// rationally ad-diagonalizable Cartan list. Throws NotCommuting /
/// NotDiagonalizable.
RootDatum roots_relative(const LieAlgebraBasis& b, const std::vector<Matrix>& cartan);

struct TableMismatch {
    std::string pair;      // e.g. "[x1,x2]"
    std::string expected;  // e.g. "-x3"
    std::string computed;
};

struct TableReport {
    std::vector<TableMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

/// Checks all 28 unordered bracket pairs of a named candidate basis
/// {x1,x2,x3,y1,y2,y3,h1,h2} against the sl(3,C) Chevalley commutator table.
TableReport verify_chevalley_table(const std::map<std::string, Matrix>& candidate);

struct CrossBracket {
    int i = 0, j = 0;
    Matrix bracket;
};

/// True iff every cross bracket [a_i, b_j] vanishes; nonzero witnesses are
/// appended to `witness` when provided.
bool commutes_with(const LieAlgebraBasis& a, const LieAlgebraBasis& b,
                   std::vector<CrossBracket>* witness = nullptr);

}  // namespace lie
}  // namespace exalg
