#pragma once

#include <initializer_list>
#include <vector>

#include "exalg/scalar.hpp"

namespace exalg {

/// Dense rectangular matrix of exact scalars, row-major.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    /// Integer literal rows scaled by a common rational factor (how the
    /// source constants are written).
    static Matrix from_ints(const std::vector<std::vector<long long>>& rows,
                            const Rational& scale = Rational(1));

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
    const std::vector<Scalar>& entries() const noexcept { return e_; }

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // A*v

    Matrix transpose() const;
    /// Conjugate transpose (entrywise complex conjugation).
    Matrix dagger() const;
    /// Entrywise complex conjugate.
    Matrix conj_entries() const;
    Scalar trace() const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;
    bool is_hermitian() const { return *this == dagger(); }

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    /// Flattened row-major copy of the entries.
    std::vector<Scalar> flatten() const { return e_; }

    void encode(std::string& out) const;
    std::string key() const;  // canonical byte key (hashing group elements)
    static Matrix decode(const std::string& key);

    std::string str() const;  // human-readable, row per line

  private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

Matrix commutator(const Matrix& a, const Matrix& b);  // AB - BA
Matrix kron(const Matrix& a, const Matrix& b);

/// Polynomial with exact coefficients, ascending degree; the zero polynomial
/// has an empty coefficient list.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs);

    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Scalar& coeff(int k) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar eval(const Scalar& x) const;
    Matrix eval_matrix(const Matrix& a) const;

    /// Quotient after dividing by (t - root); requires the division be exact.
    Polynomial deflate(const Scalar& root) const;
    /// True if p(root) == 0.
    bool has_root(const Scalar& root) const { return eval(root).is_zero(); }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "t") const;

  private:
    std::vector<Scalar> c_;
};

}  // namespace exalg
