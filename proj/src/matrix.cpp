#include "exalg/matrix.hpp"

#include <sstream>

namespace exalg {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    e_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) fail(Err::DimensionMismatch, "ragged initializer");
        for (const auto& x : r) e_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long long>>& rows, const Rational& scale) {
    Matrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int i = 0; i < m.rows(); i++) {
        if (int(rows[i].size()) != m.cols()) fail(Err::DimensionMismatch, "ragged integer rows");
        for (int j = 0; j < m.cols(); j++) m.at(i, j) = Scalar(Rational(rows[i][j]) * scale);
    }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); k++) m.e_[k] = -e_[k];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Err::DimensionMismatch, "matrix add");
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); k++) m.e_[k] = a.e_[k] + b.e_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Err::DimensionMismatch, "matrix sub");
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); k++) m.e_[k] = a.e_[k] - b.e_[k];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        fail(Err::DimensionMismatch, "matmul " + std::to_string(a.rows_) + "x" +
                                         std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                                         "x" + std::to_string(b.cols_));
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; i++) {
        for (int k = 0; k < a.cols_; k++) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; j++) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) = m.at(i, j) + aik * bkj;
            }
        }
    }
    return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); k++) m.e_[k] = s * a.e_[k];
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (int(v.size()) != cols_) fail(Err::DimensionMismatch, "matrix-vector apply");
    std::vector<Scalar> out(rows_);
    for (int i = 0; i < rows_; i++) {
        Scalar acc;
        for (int j = 0; j < cols_; j++) {
            const Scalar& a = at(i, j);
            if (!a.is_zero() && !v[j].is_zero()) acc = acc + a * v[j];
        }
        out[i] = acc;
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::dagger() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++) m.at(j, i) = at(i, j).cconj();
    return m;
}

Matrix Matrix::conj_entries() const {
    Matrix m(rows_, cols_);
    for (size_t k = 0; k < e_.size(); k++) m.e_[k] = e_[k].cconj();
    return m;
}

Scalar Matrix::trace() const {
    if (!is_square()) fail(Err::NotSquare, "trace");
    Scalar t;
    for (int i = 0; i < rows_; i++) t = t + at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++)
            if (at(i, j) != (i == j ? Scalar(1) : Scalar(0))) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; i++)
        for (int j = i + 1; j < cols_; j++)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

void Matrix::encode(std::string& out) const {
    auto put_varint = [&out](unsigned long long u) {
        while (u >= 0x80) {
            out.push_back(char(u | 0x80));
            u >>= 7;
        }
        out.push_back(char(u));
    };
    put_varint((unsigned long long)rows_);
    put_varint((unsigned long long)cols_);
    for (const auto& x : e_) x.encode(out);
}

Matrix Matrix::decode(const std::string& key) {
    size_t pos = 0;
    auto get_varint = [&key, &pos]() {
        unsigned long long u = 0;
        int shift = 0;
        for (;;) {
            unsigned char byte = (unsigned char)key.at(pos++);
            u |= (unsigned long long)(byte & 0x7F) << shift;
            if (!(byte & 0x80)) break;
            shift += 7;
        }
        return u;
    };
    int rows = int(get_varint());
    int cols = int(get_varint());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; i++)
        for (int j = 0; j < cols; j++) m.at(i, j) = Scalar::decode(key, pos);
    if (pos != key.size()) fail(Err::Internal, "trailing bytes in matrix key");
    return m;
}

std::string Matrix::key() const {
    std::string out;
    out.reserve(e_.size() * 20 + 2);
    encode(out);
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; i++) {
        os << '[';
        for (int j = 0; j < cols_; j++) {
            if (j) os << ", ";
            os << at(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
        fail(Err::DimensionMismatch, "commutator needs equal square matrices");
    return a * b - b * a;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++)
        for (int j = 0; j < a.cols(); j++) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int r = 0; r < b.rows(); r++)
                for (int c = 0; c < b.cols(); c++) {
                    const Scalar& brc = b.at(r, c);
                    if (!brc.is_zero()) m.at(i * b.rows() + r, j * b.cols() + c) = aij * brc;
                }
        }
    return m;
}

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Polynomial::coeff(int k) const {
    static const Scalar zero;
    if (k < 0 || k >= int(c_.size())) return zero;
    return c_[k];
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc;
    for (int k = int(c_.size()) - 1; k >= 0; k--) acc = acc * x + c_[k];
    return acc;
}

Matrix Polynomial::eval_matrix(const Matrix& a) const {
    if (!a.is_square()) fail(Err::NotSquare, "polynomial of a non-square matrix");
    Matrix acc = Matrix::zero(a.rows(), a.cols());
    for (int k = int(c_.size()) - 1; k >= 0; k--) {
        acc = acc * a;
        for (int i = 0; i < a.rows(); i++) acc.at(i, i) = acc.at(i, i) + c_[k];
    }
    return acc;
}

Polynomial Polynomial::deflate(const Scalar& root) const {
    if (is_zero()) return *this;
    std::vector<Scalar> q(c_.size() - 1);
    Scalar carry = c_.back();
    for (int k = int(c_.size()) - 2; k >= 0; k--) {
        q[k] = carry;
        carry = c_[k] + carry * root;
    }
    if (!carry.is_zero()) fail(Err::Internal, "deflation by a non-root");
    return Polynomial(std::move(q));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; k--) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = c_[k].str();
        if (k == 0) {
            out += coeff;
        } else {
            if (coeff != "1") out += "(" + coeff + ")*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace exalg
