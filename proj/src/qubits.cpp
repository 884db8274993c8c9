#include "exalg/qubits.hpp"

#include <algorithm>
#include <cmath>

namespace exalg {

namespace {

Matrix pauli_single(char letter) {
    const Scalar one(1), none(-1);
    switch (letter) {
        case 'I': return Matrix::identity(2);
        case 'X': return Matrix({{Scalar(0), one}, {one, Scalar(0)}});
        case 'Y': return Matrix({{Scalar(0), -Scalar::i()}, {Scalar::i(), Scalar(0)}});
        case 'Z': return Matrix({{one, Scalar(0)}, {Scalar(0), none}});
        default: fail(Err::ParseError, std::string("unknown Pauli letter '") + letter + "'");
    }
}

Scalar abs_sq(const Scalar& z) {
    if (z.is_real()) return z * z;
    return Scalar(z.norm_sq_complex());
}

}  // namespace

Matrix pauli_matrix(const std::string& letters) {
    if (letters.empty()) fail(Err::ParseError, "empty Pauli string");
    Matrix m = pauli_single(letters[0]);
    for (size_t k = 1; k < letters.size(); k++) m = kron(m, pauli_single(letters[k]));
    return m;
}

PureState PureState::exact(int qubits, std::vector<Scalar> amps) {
    if (qubits < 1 || qubits > 4) fail(Err::WrongQubitCount, "supported qubit counts are 1..4");
    if (amps.size() != (size_t(1) << qubits))
        fail(Err::DimensionMismatch, "amplitude count must be 2^n");
    Scalar norm;
    for (const auto& a : amps) norm = norm + abs_sq(a);
    if (norm != Scalar(1)) fail(Err::NotNormalized, "state norm is " + norm.str());
    PureState s;
    s.n_ = qubits;
    s.amps_ = std::move(amps);
    return s;
}

PureState PureState::floating(int qubits, std::vector<std::complex<double>> amps) {
    if (qubits < 1 || qubits > 4) fail(Err::WrongQubitCount, "supported qubit counts are 1..4");
    if (amps.size() != (size_t(1) << qubits))
        fail(Err::DimensionMismatch, "amplitude count must be 2^n");
    double norm = 0;
    for (auto& a : amps) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-12) fail(Err::NotNormalized, "float state norm off by > 1e-12");
    PureState s;
    s.n_ = qubits;
    s.famps_ = std::move(amps);
    return s;
}

std::vector<std::complex<double>> PureState::to_float_amps() const {
    if (!is_exact()) return famps_;
    std::vector<std::complex<double>> out(amps_.size());
    for (size_t k = 0; k < amps_.size(); k++) out[k] = amps_[k].to_complex();
    return out;
}

int DensityMatrix::qubits() const {
    int d = m.rows(), n = 0;
    while ((1 << n) < d) n++;
    return n;
}

DensityMatrix DensityMatrix::from_matrix(Matrix mat) {
    if (!mat.is_square() || mat.rows() == 0 || (mat.rows() & (mat.rows() - 1)))
        fail(Err::WrongDimension, "density matrix dimension must be a power of two");
    if (!mat.is_hermitian()) fail(Err::Internal, "density matrix must be Hermitian");
    if (mat.trace() != Scalar(1)) fail(Err::Internal, "density matrix must have trace 1");
    return DensityMatrix{std::move(mat)};
}

std::string MValue::str() const {
    if (exact) return exact->str();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return std::string(buf) + "~";
}

PureState generic_state(const std::array<Scalar, 5>& lambda, double phi) {
    Scalar norm;
    for (const auto& l : lambda) {
        if (!l.is_real() || l.sign() < 0) fail(Err::NotNormalized, "lambda must be nonnegative");
        norm = norm + l * l;
    }
    if (norm != Scalar(1)) fail(Err::NotNormalized, "sum of lambda^2 is " + norm.str());
    if (phi < 0.0 || phi > M_PI + 1e-15) fail(Err::PhaseOutOfRange, "phi must lie in [0, pi]");
    // |000>, |100>, |101>, |110>, |111>  ->  indices 0, 4, 5, 6, 7
    const int idx[5] = {0, 4, 5, 6, 7};
    bool exact_phase = phi == 0.0 || phi == M_PI || lambda[1].is_zero();
    if (exact_phase) {
        std::vector<Scalar> amps(8);
        Scalar phase = (phi == M_PI) ? Scalar(-1) : Scalar(1);
        for (int k = 0; k < 5; k++) amps[idx[k]] = (k == 1) ? phase * lambda[k] : lambda[k];
        return PureState::exact(3, std::move(amps));
    }
    std::vector<std::complex<double>> amps(8);
    std::complex<double> phase(std::cos(phi), std::sin(phi));
    for (int k = 0; k < 5; k++)
        amps[idx[k]] = (k == 1) ? phase * lambda[k].to_double()
                                : std::complex<double>(lambda[k].to_double(), 0);
    return PureState::floating(3, std::move(amps));
}

namespace {

// Qubit q (1-based, leftmost = most significant) owns bit (n - q) of the
// amplitude index.
int qubit_bit(int n, int q) { return n - q; }

}  // namespace

DensityMatrix reduce(const PureState& s, const std::vector<int>& keep) {
    if (keep.empty()) fail(Err::EmptySubset, "keep at least one qubit");
    if (!s.is_exact()) fail(Err::Internal, "partial trace requires exact amplitudes");
    const int n = s.qubits();
    std::vector<bool> seen(n + 1, false);
    for (int q : keep) {
        if (q < 1 || q > n) fail(Err::DimensionMismatch, "qubit index out of range");
        if (seen[q]) fail(Err::DimensionMismatch, "duplicate qubit in keep set");
        seen[q] = true;
    }
    std::vector<int> env;
    for (int q = 1; q <= n; q++)
        if (!seen[q]) env.push_back(q);

    const int k = int(keep.size());
    const int dim = 1 << k;
    auto amp_index = [&](int kept_bits, int env_bits) {
        int idx = 0;
        for (int i = 0; i < k; i++)
            if (kept_bits & (1 << (k - 1 - i))) idx |= 1 << qubit_bit(n, keep[i]);
        for (size_t i = 0; i < env.size(); i++)
            if (env_bits & (1 << (int(env.size()) - 1 - int(i)))) idx |= 1 << qubit_bit(n, env[i]);
        return idx;
    };

    Matrix rho(dim, dim);
    const int env_count = 1 << env.size();
    for (int r = 0; r < dim; r++)
        for (int c = 0; c < dim; c++) {
            Scalar acc;
            for (int e = 0; e < env_count; e++)
                acc = acc + s.amp(amp_index(r, e)) * s.amp(amp_index(c, e)).cconj();
            rho.at(r, c) = acc;
        }
    return DensityMatrix::from_matrix(std::move(rho));
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
    if (rho.m.rows() != 4) fail(Err::WrongDimension, "spin flip is defined for two qubits");
    static const Matrix yy = pauli_matrix("YY");  // real matrix
    Matrix flipped = yy * rho.m.conj_entries() * yy;
    return DensityMatrix{std::move(flipped)};
}

namespace {

// |z| as an MValue: exact when z is real or has a rational modulus.
MValue exact_abs(const Scalar& z) {
    if (z.is_real()) return MValue(z.abs());
    Rational n2 = z.norm_sq_complex();
    if (auto r = Scalar(n2).sqrt_in_field()) return MValue(*r);
    return MValue(std::sqrt(n2.to_double()));
}

MValue scale4(const MValue& v) {
    if (v.exact) return MValue(Scalar(4) * *v.exact);
    return MValue(4.0 * v.value);
}

struct Mixed2 {
    MValue concurrence;
    MValue tangle;
};

// Wootters quantities from the spectrum of rho * rho~.
Mixed2 mixed2_measures(const DensityMatrix& rho) {
    if (rho.m.rows() != 4) fail(Err::WrongDimension, "two-qubit density matrix required");
    Matrix prod = rho.m * spin_flip(rho).m;

    long long hint = 0;
    for (const auto& e : rho.m.entries())
        if (e.disc() > 0) hint = e.disc();

    // Rank <= 2 (every reduction of a pure three-qubit state): the charpoly
    // is t^4 - p t^3 + q t^2, and the tangle (s1 - s2)^2 = p - 2 sqrt(q)
    // comes straight from the coefficients, no root isolation needed.
    Polynomial cp = charpoly(prod);
    if (cp.coeff(0).is_zero() && cp.coeff(1).is_zero()) {
        Scalar p = -cp.coeff(3);
        Scalar q = cp.coeff(2);
        bool sane = p.is_real() && q.is_real() && p.sign() >= 0 && q.sign() >= 0 &&
                    (p * p - Scalar(4) * q).is_real() && (p * p - Scalar(4) * q).sign() >= 0;
        if (sane) {
            if (auto sq = q.sqrt_in_field(hint)) {
                Scalar tangle = p - Scalar(2) * *sq;
                if (tangle.sign() >= 0) {
                    auto croot = tangle.sqrt_in_field(hint);
                    MValue conc = croot ? MValue(*croot)
                                        : MValue(std::sqrt(std::max(0.0, tangle.to_double())));
                    return {conc, MValue(tangle)};
                }
            }
        }
    }

    EigenResult eig = eigen_quadratic(prod);
    if (eig.exact) {
        std::vector<Scalar> lam;
        for (auto& [v, m] : eig.pairs) {
            if (!v.is_real()) fail(Err::NegativeEigenvalue, "complex eigenvalue of rho*rho~");
            if (v.sign() < 0) fail(Err::NegativeEigenvalue, "negative eigenvalue " + v.str());
            for (int t = 0; t < m; t++) lam.push_back(v);
            if (v.disc() > 0) hint = v.disc();
        }
        std::sort(lam.begin(), lam.end(),
                  [](const Scalar& x, const Scalar& y) { return x.cmp(y) > 0; });
        lam.resize(4, Scalar(0));

        std::vector<Scalar> roots;
        bool all_roots = true;
        for (auto& l : lam) {
            auto r = l.sqrt_in_field(hint);
            if (!r) {
                all_roots = false;
                break;
            }
            roots.push_back(*r);
        }
        if (all_roots) {
            Scalar c = roots[0] - roots[1] - roots[2] - roots[3];
            if (c.sign() < 0) c = Scalar(0);
            return {MValue(c), MValue(c * c)};
        }
        // Rank <= 2 pairing: with lambda3 = lambda4 = 0 the tangle is
        // (s1 - s2)^2 = l1 + l2 - 2*sqrt(l1*l2), no individual roots needed.
        if (lam[2].is_zero() && lam[3].is_zero()) {
            Scalar p = lam[0] + lam[1];
            Scalar q = lam[0] * lam[1];
            if (auto sq = q.sqrt_in_field(hint)) {
                Scalar tangle = p - Scalar(2) * *sq;
                auto croot = tangle.sqrt_in_field(hint);
                MValue conc = croot ? MValue(*croot)
                                    : MValue(std::sqrt(std::max(0.0, tangle.to_double())));
                return {conc, MValue(tangle)};
            }
        }
        double c = std::sqrt(lam[0].to_double()) - std::sqrt(lam[1].to_double()) -
                   std::sqrt(lam[2].to_double()) - std::sqrt(lam[3].to_double());
        c = std::max(0.0, c);
        return {MValue(c), MValue(c * c)};
    }

    std::vector<double> lam;
    for (auto& z : eig.approx) {
        if (std::abs(z.imag()) > 1e-10 || z.real() < -1e-10)
            fail(Err::NegativeEigenvalue, "invalid eigenvalue of rho*rho~ on the float path");
        lam.push_back(std::max(0.0, z.real()));
    }
    std::sort(lam.rbegin(), lam.rend());
    lam.resize(4, 0.0);
    double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) - std::sqrt(lam[3]);
    c = std::max(0.0, c);
    return {MValue(c), MValue(c * c)};
}

// ---- float-state engine --------------------------------------------------

using CMat = std::vector<std::vector<std::complex<double>>>;

CMat float_reduce(const std::vector<std::complex<double>>& amps, int n,
                  const std::vector<int>& keep) {
    std::vector<int> env;
    std::vector<bool> seen(n + 1, false);
    for (int q : keep) seen[q] = true;
    for (int q = 1; q <= n; q++)
        if (!seen[q]) env.push_back(q);
    const int k = int(keep.size());
    const int dim = 1 << k;
    auto amp_index = [&](int kept_bits, int env_bits) {
        int idx = 0;
        for (int i = 0; i < k; i++)
            if (kept_bits & (1 << (k - 1 - i))) idx |= 1 << qubit_bit(n, keep[i]);
        for (size_t i = 0; i < env.size(); i++)
            if (env_bits & (1 << (int(env.size()) - 1 - int(i)))) idx |= 1 << qubit_bit(n, env[i]);
        return idx;
    };
    CMat rho(dim, std::vector<std::complex<double>>(dim));
    for (int r = 0; r < dim; r++)
        for (int c = 0; c < dim; c++) {
            std::complex<double> acc = 0;
            for (int e = 0; e < (1 << env.size()); e++)
                acc += amps[amp_index(r, e)] * std::conj(amps[amp_index(c, e)]);
            rho[r][c] = acc;
        }
    return rho;
}

CMat cmul(const CMat& a, const CMat& b) {
    size_t n = a.size();
    CMat r(n, std::vector<std::complex<double>>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t k = 0; k < n; k++)
            for (size_t j = 0; j < n; j++) r[i][j] += a[i][k] * b[k][j];
    return r;
}

// Faddeev-LeVerrier over complex doubles (monic, ascending coefficients).
std::vector<std::complex<double>> cfl_charpoly(const CMat& a) {
    size_t n = a.size();
    std::vector<std::complex<double>> c(n + 1);
    c[n] = 1.0;
    CMat m = a;
    for (size_t k = 1; k <= n; k++) {
        std::complex<double> tr = 0;
        for (size_t i = 0; i < n; i++) tr += m[i][i];
        c[n - k] = -tr / double(k);
        if (k < n) {
            for (size_t i = 0; i < n; i++) m[i][i] += c[n - k];
            m = cmul(a, m);
        }
    }
    return c;
}

double float_tangle2(const CMat& rho) {
    const size_t n = 4;
    // rho~ = (YY) conj(rho) (YY); YY is antidiagonal(-1, 1, 1, -1)
    static const double yy[4][4] = {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
    CMat conj_rho(n, std::vector<std::complex<double>>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) conj_rho[i][j] = std::conj(rho[i][j]);
    CMat t(n, std::vector<std::complex<double>>(n)), flip(n, std::vector<std::complex<double>>(n));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            for (size_t k = 0; k < n; k++) t[i][j] += yy[i][k] * conj_rho[k][j];
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            for (size_t k = 0; k < n; k++) flip[i][j] += t[i][k] * yy[k][j];
    auto coeffs = cfl_charpoly(cmul(rho, flip));
    // Deflate (near-)zero roots first: sqrt amplifies root-finding error
    // around zero badly when the spectrum has a double zero.
    double scale = 0;
    for (auto& c : coeffs) scale = std::max(scale, std::abs(c));
    std::vector<double> lam;
    size_t low = 0;
    while (low + 1 < coeffs.size() && std::abs(coeffs[low]) < 1e-12 * std::max(1.0, scale)) {
        lam.push_back(0.0);
        low++;
    }
    std::vector<std::complex<double>> rest(coeffs.begin() + low, coeffs.end());
    if (rest.size() == 3) {
        // quadratic, closed form on the (real) coefficients
        double B = rest[1].real(), C = rest[0].real();
        double disc = std::max(0.0, B * B - 4 * C);
        lam.push_back(std::max(0.0, (-B + std::sqrt(disc)) / 2));
        lam.push_back(std::max(0.0, (-B - std::sqrt(disc)) / 2));
    } else if (rest.size() == 2) {
        lam.push_back(std::max(0.0, (-rest[0] / rest[1]).real()));
    } else if (rest.size() > 3) {
        for (auto& z : poly_roots_numeric(rest)) lam.push_back(std::max(0.0, z.real()));
    }
    std::sort(lam.rbegin(), lam.rend());
    lam.resize(4, 0.0);
    double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) - std::sqrt(lam[3]);
    c = std::max(0.0, c);
    return c * c;
}

double float_three_tangle(const std::vector<std::complex<double>>& a) {
    auto p = [&](int i, int j, int k) { return a[i * 4 + j * 2 + k]; };
    std::complex<double> d1 = p(0, 0, 0) * p(0, 0, 0) * p(1, 1, 1) * p(1, 1, 1) +
                              p(0, 0, 1) * p(0, 0, 1) * p(1, 1, 0) * p(1, 1, 0) +
                              p(0, 1, 0) * p(0, 1, 0) * p(1, 0, 1) * p(1, 0, 1) +
                              p(1, 0, 0) * p(1, 0, 0) * p(0, 1, 1) * p(0, 1, 1);
    std::complex<double> d2 =
        p(0, 0, 0) * p(1, 1, 1) *
            (p(0, 1, 1) * p(1, 0, 0) + p(1, 0, 1) * p(0, 1, 0) + p(1, 1, 0) * p(0, 0, 1)) +
        p(0, 1, 1) * p(1, 0, 0) * (p(1, 0, 1) * p(0, 1, 0) + p(1, 1, 0) * p(0, 0, 1)) +
        p(1, 0, 1) * p(0, 1, 0) * p(1, 1, 0) * p(0, 0, 1);
    std::complex<double> d3 = p(0, 0, 0) * p(1, 1, 0) * p(1, 0, 1) * p(0, 1, 1) +
                              p(1, 1, 1) * p(0, 0, 1) * p(0, 1, 0) * p(1, 0, 0);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double float_one_tangle(const std::vector<std::complex<double>>& amps, int party) {
    CMat rho = float_reduce(amps, 3, {party});
    std::complex<double> det = rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0];
    return 4.0 * det.real();
}

}  // namespace

MValue concurrence_pure2(const PureState& s) {
    if (s.qubits() != 2) fail(Err::WrongQubitCount, "concurrence_pure2 needs two qubits");
    if (s.is_exact()) {
        Scalar z = Scalar(2) * (s.amp(0) * s.amp(3) - s.amp(1) * s.amp(2));
        return exact_abs(z);
    }
    const auto& a = s.famps();
    return MValue(2.0 * std::abs(a[0] * a[3] - a[1] * a[2]));
}

MValue concurrence_mixed2(const DensityMatrix& rho) { return mixed2_measures(rho).concurrence; }

MValue tangle_mixed2(const DensityMatrix& rho) { return mixed2_measures(rho).tangle; }

MValue three_tangle(const PureState& s) {
    if (s.qubits() != 3) fail(Err::WrongQubitCount, "three_tangle needs three qubits");
    if (!s.is_exact()) return MValue(float_three_tangle(s.famps()));
    auto p = [&](int i, int j, int k) { return s.amp(size_t(i * 4 + j * 2 + k)); };
    Scalar d1 = p(0, 0, 0) * p(0, 0, 0) * p(1, 1, 1) * p(1, 1, 1) +
                p(0, 0, 1) * p(0, 0, 1) * p(1, 1, 0) * p(1, 1, 0) +
                p(0, 1, 0) * p(0, 1, 0) * p(1, 0, 1) * p(1, 0, 1) +
                p(1, 0, 0) * p(1, 0, 0) * p(0, 1, 1) * p(0, 1, 1);
    Scalar d2 = p(0, 0, 0) * p(1, 1, 1) *
                    (p(0, 1, 1) * p(1, 0, 0) + p(1, 0, 1) * p(0, 1, 0) + p(1, 1, 0) * p(0, 0, 1)) +
                p(0, 1, 1) * p(1, 0, 0) * (p(1, 0, 1) * p(0, 1, 0) + p(1, 1, 0) * p(0, 0, 1)) +
                p(1, 0, 1) * p(0, 1, 0) * p(1, 1, 0) * p(0, 0, 1);
    Scalar d3 = p(0, 0, 0) * p(1, 1, 0) * p(1, 0, 1) * p(0, 1, 1) +
                p(1, 1, 1) * p(0, 0, 1) * p(0, 1, 0) * p(1, 0, 0);
    Scalar z = d1 - Scalar(2) * d2 + Scalar(4) * d3;
    return scale4(exact_abs(z));
}

MValue one_tangle(const PureState& s, int party) {
    if (s.qubits() != 3) fail(Err::WrongQubitCount, "one_tangle needs three qubits");
    if (party < 1 || party > 3) fail(Err::DimensionMismatch, "party must be 1..3");
    if (!s.is_exact()) return MValue(float_one_tangle(s.famps(), party));
    Matrix rho = reduce(s, {party}).m;
    Scalar det2 = rho.at(0, 0) * rho.at(1, 1) - rho.at(0, 1) * rho.at(1, 0);
    return MValue(Scalar(4) * det2);
}

bool EntanglementProfile::all_exact() const {
    return tau3.is_exact() && tau_ab.is_exact() && tau_ac.is_exact() && tau_bc.is_exact() &&
           tau_a.is_exact() && tau_b.is_exact() && tau_c.is_exact();
}

namespace {

MValue residual_of(const MValue& one, const MValue& t3, const MValue& t_xy, const MValue& t_xz) {
    if (one.exact && t3.exact && t_xy.exact && t_xz.exact)
        return MValue(*one.exact - (*t3.exact + *t_xy.exact + *t_xz.exact));
    return MValue(one.value - (t3.value + t_xy.value + t_xz.value));
}

}  // namespace

EntanglementProfile entanglement_profile(const PureState& s) {
    if (s.qubits() != 3) fail(Err::WrongQubitCount, "profile needs three qubits");
    EntanglementProfile pr;
    pr.tau3 = three_tangle(s);
    if (s.is_exact()) {
        pr.tau_ab = tangle_mixed2(reduce(s, {1, 2}));
        pr.tau_ac = tangle_mixed2(reduce(s, {1, 3}));
        pr.tau_bc = tangle_mixed2(reduce(s, {2, 3}));
    } else {
        const auto& a = s.famps();
        pr.tau_ab = MValue(float_tangle2(float_reduce(a, 3, {1, 2})));
        pr.tau_ac = MValue(float_tangle2(float_reduce(a, 3, {1, 3})));
        pr.tau_bc = MValue(float_tangle2(float_reduce(a, 3, {2, 3})));
    }
    pr.tau_a = one_tangle(s, 1);
    pr.tau_b = one_tangle(s, 2);
    pr.tau_c = one_tangle(s, 3);
    pr.residuals[0] = residual_of(pr.tau_a, pr.tau3, pr.tau_ab, pr.tau_ac);
    pr.residuals[1] = residual_of(pr.tau_b, pr.tau3, pr.tau_ab, pr.tau_bc);
    pr.residuals[2] = residual_of(pr.tau_c, pr.tau3, pr.tau_ac, pr.tau_bc);
    return pr;
}

bool is_b_type(const EntanglementProfile& p) {
    const MValue* vals[4] = {&p.tau3, &p.tau_ab, &p.tau_ac, &p.tau_bc};
    bool exact = true;
    for (auto* v : vals) exact = exact && v->is_exact();
    if (exact) {
        for (int k = 1; k < 4; k++)
            if (*vals[k]->exact != *vals[0]->exact) return false;
        return vals[0]->exact->sign() > 0;
    }
    for (int k = 1; k < 4; k++)
        if (std::abs(vals[k]->value - vals[0]->value) > 1e-9) return false;
    return vals[0]->value > 1e-9;
}

}  // namespace exalg
