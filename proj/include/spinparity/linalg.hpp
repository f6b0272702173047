#pragma once

// Fixed-size complex/real matrix arithmetic and cyclic-Jacobi eigenvalue
// solvers. Everything here is value-semantic and allocation-free; all other
// modules sit on top of these kernels.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "spinparity/errors.hpp"

namespace spinparity {

using Complex = std::complex<double>;

struct Vec3 {
    std::array<double, 3> v{0.0, 0.0, 0.0};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }

    friend Vec3 operator+(Vec3 a, const Vec3& b) {
        for (std::size_t i = 0; i < 3; ++i) a[i] += b[i];
        return a;
    }
    friend Vec3 operator-(Vec3 a, const Vec3& b) {
        for (std::size_t i = 0; i < 3; ++i) a[i] -= b[i];
        return a;
    }
    friend Vec3 operator*(double s, Vec3 a) {
        for (std::size_t i = 0; i < 3; ++i) a[i] *= s;
        return a;
    }
    friend Vec3 operator-(Vec3 a) { return -1.0 * a; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return Vec3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

/// Real 3x3 matrix, row-major. Used for correlation matrices and their
/// symmetric products; symmetry is the caller's contract, not enforced here.
struct Matrix3 {
    std::array<double, 9> m{};

    double& operator()(std::size_t i, std::size_t j) { return m[3 * i + j]; }
    double operator()(std::size_t i, std::size_t j) const { return m[3 * i + j]; }

    static Matrix3 zero() { return {}; }
    static Matrix3 identity() {
        Matrix3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }
    static Matrix3 diag(double a, double b, double c) {
        Matrix3 r;
        r(0, 0) = a; r(1, 1) = b; r(2, 2) = c;
        return r;
    }
    static Matrix3 outer(const Vec3& a, const Vec3& b) {
        Matrix3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
        return r;
    }

    Matrix3 transposed() const {
        Matrix3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
    Matrix3 symmetrized() const {
        Matrix3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) r(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
        return r;
    }
    double asymmetry() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
        return worst;
    }
    double frobenius_sq() const {
        double s = 0.0;
        for (double x : m) s += x * x;
        return s;
    }

    friend Matrix3 operator+(Matrix3 a, const Matrix3& b) {
        for (std::size_t i = 0; i < 9; ++i) a.m[i] += b.m[i];
        return a;
    }
    friend Matrix3 operator-(Matrix3 a, const Matrix3& b) {
        for (std::size_t i = 0; i < 9; ++i) a.m[i] -= b.m[i];
        return a;
    }
    friend Matrix3 operator*(double s, Matrix3 a) {
        for (std::size_t i = 0; i < 9; ++i) a.m[i] *= s;
        return a;
    }
    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
        Matrix3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
                r(i, j) = s;
            }
        return r;
    }
    friend Vec3 operator*(const Matrix3& a, const Vec3& x) {
        Vec3 r;
        for (std::size_t i = 0; i < 3; ++i) r[i] = a(i, 0) * x[0] + a(i, 1) * x[1] + a(i, 2) * x[2];
        return r;
    }
};

/// Complex 2x2 matrix (Pauli algebra building block).
struct Matrix2 {
    std::array<Complex, 4> m{};

    Complex& operator()(std::size_t i, std::size_t j) { return m[2 * i + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return m[2 * i + j]; }

    static Matrix2 identity() { return Matrix2{{Complex(1), Complex(0), Complex(0), Complex(1)}}; }

    friend Matrix2 operator+(Matrix2 a, const Matrix2& b) {
        for (std::size_t i = 0; i < 4; ++i) a.m[i] += b.m[i];
        return a;
    }
    friend Matrix2 operator*(Complex s, Matrix2 a) {
        for (std::size_t i = 0; i < 4; ++i) a.m[i] *= s;
        return a;
    }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        Matrix2 r;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
        return r;
    }
};

inline Matrix2 pauli_x() { return Matrix2{{Complex(0), Complex(1), Complex(1), Complex(0)}}; }
inline Matrix2 pauli_y() {
    return Matrix2{{Complex(0), Complex(0, -1), Complex(0, 1), Complex(0)}};
}
inline Matrix2 pauli_z() { return Matrix2{{Complex(1), Complex(0), Complex(0), Complex(-1)}}; }

inline Matrix2 pauli(std::size_t i) {
    switch (i) {
        case 0: return pauli_x();
        case 1: return pauli_y();
        default: return pauli_z();
    }
}

/// sigma . v
inline Matrix2 sigma_dot(const Vec3& v) {
    Matrix2 r;
    r(0, 0) = Complex(v[2], 0);
    r(0, 1) = Complex(v[0], -v[1]);
    r(1, 0) = Complex(v[0], v[1]);
    r(1, 1) = Complex(-v[2], 0);
    return r;
}

/// Complex 4x4 matrix, row-major.
struct Matrix4 {
    std::array<Complex, 16> m{};

    Complex& operator()(std::size_t i, std::size_t j) { return m[4 * i + j]; }
    Complex operator()(std::size_t i, std::size_t j) const { return m[4 * i + j]; }

    static Matrix4 zero() { return {}; }
    static Matrix4 identity() {
        Matrix4 r;
        for (std::size_t i = 0; i < 4; ++i) r(i, i) = Complex(1);
        return r;
    }
    static Matrix4 diag(double a, double b, double c, double d) {
        Matrix4 r;
        r(0, 0) = a; r(1, 1) = b; r(2, 2) = c; r(3, 3) = d;
        return r;
    }

    Complex trace() const { return m[0] + m[5] + m[10] + m[15]; }
    Matrix4 adjoint() const {
        Matrix4 r;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }
    Matrix4 conjugated() const {
        Matrix4 r;
        for (std::size_t i = 0; i < 16; ++i) r.m[i] = std::conj(m[i]);
        return r;
    }
    /// max_ij |m_ij - conj(m_ji)|
    double hermiticity_violation() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return worst;
    }
    bool is_hermitian(double tol) const { return hermiticity_violation() <= tol; }

    double max_abs() const {
        double worst = 0.0;
        for (const Complex& x : m) worst = std::max(worst, std::abs(x));
        return worst;
    }

    friend Matrix4 operator+(Matrix4 a, const Matrix4& b) {
        for (std::size_t i = 0; i < 16; ++i) a.m[i] += b.m[i];
        return a;
    }
    friend Matrix4 operator-(Matrix4 a, const Matrix4& b) {
        for (std::size_t i = 0; i < 16; ++i) a.m[i] -= b.m[i];
        return a;
    }
    friend Matrix4 operator*(Complex s, Matrix4 a) {
        for (std::size_t i = 0; i < 16; ++i) a.m[i] *= s;
        return a;
    }
    friend Matrix4 operator*(double s, const Matrix4& a) { return Complex(s) * a; }
    friend Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
        Matrix4 r;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Complex s = 0.0;
                for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
                r(i, j) = s;
            }
        return r;
    }
};

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) { return (a - b).max_abs(); }

inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
    Matrix4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

inline Complex trace_product(const Matrix4& a, const Matrix4& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) s += a(i, k) * b(k, i);
    return s;
}

namespace detail {

// Cyclic Jacobi on a real symmetric NxN matrix (values only). Stops when the
// off-diagonal Frobenius norm drops below 1e-13, errors after 100 sweeps.
template <std::size_t N>
std::array<double, N> jacobi_eigenvalues(std::array<double, N * N> a) {
    auto at = [&a](std::size_t i, std::size_t j) -> double& { return a[N * i + j]; };
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_norm() > kOffTol) {
        if (++sweep > kMaxSweeps) throw ConvergenceFailure(off_norm());
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < N; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::array<double, N> ev;
    for (std::size_t i = 0; i < N; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace detail

/// Eigenvalues of a real symmetric 3x3 matrix, ascending.
inline std::array<double, 3> sym_eigenvalues3(const Matrix3& m) {
    const double asym = m.asymmetry();
    if (asym > 1e-12) throw NonSymmetricInput(asym);
    std::array<double, 9> a;
    const Matrix3 s = m.symmetrized();
    for (std::size_t i = 0; i < 9; ++i) a[i] = s.m[i];
    return detail::jacobi_eigenvalues<3>(a);
}

/// Eigenvalues of a complex Hermitian 4x4 matrix, ascending. The matrix
/// H = X + iY is embedded as the real symmetric 8x8 block matrix
/// [[X, -Y], [Y, X]], whose spectrum is that of H with every eigenvalue
/// doubled; adjacent pairs are averaged back out.
inline std::array<double, 4> hermitian_eigenvalues4(const Matrix4& m) {
    const double herm = m.hermiticity_violation();
    if (herm > 1e-9) throw NonHermitianInput(herm);

    std::array<double, 64> a{};
    auto at = [&a](std::size_t i, std::size_t j) -> double& { return a[8 * i + j]; };
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            at(i, j) = h.real();
            at(i + 4, j + 4) = h.real();
            at(i, j + 4) = -h.imag();
            at(i + 4, j) = h.imag();
        }
    }
    const std::array<double, 8> ev8 = detail::jacobi_eigenvalues<8>(a);

    std::array<double, 4> ev;
    for (std::size_t i = 0; i < 4; ++i) ev[i] = 0.5 * (ev8[2 * i] + ev8[2 * i + 1]);
    return ev;
}

}  // namespace spinparity
