#pragma once

#include <array>
#include <cmath>

namespace shoms {

using Vec2 = std::array<double, 2>;

/// 2x2 matrix, row-major. Used for conductivity and thermal-modulus tensors.
struct Mat2 {
    std::array<double, 4> a{};

    double& operator()(int i, int j) { return a[i * 2 + j]; }
    double operator()(int i, int j) const { return a[i * 2 + j]; }

    static Mat2 identity(double s = 1.0) { return Mat2{{s, 0.0, 0.0, s}}; }

    Mat2& operator+=(const Mat2& o) {
        for (int q = 0; q < 4; ++q) a[q] += o.a[q];
        return *this;
    }
    Mat2& operator*=(double s) {
        for (double& v : a) v *= s;
        return *this;
    }
    friend Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
    friend Mat2 operator-(Mat2 x, const Mat2& y) {
        for (int q = 0; q < 4; ++q) x.a[q] -= y.a[q];
        return x;
    }
    friend Mat2 operator*(double s, Mat2 x) { return x *= s; }

    Vec2 apply(const Vec2& v) const {
        return {a[0] * v[0] + a[1] * v[1], a[2] * v[0] + a[3] * v[1]};
    }
    double trace() const { return a[0] + a[3]; }
    /// Eigenvalues of the symmetric part, ascending.
    std::array<double, 2> sym_eigenvalues() const {
        double m = 0.5 * (a[0] + a[3]);
        double off = 0.5 * (a[1] + a[2]);
        double d = 0.5 * (a[0] - a[3]);
        double r = std::sqrt(d * d + off * off);
        return {m - r, m + r};
    }
};

/// Fourth-order tensor in 2D, C(i,j,k,l) with i,j,k,l in {0,1}.
struct Tensor4 {
    std::array<double, 16> a{};

    static constexpr int idx(int i, int j, int k, int l) { return ((i * 2 + j) * 2 + k) * 2 + l; }
    double& operator()(int i, int j, int k, int l) { return a[idx(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { return a[idx(i, j, k, l)]; }

    static Tensor4 isotropic(double lambda, double mu) {
        Tensor4 c;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        c(i, j, k, l) = lambda * (i == j) * (k == l) +
                                        mu * ((i == k) * (j == l) + (i == l) * (j == k));
        return c;
    }

    Tensor4& operator+=(const Tensor4& o) {
        for (int q = 0; q < 16; ++q) a[q] += o.a[q];
        return *this;
    }
    Tensor4& operator*=(double s) {
        for (double& v : a) v *= s;
        return *this;
    }
    friend Tensor4 operator+(Tensor4 x, const Tensor4& y) { return x += y; }
    friend Tensor4 operator-(Tensor4 x, const Tensor4& y) {
        for (int q = 0; q < 16; ++q) x.a[q] -= y.a[q];
        return x;
    }
    friend Tensor4 operator*(double s, Tensor4 x) { return x *= s; }
};

/// Voigt ordering: 0 -> (0,0), 1 -> (1,1), 2 -> (0,1).
inline constexpr std::array<std::array<int, 2>, 3> kVoigtPairs{{{0, 0}, {1, 1}, {0, 1}}};

struct Voigt3 {
    std::array<double, 9> a{};
    double& operator()(int I, int J) { return a[I * 3 + J]; }
    double operator()(int I, int J) const { return a[I * 3 + J]; }
};

inline Voigt3 to_voigt(const Tensor4& c) {
    Voigt3 v;
    for (int I = 0; I < 3; ++I)
        for (int J = 0; J < 3; ++J)
            v(I, J) = c(kVoigtPairs[I][0], kVoigtPairs[I][1], kVoigtPairs[J][0], kVoigtPairs[J][1]);
    return v;
}

/// Expands a Voigt matrix assuming minor symmetries.
inline Tensor4 from_voigt(const Voigt3& v) {
    auto voigt_index = [](int i, int j) { return i == j ? i : 2; };
    Tensor4 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    c(i, j, k, l) = v(voigt_index(i, j), voigt_index(k, l));
    return c;
}

} // namespace shoms
