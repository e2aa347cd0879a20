#pragma once

#include <array>
#include <cmath>

namespace bloch {

using vec3 = std::array<double, 3>;

struct mat3 {
    // row-major
    double m[3][3];

    static mat3 identity() {
        return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    }
    static mat3 zero() {
        return {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
    }
};

inline vec3 operator+(const vec3& a, const vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline vec3 operator-(const vec3& a, const vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline vec3 operator*(double s, const vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline double dot(const vec3& a, const vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline vec3 cross(const vec3& a, const vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const vec3& a) { return std::sqrt(dot(a, a)); }

inline vec3 normalized(const vec3& a) {
    double n = norm(a);
    return n > 0 ? (1.0 / n) * a : a;
}

// angle between unit vectors via the chord; accurate near 0 and pi where the
// arccos of a dot product loses half the available precision
inline double angle_between(const vec3& a, const vec3& b) {
    double half = 0.5 * norm(a - b);
    return 2.0 * std::asin(half > 1.0 ? 1.0 : half);
}

inline mat3 skew(const vec3& w) {
    return {{{0, -w[2], w[1]}, {w[2], 0, -w[0]}, {-w[1], w[0], 0}}};
}

inline vec3 mul(const mat3& A, const vec3& v) {
    return {A.m[0][0] * v[0] + A.m[0][1] * v[1] + A.m[0][2] * v[2],
            A.m[1][0] * v[0] + A.m[1][1] * v[1] + A.m[1][2] * v[2],
            A.m[2][0] * v[0] + A.m[2][1] * v[1] + A.m[2][2] * v[2]};
}

inline mat3 mul(const mat3& A, const mat3& B) {
    mat3 C = mat3::zero();
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            double aik = A.m[i][k];
            for (int j = 0; j < 3; ++j)
                C.m[i][j] += aik * B.m[k][j];
        }
    return C;
}

inline mat3 operator+(const mat3& A, const mat3& B) {
    mat3 C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            C.m[i][j] = A.m[i][j] + B.m[i][j];
    return C;
}

inline mat3 operator*(double s, const mat3& A) {
    mat3 C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            C.m[i][j] = s * A.m[i][j];
    return C;
}

inline mat3 transpose(const mat3& A) {
    mat3 C;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            C.m[i][j] = A.m[j][i];
    return C;
}

inline double max_abs_diff(const mat3& A, const mat3& B) {
    double w = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            w = std::max(w, std::abs(A.m[i][j] - B.m[i][j]));
    return w;
}

inline double det(const vec3& c0, const vec3& c1, const vec3& c2) {
    return c0[0] * (c1[1] * c2[2] - c1[2] * c2[1])
         - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
         + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1]);
}

// exact rotation exp(t * skew(w)) by the axis-angle formula; the rotation
// angle is |w| * t, so a non-unit axis encodes its own angular speed
inline mat3 rotation(const vec3& w, double t) {
    double n = norm(w);
    if (n < 1e-300) return mat3::identity();
    double th = n * t;
    vec3 k = (1.0 / n) * w;
    mat3 K = skew(k);
    mat3 K2 = mul(K, K);
    return mat3::identity() + std::sin(th) * K + (1.0 - std::cos(th)) * K2;
}

} // namespace bloch
