#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "srk/error.hpp"

namespace srk {

// q = w + x*i + y*j + z*k with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }
};

constexpr Quaternion operator+(Quaternion a, Quaternion b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(Quaternion a, Quaternion b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(Quaternion a) { return {-a.w, -a.x, -a.y, -a.z}; }

// Hamilton product; noncommutative.
constexpr Quaternion operator*(Quaternion a, Quaternion b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

constexpr Quaternion operator*(Quaternion a, double s) {
    return {a.w * s, a.x * s, a.y * s, a.z * s};
}

constexpr Quaternion operator*(double s, Quaternion a) { return a * s; }

constexpr Quaternion operator/(Quaternion a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

constexpr Quaternion& operator+=(Quaternion& a, Quaternion b) { return a = a + b; }
constexpr Quaternion& operator-=(Quaternion& a, Quaternion b) { return a = a - b; }
constexpr Quaternion& operator*=(Quaternion& a, Quaternion b) { return a = a * b; }

constexpr bool operator==(Quaternion a, Quaternion b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

constexpr bool operator!=(Quaternion a, Quaternion b) { return !(a == b); }

constexpr double real_part(Quaternion q) { return q.w; }

constexpr Quaternion imag_part(Quaternion q) { return {0.0, q.x, q.y, q.z}; }

constexpr Quaternion conj(Quaternion q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(Quaternion q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

// Scaled to stay finite over the full double range.
inline double abs(Quaternion q) {
    double aw = std::fabs(q.w), ax = std::fabs(q.x);
    double ay = std::fabs(q.y), az = std::fabs(q.z);
    double m = std::max(std::max(aw, ax), std::max(ay, az));
    if (m == 0.0) return 0.0;
    aw /= m; ax /= m; ay /= m; az /= m;
    return m * std::sqrt(aw * aw + ax * ax + ay * ay + az * az);
}

inline double abs_imag(Quaternion q) { return abs(imag_part(q)); }

// <p,q> = Re(p * conj(q)); the Euclidean inner product on R^4.
constexpr double inner(Quaternion p, Quaternion q) {
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

constexpr Quaternion lie_bracket(Quaternion p, Quaternion q) { return p * q - q * p; }

// conj(q)/|q|^2, computed via two scaled divisions so |q| down to the epsilon
// threshold inverts without intermediate under/overflow.
inline Quaternion inverse(Quaternion q, double eps = 1e-300) {
    double a = abs(q);
    if (!(a >= eps)) raise(ErrorCode::zero_division, "quaternion modulus below epsilon");
    return (conj(q) / a) / a;
}

// Imaginary unit: zero real part, unit modulus, so value^2 = -1.
class UnitImaginary {
public:
    explicit UnitImaginary(Quaternion q) : q_(q) {
        Quaternion sq = q * q + Quaternion::one();
        if (std::fabs(q.w) > 1e-12 || abs(sq) > 1e-12)
            raise(ErrorCode::invalid_parameter, "not a unit imaginary quaternion");
    }

    // Direction of Im(q), normalized.
    static UnitImaginary axis_of(Quaternion q) {
        double m = abs_imag(q);
        if (m == 0.0)
            raise(ErrorCode::invalid_parameter, "axis_of needs a nonreal quaternion");
        return UnitImaginary(Quaternion{0.0, q.x / m, q.y / m, q.z / m});
    }

    Quaternion value() const { return q_; }

private:
    Quaternion q_;
};

inline const UnitImaginary kAxisI = UnitImaginary(Quaternion::i());

// q = x + y*axis with y >= 0; real q gets the conventional axis i.
struct SliceDecomposition {
    double x;
    double y;
    UnitImaginary axis;
};

inline SliceDecomposition slice_decompose(Quaternion q) {
    double y = abs_imag(q);
    if (y == 0.0) return {q.w, 0.0, kAxisI};
    return {q.w, y, UnitImaginary::axis_of(q)};
}

inline Quaternion slice_point(double x, double y, UnitImaginary axis) {
    return Quaternion(x) + y * axis.value();
}

// Some J with J perpendicular to I (Gram-Schmidt against the least aligned
// coordinate axis).
inline UnitImaginary orthogonal_unit(UnitImaginary I) {
    Quaternion v = I.value();
    Quaternion cands[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    Quaternion best = cands[0];
    double best_align = std::numeric_limits<double>::infinity();
    for (Quaternion c : cands) {
        double a = std::fabs(inner(c, v));
        if (a < best_align) {
            best_align = a;
            best = c;
        }
    }
    Quaternion u = best - inner(best, v) * v;
    double m = abs(u);
    return UnitImaginary(u / m);
}

}  // namespace srk
