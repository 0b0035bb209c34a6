#pragma once

#include <stdexcept>

#include "tsurf/rational.hpp"

namespace tsurf {

struct Vec2 {
    Rational x, y;

    Vec2() = default;
    Vec2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) = default;

    bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }
};

inline Rational wedge(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

// Row-major 2x2 matrix [[a,b],[c,d]].
struct Mat2 {
    Rational a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    Rational det() const { return a * d - b * c; }
    Mat2 inverse() const {
        Rational dt = det();
        if (dt.sign() == 0) throw std::domain_error("matrix: singular, cannot invert");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

// p |-> linear * p + translation.
struct AffineMap {
    Mat2 linear = Mat2::identity();
    Vec2 translation{};

    Vec2 operator()(const Vec2& p) const { return linear * p + translation; }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

inline Vec2 apply_affine(const AffineMap& m, const Vec2& p) { return m(p); }

// (f . g): apply g first.
inline AffineMap compose(const AffineMap& f, const AffineMap& g) {
    return {f.linear * g.linear, f.linear * g.translation + f.translation};
}

inline AffineMap inverse(const AffineMap& m) {
    Mat2 inv = m.linear.inverse();
    return {inv, -(inv * m.translation)};
}

}  // namespace tsurf
