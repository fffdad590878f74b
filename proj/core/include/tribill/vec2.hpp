#ifndef TRIBILL_VEC2_HPP
#define TRIBILL_VEC2_HPP

#include "tribill/real_cyclotomic.hpp"

namespace tribill {

struct Vec2 {
    RealCyclotomic x, y;

    Vec2() = default;
    Vec2(RealCyclotomic px, RealCyclotomic py) : x(std::move(px)), y(std::move(py)) {}

    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
    friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const RealCyclotomic& s, const Vec2& v) { return {s * v.x, s * v.y}; }

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
};

inline RealCyclotomic dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline RealCyclotomic cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

} // namespace tribill

#endif
