#ifndef MCGFORGE_GEOM2D_HPP
#define MCGFORGE_GEOM2D_HPP

#include "mcgforge/rational.hpp"

namespace mcgforge {

struct Point {
    Rational x, y;
    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point operator-(const Point& o) const { return Point(x - o.x, y - o.y); }
    Point operator+(const Point& o) const { return Point(x + o.x, y + o.y); }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

inline int orient(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a).sign();
}

// Point on the unit circle with tan-half-angle u, exactly rational.
inline Point circle_point(const Rational& u) {
    Rational u2 = u * u;
    Rational den = u2 + Rational(1);
    return Point((Rational(1) - u2) / den, (u + u) / den);
}

// Proper crossing of open segments (p1,q1) x (p2,q2). All four endpoints are
// assumed pairwise distinct and in strictly convex position per face model,
// so collinear cases cannot occur between distinct chords.
struct SegCross {
    bool crosses = false;
    Point at;
    Rational s1, s2;  // params along each segment, in (0,1)
};

inline SegCross segment_cross(const Point& p1, const Point& q1, const Point& p2, const Point& q2) {
    SegCross r;
    Point d1 = q1 - p1, d2 = q2 - p2;
    Rational denom = cross(d1, d2);
    if (denom.is_zero()) return r;  // parallel; distinct circle chords never overlap
    Rational s1 = cross(p2 - p1, d2) / denom;
    Rational s2 = cross(p2 - p1, d1) / denom;
    if (s1 <= Rational(0) || s1 >= Rational(1) || s2 <= Rational(0) || s2 >= Rational(1)) return r;
    r.crosses = true;
    r.s1 = s1;
    r.s2 = s2;
    r.at = Point(p1.x + s1 * d1.x, p1.y + s1 * d1.y);
    return r;
}

// Direction comparator for sorting vectors counterclockwise starting just
// above the positive x-axis. Total order on nonzero directions.
inline bool dir_less(const Point& a, const Point& b) {
    auto half = [](const Point& v) {
        // 0: upper half incl. positive x-axis; 1: lower half incl. negative x-axis
        if (v.y > Rational(0)) return 0;
        if (v.y < Rational(0)) return 1;
        return v.x > Rational(0) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > Rational(0);
}

} // namespace mcgforge

#endif
