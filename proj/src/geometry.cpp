#include "arrowtips/geometry.hpp"

#include <cmath>
#include <numbers>

#include "arrowtips/errors.hpp"

namespace arrowtips {

Point polar(double degrees, double radius) {
    if (!(radius >= 0.0)) {
        throw DomainError("polar: negative radius");
    }
    const double rad = degrees * (std::numbers::pi / 180.0);
    return {radius * std::cos(rad), radius * std::sin(rad)};
}

double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }

double norm(Point p) { return std::hypot(p.x, p.y); }

double distance(Point p, Point q) { return norm(p - q); }

Point normalized(Point p) {
    const double n = norm(p);
    if (n == 0.0) {
        throw DomainError("cannot normalize the zero vector");
    }
    return {p.x / n, p.y / n};
}

AffineTransform AffineTransform::rotation_to(Point u) {
    return {u.x, u.y, -u.y, u.x, 0.0, 0.0};
}

AffineTransform compose(const AffineTransform& t1, const AffineTransform& t2) {
    return {
        t1.a * t2.a + t1.c * t2.b,
        t1.b * t2.a + t1.d * t2.b,
        t1.a * t2.c + t1.c * t2.d,
        t1.b * t2.c + t1.d * t2.d,
        t1.a * t2.tx + t1.c * t2.ty + t1.tx,
        t1.b * t2.tx + t1.d * t2.ty + t1.ty,
    };
}

}  // namespace arrowtips
