#pragma once

// Points and affine maps in a y-up plane. All lengths are in pt.

namespace arrowtips {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator-(Point p) { return {-p.x, -p.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline Point add(Point p, Point q) { return p + q; }

/// Point at `radius` from the origin in direction `degrees` (counterclockwise from +x).
/// Throws DomainError for a negative radius.
Point polar(double degrees, double radius);

double dot(Point p, Point q);
double norm(Point p);
double distance(Point p, Point q);

/// Unit vector along p. Throws DomainError for the zero vector.
Point normalized(Point p);

/// (x, y) -> (a*x + c*y + tx, b*x + d*y + ty)
struct AffineTransform {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;
    double tx = 0.0;
    double ty = 0.0;

    static AffineTransform identity() { return {}; }
    static AffineTransform translation(double dx, double dy) { return {1.0, 0.0, 0.0, 1.0, dx, dy}; }
    static AffineTransform xshift(double dx) { return translation(dx, 0.0); }
    static AffineTransform mirror_x() { return {-1.0, 0.0, 0.0, 1.0, 0.0, 0.0}; }
    static AffineTransform mirror_y() { return {1.0, 0.0, 0.0, -1.0, 0.0, 0.0}; }
    /// Rotation taking +x onto `unit_direction`.
    static AffineTransform rotation_to(Point unit_direction);

    Point apply(Point p) const { return {a * p.x + c * p.y + tx, b * p.x + d * p.y + ty}; }

    friend bool operator==(const AffineTransform&, const AffineTransform&) = default;
};

inline Point apply(const AffineTransform& t, Point p) { return t.apply(p); }

/// The transform equal to applying `second` first and then `first`.
AffineTransform compose(const AffineTransform& first, const AffineTransform& second);

}  // namespace arrowtips
