#pragma once

#include <variant>
#include <vector>

#include "arrowtips/geometry.hpp"
#include "arrowtips/render_program.hpp"
#include "arrowtips/spec_parser.hpp"
#include "arrowtips/tip_catalog.hpp"

namespace arrowtips {

struct LineSegment {
    Point start;
    Point end;

    friend bool operator==(const LineSegment&, const LineSegment&) = default;
};

struct CubicSegment {
    Point start;
    Point c1;
    Point c2;
    Point end;

    friend bool operator==(const CubicSegment&, const CubicSegment&) = default;
};

using PathSegment = std::variant<LineSegment, CubicSegment>;

Point segment_start(const PathSegment& s);
Point segment_end(const PathSegment& s);
Point segment_point(const PathSegment& s, double t);

/// Arc length, 16-point Gauss-Legendre for cubics.
double arc_length(const PathSegment& s);

/// An open path of connected line and cubic segments with positive length.
class HostPath {
public:
    /// Throws InvalidPathError for an empty or disconnected segment list and
    /// DegeneratePathError when all points coincide.
    explicit HostPath(std::vector<PathSegment> segments);

    const std::vector<PathSegment>& segments() const noexcept { return segments_; }
    Point start() const { return segment_start(segments_.front()); }
    Point end() const { return segment_end(segments_.back()); }
    double length() const;

    /// Same geometry traversed from end to start.
    HostPath reversed() const;

    Outline outline() const;

    friend bool operator==(const HostPath&, const HostPath&) = default;

private:
    std::vector<PathSegment> segments_;
};

/// Outward unit direction at one end: forward along the path at the end, backward
/// at the start. A cubic with a zero end derivative falls back to the nearest
/// distinct control point.
Point end_tangent(const HostPath& path, Side side);

/// Rigid map from a tip's local frame (origin at the anchor, +x outward) into the world.
struct Placement {
    Point anchor;
    Point direction;
    AffineTransform transform;
};

struct Attachment {
    HostPath shortened;
    RenderProgram placed;
    Placement placement;
};

/// Pulls the `side` endpoint back to the path point at distance right(tip, w)
/// from the original endpoint and places the tip there, pointing at the original
/// endpoint. On straight runs this is exactly arc-length shortening, and the
/// tip's front (local x = right extent) lands on the original endpoint.
///
/// Throws PathTooShortError when no such point exists.
Attachment attach(const HostPath& path, Side side, TipId tip, double w);

/// Scene for `path` with the tips of `spec`: host stroke, start tip, end tip.
/// The end tip is attached first, the start tip to the already-shortened path.
EvaluatedScene decorate(const HostPath& path, const ArrowSpec& spec, double w);

}  // namespace arrowtips
