#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "arrowtips/geometry.hpp"

namespace arrowtips {

/// A length written against the tip's resolved base unit and the live line-width
/// register: value = pt + per_width * W, with W read when the op executes.
struct Length {
    double pt = 0.0;
    double per_width = 0.0;

    double resolve(double width_register) const { return pt + per_width * width_register; }

    friend bool operator==(const Length&, const Length&) = default;
};

inline Length operator-(Length l) { return {-l.pt, -l.per_width}; }

/// Absolute length in pt.
constexpr Length pt(double v) { return {v, 0.0}; }
/// Multiple of the width register.
constexpr Length lw(double k) { return {0.0, k}; }

struct TipPoint {
    Length x;
    Length y;

    friend bool operator==(const TipPoint&, const TipPoint&) = default;
};

inline TipPoint at(Point p) { return {pt(p.x), pt(p.y)}; }

enum class LineCap { butt, round };
enum class LineJoin { miter, round };
enum class PathAction { stroke, fill, fill_stroke };

const char* to_string(LineCap cap);
const char* to_string(LineJoin join);
const char* to_string(PathAction action);

// Path construction ops.
struct MoveTo {
    TipPoint to;
    friend bool operator==(const MoveTo&, const MoveTo&) = default;
};
struct LineTo {
    TipPoint to;
    friend bool operator==(const LineTo&, const LineTo&) = default;
};
struct CurveTo {
    TipPoint c1;
    TipPoint c2;
    TipPoint to;
    friend bool operator==(const CurveTo&, const CurveTo&) = default;
};
struct ClosePath {
    friend bool operator==(const ClosePath&, const ClosePath&) = default;
};
struct Circle {
    TipPoint center;
    Length radius;
    friend bool operator==(const Circle&, const Circle&) = default;
};

// Graphics-state ops.
struct SetDashSolid {
    friend bool operator==(const SetDashSolid&, const SetDashSolid&) = default;
};
struct SetCap {
    LineCap cap;
    friend bool operator==(const SetCap&, const SetCap&) = default;
};
struct SetJoin {
    LineJoin join;
    friend bool operator==(const SetJoin&, const SetJoin&) = default;
};
/// W <- factor * W
struct ScaleLineWidth {
    double factor;
    friend bool operator==(const ScaleLineWidth&, const ScaleLineWidth&) = default;
};
/// Shifts every later path point; the offset resolves against W at this op.
struct Translate {
    TipPoint offset;
    friend bool operator==(const Translate&, const Translate&) = default;
};

/// Realizes the path accumulated since the previous action.
struct UsePath {
    PathAction action;
    friend bool operator==(const UsePath&, const UsePath&) = default;
};

using ProgramOp = std::variant<MoveTo, LineTo, CurveTo, ClosePath, Circle, SetDashSolid, SetCap, SetJoin,
                               ScaleLineWidth, Translate, UsePath>;

/// Ordered draw ops of one tip in its local frame, plus the rigid placement that
/// maps the local frame into the world (identity for catalog programs).
class RenderProgram {
public:
    RenderProgram() = default;
    explicit RenderProgram(std::vector<ProgramOp> ops, AffineTransform placement = AffineTransform::identity());

    const std::vector<ProgramOp>& ops() const noexcept { return ops_; }
    const AffineTransform& placement() const noexcept { return placement_; }

    std::size_t action_count() const;

    /// Same ops, with `outer` applied after the current placement.
    RenderProgram placed(const AffineTransform& outer) const;

    friend bool operator==(const RenderProgram&, const RenderProgram&) = default;

private:
    std::vector<ProgramOp> ops_;
    AffineTransform placement_;
};

/// Fluent construction of programs, one call per draw-block statement.
class ProgramBuilder {
public:
    ProgramBuilder& dash_solid();
    ProgramBuilder& cap(LineCap c);
    ProgramBuilder& join(LineJoin j);
    ProgramBuilder& scale_line_width(double factor);
    ProgramBuilder& translate(Length dx, Length dy);
    ProgramBuilder& move_to(Length x, Length y);
    ProgramBuilder& move_to(Point p) { return move_to(pt(p.x), pt(p.y)); }
    ProgramBuilder& line_to(Length x, Length y);
    ProgramBuilder& line_to(Point p) { return line_to(pt(p.x), pt(p.y)); }
    ProgramBuilder& curve_to(TipPoint c1, TipPoint c2, TipPoint to);
    ProgramBuilder& close();
    ProgramBuilder& circle(TipPoint center, Length radius);
    ProgramBuilder& use(PathAction action);

    RenderProgram build() const;

private:
    std::vector<ProgramOp> ops_;
};

/// Negates every x coordinate (points, circle centers, translations).
RenderProgram mirror_x(const RenderProgram& program);
/// Negates every y coordinate.
RenderProgram mirror_y(const RenderProgram& program);

namespace outline {

struct MoveTo {
    Point to;
    friend bool operator==(const MoveTo&, const MoveTo&) = default;
};
struct LineTo {
    Point to;
    friend bool operator==(const LineTo&, const LineTo&) = default;
};
struct CurveTo {
    Point c1;
    Point c2;
    Point to;
    friend bool operator==(const CurveTo&, const CurveTo&) = default;
};
struct Close {
    friend bool operator==(const Close&, const Close&) = default;
};
struct Circle {
    Point center;
    double radius;
    friend bool operator==(const Circle&, const Circle&) = default;
};

using Segment = std::variant<MoveTo, LineTo, CurveTo, Close, Circle>;

}  // namespace outline

/// Absolute path geometry.
using Outline = std::vector<outline::Segment>;

struct Drawable {
    Outline outline;
    double stroke_width = 1.0;
    LineCap cap = LineCap::butt;
    LineJoin join = LineJoin::miter;
    PathAction action = PathAction::stroke;

    friend bool operator==(const Drawable&, const Drawable&) = default;
};

struct EvaluatedScene {
    std::vector<Drawable> drawables;

    friend bool operator==(const EvaluatedScene&, const EvaluatedScene&) = default;
};

/// Replays `program` with the width register starting at `host_width`.
///
/// Initial state is cap=butt, join=miter, solid dash, no translation. Every
/// register-relative length resolves against the register value at the moment
/// its op runs, so a ScaleLineWidth affects only the ops that follow it. Each
/// UsePath snapshots the current state and accumulated path into one Drawable.
///
/// Throws DomainError for host_width <= 0 and StructuralError (carrying the op
/// index) for an empty program, a segment before any MoveTo, an action with no
/// path, or path ops left without a terminating action.
EvaluatedScene evaluate(const RenderProgram& program, double host_width);

}  // namespace arrowtips
