#include "arrowtips/render_program.hpp"

#include <type_traits>
#include <utility>

#include "arrowtips/errors.hpp"

namespace arrowtips {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* to_string(LineCap cap) { return cap == LineCap::round ? "round" : "butt"; }

const char* to_string(LineJoin join) { return join == LineJoin::round ? "round" : "miter"; }

const char* to_string(PathAction action) {
    switch (action) {
        case PathAction::stroke:
            return "stroke";
        case PathAction::fill:
            return "fill";
        case PathAction::fill_stroke:
            return "fillstroke";
    }
    return "stroke";
}

RenderProgram::RenderProgram(std::vector<ProgramOp> ops, AffineTransform placement)
    : ops_(std::move(ops)), placement_(placement) {}

std::size_t RenderProgram::action_count() const {
    std::size_t n = 0;
    for (const auto& op : ops_) {
        n += std::holds_alternative<UsePath>(op) ? 1 : 0;
    }
    return n;
}

RenderProgram RenderProgram::placed(const AffineTransform& outer) const {
    return RenderProgram(ops_, compose(outer, placement_));
}

ProgramBuilder& ProgramBuilder::dash_solid() {
    ops_.emplace_back(SetDashSolid{});
    return *this;
}

ProgramBuilder& ProgramBuilder::cap(LineCap c) {
    ops_.emplace_back(SetCap{c});
    return *this;
}

ProgramBuilder& ProgramBuilder::join(LineJoin j) {
    ops_.emplace_back(SetJoin{j});
    return *this;
}

ProgramBuilder& ProgramBuilder::scale_line_width(double factor) {
    if (!(factor > 0.0)) {
        throw DomainError("line width factor must be positive");
    }
    ops_.emplace_back(ScaleLineWidth{factor});
    return *this;
}

ProgramBuilder& ProgramBuilder::translate(Length dx, Length dy) {
    ops_.emplace_back(Translate{{dx, dy}});
    return *this;
}

ProgramBuilder& ProgramBuilder::move_to(Length x, Length y) {
    ops_.emplace_back(MoveTo{{x, y}});
    return *this;
}

ProgramBuilder& ProgramBuilder::line_to(Length x, Length y) {
    ops_.emplace_back(LineTo{{x, y}});
    return *this;
}

ProgramBuilder& ProgramBuilder::curve_to(TipPoint c1, TipPoint c2, TipPoint to) {
    ops_.emplace_back(CurveTo{c1, c2, to});
    return *this;
}

ProgramBuilder& ProgramBuilder::close() {
    ops_.emplace_back(ClosePath{});
    return *this;
}

ProgramBuilder& ProgramBuilder::circle(TipPoint center, Length radius) {
    ops_.emplace_back(Circle{center, radius});
    return *this;
}

ProgramBuilder& ProgramBuilder::use(PathAction action) {
    ops_.emplace_back(UsePath{action});
    return *this;
}

RenderProgram ProgramBuilder::build() const { return RenderProgram(ops_); }

namespace {

template <class PointMap>
RenderProgram map_points(const RenderProgram& program, PointMap f) {
    std::vector<ProgramOp> ops;
    ops.reserve(program.ops().size());
    for (const auto& op : program.ops()) {
        ops.push_back(std::visit(overloaded{
                                     [&](const MoveTo& m) -> ProgramOp { return MoveTo{f(m.to)}; },
                                     [&](const LineTo& l) -> ProgramOp { return LineTo{f(l.to)}; },
                                     [&](const CurveTo& c) -> ProgramOp {
                                         return CurveTo{f(c.c1), f(c.c2), f(c.to)};
                                     },
                                     [&](const Circle& c) -> ProgramOp { return Circle{f(c.center), c.radius}; },
                                     [&](const Translate& t) -> ProgramOp { return Translate{f(t.offset)}; },
                                     [](const auto& other) -> ProgramOp { return other; },
                                 },
                                 op));
    }
    return RenderProgram(std::move(ops), program.placement());
}

}  // namespace

RenderProgram mirror_x(const RenderProgram& program) {
    return map_points(program, [](TipPoint p) { return TipPoint{-p.x, p.y}; });
}

RenderProgram mirror_y(const RenderProgram& program) {
    return map_points(program, [](TipPoint p) { return TipPoint{p.x, -p.y}; });
}

namespace {

class Interpreter {
public:
    Interpreter(const AffineTransform& placement, double width) : placement_(placement), width_(width) {}

    void run(const std::vector<ProgramOp>& ops) {
        if (ops.empty()) {
            throw StructuralError(0, "empty program");
        }
        for (index_ = 0; index_ < ops.size(); ++index_) {
            std::visit([this](const auto& op) { step(op); }, ops[index_]);
        }
        if (!path_.empty()) {
            throw StructuralError(first_pending_, "path has no terminating action");
        }
        if (scene_.drawables.empty()) {
            throw StructuralError(ops.size() - 1, "program has no action");
        }
    }

    EvaluatedScene take() && { return std::move(scene_); }

private:
    Point resolve(const TipPoint& p) const {
        return placement_.apply(Point{offset_.x + p.x.resolve(width_), offset_.y + p.y.resolve(width_)});
    }

    void begin_path_op() {
        if (path_.empty()) {
            first_pending_ = index_;
        }
    }

    void require_current_point(const char* op_name) const {
        if (!has_current_) {
            throw StructuralError(index_, std::string(op_name) + " without a current point");
        }
    }

    void step(const MoveTo& m) {
        begin_path_op();
        path_.emplace_back(outline::MoveTo{resolve(m.to)});
        has_current_ = true;
    }

    void step(const LineTo& l) {
        require_current_point("lineto");
        path_.emplace_back(outline::LineTo{resolve(l.to)});
    }

    void step(const CurveTo& c) {
        require_current_point("curveto");
        path_.emplace_back(outline::CurveTo{resolve(c.c1), resolve(c.c2), resolve(c.to)});
    }

    void step(const ClosePath&) {
        require_current_point("closepath");
        path_.emplace_back(outline::Close{});
    }

    void step(const Circle& c) {
        const double r = c.radius.resolve(width_);
        if (!(r > 0.0)) {
            throw StructuralError(index_, "circle radius must be positive");
        }
        begin_path_op();
        path_.emplace_back(outline::Circle{resolve(c.center), r});
        has_current_ = false;
    }

    void step(const SetDashSolid&) {}

    void step(const SetCap& s) { cap_ = s.cap; }

    void step(const SetJoin& s) { join_ = s.join; }

    void step(const ScaleLineWidth& s) {
        if (!(s.factor > 0.0)) {
            throw StructuralError(index_, "line width factor must be positive");
        }
        width_ *= s.factor;
    }

    void step(const Translate& t) {
        offset_ = Point{offset_.x + t.offset.x.resolve(width_), offset_.y + t.offset.y.resolve(width_)};
    }

    void step(const UsePath& u) {
        if (path_.empty()) {
            throw StructuralError(index_, std::string(to_string(u.action)) + " with an empty path");
        }
        scene_.drawables.push_back(Drawable{std::move(path_), width_, cap_, join_, u.action});
        path_ = Outline{};
        has_current_ = false;
    }

    AffineTransform placement_;
    double width_;
    LineCap cap_ = LineCap::butt;
    LineJoin join_ = LineJoin::miter;
    Point offset_{};
    Outline path_;
    bool has_current_ = false;
    std::size_t index_ = 0;
    std::size_t first_pending_ = 0;
    EvaluatedScene scene_;
};

}  // namespace

EvaluatedScene evaluate(const RenderProgram& program, double host_width) {
    if (!(host_width > 0.0)) {
        throw DomainError("host line width must be positive");
    }
    Interpreter interp(program.placement(), host_width);
    interp.run(program.ops());
    return std::move(interp).take();
}

}  // namespace arrowtips
