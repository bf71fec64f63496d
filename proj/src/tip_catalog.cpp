#include "arrowtips/tip_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "arrowtips/errors.hpp"

namespace arrowtips {

const char* to_string(Side side) { return side == Side::start ? "start" : "end"; }

namespace {

constexpr LineCap butt_cap = LineCap::butt;
constexpr LineCap round_cap = LineCap::round;
constexpr LineJoin miter_join = LineJoin::miter;
constexpr LineJoin round_join = LineJoin::round;
constexpr PathAction stroke = PathAction::stroke;
constexpr PathAction fill = PathAction::fill;
constexpr PathAction fill_stroke = PathAction::fill_stroke;

TipPoint xy(double x, double y) { return {pt(x), pt(y)}; }
TipPoint xy(double x, Length y) { return {pt(x), y}; }
TipPoint xy(Length x, double y) { return {x, pt(y)}; }

// Base units: a = c + k*w.
double unit(double c, double k, double w) { return c + k * w; }

TipDefinition base(std::string start, std::string end, std::function<double(double)> base_unit,
                   std::function<Extents(double)> ext, std::function<RenderProgram(double)> prog) {
    return TipDefinition{std::move(start), std::move(end), std::move(base_unit), std::move(ext), std::move(prog),
                         std::nullopt, std::nullopt};
}

// A declared reversal: extents swap and negate, geometry mirrored in x.
TipDefinition reversal_of(std::vector<TipDefinition>& table, std::size_t original, std::string start,
                          std::string end) {
    const TipDefinition& src = table.at(original);
    TipDefinition def{std::move(start),
                      std::move(end),
                      src.base_unit,
                      [ext = src.extents](double w) {
                          const Extents e = ext(w);
                          return Extents{-e.right, -e.left};
                      },
                      [prog = src.program](double w) { return mirror_x(prog(w)); },
                      original,
                      original};
    table[original].reversal = table.size();
    return def;
}

// Angle / triangle arms: apex at (apex_x, 0), arms at polar(+-angle, radius) from it.
Point arm(double apex_x, double degrees, double radius) { return add(Point{apex_x, 0.0}, polar(degrees, radius)); }

std::vector<TipDefinition> build_registry() {
    std::vector<TipDefinition> t;
    t.reserve(47);

    // Brackets. The setup and draw blocks use different units.
    t.push_back(base(
        "[", "]", [](double w) { return unit(2.0, 1.5, w); },
        [](double w) {
            const double a = unit(1.0, 1.25, w);
            return Extents{-a, 0.5 * w};
        },
        [](double w) {
            const double a = unit(2.0, 1.5, w);
            const double b = a + w;
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .cap(butt_cap)
                .move_to(pt(-0.5 * b), pt(-a))
                .line_to(pt(0.0), pt(-a))
                .line_to(pt(0.0), pt(a))
                .line_to(pt(-0.5 * b), pt(a))
                .use(stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 0, "]", "["));

    t.push_back(base(
        "(", ")", [](double w) { return unit(2.0, 1.5, w); },
        [](double w) {
            const double a = unit(2.0, 1.5, w);
            return Extents{-(0.5 * a + 0.5 * w), 0.0625 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(2.0, 1.5, w);
            return ProgramBuilder{}
                .dash_solid()
                .cap(round_cap)
                .move_to(pt(-0.5 * a), pt(-a))
                .curve_to(xy(0.25 * a, -0.5 * a), xy(0.25 * a, 0.5 * a), xy(-0.5 * a, a))
                .use(stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 2, ")", "("));

    // Open angles.
    const auto angle_unit = [](double w) { return unit(0.3, 0.25, w); };

    t.push_back(base(
        "angle 90", "angle 90", angle_unit,
        [](double w) {
            const double a = unit(0.3, 0.25, w);
            return Extents{-(5.5 * a + 0.5 * w), 0.5 * a + 0.707 * w};
        },
        [](double w) {
            const double a = unit(0.3, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .cap(round_cap)
                .join(miter_join)
                .move_to(pt(-5.5 * a), pt(-6 * a))
                .line_to(pt(0.5 * a), pt(0 * a))
                .line_to(pt(-5.5 * a), pt(6 * a))
                .use(stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 4, "angle 90 reversed", "angle 90 reversed"));

    t.push_back(base(
        "angle 60", "angle 60", angle_unit,
        [](double w) {
            const double a = unit(0.3, 0.25, w);
            return Extents{-(7.29 * a + 0.5 * w), 0.5 * a + w};
        },
        [](double w) {
            const double a = unit(0.3, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .cap(round_cap)
                .join(miter_join)
                .move_to(arm(0.5 * a, 150, 9 * a))
                .line_to(pt(0.5 * a), pt(0 * a))
                .line_to(arm(0.5 * a, -150, 9 * a))
                .use(stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 6, "angle 60 reversed", "angle 60 reversed"));

    t.push_back(base(
        "angle 45", "angle 45", angle_unit,
        [](double w) {
            const double a = unit(0.3, 0.25, w);
            return Extents{-(8.705 * a + 0.5 * w), 0.5 * a + 1.28 * w};
        },
        [](double w) {
            const double a = unit(0.3, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .cap(round_cap)
                .join(miter_join)
                .move_to(arm(0.5 * a, 157, 10 * a))
                .line_to(pt(0.5 * a), pt(0 * a))
                .line_to(arm(0.5 * a, -157, 10 * a))
                .use(stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 8, "angle 45 reversed", "angle 45 reversed"));

    // Dots.
    const auto dot_unit = [](double w) { return unit(0.4, 0.2, w); };

    t.push_back(base(
        "*", "*", dot_unit,
        [](double w) {
            const double a = unit(0.4, 0.2, w);
            return Extents{-(5.5 * a + w), 1.5 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(0.4, 0.2, w);
            return ProgramBuilder{}.dash_solid().circle(xy(-3 * a, 0.0), pt(4.5 * a)).use(fill_stroke).build();
        }));

    t.push_back(base(
        "o", "o", dot_unit,
        [](double w) {
            const double a = unit(0.4, 0.2, w);
            return Extents{-0.5 * w, 9 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(0.4, 0.2, w);
            return ProgramBuilder{}.dash_solid().circle(xy(4.5 * a, 0.0), pt(4.5 * a)).use(stroke).build();
        }));

    // Diamonds.
    const auto diamond_unit = [](double w) { return unit(0.4, 0.275, w); };

    t.push_back(base(
        "diamond", "diamond", diamond_unit,
        [](double w) {
            const double a = unit(0.4, 0.275, w);
            return Extents{-(13 * a + 0.5 * w), 1 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(0.4, 0.275, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(round_join)
                .move_to(pt(1 * a), pt(0 * a))
                .line_to(pt(-6 * a), pt(4 * a))
                .line_to(pt(-13 * a), pt(0 * a))
                .line_to(pt(-6 * a), pt(-4 * a))
                .close()
                .use(fill_stroke)
                .build();
        }));

    t.push_back(base(
        "open diamond", "open diamond", diamond_unit,
        [](double w) {
            const double a = unit(0.4, 0.275, w);
            return Extents{-0.5 * w, 14 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(0.4, 0.275, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(round_join)
                .move_to(pt(14 * a), pt(0 * a))
                .line_to(pt(7 * a), pt(4 * a))
                .line_to(pt(0 * a), pt(0 * a))
                .line_to(pt(7 * a), pt(-4 * a))
                .close()
                .use(stroke)
                .build();
        }));

    // Filled triangles.
    const auto triangle_unit = [](double w) { return unit(0.5, 0.25, w); };

    t.push_back(base(
        "triangle 90", "triangle 90", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-(5.5 * a + 0.5 * w), 0.5 * a + 0.707 * w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(pt(-5.5 * a), pt(-6 * a))
                .line_to(pt(0.5 * a), pt(0 * a))
                .line_to(pt(-5.5 * a), pt(6 * a))
                .close()
                .use(fill_stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 14, "triangle 90 reversed", "triangle 90 reversed"));

    t.push_back(base(
        "triangle 60", "triangle 60", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-(7.29 * a + 0.5 * w), 0.5 * a + w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(arm(0.5 * a, 150, 9 * a))
                .line_to(pt(0.5 * a), pt(0 * a))
                .line_to(arm(0.5 * a, -150, 9 * a))
                .close()
                .use(fill_stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 16, "triangle 60 reversed", "triangle 60 reversed"));

    t.push_back(base(
        "triangle 45", "triangle 45", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-(8.705 * a + 0.5 * w), 0.5 * a + 1.28 * w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(arm(0.5 * a, 157, 10 * a))
                .line_to(pt(0.5 * a), pt(0 * a))
                .line_to(arm(0.5 * a, -157, 10 * a))
                .close()
                .use(fill_stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 18, "triangle 45 reversed", "triangle 45 reversed"));

    // Open triangles. Each reversed variant is its own declaration.
    t.push_back(base(
        "open triangle 90", "open triangle 90", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-0.5 * w, 6 * a + 0.707 * w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(pt(0 * a), pt(-6 * a))
                .line_to(pt(6 * a), pt(0 * a))
                .line_to(pt(0 * a), pt(6 * a))
                .close()
                .use(stroke)
                .build();
        }));

    t.push_back(base(
        "open triangle 90 reversed", "open triangle 90 reversed", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-0.707 * w, 6 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(pt(6 * a), pt(-6 * a))
                .line_to(pt(0 * a), pt(0 * a))
                .line_to(pt(6 * a), pt(6 * a))
                .close()
                .use(stroke)
                .build();
        }));

    t.push_back(base(
        "open triangle 60", "open triangle 60", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-0.5 * w, 7.794 * a + w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(arm(7.794 * a, 150, 9 * a))
                .line_to(pt(7.794 * a), pt(0.0))
                .line_to(arm(7.794 * a, -150, 9 * a))
                .close()
                .use(stroke)
                .build();
        }));

    t.push_back(base(
        "open triangle 60 reversed", "open triangle 60 reversed", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-w, 7.794 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(polar(30, 9 * a))
                .line_to(Point{})
                .line_to(polar(-30, 9 * a))
                .close()
                .use(stroke)
                .build();
        }));

    t.push_back(base(
        "open triangle 45", "open triangle 45", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-0.5 * w, 9.205 * a + 1.28 * w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(arm(9.205 * a, 157, 10 * a))
                .line_to(pt(9.205 * a), pt(0.0))
                .line_to(arm(9.205 * a, -157, 10 * a))
                .close()
                .use(stroke)
                .build();
        }));

    t.push_back(base(
        "open triangle 45 reversed", "open triangle 45 reversed", triangle_unit,
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return Extents{-1.28 * w, 9.205 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(0.5, 0.25, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(miter_join)
                .move_to(polar(23, 10 * a))
                .line_to(Point{})
                .line_to(polar(-23, 10 * a))
                .close()
                .use(stroke)
                .build();
        }));

    // Curved heads.
    const auto curved_unit = [](double w) { return unit(0.28, 0.3, w); };

    t.push_back(base(
        "latex'", "latex'", curved_unit,
        [](double w) {
            const double a = unit(0.28, 0.3, w);
            return Extents{-4 * a, 6 * a};
        },
        [](double w) {
            const double a = unit(0.28, 0.3, w);
            return ProgramBuilder{}
                .move_to(pt(6 * a), pt(0 * a))
                .curve_to(xy(3.5 * a, 0.5 * a), xy(-1 * a, 1.5 * a), xy(-4 * a, 3.75 * a))
                .curve_to(xy(-1.5 * a, 1 * a), xy(-1.5 * a, -1 * a), xy(-4 * a, -3.75 * a))
                .curve_to(xy(-1 * a, -1.5 * a), xy(3.5 * a, -0.5 * a), xy(6 * a, 0 * a))
                .use(fill)
                .build();
        }));
    t.push_back(reversal_of(t, 26, "latex' reversed", "latex' reversed"));

    t.push_back(base(
        "stealth'", "stealth'", curved_unit,
        [](double w) {
            const double a = unit(0.28, 0.3, w);
            return Extents{-(6 * a + 0.5 * w), 2 * a + 0.5 * w};
        },
        [](double w) {
            const double a = unit(0.28, 0.3, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(round_join)
                .move_to(pt(2 * a), pt(0 * a))
                .curve_to(xy(-0.5 * a, 0.5 * a), xy(-3 * a, 1.5 * a), xy(-6 * a, 3.25 * a))
                .curve_to(xy(-3 * a, 1 * a), xy(-3 * a, -1 * a), xy(-6 * a, -3.25 * a))
                .curve_to(xy(-3 * a, -1.5 * a), xy(-0.5 * a, -0.5 * a), xy(2 * a, 0 * a))
                .close()
                .use(fill_stroke)
                .build();
        }));
    t.push_back(reversal_of(t, 28, "stealth' reversed", "stealth' reversed"));

    // Harpoons. The draw blocks narrow the register to 0.8w before drawing, so
    // every lw() below resolves against the narrowed width.
    const auto harpoon_extents = [](double w) { return Extents{-0.84 - 1.3 * w, 0.21 + 0.625 * w}; };
    const auto harpoon = [](double sign) {
        return [sign](double w) {
            const double a = unit(0.28, 0.3, w);
            return ProgramBuilder{}
                .scale_line_width(0.8)
                .dash_solid()
                .cap(round_cap)
                .join(round_join)
                .move_to(pt(-3 * a), pt(sign * 4 * a))
                .curve_to(xy(-2.75 * a, sign * 2.5 * a), xy(0.0, sign * 0.25 * a), xy(0.75 * a, 0.0))
                .curve_to(xy(0.55 * a, lw(sign * -0.125)), xy(0.5 * a, lw(sign * -0.125)),
                          xy(0.5 * a, lw(sign * -0.125)))
                .line_to(pt(0.0), lw(sign * -0.125))
                .use(stroke)
                .build();
        };
    };
    t.push_back(base("left to", "left to", curved_unit, harpoon_extents, harpoon(1.0)));
    t.push_back(base("right to", "right to", curved_unit, harpoon_extents, harpoon(-1.0)));

    // The reversed harpoons stroke a short butt-capped stub at full width, then
    // draw the barb twice, once to each side of the axis.
    const auto reversed_harpoon_extents = [](double w) {
        const double a = unit(0.28, 0.3, w);
        return Extents{-0.1 * w, 3.75 * a + 0.9 * w};
    };
    const auto reversed_harpoon = [](double sign) {
        return [sign](double w) {
            const double a = unit(0.28, 0.3, w);
            return ProgramBuilder{}
                .dash_solid()
                .join(round_join)
                .cap(butt_cap)
                .move_to(lw(0.5), pt(0.0))
                .line_to(lw(-0.1), pt(0.0))
                .use(stroke)
                .cap(round_cap)
                .scale_line_width(0.8)
                .translate(lw(0.625), pt(0.0))
                .move_to(pt(3.75 * a), pt(sign * 4 * a))
                .curve_to(xy(3.5 * a, sign * 2.5 * a), xy(0.75 * a, sign * 0.25 * a), xy(0.0, lw(sign * 0.125)))
                .move_to(pt(3.75 * a), pt(sign * 4 * a))
                .curve_to(xy(3.5 * a, sign * 2.5 * a), xy(0.75 * a, sign * 0.25 * a), xy(0.0, lw(sign * -0.125)))
                .use(stroke)
                .build();
        };
    };
    t.push_back(base("left to reversed", "left to reversed", curved_unit, reversed_harpoon_extents,
                     reversed_harpoon(1.0)));
    t.push_back(base("right to reversed", "right to reversed", curved_unit, reversed_harpoon_extents,
                     reversed_harpoon(-1.0)));

    // Hooks.
    const auto hook_extents = [](double w) {
        const double a = unit(0.4, 0.2, w);
        return Extents{-0.5 * w, 3.75 * a + 0.5 * w};
    };
    const auto hook_arc = [](ProgramBuilder& p, double a, double sign) {
        p.curve_to(xy(2.415 * a, 0 * a), xy(3.75 * a, sign * 1.665 * a), xy(3.75 * a, sign * 3 * a))
            .curve_to(xy(3.75 * a, sign * 4.665 * a), xy(2.415 * a, sign * 6 * a), xy(0.75 * a, sign * 6 * a));
    };
    const auto hook = [hook_arc](double sign) {
        return [hook_arc, sign](double w) {
            const double a = unit(0.4, 0.2, w);
            ProgramBuilder p;
            p.dash_solid().cap(round_cap).move_to(pt(0 * a), pt(0 * a)).line_to(pt(0.75 * a), pt(0 * a));
            hook_arc(p, a, sign);
            return p.use(stroke).build();
        };
    };

    t.push_back(base("left hook", "left hook", dot_unit, hook_extents, hook(1.0)));
    t.push_back(reversal_of(t, 34, "left hook reversed", "left hook reversed"));
    t.push_back(base("right hook", "right hook", dot_unit, hook_extents, hook(-1.0)));
    t.push_back(reversal_of(t, 36, "right hook reversed", "right hook reversed"));
    t.push_back(base("hooks", "hooks", dot_unit, hook_extents, [hook_arc](double w) {
        const double a = unit(0.4, 0.2, w);
        ProgramBuilder p;
        p.dash_solid().cap(round_cap).move_to(pt(0 * a), pt(0 * a)).line_to(pt(0.75 * a), pt(0 * a));
        hook_arc(p, a, 1.0);
        p.move_to(pt(0.75 * a), pt(0 * a));
        hook_arc(p, a, -1.0);
        return p.use(stroke).build();
    }));
    t.push_back(reversal_of(t, 38, "hooks reversed", "hooks reversed"));

    t.push_back(base(
        "serif cm", "serif cm", [](double w) { return unit(0.4, 0.45, w); },
        [](double w) {
            const double a = unit(0.4, 0.45, w);
            return Extents{-0.75 * a, 0.04 * w};
        },
        [](double w) {
            const double a = unit(0.4, 0.45, w);
            return ProgramBuilder{}
                .translate(lw(0.04), pt(0.0))
                .move_to(pt(-0.75 * a), lw(0.5))
                .curve_to(xy(-0.375 * a, lw(0.5)), xy(-0.375 * a, lw(0.7)), xy(-0.375 * a, 1.95 * a))
                .line_to(pt(0.0), pt(1.95 * a))
                .curve_to(xy(lw(-0.04), 0.5 * a), xy(lw(-0.04), -0.5 * a), xy(0.0, -1.95 * a))
                .line_to(pt(-0.375 * a), pt(-1.95 * a))
                .curve_to(xy(-0.375 * a, lw(-0.7)), xy(-0.375 * a, lw(-0.5)), xy(-0.75 * a, lw(-0.5)))
                .close()
                .use(fill)
                .build();
        }));

    // Caps, drawn in line-width multiples only.
    const auto no_unit = [](double) { return 0.0; };

    t.push_back(base(
        "round cap", "round cap", no_unit, [](double w) { return Extents{0.0, w}; },
        [](double) {
            return ProgramBuilder{}
                .dash_solid()
                .cap(round_cap)
                .move_to(pt(0.0), pt(0.0))
                .line_to(lw(0.5), pt(0.0))
                .use(stroke)
                .build();
        }));

    t.push_back(base(
        "butt cap", "butt cap", no_unit, [](double w) { return Extents{-0.1 * w, 0.5 * w}; },
        [](double) {
            return ProgramBuilder{}
                .dash_solid()
                .cap(butt_cap)
                .move_to(lw(-0.1), pt(0.0))
                .line_to(lw(0.5), pt(0.0))
                .use(stroke)
                .build();
        }));

    t.push_back(base(
        "triangle 90 cap", "triangle 90 cap", no_unit, [](double w) { return Extents{-0.1 * w, 1 * w}; },
        [](double) {
            return ProgramBuilder{}
                .move_to(lw(-0.1), lw(0.5))
                .line_to(lw(0.5), lw(0.5))
                .line_to(lw(1.0), pt(0.0))
                .line_to(lw(0.5), lw(-0.5))
                .line_to(lw(-0.1), lw(-0.5))
                .use(fill)
                .build();
        }));

    t.push_back(base(
        "triangle 90 cap reversed", "triangle 90 cap reversed", no_unit,
        [](double w) { return Extents{-0.1 * w, 1 * w}; },
        [](double) {
            return ProgramBuilder{}
                .move_to(lw(1.0), lw(0.5))
                .line_to(lw(-0.1), lw(0.5))
                .line_to(lw(-0.1), lw(-0.5))
                .line_to(lw(1.0), lw(-0.5))
                .line_to(lw(0.5), lw(0.0))
                .use(fill)
                .build();
        }));

    t.push_back(base(
        "fast cap", "fast cap", no_unit, [](double w) { return Extents{-0.1 * w, 2 * w}; },
        [](double) {
            return ProgramBuilder{}
                .move_to(lw(-0.1), lw(0.5))
                .line_to(lw(0.5), lw(0.5))
                .line_to(lw(1.0), lw(0.0))
                .line_to(lw(0.5), lw(-0.5))
                .line_to(lw(-0.1), lw(-0.5))
                .close()
                .move_to(lw(1.0), lw(0.5))
                .line_to(lw(1.5), lw(0.5))
                .line_to(lw(2.0), lw(0.0))
                .line_to(lw(1.5), lw(-0.5))
                .line_to(lw(1.0), lw(-0.5))
                .line_to(lw(1.5), lw(0.0))
                .close()
                .use(fill)
                .build();
        }));

    t.push_back(base(
        "fast cap reversed", "fast cap reversed", no_unit, [](double w) { return Extents{-0.1 * w, 2 * w}; },
        [](double) {
            return ProgramBuilder{}
                .move_to(lw(-0.1), lw(0.5))
                .line_to(lw(1.0), lw(0.5))
                .line_to(lw(0.5), lw(0.0))
                .line_to(lw(1.0), lw(-0.5))
                .line_to(lw(-0.1), lw(-0.5))
                .close()
                .move_to(lw(1.5), lw(0.5))
                .line_to(lw(2.0), lw(0.5))
                .line_to(lw(1.5), lw(0.0))
                .line_to(lw(2.0), lw(-0.5))
                .line_to(lw(1.5), lw(-0.5))
                .line_to(lw(1.0), lw(0.0))
                .close()
                .use(fill)
                .build();
        }));

    return t;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

void check_width(double w) {
    if (!(w > 0.0)) {
        throw DomainError("line width must be positive");
    }
}

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v == 0.0 ? 0.0 : v);
    return std::string(buf, res.ptr);
}

}  // namespace

const std::vector<TipDefinition>& registry() {
    static const std::vector<TipDefinition> table = build_registry();
    return table;
}

const TipDefinition& definition(TipId tip) {
    const auto& table = registry();
    if (tip.index >= table.size()) {
        throw LookupError("tip index " + std::to_string(tip.index) + " out of range");
    }
    return table[tip.index];
}

const std::string& name_of(TipId tip) {
    const TipDefinition& def = definition(tip);
    return tip.side == Side::start ? def.start_name : def.end_name;
}

std::vector<std::string> names(Side side) {
    std::vector<std::string> out;
    for (const auto& def : registry()) {
        out.push_back(side == Side::start ? def.start_name : def.end_name);
    }
    return out;
}

TipId lookup(std::string_view name, Side side) {
    const auto& table = registry();
    for (std::size_t i = 0; i < table.size(); ++i) {
        const std::string& candidate = side == Side::start ? table[i].start_name : table[i].end_name;
        if (candidate == name) {
            return TipId{i, side};
        }
    }

    std::vector<std::pair<std::size_t, std::string>> ranked;
    for (auto& n : names(side)) {
        ranked.emplace_back(edit_distance(name, n), std::move(n));
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<std::string> nearest;
    for (std::size_t i = 0; i < ranked.size() && i < 3; ++i) {
        nearest.push_back(ranked[i].second);
    }
    throw LookupError("no " + std::string(to_string(side)) + " tip named \"" + std::string(name) + "\"",
                      std::move(nearest));
}

Extents extents(TipId tip, double w) {
    check_width(w);
    return definition(tip).extents(w);
}

RenderProgram program(TipId tip, double w) {
    check_width(w);
    return definition(tip).program(w);
}

TipId reversed(TipId tip) {
    const TipDefinition& def = definition(tip);
    if (!def.reversal) {
        throw LookupError("tip \"" + name_of(tip) + "\" has no declared reversal");
    }
    return TipId{*def.reversal, tip.side};
}

std::string catalog_dump() {
    std::ostringstream out;
    const auto& table = registry();
    for (std::size_t i = 0; i < table.size(); ++i) {
        const TipDefinition& def = table[i];
        // Extents are affine in w; read the coefficients off w = 0 and w = 1.
        const Extents at0 = def.extents(0.0);
        const Extents at1 = def.extents(1.0);
        out << i << '\t' << def.start_name << '\t' << def.end_name << '\t' << (def.reverses ? "reversed" : "base")
            << '\t' << shortest(at0.left) << '\t' << shortest(at1.left - at0.left) << '\t' << shortest(at0.right)
            << '\t' << shortest(at1.right - at0.right) << '\n';
    }
    return out.str();
}

}  // namespace arrowtips
