#include "arrowtips/attachment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include <boost/math/quadrature/gauss.hpp>

#include "arrowtips/errors.hpp"

namespace arrowtips {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Point lerp(Point p, Point q, double t) { return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)}; }

Point cubic_derivative(const CubicSegment& c, double t) {
    const double u = 1.0 - t;
    const Point d0 = c.c1 - c.start;
    const Point d1 = c.c2 - c.c1;
    const Point d2 = c.end - c.c2;
    return 3.0 * (u * u) * d0 + (6.0 * u * t) * d1 + 3.0 * (t * t) * d2;
}

PathSegment reverse_segment(const PathSegment& s) {
    return std::visit(overloaded{
                          [](const LineSegment& l) -> PathSegment { return LineSegment{l.end, l.start}; },
                          [](const CubicSegment& c) -> PathSegment {
                              return CubicSegment{c.end, c.c2, c.c1, c.start};
                          },
                      },
                      s);
}

// Portion [0, t] of the segment, ending exactly at `cut`.
PathSegment head(const PathSegment& s, double t, Point cut) {
    return std::visit(overloaded{
                          [&](const LineSegment& l) -> PathSegment { return LineSegment{l.start, cut}; },
                          [&](const CubicSegment& c) -> PathSegment {
                              const Point p01 = lerp(c.start, c.c1, t);
                              const Point p12 = lerp(c.c1, c.c2, t);
                              const Point p012 = lerp(p01, p12, t);
                              return CubicSegment{c.start, p01, p012, cut};
                          },
                      },
                      s);
}

struct Cut {
    double t;
    Point at;
};

// Walking back from the segment's end (inside the circle of radius r around
// target), the first point where the segment leaves the circle; nullopt when the
// whole segment stays inside.
std::optional<Cut> pullback_cut(const PathSegment& s, Point target, double r) {
    if (const auto* line = std::get_if<LineSegment>(&s)) {
        // Walk back from the end: q + d*u, d in [0, len].
        const double len = distance(line->start, line->end);
        if (len == 0.0) {
            return std::nullopt;
        }
        const Point u = (1.0 / len) * (line->start - line->end);
        const Point e = line->end - target;
        const double eu = dot(e, u);
        const double disc = eu * eu - dot(e, e) + r * r;
        if (disc < 0.0) {
            return std::nullopt;
        }
        const double back = -eu + std::sqrt(disc);
        if (back > len) {
            return std::nullopt;
        }
        return Cut{1.0 - back / len, line->end + back * u};
    }

    // Scan from the end backwards for the first sample outside the circle, then bisect.
    constexpr int samples = 256;
    const auto outside = [&](double t) { return distance(segment_point(s, t), target) - r; };
    double inner = 1.0;
    for (int k = samples - 1; k >= 0; --k) {
        const double t = static_cast<double>(k) / samples;
        if (outside(t) >= 0.0) {
            double lo = t;
            double hi = inner;
            for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) {
                    break;
                }
                (outside(mid) >= 0.0 ? lo : hi) = mid;
            }
            return Cut{lo, segment_point(s, lo)};
        }
        inner = t;
    }
    return std::nullopt;
}

struct Pullback {
    HostPath path;
    Point anchor;
};

Pullback pull_back_end(const HostPath& path, double r) {
    const auto& segs = path.segments();
    const Point target = path.end();
    for (std::size_t i = segs.size(); i-- > 0;) {
        if (const auto cut = pullback_cut(segs[i], target, r)) {
            std::vector<PathSegment> kept(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(i));
            if (cut->t > 0.0) {
                kept.push_back(head(segs[i], cut->t, cut->at));
            }
            if (kept.empty()) {
                break;
            }
            return Pullback{HostPath(std::move(kept)), cut->at};
        }
    }
    throw PathTooShortError(r, path.length());
}

}  // namespace

Point segment_start(const PathSegment& s) {
    return std::visit([](const auto& seg) { return seg.start; }, s);
}

Point segment_end(const PathSegment& s) {
    return std::visit([](const auto& seg) { return seg.end; }, s);
}

Point segment_point(const PathSegment& s, double t) {
    return std::visit(overloaded{
                          [t](const LineSegment& l) { return lerp(l.start, l.end, t); },
                          [t](const CubicSegment& c) {
                              const double u = 1.0 - t;
                              const double b0 = u * u * u;
                              const double b1 = 3.0 * u * u * t;
                              const double b2 = 3.0 * u * t * t;
                              const double b3 = t * t * t;
                              return Point{b0 * c.start.x + b1 * c.c1.x + b2 * c.c2.x + b3 * c.end.x,
                                           b0 * c.start.y + b1 * c.c1.y + b2 * c.c2.y + b3 * c.end.y};
                          },
                      },
                      s);
}

double arc_length(const PathSegment& s) {
    return std::visit(overloaded{
                          [](const LineSegment& l) { return distance(l.start, l.end); },
                          [](const CubicSegment& c) {
                              const auto speed = [&c](double t) { return norm(cubic_derivative(c, t)); };
                              constexpr int panels = 8;
                              double total = 0.0;
                              for (int i = 0; i < panels; ++i) {
                                  total += boost::math::quadrature::gauss<double, 16>::integrate(
                                      speed, static_cast<double>(i) / panels, static_cast<double>(i + 1) / panels);
                              }
                              return total;
                          },
                      },
                      s);
}

HostPath::HostPath(std::vector<PathSegment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) {
        throw InvalidPathError("host path needs at least one segment");
    }
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        if (segment_end(segments_[i - 1]) != segment_start(segments_[i])) {
            throw InvalidPathError("host path segment " + std::to_string(i) + " does not start where " +
                                   std::to_string(i - 1) + " ends");
        }
    }
    if (!(length() > 0.0)) {
        throw DegeneratePathError("host path has zero length");
    }
}

double HostPath::length() const {
    double total = 0.0;
    for (const auto& s : segments_) {
        total += arc_length(s);
    }
    return total;
}

HostPath HostPath::reversed() const {
    std::vector<PathSegment> rev;
    rev.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
        rev.push_back(reverse_segment(*it));
    }
    return HostPath(std::move(rev));
}

Outline HostPath::outline() const {
    Outline out;
    out.emplace_back(outline::MoveTo{start()});
    for (const auto& s : segments_) {
        std::visit(overloaded{
                       [&](const LineSegment& l) { out.emplace_back(outline::LineTo{l.end}); },
                       [&](const CubicSegment& c) { out.emplace_back(outline::CurveTo{c.c1, c.c2, c.end}); },
                   },
                   s);
    }
    return out;
}

Point end_tangent(const HostPath& path, Side side) {
    if (side == Side::start) {
        return end_tangent(path.reversed(), Side::end);
    }
    const auto& segs = path.segments();
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
        const Point e = segment_end(*it);
        std::array<Point, 3> behind{};
        std::size_t n = 0;
        std::visit(overloaded{
                       [&](const LineSegment& l) { behind[n++] = l.start; },
                       [&](const CubicSegment& c) {
                           behind[n++] = c.c2;
                           behind[n++] = c.c1;
                           behind[n++] = c.start;
                       },
                   },
                   *it);
        for (std::size_t k = 0; k < n; ++k) {
            if (behind[k] != e) {
                return normalized(e - behind[k]);
            }
        }
    }
    throw DegeneratePathError("host path has no direction at its " + std::string(to_string(side)));
}

Attachment attach(const HostPath& path, Side side, TipId tip, double w) {
    const double r = extents(tip, w).right;
    const bool at_start = side == Side::start;
    const HostPath oriented = at_start ? path.reversed() : path;

    if (!(r < oriented.length())) {
        throw PathTooShortError(r, oriented.length());
    }

    Point anchor = oriented.end();
    Point direction{};
    std::optional<HostPath> shortened;
    if (r > 0.0) {
        Pullback pb = pull_back_end(oriented, r);
        anchor = pb.anchor;
        direction = normalized(oriented.end() - anchor);
        shortened.emplace(std::move(pb.path));
    } else {
        direction = end_tangent(oriented, Side::end);
        shortened.emplace(oriented);
    }

    const AffineTransform transform =
        compose(AffineTransform::translation(anchor.x, anchor.y), AffineTransform::rotation_to(direction));
    return Attachment{at_start ? shortened->reversed() : *shortened, program(tip, w).placed(transform),
                      Placement{anchor, direction, transform}};
}

EvaluatedScene decorate(const HostPath& path, const ArrowSpec& spec, double w) {
    if (!(w > 0.0)) {
        throw DomainError("line width must be positive");
    }
    HostPath host = path;
    std::optional<RenderProgram> end_tip;
    std::optional<RenderProgram> start_tip;
    if (spec.end) {
        Attachment a = attach(host, Side::end, lookup(*spec.end, Side::end), w);
        host = std::move(a.shortened);
        end_tip = std::move(a.placed);
    }
    if (spec.start) {
        Attachment a = attach(host, Side::start, lookup(*spec.start, Side::start), w);
        host = std::move(a.shortened);
        start_tip = std::move(a.placed);
    }

    EvaluatedScene scene;
    scene.drawables.push_back(Drawable{host.outline(), w, LineCap::butt, LineJoin::miter, PathAction::stroke});
    for (const auto* tip : {&start_tip, &end_tip}) {
        if (*tip) {
            EvaluatedScene part = evaluate(**tip, w);
            for (auto& d : part.drawables) {
                scene.drawables.push_back(std::move(d));
            }
        }
    }
    return scene;
}

}  // namespace arrowtips
