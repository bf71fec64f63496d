#include "arrowtips/svg_backend.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace arrowtips {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double label_height = 10.0;
constexpr double label_font_size = 7.0;
constexpr double cell_margin = 4.0;

void append_point(std::string& out, Point p) {
    out += format_number(p.x);
    out += ' ';
    out += format_number(p.y);
}

std::string escape_xml(const std::string& text) {
    std::string out;
    for (const char ch : text) {
        switch (ch) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            case '\'':
                out += "&apos;";
                break;
            default:
                out += ch;
        }
    }
    return out;
}

struct Box {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(Point p, double pad = 0.0) {
        min_x = std::min(min_x, p.x - pad);
        min_y = std::min(min_y, p.y - pad);
        max_x = std::max(max_x, p.x + pad);
        max_y = std::max(max_y, p.y + pad);
    }

    bool empty() const { return min_x > max_x; }
};

// Control-point hull, padded by the stroke width.
void add_drawable(Box& box, const Drawable& d) {
    const double pad = d.stroke_width;
    for (const auto& seg : d.outline) {
        std::visit(overloaded{
                       [&](const outline::MoveTo& m) { box.add(m.to, pad); },
                       [&](const outline::LineTo& l) { box.add(l.to, pad); },
                       [&](const outline::CurveTo& c) {
                           box.add(c.c1, pad);
                           box.add(c.c2, pad);
                           box.add(c.to, pad);
                       },
                       [](const outline::Close&) {},
                       [&](const outline::Circle& c) { box.add(c.center, c.radius + pad); },
                   },
                   seg);
    }
}

}  // namespace

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("cannot serialize a non-finite coordinate");
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
    std::string s(buf, res.ptr);
    if (const auto dot = s.find('.'); dot != std::string::npos) {
        while (s.back() == '0') {
            s.pop_back();
        }
        if (s.back() == '.') {
            s.pop_back();
        }
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

std::string to_path_data(const Outline& path) {
    std::string out;
    const auto sep = [&out] {
        if (!out.empty()) {
            out += ' ';
        }
    };
    for (const auto& seg : path) {
        std::visit(overloaded{
                       [&](const outline::MoveTo& m) {
                           sep();
                           out += "M ";
                           append_point(out, m.to);
                       },
                       [&](const outline::LineTo& l) {
                           sep();
                           out += "L ";
                           append_point(out, l.to);
                       },
                       [&](const outline::CurveTo& c) {
                           sep();
                           out += "C ";
                           append_point(out, c.c1);
                           out += ' ';
                           append_point(out, c.c2);
                           out += ' ';
                           append_point(out, c.to);
                       },
                       [&](const outline::Close&) {
                           sep();
                           out += 'Z';
                       },
                       [&](const outline::Circle& c) {
                           const std::string r = format_number(c.radius);
                           const Point east{c.center.x + c.radius, c.center.y};
                           const Point west{c.center.x - c.radius, c.center.y};
                           sep();
                           out += "M ";
                           append_point(out, east);
                           out += " A " + r + ' ' + r + " 0 1 0 ";
                           append_point(out, west);
                           out += " A " + r + ' ' + r + " 0 1 0 ";
                           append_point(out, east);
                           out += " Z";
                       },
                   },
                   seg);
    }
    return out;
}

void validate_paint(const std::string& color) {
    const bool shape_ok = (color.size() == 4 || color.size() == 7) && color[0] == '#';
    const bool digits_ok = shape_ok && std::all_of(color.begin() + 1, color.end(), [](char ch) {
                               return std::isxdigit(static_cast<unsigned char>(ch)) != 0;
                           });
    if (!digits_ok) {
        throw std::invalid_argument("paint must be #rgb or #rrggbb, got \"" + color + "\"");
    }
}

std::string path_element(const Drawable& d, const std::string& paint) {
    const bool fills = d.action != PathAction::stroke;
    const bool strokes = d.action != PathAction::fill;
    std::string out = "<path d=\"" + to_path_data(d.outline) + "\"";
    out += " fill=\"" + (fills ? paint : std::string("none")) + "\"";
    out += " stroke=\"" + (strokes ? paint : std::string("none")) + "\"";
    out += " stroke-width=\"" + format_number(d.stroke_width) + "\"";
    out += std::string(" stroke-linecap=\"") + to_string(d.cap) + "\"";
    out += std::string(" stroke-linejoin=\"") + to_string(d.join) + "\"";
    out += "/>";
    return out;
}

std::string render_document(std::span<const LabeledScene> scenes, const GridLayout& layout,
                            const std::string& paint) {
    if (scenes.empty()) {
        throw std::invalid_argument("render_document needs at least one scene");
    }
    if (layout.columns == 0) {
        throw std::invalid_argument("grid needs at least one column");
    }
    validate_paint(paint);

    Box bounds;
    for (const auto& s : scenes) {
        for (const auto& d : s.scene.drawables) {
            add_drawable(bounds, d);
        }
    }
    if (bounds.empty()) {
        bounds.add(Point{});
    }
    const double cell_w = (bounds.max_x - bounds.min_x) + 2 * cell_margin;
    const double cell_h = (bounds.max_y - bounds.min_y) + 2 * cell_margin + label_height;
    const std::size_t columns = std::min(layout.columns, scenes.size());
    const std::size_t rows = (scenes.size() + layout.columns - 1) / layout.columns;
    const std::string width = format_number(cell_w * static_cast<double>(columns));
    const std::string height = format_number(cell_h * static_cast<double>(rows));

    // Internal (min_x, max_y) lands at (margin, label_height + margin) inside the cell.
    const std::string origin = "translate(" + format_number(cell_margin - bounds.min_x) + ' ' +
                               format_number(label_height + cell_margin + bounds.max_y) + ") scale(1 -1)";

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + width + "\" height=\"" + height +
           "\" viewBox=\"0 0 " + width + ' ' + height + "\">\n";
    for (std::size_t i = 0; i < scenes.size(); ++i) {
        const double x = cell_w * static_cast<double>(i % layout.columns);
        const double y = cell_h * static_cast<double>(i / layout.columns);
        out += "  <g id=\"scene-" + std::to_string(i) + "\" transform=\"translate(" + format_number(x) + ' ' +
               format_number(y) + ")\">\n";
        out += "    <text x=\"" + format_number(cell_margin) + "\" y=\"" + format_number(label_height - 2.0) +
               "\" font-family=\"monospace\" font-size=\"" + format_number(label_font_size) + "\" fill=\"" + paint +
               "\">" + escape_xml(scenes[i].label) + "</text>\n";
        out += "    <g transform=\"" + origin + "\">\n";
        for (const auto& d : scenes[i].scene.drawables) {
            out += "      " + path_element(d, paint) + "\n";
        }
        out += "    </g>\n";
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace arrowtips
