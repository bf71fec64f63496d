#include "arrowtips/cli.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "arrowtips/errors.hpp"
#include "arrowtips/svg_backend.hpp"

namespace arrowtips::cli {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        const std::size_t begin = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
        }
        if (i > begin) {
            out.push_back(s.substr(begin, i - begin));
        }
    }
    return out;
}

double parse_number(std::string_view text, std::string_view token) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw InvalidPathError("bad coordinate \"" + std::string(token) + "\"");
    }
    return v;
}

Point parse_pair(std::string_view token) {
    const auto comma = token.find(',');
    if (comma == std::string_view::npos) {
        throw InvalidPathError("expected x,y but got \"" + std::string(token) + "\"");
    }
    return {parse_number(token.substr(0, comma), token), parse_number(token.substr(comma + 1), token)};
}

std::string general15(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    std::string s(buf, res.ptr);
    return s == "-0" ? "0" : s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::ios_base::failure("cannot open \"" + path + "\" for writing");
    }
    file << content;
    file.close();
    if (!file) {
        throw std::ios_base::failure("failed writing \"" + path + "\"");
    }
}

void check_widths(std::span<const double> widths) {
    if (widths.empty()) {
        throw DomainError("at least one width is required");
    }
    for (const double w : widths) {
        if (!(w > 0.0)) {
            throw DomainError("widths must be positive");
        }
    }
}

}  // namespace

HostPath parse_path_literal(std::string_view literal) {
    const auto tokens = split_ws(literal);
    if (tokens.size() < 2 || tokens[0] != "M") {
        throw InvalidPathError("path must start with \"M x,y\"");
    }
    Point current = parse_pair(tokens[1]);
    std::vector<PathSegment> segments;
    char command = 0;
    std::size_t i = 2;
    while (i < tokens.size()) {
        if (tokens[i] == "L" || tokens[i] == "C") {
            command = tokens[i][0];
            ++i;
            if (i == tokens.size()) {
                throw InvalidPathError(std::string("dangling \"") + command + "\"");
            }
            continue;
        }
        if (command == 'L') {
            const Point p = parse_pair(tokens[i++]);
            segments.emplace_back(LineSegment{current, p});
            current = p;
        } else if (command == 'C') {
            if (i + 3 > tokens.size()) {
                throw InvalidPathError("curveto needs three points");
            }
            const Point c1 = parse_pair(tokens[i]);
            const Point c2 = parse_pair(tokens[i + 1]);
            const Point p = parse_pair(tokens[i + 2]);
            i += 3;
            segments.emplace_back(CubicSegment{current, c1, c2, p});
            current = p;
        } else {
            throw InvalidPathError("unexpected \"" + std::string(tokens[i]) + "\" (only one M, then L or C)");
        }
    }
    return HostPath(std::move(segments));
}

std::string gallery_document(std::span<const double> widths, const std::string& paint) {
    check_widths(widths);
    const HostPath reference({LineSegment{{0.0, 0.0}, {gallery_segment_length, 0.0}}});
    std::vector<LabeledScene> scenes;
    for (const auto& def : registry()) {
        const ArrowSpec spec{std::nullopt, def.end_name};
        for (const double w : widths) {
            scenes.push_back({def.end_name + " @ " + format_number(w), decorate(reference, spec, w)});
        }
    }
    return render_document(scenes, GridLayout{widths.size()}, paint);
}

std::string render_spec_document(const std::string& spec, const HostPath& path, double width,
                                 const std::string& paint) {
    const ArrowSpec parsed = parse_spec(spec);
    const LabeledScene scene{format_spec(parsed), decorate(path, parsed, width)};
    return render_document(std::span(&scene, 1), GridLayout{1}, paint);
}

std::string extents_line(const std::string& tip, Side side, double width) {
    const Extents e = extents(lookup(tip, side), width);
    return "left=" + general15(e.left) + " right=" + general15(e.right);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arrow-tip catalog, path decoration and SVG output", "arrowtips"};
    app.require_subcommand(1);

    std::vector<double> widths{0.4, 0.8, 1.6};
    std::string out_path;
    std::string paint = "#000000";
    std::string spec;
    std::string path_literal;
    double width = 0.4;
    std::string tip;
    std::string side_name = "end";

    auto* gallery = app.add_subcommand("gallery", "Render every tip at several widths");
    gallery->add_option("--widths", widths, "Line widths in pt")->delimiter(',');
    gallery->add_option("--out", out_path, "Output SVG file")->required();
    gallery->add_option("--color", paint, "Paint color (#rgb or #rrggbb)");

    auto* render = app.add_subcommand("render", "Decorate one path with an arrow spec");
    render->add_option("--spec", spec, "Arrow spec, e.g. \"stealth'-latex'\"")->required();
    render->add_option("--path", path_literal, "Path, e.g. \"M 0,0 L 100,0\"")->required();
    render->add_option("--width", width, "Line width in pt");
    render->add_option("--out", out_path, "Output SVG file")->required();
    render->add_option("--color", paint, "Paint color (#rgb or #rrggbb)");

    auto* ext = app.add_subcommand("extents", "Print a tip's left and right extents");
    ext->add_option("--tip", tip, "Tip name")->required();
    ext->add_option("--side", side_name, "start or end")->check(CLI::IsMember({"start", "end"}));
    ext->add_option("--width", width, "Line width in pt")->required();

    auto* catalog = app.add_subcommand("catalog", "Dump the tip registry with extent coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    std::string document;
    try {
        if (*gallery) {
            validate_paint(paint);
            document = gallery_document(widths, paint);
        } else if (*render) {
            validate_paint(paint);
            document = render_spec_document(spec, parse_path_literal(path_literal), width, paint);
        } else if (*ext) {
            out << extents_line(tip, side_name == "start" ? Side::start : Side::end, width) << '\n';
            return ok;
        } else if (*catalog) {
            out << catalog_dump();
            return ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        write_file(out_path, document);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    return ok;
}

}  // namespace arrowtips::cli
