#include "arrowtips/spec_parser.hpp"

#include <algorithm>
#include <vector>

#include "arrowtips/errors.hpp"
#include "arrowtips/tip_catalog.hpp"

namespace arrowtips {

namespace {

// Registered names for one side, longest first.
const std::vector<std::string>& vocabulary(Side side) {
    static const auto build = [](Side s) {
        std::vector<std::string> v = names(s);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::stable_sort(v.begin(), v.end(),
                         [](const std::string& l, const std::string& r) { return l.size() > r.size(); });
        return v;
    };
    static const std::vector<std::string> start = build(Side::start);
    static const std::vector<std::string> end = build(Side::end);
    return side == Side::start ? start : end;
}

std::optional<std::string> parse_side(std::string_view text, Side side) {
    if (text.empty()) {
        return std::nullopt;
    }
    const auto& vocab = vocabulary(side);
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::string_view rest = text.substr(pos);
        const auto hit = std::find_if(vocab.begin(), vocab.end(),
                                      [&](const std::string& n) { return rest.starts_with(n); });
        if (hit == vocab.end()) {
            throw UnknownTipError(std::string(rest));
        }
        tokens.push_back(*hit);
        pos += hit->size();
    }
    if (tokens.size() > 1) {
        throw SequenceUnsupportedError(tokens);
    }
    return tokens.front();
}

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

}  // namespace

ArrowSpec parse_spec(std::string_view spec) {
    const std::string_view text = trim(spec);
    // No registered name contains '-', so the first one is the separator.
    const auto dash = text.find('-');
    if (dash == std::string_view::npos) {
        throw SpecSyntaxError("arrow spec \"" + std::string(text) + "\" has no '-' separator");
    }
    ArrowSpec out;
    out.start = parse_side(text.substr(0, dash), Side::start);
    out.end = parse_side(text.substr(dash + 1), Side::end);
    return out;
}

std::string format_spec(const ArrowSpec& spec) {
    return spec.start.value_or("") + "-" + spec.end.value_or("");
}

}  // namespace arrowtips
