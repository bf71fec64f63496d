#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace arrowtips {

/// Tip selection for the two ends of a path, e.g. "stealth'-latex'".
struct ArrowSpec {
    std::optional<std::string> start;
    std::optional<std::string> end;

    friend bool operator==(const ArrowSpec&, const ArrowSpec&) = default;
};

/// Parses `start-end`, where each side is empty or exactly one registered name
/// for that side. Names are matched longest-first; surrounding whitespace of the
/// whole string is ignored, interior whitespace is significant.
///
/// Throws SpecSyntaxError when there is no '-', UnknownTipError carrying the
/// unmatched text, and SequenceUnsupportedError when a side spells several tips.
ArrowSpec parse_spec(std::string_view spec);

std::string format_spec(const ArrowSpec& spec);

}  // namespace arrowtips
