#include "arrowtips/errors.hpp"

#include <sstream>

namespace arrowtips {

StructuralError::StructuralError(std::size_t op_index, const std::string& what)
    : ArrowError("op " + std::to_string(op_index) + ": " + what), op_index_(op_index) {}

namespace {

std::string lookup_message(const std::string& what, const std::vector<std::string>& candidates) {
    if (candidates.empty()) {
        return what;
    }
    std::ostringstream out;
    out << what << " (did you mean";
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        out << (i == 0 ? " " : ", ") << '"' << candidates[i] << '"';
    }
    out << "?)";
    return out.str();
}

}  // namespace

LookupError::LookupError(const std::string& what, std::vector<std::string> candidates)
    : ArrowError(lookup_message(what, candidates)), candidates_(std::move(candidates)) {}

PathTooShortError::PathTooShortError(double required, double available)
    : InvalidPathError("path too short: tip needs " + std::to_string(required) + "pt, path has " +
                       std::to_string(available) + "pt"),
      required_(required),
      available_(available) {}

UnknownTipError::UnknownTipError(std::string unmatched)
    : SpecSyntaxError("unknown tip \"" + unmatched + "\""), unmatched_(std::move(unmatched)) {}

namespace {

std::string sequence_message(const std::vector<std::string>& names) {
    std::string msg = "tip sequences are not supported:";
    for (const auto& n : names) {
        msg += " \"" + n + "\"";
    }
    return msg;
}

}  // namespace

SequenceUnsupportedError::SequenceUnsupportedError(const std::vector<std::string>& names)
    : SpecSyntaxError(sequence_message(names)) {}

}  // namespace arrowtips
