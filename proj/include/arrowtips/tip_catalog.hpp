#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrowtips/render_program.hpp"

namespace arrowtips {

enum class Side { start, end };

const char* to_string(Side side);

/// Signed horizontal reach of a tip in its local frame (pt). The right extent is
/// how far the tip protrudes past its origin, i.e. how much the host is shortened.
struct Extents {
    double left = 0.0;
    double right = 0.0;

    friend bool operator==(const Extents&, const Extents&) = default;
};

/// One catalog declaration.
struct TipDefinition {
    std::string start_name;
    std::string end_name;
    /// Base unit of the draw block as a function of host width (0 for tips drawn
    /// purely in line-width multiples).
    std::function<double(double)> base_unit;
    std::function<Extents(double)> extents;
    std::function<RenderProgram(double)> program;
    /// Index of the declaration this one reverses, if it was declared as a reversal.
    std::optional<std::size_t> reverses;
    /// Index of the declared reversal of this entry, in either direction.
    std::optional<std::size_t> reversal;
};

struct TipId {
    std::size_t index = 0;
    Side side = Side::end;

    friend bool operator==(const TipId&, const TipId&) = default;
};

/// Every declaration of the catalog, in declaration order. Built once.
const std::vector<TipDefinition>& registry();

const TipDefinition& definition(TipId tip);

/// Name of `tip` on its own side.
const std::string& name_of(TipId tip);

/// Resolves `name` against the start names (side=start) or end names (side=end).
/// Throws LookupError with up to three nearest names when nothing matches.
TipId lookup(std::string_view name, Side side);

/// All registered names for one side, in registry order.
std::vector<std::string> names(Side side);

/// Throws DomainError for w <= 0.
Extents extents(TipId tip, double w);
RenderProgram program(TipId tip, double w);

/// The declared reversal of `tip`, keeping its side. Throws LookupError for tips
/// without one.
TipId reversed(TipId tip);

/// Machine-readable catalog dump, one tab-separated record per declaration:
/// index, start name, end name, kind (base|reversed), left pt coefficient, left
/// width coefficient, right pt coefficient, right width coefficient.
std::string catalog_dump();

}  // namespace arrowtips
