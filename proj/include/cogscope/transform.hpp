#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>

#include "cogscope/ast.hpp"

namespace cogscope {

/// The `P;Q` composition. Output layout: P's globals, Q's globals not already
/// declared by P, P's helpers, Q's helpers (renamed fresh on a name clash),
/// then one main running P's body followed by Q's body.
///
/// A declaration of Q that repeats a name declared at P's top level (globals
/// or main's outermost block) is dropped; a scalar initializer survives as a
/// plain assignment in its place, `::name = init;` for globals at the start
/// of Q's part. Q's references to its globals are qualified with `::` when a
/// local of P's main would otherwise capture them. Throws cogscope::Error if
/// either input does not resolve.
[[nodiscard]] SourceUnit concat(const SourceUnit& p, const SourceUnit& q);

/// concat over source text; the result is rendered canonically.
[[nodiscard]] std::string concat_source(std::string_view p, std::string_view q);

/// Replaces every variable and function name found in `mapping`. Names not in
/// the mapping are kept. Throws std::invalid_argument when the mapping is not
/// injective over the program's names, renames `main`, produces an invalid
/// identifier, a keyword or a builtin, or collides with a kept name.
[[nodiscard]] SourceUnit rename(const SourceUnit& unit, const std::map<std::string, std::string>& mapping);

/// Every variable and function name of the unit except `main`.
[[nodiscard]] std::set<std::string> program_names(const SourceUnit& unit);

/// Random bijection from program_names(unit) onto fresh names.
[[nodiscard]] std::map<std::string, std::string> random_renaming(const SourceUnit& unit, std::mt19937_64& rng);

/// Random reordering of main's top-level statements. Two statements keep
/// their relative order when one declares a name the other mentions, so
/// every identifier keeps its binding and the result still parses.
[[nodiscard]] SourceUnit permute(const SourceUnit& unit, std::uint64_t seed);

}  // namespace cogscope
