#ifndef HORNEX_IO_HPP
#define HORNEX_IO_HPP

#include "hornex/instance.hpp"

#include <string>
#include <string_view>

namespace hornex {

enum class Format { kNative, kDimacs };

// Native format, line oriented, '#' starts a comment:
//
//   vars 6
//   imp 1 2 3 -> 5 6
//   imp -> 4          # empty premise
//   nc 1 3 6
//
// DIMACS CNF: a clause with exactly one positive literal is an implication,
// one without positive literals is a negative clause; anything else is
// rejected as non-Horn. An empty clause raises UnsatisfiableInput.
//
// Both parsers return the normalized instance without merging premises.

HornInstance parse_native(std::string_view text);
HornInstance parse_dimacs(std::string_view text);
HornInstance parse(std::string_view text, Format format);

/// Native output reproduces the instance exactly. DIMACS output writes one
/// clause per conclusion element, so non-unit implications come back split.
std::string serialize(const HornInstance& inst, Format format);

struct LoadOptions {
  bool merge_premises = true;
  bool reorder_by_size = false;
};

/// Parse followed by the optional premise merge and reordering.
HornInstance load(std::string_view text, Format format, const LoadOptions& options = {});

}  // namespace hornex

#endif  // HORNEX_IO_HPP
