#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boolift/boolean_function.hpp"
#include "boolift/limits.hpp"

namespace boolift {

/// Parsed form of the textual function grammar:
///
///   spec := NAME ":" INT | "thr:" INT ":" INT
///         | "table:" HEX ":" INT [":" HEX]
///         | "sym:" BITSTRING
///   NAME := omb | ombp | addr | ip | and | or | nor | xor | maj
struct FunctionSpec {
  std::string raw;
  std::string tag;
  std::vector<int> params;          // n for most names; (k, n) for thr; n for table
  std::string table_hex;            // table only
  std::optional<std::string> domain_hex;
  std::string bits;                 // sym only, weight 0 first

  int arity() const;
};

/// Throws SpecError with the offending position.
FunctionSpec parse_spec(const std::string& text);
/// Canonical text; parse_spec(render_spec(s)) reproduces s up to `raw`.
std::string render_spec(const FunctionSpec& spec);

BooleanFunction build(const FunctionSpec& spec, const Limits& limits = {});
BooleanFunction build_named(const std::string& text, const Limits& limits = {});

/// Gadget grammar: and | xor | ip:B | addr:B | table:HEX:B1:B2
GadgetSpec parse_gadget(const std::string& text);
std::string render_gadget(const GadgetSpec& g);

}  // namespace boolift
