#pragma once

#include <cstddef>
#include <cstdint>

namespace boolift {

/// Work and size caps shared by all modules. Defaults are desk-scale; every
/// field can be raised by callers (the CLI exposes the common ones).
struct Limits {
  int max_arity = 24;                      // BooleanFunction arity
  int max_composed_bits = 22;              // n*b1 and n*b2 of a composition
  std::uint64_t max_cells = 1ull << 28;    // materialized matrix cells
  std::size_t max_rank_dim = 4096;         // min(rows, cols) for exact rank
  std::uint64_t max_search = 1ull << 34;   // generic enumeration work units
  int max_exact_query_arity = 5;           // naadt_exact / napdt_exact
  int max_dt_arity = 20;                   // nonadaptive_dt
  int max_titsworth_arity = 16;
  int max_pattern_arity = 22;
  std::size_t max_row_classes = 256;       // one_way_cc_partial colouring
  std::uint64_t max_enumeration = 1ull << 24;  // q-ary string enumeration
  int separating_attempts = 64;
  std::size_t max_gadget_alice = 64;       // 2^{b1} for gadget_property_check
};

}  // namespace boolift
