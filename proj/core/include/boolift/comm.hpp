#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolift/bitvector.hpp"
#include "boolift/boolean_function.hpp"
#include "boolift/limits.hpp"

namespace boolift {

/// Materialized communication matrix of f o g: row X is Alice's input, column
/// Y is Bob's. `defined` is empty when every entry is defined.
struct CommMatrix {
  std::uint64_t row_count = 0;
  std::uint64_t col_count = 0;
  std::vector<BitVector> rows;
  std::vector<BitVector> defined;

  bool is_total() const { return defined.empty(); }
  bool at(std::uint64_t x, std::uint64_t y) const { return rows[x].test(y); }
  bool defined_at(std::uint64_t x, std::uint64_t y) const { return is_total() || defined[x].test(y); }
};

CommMatrix comm_matrix(const ComposedFunction& cf, const Limits& limits = {});

/// ceil(log2 #distinct rows) for a total matrix.
int one_way_cc(const CommMatrix& m);
std::size_t distinct_row_count(const CommMatrix& m);

struct PartialCc {
  int cc = 0;
  std::size_t chromatic = 0;
  std::size_t row_classes = 0;
  std::vector<int> row_color;  // per row of the matrix
};

/// ceil(log2 chi) of the row conflict graph (rows conflict iff some column is
/// defined in both with different values).
PartialCc one_way_cc_partial(const CommMatrix& m, const Limits& limits = {});

/// Exact rank over the rationals; total matrices only.
std::size_t matrix_rank(const CommMatrix& m, const Limits& limits = {});

struct VcResult {
  int vc = 0;
  bool capped = false;           // true when cap_d was reached (value is a lower bound)
  std::vector<std::uint64_t> columns;  // a shattered column set of size vc
};

/// Largest d <= cap_d with a shattered column set.
VcResult vc_dim_bruteforce(const CommMatrix& m, int cap_d, const Limits& limits = {});

/// True iff the rows of m realize every 0/1 pattern on `columns`.
bool shattering_check(const CommMatrix& m, const std::vector<std::uint64_t>& columns);

struct ShatterWitness {
  int n = 0;
  int b = 0;
  std::vector<std::uint64_t> columns;             // y^{(i,j)}, index (i-1)(b-1) + (j-2)
  std::vector<std::uint64_t> base_points;         // z^{(i,0)} per 0-based i
  std::vector<bool> base_values;                  // v_i = f(z^{(i,0)})
  std::vector<std::uint64_t> rows;                // row for pattern c, indexed by c
  std::size_t expected_size() const { return static_cast<std::size_t>(n) * static_cast<std::size_t>(b > 0 ? b - 1 : 0); }
};

/// Column set of f o IP_b shattered by the explicit row family; b = 1 yields
/// an empty witness. Throws PreconditionError naming the first ignored input.
ShatterWitness ip_shattering_witness(const BooleanFunction& f, int b, const Limits& limits = {});

/// Checks the witness rows directly against f o IP_b: row c must take value
/// c_k on column k. Does not need the materialized matrix.
bool witness_realizes_patterns(const BooleanFunction& f, const ShatterWitness& w);

double binary_entropy(double p);
double klauck_bound(double vc, double eps, bool entangled);

struct GadgetCheck {
  bool ok = false;
  std::vector<std::uint64_t> witness;  // lexicographically least maximum cross-complete set
};

/// Searches the Alice inputs for a set of >= 3 inputs any two of which can be
/// driven to all four value pairs by a common Bob input.
GadgetCheck gadget_property_check(const GadgetSpec& g, const Limits& limits = {});

struct LiftAudit {
  int n = 0;
  int b = 0;
  int cc = 0;                  // one-way cc of f o IP_b
  double c_messages = 0;       // cc / log2(2^b - 1)
  std::size_t colors = 0;
  int heavy_color = 0;
  std::size_t heavy_part_size = 0;    // strings of Z in the heaviest part
  std::uint64_t x1 = 0;
  std::uint64_t x2 = 0;
  std::uint64_t agreement = 0;        // mask of blocks where x1 and x2 agree
  int agreement_size = 0;
  bool determined = false;            // f fixed by the variables in the agreement set
  bool small_agreement = false;       // |I| < 10 c
  bool precondition = false;          // c < n / 30
};

LiftAudit lift_audit(const BooleanFunction& f, int b, const Limits& limits = {});

/// PBM (P1) text bitmap; undefined cells are written as 0.
std::string to_pbm(const CommMatrix& m);
/// Rows as lowercase hex, most significant digit first.
std::vector<std::string> rows_hex(const CommMatrix& m);

}  // namespace boolift
