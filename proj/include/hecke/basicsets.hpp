#pragma once

#include "hecke/fock.hpp"
#include "hecke/schur.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hecke {

// Specialization v^2 -> xi where xi has multiplicative order xi_order in a
// field of the given characteristic (0 or a prime).  Weights L(t)=b, L(s)=a.
struct SpecParams {
  int characteristic = 0;
  int xi_order = 1;
  int a = 1;
  int b = 1;

  void validate() const;  // InvalidArgument
};

EValue e_value(const SpecParams& p);

// Whether f_n(a,b) vanishes, with a witness d, |d| <= n-1, xi^{b+ad} = -1.
struct FnZero {
  bool zero = false;
  std::optional<int> d;
};
FnZero fn_zero(const SpecParams& p, int n);  // CharTwoUnsupported

std::vector<Partition> basic_set_sym(const SpecParams& p, int n);

struct BasicSetB {
  std::vector<Bipartition> labels;  // sorted
  std::string tag;  // asymptotic/DJM, DJ-Morita, DJ-extension, Jacon-equal, Jacon-b0
};
BasicSetB basic_set_B(const SpecParams& p, int n);

// E^{[lambda,mu]} (unordered, stored with first > second) or E^{[lambda,+-]}.
struct LabelD {
  Partition first, second;
  int sign = 0;  // 0 for a pair, +1 / -1 for the split labels
  auto operator<=>(const LabelD&) const = default;
};
std::string to_string(const LabelD& x);  // "[(2),(1)]", "[(2),+]"
// xi of even order l with a = 1, b = 0; OddOrderUnsupported otherwise.
std::vector<LabelD> basic_set_D(const SpecParams& p, int n);

using RowLabel = std::variant<Bipartition, Partition, std::string>;
std::string to_string(const RowLabel& x);

struct DecompRow {
  RowLabel label;
  std::optional<long> alpha;
  std::optional<long> dim;
  std::vector<long> entries;
  friend bool operator==(const DecompRow&, const DecompRow&) = default;
};

struct DecompMatrix {
  std::string type;  // "A", "B" or "G2"
  int n = 0;
  SpecParams params;
  std::vector<DecompRow> rows;

  std::size_t columns() const { return rows.empty() ? 0 : rows.front().entries.size(); }
  static DecompMatrix parse(const std::string& json_text);  // SchemaError
  std::string to_json() const;
  friend bool operator==(const DecompMatrix& x, const DecompMatrix& y) {
    return x.type == y.type && x.n == y.n && x.params.characteristic == y.params.characteristic &&
           x.params.xi_order == y.params.xi_order && x.params.a == y.params.a && x.params.b == y.params.b && x.rows == y.rows;
  }
};

struct BasicSetResult {
  bool exists = false;
  std::vector<long> breve_alpha;          // per column
  std::vector<std::size_t> column_row;    // when exists: row chosen for each column
  std::vector<std::size_t> rows;          // when exists: chosen rows sorted by breve alpha
  std::optional<std::size_t> failing_column;
  std::vector<std::size_t> candidates;    // rows competing at the failing column
};
BasicSetResult verify_decomp(const DecompMatrix& d);  // MissingAlpha

struct DominanceResult {
  bool pass = true;
  std::optional<std::size_t> row, column;  // first offending entry
};
// Columns are identified with the rows picked by verify_decomp.
DominanceResult check_dominance_triangularity(const DecompMatrix& d, const std::vector<std::size_t>& column_row);

}  // namespace hecke
