#pragma once

#include "hecke/coxeter.hpp"
#include "hecke/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p);
  explicit Partition(std::vector<int> p);  // throws InvalidArgument

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int part(int i) const { return i < length() ? parts[i] : 0; }  // 0-based, zero padded
  auto operator<=>(const Partition&) const = default;
};

struct Bipartition {
  Partition first, second;
  int size() const { return first.size() + second.size(); }
  auto operator<=>(const Bipartition&) const = default;
};

struct Symbol {
  std::vector<int> top;     // m+1 entries, strictly increasing
  std::vector<int> bottom;  // m entries, strictly increasing
  int m = 0;
};

struct InvariantPair {
  long alpha = 0;
  long f = 1;
  friend bool operator==(const InvariantPair&, const InvariantPair&) = default;
};

// e >= 2, or infinity (no value).
struct EValue {
  std::optional<int> value;
  static EValue infinity() { return {}; }
  static EValue finite(int e);  // throws InvalidArgument for e < 2
  bool is_infinite() const { return !value.has_value(); }
  friend bool operator==(const EValue&, const EValue&) = default;
};

std::string to_string(const Partition& p);    // "(2,1)", empty renders "()"
std::string to_string(const Bipartition& b);  // "((2,1),(1))"
std::string to_string(const EValue& e);       // "inf" or the number

std::vector<Partition> partitions_of(int n);  // reverse lexicographic: (n) first
std::vector<Bipartition> bipartitions_of(int n);

long nfun(const Partition& nu);
Partition conjugate(const Partition& nu);
bool dominance_leq(const Partition& lambda, const Partition& mu);
// Partial sums of lambda_(1), then |lambda_(1)| plus partial sums of lambda_(2).
bool dominance_leq(const Bipartition& lambda, const Bipartition& mu);
bool e_regular(const Partition& nu, EValue e);

// Number of standard tableaux of shape nu.
BigInt standard_tableaux(const Partition& nu);
// dim E^lambda of W(B_n): binomial(n, |lambda_(1)|) f^{lambda_(1)} f^{lambda_(2)}.
BigInt dim_B(const Bipartition& lambda);

int default_symbol_size(const Bipartition& lambda);
Symbol symbol_of(const Bipartition& lambda, int m);  // throws MTooSmall
Symbol symbol_of(const Bipartition& lambda);

// Schur element of E^lambda for W(B_n) with L(t)=b, L(s_i)=a.
LaurentPoly schur_element_B(const Bipartition& lambda, int a, int b);
LaurentPoly schur_element_B(const Bipartition& lambda, int a, int b, int m);

// (alpha, f) read off the trailing term f v^{-2 alpha}.
InvariantPair invariants_from_schur(const LaurentPoly& c);

InvariantPair invariants_B(const Bipartition& lambda, int a, int b);
// Requires b > (n-1)a > 0, DomainError otherwise.
InvariantPair invariants_asymptotic(const Bipartition& lambda, int a, int b);
InvariantPair invariants_A(const Partition& nu, int a);
InvariantPair invariants_azero(const Bipartition& lambda, int b);

// W(D_n) with L = a times length.  E^{[lambda,mu]} for lambda != mu, and
// E^{[lambda,+-]} (split) when lambda == mu.
InvariantPair typeD_invariants(const Partition& lambda, const Partition& mu, int a);
InvariantPair typeD_split_invariants(const Partition& lambda, int a);

enum class G2Char { One, Eps, Eps1, Eps2, EPlus, EMinus };
std::vector<G2Char> g2_characters();
std::string g2_name(G2Char e);  // "1", "eps", "eps1", "eps2", "E+", "E-"
G2Char parse_g2(const std::string& name);
int g2_dim(G2Char e);
// L(s)=a, L(t)=b.
LaurentPoly g2_schur(G2Char e, int a, int b);
// Tabulated values; RegimeNotCovered outside b>a>0, b=a>0, b>a=0.
InvariantPair g2_invariants(G2Char e, int a, int b);

std::vector<std::string> f4_characters();  // "1_1", ..., "16_1"
// RegimeNotCovered outside b>2a>0, b=2a>0, 2a>b>a>0, b=a>0, b>a=0.
InvariantPair f4_invariants(const std::string& label, int a, int b);

// True iff p divides none of the f_E.  For A, B and D, n is the size of the
// labelling (bi)partitions; G2 and F4 ignore it.
bool l_good(long p, Family type, int n, int a, int b);

// Parsing helpers shared with the CLI: "[[2,1],[1]]" / "[2,1]".
Bipartition parse_bipartition(const std::string& json_text);
Partition parse_partition(const std::string& json_text);

}  // namespace hecke
