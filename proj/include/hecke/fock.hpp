#pragma once

#include "hecke/laurent.hpp"
#include "hecke/schur.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

enum class NodeOrder { FLOTW, ARIKI };

std::string order_name(NodeOrder o);  // "flotw" / "ariki"
NodeOrder parse_order(const std::string& s);

struct FockParams {
  int l = 2;
  std::vector<int> u{0};  // one charge per component
  NodeOrder order = NodeOrder::FLOTW;

  int r() const { return static_cast<int>(u.size()); }
  void validate() const;  // throws InvalidArgument
  bool flotw_ordered() const;  // 0 <= u_1 <= ... <= u_r <= l-1
};

struct Multipartition {
  std::vector<Partition> comps;

  static Multipartition empty(int r);
  int size() const;
  int level() const { return static_cast<int>(comps.size()); }
  auto operator<=>(const Multipartition&) const = default;
};

std::string to_string(const Multipartition& m);  // "((2,1),())"
std::vector<Multipartition> multipartitions_of(int r, int n);

// 1-based row a, column b, component c.
struct Node {
  int a, b, c;
  auto operator<=>(const Node&) const = default;
};

int content(const Node& g, const FockParams& p);  // b - a + u_c
int residue(const Node& g, const FockParams& p);  // content mod l, in 0..l-1
// Strict order: g is above h.
bool above(const Node& g, const Node& h, const FockParams& p);

// i-nodes sorted highest first.
std::vector<Node> addable(const Multipartition& m, int i, const FockParams& p);
std::vector<Node> removable(const Multipartition& m, int i, const FockParams& p);
int icount(const Multipartition& m, int i, const FockParams& p);  // W_i
int ncount(const Multipartition& m, int i, const FockParams& p);  // N_i = |A_i| - |R_i|

Multipartition add_node(const Multipartition& m, const Node& g);
Multipartition remove_node(const Multipartition& m, const Node& g);

// alpha_i(h_j) for affine sl_l; off-diagonal neighbours are -2 when l = 2.
int cartan(int i, int j, int l);

// Finite linear combination of multipartitions, no zero coefficients.
using FockVector = std::map<Multipartition, LaurentPoly>;

FockVector basis_vector(const Multipartition& m);
void add_term(FockVector& v, const Multipartition& m, const LaurentPoly& c);
FockVector add(const FockVector& x, const FockVector& y, const LaurentPoly& scale = 1);  // x + scale*y

FockVector quantum_E(int i, const FockVector& x, const FockParams& p);
FockVector quantum_F(int i, const FockVector& x, const FockParams& p);
FockVector quantum_K(int i, const FockVector& x, const FockParams& p, int power = 1);
FockVector quantum_D(const FockVector& x, const FockParams& p, int power = 1);

// v = 1 specializations.
FockVector classical_e(int i, const FockVector& x, const FockParams& p);
FockVector classical_f(int i, const FockVector& x, const FockParams& p);
FockVector classical_h(int i, const FockVector& x, const FockParams& p);
FockVector classical_d(const FockVector& x, const FockParams& p);
FockVector at_one(const FockVector& x);

// Crystal operators by signature cancellation.
std::optional<Node> good_node(const Multipartition& m, int i, const FockParams& p);
std::optional<Node> cogood_node(const Multipartition& m, int i, const FockParams& p);
std::optional<Multipartition> etilde(const Multipartition& m, int i, const FockParams& p);
std::optional<Multipartition> ftilde(const Multipartition& m, int i, const FockParams& p);

struct CrystalEdge {
  Multipartition source, target;
  int color;
  auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  FockParams params;
  std::vector<std::vector<Multipartition>> levels;  // sorted within each level
  std::vector<CrystalEdge> edges;                   // sorted

  std::size_t vertex_count() const;
  std::string to_dot() const;
  std::string to_json() const;
};

inline constexpr int kDefaultLevelCap = 24;

// Breadth-first closure of the empty multipartition under ftilde, levels
// 0..n.  The parallel version expands each level concurrently.
CrystalGraph crystal(const FockParams& p, int n, bool parallel = true, int cap = kDefaultLevelCap);
CrystalGraph crystal_serial(const FockParams& p, int n, int cap = kDefaultLevelCap);

std::vector<Multipartition> uryu_set(const FockParams& p, int n);
// Non-recursive test; needs p.flotw_ordered(), ParamsOutOfRange otherwise.
bool flotw_member(const Multipartition& m, const FockParams& p);
// Membership in the ARIKI-order crystal component (p.order is ignored).
bool kleshchev_member(const Multipartition& m, const FockParams& p);

struct RelationFailure {
  std::string relation;
  Multipartition input;
  int i, j;
};

// Checks the U_v(affine sl_l) relations on every basis vector of size <= n.
std::vector<RelationFailure> check_quantum_relations(const FockParams& p, int n);
// Same for U(affine sl_l) acting through the classical operators.
std::vector<RelationFailure> check_classical_relations(const FockParams& p, int n);

Multipartition parse_multipartition(const std::string& json_text);

}  // namespace hecke
