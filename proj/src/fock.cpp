#include "hecke/fock.hpp"

#include "hecke/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace hecke {

namespace {

int mod(int x, int l) { return ((x % l) + l) % l; }

int part_of(const Multipartition& m, int a, int c) { return m.comps[c - 1].part(a - 1); }

void sort_highest_first(std::vector<Node>& nodes, const FockParams& p) {
  std::sort(nodes.begin(), nodes.end(), [&](const Node& g, const Node& h) { return above(g, h, p); });
}

// Counts of addable and removable i-nodes of the two given multipartitions
// related to g by the predicate.
template <class Pred>
int count_if_nodes(const std::vector<Node>& nodes, Pred pred) {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), pred));
}

using Op = std::function<FockVector(const FockVector&)>;

bool is_zero(const FockVector& x) { return x.empty(); }

void record(std::vector<RelationFailure>& out, const char* name, const FockVector& residual, const Multipartition& m,
            int i, int j) {
  if (!is_zero(residual)) out.push_back({name, m, i, j});
}

bool neighbours(int i, int j, int l) { return i != j && (mod(i - j, l) == 1 || mod(j - i, l) == 1); }

// Serre combination x^{k} y - c1 x^{k-1} y x + ... for the given signed
// coefficients: sum_t coeff[t] x^{k-t} y x^t.
FockVector serre(const Op& x, const Op& y, const std::vector<LaurentPoly>& coeff, const FockVector& start) {
  const int k = static_cast<int>(coeff.size()) - 1;
  FockVector total;
  for (int t = 0; t <= k; ++t) {
    FockVector w = start;
    for (int s = 0; s < t; ++s) w = x(w);
    w = y(w);
    for (int s = 0; s < k - t; ++s) w = x(w);
    total = add(total, w, coeff[t]);
  }
  return total;
}

}  // namespace

std::string order_name(NodeOrder o) { return o == NodeOrder::FLOTW ? "flotw" : "ariki"; }

NodeOrder parse_order(const std::string& s) {
  if (s == "flotw") return NodeOrder::FLOTW;
  if (s == "ariki") return NodeOrder::ARIKI;
  throw Error(Errc::InvalidArgument, "unknown node order '" + s + "'");
}

void FockParams::validate() const {
  if (l < 2) throw Error(Errc::InvalidArgument, "l must be at least 2");
  if (u.empty()) throw Error(Errc::InvalidArgument, "need at least one charge u");
}

bool FockParams::flotw_ordered() const {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] < 0 || u[k] > l - 1) return false;
    if (k > 0 && u[k] < u[k - 1]) return false;
  }
  return true;
}

Multipartition Multipartition::empty(int r) { return {std::vector<Partition>(static_cast<std::size_t>(r))}; }

int Multipartition::size() const {
  int n = 0;
  for (const auto& c : comps) n += c.size();
  return n;
}

std::string to_string(const Multipartition& m) {
  std::string out = "(";
  for (std::size_t k = 0; k < m.comps.size(); ++k) {
    if (k) out += ',';
    out += to_string(m.comps[k]);
  }
  return out + ")";
}

std::vector<Multipartition> multipartitions_of(int r, int n) {
  std::vector<Multipartition> out;
  Multipartition cur = Multipartition::empty(r);
  auto rec = [&](auto&& self, int c, int rest) -> void {
    if (c == r - 1) {
      for (const auto& p : partitions_of(rest)) {
        cur.comps[c] = p;
        out.push_back(cur);
      }
      return;
    }
    for (int k = rest; k >= 0; --k)
      for (const auto& p : partitions_of(k)) {
        cur.comps[c] = p;
        self(self, c + 1, rest - k);
      }
  };
  rec(rec, 0, n);
  return out;
}

int content(const Node& g, const FockParams& p) { return g.b - g.a + p.u[g.c - 1]; }

int residue(const Node& g, const FockParams& p) { return mod(content(g, p), p.l); }

bool above(const Node& g, const Node& h, const FockParams& p) {
  if (p.order == NodeOrder::FLOTW) {
    const int cg = content(g, p), ch = content(h, p);
    return cg < ch || (cg == ch && h.c < g.c);
  }
  return h.c < g.c || (g.c == h.c && h.a < g.a);
}

std::vector<Node> addable(const Multipartition& m, int i, const FockParams& p) {
  std::vector<Node> out;
  for (int c = 1; c <= m.level(); ++c) {
    const Partition& lam = m.comps[c - 1];
    for (int a = 1; a <= lam.length() + 1; ++a) {
      if (a > 1 && lam.part(a - 2) == lam.part(a - 1)) continue;
      const Node g{a, lam.part(a - 1) + 1, c};
      if (residue(g, p) == i) out.push_back(g);
    }
  }
  sort_highest_first(out, p);
  return out;
}

std::vector<Node> removable(const Multipartition& m, int i, const FockParams& p) {
  std::vector<Node> out;
  for (int c = 1; c <= m.level(); ++c) {
    const Partition& lam = m.comps[c - 1];
    for (int a = 1; a <= lam.length(); ++a) {
      if (lam.part(a - 1) == lam.part(a)) continue;
      const Node g{a, lam.part(a - 1), c};
      if (residue(g, p) == i) out.push_back(g);
    }
  }
  sort_highest_first(out, p);
  return out;
}

int icount(const Multipartition& m, int i, const FockParams& p) {
  int n = 0;
  for (int c = 1; c <= m.level(); ++c)
    for (int a = 1; a <= m.comps[c - 1].length(); ++a)
      for (int b = 1; b <= part_of(m, a, c); ++b)
        if (residue({a, b, c}, p) == i) ++n;
  return n;
}

int ncount(const Multipartition& m, int i, const FockParams& p) {
  return static_cast<int>(addable(m, i, p).size()) - static_cast<int>(removable(m, i, p).size());
}

Multipartition add_node(const Multipartition& m, const Node& g) {
  Multipartition out = m;
  std::vector<int> parts = m.comps[g.c - 1].parts;
  if (g.a == static_cast<int>(parts.size()) + 1) parts.push_back(0);
  ++parts.at(static_cast<std::size_t>(g.a - 1));
  out.comps[g.c - 1] = Partition(std::move(parts));
  return out;
}

Multipartition remove_node(const Multipartition& m, const Node& g) {
  Multipartition out = m;
  std::vector<int> parts = m.comps[g.c - 1].parts;
  if (--parts.at(static_cast<std::size_t>(g.a - 1)) == 0) parts.pop_back();
  out.comps[g.c - 1] = Partition(std::move(parts));
  return out;
}

int cartan(int i, int j, int l) {
  if (i == j) return 2;
  if (!neighbours(i, j, l)) return 0;
  return l == 2 ? -2 : -1;
}

FockVector basis_vector(const Multipartition& m) { return {{m, LaurentPoly(1)}}; }

void add_term(FockVector& v, const Multipartition& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

FockVector add(const FockVector& x, const FockVector& y, const LaurentPoly& scale) {
  FockVector out = x;
  for (const auto& [m, c] : y) add_term(out, m, scale * c);
  return out;
}

FockVector quantum_E(int i, const FockVector& x, const FockParams& p) {
  FockVector out;
  for (const auto& [lam, coeff] : x) {
    const auto rem = removable(lam, i, p);
    for (const Node& g : rem) {
      const Multipartition mu = remove_node(lam, g);
      const auto add_mu = addable(mu, i, p);
      const int na = count_if_nodes(add_mu, [&](const Node& h) { return above(h, g, p); }) -
                     count_if_nodes(rem, [&](const Node& h) { return above(h, g, p); });
      add_term(out, mu, LaurentPoly::monomial(-na) * coeff);
    }
  }
  return out;
}

FockVector quantum_F(int i, const FockVector& x, const FockParams& p) {
  FockVector out;
  for (const auto& [lam, coeff] : x) {
    const auto add_lam = addable(lam, i, p);
    for (const Node& g : add_lam) {
      const Multipartition mu = add_node(lam, g);
      const auto rem_mu = removable(mu, i, p);
      const int nb = count_if_nodes(add_lam, [&](const Node& h) { return above(g, h, p); }) -
                     count_if_nodes(rem_mu, [&](const Node& h) { return above(g, h, p); });
      add_term(out, mu, LaurentPoly::monomial(nb) * coeff);
    }
  }
  return out;
}

FockVector quantum_K(int i, const FockVector& x, const FockParams& p, int power) {
  FockVector out;
  for (const auto& [lam, coeff] : x) add_term(out, lam, LaurentPoly::monomial(power * ncount(lam, i, p)) * coeff);
  return out;
}

FockVector quantum_D(const FockVector& x, const FockParams& p, int power) {
  FockVector out;
  for (const auto& [lam, coeff] : x) add_term(out, lam, LaurentPoly::monomial(-power * icount(lam, 0, p)) * coeff);
  return out;
}

FockVector at_one(const FockVector& x) {
  FockVector out;
  for (const auto& [lam, coeff] : x) add_term(out, lam, LaurentPoly(coeff.eval_at_one()));
  return out;
}

FockVector classical_e(int i, const FockVector& x, const FockParams& p) { return at_one(quantum_E(i, at_one(x), p)); }

FockVector classical_f(int i, const FockVector& x, const FockParams& p) { return at_one(quantum_F(i, at_one(x), p)); }

FockVector classical_h(int i, const FockVector& x, const FockParams& p) {
  FockVector out;
  for (const auto& [lam, coeff] : x) add_term(out, lam, LaurentPoly(ncount(lam, i, p)) * coeff);
  return out;
}

FockVector classical_d(const FockVector& x, const FockParams& p) {
  FockVector out;
  for (const auto& [lam, coeff] : x) add_term(out, lam, LaurentPoly(-icount(lam, 0, p)) * coeff);
  return out;
}

namespace {

// Reduced i-signature: highest first, adjacent (removable, addable) pairs
// cancel.  Leaves addable nodes above removable ones.
struct Signature {
  std::vector<Node> addable, removable;  // survivors, highest first
};

Signature reduced_signature(const Multipartition& m, int i, const FockParams& p) {
  std::vector<std::pair<Node, bool>> word;  // true = removable
  for (const Node& g : addable(m, i, p)) word.emplace_back(g, false);
  for (const Node& g : removable(m, i, p)) word.emplace_back(g, true);
  std::sort(word.begin(), word.end(), [&](const auto& x, const auto& y) { return above(x.first, y.first, p); });
  std::vector<std::pair<Node, bool>> stack;
  for (const auto& entry : word) {
    if (!entry.second && !stack.empty() && stack.back().second) {
      stack.pop_back();
      continue;
    }
    stack.push_back(entry);
  }
  Signature s;
  for (const auto& [g, rem] : stack) (rem ? s.removable : s.addable).push_back(g);
  return s;
}

}  // namespace

std::optional<Node> good_node(const Multipartition& m, int i, const FockParams& p) {
  const Signature s = reduced_signature(m, i, p);
  if (s.removable.empty()) return std::nullopt;
  return s.removable.front();
}

std::optional<Node> cogood_node(const Multipartition& m, int i, const FockParams& p) {
  const Signature s = reduced_signature(m, i, p);
  if (s.addable.empty()) return std::nullopt;
  return s.addable.back();
}

std::optional<Multipartition> etilde(const Multipartition& m, int i, const FockParams& p) {
  auto g = good_node(m, i, p);
  if (!g) return std::nullopt;
  return remove_node(m, *g);
}

std::optional<Multipartition> ftilde(const Multipartition& m, int i, const FockParams& p) {
  auto g = cogood_node(m, i, p);
  if (!g) return std::nullopt;
  return add_node(m, *g);
}

std::size_t CrystalGraph::vertex_count() const {
  std::size_t n = 0;
  for (const auto& lvl : levels) n += lvl.size();
  return n;
}

std::string CrystalGraph::to_dot() const {
  std::ostringstream os;
  std::map<Multipartition, int> id;
  os << "digraph crystal {\n";
  for (const auto& lvl : levels)
    for (const auto& m : lvl) {
      const int k = static_cast<int>(id.size());
      id.emplace(m, k);
      os << "  v" << k << " [label=\"" << to_string(m) << "\"];\n";
    }
  for (const auto& e : edges) os << "  v" << id.at(e.source) << " -> v" << id.at(e.target) << " [label=\"" << e.color << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

nlohmann::json mp_json(const Multipartition& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : m.comps) j.push_back(c.parts);
  return j;
}

}  // namespace

std::string CrystalGraph::to_json() const {
  nlohmann::json j;
  j["l"] = params.l;
  j["u"] = params.u;
  j["order"] = order_name(params.order);
  j["vertices"] = nlohmann::json::array();
  j["levels"] = nlohmann::json::array();
  for (const auto& lvl : levels) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& m : lvl) {
      j["vertices"].push_back(mp_json(m));
      row.push_back(mp_json(m));
    }
    j["levels"].push_back(row);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : edges) j["edges"].push_back({{"source", mp_json(e.source)}, {"target", mp_json(e.target)}, {"color", e.color}});
  return j.dump(2);
}

namespace {

void check_crystal_args(const FockParams& p, int n, int cap) {
  p.validate();
  if (n < 0) throw Error(Errc::InvalidArgument, "level must be non-negative");
  if (n > cap) throw Error(Errc::LevelCapExceeded, "level " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
}

void finish_level(CrystalGraph& g, std::vector<std::vector<CrystalEdge>>& out_edges) {
  std::set<Multipartition> next;
  for (auto& es : out_edges)
    for (auto& e : es) {
      next.insert(e.target);
      g.edges.push_back(std::move(e));
    }
  g.levels.emplace_back(next.begin(), next.end());
}

}  // namespace

CrystalGraph crystal(const FockParams& p, int n, bool parallel, int cap) {
  if (!parallel) return crystal_serial(p, n, cap);
  check_crystal_args(p, n, cap);
  CrystalGraph g{p, {{Multipartition::empty(p.r())}}, {}};
  for (int k = 0; k < n; ++k) {
    const auto& cur = g.levels.back();
    std::vector<std::vector<CrystalEdge>> out(cur.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t v = 0; v < cur.size(); ++v)
      for (int i = 0; i < p.l; ++i)
        if (auto t = ftilde(cur[v], i, p)) out[v].push_back({cur[v], *t, i});
    finish_level(g, out);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

CrystalGraph crystal_serial(const FockParams& p, int n, int cap) {
  check_crystal_args(p, n, cap);
  CrystalGraph g{p, {{Multipartition::empty(p.r())}}, {}};
  for (int k = 0; k < n; ++k) {
    std::set<Multipartition> next;
    for (const auto& m : g.levels.back())
      for (int i = 0; i < p.l; ++i)
        if (auto t = ftilde(m, i, p)) {
          next.insert(*t);
          g.edges.push_back({m, *t, i});
        }
    g.levels.emplace_back(next.begin(), next.end());
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<Multipartition> uryu_set(const FockParams& p, int n) { return crystal(p, n).levels.back(); }

bool flotw_member(const Multipartition& m, const FockParams& p) {
  p.validate();
  if (!p.flotw_ordered()) throw Error(Errc::ParamsOutOfRange, "FLOTW test needs 0 <= u_1 <= ... <= u_r <= l-1");
  if (m.level() != p.r()) throw Error(Errc::InvalidArgument, "multipartition has the wrong number of components");
  // Component domination, stated for the order in which equal contents put
  // later components above earlier ones.
  const int r = p.r();
  for (int j = 1; j < r; ++j) {
    const int shift = p.u[j] - p.u[j - 1];
    for (int i = 1; i + shift <= m.comps[j].length(); ++i)
      if (part_of(m, i, j) < part_of(m, i + shift, j + 1)) return false;
  }
  const int wrap = p.l + p.u[0] - p.u[r - 1];
  for (int i = 1; i + wrap <= m.comps[0].length(); ++i)
    if (part_of(m, i, r) < part_of(m, i + wrap, 1)) return false;

  std::map<int, std::set<int>> ends;  // row length -> residues at the right end
  for (int c = 1; c <= r; ++c)
    for (int a = 1; a <= m.comps[c - 1].length(); ++a) {
      const int k = part_of(m, a, c);
      ends[k].insert(residue({a, k, c}, p));
    }
  for (const auto& [k, res] : ends)
    if (static_cast<int>(res.size()) == p.l) return false;
  return true;
}

bool kleshchev_member(const Multipartition& m, const FockParams& p) {
  FockParams q = p;
  q.order = NodeOrder::ARIKI;
  std::map<Multipartition, bool> memo;
  std::function<bool(const Multipartition&)> member = [&](const Multipartition& x) {
    if (x.size() == 0) return true;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    bool found = false;
    for (int i = 0; i < q.l && !found; ++i)
      if (auto g = good_node(x, i, q)) found = member(remove_node(x, *g));
    memo.emplace(x, found);
    return found;
  };
  return member(m);
}

std::vector<RelationFailure> check_quantum_relations(const FockParams& p, int n) {
  p.validate();
  const int l = p.l;
  std::vector<RelationFailure> fails;
  const LaurentPoly vdiff = v_minus_vinv(1);
  auto E = [&](int i) -> Op { return [&, i](const FockVector& x) { return quantum_E(i, x, p); }; };
  auto F = [&](int i) -> Op { return [&, i](const FockVector& x) { return quantum_F(i, x, p); }; };

  for (int k = 0; k <= n; ++k)
    for (const auto& lam : multipartitions_of(p.r(), k)) {
      const FockVector x = basis_vector(lam);
      for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
          const LaurentPoly shift = LaurentPoly::monomial(cartan(i, j, l));
          const LaurentPoly unshift = LaurentPoly::monomial(-cartan(i, j, l));
          const FockVector ke = quantum_K(j, quantum_E(i, quantum_K(j, x, p, -1), p), p);
          record(fails, "KEK^-1", add(ke, quantum_E(i, x, p), -shift), lam, i, j);
          const FockVector kf = quantum_K(j, quantum_F(i, quantum_K(j, x, p, -1), p), p);
          record(fails, "KFK^-1", add(kf, quantum_F(i, x, p), -unshift), lam, i, j);

          FockVector comm = add(quantum_E(i, quantum_F(j, x, p), p), quantum_F(j, quantum_E(i, x, p), p), -1);
          FockVector lhs;
          for (const auto& [m, c] : comm) add_term(lhs, m, c * vdiff);
          if (i == j) lhs = add(lhs, add(quantum_K(i, x, p), quantum_K(i, x, p, -1), -1), -1);
          record(fails, "EF-FE", lhs, lam, i, j);

          if (i != j && !neighbours(i, j, l)) {
            record(fails, "EE", add(quantum_E(i, quantum_E(j, x, p), p), quantum_E(j, quantum_E(i, x, p), p), -1), lam, i, j);
            record(fails, "FF", add(quantum_F(i, quantum_F(j, x, p), p), quantum_F(j, quantum_F(i, x, p), p), -1), lam, i, j);
          }
          if (neighbours(i, j, l)) {
            std::vector<LaurentPoly> coeff;
            if (l >= 3) {
              coeff = {1, -v_plus_vinv(1), 1};
            } else {
              const LaurentPoly q3 = LaurentPoly::monomial(2) + 1 + LaurentPoly::monomial(-2);
              coeff = {1, -q3, q3, -1};
            }
            record(fails, "Serre E", serre(E(i), E(j), coeff, x), lam, i, j);
            record(fails, "Serre F", serre(F(i), F(j), coeff, x), lam, i, j);
          }
        }
        const LaurentPoly d0 = LaurentPoly::monomial(i == 0 ? 1 : 0);
        record(fails, "DED^-1", add(quantum_D(quantum_E(i, quantum_D(x, p, -1), p), p), quantum_E(i, x, p), -d0), lam, i, i);
        record(fails, "DFD^-1",
               add(quantum_D(quantum_F(i, quantum_D(x, p, -1), p), p), quantum_F(i, x, p), -LaurentPoly::monomial(i == 0 ? -1 : 0)),
               lam, i, i);
      }
    }
  return fails;
}

std::vector<RelationFailure> check_classical_relations(const FockParams& p, int n) {
  p.validate();
  const int l = p.l;
  std::vector<RelationFailure> fails;
  auto e = [&](int i) -> Op { return [&, i](const FockVector& x) { return classical_e(i, x, p); }; };
  auto f = [&](int i) -> Op { return [&, i](const FockVector& x) { return classical_f(i, x, p); }; };

  for (int k = 0; k <= n; ++k)
    for (const auto& lam : multipartitions_of(p.r(), k)) {
      const FockVector x = basis_vector(lam);
      for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
          const int a = cartan(i, j, l);
          const FockVector he = add(classical_h(j, classical_e(i, x, p), p), classical_e(i, classical_h(j, x, p), p), -1);
          record(fails, "he-eh", add(he, classical_e(i, x, p), -a), lam, i, j);
          const FockVector hf = add(classical_h(j, classical_f(i, x, p), p), classical_f(i, classical_h(j, x, p), p), -1);
          record(fails, "hf-fh", add(hf, classical_f(i, x, p), a), lam, i, j);
          FockVector ef = add(classical_e(i, classical_f(j, x, p), p), classical_f(j, classical_e(i, x, p), p), -1);
          if (i == j) ef = add(ef, classical_h(i, x, p), -1);
          record(fails, "ef-fe", ef, lam, i, j);
          if (i != j && !neighbours(i, j, l)) {
            record(fails, "ee", add(classical_e(i, classical_e(j, x, p), p), classical_e(j, classical_e(i, x, p), p), -1), lam, i, j);
            record(fails, "ff", add(classical_f(i, classical_f(j, x, p), p), classical_f(j, classical_f(i, x, p), p), -1), lam, i, j);
          }
          if (neighbours(i, j, l)) {
            const std::vector<LaurentPoly> coeff =
                l >= 3 ? std::vector<LaurentPoly>{1, -2, 1} : std::vector<LaurentPoly>{1, -3, 3, -1};
            record(fails, "Serre e", serre(e(i), e(j), coeff, x), lam, i, j);
            record(fails, "Serre f", serre(f(i), f(j), coeff, x), lam, i, j);
          }
        }
        const int d0 = i == 0 ? 1 : 0;
        const FockVector de = add(classical_d(classical_e(i, x, p), p), classical_e(i, classical_d(x, p), p), -1);
        record(fails, "de-ed", add(de, classical_e(i, x, p), -d0), lam, i, i);
        const FockVector df = add(classical_d(classical_f(i, x, p), p), classical_f(i, classical_d(x, p), p), -1);
        record(fails, "df-fd", add(df, classical_f(i, x, p), d0), lam, i, i);
      }
    }
  return fails;
}

Multipartition parse_multipartition(const std::string& json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_array() || j.empty()) throw Error(Errc::InvalidArgument, "multipartition must be a non-empty array of arrays");
    Multipartition m;
    for (const auto& c : j) m.comps.emplace_back(c.get<std::vector<int>>());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, "bad multipartition '" + json_text + "': " + e.what());
  }
}

}  // namespace hecke
