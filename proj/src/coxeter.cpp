#include "hecke/coxeter.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace hecke {

namespace {

struct Diagram {
  std::vector<std::string> names;
  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<int>> cartan;
};

void bond(Diagram& d, int i, int j, int m) {
  switch (m) {
    case 3: d.cartan[i][j] = -1; d.cartan[j][i] = -1; break;
    case 4: d.cartan[i][j] = -2; d.cartan[j][i] = -1; break;
    case 6: d.cartan[i][j] = -3; d.cartan[j][i] = -1; break;
    default: throw Error(Errc::InvalidArgument, "unsupported bond order");
  }
}

Diagram diagram(CoxeterType ct) {
  Diagram d;
  const int n = ct.rank;
  d.cartan.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
  switch (ct.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) d.names.push_back("s" + std::to_string(i + 1));
      for (int i = 0; i + 1 < n; ++i) bond(d, i, i + 1, 3);
      break;
    case Family::B:
      d.names.push_back("t");
      for (int i = 1; i < n; ++i) d.names.push_back("s" + std::to_string(i));
      bond(d, 0, 1, 4);
      for (int i = 1; i + 1 < n; ++i) bond(d, i, i + 1, 3);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) d.names.push_back("s" + std::to_string(i));
      if (n >= 3) bond(d, 0, 2, 3);
      for (int i = 1; i + 1 < n; ++i) bond(d, i, i + 1, 3);
      break;
    case Family::G2:
      d.names = {"s", "t"};
      bond(d, 0, 1, 6);
      break;
    case Family::F4:
      d.names = {"s1", "s2", "s3", "s4"};
      bond(d, 0, 1, 3);
      bond(d, 1, 2, 4);
      bond(d, 2, 3, 3);
      break;
  }
  return d;
}

int bond_order(int cij, int cji) {
  switch (cij * cji) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw Error(Errc::InvalidArgument, "not a finite-type Cartan matrix");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
  }
  return "?";
}

CoxeterType CoxeterType::parse(const std::string& family, int rank) {
  std::string f = family;
  std::transform(f.begin(), f.end(), f.begin(), [](unsigned char c) { return std::toupper(c); });
  if (f == "A") {
    if (rank < 1) throw Error(Errc::InvalidArgument, "type A needs rank >= 1");
    return {Family::A, rank};
  }
  if (f == "B" || f == "D") {
    if (rank < 2) throw Error(Errc::InvalidArgument, "type " + f + " needs rank >= 2");
    return {f == "B" ? Family::B : Family::D, rank};
  }
  if (f == "G2") {
    if (rank != 0 && rank != 2) throw Error(Errc::InvalidArgument, "G2 has rank 2");
    return {Family::G2, 2};
  }
  if (f == "F4") {
    if (rank != 0 && rank != 4) throw Error(Errc::InvalidArgument, "F4 has rank 4");
    return {Family::F4, 4};
  }
  throw Error(Errc::InvalidArgument, "unknown Coxeter type '" + family + "'");
}

std::size_t classical_order(CoxeterType ct) {
  auto fact = [](int k) {
    std::size_t r = 1;
    for (int i = 2; i <= k; ++i) r *= static_cast<std::size_t>(i);
    return r;
  };
  const int n = ct.rank;
  switch (ct.family) {
    case Family::A: return fact(n + 1);
    case Family::B: return (std::size_t{1} << n) * fact(n);
    case Family::D: return (std::size_t{1} << (n - 1)) * fact(n);
    case Family::G2: return 12;
    case Family::F4: return 1152;
  }
  return 0;
}

WeylGroup WeylGroup::build(CoxeterType ct, std::size_t cap) {
  // Guard before factorial-sized orders overflow anything.
  if (ct.rank > 20 || classical_order(ct) > cap)
    throw Error(Errc::GroupTooLarge, family_name(ct.family) + std::to_string(ct.rank) + " exceeds the cap of " +
                                         std::to_string(cap) + " elements");
  const Diagram d = diagram(ct);
  const int n = ct.rank;

  WeylGroup g;
  g.type_ = ct;
  g.names_ = d.names;
  g.m_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.m_[i][j] = bond_order(d.cartan[i][j], d.cartan[j][i]);

  // W acts simply transitively on the orbit of rho, written in the basis of
  // fundamental weights; BFS over the orbit gives elements and lengths.
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> points{std::vector<int>(static_cast<std::size_t>(n), 1)};
  std::vector<int> dist{0};
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(n));
  seen.emplace(points[0], 0);
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> q = points[head];
      const int ci = q[i];
      for (int j = 0; j < n; ++j) q[j] -= ci * d.cartan[i][j];
      auto [it, fresh] = seen.emplace(std::move(q), static_cast<int>(points.size()));
      if (fresh) {
        points.push_back(it->first);
        dist.push_back(dist[head] + 1);
        if (points.size() > cap) throw Error(Errc::GroupTooLarge, "enumeration exceeded the cap");
      }
      raw[i].push_back(it->second);
    }
  }
  const std::size_t size = points.size();

  // Lexicographically least reduced word: peel the smallest left descent.
  std::vector<Word> raw_word(size);
  for (std::size_t w = 1; w < size; ++w) {
    for (int i = 0; i < n; ++i) {
      int sw = raw[i][w];
      if (dist[sw] < dist[w]) {
        raw_word[w].push_back(i);
        const Word& rest = raw_word[sw];
        raw_word[w].insert(raw_word[w].end(), rest.begin(), rest.end());
        break;
      }
    }
  }

  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (dist[x] != dist[y]) return dist[x] < dist[y];
    return raw_word[x] < raw_word[y];
  });
  std::vector<int> pos(size);
  for (std::size_t k = 0; k < size; ++k) pos[order[k]] = static_cast<int>(k);

  g.length_.resize(size);
  g.word_.resize(size);
  g.lmul_.assign(static_cast<std::size_t>(n), std::vector<int>(size));
  for (std::size_t k = 0; k < size; ++k) {
    g.length_[k] = dist[order[k]];
    g.word_[k] = raw_word[order[k]];
    for (int i = 0; i < n; ++i) g.lmul_[i][k] = pos[raw[i][order[k]]];
  }

  g.inv_.resize(size);
  for (std::size_t w = 0; w < size; ++w) {
    int x = 0;
    for (int s : g.word_[w]) x = g.lmul_[s][x];
    g.inv_[w] = x;
  }
  g.rmul_.assign(static_cast<std::size_t>(n), std::vector<int>(size));
  for (int i = 0; i < n; ++i)
    for (std::size_t w = 0; w < size; ++w) g.rmul_[i][w] = g.inv_[g.lmul_[i][g.inv_[w]]];

  // y <= w iff min(y, sy) <= sw for a left descent s of w.
  g.words_per_row_ = (size + 63) / 64;
  g.bruhat_.assign(size * g.words_per_row_, 0);
  g.bruhat_[0] = 1;
  for (std::size_t w = 1; w < size; ++w) {
    const int s = g.word_[w][0];
    const std::size_t sw = static_cast<std::size_t>(g.lmul_[s][w]);
    for (std::size_t y = 0; y < size; ++y) {
      const int ymin = std::min(static_cast<int>(y), g.lmul_[s][y]);
      if (g.bruhat_leq(ymin, static_cast<int>(sw))) g.bruhat_[w * g.words_per_row_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
    }
  }
  return g;
}

int WeylGroup::generator_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int WeylGroup::mult(int w, int x) const {
  const Word& word = word_[w];
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = lmul_[*it][x];
  return x;
}

int WeylGroup::from_word(const Word& word) const {
  int x = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank()) throw Error(Errc::InvalidArgument, "generator index out of range");
    x = lmul_[*it][x];
  }
  return x;
}

std::vector<int> WeylGroup::descents_left(int w) const {
  std::vector<int> out;
  for (int s = 0; s < rank(); ++s)
    if (is_left_descent(s, w)) out.push_back(s);
  return out;
}

std::vector<int> WeylGroup::descents_right(int w) const {
  std::vector<int> out;
  for (int s = 0; s < rank(); ++s)
    if (is_right_descent(w, s)) out.push_back(s);
  return out;
}

long WeylGroup::lweight(int w, const WeightFunction& L) const {
  long total = 0;
  for (int s : word_[w]) total += L.values.at(static_cast<std::size_t>(s));
  return total;
}

std::string WeylGroup::element_name(int w) const {
  if (word_[w].empty()) return "1";
  std::string out;
  for (int s : word_[w]) {
    if (!out.empty()) out += '.';
    out += names_[s];
  }
  return out;
}

int WeylGroup::parse_element(const std::string& name) const {
  if (name.empty() || name == "1") return 0;
  Word word;
  std::stringstream ss(name);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    int s = generator_index(tok);
    if (s < 0) throw Error(Errc::InvalidArgument, "unknown generator '" + tok + "'");
    word.push_back(s);
  }
  return from_word(word);
}

WeightFunction two_parameter_weight(const WeylGroup& g, int a, int b) {
  WeightFunction L{std::vector<int>(static_cast<std::size_t>(g.rank()), a)};
  switch (g.type().family) {
    case Family::B: L.values[0] = b; break;
    case Family::G2: L.values[1] = b; break;
    case Family::F4: L.values[2] = L.values[3] = b; break;
    default: break;
  }
  return L;
}

WeightFunction length_weight(const WeylGroup& g) {
  return {std::vector<int>(static_cast<std::size_t>(g.rank()), 1)};
}

bool validate_weight(const WeylGroup& g, const WeightFunction& L) {
  if (static_cast<int>(L.values.size()) != g.rank()) return false;
  for (int s = 0; s < g.rank(); ++s) {
    if (L.values[s] < 0) return false;
    for (int t = 0; t < g.rank(); ++t)
      if (s != t && g.coxeter_m(s, t) % 2 == 1 && L.values[s] != L.values[t]) return false;
  }
  return true;
}

}  // namespace hecke
