#pragma once

// Independent reference implementations used to compute or cross-check
// expected values. They share no code with the library.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

// Laurent polynomial as exponent -> int64 coefficient, zero entries allowed.
using Dense = std::map<int, std::int64_t>;

inline Dense trim(Dense p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

inline Dense mul(const Dense& a, const Dense& b) {
  Dense out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) out[ea + eb] += ca * cb;
  return trim(out);
}

// Schoolbook division of ordinary polynomials given low-to-high; throws on
// a nonzero remainder.
inline std::vector<std::int64_t> poly_div(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  std::vector<std::int64_t> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t lead = num[k + den.size() - 1];
    if (lead % den.back() != 0) throw std::runtime_error("not divisible");
    q[k] = lead / den.back();
    for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= q[k] * den[i];
  }
  for (auto c : num)
    if (c != 0) throw std::runtime_error("remainder");
  return q;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
};

}  // namespace oracle

namespace oracle {

// Signed permutations on {1..n}: img[i] is the image of i+1, possibly negated.
using SignedPerm = std::vector<int>;

inline SignedPerm compose(const SignedPerm& f, const SignedPerm& g) {
  SignedPerm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    int x = g[i];
    int y = f[static_cast<std::size_t>(std::abs(x) - 1)];
    out[i] = x < 0 ? -y : y;
  }
  return out;
}

inline SignedPerm identity_perm(int n) {
  SignedPerm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

inline SignedPerm transposition(int n, int i) {  // swaps i and i+1, 1-based
  SignedPerm p = identity_perm(n);
  std::swap(p[i - 1], p[i]);
  return p;
}

// Generators in the library's labelling: A_r is s1..s_r on r+1 points;
// B_n is t (negate 1), s1..s_{n-1}; D_n is s0 = t s1 t, s1..s_{n-1}.
inline std::vector<SignedPerm> perm_generators(char family, int rank) {
  std::vector<SignedPerm> gens;
  if (family == 'A') {
    for (int i = 1; i <= rank; ++i) gens.push_back(transposition(rank + 1, i));
    return gens;
  }
  int n = rank;
  SignedPerm t = identity_perm(n);
  t[0] = -1;
  if (family == 'B') {
    gens.push_back(t);
  } else {
    gens.push_back(compose(t, compose(transposition(n, 1), t)));
  }
  for (int i = 1; i < n; ++i) gens.push_back(transposition(n, i));
  return gens;
}

inline SignedPerm perm_of_word(const std::vector<SignedPerm>& gens, const std::vector<int>& word, int n) {
  SignedPerm p = identity_perm(n);
  for (int s : word) p = compose(p, gens[s]);
  return p;
}

// Standard tableaux of a shape by removing the corner holding the largest entry.
inline long syt_count(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i + 1 < shape.size() && shape[i + 1] == shape[i]) continue;
    --shape[i];
    total += syt_count(shape);
    ++shape[i];
  }
  return total;
}

// No part occurs e or more times.
inline bool regular_by_counting(const std::vector<int>& parts, int e) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  for (auto [part, k] : mult)
    if (k >= e) return false;
  return true;
}

}  // namespace oracle
