#include <doctest.h>

#include "hecke/coxeter.hpp"
#include "hecke/error.hpp"
#include "oracles.hpp"

#include <deque>
#include <map>
#include <set>

using hecke::CoxeterType;
using hecke::Family;
using hecke::WeylGroup;

namespace {

WeylGroup make(const char* fam, int rank, std::size_t cap = WeylGroup::kDefaultCap) {
  return WeylGroup::build(CoxeterType::parse(fam, rank), cap);
}

std::vector<int> length_profile(const WeylGroup& g) {
  std::vector<int> prof(static_cast<std::size_t>(g.max_length()) + 1, 0);
  for (std::size_t w = 0; w < g.size(); ++w) ++prof[g.length(static_cast<int>(w))];
  return prof;
}

// Compares the group against signed permutations: faithful, same
// multiplication, and word lengths equal Cayley-graph distances.
void check_against_perms(char family, int rank) {
  WeylGroup g = make(std::string(1, family).c_str(), rank);
  const int n = family == 'A' ? rank + 1 : rank;
  auto gens = oracle::perm_generators(family, rank);

  std::map<oracle::SignedPerm, int> dist;
  std::deque<oracle::SignedPerm> queue{oracle::identity_perm(n)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      auto q = oracle::compose(s, p);
      if (dist.emplace(q, dist[p] + 1).second) queue.push_back(q);
    }
  }
  REQUIRE(dist.size() == g.size());

  std::vector<oracle::SignedPerm> image(g.size());
  std::set<oracle::SignedPerm> distinct;
  for (std::size_t w = 0; w < g.size(); ++w) {
    image[w] = oracle::perm_of_word(gens, g.normal_form(static_cast<int>(w)), n);
    distinct.insert(image[w]);
    CHECK(dist.at(image[w]) == g.length(static_cast<int>(w)));
  }
  CHECK(distinct.size() == g.size());
  for (std::size_t w = 0; w < g.size(); ++w)
    for (std::size_t x = 0; x < g.size(); x += 3)
      CHECK(image[g.mult(static_cast<int>(w), static_cast<int>(x))] == oracle::compose(image[w], image[x]));
}

// Bruhat order from the subword property on the normal form.
std::vector<std::vector<bool>> subword_bruhat(const WeylGroup& g) {
  std::vector<std::vector<bool>> leq(g.size(), std::vector<bool>(g.size(), false));
  for (std::size_t w = 0; w < g.size(); ++w) {
    const auto& word = g.normal_form(static_cast<int>(w));
    for (unsigned mask = 0; mask < (1U << word.size()); ++mask) {
      std::vector<int> sub;
      for (std::size_t k = 0; k < word.size(); ++k)
        if (mask >> k & 1U) sub.push_back(word[k]);
      leq[static_cast<std::size_t>(g.from_word(sub))][w] = true;
    }
  }
  return leq;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(make("B", 3).size() == 48);
  CHECK(make("G2", 2).size() == 12);
  CHECK(make("A", 2).size() == 6);
  CHECK(make("A", 4).size() == 120);
  CHECK(make("D", 4).size() == 192);
  CHECK(make("D", 2).size() == 4);
  CHECK(make("F4", 4).size() == 1152);
  for (auto ct : {CoxeterType{Family::A, 3}, CoxeterType{Family::B, 4}, CoxeterType{Family::D, 3},
                  CoxeterType{Family::G2, 2}, CoxeterType{Family::F4, 4}}) {
    WeylGroup g = WeylGroup::build(ct);
    CHECK(g.size() == hecke::classical_order(ct));
    auto prof = length_profile(g);
    CHECK(prof.front() == 1);
    CHECK(prof.back() == 1);
  }
}

TEST_CASE("cap is enforced") {
  try {
    make("B", 6);  // 46080 elements
    FAIL("expected GroupTooLarge");
  } catch (const hecke::Error& e) {
    CHECK(e.code() == hecke::Errc::GroupTooLarge);
  }
  CHECK_THROWS_AS(make("F4", 4, 1000), hecke::Error);
  CHECK_THROWS_AS(CoxeterType::parse("B", 1), hecke::Error);
  CHECK_THROWS_AS(CoxeterType::parse("E", 6), hecke::Error);
}

TEST_CASE("multiplication basics") {
  WeylGroup g = make("A", 2);
  int s1 = g.generator(0), s2 = g.generator(1);
  CHECK(g.mult(s1, s1) == g.identity());
  for (std::size_t w = 0; w < g.size(); ++w) CHECK(g.mult(static_cast<int>(w), g.identity()) == static_cast<int>(w));
  CHECK(g.length(g.mult(s1, s2)) == 2);
  CHECK(g.element_name(g.mult(s1, s2)) == "s1.s2");
  CHECK(g.element_name(g.longest()) == "s1.s2.s1");
  CHECK(g.element_name(g.identity()) == "1");
  CHECK(g.parse_element("s2.s1.s2") == g.longest());
  CHECK(g.normal_form(g.identity()).empty());
}

TEST_CASE("normal form is the lexicographically least reduced word") {
  for (auto [fam, rank] : {std::pair{"A", 3}, std::pair{"B", 3}, std::pair{"G2", 2}}) {
    WeylGroup g = make(fam, rank);
    // Every reduced word of w, found by brute force over words of length l(w).
    for (std::size_t w = 0; w < g.size(); ++w) {
      const int l = g.length(static_cast<int>(w));
      std::vector<int> word(static_cast<std::size_t>(l), 0);
      std::vector<int> best;
      bool found = false;
      long total = 1;
      for (int k = 0; k < l; ++k) total *= g.rank();
      for (long code = 0; code < total && !found; ++code) {
        long c = code;
        for (int k = l - 1; k >= 0; --k) {
          word[k] = static_cast<int>(c % g.rank());
          c /= g.rank();
        }
        if (g.from_word(word) == static_cast<int>(w)) {
          best = word;
          found = true;
        }
      }
      CHECK(best == g.normal_form(static_cast<int>(w)));
    }
  }
}

TEST_CASE("signed permutation oracle") {
  check_against_perms('A', 2);
  check_against_perms('A', 3);
  check_against_perms('B', 2);
  check_against_perms('B', 3);
  check_against_perms('D', 3);
  check_against_perms('D', 4);
}

TEST_CASE("Poincare polynomials") {
  CHECK(length_profile(make("A", 2)) == std::vector<int>{1, 2, 2, 1});
  CHECK(length_profile(make("B", 2)) == std::vector<int>{1, 2, 2, 2, 1});
  CHECK(length_profile(make("G2", 2)) == std::vector<int>{1, 2, 2, 2, 2, 2, 1});
  CHECK(make("F4", 4).max_length() == 24);
}

TEST_CASE("lengths, weights, descents") {
  WeylGroup b2 = make("B", 2);
  const int a = 2, b = 5;
  auto L = hecke::two_parameter_weight(b2, a, b);
  CHECK(b2.lweight(b2.identity(), L) == 0);
  CHECK(b2.length(b2.identity()) == 0);
  // w0 = tsts
  CHECK(b2.element_name(b2.longest()) == "t.s1.t.s1");
  CHECK(b2.lweight(b2.longest(), L) == 2 * a + 2 * b);
  WeylGroup s3 = make("A", 2);
  CHECK(s3.lweight(s3.longest(), hecke::length_weight(s3)) == 3);

  for (auto [fam, rank] : {std::pair{"A", 3}, std::pair{"B", 3}, std::pair{"G2", 2}, std::pair{"D", 4}}) {
    WeylGroup g = make(fam, rank);
    for (std::size_t w = 0; w < g.size(); ++w) {
      int wi = static_cast<int>(w);
      for (int s = 0; s < g.rank(); ++s) {
        int d = g.length(g.rmul(wi, s)) - g.length(wi);
        CHECK((d == 1 || d == -1));
        CHECK(g.rmul(wi, s) == g.mult(wi, g.generator(s)));
        CHECK(g.is_right_descent(wi, s) == (d == -1));
      }
      CHECK(g.mult(wi, g.inverse(wi)) == g.identity());
      CHECK(g.descents_left(wi) == g.descents_right(g.inverse(wi)));
    }
    // exactly one element has no right ascent
    int tops = 0;
    for (std::size_t w = 0; w < g.size(); ++w)
      if (static_cast<int>(g.descents_right(static_cast<int>(w)).size()) == g.rank()) ++tops;
    CHECK(tops == 1);
  }
}

TEST_CASE("Bruhat order") {
  WeylGroup s3 = make("A", 2);
  CHECK(s3.bruhat_leq(s3.parse_element("s1"), s3.parse_element("s1.s2.s1")));
  CHECK_FALSE(s3.bruhat_leq(s3.parse_element("s1.s2"), s3.parse_element("s2.s1")));

  for (auto [fam, rank] : {std::pair{"A", 3}, std::pair{"B", 3}, std::pair{"G2", 2}, std::pair{"D", 3}}) {
    WeylGroup g = make(fam, rank);
    auto oracle_leq = subword_bruhat(g);
    const int n = static_cast<int>(g.size());
    for (int y = 0; y < n; ++y)
      for (int w = 0; w < n; ++w) {
        CHECK(g.bruhat_leq(y, w) == oracle_leq[y][w]);
        if (g.bruhat_leq(y, w) && y != w) CHECK(g.length(y) < g.length(w));
        if (g.bruhat_leq(y, w) && g.bruhat_leq(w, y)) CHECK(y == w);
      }
    for (int w = 0; w < n; ++w) {
      CHECK(g.bruhat_leq(g.identity(), w));
      CHECK(g.bruhat_leq(w, w));
      CHECK(g.bruhat_leq(w, g.longest()));
    }
  }
}

TEST_CASE("weight validation") {
  WeylGroup b3 = make("B", 3);
  CHECK(hecke::validate_weight(b3, {{4, 1, 1}}));
  WeylGroup s3 = make("A", 2);
  CHECK_FALSE(hecke::validate_weight(s3, {{1, 2}}));
  WeylGroup f4 = make("F4", 4);
  CHECK(hecke::validate_weight(f4, hecke::two_parameter_weight(f4, 2, 7)));
  CHECK_FALSE(hecke::validate_weight(f4, {{1, 2, 3, 3}}));
  WeylGroup g2 = make("G2", 2);
  CHECK(hecke::validate_weight(g2, hecke::two_parameter_weight(g2, 1, 3)));
  WeylGroup d4 = make("D", 4);
  CHECK_FALSE(hecke::validate_weight(d4, {{2, 1, 1, 1}}));
}

TEST_CASE("type B parabolic subgroup is symmetric") {
  for (int n = 2; n <= 4; ++n) {
    WeylGroup g = make("B", n);
    std::size_t count = 0;
    for (std::size_t w = 0; w < g.size(); ++w) {
      const auto& word = g.normal_form(static_cast<int>(w));
      if (std::find(word.begin(), word.end(), 0) == word.end()) ++count;
    }
    std::size_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
    CHECK(count == fact);
  }
}
