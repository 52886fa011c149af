#include "hecke/coxeter.hpp"
#include "hecke/error.hpp"
#include "hecke/schur.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace hecke;

namespace {

// Standard tableaux by removing a corner in every possible way.
LaurentPoly poincare(const WeylGroup& g, const WeightFunction& L, int sign) {
  LaurentPoly p;
  for (std::size_t w = 0; w < g.size(); ++w) p += LaurentPoly::monomial(static_cast<int>(sign * 2 * g.lweight(static_cast<int>(w), L)));
  return p;
}

// sum_E dim(E) / c_E == 1, cleared of denominators.
bool orthogonality(const std::vector<BigInt>& dims, const std::vector<LaurentPoly>& c) {
  LaurentPoly all = 1, lhs;
  for (const auto& x : c) all *= x;
  for (std::size_t i = 0; i < c.size(); ++i) {
    LaurentPoly rest = LaurentPoly(dims[i]);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (j != i) rest *= c[j];
    lhs += rest;
  }
  return lhs == all;
}

Bipartition bp(std::vector<int> a, std::vector<int> b) { return {Partition(std::move(a)), Partition(std::move(b))}; }

}  // namespace

TEST_CASE("partition basics") {
  CHECK(nfun({1, 1, 1}) == 3);
  CHECK(conjugate({2, 1}) == Partition{2, 1});
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(dominance_leq(Partition{1, 1, 1}, Partition{2, 1}));
  CHECK(dominance_leq(Partition{2, 1}, Partition{3}));
  CHECK_FALSE(dominance_leq(Partition{3}, Partition{2, 1}));
  CHECK(to_string(Partition{2, 1}) == "(2,1)");
  CHECK(to_string(bp({}, {1})) == "((),(1))");
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK_THROWS_AS(EValue::finite(1), Error);

  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < 10; ++n) CHECK(partitions_of(n).size() == counts[n]);
  CHECK(partitions_of(3).front() == Partition{3});
  CHECK(bipartitions_of(3).size() == 10);
}

TEST_CASE("e-regular partitions") {
  std::set<Partition> two;
  for (const auto& nu : partitions_of(5))
    if (e_regular(nu, EValue::finite(2))) two.insert(nu);
  CHECK(two == std::set<Partition>{{5}, {4, 1}, {3, 2}});

  for (int n = 0; n <= 10; ++n)
    for (const auto& nu : partitions_of(n)) {
      CHECK(e_regular(nu, EValue::infinity()));
      for (int e = 2; e <= 5; ++e) CHECK(e_regular(nu, EValue::finite(e)) == oracle::regular_by_counting(nu.parts, e));
    }
}

TEST_CASE("dominance and n-function") {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& nu : ps) {
      CHECK(conjugate(conjugate(nu)) == nu);
      for (const auto& mu : ps) {
        if (!dominance_leq(nu, mu)) continue;
        CHECK(nfun(mu) <= nfun(nu));
        if (nfun(mu) == nfun(nu)) CHECK(nu == mu);
        CHECK(dominance_leq(conjugate(mu), conjugate(nu)));
      }
    }
  }
  CHECK(dominance_leq(bp({}, {3}), bp({1}, {2})));
  CHECK(dominance_leq(bp({1}, {2}), bp({2}, {1})));
  CHECK(dominance_leq(bp({1, 1}, {1}), bp({2}, {1})));
  CHECK_FALSE(dominance_leq(bp({2}, {1}), bp({1, 1}, {1})));
  CHECK_FALSE(dominance_leq(bp({3}, {}), bp({}, {3})));
}

TEST_CASE("tableaux counts against corner removal") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& nu : partitions_of(n)) CHECK(standard_tableaux(nu) == oracle::syt_count(nu.parts));
  for (int n = 1; n <= 5; ++n) {
    BigInt squares = 0, order = 1;
    for (const auto& lam : bipartitions_of(n)) squares += dim_B(lam) * dim_B(lam);
    for (int i = 1; i <= n; ++i) order *= 2 * i;
    CHECK(squares == order);
  }
}

TEST_CASE("symbols") {
  auto s = symbol_of(bp({2}, {1}), 1);
  CHECK(s.top == std::vector<int>{0, 3});
  CHECK(s.bottom == std::vector<int>{1});
  s = symbol_of(bp({}, {}), 1);
  CHECK(s.top == std::vector<int>{0, 1});
  CHECK(s.bottom == std::vector<int>{0});
  s = symbol_of(bp({4}, {}), 0);
  CHECK(s.top == std::vector<int>{4});
  CHECK(s.bottom.empty());
  CHECK(default_symbol_size(bp({2, 1}, {1})) == 1);
  CHECK(default_symbol_size(bp({1}, {1, 1})) == 2);
  CHECK_THROWS_AS(symbol_of(bp({1}, {1, 1}), 1), Error);
  try {
    symbol_of(bp({1, 1, 1}, {}), 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MTooSmall);
  }
}

TEST_CASE("type B Schur elements") {
  SUBCASE("independent of the symbol size") {
    for (int n = 1; n <= 4; ++n)
      for (const auto& lam : bipartitions_of(n))
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 2}, {2, 3}, {1, 5}}) {
          const int m = default_symbol_size(lam);
          const LaurentPoly c = schur_element_B(lam, a, b, m);
          CHECK(c == schur_element_B(lam, a, b, m + 1));
          CHECK(c == schur_element_B(lam, a, b, m + 2));
        }
  }
  SUBCASE("trivial and sign give the Poincare polynomial") {
    for (int n = 2; n <= 4; ++n) {
      const WeylGroup g = WeylGroup::build({Family::B, n});
      for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 3}, {2, 1}, {0, 2}}) {
        const WeightFunction L = two_parameter_weight(g, a, b);
        std::vector<int> row(static_cast<std::size_t>(n), 1);
        CHECK(schur_element_B({Partition{n}, {}}, a, b) == poincare(g, L, 1));
        CHECK(schur_element_B({{}, Partition(row)}, a, b) == poincare(g, L, -1));
      }
    }
  }
  SUBCASE("orthogonality sum") {
    for (int n = 1; n <= 4; ++n)
      for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 2}, {2, 3}, {0, 1}, {0, 3}}) {
        std::vector<BigInt> dims;
        std::vector<LaurentPoly> cs;
        for (const auto& lam : bipartitions_of(n)) {
          dims.push_back(dim_B(lam));
          cs.push_back(schur_element_B(lam, a, b));
        }
        CHECK(orthogonality(dims, cs));
      }
  }
  CHECK_THROWS_AS(schur_element_B(bp({1}, {}), 0, 0), Error);
}

TEST_CASE("type B invariants match the B3 tables") {
  const std::map<std::string, std::map<int, long>> alpha{
      {"((3),())", {{0, 0}, {2, 0}, {4, 0}}},        {"((2,1),())", {{0, 2}, {2, 1}, {4, 1}}},
      {"((1,1,1),())", {{0, 6}, {2, 3}, {4, 3}}},    {"((2),(1))", {{0, 1}, {2, 2}, {4, 4}}},
      {"((1,1),(1))", {{0, 3}, {2, 3}, {4, 5}}},     {"((1),(2))", {{0, 1}, {2, 3}, {4, 7}}},
      {"((),(3))", {{0, 0}, {2, 3}, {4, 9}}},        {"((1),(1,1))", {{0, 3}, {2, 6}, {4, 10}}},
      {"((),(2,1))", {{0, 2}, {2, 7}, {4, 13}}},     {"((),(1,1,1))", {{0, 6}, {2, 12}, {4, 18}}},
  };
  for (const auto& lam : bipartitions_of(3))
    for (int b : {0, 2, 4}) {
      CAPTURE(to_string(lam));
      CAPTURE(b);
      CHECK(invariants_B(lam, 1, b).alpha == alpha.at(to_string(lam)).at(b));
    }
  CHECK(invariants_B(bp({1}, {2}), 1, 4) == InvariantPair{7, 1});
  CHECK(invariants_asymptotic(bp({1}, {2}), 1, 4) == InvariantPair{7, 1});
}

TEST_CASE("special cases of the type B invariants") {
  SUBCASE("asymptotic closed form") {
    for (int n = 2; n <= 5; ++n)
      for (int a : {1, 2})
        for (int b : {(n - 1) * a + 1, (n - 1) * a + 3})
          for (const auto& lam : bipartitions_of(n)) {
            CAPTURE(to_string(lam));
            CHECK(invariants_B(lam, a, b) == invariants_asymptotic(lam, a, b));
          }
    CHECK_THROWS_AS(invariants_asymptotic(bp({2}, {1}), 1, 2), Error);
    CHECK_THROWS_AS(invariants_asymptotic(bp({1}, {}), 1, 5), Error);
  }
  SUBCASE("type A") {
    CHECK(invariants_A({1, 1, 1}, 1) == InvariantPair{3, 1});
    for (int n = 1; n <= 5; ++n) {
      for (int a : {1, 2}) {
        // Symmetric group Schur elements from hook lengths.
        std::vector<BigInt> dims;
        std::vector<LaurentPoly> cs;
        for (const auto& nu : partitions_of(n)) {
          const Partition conj = conjugate(nu);
          LaurentPoly c = LaurentPoly::monomial(static_cast<int>(-2 * a * nfun(nu)));
          for (int i = 0; i < nu.length(); ++i)
            for (int j = 0; j < nu.parts[i]; ++j) {
              const int hook = nu.parts[i] - j + conj.parts[j] - i - 1;
              LaurentPoly q_int;
              for (int k = 0; k < hook; ++k) q_int += LaurentPoly::monomial(2 * a * k);
              c *= q_int;
            }
          dims.push_back(standard_tableaux(nu));
          cs.push_back(c);
          CHECK(invariants_from_schur(c) == invariants_A(nu, a));
          // E^nu is the restriction of E^(nu,()), which sits in the asymptotic regime for large b.
          CHECK(invariants_B({nu, {}}, a, (n - 1) * a + 1) == invariants_A(nu, a));
        }
        CHECK(orthogonality(dims, cs));
        if (n >= 2) {
          const WeylGroup g = WeylGroup::build({Family::A, n - 1});
          CHECK(cs.front() == poincare(g, two_parameter_weight(g, a, a), 1));
        }
      }
    }
  }
  SUBCASE("a = 0") {
    CHECK(invariants_azero(bp({2}, {1}), 5).alpha == 5);
    for (int n = 1; n <= 4; ++n)
      for (const auto& lam : bipartitions_of(n)) CHECK(invariants_B(lam, 0, 3) == invariants_azero(lam, 3));
  }
  SUBCASE("type D") {
    CHECK(typeD_invariants({2}, {1}, 1).alpha == 1);
    CHECK(typeD_invariants({2}, {1}, 1) == typeD_invariants({1}, {2}, 1));
    const InvariantPair split = typeD_split_invariants({1}, 1);
    CHECK(split.f == 2 * invariants_B(bp({1}, {1}), 1, 0).f);
    CHECK(split.alpha == invariants_B(bp({1}, {1}), 1, 0).alpha);
  }
}

TEST_CASE("extremal invariants reject malformed input") {
  CHECK_THROWS_AS(invariants_from_schur(LaurentPoly::monomial(-3)), Error);
  CHECK_THROWS_AS(invariants_from_schur(LaurentPoly::monomial(-2, -1)), Error);
  CHECK(invariants_from_schur(LaurentPoly::monomial(-4, 3) + 1) == InvariantPair{2, 3});
}

TEST_CASE("G2") {
  CHECK(g2_invariants(G2Char::Eps, 1, 2) == InvariantPair{9, 1});
  CHECK(g2_invariants(G2Char::EPlus, 1, 1) == InvariantPair{1, 6});
  CHECK(g2_invariants(G2Char::One, 0, 1) == InvariantPair{0, 2});
  CHECK_THROWS_AS(g2_invariants(G2Char::One, 2, 1), Error);
  CHECK_THROWS_AS(g2_invariants(G2Char::One, 0, 0), Error);
  CHECK(parse_g2("E-") == G2Char::EMinus);

  const WeylGroup g = WeylGroup::build({Family::G2, 2});
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 5}, {0, 1}, {0, 3}, {3, 3}}) {
    CHECK(g2_schur(G2Char::One, a, b) == poincare(g, two_parameter_weight(g, a, b), 1));
    CHECK(g2_schur(G2Char::Eps, a, b) == poincare(g, two_parameter_weight(g, a, b), -1));
    std::vector<BigInt> dims;
    std::vector<LaurentPoly> cs;
    for (G2Char e : g2_characters()) {
      dims.push_back(g2_dim(e));
      cs.push_back(g2_schur(e, a, b));
    }
    CHECK(orthogonality(dims, cs));

    for (G2Char e : g2_characters()) {
      CAPTURE(g2_name(e));
      const InvariantPair computed = invariants_from_schur(g2_schur(e, a, b));
      const InvariantPair table = g2_invariants(e, a, b);
      CHECK(computed.alpha == table.alpha);
      if (a == b && (e == G2Char::EPlus || e == G2Char::EMinus))
        // The table lists the two f values the other way round at b=a.
        CHECK(computed.f == g2_invariants(e == G2Char::EPlus ? G2Char::EMinus : G2Char::EPlus, a, b).f);
      else
        CHECK(computed.f == table.f);
    }
  }
}

TEST_CASE("F4 table") {
  CHECK(f4_invariants("1_2", 1, 3) == InvariantPair{27, 1});
  CHECK(f4_invariants("12_1", 1, 1) == InvariantPair{4, 24});
  CHECK(f4_invariants("9_1", 0, 1) == InvariantPair{2, 2});
  CHECK(f4_invariants("1_3", 2, 3) == InvariantPair{7, 2});
  CHECK(f4_invariants("4_5", 1, 2) == InvariantPair{20, 1});
  CHECK_THROWS_AS(f4_invariants("1_1", 2, 1), Error);
  CHECK_THROWS_AS(f4_invariants("3_1", 1, 3), Error);

  const auto labels = f4_characters();
  REQUIRE(labels.size() == 25);
  long squares = 0;
  for (const auto& l : labels) {
    const long d = std::stol(l.substr(0, l.find('_')));
    squares += d * d;
  }
  CHECK(squares == 1152);
  // Every alpha is a non-negative integer and every f positive in each regime.
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 3}, {1, 2}, {2, 3}, {1, 1}, {0, 1}})
    for (const auto& l : labels) {
      const InvariantPair p = f4_invariants(l, a, b);
      CHECK(p.alpha >= 0);
      CHECK(p.f >= 1);
    }
  CHECK(f4_invariants("1_1", 1, 3).alpha == 0);
  CHECK(f4_invariants("1_4", 1, 3).alpha == 12 * 3 + 12);
}

TEST_CASE("L-good primes") {
  for (long p : {2L, 3L, 5L, 7L}) CHECK(l_good(p, Family::B, 3, 1, 3));
  CHECK_FALSE(l_good(2, Family::G2, 0, 1, 1));
  CHECK_FALSE(l_good(3, Family::G2, 0, 1, 1));
  CHECK(l_good(5, Family::G2, 0, 1, 1));
  CHECK(l_good(5, Family::F4, 0, 1, 3));
  CHECK_FALSE(l_good(3, Family::F4, 0, 1, 3));
  CHECK(l_good(2, Family::A, 4, 1, 0));
  CHECK_FALSE(l_good(2, Family::B, 3, 1, 1));
  CHECK_FALSE(l_good(2, Family::D, 4, 1, 0));
  CHECK_THROWS_AS(l_good(4, Family::B, 3, 1, 3), Error);
  CHECK_THROWS_AS(l_good(2, Family::F4, 0, 3, 1), Error);
}

TEST_CASE("parsing") {
  CHECK(parse_bipartition("[[2,1],[1]]") == bp({2, 1}, {1}));
  CHECK(parse_bipartition("[[],[3]]") == bp({}, {3}));
  CHECK(parse_partition("[3,1]") == Partition{3, 1});
  CHECK_THROWS_AS(parse_bipartition("[[1,2],[]]"), Error);
  CHECK_THROWS_AS(parse_bipartition("[[1]]"), Error);
  CHECK_THROWS_AS(parse_partition("nope"), Error);
}
