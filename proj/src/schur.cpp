#include "hecke/schur.hpp"

#include "hecke/error.hpp"
#include "hecke/fixtures.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace hecke {

namespace {

void check_parts(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw Error(Errc::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw Error(Errc::InvalidArgument, "partition parts must be weakly decreasing");
  }
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

LaurentPoly mono(long e, long c = 1) { return LaurentPoly::monomial(static_cast<int>(e), c); }

// v^e1 + s v^e2
LaurentPoly binom(long e1, long e2, int s) { return mono(e1) + mono(e2, s); }

LaurentPoly power(const LaurentPoly& p, int k) {
  LaurentPoly r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

void require_weights(int a, int b) {
  if (a < 0 || b < 0) throw Error(Errc::InvalidArgument, "weights must be non-negative");
  if (a == 0 && b == 0) throw Error(Errc::InvalidArgument, "weights a and b are both zero");
}

struct Table {
  std::vector<std::string> labels;
  std::vector<int> dims;
  // cells[row][regime] = {f, coefficient of a, coefficient of b}
  std::vector<std::vector<std::array<long, 3>>> cells;
};

Table load_table(std::string_view name) {
  const auto doc = nlohmann::json::parse(fixture(name));
  Table t;
  for (const auto& row : doc.at("rows")) {
    t.labels.push_back(row.at("label").get<std::string>());
    t.dims.push_back(row.at("dim").get<int>());
    std::vector<std::array<long, 3>> cells;
    for (const auto& c : row.at("cells")) cells.push_back({c.at(0).get<long>(), c.at(1).get<long>(), c.at(2).get<long>()});
    t.cells.push_back(std::move(cells));
  }
  return t;
}

const Table& g2_table() {
  static const Table t = load_table("g2_invariants");
  return t;
}

const Table& f4_table() {
  static const Table t = load_table("f4_invariants");
  return t;
}

InvariantPair lookup(const Table& t, std::size_t row, int regime, int a, int b) {
  const auto& c = t.cells[row][static_cast<std::size_t>(regime)];
  return {c[1] * a + c[2] * b, c[0]};
}

std::string regime_error(const char* type, int a, int b) {
  return std::string(type) + " invariants are tabulated only for a <= b regimes; got a=" + std::to_string(a) +
         ", b=" + std::to_string(b);
}

int g2_regime(int a, int b) {
  if (b > a && a > 0) return 0;
  if (b == a && a > 0) return 1;
  if (b > a && a == 0) return 2;
  throw Error(Errc::RegimeNotCovered, regime_error("G2", a, b));
}

int f4_regime(int a, int b) {
  if (a > 0 && b > 2 * a) return 0;
  if (a > 0 && b == 2 * a) return 1;
  if (a > 0 && b > a && b < 2 * a) return 2;
  if (a > 0 && b == a) return 3;
  if (a == 0 && b > 0) return 4;
  throw Error(Errc::RegimeNotCovered, regime_error("F4", a, b));
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Partition::Partition(std::initializer_list<int> p) : parts(p) { check_parts(parts); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) { check_parts(parts); }

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

EValue EValue::finite(int e) {
  if (e < 2) throw Error(Errc::InvalidArgument, "e must be at least 2");
  return {e};
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts[i]);
  }
  return out + ")";
}

std::string to_string(const Bipartition& b) { return "(" + to_string(b.first) + "," + to_string(b.second) + ")"; }

std::string to_string(const EValue& e) { return e.is_infinite() ? "inf" : std::to_string(*e.value); }

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Parts bounded by max_part, emitted in reverse lexicographic order.
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& p : partitions_of(k))
      for (const auto& q : partitions_of(n - k)) out.push_back({p, q});
  return out;
}

long nfun(const Partition& nu) {
  long total = 0;
  for (int i = 0; i < nu.length(); ++i) total += static_cast<long>(i) * nu.parts[i];
  return total;
}

Partition conjugate(const Partition& nu) {
  std::vector<int> out(static_cast<std::size_t>(nu.part(0)), 0);
  for (int p : nu.parts)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return false;
  int sl = 0, sm = 0;
  for (int i = 0; i < std::max(lambda.length(), mu.length()); ++i) {
    sl += lambda.part(i);
    sm += mu.part(i);
    if (sl > sm) return false;
  }
  return true;
}

bool dominance_leq(const Bipartition& lambda, const Bipartition& mu) {
  if (lambda.size() != mu.size()) return false;
  int sl = 0, sm = 0;
  for (int i = 0; i < std::max(lambda.first.length(), mu.first.length()); ++i) {
    sl += lambda.first.part(i);
    sm += mu.first.part(i);
    if (sl > sm) return false;
  }
  sl = lambda.first.size();
  sm = mu.first.size();
  if (sl > sm) return false;
  for (int i = 0; i < std::max(lambda.second.length(), mu.second.length()); ++i) {
    sl += lambda.second.part(i);
    sm += mu.second.part(i);
    if (sl > sm) return false;
  }
  return true;
}

bool e_regular(const Partition& nu, EValue e) {
  if (e.is_infinite()) return true;
  int run = 0;
  for (int i = 0; i < nu.length(); ++i) {
    run = (i > 0 && nu.parts[i] == nu.parts[i - 1]) ? run + 1 : 1;
    if (run >= *e.value) return false;
  }
  return true;
}

BigInt standard_tableaux(const Partition& nu) {
  const Partition conj = conjugate(nu);
  BigInt hooks = 1;
  for (int i = 0; i < nu.length(); ++i)
    for (int j = 0; j < nu.parts[i]; ++j) hooks *= (nu.parts[i] - j - 1) + (conj.parts[j] - i - 1) + 1;
  return factorial(nu.size()) / hooks;
}

BigInt dim_B(const Bipartition& lambda) {
  const int n = lambda.size(), k = lambda.first.size();
  const BigInt binomial = factorial(n) / (factorial(k) * factorial(n - k));
  return binomial * standard_tableaux(lambda.first) * standard_tableaux(lambda.second);
}

int default_symbol_size(const Bipartition& lambda) {
  return std::max(lambda.first.length() - 1, lambda.second.length());
}

Symbol symbol_of(const Bipartition& lambda, int m) {
  if (m < lambda.second.length() || m + 1 < lambda.first.length())
    throw Error(Errc::MTooSmall, "symbol size m=" + std::to_string(m) + " is too small for " + to_string(lambda));
  Symbol s;
  s.m = m;
  for (int i = 1; i <= m + 1; ++i) s.top.push_back(i - 1 + lambda.first.part(m + 1 - i));
  for (int i = 1; i <= m; ++i) s.bottom.push_back(i - 1 + lambda.second.part(m - i));
  return s;
}

Symbol symbol_of(const Bipartition& lambda) { return symbol_of(lambda, default_symbol_size(lambda)); }

LaurentPoly schur_element_B(const Bipartition& lambda, int a, int b) {
  return schur_element_B(lambda, a, b, default_symbol_size(lambda));
}

LaurentPoly schur_element_B(const Bipartition& lambda, int a, int b, int m) {
  require_weights(a, b);
  const int n = lambda.size();
  if (a == 0) {
    // The symbol formula degenerates; the algebra is a twisted group algebra
    // of S_n over the Hecke algebra of (Z/2)^n.
    const int k = lambda.first.size();
    const BigInt f = factorial(k) * factorial(n - k) /
                     (standard_tableaux(lambda.first) * standard_tableaux(lambda.second));
    return LaurentPoly(f) * power(binom(0, 2L * b, 1), k) * power(binom(0, -2L * b, 1), n - k);
  }

  const Symbol s = symbol_of(lambda, m);
  const long A = 2L * a, B = 2L * b;
  // The b m(m-1) term keeps the result independent of the padding size m.
  LaurentPoly num = mono(A * m * (2L * m + 1) * (m - 2) / 3 + static_cast<long>(b) * m * (m - 1)) * power(binom(A, B, 1), m);
  LaurentPoly den = power(binom(A, 0, -1), n);

  for (int al : s.top)
    for (int be : s.bottom) den *= binom(A * (al - 1) + B, A * be, 1);
  for (std::size_t i = 0; i < s.top.size(); ++i) {
    for (int k = 1; k <= s.top[i]; ++k) num *= binom(A * k, 0, -1) * binom(A * (k - 1) + B, 0, 1);
    for (std::size_t j = 0; j < i; ++j) den *= binom(A * s.top[i], A * s.top[j], -1);
  }
  for (std::size_t i = 0; i < s.bottom.size(); ++i) {
    for (int k = 1; k <= s.bottom[i]; ++k) num *= binom(A * k, 0, -1) * binom(A * (k + 1) - B, 0, 1);
    for (std::size_t j = 0; j < i; ++j) den *= binom(A * s.bottom[i], A * s.bottom[j], -1);
  }
  return exact_div(num, den);
}

InvariantPair invariants_from_schur(const LaurentPoly& c) {
  const Extremal e = extremal(c);
  if (e.min_degree % 2 != 0)
    throw Error(Errc::DomainError, "Schur element has odd lowest degree " + std::to_string(e.min_degree));
  if (e.min_coeff <= 0) throw Error(Errc::DomainError, "Schur element has non-positive trailing coefficient");
  return {-e.min_degree / 2, static_cast<long>(e.min_coeff)};
}

InvariantPair invariants_B(const Bipartition& lambda, int a, int b) {
  return invariants_from_schur(schur_element_B(lambda, a, b));
}

InvariantPair invariants_asymptotic(const Bipartition& lambda, int a, int b) {
  const long n = lambda.size();
  if (!((n - 1) * a > 0 && b > (n - 1) * a))
    throw Error(Errc::DomainError, "asymptotic case needs b > (n-1)a > 0");
  const Partition& l2 = lambda.second;
  return {static_cast<long>(b) * l2.size() + a * (nfun(lambda.first) + 2 * nfun(l2) - nfun(conjugate(l2))), 1};
}

InvariantPair invariants_A(const Partition& nu, int a) {
  if (a <= 0) throw Error(Errc::DomainError, "type A invariants need a > 0");
  return {nfun(nu) * a, 1};
}

InvariantPair invariants_azero(const Bipartition& lambda, int b) {
  if (b <= 0) throw Error(Errc::DomainError, "the a=0 case needs b > 0");
  const int n = lambda.size(), k = lambda.first.size();
  const BigInt f = factorial(k) * factorial(n - k) /
                   (standard_tableaux(lambda.first) * standard_tableaux(lambda.second));
  return {static_cast<long>(lambda.second.size()) * b, static_cast<long>(f)};
}

InvariantPair typeD_invariants(const Partition& lambda, const Partition& mu, int a) {
  if (lambda == mu) throw Error(Errc::InvalidArgument, "[lambda,lambda] splits; use the split variant");
  return invariants_B({lambda, mu}, a, 0);
}

InvariantPair typeD_split_invariants(const Partition& lambda, int a) {
  InvariantPair p = invariants_B({lambda, lambda}, a, 0);
  p.f *= 2;
  return p;
}

std::vector<G2Char> g2_characters() {
  return {G2Char::One, G2Char::Eps, G2Char::Eps1, G2Char::Eps2, G2Char::EPlus, G2Char::EMinus};
}

std::string g2_name(G2Char e) {
  switch (e) {
    case G2Char::One: return "1";
    case G2Char::Eps: return "eps";
    case G2Char::Eps1: return "eps1";
    case G2Char::Eps2: return "eps2";
    case G2Char::EPlus: return "E+";
    case G2Char::EMinus: return "E-";
  }
  return "?";
}

G2Char parse_g2(const std::string& name) {
  for (G2Char e : g2_characters())
    if (g2_name(e) == name) return e;
  throw Error(Errc::InvalidArgument, "unknown G2 character '" + name + "'");
}

int g2_dim(G2Char e) { return (e == G2Char::EPlus || e == G2Char::EMinus) ? 2 : 1; }

LaurentPoly g2_schur(G2Char e, int a, int b) {
  require_weights(a, b);
  const long A = a, B = b;
  const LaurentPoly base = binom(2 * A, 0, 1) * binom(2 * B, 0, 1);
  const LaurentPoly c1 = base * (mono(4 * A + 4 * B) + mono(2 * A + 2 * B) + 1);
  const LaurentPoly ce1 = mono(-6 * B) * base * (mono(4 * A) + mono(2 * A + 2 * B) + mono(4 * B));
  switch (e) {
    case G2Char::One: return c1;
    case G2Char::Eps: return mono(-6 * A - 6 * B) * c1;
    case G2Char::Eps1: return ce1;
    case G2Char::Eps2: return mono(6 * B - 6 * A) * ce1;
    case G2Char::EPlus:
    case G2Char::EMinus: {
      const int s = e == G2Char::EPlus ? 1 : -1;
      return mono(-2 * A - 2 * B, 2) * (mono(2 * A + 2 * B) + mono(A + B, s) + 1) *
             (mono(2 * A) + mono(A + B, -s) + mono(2 * B));
    }
  }
  return 0;
}

InvariantPair g2_invariants(G2Char e, int a, int b) {
  const int regime = g2_regime(a, b);
  const Table& t = g2_table();
  const auto it = std::find(t.labels.begin(), t.labels.end(), g2_name(e));
  return lookup(t, static_cast<std::size_t>(it - t.labels.begin()), regime, a, b);
}

std::vector<std::string> f4_characters() { return f4_table().labels; }

InvariantPair f4_invariants(const std::string& label, int a, int b) {
  const Table& t = f4_table();
  const auto it = std::find(t.labels.begin(), t.labels.end(), label);
  if (it == t.labels.end()) throw Error(Errc::InvalidArgument, "unknown F4 character '" + label + "'");
  return lookup(t, static_cast<std::size_t>(it - t.labels.begin()), f4_regime(a, b), a, b);
}

bool l_good(long p, Family type, int n, int a, int b) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
  std::vector<long> fs;
  switch (type) {
    case Family::A:
      for (const auto& nu : partitions_of(n)) fs.push_back(invariants_A(nu, a).f);
      break;
    case Family::B:
      for (const auto& lam : bipartitions_of(n)) fs.push_back(invariants_B(lam, a, b).f);
      break;
    case Family::D:
      for (const auto& lam : bipartitions_of(n)) {
        if (lam.first < lam.second) continue;
        fs.push_back(lam.first == lam.second ? typeD_split_invariants(lam.first, a).f
                                             : typeD_invariants(lam.first, lam.second, a).f);
      }
      break;
    case Family::G2:
      for (G2Char e : g2_characters()) fs.push_back(g2_invariants(e, a, b).f);
      break;
    case Family::F4:
      for (const auto& label : f4_characters()) fs.push_back(f4_invariants(label, a, b).f);
      break;
  }
  return std::none_of(fs.begin(), fs.end(), [p](long f) { return f % p == 0; });
}

Partition parse_partition(const std::string& json_text) {
  try {
    return Partition(nlohmann::json::parse(json_text).get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, "bad partition '" + json_text + "': " + e.what());
  }
}

Bipartition parse_bipartition(const std::string& json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    if (!j.is_array() || j.size() != 2) throw Error(Errc::InvalidArgument, "bipartition must be a pair of arrays");
    return {Partition(j[0].get<std::vector<int>>()), Partition(j[1].get<std::vector<int>>())};
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, "bad bipartition '" + json_text + "': " + e.what());
  }
}

}  // namespace hecke
