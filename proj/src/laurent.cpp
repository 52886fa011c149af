#include "hecke/laurent.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

namespace {

void normalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    int e = terms[i].first;
    BigInt c = std::move(terms[i].second);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].first == e; ++j) c += terms[j].second;
    if (c != 0) terms[out++] = {e, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

// Merges sign*b into a; both sorted.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : BigInt(-b[j].second));
      ++j;
    } else {
      BigInt c = sign > 0 ? a[i].second + b[j].second : a[i].second - b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(int constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  normalize(terms);
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "min_degree of the zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_degree() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "max_degree of the zero polynomial");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly p;
  for (const auto& t : terms_) {
    if (t.first >= 0) break;
    p.terms_.push_back(t);
  }
  return p;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

void LaurentPoly::add_scaled(const LaurentPoly& coeff, const LaurentPoly& other) {
  if (coeff.is_zero() || other.is_zero()) return;
  *this += coeff * other;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
  if (b.terms_.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);

  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  const std::size_t span = static_cast<std::size_t>(hi - lo) + 1;
  LaurentPoly out;
  if (span <= 4 * a.terms_.size() * b.terms_.size() + 16) {
    std::vector<BigInt> dense(span);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    for (std::size_t k = 0; k < span; ++k)
      if (dense[k] != 0) out.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
    return out;
  }
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, ca * cb);
  normalize(raw);
  out.terms_ = std::move(raw);
  return out;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(Errc::DivisionByZero, "exact_div by the zero polynomial");
  if (p.is_zero()) return {};

  // Shift both to honest polynomials with nonzero constant term and run
  // long division from the top.
  const int pshift = p.min_degree();
  const int qshift = q.min_degree();
  const int pdeg = p.max_degree() - pshift;
  const int qdeg = q.max_degree() - qshift;
  if (pdeg < qdeg) throw Error(Errc::NotDivisible, to_string(p) + " / " + to_string(q));

  std::vector<BigInt> rem(static_cast<std::size_t>(pdeg) + 1);
  for (const auto& [e, c] : p.terms()) rem[static_cast<std::size_t>(e - pshift)] = c;
  std::vector<BigInt> div(static_cast<std::size_t>(qdeg) + 1);
  for (const auto& [e, c] : q.terms()) div[static_cast<std::size_t>(e - qshift)] = c;
  const BigInt& lead = div.back();

  std::vector<LaurentPoly::Term> quotient;
  for (int top = pdeg; top >= qdeg; --top) {
    BigInt& c = rem[static_cast<std::size_t>(top)];
    if (c == 0) continue;
    if (c % lead != 0) throw Error(Errc::NotDivisible, to_string(p) + " / " + to_string(q));
    BigInt t = c / lead;
    const int k = top - qdeg;
    for (int i = 0; i <= qdeg; ++i) {
      if (div[static_cast<std::size_t>(i)] != 0) rem[static_cast<std::size_t>(i + k)] -= t * div[static_cast<std::size_t>(i)];
    }
    quotient.emplace_back(k + pshift - qshift, std::move(t));
  }
  for (const auto& c : rem)
    if (c != 0) throw Error(Errc::NotDivisible, to_string(p) + " / " + to_string(q));
  return LaurentPoly::from_terms(std::move(quotient));
}

Extremal extremal(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "extremal terms of the zero polynomial");
  const auto& t = p.terms();
  return {t.front().first, t.front().second, t.back().first, t.back().second};
}

LaurentPoly v_minus_vinv(int e) {
  return LaurentPoly::from_terms({{e, 1}, {-e, -1}});
}

LaurentPoly v_plus_vinv(int e) {
  return LaurentPoly::from_terms({{e, 1}, {-e, 1}});
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "·";
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back({e, c.str()});
  return arr;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(Errc::SchemaError, "Laurent polynomial must be an array of pairs");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
      throw Error(Errc::SchemaError, "Laurent term must be [exponent, coefficient]");
    BigInt c = item[1].is_string() ? BigInt(item[1].get<std::string>()) : BigInt(item[1].get<long long>());
    terms.emplace_back(item[0].get<int>(), std::move(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace hecke
