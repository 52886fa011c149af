#include "hecke/klcells.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <sstream>

namespace hecke {

namespace {

// Collects the first exception thrown inside an OpenMP region so it can be
// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(hecke_exception_slot)
      if (!eptr_) eptr_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (eptr_) std::rethrow_exception(eptr_);
  }

 private:
  std::exception_ptr eptr_;
};

int sign_of_length(int l) { return l % 2 == 0 ? 1 : -1; }

}  // namespace

// ---------------------------------------------------------------------------
// HeckeElement

HeckeElement HeckeElement::basis(int w, LaurentPoly coeff) {
  HeckeElement h;
  if (!coeff.is_zero()) h.terms_.emplace_back(w, std::move(coeff));
  return h;
}

HeckeElement HeckeElement::from_dense(std::vector<LaurentPoly>& dense) {
  HeckeElement h;
  for (std::size_t w = 0; w < dense.size(); ++w) {
    if (!dense[w].is_zero()) {
      h.terms_.emplace_back(static_cast<int>(w), std::move(dense[w]));
      dense[w] = LaurentPoly();
    }
  }
  return h;
}

LaurentPoly HeckeElement::coeff(int w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == w) return it->second;
  return {};
}

void HeckeElement::add_to_dense(std::vector<LaurentPoly>& dense, const LaurentPoly& scale) const {
  if (scale.is_zero()) return;
  const bool unit = scale == LaurentPoly(1);
  for (const auto& [w, c] : terms_) {
    if (unit)
      dense[w] += c;
    else
      dense[w] += scale * c;
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() || (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
      out.push_back(other.terms_[j++]);
    } else {
      LaurentPoly c = terms_[i].second + other.terms_[j].second;
      if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) { return *this += LaurentPoly(-1) * other; }

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h) {
  HeckeElement out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : h.terms_) out.terms_.emplace_back(w, c * x);
  return out;
}

// ---------------------------------------------------------------------------
// HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(const WeylGroup& group, WeightFunction L) : group_(&group), L_(std::move(L)) {
  if (!validate_weight(group, L_))
    throw Error(Errc::InvalidArgument, "weight function is not constant on conjugate generators");
  for (int v : L_.values)
    if (v <= 0) throw Error(Errc::InvalidArgument, "the T~ basis needs L(s) > 0 for every generator");
  for (int s = 0; s < group.rank(); ++s) quad_.push_back(v_minus_vinv(L_.values[s]));

  // bar(T~_w) = (T~_s - (v^L - v^-L)) bar(T~_{sw}) for a left descent s.
  const std::size_t n = group.size();
  bar_cols_.resize(n);
  bar_cols_[0] = HeckeElement::basis(0);
  std::vector<LaurentPoly> dense(n);
  for (std::size_t w = 1; w < n; ++w) {
    const int s = group.normal_form(static_cast<int>(w))[0];
    const HeckeElement& prev = bar_cols_[group.lmul(s, static_cast<int>(w))];
    prev.add_to_dense(dense);
    mul_generator_left(s, dense);
    prev.add_to_dense(dense, -quad_[s]);
    bar_cols_[w] = HeckeElement::from_dense(dense);
  }
}

void HeckeAlgebra::mul_generator_left(int s, std::vector<LaurentPoly>& dense) const {
  const std::size_t n = dense.size();
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t u = static_cast<std::size_t>(group_->lmul(s, static_cast<int>(w)));
    if (u < w) continue;
    // T~_s T~_w = T~_u and T~_s T~_u = T~_w + q T~_u.
    if (dense[w].is_zero() && dense[u].is_zero()) continue;
    std::swap(dense[w], dense[u]);
    if (!dense[w].is_zero()) dense[u] += quad_[s] * dense[w];
  }
}

void HeckeAlgebra::mul_basis_left(int w, std::vector<LaurentPoly>& dense) const {
  const Word& word = group_->normal_form(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) mul_generator_left(*it, dense);
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& x, const HeckeElement& y) const {
  const std::size_t n = size();
  std::vector<LaurentPoly> acc(n), tmp(n);
  for (const auto& [u, a] : x.terms()) {
    y.add_to_dense(tmp);
    mul_basis_left(u, tmp);
    for (std::size_t w = 0; w < n; ++w) {
      if (tmp[w].is_zero()) continue;
      acc[w] += a * tmp[w];
      tmp[w] = LaurentPoly();
    }
  }
  return HeckeElement::from_dense(acc);
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  std::vector<LaurentPoly> acc(size());
  for (const auto& [w, c] : h.terms()) bar_cols_[w].add_to_dense(acc, c.bar());
  return HeckeElement::from_dense(acc);
}

HeckeElement HeckeAlgebra::jmap(const HeckeElement& h) const {
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) {
    LaurentPoly b = c.bar();
    if (group_->length(w) % 2 == 1) b = -b;
    out += HeckeElement::basis(w, std::move(b));
  }
  return out;
}

HeckeElement HeckeAlgebra::dagger(const HeckeElement& h) const { return jmap(bar(h)); }

std::string HeckeAlgebra::render(const HeckeElement& h) const {
  if (h.is_zero()) return "0";
  std::string out;
  const auto& terms = h.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [w, c] = *it;
    const std::string basis = "T~_" + group_->element_name(w);
    const bool monomial = c.term_count() == 1;
    bool negative = false;
    std::string coeff;
    if (monomial) {
      const auto& [e, k] = c.terms()[0];
      negative = k < 0;
      LaurentPoly mag = LaurentPoly::monomial(e, negative ? BigInt(-k) : k);
      if (!(e == 0 && (k == 1 || k == -1))) coeff = to_string(mag) + "·";
    } else {
      coeff = "(" + to_string(c) + ")·";
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff + basis;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kazhdan-Lusztig basis

namespace {

// Ascending linear extension of the Bruhat order.
std::vector<int> linear_extension(const WeylGroup& g, std::optional<std::uint64_t> seed) {
  const int n = static_cast<int>(g.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  if (!seed) {
    for (int w = 0; w < n; ++w) order[w] = w;
    return order;
  }
  std::mt19937_64 rng(*seed);
  std::vector<int> pending(static_cast<std::size_t>(n), 0);
  for (int w = 0; w < n; ++w)
    for (int y = 0; y < w; ++y)
      if (g.bruhat_leq(y, w)) ++pending[w];
  std::vector<int> ready;
  for (int w = 0; w < n; ++w)
    if (pending[w] == 0) ready.push_back(w);
  order.clear();
  while (!ready.empty()) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
    int w = ready[k];
    ready[k] = ready.back();
    ready.pop_back();
    order.push_back(w);
    for (int u = w + 1; u < n; ++u)
      if (g.bruhat_leq(w, u) && --pending[u] == 0) ready.push_back(u);
  }
  return order;
}

}  // namespace

std::vector<HeckeElement> kl_basis(const HeckeAlgebra& alg, const KLOptions& opts) {
  const WeylGroup& g = alg.group();
  const int n = static_cast<int>(g.size());
  if (g.size() > opts.cap)
    throw Error(Errc::GroupTooLarge, "KL data for " + std::to_string(n) + " elements exceeds the cap of " +
                                         std::to_string(opts.cap) + " (override with --force)");
  const std::vector<int> order = linear_extension(g, opts.shuffle_seed);
  std::vector<HeckeElement> c(static_cast<std::size_t>(n));
  ExceptionSlot slot;

  // bar(c_w) = c_w read off at T~_y: p_{y,w} - bar(p_{y,w}) equals
  // q = sum_{y<z<=w} R_{y,z} bar(p_{z,w}), and p_{y,w} is the part of q in
  // negative degrees.  acc carries q for every y not yet solved.
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
  for (int w = 0; w < n; ++w) {
    slot.run([&] {
      std::vector<LaurentPoly> acc(static_cast<std::size_t>(n)), p(static_cast<std::size_t>(n));
      p[w] = 1;
      alg.bar_basis(w).add_to_dense(acc);
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int y = *it;
        if (y == w || !g.bruhat_leq(y, w)) continue;
        const LaurentPoly& q = acc[y];
        if (!(q.bar() == -q))
          throw Error(Errc::PropertyFailure, "bar-defect is not antisymmetric at y=" + g.element_name(y) +
                                                 ", w=" + g.element_name(w));
        p[y] = q.negative_part();
        if (!p[y].is_zero()) alg.bar_basis(y).add_to_dense(acc, p[y].bar());
      }
      c[w] = HeckeElement::from_dense(p);
    });
  }
  slot.rethrow();
  return c;
}

KLData::SparsePoly to_c_basis(const std::vector<HeckeElement>& c, HeckeElement h) {
  KLData::SparsePoly out;
  if (h.is_zero()) return out;
  std::vector<LaurentPoly> dense(c.size());
  h.add_to_dense(dense);
  // c_w = T~_w + lower terms, so peel from the top.
  for (std::size_t w = c.size(); w-- > 0;) {
    if (dense[w].is_zero()) continue;
    LaurentPoly coeff = std::move(dense[w]);
    dense[w] = LaurentPoly();
    c[w].add_to_dense(dense, -coeff);
    dense[w] = LaurentPoly();
    out.emplace_back(static_cast<int>(w), std::move(coeff));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<KLData::SparsePoly> structure_constants(const HeckeAlgebra& alg, const std::vector<HeckeElement>& c,
                                                    bool parallel) {
  const WeylGroup& g = alg.group();
  const int n = static_cast<int>(g.size());
  std::vector<KLData::SparsePoly> h(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  ExceptionSlot slot;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int y = 0; y < n; ++y) {
    slot.run([&] {
      // T~_u c_y for every u, each from T~_{su} c_y one generator at a time.
      std::vector<HeckeElement> tc(static_cast<std::size_t>(n));
      tc[0] = c[y];
      std::vector<LaurentPoly> dense(static_cast<std::size_t>(n));
      for (int u = 1; u < n; ++u) {
        const int s = g.normal_form(u)[0];
        tc[g.lmul(s, u)].add_to_dense(dense);
        alg.mul_generator_left(s, dense);
        tc[u] = HeckeElement::from_dense(dense);
      }
      for (int x = 0; x < n; ++x) {
        for (const auto& [u, p] : c[x].terms()) tc[u].add_to_dense(dense, p);
        h[static_cast<std::size_t>(x) * n + y] = to_c_basis(c, HeckeElement::from_dense(dense));
      }
    });
  }
  slot.rethrow();
  return h;
}

std::vector<KLData::SparsePoly> structure_constants_reference(const HeckeAlgebra& alg,
                                                              const std::vector<HeckeElement>& c) {
  const std::size_t n = c.size();
  std::vector<KLData::SparsePoly> h(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) h[x * n + y] = to_c_basis(c, alg.mul(c[x], c[y]));
  return h;
}

KLData KLData::compute(const HeckeAlgebra& alg, const KLOptions& opts) {
  KLData kl;
  kl.alg_ = &alg;
  kl.c_ = kl_basis(alg, opts);
  kl.h_ = opts.reference_products ? structure_constants_reference(alg, kl.c_)
                                  : structure_constants(alg, kl.c_, opts.parallel);
  kl.derive();
  return kl;
}

void KLData::derive() {
  const WeylGroup& g = group();
  const int n = static_cast<int>(size());

  a_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& list : h_)
    for (const auto& [z, hp] : list) a_[z] = std::max(a_[z], -hp.min_degree());

  gamma_.assign(h_.size(), {});
  for (std::size_t k = 0; k < h_.size(); ++k) {
    for (const auto& [zinv, hp] : h_[k]) {
      const int z = g.inverse(zinv);
      BigInt coef = hp.coeff(-a_[z]);
      if (coef != 0) gamma_[k].emplace_back(z, static_cast<long>(coef));
    }
    std::sort(gamma_[k].begin(), gamma_[k].end());
  }

  delta_.assign(static_cast<std::size_t>(n), 0);
  n_.assign(static_cast<std::size_t>(n), 0);
  in_D_.assign(static_cast<std::size_t>(n), false);
  for (int z = 0; z < n; ++z) {
    const LaurentPoly t = alg_->tau(c_[z]);
    if (t.is_zero()) throw Error(Errc::PropertyFailure, "tau(c_z) = 0 for z = " + g.element_name(z));
    auto e = extremal(t);
    delta_[z] = -e.max_degree;
    n_[z] = e.max_coeff;
    in_D_[z] = a_[z] == delta_[z];
  }

  nhat_.assign(static_cast<std::size_t>(n), 0);
  for (int z = 0; z < n; ++z) {
    int found = -1, count = 0;
    for (const auto& [d, gv] : gamma(z, g.inverse(z))) {
      if (in_D_[d]) {
        found = d;
        ++count;
      }
    }
    if (count == 1) nhat_[z] = static_cast<int>(n_[found]);
  }
}

LaurentPoly KLData::h(int x, int y, int z) const {
  const auto& list = h_[idx(x, y)];
  auto it = std::lower_bound(list.begin(), list.end(), z, [](const auto& t, int k) { return t.first < k; });
  if (it != list.end() && it->first == z) return it->second;
  return {};
}

long KLData::gamma(int x, int y, int z) const {
  const auto& list = gamma_[idx(x, y)];
  auto it = std::lower_bound(list.begin(), list.end(), z, [](const auto& t, int k) { return t.first < k; });
  if (it != list.end() && it->first == z) return it->second;
  return 0;
}

std::vector<int> KLData::distinguished() const {
  std::vector<int> out;
  for (std::size_t z = 0; z < size(); ++z)
    if (in_D_[z]) out.push_back(static_cast<int>(z));
  return out;
}

// ---------------------------------------------------------------------------
// Properties

std::string property_name(Property p) {
  switch (p) {
    case Property::P2: return "P2";
    case Property::P3: return "P3";
    case Property::P4: return "P4";
    case Property::P5: return "P5";
    case Property::P6: return "P6";
    case Property::P7: return "P7";
    case Property::P8: return "P8";
    case Property::P15: return "P15'";
  }
  return "?";
}

Property parse_property(const std::string& name) {
  for (Property p : all_properties())
    if (name == property_name(p)) return p;
  if (name == "P15") return Property::P15;
  throw Error(Errc::InvalidArgument, "unknown property '" + name + "'");
}

std::vector<Property> all_properties() {
  return {Property::P2, Property::P3, Property::P4, Property::P5,
          Property::P6, Property::P7, Property::P8, Property::P15};
}

namespace {

PropertyResult pass(Property p) { return {property_name(p), true, {}, ""}; }
PropertyResult fail(Property p, std::vector<int> witness, std::string detail) {
  return {property_name(p), false, std::move(witness), std::move(detail)};
}

PropertyResult check_p15(const KLData& kl) {
  const WeylGroup& g = kl.group();
  const int n = static_cast<int>(kl.size());
  // For fixed x, w, x' both sides are functions of y; compare them on all y
  // with a(y) = a(w).
  std::vector<std::vector<int>> witness(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n && witness[x].empty(); ++w) {
      for (int xp = 0; xp < n && witness[x].empty(); ++xp) {
        std::map<int, LaurentPoly> lhs, rhs;
        for (const auto& [zz, gv] : kl.gamma(w, xp)) {
          const int u = g.inverse(zz);
          for (const auto& [y, hp] : kl.h(x, u)) lhs[y] += LaurentPoly(BigInt(gv)) * hp;
        }
        for (const auto& [u, hp] : kl.h(x, w)) {
          for (const auto& [zz, gv] : kl.gamma(u, xp)) rhs[g.inverse(zz)] += LaurentPoly(BigInt(gv)) * hp;
        }
        for (int y = 0; y < n; ++y) {
          if (kl.a(y) != kl.a(w)) continue;
          auto l = lhs.find(y), r = rhs.find(y);
          LaurentPoly lv = l == lhs.end() ? LaurentPoly() : l->second;
          LaurentPoly rv = r == rhs.end() ? LaurentPoly() : r->second;
          if (!(lv == rv)) {
            witness[x] = {x, xp, y, w};
            break;
          }
        }
      }
    }
  }
  for (const auto& wv : witness)
    if (!wv.empty()) return fail(Property::P15, wv, "sum_u h_{x,u,y} gamma_{w,x',u^-1} differs (x, x', y, w)");
  return pass(Property::P15);
}

}  // namespace

PropertyResult check_property(const KLData& kl, Property which) {
  const WeylGroup& g = kl.group();
  const int n = static_cast<int>(kl.size());
  switch (which) {
    case Property::P2:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (const auto& [d, gv] : kl.gamma(x, y))
            if (kl.in_D(d) && x != g.inverse(y)) return fail(which, {x, y, d}, "gamma_{x,y,d} != 0 with x != y^-1");
      return pass(which);
    case Property::P3:
      for (int y = 0; y < n; ++y) {
        int count = 0;
        for (const auto& [d, gv] : kl.gamma(g.inverse(y), y))
          if (kl.in_D(d)) ++count;
        if (count != 1) return fail(which, {y}, std::to_string(count) + " elements d with gamma_{y^-1,y,d} != 0");
      }
      return pass(which);
    case Property::P4:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (const auto& [z, hp] : kl.h(x, y))
            if (kl.a(z) < kl.a(x) || kl.a(z) < kl.a(y)) return fail(which, {x, y, z}, "h_{x,y,z} != 0 but a(z) too small");
      return pass(which);
    case Property::P5:
      for (int y = 0; y < n; ++y)
        for (const auto& [d, gv] : kl.gamma(g.inverse(y), y)) {
          if (!kl.in_D(d)) continue;
          if (BigInt(gv) != kl.n(d) || (gv != 1 && gv != -1))
            return fail(which, {y, d}, "gamma_{y^-1,y,d} = " + std::to_string(gv) + ", n_d = " + kl.n(d).str());
        }
      return pass(which);
    case Property::P6:
      for (int d : kl.distinguished())
        if (g.mult(d, d) != g.identity()) return fail(which, {d}, "d^2 != 1");
      return pass(which);
    case Property::P7:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (const auto& [z, gv] : kl.gamma(x, y))
            if (kl.gamma(y, z, x) != gv) return fail(which, {x, y, z}, "gamma_{x,y,z} != gamma_{y,z,x}");
      return pass(which);
    case Property::P8:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (const auto& [z, gv] : kl.gamma(x, y))
            if (kl.a(x) != kl.a(y) || kl.a(y) != kl.a(z)) return fail(which, {x, y, z}, "a-values differ");
      return pass(which);
    case Property::P15:
      return check_p15(kl);
  }
  return pass(which);
}

// ---------------------------------------------------------------------------
// J ring and phi

JRing::JRing(const KLData& kl) : kl_(&kl), unit_(kl.size()) {
  std::map<int, Element> by_a;
  for (int d : kl.distinguished()) {
    LaurentPoly nd(kl.n(d));
    unit_[d] += nd;
    auto& ta = by_a.try_emplace(kl.a(d), Element(kl.size())).first->second;
    ta[d] += nd;
  }
  ta_.assign(by_a.begin(), by_a.end());
}

JRing::Element JRing::t(int w) const {
  Element e(size());
  e[w] = 1;
  return e;
}

JRing::Element JRing::mul(const Element& x, const Element& y) const {
  const WeylGroup& g = kl_->group();
  Element out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < size(); ++j) {
      if (y[j].is_zero()) continue;
      const auto& list = kl_->gamma(static_cast<int>(i), static_cast<int>(j));
      if (list.empty()) continue;
      LaurentPoly xy = x[i] * y[j];
      for (const auto& [z, gv] : list) out[g.inverse(z)] += LaurentPoly(BigInt(gv)) * xy;
    }
  }
  return out;
}

std::vector<JRing::Element> phi_cdagger(const KLData& kl) {
  const std::size_t n = kl.size();
  const std::vector<int> D = kl.distinguished();
  std::vector<JRing::Element> out(n, JRing::Element(n));
  for (std::size_t w = 0; w < n; ++w) {
    for (int d : D) {
      for (const auto& [z, hp] : kl.h(static_cast<int>(w), d)) {
        if (kl.a(z) != kl.a(d)) continue;
        if (kl.nhat(z) == 0)
          throw Error(Errc::PropertyFailure, "n^_z undefined for z = " + kl.group().element_name(z));
        out[w][z] += LaurentPoly(kl.nhat(z)) * hp;
      }
    }
  }
  return out;
}

std::vector<std::vector<LaurentPoly>> tbasis_in_cdagger(const KLData& kl) {
  const WeylGroup& g = kl.group();
  const int n = static_cast<int>(kl.size());
  // c_w^dagger = j(c_w) = sum_y bar(p_{y,w}) (-1)^{l(y)} T~_y: upper
  // triangular with +-1 on the diagonal.  Invert column by column.
  std::vector<std::vector<LaurentPoly>> Q(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int w = 0; w < n; ++w)
    for (const auto& [y, p] : kl.c(w).terms()) Q[y][w] = LaurentPoly(sign_of_length(g.length(y))) * p.bar();

  std::vector<std::vector<LaurentPoly>> M(static_cast<std::size_t>(n), std::vector<LaurentPoly>(static_cast<std::size_t>(n)));
  for (int col = 0; col < n; ++col) {
    for (int x = col; x >= 0; --x) {
      LaurentPoly r = x == col ? LaurentPoly(1) : LaurentPoly();
      for (int k = x + 1; k <= col; ++k)
        if (!Q[x][k].is_zero() && !M[k][col].is_zero()) r -= Q[x][k] * M[k][col];
      M[x][col] = LaurentPoly(sign_of_length(g.length(x))) * r;
    }
  }
  return M;
}

std::vector<std::vector<LaurentPoly>> phi_matrix(const KLData& kl) {
  const std::size_t n = kl.size();
  const auto phi = phi_cdagger(kl);
  const auto M = tbasis_in_cdagger(kl);
  std::vector<std::vector<LaurentPoly>> B(n, std::vector<LaurentPoly>(n));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t w = 0; w < n; ++w) {
      if (M[w][y].is_zero()) continue;
      for (std::size_t x = 0; x < n; ++x)
        if (!phi[w][x].is_zero()) B[x][y] += M[w][y] * phi[w][x];
    }
  return B;
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

PropertyResult check_bimodule(const KLData& kl) {
  const WeylGroup& g = kl.group();
  const int n = static_cast<int>(kl.size());
  const auto phi = phi_cdagger(kl);
  // c_x^dagger c_w^dagger = sum_z h_{x,w,z} c_z^dagger since dagger is an
  // algebra map, so the left side is read off h directly.
  for (int x = 0; x < n; ++x) {
    for (int w = 0; w < n; ++w) {
      const int a = kl.a(w);
      std::vector<LaurentPoly> lhs(static_cast<std::size_t>(n)), rhs(static_cast<std::size_t>(n));
      for (const auto& [z, hp] : kl.h(x, w))
        if (kl.a(z) == a) lhs[z] = hp;
      for (int xp = 0; xp < n; ++xp) {
        if (phi[x][xp].is_zero()) continue;
        for (const auto& [zz, gv] : kl.gamma(xp, w)) {
          const int z = g.inverse(zz);
          if (kl.a(z) != a) continue;
          rhs[z] += LaurentPoly(BigInt(gv) * kl.nhat(w) * kl.nhat(z)) * phi[x][xp];
        }
      }
      for (int z = 0; z < n; ++z)
        if (!(lhs[z] == rhs[z]))
          return {"bimodule", false, {x, w, z}, "c_x^dagger.[c_w^dagger] != phi(c_x^dagger) * [c_w^dagger] at z"};
    }
  }
  return {"bimodule", true, {}, ""};
}

}  // namespace hecke
