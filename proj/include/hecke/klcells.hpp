#pragma once

#include "hecke/coxeter.hpp"
#include "hecke/laurent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

// Element of H written in the rescaled basis T~_w.  Terms sorted by element
// index, no zero coefficients.
class HeckeElement {
 public:
  using Term = std::pair<int, LaurentPoly>;

  HeckeElement() = default;
  static HeckeElement basis(int w, LaurentPoly coeff = 1);
  static HeckeElement from_dense(std::vector<LaurentPoly>& dense);  // consumes dense

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(int w) const;
  void add_to_dense(std::vector<LaurentPoly>& dense, const LaurentPoly& scale = 1) const;

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  std::vector<Term> terms_;
};

class HeckeAlgebra {
 public:
  // Requires L(s) > 0 and L constant on conjugate generators.
  HeckeAlgebra(const WeylGroup& group, WeightFunction L);

  const WeylGroup& group() const { return *group_; }
  const WeightFunction& weight() const { return L_; }
  std::size_t size() const { return group_->size(); }
  // v^{L(s)} - v^{-L(s)}
  const LaurentPoly& quad(int s) const { return quad_[s]; }

  HeckeElement T(int w) const { return HeckeElement::basis(w); }
  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const;
  void mul_generator_left(int s, std::vector<LaurentPoly>& dense) const;
  void mul_basis_left(int w, std::vector<LaurentPoly>& dense) const;  // T~_w * dense

  HeckeElement bar(const HeckeElement& h) const;
  HeckeElement jmap(const HeckeElement& h) const;
  HeckeElement dagger(const HeckeElement& h) const;
  LaurentPoly tau(const HeckeElement& h) const { return h.coeff(0); }

  // bar(T~_w) in the T~ basis.
  const HeckeElement& bar_basis(int w) const { return bar_cols_[w]; }

  std::string render(const HeckeElement& h) const;

 private:
  const WeylGroup* group_;
  WeightFunction L_;
  std::vector<LaurentPoly> quad_;
  std::vector<HeckeElement> bar_cols_;
};

struct KLOptions {
  std::size_t cap = 400;
  bool parallel = true;
  // Solve for p_{y,w} along a random linear extension of the Bruhat order
  // instead of the index order; used to test uniqueness.
  std::optional<std::uint64_t> shuffle_seed;
  // Use the naive product for structure constants.
  bool reference_products = false;
};

// Kazhdan-Lusztig basis of H with everything derived from it.
class KLData {
 public:
  using SparsePoly = std::vector<std::pair<int, LaurentPoly>>;
  using SparseInt = std::vector<std::pair<int, long>>;

  static KLData compute(const HeckeAlgebra& alg, const KLOptions& opts = {});

  const HeckeAlgebra& algebra() const { return *alg_; }
  const WeylGroup& group() const { return alg_->group(); }
  std::size_t size() const { return c_.size(); }

  const HeckeElement& c(int w) const { return c_[w]; }
  LaurentPoly p(int y, int w) const { return c_[w].coeff(y); }

  // h_{x,y,z} as a sparse list over z.
  const SparsePoly& h(int x, int y) const { return h_[idx(x, y)]; }
  LaurentPoly h(int x, int y, int z) const;
  // gamma_{x,y,z} as a sparse list over z.
  const SparseInt& gamma(int x, int y) const { return gamma_[idx(x, y)]; }
  long gamma(int x, int y, int z) const;

  int a(int z) const { return a_[z]; }
  int delta(int z) const { return delta_[z]; }
  const BigInt& n(int z) const { return n_[z]; }
  bool in_D(int z) const { return in_D_[z]; }
  std::vector<int> distinguished() const;
  // n^_z, or 0 when no unique d exists (P3 fails).
  int nhat(int z) const { return nhat_[z]; }

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * c_.size() + static_cast<std::size_t>(y); }
  void derive();

  const HeckeAlgebra* alg_ = nullptr;
  std::vector<HeckeElement> c_;
  std::vector<SparsePoly> h_;
  std::vector<SparseInt> gamma_;
  std::vector<int> a_, delta_, nhat_;
  std::vector<BigInt> n_;
  std::vector<bool> in_D_;
};

std::vector<HeckeElement> kl_basis(const HeckeAlgebra& alg, const KLOptions& opts = {});

// h_{x,y,.} for all (x,y), row-major in x.  The parallel kernel builds
// T~_u c_y for every u by walking reduced words; the serial reference
// multiplies c_x c_y directly.  Both re-expand in the c basis.
std::vector<KLData::SparsePoly> structure_constants(const HeckeAlgebra& alg, const std::vector<HeckeElement>& c,
                                                    bool parallel = true);
std::vector<KLData::SparsePoly> structure_constants_reference(const HeckeAlgebra& alg,
                                                              const std::vector<HeckeElement>& c);

// Rewrites h (T~ basis) in the c basis.
KLData::SparsePoly to_c_basis(const std::vector<HeckeElement>& c, HeckeElement h);

enum class Property { P2, P3, P4, P5, P6, P7, P8, P15 };

std::string property_name(Property p);
Property parse_property(const std::string& name);  // "P2".."P8", "P15", "P15'"
std::vector<Property> all_properties();

struct PropertyResult {
  std::string name;
  bool pass;
  std::vector<int> witness;  // first violating tuple of element indices
  std::string detail;
};

PropertyResult check_property(const KLData& kl, Property which);

// h.[c_w^dagger] = phi(h) * [c_w^dagger] in H^a, tested on h = c_x^dagger.
PropertyResult check_bimodule(const KLData& kl);

// Lusztig's ring J over A: elements are coefficient vectors over t_w.
class JRing {
 public:
  using Element = std::vector<LaurentPoly>;

  explicit JRing(const KLData& kl);

  std::size_t size() const { return kl_->size(); }
  Element t(int w) const;
  Element mul(const Element& x, const Element& y) const;
  const Element& unit() const { return unit_; }
  // t_a for every a-value that occurs on D, keyed by a.
  const std::vector<std::pair<int, Element>>& idempotents() const { return ta_; }

 private:
  const KLData* kl_;
  Element unit_;
  std::vector<std::pair<int, Element>> ta_;
};

// phi(c_w^dagger) for each w.  Throws PropertyFailure when n^ is undefined.
std::vector<JRing::Element> phi_cdagger(const KLData& kl);
// T~_y = sum_x M[x][y] c_x^dagger.
std::vector<std::vector<LaurentPoly>> tbasis_in_cdagger(const KLData& kl);
// B[x][y] = coefficient of t_x in phi(T~_y).
std::vector<std::vector<LaurentPoly>> phi_matrix(const KLData& kl);

// Exact determinant by fraction-free elimination.
LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m);

}  // namespace hecke
