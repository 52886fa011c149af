#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

enum class Family { A, B, D, G2, F4 };

struct CoxeterType {
  Family family;
  int rank;  // number of generators

  static CoxeterType parse(const std::string& family, int rank);
};

std::string family_name(Family f);

using Word = std::vector<int>;

// Weight function L on the generators, L(s) >= 0.
struct WeightFunction {
  std::vector<int> values;
};

// A finite Weyl group with every element enumerated.  Elements are the
// integers 0..size()-1, sorted by (length, normal form); 0 is the identity
// and size()-1 the longest element.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 2000;

  static WeylGroup build(CoxeterType ctype, std::size_t cap = kDefaultCap);

  const CoxeterType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t size() const { return length_.size(); }
  int identity() const { return 0; }
  int longest() const { return static_cast<int>(size()) - 1; }
  int max_length() const { return length_.back(); }

  const std::string& generator_name(int s) const { return names_[s]; }
  int generator_index(const std::string& name) const;  // -1 if unknown
  int coxeter_m(int s, int t) const { return m_[s][t]; }
  int generator(int s) const { return lmul_[s][0]; }

  int length(int w) const { return length_[w]; }
  const Word& normal_form(int w) const { return word_[w]; }
  int inverse(int w) const { return inv_[w]; }
  int lmul(int s, int w) const { return lmul_[s][w]; }  // s*w
  int rmul(int w, int s) const { return rmul_[s][w]; }  // w*s
  int mult(int w, int x) const;
  int from_word(const Word& word) const;

  bool is_left_descent(int s, int w) const { return lmul_[s][w] < w; }
  bool is_right_descent(int w, int s) const { return rmul_[s][w] < w; }
  std::vector<int> descents_left(int w) const;
  std::vector<int> descents_right(int w) const;

  bool bruhat_leq(int y, int w) const {
    return (bruhat_[static_cast<std::size_t>(w) * words_per_row_ + (y >> 6)] >> (y & 63)) & 1U;
  }

  long lweight(int w, const WeightFunction& L) const;

  // "t.s1.s2"; identity renders as "1".
  std::string element_name(int w) const;
  int parse_element(const std::string& name) const;  // throws InvalidArgument

 private:
  CoxeterType type_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> m_;
  std::vector<int> length_;
  std::vector<Word> word_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> lmul_, rmul_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bruhat_;
};

// Classical order of the group, computed without enumeration.
std::size_t classical_order(CoxeterType ctype);

// L for the two-parameter families: B_n gets L(t)=b, L(s_i)=a; G2 gets
// L(s)=a, L(t)=b; F4 gets a on s1,s2 and b on s3,s4.  A and D use a only.
WeightFunction two_parameter_weight(const WeylGroup& g, int a, int b);
WeightFunction length_weight(const WeylGroup& g);

// True iff L agrees on generators joined by a path of odd bonds.
bool validate_weight(const WeylGroup& g, const WeightFunction& L);

}  // namespace hecke
