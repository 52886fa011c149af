#include "hecke/basicsets.hpp"

#include "hecke/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace hecke {

namespace {

int mod(long x, int m) { return static_cast<int>(((x % m) + m) % m); }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool xi_a_is_one(const SpecParams& p) { return mod(p.a, p.xi_order) == 0; }

// xi^b = -1, decided on exponents: -1 = xi^{m/2} when m is even.
bool xi_b_is_minus_one(const SpecParams& p) { return p.xi_order % 2 == 0 && mod(p.b, p.xi_order) == p.xi_order / 2; }

std::vector<Partition> regular_partitions(int n, EValue e) {
  std::vector<Partition> out;
  for (const auto& nu : partitions_of(n))
    if (e_regular(nu, e)) out.push_back(nu);
  return out;
}

std::vector<Bipartition> regular_pairs(int n, EValue e) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& x : regular_partitions(k, e))
      for (const auto& y : regular_partitions(n - k, e)) out.push_back({x, y});
  return out;
}

std::vector<Bipartition> crystal_level(int l, std::vector<int> u, NodeOrder order, int n) {
  const auto g = crystal(FockParams{l, std::move(u), order}, n);
  std::vector<Bipartition> out;
  for (const auto& m : g.levels.back()) out.push_back({m.comps[0], m.comps[1]});
  return out;
}

// Lambda_{2,n} from the Specht module theory, valid for any parameters.
std::vector<Bipartition> kleshchev_set(const SpecParams& p, int n) {
  const FnZero fz = fn_zero(p, n);
  const EValue e = e_value(p);
  if (!fz.zero) return regular_pairs(n, e);
  if (xi_a_is_one(p)) {
    std::vector<Bipartition> out;
    for (const auto& x : regular_partitions(n, e)) out.push_back({x, Partition{}});
    return out;
  }
  const int l = *e.value;
  return crystal_level(l, {0, mod(*fz.d, l)}, NodeOrder::ARIKI, n);
}

DecompRow parse_row(const nlohmann::json& j, const std::string& type, int n, std::size_t width) {
  DecompRow row;
  const auto& lab = j.at("label");
  if (type == "B") {
    if (!lab.is_array() || lab.size() != 2) throw Error(Errc::SchemaError, "type B labels are pairs of partitions");
    Bipartition bp{Partition(lab[0].get<std::vector<int>>()), Partition(lab[1].get<std::vector<int>>())};
    if (bp.size() != n) throw Error(Errc::SchemaError, "label " + to_string(bp) + " is not of size n");
    row.label = bp;
  } else if (type == "A") {
    Partition nu(lab.get<std::vector<int>>());
    if (nu.size() != n) throw Error(Errc::SchemaError, "label " + to_string(nu) + " is not of size n");
    row.label = nu;
  } else {
    const auto name = lab.get<std::string>();
    parse_g2(name);
    row.label = name;
  }
  if (j.contains("alpha")) {
    row.alpha = j["alpha"].get<long>();
    if (*row.alpha < 0) throw Error(Errc::SchemaError, "alpha must be non-negative");
  }
  if (j.contains("dim")) {
    row.dim = j["dim"].get<long>();
    if (*row.dim < 1) throw Error(Errc::SchemaError, "dim must be positive");
  }
  row.entries = j.at("entries").get<std::vector<long>>();
  if (row.entries.size() != width && width != 0) throw Error(Errc::SchemaError, "rows have different lengths");
  for (long x : row.entries)
    if (x < 0) throw Error(Errc::SchemaError, "decomposition numbers are non-negative");
  return row;
}

template <class T>
const T* label_as(const DecompRow& r) {
  return std::get_if<T>(&r.label);
}

}  // namespace

void SpecParams::validate() const {
  if (characteristic != 0 && !is_prime(characteristic))
    throw Error(Errc::InvalidArgument, "characteristic must be 0 or a prime");
  if (xi_order < 1) throw Error(Errc::InvalidArgument, "xi order must be at least 1");
  if (characteristic > 0 && xi_order % characteristic == 0)
    throw Error(Errc::InvalidArgument, "no element of order " + std::to_string(xi_order) + " in characteristic " +
                                           std::to_string(characteristic));
  if (a < 0 || b < 0) throw Error(Errc::InvalidArgument, "weights must be non-negative");
}

EValue e_value(const SpecParams& p) {
  p.validate();
  if (!xi_a_is_one(p)) return EValue::finite(p.xi_order / std::gcd(p.xi_order, p.a));
  return p.characteristic > 0 ? EValue::finite(p.characteristic) : EValue::infinity();
}

FnZero fn_zero(const SpecParams& p, int n) {
  p.validate();
  if (p.characteristic == 2) throw Error(Errc::CharTwoUnsupported, "f_n is only classified away from characteristic 2");
  if (p.xi_order % 2 != 0) return {};
  const int half = p.xi_order / 2;
  for (int k = 0; k < n; ++k)
    for (int d : {k, -k})
      if (mod(p.b + static_cast<long>(p.a) * d, p.xi_order) == half) return {true, d};
  return {};
}

std::vector<Partition> basic_set_sym(const SpecParams& p, int n) {
  if (p.a <= 0) throw Error(Errc::InvalidArgument, "type A basic sets need a > 0");
  return regular_partitions(n, e_value(p));
}

BasicSetB basic_set_B(const SpecParams& p, int n) {
  p.validate();
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
  if (p.characteristic == 2) throw Error(Errc::CharTwoUnsupported, "type B basic sets are not classified in characteristic 2");
  BasicSetB out;
  const FnZero fz = fn_zero(p, n);
  if (static_cast<long>(n - 1) * p.a > 0 && p.b > static_cast<long>(n - 1) * p.a) {
    out = {kleshchev_set(p, n), "asymptotic/DJM"};
  } else if (!fz.zero) {
    out = {regular_pairs(n, e_value(p)), "DJ-Morita"};
  } else if (xi_a_is_one(p) && xi_b_is_minus_one(p)) {
    out = {kleshchev_set(p, n), "DJ-extension"};
  } else if (!xi_a_is_one(p) && (p.a == p.b || p.b == 0)) {
    const int l = *e_value(p).value;
    if (p.a == p.b)
      out = {crystal_level(l, {1, l / 2}, NodeOrder::FLOTW, n), "Jacon-equal"};
    else
      out = {crystal_level(l, {0, l / 2}, NodeOrder::FLOTW, n), "Jacon-b0"};
  } else {
    throw Error(Errc::CaseNotCovered, "f_n(a,b) = 0 with a=" + std::to_string(p.a) + ", b=" + std::to_string(p.b) +
                                          " is outside the equal, b=0 and asymptotic cases");
  }
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

std::string to_string(const LabelD& x) {
  if (x.sign != 0) return "[" + to_string(x.first) + "," + (x.sign > 0 ? "+" : "-") + "]";
  return "[" + to_string(x.first) + "," + to_string(x.second) + "]";
}

std::vector<LabelD> basic_set_D(const SpecParams& p, int n) {
  p.validate();
  if (p.xi_order < 2 || p.xi_order % 2 != 0)
    throw Error(Errc::OddOrderUnsupported, "type D basic sets need xi of even order");
  if (p.a != 1 || p.b != 0) throw Error(Errc::InvalidArgument, "type D uses a = 1, b = 0");
  if (n < 2) throw Error(Errc::InvalidArgument, "type D needs n >= 2");
  const int l = p.xi_order;
  std::set<LabelD> out;
  for (const auto& bp : crystal_level(l, {0, l / 2}, NodeOrder::FLOTW, n))
    if (bp.first != bp.second) out.insert({std::max(bp.first, bp.second), std::min(bp.first, bp.second), 0});
  if (n % 2 == 0 && l / 2 >= 2)
    for (const auto& nu : regular_partitions(n / 2, EValue::finite(l / 2))) {
      out.insert({nu, nu, 1});
      out.insert({nu, nu, -1});
    }
  return {out.begin(), out.end()};
}

std::string to_string(const RowLabel& x) {
  return std::visit([](const auto& v) -> std::string {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>)
      return v;
    else
      return to_string(v);
  }, x);
}

DecompMatrix DecompMatrix::parse(const std::string& json_text) {
  DecompMatrix d;
  try {
    const auto j = nlohmann::json::parse(json_text);
    d.type = j.at("type").get<std::string>();
    if (d.type != "A" && d.type != "B" && d.type != "G2") throw Error(Errc::SchemaError, "unknown type '" + d.type + "'");
    d.n = j.at("n").get<int>();
    d.params = {j.at("char").get<int>(), j.at("xi_order").get<int>(), j.at("a").get<int>(), j.at("b").get<int>()};
    d.params.validate();
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) throw Error(Errc::SchemaError, "rows must be a non-empty array");
    for (const auto& r : rows) d.rows.push_back(parse_row(r, d.type, d.n, d.rows.empty() ? 0 : d.columns()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SchemaError, e.what());
  } catch (const Error& e) {
    if (e.code() == Errc::SchemaError) throw;
    throw Error(Errc::SchemaError, e.what());
  }
  if (d.columns() == 0) throw Error(Errc::SchemaError, "no columns");
  for (std::size_t c = 0; c < d.columns(); ++c)
    if (std::all_of(d.rows.begin(), d.rows.end(), [&](const DecompRow& r) { return r.entries[c] == 0; }))
      throw Error(Errc::SchemaError, "column " + std::to_string(c + 1) + " is zero");
  return d;
}

std::string DecompMatrix::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = type;
  j["n"] = n;
  j["a"] = params.a;
  j["b"] = params.b;
  j["xi_order"] = params.xi_order;
  j["char"] = params.characteristic;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    if (const auto* bp = label_as<Bipartition>(r))
      row["label"] = {bp->first.parts, bp->second.parts};
    else if (const auto* nu = label_as<Partition>(r))
      row["label"] = nu->parts;
    else
      row["label"] = std::get<std::string>(r.label);
    if (r.alpha) row["alpha"] = *r.alpha;
    if (r.dim) row["dim"] = *r.dim;
    row["entries"] = r.entries;
    j["rows"].push_back(row);
  }
  return j.dump(2);
}

BasicSetResult verify_decomp(const DecompMatrix& d) {
  for (const auto& r : d.rows)
    if (!r.alpha) throw Error(Errc::MissingAlpha, "row " + to_string(r.label) + " has no alpha");
  BasicSetResult res;
  const std::size_t cols = d.columns();
  for (std::size_t c = 0; c < cols; ++c) {
    long best = -1;
    for (const auto& r : d.rows)
      if (r.entries[c] != 0 && (best < 0 || *r.alpha < best)) best = *r.alpha;
    res.breve_alpha.push_back(best);
  }
  std::vector<bool> used(d.rows.size(), false);
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < d.rows.size(); ++i)
      if (d.rows[i].entries[c] != 0 && *d.rows[i].alpha == res.breve_alpha[c]) cand.push_back(i);
    if (cand.size() != 1 || d.rows[cand[0]].entries[c] != 1 || used[cand[0]]) {
      res.column_row.clear();
      res.failing_column = c;
      res.candidates = cand;
      return res;
    }
    used[cand[0]] = true;
    res.column_row.push_back(cand[0]);
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return res.breve_alpha[x] < res.breve_alpha[y]; });
  for (std::size_t c : order) res.rows.push_back(res.column_row[c]);
  res.exists = true;
  return res;
}

DominanceResult check_dominance_triangularity(const DecompMatrix& d, const std::vector<std::size_t>& column_row) {
  if (column_row.size() != d.columns()) throw Error(Errc::InvalidArgument, "need one basic-set row per column");
  auto leq = [&](const DecompRow& x, const DecompRow& y) {
    if (const auto* bx = label_as<Bipartition>(x)) return dominance_leq(*bx, std::get<Bipartition>(y.label));
    if (const auto* px = label_as<Partition>(x)) return dominance_leq(*px, std::get<Partition>(y.label));
    throw Error(Errc::InvalidArgument, "dominance needs partition or bipartition labels");
  };
  for (std::size_t c = 0; c < column_row.size(); ++c) {
    const DecompRow& top = d.rows.at(column_row[c]);
    if (top.entries[c] != 1) return {false, column_row[c], c};
    for (std::size_t i = 0; i < d.rows.size(); ++i)
      if (d.rows[i].entries[c] != 0 && !leq(d.rows[i], top)) return {false, i, c};
  }
  return {};
}

}  // namespace hecke
