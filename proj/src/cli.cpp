#include "hecke/cli.hpp"

#include "hecke/basicsets.hpp"
#include "hecke/error.hpp"
#include "hecke/fixtures.hpp"
#include "hecke/fock.hpp"
#include "hecke/klcells.hpp"
#include "hecke/schur.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hecke {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

json to_json(const Partition& p) { return p.parts; }
json to_json(const Bipartition& b) { return json::array({b.first.parts, b.second.parts}); }

json to_json(const RowLabel& x) {
  return std::visit([](const auto& v) -> json {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>)
      return v;
    else
      return to_json(v);
  }, x);
}

std::string big(const BigInt& x) { return x.str(); }

// --- crystal ---------------------------------------------------------------

struct CrystalArgs {
  int l = 2, r = 1, n = 0;
  std::vector<int> u;
  std::string order = "flotw", format = "dot";
};

int run_crystal(const CrystalArgs& a, std::ostream& out) {
  FockParams p{a.l, a.u.empty() ? std::vector<int>(static_cast<std::size_t>(a.r), 0) : a.u, parse_order(a.order)};
  if (p.r() != a.r) throw Error(Errc::InvalidArgument, "--u needs exactly r values");
  const auto g = crystal(p, a.n);
  out << (a.format == "json" ? g.to_json() + "\n" : g.to_dot());
  return kOk;
}

// --- basicset --------------------------------------------------------------

struct BasicArgs {
  std::string type = "B", format = "text";
  int n = 1, a = 1, b = 0, xi_order = 1, characteristic = 0;
};

int run_basicset(const BasicArgs& a, std::ostream& out) {
  const SpecParams p{a.characteristic, a.xi_order, a.a, a.b};
  std::string tag;
  std::vector<std::string> text;
  json labels = json::array();
  if (a.type == "A") {
    tag = "e-regular";
    for (const auto& nu : basic_set_sym(p, a.n)) {
      text.push_back(to_string(nu));
      labels.push_back(to_json(nu));
    }
  } else if (a.type == "B") {
    const auto s = basic_set_B(p, a.n);
    tag = s.tag;
    for (const auto& bp : s.labels) {
      text.push_back(to_string(bp));
      labels.push_back(to_json(bp));
    }
  } else {
    tag = "Jacon-D";
    for (const auto& x : basic_set_D(p, a.n)) {
      text.push_back(to_string(x));
      labels.push_back(json::array({x.first.parts, x.sign == 0 ? json(x.second.parts) : json(x.sign > 0 ? "+" : "-")}));
    }
  }
  if (a.format == "json") {
    json j;
    j["type"] = a.type;
    j["n"] = a.n;
    j["e"] = a.type == "D" ? json(nullptr) : json(to_string(e_value(p)));
    j["tag"] = tag;
    j["labels"] = labels;
    out << j.dump(2) << "\n";
  } else {
    out << "tag: " << tag << "\n";
    for (const auto& t : text) out << t << "\n";
  }
  return kOk;
}

// --- schur -----------------------------------------------------------------

struct SchurArgs {
  std::string type = "B", format = "text", lambda, label;
  int n = 1, a = 1, b = 1;
};

struct SchurRow {
  std::string label;
  json label_json;
  std::string dim;
  InvariantPair inv;
};

int run_schur(const SchurArgs& a, std::ostream& out) {
  std::vector<SchurRow> rows;
  std::optional<LaurentPoly> poly;
  std::string poly_label;
  if (a.type == "B") {
    if (!a.lambda.empty()) {
      const Bipartition lam = parse_bipartition(a.lambda);
      poly = schur_element_B(lam, a.a, a.b);
      poly_label = to_string(lam);
      rows.push_back({to_string(lam), to_json(lam), big(dim_B(lam)), invariants_B(lam, a.a, a.b)});
    } else {
      for (const auto& lam : bipartitions_of(a.n))
        rows.push_back({to_string(lam), to_json(lam), big(dim_B(lam)), invariants_B(lam, a.a, a.b)});
    }
  } else if (a.type == "A") {
    std::vector<Partition> parts = a.lambda.empty() ? partitions_of(a.n) : std::vector<Partition>{parse_partition(a.lambda)};
    for (const auto& nu : parts) rows.push_back({to_string(nu), to_json(nu), big(standard_tableaux(nu)), invariants_A(nu, a.a)});
  } else if (a.type == "D") {
    for (int k = a.n; 2 * k >= a.n; --k)
      for (const auto& x : partitions_of(k))
        for (const auto& y : partitions_of(a.n - k)) {
          if (2 * k == a.n && y > x) continue;
          const std::string name = "[" + to_string(x) + "," + to_string(y) + "]";
          BigInt dim = dim_B({x, y});
          if (x == y) {
            const InvariantPair inv = typeD_split_invariants(x, a.a);
            for (const char* s : {"+", "-"})
              rows.push_back({"[" + to_string(x) + "," + s + "]", json::array({x.parts, s}), big(dim / 2), inv});
          } else {
            rows.push_back({name, json::array({x.parts, y.parts}), big(dim), typeD_invariants(x, y, a.a)});
          }
        }
  } else if (a.type == "G2") {
    for (G2Char e : g2_characters()) {
      if (!a.label.empty() && g2_name(e) != a.label) continue;
      rows.push_back({g2_name(e), g2_name(e), std::to_string(g2_dim(e)), g2_invariants(e, a.a, a.b)});
      if (!a.label.empty()) {
        poly = g2_schur(e, a.a, a.b);
        poly_label = g2_name(e);
      }
    }
    if (rows.empty()) parse_g2(a.label);
  } else {
    for (const auto& name : f4_characters()) {
      if (!a.label.empty() && name != a.label) continue;
      rows.push_back({name, name, name.substr(0, name.find('_')), f4_invariants(name, a.a, a.b)});
    }
    if (rows.empty()) throw Error(Errc::InvalidArgument, "unknown F4 character '" + a.label + "'");
  }

  if (a.format == "json") {
    json j;
    j["type"] = a.type;
    if (a.type == "A" || a.type == "B" || a.type == "D") j["n"] = a.n;
    j["a"] = a.a;
    if (a.type != "A" && a.type != "D") j["b"] = a.b;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back({{"label", r.label_json}, {"dim", r.dim}, {"f", r.inv.f}, {"alpha", r.inv.alpha}});
    if (poly) j["schur_element"] = {{"label", poly_label}, {"poly", to_string(*poly)}};
    out << j.dump(2) << "\n";
  } else {
    std::size_t width = 5;
    for (const auto& r : rows) width = std::max(width, r.label.size());
    out << std::left << std::setw(static_cast<int>(width)) << "label" << "  dim  f  alpha\n";
    for (const auto& r : rows)
      out << std::setw(static_cast<int>(width)) << r.label << "  " << r.dim << "  " << r.inv.f << "  " << r.inv.alpha << "\n";
    if (poly) out << "c_" << poly_label << " = " << to_string(*poly) << "\n";
  }
  return kOk;
}

// --- kl --------------------------------------------------------------------

struct KLArgs {
  std::string type = "A", format = "text";
  int rank = 2;
  std::vector<int> weights{1};
  std::vector<std::string> emit, check;
  bool force = false;
};

int run_kl(const KLArgs& a, std::ostream& out) {
  const auto g = WeylGroup::build(CoxeterType::parse(a.type, a.rank));
  if (a.weights.empty() || a.weights.size() > 2) throw Error(Errc::InvalidArgument, "--weights takes a or a,b");
  const WeightFunction L = two_parameter_weight(g, a.weights[0], a.weights.size() > 1 ? a.weights[1] : a.weights[0]);
  const HeckeAlgebra alg(g, L);
  KLOptions opts;
  if (a.force) opts.cap = g.size();
  const KLData kl = KLData::compute(alg, opts);
  const auto name = [&](int w) { return g.element_name(w); };
  const int size = static_cast<int>(g.size());

  json j;
  j["type"] = a.type;
  j["rank"] = a.rank;
  j["weights"] = L.values;
  j["size"] = size;
  std::ostringstream text;
  for (const auto& what : a.emit) {
    if (what == "cbasis") {
      json rows = json::array();
      for (int w = 0; w < size; ++w) {
        rows.push_back({{"w", name(w)}, {"c", alg.render(kl.c(w))}});
        text << "c_" << name(w) << " = " << alg.render(kl.c(w)) << "\n";
      }
      j["cbasis"] = rows;
    } else if (what == "afn") {
      json rows = json::object();
      for (int w = 0; w < size; ++w) {
        rows[name(w)] = kl.a(w);
        text << "a(" << name(w) << ") = " << kl.a(w) << "\n";
      }
      j["afn"] = rows;
    } else if (what == "gamma") {
      json rows = json::array();
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
          for (const auto& [z, c] : kl.gamma(x, y)) {
            rows.push_back({{"x", name(x)}, {"y", name(y)}, {"z", name(z)}, {"gamma", c}});
            text << "gamma(" << name(x) << ", " << name(y) << ", " << name(z) << ") = " << c << "\n";
          }
      j["gamma"] = rows;
    } else if (what == "dinv") {
      json rows = json::array();
      for (int d : kl.distinguished()) {
        rows.push_back({{"d", name(d)}, {"a", kl.a(d)}, {"n", big(kl.n(d))}});
        text << "D: " << name(d) << "  a=" << kl.a(d) << "  n=" << big(kl.n(d)) << "\n";
      }
      j["dinv"] = rows;
    } else if (what == "jring") {
      const JRing J(kl);
      json rows = json::array();
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
          const auto prod = J.mul(J.t(x), J.t(y));
          json terms = json::array();
          std::string line;
          for (int z = 0; z < size; ++z)
            if (!prod[static_cast<std::size_t>(z)].is_zero()) {
              terms.push_back({{"z", name(z)}, {"coeff", to_string(prod[static_cast<std::size_t>(z)])}});
              line += (line.empty() ? "" : " + ") + to_string(prod[static_cast<std::size_t>(z)]) + "·t_" + name(z);
            }
          if (terms.empty()) continue;
          rows.push_back({{"x", name(x)}, {"y", name(y)}, {"product", terms}});
          text << "t_" << name(x) << " t_" << name(y) << " = " << line << "\n";
        }
      j["jring"] = rows;
    } else if (what == "phimatrix") {
      const auto m = phi_matrix(kl);
      json rows = json::array();
      for (const auto& row : m) {
        json r = json::array();
        for (const auto& c : row) r.push_back(to_string(c));
        rows.push_back(r);
      }
      const std::string det = to_string(determinant(m));
      j["phimatrix"] = {{"rows", rows}, {"determinant", det}};
      text << "det(phi) = " << det << "\n";
    } else {
      throw Error(Errc::InvalidArgument, "unknown --emit value '" + what + "'");
    }
  }

  bool all_pass = true;
  if (!a.check.empty()) {
    json checks = json::array();
    for (const auto& c : a.check) {
      const PropertyResult r = c == "bimodule" ? check_bimodule(kl) : check_property(kl, parse_property(c));
      all_pass = all_pass && r.pass;
      json witness = json::array();
      for (int w : r.witness) witness.push_back(name(w));
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"witness", witness}, {"detail", r.detail}});
      text << r.name << ": " << (r.pass ? "pass" : "FAIL");
      if (!r.pass) {
        text << " at";
        for (int w : r.witness) text << " " << name(w);
        if (!r.detail.empty()) text << " (" << r.detail << ")";
      }
      text << "\n";
    }
    j["checks"] = checks;
  }
  if (a.format == "json")
    out << j.dump(2) << "\n";
  else
    out << text.str();
  return all_pass ? kOk : kCheckFailed;
}

// --- verify-decomp ---------------------------------------------------------

struct VerifyArgs {
  std::string file, fixture_name, format = "text";
  bool dominance = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::string text;
  if (!a.fixture_name.empty()) {
    text = std::string(fixture(a.fixture_name));
  } else {
    std::ifstream in(a.file);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + a.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const DecompMatrix d = DecompMatrix::parse(text);
  const BasicSetResult r = verify_decomp(d);
  std::optional<DominanceResult> dom;
  if (r.exists && a.dominance) dom = check_dominance_triangularity(d, r.column_row);

  json j;
  j["verdict"] = r.exists ? "exists" : "fails";
  j["breve_alpha"] = r.breve_alpha;
  std::ostringstream txt;
  if (r.exists) {
    json rows = json::array();
    txt << "canonical basic set exists\n";
    for (std::size_t i : r.rows) {
      rows.push_back({{"label", to_json(d.rows[i].label)}, {"alpha", *d.rows[i].alpha}});
      txt << to_string(d.rows[i].label) << "  alpha=" << *d.rows[i].alpha << "\n";
    }
    j["rows"] = rows;
    json cols = json::array();
    for (std::size_t c = 0; c < r.column_row.size(); ++c) cols.push_back(to_json(d.rows[r.column_row[c]].label));
    j["column_rows"] = cols;
  } else {
    const std::size_t col = *r.failing_column + 1;
    json cand = json::array();
    txt << "no canonical basic set: column " << col << " has";
    for (std::size_t i : r.candidates) {
      cand.push_back(to_json(d.rows[i].label));
      txt << " " << to_string(d.rows[i].label);
    }
    txt << " at breve alpha " << r.breve_alpha[*r.failing_column] << "\n";
    j["column"] = col;
    j["candidates"] = cand;
  }
  if (dom) {
    j["dominance"] = {{"pass", dom->pass}};
    if (!dom->pass) {
      j["dominance"]["row"] = to_json(d.rows[*dom->row].label);
      j["dominance"]["column"] = *dom->column + 1;
      txt << "dominance: FAIL at " << to_string(d.rows[*dom->row].label) << ", column " << *dom->column + 1 << "\n";
    } else {
      txt << "dominance: pass\n";
    }
  }
  out << (a.format == "json" ? j.dump(2) + "\n" : txt.str());
  return r.exists && (!dom || dom->pass) ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke algebra combinatorics: KL cells, Schur elements, Fock space crystals, basic sets", "hecke"};
  app.require_subcommand(1);

  CrystalArgs ca;
  auto* crystal_cmd = app.add_subcommand("crystal", "crystal graph of the level-r Fock space");
  crystal_cmd->add_option("--l", ca.l, "affine rank l")->check(CLI::Range(2, 64));
  crystal_cmd->add_option("--r", ca.r, "level")->check(CLI::Range(1, 8));
  crystal_cmd->add_option("--u", ca.u, "charges u_1,...,u_r")->delimiter(',');
  crystal_cmd->add_option("--n", ca.n, "largest level to build")->check(CLI::Range(0, kDefaultLevelCap));
  crystal_cmd->add_option("--order", ca.order, "node order")->check(CLI::IsMember({"flotw", "ariki"}));
  crystal_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"dot", "json"}));

  BasicArgs ba;
  auto* basic_cmd = app.add_subcommand("basicset", "canonical basic set for a specialization");
  basic_cmd->add_option("--type", ba.type)->check(CLI::IsMember({"A", "B", "D"}));
  basic_cmd->add_option("--n", ba.n)->check(CLI::Range(1, 30));
  basic_cmd->add_option("--a", ba.a)->check(CLI::NonNegativeNumber);
  basic_cmd->add_option("--b", ba.b)->check(CLI::NonNegativeNumber);
  basic_cmd->add_option("--xi-order", ba.xi_order, "multiplicative order of xi")->check(CLI::PositiveNumber);
  basic_cmd->add_option("--char", ba.characteristic, "field characteristic")->check(CLI::NonNegativeNumber);
  basic_cmd->add_option("--format", ba.format)->check(CLI::IsMember({"text", "json"}));

  SchurArgs sa;
  auto* schur_cmd = app.add_subcommand("schur", "Schur element invariants (alpha, f)");
  schur_cmd->add_option("--type", sa.type)->check(CLI::IsMember({"A", "B", "D", "G2", "F4"}));
  schur_cmd->add_option("--n", sa.n)->check(CLI::Range(1, 12));
  schur_cmd->add_option("--a", sa.a)->check(CLI::NonNegativeNumber);
  schur_cmd->add_option("--b", sa.b)->check(CLI::NonNegativeNumber);
  schur_cmd->add_option("--lambda", sa.lambda, "single (bi)partition as JSON, e.g. [[2],[1]]");
  schur_cmd->add_option("--label", sa.label, "single G2 or F4 character");
  schur_cmd->add_option("--format", sa.format)->check(CLI::IsMember({"text", "json"}));

  KLArgs ka;
  auto* kl_cmd = app.add_subcommand("kl", "Kazhdan-Lusztig basis, a-function and J-ring");
  kl_cmd->add_option("--type", ka.type)->check(CLI::IsMember({"A", "B", "D", "G2", "F4"}));
  kl_cmd->add_option("--rank", ka.rank)->check(CLI::Range(1, 8));
  kl_cmd->add_option("--weights", ka.weights, "a or a,b")->delimiter(',')->check(CLI::PositiveNumber);
  kl_cmd->add_option("--emit", ka.emit, "cbasis,afn,gamma,dinv,jring,phimatrix")
      ->delimiter(',')
      ->check(CLI::IsMember({"cbasis", "afn", "gamma", "dinv", "jring", "phimatrix"}));
  kl_cmd->add_option("--check", ka.check, "P2,...,P8,P15,bimodule")->delimiter(',');
  kl_cmd->add_flag("--force", ka.force, "lift the group size cap");
  kl_cmd->add_option("--format", ka.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify-decomp", "check a decomposition matrix for a canonical basic set");
  auto* file_opt = verify_cmd->add_option("file", va.file, "decomposition matrix JSON")->check(CLI::ExistingFile);
  auto* fix_opt = verify_cmd->add_option("--fixture", va.fixture_name, "use a bundled matrix instead of a file");
  file_opt->excludes(fix_opt);
  verify_cmd->add_flag("--dominance", va.dominance, "also check dominance triangularity");
  verify_cmd->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*crystal_cmd) return run_crystal(ca, out);
    if (*basic_cmd) return run_basicset(ba, out);
    if (*schur_cmd) return run_schur(sa, out);
    if (*kl_cmd) {
      for (const auto& c : ka.check)
        if (c != "bimodule") parse_property(c);
      return run_kl(ka, out);
    }
    if (va.file.empty() && va.fixture_name.empty()) throw Error(Errc::InvalidArgument, "verify-decomp needs a file or --fixture");
    return run_verify(va, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::PropertyFailure ? kCheckFailed : kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hecke
