// Command-line front end. Subcommands:
//   gm         graded multiplicity series along one or all routes
//   exponents  special exponents with the height-partition diagram
//   decompose  irreducible constituents of one exterior power
//   tables     the three reference tables
//   verify     self-check suites with machine-readable results
//
// Exit codes: 0 success, 1 mathematical disagreement or failed check,
// 2 usage error (bad flags, unsupported combination, resource gate).
// Output is deterministic byte for byte for a fixed command line.
#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exmult/daha.hpp"
#include "exmult/gradedmult.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace exmult;

// Thrown for command combinations that are syntactically fine but gated
// off (too large, or needing an explicit opt-in).
struct GateError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------
// rendering helpers

long long coeff_ll(const Rat& c) {
  if (!c.is_integer()) throw NonIntegralResult("fractional coefficient");
  return c.num().to_ll();
}

// Compact form on the integer grid: "1+q^5", "q+q^4", "2q^3".
std::string poly_compact(const QPoly& p) {
  if (qp_is_zero(p)) return "0";
  std::string s;
  for (const auto& t : p) {
    if (t.first % 2 != 0)
      throw NonIntegralResult("half-integral exponent in a graded series");
    long long c = coeff_ll(t.second);
    int d = t.first / 2;
    if (!s.empty() && c >= 0) s += "+";
    if (c == -1 && d != 0)
      s += "-";
    else if (c != 1 || d == 0)
      s += std::to_string(c);
    if (d == 1)
      s += "q";
    else if (d != 0)
      s += "q^" + std::to_string(d);
  }
  return s;
}

std::string factored_trivial(const RootSystem& rs) {
  std::vector<int> h = rs.special_exponents();
  if (rs.type() == Type::G)
    return "(1+q^" + std::to_string(h[0]) + ")(1+q^" + std::to_string(h[0] + 1) +
           ")";
  std::string s;
  for (int hi : h) s += "(1+q^" + std::to_string(2 * hi + 1) + ")";
  return s;
}

std::string factored_little_adjoint(const RootSystem& rs) {
  std::vector<int> h = rs.special_exponents();
  if (rs.type() == Type::G)
    return "(1+q^" + std::to_string(h[0]) + ")(q+q^2+q^3)";
  std::string prod;
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    prod += "(1+q^" + std::to_string(2 * h[i] + 1) + ")";
  std::vector<int> es;
  for (int hi : h) {
    es.push_back(2 * hi - (2 * h[0] - 1));
    es.push_back(2 * hi);
  }
  std::sort(es.begin(), es.end());
  std::string sum;
  for (int e : es) {
    if (!sum.empty()) sum += "+";
    sum += e == 1 ? "q" : "q^" + std::to_string(e);
  }
  if (prod.empty()) return sum;
  return prod + "(" + sum + ")";
}

Json weight_json(const Weight& w, int rank) {
  Json a = Json::array();
  for (int i = 0; i < rank; ++i) a.push_back(w[i]);
  return a;
}

std::string weight_text(const Weight& w, int rank) {
  std::string s = "[";
  for (int i = 0; i < rank; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

// Space-separated coordinates, used inside quoted CSV fields.
std::string weight_flat(const Weight& w, int rank) {
  std::string s;
  for (int i = 0; i < rank; ++i) {
    if (i > 0) s += " ";
    s += std::to_string(w[i]);
  }
  return s;
}

struct Checks {
  int degree = 0;
  long long value_at_1 = 0;
  bool palindromic = false;
};

Checks poly_checks(const QPoly& p) {
  Checks c;
  c.degree = qp_is_zero(p) ? 0 : qp_max_exp2(p) / 2;
  for (const auto& t : p) c.value_at_1 += coeff_ll(t.second);
  c.palindromic = qp_is_palindromic(p);
  return c;
}

Json coefficients_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& t : p)
    a.push_back(Json::array({t.first / 2, coeff_ll(t.second)}));
  return a;
}

// ---------------------------------------------------------------------
// gm

struct GmRoute {
  std::string method;
  QPoly poly;
  std::string factored;  // empty unless a closed form exists
};

bool bruteforce_allowed(const RootSystem& rs, bool long_run, std::string* why) {
  if (rs.rank() > kPackRank) {
    *why = "weight packing supports rank <= " + std::to_string(kPackRank);
    return false;
  }
  if (rs.type() == Type::F && !long_run) {
    *why = "F4 exterior powers take minutes, pass --long to enable";
    return false;
  }
  return true;
}

bool ct_allowed(const RootSystem& rs, std::string* why) {
  bool ok = (rs.type() == Type::B && rs.rank() <= 3) ||
            (rs.type() == Type::C && rs.rank() == 3) || rs.type() == Type::G;
  if (!ok)
    *why = "constant-term expansion is gated to B2, B3, C3 and G2";
  return ok;
}

int cmd_gm(const std::string& type_s, int rank, const std::string& lambda,
           const std::string& method, bool long_run, const std::string& format) {
  RootSystem rs(type_from_string(type_s), rank);
  const bool little = lambda == "little-adjoint";
  const Weight lam = little ? rs.theta_s().omega : wzero();

  std::vector<GmRoute> routes;
  std::vector<std::pair<std::string, std::string>> skipped;
  auto want = [&](const char* m) { return method == m || method == "all"; };

  if (want("closed")) {
    QPoly p = little ? gm_little_adjoint_closed(rs).poly
                     : gm_trivial_closed(rs).poly;
    routes.push_back(
        {"closed", p, little ? factored_little_adjoint(rs) : factored_trivial(rs)});
  }
  if (want("formula-t")) {
    if (little)
      routes.push_back({"formula-t", gm_theta_formula_t(rs).poly, ""});
    else if (method == "formula-t")
      throw GateError("formula-t computes the little-adjoint series only");
    else
      skipped.push_back({"formula-t", "little-adjoint series only"});
  }
  if (want("bruteforce")) {
    std::string why;
    if (bruteforce_allowed(rs, long_run, &why))
      routes.push_back({"bruteforce", gm_bruteforce(rs, lam).poly, ""});
    else if (method == "bruteforce")
      throw GateError(why);
    else
      skipped.push_back({"bruteforce", why});
  }
  if (want("ct")) {
    std::string why;
    if (ct_allowed(rs, &why))
      routes.push_back({"ct", gm_via_ct(rs, lam).poly, ""});
    else if (method == "ct")
      throw GateError(why);
    else
      skipped.push_back({"ct", why});
  }

  bool agree = true;
  for (const GmRoute& r : routes)
    if (r.poly != routes.front().poly) agree = false;
  Checks ck = poly_checks(routes.front().poly);

  if (format == "json") {
    Json j;
    j["schema"] = "exmult.gm/1";
    j["type"] = type_name(rs.type());
    j["rank"] = rs.rank();
    j["lambda"] = lambda;
    j["method"] = method;
    Json ra = Json::array();
    for (const GmRoute& r : routes) {
      Json e;
      e["method"] = r.method;
      if (!r.factored.empty()) e["factored"] = r.factored;
      e["expanded"] = poly_compact(r.poly);
      e["coefficients"] = coefficients_json(r.poly);
      e["checks"] = {{"degree", ck.degree},
                     {"value_at_1", ck.value_at_1},
                     {"palindromic", ck.palindromic}};
      ra.push_back(e);
    }
    j["routes"] = ra;
    Json sk = Json::array();
    for (const auto& s : skipped)
      sk.push_back({{"method", s.first}, {"reason", s.second}});
    j["skipped"] = sk;
    if (method == "all") j["verdict"] = agree ? "AGREE" : "DISAGREE";
    std::printf("%s\n", j.dump(2).c_str());
  } else if (format == "csv") {
    std::printf("method,degree,coefficient\n");
    for (const GmRoute& r : routes)
      for (const auto& t : r.poly)
        std::printf("%s,%d,%lld\n", r.method.c_str(), t.first / 2,
                    coeff_ll(t.second));
  } else {
    std::printf("type=%s rank=%d lambda=%s\n", type_name(rs.type()).c_str(),
                rs.rank(), lambda.c_str());
    for (const GmRoute& r : routes)
      std::printf("method=%s: %s\n", r.method.c_str(),
                  r.factored.empty() ? poly_compact(r.poly).c_str()
                                     : r.factored.c_str());
    for (const auto& s : skipped)
      std::printf("method=%s: skipped (%s)\n", s.first.c_str(), s.second.c_str());
    std::printf("checks: degree=%d value_at_1=%lld palindromic=%s\n", ck.degree,
                ck.value_at_1, ck.palindromic ? "yes" : "no");
    if (method == "all")
      std::printf("verdict: %s\n", agree ? "AGREE" : "DISAGREE");
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------------
// exponents

int cmd_exponents(const std::string& type_s, int rank, const std::string& format) {
  RootSystem rs(type_from_string(type_s), rank);
  std::vector<int> h = rs.special_exponents();
  // Row lengths of the diagram: multiplicities of the special heights over
  // the short positive coroots, weakly decreasing. Conjugating the
  // partition recovers h.
  std::vector<int> parts;
  for (const auto& e : coroot_height_counts(rs).total) parts.push_back(e.second);
  std::sort(parts.rbegin(), parts.rend());

  std::string hs = "[";
  for (std::size_t i = 0; i < h.size(); ++i)
    hs += (i ? "," : "") + std::to_string(h[i]);
  hs += "]";

  if (format == "json") {
    Json j;
    j["schema"] = "exmult.exponents/1";
    j["type"] = type_name(rs.type());
    j["rank"] = rs.rank();
    j["exponents"] = h;
    j["partition"] = parts;
    j["short_positive_roots"] = rs.num_short_positive();
    std::printf("%s\n", j.dump(2).c_str());
  } else if (format == "csv") {
    std::printf("index,exponent\n");
    for (std::size_t i = 0; i < h.size(); ++i)
      std::printf("%zu,%d\n", i + 1, h[i]);
  } else {
    std::printf("type=%s rank=%d\n", type_name(rs.type()).c_str(), rs.rank());
    std::printf("h = %s\n", hs.c_str());
    std::printf("sum(h) = %d = short positive roots\n", rs.num_short_positive());
    std::printf("height-multiplicity partition (conjugate of h):\n");
    for (int p : parts) {
      std::string row(static_cast<std::size_t>(p), '#');
      std::printf("%s\n", row.c_str());
    }
  }
  return 0;
}

// ---------------------------------------------------------------------
// decompose

int cmd_decompose(const std::string& type_s, int rank, int power,
                  const std::string& format) {
  RootSystem rs(type_from_string(type_s), rank);
  if (rs.rank() > kPackRank)
    throw GateError("weight packing supports rank <= " +
                    std::to_string(kPackRank));
  const int dim = little_adjoint_dim(rs);
  if (power < 0 || power > dim)
    throw GateError("power must lie in [0, " + std::to_string(dim) + "]");

  std::vector<PackedPoly> layers = exterior_powers(rs);
  std::map<Weight, Cint> parts =
      decompose(rs, layers[static_cast<std::size_t>(power)]);

  // binomial(dim, power), checked against the sum of constituent sizes
  Rat binom(1);
  for (int i = 1; i <= power; ++i)
    binom = binom * Rat(Cint(dim - power + i), Cint(i));
  if (!binom.is_integer()) throw NonIntegralResult("binomial");
  Cint total(0);
  for (const auto& e : parts)
    total = total + e.second * weyl_dimension(rs, e.first);
  if (!(Rat(total) == binom))
    throw Error("constituent dimensions do not sum to the exterior power");

  if (format == "json") {
    Json j;
    j["schema"] = "exmult.decompose/1";
    j["type"] = type_name(rs.type());
    j["rank"] = rs.rank();
    j["power"] = power;
    j["module_dim"] = dim;
    j["exterior_dim"] = binom.num().to_ll();
    Json cs = Json::array();
    for (const auto& e : parts)
      cs.push_back({{"weight", weight_json(e.first, rs.rank())},
                    {"dim", weyl_dimension(rs, e.first).to_ll()},
                    {"mult", e.second.to_ll()}});
    j["constituents"] = cs;
    std::printf("%s\n", j.dump(2).c_str());
  } else if (format == "csv") {
    std::printf("weight,dim,mult\n");
    for (const auto& e : parts)
      std::printf("\"%s\",%lld,%lld\n", weight_flat(e.first, rs.rank()).c_str(),
                  weyl_dimension(rs, e.first).to_ll(), e.second.to_ll());
  } else {
    std::printf("type=%s rank=%d power=%d\n", type_name(rs.type()).c_str(),
                rs.rank(), power);
    std::printf("module dim: %d, exterior power dim: %lld\n", dim,
                binom.num().to_ll());
    for (const auto& e : parts)
      std::printf("weight=%s dim=%lld mult=%lld\n",
                  weight_text(e.first, rs.rank()).c_str(),
                  weyl_dimension(rs, e.first).to_ll(), e.second.to_ll());
  }
  return 0;
}

// ---------------------------------------------------------------------
// tables

struct Table1Row {
  int n, j, k;
};

std::map<int, std::vector<Table1Row>> table1_data() {
  std::map<int, std::vector<Table1Row>> t;
  for (int r = 3; r <= 6; ++r) {
    CorootHeightCounts c = coroot_height_counts(RootSystem(Type::C, r));
    std::vector<Table1Row> rows;
    for (const auto& e : c.total) {
      int j = c.j.count(e.first) ? c.j.at(e.first) : 0;
      int k = c.k.count(e.first) ? c.k.at(e.first) : 0;
      rows.push_back({e.first, j, k});
    }
    t[r] = rows;
  }
  return t;
}

int cmd_tables(const std::string& format) {
  std::map<int, std::vector<Table1Row>> t1 = table1_data();
  std::vector<HeightTableRow> t2 = height_table(RootSystem(Type::F, 4));
  std::vector<HeightTableRow> t3 = height_table(RootSystem(Type::G, 2));

  if (format == "json") {
    Json j;
    j["schema"] = "exmult.tables/1";
    Json a1 = Json::array();
    for (const auto& e : t1) {
      Json rows = Json::array();
      for (const Table1Row& r : e.second)
        rows.push_back(
            {{"n", r.n}, {"j", r.j}, {"k", r.k}, {"total", r.j + r.k}});
      a1.push_back({{"type", "C"}, {"rank", e.first}, {"rows", rows}});
    }
    j["table1"] = a1;
    auto height_rows = [](const std::vector<HeightTableRow>& rows, int rank) {
      Json a = Json::array();
      for (const HeightTableRow& r : rows)
        a.push_back({{"alpha", weight_json(r.alpha, rank)},
                     {"coroot", weight_json(r.coroot, rank)},
                     {"sigma", r.sigma},
                     {"special", r.special}});
      return a;
    };
    j["table2"] = {{"type", "F"}, {"rank", 4}, {"rows", height_rows(t2, 4)}};
    j["table3"] = {{"type", "G"}, {"rank", 2}, {"rows", height_rows(t3, 2)}};
    std::printf("%s\n", j.dump(2).c_str());
  } else if (format == "csv") {
    std::printf("table,type,rank,n,j,k,total,alpha,coroot,sigma,special\n");
    for (const auto& e : t1)
      for (const Table1Row& r : e.second)
        std::printf("1,C,%d,%d,%d,%d,%d,,,,\n", e.first, r.n, r.j, r.k,
                    r.j + r.k);
    for (const HeightTableRow& r : t2)
      std::printf("2,F,4,,,,,\"%s\",\"%s\",%d,%d\n",
                  weight_flat(r.alpha, 4).c_str(), weight_flat(r.coroot, 4).c_str(),
                  r.sigma, r.special);
    for (const HeightTableRow& r : t3)
      std::printf("3,G,2,,,,,\"%s\",\"%s\",%d,%d\n",
                  weight_flat(r.alpha, 2).c_str(), weight_flat(r.coroot, 2).c_str(),
                  r.sigma, r.special);
  } else {
    std::printf(
        "table 1: special-height multiplicities over short positive coroots, "
        "type C\n");
    for (const auto& e : t1) {
      std::printf("C%d\n", e.first);
      std::printf("  %-4s %-4s %-4s %s\n", "n", "h_J", "h_K", "h_total");
      for (const Table1Row& r : e.second)
        std::printf("  %-4d %-4d %-4d %d\n", r.n, r.j, r.k, r.j + r.k);
    }
    auto print_heights = [](const char* title,
                            const std::vector<HeightTableRow>& rows, int rank) {
      std::printf("%s\n", title);
      std::printf("  %-12s %-12s %-6s %s\n", "alpha", "coroot", "sigma",
                  "special");
      for (const HeightTableRow& r : rows)
        std::printf("  %-12s %-12s %-6d %d\n",
                    weight_flat(r.alpha, rank).c_str(),
                    weight_flat(r.coroot, rank).c_str(), r.sigma, r.special);
    };
    print_heights("table 2: height pairings of the short positive roots, F4",
                  t2, 4);
    print_heights("table 3: height pairings of the short positive roots, G2",
                  t3, 2);
  }
  return 0;
}

// ---------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  bool pass;
};

// Expected table content, kept as literals so the suite compares a fresh
// computation against fixed data rather than against itself.
const std::map<int, std::vector<Table1Row>>& table1_expected() {
  static const std::map<int, std::vector<Table1Row>> t = {
      {3, {{2, 2, 0}, {4, 1, 1}, {6, 0, 1}, {8, 0, 1}}},
      {4, {{2, 3, 0}, {4, 2, 1}, {6, 1, 1}, {8, 0, 2}, {10, 0, 1}, {12, 0, 1}}},
      {5,
       {{2, 4, 0},
        {4, 3, 1},
        {6, 2, 1},
        {8, 1, 2},
        {10, 0, 2},
        {12, 0, 2},
        {14, 0, 1},
        {16, 0, 1}}},
      {6,
       {{2, 5, 0},
        {4, 4, 1},
        {6, 3, 1},
        {8, 2, 2},
        {10, 1, 2},
        {12, 0, 3},
        {14, 0, 2},
        {16, 0, 2},
        {18, 0, 1},
        {20, 0, 1}}},
  };
  return t;
}

struct HeightRowLit {
  std::vector<int> alpha, coroot;
  int sigma, special;
};

const std::vector<HeightRowLit>& table2_expected() {
  static const std::vector<HeightRowLit> t = {
      {{0, 0, 1, 0}, {0, 0, 1, 0}, 2, 2},
      {{0, 0, 0, 1}, {0, 0, 0, 1}, 2, 2},
      {{0, 1, 1, 0}, {0, 2, 1, 0}, 3, 4},
      {{0, 0, 1, 1}, {0, 0, 1, 1}, 4, 4},
      {{1, 1, 1, 0}, {2, 2, 1, 0}, 4, 6},
      {{0, 1, 1, 1}, {0, 2, 1, 1}, 5, 6},
      {{1, 1, 1, 1}, {2, 2, 1, 1}, 6, 8},
      {{0, 1, 2, 1}, {0, 2, 2, 1}, 7, 8},
      {{1, 1, 2, 1}, {2, 2, 2, 1}, 8, 10},
      {{1, 2, 2, 1}, {2, 4, 2, 1}, 9, 12},
      {{1, 2, 3, 1}, {2, 4, 3, 1}, 11, 14},
      {{1, 2, 3, 2}, {2, 4, 3, 2}, 13, 16},
  };
  return t;
}

const std::vector<HeightRowLit>& table3_expected() {
  static const std::vector<HeightRowLit> t = {
      {{1, 0}, {1, 0}, 2, 2},
      {{1, 1}, {1, 3}, 3, 5},
      {{2, 1}, {2, 3}, 5, 7},
  };
  return t;
}

bool height_rows_match(const std::vector<HeightTableRow>& got,
                       const std::vector<HeightRowLit>& want, int rank) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    for (int c = 0; c < rank; ++c) {
      if (got[i].alpha[c] != want[i].alpha[static_cast<std::size_t>(c)])
        return false;
      if (got[i].coroot[c] != want[i].coroot[static_cast<std::size_t>(c)])
        return false;
    }
    if (got[i].sigma != want[i].sigma) return false;
    if (got[i].special != want[i].special) return false;
  }
  return true;
}

void suite_tables(std::vector<Check>& out) {
  std::map<int, std::vector<Table1Row>> t1 = table1_data();
  for (const auto& e : table1_expected()) {
    bool ok = t1.count(e.first) && t1.at(e.first).size() == e.second.size();
    if (ok)
      for (std::size_t i = 0; i < e.second.size(); ++i) {
        const Table1Row &a = t1.at(e.first)[i], &b = e.second[i];
        ok = ok && a.n == b.n && a.j == b.j && a.k == b.k;
      }
    out.push_back({"tables.1.C" + std::to_string(e.first), ok});
  }
  out.push_back({"tables.2.F4",
                 height_rows_match(height_table(RootSystem(Type::F, 4)),
                                   table2_expected(), 4)});
  out.push_back({"tables.3.G2",
                 height_rows_match(height_table(RootSystem(Type::G, 2)),
                                   table3_expected(), 2)});
}

std::vector<RootSystem> verify_systems(bool long_run) {
  std::vector<RootSystem> v = {RootSystem(Type::B, 2), RootSystem(Type::B, 3),
                               RootSystem(Type::B, 4), RootSystem(Type::C, 3),
                               RootSystem(Type::C, 4)};
  if (long_run) v.push_back(RootSystem(Type::F, 4));
  v.push_back(RootSystem(Type::G, 2));
  return v;
}

void suite_poincare(std::vector<Check>& out) {
  for (const RootSystem& rs :
       {RootSystem(Type::B, 2), RootSystem(Type::B, 3), RootSystem(Type::B, 4),
        RootSystem(Type::C, 3), RootSystem(Type::C, 4), RootSystem(Type::F, 4),
        RootSystem(Type::G, 2)}) {
    for (int ks : {1, 2}) {
      bool ok = poincare_sum(rs, ks, 1) == poincare_product(rs, ks, 1);
      out.push_back({"poincare." + rs.name() + ".k=" + std::to_string(ks) + ",1",
                     ok});
    }
  }
}

void suite_ct(std::vector<Check>& out) {
  for (const RootSystem& rs : {RootSystem(Type::B, 2), RootSystem(Type::B, 3),
                               RootSystem(Type::C, 3), RootSystem(Type::G, 2)}) {
    for (int ks : {1, 2}) {
      QPoly got = ct_with_factors(qep_one(), delta_factors(rs, ks, 1), rs.rank());
      bool ok = got == ct_delta_closed(rs, ks, 1);
      out.push_back({"ct." + rs.name() + ".k=" + std::to_string(ks) + ",1", ok});
    }
  }
}

void suite_daha(std::vector<Check>& out, std::vector<Json>* reports,
                bool long_run) {
  std::vector<RootSystem> ps = {RootSystem(Type::B, 2), RootSystem(Type::B, 3),
                                RootSystem(Type::C, 3), RootSystem(Type::C, 4)};
  if (long_run) ps.push_back(RootSystem(Type::F, 4));
  ps.push_back(RootSystem(Type::G, 2));
  for (const RootSystem& rs : ps) {
    P1Report rep = verify_prop_p1(rs);
    out.push_back({"daha.p1." + rs.name(), rep.all_pass()});
    if (reports != nullptr) {
      Json j;
      j["type"] = type_name(rep.type);
      j["rank"] = rep.rank;
      j["L"] = rep.L;
      j["S"] = rep.S;
      Json chain = Json::array();
      for (const AffineRoot& a : rep.chain)
        chain.push_back({{"alpha", weight_json(a.root.alpha, rep.rank)},
                         {"level", a.level}});
      j["chain"] = chain;
      Json ids = Json::array();
      for (const P1Identity& id : rep.identities)
        ids.push_back({{"name", id.name},
                       {"pass", id.pass},
                       {"lhs", id.lhs},
                       {"rhs", id.rhs}});
      j["identities"] = ids;
      reports->push_back(j);
    }
  }
  for (const RootSystem& rs : {RootSystem(Type::B, 2), RootSystem(Type::G, 2)}) {
    QPoly one_one = cherednik_inner(rs, qep_one(), qep_one(), 2, 1);
    bool ok = true;
    for (const Root& rt : rs.positive_roots()) {
      if (rt.is_long) continue;
      QExpPoly ea;
      qep_add_term(ea, rt.omega, qp_one());
      QPoly lhs = cherednik_inner(rs, ea, qep_one(), 2, 1);
      InnerEAlpha closed = inner_e_alpha_closed(rs, rt);
      ok = ok && qp_mul(lhs, qtt_substitute_t(closed.den, 2, 1)) ==
                     qp_mul(one_one, qtt_substitute_t(closed.num, 2, 1));
    }
    out.push_back({"daha.inner." + rs.name(), ok});

    QExpPoly yts =
        ga_substitute_t(apply_Y_theta(rs, ga_monomial(rs.theta_s().omega)), 2, 1);
    QExpPoly yinv =
        ga_substitute_t(apply_Y_theta_inverse(rs, ga_monomial(wzero())), 2, 1);
    QExpPoly ea;
    qep_add_term(ea, rs.theta_s().omega, qp_one());
    bool adj = cherednik_inner(rs, yts, qep_one(), 2, 1) ==
               cherednik_inner(rs, ea, yinv, 2, 1);
    out.push_back({"daha.adjoint." + rs.name(), adj});
  }
}

void suite_gm(std::vector<Check>& out, bool long_run) {
  for (const RootSystem& rs : verify_systems(long_run)) {
    std::string why;
    if (!bruteforce_allowed(rs, long_run, &why)) continue;
    bool ok = gm_bruteforce(rs, wzero()).poly == gm_trivial_closed(rs).poly;
    out.push_back({"gm.bruteforce." + rs.name() + ".trivial", ok});
  }
  std::vector<RootSystem> little = {RootSystem(Type::B, 2), RootSystem(Type::B, 3),
                                    RootSystem(Type::C, 3)};
  if (long_run) little.push_back(RootSystem(Type::F, 4));
  little.push_back(RootSystem(Type::G, 2));
  for (const RootSystem& rs : little) {
    bool ok = gm_bruteforce(rs, rs.theta_s().omega).poly ==
              gm_little_adjoint_closed(rs).poly;
    out.push_back({"gm.bruteforce." + rs.name() + ".little-adjoint", ok});
  }
  for (const RootSystem& rs :
       {RootSystem(Type::B, 2), RootSystem(Type::B, 3), RootSystem(Type::B, 4),
        RootSystem(Type::B, 5), RootSystem(Type::C, 3), RootSystem(Type::C, 4),
        RootSystem(Type::C, 5), RootSystem(Type::F, 4), RootSystem(Type::G, 2)}) {
    bool ok = gm_theta_formula_t(rs).poly == gm_little_adjoint_closed(rs).poly;
    out.push_back({"gm.formula-t." + rs.name(), ok});
  }
  for (const RootSystem& rs : {RootSystem(Type::B, 2), RootSystem(Type::B, 3),
                               RootSystem(Type::C, 3), RootSystem(Type::G, 2)}) {
    bool t = gm_via_ct(rs, wzero()).poly == gm_trivial_closed(rs).poly;
    out.push_back({"gm.ct." + rs.name() + ".trivial", t});
    bool s = gm_via_ct(rs, rs.theta_s().omega).poly ==
             gm_little_adjoint_closed(rs).poly;
    out.push_back({"gm.ct." + rs.name() + ".little-adjoint", s});
  }
  for (const RootSystem& rs :
       {RootSystem(Type::B, 2), RootSystem(Type::B, 3), RootSystem(Type::B, 4),
        RootSystem(Type::C, 3), RootSystem(Type::C, 4), RootSystem(Type::F, 4),
        RootSystem(Type::G, 2)}) {
    QPoly g0 = gm_trivial_closed(rs).poly;
    QPoly gs = gm_little_adjoint_closed(rs).poly;
    Checks c0 = poly_checks(g0), cs = poly_checks(gs);
    const int r_s = rs.num_short_simple();
    bool ok = c0.degree == r_s + 2 * rs.num_short_positive();
    // G2 carries a doubled series, its values at 1 sit above the generic
    // 2^{r_s} and 2^{r_s} r_s pattern.
    if (rs.type() == Type::G)
      ok = ok && c0.value_at_1 == 4 && cs.value_at_1 == 6;
    else
      ok = ok && c0.value_at_1 == (1LL << r_s) &&
           cs.value_at_1 == (1LL << r_s) * r_s;
    ok = ok && c0.palindromic && cs.palindromic;
    int boxes = 0;
    for (const auto& e : coroot_height_counts(rs).total) boxes += e.second;
    ok = ok && boxes == rs.num_short_positive();
    out.push_back({"gm.structural." + rs.name(), ok});
  }
}

int cmd_verify(const std::string& suite, bool long_run,
               const std::string& format) {
  std::vector<Check> checks;
  std::vector<Json> reports;
  if (suite == "tables" || suite == "all") suite_tables(checks);
  if (suite == "poincare" || suite == "all") suite_poincare(checks);
  if (suite == "ct" || suite == "all") suite_ct(checks);
  if (suite == "daha" || suite == "all")
    suite_daha(checks, format == "json" ? &reports : nullptr, long_run);
  if (suite == "gm" || suite == "all") suite_gm(checks, long_run);

  int failed = 0;
  for (const Check& c : checks)
    if (!c.pass) ++failed;

  if (format == "json") {
    Json j;
    j["schema"] = "exmult.verify/1";
    j["suite"] = suite;
    j["long"] = long_run;
    Json a = Json::array();
    for (const Check& c : checks)
      a.push_back({{"name", c.name}, {"pass", c.pass}});
    j["checks"] = a;
    if (suite == "daha" || suite == "all") j["reports"] = reports;
    j["passed"] = static_cast<int>(checks.size()) - failed;
    j["failed"] = failed;
    std::printf("%s\n", j.dump(2).c_str());
  } else if (format == "csv") {
    // check names may contain commas, so the field is always quoted
    std::printf("name,pass\n");
    for (const Check& c : checks)
      std::printf("\"%s\",%s\n", c.name.c_str(), c.pass ? "true" : "false");
  } else {
    for (const Check& c : checks)
      std::printf("%s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str());
    std::printf("summary: %zu/%zu passed\n", checks.size() - failed,
                checks.size());
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graded multiplicities in the exterior algebra of the little adjoint "
      "module for B, C, F4 and G2.\n"
      "The EXMULT_TERM_CAP environment variable raises the cap on stored "
      "expansion terms."};
  app.require_subcommand(1);

  std::string type_s, lambda = "trivial", method = "closed", format = "text",
                      suite = "all";
  int rank = 0, power = 0;
  bool long_run = false;

  auto add_common = [&](CLI::App* sub, bool needs_system) {
    if (needs_system) {
      sub->add_option("--type", type_s, "root system type (B, C, F, G)")
          ->required();
      sub->add_option("--rank", rank, "rank of the root system")->required();
    }
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* gm = app.add_subcommand("gm", "graded multiplicity series");
  add_common(gm, true);
  gm->add_option("--lambda", lambda, "highest weight of the constituent")
      ->required()
      ->check(CLI::IsMember({"trivial", "little-adjoint"}));
  gm->add_option("--method", method, "route to compute the series")
      ->check(CLI::IsMember({"closed", "bruteforce", "ct", "formula-t", "all"}));
  gm->add_flag("--long", long_run, "enable the multi-minute F4 paths");

  CLI::App* ex = app.add_subcommand("exponents", "special exponents");
  add_common(ex, true);

  CLI::App* de = app.add_subcommand("decompose",
                                    "constituents of one exterior power");
  add_common(de, true);
  de->add_option("--power", power, "exterior power degree")->required();

  CLI::App* ta = app.add_subcommand("tables", "reference tables 1, 2 and 3");
  add_common(ta, false);

  CLI::App* ve = app.add_subcommand("verify", "run a verification suite");
  add_common(ve, false);
  ve->add_option("--suite", suite, "which checks to run")
      ->check(CLI::IsMember({"tables", "poincare", "ct", "daha", "gm", "all"}));
  ve->add_flag("--long", long_run, "include the multi-minute F4 checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gm->parsed()) return cmd_gm(type_s, rank, lambda, method, long_run, format);
    if (ex->parsed()) return cmd_exponents(type_s, rank, format);
    if (de->parsed()) return cmd_decompose(type_s, rank, power, format);
    if (ta->parsed()) return cmd_tables(format);
    if (ve->parsed()) return cmd_verify(suite, long_run, format);
  } catch (const GateError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const UnsupportedType& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const ExpansionTooLarge& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const GroupTooLarge& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
