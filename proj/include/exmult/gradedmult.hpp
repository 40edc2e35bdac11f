// Graded multiplicities of irreducible modules in the exterior algebra of
// the little adjoint module, computed along independent routes: closed
// forms in the special exponents, degree-by-degree decomposition, the
// symmetric inner product at label (2,1), and the operator-route formula.

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <exmult/characters.hpp>
#include <exmult/macdonald.hpp>
#include <exmult/rootsys.hpp>

namespace exmult {

enum class GmMethod { closed, bruteforce, constant_term, formula_t };

inline const char* gm_method_name(GmMethod m) {
  switch (m) {
    case GmMethod::closed: return "closed";
    case GmMethod::bruteforce: return "bruteforce";
    case GmMethod::constant_term: return "constant_term";
    case GmMethod::formula_t: return "formula_t";
  }
  return "unknown";
}

// poly lives on the even exp2 grid: coefficient of q^d is keyed at 2d.
struct GradedMultiplicity {
  QPoly poly;
  Weight weight;
  GmMethod method;
};

// dim V = r_s + #R_s, with both signs of every short root counted.
inline int little_adjoint_dim(const RootSystem& rs) {
  return rs.num_short_simple() + 2 * rs.num_short_positive();
}

namespace detail {

inline QPoly one_plus_q(int e) {
  QPoly p = qp_one();
  qp_add_term(p, 2 * e, Rat(1));
  return p;
}

}  // namespace detail

// Multiplicity series of the highest weight lam over the exterior degrees.
// Weights outside the root lattice never occur in the exterior algebra, so
// their series comes out zero without a separate lattice test.
inline GradedMultiplicity gm_bruteforce(const RootSystem& rs, const Weight& lam) {
  std::vector<PackedPoly> layers = exterior_powers(rs);
  QPoly out;
  for (std::size_t d = 0; d < layers.size(); ++d) {
    Cint m = irreducible_multiplicity(rs, layers[d], lam);
    if (!m.is_zero()) qp_add_term(out, 2 * static_cast<int>(d), Rat(m));
  }
  return {out, lam, GmMethod::bruteforce};
}

inline GradedMultiplicity gm_trivial_closed(const RootSystem& rs) {
  std::vector<int> h = rs.special_exponents();
  QPoly out;
  if (rs.type() == Type::G) {
    out = qp_mul(detail::one_plus_q(h[0]), detail::one_plus_q(h[0] + 1));
  } else {
    out = qp_one();
    for (int hi : h) out = qp_mul(out, detail::one_plus_q(2 * hi + 1));
  }
  return {out, wzero(), GmMethod::closed};
}

inline GradedMultiplicity gm_little_adjoint_closed(const RootSystem& rs) {
  std::vector<int> h = rs.special_exponents();
  QPoly out;
  if (rs.type() == Type::G) {
    QPoly s;
    qp_add_term(s, 2, Rat(1));
    qp_add_term(s, 4, Rat(1));
    qp_add_term(s, 6, Rat(1));
    out = qp_mul(detail::one_plus_q(h[0]), s);
  } else {
    QPoly prod = qp_one();
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
      prod = qp_mul(prod, detail::one_plus_q(2 * h[i] + 1));
    QPoly sum;
    for (int hi : h) {
      qp_add_term(sum, 2 * (2 * hi - (2 * h[0] - 1)), Rat(1));
      qp_add_term(sum, 4 * hi, Rat(1));
    }
    out = qp_mul(prod, sum);
  }
  return {out, rs.theta_s().omega, GmMethod::closed};
}

// Inner-product route: the exterior character identity gives
// GM_lam(-q) = (1-q)^{r_s} <1, chi_lam> at label (2,1). Only the trivial
// and little adjoint characters are wired up; the expansion cap keeps this
// usable for B2, B3, C3 and G2.
inline GradedMultiplicity gm_via_ct(const RootSystem& rs, const Weight& lam) {
  QExpPoly chi;
  if (wis_zero(lam)) {
    chi = qep_one();
  } else if (lam == rs.theta_s().omega) {
    chi = qep_from_character(little_adjoint_character(rs));
  } else {
    throw Error("no constant-term route for this highest weight");
  }
  QPoly inner = macdonald_inner(rs, qep_one(), chi, 2, 1);
  QPoly pref = qp_one();
  for (int i = 0; i < rs.num_short_simple(); ++i)
    pref = qp_mul(pref, qp_sub(qp_one(), qp_monomial(2)));
  return {qp_neg_q(qp_mul(pref, inner)), lam, GmMethod::constant_term};
}

// Operator-route formula, cleared of the rational prefactor:
//   GM(-q) q^2 (1-q^{L+2S}) = GM_0(-q) (r_s q^2 (1-q^{L+2S})
//     + (q^2-1) sum_{alpha in R_s^+} (q^{(sigma_k,alpha)}
//                                     + q^{2S+L+2-(sigma_k,alpha)}))
// with L, S the long and short heights of the highest root. The division
// must be exact and the quotient must only hold even-grid exponents.
inline GradedMultiplicity gm_theta_formula_t(const RootSystem& rs) {
  const int L = rs.theta().height_l;
  const int S = rs.theta().height_s;
  QPoly gm0 = qp_neg_q(gm_trivial_closed(rs).poly);
  QPoly sum;
  for (const Root& rt : rs.positive_roots()) {
    if (rt.is_long) continue;
    int sh = rs.sigma_height(rt, 2, 1);
    qp_add_term(sum, 2 * sh, Rat(1));
    qp_add_term(sum, 2 * (2 * S + L + 2 - sh), Rat(1));
  }
  QPoly clear = qp_sub(qp_monomial(4), qp_monomial(4 + 2 * (L + 2 * S)));
  QPoly rhs = qp_add(qp_scale(clear, Rat(rs.num_short_simple())),
                     qp_mul(qp_sub(qp_monomial(4), qp_one()), sum));
  QPoly neg = qp_div_exact(qp_mul(gm0, rhs), clear);
  return {qp_neg_q(neg), rs.theta_s().omega, GmMethod::formula_t};
}

// One row per short positive root: simple-root and simple-coroot
// coefficients with the two height pairings at label (2,1). in_k marks the
// rows whose coroot hits a doubled coefficient (the K part in type C).
struct HeightTableRow {
  Weight alpha;
  Weight coroot;
  int sigma;
  int special;
  bool in_k;
};

inline std::vector<HeightTableRow> height_table(const RootSystem& rs) {
  std::vector<HeightTableRow> rows;
  for (const Root& rt : rs.positive_roots()) {
    if (rt.is_long) continue;
    HeightTableRow row;
    row.alpha = rt.alpha;
    row.coroot = rs.coroot(rt.alpha);
    row.sigma = rs.sigma_height(rt, 2, 1);
    row.special = rs.special_height(row.coroot, 2, 1);
    row.in_k = false;
    for (int i = 0; i < rs.rank(); ++i)
      if (row.coroot[i] >= 2) row.in_k = true;
    rows.push_back(row);
  }
  return rows;
}

// Multiplicities h_Y(n) of the special heights over the short positive
// coroots, with the J/K split of the rows.
struct CorootHeightCounts {
  std::map<int, int> total;
  std::map<int, int> j;
  std::map<int, int> k;
};

inline CorootHeightCounts coroot_height_counts(const RootSystem& rs) {
  CorootHeightCounts c;
  for (const HeightTableRow& row : height_table(rs)) {
    c.total[row.special] += 1;
    (row.in_k ? c.k : c.j)[row.special] += 1;
  }
  return c;
}

}  // namespace exmult
