// Laurent polynomials in q^{1/2}, Macdonald's nabla and Delta weight
// functions, constant terms, and the two inner products built from them.
#ifndef EXMULT_MACDONALD_HPP
#define EXMULT_MACDONALD_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "exmult/characters.hpp"
#include "exmult/rootsys.hpp"

namespace exmult {

// Key counts half-steps of the exponent: the monomial is q^{key/2}. Zero
// coefficients are never stored.
using QPoly = std::map<int, Rat>;

inline QPoly qp_monomial(int exp2, Rat c = Rat(1)) {
  QPoly p;
  if (!c.is_zero()) p.emplace(exp2, c);
  return p;
}

inline QPoly qp_one() { return qp_monomial(0); }

inline bool qp_is_zero(const QPoly& a) { return a.empty(); }

inline void qp_add_term(QPoly& a, int exp2, const Rat& c) {
  if (c.is_zero()) return;
  auto it = a.find(exp2);
  if (it == a.end()) {
    a.emplace(exp2, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
  }
}

inline QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (const auto& t : b) qp_add_term(r, t.first, t.second);
  return r;
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  for (const auto& t : b) qp_add_term(r, t.first, -t.second);
  return r;
}

inline QPoly qp_neg(const QPoly& a) {
  QPoly r;
  for (const auto& t : a) r.emplace(t.first, -t.second);
  return r;
}

inline QPoly qp_scale(const QPoly& a, const Rat& c) {
  QPoly r;
  if (c.is_zero()) return r;
  for (const auto& t : a) r.emplace(t.first, t.second * c);
  return r;
}

// Multiply by q^{exp2/2}.
inline QPoly qp_shift(const QPoly& a, int exp2) {
  QPoly r;
  for (const auto& t : a) r.emplace(t.first + exp2, t.second);
  return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& x : a)
    for (const auto& y : b) qp_add_term(r, x.first + y.first, x.second * y.second);
  return r;
}

// q -> q^{-1}.
inline QPoly qp_qinv(const QPoly& a) {
  QPoly r;
  for (const auto& t : a) r.emplace(-t.first, t.second);
  return r;
}

// q -> -q. Defined only for integral exponents.
inline QPoly qp_neg_q(const QPoly& a) {
  QPoly r;
  for (const auto& t : a) {
    if (t.first % 2 != 0) throw NonPolynomial("q -> -q needs integral exponents");
    r.emplace(t.first, (t.first / 2) % 2 == 0 ? t.second : -t.second);
  }
  return r;
}

inline Rat qp_eval(const QPoly& a, const Rat& q) {
  // Exponents must be integral for this evaluation.
  Rat v(0);
  for (const auto& t : a) {
    if (t.first % 2 != 0) throw NonPolynomial("evaluation needs integral exponents");
    int e = t.first / 2;
    Rat p(1);
    Rat base = e < 0 ? Rat(1) / q : q;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= base;
    v += t.second * p;
  }
  return v;
}

inline int qp_max_exp2(const QPoly& a) {
  if (a.empty()) throw NonPolynomial("zero polynomial has no degree");
  return a.rbegin()->first;
}

inline int qp_min_exp2(const QPoly& a) {
  if (a.empty()) throw NonPolynomial("zero polynomial has no degree");
  return a.begin()->first;
}

inline bool qp_is_palindromic(const QPoly& a) {
  if (a.empty()) return true;
  int s = qp_max_exp2(a) + qp_min_exp2(a);
  for (const auto& t : a) {
    auto it = a.find(s - t.first);
    if (it == a.end() || it->second != t.second) return false;
  }
  return true;
}

// Exact quotient a / b; throws DivisionFailure on a nonzero remainder.
inline QPoly qp_div_exact(const QPoly& a, const QPoly& b) {
  if (qp_is_zero(b)) throw DivisionFailure("division by the zero polynomial");
  if (qp_is_zero(a)) return {};
  QPoly rem = a, quot;
  int steps = (qp_max_exp2(a) - qp_min_exp2(a)) + (qp_max_exp2(b) - qp_min_exp2(b)) + 2;
  const int blead = qp_max_exp2(b);
  const Rat bc = b.rbegin()->second;
  while (!qp_is_zero(rem) && steps-- > 0) {
    int e = qp_max_exp2(rem) - blead;
    Rat c = rem.rbegin()->second / bc;
    qp_add_term(quot, e, c);
    for (const auto& t : b) qp_add_term(rem, t.first + e, -(t.second * c));
  }
  if (!qp_is_zero(rem)) throw DivisionFailure("inexact polynomial division");
  return quot;
}

inline std::string qp_to_string(const QPoly& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& t : a) {
    if (!s.empty()) s += " + ";
    s += t.second.to_string();
    if (t.first != 0) {
      s += "*q^";
      if (t.first % 2 == 0)
        s += std::to_string(t.first / 2);
      else
        s += "(" + std::to_string(t.first) + "/2)";
    }
  }
  return s;
}

// Elements of the group algebra of the weight lattice with QPoly coefficients.
using QExpPoly = std::unordered_map<Weight, QPoly, WeightHash>;

inline QExpPoly qep_one() {
  QExpPoly f;
  f.emplace(wzero(), qp_one());
  return f;
}

inline QExpPoly qep_from_character(const WeightPoly& chi) {
  QExpPoly f;
  for (const auto& e : chi) f.emplace(e.first, qp_monomial(0, Rat(e.second)));
  return f;
}

inline void qep_add_term(QExpPoly& f, const Weight& w, const QPoly& p) {
  if (qp_is_zero(p)) return;
  auto it = f.find(w);
  if (it == f.end()) {
    f.emplace(w, p);
  } else {
    it->second = qp_add(it->second, p);
    if (qp_is_zero(it->second)) f.erase(it);
  }
}

// e^mu -> e^{-mu}.
inline QExpPoly qep_bar(const QExpPoly& f) {
  QExpPoly g;
  for (const auto& e : f) g.emplace(wneg(e.first), e.second);
  return g;
}

// e^mu -> e^{-mu}, q -> q^{-1}.
inline QExpPoly qep_star(const QExpPoly& f) {
  QExpPoly g;
  for (const auto& e : f) g.emplace(wneg(e.first), qp_qinv(e.second));
  return g;
}

inline QExpPoly qep_mul(const QExpPoly& f, const QExpPoly& g) {
  QExpPoly r;
  for (const auto& x : f)
    for (const auto& y : g) qep_add_term(r, wadd(x.first, y.first), qp_mul(x.second, y.second));
  return r;
}

inline QPoly constant_term(const QExpPoly& f) {
  auto it = f.find(wzero());
  return it == f.end() ? QPoly{} : it->second;
}

// One binomial factor 1 - q^{exp2/2} e^{beta}.
struct QFactor {
  Weight beta;
  int exp2;
};

inline std::vector<QFactor> nabla_factors(const RootSystem& rs, int ks, int kl) {
  std::vector<QFactor> fs;
  for (const Root& rt : rs.positive_roots()) {
    int k = rs.label(rt, ks, kl);
    for (int i = 0; i < k; ++i) {
      fs.push_back({rt.omega, 2 * i});
      fs.push_back({wneg(rt.omega), 2 * i});
    }
  }
  return fs;
}

// Delta runs over the positive affine roots: each positive root carries
// exponents q^0..q^{k-1} on e^{-alpha} and q^1..q^k on e^{alpha}. The
// orientation matters: it is fixed by the adjointness of the translation
// operators with respect to the pairing, and only the constant term is
// invariant under flipping it.
inline std::vector<QFactor> delta_factors(const RootSystem& rs, int ks, int kl) {
  std::vector<QFactor> fs;
  for (const Root& rt : rs.positive_roots()) {
    int k = rs.label(rt, ks, kl);
    for (int i = 0; i < k; ++i) {
      fs.push_back({wneg(rt.omega), 2 * i});
      fs.push_back({rt.omega, 2 * (i + 1)});
    }
  }
  return fs;
}

namespace detail {

inline QExpPoly expand_factors(const std::vector<QFactor>& fs, long long cap) {
  QExpPoly cur = qep_one();
  long long stored = 1;
  for (const QFactor& f : fs) {
    QExpPoly next;
    for (const auto& e : cur) {
      qep_add_term(next, e.first, e.second);
      qep_add_term(next, wadd(e.first, f.beta), qp_neg(qp_shift(e.second, f.exp2)));
    }
    stored = 0;
    for (const auto& e : next) stored += static_cast<long long>(e.second.size());
    if (stored > cap)
      throw ExpansionTooLarge("weight-function expansion exceeds " + std::to_string(cap) +
                              " stored terms (EXMULT_TERM_CAP raises the cap)");
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

// Full expansion of nabla = prod_{alpha in R} prod_{i=0}^{k-1} (1 - q^i e^alpha).
inline QExpPoly nabla(const RootSystem& rs, int ks, int kl) {
  return detail::expand_factors(nabla_factors(rs, ks, kl), term_cap());
}

// Full expansion of Delta, the doubled product with the q^{i+1} companions.
inline QExpPoly delta(const RootSystem& rs, int ks, int kl) {
  return detail::expand_factors(delta_factors(rs, ks, kl), term_cap());
}

// Constant term of P * prod(factors) without expanding the full product:
// partial products are pruned to the weights that can still reach the box
// hull of -supp(P) given the spans of the remaining factors.
inline QPoly ct_with_factors(const QExpPoly& P, const std::vector<QFactor>& fs, int rank) {
  if (P.empty()) return {};
  Weight box_lo{}, box_hi{};
  bool first = true;
  for (const auto& e : P) {
    Weight t = wneg(e.first);
    for (int c = 0; c < rank; ++c) {
      if (first || t[c] < box_lo[c]) box_lo[c] = t[c];
      if (first || t[c] > box_hi[c]) box_hi[c] = t[c];
    }
    first = false;
  }
  const int n = static_cast<int>(fs.size());
  // suffix spans: reachable coordinate change using factors j..n-1
  std::vector<Weight> suf_lo(static_cast<std::size_t>(n) + 1, Weight{});
  std::vector<Weight> suf_hi(static_cast<std::size_t>(n) + 1, Weight{});
  for (int j = n - 1; j >= 0; --j) {
    suf_lo[j] = suf_lo[j + 1];
    suf_hi[j] = suf_hi[j + 1];
    for (int c = 0; c < rank; ++c) {
      if (fs[j].beta[c] < 0) suf_lo[j][c] = static_cast<std::int16_t>(suf_lo[j][c] + fs[j].beta[c]);
      if (fs[j].beta[c] > 0) suf_hi[j][c] = static_cast<std::int16_t>(suf_hi[j][c] + fs[j].beta[c]);
    }
  }
  auto feasible = [&](const Weight& w, int j) {
    for (int c = 0; c < rank; ++c) {
      if (w[c] + suf_hi[j][c] < box_lo[c]) return false;
      if (w[c] + suf_lo[j][c] > box_hi[c]) return false;
    }
    return true;
  };
  const long long cap = term_cap();
  QExpPoly cur;
  if (feasible(wzero(), 0)) cur.emplace(wzero(), qp_one());
  for (int j = 0; j < n; ++j) {
    QExpPoly next;
    for (const auto& e : cur) {
      if (feasible(e.first, j + 1)) qep_add_term(next, e.first, e.second);
      Weight moved = wadd(e.first, fs[j].beta);
      if (feasible(moved, j + 1))
        qep_add_term(next, moved, qp_neg(qp_shift(e.second, fs[j].exp2)));
    }
    long long stored = 0;
    for (const auto& e : next) stored += static_cast<long long>(e.second.size());
    if (stored > cap)
      throw ExpansionTooLarge("constant-term expansion exceeds " + std::to_string(cap) +
                              " stored terms (EXMULT_TERM_CAP raises the cap)");
    cur = std::move(next);
  }
  QPoly out;
  for (const auto& e : P) {
    auto it = cur.find(wneg(e.first));
    if (it != cur.end()) out = qp_add(out, qp_mul(e.second, it->second));
  }
  return out;
}

// <f, h> = ct(f hbar nabla) / |W|.
inline QPoly macdonald_inner(const RootSystem& rs, const QExpPoly& f, const QExpPoly& h,
                             int ks, int kl) {
  QPoly ct = ct_with_factors(qep_mul(f, qep_bar(h)), nabla_factors(rs, ks, kl), rs.rank());
  return qp_scale(ct, Rat(Cint(1), Cint(rs.weyl_order())));
}

// (f, h) = ct(f h^* Delta).
inline QPoly cherednik_inner(const RootSystem& rs, const QExpPoly& f, const QExpPoly& h,
                             int ks, int kl) {
  return ct_with_factors(qep_mul(f, qep_star(h)), delta_factors(rs, ks, kl), rs.rank());
}

namespace detail {

inline QPoly binomial_quotient(const std::vector<int>& num_exp2,
                               const std::vector<int>& den_exp2) {
  QPoly p = qp_one();
  for (int e : num_exp2) p = qp_sub(p, qp_shift(p, e));
  for (int e : den_exp2) {
    QPoly d = qp_sub(qp_one(), qp_monomial(e));
    p = qp_div_exact(p, d);
  }
  return p;
}

}  // namespace detail

// Closed form of ct(Delta): prod over positive roots, i = 1..k(alpha), of
// (1 - q^{(rho_k, alpha^vee) + i}) / (1 - q^{(rho_k, alpha^vee) + 1 - i}).
inline QPoly ct_delta_closed(const RootSystem& rs, int ks, int kl) {
  std::vector<int> num, den;
  for (const Root& rt : rs.positive_roots()) {
    int h = rs.special_height(rs.coroot(rt.alpha), ks, kl);
    for (int i = 1; i <= rs.label(rt, ks, kl); ++i) {
      num.push_back(2 * (h + i));
      den.push_back(2 * (h + 1 - i));
    }
  }
  return detail::binomial_quotient(num, den);
}

// Poincare polynomial W(q^k) as the product formula.
inline QPoly poincare_product(const RootSystem& rs, int ks, int kl) {
  std::vector<int> num, den;
  for (const Root& rt : rs.positive_roots()) {
    int h = rs.special_height(rs.coroot(rt.alpha), ks, kl);
    num.push_back(2 * (h + rs.label(rt, ks, kl)));
    den.push_back(2 * h);
  }
  return detail::binomial_quotient(num, den);
}

// Poincare polynomial as the sum over the Weyl group of q^{k-weighted length}.
inline QPoly poincare_sum(const RootSystem& rs, int ks, int kl) {
  QPoly p;
  for (const WeylElement& w : rs.weyl_group())
    qp_add_term(p, 2 * (ks * w.short_inversions + kl * w.long_inversions), Rat(1));
  return p;
}

struct RelationReport {
  QPoly lhs, rhs;
  bool ok = false;
};

// <f, hbar^*> W(q^k) = (f, h) for W-invariant f, h. Both sides are returned
// after clearing the 1/|W| factor exactly.
inline RelationReport verify_relation_d(const RootSystem& rs, const QExpPoly& f,
                                        const QExpPoly& h, int ks, int kl) {
  QExpPoly P = qep_mul(f, qep_star(h));
  QPoly lhs_ct = ct_with_factors(P, nabla_factors(rs, ks, kl), rs.rank());
  QPoly rhs_ct = ct_with_factors(P, delta_factors(rs, ks, kl), rs.rank());
  RelationReport rep;
  rep.lhs = qp_scale(qp_mul(lhs_ct, poincare_sum(rs, ks, kl)),
                     Rat(Cint(1), Cint(rs.weyl_order())));
  rep.rhs = rhs_ct;
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace exmult

#endif  // EXMULT_MACDONALD_HPP
