// Unequal-parameter Hecke-algebra operators on the group algebra of the
// weight lattice: Demazure-Lusztig T_i, the intertwiner family G for affine
// roots, and the translation operator assembled from the reflection chain
// of the highest root. Coefficients are Laurent polynomials in q, t_s, t_l
// with exact rational entries; divided differences are always evaluated as
// finite geometric sums.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <exmult/macdonald.hpp>
#include <exmult/rootsys.hpp>

namespace exmult {

// key = (q exponent in halves, t_s exponent, t_l exponent)
using QttKey = std::array<int, 3>;
using LaurentQTT = std::map<QttKey, Rat>;

inline LaurentQTT qtt_monomial(int qexp2, int ts, int tl, Rat c = Rat(1)) {
  LaurentQTT m;
  if (!c.is_zero()) m[{qexp2, ts, tl}] = c;
  return m;
}

inline LaurentQTT qtt_one() { return qtt_monomial(0, 0, 0); }

inline void qtt_add_term(LaurentQTT& a, const QttKey& k, const Rat& c) {
  auto it = a.find(k);
  if (it == a.end()) {
    if (!c.is_zero()) a.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) a.erase(it);
}

inline LaurentQTT qtt_add(const LaurentQTT& a, const LaurentQTT& b) {
  LaurentQTT out = a;
  for (const auto& t : b) qtt_add_term(out, t.first, t.second);
  return out;
}

inline LaurentQTT qtt_neg(const LaurentQTT& a) {
  LaurentQTT out;
  for (const auto& t : a) out.emplace(t.first, -t.second);
  return out;
}

inline LaurentQTT qtt_sub(const LaurentQTT& a, const LaurentQTT& b) {
  return qtt_add(a, qtt_neg(b));
}

inline LaurentQTT qtt_mul(const LaurentQTT& a, const LaurentQTT& b) {
  LaurentQTT out;
  for (const auto& x : a)
    for (const auto& y : b)
      qtt_add_term(out,
                   {x.first[0] + y.first[0], x.first[1] + y.first[1],
                    x.first[2] + y.first[2]},
                   x.second * y.second);
  return out;
}

inline bool qtt_is_zero(const LaurentQTT& a) { return a.empty(); }

inline std::string qtt_to_string(const LaurentQTT& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& t : a) {
    if (!s.empty()) s += " + ";
    s += t.second.to_string();
    if (t.first[0] != 0) {
      s += " q^";
      if (t.first[0] % 2 == 0)
        s += std::to_string(t.first[0] / 2);
      else
        s += "(" + std::to_string(t.first[0]) + "/2)";
    }
    if (t.first[1] != 0) s += " ts^" + std::to_string(t.first[1]);
    if (t.first[2] != 0) s += " tl^" + std::to_string(t.first[2]);
  }
  return s;
}

// t_alpha = q^{-k(alpha)/2}: ts^a tl^b becomes q^{-(a ks + b kl)/2}.
inline QPoly qtt_substitute_t(const LaurentQTT& a, int ks, int kl) {
  QPoly out;
  for (const auto& t : a)
    qp_add_term(out, t.first[0] - t.first[1] * ks - t.first[2] * kl, t.second);
  return out;
}

// t_alpha for the orbit of alpha, and h_alpha = t_alpha - t_alpha^{-1}
inline LaurentQTT t_orbit(bool is_long, int exp = 1) {
  return is_long ? qtt_monomial(0, 0, exp) : qtt_monomial(0, exp, 0);
}

inline LaurentQTT h_orbit(bool is_long) {
  return qtt_sub(t_orbit(is_long, 1), t_orbit(is_long, -1));
}

using GAElem = std::map<Weight, LaurentQTT>;

inline GAElem ga_monomial(const Weight& w, LaurentQTT c = qtt_one()) {
  GAElem f;
  if (!qtt_is_zero(c)) f.emplace(w, std::move(c));
  return f;
}

inline void ga_add_term(GAElem& f, const Weight& w, const LaurentQTT& c) {
  auto it = f.find(w);
  if (it == f.end()) {
    if (!qtt_is_zero(c)) f.emplace(w, c);
    return;
  }
  it->second = qtt_add(it->second, c);
  if (qtt_is_zero(it->second)) f.erase(it);
}

inline GAElem ga_add(const GAElem& f, const GAElem& g) {
  GAElem out = f;
  for (const auto& t : g) ga_add_term(out, t.first, t.second);
  return out;
}

inline GAElem ga_scale(const GAElem& f, const LaurentQTT& c) {
  GAElem out;
  for (const auto& t : f) ga_add_term(out, t.first, qtt_mul(t.second, c));
  return out;
}

inline GAElem ga_sub(const GAElem& f, const GAElem& g) {
  return ga_add(f, ga_scale(g, qtt_monomial(0, 0, 0, Rat(-1))));
}

// substitute t and flatten into a q-coefficient exponential sum
inline QExpPoly ga_substitute_t(const GAElem& f, int ks, int kl) {
  QExpPoly out;
  for (const auto& t : f) {
    QPoly p = qtt_substitute_t(t.second, ks, kl);
    if (!qp_is_zero(p)) out.emplace(t.first, std::move(p));
  }
  return out;
}

struct AffineRoot {
  Root root;
  int level = 0;
};

// G_{alpha+n delta} e^mu = t^eps e^mu + eps h sum_{i=1}^{N} q^{n eps i}
// e^{mu + i eps alpha} with m = (mu, alpha^vee), eps = -1 when m > 0 and
// +1 otherwise, N = |m| + (eps-1)/2. The finite sum is the exact quotient
// of the divided difference; no rational functions appear.
inline GAElem apply_G(const RootSystem& rs, const AffineRoot& a, const GAElem& f) {
  const Weight cv = rs.coroot(a.root.alpha);
  const bool lng = a.root.is_long;
  GAElem out;
  for (const auto& term : f) {
    const Weight& mu = term.first;
    const int m = rs.pairing(mu, cv);
    const int eps = m > 0 ? -1 : 1;
    const int bound = (m > 0 ? m : -m) + (eps - 1) / 2;
    ga_add_term(out, mu, qtt_mul(term.second, t_orbit(lng, eps)));
    if (bound > 0) {
      LaurentQTT h = qtt_mul(term.second, h_orbit(lng));
      if (eps < 0) h = qtt_neg(h);
      for (int i = 1; i <= bound; ++i) {
        Weight w = mu;
        for (int j = 0; j < rs.rank(); ++j)
          w[j] = static_cast<std::int16_t>(w[j] + i * eps * a.root.omega[j]);
        ga_add_term(out, w, qtt_mul(h, qtt_monomial(2 * a.level * eps * i, 0, 0)));
      }
    }
  }
  return out;
}

// G^{-1} = (t + t^{-1}) - G, from the quadratic (G - t)(G - t^{-1}) = 0:
// the intertwiner acts on each root string with eigenvalues t and t^{-1}.
inline GAElem apply_G_inverse(const RootSystem& rs, const AffineRoot& a,
                              const GAElem& f) {
  LaurentQTT tt = qtt_add(t_orbit(a.root.is_long, 1), t_orbit(a.root.is_long, -1));
  return ga_sub(ga_scale(f, tt), apply_G(rs, a, f));
}

// Demazure-Lusztig operator, with the divided difference expanded as the
// finite telescoping sum:
//   m > 0: T_i e^mu = t e^{mu - m alpha} - h sum_{j=1}^{m} e^{mu - j alpha}
//   m < 0: T_i e^mu = t e^{mu + |m| alpha} + h sum_{j=0}^{|m|-1} e^{mu + j alpha}
inline GAElem apply_T(const RootSystem& rs, int i, const GAElem& f) {
  const Root& simple = rs.simple_root(i);
  const bool lng = simple.is_long;
  GAElem out;
  for (const auto& term : f) {
    const Weight& mu = term.first;
    const int m = term.first[i];
    Weight refl = rs.simple_reflection_weight(i, mu);
    ga_add_term(out, refl, qtt_mul(term.second, t_orbit(lng)));
    if (m == 0) continue;
    LaurentQTT h = qtt_mul(term.second, h_orbit(lng));
    if (m > 0) {
      for (int j = 1; j <= m; ++j) {
        Weight w = mu;
        for (int c = 0; c < rs.rank(); ++c)
          w[c] = static_cast<std::int16_t>(w[c] - j * simple.omega[c]);
        ga_add_term(out, w, qtt_neg(h));
      }
    } else {
      for (int j = 0; j < -m; ++j) {
        Weight w = mu;
        for (int c = 0; c < rs.rank(); ++c)
          w[c] = static_cast<std::int16_t>(w[c] + j * simple.omega[c]);
        ga_add_term(out, w, h);
      }
    }
  }
  return out;
}

namespace detail {

// Reduced word for s_theta by greedy descent: repeatedly strip the lowest
// simple reflection with positive pairing until a simple root remains.
inline std::vector<int> theta_word_halves(const RootSystem& rs, int* center) {
  std::vector<int> left;
  Weight mu = rs.theta().omega;
  Weight alpha = rs.theta().alpha;
  auto is_simple = [&](const Weight& a) {
    int nz = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (a[i] == 0) continue;
      if (a[i] != 1 || nz >= 0) return -1;
      nz = i;
    }
    return nz;
  };
  while (is_simple(alpha) < 0) {
    int pick = -1;
    for (int j = 0; j < rs.rank(); ++j) {
      if (mu[j] <= 0) continue;
      Weight cand = rs.simple_reflection_root(j, alpha);
      bool neg = false;
      for (int c = 0; c < rs.rank(); ++c) neg = neg || cand[c] < 0;
      if (!neg) {
        pick = j;
        break;
      }
    }
    if (pick < 0) throw ChainAssertionFailure("descent from theta stalled");
    left.push_back(pick);
    alpha = rs.simple_reflection_root(pick, alpha);
    mu = rs.simple_reflection_weight(pick, mu);
  }
  *center = is_simple(alpha);
  return left;
}

}  // namespace detail

// The positive roots made negative by the translation by theta^vee, in
// chain order: finite parts alpha^{(-p)}, ..., alpha^{(p)} followed by
// theta+delta. The word for s_theta is palindromic by construction and the
// chain satisfies alpha^{(0)} = theta, alpha^{(-i)} = -s_theta alpha^{(i)},
// with the finite parts exactly {alpha > 0 : (alpha, theta^vee) > 0}.
inline std::vector<AffineRoot> theta_chain(const RootSystem& rs) {
  int center = -1;
  std::vector<int> left = detail::theta_word_halves(rs, &center);

  // word s_{j_p} ... s_{j_1} s_{j_0} s_{j_{-1}} ... s_{j_{-p}}, j_i = j_{-i};
  // the descent indices read left-to-right give (j_{-p}, ..., j_{-1}).
  const int p = static_cast<int>(left.size());
  std::vector<int> word;
  for (int i = 0; i < p; ++i) word.push_back(left[static_cast<std::size_t>(i)]);
  word.push_back(center);
  for (int i = p - 1; i >= 0; --i)
    word.push_back(left[static_cast<std::size_t>(i)]);

  std::vector<AffineRoot> chain;
  for (std::size_t i = 0; i < word.size(); ++i) {
    Weight a = rs.simple_root(word[i]).alpha;
    for (std::size_t j = i; j-- > 0;) a = rs.simple_reflection_root(word[j], a);
    int idx = rs.root_from_alpha(a).index;
    chain.push_back({rs.positive_root(idx), 0});
  }

  if (chain[static_cast<std::size_t>(p)].root.alpha != rs.theta().alpha)
    throw ChainAssertionFailure("midpoint of the chain is not theta");

  // finite parts must be exactly the positive roots moved by s_theta
  Weight tcv = rs.coroot(rs.theta().alpha);
  std::vector<Weight> expected;
  for (const Root& rt : rs.positive_roots())
    if (rs.pairing(rt.omega, tcv) > 0) expected.push_back(rt.alpha);
  std::vector<Weight> got;
  for (const AffineRoot& ar : chain) got.push_back(ar.root.alpha);
  std::sort(expected.begin(), expected.end());
  std::vector<Weight> sorted = got;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expected ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ChainAssertionFailure("chain does not enumerate R(s_theta)");

  // alpha^{(-i)} = -s_theta(alpha^{(i)}), preserving length class
  for (int i = 0; i <= p; ++i) {
    const Root& hi = chain[static_cast<std::size_t>(p + i)].root;
    const Root& lo = chain[static_cast<std::size_t>(p - i)].root;
    Weight refl = hi.alpha;
    int m = rs.pairing(hi.omega, tcv);
    for (int c = 0; c < rs.rank(); ++c)
      refl[c] = static_cast<std::int16_t>(m * rs.theta().alpha[c] - refl[c]);
    if (refl != lo.alpha || hi.is_long != lo.is_long)
      throw ChainAssertionFailure("chain is not symmetric about theta");
  }

  bool seen_theta_s = false;
  for (const AffineRoot& ar : chain)
    if (ar.root.alpha == rs.theta_s().alpha) seen_theta_s = true;
  if (!seen_theta_s)
    throw ChainAssertionFailure("theta_s missing from the chain");

  chain.push_back({rs.theta(), 1});
  return chain;
}

// translation by theta^vee: e^y gains q^{(theta^vee, y)}
inline GAElem apply_tau_theta(const RootSystem& rs, const GAElem& f, int dir = 1) {
  Weight tcv = rs.coroot(rs.theta().alpha);
  GAElem out;
  for (const auto& term : f)
    ga_add_term(out, term.first,
                qtt_mul(term.second,
                        qtt_monomial(2 * dir * rs.pairing(term.first, tcv), 0, 0)));
  return out;
}

// Y^{theta^vee} = tau(theta^vee) G_{theta+delta} G_{alpha^{(p)}} ...
// G_{alpha^{(-p)}}, rightmost factor applied first.
inline GAElem apply_Y_theta(const RootSystem& rs, const GAElem& f) {
  std::vector<AffineRoot> chain = theta_chain(rs);
  GAElem cur = f;
  for (const AffineRoot& ar : chain) cur = apply_G(rs, ar, cur);
  return apply_tau_theta(rs, cur);
}

inline GAElem apply_Y_theta_inverse(const RootSystem& rs, const GAElem& f) {
  std::vector<AffineRoot> chain = theta_chain(rs);
  GAElem cur = apply_tau_theta(rs, f, -1);
  for (std::size_t i = chain.size(); i-- > 0;)
    cur = apply_G_inverse(rs, chain[i], cur);
  return cur;
}

// (e^alpha, 1) as a multiple of (1, 1), for alpha short positive:
//   (e^alpha, 1) = num/den (1, 1),
//   num = tl^{-2 htl alpha} ts^{-2 hts alpha} (ts^2 - 1),
//   den = q tl^{-2L-2} ts^{-2S+2} - 1.
// The bar-star conjugate (e^{-alpha}, 1) shares den and negates q and t
// exponents in num.
struct InnerEAlpha {
  LaurentQTT num;
  LaurentQTT den;
};

inline InnerEAlpha inner_e_alpha_closed(const RootSystem& rs, const Root& a) {
  if (a.is_long) throw NotShortPositive("closed inner product needs a short root");
  const int L = rs.theta().height_l;
  const int S = rs.theta().height_s;
  LaurentQTT num =
      qtt_mul(qtt_monomial(0, -2 * a.height_s, -2 * a.height_l),
              qtt_sub(qtt_monomial(0, 2, 0), qtt_one()));
  LaurentQTT den =
      qtt_sub(qtt_monomial(2, -2 * S + 2, -2 * L - 2), qtt_one());
  return {num, den};
}

struct P1Identity {
  std::string name;
  bool pass;
  std::string lhs;
  std::string rhs;
};

struct P1Report {
  Type type;
  int rank;
  int L;
  int S;
  std::vector<AffineRoot> chain;
  std::vector<P1Identity> identities;
  bool all_pass() const {
    for (const P1Identity& id : identities)
      if (!id.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string ga_to_string(const RootSystem& rs, const GAElem& f) {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& t : f) {
    if (!s.empty()) s += "  +  ";
    s += "(" + qtt_to_string(t.second) + ") e^[";
    for (int i = 0; i < rs.rank(); ++i) {
      if (i) s += ",";
      s += std::to_string(t.first[i]);
    }
    s += "]";
  }
  return s;
}

inline void p1_check(P1Report& rep, const RootSystem& rs, const std::string& name,
                     const GAElem& lhs, const GAElem& rhs) {
  rep.identities.push_back(
      {name, lhs == rhs, ga_to_string(rs, lhs), ga_to_string(rs, rhs)});
}

}  // namespace detail

// Symbolic verification of the translation-operator actions on e^0 and
// e^{theta_s}, together with the named intermediate products the chain
// computation rests on. Everything is checked in formal t_s, t_l.
inline P1Report verify_prop_p1(const RootSystem& rs) {
  P1Report rep;
  rep.type = rs.type();
  rep.rank = rs.rank();
  rep.L = rs.theta().height_l;
  rep.S = rs.theta().height_s;
  rep.chain = theta_chain(rs);
  const int L = rep.L;
  const int S = rep.S;
  const bool g2 = rs.type() == Type::G;

  const std::vector<AffineRoot>& chain = rep.chain;
  const int p = (static_cast<int>(chain.size()) - 2) / 2;
  int theta_s_at = 0;
  for (int k = -p; k <= p; ++k)
    if (chain[static_cast<std::size_t>(p + k)].root.alpha == rs.theta_s().alpha)
      theta_s_at = k;
  const int i = theta_s_at;

  auto eps = [&](const Root& a, const Root& b) {
    return rs.pairing(a.omega, rs.coroot(b.alpha)) > 0 ? -1 : 1;
  };
  auto chain_root = [&](int k) -> const Root& {
    return chain[static_cast<std::size_t>(p + k)].root;
  };

  if (!g2) {
    // pairing sign table along the theta_s row: nonnegative pairings keep
    // the chain action two-termed, short columns give -1 except opposite
    // theta_s, long columns pair off
    bool ok = true;
    for (int k = -p; k <= p; ++k) {
      int m = rs.pairing(rs.theta_s().omega, rs.coroot(chain_root(k).alpha));
      if (m < 0 || m > 1 + (k == 0 || k == i)) ok = false;
      int e = eps(rs.theta_s(), chain_root(k));
      if (!chain_root(k).is_long && k != -i && e != -1) ok = false;
      if (k == -i && i != 0 && e != 1) ok = false;
      if (chain_root(k).is_long && k != 0 &&
          eps(rs.theta_s(), chain_root(-k)) + e != 0)
        ok = false;
    }
    rep.identities.push_back({"epsilon_table", ok, "", ""});
  }

  if (!g2) {
    LaurentQTT re = qtt_one();
    for (int k = -p; k <= p; ++k)
      re = qtt_mul(re, t_orbit(chain_root(k).is_long, eps(rs.theta_s(), chain_root(k))));
    detail::p1_check(rep, rs, "re_product", ga_monomial(wzero(), re),
                     ga_monomial(wzero(), qtt_monomial(0, -S + 2, -1)));

    bool all_long_after = true;
    for (int k = i + 1; k <= p; ++k) all_long_after &= chain_root(k).is_long;
    rep.identities.push_back({"rd_product", all_long_after, "", ""});

    LaurentQTT rc = qtt_one();
    for (int k = -p; k < i; ++k)
      rc = qtt_mul(rc, t_orbit(chain_root(k).is_long, eps(rs.theta_s(), chain_root(k))));
    detail::p1_check(rep, rs, "rc_product", ga_monomial(wzero(), rc),
                     ga_monomial(wzero(), qtt_monomial(0, -S + 3, p + i - L - S)));
  }

  // product of the finite-level chain operators on e^{theta_s}
  {
    GAElem cur = ga_monomial(rs.theta_s().omega);
    for (int k = -p; k <= p; ++k)
      cur = apply_G(rs, chain[static_cast<std::size_t>(p + k)], cur);
    GAElem want = ga_monomial(rs.theta_s().omega,
                              g2 ? qtt_monomial(0, -2, -1)
                                 : qtt_monomial(0, -S + 2, -1));
    LaurentQTT hs = h_orbit(false);
    LaurentQTT coeff = g2 ? qtt_monomial(0, -1, 1) : qtt_monomial(0, -S + 3, L - 2);
    ga_add_term(want, wzero(), qtt_neg(qtt_mul(hs, coeff)));
    detail::p1_check(rep, rs, "rg_partial", cur, want);
  }

  // tau(theta^vee) G_{theta+delta} on e^{theta_s} and e^0
  {
    AffineRoot top{rs.theta(), 1};
    GAElem a = apply_tau_theta(rs, apply_G(rs, top, ga_monomial(rs.theta_s().omega)));
    GAElem b = apply_tau_theta(rs, apply_G(rs, top, ga_monomial(wzero())));
    GAElem want_a = ga_monomial(rs.theta_s().omega, qtt_monomial(2, 0, -1));
    GAElem want_b = ga_monomial(wzero(), qtt_monomial(0, 0, 1));
    detail::p1_check(rep, rs, "tau_gtheta", ga_add(a, b), ga_add(want_a, want_b));
  }

  {
    GAElem lhs = apply_Y_theta(rs, ga_monomial(wzero()));
    GAElem rhs = ga_monomial(wzero(), g2 ? qtt_monomial(0, 2, 4)
                                         : qtt_monomial(0, S, 2 * L));
    detail::p1_check(rep, rs, "ye_e0", lhs, rhs);
  }

  {
    GAElem lhs = apply_Y_theta(rs, ga_monomial(rs.theta_s().omega));
    GAElem rhs = ga_monomial(rs.theta_s().omega,
                             g2 ? qtt_monomial(2, -2, -2)
                                : qtt_monomial(2, -S + 2, -2));
    LaurentQTT coeff = g2 ? qtt_monomial(0, -1, 2) : qtt_monomial(0, -S + 3, L - 1);
    ga_add_term(rhs, wzero(), qtt_neg(qtt_mul(h_orbit(false), coeff)));
    detail::p1_check(rep, rs, "ye_theta_s", lhs, rhs);
  }

  return rep;
}

}  // namespace exmult
