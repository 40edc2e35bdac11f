#include <cstdlib>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <exmult/daha.hpp>

namespace exmult {
namespace {

Weight W(std::initializer_list<int> v) {
  Weight w = wzero();
  int i = 0;
  for (int x : v) w[i++] = static_cast<std::int16_t>(x);
  return w;
}

GAElem reflect_exponents(const RootSystem& rs, int i, const GAElem& f) {
  GAElem out;
  for (const auto& t : f)
    ga_add_term(out, rs.simple_reflection_weight(i, t.first), t.second);
  return out;
}

std::vector<Weight> spanning_weights(const RootSystem& rs) {
  std::vector<Weight> ws;
  ws.push_back(wzero());
  for (int i = 0; i < rs.rank(); ++i) {
    ws.push_back(rs.simple_root(i).omega);
    ws.push_back(wneg(rs.simple_root(i).omega));
  }
  ws.push_back(rs.theta().omega);
  ws.push_back(wneg(rs.theta().omega));
  ws.push_back(rs.theta_s().omega);
  ws.push_back(wneg(rs.theta_s().omega));
  ws.push_back(wadd(rs.theta().omega, rs.theta_s().omega));
  ws.push_back(wsub(rs.theta().omega, wscale(2, rs.theta_s().omega)));
  return ws;
}

TEST(LaurentQTTTest, ArithmeticAndSubstitution) {
  LaurentQTT a = qtt_monomial(2, 1, 0);        // q ts
  LaurentQTT b = qtt_monomial(0, 0, -1);       // tl^{-1}
  LaurentQTT p = qtt_mul(qtt_add(a, b), qtt_sub(a, b));
  // (a+b)(a-b) = a^2 - b^2
  LaurentQTT want = qtt_sub(qtt_monomial(4, 2, 0), qtt_monomial(0, 0, -2));
  EXPECT_EQ(p, want);

  // ts = q^{-1}, tl = q^{-1/2} at labels (2,1)
  EXPECT_EQ(qtt_substitute_t(qtt_monomial(0, 1, 0), 2, 1), qp_monomial(-2));
  EXPECT_EQ(qtt_substitute_t(qtt_monomial(0, 0, 1), 2, 1), qp_monomial(-1));
  EXPECT_EQ(qtt_substitute_t(qtt_monomial(3, -1, 2), 2, 1), qp_monomial(3));
  QPoly h = qtt_substitute_t(h_orbit(false), 2, 1);
  EXPECT_EQ(h, qp_sub(qp_monomial(-2), qp_monomial(2)));
}

TEST(ApplyGTest, SimpleRootActions) {
  for (const RootSystem& rs : {RootSystem(Type::B, 2), RootSystem(Type::G, 2)}) {
    for (int i = 0; i < rs.rank(); ++i) {
      AffineRoot a{rs.simple_root(i), 0};
      const bool lng = a.root.is_long;
      const Weight al = a.root.omega;

      GAElem on_zero = apply_G(rs, a, ga_monomial(wzero()));
      EXPECT_EQ(on_zero, ga_monomial(wzero(), t_orbit(lng)));

      GAElem on_alpha = apply_G(rs, a, ga_monomial(al));
      GAElem want = ga_monomial(al, t_orbit(lng, -1));
      ga_add_term(want, wzero(), qtt_neg(h_orbit(lng)));
      EXPECT_EQ(on_alpha, want);

      GAElem on_neg = apply_G(rs, a, ga_monomial(wneg(al)));
      GAElem want_neg = ga_monomial(wneg(al), t_orbit(lng));
      ga_add_term(want_neg, wzero(), h_orbit(lng));
      ga_add_term(want_neg, al, h_orbit(lng));
      EXPECT_EQ(on_neg, want_neg);
    }
  }
}

TEST(ApplyGTest, AffineLevelActions) {
  RootSystem rs(Type::B, 2);
  AffineRoot top{rs.theta(), 1};

  EXPECT_EQ(apply_G(rs, top, ga_monomial(rs.theta_s().omega)),
            ga_monomial(rs.theta_s().omega, t_orbit(true, -1)));
  EXPECT_EQ(apply_G(rs, top, ga_monomial(wzero())),
            ga_monomial(wzero(), t_orbit(true)));

  // (-theta, theta^vee) = -2: the string picks up q^{n i} factors
  GAElem got = apply_G(rs, top, ga_monomial(wneg(rs.theta().omega)));
  GAElem want = ga_monomial(wneg(rs.theta().omega), t_orbit(true));
  ga_add_term(want, wzero(), qtt_mul(h_orbit(true), qtt_monomial(2, 0, 0)));
  ga_add_term(want, rs.theta().omega, qtt_mul(h_orbit(true), qtt_monomial(4, 0, 0)));
  EXPECT_EQ(got, want);
}

TEST(ApplyGTest, InverseRoundTrip) {
  for (const RootSystem& rs : {RootSystem(Type::B, 2), RootSystem(Type::G, 2)}) {
    std::vector<AffineRoot> chain = theta_chain(rs);
    for (const AffineRoot& a : chain) {
      for (const Weight& w : spanning_weights(rs)) {
        GAElem e = ga_monomial(w);
        EXPECT_EQ(apply_G(rs, a, apply_G_inverse(rs, a, e)), e);
        EXPECT_EQ(apply_G_inverse(rs, a, apply_G(rs, a, e)), e);
      }
    }
  }
}

TEST(ApplyTTest, KnownActionsAndQuadratic) {
  for (const RootSystem& rs :
       {RootSystem(Type::B, 2), RootSystem(Type::C, 3), RootSystem(Type::G, 2)}) {
    for (int i = 0; i < rs.rank(); ++i) {
      const bool lng = rs.simple_root(i).is_long;
      EXPECT_EQ(apply_T(rs, i, ga_monomial(wzero())),
                ga_monomial(wzero(), t_orbit(lng)));

      GAElem on_alpha = apply_T(rs, i, ga_monomial(rs.simple_root(i).omega));
      GAElem want = ga_monomial(wneg(rs.simple_root(i).omega), t_orbit(lng, -1));
      ga_add_term(want, wzero(), qtt_neg(h_orbit(lng)));
      EXPECT_EQ(on_alpha, want);

      // (T - t)(T + t^{-1}) = 0, that is T^2 = h T + 1
      for (const Weight& w : spanning_weights(rs)) {
        GAElem f = ga_monomial(w);
        GAElem tf = apply_T(rs, i, f);
        GAElem lhs = apply_T(rs, i, tf);
        GAElem rhs = ga_add(ga_scale(tf, h_orbit(lng)), f);
        EXPECT_EQ(lhs, rhs) << rs.name() << " i=" << i;
      }
    }
  }
}

TEST(ApplyTTest, BraidRelations) {
  {
    RootSystem rs(Type::B, 2);
    for (const Weight& w : spanning_weights(rs)) {
      GAElem a = ga_monomial(w), b = ga_monomial(w);
      for (int k = 0; k < 4; ++k) a = apply_T(rs, k % 2, a);
      for (int k = 0; k < 4; ++k) b = apply_T(rs, 1 - k % 2, b);
      EXPECT_EQ(a, b);
    }
  }
  {
    RootSystem rs(Type::G, 2);
    for (const Weight& w : spanning_weights(rs)) {
      GAElem a = ga_monomial(w), b = ga_monomial(w);
      for (int k = 0; k < 6; ++k) a = apply_T(rs, k % 2, a);
      for (int k = 0; k < 6; ++k) b = apply_T(rs, 1 - k % 2, b);
      EXPECT_EQ(a, b);
    }
  }
  {
    RootSystem rs(Type::C, 3);
    for (const Weight& w : spanning_weights(rs)) {
      GAElem a = ga_monomial(w), b = ga_monomial(w);
      // commuting pair (0, 2)
      a = apply_T(rs, 0, apply_T(rs, 2, a));
      b = apply_T(rs, 2, apply_T(rs, 0, b));
      EXPECT_EQ(a, b);
      // order-3 pair (0, 1)
      a = ga_monomial(w);
      b = ga_monomial(w);
      for (int k = 0; k < 3; ++k) a = apply_T(rs, k % 2, a);
      for (int k = 0; k < 3; ++k) b = apply_T(rs, 1 - k % 2, b);
      EXPECT_EQ(a, b);
    }
  }
}

TEST(ApplyTTest, FactorsThroughIntertwiner) {
  for (const RootSystem& rs : {RootSystem(Type::B, 2), RootSystem(Type::G, 2)}) {
    for (int i = 0; i < rs.rank(); ++i) {
      AffineRoot a{rs.simple_root(i), 0};
      for (const Weight& w : spanning_weights(rs)) {
        GAElem f = ga_monomial(w);
        EXPECT_EQ(apply_T(rs, i, f),
                  reflect_exponents(rs, i, apply_G(rs, a, f)));
      }
    }
  }
}

TEST(ThetaChainTest, PinnedChains) {
  {
    RootSystem rs(Type::B, 2);
    std::vector<AffineRoot> chain = theta_chain(rs);
    ASSERT_EQ(chain.size(), 4u);
    EXPECT_EQ(chain[0].root.alpha, W({0, 1}));
    EXPECT_EQ(chain[1].root.alpha, W({1, 2}));
    EXPECT_EQ(chain[2].root.alpha, W({1, 1}));
    EXPECT_EQ(chain[3].root.alpha, rs.theta().alpha);
    EXPECT_EQ(chain[0].level, 0);
    EXPECT_EQ(chain[3].level, 1);
  }
  {
    RootSystem rs(Type::G, 2);
    std::vector<AffineRoot> chain = theta_chain(rs);
    ASSERT_EQ(chain.size(), 6u);
    EXPECT_EQ(chain[0].root.alpha, W({0, 1}));
    EXPECT_EQ(chain[1].root.alpha, W({1, 1}));
    EXPECT_EQ(chain[2].root.alpha, W({3, 2}));
    EXPECT_EQ(chain[3].root.alpha, W({2, 1}));
    EXPECT_EQ(chain[4].root.alpha, W({3, 1}));
    EXPECT_EQ(chain[5].level, 1);
  }
}

TEST(ThetaChainTest, SizeAndShapeAcrossTypes) {
  struct Row {
    Type type;
    int rank;
  };
  for (Row row : {Row{Type::B, 3}, Row{Type::B, 4}, Row{Type::B, 5},
                  Row{Type::C, 3}, Row{Type::C, 4}, Row{Type::C, 5},
                  Row{Type::F, 4}, Row{Type::G, 2}}) {
    RootSystem rs(row.type, row.rank);
    std::vector<AffineRoot> chain = theta_chain(rs);
    const int L = rs.theta().height_l;
    const int S = rs.theta().height_s;
    const int finite = static_cast<int>(chain.size()) - 1;
    if (row.type == Type::G)
      EXPECT_EQ(finite, 2 * L + S - 2);
    else
      EXPECT_EQ(finite, 2 * L + S - 1);
    EXPECT_EQ(chain[static_cast<std::size_t>(finite / 2)].root.alpha,
              rs.theta().alpha);
    // theta_s sits in the upper half, trailed only by long roots
    int at = -1;
    for (int k = 0; k < finite; ++k)
      if (chain[static_cast<std::size_t>(k)].root.alpha == rs.theta_s().alpha)
        at = k;
    ASSERT_GT(at, finite / 2);
    for (int k = at + 1; k < finite; ++k)
      EXPECT_TRUE(chain[static_cast<std::size_t>(k)].root.is_long);
  }
}

TEST(YOperatorTest, ActionOnLatticeOriginAndShortRoot) {
  RootSystem rs(Type::B, 2);
  GAElem ye0 = apply_Y_theta(rs, ga_monomial(wzero()));
  EXPECT_EQ(ye0, ga_monomial(wzero(), qtt_monomial(0, 2, 2)));

  GAElem yts = apply_Y_theta(rs, ga_monomial(rs.theta_s().omega));
  GAElem want = ga_monomial(rs.theta_s().omega, qtt_monomial(2, 0, -2));
  ga_add_term(want, wzero(),
              qtt_neg(qtt_mul(h_orbit(false), qtt_monomial(0, 1, 0))));
  EXPECT_EQ(yts, want);
}

TEST(YOperatorTest, InverseEigenvalueOnOrigin) {
  struct Row {
    Type type;
    int rank;
  };
  for (Row row : {Row{Type::B, 2}, Row{Type::B, 3}, Row{Type::C, 3}, Row{Type::G, 2}}) {
    RootSystem rs(row.type, row.rank);
    const int L = rs.theta().height_l;
    const int S = rs.theta().height_s;
    GAElem got = apply_Y_theta_inverse(rs, ga_monomial(wzero()));
    LaurentQTT ev = rs.type() == Type::G ? qtt_monomial(0, -2, -4)
                                         : qtt_monomial(0, -S, -2 * L);
    EXPECT_EQ(got, ga_monomial(wzero(), ev)) << rs.name();

    GAElem round = apply_Y_theta_inverse(rs, apply_Y_theta(rs, ga_monomial(rs.theta_s().omega)));
    EXPECT_EQ(round, ga_monomial(rs.theta_s().omega)) << rs.name();
  }
}

TEST(PropP1Test, SymbolicIdentities) {
  struct Row {
    Type type;
    int rank;
  };
  for (Row row : {Row{Type::B, 2}, Row{Type::B, 3}, Row{Type::C, 3},
                  Row{Type::C, 4}, Row{Type::G, 2}}) {
    RootSystem rs(row.type, row.rank);
    P1Report rep = verify_prop_p1(rs);
    EXPECT_TRUE(rep.all_pass()) << rs.name();
    std::vector<std::string> names;
    for (const P1Identity& id : rep.identities) {
      names.push_back(id.name);
      EXPECT_TRUE(id.pass) << rs.name() << " " << id.name << "\n  lhs: " << id.lhs
                           << "\n  rhs: " << id.rhs;
    }
    std::vector<std::string> want;
    if (row.type == Type::G)
      want = {"rg_partial", "tau_gtheta", "ye_e0", "ye_theta_s"};
    else
      want = {"epsilon_table", "re_product", "rd_product",
              "rc_product",    "rg_partial", "tau_gtheta",
              "ye_e0",         "ye_theta_s"};
    EXPECT_EQ(names, want) << rs.name();
  }
}

TEST(PropP1Test, F4LongRun) {
  if (std::getenv("EXMULT_LONG") == nullptr)
    GTEST_SKIP() << "set EXMULT_LONG=1 to run the F4 chain verification";
  RootSystem rs(Type::F, 4);
  P1Report rep = verify_prop_p1(rs);
  for (const P1Identity& id : rep.identities)
    EXPECT_TRUE(id.pass) << id.name << "\n  lhs: " << id.lhs << "\n  rhs: " << id.rhs;
}

TEST(InnerClosedFormTest, MatchesExpansionRatios) {
  for (const RootSystem& rs : {RootSystem(Type::B, 2), RootSystem(Type::G, 2)}) {
    QPoly one_one = cherednik_inner(rs, qep_one(), qep_one(), 2, 1);
    for (const Root& rt : rs.positive_roots()) {
      if (rt.is_long) continue;
      QExpPoly ea;
      qep_add_term(ea, rt.omega, qp_one());
      QPoly lhs = cherednik_inner(rs, ea, qep_one(), 2, 1);
      InnerEAlpha closed = inner_e_alpha_closed(rs, rt);
      // (e^alpha, 1) den == (1, 1) num, cross-multiplied
      EXPECT_EQ(qp_mul(lhs, qtt_substitute_t(closed.den, 2, 1)),
                qp_mul(one_one, qtt_substitute_t(closed.num, 2, 1)))
          << rs.name() << " root " << rt.index;
    }
  }
  EXPECT_THROW(inner_e_alpha_closed(RootSystem(Type::B, 2),
                                    RootSystem(Type::B, 2).theta()),
               NotShortPositive);
}

TEST(InnerClosedFormTest, ConjugationRecursion) {
  for (const RootSystem& rs :
       {RootSystem(Type::B, 2), RootSystem(Type::B, 3), RootSystem(Type::C, 3),
        RootSystem(Type::G, 2)}) {
    int pairs = 0;
    for (const Root& beta : rs.positive_roots()) {
      if (beta.is_long) continue;
      for (int j = 0; j < rs.rank(); ++j) {
        Weight refl = rs.simple_reflection_root(j, beta.alpha);
        Weight down = beta.alpha;
        down[j] = static_cast<std::int16_t>(down[j] - 1);
        if (refl != down) continue;
        bool ok = true;
        for (int c = 0; c < rs.rank(); ++c) ok = ok && refl[c] >= 0;
        if (!ok || wis_zero(refl)) continue;
        const Root& alpha = rs.root_from_alpha(refl);
        if (alpha.is_long) continue;
        // t_j^{-1} (e^alpha, 1) = t_j (e^beta, 1) for alpha = s_j beta
        InnerEAlpha a = inner_e_alpha_closed(rs, alpha);
        InnerEAlpha b = inner_e_alpha_closed(rs, beta);
        bool jl = rs.simple_root(j).is_long;
        EXPECT_EQ(qtt_mul(t_orbit(jl, -1), a.num), qtt_mul(t_orbit(jl, 1), b.num))
            << rs.name() << " beta " << beta.index << " j " << j;
        EXPECT_EQ(a.den, b.den);
        ++pairs;
      }
    }
    EXPECT_GT(pairs, 0) << rs.name();
  }
}

TEST(YOperatorTest, AdjointWithRespectToPairing) {
  for (const RootSystem& rs : {RootSystem(Type::B, 2), RootSystem(Type::G, 2)}) {
    QExpPoly yts = ga_substitute_t(apply_Y_theta(rs, ga_monomial(rs.theta_s().omega)), 2, 1);
    QPoly lhs = cherednik_inner(rs, yts, qep_one(), 2, 1);

    QExpPoly yinv = ga_substitute_t(apply_Y_theta_inverse(rs, ga_monomial(wzero())), 2, 1);
    QExpPoly ea;
    qep_add_term(ea, rs.theta_s().omega, qp_one());
    QPoly rhs = cherednik_inner(rs, ea, yinv, 2, 1);
    EXPECT_EQ(lhs, rhs) << rs.name();
  }
}

}  // namespace
}  // namespace exmult
