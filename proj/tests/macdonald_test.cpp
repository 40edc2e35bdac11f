#include "exmult/macdonald.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace exmult {
namespace {

QExpPoly adjoint_character(const RootSystem& rs) {
  QExpPoly chi;
  chi.emplace(wzero(), qp_monomial(0, Rat(rs.rank())));
  for (const Root& rt : rs.positive_roots()) {
    chi.emplace(rt.omega, qp_one());
    chi.emplace(wneg(rt.omega), qp_one());
  }
  return chi;
}

TEST(QPoly, Arithmetic) {
  QPoly a = qp_add(qp_monomial(2), qp_monomial(8));  // q + q^4
  EXPECT_EQ(qp_to_string(a), "1*q^1 + 1*q^4");
  EXPECT_EQ(qp_eval(a, Rat(2)), Rat(18));
  EXPECT_EQ(qp_neg_q(a), qp_add(qp_monomial(2, Rat(-1)), qp_monomial(8)));
  QPoly b = qp_mul(a, a);
  EXPECT_EQ(qp_eval(b, Rat(2)), Rat(324));
  EXPECT_EQ(qp_div_exact(b, a), a);
  QPoly one_minus_q4 = qp_sub(qp_one(), qp_monomial(8));
  QPoly one_minus_q2 = qp_sub(qp_one(), qp_monomial(4));
  EXPECT_EQ(qp_div_exact(one_minus_q4, one_minus_q2), qp_add(qp_one(), qp_monomial(4)));
  EXPECT_THROW(qp_div_exact(qp_add(qp_one(), qp_monomial(2)), one_minus_q2), DivisionFailure);
  EXPECT_THROW(qp_neg_q(qp_monomial(3)), NonPolynomial);
  EXPECT_TRUE(qp_is_palindromic(a));
  EXPECT_FALSE(qp_is_palindromic(qp_add(qp_one(), a)));
  EXPECT_EQ(qp_qinv(a), qp_add(qp_monomial(-2), qp_monomial(-8)));
}

TEST(Macdonald, PoincareSumMatchesProduct) {
  for (auto [t, r] : std::vector<std::pair<Type, int>>{
           {Type::B, 2}, {Type::B, 3}, {Type::C, 3}, {Type::G, 2}}) {
    RootSystem rs(t, r);
    for (auto [ks, kl] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
      QPoly sum = poincare_sum(rs, ks, kl);
      QPoly prod = poincare_product(rs, ks, kl);
      EXPECT_EQ(sum, prod) << rs.name() << " k=(" << ks << "," << kl << ")";
      EXPECT_EQ(qp_eval(sum, Rat(1)), Rat(Cint(rs.weyl_order())));
      int top = 0;
      for (const Root& rt : rs.positive_roots()) top += rs.label(rt, ks, kl);
      EXPECT_EQ(qp_max_exp2(sum), 2 * top);
    }
  }
}

TEST(Macdonald, ConstantTermOfNablaAtUnitLabel) {
  // With k = (1,1), nabla = prod (1 - e^alpha) has constant term |W|.
  for (auto [t, r] :
       std::vector<std::pair<Type, int>>{{Type::B, 2}, {Type::C, 3}, {Type::G, 2}}) {
    RootSystem rs(t, r);
    QPoly ct = ct_with_factors(qep_one(), nabla_factors(rs, 1, 1), rs.rank());
    EXPECT_EQ(ct, qp_monomial(0, Rat(Cint(rs.weyl_order())))) << rs.name();
  }
}

TEST(Macdonald, CharacterOrthonormality) {
  for (auto [t, r] : std::vector<std::pair<Type, int>>{{Type::B, 2}, {Type::G, 2}}) {
    RootSystem rs(t, r);
    QExpPoly one = qep_one();
    QExpPoly small = qep_from_character(little_adjoint_character(rs));
    QExpPoly adj = adjoint_character(rs);
    EXPECT_EQ(macdonald_inner(rs, one, one, 1, 1), qp_one()) << rs.name();
    EXPECT_EQ(macdonald_inner(rs, small, small, 1, 1), qp_one()) << rs.name();
    EXPECT_EQ(macdonald_inner(rs, adj, adj, 1, 1), qp_one()) << rs.name();
    EXPECT_TRUE(qp_is_zero(macdonald_inner(rs, small, one, 1, 1))) << rs.name();
    EXPECT_TRUE(qp_is_zero(macdonald_inner(rs, adj, small, 1, 1))) << rs.name();
  }
}

TEST(Macdonald, DeltaConstantTermMatchesClosedForm) {
  for (auto [t, r] : std::vector<std::pair<Type, int>>{{Type::B, 2}, {Type::G, 2}}) {
    RootSystem rs(t, r);
    QExpPoly one = qep_one();
    for (auto [ks, kl] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
      QPoly brute = cherednik_inner(rs, one, one, ks, kl);
      QPoly closed = ct_delta_closed(rs, ks, kl);
      EXPECT_EQ(brute, closed) << rs.name() << " k=(" << ks << "," << kl << ")";
    }
  }
}

TEST(Macdonald, DeltaConstantTermAtUnitLabelIsPoincare) {
  for (auto [t, r] :
       std::vector<std::pair<Type, int>>{{Type::B, 2}, {Type::B, 3}, {Type::G, 2}}) {
    RootSystem rs(t, r);
    EXPECT_EQ(ct_delta_closed(rs, 1, 1), poincare_product(rs, 1, 1)) << rs.name();
  }
}

TEST(Macdonald, FullExpansionAgreesWithPrunedPath) {
  RootSystem b2(Type::B, 2);
  QExpPoly full = delta(b2, 1, 1);
  EXPECT_EQ(constant_term(full), cherednik_inner(b2, qep_one(), qep_one(), 1, 1));
  QExpPoly nb = nabla(b2, 2, 1);
  EXPECT_EQ(constant_term(nb),
            ct_with_factors(qep_one(), nabla_factors(b2, 2, 1), b2.rank()));
}

TEST(Macdonald, RelationD) {
  for (auto [t, r] : std::vector<std::pair<Type, int>>{{Type::B, 2}, {Type::G, 2}}) {
    RootSystem rs(t, r);
    QExpPoly one = qep_one();
    QExpPoly small = qep_from_character(little_adjoint_character(rs));
    std::vector<QExpPoly> fs = {one, small};
    for (const QExpPoly& f : fs) {
      for (const QExpPoly& h : fs) {
        RelationReport rep = verify_relation_d(rs, f, h, 2, 1);
        EXPECT_TRUE(rep.ok) << rs.name() << ": " << qp_to_string(rep.lhs) << " vs "
                            << qp_to_string(rep.rhs);
      }
    }
  }
}

TEST(Macdonald, ExpansionCap) {
  RootSystem f4(Type::F, 4);
  ASSERT_EQ(setenv("EXMULT_TERM_CAP", "500", 1), 0);
  EXPECT_THROW(nabla(f4, 2, 1), ExpansionTooLarge);
  ASSERT_EQ(unsetenv("EXMULT_TERM_CAP"), 0);
}

}  // namespace
}  // namespace exmult
