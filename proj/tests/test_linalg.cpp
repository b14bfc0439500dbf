#include <random>

#include "doctest.h"
#include "liecoh/errors.hpp"
#include "liecoh/liealg.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/textio.hpp"

using namespace liecoh;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

RingMatrix strict_upper_random(std::mt19937& gen, int n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> with_var(0, 2);
  RingMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      MultiPoly entry{Rational(coeff(gen))};
      if (with_var(gen) == 0) entry = entry * MultiPoly::var(VarId::zeta("r"));
      m.at(i, j) = entry;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("exp of zero is the identity") {
  RingMatrix zero(3, 3);
  CHECK(mat_exp_nilpotent(zero) == RingMatrix::identity(3));
}

TEST_CASE("A1 group element from the adjoint") {
  LieAlgebra a1 = build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric);
  int e = a1.find("e[r]");
  RingMatrix ad_e = a1.adjoint(e);
  RingMatrix m = ad_e.scale(MultiPoly::var(VarId::zeta("r")));
  RingMatrix x = mat_exp_nilpotent(m);
  // Unipotent lower-triangular with the half-square entry.
  CHECK(x.at(0, 0) == P("1"));
  CHECK(x.at(1, 0) == P("1/2*zeta[r]^2"));
  CHECK(x.at(1, 1) == P("1"));
  CHECK(x.at(1, 2) == P("-zeta[r]"));
  CHECK(x.at(2, 0) == P("-zeta[r]"));
  CHECK(x.at(2, 1) == P("0"));
  CHECK(x.at(2, 2) == P("1"));
  // Nilpotency order is three: the square is nonzero, the cube vanishes.
  CHECK_FALSE((ad_e * ad_e).is_zero());
  CHECK((ad_e * ad_e * ad_e).is_zero());

  // log inverts exp exactly.
  CHECK(mat_log_unipotent(x) == m);
}

TEST_CASE("non-nilpotent directions are rejected") {
  LieAlgebra a1 = build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric);
  RingMatrix ad_h = a1.adjoint(a1.find("h[r]"));
  CHECK_THROWS_AS(mat_exp_nilpotent(ad_h), NotNilpotentError);
  RingMatrix bad = RingMatrix::identity(2).scale(MultiPoly(Rational(2)));
  CHECK_THROWS_AS(mat_log_unipotent(bad), NotUnipotentError);
}

TEST_CASE("B2 positive exponent is unipotent of order eight") {
  LieAlgebra b2 = build_chevalley(ChevalleySeries::B2, ConstantsMode::Numeric);
  RingMatrix a = b2.positive_exponent_matrix();
  RingMatrix power = RingMatrix::identity(b2.dim());
  for (int k = 0; k < 8; ++k) power = power * a;
  CHECK(power.is_zero());
  RingMatrix x = mat_exp_nilpotent(a);
  CHECK(mat_log_unipotent(x) == a);
}

TEST_CASE("exp and log satisfy group laws for nilpotent arguments") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 12; ++trial) {
    RingMatrix m = strict_upper_random(gen, 4);
    RingMatrix x = mat_exp_nilpotent(m);
    RingMatrix neg = m.scale(MultiPoly(Rational(-1)));
    CHECK(x * mat_exp_nilpotent(neg) == RingMatrix::identity(4));
    CHECK(mat_log_unipotent(x) == m);

    // Formal one-parameter law exp(sM) exp(tM) = exp((s+t)M).
    MultiPoly s = MultiPoly::var(VarId::zeta("s"));
    MultiPoly t = MultiPoly::var(VarId::t());
    CHECK(mat_exp_nilpotent(m.scale(s)) * mat_exp_nilpotent(m.scale(t)) ==
          mat_exp_nilpotent(m.scale(s + t)));
  }
}

TEST_CASE("solve_linear identity and zero systems") {
  RingMatrix id = RingMatrix::identity(3);
  std::vector<MultiPoly> b = {P("zeta[r]"), P("1 - zeta[r]"), P("0")};
  LinearSolution sol = solve_linear(id, b);
  CHECK(sol.unique);
  CHECK(sol.particular == b);

  RingMatrix zero(2, 2);
  LinearSolution null = solve_linear(zero, {MultiPoly(), MultiPoly()});
  CHECK_FALSE(null.unique);
  CHECK(null.kernel.size() == 2);
  CHECK_THROWS_AS(solve_linear(zero, {P("1"), MultiPoly()}), InconsistentError);
}

TEST_CASE("fraction-free elimination against the adjugate formula") {
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    RingMatrix a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a.at(i, j) = MultiPoly(Rational(coeff(gen)));
    std::vector<MultiPoly> b = {MultiPoly(Rational(coeff(gen))),
                                MultiPoly(Rational(coeff(gen))),
                                MultiPoly(Rational(coeff(gen)))};
    // 3x3 determinant and adjugate, expanded by hand.
    auto det2 = [&](int r0, int r1, int c0, int c1) {
      return a.at(r0, c0) * a.at(r1, c1) - a.at(r0, c1) * a.at(r1, c0);
    };
    MultiPoly det = a.at(0, 0) * det2(1, 2, 1, 2) - a.at(0, 1) * det2(1, 2, 0, 2) +
                    a.at(0, 2) * det2(1, 2, 0, 1);
    if (det.is_zero()) continue;
    LinearSolution sol = solve_linear(a, b);
    // Cramer: x_j * det = det of a with column j replaced by b.
    for (int j = 0; j < 3; ++j) {
      RingMatrix m = a;
      for (int i = 0; i < 3; ++i) m.at(i, j) = b[static_cast<size_t>(i)];
      auto mdet2 = [&](int r0, int r1, int c0, int c1) {
        return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
      };
      MultiPoly dj = m.at(0, 0) * mdet2(1, 2, 1, 2) - m.at(0, 1) * mdet2(1, 2, 0, 2) +
                     m.at(0, 2) * mdet2(1, 2, 0, 1);
      CHECK(sol.particular[static_cast<size_t>(j)] * det == dj);
    }
    // Re-multiplication check.
    CHECK(a.apply(sol.particular) == b);
  }
}

TEST_CASE("rank over the fraction field") {
  RingMatrix m(3, 2);
  m.at(0, 0) = P("zeta[r]");
  m.at(1, 0) = P("1");
  m.at(1, 1) = P("zeta[r]");
  m.at(2, 1) = P("zeta[r]^2");
  CHECK(mat_rank(m) == 2);
  RingMatrix rank1(2, 2);
  rank1.at(0, 0) = P("zeta[r]");
  rank1.at(0, 1) = P("zeta[r]^2");
  rank1.at(1, 0) = P("1");
  rank1.at(1, 1) = P("zeta[r]");
  CHECK(mat_rank(rank1) == 1);
}
