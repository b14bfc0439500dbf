#include "doctest.h"
#include "liecoh/defio.hpp"
#include "liecoh/errors.hpp"
#include "liecoh/liealg.hpp"
#include "liecoh/textio.hpp"

using namespace liecoh;

namespace {

RingElem R(const std::string& s) { return parse_ring(s); }

int nilpotency_order(const LieAlgebra& g, int x) {
  RingMatrix ad = g.adjoint(x);
  RingMatrix power = RingMatrix::identity(g.dim());
  for (int k = 1; k <= g.dim() + 1; ++k) {
    power = power * ad;
    if (power.is_zero()) return k;
  }
  return -1;
}

}  // namespace

TEST_CASE("every cataloged builder passes validation") {
  for (const auto& name : cataloged_names()) {
    if (std::string(name).rfind("fan", 0) == 0) continue;  // see the fan case below
    LieAlgebra g = build_named(name);
    ValidationReport rep = g.validate();
    INFO(name, ": ", rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("fan tensor fails Jacobi exactly on the forced-weight triples") {
  // With inert outer spokes and zero spoke weights, bracketing h through
  // [e_s, e_{+-r}] cannot close: the reference tensor that fixes the fan
  // coherent state is not a Lie algebra. The violation set is precisely
  // the two triples that would force outer-spoke weights.
  LieAlgebra g = build_fan(3);
  ValidationReport rep = g.validate();
  CHECK(rep.antisymmetry_ok);
  CHECK(rep.grading_ok);
  CHECK(rep.proper_ok);
  CHECK_FALSE(rep.jacobi_ok);
  int jacobi_count = 0;
  for (const auto& issue : rep.issues) {
    if (issue.axiom == "jacobi") {
      ++jacobi_count;
      CHECK(issue.detail.find("e[s]") != std::string::npos);
    }
  }
  CHECK(jacobi_count == 2);
}

TEST_CASE("numeric chevalley algebras validate") {
  for (ChevalleySeries s : {ChevalleySeries::A1, ChevalleySeries::A2, ChevalleySeries::B2,
                            ChevalleySeries::G2}) {
    LieAlgebra g = build_chevalley(s, ConstantsMode::Numeric);
    ValidationReport rep = g.validate();
    INFO(g.name, ": ", rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("A1 adjoint nilpotency") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric);
  CHECK(nilpotency_order(g, g.find("e[r]")) == 3);
  CHECK(nilpotency_order(g, g.find("f[r]")) == 3);
}

TEST_CASE("A2 nilpotency orders") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A2, ConstantsMode::Numeric);
  // The stated powers vanish; the sharp orders found are all three.
  for (const char* label : {"e[r]", "e[s]", "e[r+s]"}) {
    int order = nilpotency_order(g, g.find(label));
    CHECK(order == 3);
  }
  RingMatrix es = g.adjoint(g.find("e[s]"));
  CHECK((es * es * es * es).is_zero());
}

TEST_CASE("B2 nilpotency orders") {
  LieAlgebra g = build_chevalley(ChevalleySeries::B2, ConstantsMode::Numeric);
  // The stated fourth and third powers vanish; the sharp orders found are
  // all three (recorded, not forced).
  for (const char* label : {"e[r]", "e[s]", "e[r+s]", "e[2r+s]"}) {
    CHECK(nilpotency_order(g, g.find(label)) == 3);
  }
  RingMatrix er = g.adjoint(g.find("e[r]"));
  CHECK((er * er * er * er).is_zero());
}

TEST_CASE("G2 nilpotency orders") {
  LieAlgebra g = build_chevalley(ChevalleySeries::G2, ConstantsMode::Numeric);
  // Every e--h--e string keeps each root direction at sharp order at least
  // three; the highest-root square cannot vanish in any Lie algebra.
  CHECK(nilpotency_order(g, g.find("e[2r+s]")) == 3);
  CHECK(nilpotency_order(g, g.find("e[r-s]")) >= 3);
  RingMatrix e2rs = g.adjoint(g.find("e[2r+s]"));
  CHECK_FALSE((e2rs * e2rs).is_zero());
}

TEST_CASE("symbolic A2 spot structure constants") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A2, ConstantsMode::Symbolic);
  int es = g.find("e[s]"), er = g.find("e[r]"), frs = g.find("f[r+s]");
  // [e_s, f_{r+s}] = -N_{r,s} f_r and [e_r, f_{r+s}] = +N_{r,s} f_s.
  const BracketVec& b1 = g.bracket(es, frs);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].first == g.find("f[r]"));
  CHECK(b1[0].second == R("-N[r,s]"));
  const BracketVec& b2 = g.bracket(er, frs);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].first == g.find("f[s]"));
  CHECK(b2[0].second == R("N[r,s]"));
  // [e_{r+s}, f_{r+s}] = -(h_r + h_s) in the stored Cartan basis.
  const BracketVec& b3 = g.bracket(g.find("e[r+s]"), frs);
  REQUIRE(b3.size() == 2);
  CHECK(b3[0].second == R("-1"));
  CHECK(b3[1].second == R("-1"));
}

TEST_CASE("heisenberg builder") {
  LieAlgebra g = build_heisenberg(1);
  CHECK(g.dim() == 3);
  // The central element is represented by the zero matrix.
  CHECK(g.adjoint(g.find("c")).is_zero());
  ValidationReport rep = g.validate();
  CHECK(rep.ok());
  // [q, p] = -c with the paper's central normalization.
  const BracketVec& qp = g.bracket(g.find("q"), g.find("p"));
  REQUIRE(qp.size() == 1);
  CHECK(qp[0].second == R("-1"));

  LieAlgebra g2 = build_heisenberg(2);
  CHECK(g2.dim() == 5);
  CHECK(g2.validate().ok());
}

TEST_CASE("fan(3) adjoints") {
  LieAlgebra g = build_fan(3);
  CHECK(g.dim() == 6);
  // The spoke directions act trivially.
  CHECK(g.adjoint(g.find("e[s+r]")).is_zero());
  CHECK(g.adjoint(g.find("e[s-r]")).is_zero());
  // ad h is the reference diagonal with inert spokes.
  RingMatrix adh = g.adjoint(g.find("h"));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i != j) CHECK(adh.at(i, j).is_zero());
    }
  }
  CHECK(adh.at(0, 0) == MultiPoly(Rational(2)));
  CHECK(adh.at(1, 1) == MultiPoly(Rational(-2)));
  CHECK(adh.at(2, 2).is_zero());
  CHECK(adh.at(3, 3).is_zero());
  CHECK(adh.at(4, 4).is_zero());
  CHECK(adh.at(5, 5).is_zero());

  CHECK(build_fan(5).dim() == 8);
}

TEST_CASE("nonabelian2 adjoints") {
  LieAlgebra g = build_nonabelian2();
  CHECK(g.validate().ok());
  RingMatrix ade = g.adjoint(g.find("e"));
  // Matches the printed lowering matrix in the (h, e) ordering.
  CHECK(ade.at(0, 0).is_zero());
  CHECK(ade.at(0, 1).is_zero());
  CHECK(ade.at(1, 0) == MultiPoly(Rational(-1)));
  CHECK(ade.at(1, 1).is_zero());
  // ad h is diagonal with the weight sitting on e in the (h, e) basis.
  RingMatrix adh = g.adjoint(g.find("h"));
  CHECK(adh.at(0, 0).is_zero());
  CHECK(adh.at(1, 1) == MultiPoly(Rational(1)));
}

TEST_CASE("adjoint is a bracket homomorphism") {
  for (const auto& name : {"A2", "nonabelian2", "heisenberg(1)"}) {
    LieAlgebra g = build_named(name);
    for (int x = 0; x < g.dim(); ++x) {
      for (int y = 0; y < g.dim(); ++y) {
        RingMatrix lhs(g.dim(), g.dim());
        for (const auto& [t, c] : g.bracket(x, y))
          lhs = lhs + g.adjoint(t).scale(MultiPoly(c));
        RingMatrix rhs = g.adjoint(x) * g.adjoint(y) - g.adjoint(y) * g.adjoint(x);
        RingMatrix diff = lhs - rhs;
        bool ok = true;
        for (int i = 0; i < g.dim(); ++i)
          for (int j = 0; j < g.dim(); ++j)
            if (!diff.at(i, j).is_zero() &&
                !g.vanishes_mod_relations(diff.at(i, j).ring_value()))
              ok = false;
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("validation flags a corrupted tensor") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A2, ConstantsMode::Numeric);
  // Perturb one structure constant by +1.
  int er = g.find("e[r]"), es = g.find("e[s]");
  REQUIRE(!g.bracket_table[static_cast<size_t>(er)][static_cast<size_t>(es)].empty());
  auto& cell = g.bracket_table[static_cast<size_t>(er)][static_cast<size_t>(es)][0];
  cell.second = cell.second + RingElem(1);
  ValidationReport rep = g.validate();
  CHECK_FALSE(rep.ok());
  bool named = false;
  for (const auto& issue : rep.issues) {
    if (issue.axiom == "jacobi" && issue.detail.find("e[r]") != std::string::npos) named = true;
    if (issue.axiom == "antisymmetry") named = true;
  }
  CHECK(named);
}

TEST_CASE("abelian plane validates with zero brackets") {
  LieAlgebra g = build_abelian(2);
  CHECK(g.validate().ok());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(g.bracket(i, j).empty());
}

TEST_CASE("central extension of the abelian plane is heisenberg") {
  LieAlgebra base = build_abelian(2);
  Cocycle w = [](int i, int j) {
    if (i == 0 && j == 1) return RingElem(-1);
    if (i == 1 && j == 0) return RingElem(1);
    return RingElem();
  };
  LieAlgebra ext = central_extend(base, w);
  CHECK(ext.dim() == 3);
  CHECK(ext.validate().ok());
  LieAlgebra h1 = build_heisenberg(1);
  // Same structure tensor up to generator relabeling.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const BracketVec& a = ext.bracket(i, j);
      const BracketVec& b = h1.bracket(i, j);
      REQUIRE(a.size() == b.size());
      for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].first == b[k].first);
        CHECK(a[k].second == b[k].second);
      }
    }
  }
  // The added direction is graded as the doubled pseudo root.
  CHECK(ext.basis[2].type == Generator::Type::Positive);
  CHECK(ext.basis[2].root.coords == std::vector<int>{2});
}

TEST_CASE("zero cocycle decouples the center") {
  LieAlgebra base = build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric);
  LieAlgebra ext = central_extend(base, [](int, int) { return RingElem(); });
  CHECK(ext.dim() == 4);
  CHECK(ext.validate().ok());
  CHECK(ext.adjoint(3).is_zero());
  for (int i = 0; i < 4; ++i) {
    for (const auto& [t, c] : ext.bracket(i, 3)) CHECK(c.is_zero());
  }
}

TEST_CASE("a non-cocycle is rejected with the violating triple") {
  LieAlgebra base = build_heisenberg(2);
  // Pairing q1 with the center fails the 2-cocycle identity on the triple
  // (q1, q2, p2): the bracket [q2, p2] = -c feeds back into the pairing.
  Cocycle bad = [&](int i, int j) {
    int q1 = base.find("q1"), c = base.find("c");
    if (i == q1 && j == c) return RingElem(1);
    if (i == c && j == q1) return RingElem(-1);
    return RingElem();
  };
  CHECK_THROWS_AS(central_extend(base, bad), NotCocycleError);

  // Asymmetric pairings are rejected outright.
  LieAlgebra plane = build_abelian(2);
  Cocycle asym = [](int i, int j) { return i == 0 && j == 1 ? RingElem(1) : RingElem(); };
  CHECK_THROWS_AS(central_extend(plane, asym), NotCocycleError);
}

TEST_CASE("loopify at mode zero copies the algebra") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric);
  LieAlgebra loop = loopify(g, 0);
  CHECK(loop.dim() == g.dim());
  CHECK_FALSE(loop.truncated_brackets);
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) {
      const BracketVec& a = loop.bracket(i, j);
      const BracketVec& b = g.bracket(i, j);
      REQUIRE(a.size() == b.size());
      for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].first == b[k].first);
        CHECK(a[k].second == b[k].second);
      }
    }
  }
}

TEST_CASE("loop brackets carry mode sums and truncation flags") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric);
  LieAlgebra loop = loopify(g, 1);
  CHECK(loop.dim() == 9);
  CHECK(loop.truncated_brackets);
  int e1 = loop.find("e[r]@1");
  int fm1 = loop.find("f[r]@-1");
  int h0 = loop.find("h[r]@0");
  REQUIRE(e1 >= 0);
  REQUIRE(fm1 >= 0);
  REQUIRE(h0 >= 0);
  // [e z, f z^-1] = [e, f] z^0 = -h z^0.
  const BracketVec& b = loop.bracket(e1, fm1);
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == h0);
  CHECK(b[0].second == R("-1"));
  // [e z, e z] = 0 with nothing dropped for it.
  CHECK(loop.bracket(e1, e1).empty());
  // Nonzero-mode Cartan copies are graded as imaginary pseudo roots.
  int h1 = loop.find("h[r]@1");
  CHECK(loop.basis[static_cast<size_t>(h1)].type == Generator::Type::Positive);
  CHECK(loop.validate().ok());
}

TEST_CASE("affine extension carries the level cocycle on opposite modes") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric);
  LieAlgebra loop = loopify(g, 1);
  SymConst k = SymConst::user("k");
  LieAlgebra affine = central_extend(loop, affine_cocycle(loop, k), "K");
  int e1 = affine.find("e[r]@1");
  int fm1 = affine.find("f[r]@-1");
  int h0 = affine.find("h[r]@0");
  int K = affine.find("K");
  REQUIRE(K == affine.dim() - 1);
  // [e z, f z^-1] = [e, f] + k (e | f) K with the invariant-form pairing.
  const BracketVec& b = affine.bracket(e1, fm1);
  REQUIRE(b.size() == 2);
  CHECK(b[0].first == h0);
  CHECK(b[0].second == R("-1"));
  CHECK(b[1].first == K);
  CHECK(b[1].second == R("-2*k"));
  // Same-mode brackets carry no charge.
  int e0 = affine.find("e[r]@0");
  int f0 = affine.find("f[r]@0");
  const BracketVec& b0 = affine.bracket(e0, f0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0].first == h0);
  // The central direction joined the Cartan part.
  CHECK(affine.basis[static_cast<size_t>(K)].type == Generator::Type::Cartan);
}

TEST_CASE("mode-zero block of a loop algebra is the base algebra") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric);
  LieAlgebra loop = loopify(g, 1);
  int window = 3;
  auto idx = [&](int b) { return b * window + 1; };
  for (int a = 0; a < g.dim(); ++a) {
    for (int b = 0; b < g.dim(); ++b) {
      const BracketVec& lv = loop.bracket(idx(a), idx(b));
      const BracketVec& bv = g.bracket(a, b);
      REQUIRE(lv.size() == bv.size());
      for (size_t k = 0; k < lv.size(); ++k) {
        CHECK(lv[k].first == idx(bv[k].first));
        CHECK(lv[k].second == bv[k].second);
      }
    }
  }
}

TEST_CASE("derived subalgebra and center") {
  LieAlgebra h1 = build_heisenberg(1);
  Subspaces sub = derived_and_center(h1);
  REQUIRE(sub.derived.size() == 1);
  CHECK_FALSE(sub.derived[0][2].is_zero());
  REQUIRE(sub.center.size() == 1);
  CHECK_FALSE(sub.center[0][2].is_zero());
  CHECK(sub.center[0][0].is_zero());
  CHECK(sub.center[0][1].is_zero());

  LieAlgebra a2 = build_chevalley(ChevalleySeries::A2, ConstantsMode::Numeric);
  Subspaces sa2 = derived_and_center(a2);
  CHECK(sa2.derived.size() == 8);
  CHECK(sa2.center.empty());

  LieAlgebra fan = build_fan(3);
  Subspaces sf = derived_and_center(fan);
  // e_{s+r} and e_{s-r} lie in [g, g]; the center is exactly their span.
  CHECK(sf.derived.size() == 5);
  CHECK(sf.center.size() == 2);
  for (const auto& v : sf.center) {
    CHECK(v[0].is_zero());
    CHECK(v[1].is_zero());
    CHECK(v[2].is_zero());
    CHECK(v[5].is_zero());
  }
}

TEST_CASE("central elements have zero adjoints") {
  for (const auto& name : cataloged_names()) {
    LieAlgebra g = build_named(name);
    Subspaces sub = derived_and_center(g);
    for (const auto& z : sub.center) {
      RingMatrix acc(g.dim(), g.dim());
      for (int b = 0; b < g.dim(); ++b) {
        if (z[static_cast<size_t>(b)].is_zero()) continue;
        acc = acc + g.adjoint(b).scale(MultiPoly(z[static_cast<size_t>(b)]));
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("definition files round-trip") {
  for (const auto& name : {"A2", "heisenberg(1)", "fan(3)", "nonabelian2"}) {
    LieAlgebra g = build_named(name);
    std::string text = write_definition(g);
    LieAlgebra back = read_definition(text);
    CHECK(write_definition(back) == text);
    CHECK(back.dim() == g.dim());
  }
  LieAlgebra loop = loopify(build_chevalley(ChevalleySeries::A1, ConstantsMode::Numeric), 1);
  std::string text = write_definition(loop);
  CHECK(write_definition(read_definition(text)) == text);
}

TEST_CASE("user-supplied inconsistent constants break validation") {
  LieAlgebra g = build_chevalley(ChevalleySeries::A2, ConstantsMode::Symbolic);
  // Substituting an assignment off the admissible variety breaks Jacobi.
  std::map<SymConst, RingElem> bad{{SymConst::structure("r", "s"), R("2")}};
  for (auto& row : g.bracket_table) {
    for (auto& cell : row) {
      for (auto& [t, c] : cell) c = c.substitute(bad);
    }
  }
  g.numeric_assignments.clear();
  g.constants_mode = ConstantsMode::Numeric;
  CHECK_FALSE(g.validate().jacobi_ok);
}
