#ifndef LIECOH_BCHREAL_HPP
#define LIECOH_BCHREAL_HPP

#include <map>
#include <optional>

#include "liecoh/coherent.hpp"
#include "liecoh/liealg.hpp"

namespace liecoh {

// Coordinates on zeta-space: one value per positive generator, in the order
// of LieAlgebra::positive_indices().
using ZetaVector = std::vector<MultiPoly>;

// The formal coordinate vector (zeta_a) at a given prime level.
ZetaVector formal_zeta(const LieAlgebra& g, int primes);
ZetaVector zeta_zero(const LieAlgebra& g);
ZetaVector zeta_negate(const ZetaVector& z);
// tau_beta(t): t on the component of the given positive generator.
ZetaVector zeta_tau(const LieAlgebra& g, int positive_index, const MultiPoly& t);

struct OplusResult {
  ZetaVector components;
  bool ambiguous_mod_center = false;
};

// Deformed addition: x(zeta) x(zeta') = x(zeta (+) zeta'). Components along
// central positive directions are invisible to the adjoint exponentials;
// they default to the plain sum and raise the ambiguity flag.
OplusResult oplus(const LieAlgebra& g, const ZetaVector& zeta, const ZetaVector& zeta_prime);

Rational bch_coeff_M(int n);
Rational bch_coeff_N(int n, int mu);

// Word-indexed structure-constant chains. An entry for word (a_1...a_n) and
// source x is the coefficient of the target in ad e_{a_1} ... ad e_{a_n} x.
struct CTensor {
  enum class Kind { Positive, Negative, CartanTarget, CartanSource };
  struct Entry {
    int target;             // basis index (or Cartan index for CartanTarget)
    int source;             // basis index
    std::vector<int> word;  // positive basis indices, outermost first
    RingElem value;
  };
  Kind kind;
  std::vector<Entry> entries;
};

CTensor ctensor(const LieAlgebra& g, CTensor::Kind kind, int source, int max_order);

// First-order vertex coefficients of the source generator: the map
// target positive generator -> polynomial coefficient. For a positive
// source these are the right-multiplication coefficients
// d/dt (zeta (+) tau(t))_target at t = 0; negative and Cartan sources give
// the lowering/Cartan coefficient polynomials entering the realizations,
// together with the Cartan-direction part (the lambda couplings).
struct VertexCoefficients {
  std::map<int, MultiPoly> towards;       // positive basis index -> coefficient
  std::map<int, MultiPoly> cartan_part;   // cartan index -> coefficient (P_{-a}^i)
};

VertexCoefficients vertex_coefficients(const LieAlgebra& g, int source);

// First-order differential operator sum_b coeff_b d/d zeta_b + scalar,
// with the scalar linear in the weight symbols lambda_i.
struct DiffOperator {
  std::map<int, MultiPoly> first_order;  // positive basis index -> coefficient
  MultiPoly scalar;

  std::vector<MultiPoly> apply(const LieAlgebra& g,
                               const std::vector<MultiPoly>& state) const;
  MultiPoly apply_scalar(const LieAlgebra& g, const MultiPoly& f) const;
  DiffOperator commutator(const LieAlgebra& g, const DiffOperator& o) const;
  bool same_action(const LieAlgebra& g, const DiffOperator& o) const;
  std::string to_string(const LieAlgebra& g) const;
  std::string to_latex(const LieAlgebra& g) const;
};

enum class RealizeMethod { ClosedForm, Solver };

// Differential-operator realization of every generator on the coherent
// family: op(x) applied to |zeta> equals ad x applied to |zeta>.
std::map<int, DiffOperator> realize(const LieAlgebra& g, RealizeMethod method);

struct RealizationCheck {
  bool action_ok = true;
  // Commutator closure as abstract operators, and the weaker closure of
  // their action on the coherent family (they differ when a coordinate
  // direction is invisible to the family).
  bool commutators_ok = true;
  bool commutators_on_family_ok = true;
  std::vector<std::string> failures;
  bool ok() const { return action_ok && commutators_ok; }
};

RealizationCheck check_realization(const LieAlgebra& g);

// Matrix element of the vertex operator attached to the positive direction
// beta: d/dt at t=0 of p(zetabar'', zeta (+) tau(t) (+) (-zeta) (+) zeta').
MultiPoly vertex_matrix_element(const LieAlgebra& g, int beta, const ZetaVector& zeta,
                                const ZetaVector& zeta_prime, DualConvention convention);
// The same element through the direct contraction of the vertex coefficient
// field against the differentiated ket; the two must agree.
MultiPoly vertex_matrix_element_contraction(const LieAlgebra& g, int beta,
                                            const ZetaVector& zeta,
                                            const ZetaVector& zeta_prime,
                                            DualConvention convention);

}  // namespace liecoh

#endif
