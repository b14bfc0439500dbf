#ifndef LIECOH_COHERENT_HPP
#define LIECOH_COHERENT_HPP

#include <optional>

#include "liecoh/liealg.hpp"

namespace liecoh {

// GNS-style cyclic vector: annihilated by the negative generators, a joint
// eigenvector of the Cartan part, and cyclic for the positive exponentials.
// Algebras whose adjoint action has no such column vector (the nilpotent
// pseudo-root algebras) admit one in the transposed action instead; the
// orientation records which action generated it.
struct Vacuum {
  std::vector<RingElem> vector;
  std::vector<RingElem> weights;  // eigenvalue of each Cartan generator
  int basis_index = -1;
  Orientation orientation = Orientation::Column;
  // Whether the coherent family spans the whole space. The search never
  // returns a non-cyclic vacuum; a pinned one may record a failure here
  // (the reference fan tensor is the one cataloged case).
  bool cyclic = true;
};

struct CoherentState {
  std::vector<MultiPoly> components;
  std::optional<MultiPoly> central_part;  // set for centrally extended algebras
  Orientation orientation = Orientation::Column;
};

enum class DualConvention { Chevalley, ConjugateTranspose };

Vacuum vacuum(const LieAlgebra& g);

// exp(sum_a zeta_a ad e_a) applied to the vacuum, exactly. primes selects
// the variable family (0 for zeta, 1 for zeta').
CoherentState coherent_state(const LieAlgebra& g, int primes = 0,
                             const std::optional<Vacuum>& vac = std::nullopt);

// The bra covector, in barred variables.
//  - Chevalley: the vacuum row propagated by exp(sum zetabar_a ad f_a) over
//    the mirrored root pairs; for semisimple algebras this coincides with
//    the zeta -> -zetabar substitution applied to the ket.
//  - ConjugateTranspose: componentwise formal conjugation of the ket.
std::vector<MultiPoly> dual_state(const LieAlgebra& g, DualConvention convention,
                                  int primes = 0,
                                  const std::optional<Vacuum>& vac = std::nullopt);

// p(zetabar, zeta') = <zeta | zeta'>.
MultiPoly norm_poly(const LieAlgebra& g, DualConvention convention);

struct CentralSplit {
  CoherentState base_state;  // coordinates along the base algebra
  MultiPoly central;         // coefficient of the central direction
};

CentralSplit central_split(const LieAlgebra& ext, const LieAlgebra& base,
                           const std::optional<Vacuum>& vac = std::nullopt);

// Mode-spread vacuum of a loopified algebra: the base vacuum copied to
// every mode in the window (v^beta_n = v^beta).
Vacuum spread_vacuum(const LieAlgebra& loop_algebra, const LieAlgebra& base);

// Finite-dimensional coherent state with each zeta_a replaced by the
// Laurent polynomial sum_{|n| <= max_mode} zeta_{a,n} z^n. When a loopified
// algebra is supplied its window must cover the z-span of the result.
CoherentState loop_coherent(const LieAlgebra& g, int max_mode,
                            const LieAlgebra* loop_algebra = nullptr);

// Central charge functional c(zeta) = k (z dzeta/dz | v0).
MultiPoly km_central_term(const LieAlgebra& g, int max_mode, const SymConst& level,
                          int primes = 0);

// p_k[zetabar, zeta'] = z^0 coefficient of p0(zetabar(z), zeta'(z))
// + c*(zetabar) c(zeta').
MultiPoly km_norm_functional(const LieAlgebra& g, int max_mode, const SymConst& level,
                             DualConvention convention);

}  // namespace liecoh

#endif
