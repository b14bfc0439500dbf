#include "liecoh/coherent.hpp"

#include <algorithm>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

// Iterated action s_{k+1} = A s_k for the exponential series on a vector;
// far cheaper than exponentiating the full matrix.
std::vector<MultiPoly> exp_apply(const RingMatrix& a, std::vector<MultiPoly> v,
                                 Orientation orientation) {
  int n = a.rows();
  std::vector<MultiPoly> acc = v;
  Rational fact(1);
  for (int k = 1; k <= n; ++k) {
    v = orientation == Orientation::Column ? a.apply(v) : a.apply_left(v);
    bool zero = true;
    for (const auto& c : v) {
      if (!c.is_zero()) zero = false;
    }
    if (zero) return acc;
    fact = fact * Rational(k);
    MultiPoly inv{fact.inverse()};
    for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] =
        acc[static_cast<size_t>(i)] + v[static_cast<size_t>(i)] * inv;
  }
  throw NotNilpotentError("coherent_state: positive part is not nilpotent");
}

bool sparse_is_zero(const LieAlgebra& g, const BracketVec& v) {
  for (const auto& [t, c] : v) {
    if (!g.vanishes_mod_relations(c)) return false;
  }
  return true;
}

// Candidate test for a basis direction in the chosen orientation.
// Returns the Cartan weights when the direction qualifies.
std::optional<std::vector<RingElem>> check_candidate(const LieAlgebra& g, int idx,
                                                     Orientation orientation) {
  std::vector<RingElem> weights;
  for (int neg : g.negative_indices()) {
    if (orientation == Orientation::Column) {
      if (!sparse_is_zero(g, g.bracket(neg, idx))) return std::nullopt;
    } else {
      // Row action: the idx row of ad f must vanish, i.e. no bracket of f
      // with anything may produce a component along idx.
      for (int k = 0; k < g.dim(); ++k) {
        for (const auto& [t, c] : g.bracket(neg, k)) {
          if (t == idx && !g.vanishes_mod_relations(c)) return std::nullopt;
        }
      }
    }
  }
  for (int h : g.cartan_indices()) {
    RingElem weight;
    if (orientation == Orientation::Column) {
      for (const auto& [t, c] : g.bracket(h, idx)) {
        if (t == idx) {
          weight = c;
        } else if (!g.vanishes_mod_relations(c)) {
          return std::nullopt;
        }
      }
    } else {
      for (int k = 0; k < g.dim(); ++k) {
        for (const auto& [t, c] : g.bracket(h, k)) {
          if (t != idx || g.vanishes_mod_relations(c)) continue;
          if (k == idx) {
            weight = c;
          } else {
            return std::nullopt;
          }
        }
      }
    }
    weights.push_back(weight);
  }
  return weights;
}

// Cyclicity: the coefficient matrix of the state components must have full
// column rank over the fraction field.
bool is_cyclic(const LieAlgebra& g, int idx, Orientation orientation) {
  std::vector<MultiPoly> v(static_cast<size_t>(g.dim()));
  v[static_cast<size_t>(idx)] = MultiPoly(Rational(1));
  RingMatrix a = g.positive_exponent_matrix();
  std::vector<MultiPoly> state = exp_apply(a, std::move(v), orientation);

  // Rows indexed by the monomials appearing anywhere in the state.
  std::vector<VarMono> monos;
  for (const auto& comp : state) {
    for (const auto& term : comp.terms()) {
      if (std::find_if(monos.begin(), monos.end(), [&](const VarMono& m) {
            return m == term.mono;
          }) == monos.end())
        monos.push_back(term.mono);
    }
  }
  RingMatrix coeffs(static_cast<int>(monos.size()), g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    for (const auto& term : state[static_cast<size_t>(j)].terms()) {
      for (size_t mi = 0; mi < monos.size(); ++mi) {
        if (monos[mi] == term.mono) {
          coeffs.at(static_cast<int>(mi), j) = MultiPoly(g.to_numeric(term.coeff));
        }
      }
    }
  }
  return mat_rank(coeffs) == g.dim();
}

std::optional<Vacuum> try_vacuum(const LieAlgebra& g, int idx, Orientation orientation,
                                 bool require_cyclic) {
  auto weights = check_candidate(g, idx, orientation);
  if (!weights) return std::nullopt;
  bool cyc = is_cyclic(g, idx, orientation);
  if (require_cyclic && !cyc) return std::nullopt;
  Vacuum v;
  v.vector.assign(static_cast<size_t>(g.dim()), RingElem());
  v.vector[static_cast<size_t>(idx)] = RingElem(1);
  v.weights = std::move(*weights);
  v.basis_index = idx;
  v.orientation = orientation;
  v.cyclic = cyc;
  return v;
}

}  // namespace

Vacuum vacuum(const LieAlgebra& g) {
  if (g.pinned_vacuum) {
    // Annihilation and the eigen condition are hard requirements; a pinned
    // candidate records a cyclicity failure instead of being rejected.
    Orientation o = g.pinned_orientation.value_or(Orientation::Column);
    auto v = try_vacuum(g, *g.pinned_vacuum, o, false);
    if (v) return *v;
    throw NoVacuumError("vacuum: pinned vacuum of " + g.name +
                        " fails its invariants; algebra data is inconsistent");
  }
  for (Orientation o : {Orientation::Column, Orientation::Row}) {
    for (int idx = 0; idx < g.dim(); ++idx) {
      auto v = try_vacuum(g, idx, o, true);
      if (v) return *v;
    }
  }
  throw NoVacuumError(
      "vacuum: no joint eigenvector of the Cartan part is annihilated by the negative "
      "generators and cyclic for the positive exponentials in " +
      g.name);
}

CoherentState coherent_state(const LieAlgebra& g, int primes,
                             const std::optional<Vacuum>& vac) {
  Vacuum v0 = vac ? *vac : vacuum(g);
  std::vector<MultiPoly> v(static_cast<size_t>(g.dim()));
  for (int i = 0; i < g.dim(); ++i) v[static_cast<size_t>(i)] =
      MultiPoly(v0.vector[static_cast<size_t>(i)]);
  RingMatrix a = g.positive_exponent_matrix(primes);
  CoherentState st;
  st.components = exp_apply(a, std::move(v), v0.orientation);
  st.orientation = v0.orientation;
  if (g.extension_base_dim) st.central_part = st.components.back();
  return st;
}

std::vector<MultiPoly> dual_state(const LieAlgebra& g, DualConvention convention,
                                  int primes, const std::optional<Vacuum>& vac) {
  Vacuum v0 = vac ? *vac : vacuum(g);
  if (convention == DualConvention::ConjugateTranspose) {
    CoherentState ket = coherent_state(g, primes, v0);
    std::vector<MultiPoly> out;
    out.reserve(ket.components.size());
    for (const auto& comp : ket.components) out.push_back(comp.conj());
    return out;
  }
  // Chevalley convention: propagate the vacuum with the mirrored lowering
  // generators in barred variables, against the vacuum's own orientation.
  RingMatrix acc(g.dim(), g.dim());
  for (int pos : g.exponent_indices()) {
    const Generator& ge = g.basis[static_cast<size_t>(pos)];
    int mirror = -1;
    for (int j = 0; j < g.dim() && mirror < 0; ++j) {
      const Generator& gj = g.basis[static_cast<size_t>(j)];
      if (gj.type == Generator::Type::Negative && gj.root == -ge.root &&
          gj.mode == -ge.mode)
        mirror = j;
    }
    if (mirror < 0) continue;
    MultiPoly zv = MultiPoly::var(g.zeta_var(pos, true, primes));
    acc = acc + g.adjoint(mirror).scale(zv);
  }
  std::vector<MultiPoly> v(static_cast<size_t>(g.dim()));
  for (int i = 0; i < g.dim(); ++i) v[static_cast<size_t>(i)] =
      MultiPoly(v0.vector[static_cast<size_t>(i)]);
  Orientation flipped = v0.orientation == Orientation::Column ? Orientation::Row
                                                              : Orientation::Column;
  return exp_apply(acc, std::move(v), flipped);
}

MultiPoly norm_poly(const LieAlgebra& g, DualConvention convention) {
  Vacuum v0 = vacuum(g);
  std::vector<MultiPoly> bra = dual_state(g, convention, 0, v0);
  CoherentState ket = coherent_state(g, 1, v0);
  MultiPoly p;
  for (size_t i = 0; i < bra.size(); ++i) p = p + bra[i] * ket.components[i];
  return p;
}

CentralSplit central_split(const LieAlgebra& ext, const LieAlgebra& base,
                           const std::optional<Vacuum>& vac) {
  if (!ext.extension_base_dim || *ext.extension_base_dim != base.dim())
    throw NotAnExtensionError("central_split: " + ext.name + " does not extend " + base.name);
  int n = base.dim();
  // The restriction of the extended bracket to the base block must agree
  // with the base algebra, with the central direction as the only overflow.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<RingElem> diff(static_cast<size_t>(n + 1));
      for (const auto& [t, c] : ext.bracket(i, j)) diff[static_cast<size_t>(t)] =
          diff[static_cast<size_t>(t)] + c;
      for (const auto& [t, c] : base.bracket(i, j)) diff[static_cast<size_t>(t)] =
          diff[static_cast<size_t>(t)] - c;
      for (int t = 0; t < n; ++t) {
        if (!ext.vanishes_mod_relations(diff[static_cast<size_t>(t)]))
          throw NotAnExtensionError("central_split: bracket of (" +
                                    ext.basis[static_cast<size_t>(i)].label + ", " +
                                    ext.basis[static_cast<size_t>(j)].label +
                                    ") does not restrict to the base algebra");
      }
    }
  }
  CoherentState full = coherent_state(ext, 0, vac);
  CentralSplit out;
  out.central = full.components[static_cast<size_t>(n)];
  out.base_state.orientation = full.orientation;
  out.base_state.components.assign(full.components.begin(), full.components.begin() + n);
  return out;
}

Vacuum spread_vacuum(const LieAlgebra& loop_algebra, const LieAlgebra& base) {
  if (!loop_algebra.loop_base_dim || *loop_algebra.loop_base_dim != base.dim())
    throw Error("spread_vacuum: algebra is not a loop of the given base");
  Vacuum base_vac = vacuum(base);
  int max_mode = loop_algebra.mode_window ? loop_algebra.mode_window->second : 0;
  int window = 2 * max_mode + 1;
  Vacuum v;
  v.orientation = base_vac.orientation;
  v.basis_index = -1;
  v.vector.assign(static_cast<size_t>(loop_algebra.dim()), RingElem());
  for (int b = 0; b < base.dim(); ++b) {
    for (int m = -max_mode; m <= max_mode; ++m) {
      v.vector[static_cast<size_t>(b * window + (m + max_mode))] =
          base_vac.vector[static_cast<size_t>(b)];
    }
  }
  v.weights = base_vac.weights;
  return v;
}

CoherentState loop_coherent(const LieAlgebra& g, int max_mode,
                            const LieAlgebra* loop_algebra) {
  if (max_mode < 0) throw Error("loop_coherent: negative mode bound");
  CoherentState base_state = coherent_state(g);
  std::map<VarId, MultiPoly> bindings;
  for (int p : g.exponent_indices()) {
    VarId v = g.zeta_var(p);
    MultiPoly loop_var;
    for (int m = -max_mode; m <= max_mode; ++m) {
      VarId mode_var = VarId::zeta_mode(g.basis[static_cast<size_t>(p)].var_key, m);
      loop_var = loop_var + MultiPoly::var(mode_var) * MultiPoly::var(VarId::z(), m);
    }
    bindings[v] = loop_var;
  }
  CoherentState out;
  out.orientation = base_state.orientation;
  out.components.reserve(base_state.components.size());
  int z_span = 0;
  for (const auto& comp : base_state.components) {
    MultiPoly mapped = comp.substitute(bindings);
    z_span = std::max({z_span, mapped.degree_in(VarId::z()), -mapped.min_degree_in(VarId::z())});
    out.components.push_back(std::move(mapped));
  }
  if (loop_algebra) {
    int window = loop_algebra->mode_window ? loop_algebra->mode_window->second : 0;
    if (z_span > window)
      throw WindowOverflowError("loop_coherent: state spans modes up to " +
                                std::to_string(z_span) + " but the loop window is " +
                                std::to_string(window));
  }
  return out;
}

MultiPoly km_central_term(const LieAlgebra& g, int max_mode, const SymConst& level,
                          int primes) {
  Vacuum v0 = vacuum(g);
  RingElem k = RingElem::constant(level);
  MultiPoly acc;
  for (int p : g.exponent_indices()) {
    const Generator& ge = g.basis[static_cast<size_t>(p)];
    // (alpha | beta) pairing of the loop direction against the vacuum.
    RingElem pairing;
    for (int b = 0; b < g.dim(); ++b) {
      if (v0.vector[static_cast<size_t>(b)].is_zero()) continue;
      const Generator& gb = g.basis[static_cast<size_t>(b)];
      if (gb.type == Generator::Type::Cartan) continue;
      Rational kappa = g.form(ge.root, gb.root);
      pairing = pairing + RingElem(kappa) * v0.vector[static_cast<size_t>(b)];
    }
    if (pairing.is_zero()) continue;
    for (int m = -max_mode; m <= max_mode; ++m) {
      if (m == 0) continue;
      VarId mode_var = VarId::zeta_mode(ge.var_key, m, false, primes);
      acc = acc + MultiPoly::var(mode_var) * MultiPoly::var(VarId::z(), m)
                      .scale(k * pairing * RingElem(Rational(m)));
    }
  }
  return acc;
}

MultiPoly km_norm_functional(const LieAlgebra& g, int max_mode, const SymConst& level,
                             DualConvention convention) {
  MultiPoly p0 = norm_poly(g, convention);
  std::map<VarId, MultiPoly> bindings;
  for (int p : g.exponent_indices()) {
    const std::string& key = g.basis[static_cast<size_t>(p)].var_key;
    // zeta'(z) = sum zeta'_n z^n ; zetabar(z) picks up z -> 1/z.
    MultiPoly primed, barred;
    for (int m = -max_mode; m <= max_mode; ++m) {
      primed = primed + MultiPoly::var(VarId::zeta_mode(key, m, false, 1)) *
                            MultiPoly::var(VarId::z(), m);
      barred = barred + MultiPoly::var(VarId::zeta_mode(key, m, true, 0)) *
                            MultiPoly::var(VarId::z(), -m);
    }
    bindings[VarId::zeta(key, false, 1)] = primed;
    bindings[VarId::zeta(key, true, 0)] = barred;
  }
  MultiPoly integrand = p0.substitute(bindings);
  MultiPoly c_prime = km_central_term(g, max_mode, level, 1);
  MultiPoly c_bar = km_central_term(g, max_mode, level, 0).conj();
  integrand = integrand + c_bar * c_prime;
  // The circle integral normalized to pick the z^0 Fourier coefficient.
  return integrand.coefficient_of(VarId::z(), 0);
}

}  // namespace liecoh
