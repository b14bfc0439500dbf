#include "liecoh/bchreal.hpp"

#include <algorithm>
#include <iterator>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

std::vector<MultiPoly> unit_vector(int dim, int idx) {
  std::vector<MultiPoly> v(static_cast<size_t>(dim));
  v[static_cast<size_t>(idx)] = MultiPoly(Rational(1));
  return v;
}

bool all_zero(const std::vector<MultiPoly>& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

// exp(s * A) applied to v for s = +-1, via the nilpotent series.
std::vector<MultiPoly> exp_matrix_apply(const RingMatrix& a, std::vector<MultiPoly> v,
                                        int sign) {
  std::vector<MultiPoly> acc = v;
  Rational fact(1);
  int n = a.rows();
  for (int k = 1; k <= n; ++k) {
    v = a.apply(v);
    if (sign < 0) {
      for (auto& c : v) c = -c;
    }
    if (all_zero(v)) return acc;
    fact = fact * Rational(k);
    MultiPoly inv{fact.inverse()};
    for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] =
        acc[static_cast<size_t>(i)] + v[static_cast<size_t>(i)] * inv;
  }
  throw NotNilpotentError("bchreal: adjoint direction is not nilpotent");
}

// Matrix of ad(sum_a zeta_a e_a) with a substituted coordinate vector.
RingMatrix exponent_matrix(const LieAlgebra& g, const ZetaVector& zeta) {
  std::vector<int> pos = g.exponent_indices();
  if (zeta.size() != pos.size()) throw Error("bchreal: zeta vector has wrong length");
  RingMatrix acc(g.dim(), g.dim());
  for (size_t a = 0; a < pos.size(); ++a) {
    if (zeta[a].is_zero()) continue;
    acc = acc + g.adjoint(pos[a]).scale(zeta[a]);
  }
  return acc;
}

// ad_A restricted to the span of the positive generators.
RingMatrix exponent_matrix_positive(const LieAlgebra& g, const ZetaVector& zeta) {
  std::vector<int> pos = g.exponent_indices();
  RingMatrix full = exponent_matrix(g, zeta);
  RingMatrix sub(static_cast<int>(pos.size()), static_cast<int>(pos.size()));
  for (size_t i = 0; i < pos.size(); ++i)
    for (size_t j = 0; j < pos.size(); ++j)
      sub.at(static_cast<int>(i), static_cast<int>(j)) = full.at(pos[i], pos[j]);
  return sub;
}

// sum_k coeff(k) * M^k, truncated by nilpotency.
RingMatrix matrix_series(const RingMatrix& m, const std::function<Rational(int)>& coeff) {
  int n = m.rows();
  RingMatrix acc = RingMatrix::identity(n).scale(MultiPoly(coeff(0)));
  RingMatrix power = RingMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * m;
    if (power.is_zero()) break;
    Rational c = coeff(k);
    if (!c.is_zero()) acc = acc + power.scale(MultiPoly(c));
  }
  return acc;
}

}  // namespace

ZetaVector formal_zeta(const LieAlgebra& g, int primes) {
  ZetaVector out;
  for (int p : g.exponent_indices()) out.push_back(MultiPoly::var(g.zeta_var(p, false, primes)));
  return out;
}

ZetaVector zeta_zero(const LieAlgebra& g) {
  return ZetaVector(g.exponent_indices().size());
}

ZetaVector zeta_negate(const ZetaVector& z) {
  ZetaVector out;
  out.reserve(z.size());
  for (const auto& c : z) out.push_back(-c);
  return out;
}

ZetaVector zeta_tau(const LieAlgebra& g, int positive_index, const MultiPoly& t) {
  std::vector<int> pos = g.exponent_indices();
  ZetaVector out(pos.size());
  for (size_t a = 0; a < pos.size(); ++a) {
    if (pos[a] == positive_index) out[a] = t;
  }
  return out;
}

Rational bch_coeff_M(int n) {
  if (n < 0) throw Error("bch_coeff_M: negative order");
  Rational b = bernoulli(n);
  Rational sign(n % 2 == 0 ? 1 : -1);
  return sign * b / Rational(factorial(n));
}

Rational bch_coeff_N(int n, int mu) {
  if (n < 1 || mu < 0 || mu > n) throw Error("bch_coeff_N: bad order");
  Rational acc(0);
  for (int k = 0; k <= n - mu; ++k) {
    acc = acc + bernoulli(k) / Rational(factorial(k) * factorial(n - k));
  }
  return acc;
}

namespace {

// Exact reconstruction of symbolic coefficients from their values on the
// admissible sign variety. The function basis is the greedy independent
// family of square-free symbol monomials ordered by degree then text, so a
// coefficient that is a single rational multiple of a monomial comes back
// in exactly that shape.
class VarietyInterpolator {
 public:
  explicit VarietyInterpolator(const LieAlgebra& g) : g_(g) {
    const auto& assignments = g.numeric_assignments;
    points_ = assignments.size();
    std::vector<SymConst> symbols;
    for (const auto& [sym, val] : assignments.front()) symbols.push_back(sym);
    size_t n = symbols.size();
    std::vector<ConstMono> candidates;
    for (size_t mask = 0; mask < (1u << n); ++mask) {
      ConstMono mono;
      for (size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) mono.emplace_back(symbols[i], 1);
      }
      std::sort(mono.begin(), mono.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      candidates.push_back(std::move(mono));
    }
    std::sort(candidates.begin(), candidates.end(), [](const ConstMono& a, const ConstMono& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return compare_mono(a, b) < 0;
    });
    // Greedy rank growth over the evaluation matrix.
    for (const auto& cand : candidates) {
      if (basis_.size() == points_) break;
      std::vector<Rational> column = evaluate(cand);
      std::vector<std::vector<Rational>> trial = columns_;
      trial.push_back(column);
      if (rank(trial) > static_cast<int>(columns_.size())) {
        columns_.push_back(std::move(column));
        basis_.push_back(cand);
      }
    }
  }

  // Reconstructs the RingElem whose evaluations match the given values.
  RingElem reconstruct(const std::vector<Rational>& values) const {
    // Solve columns * x = values by exact elimination.
    size_t m = basis_.size();
    std::vector<std::vector<Rational>> a(points_, std::vector<Rational>(m + 1));
    for (size_t i = 0; i < points_; ++i) {
      for (size_t j = 0; j < m; ++j) a[i][j] = columns_[j][i];
      a[i][m] = values[i];
    }
    std::vector<int> pivot_of(m, -1);
    size_t row = 0;
    for (size_t col = 0; col < m && row < points_; ++col) {
      size_t p = row;
      while (p < points_ && a[p][col].is_zero()) ++p;
      if (p == points_) continue;
      std::swap(a[p], a[row]);
      Rational inv = a[row][col].inverse();
      for (size_t j = col; j <= m; ++j) a[row][j] = a[row][j] * inv;
      for (size_t i = 0; i < points_; ++i) {
        if (i == row || a[i][col].is_zero()) continue;
        Rational f = a[i][col];
        for (size_t j = col; j <= m; ++j) a[i][j] = a[i][j] - f * a[row][j];
      }
      pivot_of[col] = static_cast<int>(row);
      ++row;
    }
    for (size_t i = row; i < points_; ++i) {
      if (!a[i][m].is_zero())
        throw Error("variety interpolation: values outside the function space");
    }
    std::vector<RingElem::Term> terms;
    for (size_t j = 0; j < m; ++j) {
      if (pivot_of[j] < 0) continue;
      Rational c = a[static_cast<size_t>(pivot_of[j])][m];
      if (!c.is_zero()) terms.push_back({c, basis_[j]});
    }
    return RingElem::from_terms(std::move(terms));
  }

 private:
  const LieAlgebra& g_;
  size_t points_ = 0;
  std::vector<ConstMono> basis_;
  std::vector<std::vector<Rational>> columns_;  // per basis monomial

  std::vector<Rational> evaluate(const ConstMono& mono) const {
    std::vector<Rational> out;
    for (const auto& assignment : g_.numeric_assignments) {
      Rational v(1);
      for (const auto& [sym, exp] : mono) {
        auto it = assignment.find(sym);
        Rational base = it != assignment.end() && it->second.is_rational()
                            ? it->second.rational_value()
                            : Rational(0);
        for (int k = 0; k < exp; ++k) v = v * base;
      }
      out.push_back(v);
    }
    return out;
  }

  static int rank(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) return 0;
    size_t rows = cols[0].size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i];
    int r = 0;
    for (size_t col = 0; col < cols.size() && static_cast<size_t>(r) < rows; ++col) {
      size_t p = static_cast<size_t>(r);
      while (p < rows && a[p][col].is_zero()) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[static_cast<size_t>(r)]);
      for (size_t i = 0; i < rows; ++i) {
        if (i == static_cast<size_t>(r) || a[i][col].is_zero()) continue;
        Rational f = a[i][col] / a[static_cast<size_t>(r)][col];
        for (size_t j = col; j < cols.size(); ++j)
          a[i][j] = a[i][j] - f * a[static_cast<size_t>(r)][j];
      }
      ++r;
    }
    return r;
  }
};

LieAlgebra specialize(const LieAlgebra& g, const std::map<SymConst, RingElem>& assignment) {
  LieAlgebra out = g;
  for (auto& row : out.bracket_table) {
    for (auto& cell : row) {
      for (auto& [t, c] : cell) c = c.substitute(assignment);
    }
  }
  out.numeric_assignments.clear();
  out.product_relations.clear();
  out.constants_mode = ConstantsMode::Numeric;
  return out;
}

}  // namespace

OplusResult oplus(const LieAlgebra& g, const ZetaVector& zeta, const ZetaVector& zeta_prime) {
  std::vector<int> pos = g.exponent_indices();
  size_t np = pos.size();
  if (zeta.size() != np || zeta_prime.size() != np)
    throw Error("oplus: coordinate vectors must match the positive generator count");

  // Coupled sign relations (beyond independent squares) put zero divisors
  // in the quotient ring; there the sum is solved exactly at every
  // admissible assignment and the symbolic coefficients are reconstructed
  // on the variety.
  if (!g.product_relations.empty() && g.numeric_assignments.size() > 1) {
    std::vector<OplusResult> solved;
    for (const auto& assignment : g.numeric_assignments) {
      LieAlgebra gn = specialize(g, assignment);
      ZetaVector zn, zpn;
      for (const auto& c : zeta) zn.push_back(c.substitute_consts(assignment));
      for (const auto& c : zeta_prime) zpn.push_back(c.substitute_consts(assignment));
      solved.push_back(oplus(gn, zn, zpn));
    }
    VarietyInterpolator interp(g);
    OplusResult out;
    out.ambiguous_mod_center = solved.front().ambiguous_mod_center;
    out.components.assign(np, MultiPoly());
    for (size_t a = 0; a < np; ++a) {
      // Union of monomials across the assignments.
      std::vector<VarMono> monos;
      for (const auto& sol : solved) {
        for (const auto& term : sol.components[a].terms()) {
          bool seen = false;
          for (const auto& m : monos) {
            if (m == term.mono) seen = true;
          }
          if (!seen) monos.push_back(term.mono);
        }
      }
      std::vector<MultiPoly::Term> terms;
      for (const auto& mono : monos) {
        std::vector<Rational> values;
        for (const auto& sol : solved) {
          Rational v(0);
          for (const auto& term : sol.components[a].terms()) {
            if (term.mono == mono) v = term.coeff.rational_value();
          }
          values.push_back(v);
        }
        RingElem coeff = interp.reconstruct(values);
        if (!coeff.is_zero()) terms.push_back({std::move(coeff), mono});
      }
      out.components[a] = MultiPoly::from_terms(std::move(terms));
    }
    return out;
  }

  Vacuum v0 = vacuum(g);
  Orientation orient = v0.orientation;

  // Central positive directions are invisible to the adjoint exponentials;
  // their components default to the plain sum and flag the result.
  OplusResult out;
  out.components.assign(np, MultiPoly());
  std::vector<bool> central(np, false);
  for (size_t a = 0; a < np; ++a) {
    bool zero_ad = true;
    for (int j = 0; j < g.dim() && zero_ad; ++j) {
      if (!g.bracket(pos[a], j).empty()) zero_ad = false;
    }
    if (zero_ad) {
      central[a] = true;
      out.components[a] = zeta[a] + zeta_prime[a];
      out.ambiguous_mod_center = true;
    }
  }

  // Probe vectors: the vacuum, extended until the linearization
  // w -> sum_a w_a ad e_a (probe) has full rank on the non-central
  // directions. The vacuum alone can miss directions whose bracket with it
  // vanishes (the e_s column for the ten-dimensional algebra).
  std::vector<std::vector<MultiPoly>> probes;
  {
    std::vector<MultiPoly> vac(static_cast<size_t>(g.dim()));
    for (int i = 0; i < g.dim(); ++i) vac[static_cast<size_t>(i)] =
        MultiPoly(v0.vector[static_cast<size_t>(i)]);
    probes.push_back(std::move(vac));
  }
  std::vector<int> noncentral;
  for (size_t a = 0; a < np; ++a) {
    if (!central[a]) noncentral.push_back(static_cast<int>(a));
  }
  auto jacobian = [&](const std::vector<std::vector<MultiPoly>>& pr) {
    RingMatrix j0(g.dim() * static_cast<int>(pr.size()),
                  static_cast<int>(noncentral.size()));
    for (size_t k = 0; k < pr.size(); ++k) {
      for (size_t ai = 0; ai < noncentral.size(); ++ai) {
        int a = noncentral[ai];
        RingMatrix ad = g.adjoint(pos[static_cast<size_t>(a)]);
        std::vector<MultiPoly> img = orient == Orientation::Column
                                         ? ad.apply(pr[k])
                                         : ad.apply_left(pr[k]);
        for (int i = 0; i < g.dim(); ++i)
          j0.at(static_cast<int>(k) * g.dim() + i, static_cast<int>(ai)) =
              img[static_cast<size_t>(i)];
      }
    }
    return j0;
  };
  RingMatrix j0 = jacobian(probes);
  int want = static_cast<int>(noncentral.size());
  if (mat_rank(j0) < want) {
    for (int cand = 0; cand < g.dim() && mat_rank(j0) < want; ++cand) {
      std::vector<MultiPoly> unit(static_cast<size_t>(g.dim()));
      unit[static_cast<size_t>(cand)] = MultiPoly(Rational(1));
      std::vector<std::vector<MultiPoly>> next = probes;
      next.push_back(std::move(unit));
      RingMatrix jn = jacobian(next);
      if (mat_rank(jn) > mat_rank(j0)) {
        probes = std::move(next);
        j0 = std::move(jn);
      }
    }
    if (mat_rank(j0) < want)
      throw LogOutsidePositivePartError(
          "oplus: the adjoint does not separate the non-central directions");
  }

  // Product action on every probe, and the formal template to match.
  auto act = [&](const ZetaVector& coords, std::vector<MultiPoly> v) {
    RingMatrix m = exponent_matrix(g, coords);
    if (orient == Orientation::Row) m = m.transpose();
    return exp_matrix_apply(m, std::move(v), +1);
  };
  std::vector<std::vector<MultiPoly>> s;
  for (const auto& probe : probes) {
    if (orient == Orientation::Column) {
      s.push_back(act(zeta, act(zeta_prime, probe)));
    } else {
      s.push_back(act(zeta_prime, act(zeta, probe)));
    }
  }

  std::vector<VarId> wvars;
  for (size_t a = 0; a < np; ++a)
    wvars.push_back(VarId::zeta("#w" + std::to_string(a)));
  ZetaVector w_formal;
  for (size_t a = 0; a < np; ++a) w_formal.push_back(MultiPoly::var(wvars[a]));
  std::vector<std::vector<MultiPoly>> templ;
  for (const auto& probe : probes) templ.push_back(act(w_formal, probe));

  // The solved coordinates have bounded total degree; iterate generously
  // and stop on a clean residual.
  int max_degree = 2 * g.dim() + 2;
  ZetaVector w = out.components;  // central components pre-filled
  bool solved = false;
  for (int degree = 1; degree <= max_degree && !solved; ++degree) {
    std::map<VarId, MultiPoly> binding;
    for (size_t a = 0; a < np; ++a) binding[wvars[a]] = w[a];
    std::vector<MultiPoly> residual(probes.size() * static_cast<size_t>(g.dim()));
    bool any = false;
    for (size_t k = 0; k < probes.size(); ++k) {
      for (int i = 0; i < g.dim(); ++i) {
        MultiPoly res = g.reduce_mod_relations(
            s[k][static_cast<size_t>(i)] -
            templ[k][static_cast<size_t>(i)].substitute(binding));
        if (!res.is_zero()) any = true;
        residual[k * static_cast<size_t>(g.dim()) + static_cast<size_t>(i)] = std::move(res);
      }
    }
    if (!any) {
      solved = true;
      break;
    }
    // Keep only the current total degree of the residual; it is linear in
    // the next correction.
    std::vector<MultiPoly> rhs(residual.size());
    for (size_t i = 0; i < residual.size(); ++i) {
      std::vector<MultiPoly::Term> keep;
      for (const auto& t : residual[i].terms()) {
        int d = 0;
        for (const auto& [v, e] : t.mono) d += e;
        if (d == degree) keep.push_back(t);
      }
      rhs[i] = MultiPoly::from_terms(std::move(keep));
    }
    EntryNormalizer norm = [&g](const MultiPoly& v) { return g.reduce_mod_relations(v); };
    LinearSolution sol = solve_linear(j0, rhs, norm);
    for (size_t ai = 0; ai < noncentral.size(); ++ai) {
      size_t a = static_cast<size_t>(noncentral[ai]);
      w[a] = w[a] + sol.particular[ai];
    }
  }

  // Final consistency: the solved coordinates must reproduce the product
  // action exactly; anything else indicates the logarithm left the span of
  // the positive directions.
  std::map<VarId, MultiPoly> binding;
  for (size_t a = 0; a < np; ++a) binding[wvars[a]] = w[a];
  for (size_t k = 0; k < probes.size(); ++k) {
    for (int i = 0; i < g.dim(); ++i) {
      MultiPoly diff = templ[k][static_cast<size_t>(i)].substitute(binding) -
                       s[k][static_cast<size_t>(i)];
      if (!g.vanishes_mod_relations(diff))
        throw LogOutsidePositivePartError(
            "oplus: group product is not an exponential of the positive part");
    }
  }
  out.components = std::move(w);
  return out;
}

CTensor ctensor(const LieAlgebra& g, CTensor::Kind kind, int source, int max_order) {
  CTensor out;
  out.kind = kind;
  std::vector<int> pos = g.exponent_indices();
  std::vector<int> cartan = g.cartan_indices();

  struct Item {
    std::vector<int> word;
    std::vector<RingElem> vec;
  };
  std::vector<Item> frontier;
  {
    Item start;
    start.vec.assign(static_cast<size_t>(g.dim()), RingElem());
    start.vec[static_cast<size_t>(source)] = RingElem(1);
    frontier.push_back(std::move(start));
  }
  for (int order = 1; order <= max_order; ++order) {
    std::vector<Item> next;
    for (const auto& item : frontier) {
      for (int a : pos) {
        Item child;
        child.word = item.word;
        child.word.insert(child.word.begin(), a);  // outermost first
        child.vec = g.bracket_apply(a, item.vec);
        bool zero = true;
        for (const auto& c : child.vec) {
          if (!c.is_zero()) zero = false;
        }
        if (zero) continue;
        for (int t = 0; t < g.dim(); ++t) {
          const RingElem& c = child.vec[static_cast<size_t>(t)];
          if (c.is_zero()) continue;
          const Generator& gt = g.basis[static_cast<size_t>(t)];
          bool want = false;
          switch (kind) {
            case CTensor::Kind::Positive:
            case CTensor::Kind::CartanSource:
              want = gt.type == Generator::Type::Positive;
              break;
            case CTensor::Kind::Negative:
              want = gt.type == Generator::Type::Positive;
              break;
            case CTensor::Kind::CartanTarget:
              want = gt.type == Generator::Type::Cartan;
              break;
          }
          if (want) out.entries.push_back({t, source, child.word, c});
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  (void)cartan;
  return out;
}

namespace {

struct ConjugationSplit {
  std::map<int, MultiPoly> positive;  // positive basis index -> coefficient
  std::map<int, MultiPoly> cartan;    // cartan basis index -> coefficient
};

// exp(sign * ad_A)(x) decomposed over the basis; negative-root components
// are dropped by the caller (they annihilate the vacuum).
ConjugationSplit conjugate_generator(const LieAlgebra& g, int x, int sign) {
  RingMatrix a = exponent_matrix(g, formal_zeta(g, 0));
  std::vector<MultiPoly> v = exp_matrix_apply(a, unit_vector(g.dim(), x), sign);
  ConjugationSplit out;
  for (int i = 0; i < g.dim(); ++i) {
    if (v[static_cast<size_t>(i)].is_zero()) continue;
    const Generator& gi = g.basis[static_cast<size_t>(i)];
    if (gi.type == Generator::Type::Positive) out.positive[i] = v[static_cast<size_t>(i)];
    else if (gi.type == Generator::Type::Cartan) out.cartan[i] = v[static_cast<size_t>(i)];
  }
  return out;
}

// Conversion matrix between raw positive directions and the coordinate
// vector fields: columns give ad e_b in terms of the d/d zeta_a images.
RingMatrix conversion_series(const LieAlgebra& g, Orientation orient) {
  RingMatrix adp = exponent_matrix_positive(g, formal_zeta(g, 0));
  if (orient == Orientation::Column) {
    return matrix_series(adp, [](int k) { return bch_coeff_M(k); });
  }
  return matrix_series(adp, [](int k) { return bernoulli(k) / Rational(factorial(k)); });
}

}  // namespace

VertexCoefficients vertex_coefficients(const LieAlgebra& g, int source) {
  std::vector<int> pos = g.exponent_indices();
  VertexCoefficients out;
  const Generator& gs = g.basis[static_cast<size_t>(source)];
  Vacuum v0 = vacuum(g);
  Orientation orient = v0.orientation;
  RingMatrix conv = conversion_series(g, orient);

  if (gs.type == Generator::Type::Positive) {
    // Right-multiplication coefficients: column of sum_k M_k (ad_A)^k.
    int col = -1;
    for (size_t a = 0; a < pos.size(); ++a) {
      if (pos[a] == source) col = static_cast<int>(a);
    }
    RingMatrix t = matrix_series(exponent_matrix_positive(g, formal_zeta(g, 0)),
                                 [](int k) { return bch_coeff_M(k); });
    for (size_t a = 0; a < pos.size(); ++a) {
      MultiPoly c = g.reduce_mod_relations(t.at(static_cast<int>(a), col));
      if (!c.is_zero()) out.towards[pos[a]] = c;
    }
    return out;
  }

  // Lowering and Cartan sources: conjugate through the exponential, keep
  // the positive part (converted to coordinate fields) and the Cartan part.
  int sign = orient == Orientation::Column ? -1 : +1;
  ConjugationSplit split = conjugate_generator(g, source, sign);
  for (size_t b = 0; b < pos.size(); ++b) {
    if (!split.positive.count(pos[b])) continue;
    const MultiPoly& cb = split.positive[pos[b]];
    for (size_t a = 0; a < pos.size(); ++a) {
      MultiPoly conv_ab = conv.at(static_cast<int>(a), static_cast<int>(b));
      if (conv_ab.is_zero()) continue;
      MultiPoly add = cb * conv_ab;
      auto it = out.towards.find(pos[a]);
      if (it == out.towards.end()) out.towards[pos[a]] = add;
      else
        it->second = it->second + add;
    }
  }
  for (auto it = out.towards.begin(); it != out.towards.end();) {
    it->second = g.reduce_mod_relations(it->second);
    it = it->second.is_zero() ? out.towards.erase(it) : std::next(it);
  }
  for (auto& [idx, c] : out.cartan_part) split.cartan[idx] = g.reduce_mod_relations(c);
  out.cartan_part = split.cartan;
  return out;
}

std::vector<MultiPoly> DiffOperator::apply(const LieAlgebra& g,
                                           const std::vector<MultiPoly>& state) const {
  std::vector<MultiPoly> out(state.size());
  for (size_t i = 0; i < state.size(); ++i) {
    MultiPoly acc;
    for (const auto& [b, coeff] : first_order) {
      acc = acc + coeff * state[i].derivative(g.zeta_var(b));
    }
    out[i] = acc + scalar * state[i];
  }
  return out;
}

MultiPoly DiffOperator::apply_scalar(const LieAlgebra& g, const MultiPoly& f) const {
  MultiPoly acc;
  for (const auto& [b, coeff] : first_order) acc = acc + coeff * f.derivative(g.zeta_var(b));
  return acc + scalar * f;
}

DiffOperator DiffOperator::commutator(const LieAlgebra& g, const DiffOperator& o) const {
  DiffOperator out;
  // First-order part: u d(u') - u' d(u); scalar part: u d(s') - u' d(s).
  for (const auto& [b, ub] : first_order) {
    VarId vb = g.zeta_var(b);
    for (const auto& [c, uc] : o.first_order) {
      MultiPoly d = ub * uc.derivative(vb);
      auto it = out.first_order.find(c);
      if (it == out.first_order.end()) out.first_order[c] = d;
      else
        it->second = it->second + d;
    }
    out.scalar = out.scalar + ub * o.scalar.derivative(vb);
  }
  for (const auto& [b, ub] : o.first_order) {
    VarId vb = g.zeta_var(b);
    for (const auto& [c, uc] : first_order) {
      MultiPoly d = ub * uc.derivative(vb);
      auto it = out.first_order.find(c);
      if (it == out.first_order.end()) out.first_order[c] = -d;
      else
        it->second = it->second - d;
    }
    out.scalar = out.scalar - ub * scalar.derivative(vb);
  }
  for (auto it = out.first_order.begin(); it != out.first_order.end();) {
    it = it->second.is_zero() ? out.first_order.erase(it) : std::next(it);
  }
  return out;
}

bool DiffOperator::same_action(const LieAlgebra& g, const DiffOperator& o) const {
  for (const auto& [b, c] : first_order) {
    auto it = o.first_order.find(b);
    MultiPoly diff = it == o.first_order.end() ? c : c - it->second;
    if (!g.vanishes_mod_relations(diff)) return false;
  }
  for (const auto& [b, c] : o.first_order) {
    if (!first_order.count(b) && !g.vanishes_mod_relations(c)) return false;
  }
  return g.vanishes_mod_relations(scalar - o.scalar);
}

std::string DiffOperator::to_string(const LieAlgebra& g) const {
  std::string s;
  for (const auto& [b, c] : first_order) {
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*d/d" + g.zeta_var(b).to_string();
  }
  if (!scalar.is_zero()) {
    if (!s.empty()) s += " + ";
    s += scalar.to_string();
  }
  return s.empty() ? "0" : s;
}

std::string DiffOperator::to_latex(const LieAlgebra& g) const {
  std::string s;
  for (const auto& [b, c] : first_order) {
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "\\left(" + c.to_latex() + "\\right)\\partial_{" + g.zeta_var(b).to_latex() + "}";
  }
  if (!scalar.is_zero()) {
    if (!s.empty()) s += " + ";
    s += scalar.to_latex();
  }
  return s.empty() ? "0" : s;
}

namespace {

std::map<int, DiffOperator> realize_closed_form(const LieAlgebra& g) {
  std::map<int, DiffOperator> out;
  Vacuum v0 = vacuum(g);
  Orientation orient = v0.orientation;
  int sign = orient == Orientation::Column ? -1 : +1;
  std::vector<int> pos = g.exponent_indices();
  std::vector<int> cartan = g.cartan_indices();
  RingMatrix conv = conversion_series(g, orient);

  for (int x = 0; x < g.dim(); ++x) {
    ConjugationSplit split = conjugate_generator(g, x, sign);
    DiffOperator op;
    for (size_t b = 0; b < pos.size(); ++b) {
      auto it = split.positive.find(pos[b]);
      if (it == split.positive.end()) continue;
      for (size_t a = 0; a < pos.size(); ++a) {
        MultiPoly conv_ab = conv.at(static_cast<int>(a), static_cast<int>(b));
        if (conv_ab.is_zero()) continue;
        MultiPoly add = it->second * conv_ab;
        auto slot = op.first_order.find(pos[a]);
        if (slot == op.first_order.end()) op.first_order[pos[a]] = add;
        else
          slot->second = slot->second + add;
      }
    }
    for (size_t ci = 0; ci < cartan.size(); ++ci) {
      auto it = split.cartan.find(cartan[ci]);
      if (it == split.cartan.end()) continue;
      MultiPoly lam{RingElem::constant(g.weight_symbols[ci])};
      op.scalar = op.scalar + it->second * lam;
    }
    for (auto it = op.first_order.begin(); it != op.first_order.end();) {
      it->second = g.reduce_mod_relations(it->second);
      it = it->second.is_zero() ? op.first_order.erase(it) : std::next(it);
    }
    op.scalar = g.reduce_mod_relations(op.scalar);
    out[x] = std::move(op);
  }
  return out;
}

std::map<int, DiffOperator> realize_solver(const LieAlgebra& g) {
  std::map<int, DiffOperator> out;
  Vacuum v0 = vacuum(g);
  CoherentState st = coherent_state(g, 0, v0);
  // Quotients by the sign relations have zero divisors, which breaks
  // fraction-free pivoting; a symbolic algebra is therefore solved at its
  // canonical numeric assignment. Algebras with genuinely free symbols
  // (no declared relations) stay symbolic.
  std::map<SymConst, RingElem> canonical;
  if (!g.numeric_assignments.empty()) {
    canonical = g.numeric_assignments.front();
    for (auto& comp : st.components) comp = comp.substitute_consts(canonical);
  }
  std::vector<int> pos = g.exponent_indices();
  int n = g.dim();
  size_t np = pos.size();

  // Columns: d/d zeta_b |zeta>, then |zeta> itself for the scalar unknown.
  RingMatrix j(n, static_cast<int>(np) + 1);
  for (size_t b = 0; b < np; ++b) {
    VarId vb = g.zeta_var(pos[b]);
    for (int i = 0; i < n; ++i)
      j.at(i, static_cast<int>(b)) = st.components[static_cast<size_t>(i)].derivative(vb);
  }
  for (int i = 0; i < n; ++i)
    j.at(i, static_cast<int>(np)) = st.components[static_cast<size_t>(i)];

  for (int x = 0; x < n; ++x) {
    // Adjoint action on the state, in the vacuum's orientation.
    RingMatrix ad = g.adjoint(x);
    std::vector<MultiPoly> rhs = v0.orientation == Orientation::Column
                                     ? ad.apply(st.components)
                                     : ad.apply_left(st.components);
    for (auto& c : rhs) c = c.substitute_consts(canonical);
    LinearSolution sol;
    try {
      sol = solve_linear(j, rhs);
    } catch (const InconsistentError& err) {
      throw SolverInconsistentError(
          "realize: no coefficient assignment reproduces the adjoint action of " +
          g.basis[static_cast<size_t>(x)].label + " on the coherent family");
    }
    DiffOperator op;
    for (size_t b = 0; b < np; ++b) {
      if (!sol.particular[b].is_zero()) op.first_order[pos[b]] = sol.particular[b];
    }
    op.scalar = sol.particular[np];
    // Weight substitution: the scalar found against the concrete vacuum is
    // lambda-free; fold the concrete Cartan weights back into symbols when
    // they are recoverable (one Cartan generator or distinct weights is not
    // needed for the check; the closed form carries the symbolic version).
    out[x] = std::move(op);
  }
  return out;
}

}  // namespace

std::map<int, DiffOperator> realize(const LieAlgebra& g, RealizeMethod method) {
  if (method == RealizeMethod::ClosedForm) return realize_closed_form(g);
  std::map<int, DiffOperator> solved = realize_solver(g);
  // The solver determines the operators against the concrete vacuum; verify
  // against the symbolic closed form specialized at the concrete weights
  // and the canonical constants.
  std::map<int, DiffOperator> closed = realize_closed_form(g);
  Vacuum v0 = vacuum(g);
  std::map<SymConst, RingElem> sub;
  for (size_t i = 0; i < g.weight_symbols.size(); ++i)
    sub[g.weight_symbols[i]] = v0.weights[i];
  if (!g.numeric_assignments.empty()) {
    for (const auto& [sym, val] : g.numeric_assignments.front()) sub[sym] = val;
  }
  CoherentState st = coherent_state(g, 0, v0);
  for (auto& comp : st.components) comp = comp.substitute_consts(sub);
  for (auto& [x, op] : solved) {
    DiffOperator spec = closed[x];
    for (auto& [b, c] : spec.first_order) c = c.substitute_consts(sub);
    spec.scalar = spec.scalar.substitute_consts(sub);
    std::vector<MultiPoly> lhs = op.apply(g, st.components);
    std::vector<MultiPoly> rhs = spec.apply(g, st.components);
    for (size_t i = 0; i < lhs.size(); ++i) {
      if (!(lhs[i] == rhs[i]))
        throw SolverInconsistentError("realize: solver and closed form disagree on " +
                                      g.basis[static_cast<size_t>(x)].label);
    }
  }
  return solved;
}

RealizationCheck check_realization(const LieAlgebra& g) {
  RealizationCheck rep;
  Vacuum v0 = vacuum(g);
  CoherentState st = coherent_state(g, 0, v0);
  std::map<int, DiffOperator> ops = realize_closed_form(g);
  std::map<SymConst, RingElem> weight_sub;
  for (size_t i = 0; i < g.weight_symbols.size(); ++i)
    weight_sub[g.weight_symbols[i]] = v0.weights[i];

  // (i) Operator action reproduces the adjoint action on the family.
  for (int x = 0; x < g.dim(); ++x) {
    DiffOperator spec = ops[x];
    for (auto& [b, c] : spec.first_order) c = c.substitute_consts(weight_sub);
    spec.scalar = spec.scalar.substitute_consts(weight_sub);
    std::vector<MultiPoly> lhs = spec.apply(g, st.components);
    RingMatrix ad = g.adjoint(x);
    std::vector<MultiPoly> rhs = v0.orientation == Orientation::Column
                                     ? ad.apply(st.components)
                                     : ad.apply_left(st.components);
    for (size_t i = 0; i < lhs.size(); ++i) {
      if (!g.vanishes_mod_relations(lhs[i] - rhs[i])) {
        rep.action_ok = false;
        rep.failures.push_back("action of " + g.basis[static_cast<size_t>(x)].label +
                               " differs from the adjoint on component " +
                               std::to_string(i));
      }
    }
  }

  // (ii) Pairwise commutators close on the structure tensor, with weight
  // symbols kept formal.
  for (int x = 0; x < g.dim(); ++x) {
    for (int y = x + 1; y < g.dim(); ++y) {
      if (g.mode_window) {
        int mx = g.basis[static_cast<size_t>(x)].mode;
        int my = g.basis[static_cast<size_t>(y)].mode;
        auto [lo, hi] = *g.mode_window;
        if (mx + my < lo || mx + my > hi) continue;
      }
      DiffOperator lhs = ops[x].commutator(g, ops[y]);
      // A column-picture realization is contravariant: operator brackets
      // reverse the algebra bracket. The row picture is covariant.
      RingElem sign{Rational(v0.orientation == Orientation::Column ? -1 : 1)};
      DiffOperator rhs;
      for (const auto& [t, c] : g.bracket(x, y)) {
        const DiffOperator& opt = ops[t];
        RingElem sc = c * sign;
        for (const auto& [b, coeff] : opt.first_order) {
          MultiPoly add = coeff.scale(sc);
          auto it = rhs.first_order.find(b);
          if (it == rhs.first_order.end()) rhs.first_order[b] = add;
          else
            it->second = it->second + add;
        }
        rhs.scalar = rhs.scalar + opt.scalar.scale(sc);
      }
      if (!lhs.same_action(g, rhs)) {
        rep.commutators_ok = false;
        rep.failures.push_back("commutator [" + g.basis[static_cast<size_t>(x)].label + ", " +
                               g.basis[static_cast<size_t>(y)].label +
                               "] does not reproduce the bracket");
        // Weaker closure: equality of the actions on the coherent family.
        DiffOperator lspec = lhs, rspec = rhs;
        for (auto& [b, c] : lspec.first_order) c = c.substitute_consts(weight_sub);
        lspec.scalar = lspec.scalar.substitute_consts(weight_sub);
        for (auto& [b, c] : rspec.first_order) c = c.substitute_consts(weight_sub);
        rspec.scalar = rspec.scalar.substitute_consts(weight_sub);
        std::vector<MultiPoly> la = lspec.apply(g, st.components);
        std::vector<MultiPoly> ra = rspec.apply(g, st.components);
        for (size_t i = 0; i < la.size(); ++i) {
          if (!g.vanishes_mod_relations(la[i] - ra[i])) rep.commutators_on_family_ok = false;
        }
      }
    }
  }
  return rep;
}

MultiPoly vertex_matrix_element(const LieAlgebra& g, int beta, const ZetaVector& zeta,
                                const ZetaVector& zeta_prime, DualConvention convention) {
  MultiPoly p = norm_poly(g, convention);
  MultiPoly t = MultiPoly::var(VarId::t());
  OplusResult inner = oplus(g, zeta, zeta_tau(g, beta, t));
  inner = oplus(g, inner.components, zeta_negate(zeta));
  inner = oplus(g, inner.components, zeta_prime);

  std::vector<int> pos = g.exponent_indices();
  std::map<VarId, MultiPoly> binding;
  for (size_t a = 0; a < pos.size(); ++a) {
    binding[g.zeta_var(pos[a], false, 1)] = inner.components[a];
    // The bra slot takes the double-primed family.
    binding[g.zeta_var(pos[a], true, 0)] =
        MultiPoly::var(g.zeta_var(pos[a], true, 2));
  }
  MultiPoly composed = p.substitute(binding);
  return composed.coefficient_of(VarId::t(), 1);
}

MultiPoly vertex_matrix_element_contraction(const LieAlgebra& g, int beta,
                                            const ZetaVector& zeta,
                                            const ZetaVector& zeta_prime,
                                            DualConvention convention) {
  // u_gamma = d/dt (zeta (+) tau(t) (+) (-zeta) (+) zeta')_gamma at t = 0,
  // contracted against <zeta''| d/d zeta'_gamma |zeta'>.
  MultiPoly t = MultiPoly::var(VarId::t());
  OplusResult curve = oplus(g, zeta, zeta_tau(g, beta, t));
  curve = oplus(g, curve.components, zeta_negate(zeta));
  OplusResult moved = oplus(g, curve.components, zeta_prime);

  Vacuum v0 = vacuum(g);
  std::vector<MultiPoly> bra = dual_state(g, convention, 2, v0);
  CoherentState ket = coherent_state(g, 1, v0);

  std::vector<int> pos = g.exponent_indices();
  std::map<VarId, MultiPoly> prime_binding;
  for (size_t a = 0; a < pos.size(); ++a)
    prime_binding[g.zeta_var(pos[a], false, 1)] = zeta_prime[a];

  MultiPoly acc;
  for (size_t gma = 0; gma < pos.size(); ++gma) {
    MultiPoly u = moved.components[gma].coefficient_of(VarId::t(), 1);
    if (u.is_zero()) continue;
    VarId vg = g.zeta_var(pos[gma], false, 1);
    MultiPoly pairing;
    for (size_t i = 0; i < bra.size(); ++i)
      pairing = pairing + bra[i] * ket.components[i].derivative(vg);
    acc = acc + u * pairing.substitute(prime_binding);
  }
  return acc;
}

}  // namespace liecoh
