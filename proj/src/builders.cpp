#include <algorithm>
#include <cstdlib>
#include <set>

#include "liecoh/errors.hpp"
#include "liecoh/liealg.hpp"

namespace liecoh {

namespace {

RootLabel rl(std::vector<int> coords) { return RootLabel{std::move(coords)}; }

struct Rank2Model {
  std::string name;
  std::vector<RootLabel> positives;            // in basis order
  std::vector<std::vector<Rational>> form;     // inner product on (r, s)
  std::vector<Rational> sigma;                 // sign of each f generator
  int vacuum_index = 0;                        // position of f on the highest root
};

Rank2Model model_for(ChevalleySeries series) {
  Rank2Model m;
  switch (series) {
    case ChevalleySeries::A2:
      m.name = "A2";
      m.positives = {rl({1, 0}), rl({0, 1}), rl({1, 1})};
      m.form = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
      m.sigma = {Rational(-1), Rational(-1), Rational(1)};
      m.vacuum_index = 2;
      break;
    case ChevalleySeries::B2:
      m.name = "B2";
      m.positives = {rl({1, 0}), rl({0, 1}), rl({1, 1}), rl({2, 1})};
      m.form = {{Rational(1), Rational(-1)}, {Rational(-1), Rational(2)}};
      m.sigma = {Rational(1), Rational(1), Rational(1), Rational(1)};
      m.vacuum_index = 3;
      break;
    case ChevalleySeries::G2:
      m.name = "G2";
      m.positives = {rl({1, 0}),  rl({0, 1}),  rl({1, 1}),
                     rl({2, 1}),  rl({1, -1}), rl({1, 2})};
      m.form = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
      m.sigma = {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)};
      m.vacuum_index = 3;
      break;
    default:
      throw Error("model_for: A1 is built separately");
  }
  return m;
}

// Chevalley-basis structure machinery over a fixed rank-two root list.
class Rank2Builder {
 public:
  Rank2Builder(Rank2Model model, ConstantsMode mode)
      : model_(std::move(model)), mode_(mode) {
    for (const auto& p : model_.positives) {
      roots_.insert(p);
      roots_.insert(-p);
    }
    collect_free_pairs();
  }

  LieAlgebra build();

 private:
  Rank2Model model_;
  ConstantsMode mode_;
  std::set<RootLabel> roots_;
  std::vector<std::pair<int, int>> free_pairs_;        // indices into positives
  std::vector<SymConst> free_symbols_;
  std::vector<Rational> free_magnitudes_;

  bool is_root(const RootLabel& r) const { return roots_.count(r) > 0; }
  int positive_index(const RootLabel& r) const {
    for (size_t i = 0; i < model_.positives.size(); ++i) {
      if (model_.positives[i] == r) return static_cast<int>(i);
    }
    return -1;
  }

  Rational form(const RootLabel& a, const RootLabel& b) const {
    Rational acc(0);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        acc = acc + Rational(a.coords[i]) * model_.form[i][j] * Rational(b.coords[j]);
    return acc;
  }

  // Largest p with beta - p*alpha still a root (root string length).
  int chain_down(const RootLabel& alpha, const RootLabel& beta) const {
    int p = 0;
    RootLabel cur = beta;
    for (int k = 1; k <= 6; ++k) {
      RootLabel next{{cur.coords[0] - alpha.coords[0], cur.coords[1] - alpha.coords[1]}};
      if (!is_root(next)) break;
      cur = next;
      p = k;
    }
    return p;
  }

  void collect_free_pairs() {
    std::vector<std::string> base = {"r", "s"};
    for (size_t i = 0; i < model_.positives.size(); ++i) {
      for (size_t j = i + 1; j < model_.positives.size(); ++j) {
        RootLabel sum = model_.positives[i] + model_.positives[j];
        if (!is_root(sum)) continue;
        free_pairs_.emplace_back(static_cast<int>(i), static_cast<int>(j));
        free_symbols_.push_back(
            SymConst::structure(root_name(model_.positives[i], base),
                                root_name(model_.positives[j], base)));
        int p = chain_down(model_.positives[i], model_.positives[j]);
        free_magnitudes_.push_back(Rational(p + 1));
      }
    }
  }

  // N constant for an arbitrary ordered root pair, expressed over the free
  // symbols attached to ordered positive pairs. Uses antisymmetry, the
  // opposite-pair relation N(-a,-b) = -N(a,b), and the zero-sum triangle
  // relation N(a,b)/(c|c) = N(b,c)/(a|a) = N(c,a)/(b|b).
  RingElem reduce_n(const RootLabel& a, const RootLabel& b) const {
    RootLabel sum = a + b;
    if (!is_root(sum)) return RingElem();
    bool a_pos = positive_index(a) >= 0;
    bool b_pos = positive_index(b) >= 0;
    if (a_pos && b_pos) {
      int ia = positive_index(a), ib = positive_index(b);
      for (size_t f = 0; f < free_pairs_.size(); ++f) {
        if (free_pairs_[f] == std::make_pair(ia, ib))
          return RingElem::constant(free_symbols_[f]);
        if (free_pairs_[f] == std::make_pair(ib, ia))
          return -RingElem::constant(free_symbols_[f]);
      }
      throw Error("reduce_n: positive pair not catalogued");
    }
    if (!a_pos && !b_pos) return -reduce_n(-a, -b);
    if (!a_pos && b_pos) return -reduce_n(b, a);
    // a positive, b negative; c closes the zero-sum triangle.
    RootLabel c = -(a + b);
    if (positive_index(c) < 0) {
      // c negative: (b, c) is the all-negative rotation.
      // N(a,b) = N(b,c) * (c|c)/(a|a)
      return reduce_n(b, c) * RingElem(form(c, c) / form(a, a));
    }
    // c positive: (c, a) is the all-positive rotation.
    // N(a,b) = N(c,a) * (c|c)/(b|b)
    return reduce_n(c, a) * RingElem(form(c, c) / form(b, b));
  }
};

LieAlgebra Rank2Builder::build() {
  LieAlgebra g;
  g.name = model_.name;
  g.root_base_names = {"r", "s"};
  g.root_form = model_.form;
  g.constants_mode = mode_;
  int np = static_cast<int>(model_.positives.size());
  int dim = 2 * np + 2;

  for (int i = 0; i < np; ++i) {
    Generator f;
    f.label = "f[" + root_name(model_.positives[static_cast<size_t>(i)], g.root_base_names) + "]";
    f.type = Generator::Type::Negative;
    f.root = -model_.positives[static_cast<size_t>(i)];
    g.basis.push_back(f);
  }
  for (int i = 0; i < np; ++i) {
    Generator e;
    e.var_key = root_name(model_.positives[static_cast<size_t>(i)], g.root_base_names);
    e.label = "e[" + e.var_key + "]";
    e.type = Generator::Type::Positive;
    e.root = model_.positives[static_cast<size_t>(i)];
    g.basis.push_back(e);
  }
  for (int i = 0; i < 2; ++i) {
    Generator h;
    h.label = "h[" + g.root_base_names[static_cast<size_t>(i)] + "]";
    h.type = Generator::Type::Cartan;
    h.cartan_index = i;
    g.basis.push_back(h);
    g.weight_symbols.push_back(SymConst::lambda(i + 1));
  }

  g.datum.positive_roots = model_.positives;
  for (const auto& p : model_.positives) {
    g.datum.negative_roots.push_back(-p);
    g.datum.multiplicity[p] = 1;
    g.datum.proper[p] = true;
  }
  g.datum.cartan_dim = 2;

  g.cartan_matrix = std::vector<std::vector<Rational>>(2, std::vector<Rational>(2));
  for (int i = 0; i < 2; ++i) {
    RootLabel alpha_i{{i == 0 ? 1 : 0, i == 0 ? 0 : 1}};
    for (int j = 0; j < 2; ++j) {
      RootLabel alpha_j{{j == 0 ? 1 : 0, j == 0 ? 0 : 1}};
      (*g.cartan_matrix)[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Rational(2) * form(alpha_i, alpha_j) / form(alpha_i, alpha_i);
    }
  }

  auto e_index = [&](int i) { return np + i; };
  auto f_index = [&](int i) { return i; };
  auto h_index = [&](int i) { return 2 * np + i; };
  auto coroot_coeff = [&](const RootLabel& alpha, int i) {
    // alpha^v expanded over the coroots r^v, s^v.
    RootLabel basis_root{{i == 0 ? 1 : 0, i == 0 ? 0 : 1}};
    return Rational(alpha.coords[static_cast<size_t>(i)]) * form(basis_root, basis_root) /
           form(alpha, alpha);
  };

  g.bracket_table.assign(static_cast<size_t>(dim),
                         std::vector<BracketVec>(static_cast<size_t>(dim)));
  auto set_bracket = [&](int i, int j, BracketVec v) {
    BracketVec neg;
    for (const auto& [t, c] : v) neg.emplace_back(t, -c);
    g.bracket_table[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(v);
    g.bracket_table[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(neg);
  };

  for (int i = 0; i < np; ++i) {
    const RootLabel& ai = model_.positives[static_cast<size_t>(i)];
    // [e_i, e_j]
    for (int j = i + 1; j < np; ++j) {
      const RootLabel& aj = model_.positives[static_cast<size_t>(j)];
      RootLabel sum = ai + aj;
      if (!is_root(sum)) continue;
      int t = positive_index(sum);
      set_bracket(e_index(i), e_index(j), {{e_index(t), reduce_n(ai, aj)}});
    }
    // [f_i, f_j]
    for (int j = i + 1; j < np; ++j) {
      const RootLabel& aj = model_.positives[static_cast<size_t>(j)];
      RootLabel sum = ai + aj;
      if (!is_root(sum)) continue;
      int t = positive_index(sum);
      RingElem c = reduce_n(-ai, -aj) *
                   RingElem(model_.sigma[static_cast<size_t>(i)] *
                            model_.sigma[static_cast<size_t>(j)] *
                            model_.sigma[static_cast<size_t>(t)]);
      set_bracket(f_index(i), f_index(j), {{f_index(t), c}});
    }
    // [e_i, f_j]
    for (int j = 0; j < np; ++j) {
      const RootLabel& aj = model_.positives[static_cast<size_t>(j)];
      if (i == j) {
        BracketVec v;
        for (int hi = 0; hi < 2; ++hi) {
          Rational c = coroot_coeff(ai, hi);
          if (c.is_zero()) continue;
          // [e, sigma f] = sigma * alpha^v = -sigma * sum c_i htilde_i
          v.emplace_back(h_index(hi), RingElem(-(model_.sigma[static_cast<size_t>(i)] * c)));
        }
        set_bracket(e_index(i), f_index(j), std::move(v));
        continue;
      }
      RootLabel delta = ai + -aj;
      if (!is_root(delta)) continue;
      int tp = positive_index(delta);
      if (tp >= 0) {
        RingElem c = reduce_n(ai, -aj) * RingElem(model_.sigma[static_cast<size_t>(j)]);
        set_bracket(e_index(i), f_index(j), {{e_index(tp), c}});
      } else {
        int tn = positive_index(-delta);
        RingElem c = reduce_n(ai, -aj) *
                     RingElem(model_.sigma[static_cast<size_t>(j)] *
                              model_.sigma[static_cast<size_t>(tn)]);
        set_bracket(e_index(i), f_index(j), {{f_index(tn), c}});
      }
    }
    // [h_i, e_j], [h_i, f_j]: the stored Cartan elements are the negated
    // coroots, so positive generators carry negative pairings.
    for (int hi = 0; hi < 2; ++hi) {
      RootLabel basis_root{{hi == 0 ? 1 : 0, hi == 0 ? 0 : 1}};
      Rational pairing = Rational(2) * form(ai, basis_root) / form(basis_root, basis_root);
      if (!pairing.is_zero()) {
        set_bracket(h_index(hi), e_index(i), {{e_index(i), RingElem(-pairing)}});
        set_bracket(h_index(hi), f_index(i), {{f_index(i), RingElem(pairing)}});
      }
    }
  }

  // Admissible sign assignments for the free symbols: those under which the
  // numeric specialization satisfies the Jacobi identity.
  size_t nfree = free_symbols_.size();
  std::vector<std::map<SymConst, RingElem>> admissible;
  for (size_t mask = 0; mask < (1u << nfree); ++mask) {
    std::map<SymConst, RingElem> assignment;
    for (size_t f = 0; f < nfree; ++f) {
      Rational v = free_magnitudes_[f];
      if (mask & (1u << f)) v = -v;
      assignment[free_symbols_[f]] = RingElem(v);
    }
    LieAlgebra trial = g;
    for (auto& row : trial.bracket_table) {
      for (auto& cell : row) {
        for (auto& [t, c] : cell) c = c.substitute(assignment);
      }
    }
    trial.numeric_assignments.clear();
    ValidationReport rep = trial.validate();
    if (rep.jacobi_ok && rep.antisymmetry_ok) admissible.push_back(std::move(assignment));
  }
  if (admissible.empty())
    throw InconsistentConstantsError("build_chevalley: no consistent sign assignment for " +
                                     model_.name);
  g.numeric_assignments = std::move(admissible);
  g.derive_product_relations();

  if (mode_ == ConstantsMode::Numeric) {
    for (auto& row : g.bracket_table) {
      for (auto& cell : row) {
        for (auto& [t, c] : cell) c = c.substitute(g.numeric_assignments.front());
      }
    }
    g.numeric_assignments.clear();
  }

  g.pinned_vacuum = model_.vacuum_index;  // f on the highest root
  g.pinned_orientation = Orientation::Column;
  return g;
}

LieAlgebra build_a1(ConstantsMode mode) {
  LieAlgebra g;
  g.name = "A1";
  g.root_base_names = {"r"};
  g.root_form = {{Rational(2)}};
  g.cartan_matrix = std::vector<std::vector<Rational>>{{Rational(2)}};
  g.constants_mode = mode;

  Generator f{"f[r]", Generator::Type::Negative, rl({-1}), -1, "", 0};
  Generator e{"e[r]", Generator::Type::Positive, rl({1}), -1, "r", 0};
  Generator h{"h[r]", Generator::Type::Cartan, rl({0}), 0, "", 0};
  g.basis = {f, e, h};
  g.weight_symbols = {SymConst::lambda(1)};

  g.datum.positive_roots = {rl({1})};
  g.datum.negative_roots = {rl({-1})};
  g.datum.cartan_dim = 1;
  g.datum.multiplicity[rl({1})] = 1;
  g.datum.proper[rl({1})] = true;

  g.bracket_table.assign(3, std::vector<BracketVec>(3));
  auto set = [&](int i, int j, int t, long long c) {
    g.bracket_table[static_cast<size_t>(i)][static_cast<size_t>(j)] = {{t, RingElem(c)}};
    g.bracket_table[static_cast<size_t>(j)][static_cast<size_t>(i)] = {{t, RingElem(-c)}};
  };
  // Number-operator normalization: [e, f] = -h, [h, e] = e, [h, f] = -f.
  set(1, 0, 2, -1);
  set(2, 1, 1, 1);
  set(2, 0, 0, -1);

  g.pinned_vacuum = 0;
  g.pinned_orientation = Orientation::Column;
  return g;
}

}  // namespace

LieAlgebra build_chevalley(ChevalleySeries series, ConstantsMode mode) {
  if (series == ChevalleySeries::A1) return build_a1(mode);
  return Rank2Builder(model_for(series), mode).build();
}

LieAlgebra build_heisenberg(int n) {
  if (n < 1) throw UsageError("heisenberg(n): n must be positive");
  LieAlgebra g;
  g.name = "heisenberg(" + std::to_string(n) + ")";
  g.root_base_names = {""};
  g.root_form = {{Rational(1)}};

  for (int i = 1; i <= n; ++i) {
    std::string suffix = n == 1 ? "" : std::to_string(i);
    Generator q{"q" + suffix, Generator::Type::Positive, rl({1}), -1, "q" + suffix, 0};
    Generator p{"p" + suffix, Generator::Type::Positive, rl({1}), -1, "p" + suffix, 0};
    g.basis.push_back(q);
    g.basis.push_back(p);
  }
  Generator c{"c", Generator::Type::Positive, rl({2}), -1, "c", 0};
  g.basis.push_back(c);

  g.datum.positive_roots = {rl({1}), rl({2})};
  g.datum.cartan_dim = 0;
  g.datum.multiplicity[rl({1})] = 2 * n;
  g.datum.multiplicity[rl({2})] = 1;
  g.datum.proper[rl({1})] = false;
  g.datum.proper[rl({2})] = false;

  int dim = 2 * n + 1;
  g.bracket_table.assign(static_cast<size_t>(dim),
                         std::vector<BracketVec>(static_cast<size_t>(dim)));
  for (int i = 0; i < n; ++i) {
    // [q_i, p_i] = -c, matching a central element chosen as -i*hbar times
    // the identity.
    g.bracket_table[static_cast<size_t>(2 * i)][static_cast<size_t>(2 * i + 1)] = {
        {dim - 1, RingElem(-1)}};
    g.bracket_table[static_cast<size_t>(2 * i + 1)][static_cast<size_t>(2 * i)] = {
        {dim - 1, RingElem(1)}};
  }
  g.pinned_vacuum = dim - 1;
  g.pinned_orientation = Orientation::Row;
  return g;
}

LieAlgebra build_nonabelian2() {
  LieAlgebra g;
  g.name = "nonabelian2";
  g.root_base_names = {""};
  g.root_form = {{Rational(1)}};

  Generator h{"h", Generator::Type::Cartan, rl({0}), 0, "", 0};
  Generator e{"e", Generator::Type::Positive, rl({1}), -1, "e", 0};
  g.basis = {h, e};
  g.weight_symbols = {SymConst::lambda(1)};
  g.datum.positive_roots = {rl({1})};
  g.datum.cartan_dim = 1;
  g.datum.multiplicity[rl({1})] = 1;
  g.datum.proper[rl({1})] = false;

  g.bracket_table.assign(2, std::vector<BracketVec>(2));
  g.bracket_table[0][1] = {{1, RingElem(1)}};  // [h, e] = e
  g.bracket_table[1][0] = {{1, RingElem(-1)}};
  g.pinned_vacuum = 0;
  g.pinned_orientation = Orientation::Column;
  return g;
}

LieAlgebra build_fan(int odd_count) {
  if (odd_count < 3 || odd_count % 2 == 0)
    throw UsageError("fan(k): k must be an odd count of added roots, at least 3");
  int m = (odd_count - 1) / 2;  // spokes reach s +- m*r
  LieAlgebra g;
  g.name = "fan(" + std::to_string(odd_count) + ")";
  g.root_base_names = {"r", "s"};
  g.root_form = {{Rational(2), Rational(0)}, {Rational(0), Rational(2)}};

  // Paper basis order for fan(3): r, -r, s, s+r, s-r, then the Cartan
  // element; larger fans continue outward in spoke pairs.
  Generator er{"e[r]", Generator::Type::Positive, rl({1, 0}), -1, "r", 0};
  Generator fr{"f[r]", Generator::Type::Negative, rl({-1, 0}), -1, "", 0};
  g.basis = {er, fr};
  // Spoke s + k r carries the conventional name with s leading.
  auto spoke_name = [](int k) {
    if (k == 0) return std::string("s");
    std::string mult = std::abs(k) == 1 ? "" : std::to_string(std::abs(k));
    return "s" + std::string(k > 0 ? "+" : "-") + mult + "r";
  };
  std::vector<RootLabel> spokes;
  std::vector<std::string> spoke_names;
  spokes.push_back(rl({0, 1}));
  spoke_names.push_back(spoke_name(0));
  for (int k = 1; k <= m; ++k) {
    spokes.push_back(rl({k, 1}));
    spoke_names.push_back(spoke_name(k));
    spokes.push_back(rl({-k, 1}));
    spoke_names.push_back(spoke_name(-k));
  }
  for (size_t si = 0; si < spokes.size(); ++si) {
    Generator gen{"e[" + spoke_names[si] + "]", Generator::Type::Positive, spokes[si], -1,
                  spoke_names[si], 0};
    g.basis.push_back(gen);
  }
  Generator h{"h", Generator::Type::Cartan, rl({0, 0}), 0, "", 0};
  g.basis.push_back(h);
  g.weight_symbols = {SymConst::lambda(1)};

  g.datum.positive_roots = {rl({1, 0})};
  g.datum.negative_roots = {rl({-1, 0})};
  for (const auto& sp : spokes) g.datum.positive_roots.push_back(sp);
  g.datum.cartan_dim = 1;
  g.datum.multiplicity[rl({1, 0})] = 1;
  g.datum.proper[rl({1, 0})] = true;
  for (const auto& sp : spokes) {
    g.datum.multiplicity[sp] = 1;
    g.datum.proper[sp] = false;
  }

  int dim = g.dim();
  g.bracket_table.assign(static_cast<size_t>(dim),
                         std::vector<BracketVec>(static_cast<size_t>(dim)));
  auto set = [&](int i, int j, int t, RingElem c) {
    g.bracket_table[static_cast<size_t>(i)][static_cast<size_t>(j)] = {{t, c}};
    g.bracket_table[static_cast<size_t>(j)][static_cast<size_t>(i)] = {{t, -c}};
  };
  int ih = dim - 1;
  set(0, 1, ih, RingElem(1));                      // [e_r, f_r] = h
  set(ih, 0, 0, RingElem(2));                      // [h, e_r] = 2 e_r
  set(ih, 1, 1, RingElem(-2));                     // [h, f_r] = -2 f_r
  auto spoke_index = [&](const RootLabel& r) -> int {
    for (int i = 0; i < dim; ++i) {
      if (g.basis[static_cast<size_t>(i)].root == r &&
          g.basis[static_cast<size_t>(i)].type == Generator::Type::Positive && i >= 2)
        return i;
    }
    return -1;
  };
  // Inner spokes climb and descend under e_r and f_r; the outermost spokes
  // act trivially and carry no Cartan weight, matching the reference
  // tensor exactly. It is not a Lie algebra: with nonzero N_{s,r} the
  // Jacobi identity forces a weight on the outer spokes, which would
  // change the coherent state; validate() reports the violating triples.
  for (size_t si = 0; si < spokes.size(); ++si) {
    const RootLabel& sp = spokes[si];
    int i = spoke_index(sp);
    const std::string& nm = spoke_names[si];
    int k = sp.coords[0];
    if (std::abs(k) >= m) continue;
    RootLabel up = sp + rl({1, 0});
    int iu = spoke_index(up);
    if (iu >= 0) set(i, 0, iu, RingElem::constant(SymConst::structure(nm, "r")));
    RootLabel down = sp + rl({-1, 0});
    int idn = spoke_index(down);
    if (idn >= 0) set(i, 1, idn, RingElem::constant(SymConst::structure(nm, "-r")));
  }
  g.pinned_vacuum = 1;  // f[r], as for A1
  g.pinned_orientation = Orientation::Column;
  return g;
}

LieAlgebra build_abelian(int n) {
  if (n < 1) throw UsageError("abelian(n): n must be positive");
  LieAlgebra g;
  g.name = "abelian(" + std::to_string(n) + ")";
  g.root_base_names = {""};
  g.root_form = {{Rational(1)}};
  for (int i = 1; i <= n; ++i) {
    std::string lab = "x" + std::to_string(i);
    Generator x{lab, Generator::Type::Positive, rl({1}), -1, lab, 0};
    g.basis.push_back(x);
  }
  g.datum.positive_roots = {rl({1})};
  g.datum.cartan_dim = 0;
  g.datum.multiplicity[rl({1})] = n;
  g.datum.proper[rl({1})] = false;
  g.bracket_table.assign(static_cast<size_t>(n), std::vector<BracketVec>(static_cast<size_t>(n)));
  return g;
}

namespace {

// Shared scaffolding for the pseudo-root extensions of A1.
LieAlgebra a1_extension_base(const std::string& name) {
  LieAlgebra g = build_a1(ConstantsMode::Symbolic);
  g.name = name;
  g.root_base_names = {"r", "s"};
  g.root_form = {{Rational(2), Rational(0)}, {Rational(0), Rational(2)}};
  g.cartan_matrix.reset();
  for (auto& gen : g.basis) gen.root.coords.push_back(0);
  g.datum.positive_roots = {rl({1, 0})};
  g.datum.negative_roots = {rl({-1, 0})};
  g.datum.multiplicity.clear();
  g.datum.proper.clear();
  g.datum.multiplicity[rl({1, 0})] = 1;
  g.datum.proper[rl({1, 0})] = true;
  g.pinned_vacuum.reset();
  g.pinned_orientation.reset();
  return g;
}

void append_pseudo(LieAlgebra& g, const std::string& label, const RootLabel& root) {
  Generator gen{label, Generator::Type::Positive, root, -1, label, 0};
  g.basis.push_back(gen);
  bool seen = false;
  for (const auto& r : g.datum.positive_roots) {
    if (r == root) seen = true;
  }
  if (!seen) g.datum.positive_roots.push_back(root);
  g.datum.multiplicity[root] += 1;
  g.datum.proper[root] = false;
  size_t n = g.basis.size();
  for (auto& row : g.bracket_table) row.resize(n);
  g.bracket_table.emplace_back(n);
}

}  // namespace

LieAlgebra build_a1_plus_line() {
  LieAlgebra g = a1_extension_base("a1_plus_line");
  append_pseudo(g, "e[s]", rl({0, 1}));
  return g;
}

LieAlgebra build_a1_plus_two_lines() {
  LieAlgebra g = a1_extension_base("a1_plus_two_lines");
  append_pseudo(g, "e[s]", rl({0, 1}));
  append_pseudo(g, "e[2s]", rl({0, 2}));
  return g;
}

LieAlgebra build_a1_plus_plane() {
  LieAlgebra g = a1_extension_base("a1_plus_plane");
  append_pseudo(g, "e[s]1", rl({0, 1}));
  append_pseudo(g, "e[s]2", rl({0, 1}));
  return g;
}

LieAlgebra build_a1_plus_heisenberg(const RingElem& mixed_coeff) {
  // The doubled pseudo root (q, p) with its grade-two cap c. The bracket of
  // the plane with the A1 Cartan element is not forced by the grading; it
  // enters as a traceless diagonal action with user coefficient x:
  // [h, q] = x q, [h, p] = -x p.
  LieAlgebra g = a1_extension_base("a1_plus_heisenberg");
  append_pseudo(g, "q", rl({0, 1}));
  append_pseudo(g, "p", rl({0, 1}));
  append_pseudo(g, "c", rl({0, 2}));
  int iq = g.find("q"), ip = g.find("p"), ic = g.find("c"), ih = g.find("h[r]");
  auto set = [&](int i, int j, int t, RingElem c) {
    g.bracket_table[static_cast<size_t>(i)][static_cast<size_t>(j)] = {{t, c}};
    g.bracket_table[static_cast<size_t>(j)][static_cast<size_t>(i)] = {{t, -c}};
  };
  set(iq, ip, ic, RingElem(-1));
  if (!mixed_coeff.is_zero()) {
    set(ih, iq, iq, mixed_coeff);
    set(ih, ip, ip, -mixed_coeff);
  }
  return g;
}

LieAlgebra build_named(const std::string& name, ConstantsMode mode) {
  if (name == "A1") return build_chevalley(ChevalleySeries::A1, mode);
  if (name == "A2") return build_chevalley(ChevalleySeries::A2, mode);
  if (name == "B2") return build_chevalley(ChevalleySeries::B2, mode);
  if (name == "G2") return build_chevalley(ChevalleySeries::G2, mode);
  if (name == "nonabelian2") return build_nonabelian2();
  if (name == "a1_plus_line") return build_a1_plus_line();
  if (name == "a1_plus_two_lines") return build_a1_plus_two_lines();
  if (name == "a1_plus_plane") return build_a1_plus_plane();
  if (name == "a1_plus_heisenberg") return build_a1_plus_heisenberg(RingElem());
  auto paren = name.find('(');
  if (paren != std::string::npos && name.back() == ')') {
    std::string head = name.substr(0, paren);
    std::string arg = name.substr(paren + 1, name.size() - paren - 2);
    int value = 0;
    try {
      value = std::stoi(arg);
    } catch (...) {
      throw UsageError("bad argument in algebra name: " + name);
    }
    if (head == "heisenberg") return build_heisenberg(value);
    if (head == "fan") return build_fan(value);
    if (head == "abelian") return build_abelian(value);
  }
  throw UsageError("unknown algebra: " + name);
}

std::vector<std::string> cataloged_names() {
  return {"A1",          "A2",          "B2",
          "G2",          "heisenberg(1)", "nonabelian2",
          "fan(3)",      "abelian(2)",  "a1_plus_line",
          "a1_plus_two_lines", "a1_plus_plane", "a1_plus_heisenberg"};
}

}  // namespace liecoh
