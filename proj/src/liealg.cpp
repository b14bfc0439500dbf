#include "liecoh/liealg.hpp"

#include <algorithm>
#include <set>

#include "liecoh/errors.hpp"

namespace liecoh {

bool RootLabel::is_zero() const {
  for (int c : coords) {
    if (c != 0) return false;
  }
  return true;
}

RootLabel RootLabel::operator+(const RootLabel& o) const {
  if (coords.size() != o.coords.size()) throw Error("RootLabel: lattice dimension mismatch");
  RootLabel r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

RootLabel RootLabel::operator-() const {
  RootLabel r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

std::string root_name(const RootLabel& root, const std::vector<std::string>& base_names) {
  // Single-axis lattices with an unnamed base render as bare grades.
  if (base_names.size() == 1 && base_names[0].empty()) {
    return std::to_string(root.coords.empty() ? 0 : root.coords[0]);
  }
  std::string out;
  for (size_t i = 0; i < root.coords.size(); ++i) {
    int c = root.coords[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0)
      out += "-";
    int a = c > 0 ? c : -c;
    if (a != 1) out += std::to_string(a);
    out += i < base_names.size() ? base_names[i] : "?";
  }
  return out.empty() ? "0" : out;
}

std::vector<RingElem> LieAlgebra::bracket_apply(int i, const std::vector<RingElem>& v) const {
  std::vector<RingElem> out(static_cast<size_t>(dim()));
  for (int j = 0; j < dim(); ++j) {
    if (v[static_cast<size_t>(j)].is_zero()) continue;
    for (const auto& [target, coeff] : bracket_table[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
      out[static_cast<size_t>(target)] =
          out[static_cast<size_t>(target)] + coeff * v[static_cast<size_t>(j)];
    }
  }
  return out;
}

int LieAlgebra::find(const std::string& label) const {
  for (int i = 0; i < dim(); ++i) {
    if (basis[static_cast<size_t>(i)].label == label) return i;
  }
  return -1;
}

int LieAlgebra::generator_for_root(const RootLabel& r, Generator::Type t) const {
  for (int i = 0; i < dim(); ++i) {
    const Generator& g = basis[static_cast<size_t>(i)];
    if (g.type == t && g.root == r) return i;
  }
  return -1;
}

std::vector<int> LieAlgebra::positive_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (basis[static_cast<size_t>(i)].type == Generator::Type::Positive) out.push_back(i);
  }
  return out;
}

std::vector<int> LieAlgebra::negative_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (basis[static_cast<size_t>(i)].type == Generator::Type::Negative) out.push_back(i);
  }
  return out;
}

std::vector<int> LieAlgebra::cartan_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    if (basis[static_cast<size_t>(i)].type == Generator::Type::Cartan) out.push_back(i);
  }
  return out;
}

std::vector<int> LieAlgebra::exponent_indices() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    const Generator& g = basis[static_cast<size_t>(i)];
    if (g.type == Generator::Type::Positive && !g.root.is_zero()) out.push_back(i);
  }
  return out;
}

std::string LieAlgebra::render_root(const RootLabel& r) const {
  return root_name(r, root_base_names);
}

RingMatrix LieAlgebra::adjoint(int x) const {
  RingMatrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    for (const auto& [target, coeff] : bracket(x, j)) {
      m.at(target, j) = m.at(target, j) + MultiPoly(coeff);
    }
  }
  return m;
}

VarId LieAlgebra::zeta_var(int positive_index, bool bar, int primes) const {
  const Generator& g = basis[static_cast<size_t>(positive_index)];
  if (g.type != Generator::Type::Positive)
    throw Error("zeta_var: generator is not positive: " + g.label);
  if (loop_base_dim) return VarId::zeta_mode(g.var_key, g.mode, bar, primes);
  return VarId::zeta(g.var_key, bar, primes);
}

RingMatrix LieAlgebra::positive_exponent_matrix(int primes) const {
  RingMatrix acc(dim(), dim());
  for (int p : exponent_indices()) {
    MultiPoly zv = MultiPoly::var(zeta_var(p, false, primes));
    acc = acc + adjoint(p).scale(zv);
  }
  return acc;
}

Rational LieAlgebra::form(const RootLabel& a, const RootLabel& b) const {
  if (root_form.empty()) throw Error("LieAlgebra: no root-space form available");
  Rational acc(0);
  for (size_t i = 0; i < root_form.size(); ++i) {
    for (size_t j = 0; j < root_form.size(); ++j) {
      int ai = i < a.coords.size() ? a.coords[i] : 0;
      int bj = j < b.coords.size() ? b.coords[j] : 0;
      if (ai == 0 || bj == 0) continue;
      acc = acc + Rational(ai) * root_form[i][j] * Rational(bj);
    }
  }
  return acc;
}

Rational LieAlgebra::coroot_pairing(const RootLabel& beta, int cartan_i) const {
  RootLabel alpha_i;
  alpha_i.coords.assign(root_base_names.size(), 0);
  alpha_i.coords[static_cast<size_t>(cartan_i)] = 1;
  Rational aa = form(alpha_i, alpha_i);
  return Rational(2) * form(beta, alpha_i) / aa;
}

RingElem LieAlgebra::to_numeric(const RingElem& e) const {
  if (numeric_assignments.empty()) return e;
  return e.substitute(numeric_assignments.front());
}

MultiPoly LieAlgebra::to_numeric(const MultiPoly& p) const {
  if (numeric_assignments.empty()) return p;
  return p.substitute_consts(numeric_assignments.front());
}

bool LieAlgebra::vanishes_mod_relations(const RingElem& e) const {
  if (e.is_zero()) return true;
  if (numeric_assignments.empty()) return false;
  for (const auto& assignment : numeric_assignments) {
    if (!e.substitute(assignment).is_zero()) return false;
  }
  return true;
}

bool LieAlgebra::vanishes_mod_relations(const MultiPoly& p) const {
  for (const auto& t : p.terms()) {
    if (!vanishes_mod_relations(t.coeff)) return false;
  }
  return true;
}

void LieAlgebra::derive_product_relations() {
  product_relations.clear();
  if (numeric_assignments.size() < 2) return;
  std::vector<SymConst> symbols;
  for (const auto& [sym, val] : numeric_assignments.front()) symbols.push_back(sym);
  size_t n = symbols.size();
  if (n < 2 || n > 16) return;
  std::vector<std::vector<SymConst>> found;
  for (size_t mask = 3; mask < (1u << n); ++mask) {
    std::vector<SymConst> subset;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(symbols[i]);
    }
    if (subset.size() < 2) continue;
    // Minimality: skip when a recorded subset is contained in this one.
    bool redundant = false;
    for (const auto& prev : found) {
      bool contained = true;
      for (const auto& s : prev) {
        if (std::find(subset.begin(), subset.end(), s) == subset.end()) contained = false;
      }
      if (contained) redundant = true;
    }
    if (redundant) continue;
    std::optional<Rational> constant;
    bool ok = true;
    for (const auto& assignment : numeric_assignments) {
      Rational prod(1);
      for (const auto& s : subset) {
        auto it = assignment.find(s);
        if (it == assignment.end() || !it->second.is_rational()) {
          ok = false;
          break;
        }
        prod = prod * it->second.rational_value();
      }
      if (!ok) break;
      if (!constant) constant = prod;
      else if (!(*constant == prod)) {
        ok = false;
        break;
      }
    }
    if (ok && constant) {
      product_relations.emplace_back(subset, *constant);
      found.push_back(subset);
    }
  }
}

RingElem LieAlgebra::reduce_mod_relations(const RingElem& e) const {
  if (numeric_assignments.empty()) return e;
  const auto& canonical = numeric_assignments.front();
  std::vector<RingElem::Term> out;
  for (const auto& term : e.terms()) {
    Rational coeff = term.coeff;
    ConstMono mono;
    for (const auto& [sym, exp] : term.mono) {
      auto it = canonical.find(sym);
      if (it == canonical.end() || !it->second.is_rational()) {
        mono.emplace_back(sym, exp);
        continue;
      }
      Rational sq = it->second.rational_value() * it->second.rational_value();
      int reduced = exp % 2;
      for (int k = 0; k < exp / 2; ++k) coeff = coeff * sq;
      if (reduced) mono.emplace_back(sym, 1);
    }
    // Fold the constant products of coupled signs.
    bool changed = true;
    while (changed && !product_relations.empty()) {
      changed = false;
      for (const auto& [subset, value] : product_relations) {
        bool applies = !subset.empty();
        for (const auto& s : subset) {
          bool present = false;
          for (const auto& [sym, exp] : mono) {
            if (sym == s && exp >= 1) present = true;
          }
          if (!present) applies = false;
        }
        if (!applies) continue;
        ConstMono next;
        for (const auto& [sym, exp] : mono) {
          int drop = std::find(subset.begin(), subset.end(), sym) != subset.end() ? 1 : 0;
          if (exp - drop > 0) next.emplace_back(sym, exp - drop);
        }
        mono = std::move(next);
        coeff = coeff * value;
        changed = true;
      }
    }
    out.push_back({std::move(coeff), std::move(mono)});
  }
  RingElem folded = RingElem::from_terms(std::move(out));
  if (vanishes_mod_relations(folded)) return RingElem();
  return folded;
}

MultiPoly LieAlgebra::reduce_mod_relations(const MultiPoly& p) const {
  if (numeric_assignments.empty()) return p;
  std::vector<MultiPoly::Term> out;
  for (const auto& term : p.terms()) {
    RingElem c = reduce_mod_relations(term.coeff);
    if (!c.is_zero()) out.push_back({std::move(c), term.mono});
  }
  return MultiPoly::from_terms(std::move(out));
}

std::string ValidationReport::summary() const {
  if (ok()) return "all axioms hold";
  std::string s;
  for (const auto& issue : issues) {
    if (!s.empty()) s += "\n";
    s += issue.axiom + ": " + issue.detail;
  }
  return s;
}

namespace {

// Loop-truncated algebras cannot see brackets whose mode leaves the window;
// Jacobi is only meaningful on triples whose intermediate modes stay inside.
bool triple_in_window(const LieAlgebra& g, int i, int j, int k) {
  if (!g.mode_window) return true;
  auto [lo, hi] = *g.mode_window;
  int mi = g.basis[static_cast<size_t>(i)].mode;
  int mj = g.basis[static_cast<size_t>(j)].mode;
  int mk = g.basis[static_cast<size_t>(k)].mode;
  auto in = [&](int m) { return m >= lo && m <= hi; };
  return in(mi + mj) && in(mj + mk) && in(mk + mi) && in(mi + mj + mk);
}

}  // namespace

ValidationReport LieAlgebra::validate() const {
  ValidationReport rep;
  int n = dim();

  auto add_issue = [&](const std::string& axiom, const std::string& detail, int i, int j,
                       int k) {
    rep.issues.push_back({axiom, detail, i, j, k});
  };

  // Antisymmetry, structurally on the table.
  for (int i = 0; i < n && rep.issues.size() < 64; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<RingElem> lhs(static_cast<size_t>(n)), rhs(static_cast<size_t>(n));
      for (const auto& [t, c] : bracket(i, j)) lhs[static_cast<size_t>(t)] = lhs[static_cast<size_t>(t)] + c;
      for (const auto& [t, c] : bracket(j, i)) rhs[static_cast<size_t>(t)] = rhs[static_cast<size_t>(t)] + c;
      for (int t = 0; t < n; ++t) {
        if (!vanishes_mod_relations(lhs[static_cast<size_t>(t)] + rhs[static_cast<size_t>(t)])) {
          rep.antisymmetry_ok = false;
          add_issue("antisymmetry",
                    "[" + basis[static_cast<size_t>(i)].label + "," +
                        basis[static_cast<size_t>(j)].label + "] != -[" +
                        basis[static_cast<size_t>(j)].label + "," +
                        basis[static_cast<size_t>(i)].label + "]",
                    i, j, -1);
          break;
        }
      }
    }
  }

  // Jacobi on all triples.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!triple_in_window(*this, i, j, k)) continue;
        std::vector<RingElem> acc(static_cast<size_t>(n));
        auto add_nested = [&](int a, int b, int c) {
          // [[a,b],c] accumulated into acc.
          for (const auto& [t, coeff] : bracket(a, b)) {
            for (const auto& [u, coeff2] : bracket(t, c)) {
              acc[static_cast<size_t>(u)] = acc[static_cast<size_t>(u)] + coeff * coeff2;
            }
          }
        };
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        bool bad = false;
        for (int t = 0; t < n && !bad; ++t) {
          if (!vanishes_mod_relations(acc[static_cast<size_t>(t)])) bad = true;
        }
        if (bad) {
          rep.jacobi_ok = false;
          add_issue("jacobi",
                    "violated on triple (" + basis[static_cast<size_t>(i)].label + ", " +
                        basis[static_cast<size_t>(j)].label + ", " +
                        basis[static_cast<size_t>(k)].label + ")",
                    i, j, k);
          if (rep.issues.size() >= 64) return rep;
        }
      }
    }
  }

  // Grading: bracket targets must carry the summed root; opposite roots
  // land in the Cartan part; the Cartan part is abelian.
  auto root_of = [&](int idx) -> std::optional<RootLabel> {
    const Generator& g = basis[static_cast<size_t>(idx)];
    if (g.type == Generator::Type::Cartan) return std::nullopt;
    RootLabel r = g.root;
    if (mode_window || loop_base_dim) r.coords.push_back(g.mode);
    return r;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto ri = root_of(i), rj = root_of(j);
      for (const auto& [t, coeff] : bracket(i, j)) {
        if (vanishes_mod_relations(coeff)) continue;
        auto rt = root_of(t);
        bool ok;
        if (!ri && !rj) {
          ok = false;  // Cartan must commute
        } else if (ri && rj && (*ri + *rj).is_zero()) {
          ok = !rt.has_value();
        } else {
          RootLabel expect = ri && rj ? *ri + *rj : (ri ? *ri : *rj);
          ok = rt.has_value() && *rt == expect;
        }
        if (!ok) {
          rep.grading_ok = false;
          add_issue("grading",
                    "bracket [" + basis[static_cast<size_t>(i)].label + "," +
                        basis[static_cast<size_t>(j)].label + "] leaves its graded component",
                    i, j, t);
        }
      }
    }
  }

  // Properness classification versus the lattice criteria.
  std::set<RootLabel> all_roots;
  for (const auto& r : datum.positive_roots) all_roots.insert(r);
  for (const auto& r : datum.negative_roots) all_roots.insert(r);
  for (const auto& r : datum.positive_roots) {
    auto mult_it = datum.multiplicity.find(r);
    int mult = mult_it != datum.multiplicity.end() ? mult_it->second : 1;
    bool mirror = all_roots.count(-r) > 0;
    bool multiple_free = true;
    for (int m = 2; m <= 6; ++m) {
      RootLabel scaled = r;
      for (int& c : scaled.coords) c *= m;
      if (all_roots.count(scaled)) multiple_free = false;
    }
    bool proper_expected = mult == 1 && mirror && multiple_free;
    auto it = datum.proper.find(r);
    bool declared = it != datum.proper.end() && it->second;
    if (declared != proper_expected) {
      rep.proper_ok = false;
      add_issue("proper", "root " + render_root(r) + " misclassified", -1, -1, -1);
    }
  }
  if (static_cast<int>(datum.positive_roots.size()) < static_cast<int>(datum.negative_roots.size())) {
    rep.proper_ok = false;
    add_issue("proper", "negative roots outnumber positive roots", -1, -1, -1);
  }
  return rep;
}

Subspaces derived_and_center(const LieAlgebra& g) {
  int n = g.dim();
  Subspaces out;

  // Derived subalgebra: row space of all bracket vectors.
  RingMatrix rows(n * n, n);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j, ++r) {
      for (const auto& [t, c] : g.bracket(i, j)) {
        rows.at(r, t) = rows.at(r, t) + MultiPoly(c);
      }
    }
  }
  // Reduce to a spanning set by greedy rank growth.
  RingMatrix picked(0, n);
  std::vector<std::vector<RingElem>> span;
  int rank = 0;
  for (int i = 0; i < n * n; ++i) {
    bool zero = true;
    for (int j = 0; j < n; ++j) {
      if (!rows.at(i, j).is_zero()) zero = false;
    }
    if (zero) continue;
    RingMatrix trial(rank + 1, n);
    for (int a = 0; a < rank; ++a)
      for (int j = 0; j < n; ++j) trial.at(a, j) = picked.at(a, j);
    for (int j = 0; j < n; ++j) trial.at(rank, j) = rows.at(i, j);
    if (mat_rank(trial) > rank) {
      picked = trial;
      ++rank;
      std::vector<RingElem> v(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j)
        v[static_cast<size_t>(j)] = rows.at(i, j).is_zero() ? RingElem() : rows.at(i, j).ring_value();
      span.push_back(std::move(v));
    }
  }
  out.derived = std::move(span);

  // Center: joint kernel of all adjoints.
  RingMatrix stacked(n * n, n);
  for (int i = 0; i < n; ++i) {
    RingMatrix ad = g.adjoint(i);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) stacked.at(i * n + a, b) = ad.at(a, b);
  }
  LinearSolution sol = solve_linear(stacked, std::vector<MultiPoly>(static_cast<size_t>(n * n)));
  for (const auto& k : sol.kernel) {
    std::vector<RingElem> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      v[static_cast<size_t>(j)] = k[static_cast<size_t>(j)].is_zero()
                                      ? RingElem()
                                      : k[static_cast<size_t>(j)].ring_value();
    out.center.push_back(std::move(v));
  }
  return out;
}

LieAlgebra central_extend(const LieAlgebra& g, const Cocycle& cocycle,
                          const std::string& central_label) {
  int n = g.dim();

  // Antisymmetry and the 2-cocycle identity are preconditions.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RingElem sum = cocycle(i, j) + cocycle(j, i);
      if (!g.vanishes_mod_relations(sum))
        throw NotCocycleError("central_extend: cocycle not antisymmetric on (" +
                              g.basis[static_cast<size_t>(i)].label + ", " +
                              g.basis[static_cast<size_t>(j)].label + ")");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (!triple_in_window(g, i, j, k)) continue;
        RingElem acc;
        auto pair_with = [&](int a, int b, int c) {
          for (const auto& [t, coeff] : g.bracket(a, b)) acc = acc + coeff * cocycle(t, c);
        };
        pair_with(i, j, k);
        pair_with(j, k, i);
        pair_with(k, i, j);
        if (!g.vanishes_mod_relations(acc))
          throw NotCocycleError("central_extend: 2-cocycle identity fails on (" +
                                g.basis[static_cast<size_t>(i)].label + ", " +
                                g.basis[static_cast<size_t>(j)].label + ", " +
                                g.basis[static_cast<size_t>(k)].label + ")");
      }
    }
  }

  LieAlgebra ext = g;
  ext.name = g.name + "+center";
  ext.extension_base_dim = n;

  // The central root: when every nonvanishing cocycle pair has the same
  // root sum, the new generator joins that graded component as a pseudo
  // root; otherwise it joins the Cartan part.
  std::optional<RootLabel> central_root;
  bool uniform = true;
  for (int i = 0; i < n && uniform; ++i) {
    for (int j = 0; j < n && uniform; ++j) {
      if (g.vanishes_mod_relations(cocycle(i, j))) continue;
      const Generator& gi = g.basis[static_cast<size_t>(i)];
      const Generator& gj = g.basis[static_cast<size_t>(j)];
      if (gi.type == Generator::Type::Cartan || gj.type == Generator::Type::Cartan) {
        uniform = false;
        break;
      }
      RootLabel sum = gi.root + gj.root;
      if (sum.is_zero()) {
        uniform = false;
      } else if (!central_root) {
        central_root = sum;
      } else if (!(*central_root == sum)) {
        uniform = false;
      }
    }
  }

  Generator c;
  c.label = central_label;
  c.var_key = central_label;
  if (uniform && central_root) {
    c.type = Generator::Type::Positive;
    c.root = *central_root;
    ext.datum.positive_roots.push_back(*central_root);
    ext.datum.multiplicity[*central_root] += 1;
    ext.datum.proper[*central_root] = false;
  } else {
    c.type = Generator::Type::Cartan;
    c.cartan_index = static_cast<int>(g.cartan_indices().size());
    ext.datum.cartan_dim += 1;
    ext.weight_symbols.push_back(SymConst::lambda(c.cartan_index + 1));
  }
  ext.basis.push_back(c);

  ext.bracket_table.assign(static_cast<size_t>(n + 1),
                           std::vector<BracketVec>(static_cast<size_t>(n + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BracketVec v = g.bracket(i, j);
      RingElem w = cocycle(i, j);
      if (!w.is_zero()) v.emplace_back(n, w);
      ext.bracket_table[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(v);
    }
  }
  return ext;
}

LieAlgebra loopify(const LieAlgebra& g, int max_mode) {
  if (max_mode < 0) throw Error("loopify: negative mode bound");
  int n = g.dim();
  int window = 2 * max_mode + 1;
  LieAlgebra loop;
  loop.name = g.name + "_loop[" + std::to_string(max_mode) + "]";
  loop.root_base_names = g.root_base_names;
  loop.root_form = g.root_form;
  loop.cartan_matrix = g.cartan_matrix;
  loop.constants_mode = g.constants_mode;
  loop.numeric_assignments = g.numeric_assignments;
  loop.mode_window = {-max_mode, max_mode};
  loop.loop_base_dim = n;

  // Basis ordering: all modes of base generator 0, then of generator 1, ...
  // A Cartan generator stays Cartan only at mode zero; its other modes are
  // pseudo-root directions graded purely by the mode.
  for (int b = 0; b < n; ++b) {
    for (int m = -max_mode; m <= max_mode; ++m) {
      Generator gen = g.basis[static_cast<size_t>(b)];
      gen.mode = m;
      if (max_mode > 0) gen.label += "@" + std::to_string(m);
      gen.var_key = g.basis[static_cast<size_t>(b)].var_key;
      if (gen.type == Generator::Type::Cartan && m != 0) {
        gen.type = m > 0 ? Generator::Type::Positive : Generator::Type::Negative;
        gen.root.coords.assign(g.root_base_names.size(), 0);
        gen.cartan_index = -1;
      }
      loop.basis.push_back(gen);
      if (gen.type != Generator::Type::Cartan) {
        RootLabel extended = gen.root;
        extended.coords.push_back(m);
        auto& roots = gen.type == Generator::Type::Positive ? loop.datum.positive_roots
                                                             : loop.datum.negative_roots;
        roots.push_back(extended);
        loop.datum.multiplicity[extended] += 1;
      } else {
        loop.datum.cartan_dim += 1;
      }
    }
  }
  // Properness follows the lattice criterion applied inside the window.
  {
    std::set<RootLabel> all;
    for (const auto& r : loop.datum.positive_roots) all.insert(r);
    for (const auto& r : loop.datum.negative_roots) all.insert(r);
    for (const auto& r : loop.datum.positive_roots) {
      bool mirror = all.count(-r) > 0;
      bool multiple_free = true;
      for (int mul = 2; mul <= 6; ++mul) {
        RootLabel scaled = r;
        for (int& c : scaled.coords) c *= mul;
        if (all.count(scaled)) multiple_free = false;
      }
      loop.datum.proper[r] = loop.datum.multiplicity[r] == 1 && mirror && multiple_free;
    }
  }
  int dim = n * window;
  loop.bracket_table.assign(static_cast<size_t>(dim),
                            std::vector<BracketVec>(static_cast<size_t>(dim)));
  auto index_of = [&](int base, int m) { return base * window + (m + max_mode); };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const BracketVec& base_bracket = g.bracket(a, b);
      if (base_bracket.empty()) continue;
      for (int ma = -max_mode; ma <= max_mode; ++ma) {
        for (int mb = -max_mode; mb <= max_mode; ++mb) {
          int m = ma + mb;
          if (m < -max_mode || m > max_mode) {
            loop.truncated_brackets = true;
            continue;
          }
          BracketVec v;
          for (const auto& [t, c] : base_bracket) v.emplace_back(index_of(t, m), c);
          loop.bracket_table[static_cast<size_t>(index_of(a, ma))]
                            [static_cast<size_t>(index_of(b, mb))] = std::move(v);
        }
      }
    }
  }
  loop.weight_symbols.clear();
  int li = 1;
  for (int c : loop.cartan_indices()) {
    (void)c;
    loop.weight_symbols.push_back(SymConst::lambda(li++));
  }
  // Mode-zero copy keeps the pinned vacuum of the base algebra.
  if (g.pinned_vacuum) loop.pinned_vacuum = index_of(*g.pinned_vacuum, 0);
  loop.pinned_orientation = g.pinned_orientation;
  return loop;
}

Cocycle affine_cocycle(const LieAlgebra& loop_algebra, const SymConst& level) {
  if (!loop_algebra.loop_base_dim)
    throw Error("affine_cocycle: algebra is not a loop algebra");
  const LieAlgebra& lg = loop_algebra;
  int n = *lg.loop_base_dim;
  int max_mode = lg.mode_window ? lg.mode_window->second : 0;
  int window = 2 * max_mode + 1;
  auto index_of = [=](int base, int m) { return base * window + (m + max_mode); };

  // Invariant form of the base algebra: the Killing form of the mode-zero
  // copy, rescaled so that the first mirrored positive root line pairs to
  // (alpha | -alpha). Invariance makes the mode cocycle a genuine 2-cocycle.
  std::vector<std::vector<RingElem>> killing(static_cast<size_t>(n),
                                             std::vector<RingElem>(static_cast<size_t>(n)));
  auto base_bracket = [&](int a, int b) {
    BracketVec out;
    for (const auto& [t, c] : lg.bracket(index_of(a, 0), index_of(b, 0)))
      out.emplace_back(t / window, c);
    return out;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      RingElem tr;
      for (int x = 0; x < n; ++x) {
        for (const auto& [t, c] : base_bracket(b, x)) {
          for (const auto& [u, c2] : base_bracket(a, t)) {
            if (u == x) tr = tr + c * c2;
          }
        }
      }
      killing[static_cast<size_t>(a)][static_cast<size_t>(b)] = tr;
    }
  }
  Rational scale(1);
  bool scaled = false;
  for (int a = 0; a < n && !scaled; ++a) {
    const Generator& ga = lg.basis[static_cast<size_t>(index_of(a, 0))];
    if (ga.type != Generator::Type::Positive) continue;
    for (int b = 0; b < n && !scaled; ++b) {
      const Generator& gb = lg.basis[static_cast<size_t>(index_of(b, 0))];
      if (gb.type != Generator::Type::Negative || !(ga.root + gb.root).is_zero()) continue;
      const RingElem& kab = killing[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (!kab.is_rational() || kab.rational_value().is_zero()) continue;
      Rational target = -lg.form(ga.root, ga.root);
      scale = target / kab.rational_value();
      scaled = true;
    }
  }
  RingElem k = RingElem::constant(level);
  RingElem scale_elem{scale};
  return [=](int i, int j) -> RingElem {
    const Generator& a = lg.basis[static_cast<size_t>(i)];
    const Generator& b = lg.basis[static_cast<size_t>(j)];
    if (a.mode + b.mode != 0) return RingElem();
    const RingElem& pairing = killing[static_cast<size_t>(i / window)][static_cast<size_t>(j / window)];
    if (pairing.is_zero()) return RingElem();
    return RingElem(Rational(a.mode)) * scale_elem * pairing * k;
  };
}

}  // namespace liecoh
