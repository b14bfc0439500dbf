#ifndef LIECOH_LIEALG_HPP
#define LIECOH_LIEALG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/matrix.hpp"

namespace liecoh {

// Root of the generalized decomposition: an integer vector in the root
// lattice basis. Pseudo roots use the same encoding; what distinguishes
// them is the datum's properness classification, not the label shape.
struct RootLabel {
  std::vector<int> coords;

  bool is_zero() const;
  RootLabel operator+(const RootLabel& o) const;
  RootLabel operator-() const;
  bool operator==(const RootLabel& o) const { return coords == o.coords; }
  bool operator!=(const RootLabel& o) const { return !(*this == o); }
  bool operator<(const RootLabel& o) const { return coords < o.coords; }
};

// Renders coords against base names, e.g. (2,1) over {r,s} -> "2r+s".
std::string root_name(const RootLabel& root, const std::vector<std::string>& base_names);

struct RootDatum {
  std::vector<RootLabel> positive_roots;
  std::vector<RootLabel> negative_roots;
  int cartan_dim = 0;
  std::map<RootLabel, int> multiplicity;
  std::map<RootLabel, bool> proper;
};

struct Generator {
  enum class Type { Positive, Negative, Cartan };

  std::string label;    // unique, e.g. "e[r+s]", "f[r]", "h[r]", "q"
  Type type;
  RootLabel root;       // meaningful unless Cartan
  int cartan_index = -1;
  std::string var_key;  // key of the zeta variable paired with a positive generator
  int mode = 0;         // Laurent mode when the algebra is a loop algebra
};

struct ValidationIssue {
  std::string axiom;  // "antisymmetry", "jacobi", "grading", "proper"
  std::string detail;
  int i = -1, j = -1, k = -1;
};

struct ValidationReport {
  bool antisymmetry_ok = true;
  bool jacobi_ok = true;
  bool grading_ok = true;
  bool proper_ok = true;
  std::vector<ValidationIssue> issues;

  bool ok() const { return antisymmetry_ok && jacobi_ok && grading_ok && proper_ok; }
  std::string summary() const;
};

enum class ConstantsMode { Symbolic, Numeric };
enum class Orientation { Column, Row };

// Sparse bracket value: sum of coeff * basis vector.
using BracketVec = std::vector<std::pair<int, RingElem>>;

class LieAlgebra {
 public:
  std::string name;
  std::vector<Generator> basis;
  // bracket[i][j] = [basis_i, basis_j] expanded over the basis.
  std::vector<std::vector<BracketVec>> bracket_table;
  RootDatum datum;
  std::vector<std::string> root_base_names;  // e.g. {"r","s"}
  // Inner product on root space, rational, in the root_base_names basis.
  std::vector<std::vector<Rational>> root_form;
  std::optional<std::vector<std::vector<Rational>>> cartan_matrix;
  std::vector<SymConst> weight_symbols;  // lambda_i, one per Cartan generator

  ConstantsMode constants_mode = ConstantsMode::Numeric;
  // Admissible numeric values of the free structure symbols: first entry is
  // the canonical assignment; the rest span the sign variety used when
  // checking identities that hold only modulo the declared relations.
  std::vector<std::map<SymConst, RingElem>> numeric_assignments;
  // Minimal symbol products that are constant on the whole variety
  // (beyond the squares), e.g. a coupled sign quadruple; used as rewrite
  // rules by reduce_mod_relations. Derived from numeric_assignments.
  std::vector<std::pair<std::vector<SymConst>, Rational>> product_relations;
  void derive_product_relations();

  std::optional<int> pinned_vacuum;            // basis index, when cataloged
  std::optional<Orientation> pinned_orientation;

  bool truncated_brackets = false;  // loopify dropped out-of-window terms
  std::optional<std::pair<int, int>> mode_window;
  std::optional<int> extension_base_dim;  // set by central_extend
  std::optional<int> loop_base_dim;       // set by loopify

  int dim() const { return static_cast<int>(basis.size()); }
  const BracketVec& bracket(int i, int j) const { return bracket_table[i][j]; }
  std::vector<RingElem> bracket_apply(int i, const std::vector<RingElem>& v) const;

  int find(const std::string& label) const;          // -1 when absent
  int generator_for_root(const RootLabel& r, Generator::Type t) const;
  std::vector<int> positive_indices() const;
  std::vector<int> negative_indices() const;
  std::vector<int> cartan_indices() const;
  // Positive directions entering the coherent exponential: all positive
  // generators except imaginary ones (zero root label), which arise as the
  // nonzero Cartan modes of a loop algebra and are not exponentiated.
  std::vector<int> exponent_indices() const;
  std::string render_root(const RootLabel& r) const;

  // Matrix of ad basis_x; columns are [x, basis_b] expanded.
  RingMatrix adjoint(int x) const;
  // Sum of zeta_a * ad e_a over the positive generators.
  RingMatrix positive_exponent_matrix(int primes = 0) const;
  VarId zeta_var(int positive_index, bool bar = false, int primes = 0) const;

  Rational form(const RootLabel& a, const RootLabel& b) const;
  Rational coroot_pairing(const RootLabel& beta, int cartan_i) const;  // <beta, alpha_i^v>

  ValidationReport validate() const;

  // Specializes symbolic structure constants with the canonical assignment.
  RingElem to_numeric(const RingElem& e) const;
  MultiPoly to_numeric(const MultiPoly& p) const;
  // True when e vanishes for every admissible assignment of the free
  // structure symbols (identically, for numeric-mode algebras).
  bool vanishes_mod_relations(const RingElem& e) const;
  bool vanishes_mod_relations(const MultiPoly& p) const;
  // Canonical reduction modulo the declared relations: even symbol powers
  // fold into their squared numeric value, and terms whose coefficients
  // vanish on the admissible variety are dropped.
  RingElem reduce_mod_relations(const RingElem& e) const;
  MultiPoly reduce_mod_relations(const MultiPoly& p) const;
};

enum class ChevalleySeries { A1, A2, B2, G2 };

LieAlgebra build_chevalley(ChevalleySeries series, ConstantsMode mode);
LieAlgebra build_heisenberg(int n);
LieAlgebra build_nonabelian2();
LieAlgebra build_fan(int odd_count);  // fan(3), fan(5), ...
LieAlgebra build_abelian(int n);
LieAlgebra build_a1_plus_line();
LieAlgebra build_a1_plus_two_lines();
LieAlgebra build_a1_plus_plane();
LieAlgebra build_a1_plus_heisenberg(const RingElem& mixed_coeff);
// Looks a named algebra up: "A1", "A2", "B2", "G2", "heisenberg(1)",
// "nonabelian2", "fan(3)", "a1_plus_line", ... Throws UsageError.
LieAlgebra build_named(const std::string& name, ConstantsMode mode = ConstantsMode::Symbolic);
std::vector<std::string> cataloged_names();

using Cocycle = std::function<RingElem(int, int)>;

LieAlgebra central_extend(const LieAlgebra& g, const Cocycle& cocycle,
                          const std::string& central_label = "c");
LieAlgebra loopify(const LieAlgebra& g, int max_mode);
// The standard invariant-form cocycle of an affine extension at level k.
Cocycle affine_cocycle(const LieAlgebra& loop_algebra, const SymConst& level);

struct Subspaces {
  std::vector<std::vector<RingElem>> derived;  // spanning vectors of [g, g]
  std::vector<std::vector<RingElem>> center;
};

Subspaces derived_and_center(const LieAlgebra& g);

}  // namespace liecoh

#endif
