#include "liecoh/serialize.hpp"

#include "liecoh/errors.hpp"
#include "liecoh/textio.hpp"

namespace liecoh {

using nlohmann::json;

json ring_to_json(const RingElem& e) {
  json terms = json::array();
  for (const auto& t : e.terms()) {
    json consts = json::array();
    for (const auto& [c, exp] : t.mono) consts.push_back({c.to_string(), exp});
    terms.push_back({{"rat", t.coeff.to_string()}, {"consts", consts}});
  }
  return json{{"terms", terms}};
}

RingElem ring_from_json(const json& j) {
  RingElem acc;
  for (const auto& t : j.at("terms")) {
    std::string expr = t.at("rat").get<std::string>();
    for (const auto& c : t.at("consts")) {
      expr += "*" + c.at(0).get<std::string>();
      int e = c.at(1).get<int>();
      if (e != 1) expr += "^" + std::to_string(e);
    }
    acc = acc + parse_ring(expr);
  }
  return acc;
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json vars = json::array();
    for (const auto& [v, exp] : t.mono) vars.push_back({v.to_string(), exp});
    terms.push_back({{"coeff", ring_to_json(t.coeff)}, {"vars", vars}});
  }
  return json{{"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
  MultiPoly acc;
  for (const auto& t : j.at("terms")) {
    MultiPoly term{ring_from_json(t.at("coeff"))};
    for (const auto& v : t.at("vars")) {
      std::string name = v.at(0).get<std::string>();
      int e = v.at(1).get<int>();
      MultiPoly var = parse_poly(name);
      if (var.terms().size() != 1 || var.terms()[0].mono.size() != 1)
        throw ParseError("poly_from_json: bad variable " + name);
      VarId id = var.terms()[0].mono[0].first;
      term = term * MultiPoly::var(id, e);
    }
    acc = acc + term;
  }
  return acc;
}

json state_to_json(const LieAlgebra& g, const CoherentState& st) {
  json comps = json::object();
  for (int i = 0; i < g.dim(); ++i) {
    comps[g.basis[static_cast<size_t>(i)].label] =
        st.components[static_cast<size_t>(i)].to_string();
  }
  json out{{"algebra", g.name},
           {"orientation", st.orientation == Orientation::Column ? "column" : "row"},
           {"components", comps}};
  if (st.central_part) out["central"] = st.central_part->to_string();
  return out;
}

json vacuum_to_json(const LieAlgebra& g, const Vacuum& v) {
  json vec = json::array();
  for (const auto& c : v.vector) vec.push_back(c.to_string());
  json weights = json::array();
  for (const auto& w : v.weights) weights.push_back(w.to_string());
  return json{{"algebra", g.name},
              {"vector", vec},
              {"weights", weights},
              {"basis_index", v.basis_index},
              {"orientation", v.orientation == Orientation::Column ? "column" : "row"}};
}

json operator_to_json(const LieAlgebra& g, const DiffOperator& op) {
  json fo = json::object();
  for (const auto& [b, c] : op.first_order) {
    if (!c.is_zero()) fo[g.zeta_var(b).to_string()] = c.to_string();
  }
  return json{{"first_order", fo}, {"scalar", op.scalar.to_string()}};
}

json algebra_to_json(const LieAlgebra& g) {
  json basis = json::array();
  for (const auto& gen : g.basis) {
    json coords = json::array();
    for (int c : gen.root.coords) coords.push_back(c);
    basis.push_back({{"label", gen.label},
                     {"type", gen.type == Generator::Type::Positive    ? "positive"
                              : gen.type == Generator::Type::Negative ? "negative"
                                                                       : "cartan"},
                     {"root", coords},
                     {"mode", gen.mode}});
  }
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      const BracketVec& v = g.bracket(i, j);
      if (v.empty()) continue;
      json targets = json::array();
      for (const auto& [t, c] : v)
        targets.push_back({g.basis[static_cast<size_t>(t)].label, c.to_string()});
      brackets.push_back({{"i", g.basis[static_cast<size_t>(i)].label},
                          {"j", g.basis[static_cast<size_t>(j)].label},
                          {"value", targets}});
    }
  }
  return json{{"name", g.name}, {"basis", basis}, {"brackets", brackets}};
}

json report_to_json(const ValidationReport& rep) {
  json issues = json::array();
  for (const auto& issue : rep.issues)
    issues.push_back({{"axiom", issue.axiom}, {"detail", issue.detail}});
  return json{{"ok", rep.ok()},
              {"antisymmetry", rep.antisymmetry_ok},
              {"jacobi", rep.jacobi_ok},
              {"grading", rep.grading_ok},
              {"proper", rep.proper_ok},
              {"issues", issues}};
}

std::string state_to_latex(const LieAlgebra& g, const CoherentState& st) {
  std::string out;
  for (int i = 0; i < g.dim(); ++i) {
    const MultiPoly& c = st.components[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    bool simple = c.terms().size() == 1;
    out += simple ? c.to_latex() : "\\left(" + c.to_latex() + "\\right)";
    out += "\\,|" + std::to_string(i + 1) + "\\rangle";
  }
  return out.empty() ? "0" : out;
}

std::string state_to_text(const LieAlgebra& g, const CoherentState& st) {
  std::string out;
  for (int i = 0; i < g.dim(); ++i) {
    out += g.basis[static_cast<size_t>(i)].label + ": " +
           st.components[static_cast<size_t>(i)].to_string() + "\n";
  }
  return out;
}

}  // namespace liecoh
