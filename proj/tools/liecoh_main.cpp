// Command-line surface for the coherent-state toolkit: build algebras, run
// the computations, emit text/LaTeX/JSON/SVG, and run the verification
// passes. Exit status: 0 success, 1 computation failure, 2 usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "liecoh/bchreal.hpp"
#include "liecoh/coherent.hpp"
#include "liecoh/defio.hpp"
#include "liecoh/diagram.hpp"
#include "liecoh/errors.hpp"
#include "liecoh/serialize.hpp"

namespace {

using namespace liecoh;
using nlohmann::json;

struct Options {
  std::string target;
  std::string convention = "chevalley";
  std::string format;
  std::string output;
  std::string source;
  std::string constants = "symbolic";
  std::string level = "k";
  int modes = 0;
};

std::string default_format() {
  const char* env = std::getenv("LIECOH_FORMAT");
  return env ? env : "plain";
}

LieAlgebra load_algebra(const Options& opt) {
  ConstantsMode mode =
      opt.constants == "numeric" ? ConstantsMode::Numeric : ConstantsMode::Symbolic;
  if (opt.target.find('/') != std::string::npos || opt.target.find(".alg") != std::string::npos)
    return read_definition_file(opt.target);
  return build_named(opt.target, mode);
}

DualConvention convention_of(const Options& opt) {
  if (opt.convention == "chevalley") return DualConvention::Chevalley;
  if (opt.convention == "conjugate-transpose" || opt.convention == "ct")
    return DualConvention::ConjugateTranspose;
  throw UsageError("unknown convention: " + opt.convention);
}

void emit(const Options& opt, const std::string& body) {
  if (opt.output.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw UsageError("cannot write output file: " + opt.output);
  out << body;
}

std::string poly_str(const Options& opt, const MultiPoly& p) {
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  if (fmt == "latex") return p.to_latex();
  if (fmt == "json") return poly_to_json(p).dump(2);
  return p.to_string();
}

int run_list(const Options&) {
  for (const auto& name : cataloged_names()) std::cout << name << "\n";
  return 0;
}

int run_build(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  if (fmt == "json") {
    emit(opt, algebra_to_json(g).dump(2));
  } else {
    emit(opt, write_definition(g));
  }
  return 0;
}

int run_validate(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  ValidationReport rep = g.validate();
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  if (fmt == "json") {
    std::cout << report_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << (rep.ok() ? "valid" : rep.summary()) << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int run_coherent(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  CoherentState st = coherent_state(g);
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  if (fmt == "json") {
    emit(opt, state_to_json(g, st).dump(2));
  } else if (fmt == "latex") {
    emit(opt, state_to_latex(g, st));
  } else {
    emit(opt, state_to_text(g, st));
  }
  return 0;
}

int run_dual(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  std::vector<MultiPoly> bra = dual_state(g, convention_of(opt));
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  std::string out;
  if (fmt == "json") {
    json comps = json::object();
    for (int i = 0; i < g.dim(); ++i)
      comps[g.basis[static_cast<size_t>(i)].label] = bra[static_cast<size_t>(i)].to_string();
    out = json{{"algebra", g.name}, {"components", comps}}.dump(2);
  } else {
    for (int i = 0; i < g.dim(); ++i) {
      out += g.basis[static_cast<size_t>(i)].label + ": " +
             (fmt == "latex" ? bra[static_cast<size_t>(i)].to_latex()
                             : bra[static_cast<size_t>(i)].to_string()) +
             "\n";
    }
  }
  emit(opt, out);
  return 0;
}

int run_norm(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  emit(opt, poly_str(opt, norm_poly(g, convention_of(opt))));
  return 0;
}

int run_oplus(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  OplusResult sum = oplus(g, formal_zeta(g, 0), formal_zeta(g, 1));
  std::vector<int> pos = g.positive_indices();
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  std::string out;
  if (fmt == "json") {
    json comps = json::object();
    for (size_t a = 0; a < pos.size(); ++a)
      comps[g.zeta_var(pos[a]).to_string()] = sum.components[a].to_string();
    out = json{{"algebra", g.name},
               {"ambiguous_mod_center", sum.ambiguous_mod_center},
               {"components", comps}}
              .dump(2);
  } else {
    for (size_t a = 0; a < pos.size(); ++a) {
      const VarId v = g.zeta_var(pos[a]);
      out += (fmt == "latex" ? v.to_latex() : v.to_string()) + ": " +
             (fmt == "latex" ? sum.components[a].to_latex() : sum.components[a].to_string()) +
             "\n";
    }
    if (sum.ambiguous_mod_center) out += "# central components default to the plain sum\n";
  }
  emit(opt, out);
  return 0;
}

int run_realize(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  RealizeMethod method =
      opt.source == "solver" ? RealizeMethod::Solver : RealizeMethod::ClosedForm;
  std::map<int, DiffOperator> ops = realize(g, method);
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  std::string out;
  if (fmt == "json") {
    json body = json::object();
    for (const auto& [x, op] : ops)
      body[g.basis[static_cast<size_t>(x)].label] = operator_to_json(g, op);
    out = body.dump(2);
  } else {
    for (const auto& [x, op] : ops) {
      out += g.basis[static_cast<size_t>(x)].label + ": " +
             (fmt == "latex" ? op.to_latex(g) : op.to_string(g)) + "\n";
    }
  }
  emit(opt, out);
  return 0;
}

int run_check(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  ValidationReport rep = g.validate();
  if (!rep.ok()) {
    std::cout << rep.summary() << "\n";
    return 1;
  }
  RealizationCheck rc = check_realization(g);
  if (!rc.ok()) {
    for (const auto& f : rc.failures) std::cout << f << "\n";
    return 1;
  }
  std::cout << "all realization checks pass\n";
  return 0;
}

int run_vertex(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  if (opt.source.empty()) throw UsageError("vertex: --source=<generator label> is required");
  int src = g.find(opt.source);
  if (src < 0) throw UsageError("vertex: unknown generator " + opt.source);
  VertexCoefficients vc = vertex_coefficients(g, src);
  std::string out;
  for (const auto& [target, coeff] : vc.towards) {
    out += g.basis[static_cast<size_t>(target)].label + ": " + coeff.to_string() + "\n";
  }
  for (const auto& [target, coeff] : vc.cartan_part) {
    out += g.basis[static_cast<size_t>(target)].label + " (cartan): " + coeff.to_string() +
           "\n";
  }
  emit(opt, out.empty() ? "0\n" : out);
  return 0;
}

int run_loop(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  CoherentState st = loop_coherent(g, opt.modes);
  MultiPoly pk =
      km_norm_functional(g, opt.modes, SymConst::user(opt.level), convention_of(opt));
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  std::string out;
  if (fmt == "json") {
    json j = state_to_json(g, st);
    j["p_k"] = pk.to_string();
    out = j.dump(2);
  } else {
    out = state_to_text(g, st);
    out += "p_k: " + (fmt == "latex" ? pk.to_latex() : pk.to_string()) + "\n";
  }
  emit(opt, out);
  return 0;
}

int run_diagram(const Options& opt) {
  LieAlgebra g = load_algebra(opt);
  emit(opt, diagram_svg(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coherent-state toolkit for Lie algebras"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_target = true) {
    if (with_target) sub->add_option("target", opt.target, "algebra name or definition file");
    sub->add_option("--format", opt.format, "plain|latex|json|svg");
    sub->add_option("--out", opt.output, "output file (default stdout)");
    sub->add_option("--constants", opt.constants, "symbolic|numeric");
  };

  CLI::App* list = app.add_subcommand("list", "list the cataloged algebras");
  CLI::App* build = app.add_subcommand("build", "emit an algebra definition");
  add_common(build);
  CLI::App* validate = app.add_subcommand("validate", "run the axiom checks");
  add_common(validate);
  CLI::App* coherent = app.add_subcommand("coherent", "coherent state components");
  add_common(coherent);
  CLI::App* dual = app.add_subcommand("dual", "dual state covector");
  add_common(dual);
  dual->add_option("--convention", opt.convention, "chevalley|conjugate-transpose");
  CLI::App* norm = app.add_subcommand("norm", "normalization polynomial");
  add_common(norm);
  norm->add_option("--convention", opt.convention, "chevalley|conjugate-transpose");
  CLI::App* oplus_cmd = app.add_subcommand("oplus", "deformed addition components");
  add_common(oplus_cmd);
  CLI::App* realize_cmd = app.add_subcommand("realize", "differential-operator realization");
  add_common(realize_cmd);
  realize_cmd->add_option("--method", opt.source, "closed|solver");
  CLI::App* check = app.add_subcommand("check", "validate algebra and realization");
  add_common(check);
  CLI::App* vertex = app.add_subcommand("vertex", "vertex coefficients of a generator");
  add_common(vertex);
  vertex->add_option("--source", opt.source, "generator label");
  CLI::App* loop = app.add_subcommand("loop", "loop coherent state and p_k");
  add_common(loop);
  loop->add_option("--modes", opt.modes, "mode bound M");
  loop->add_option("--level", opt.level, "level symbol name");
  loop->add_option("--convention", opt.convention, "chevalley|conjugate-transpose");
  CLI::App* diagram = app.add_subcommand("diagram", "root diagram as SVG");
  add_common(diagram);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) return run_list(opt);
    if (build->parsed()) return run_build(opt);
    if (validate->parsed()) return run_validate(opt);
    if (coherent->parsed()) return run_coherent(opt);
    if (dual->parsed()) return run_dual(opt);
    if (norm->parsed()) return run_norm(opt);
    if (oplus_cmd->parsed()) return run_oplus(opt);
    if (realize_cmd->parsed()) return run_realize(opt);
    if (check->parsed()) return run_check(opt);
    if (vertex->parsed()) return run_vertex(opt);
    if (loop->parsed()) return run_loop(opt);
    if (diagram->parsed()) return run_diagram(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
