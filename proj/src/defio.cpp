#include "liecoh/defio.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "liecoh/errors.hpp"
#include "liecoh/textio.hpp"

namespace liecoh {

namespace {

constexpr const char* kMagic = "liealg v1";

std::string enc(const std::string& s) { return s.empty() ? "~" : s; }
std::string dec(const std::string& s) { return s == "~" ? "" : s; }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string coords_str(const RootLabel& r) {
  std::string s;
  for (size_t i = 0; i < r.coords.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(r.coords[i]);
  }
  return s;
}

RootLabel coords_parse(const std::string& s) {
  RootLabel r;
  std::istringstream in(s);
  int v;
  while (in >> v) r.coords.push_back(v);
  return r;
}

}  // namespace

std::string write_definition(const LieAlgebra& g) {
  std::ostringstream out;
  out << kMagic << "\n";
  out << "name|" << g.name << "\n";
  out << "rootbasis";
  for (const auto& b : g.root_base_names) out << "|" << enc(b);
  out << "\n";
  out << "form";
  for (const auto& row : g.root_form)
    for (const auto& v : row) out << "|" << v.to_string();
  out << "\n";
  if (g.cartan_matrix) {
    out << "cartan_matrix";
    for (const auto& row : *g.cartan_matrix)
      for (const auto& v : row) out << "|" << v.to_string();
    out << "\n";
  }
  out << "cartan_dim|" << g.datum.cartan_dim << "\n";
  for (const auto& gen : g.basis) {
    const char* type = gen.type == Generator::Type::Positive    ? "positive"
                       : gen.type == Generator::Type::Negative ? "negative"
                                                                : "cartan";
    out << "gen|" << gen.label << "|" << type << "|" << gen.cartan_index << "|" << gen.mode
        << "|" << enc(gen.var_key) << "|" << coords_str(gen.root) << "\n";
  }
  for (const auto& r : g.datum.positive_roots) {
    auto mit = g.datum.multiplicity.find(r);
    auto pit = g.datum.proper.find(r);
    out << "posroot|" << (mit == g.datum.multiplicity.end() ? 1 : mit->second) << "|"
        << (pit != g.datum.proper.end() && pit->second ? 1 : 0) << "|" << coords_str(r)
        << "\n";
  }
  for (const auto& r : g.datum.negative_roots) out << "negroot|" << coords_str(r) << "\n";
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      for (const auto& [t, c] : g.bracket(i, j)) {
        out << "bracket|" << g.basis[static_cast<size_t>(i)].label << "|"
            << g.basis[static_cast<size_t>(j)].label << "|"
            << g.basis[static_cast<size_t>(t)].label << "|" << c.to_string() << "\n";
      }
    }
  }
  for (const auto& assignment : g.numeric_assignments) {
    out << "assignment";
    for (const auto& [sym, val] : assignment)
      out << "|" << sym.to_string() << "=" << val.to_string();
    out << "\n";
  }
  if (g.pinned_vacuum) {
    out << "vacuum|" << *g.pinned_vacuum << "|"
        << (g.pinned_orientation.value_or(Orientation::Column) == Orientation::Column
                ? "column"
                : "row")
        << "\n";
  }
  if (g.mode_window)
    out << "window|" << g.mode_window->first << "|" << g.mode_window->second << "\n";
  if (g.truncated_brackets) out << "truncated|1\n";
  if (g.extension_base_dim) out << "extension_base|" << *g.extension_base_dim << "\n";
  if (g.loop_base_dim) out << "loop_base|" << *g.loop_base_dim << "\n";
  out << "constants|" << (g.constants_mode == ConstantsMode::Symbolic ? "symbolic" : "numeric")
      << "\n";
  return out.str();
}

LieAlgebra read_definition(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kMagic)
    throw ParseError("definition file: missing header line");
  LieAlgebra g;
  std::vector<std::array<std::string, 4>> brackets;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split(line, '|');
    const std::string& tag = f[0];
    if (tag == "name") {
      g.name = f.at(1);
    } else if (tag == "rootbasis") {
      for (size_t i = 1; i < f.size(); ++i) g.root_base_names.push_back(dec(f[i]));
    } else if (tag == "form") {
      size_t n = g.root_base_names.size();
      if (f.size() != 1 + n * n) throw ParseError("definition file: bad form row");
      g.root_form.assign(n, std::vector<Rational>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          g.root_form[i][j] = Rational::from_string(f[1 + i * n + j]);
    } else if (tag == "cartan_matrix") {
      size_t n = g.root_base_names.size();
      g.cartan_matrix = std::vector<std::vector<Rational>>(n, std::vector<Rational>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          (*g.cartan_matrix)[i][j] = Rational::from_string(f[1 + i * n + j]);
    } else if (tag == "cartan_dim") {
      g.datum.cartan_dim = std::stoi(f.at(1));
    } else if (tag == "gen") {
      Generator gen;
      gen.label = f.at(1);
      gen.type = f.at(2) == "positive"    ? Generator::Type::Positive
                 : f.at(2) == "negative" ? Generator::Type::Negative
                                          : Generator::Type::Cartan;
      gen.cartan_index = std::stoi(f.at(3));
      gen.mode = std::stoi(f.at(4));
      gen.var_key = dec(f.at(5));
      gen.root = coords_parse(f.at(6));
      g.basis.push_back(gen);
    } else if (tag == "posroot") {
      RootLabel r = coords_parse(f.at(3));
      g.datum.positive_roots.push_back(r);
      g.datum.multiplicity[r] = std::stoi(f.at(1));
      g.datum.proper[r] = f.at(2) == "1";
    } else if (tag == "negroot") {
      g.datum.negative_roots.push_back(coords_parse(f.at(1)));
    } else if (tag == "bracket") {
      brackets.push_back({f.at(1), f.at(2), f.at(3), f.at(4)});
    } else if (tag == "assignment") {
      std::map<SymConst, RingElem> assignment;
      for (size_t i = 1; i < f.size(); ++i) {
        auto eq = f[i].find('=');
        if (eq == std::string::npos) throw ParseError("definition file: bad assignment");
        RingElem sym = parse_ring(f[i].substr(0, eq));
        if (sym.terms().size() != 1 || sym.terms()[0].mono.size() != 1)
          throw ParseError("definition file: assignment key is not a constant");
        assignment[sym.terms()[0].mono[0].first] = parse_ring(f[i].substr(eq + 1));
      }
      g.numeric_assignments.push_back(std::move(assignment));
    } else if (tag == "vacuum") {
      g.pinned_vacuum = std::stoi(f.at(1));
      g.pinned_orientation = f.at(2) == "row" ? Orientation::Row : Orientation::Column;
    } else if (tag == "window") {
      g.mode_window = {std::stoi(f.at(1)), std::stoi(f.at(2))};
    } else if (tag == "truncated") {
      g.truncated_brackets = true;
    } else if (tag == "extension_base") {
      g.extension_base_dim = std::stoi(f.at(1));
    } else if (tag == "loop_base") {
      g.loop_base_dim = std::stoi(f.at(1));
    } else if (tag == "constants") {
      g.constants_mode =
          f.at(1) == "symbolic" ? ConstantsMode::Symbolic : ConstantsMode::Numeric;
    } else {
      throw ParseError("definition file: unknown line tag '" + tag + "'");
    }
  }
  int n = g.dim();
  if (n == 0) throw ParseError("definition file: no generators");
  g.bracket_table.assign(static_cast<size_t>(n),
                         std::vector<BracketVec>(static_cast<size_t>(n)));
  for (const auto& [il, jl, tl, expr] : brackets) {
    int i = g.find(il), j = g.find(jl), t = g.find(tl);
    if (i < 0 || j < 0 || t < 0)
      throw ParseError("definition file: bracket references unknown generator");
    RingElem c = parse_ring(expr);
    g.bracket_table[static_cast<size_t>(i)][static_cast<size_t>(j)].emplace_back(t, c);
    g.bracket_table[static_cast<size_t>(j)][static_cast<size_t>(i)].emplace_back(t, -c);
  }
  for (int i = 0; i < n; ++i) {
    const Generator& gen = g.basis[static_cast<size_t>(i)];
    if (gen.type == Generator::Type::Cartan &&
        static_cast<size_t>(gen.cartan_index) >= g.weight_symbols.size())
      g.weight_symbols.push_back(SymConst::lambda(gen.cartan_index + 1));
  }
  return g;
}

LieAlgebra read_definition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open definition file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_definition(buf.str());
}

}  // namespace liecoh
