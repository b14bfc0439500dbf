#include "liecoh/multipoly.hpp"

#include <algorithm>
#include <tuple>

#include "liecoh/errors.hpp"

namespace liecoh {

VarId VarId::zeta(const std::string& root, bool bar, int primes) {
  VarId v(Kind::Zeta);
  v.root_ = root;
  v.bar_ = bar;
  v.primes_ = primes;
  return v;
}

VarId VarId::zeta_mode(const std::string& root, int mode, bool bar, int primes) {
  VarId v = zeta(root, bar, primes);
  v.has_mode_ = true;
  v.mode_ = mode;
  return v;
}

VarId VarId::with_bar(bool b) const {
  VarId v = *this;
  v.bar_ = b;
  return v;
}

VarId VarId::with_primes(int p) const {
  VarId v = *this;
  v.primes_ = p;
  return v;
}

bool VarId::operator==(const VarId& o) const {
  return kind_ == o.kind_ && root_ == o.root_ && bar_ == o.bar_ && primes_ == o.primes_ &&
         has_mode_ == o.has_mode_ && mode_ == o.mode_;
}

bool VarId::operator<(const VarId& o) const {
  return std::tie(kind_, root_, bar_, primes_, has_mode_, mode_) <
         std::tie(o.kind_, o.root_, o.bar_, o.primes_, o.has_mode_, o.mode_);
}

std::string VarId::to_string() const {
  switch (kind_) {
    case Kind::T:
      return "t";
    case Kind::Z:
      return "z";
    case Kind::Zeta: {
      std::string s = bar_ ? "zetabar" : "zeta";
      s += std::string(static_cast<size_t>(primes_), '\'');
      s += "[" + root_;
      if (has_mode_) s += "," + std::to_string(mode_);
      s += "]";
      return s;
    }
  }
  return "?";
}

std::string VarId::to_latex() const {
  switch (kind_) {
    case Kind::T:
      return "t";
    case Kind::Z:
      return "z";
    case Kind::Zeta: {
      std::string core = bar_ ? "\\bar{\\zeta}" : "\\zeta";
      core += std::string(static_cast<size_t>(primes_), '\'');
      std::string sub = root_;
      if (has_mode_) sub += "," + std::to_string(mode_);
      return core + "_{" + sub + "}";
    }
  }
  return "?";
}

size_t VarId::hash() const {
  size_t h = static_cast<size_t>(kind_) * 2654435761u;
  for (char c : root_) h = h * 131 + static_cast<unsigned char>(c);
  h = h * 31 + (bar_ ? 7 : 3);
  h = h * 31 + static_cast<size_t>(primes_);
  if (has_mode_) h = h * 31 + static_cast<size_t>(mode_ + 1000);
  return h;
}

namespace {

int mono_degree(const VarMono& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

int compare_var_mono(const VarMono& a, const VarMono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? -1 : 1;
    if (a[i].second != b[i].second) return a[i].second > b[i].second ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

VarMono mul_var_mono(const VarMono& a, const VarMono& b) {
  VarMono r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      int e = a[i].second + b[j].second;
      if (e != 0) r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else {
      r.push_back(b[j++]);
    }
  }
  while (i < a.size()) r.push_back(a[i++]);
  while (j < b.size()) r.push_back(b[j++]);
  return r;
}

bool div_var_mono(const VarMono& a, const VarMono& b, VarMono& out) {
  out.clear();
  size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) out.push_back(a[i++]);
    if (v.kind() == VarId::Kind::Z) {
      // z is Laurent: always divisible, exponents just subtract.
      int have = (i < a.size() && a[i].first == v) ? a[i].second : 0;
      if (have - e != 0) out.emplace_back(v, have - e);
      if (i < a.size() && a[i].first == v) ++i;
      continue;
    }
    if (i >= a.size() || !(a[i].first == v) || a[i].second < e) return false;
    if (a[i].second > e) out.emplace_back(v, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return true;
}

}  // namespace

MultiPoly::MultiPoly(RingElem c) {
  if (!c.is_zero()) terms_.push_back({std::move(c), {}});
}

MultiPoly MultiPoly::var(const VarId& v, int exp) {
  if (exp < 0 && v.kind() != VarId::Kind::Z)
    throw Error("MultiPoly: negative exponent on non-Laurent variable " + v.to_string());
  MultiPoly p;
  if (exp == 0) return MultiPoly(RingElem(Rational(1)));
  p.terms_.push_back({RingElem(Rational(1)), {{v, exp}}});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  for (auto& t : terms_) {
    std::sort(t.mono.begin(), t.mono.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    VarMono cleaned;
    for (auto& [v, e] : t.mono) {
      if (e == 0) continue;
      if (e < 0 && v.kind() != VarId::Kind::Z)
        throw Error("MultiPoly: negative exponent on non-Laurent variable " + v.to_string());
      cleaned.emplace_back(v, e);
    }
    t.mono = std::move(cleaned);
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
    return compare_var_mono(x.mono, y.mono) < 0;
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && compare_var_mono(merged.back().mono, t.mono) == 0) {
      merged.back().coeff = merged.back().coeff + t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged) {
    if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
  }
}

bool MultiPoly::is_ring_elem() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

RingElem MultiPoly::ring_value() const {
  if (terms_.empty()) return RingElem();
  if (!is_ring_elem()) throw Error("MultiPoly: not a scalar: " + to_string());
  return terms_[0].coeff;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::move(all));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      prods.push_back({a.coeff * b.coeff, mul_var_mono(a.mono, b.mono)});
    }
  }
  return from_terms(std::move(prods));
}

MultiPoly MultiPoly::scale(const RingElem& c) const {
  MultiPoly r;
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  r.normalize();
  return r;
}

MultiPoly MultiPoly::pow(int n) const {
  if (n < 0) throw Error("MultiPoly: negative power");
  MultiPoly r{RingElem(Rational(1))};
  MultiPoly base = *this;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].coeff == o.terms_[i].coeff)) return false;
    if (compare_var_mono(terms_[i].mono, o.terms_[i].mono) != 0) return false;
  }
  return true;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& bindings) const {
  MultiPoly acc;
  for (const auto& t : terms_) {
    MultiPoly prod{t.coeff};
    for (const auto& [v, e] : t.mono) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        prod = prod * MultiPoly::var(v, e);
      } else if (e >= 0) {
        prod = prod * it->second.pow(e);
      } else {
        // Laurent substitution only supports monomial images of z.
        const MultiPoly& img = it->second;
        if (img.terms_.size() != 1)
          throw Error("MultiPoly: cannot substitute a sum into a negative power");
        MultiPoly inv;
        VarMono m;
        for (const auto& [iv, ie] : img.terms_[0].mono) m.emplace_back(iv, -ie);
        auto q = MultiPoly{RingElem(Rational(1))}.try_divide(MultiPoly(img.terms_[0].coeff));
        if (!q) throw Error("MultiPoly: non-invertible coefficient in Laurent substitution");
        inv.terms_.push_back({q->ring_value(), std::move(m)});
        inv.normalize();
        prod = prod * inv.pow(-e);
      }
    }
    acc = acc + prod;
  }
  return acc;
}

MultiPoly MultiPoly::substitute_consts(const std::map<SymConst, RingElem>& bindings) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.push_back({t.coeff.substitute(bindings), t.mono});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::derivative(const VarId& v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    for (size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i].first == v) {
        int e = t.mono[i].second;
        Term d{t.coeff * RingElem(Rational(e)), t.mono};
        if (e == 1) {
          d.mono.erase(d.mono.begin() + static_cast<long>(i));
        } else {
          d.mono[i].second = e - 1;
        }
        out.push_back(std::move(d));
      }
    }
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::coefficient_of(const VarId& v, int k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = 0;
    VarMono rest;
    for (const auto& [tv, te] : t.mono) {
      if (tv == v) {
        e = te;
      } else {
        rest.push_back({tv, te});
      }
    }
    if (e == k) out.push_back({t.coeff, std::move(rest)});
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::constant_term() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.empty()) out.push_back(t);
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::conj() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt{t.coeff.conj(), {}};
    for (const auto& [v, e] : t.mono) {
      if (v.kind() == VarId::Kind::Zeta) {
        nt.mono.emplace_back(v.with_bar(!v.bar()), e);
      } else if (v.kind() == VarId::Kind::Z) {
        nt.mono.emplace_back(v, -e);
      } else {
        nt.mono.emplace_back(v, e);
      }
    }
    out.push_back(std::move(nt));
  }
  return from_terms(std::move(out));
}

int MultiPoly::degree_in(const VarId& v) const {
  int d = 0;
  for (const auto& t : terms_) {
    for (const auto& [tv, te] : t.mono) {
      if (tv == v) d = std::max(d, te);
    }
  }
  return d;
}

int MultiPoly::min_degree_in(const VarId& v) const {
  int d = 0;
  for (const auto& t : terms_) {
    for (const auto& [tv, te] : t.mono) {
      if (tv == v) d = std::min(d, te);
    }
  }
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_degree(t.mono));
  return d;
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> out;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.mono) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  MultiPoly rem = *this;
  std::vector<Term> quot;
  const Term& lead_div = o.terms_.back();
  while (!rem.is_zero()) {
    const Term& lead = rem.terms_.back();
    VarMono qm;
    if (!div_var_mono(lead.mono, lead_div.mono, qm)) return std::nullopt;
    auto qc = lead.coeff.try_divide(lead_div.coeff);
    if (!qc) return std::nullopt;
    Term qt{*qc, std::move(qm)};
    MultiPoly step;
    step.terms_.push_back(qt);
    rem = rem - step * o;
    quot.push_back(std::move(qt));
  }
  return from_terms(std::move(quot));
}

namespace {

std::string ring_factor_string(const RingElem& c, bool latex) {
  // Parenthesize sums when used as a coefficient in front of variables.
  std::string s = latex ? c.to_latex() : c.to_string();
  if (c.terms().size() > 1) return "(" + s + ")";
  return s;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    RingElem c = t.coeff;
    bool neg = c.terms().size() == 1 && c.terms()[0].coeff.is_negative();
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    RingElem a = neg ? -c : c;
    bool unit = a.is_one() && !t.mono.empty();
    if (!unit) out += ring_factor_string(a, false);
    for (size_t k = 0; k < t.mono.size(); ++k) {
      if (!unit || k > 0) out += "*";
      out += t.mono[k].first.to_string();
      if (t.mono[k].second != 1) out += "^" + std::to_string(t.mono[k].second);
    }
  }
  return out;
}

std::string MultiPoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    RingElem c = t.coeff;
    bool neg = c.terms().size() == 1 && c.terms()[0].coeff.is_negative();
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    RingElem a = neg ? -c : c;
    bool unit = a.is_one() && !t.mono.empty();
    if (!unit) {
      if (a.is_rational() && !a.rational_value().is_integer()) {
        Rational r = a.rational_value();
        out += "\\frac{" + r.num().to_string() + "}{" + r.den().to_string() + "}";
      } else {
        out += ring_factor_string(a, true);
      }
    }
    for (const auto& [v, e] : t.mono) {
      if (!out.empty() && out.back() != '-') out += unit ? "" : "\\,";
      out += v.to_latex();
      if (e != 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

size_t MultiPoly::hash() const {
  size_t h = 2166136261u;
  for (const auto& t : terms_) {
    h = h * 1000003u + t.coeff.hash();
    for (const auto& [v, e] : t.mono)
      h = h * 1000003u + v.hash() * 31 + static_cast<size_t>(e + 64);
  }
  return h;
}

}  // namespace liecoh
