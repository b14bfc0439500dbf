#include "liecoh/ringelem.hpp"

#include <algorithm>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

int mono_degree(const ConstMono& m) {
  int d = 0;
  for (const auto& [c, e] : m) d += e;
  return d;
}

ConstMono mul_mono(const ConstMono& a, const ConstMono& b) {
  ConstMono r;
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

// Divides monomial a by b; false when not divisible.
bool div_mono(const ConstMono& a, const ConstMono& b, ConstMono& out) {
  out.clear();
  size_t i = 0;
  for (const auto& [c, e] : b) {
    while (i < a.size() && a[i].first < c) out.push_back(a[i++]);
    if (i >= a.size() || !(a[i].first == c) || a[i].second < e) return false;
    if (a[i].second > e) out.emplace_back(c, a[i].second - e);
    ++i;
  }
  while (i < a.size()) out.push_back(a[i++]);
  return true;
}

}  // namespace

int compare_mono(const ConstMono& a, const ConstMono& b) {
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

RingElem::RingElem(Rational r) {
  if (!r.is_zero()) terms_.push_back({std::move(r), {}});
}

RingElem RingElem::constant(const SymConst& c) {
  RingElem e;
  e.terms_.push_back({Rational(1), {{c, 1}}});
  return e;
}

RingElem RingElem::term(Rational coeff, ConstMono mono) {
  RingElem e;
  e.terms_.push_back({std::move(coeff), std::move(mono)});
  e.normalize();
  return e;
}

RingElem RingElem::from_terms(std::vector<Term> terms) {
  RingElem e;
  e.terms_ = std::move(terms);
  e.normalize();
  return e;
}

void RingElem::normalize() {
  // Fold powers of the imaginary unit: i^2 -> -1.
  for (auto& t : terms_) {
    std::sort(t.mono.begin(), t.mono.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    ConstMono cleaned;
    for (auto& [c, e] : t.mono) {
      if (e == 0) continue;
      if (e < 0) throw Error("RingElem: negative constant exponent");
      if (c.kind() == SymConst::Kind::Imag) {
        if ((e / 2) % 2 == 1) t.coeff = -t.coeff;
        if (e % 2 == 1) cleaned.emplace_back(c, 1);
      } else {
        cleaned.emplace_back(c, e);
      }
    }
    t.mono = std::move(cleaned);
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
    return compare_mono(x.mono, y.mono) < 0;
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && compare_mono(merged.back().mono, t.mono) == 0) {
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

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.empty() && terms_[0].coeff.is_one();
}

bool RingElem::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

Rational RingElem::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw Error("RingElem: not a rational constant: " + to_string());
  return terms_[0].coeff;
}

int RingElem::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_degree(t.mono));
  return d;
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

RingElem RingElem::operator+(const RingElem& o) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::move(all));
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      prods.push_back({a.coeff * b.coeff, mul_mono(a.mono, b.mono)});
    }
  }
  return from_terms(std::move(prods));
}

bool RingElem::operator==(const RingElem& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
    if (compare_mono(terms_[i].mono, o.terms_[i].mono) != 0) return false;
  }
  return true;
}

RingElem RingElem::conj() const {
  RingElem r = *this;
  for (auto& t : r.terms_) {
    for (const auto& [c, e] : t.mono) {
      if (c.kind() == SymConst::Kind::Imag && e % 2 == 1) t.coeff = -t.coeff;
    }
  }
  r.normalize();
  return r;
}

RingElem RingElem::substitute(const std::map<SymConst, RingElem>& bindings) const {
  RingElem acc;
  for (const auto& t : terms_) {
    RingElem prod{t.coeff};
    for (const auto& [c, e] : t.mono) {
      auto it = bindings.find(c);
      RingElem base = it != bindings.end() ? it->second : RingElem::constant(c);
      for (int k = 0; k < e; ++k) prod = prod * base;
    }
    acc = acc + prod;
  }
  return acc;
}

std::optional<RingElem> RingElem::try_divide(const RingElem& o) const {
  if (o.is_zero()) return std::nullopt;
  for (const auto& t : o.terms_) {
    for (const auto& [c, e] : t.mono) {
      if (c.kind() == SymConst::Kind::Imag) return std::nullopt;
    }
  }
  RingElem rem = *this;
  std::vector<Term> quot;
  const Term& lead_div = o.terms_.back();
  while (!rem.is_zero()) {
    const Term& lead = rem.terms_.back();
    ConstMono qm;
    if (!div_mono(lead.mono, lead_div.mono, qm)) return std::nullopt;
    Term qt{lead.coeff / lead_div.coeff, std::move(qm)};
    RingElem step;
    step.terms_.push_back(qt);
    rem = rem - step * o;
    quot.push_back(std::move(qt));
  }
  return from_terms(std::move(quot));
}

std::vector<SymConst> RingElem::constants() const {
  std::vector<SymConst> out;
  for (const auto& t : terms_) {
    for (const auto& [c, e] : t.mono) {
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  return out;
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rational c = t.coeff;
    bool neg = c.is_negative();
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational a = neg ? -c : c;
    bool unit = a.is_one() && !t.mono.empty();
    if (!unit) out += a.to_string();
    for (size_t k = 0; k < t.mono.size(); ++k) {
      if (!unit || k > 0) out += "*";
      out += t.mono[k].first.to_string();
      if (t.mono[k].second > 1) out += "^" + std::to_string(t.mono[k].second);
    }
  }
  return out;
}

std::string RingElem::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rational c = t.coeff;
    bool neg = c.is_negative();
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational a = neg ? -c : c;
    bool unit = a.is_one() && !t.mono.empty();
    if (!unit) {
      if (a.is_integer()) {
        out += a.num().to_string();
      } else {
        out += "\\frac{" + a.num().to_string() + "}{" + a.den().to_string() + "}";
      }
    }
    for (const auto& [sym, e] : t.mono) {
      out += (out.empty() || unit ? "" : " ") + sym.to_latex();
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

size_t RingElem::hash() const {
  size_t h = 1469598103u;
  for (const auto& t : terms_) {
    h = h * 1000003u + t.coeff.hash();
    for (const auto& [c, e] : t.mono) h = h * 1000003u + c.hash() * 31 + static_cast<size_t>(e);
  }
  return h;
}

}  // namespace liecoh
