#include "liecoh/symconst.hpp"

#include <tuple>

namespace liecoh {

bool SymConst::operator<(const SymConst& o) const {
  return std::tie(kind_, a_, b_, index_) < std::tie(o.kind_, o.a_, o.b_, o.index_);
}

std::string SymConst::to_string() const {
  switch (kind_) {
    case Kind::StructN:
      return "N[" + a_ + "," + b_ + "]";
    case Kind::Kappa:
      return "kappa[" + a_ + "," + b_ + "]";
    case Kind::Lambda:
      return "lambda[" + std::to_string(index_) + "]";
    case Kind::User:
      return a_;
    case Kind::Imag:
      return "i";
  }
  return "?";
}

std::string SymConst::to_latex() const {
  switch (kind_) {
    case Kind::StructN:
      return "N_{" + a_ + "," + b_ + "}";
    case Kind::Kappa:
      return "\\kappa_{" + a_ + "," + b_ + "}";
    case Kind::Lambda:
      return "\\lambda_{" + std::to_string(index_) + "}";
    case Kind::User:
      return a_;
    case Kind::Imag:
      return "i";
  }
  return "?";
}

size_t SymConst::hash() const {
  size_t h = static_cast<size_t>(kind_) * 1000003u + static_cast<size_t>(index_);
  for (char c : a_) h = h * 131 + static_cast<unsigned char>(c);
  h = h * 131 + 0x7f;
  for (char c : b_) h = h * 131 + static_cast<unsigned char>(c);
  return h;
}

}  // namespace liecoh
