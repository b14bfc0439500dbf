#include "liecoh/matrix.hpp"

#include <algorithm>
#include <functional>

#include "liecoh/errors.hpp"

namespace liecoh {

RingMatrix RingMatrix::identity(int n) {
  RingMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly(Rational(1));
  return m;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("RingMatrix: shape mismatch in +");
  RingMatrix r(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("RingMatrix: shape mismatch in -");
  RingMatrix r(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
  return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (cols_ != o.rows_) throw Error("RingMatrix: shape mismatch in *");
  RingMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const MultiPoly& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const MultiPoly& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * bkj;
      }
    }
  }
  return r;
}

RingMatrix RingMatrix::scale(const MultiPoly& c) const {
  RingMatrix r(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * c;
  return r;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool RingMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::vector<MultiPoly> RingMatrix::apply(const std::vector<MultiPoly>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("RingMatrix: apply shape mismatch");
  std::vector<MultiPoly> r(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] = r[i] + at(i, j) * v[j];
    }
  }
  return r;
}

std::vector<MultiPoly> RingMatrix::apply_left(const std::vector<MultiPoly>& v) const {
  if (static_cast<int>(v.size()) != rows_) throw Error("RingMatrix: apply_left shape mismatch");
  std::vector<MultiPoly> r(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) {
    for (int i = 0; i < rows_; ++i) {
      if (at(i, j).is_zero() || v[i].is_zero()) continue;
      r[j] = r[j] + v[i] * at(i, j);
    }
  }
  return r;
}

std::string RingMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += i == 0 ? "[" : " ";
    for (int j = 0; j < cols_; ++j) {
      s += at(i, j).to_string();
      if (j + 1 < cols_) s += ", ";
    }
    s += i + 1 < rows_ ? ";\n" : "]";
  }
  return s;
}

RingMatrix mat_exp_nilpotent(const RingMatrix& m, int bound) {
  if (m.rows() != m.cols()) throw Error("mat_exp_nilpotent: matrix not square");
  int n = m.rows();
  if (bound <= 0) bound = n;
  RingMatrix acc = RingMatrix::identity(n);
  RingMatrix power = RingMatrix::identity(n);
  Rational fact(1);
  for (int k = 1; k < bound; ++k) {
    power = power * m;
    if (power.is_zero()) return acc;
    fact = fact * Rational(k);
    acc = acc + power.scale(MultiPoly(fact.inverse()));
  }
  power = power * m;
  if (!power.is_zero())
    throw NotNilpotentError("mat_exp_nilpotent: M^" + std::to_string(bound) +
                            " does not vanish; the direction is not nilpotent");
  return acc;
}

RingMatrix mat_log_unipotent(const RingMatrix& u) {
  if (u.rows() != u.cols()) throw Error("mat_log_unipotent: matrix not square");
  int n = u.rows();
  RingMatrix nil = u - RingMatrix::identity(n);
  RingMatrix acc(n, n);
  RingMatrix power = RingMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * nil;
    if (power.is_zero()) return acc;
    Rational c(k % 2 == 1 ? 1 : -1, k);
    acc = acc + power.scale(MultiPoly(c));
  }
  throw NotUnipotentError("mat_log_unipotent: (U - I)^" + std::to_string(n) +
                          " does not vanish");
}

namespace {

struct Echelon {
  RingMatrix m;                 // reduced augmented matrix
  std::vector<int> pivot_col;   // pivot column per pivot row
  int rank = 0;
};

// Fraction-free forward elimination: rows are cross-multiplied, never
// divided, so every entry stays inside the ring. The normalizer reduces
// entries back to canonical quotient-ring representatives.
Echelon eliminate(RingMatrix m, const EntryNormalizer& normalize) {
  Echelon e{std::move(m), {}, 0};
  int rows = e.m.rows(), cols = e.m.cols();
  auto reduce = [&](MultiPoly v) { return normalize ? normalize(std::move(v)) : v; };
  if (normalize) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) e.m.at(i, j) = normalize(e.m.at(i, j));
  }
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!e.m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(e.m.at(pivot, j), e.m.at(r, j));
    }
    MultiPoly p = e.m.at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      MultiPoly f = e.m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = 0; j < cols; ++j) {
        e.m.at(i, j) = reduce(e.m.at(i, j) * p - e.m.at(r, j) * f);
      }
    }
    e.pivot_col.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

}  // namespace

int mat_rank(const RingMatrix& a, const EntryNormalizer& normalize) {
  // Rank ignores the pivot-column bookkeeping beyond the count.
  Echelon e = eliminate(a, normalize);
  return e.rank;
}

LinearSolution solve_linear(const RingMatrix& a, const std::vector<MultiPoly>& b,
                            const EntryNormalizer& normalize) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve_linear: shape mismatch");
  auto reduce = [&](MultiPoly v) { return normalize ? normalize(std::move(v)) : v; };
  int rows = a.rows(), cols = a.cols();
  RingMatrix aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, cols) = b[i];
  }
  Echelon e = eliminate(std::move(aug), normalize);

  // A pivot in the augmented column means 0 = nonzero.
  for (int i = e.rank; i < rows; ++i) {
    if (!e.m.at(i, cols).is_zero())
      throw InconsistentError("solve_linear: inconsistent system (row " + std::to_string(i) +
                              ")");
  }
  if (!e.pivot_col.empty() && e.pivot_col.back() == cols)
    throw InconsistentError("solve_linear: inconsistent system");

  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : e.pivot_col) is_pivot[static_cast<size_t>(c)] = true;

  LinearSolution sol;
  sol.particular.assign(static_cast<size_t>(cols), MultiPoly());

  // Back substitution: free columns are set to zero for the particular
  // solution; each division must be exact for a ring-valued answer.
  for (int r = e.rank - 1; r >= 0; --r) {
    int pc = e.pivot_col[static_cast<size_t>(r)];
    MultiPoly rhs = e.m.at(r, cols);
    for (int j = pc + 1; j < cols; ++j) {
      if (!e.m.at(r, j).is_zero() && !sol.particular[static_cast<size_t>(j)].is_zero())
        rhs = reduce(rhs - e.m.at(r, j) * sol.particular[static_cast<size_t>(j)]);
    }
    auto q = rhs.try_divide(e.m.at(r, pc));
    if (!q)
      throw InconsistentError(
          "solve_linear: solution is not representable in the polynomial ring");
    sol.particular[static_cast<size_t>(pc)] = reduce(*q);
  }

  // Kernel basis: one vector per free column, built by back substitution
  // with that free coordinate set to one.
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[static_cast<size_t>(fc)]) continue;
    std::vector<MultiPoly> k(static_cast<size_t>(cols));
    k[static_cast<size_t>(fc)] = MultiPoly(Rational(1));
    for (int r = e.rank - 1; r >= 0; --r) {
      int pc = e.pivot_col[static_cast<size_t>(r)];
      MultiPoly rhs;
      for (int j = pc + 1; j < cols; ++j) {
        if (!e.m.at(r, j).is_zero() && !k[static_cast<size_t>(j)].is_zero())
          rhs = reduce(rhs - e.m.at(r, j) * k[static_cast<size_t>(j)]);
      }
      auto q = rhs.try_divide(e.m.at(r, pc));
      if (!q) throw InconsistentError("solve_linear: kernel vector not ring-representable");
      k[static_cast<size_t>(pc)] = reduce(*q);
    }
    sol.kernel.push_back(std::move(k));
  }
  sol.unique = sol.kernel.empty();

  // Exactness guard: re-multiply.
  std::vector<MultiPoly> check = a.apply(sol.particular);
  for (int i = 0; i < rows; ++i) {
    MultiPoly diff = reduce(check[static_cast<size_t>(i)] - b[static_cast<size_t>(i)]);
    if (!diff.is_zero())
      throw InconsistentError("solve_linear: verification failed after back substitution");
  }
  return sol;
}

}  // namespace liecoh
