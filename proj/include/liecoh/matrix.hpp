#ifndef LIECOH_MATRIX_HPP
#define LIECOH_MATRIX_HPP

#include <functional>
#include <vector>

#include "liecoh/multipoly.hpp"

namespace liecoh {

// Dense matrix over the polynomial ring. Dimensions are small (at most the
// dimension of a rank-two adjoint representation), so no sparsity.
class RingMatrix {
 public:
  RingMatrix() : rows_(0), cols_(0) {}
  RingMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  static RingMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  MultiPoly& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const MultiPoly& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  RingMatrix operator+(const RingMatrix& o) const;
  RingMatrix operator-(const RingMatrix& o) const;
  RingMatrix operator*(const RingMatrix& o) const;
  RingMatrix scale(const MultiPoly& c) const;
  RingMatrix transpose() const;
  bool operator==(const RingMatrix& o) const;
  bool operator!=(const RingMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::vector<MultiPoly> apply(const std::vector<MultiPoly>& v) const;
  std::vector<MultiPoly> apply_left(const std::vector<MultiPoly>& v) const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<MultiPoly> entries_;
};

// Exact exponential of a nilpotent matrix: sum_{k<bound} M^k / k!.
// Throws NotNilpotent when M^bound != 0. bound <= 0 means the dimension.
RingMatrix mat_exp_nilpotent(const RingMatrix& m, int bound = 0);

// Exact logarithm of a unipotent matrix; inverse of mat_exp_nilpotent.
RingMatrix mat_log_unipotent(const RingMatrix& u);

struct LinearSolution {
  std::vector<MultiPoly> particular;
  std::vector<std::vector<MultiPoly>> kernel;  // basis of ker(A)
  bool unique = true;
};

// Entry normalizer applied after every row operation; systems over a
// quotient of the polynomial ring pass their canonical reduction here.
using EntryNormalizer = std::function<MultiPoly(const MultiPoly&)>;

// Solves A x = b exactly over the ring by fraction-free elimination,
// dividing only at back substitution. Throws Inconsistent when the system
// has no solution over the fraction field, and also when the solution is
// not representable inside the polynomial ring.
LinearSolution solve_linear(const RingMatrix& a, const std::vector<MultiPoly>& b,
                            const EntryNormalizer& normalize = nullptr);

// Rank over the fraction field, by fraction-free elimination.
int mat_rank(const RingMatrix& a, const EntryNormalizer& normalize = nullptr);

}  // namespace liecoh

#endif
