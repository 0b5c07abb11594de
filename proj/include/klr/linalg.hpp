#pragma once

#include <Eigen/Core>
#include <map>
#include <vector>

#include "klr/numeric.hpp"

namespace Eigen {
template <>
struct NumTraits<klr::Rat> : GenericNumTraits<klr::Rat> {
  typedef klr::Rat Real;
  typedef klr::Rat NonInteger;
  typedef klr::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 100,
    MulCost = 100
  };
  static inline klr::Rat epsilon() { return klr::Rat(0); }
  static inline klr::Rat dummy_precision() { return klr::Rat(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace klr {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatQ = DenseMatrix<Rat>;
using VecQ = DenseVector<Rat>;

// Incremental row space over an exact field; rows are sparse maps
// column -> value. Pivots are kept in increasing column order so reduction
// is a single monotone pass.
template <typename Scalar>
class RankAccumulator {
 public:
  using Row = std::map<long long, Scalar>;

  // returns true when the row enlarged the span
  bool add(Row row) {
    for (const auto& [pivot, er] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Scalar f = it->second / er.begin()->second;
      for (const auto& [c, v] : er) {
        Scalar& slot = row[c];
        slot -= f * v;
        if (slot == 0) row.erase(c);
      }
    }
    if (row.empty()) return false;
    long long pivot = row.begin()->first;
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<long long, Row>& rows() const { return rows_; }

  // reduce an arbitrary row against the span; empty result means membership
  Row reduce(Row row) const {
    for (const auto& [pivot, er] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      Scalar f = it->second / er.begin()->second;
      for (const auto& [c, v] : er) {
        Scalar& slot = row[c];
        slot -= f * v;
        if (slot == 0) row.erase(c);
      }
    }
    return row;
  }

 private:
  std::map<long long, Row> rows_;
};

// Incremental dense row space over an exact field; rows are kept with
// strictly increasing leading indices, so insertion is a single monotone
// reduction pass.
template <typename Scalar>
class DenseSpan {
 public:
  explicit DenseSpan(int width) : width_(width) {}

  bool add(std::vector<Scalar> v) {
    for (const auto& [pivot, er] : rows_) {
      if (v[static_cast<size_t>(pivot)] == 0) continue;
      Scalar f = v[static_cast<size_t>(pivot)] / er[static_cast<size_t>(pivot)];
      for (int c = pivot; c < width_; ++c) v[static_cast<size_t>(c)] -= f * er[static_cast<size_t>(c)];
    }
    int lead = 0;
    while (lead < width_ && v[static_cast<size_t>(lead)] == 0) ++lead;
    if (lead == width_) return false;
    normalize_row(v, lead);
    rows_.emplace(lead, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, std::vector<Scalar>>& rows() const { return rows_; }

 private:
  // scale so the entries are coprime integers; keeps coefficient growth down
  static void normalize_row(std::vector<Scalar>& v, int lead) {
    if constexpr (std::is_same_v<Scalar, Rat>) {
      Int den = 1, num = 0;
      for (const Scalar& x : v) {
        if (x == Scalar(0)) continue;
        den = boost::multiprecision::lcm(den, denominator(x));
      }
      for (Scalar& x : v) x *= Rat(den);
      for (const Scalar& x : v) {
        if (x == Scalar(0)) continue;
        num = boost::multiprecision::gcd(num, numerator(x));
      }
      if (num != 0 && num != 1)
        for (Scalar& x : v) x /= Rat(num);
      if (v[static_cast<size_t>(lead)] < Scalar(0))
        for (Scalar& x : v) x = -x;
    }
  }

  int width_;
  std::map<int, std::vector<Scalar>> rows_;
};

// In-place Gauss elimination; returns rank. Column pivot order is left to
// right, so the result is a row echelon form with increasing pivots.
template <typename Scalar>
int row_echelon(DenseMatrix<Scalar>& a, std::vector<int>* pivotCols = nullptr) {
  int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Scalar f = a(i, c) / a(r, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    if (pivotCols) pivotCols->push_back(c);
    ++r;
  }
  return r;
}

template <typename Scalar>
int rank_of(DenseMatrix<Scalar> a) {
  return row_echelon(a);
}

// Basis of the null space { x : a x = 0 }, one column per kernel vector.
template <typename Scalar>
DenseMatrix<Scalar> kernel_basis(DenseMatrix<Scalar> a) {
  std::vector<int> pivots;
  int r = row_echelon(a, &pivots);
  int cols = static_cast<int>(a.cols());
  std::vector<bool> isPivot(static_cast<size_t>(cols), false);
  for (int c : pivots) isPivot[static_cast<size_t>(c)] = true;
  DenseMatrix<Scalar> k(cols, cols - r);
  k.setZero();
  int out = 0;
  for (int free = 0; free < cols; ++free) {
    if (isPivot[static_cast<size_t>(free)]) continue;
    k(free, out) = 1;
    // the echelon form is fully reduced, so each pivot reads off directly
    for (int row = 0; row < r; ++row) {
      int pc = pivots[static_cast<size_t>(row)];
      if (a(row, free) != 0) k(pc, out) = -a(row, free) / a(row, pc);
    }
    ++out;
  }
  return k;
}

}  // namespace klr
