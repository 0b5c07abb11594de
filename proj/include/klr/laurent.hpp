#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/numeric.hpp"

namespace klr {

// Integer Laurent polynomial in t. Zero coefficients are never stored, so
// equality of the coefficient maps is equality of polynomials.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int degree, Int coeff = 1);
  static LaurentPoly one() { return monomial(0); }

  bool is_zero() const { return coeff_.empty(); }
  Int coeff(int degree) const;
  void add_term(int degree, const Int& c);

  int min_degree() const;  // throws on zero
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }

  LaurentPoly bar() const;           // t^k -> t^-k
  LaurentPoly shifted(int k) const;  // multiply by t^k
  bool bar_invariant() const { return *this == bar(); }
  Int eval_one() const;  // value at t = 1

  const std::map<int, Int>& terms() const { return coeff_; }
  std::string str() const;

 private:
  std::map<int, Int> coeff_;
};

// [n]_t = t^{-n+1} + t^{-n+3} + ... + t^{n-1}
LaurentPoly quantum_integer(int n);
// [n]_t! ; throws on negative n
LaurentPoly quantum_factorial(int n);

// Graded dimension series truncated at a stated degree bound. Coefficients
// cover degrees lowest .. bound inclusively; arithmetic between two series is
// only defined on the overlap of their bounds and the result records the
// smaller bound.
class TruncatedSeries {
 public:
  TruncatedSeries() : lowest_(0), bound_(-1) {}
  TruncatedSeries(int lowest, int bound);

  int lowest() const { return lowest_; }
  int bound() const { return bound_; }
  Int coeff(int degree) const;
  void add(int degree, const Int& c);  // degrees outside [lowest, bound] throw

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  bool operator==(const TruncatedSeries& o) const;

  bool is_zero() const;
  std::string str() const;

 private:
  int lowest_;
  int bound_;
  std::vector<Int> c_;  // c_[d - lowest_]
};

}  // namespace klr
