#pragma once

#include <map>
#include <string>
#include <vector>

#include "klr/numeric.hpp"

namespace klr {

// Polynomial in z_1..z_n with integer coefficients; exponent vectors have
// fixed length n. Canonical (sorted) term order.
class ZPoly {
 public:
  using Mono = std::vector<int>;

  explicit ZPoly(int nvars = 0) : n_(nvars) {}
  static ZPoly constant(int nvars, Int c);
  static ZPoly variable(int nvars, int j);
  static ZPoly monomial(Mono e, Int c);

  int nvars() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<Mono, Int>& terms() const { return c_; }
  void add_term(const Mono& e, const Int& c);

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly operator-() const;
  bool operator==(const ZPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

  ZPoly scaled(const Int& c) const;
  int total_degree() const;  // -1 for zero

  // swap variables i and i+1 in every monomial
  ZPoly swap_adjacent(int i) const;
  // (swap_adjacent(i) applied to *this - *this) / (z_i - z_{i+1}), exact
  ZPoly demazure(int i) const;

  std::string str() const;

 private:
  int n_;
  std::map<Mono, Int> c_;
};

// (z_b - z_a)^k expanded, in n variables (0-based indices a, b).
ZPoly power_of_difference(int nvars, int b, int a, int k);

}  // namespace klr
