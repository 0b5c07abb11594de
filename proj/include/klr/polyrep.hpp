#pragma once

#include <map>

#include "klr/algebra.hpp"
#include "klr/zpoly.hpp"

namespace klr {

// Faithful action of R_beta on  (+)_m Z[z_1..z_n] e(m), used as the
// correctness oracle for the normal-form engine. Independent of the
// straightening code path: generators act directly on polynomials.
//
//   e(m):  projection onto the m component
//   z_j:   multiplication
//   tau_i: the Demazure operator on equal letters, and
//          f |-> (z_{i+1}-z_i)^{h(m_{i+1} -> m_i)} (sigma_i f) otherwise.
class PolyRep {
 public:
  // component m |-> polynomial
  using Vec = std::map<int, ZPoly>;

  explicit PolyRep(const KlrAlgebra& alg) : alg_(&alg) {}

  Vec apply_e(int wordIdx, const Vec& v) const;
  Vec apply_z(int j, const Vec& v) const;
  Vec apply_tau(int i, const Vec& v) const;
  Vec apply_term(const BasisTerm& t, const Vec& v) const;
  Vec apply(const KlrElement& x, const Vec& v) const;

  static Vec unit(int wordIdx, int nvars);  // e(m) . 1
  static bool equal(const Vec& a, const Vec& b);
  static Vec add(const Vec& a, const Vec& b);

 private:
  const KlrAlgebra* alg_;
};

}  // namespace klr
