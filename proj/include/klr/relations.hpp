#pragma once

#include <optional>
#include <string>

#include "klr/algebra.hpp"

namespace klr {

// Exhaustively verifies the six defining relations (plus the Q symmetry
// identity) under the normal-form product. Returns the first violation.
std::optional<std::string> check_defining_relations(KlrAlgebra& alg);

// Same relations under the polynomial representation.
std::optional<std::string> check_polyrep_relations(const KlrAlgebra& alg);

// Oracle equivalence on a degree window: for every generator g and every
// basis term b with deg(b) <= maxDeg and |exponents| <= expCap, the normal
// form of g*b acts on seed vectors exactly as rho(g) after rho(b).
std::optional<std::string> check_oracle_equivalence(KlrAlgebra& alg, int maxDeg, int expCap);

// Certifies linear independence of {rho(tau_w e(m)) : w m = m'} for every
// corner (m, m'), by exact rank on polynomial seeds.
std::optional<std::string> check_tau_block_freeness(const KlrAlgebra& alg);

}  // namespace klr
