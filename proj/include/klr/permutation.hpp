#pragma once

#include <vector>

#include "klr/numeric.hpp"

namespace klr {

// Permutations of {0,..,n-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
Perm perm_simple(int n, int i);               // the transposition s_i = (i, i+1)
Perm perm_compose(const Perm& p, const Perm& q);  // (p*q)(i) = p(q(i))
Perm perm_inverse(const Perm& p);
int perm_length(const Perm& p);  // number of inversions

// Product of the generator word s_{w[0]} s_{w[1]} ... s_{w[k-1]}.
Perm perm_of_word(int n, const std::vector<int>& word);

// Left descents: j with length(s_j p) < length(p).
bool perm_has_left_descent(const Perm& p, int j);
int perm_min_left_descent(const Perm& p);  // -1 for identity

// Lexicographically smallest reduced word; satisfies
// canonical(u) = (j :: canonical(s_j u)) for j = min left descent of u.
std::vector<int> canonical_word(const Perm& p);

// (w . m)_{w(i)} = m_i : the place action of w on sequences.
template <typename T>
std::vector<T> perm_act(const Perm& w, const std::vector<T>& m) {
  std::vector<T> out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[static_cast<size_t>(w[i])] = m[i];
  return out;
}

// Minimal-length representatives of the left cosets u (S_{n1} x S_{n2}) in
// S_{n1+n2}: exactly the permutations increasing on both blocks. Deterministic
// order (lex on the chosen block-1 image set).
std::vector<Perm> min_coset_reps(int n1, int n2);

// u = c * y with c a minimal coset representative and y in S_{n1} x S_{n2};
// lengths are additive.
void coset_decompose(const Perm& u, int n1, Perm& c, Perm& y);

// Restriction of a block permutation to its two blocks.
void split_block_perm(const Perm& y, int n1, Perm& y1, Perm& y2);

}  // namespace klr
