#include "klr/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace klr {

Perm perm_identity(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Perm perm_simple(int n, int i) {
  Perm p = perm_identity(n);
  std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(i) + 1]);
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
  return r;
}

int perm_length(const Perm& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

Perm perm_of_word(int n, const std::vector<int>& word) {
  Perm w = perm_identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = perm_compose(perm_simple(n, *it), w);
  return w;
}

bool perm_has_left_descent(const Perm& p, int j) {
  // length(s_j p) < length(p)  iff  p^{-1}(j) > p^{-1}(j+1)
  Perm inv = perm_inverse(p);
  return inv[static_cast<size_t>(j)] > inv[static_cast<size_t>(j) + 1];
}

int perm_min_left_descent(const Perm& p) {
  Perm inv = perm_inverse(p);
  for (int j = 0; j + 1 < static_cast<int>(p.size()); ++j)
    if (inv[static_cast<size_t>(j)] > inv[static_cast<size_t>(j) + 1]) return j;
  return -1;
}

std::vector<int> canonical_word(const Perm& p) {
  std::vector<int> word;
  Perm u = p;
  int n = static_cast<int>(p.size());
  for (;;) {
    int j = perm_min_left_descent(u);
    if (j < 0) break;
    word.push_back(j);
    u = perm_compose(perm_simple(n, j), u);
  }
  return word;
}

std::vector<Perm> min_coset_reps(int n1, int n2) {
  int n = n1 + n2;
  std::vector<Perm> reps;
  // choose the image positions of block 1 as an increasing sequence
  std::vector<int> pick(static_cast<size_t>(n1));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    Perm c(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (int i = 0; i < n1; ++i) {
      c[static_cast<size_t>(i)] = pick[static_cast<size_t>(i)];
      used[static_cast<size_t>(pick[static_cast<size_t>(i)])] = true;
    }
    int k = n1;
    for (int v = 0; v < n; ++v)
      if (!used[static_cast<size_t>(v)]) c[static_cast<size_t>(k++)] = v;
    reps.push_back(std::move(c));
    // next combination in lex order
    int i = n1 - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - n1 + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < n1; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return reps;
}

void coset_decompose(const Perm& u, int n1, Perm& c, Perm& y) {
  int n = static_cast<int>(u.size());
  y = perm_identity(n);
  // within each block, y is the permutation sorting the values of u
  auto fill_block = [&](int lo, int hi) {
    std::vector<int> idx;
    for (int i = lo; i < hi; ++i) idx.push_back(i);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return u[static_cast<size_t>(a)] < u[static_cast<size_t>(b)]; });
    // u(idx[0]) < u(idx[1]) < ... ; we want c = u * y^{-1} increasing, so
    // y^{-1}(lo + r) = idx[r], i.e. y(idx[r]) = lo + r.
    for (int r = 0; r < hi - lo; ++r) y[static_cast<size_t>(idx[static_cast<size_t>(r)])] = lo + r;
  };
  fill_block(0, n1);
  fill_block(n1, n);
  c = perm_compose(u, perm_inverse(y));
}

void split_block_perm(const Perm& y, int n1, Perm& y1, Perm& y2) {
  int n = static_cast<int>(y.size());
  y1.assign(static_cast<size_t>(n1), 0);
  y2.assign(static_cast<size_t>(n - n1), 0);
  for (int i = 0; i < n1; ++i) y1[static_cast<size_t>(i)] = y[static_cast<size_t>(i)];
  for (int i = n1; i < n; ++i) y2[static_cast<size_t>(i - n1)] = y[static_cast<size_t>(i)] - n1;
}

}  // namespace klr
