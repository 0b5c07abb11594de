#include "klr/polyrep.hpp"

namespace klr {

PolyRep::Vec PolyRep::unit(int wordIdx, int nvars) {
  Vec v;
  v[wordIdx] = ZPoly::constant(nvars, 1);
  return v;
}

bool PolyRep::equal(const Vec& a, const Vec& b) {
  for (const auto& [m, p] : a) {
    auto it = b.find(m);
    if (it == b.end()) {
      if (!p.is_zero()) return false;
    } else if (!(p == it->second)) {
      return false;
    }
  }
  for (const auto& [m, p] : b)
    if (!a.count(m) && !p.is_zero()) return false;
  return true;
}

PolyRep::Vec PolyRep::add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (const auto& [m, p] : b) {
    auto it = r.find(m);
    if (it == r.end())
      r[m] = p;
    else
      it->second += p;
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

PolyRep::Vec PolyRep::apply_e(int wordIdx, const Vec& v) const {
  Vec r;
  auto it = v.find(wordIdx);
  if (it != v.end() && !it->second.is_zero()) r[wordIdx] = it->second;
  return r;
}

PolyRep::Vec PolyRep::apply_z(int j, const Vec& v) const {
  Vec r;
  ZPoly zj = ZPoly::variable(alg_->n(), j);
  for (const auto& [m, p] : v) {
    if (p.is_zero()) continue;
    r[m] = zj * p;
  }
  return r;
}

PolyRep::Vec PolyRep::apply_tau(int i, const Vec& v) const {
  Vec r;
  for (const auto& [mIdx, p] : v) {
    if (p.is_zero()) continue;
    const Word& m = alg_->word(mIdx);
    int x = m[static_cast<size_t>(i)], y = m[static_cast<size_t>(i) + 1];
    if (x == y) {
      ZPoly q = p.demazure(i);
      if (!q.is_zero()) {
        auto it = r.find(mIdx);
        if (it == r.end())
          r[mIdx] = q;
        else
          it->second += q;
      }
    } else {
      // multiplier (z_{i+1} - z_i)^{#arrows y -> x}; together with its sigma_i
      // conjugate this factors Q_{m,i}
      int hrev = alg_->quiver().arrow_count(y, x);
      ZPoly q = p.swap_adjacent(i);
      if (hrev > 0) q = q * power_of_difference(alg_->n(), i + 1, i, hrev);
      int outIdx = alg_->word_index(sigma(m, i));
      auto it = r.find(outIdx);
      if (it == r.end())
        r[outIdx] = q;
      else
        it->second += q;
    }
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

PolyRep::Vec PolyRep::apply_term(const BasisTerm& t, const Vec& v) const {
  Vec cur = apply_e(t.word, v);
  for (int j = 0; j < static_cast<int>(t.a.size()); ++j)
    for (int rep = 0; rep < t.a[static_cast<size_t>(j)]; ++rep) cur = apply_z(j, cur);
  const std::vector<int>& w = alg_->canonical(t.w);
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply_tau(*it, cur);
  return cur;
}

PolyRep::Vec PolyRep::apply(const KlrElement& x, const Vec& v) const {
  Vec r;
  for (const auto& [t, c] : x.terms()) {
    Vec part = apply_term(t, v);
    for (auto& [m, p] : part) p = p.scaled(c);
    r = add(r, part);
  }
  return r;
}

}  // namespace klr
