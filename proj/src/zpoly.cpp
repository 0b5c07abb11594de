#include "klr/zpoly.hpp"

#include <algorithm>
#include <sstream>

namespace klr {

ZPoly ZPoly::constant(int nvars, Int c) {
  ZPoly p(nvars);
  p.add_term(Mono(static_cast<size_t>(nvars), 0), c);
  return p;
}

ZPoly ZPoly::variable(int nvars, int j) {
  ZPoly p(nvars);
  Mono e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(j)] = 1;
  p.add_term(e, 1);
  return p;
}

ZPoly ZPoly::monomial(Mono e, Int c) {
  ZPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

void ZPoly::add_term(const Mono& e, const Int& c) {
  if (c == 0) return;
  Int& slot = c_[e];
  slot += c;
  if (slot == 0) c_.erase(e);
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.n_);
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      ZPoly::Mono e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

ZPoly ZPoly::operator-() const {
  ZPoly r(n_);
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

ZPoly ZPoly::scaled(const Int& c) const {
  ZPoly r(n_);
  if (c == 0) return r;
  for (const auto& [e, cc] : c_) r.c_[e] = cc * c;
  return r;
}

int ZPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : c_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

ZPoly ZPoly::swap_adjacent(int i) const {
  ZPoly r(n_);
  for (const auto& [e, c] : c_) {
    Mono f = e;
    std::swap(f[static_cast<size_t>(i)], f[static_cast<size_t>(i) + 1]);
    r.add_term(f, c);
  }
  return r;
}

ZPoly ZPoly::demazure(int i) const {
  // Per monomial z_i^p z_{i+1}^q M:
  //   (z_i^q z_{i+1}^p - z_i^p z_{i+1}^q) / (z_i - z_{i+1})
  // = sign * sum_{l=0}^{d-1} z_i^{min+l} z_{i+1}^{min+d-1-l} M,  d = |p-q|,
  // with sign -1 for p > q and +1 for p < q.
  ZPoly r(n_);
  size_t a = static_cast<size_t>(i), b = a + 1;
  for (const auto& [e, c] : c_) {
    int p = e[a], q = e[b];
    if (p == q) continue;
    int mn = std::min(p, q), d = std::abs(p - q);
    Int coeff = (p > q) ? -c : c;
    for (int l = 0; l < d; ++l) {
      Mono f = e;
      f[a] = mn + l;
      f[b] = mn + d - 1 - l;
      r.add_term(f, coeff);
    }
  }
  return r;
}

std::string ZPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    os << c.str();
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) {
        os << "*z" << (j + 1);
        if (e[j] > 1) os << "^" << e[j];
      }
    first = false;
  }
  return os.str();
}

ZPoly power_of_difference(int nvars, int b, int a, int k) {
  ZPoly diff = ZPoly::variable(nvars, b) - ZPoly::variable(nvars, a);
  ZPoly r = ZPoly::constant(nvars, 1);
  for (int i = 0; i < k; ++i) r = r * diff;
  return r;
}

}  // namespace klr
