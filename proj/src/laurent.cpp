#include "klr/laurent.hpp"

#include <sstream>

namespace klr {

LaurentPoly LaurentPoly::monomial(int degree, Int coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeff_[degree] = std::move(coeff);
  return p;
}

Int LaurentPoly::coeff(int degree) const {
  auto it = coeff_.find(degree);
  return it == coeff_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int degree, const Int& c) {
  if (c == 0) return;
  Int& slot = coeff_[degree];
  slot += c;
  if (slot == 0) coeff_.erase(degree);
}

int LaurentPoly::min_degree() const {
  if (coeff_.empty()) throw Error("min_degree of zero polynomial");
  return coeff_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (coeff_.empty()) throw Error("max_degree of zero polynomial");
  return coeff_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.coeff_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.coeff_) add_term(d, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [da, ca] : a.coeff_)
    for (const auto& [db, cb] : b.coeff_) r.add_term(da + db, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [d, c] : coeff_) r.coeff_[d] = -c;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [d, c] : coeff_) r.coeff_[-d] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [d, c] : coeff_) r.coeff_[d + k] = c;
  return r;
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& [d, c] : coeff_) s += c;
  return s;
}

std::string LaurentPoly::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeff_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Int a = abs(c);
    if (d == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "t";
      if (d != 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly quantum_integer(int n) {
  LaurentPoly p;
  for (int d = -n + 1; d <= n - 1; d += 2) p.add_term(d, 1);
  return p;
}

LaurentPoly quantum_factorial(int n) {
  if (n < 0) throw Error("quantum_factorial of negative argument");
  LaurentPoly p = LaurentPoly::one();
  for (int k = 1; k <= n; ++k) p = p * quantum_integer(k);
  return p;
}

TruncatedSeries::TruncatedSeries(int lowest, int bound) : lowest_(lowest), bound_(bound) {
  if (bound_ >= lowest_) c_.assign(static_cast<size_t>(bound_ - lowest_ + 1), Int(0));
}

Int TruncatedSeries::coeff(int degree) const {
  if (degree < lowest_ || degree > bound_) return 0;
  return c_[static_cast<size_t>(degree - lowest_)];
}

void TruncatedSeries::add(int degree, const Int& c) {
  if (degree < lowest_ || degree > bound_)
    throw Error("series degree out of bounds: " + std::to_string(degree));
  c_[static_cast<size_t>(degree - lowest_)] += c;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  int lo = std::min(lowest_, o.lowest_);
  int hi = std::min(bound_, o.bound_);
  TruncatedSeries r(lo, hi);
  for (int d = lo; d <= hi; ++d) r.add(d, coeff(d) + o.coeff(d));
  *this = std::move(r);
  return *this;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (bound_ != o.bound_) return false;
  int lo = std::min(lowest_, o.lowest_);
  for (int d = lo; d <= bound_; ++d)
    if (coeff(d) != o.coeff(d)) return false;
  return true;
}

bool TruncatedSeries::is_zero() const {
  for (const Int& x : c_)
    if (x != 0) return false;
  return true;
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int d = lowest_; d <= bound_; ++d) {
    if (coeff(d) == 0) continue;
    if (!first) os << ", ";
    os << d << ": " << coeff(d).str();
    first = false;
  }
  os << "] (D=" << bound_ << ")";
  return os.str();
}

}  // namespace klr
