#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace klr {

// Exact scalar types used throughout. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Resource/cap violations map to CLI exit code 2.
struct CapError : Error {
  explicit CapError(const std::string& what) : Error(what) {}
};

// Exact rational with a deliberately closed constructor set, so that generic
// trait machinery (Eigen scalar promotion in particular) never instantiates
// an unconstrained converting constructor.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int x) : v_(x) {}                 // NOLINT(google-explicit-constructor)
  Rat(long long x) : v_(x) {}           // NOLINT(google-explicit-constructor)
  Rat(const Int& x) : v_(x) {}          // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den) : v_(num, den) {}

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) { return Rat(a.v_ / b.v_); }
  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    v_ /= o.v_;
    return *this;
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend Rat abs(const Rat& a) { return a < Rat(0) ? -a : a; }
  friend Int numerator(const Rat& a) { return boost::multiprecision::numerator(a.v_); }
  friend Int denominator(const Rat& a) { return boost::multiprecision::denominator(a.v_); }

  std::string str() const { return v_.str(); }
  template <typename Os>
  friend Os& operator<<(Os& os, const Rat& a) {
    return os << a.str();
  }

 private:
  explicit Rat(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

inline long long to_int64(const Int& v) {
  if (v > Int(std::numeric_limits<long long>::max()) ||
      v < Int(std::numeric_limits<long long>::min()))
    throw Error("integer does not fit in 64 bits: " + v.str());
  return static_cast<long long>(v);
}

}  // namespace klr
