#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "autocomm/errors.hpp"

namespace autocomm {

/// Exact reduced fraction over int64. Every probability and bound in this
/// library is one of these; no floating point appears in any result.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}

  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw Error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational integer(long long v) { return Rational(v, 1); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Reduced representatives are unique, so equality is field-wise; ordering
  // cross-multiplies in 128 bits to dodge overflow.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Serialized form used in every report: "numerator/denominator".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static std::optional<Rational> parse(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == s.size())
      return std::nullopt;
    char* end = nullptr;
    const std::string ns(s.substr(0, slash));
    const std::string ds(s.substr(slash + 1));
    const long long n = std::strtoll(ns.c_str(), &end, 10);
    if (end != ns.c_str() + ns.size()) return std::nullopt;
    const long long d = std::strtoll(ds.c_str(), &end, 10);
    if (end != ds.c_str() + ds.size() || d == 0) return std::nullopt;
    return Rational(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num_ << '/' << r.den_;
  }

 private:
  long long num_;
  long long den_;  // > 0, coprime to num_
};

}  // namespace autocomm
