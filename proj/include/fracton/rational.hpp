#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include "fracton/errors.hpp"

namespace fracton {

using bigint = boost::multiprecision::cpp_int;

/// Exact reduced fraction. Stored with den > 0 and gcd(|num|, den) = 1.
///
/// The integer type is a template parameter; the library default uses an
/// arbitrary-precision integer because mediant paths and class arithmetic
/// outgrow 64 bits quickly even when the inputs look small.
template <class Int = bigint>
class basic_rational {
 public:
  basic_rational() : num_(0), den_(1) {}

  basic_rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit

  basic_rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    normalize();
  }

  const Int& num() const noexcept { return num_; }
  const Int& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  /// Largest integer not above the value (true floor, also for negatives).
  Int floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }

  friend basic_rational operator+(const basic_rational& a,
                                  const basic_rational& b) {
    return basic_rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend basic_rational operator-(const basic_rational& a,
                                  const basic_rational& b) {
    return basic_rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend basic_rational operator*(const basic_rational& a,
                                  const basic_rational& b) {
    return basic_rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend basic_rational operator/(const basic_rational& a,
                                  const basic_rational& b) {
    if (b.num_ == 0) throw domain_error("rational division by zero");
    return basic_rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  basic_rational operator-() const {
    basic_rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const basic_rational& a, const basic_rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const basic_rational& a,
                                          const basic_rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Mediant (a.num + b.num) / (a.den + b.den); the result is reduced by
  /// construction when a and b are unimodular neighbours.
  static basic_rational mediant(const basic_rational& a,
                                const basic_rational& b) {
    return basic_rational(a.num_ + b.num_, a.den_ + b.den_);
  }

  /// Parses "p/q" or a bare integer "p". Whitespace is not accepted.
  static basic_rational parse(std::string_view text) {
    const auto bad = [&] {
      return domain_error("malformed rational '" + std::string(text) +
                          "' (expected p or p/q)");
    };
    if (text.empty()) throw bad();
    const std::size_t slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part =
        slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    const auto to_int = [&](std::string_view part) {
      std::string_view digits = part;
      bool negative = false;
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
      }
      if (digits.empty()) throw bad();
      for (char c : digits)
        if (c < '0' || c > '9') throw bad();
      const Int value{std::string(digits)};
      return negative ? Int(-value) : value;
    };
    return basic_rational(to_int(num_part), to_int(den_part));
  }

  std::string str() const {
    std::string out = int_str(num_);
    if (den_ != 1) {
      out += '/';
      out += int_str(den_);
    }
    return out;
  }

  double to_double() const {
    if constexpr (std::is_integral_v<Int>) {
      return static_cast<double>(num_) / static_cast<double>(den_);
    } else {
      return num_.template convert_to<double>() /
             den_.template convert_to<double>();
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const basic_rational& r) {
    return os << r.str();
  }

 private:
  static std::string int_str(const Int& v) {
    if constexpr (std::is_integral_v<Int>) {
      return std::to_string(v);
    } else {
      return v.str();
    }
  }

  void normalize() {
    if (den_ == 0) throw domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    using std::gcd;  // ADL picks the multiprecision overload when Int needs it
    Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

using Ratio = basic_rational<bigint>;

}  // namespace fracton
