// Copyright 2026 The Greyassess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREYASSESS_GREY_NUMBER_HPP
#define GREYASSESS_GREY_NUMBER_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdio>
#include <ostream>
#include <string>
#include <type_traits>

#include "greyassess/error.hpp"

namespace greyassess {

/// A grey number: an indeterminate quantity known only to lie in the closed
/// interval [lower, upper]. Both endpoints are finite and lower <= upper;
/// every constructor enforces this, so a BasicGreyNumber is always valid.
///
/// Endpoints are plain floating point with round-to-nearest. There is no
/// outward rounding, so results are exact interval enclosures only up to
/// representation error.
template <std::floating_point T>
class BasicGreyNumber {
 public:
  using value_type = T;

  /// The white number [0, 0].
  constexpr BasicGreyNumber() noexcept = default;

  /// The white number [value, value].
  explicit BasicGreyNumber(T value) : BasicGreyNumber(value, value) {}

  BasicGreyNumber(T lower, T upper) : lower_(lower), upper_(upper) {
    if (!std::isfinite(lower) || !std::isfinite(upper)) {
      throw InvalidInterval("grey number endpoints must be finite");
    }
    if (lower > upper) {
      throw InvalidInterval("invalid interval: lower bound " + std::to_string(lower) +
                            " exceeds upper bound " + std::to_string(upper));
    }
  }

  constexpr T lower() const noexcept { return lower_; }
  constexpr T upper() const noexcept { return upper_; }
  constexpr T width() const noexcept { return upper_ - lower_; }

  /// True iff the stored endpoints are exactly equal.
  constexpr bool is_white() const noexcept { return lower_ == upper_; }

  constexpr bool contains(T x) const noexcept { return lower_ <= x && x <= upper_; }

  // Exact endpoint equality; callers wanting a tolerance compare endpoints.
  friend constexpr bool operator==(const BasicGreyNumber&, const BasicGreyNumber&) = default;

 private:
  T lower_ = 0;
  T upper_ = 0;
};

using GreyNumber = BasicGreyNumber<double>;

/// Builds [lower, upper]; throws InvalidInterval on lower > upper or a
/// non-finite endpoint.
inline GreyNumber make(double lower, double upper) { return GreyNumber(lower, upper); }

template <std::floating_point T>
BasicGreyNumber<T> add(const BasicGreyNumber<T>& x, const BasicGreyNumber<T>& y) {
  return {x.lower() + y.lower(), x.upper() + y.upper()};
}

template <std::floating_point T>
BasicGreyNumber<T> sub(const BasicGreyNumber<T>& x, const BasicGreyNumber<T>& y) {
  return {x.lower() - y.upper(), x.upper() - y.lower()};
}

template <std::floating_point T>
BasicGreyNumber<T> mul(const BasicGreyNumber<T>& x, const BasicGreyNumber<T>& y) {
  const T p[] = {x.lower() * y.lower(), x.lower() * y.upper(), x.upper() * y.lower(),
                 x.upper() * y.upper()};
  const auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
  return {*lo, *hi};
}

/// Throws DivisionByZeroInterval when 0 lies in the divisor.
template <std::floating_point T>
BasicGreyNumber<T> div(const BasicGreyNumber<T>& x, const BasicGreyNumber<T>& y) {
  if (y.contains(T(0))) {
    throw DivisionByZeroInterval("division by an interval containing zero");
  }
  const T q[] = {x.lower() / y.lower(), x.lower() / y.upper(), x.upper() / y.lower(),
                 x.upper() / y.upper()};
  const auto [lo, hi] = std::minmax_element(std::begin(q), std::end(q));
  return {*lo, *hi};
}

/// k * [a, b] = [k a, k b], defined for k > 0 only. For any other factor
/// multiply by the white number [k, k] instead.
template <std::floating_point T>
BasicGreyNumber<T> scalar_mul(std::type_identity_t<T> k, const BasicGreyNumber<T>& x) {
  if (!(k > 0) || !std::isfinite(k)) {
    throw DomainError("scalar multiplication requires a positive finite factor, got " +
                      std::to_string(k));
  }
  return {k * x.lower(), k * x.upper()};
}

template <std::floating_point T>
BasicGreyNumber<T> operator+(const BasicGreyNumber<T>& x, const BasicGreyNumber<T>& y) {
  return add(x, y);
}
template <std::floating_point T>
BasicGreyNumber<T> operator-(const BasicGreyNumber<T>& x, const BasicGreyNumber<T>& y) {
  return sub(x, y);
}
template <std::floating_point T>
BasicGreyNumber<T> operator*(const BasicGreyNumber<T>& x, const BasicGreyNumber<T>& y) {
  return mul(x, y);
}
template <std::floating_point T>
BasicGreyNumber<T> operator/(const BasicGreyNumber<T>& x, const BasicGreyNumber<T>& y) {
  return div(x, y);
}

/// Position t in [0, 1] used for equal-weight whitening.
class WhiteningParameter {
 public:
  explicit WhiteningParameter(double t) : t_(t) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw DomainError("whitening parameter must lie in [0, 1], got " + std::to_string(t));
    }
  }

  /// t = 1/2, the choice when nothing is known about the distribution.
  static WhiteningParameter midpoint() noexcept { return WhiteningParameter(); }

  double value() const noexcept { return t_; }

  friend bool operator==(const WhiteningParameter&, const WhiteningParameter&) = default;

 private:
  WhiteningParameter() noexcept = default;
  double t_ = 0.5;
};

/// Equal-weight whitening w(A) = (1 - t) a + t b.
///
/// Evaluated as a + t (b - a), which is monotone in t under round-to-nearest
/// and returns a itself for white numbers. The result is clamped to [a, b]
/// and t = 1 yields b exactly.
template <std::floating_point T>
T whiten(const BasicGreyNumber<T>& x, WhiteningParameter t = WhiteningParameter::midpoint()) {
  const T a = x.lower();
  const T b = x.upper();
  const T tv = static_cast<T>(t.value());
  if (tv == T(1)) return b;
  const T w = b - a;
  if (!std::isfinite(w)) {
    return std::clamp((T(1) - tv) * a + tv * b, a, b);
  }
  return std::min(a + tv * w, b);
}

template <std::floating_point T>
bool is_white(const BasicGreyNumber<T>& x) noexcept {
  return x.is_white();
}

namespace detail {

// Fixed-point rendering with at most `decimals` places; trailing zeros and a
// dangling point are dropped and negative zero prints as 0.
inline std::string format_trimmed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

// Shortest text that parses back to exactly `v`.
inline std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, res.ptr);
  if (s == "-0") s = "0";
  return s;
}

}  // namespace detail

/// "[<lower>, <upper>]" with up to 4 decimal places.
template <std::floating_point T>
std::string to_string(const BasicGreyNumber<T>& x) {
  return "[" + detail::format_trimmed(static_cast<double>(x.lower()), 4) + ", " +
         detail::format_trimmed(static_cast<double>(x.upper()), 4) + "]";
}

template <std::floating_point T>
std::ostream& operator<<(std::ostream& os, const BasicGreyNumber<T>& x) {
  return os << to_string(x);
}

}  // namespace greyassess

#endif  // GREYASSESS_GREY_NUMBER_HPP
