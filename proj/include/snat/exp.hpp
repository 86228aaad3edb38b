// Copyright 2026 The snat Authors
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

#ifndef SNAT_EXP_HPP
#define SNAT_EXP_HPP

#include <string>

#include "snat/arith.hpp"
#include "snat/error.hpp"

namespace snat {

/// An exponent in Z u {inf}. Supernatural numbers only ever hold values >= 0;
/// fractional ones may carry finitely many negative exponents.
class Exp {
 public:
  Exp() = default;
  Exp(long k) : value_(k) {}  // NOLINT(google-explicit-constructor)
  explicit Exp(Int k) : value_(std::move(k)) {}

  static Exp inf() {
    Exp e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const noexcept { return inf_; }
  bool is_finite() const noexcept { return !inf_; }

  /// Finite value; 0 for inf (never consulted in that case).
  const Int& value() const noexcept { return value_; }

  bool is_negative() const { return !inf_ && value_ < 0; }

  friend bool operator==(const Exp& a, const Exp& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend bool operator<(const Exp& a, const Exp& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Exp& a, const Exp& b) { return !(b < a); }
  friend bool operator>(const Exp& a, const Exp& b) { return b < a; }
  friend bool operator>=(const Exp& a, const Exp& b) { return !(a < b); }

  /// inf absorbs.
  friend Exp operator+(const Exp& a, const Exp& b) {
    if (a.inf_ || b.inf_) return inf();
    return Exp(Int(a.value_ + b.value_));
  }

  /// a - b for finite b; inf - b stays inf.
  friend Exp operator-(const Exp& a, const Exp& b) {
    if (b.inf_) throw Error(ErrorKind::InvalidArgument, "cannot subtract an infinite exponent");
    if (a.inf_) return inf();
    return Exp(Int(a.value_ - b.value_));
  }

  std::string str() const { return inf_ ? "inf" : value_.get_str(); }

 private:
  bool inf_ = false;
  Int value_ = 0;
};

inline Exp max(const Exp& a, const Exp& b) { return a < b ? b : a; }
inline Exp min(const Exp& a, const Exp& b) { return b < a ? b : a; }

}  // namespace snat

#endif  // SNAT_EXP_HPP
