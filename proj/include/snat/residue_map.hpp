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

#ifndef SNAT_RESIDUE_MAP_HPP
#define SNAT_RESIDUE_MAP_HPP

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "snat/arith.hpp"
#include "snat/error.hpp"

namespace snat {

/// Unit residues modulo m, ascending. For m = 1 this is {0}.
std::vector<Modulus> unit_residues(Modulus m);

/// A function on the primes that is constant on each unit residue class
/// modulo `modulus()` apart from finitely many explicit exceptions.
///
/// Primes dividing the modulus lie in no unit class, so they are always
/// carried as exceptions. In normal form no other exception repeats the value
/// of its class. Moduli are never minimized; two maps are compared by refining
/// both to the lcm of their moduli.
template <class V>
class ResidueMap {
 public:
  using Exceptions = std::map<Int, V>;

  explicit ResidueMap(V constant = V{}) : modulus_(1), classes_{std::move(constant)} {}

  /// `classes` is indexed by residue and must have `modulus` entries; slots at
  /// non-unit residues are ignored. Every prime dividing `modulus` needs an
  /// exception, and every exception key must be prime.
  ResidueMap(Modulus modulus, std::vector<V> classes, Exceptions exceptions)
      : modulus_(modulus), classes_(std::move(classes)), exceptions_(std::move(exceptions)) {
    if (modulus_ == 0 || modulus_ > kMaxModulus) {
      throw Error(ErrorKind::InvalidArgument, "modulus out of range: " + std::to_string(modulus_));
    }
    if (classes_.size() != modulus_) {
      throw Error(ErrorKind::InvalidArgument, "class table does not match the modulus");
    }
    for (const auto& [p, v] : exceptions_) {
      if (!is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, "exception at non-prime " + to_string(p));
      }
    }
    for (Modulus q : prime_divisors(modulus_)) {
      if (!exceptions_.contains(Int(q))) {
        throw Error(ErrorKind::InvalidArgument,
                    "prime " + std::to_string(q) + " divides the modulus but has no explicit value");
      }
    }
    normalize();
  }

  Modulus modulus() const noexcept { return modulus_; }

  /// Value on the unit class r (mod modulus()).
  V class_value(Modulus r) const { return classes_[r % modulus_]; }

  const Exceptions& exceptions() const noexcept { return exceptions_; }

  /// Value at the prime p.
  V at(const Int& p) const {
    auto it = exceptions_.find(p);
    if (it != exceptions_.end()) return it->second;
    return classes_[residue(p, modulus_)];
  }

  std::vector<Modulus> units() const { return unit_residues(modulus_); }

  /// The same function presented modulo a multiple of the current modulus.
  ResidueMap refined(Modulus target) const {
    if (target % modulus_ != 0) {
      throw Error(ErrorKind::InvalidArgument, "refinement target is not a multiple of the modulus");
    }
    if (target == modulus_) return *this;
    ResidueMap out;
    out.modulus_ = target;
    out.classes_.assign(target, V{});
    for (Modulus r : unit_residues(target)) out.classes_[r] = classes_[r % modulus_];
    out.exceptions_ = exceptions_;
    for (Modulus q : prime_divisors(target)) {
      Int key(q);
      if (!out.exceptions_.contains(key)) out.exceptions_.emplace(key, classes_[q % modulus_]);
    }
    return out;
  }

  template <class F>
  auto transform(F f) const -> ResidueMap<std::decay_t<std::invoke_result_t<F, const V&>>> {
    using R = std::decay_t<std::invoke_result_t<F, const V&>>;
    ResidueMap<R> out;
    out.modulus_ = modulus_;
    out.classes_.assign(modulus_, R{});
    for (Modulus r : unit_residues(modulus_)) out.classes_[r] = f(classes_[r]);
    for (const auto& [p, v] : exceptions_) out.exceptions_.emplace(p, f(v));
    out.normalize();
    return out;
  }

  /// True if `pred` holds on at least one unit class.
  template <class Pred>
  bool any_class(Pred pred) const {
    for (Modulus r : unit_residues(modulus_)) {
      if (pred(classes_[r])) return true;
    }
    return false;
  }

  template <class Pred>
  bool any_exception(Pred pred) const {
    for (const auto& [p, v] : exceptions_) {
      if (pred(p, v)) return true;
    }
    return false;
  }

  friend bool operator==(const ResidueMap& a, const ResidueMap& b) {
    Modulus m = lcm_modulus(a.modulus_, b.modulus_);
    ResidueMap ra = a.refined(m);
    ResidueMap rb = b.refined(m);
    for (Modulus r : unit_residues(m)) {
      if (!(ra.classes_[r] == rb.classes_[r])) return false;
    }
    for (const auto& [p, v] : ra.exceptions_) {
      if (!(rb.at(p) == v)) return false;
    }
    for (const auto& [p, v] : rb.exceptions_) {
      if (!(ra.at(p) == v)) return false;
    }
    return true;
  }

  template <class A, class B, class F>
  friend auto zip(const ResidueMap<A>& a, const ResidueMap<B>& b, F f)
      -> ResidueMap<std::decay_t<std::invoke_result_t<F, const A&, const B&>>>;

  template <class W>
  friend class ResidueMap;

 private:
  void normalize() {
    for (auto it = exceptions_.begin(); it != exceptions_.end();) {
      Modulus r = residue(it->first, modulus_);
      if (gcd(r, modulus_) == 1 && classes_[r] == it->second) {
        it = exceptions_.erase(it);
      } else {
        ++it;
      }
    }
  }

  Modulus modulus_;
  std::vector<V> classes_;
  Exceptions exceptions_;
};

/// Pointwise combination of two maps on the lcm of their moduli.
template <class A, class B, class F>
auto zip(const ResidueMap<A>& a, const ResidueMap<B>& b, F f)
    -> ResidueMap<std::decay_t<std::invoke_result_t<F, const A&, const B&>>> {
  using R = std::decay_t<std::invoke_result_t<F, const A&, const B&>>;
  Modulus m = lcm_modulus(a.modulus_, b.modulus_);
  ResidueMap<A> ra = a.refined(m);
  ResidueMap<B> rb = b.refined(m);
  ResidueMap<R> out;
  out.modulus_ = m;
  out.classes_.assign(m, R{});
  for (Modulus r : unit_residues(m)) out.classes_[r] = f(ra.classes_[r], rb.classes_[r]);
  for (const auto& [p, v] : ra.exceptions_) out.exceptions_.emplace(p, f(v, rb.at(p)));
  for (const auto& [p, v] : rb.exceptions_) {
    if (!out.exceptions_.contains(p)) out.exceptions_.emplace(p, f(ra.at(p), v));
  }
  out.normalize();
  return out;
}

}  // namespace snat

#endif  // SNAT_RESIDUE_MAP_HPP
