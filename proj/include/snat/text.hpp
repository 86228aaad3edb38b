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

#ifndef SNAT_TEXT_HPP
#define SNAT_TEXT_HPP

// Literal grammars and canonical printing. See docs/grammar.md.
//
//   supernatural := product [ ";" "default" (exp | "{" r ":" exp, ... "}" "mod" M) ]
//   product      := "one" | "sinf" | term { "*" term }
//   term         := N | p "^" exp            (N any positive integer, p prime)
//   exp          := digits | "inf"           ("-" digits in fractional literals)
//
//   primeset     := atom { ("+" | "-") atom }
//   atom         := "all" | "{" [p, ...] "}" | "classes(" r, ... "mod" M ")" | "(" primeset ")"
//
//   sieve        := part { "+" part }
//   part         := "sieve(" [g, ...] ")"
//                 | "family(cofactor=" m "; primes=" primeset "; exp=" (e | "{" r ":" e, ... "}" "mod" M) ")"
//
//   rational     := u [ "/" v ]
//
// Terms multiply; the primes they mention override the default. Primes
// dividing a default modulus that no term mentions get exponent 0.

#include <string>
#include <string_view>
#include <vector>

#include "snat/cones.hpp"
#include "snat/sieve.hpp"

namespace snat {

Supernatural parse_supernatural(std::string_view text);
FractionalSupernatural parse_fractional(std::string_view text);
PrimeSet parse_prime_set(std::string_view text);
Sieve parse_sieve(std::string_view text);
PositiveRational parse_rational(std::string_view text);

/// Comma-separated positive integers, e.g. "3,5".
std::vector<Int> parse_int_list(std::string_view text);
/// Comma-separated positive rationals, e.g. "1,1/2,1/6".
std::vector<PositiveRational> parse_rational_list(std::string_view text);

std::string to_string(const Exp& e);
std::string to_string(const Supernatural& s);
std::string to_string(const FractionalSupernatural& f);
std::string to_string(const PrimeSet& set);
std::string to_string(const Family& f);
std::string to_string(const Sieve& s);
std::string to_string(const PositiveRational& q);

}  // namespace snat

#endif  // SNAT_TEXT_HPP
