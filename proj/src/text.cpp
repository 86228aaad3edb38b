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

#include "snat/text.hpp"

#include <cctype>
#include <map>
#include <set>

namespace snat {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  /// Offset of the next token.
  std::size_t pos() {
    skip_space();
    return pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    return end >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
  }

  bool accept_word(std::string_view word) {
    if (!peek_word(word)) return false;
    pos_ += word.size();
    return true;
  }

  void expect_word(std::string_view word) {
    if (!accept_word(word)) fail("expected '" + std::string(word) + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    Int out;
    if (!parse_int(std::string(text_.substr(start, pos_ - start)), out)) {
      pos_ = start;
      fail("integer literal too long");
    }
    return out;
  }

  Modulus small_integer(const char* what) {
    std::size_t start = pos_;
    Int v = integer();
    if (v > kMaxModulus) {
      pos_ = start;
      fail(std::string(what) + " too large");
    }
    return v.get_ui();
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const { throw ParseError(pos, what); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Exp parse_exp(Cursor& in, bool allow_negative) {
  if (in.accept_word("inf")) return Exp::inf();
  std::size_t at = in.pos();
  if (in.accept('-')) {
    if (!allow_negative) in.fail_at(at, "negative exponents are only allowed in fractional literals");
    return Exp(Int(-in.integer()));
  }
  return Exp(in.integer());
}

// "{r:v, ...} mod M": a complete table over the unit residues mod M.
template <class V, class ReadValue>
std::vector<V> parse_class_table(Cursor& in, ReadValue read, Modulus& modulus) {
  std::map<Modulus, std::pair<V, std::size_t>> entries;
  in.expect('{');
  do {
    std::size_t at = in.pos();
    Modulus r = in.small_integer("residue");
    in.expect(':');
    V v = read(in);
    if (!entries.emplace(r, std::make_pair(v, at)).second) in.fail_at(at, "residue listed twice");
  } while (in.accept(','));
  in.expect('}');
  in.expect_word("mod");
  std::size_t mod_at = in.pos();
  modulus = in.small_integer("modulus");
  if (modulus == 0) in.fail_at(mod_at, "modulus must be positive");
  std::vector<V> table(modulus, V{});
  for (const auto& [r, entry] : entries) {
    if (r >= modulus || gcd(r, modulus) != 1) {
      in.fail_at(entry.second, std::to_string(r) + " is not a unit residue mod " + std::to_string(modulus));
    }
    table[r] = entry.first;
  }
  auto units = unit_residues(modulus);
  if (units.size() != entries.size()) in.fail_at(mod_at, "every unit residue needs a value");
  return table;
}

ExpMap parse_exp_map(Cursor& in, bool allow_negative) {
  ExpMap::Exceptions terms;
  auto add = [&](const Int& p, const Exp& e) {
    auto [it, fresh] = terms.emplace(p, e);
    if (!fresh) it->second = it->second + e;
  };
  bool all_infinite = false;
  if (in.accept_word("one")) {
  } else if (in.accept_word("sinf")) {
    all_infinite = true;
  } else {
    do {
      std::size_t at = in.pos();
      Int base = in.integer();
      if (base < 1) in.fail_at(at, "terms must be positive");
      if (in.accept('^')) {
        if (!is_prime(base)) in.fail_at(at, to_string(base) + " is not prime");
        add(base, parse_exp(in, allow_negative));
      } else {
        for (const auto& pp : factorize(base)) add(pp.prime, Exp(static_cast<long>(pp.exponent)));
      }
    } while (in.accept('*'));
  }

  if (all_infinite || !in.accept(';')) {
    if (all_infinite) return ExpMap(Exp::inf());
    return ExpMap(1, {Exp(0)}, std::move(terms));
  }
  in.expect_word("default");
  if (!in.peek('{')) {
    std::size_t at = in.pos();
    Exp d = parse_exp(in, false);
    if (d.is_negative()) in.fail_at(at, "default exponents must be nonnegative");
    return ExpMap(1, {d}, std::move(terms));
  }
  Modulus m = 1;
  auto table = parse_class_table<Exp>(in, [](Cursor& c) { return parse_exp(c, false); }, m);
  for (Modulus q : prime_divisors(m)) terms.emplace(Int(q), Exp(0));
  return ExpMap(m, std::move(table), std::move(terms));
}

PrimeSet parse_prime_atom(Cursor& in);

PrimeSet parse_prime_expr(Cursor& in) {
  PrimeSet acc = parse_prime_atom(in);
  for (;;) {
    if (in.accept('+')) {
      acc = acc | parse_prime_atom(in);
    } else if (in.accept('-')) {
      acc = acc - parse_prime_atom(in);
    } else {
      return acc;
    }
  }
}

PrimeSet parse_prime_atom(Cursor& in) {
  if (in.accept_word("all")) return PrimeSet::all();
  if (in.accept('(')) {
    PrimeSet inner = parse_prime_expr(in);
    in.expect(')');
    return inner;
  }
  if (in.accept('{')) {
    std::vector<Int> primes;
    if (!in.accept('}')) {
      do {
        std::size_t at = in.pos();
        Int p = in.integer();
        if (!is_prime(p)) in.fail_at(at, to_string(p) + " is not prime");
        primes.push_back(p);
      } while (in.accept(','));
      in.expect('}');
    }
    return PrimeSet::of(primes);
  }
  if (in.accept_word("classes")) {
    in.expect('(');
    std::vector<std::pair<Modulus, std::size_t>> residues;
    do {
      std::size_t at = in.pos();
      residues.emplace_back(in.small_integer("residue"), at);
    } while (in.accept(','));
    in.expect_word("mod");
    std::size_t mod_at = in.pos();
    Modulus m = in.small_integer("modulus");
    if (m == 0) in.fail_at(mod_at, "modulus must be positive");
    in.expect(')');
    std::vector<Modulus> rs;
    for (auto [r, at] : residues) {
      if (r >= m || gcd(r, m) != 1) {
        in.fail_at(at, std::to_string(r) + " is not a unit residue mod " + std::to_string(m));
      }
      rs.push_back(r);
    }
    return PrimeSet::classes(m, rs);
  }
  in.fail("expected 'all', '{', 'classes' or '('");
}

Family parse_family(Cursor& in) {
  in.expect('(');
  in.expect_word("cofactor");
  in.expect('=');
  std::size_t at = in.pos();
  Int m = in.integer();
  if (m < 1) in.fail_at(at, "cofactor must be positive");
  in.expect(';');
  in.expect_word("primes");
  in.expect('=');
  PrimeSet primes = parse_prime_expr(in);
  in.expect(';');
  in.expect_word("exp");
  in.expect('=');
  std::size_t exp_at = in.pos();
  ExpMap exps;
  auto read_positive = [](Cursor& c) {
    std::size_t where = c.pos();
    Int v = c.integer();
    if (v < 1) c.fail_at(where, "family exponents must be at least 1");
    return Exp(v);
  };
  if (in.peek('{')) {
    Modulus mod = 1;
    auto table = parse_class_table<Exp>(in, read_positive, mod);
    ExpMap::Exceptions ex;
    for (Modulus q : prime_divisors(mod)) {
      if (primes.contains(Int(q))) {
        in.fail_at(exp_at, "prime " + std::to_string(q) +
                               " divides the exponent modulus; list it as a sieve generator instead");
      }
      ex.emplace(Int(q), Exp(1));
    }
    exps = ExpMap(mod, std::move(table), std::move(ex));
  } else {
    exps = ExpMap(read_positive(in));
  }
  in.expect(')');
  return Family{m, std::move(primes), std::move(exps)};
}

PositiveRational parse_rational_at(Cursor& in) {
  std::size_t at = in.pos();
  Int u = in.integer();
  Int v = 1;
  if (in.accept('/')) v = in.integer();
  if (u < 1 || v < 1) in.fail_at(at, "rationals must be positive");
  return PositiveRational(u, v);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_exp_map(const ExpMap& m) {
  Modulus mod = m.modulus();
  std::vector<std::string> terms;
  for (const auto& [p, e] : m.exceptions()) {
    if (mod > 1 && residue(p, mod) != 0 && gcd(residue(p, mod), mod) != 1 && e == Exp(0)) continue;
    if (mod > 1 && residue(p, mod) == 0 && e == Exp(0)) continue;
    terms.push_back(e == Exp(1) ? to_string(p) : to_string(p) + "^" + to_string(e));
  }
  if (mod == 1) {
    Exp d = m.class_value(0);
    if (d == Exp(0)) return terms.empty() ? "one" : join(terms, " * ");
    if (d.is_inf() && terms.empty()) return "sinf";
    return (terms.empty() ? std::string("one") : join(terms, " * ")) + " ; default " + to_string(d);
  }
  std::vector<std::string> classes;
  for (Modulus r : m.units()) classes.push_back(std::to_string(r) + ":" + to_string(m.class_value(r)));
  return (terms.empty() ? std::string("one") : join(terms, " * ")) + " ; default {" + join(classes, ", ") +
         "} mod " + std::to_string(mod);
}

std::string format_primes(const std::vector<Int>& ps) {
  std::vector<std::string> parts;
  for (const Int& p : ps) parts.push_back(to_string(p));
  return "{" + join(parts, ",") + "}";
}

template <class T, class F>
T parse_whole(std::string_view text, F f) {
  Cursor in(text);
  T out = f(in);
  in.finish();
  return out;
}

}  // namespace

Supernatural parse_supernatural(std::string_view text) {
  return parse_whole<Supernatural>(text, [](Cursor& in) { return Supernatural(parse_exp_map(in, false)); });
}

FractionalSupernatural parse_fractional(std::string_view text) {
  return parse_whole<FractionalSupernatural>(
      text, [](Cursor& in) { return FractionalSupernatural(parse_exp_map(in, true)); });
}

PrimeSet parse_prime_set(std::string_view text) {
  return parse_whole<PrimeSet>(text, [](Cursor& in) { return parse_prime_expr(in); });
}

Sieve parse_sieve(std::string_view text) {
  return parse_whole<Sieve>(text, [](Cursor& in) {
    std::vector<Int> gens;
    std::vector<Family> fams;
    do {
      if (in.accept_word("sieve")) {
        in.expect('(');
        if (!in.accept(')')) {
          do {
            std::size_t at = in.pos();
            Int g = in.integer();
            if (g < 1) in.fail_at(at, "sieve generators must be positive");
            gens.push_back(g);
          } while (in.accept(','));
          in.expect(')');
        }
      } else if (in.accept_word("family")) {
        fams.push_back(parse_family(in));
      } else {
        in.fail("expected 'sieve' or 'family'");
      }
    } while (in.accept('+'));
    return Sieve(std::move(gens), std::move(fams));
  });
}

PositiveRational parse_rational(std::string_view text) {
  return parse_whole<PositiveRational>(text, parse_rational_at);
}

std::vector<Int> parse_int_list(std::string_view text) {
  return parse_whole<std::vector<Int>>(text, [](Cursor& in) {
    std::vector<Int> out;
    do {
      std::size_t at = in.pos();
      Int v = in.integer();
      if (v < 1) in.fail_at(at, "expected a positive integer");
      out.push_back(v);
    } while (in.accept(','));
    return out;
  });
}

std::vector<PositiveRational> parse_rational_list(std::string_view text) {
  return parse_whole<std::vector<PositiveRational>>(text, [](Cursor& in) {
    std::vector<PositiveRational> out;
    do {
      out.push_back(parse_rational_at(in));
    } while (in.accept(','));
    return out;
  });
}

std::string to_string(const Exp& e) { return e.str(); }

std::string to_string(const Supernatural& s) { return format_exp_map(s.exponents()); }

std::string to_string(const FractionalSupernatural& f) { return format_exp_map(f.exponents()); }

std::string to_string(const PrimeSet& set) {
  Modulus m = set.modulus();
  auto classes = set.class_residues();
  std::string base;
  if (!classes.empty()) {
    if (m == 1) {
      base = "all";
    } else {
      std::vector<std::string> rs;
      for (Modulus r : classes) rs.push_back(std::to_string(r));
      base = "classes(" + join(rs, ",") + " mod " + std::to_string(m) + ")";
    }
  }
  auto inc = set.included();
  auto exc = set.excluded();
  if (base.empty()) return format_primes(inc);
  if (!inc.empty()) base += " + " + format_primes(inc);
  if (!exc.empty()) base += " - " + format_primes(exc);
  return base;
}

std::string to_string(const Family& f) {
  std::string exp;
  const ExpMap& e = f.exponents;
  if (e.modulus() == 1) {
    exp = to_string(e.class_value(0));
  } else {
    std::vector<std::string> classes;
    for (Modulus r : e.units()) classes.push_back(std::to_string(r) + ":" + to_string(e.class_value(r)));
    exp = "{" + join(classes, ", ") + "} mod " + std::to_string(e.modulus());
  }
  return "family(cofactor=" + to_string(f.cofactor) + "; primes=" + to_string(f.primes) + "; exp=" + exp + ")";
}

std::string to_string(const Sieve& s) {
  std::vector<std::string> parts;
  if (!s.generators().empty() || s.families().empty()) {
    std::vector<std::string> gs;
    for (const Int& g : s.generators()) gs.push_back(to_string(g));
    parts.push_back("sieve(" + join(gs, ",") + ")");
  }
  for (const Family& f : s.families()) parts.push_back(to_string(f));
  return join(parts, " + ");
}

std::string to_string(const PositiveRational& q) {
  if (q.den() == 1) return to_string(q.num());
  return to_string(q.num()) + "/" + to_string(q.den());
}

}  // namespace snat
