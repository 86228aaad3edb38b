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

#include "snat.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "snat/cones.hpp"
#include "snat/oracle.hpp"
#include "snat/smonoid.hpp"
#include "snat/text.hpp"
#include "snat/topology.hpp"

struct snat_supernat {
  snat::FractionalSupernatural value;
};

struct snat_primeset {
  snat::PrimeSet value;
};

struct snat_sieve {
  snat::Sieve value;
};

struct snat_window {
  snat::TruncatedCone value;
};

namespace {

using snat::ErrorKind;
using snat::Int;

thread_local std::string last_error;
thread_local std::size_t last_position = 0;

snat_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return SNAT_ERR_PARSE;
    case ErrorKind::InvalidArgument: return SNAT_ERR_INVALID;
    case ErrorKind::UnsupportedProduct: return SNAT_ERR_UNSUPPORTED_PRODUCT;
    case ErrorKind::NonCoprimeGenerators: return SNAT_ERR_NON_COPRIME;
    case ErrorKind::SearchBudgetExceeded: return SNAT_ERR_SEARCH_BUDGET;
    case ErrorKind::NotSeparable: return SNAT_ERR_NOT_SEPARABLE;
    case ErrorKind::NotIncomparable: return SNAT_ERR_NOT_INCOMPARABLE;
    case ErrorKind::ConstructionStuck: return SNAT_ERR_CONSTRUCTION_STUCK;
  }
  return SNAT_ERR_INTERNAL;
}

snat_status fail(snat_status status, std::string message, std::size_t position = 0) {
  last_error = std::move(message);
  last_position = position;
  return status;
}

template <class F>
snat_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    last_position = 0;
    return SNAT_OK;
  } catch (const snat::ParseError& e) {
    return fail(SNAT_ERR_PARSE, e.what(), e.position());
  } catch (const snat::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SNAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SNAT_ERR_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw snat::Error(ErrorKind::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Int integer(const char* text, const char* what) {
  require(text, what);
  Int v;
  if (!snat::parse_int(text, v) || v < 1) {
    throw snat::ParseError(0, std::string(what) + " must be a positive integer");
  }
  return v;
}

snat::Supernatural natural_valued(const snat_supernat* s) {
  require(s, "supernatural");
  if (s->value.exponents().any_exception([](const Int&, const snat::Exp& e) { return e.is_negative(); })) {
    throw snat::Error(ErrorKind::InvalidArgument, "negative exponents are not allowed here");
  }
  return snat::Supernatural(s->value.exponents());
}

const snat::Sieve& sieve_of(const snat_sieve* s) {
  require(s, "sieve");
  return s->value;
}

std::string join(const std::vector<snat::PositiveRational>& qs) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ',';
    out += snat::to_string(qs[i]);
  }
  return out;
}

std::string join(const std::vector<Int>& ns) {
  std::string out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += ',';
    out += snat::to_string(ns[i]);
  }
  return out;
}

snat::SMonoid monoid_of(const char* generators) {
  require(generators, "generators");
  return snat::SMonoid(snat::parse_int_list(generators));
}

template <class Compute>
snat_status emit_supernat(snat_supernat** out, Compute compute) {
  return guard([&] {
    require(out, "output");
    snat::FractionalSupernatural v = compute();
    *out = new snat_supernat{std::move(v)};
  });
}

template <class Compute>
snat_status emit_sieve(snat_sieve** out, Compute compute) {
  return guard([&] {
    require(out, "output");
    snat::Sieve v = compute();
    *out = new snat_sieve{std::move(v)};
  });
}

template <class Compute>
snat_status emit_bool(int* out, Compute compute) {
  return guard([&] {
    require(out, "output");
    *out = compute() ? 1 : 0;
  });
}

template <class Compute>
snat_status emit_string(char** out, Compute compute) {
  return guard([&] {
    require(out, "output");
    *out = dup(compute());
  });
}

}  // namespace

extern "C" {

const char* snat_status_name(snat_status status) {
  switch (status) {
    case SNAT_OK: return "ok";
    case SNAT_ERR_PARSE: return "parse error";
    case SNAT_ERR_INVALID: return "invalid argument";
    case SNAT_ERR_UNSUPPORTED_PRODUCT: return "unsupported product";
    case SNAT_ERR_NON_COPRIME: return "non-coprime generators";
    case SNAT_ERR_SEARCH_BUDGET: return "search budget exceeded";
    case SNAT_ERR_NOT_SEPARABLE: return "not separable";
    case SNAT_ERR_NOT_INCOMPARABLE: return "not incomparable";
    case SNAT_ERR_CONSTRUCTION_STUCK: return "construction stuck";
    case SNAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* snat_last_error(void) { return last_error.c_str(); }

size_t snat_last_error_position(void) { return last_position; }

void snat_string_free(char* text) { std::free(text); }

snat_status snat_supernat_parse(const char* text, snat_supernat** out) {
  return emit_supernat(out, [&] {
    require(text, "text");
    return snat::FractionalSupernatural(snat::parse_supernatural(text));
  });
}

snat_status snat_fractional_parse(const char* text, snat_supernat** out) {
  return emit_supernat(out, [&] {
    require(text, "text");
    return snat::parse_fractional(text);
  });
}

void snat_supernat_free(snat_supernat* s) { delete s; }

snat_status snat_supernat_print(const snat_supernat* s, char** out) {
  return emit_string(out, [&] {
    require(s, "supernatural");
    return snat::to_string(s->value);
  });
}

snat_status snat_supernat_exponent(const snat_supernat* s, const char* prime, char** out) {
  return emit_string(out, [&] {
    require(s, "supernatural");
    Int p = integer(prime, "prime");
    if (!snat::is_prime(p)) throw snat::Error(ErrorKind::InvalidArgument, snat::to_string(p) + " is not prime");
    return s->value.exponents().at(p).str();
  });
}

snat_status snat_supernat_mul(const snat_supernat* s, const snat_supernat* t, snat_supernat** out) {
  return emit_supernat(out, [&] { return snat::mul(natural_valued(s), natural_valued(t)); });
}

snat_status snat_supernat_lcm(const snat_supernat* s, const snat_supernat* t, snat_supernat** out) {
  return emit_supernat(out, [&] { return snat::lcm(natural_valued(s), natural_valued(t)); });
}

snat_status snat_supernat_divides(const snat_supernat* s, const snat_supernat* t, int* out) {
  return emit_bool(out, [&] { return snat::divides(natural_valued(s), natural_valued(t)); });
}

snat_status snat_supernat_equivalent(const snat_supernat* s, const snat_supernat* t, int* out) {
  return emit_bool(out, [&] { return snat::equivalent(natural_valued(s), natural_valued(t)); });
}

snat_status snat_supernat_weakly_divides(const snat_supernat* s, const snat_supernat* t, int* out) {
  return emit_bool(out, [&] { return snat::weakly_divides(natural_valued(s), natural_valued(t)); });
}

snat_status snat_supernat_infinite_support(const snat_supernat* s, snat_primeset** out) {
  return guard([&] {
    require(out, "output");
    snat::PrimeSet set = snat::infinite_support(natural_valued(s));
    *out = new snat_primeset{std::move(set)};
  });
}

snat_status snat_primeset_parse(const char* text, snat_primeset** out) {
  return guard([&] {
    require(text, "text");
    require(out, "output");
    snat::PrimeSet set = snat::parse_prime_set(text);
    *out = new snat_primeset{std::move(set)};
  });
}

void snat_primeset_free(snat_primeset* set) { delete set; }

snat_status snat_primeset_print(const snat_primeset* set, char** out) {
  return emit_string(out, [&] {
    require(set, "prime set");
    return snat::to_string(set->value);
  });
}

snat_status snat_primeset_members(const snat_primeset* set, const char* bound, char** out) {
  return emit_string(out, [&] {
    require(set, "prime set");
    return join(set->value.members(integer(bound, "bound")));
  });
}

snat_status snat_primeset_is_infinite(const snat_primeset* set, int* out) {
  return emit_bool(out, [&] {
    require(set, "prime set");
    return set->value.is_infinite();
  });
}

snat_status snat_sieve_parse(const char* text, snat_sieve** out) {
  return emit_sieve(out, [&] {
    require(text, "text");
    return snat::parse_sieve(text);
  });
}

void snat_sieve_free(snat_sieve* s) { delete s; }

snat_status snat_sieve_print(const snat_sieve* s, char** out) {
  return emit_string(out, [&] { return snat::to_string(sieve_of(s)); });
}

snat_status snat_sieve_contains(const snat_sieve* s, const char* n, int* out) {
  return emit_bool(out, [&] { return sieve_of(s).contains(integer(n, "n")); });
}

snat_status snat_sieve_union(const snat_sieve* s, const snat_sieve* t, snat_sieve** out) {
  return emit_sieve(out, [&] { return snat::unite(sieve_of(s), sieve_of(t)); });
}

snat_status snat_sieve_product(const snat_sieve* s, const snat_sieve* t, snat_sieve** out) {
  return emit_sieve(out, [&] { return snat::product(sieve_of(s), sieve_of(t)); });
}

snat_status snat_sieve_transport(const snat_sieve* s, const char* c, snat_sieve** out) {
  return emit_sieve(out, [&] { return snat::transport(sieve_of(s), integer(c, "c")); });
}

snat_status snat_smonoid_contains(const char* generators, const char* n, int* out) {
  return emit_bool(out, [&] { return monoid_of(generators).contains(integer(n, "n")); });
}

snat_status snat_smonoid_to_sieve(const char* generators, const char* bound, snat_sieve** out, int* exact) {
  return guard([&] {
    require(out, "output");
    require(exact, "output");
    snat::SMonoidSieve result = snat::smonoid_to_sieve(monoid_of(generators), integer(bound, "bound"));
    *out = new snat_sieve{std::move(result.sieve)};
    *exact = result.exact ? 1 : 0;
  });
}

snat_status snat_member(const snat_supernat* s, const snat_sieve* const* sieves, size_t count, int* out) {
  return emit_bool(out, [&] {
    if (count > 0) require(sieves, "sieves");
    std::vector<snat::Sieve> list;
    for (size_t i = 0; i < count; ++i) list.push_back(sieve_of(sieves[i]));
    return snat::member_intersection(snat::PointClass{natural_valued(s)}, list);
  });
}

snat_status snat_incomparable(const snat_supernat* x, const snat_supernat* y, int* out) {
  return emit_bool(out, [&] {
    return snat::incomparable(snat::PointClass{natural_valued(x)}, snat::PointClass{natural_valued(y)});
  });
}

snat_status snat_separate(const snat_supernat* x, const snat_supernat* y, snat_sieve** left, snat_sieve** right,
                          int memberships[4]) {
  return guard([&] {
    require(left, "output");
    require(right, "output");
    require(memberships, "output");
    snat::SeparationWitness w =
        snat::separating_sieves(snat::PointClass{natural_valued(x)}, snat::PointClass{natural_valued(y)});
    auto* l = new snat_sieve{std::move(w.left)};
    auto* r = new (std::nothrow) snat_sieve{std::move(w.right)};
    if (r == nullptr) {
      delete l;
      throw std::bad_alloc();
    }
    *left = l;
    *right = r;
    memberships[0] = w.x_in_left;
    memberships[1] = w.y_in_left;
    memberships[2] = w.x_in_right;
    memberships[3] = w.y_in_right;
  });
}

snat_status snat_bz_to_pair(const snat_supernat* f, char** a, snat_supernat** s) {
  return guard([&] {
    require(f, "fractional supernatural");
    require(a, "output");
    require(s, "output");
    snat::BZPair pair = snat::frac_to_pair(f->value);
    std::string text = snat::to_string(pair.a);
    auto* handle = new snat_supernat{pair.s};
    char* a_text = nullptr;
    try {
      a_text = dup(text);
    } catch (...) {
      delete handle;
      throw;
    }
    *a = a_text;
    *s = handle;
  });
}

snat_status snat_bz_to_frac(const char* a, const snat_supernat* s, snat_supernat** out) {
  return emit_supernat(out, [&] { return snat::pair_to_frac(snat::BZPair(integer(a, "a"), natural_valued(s))); });
}

snat_status snat_cone_contains(const char* a, const snat_supernat* s, const char* q, int* out) {
  return emit_bool(out, [&] {
    require(q, "rational");
    snat::BZPair pair(integer(a, "a"), natural_valued(s));
    return snat::cone_contains(pair, snat::parse_rational(q));
  });
}

snat_status snat_cone_list(const char* a, const snat_supernat* s, const char* num_bound, const char* den_bound,
                           char** out) {
  return emit_string(out, [&] {
    snat::BZPair pair(integer(a, "a"), natural_valued(s));
    return join(snat::cone_enumerate(pair, integer(num_bound, "num bound"), integer(den_bound, "den bound")));
  });
}

snat_status snat_cone_isomorphic(const char* a, const snat_supernat* s, const char* a2, const snat_supernat* s2,
                                 int* out) {
  return emit_bool(out, [&] {
    return snat::cones_isomorphic(snat::BZPair(integer(a, "a"), natural_valued(s)),
                                  snat::BZPair(integer(a2, "a"), natural_valued(s2)));
  });
}

snat_status snat_window_cone(const char* a, const snat_supernat* s, const snat_sieve* monoid, const char* num_bound,
                             const char* den_bound, snat_window** out) {
  return guard([&] {
    require(out, "output");
    snat::BZPair pair(integer(a, "a"), natural_valued(s));
    auto cone = snat::truncate_cone(pair, sieve_of(monoid), integer(num_bound, "num bound"),
                                    integer(den_bound, "den bound"));
    *out = new snat_window{std::move(cone)};
  });
}

snat_status snat_window_chain(const char* chain, const snat_sieve* monoid, const char* num_bound,
                              const char* den_bound, snat_window** out) {
  return guard([&] {
    require(out, "output");
    require(chain, "chain");
    std::string text(chain);
    std::vector<Int> links;
    if (text.find_first_not_of(" \t") != std::string::npos) links = snat::parse_int_list(text);
    auto cone = snat::truncate_chain(snat::ChainPoint{std::move(links), sieve_of(monoid)},
                                     integer(num_bound, "num bound"), integer(den_bound, "den bound"));
    *out = new snat_window{std::move(cone)};
  });
}

void snat_window_free(snat_window* w) { delete w; }

snat_status snat_window_elements(const snat_window* w, char** out) {
  return emit_string(out, [&] {
    require(w, "window");
    return join(w->value.elements);
  });
}

snat_status snat_oracle_rank_one(const snat_window* w, const char* search_bound, int* verified, char** report) {
  return guard([&] {
    require(w, "window");
    require(verified, "output");
    require(report, "output");
    auto conditions = snat::check_point_conditions(w->value, integer(search_bound, "search bound"));
    const auto& r = conditions.rank_one;
    std::string text;
    if (r.status == snat::RankOneReport::Status::Verified) {
      for (const auto& x : r.witnesses) {
        text += "w " + snat::to_string(x.a) + " " + snat::to_string(x.a2) + " " + snat::to_string(x.b) + " " +
                snat::to_string(x.c) + " " + snat::to_string(x.c2) + "\n";
      }
    } else {
      for (const auto& [x, y] : r.unresolved) text += "u " + snat::to_string(x) + " " + snat::to_string(y) + "\n";
    }
    *report = dup(text);
    *verified = r.status == snat::RankOneReport::Status::Verified ? 1 : 0;
  });
}

snat_status snat_oracle_additively_closed(const snat_window* w, int* out) {
  return emit_bool(out, [&] {
    require(w, "window");
    return snat::additively_closed(w->value);
  });
}

snat_status snat_oracle_chain(const snat_sieve* monoid, const char* seeds, const char* search_bound, char** chain) {
  return emit_string(chain, [&] {
    require(seeds, "seeds");
    auto point = snat::chain_from_points(sieve_of(monoid), snat::parse_rational_list(seeds),
                                         integer(search_bound, "search bound"));
    return join(point.chain);
  });
}

snat_status snat_oracle_verify_member(const snat_supernat* s, const snat_sieve* sieve, const char* div_bound,
                                      const char* factor_bound, int* consistent, char** witness) {
  return guard([&] {
    require(consistent, "output");
    require(witness, "output");
    auto verdict = snat::verify_member_decision(natural_valued(s), sieve_of(sieve), integer(div_bound, "div bound"),
                                                integer(factor_bound, "factor bound"));
    *witness = verdict.witness ? dup(snat::to_string(*verdict.witness)) : nullptr;
    *consistent = verdict.consistent ? 1 : 0;
  });
}

}  // extern "C"
