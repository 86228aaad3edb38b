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

// Command-line front end over the C interface.
//
// Exit codes: 0 success or predicate true, 1 predicate false, 2 parse or
// usage error, 3 unsupported or invalid operation, 4 oracle inconclusive at
// the given bounds.

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "snat.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;
constexpr int kInconclusive = 4;

struct Failure {
  snat_status status;
};

void check(snat_status status) {
  if (status != SNAT_OK) throw Failure{status};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Supernat = std::unique_ptr<snat_supernat, Deleter<snat_supernat, snat_supernat_free>>;
using PrimeSet = std::unique_ptr<snat_primeset, Deleter<snat_primeset, snat_primeset_free>>;
using Sieve = std::unique_ptr<snat_sieve, Deleter<snat_sieve, snat_sieve_free>>;
using Window = std::unique_ptr<snat_window, Deleter<snat_window, snat_window_free>>;

std::string take(char* text) {
  std::string out = text ? text : "";
  snat_string_free(text);
  return out;
}

Supernat supernat(const std::string& text) {
  snat_supernat* out = nullptr;
  check(snat_supernat_parse(text.c_str(), &out));
  return Supernat(out);
}

Supernat fractional(const std::string& text) {
  snat_supernat* out = nullptr;
  check(snat_fractional_parse(text.c_str(), &out));
  return Supernat(out);
}

PrimeSet primeset(const std::string& text) {
  snat_primeset* out = nullptr;
  check(snat_primeset_parse(text.c_str(), &out));
  return PrimeSet(out);
}

Sieve sieve(const std::string& text) {
  snat_sieve* out = nullptr;
  check(snat_sieve_parse(text.c_str(), &out));
  return Sieve(out);
}

std::string print(const snat_supernat* s) {
  char* out = nullptr;
  check(snat_supernat_print(s, &out));
  return take(out);
}

std::string print(const snat_primeset* s) {
  char* out = nullptr;
  check(snat_primeset_print(s, &out));
  return take(out);
}

std::string print(const snat_sieve* s) {
  char* out = nullptr;
  check(snat_sieve_print(s, &out));
  return take(out);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string bracket(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

/// What a command produced: the plain text lines, the JSON result and
/// witness, and the exit code.
struct Outcome {
  std::vector<std::string> lines;
  json result;
  json witness;
  int code = kTrue;
};

Outcome predicate(bool value) {
  return Outcome{{value ? "true" : "false"}, value, nullptr, value ? kTrue : kFalse};
}

Outcome value(const std::string& text) { return Outcome{{text}, text, nullptr, kTrue}; }

Outcome list(const std::string& comma_separated) {
  auto items = split(comma_separated, ',');
  return Outcome{{bracket(items)}, items, nullptr, kTrue};
}

struct Options {
  bool json = false;
  std::string verb;
};

int report_failure(const Options& opts, const Failure& f) {
  std::string message = snat_last_error();
  std::cerr << "error: " << snat_status_name(f.status) << ": " << message << "\n";
  if (opts.json) {
    json out;
    out["verb"] = opts.verb;
    out["result"] = nullptr;
    out["witness"] = nullptr;
    out["error"] = {{"kind", snat_status_name(f.status)}, {"message", message}};
    std::cout << out.dump() << "\n";
  }
  switch (f.status) {
    case SNAT_ERR_PARSE: return kUsage;
    case SNAT_ERR_CONSTRUCTION_STUCK: return kInconclusive;
    default: return kUnsupported;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic of supernatural numbers and the sieve topology."};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_flag("--json", opts.json, "Emit {\"verb\", \"result\", \"witness\"} as JSON");

  std::function<Outcome()> run;
  auto verb = [&](CLI::App* cmd, std::string name, std::function<Outcome()> body) {
    cmd->callback([&opts, &run, name = std::move(name), body = std::move(body)] {
      opts.verb = name;
      run = body;
    });
  };

  std::string x, y, z, w, at, kind = "supernat";
  std::vector<std::string> many;
  std::string bound = "10000", div_bound = "10000", factor_bound = "10000";
  std::string num = "16", den = "16";
  std::string monoid = "sieve(1)", cone_a = "1", cone_s, chain;
  bool infinite = false, witnesses = false;

  // ---- supernatural arithmetic ----
  auto* eval = app.add_subcommand("eval", "Print the canonical form of a literal");
  eval->add_option("literal", x, "Literal")->required();
  eval->add_option("--kind", kind, "supernat | frac | primeset | sieve")
      ->check(CLI::IsMember({"supernat", "frac", "primeset", "sieve"}));
  eval->add_option("--at", at, "Print the exponent at this prime instead");
  verb(eval, "eval", [&]() -> Outcome {
    if (kind == "primeset") return value(print(primeset(x).get()));
    if (kind == "sieve") return value(print(sieve(x).get()));
    Supernat s = kind == "frac" ? fractional(x) : supernat(x);
    if (at.empty()) return value(print(s.get()));
    char* out = nullptr;
    check(snat_supernat_exponent(s.get(), at.c_str(), &out));
    return value(take(out));
  });

  auto binary = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("s", x, "Supernatural")->required();
    cmd->add_option("t", y, "Supernatural")->required();
    return cmd;
  };
  using SupernatOp = snat_status (*)(const snat_supernat*, const snat_supernat*, snat_supernat**);
  using SupernatPred = snat_status (*)(const snat_supernat*, const snat_supernat*, int*);
  auto value_verb = [&](const char* name, const char* help, SupernatOp op) {
    verb(binary(name, help), name, [&, op]() {
      snat_supernat* out = nullptr;
      check(op(supernat(x).get(), supernat(y).get(), &out));
      return value(print(Supernat(out).get()));
    });
  };
  auto predicate_verb = [&](const char* name, const char* help, SupernatPred op) {
    verb(binary(name, help), name, [&, op]() {
      int out = 0;
      check(op(supernat(x).get(), supernat(y).get(), &out));
      return predicate(out != 0);
    });
  };
  value_verb("mul", "Product s t", snat_supernat_mul);
  value_verb("lcm", "Least common multiple of s and t", snat_supernat_lcm);
  predicate_verb("divides", "s divides t", snat_supernat_divides);
  predicate_verb("equiv", "s ~ t", snat_supernat_equivalent);
  predicate_verb("wdiv", "s weakly divides t", snat_supernat_weakly_divides);
  predicate_verb("incomparable", "Neither point weakly divides the other", snat_incomparable);

  auto* infsupp = app.add_subcommand("infsupp", "Primes with infinite exponent");
  infsupp->add_option("s", x, "Supernatural")->required();
  verb(infsupp, "infsupp", [&]() {
    snat_primeset* out = nullptr;
    check(snat_supernat_infinite_support(supernat(x).get(), &out));
    return value(print(PrimeSet(out).get()));
  });

  auto* primes = app.add_subcommand("primes", "Members of a prime set up to a bound");
  primes->add_option("set", x, "Prime set")->required();
  primes->add_option("--bound", bound, "Upper bound");
  primes->add_flag("--infinite", infinite, "Decide whether the set is infinite instead");
  verb(primes, "primes", [&]() {
    PrimeSet set = primeset(x);
    if (infinite) {
      int out = 0;
      check(snat_primeset_is_infinite(set.get(), &out));
      return predicate(out != 0);
    }
    char* out = nullptr;
    check(snat_primeset_members(set.get(), bound.c_str(), &out));
    return list(take(out));
  });

  // ---- sieves ----
  auto sieve_pair = [&](const char* name, const char* help,
                        snat_status (*op)(const snat_sieve*, const snat_sieve*, snat_sieve**)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("S", x, "Sieve")->required();
    cmd->add_option("T", y, "Sieve")->required();
    verb(cmd, name, [&, op]() {
      snat_sieve* out = nullptr;
      check(op(sieve(x).get(), sieve(y).get(), &out));
      return value(print(Sieve(out).get()));
    });
  };
  sieve_pair("union", "Union of two sieves", snat_sieve_union);
  sieve_pair("product", "Intersection of two sieves (pairwise lcm)", snat_sieve_product);

  auto* transport = app.add_subcommand("transport", "{ n : c n in S }");
  transport->add_option("S", x, "Sieve")->required();
  transport->add_option("c", y, "Positive integer")->required();
  verb(transport, "transport", [&]() {
    snat_sieve* out = nullptr;
    check(snat_sieve_transport(sieve(x).get(), y.c_str(), &out));
    return value(print(Sieve(out).get()));
  });

  auto* contains = app.add_subcommand("contains", "n is in the sieve S");
  contains->add_option("S", x, "Sieve")->required();
  contains->add_option("n", y, "Positive integer")->required();
  verb(contains, "contains", [&]() {
    int out = 0;
    check(snat_sieve_contains(sieve(x).get(), y.c_str(), &out));
    return predicate(out != 0);
  });

  auto* smonoid = app.add_subcommand("smonoid", "Additively generated monoids");
  smonoid->require_subcommand(1);
  auto* sm_contains = smonoid->add_subcommand("contains", "n is a sum of generators");
  sm_contains->add_option("generators", x, "e.g. 3,5")->required();
  sm_contains->add_option("n", y, "Positive integer")->required();
  verb(sm_contains, "smonoid contains", [&]() {
    int out = 0;
    check(snat_smonoid_contains(x.c_str(), y.c_str(), &out));
    return predicate(out != 0);
  });
  auto* sm_sieve = smonoid->add_subcommand("sieve", "The monoid as a sieve");
  sm_sieve->add_option("generators", x, "e.g. 3,5")->required();
  sm_sieve->add_option("--bound", bound, "Search bound for minimal elements");
  verb(sm_sieve, "smonoid sieve", [&]() {
    snat_sieve* out = nullptr;
    int exact = 0;
    check(snat_smonoid_to_sieve(x.c_str(), bound.c_str(), &out, &exact));
    Outcome o = value(print(Sieve(out).get()));
    o.witness = {{"exact", exact != 0}};
    if (!exact) o.lines.push_back("inexact: minimal-element search stopped at the bound");
    return o;
  });

  // ---- topology ----
  auto* member = app.add_subcommand("member", "The point [s] lies in every X(S)");
  member->add_option("s", x, "Supernatural")->required();
  member->add_option("sieves", many, "Sieves");
  verb(member, "member", [&]() {
    std::vector<Sieve> owned;
    std::vector<const snat_sieve*> raw;
    for (const auto& text : many) {
      owned.push_back(sieve(text));
      raw.push_back(owned.back().get());
    }
    int out = 0;
    check(snat_member(supernat(x).get(), raw.data(), raw.size(), &out));
    return predicate(out != 0);
  });

  auto* separate = app.add_subcommand("separate", "Sieves separating two incomparable points");
  separate->add_option("x", x, "Supernatural")->required();
  separate->add_option("y", y, "Supernatural")->required();
  verb(separate, "separate", [&]() {
    snat_sieve* left = nullptr;
    snat_sieve* right = nullptr;
    int m[4] = {0, 0, 0, 0};
    check(snat_separate(supernat(x).get(), supernat(y).get(), &left, &right, m));
    std::string l = print(Sieve(left).get());
    std::string r = print(Sieve(right).get());
    auto b = [](int v) { return v ? "true" : "false"; };
    Outcome o;
    o.lines = {"left: " + l, "right: " + r, std::string("x in left: ") + b(m[0]),
               std::string("y in left: ") + b(m[1]), std::string("x in right: ") + b(m[2]),
               std::string("y in right: ") + b(m[3])};
    o.result = {{"left", l}, {"right", r}};
    o.witness = {{"x_in_left", m[0] != 0},
                 {"y_in_left", m[1] != 0},
                 {"x_in_right", m[2] != 0},
                 {"y_in_right", m[3] != 0}};
    return o;
  });

  // ---- rational cones ----
  auto* bz = app.add_subcommand("bz", "The (a, s) correspondence");
  bz->require_subcommand(1);
  auto* topair = bz->add_subcommand("topair", "Fractional supernatural to (a, s)");
  topair->add_option("f", x, "Fractional supernatural")->required();
  verb(topair, "bz topair", [&]() {
    char* a = nullptr;
    snat_supernat* s = nullptr;
    check(snat_bz_to_pair(fractional(x).get(), &a, &s));
    std::string a_text = take(a);
    std::string s_text = print(Supernat(s).get());
    Outcome o;
    o.lines = {"(" + a_text + ", " + s_text + ")"};
    o.result = {{"a", a_text}, {"s", s_text}};
    return o;
  });
  auto* tofrac = bz->add_subcommand("tofrac", "(a, s) to s / a");
  tofrac->add_option("a", x, "Positive integer")->required();
  tofrac->add_option("s", y, "Supernatural")->required();
  verb(tofrac, "bz tofrac", [&]() {
    snat_supernat* out = nullptr;
    check(snat_bz_to_frac(x.c_str(), supernat(y).get(), &out));
    return value(print(Supernat(out).get()));
  });

  auto* cone = app.add_subcommand("cone", "Positive rational cones Q+(a, s)");
  cone->require_subcommand(1);
  auto* cone_has = cone->add_subcommand("contains", "q lies in Q+(a, s)");
  cone_has->add_option("a", x, "Positive integer")->required();
  cone_has->add_option("s", y, "Supernatural")->required();
  cone_has->add_option("q", z, "Rational u/v")->required();
  verb(cone_has, "cone contains", [&]() {
    int out = 0;
    check(snat_cone_contains(x.c_str(), supernat(y).get(), z.c_str(), &out));
    return predicate(out != 0);
  });
  auto* cone_list = cone->add_subcommand("list", "Members within bounds, ascending");
  cone_list->add_option("a", x, "Positive integer")->required();
  cone_list->add_option("s", y, "Supernatural")->required();
  cone_list->add_option("--num", num, "Numerator bound");
  cone_list->add_option("--den", den, "Denominator bound");
  verb(cone_list, "cone list", [&]() {
    char* out = nullptr;
    check(snat_cone_list(x.c_str(), supernat(y).get(), num.c_str(), den.c_str(), &out));
    return list(take(out));
  });
  auto* cone_iso = cone->add_subcommand("iso", "Q+(a, s) and Q+(a2, s2) are isomorphic");
  cone_iso->add_option("a", x, "Positive integer")->required();
  cone_iso->add_option("s", y, "Supernatural")->required();
  cone_iso->add_option("a2", z, "Positive integer")->required();
  cone_iso->add_option("s2", w, "Supernatural")->required();
  verb(cone_iso, "cone iso", [&]() {
    int out = 0;
    check(snat_cone_isomorphic(x.c_str(), supernat(y).get(), z.c_str(), supernat(w).get(), &out));
    return predicate(out != 0);
  });

  // ---- oracles ----
  auto* oracle = app.add_subcommand("oracle", "Bounded brute-force checks");
  oracle->require_subcommand(1);
  auto window_options = [&](CLI::App* cmd) {
    cmd->add_option("--monoid", monoid, "Acting monoid as a sieve literal");
    auto* s_opt = cmd->add_option("--cone-s", cone_s, "Window onto Q+(a, s): the supernatural s");
    cmd->add_option("--cone-a", cone_a, "Window onto Q+(a, s): the integer a");
    auto* c_opt = cmd->add_option("--chain", chain, "Window onto the chain point c1,c2,...");
    s_opt->excludes(c_opt);
    cmd->add_option("--num", num, "Numerator bound of the window");
    cmd->add_option("--den", den, "Denominator bound of the window");
  };
  auto window = [&]() {
    Sieve m = sieve(monoid);
    snat_window* out = nullptr;
    if (!cone_s.empty()) {
      check(snat_window_cone(cone_a.c_str(), supernat(cone_s).get(), m.get(), num.c_str(), den.c_str(), &out));
    } else {
      check(snat_window_chain(chain.c_str(), m.get(), num.c_str(), den.c_str(), &out));
    }
    return Window(out);
  };

  auto* rank_one = oracle->add_subcommand("rank-one", "Common refinements for every pair in the window");
  window_options(rank_one);
  rank_one->add_option("--bound", bound, "Largest monoid element tried");
  rank_one->add_flag("--witnesses", witnesses, "List the witness of every pair");
  verb(rank_one, "oracle rank-one", [&]() {
    Window win = window();
    int verified = 0;
    char* text = nullptr;
    check(snat_oracle_rank_one(win.get(), bound.c_str(), &verified, &text));
    Outcome o;
    o.result = verified ? "verified" : "unresolved";
    o.lines = {verified ? "verified" : "unresolved"};
    o.code = verified ? kTrue : kInconclusive;
    json items = json::array();
    for (const auto& line : split(take(text), '\n')) {
      auto f = split(line, ' ');
      if (f[0] == "u") {
        items.push_back({{"a", f[1]}, {"a2", f[2]}});
        o.lines.push_back("unresolved pair: " + f[1] + " " + f[2]);
      } else if (witnesses) {
        items.push_back({{"a", f[1]}, {"a2", f[2]}, {"b", f[3]}, {"c", f[4]}, {"c2", f[5]}});
        o.lines.push_back(f[1] + " = " + f[4] + " * " + f[3] + ", " + f[2] + " = " + f[5] + " * " + f[3]);
      }
    }
    if (!verified || witnesses) o.witness = items;
    return o;
  });

  auto* add_closed = oracle->add_subcommand("add-closed", "The window is closed under addition");
  window_options(add_closed);
  verb(add_closed, "oracle add-closed", [&]() {
    Window win = window();
    int out = 0;
    check(snat_oracle_additively_closed(win.get(), &out));
    return predicate(out != 0);
  });

  auto* chain_cmd = oracle->add_subcommand("chain", "Divisor chain whose point covers the seeds");
  chain_cmd->add_option("seeds", x, "Rationals, e.g. 1,1/2,1/6")->required();
  chain_cmd->add_option("--monoid", monoid, "Monoid as a sieve literal");
  chain_cmd->add_option("--bound", bound, "Largest monoid element tried per step");
  verb(chain_cmd, "oracle chain", [&]() {
    char* out = nullptr;
    check(snat_oracle_chain(sieve(monoid).get(), x.c_str(), bound.c_str(), &out));
    return list(take(out));
  });

  auto* verify = oracle->add_subcommand("verify-member", "Bounded check of the membership recursion");
  verify->add_option("s", x, "Supernatural")->required();
  verify->add_option("S", y, "Proper sieve")->required();
  verify->add_option("--div-bound", div_bound, "Largest divisor of s checked");
  verify->add_option("--factor-bound", factor_bound, "Largest sieve element tried");
  verb(verify, "oracle verify-member", [&]() {
    int consistent = 0;
    char* witness = nullptr;
    check(snat_oracle_verify_member(supernat(x).get(), sieve(y).get(), div_bound.c_str(), factor_bound.c_str(),
                                    &consistent, &witness));
    Outcome o;
    o.result = consistent ? "consistent" : "refuted";
    o.lines = {consistent ? "consistent" : "refuted"};
    o.code = consistent ? kTrue : kFalse;
    if (witness) {
      std::string n = take(witness);
      o.witness = n;
      o.lines.push_back("witness divisor: " + n);
    }
    return o;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Outcome o = run();
    if (opts.json) {
      json out;
      out["verb"] = opts.verb;
      out["result"] = o.result;
      out["witness"] = o.witness;
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& line : o.lines) std::cout << line << "\n";
    }
    return o.code;
  } catch (const Failure& f) {
    return report_failure(opts, f);
  }
}
