// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the C API. JSON goes to stdout; --pretty adds a
// one-line summary on stderr.
//
// Exit codes: 0 answered, 2 unknown or resource limit, 1 usage or other error.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "waring/waring.h"

namespace {

constexpr int kExitAnswered = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUnknown = 2;

struct OrderDeleter {
  void operator()(waring_order* o) const { waring_order_free(o); }
};
struct ResultDeleter {
  void operator()(waring_result* r) const { waring_result_free(r); }
};
using OrderPtr = std::unique_ptr<waring_order, OrderDeleter>;
using ResultPtr = std::unique_ptr<waring_result, ResultDeleter>;

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

struct Globals {
  waring_options options{};
  bool pretty = false;
};

// Prints the result or the error and maps the status to an exit code.
int finish(const Globals& g, waring_status status, waring_result* raw) {
  ResultPtr result(raw);
  if (status != WARING_OK) {
    const std::string message = waring_last_error();
    std::printf("{\"error\":\"%s\",\"message\":\"%s\"}\n", waring_status_name(status),
                json_escape(message).c_str());
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return status == WARING_RESOURCE_LIMIT ? kExitUnknown : kExitFailure;
  }
  std::printf("%s\n", waring_result_json(result.get()));
  if (g.pretty) std::fprintf(stderr, "%s\n", waring_result_summary(result.get()));
  return waring_result_determined(result.get()) ? kExitAnswered : kExitUnknown;
}

// Parses the order, then runs body with it.
int with_order(const Globals& g, const std::string& text,
               const std::function<waring_status(const waring_order*, waring_result**)>& body) {
  waring_order* raw = nullptr;
  const waring_status st = waring_order_parse(text.c_str(), &raw);
  if (st != WARING_OK) return finish(g, st, nullptr);
  OrderPtr order(raw);
  waring_result* result = nullptr;
  const waring_status status = body(order.get(), &result);
  return finish(g, status, result);
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  waring_options_default(&g.options);

  CLI::App app{"Decide whether matrices over orders in number fields are sums of k-th powers.\n"
               "Orders: minpoly:c0,...,c_{n-1} (monic, constant term first, leading 1 implied),\n"
               "quad:d=<int>,f=<int>, external:deg=<int>,disc=<int>.\n"
               "Matrices: rows separated by ';', entries as integers or (c0,c1,...) tuples.",
               "waring"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(waring_version()));

  bool json_flag = true;
  app.add_flag("--json", json_flag, "JSON on stdout (default)")->configurable(false);
  app.add_flag("--pretty", g.pretty, "also print a human-readable summary on stderr");
  app.add_option("--max-ring-size", g.options.max_ring_size,
                 "cap on residue ring size and enumerated tuples")
      ->envname("WARING_MAX_RING_SIZE")
      ->capture_default_str();
  app.add_option("--max-closure-ops", g.options.max_closure_ops, "cap on subgroup closure work")
      ->capture_default_str();
  app.add_flag("--wall-clock", g.options.wall_clock, "report wall-clock time in verdicts");

  std::string order;
  std::string matrix;
  int n = 0;
  unsigned k = 0;
  int exit_code = kExitFailure;

  auto add_order = [&](CLI::App* sub) { sub->add_option("--order", order, "order description")->required(); };
  auto globals_fallthrough = [](CLI::App* sub) { sub->fallthrough(); };

  auto* disc = app.add_subcommand("disc", "discriminant of the order");
  add_order(disc);
  disc->callback([&] { exit_code = with_order(g, order, [&](auto* o, auto** r) { return waring_disc(o, r); }); });

  std::string mode = "auto";
  auto* check = app.add_subcommand("check", "is every n x n matrix a sum of k-th powers?");
  add_order(check);
  check->add_option("--n", n, "matrix size")->required();
  check->add_option("--k", k, "exponent")->required();
  check->add_option("--mode", mode, "auto, criterion_only or oracle_only")
      ->check(CLI::IsMember({"auto", "criterion_only", "oracle_only"}))
      ->capture_default_str();
  check->callback([&] {
    const waring_mode m = mode == "criterion_only" ? WARING_MODE_CRITERION_ONLY
                          : mode == "oracle_only"  ? WARING_MODE_ORACLE_ONLY
                                                   : WARING_MODE_AUTO;
    exit_code = with_order(g, order, [&](auto* o, auto** r) { return waring_check(o, n, k, m, &g.options, r); });
  });

  bool members = false;
  auto* tg = app.add_subcommand("trace-group", "trace group of k-th powers in R/k!R");
  add_order(tg);
  tg->add_option("--n", n, "matrix size")->required();
  tg->add_option("--k", k, "exponent")->required();
  tg->add_flag("--members", members, "list members of small groups");
  tg->callback([&] {
    exit_code = with_order(
        g, order, [&](auto* o, auto** r) { return waring_trace_group(o, n, k, members ? 1 : 0, &g.options, r); });
  });

  auto* certify = app.add_subcommand("certify", "trace certificate that a matrix is a sum of k-th powers");
  add_order(certify);
  certify->add_option("--matrix", matrix, "matrix text")->required();
  certify->add_option("--k", k, "exponent")->required();
  certify->callback([&] {
    exit_code =
        with_order(g, order, [&](auto* o, auto** r) { return waring_certify(o, matrix.c_str(), k, &g.options, r); });
  });

  unsigned bound = 2;
  unsigned max_terms = 3;
  auto* decompose = app.add_subcommand("decompose", "bounded search for an explicit sum of k-th powers");
  add_order(decompose);
  decompose->add_option("--matrix", matrix, "matrix text")->required();
  decompose->add_option("--k", k, "exponent")->required();
  decompose->add_option("--bound", bound, "largest |coordinate| of a summand entry")->capture_default_str();
  decompose->add_option("--max-terms", max_terms, "largest number of summands")->capture_default_str();
  decompose->callback([&] {
    exit_code = with_order(g, order, [&](auto* o, auto** r) {
      return waring_decompose(o, matrix.c_str(), k, bound, max_terms, &g.options, r);
    });
  });

  std::string q_text;
  std::uint64_t pmax = 100000;
  unsigned rmax = 64;
  auto* bs = app.add_subcommand("bs-primes", "representations q = (p^r-1)/(p^d-1)");
  bs->add_option("--q", q_text, "integer q")->required();
  bs->add_option("--pmax", pmax, "largest p")->capture_default_str();
  bs->add_option("--rmax", rmax, "largest r")->capture_default_str();
  bs->callback([&] {
    waring_result* r = nullptr;
    const waring_status st = waring_bs_primes(q_text.c_str(), pmax, rmax, &r);
    exit_code = finish(g, st, r);
  });

  std::uint64_t q = 0;
  auto* ew = app.add_subcommand("element-waring", "do q-th powers of elements generate the order?");
  add_order(ew);
  ew->add_option("--q", q, "prime exponent")->required();
  ew->add_option("--pmax", pmax, "largest p in the obstruction search")->capture_default_str();
  ew->add_option("--rmax", rmax, "largest r in the obstruction search")->capture_default_str();
  ew->callback([&] {
    exit_code =
        with_order(g, order, [&](auto* o, auto** r) { return waring_element_waring(o, q, pmax, rmax, r); });
  });

  auto* cq5 = app.add_subcommand("counterexample-q5", "the Q(sqrt 5) cube example, checked");
  cq5->callback([&] {
    waring_result* r = nullptr;
    const waring_status st = waring_counterexample_q5(&g.options, &r);
    exit_code = finish(g, st, r);
  });

  std::uint64_t p = 0;
  bool assume = false;
  auto* sp = app.add_subcommand("split-prime", "factorization pattern of a rational prime");
  add_order(sp);
  sp->add_option("--p", p, "prime")->required();
  sp->add_flag("--assume-index-coprime", assume, "assert p does not divide the index of Z[theta]");
  sp->callback([&] {
    exit_code = with_order(g, order, [&](auto* o, auto** r) { return waring_split_prime(o, p, assume ? 1 : 0, r); });
  });

  for (auto* sub : app.get_subcommands({})) globals_fallthrough(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFailure;
  }
  return exit_code;
}
