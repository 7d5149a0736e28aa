// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/waring.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "waring/criteria.hpp"
#include "waring/decompose.hpp"
#include "waring/errors.hpp"
#include "waring/json_io.hpp"
#include "waring/text_format.hpp"
#include "waring/trace_group.hpp"

struct waring_order {
  waring::OrderDescriptor descriptor;
};

struct waring_result {
  std::string json;
  std::string summary;
  bool determined = true;
};

namespace {

using waring::ErrorCode;
using waring::json::Json;

thread_local std::string g_last_error;

waring_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return WARING_INVALID_ARGUMENT;
    case ErrorCode::kParse: return WARING_PARSE;
    case ErrorCode::kZeroDiscriminant: return WARING_ZERO_DISCRIMINANT;
    case ErrorCode::kInvalidSpec: return WARING_INVALID_SPEC;
    case ErrorCode::kDimensionMismatch: return WARING_DIMENSION_MISMATCH;
    case ErrorCode::kBadModulus: return WARING_BAD_MODULUS;
    case ErrorCode::kResourceLimit: return WARING_RESOURCE_LIMIT;
    case ErrorCode::kUnsupportedK:
    case ErrorCode::kUnsupportedOrder: return WARING_UNSUPPORTED;
    case ErrorCode::kIndexCaveat: return WARING_INDEX_CAVEAT;
    case ErrorCode::kNotRepresentable: return WARING_NOT_REPRESENTABLE;
    case ErrorCode::kInternal: break;
  }
  return WARING_INTERNAL;
}

// Runs body, converting exceptions into status codes and the thread-local message.
template <typename Body>
waring_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const waring::Error& e) {
    g_last_error = std::string(waring::error_code_name(e.code())) + ": " + e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "ResourceLimit: out of memory";
    return WARING_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = std::string("InternalError: ") + e.what();
    return WARING_INTERNAL;
  }
}

waring_status emit(waring_result** out, const Json& j, std::string summary, bool determined = true) {
  *out = new waring_result{waring::json::dump(j), std::move(summary), determined};
  return WARING_OK;
}

waring::ResourceLimits limits_from(const waring_options* options) {
  waring::ResourceLimits limits;
  if (options) {
    limits.max_ring_size = options->max_ring_size;
    limits.max_closure_ops = options->max_closure_ops;
    limits.max_oracle_k = options->max_oracle_k;
    limits.max_certificate_depth = options->max_certificate_depth;
  }
  return limits;
}

void require(bool ok, const char* what) {
  if (!ok) waring::fail(ErrorCode::kInvalidArgument, what);
}

const waring::MonogenicOrder& monogenic(const waring_order* order) {
  require(order != nullptr, "order is null");
  const auto* mono = std::get_if<waring::MonogenicOrder>(&order->descriptor);
  if (!mono)
    waring::fail(ErrorCode::kUnsupportedOrder, "this operation needs element arithmetic; external orders carry only a discriminant");
  return *mono;
}

std::string ordinal(std::uint64_t k) {
  const char* suffix = "th";
  if (k % 100 < 11 || k % 100 > 13) {
    if (k % 10 == 1) suffix = "st";
    if (k % 10 == 2) suffix = "nd";
    if (k % 10 == 3) suffix = "rd";
  }
  return std::to_string(k) + suffix;
}

std::string label_of(const waring::OrderDescriptor& d) {
  if (const auto* mono = std::get_if<waring::MonogenicOrder>(&d)) return mono->label();
  return std::get<waring::ExternalDiscOrder>(d).label;
}

}  // namespace

extern "C" {

void waring_options_default(waring_options* options) {
  if (!options) return;
  const waring::ResourceLimits defaults;
  options->max_ring_size = defaults.max_ring_size;
  options->max_closure_ops = defaults.max_closure_ops;
  options->max_oracle_k = defaults.max_oracle_k;
  options->max_certificate_depth = defaults.max_certificate_depth;
  options->wall_clock = 0;
}

waring_status waring_order_parse(const char* text, waring_order** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new waring_order{waring::parse_order(text)};
    return WARING_OK;
  });
}

void waring_order_free(waring_order* order) { delete order; }

waring_status waring_disc(const waring_order* order, waring_result** out) {
  return guarded([&] {
    require(order != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const auto& disc = waring::descriptor_disc(order->descriptor);
    return emit(out, Json{{"disc", waring::json::integer(disc)}},
                "disc(" + label_of(order->descriptor) + ") = " + disc.get_str());
  });
}

waring_status waring_check(const waring_order* order, int n, unsigned k, waring_mode mode,
                           const waring_options* options, waring_result** out) {
  return guarded([&] {
    require(order != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    waring::DecideOptions opts;
    opts.limits = limits_from(options);
    opts.wall_clock = options && options->wall_clock;
    switch (mode) {
      case WARING_MODE_AUTO: opts.mode = waring::DecideMode::kAuto; break;
      case WARING_MODE_CRITERION_ONLY: opts.mode = waring::DecideMode::kCriterionOnly; break;
      case WARING_MODE_ORACLE_ONLY: opts.mode = waring::DecideMode::kOracleOnly; break;
      default: waring::fail(ErrorCode::kInvalidArgument, "unknown decide mode");
    }
    const auto v = waring::decide(order->descriptor, n, k, opts);
    std::string summary = std::to_string(n) + "x" + std::to_string(n) + " matrices over " +
                          label_of(order->descriptor) + ", sums of " + ordinal(k) +
                          " powers: " + waring::answer_name(v.answer) + " (" + v.rule + ")";
    return emit(out, waring::json::verdict(v), summary, v.answer != waring::Answer::kUnknown);
  });
}

waring_status waring_trace_group(const waring_order* order, int n, unsigned k, int include_members,
                                 const waring_options* options, waring_result** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    const auto tg = waring::compute_trace_group(monogenic(order), n, k, limits_from(options));
    std::string summary = "trace group in R/" + std::to_string(tg.modulus()) + "R: " +
                          std::to_string(tg.group.size()) + " of " + std::to_string(tg.ring().size()) +
                          " elements" + (tg.is_full ? " (full)" : "");
    return emit(out, waring::json::trace_group(tg, include_members != 0), summary);
  });
}

waring_status waring_certify(const waring_order* order, const char* matrix, unsigned k,
                             const waring_options* options, waring_result** out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const auto& ord = monogenic(order);
    const auto m = waring::parse_matrix(matrix, ord);
    const auto trace = waring::mat_trace(ord, m);
    Json j{{"k", k}, {"matrix", waring::format_matrix(m)}, {"trace", waring::json::element(trace)}};
    try {
      const auto cert = waring::certify_trace(ord, m, k, limits_from(options));
      const bool verified = waring::verify_certificate(ord, m, cert);
      if (!verified) waring::fail(ErrorCode::kInternal, "certificate failed re-verification");
      j["representable"] = true;
      j["verified"] = true;
      j["certificate"] = waring::json::certificate(cert);
      return emit(out, j, "representable: certificate with " + std::to_string(cert.summands.size()) +
                              " companion summands, verified");
    } catch (const waring::Error& e) {
      if (e.code() != ErrorCode::kNotRepresentable) throw;
      j["representable"] = false;
      j["reason"] = e.what();
      return emit(out, j, "not representable: trace is outside the trace group");
    }
  });
}

waring_status waring_decompose(const waring_order* order, const char* matrix, unsigned k, unsigned entry_bound,
                               unsigned max_terms, const waring_options* options, waring_result** out) {
  return guarded([&] {
    require(matrix != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const auto& ord = monogenic(order);
    const auto m = waring::parse_matrix(matrix, ord);
    const auto found = waring::search_decomposition(ord, m, k, entry_bound, max_terms, limits_from(options));
    Json j{{"k", k},
           {"matrix", waring::format_matrix(m)},
           {"entry_bound", entry_bound},
           {"max_terms", max_terms},
           {"found", found.has_value()}};
    if (!found) return emit(out, j, "no decomposition within the search bounds", false);
    j["decomposition"] = waring::json::decomposition(*found);
    return emit(out, j, "found a sum of " + std::to_string(found->matrices.size()) + " " + ordinal(k) +
                            " powers, verified exactly");
  });
}

waring_status waring_bs_primes(const char* q, uint64_t p_max, unsigned r_max, waring_result** out) {
  return guarded([&] {
    require(q != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    waring::Integer qz;
    if (qz.set_str(q, 10) != 0) waring::fail(ErrorCode::kParse, std::string("not an integer: '") + q + "'");
    const auto triples = waring::bs_representations(qz, p_max, r_max);
    Json list = Json::array();
    for (const auto& t : triples) list.push_back(waring::json::bs_triple(t));
    return emit(out, Json{{"triples", list}},
                std::to_string(triples.size()) + " representation(s) of " + qz.get_str() + " as (p^r-1)/(p^d-1)");
  });
}

waring_status waring_element_waring(const waring_order* order, uint64_t q, uint64_t p_max, unsigned r_max,
                                    waring_result** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    const auto r = waring::element_waring(monogenic(order), q, p_max, r_max);
    return emit(out, waring::json::element_waring(r),
                "sums of " + ordinal(q) + " powers of elements " +
                    (r.full ? "give the whole order" : "give a proper subgroup"));
  });
}

waring_status waring_counterexample_q5(const waring_options* options, waring_result** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    const auto r = waring::counterexample_q5(limits_from(options));
    return emit(out, waring::json::counterexample(r),
                "alpha is not a sum of cubes in Z[(1+sqrt(5))/2], yet every 2x2 matrix is: " +
                    std::string(waring::answer_name(r.matrix_verdict.answer)));
  });
}

waring_status waring_split_prime(const waring_order* order, uint64_t p, int assume_index_coprime,
                                 waring_result** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    const auto& ord = monogenic(order);
    const auto& quad = ord.quadratic_spec();
    const bool maximal_quadratic = quad && quad->f == 1;
    const waring::Integer pz = static_cast<unsigned long>(p);
    const bool coprime = assume_index_coprime != 0 || maximal_quadratic || ord.disc() % pz != 0;
    Json j{{"p", p}};
    std::string summary = std::to_string(p) + ":";
    if (maximal_quadratic) {
      const auto s = waring::split_prime_quadratic(*quad, p);
      j["splitting"] = waring::splitting_name(s);
      summary += std::string(" ") + waring::splitting_name(s) + ";";
    }
    Json factors = Json::array();
    for (const auto& [degree, mult] : waring::dedekind_degrees(ord, p, coprime)) {
      factors.push_back(Json{{"degree", degree}, {"multiplicity", mult}});
      summary += " degree " + std::to_string(degree) + "^" + std::to_string(mult);
    }
    j["factors"] = factors;
    j["index_caveat_waived_by_caller"] = assume_index_coprime != 0 && !maximal_quadratic && ord.disc() % pz == 0;
    return emit(out, j, summary);
  });
}

const char* waring_result_json(const waring_result* result) { return result ? result->json.c_str() : ""; }

int waring_result_determined(const waring_result* result) { return result && result->determined ? 1 : 0; }

const char* waring_result_summary(const waring_result* result) { return result ? result->summary.c_str() : ""; }

void waring_result_free(waring_result* result) { delete result; }

const char* waring_status_name(waring_status status) {
  switch (status) {
    case WARING_OK: return "OK";
    case WARING_INVALID_ARGUMENT: return "InvalidArgument";
    case WARING_PARSE: return "ParseError";
    case WARING_ZERO_DISCRIMINANT: return "ZeroDiscriminant";
    case WARING_INVALID_SPEC: return "InvalidSpec";
    case WARING_DIMENSION_MISMATCH: return "DimensionMismatch";
    case WARING_BAD_MODULUS: return "BadModulus";
    case WARING_RESOURCE_LIMIT: return "ResourceLimit";
    case WARING_UNSUPPORTED: return "Unsupported";
    case WARING_INDEX_CAVEAT: return "IndexCaveat";
    case WARING_NOT_REPRESENTABLE: return "NotRepresentable";
    case WARING_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* waring_last_error(void) { return g_last_error.c_str(); }

const char* waring_version(void) { return "0.1.0"; }

}  // extern "C"
