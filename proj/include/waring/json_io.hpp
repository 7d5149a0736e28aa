// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "waring/criteria.hpp"
#include "waring/decompose.hpp"
#include "waring/order.hpp"
#include "waring/residue_ring.hpp"
#include "waring/trace_group.hpp"

namespace waring::json {

using Json = nlohmann::json;  // std::map backed, so keys serialize sorted

// Member lists of larger trace groups are left out of trace_group().
inline constexpr std::uint64_t kMaxMembersListed = 4096;

// A JSON number when it fits in 64 bits, a decimal string otherwise.
Json integer(const Integer& v);
Json element(const OrderElement& a);
Json element(const ResidueElement& a);
Json order(const OrderDescriptor& order);
Json bound(const PowerCountBound& b);
Json witness(const Witness& w);
Json verdict(const Verdict& v);
Json trace_group(const TraceGroup& tg, bool include_members);
Json certificate(const Certificate& c);
Json decomposition(const Decomposition& d);
Json bs_triple(const BSTriple& t);
Json element_waring(const ElementWaringResult& r);
Json counterexample(const CounterexampleReport& r);
// Sorted list of coordinate vectors.
Json subgroup(std::vector<ResidueElement> elements);

// Compact single-line text.
std::string dump(const Json& j);

}  // namespace waring::json
