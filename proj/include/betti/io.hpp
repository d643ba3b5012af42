#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "betti/decompose.hpp"
#include "betti/diagram.hpp"
#include "betti/filtration.hpp"
#include "betti/monotonicity.hpp"
#include "betti/quiver.hpp"
#include "betti/sparse_ray.hpp"

namespace betti {

using Json = nlohmann::ordered_json;

// Text layout mirrors the usual printed matrices: line r, token i holds
// beta_{i,i+r}; a token is "-", an integer, or "a/b". Entries with j < i have
// no line to live on, so such diagrams only serialize as JSON.
std::string format_text(const BettiDiagram& d);
BettiDiagram parse_text(std::string_view text,
                        std::optional<int> column_override = std::nullopt);

// {"n": int, "entries": [{"i": int, "j": int, "v": "a/b"}]}
Json to_json(const BettiDiagram& d);
BettiDiagram diagram_from_json(const Json& j);

// Accepts either format; JSON when the first non-space byte is '{'.
BettiDiagram parse_diagram(std::string_view text,
                           std::optional<int> column_override = std::nullopt);

Json to_json(const DecompositionChain& chain);
Json to_json(const FiltrationReport& report);
Json to_json(const SweepReport& report);
Json to_json(const MembershipResult& result);
Json to_json(const EnumerationReport& report);
Json to_json(const SparseRayCertificate& cert);

}  // namespace betti
