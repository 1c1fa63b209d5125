#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cdc/dynamics.hpp"
#include "cdc/halfedge.hpp"
#include "cdc/projection.hpp"

namespace cdc {

using Json = nlohmann::ordered_json;

Json to_json(const StructuralReport& r);
Json to_json(const AuditReport& r);
Json to_json(const ReducedStructure& rs);
Json to_json(const CycleSet& cs);
Json to_json(const CdcCertificate& cert);
Json to_json(const TraceEntry& t);
Json to_json(const EnumerationSummary& s, int clique_count);
Json to_json(const EquivalenceReport& r);

/// One JSON object per line.
std::string trace_to_jsonl(const std::vector<TraceEntry>& trace);

std::string enumeration_csv_header();
std::string enumeration_csv_row(const EnumRecord& r, int clique_count);

/// Accepts {"cycles": [[...], ...]} (a certificate works) or a bare array of
/// walks. Throws ParseError on malformed input.
WalkCover parse_cover_json(std::string_view text);

}  // namespace cdc
