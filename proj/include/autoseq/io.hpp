#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "autoseq/automata.hpp"
#include "autoseq/checks.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/series.hpp"

namespace autoseq::io {

using Json = nlohmann::ordered_json;

/// {"p": 2, "coeffs": [0, 1, 0, ...]}
Json series_to_json(const TruncatedSeries& s);
/// Accepts negative or unreduced coefficients; throws std::invalid_argument on
/// a malformed document.
TruncatedSeries series_from_json(const Json& j);

/// {"p", "terms": [{"coeffs": [...], "kind": "power"|"frobenius", "value"}], "text"}
Json relation_to_json(const PolyRelation& r, const std::string& series_name = "A");
PolyRelation relation_from_json(const Json& j);

/// {"alphabet", "read_order", "initial", "states", "transitions", "outputs"}
/// with states listed by name and transitions as rows of state indices.
Json dfao_to_json(const Dfao& m);
Dfao dfao_from_json(const Json& j);

/// Per depth: cumulative class count, rational rank, and the classes first
/// seen at that depth (i, r, first 32 fingerprint terms). Depths run to the
/// profile's max depth.
Json kernel_report(const std::string& name, const Kernel& kernel, const RankProfile& profile);

/// Results in suite order plus a summary; all elapsed times are collected
/// under the single "timing" key so the rest is reproducible byte for byte.
Json check_report(const std::vector<CheckResult>& results);

}  // namespace autoseq::io
