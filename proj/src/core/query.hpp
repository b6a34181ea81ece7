#pragma once

#include <map>
#include <set>
#include <string>

#include "core/convert.hpp"
#include "core/rdf.hpp"

namespace vprdf {

// Result of a viewpoint-scoped (or consensual) retrieval. Only data
// statements are returned: vocabulary machinery and minted predicate-class
// helpers are presentation artifacts and never appear here.
struct QueryResult {
  Graph triples;
  std::string viewpoint;  // empty for the consensual query
  std::set<std::string> matched_resources;
};

// Reference judgments: canonical statement line → viewpoints it is relevant
// to. An empty set marks a consensual statement.
struct GoldLabels {
  std::map<std::string, std::set<std::string>> by_line;

  bool operator==(const GoldLabels&) const = default;
};

GoldLabels parse_gold(const std::string& text);
std::string serialize_gold(const GoldLabels& gold);

struct RelevanceScore {
  double precision = 1.0;  // vacuously 1 on an empty result
  double recall = 1.0;
  std::size_t returned_count = 0;
  std::size_t relevant_count = 0;
  std::size_t hit_count = 0;
};

// Every data statement with a constituent linked to the viewpoint: subject,
// object, or the minted class of its predicate. Direct link triples and
// reified statement nodes are both read. Unknown viewpoints yield an empty
// result.
QueryResult viewpoint_filter(const Graph& g, const std::string& viewpoint,
                             const ConversionConfig& cfg = {});

// Data statements none of whose constituents are linked to any viewpoint.
QueryResult consensual_filter(const Graph& g, const ConversionConfig& cfg = {});

// Precision/recall of a result against the gold labels for one viewpoint
// (empty name = the consensual bucket). Exact set-cardinality ratios.
RelevanceScore evaluate(const QueryResult& result, const GoldLabels& gold,
                        const std::string& viewpoint);

std::string format_score(const RelevanceScore& s, const std::string& viewpoint);

}  // namespace vprdf
