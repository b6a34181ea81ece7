#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "core/rdf.hpp"
#include "core/vocabulary.hpp"

namespace vprdf {

// The four conversion situations, plus their combinations with a linked
// predicate. A statement's base case reflects which of its subject/object
// matched the model; the predicate flag may co-occur with any base.
enum class BaseCase { None, Subject, Object, Both };

struct CaseLabel {
  BaseCase base = BaseCase::None;
  bool predicate_linked = false;

  // "none", "subject_linked", ..., "both_linked+predicate_linked"
  std::string name() const;

  bool operator==(const CaseLabel&) const = default;
};

struct Classification {
  CaseLabel label;
  std::vector<Prediction> subject_predictions;
  std::vector<Prediction> object_predictions;
  std::vector<Prediction> predicate_predictions;
};

struct ConversionConfig {
  VpVocabulary vocabulary;
  bool emit_schema = false;
  // Emit reified statement nodes instead of direct link triples.
  bool reified = false;
  std::optional<double> theta;     // overrides the model's threshold
  std::optional<int> min_support;  // overrides the model's floor
};

struct ConversionReport {
  std::map<std::string, std::size_t> case_counts;  // keyed by CaseLabel::name() + "passthrough"
  std::size_t emitted_statement_count = 0;  // distinct (resource, viewpoint) links
  std::size_t minted_class_count = 0;       // distinct predicate classes minted
  std::set<std::string> unmatched_labels;
  std::set<std::string> viewpoints_used;

  std::size_t input_triple_count() const;
};

// Case names in table order, "passthrough" last.
const std::vector<std::string>& report_case_names();
std::string format_report(const ConversionReport& r);

Classification classify_triple(const Triple& t, const ViewpointModel& m,
                               const ConversionConfig& cfg = {});

// Rewrites one classified statement. The original triple always comes first;
// link statements, minted predicate-class triples, and typing triples follow.
std::vector<Triple> convert_triple(const Triple& t, const Classification& classification,
                                   const ConversionConfig& cfg);

// Whole-document conversion: originals are preserved, statements already
// touching the vocabulary namespace (and previously minted predicate-class
// helpers) pass through unclassified, and the result is deduplicated in
// canonical order. With emit_schema the vocabulary's subclass and
// domain/range axioms are included.
std::pair<Graph, ConversionReport> convert_graph(const Graph& g, const ViewpointModel& m,
                                                 const ConversionConfig& cfg);

// (Class_X, X_value, o) shape produced by predicate-case minting.
bool is_minted_helper(const Triple& t);

// Minted class IRI for a predicate: "Class_" + normalized local name, in the
// predicate's own namespace.
std::string minted_class_iri(const Term& predicate);
std::string minted_value_predicate_iri(const Term& predicate);

std::vector<Triple> schema_axioms(const VpVocabulary& vocab);

}  // namespace vprdf
