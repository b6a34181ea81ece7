#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/mvo.hpp"

namespace vprdf {

struct Prediction {
  std::string viewpoint;
  double confidence;  // support / containment, in (0, 1]

  bool operator==(const Prediction&) const = default;
};

// Frequency model over term↔viewpoint links. Counts are per-ontology
// presence: an ontology contributes at most 1 to any cell regardless of how
// often a link occurs inside it. A label's confidence for a viewpoint is
// support[label,viewpoint] / containment[label]; predictions are the
// viewpoints clearing both the relative threshold theta and the absolute
// min_support floor.
class ViewpointModel {
 public:
  static constexpr const char* kFormatVersion = "1";
  static constexpr const char* kNormalization = "lowercase_underscore_v1";

  // Counts link presence across the given ontologies. Ontologies are
  // expected to share one domain; mismatches produce warnings, not failures.
  static ViewpointModel train(const std::vector<MvpOntology>& ontologies,
                              double theta, int min_support,
                              std::vector<std::string>* warnings = nullptr);

  // All viewpoints whose confidence for the label clears the thresholds,
  // sorted by descending confidence then name. Unknown labels predict
  // nothing. The label must already be normalized.
  std::vector<Prediction> predict_term(const std::string& label) const;
  std::vector<Prediction> predict_term(const std::string& label, double theta,
                                       int min_support) const;

  // Predicate matching is gated on the label having been observed as a role
  // or attribute; labels seen exclusively as concepts or individuals predict
  // nothing in predicate position.
  std::vector<Prediction> predict_predicate(const std::string& label) const;
  std::vector<Prediction> predict_predicate(const std::string& label, double theta,
                                            int min_support) const;

  std::string save() const;
  static ViewpointModel load(const std::string& text);

  double theta() const { return theta_; }
  int min_support() const { return min_support_; }
  std::size_t label_count() const { return containment_.size(); }
  std::vector<std::string> viewpoints() const;

  int containment(const std::string& label) const;
  int support(const std::string& label, const std::string& viewpoint) const;

  const std::map<std::string, int>& containment_map() const { return containment_; }
  const std::map<std::string, std::map<std::string, int>>& support_map() const {
    return support_;
  }
  const std::map<std::string, std::map<ElementKind, int>>& kind_map() const {
    return kinds_;
  }

  bool operator==(const ViewpointModel&) const = default;

 private:
  void validate() const;

  double theta_ = 0.5;
  int min_support_ = 1;
  std::map<std::string, int> containment_;
  std::map<std::string, std::map<std::string, int>> support_;
  std::map<std::string, std::map<ElementKind, int>> kinds_;
};

}  // namespace vprdf
