#pragma once

#include <string>

#include "core/rdf.hpp"

namespace vprdf {

// Well-known W3C IRIs, fully expanded.
namespace rdf_ns {
inline const std::string kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const std::string kProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline const std::string kStatement = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement";
inline const std::string kSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline const std::string kDomain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline const std::string kRange = "http://www.w3.org/2000/01/rdf-schema#range";
inline const std::string kResource = "http://www.w3.org/2000/01/rdf-schema#Resource";
}  // namespace rdf_ns

// The viewpoint vocabulary: three classes (Viewpoint, Predicate_with_Viewpoint,
// Statement), the three statement-component properties, and the canonical
// predicate that links a resource to a viewpoint. All seven IRIs live under
// one configurable namespace; viewpoint instances are minted there too.
class VpVocabulary {
 public:
  static constexpr const char* kDefaultNamespace = "http://vprdf.example/vocab#";

  VpVocabulary() : VpVocabulary(kDefaultNamespace) {}
  explicit VpVocabulary(std::string ns);

  const std::string& ns() const { return ns_; }

  const std::string& class_viewpoint() const { return class_viewpoint_; }
  const std::string& class_pred_with_vp() const { return class_pred_with_vp_; }
  const std::string& class_statement() const { return class_statement_; }
  const std::string& prop_subject_stmt() const { return prop_subject_stmt_; }
  const std::string& prop_predicate_stmt() const { return prop_predicate_stmt_; }
  const std::string& prop_object_stmt() const { return prop_object_stmt_; }
  const std::string& link_predicate() const { return link_predicate_; }

  // IRI of a viewpoint instance; the name is normalized first.
  std::string viewpoint_iri(const std::string& viewpoint_name) const;

  // Deterministic statement-node IRI for the reified link (resource, viewpoint).
  std::string statement_iri(const Term& resource, const std::string& viewpoint_name) const;

  bool in_namespace(const std::string& iri) const;
  bool mentions(const Triple& t) const;

  bool operator==(const VpVocabulary&) const = default;

 private:
  std::string ns_;
  std::string class_viewpoint_;
  std::string class_pred_with_vp_;
  std::string class_statement_;
  std::string prop_subject_stmt_;
  std::string prop_predicate_stmt_;
  std::string prop_object_stmt_;
  std::string link_predicate_;
};

}  // namespace vprdf
