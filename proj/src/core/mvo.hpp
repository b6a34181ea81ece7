#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace vprdf {

// In-memory model of an instantiated multi-viewpoints ontology. Elements are
// split into a consensual level (global concepts, attributes, roles, plain
// instances: linked to no viewpoint) and a heterogeneous level (local
// concepts, attributes, roles, and per-viewpoint instance memberships).
// All labels are normalized with normalize_label at build time.

struct LocalAttribute {
  std::string name;
  std::vector<std::string> viewpoints;  // non-empty, sorted, unique
};

struct GlobalConcept {
  std::string name;
  std::optional<std::string> parent;
  std::vector<std::string> global_attributes;
  std::vector<LocalAttribute> local_attributes;
};

struct LocalConcept {
  std::string name;
  std::vector<std::string> viewpoints;  // non-empty
  std::string subsumer;                 // global concept name
  std::optional<std::string> local_parent;
};

struct Role {
  std::string name;
  std::string domain;  // concept name, global or local
  std::string range;
  std::vector<std::string> viewpoints;  // empty = global role

  bool is_global() const { return viewpoints.empty(); }
};

struct Membership {
  std::string local_concept;
  std::string viewpoint;

  bool operator==(const Membership&) const = default;
};

struct Individual {
  std::string name;
  std::string global_concept;
  std::vector<Membership> memberships;              // at most one per viewpoint
  std::map<std::string, std::string> attribute_values;  // kept, not learned from
};

class MvpOntology {
 public:
  // Validates every structural invariant; collections end up sorted by name
  // so that declaration order in the source never matters.
  static MvpOntology build(std::string domain_name,
                           std::vector<std::string> viewpoints,
                           std::vector<GlobalConcept> global_concepts,
                           std::vector<LocalConcept> local_concepts,
                           std::vector<Role> roles,
                           std::vector<Individual> individuals);

  const std::string& domain_name() const { return domain_name_; }
  const std::vector<std::string>& viewpoints() const { return viewpoints_; }
  const std::vector<GlobalConcept>& global_concepts() const { return global_concepts_; }
  const std::vector<LocalConcept>& local_concepts() const { return local_concepts_; }
  const std::vector<Role>& roles() const { return roles_; }
  const std::vector<Individual>& individuals() const { return individuals_; }

  bool operator==(const MvpOntology& other) const;

 private:
  MvpOntology() = default;

  std::string domain_name_;
  std::vector<std::string> viewpoints_;
  std::vector<GlobalConcept> global_concepts_;
  std::vector<LocalConcept> local_concepts_;
  std::vector<Role> roles_;
  std::vector<Individual> individuals_;
};

enum class ElementKind { Concept, Attribute, Role, Individual };

const char* element_kind_name(ElementKind k);
std::optional<ElementKind> element_kind_from_name(const std::string& name);

// One observation per (local element, viewpoint) pair. Global elements
// contribute nothing.
struct LinkObservation {
  std::string label;
  ElementKind kind;
  std::string viewpoint;

  auto operator<=>(const LinkObservation&) const = default;
};

std::vector<LinkObservation> extract_links(const MvpOntology& o);

// MVO file format: a JSON object with format_version "1" and the keys
// domain, viewpoints, global_concepts, local_concepts, roles, individuals.
// Throws ParseError on malformed JSON and ValidationError on invariant
// violations or dangling references.
MvpOntology load_mvo(const std::string& text);
std::string save_mvo(const MvpOntology& o);

}  // namespace vprdf
