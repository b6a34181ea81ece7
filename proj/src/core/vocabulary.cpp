#include "core/vocabulary.hpp"

#include <cstdint>
#include <stdexcept>

namespace vprdf {

namespace {

// FNV-1a, 64-bit. Statement-node names must be stable across runs and
// platforms, which rules out std::hash.
std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

VpVocabulary::VpVocabulary(std::string ns) : ns_(std::move(ns)) {
  if (ns_.empty()) throw std::invalid_argument("vocabulary namespace is empty");
  Term::iri(ns_ + "x");  // must form valid absolute IRIs
  class_viewpoint_ = ns_ + "Viewpoint";
  class_pred_with_vp_ = ns_ + "Predicate_with_Viewpoint";
  class_statement_ = ns_ + "Statement";
  prop_subject_stmt_ = ns_ + "Subject_Statement";
  prop_predicate_stmt_ = ns_ + "Predicate_Statement";
  prop_object_stmt_ = ns_ + "Object_Statement";
  link_predicate_ = ns_ + "linked_to_viewpoint";
}

std::string VpVocabulary::viewpoint_iri(const std::string& viewpoint_name) const {
  return ns_ + normalize_label(viewpoint_name);
}

std::string VpVocabulary::statement_iri(const Term& resource,
                                        const std::string& viewpoint_name) const {
  std::string key = ntriples_form(resource) + "\n" + normalize_label(viewpoint_name);
  return ns_ + "statement_" + hex64(fnv1a(key));
}

bool VpVocabulary::in_namespace(const std::string& iri) const {
  return iri.size() > ns_.size() && iri.compare(0, ns_.size(), ns_) == 0;
}

bool VpVocabulary::mentions(const Triple& t) const {
  auto hit = [this](const Term& term) {
    return term.is_iri() && in_namespace(term.value());
  };
  return hit(t.subject) || hit(t.predicate) || hit(t.object);
}

}  // namespace vprdf
