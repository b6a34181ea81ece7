#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vprdf {

enum class TermKind { Iri, Blank, Literal };

// An RDF node: IRI, blank node, or literal. Immutable after construction.
// Construction enforces the node-level invariants (absolute IRI, blank-node
// label charset, at most one of datatype/language on a literal).
class Term {
 public:
  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical);
  static Term typed_literal(std::string lexical, std::string datatype_iri);
  static Term lang_literal(std::string lexical, std::string language_tag);

  TermKind kind() const { return kind_; }
  const std::string& value() const { return value_; }
  const std::string& datatype() const { return datatype_; }  // empty when unset
  const std::string& language() const { return language_; }  // empty when unset

  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::Blank; }
  bool is_literal() const { return kind_ == TermKind::Literal; }

  bool operator==(const Term&) const = default;

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

// Ordered (subject, predicate, object). The predicate is always an IRI and
// the subject is never a literal.
struct Triple {
  Triple(Term subject, Term predicate, Term object);

  Term subject;
  Term predicate;
  Term object;

  bool operator==(const Triple&) const = default;
};

// Serialized N-Triples form of a single term / statement line (no newline).
std::string ntriples_form(const Term& t);
std::string ntriples_line(const Triple& t);

// A deduplicated set of triples held in the canonical total order:
// lexicographic on the (subject, predicate, object) serialized forms.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Triple> triples);

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(const Triple& t) const;

  const std::vector<Triple>& triples() const { return triples_; }
  // Canonical statement lines, parallel to triples().
  const std::vector<std::string>& lines() const { return lines_; }

  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  bool operator==(const Graph& other) const { return lines_ == other.lines_; }

 private:
  std::vector<Triple> triples_;
  std::vector<std::string> lines_;
};

// Label normalization shared by the RDF side and the ontology side:
// ASCII lowercase, '-' to '_', surrounding whitespace stripped.
// Scheme identifier: "lowercase_underscore_v1".
std::string normalize_label(std::string_view raw);

// Normalized label of an IRI (substring after the last '#', else the last
// '/', else the last ':') or of a literal's lexical form. Blank nodes and
// empty results carry no label.
std::optional<std::string> local_name(const Term& t);

// IRI prefix complementing the raw local part (up to and including the last
// '#' or '/' or ':'). Used when minting sibling IRIs next to an existing one.
std::string iri_namespace(const std::string& iri);
std::string iri_local_part(const std::string& iri);

}  // namespace vprdf
