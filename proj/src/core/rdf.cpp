#include "core/rdf.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace vprdf {

namespace {

bool is_scheme_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

bool is_scheme_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.';
}

// Absolute IRI: a scheme followed by ':'.
bool has_scheme(const std::string& iri) {
  if (iri.empty() || !is_scheme_start(iri[0])) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    if (iri[i] == ':') return true;
    if (!is_scheme_char(iri[i])) return false;
  }
  return false;
}

// Characters that would break the serialized <...> form. Keeping them out of
// Term::iri guarantees serialization round-trips byte-exactly.
bool is_forbidden_iri_char(unsigned char c) {
  if (c <= 0x20 || c == 0x7f) return true;
  switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
    case '\\':
      return true;
    default:
      return false;
  }
}

bool is_blank_label_char(unsigned char c) {
  return std::isalnum(c) || c == '_';
}

void append_u16_escape(std::string& out, unsigned char c) {
  static const char* hex = "0123456789ABCDEF";
  out += "\\u00";
  out += hex[(c >> 4) & 0xf];
  out += hex[c & 0xf];
}

}  // namespace

Term Term::iri(std::string value) {
  if (!has_scheme(value))
    throw std::invalid_argument("IRI is not absolute: \"" + value + "\"");
  for (char c : value)
    if (is_forbidden_iri_char(static_cast<unsigned char>(c)))
      throw std::invalid_argument("IRI contains forbidden character: \"" + value + "\"");
  return Term(TermKind::Iri, std::move(value), "", "");
}

Term Term::blank(std::string label) {
  if (label.empty()) throw std::invalid_argument("blank node label is empty");
  for (char c : label)
    if (!is_blank_label_char(static_cast<unsigned char>(c)))
      throw std::invalid_argument("blank node label has invalid character: \"" + label + "\"");
  return Term(TermKind::Blank, std::move(label), "", "");
}

Term Term::literal(std::string lexical) {
  return Term(TermKind::Literal, std::move(lexical), "", "");
}

Term Term::typed_literal(std::string lexical, std::string datatype_iri) {
  if (!has_scheme(datatype_iri))
    throw std::invalid_argument("literal datatype is not an absolute IRI: \"" + datatype_iri + "\"");
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype_iri), "");
}

Term Term::lang_literal(std::string lexical, std::string language_tag) {
  if (language_tag.empty()) throw std::invalid_argument("empty language tag");
  bool expect_alpha_block = true;
  for (std::size_t i = 0; i < language_tag.size(); ++i) {
    char c = language_tag[i];
    if (c == '-') {
      if (i == 0 || language_tag[i - 1] == '-' || i + 1 == language_tag.size())
        throw std::invalid_argument("malformed language tag: \"" + language_tag + "\"");
      expect_alpha_block = false;
      continue;
    }
    bool ok = expect_alpha_block ? std::isalpha(static_cast<unsigned char>(c))
                                 : std::isalnum(static_cast<unsigned char>(c));
    if (!ok)
      throw std::invalid_argument("malformed language tag: \"" + language_tag + "\"");
  }
  return Term(TermKind::Literal, std::move(lexical), "", std::move(language_tag));
}

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (!predicate.is_iri())
    throw std::invalid_argument("triple predicate must be an IRI");
  if (subject.is_literal())
    throw std::invalid_argument("triple subject must not be a literal");
}

std::string ntriples_form(const Term& t) {
  switch (t.kind()) {
    case TermKind::Iri:
      return "<" + t.value() + ">";
    case TermKind::Blank:
      return "_:" + t.value();
    case TermKind::Literal: {
      std::string out;
      out.reserve(t.value().size() + 2);
      out += '"';
      for (char ch : t.value()) {
        unsigned char c = static_cast<unsigned char>(ch);
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\r': out += "\\r"; break;
          case '\t': out += "\\t"; break;
          default:
            if (c < 0x20)
              append_u16_escape(out, c);
            else
              out += ch;
        }
      }
      out += '"';
      if (!t.language().empty()) {
        out += '@';
        out += t.language();
      } else if (!t.datatype().empty()) {
        out += "^^<" + t.datatype() + ">";
      }
      return out;
    }
  }
  return {};  // unreachable
}

std::string ntriples_line(const Triple& t) {
  return ntriples_form(t.subject) + " " + ntriples_form(t.predicate) + " " +
         ntriples_form(t.object) + " .";
}

Graph::Graph(std::vector<Triple> triples) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i)
    keyed.emplace_back(ntriples_line(triples[i]), i);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  triples_.reserve(keyed.size());
  lines_.reserve(keyed.size());
  for (auto& [line, idx] : keyed) {
    if (!lines_.empty() && lines_.back() == line) continue;
    triples_.push_back(std::move(triples[idx]));
    lines_.push_back(std::move(line));
  }
}

bool Graph::contains(const Triple& t) const {
  return std::binary_search(lines_.begin(), lines_.end(), ntriples_line(t));
}

std::string normalize_label(std::string_view raw) {
  std::size_t begin = 0, end = raw.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    char c = raw[i];
    if (c == '-')
      out += '_';
    else
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string iri_local_part(const std::string& iri) {
  std::size_t pos = iri.find_last_of('#');
  if (pos == std::string::npos) pos = iri.find_last_of('/');
  if (pos == std::string::npos) pos = iri.find_last_of(':');
  if (pos == std::string::npos) return iri;
  return iri.substr(pos + 1);
}

std::string iri_namespace(const std::string& iri) {
  return iri.substr(0, iri.size() - iri_local_part(iri).size());
}

std::optional<std::string> local_name(const Term& t) {
  switch (t.kind()) {
    case TermKind::Blank:
      return std::nullopt;
    case TermKind::Iri: {
      std::string label = normalize_label(iri_local_part(t.value()));
      if (label.empty()) return std::nullopt;
      return label;
    }
    case TermKind::Literal: {
      std::string label = normalize_label(t.value());
      if (label.empty()) return std::nullopt;
      return label;
    }
  }
  return std::nullopt;
}

}  // namespace vprdf
