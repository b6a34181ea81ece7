#include "core/ntriples.hpp"

#include <cctype>

namespace vprdf {

namespace {

// Cursor over a single physical line. Columns are 1-based byte offsets.
class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& expected) const {
    fail_at(expected, column());
  }

  [[noreturn]] void fail_at(const std::string& expected, std::size_t column) const {
    throw ParseError(expected, line_no_, column);
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  void require_ws() {
    if (at_end() || (peek() != ' ' && peek() != '\t'))
      fail("expected whitespace between terms");
    skip_ws();
  }

  char take() { return line_[pos_++]; }

  bool try_take(char c) {
    if (at_end() || peek() != c) return false;
    ++pos_;
    return true;
  }

  Term parse_subject() {
    if (at_end()) fail("expected subject");
    if (peek() == '"') fail("literal in subject position");
    if (peek() == '_') return parse_blank();
    if (peek() == '<') return parse_iri();
    fail("expected IRI or blank node subject");
  }

  Term parse_predicate() {
    if (at_end()) fail("expected predicate");
    if (peek() != '<') fail("expected IRI predicate");
    return parse_iri();
  }

  Term parse_object() {
    if (at_end()) fail("expected object");
    if (peek() == '<') return parse_iri();
    if (peek() == '_') return parse_blank();
    if (peek() == '"') return parse_literal();
    fail("expected IRI, blank node, or literal object");
  }

  void parse_terminator() {
    skip_ws();
    if (at_end() || peek() != '.') fail("expected '.'");
    take();
    skip_ws();
    if (!at_end() && peek() != '#') fail("unexpected content after '.'");
  }

 private:
  Term parse_iri() {
    std::size_t start_col = column();
    take();  // '<'
    std::string value;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      char c = take();
      if (c == '>') break;
      if (c == '\\') {
        std::size_t esc_col = column() - 1;
        if (at_end()) fail("unterminated escape in IRI");
        char e = take();
        if (e == 'u')
          append_codepoint(value, parse_hex(4), esc_col);
        else if (e == 'U')
          append_codepoint(value, parse_hex(8), esc_col);
        else
          fail_at("invalid escape in IRI", esc_col);
        continue;
      }
      unsigned char uc = static_cast<unsigned char>(c);
      if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`')
        fail_at("forbidden character in IRI", column() - 1);
      value += c;
    }
    try {
      return Term::iri(std::move(value));
    } catch (const std::invalid_argument&) {
      fail_at("relative IRI (missing scheme)", start_col);
    }
  }

  Term parse_blank() {
    std::size_t start_col = column();
    take();  // '_'
    if (!try_take(':')) fail("expected ':' after '_' in blank node");
    std::string label;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      label += take();
    if (label.empty()) fail_at("empty blank node label", start_col);
    return Term::blank(std::move(label));
  }

  Term parse_literal() {
    take();  // '"'
    std::string lexical;
    while (true) {
      if (at_end()) fail("unterminated literal");
      char c = take();
      if (c == '"') break;
      if (c == '\\') {
        std::size_t esc_col = column() - 1;
        if (at_end()) fail("unterminated escape in literal");
        char e = take();
        switch (e) {
          case '"': lexical += '"'; break;
          case '\\': lexical += '\\'; break;
          case 'n': lexical += '\n'; break;
          case 't': lexical += '\t'; break;
          case 'r': lexical += '\r'; break;
          case 'u': append_codepoint(lexical, parse_hex(4), esc_col); break;
          case 'U': append_codepoint(lexical, parse_hex(8), esc_col); break;
          default:
            fail_at(std::string("invalid escape '\\") + e + "' in literal", esc_col);
        }
        continue;
      }
      lexical += c;
    }
    // Optional language tag or datatype.
    if (try_take('@')) {
      std::size_t tag_col = column();
      std::string tag;
      while (!at_end() &&
             (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
        tag += take();
      try {
        return Term::lang_literal(std::move(lexical), std::move(tag));
      } catch (const std::invalid_argument&) {
        fail_at("malformed language tag", tag_col);
      }
    }
    if (try_take('^')) {
      if (!try_take('^')) fail("expected '^^' before datatype IRI");
      if (at_end() || peek() != '<') fail("expected datatype IRI");
      Term dt = parse_iri();
      return Term::typed_literal(std::move(lexical), dt.value());
    }
    return Term::literal(std::move(lexical));
  }

  unsigned long parse_hex(int digits) {
    unsigned long code = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end()) fail("truncated unicode escape");
      char c = take();
      code <<= 4;
      if (c >= '0' && c <= '9')
        code |= static_cast<unsigned long>(c - '0');
      else if (c >= 'a' && c <= 'f')
        code |= static_cast<unsigned long>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F')
        code |= static_cast<unsigned long>(c - 'A' + 10);
      else
        fail_at("invalid hex digit in unicode escape", column() - 1);
    }
    return code;
  }

  void append_codepoint(std::string& out, unsigned long code, std::size_t esc_col) {
    if (code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF))
      fail_at("unicode escape out of range", esc_col);
    if (code < 0x80) {
      out += static_cast<char>(code);
    } else if (code < 0x800) {
      out += static_cast<char>(0xC0 | (code >> 6));
      out += static_cast<char>(0x80 | (code & 0x3F));
    } else if (code < 0x10000) {
      out += static_cast<char>(0xE0 | (code >> 12));
      out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (code & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (code >> 18));
      out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (code & 0x3F));
    }
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_ntriples(std::string_view text) {
  std::vector<Triple> triples;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    if (begin == text.size() && line_no > 0) break;
    std::size_t end = text.find('\n', begin);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(begin)
                                : text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    LineScanner scan(line, line_no);
    scan.skip_ws();
    if (!scan.at_end() && scan.peek() != '#') {
      Term subject = scan.parse_subject();
      scan.require_ws();
      Term predicate = scan.parse_predicate();
      scan.require_ws();
      Term object = scan.parse_object();
      scan.parse_terminator();
      triples.emplace_back(std::move(subject), std::move(predicate), std::move(object));
    }

    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return Graph(std::move(triples));
}

std::string serialize_ntriples(const Graph& g) {
  std::string out;
  for (const std::string& line : g.lines()) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace vprdf
