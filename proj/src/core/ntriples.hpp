#pragma once

#include <string>
#include <string_view>

#include "core/errors.hpp"
#include "core/rdf.hpp"

namespace vprdf {

// Parses a UTF-8 N-Triples document. Blank lines and '#' comment lines are
// permitted; LF and CRLF line endings are both accepted. Duplicate
// statements collapse. Throws ParseError with 1-based line/column on the
// first offending token; no partial graph is ever returned.
Graph parse_ntriples(std::string_view text);

// One statement per line in canonical order, LF endings, UTF-8.
// parse_ntriples(serialize_ntriples(g)) == g for every graph.
std::string serialize_ntriples(const Graph& g);

}  // namespace vprdf
