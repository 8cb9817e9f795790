#pragma once

#include <iosfwd>
#include <string>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// UHG v1: line 1 is `k n m`; the next m lines hold k space-separated
// 1-based vertex ids each. Malformed lines raise parse_error with the line
// number; semantic violations surface as the usual construction errors.
Hypergraph read_uhg(std::istream& in);
Hypergraph load_uhg(const std::string& path);

void write_uhg(std::ostream& out, const Hypergraph& g);
void save_uhg(const std::string& path, const Hypergraph& g);

}  // namespace hyperspec
