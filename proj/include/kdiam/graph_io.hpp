#pragma once

#include <iosfwd>
#include <string>

#include "kdiam/graph.hpp"

namespace kdiam {

// CSV edge list: one `u,v,line[,length]` per line, length defaulting to 1.
// Lines starting with '#' are comments, except a leading `# nodes=N` which
// fixes the node count (otherwise it is the largest id + 1).
colored_graph read_csv(std::istream& in);
void write_csv(colored_graph const& g, std::ostream& out);

// {"nodes": n, "edges": [[u, v, "line", length], ...]}. Lengths may be
// numbers or "p/q" strings; the length element is optional.
colored_graph read_json(std::istream& in);
void write_json(colored_graph const& g, std::ostream& out);

// Reads CSV or JSON (detected from the first non-blank character). A path of
// "-" reads standard input.
colored_graph read_graph_file(std::string const& path);
colored_graph read_graph(std::istream& in);

}  // namespace kdiam
