#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "lhc/multigraph.hpp"

namespace lhc {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// graph6 carries simple graphs only; writing a multigraph throws.
Multigraph read_graph6(std::string_view text);
std::string write_graph6(const Multigraph& g);

/// sparse6 may repeat edges, so parallel edges survive a round trip. Loops are rejected.
Multigraph read_sparse6(std::string_view text);
std::string write_sparse6(const Multigraph& g);

/// Edge list: one "u v" pair per line, repeated lines give parallel edges.
/// '#' starts a comment; "# vertices N" fixes the vertex count.
Multigraph read_edgelist(std::istream& in);
Multigraph read_edgelist_string(std::string_view text);
void write_edgelist(std::ostream& out, const Multigraph& g);
std::string write_edgelist_string(const Multigraph& g);

/// Dispatches on format name: "graph6" (also accepts sparse6 lines), "sparse6", "edgelist".
Multigraph read_graph(std::string_view text, std::string_view format);

}  // namespace lhc
