// Coloring file format: first line "n=<order>", then one blue edge "u v" per
// line (0-indexed). Blank lines and lines starting with '#' are skipped.
#ifndef CLIQUEPACK_COLORING_IO_HPP
#define CLIQUEPACK_COLORING_IO_HPP

#include <iosfwd>
#include <string>

#include "cliquepack/packing.hpp"

namespace cliquepack {

Coloring read_coloring(std::istream& in);
Coloring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const Coloring& coloring);
void write_coloring_file(const std::string& path, const Coloring& coloring);

}  // namespace cliquepack

#endif
