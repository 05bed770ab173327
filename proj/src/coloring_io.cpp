#include "cliquepack/coloring_io.hpp"

#include <fstream>
#include <sstream>

namespace cliquepack {

Coloring read_coloring(std::istream& in) {
    std::string line;
    int n = -1;
    Graph blue;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (n < 0) {
            if (line.rfind("n=", 0) != 0) throw parse_error("coloring file must start with n=<int>");
            try {
                n = std::stoi(line.substr(2));
            } catch (const std::exception&) {
                throw parse_error("bad order in coloring header: " + line);
            }
            if (n < 1 || n > kMaxVertices) throw capacity_error("coloring order must be in 1..16");
            blue = Graph(n);
            continue;
        }
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw parse_error("bad edge line: " + line);
        std::string rest;
        if (ls >> rest) throw parse_error("trailing tokens on edge line: " + line);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw parse_error("edge endpoints out of range: " + line);
        blue.add_edge(u, v);
    }
    if (n < 0) throw parse_error("empty coloring file");
    return blue;
}

Coloring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open coloring file: " + path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& coloring) {
    out << "n=" << coloring.order() << "\n";
    for (int v = 0; v < coloring.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (coloring.has_edge(u, v)) out << u << " " << v << "\n";
}

void write_coloring_file(const std::string& path, const Coloring& coloring) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open output file: " + path);
    write_coloring(out, coloring);
}

}  // namespace cliquepack
