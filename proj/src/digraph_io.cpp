#include "diforest/digraph_io.hpp"

#include <fstream>
#include <sstream>

namespace diforest {

Multidigraph parse_digraph(const std::string& text) {
    Multidigraph d;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool any_line = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue; // blank
        if (head[0] == '#') continue;
        any_line = true;
        if (head == "vertex") {
            std::string id, extra;
            if (!(ls >> id)) throw ParseError(line_no, "vertex line needs an identifier");
            if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
            d.add_vertex(id);
        } else if (head == "edge") {
            std::string id, src, dst, extra;
            if (!(ls >> id >> src >> dst))
                throw ParseError(line_no, "edge line needs <id> <source> <target>");
            if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
            try {
                d.add_edge(id, src, dst);
            } catch (const InvalidInput& e) {
                throw ParseError(line_no, e.what());
            }
        } else {
            throw ParseError(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!any_line) throw ParseError(line_no, "no vertex or edge lines found");
    return d;
}

Multidigraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_digraph(buf.str());
}

std::string render_digraph(const Multidigraph& d) {
    std::ostringstream out;
    std::vector<bool> covered(static_cast<std::size_t>(d.vertex_count()), false);
    for (const Edge& e : d.edges()) {
        covered[static_cast<std::size_t>(e.src)] = true;
        covered[static_cast<std::size_t>(e.dst)] = true;
    }
    for (int v = 0; v < d.vertex_count(); ++v)
        if (!covered[static_cast<std::size_t>(v)]) out << "vertex " << d.vertex_id(v) << "\n";
    for (const Edge& e : d.edges())
        out << "edge " << e.id << " " << d.vertex_id(e.src) << " " << d.vertex_id(e.dst) << "\n";
    return out.str();
}

void save_digraph(const Multidigraph& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << render_digraph(d);
}

} // namespace diforest
