#include "lindq/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "lindq/errors.hpp"

namespace lindq {

namespace {

// Next line with content, comments stripped. Returns false at end of input.
bool next_line(std::istream& in, std::string& line, int& number)
{
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return true;
    }
    return false;
}

int parse_int(const std::string& token, int line)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + token + "'");
    }
    if (used != token.size())
        throw ParseError(line, "expected an integer, got '" + token + "'");
    return value;
}

}  // namespace

Digraph read_graph(std::istream& in)
{
    std::string line;
    int number = 0;
    if (!next_line(in, line, number))
        throw ParseError(number, "missing header");

    std::istringstream header(line);
    std::string kind;
    std::string count;
    std::string extra;
    header >> kind >> count;
    if ((kind != "digraph" && kind != "matrix") || count.empty() || (header >> extra))
        throw ParseError(number, "header must be 'digraph <n>' or 'matrix <n>'");
    const int n = parse_int(count, number);
    if (n < 0)
        throw ParseError(number, "negative vertex count");

    Digraph g(n);
    if (kind == "digraph") {
        while (next_line(in, line, number)) {
            std::istringstream row(line);
            std::string a;
            std::string b;
            row >> a >> b;
            if (b.empty() || (row >> extra))
                throw ParseError(number, "expected 'u v'");
            const int u = parse_int(a, number);
            const int v = parse_int(b, number);
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(number, "vertex out of range");
            if (u == v)
                throw ParseError(number, "self-loop");
            g.add_arc(u, v);
        }
        return g;
    }

    for (int u = 0; u < n; ++u) {
        if (!next_line(in, line, number))
            throw ParseError(number, "expected " + std::to_string(n) + " matrix rows");
        std::istringstream row(line);
        std::string token;
        int v = 0;
        while (row >> token) {
            if (v >= n)
                throw ParseError(number, "too many entries in matrix row");
            const int x = parse_int(token, number);
            if (x != 0 && x != 1)
                throw ParseError(number, "matrix entries must be 0 or 1");
            if (x == 1) {
                if (u == v)
                    throw ParseError(number, "self-loop");
                g.add_arc(u, v);
            }
            ++v;
        }
        if (v != n)
            throw ParseError(number, "matrix row has " + std::to_string(v) + " entries, expected " +
                                         std::to_string(n));
    }
    if (next_line(in, line, number))
        throw ParseError(number, "trailing content after matrix");
    return g;
}

Digraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Digraph& g)
{
    out << "digraph " << g.size() << '\n';
    for (auto [u, v] : g.arcs())
        out << u << ' ' << v << '\n';
}

std::string graph_to_string(const Digraph& g)
{
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

void write_hkq_labels(std::ostream& out, const HkqGraph& h)
{
    out << "# H_k^q labels q=" << h.q() << " k=" << h.k() << " n=" << h.size() << '\n';
    for (int x = 0; x < h.size(); ++x)
        out << x << " : " << h.label_string(x) << '\n';
}

}  // namespace lindq
