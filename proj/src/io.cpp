#include "tonelab/io.hpp"

#include "tonelab/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace tonelab {

namespace {

// Splits non-comment lines into whitespace-separated tokens.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line with at least one token; false at end of input.
    bool next(std::vector<std::string_view>& tokens)
    {
        while (std::getline(in_, line_)) {
            ++number_;
            if (auto hash = line_.find('#'); hash != std::string::npos) line_.resize(hash);
            if (!line_.empty() && line_.back() == '\r')
                throw FormatError(where() + "CR line endings are not accepted");
            tokens.clear();
            std::size_t i = 0;
            while (i < line_.size()) {
                while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t')) ++i;
                std::size_t j = i;
                while (j < line_.size() && line_[j] != ' ' && line_[j] != '\t') ++j;
                if (j > i) tokens.emplace_back(line_.data() + i, j - i);
                i = j;
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }

    std::string where() const { return "line " + std::to_string(number_) + ": "; }

    long long integer(std::string_view token) const
    {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw FormatError(where() + "expected an integer, got '" + std::string(token) + "'");
        return value;
    }

private:
    std::istream& in_;
    std::string line_;
    int number_ = 0;
};

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return in;
}

}  // namespace

Graph read_edge_list(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok) || tok.size() != 2) throw FormatError("missing 'n m' header");
    const long long n = reader.integer(tok[0]);
    const long long m = reader.integer(tok[1]);
    if (n < 0 || m < 0 || n > (1LL << 30)) throw FormatError(reader.where() + "bad header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (reader.next(tok)) {
        if (tok.size() != 2) throw FormatError(reader.where() + "expected 'u v'");
        const long long u = reader.integer(tok[0]);
        const long long v = reader.integer(tok[1]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError(reader.where() + "vertex id out of range");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (static_cast<long long>(edges.size()) != m)
        throw FormatError("header promises " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(std::ostream& out, const MultiGraph& g)
{
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

ToneColoring read_coloring(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string_view> tok;
    if (!reader.next(tok) || tok.size() != 3) throw FormatError("missing 't k n' header");
    const long long t = reader.integer(tok[0]);
    const long long k = reader.integer(tok[1]);
    const long long n = reader.integer(tok[2]);
    if (t < 1 || k < 0 || n < 0 || t > 4096 || n > (1LL << 30))
        throw FormatError(reader.where() + "bad header");
    ToneColoring coloring(static_cast<int>(n), static_cast<int>(t), static_cast<int>(k));
    long long seen = 0;
    while (reader.next(tok)) {
        if (tok[0].empty() || tok[0].back() != ':')
            throw FormatError(reader.where() + "expected 'v:'");
        const long long v = reader.integer(tok[0].substr(0, tok[0].size() - 1));
        if (v < 0 || v >= n) throw FormatError(reader.where() + "vertex id out of range");
        if (coloring.has_label(static_cast<Vertex>(v)))
            throw FormatError(reader.where() + "vertex " + std::to_string(v) + " labeled twice");
        if (static_cast<long long>(tok.size()) - 1 != t)
            throw FormatError(reader.where() + "expected " + std::to_string(t) + " colors");
        std::vector<Color> colors;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            const long long c = reader.integer(tok[i]);
            if (c < 1 || c > (1LL << 30)) throw FormatError(reader.where() + "colors are 1-based");
            if (!colors.empty() && c <= colors.back())
                throw FormatError(reader.where() + "colors must be strictly increasing");
            colors.push_back(static_cast<Color>(c));
        }
        coloring.assign(static_cast<Vertex>(v), Label(std::move(colors)));
        ++seen;
    }
    if (seen != n)
        throw FormatError("expected " + std::to_string(n) + " labels, found " + std::to_string(seen));
    return coloring;
}

void write_coloring(std::ostream& out, const ToneColoring& coloring)
{
    if (!coloring.is_total()) throw PartialColoring("cannot write a partial coloring");
    out << coloring.t() << ' ' << coloring.k() << ' ' << coloring.n() << '\n';
    for (Vertex v = 0; v < coloring.n(); ++v) {
        out << v << ':';
        for (Color c : coloring.label(v)->colors()) out << ' ' << c;
        out << '\n';
    }
}

DegreeSequence read_degrees(std::istream& in)
{
    LineReader reader(in);
    std::vector<std::string_view> tok;
    DegreeSequence d;
    while (reader.next(tok)) {
        if (tok.size() != 1) throw FormatError(reader.where() + "expected one degree per line");
        const long long x = reader.integer(tok[0]);
        if (x < 0 || x > (1LL << 30)) throw FormatError(reader.where() + "bad degree");
        d.degrees.push_back(static_cast<int>(x));
    }
    return d;
}

Graph load_edge_list(const std::string& path)
{
    auto in = open(path);
    return read_edge_list(in);
}

ToneColoring load_coloring(const std::string& path)
{
    auto in = open(path);
    return read_coloring(in);
}

}  // namespace tonelab
