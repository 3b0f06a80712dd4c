#include <turan/text_io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace turan {

namespace {

struct Line {
    int number;
    std::vector<long long> tokens;
};

// Splits into non-blank, non-comment lines of integer tokens.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;

        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || raw[first] == '#') {
            if (end == text.size()) break;
            continue;
        }

        Line line{number, {}};
        std::size_t i = first;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            if (i >= raw.size()) break;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            std::string_view tok = raw.substr(i, j - i);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError(number, "non-integer token '" + std::string(tok) + "'");
            line.tokens.push_back(value);
            i = j;
        }
        lines.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return lines;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text)
{
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "missing header line \"k n\"");

    const Line &header = lines.front();
    if (header.tokens.size() != 2) throw ParseError(header.number, "header must be \"k n\"");
    long long k = header.tokens[0], n = header.tokens[1];
    if (k < 1 || k > 64) throw ParseError(header.number, "uniformity k must be in [1, 64]");
    if (n < 0 || n > 1'000'000) throw ParseError(header.number, "vertex count n out of range");

    std::vector<std::vector<Vertex>> edges;
    std::map<std::vector<Vertex>, int> seen;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line &line = lines[li];
        if (static_cast<long long>(line.tokens.size()) != k)
            throw ParseError(line.number, "edge has " + std::to_string(line.tokens.size()) + " vertices, expected " +
                                              std::to_string(k));
        std::vector<Vertex> e;
        for (long long v : line.tokens) {
            if (v < 1 || v > n)
                throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range [1, " + std::to_string(n) +
                                                  "]");
            e.push_back(static_cast<Vertex>(v));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line.number, "repeated vertex in edge");
        auto [it, inserted] = seen.emplace(e, line.number);
        if (!inserted)
            throw ParseError(line.number, "duplicate edge (first given on line " + std::to_string(it->second) + ")");
        edges.push_back(std::move(e));
    }
    return Hypergraph(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

Palette parse_palette(std::string_view text)
{
    std::vector<ColourTriple> triples;
    std::map<ColourTriple, int> seen;
    for (const Line &line : tokenize(text)) {
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "triple has " + std::to_string(line.tokens.size()) + " colours, expected 3");
        ColourTriple t{};
        for (int i = 0; i < 3; ++i) {
            long long c = line.tokens[static_cast<std::size_t>(i)];
            if (c < 0 || c > 2'000'000'000) throw ParseError(line.number, "colour " + std::to_string(c) + " out of range");
            t[static_cast<std::size_t>(i)] = static_cast<Colour>(c);
        }
        auto [it, inserted] = seen.emplace(t, line.number);
        if (!inserted)
            throw ParseError(line.number, "duplicate triple (first given on line " + std::to_string(it->second) + ")");
        triples.push_back(t);
    }
    return Palette(std::move(triples));
}

std::string serialize_hypergraph(const Hypergraph &graph)
{
    std::ostringstream out;
    out << graph.uniformity() << ' ' << graph.order() << '\n';
    for (std::size_t i = 0; i < graph.size(); ++i) {
        auto e = graph.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
        out << '\n';
    }
    return out.str();
}

std::string serialize_palette(const Palette &palette)
{
    std::ostringstream out;
    for (const auto &t : palette.triples()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    return out.str();
}

std::string read_text_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

Hypergraph read_hypergraph_file(const std::string &path)
{
    try {
        return parse_hypergraph(read_text_file(path));
    } catch (const ParseError &e) {
        throw ParseError(e.line(), e.detail(), path);
    }
}

Palette read_palette_file(const std::string &path)
{
    try {
        return parse_palette(read_text_file(path));
    } catch (const ParseError &e) {
        throw ParseError(e.line(), e.detail(), path);
    }
}

} // namespace turan
