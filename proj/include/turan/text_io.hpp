#pragma once

#include <turan/hypergraph.hpp>
#include <turan/palette.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace turan {

/// Malformed text input; `line()` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &what, const std::string &source = "")
        : std::runtime_error((source.empty() ? "" : source + ": ") +
                             (line > 0 ? "line " + std::to_string(line) + ": " + what : what)),
          line_(line), detail_(what)
    {
    }
    const std::string &detail() const { return detail_; }
    int line() const { return line_; }

private:
    int line_;
    std::string detail_;
};

// Hypergraph format: a header line "k n", then one edge per line as k
// whitespace-separated vertex indices in 1..n. Palette format: one ordered
// triple "a b c" of non-negative integers per line. In both, blank lines and
// lines starting with '#' are ignored.

Hypergraph parse_hypergraph(std::string_view text);
Palette parse_palette(std::string_view text);

std::string serialize_hypergraph(const Hypergraph &graph);
std::string serialize_palette(const Palette &palette);

Hypergraph read_hypergraph_file(const std::string &path);
Palette read_palette_file(const std::string &path);
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view contents);

} // namespace turan
