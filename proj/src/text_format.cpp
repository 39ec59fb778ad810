#include "smallcover/text_format.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace smallcover {

namespace {

std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

} // namespace

BitMatrix parse_matrix(std::string_view text) {
    const auto lines = content_lines(text);
    const std::size_t n = lines.size();
    if (n > kMaxDimension) throw std::invalid_argument("parse_matrix: too many rows");
    std::vector<std::uint64_t> rows(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (lines[i].size() != n) {
            throw std::invalid_argument("parse_matrix: line " + std::to_string(i + 1) + " has " +
                                        std::to_string(lines[i].size()) + " characters, expected " +
                                        std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const char c = lines[i][j];
            if (c == '1') {
                rows[i] |= std::uint64_t{1} << j;
            } else if (c != '0') {
                throw std::invalid_argument("parse_matrix: unexpected character '" +
                                            std::string(1, c) + "' on line " + std::to_string(i + 1));
            }
        }
    }
    return BitMatrix::from_rows(n, rows);
}

std::string format_matrix(const BitMatrix& m) {
    std::string out;
    out.reserve(m.size() * (m.size() + 1));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out.push_back(m.at(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

Digraph parse_digraph(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw std::invalid_argument("parse_digraph: missing vertex count");

    auto parse_fields = [](const std::string& line, std::size_t expected, std::size_t line_no) {
        std::istringstream in(line);
        std::vector<long long> fields;
        long long v = 0;
        while (in >> v) fields.push_back(v);
        if (!in.eof() || fields.size() != expected) {
            throw std::invalid_argument("parse_digraph: malformed line " + std::to_string(line_no) +
                                        ": '" + line + "'");
        }
        for (auto f : fields) {
            if (f < 0) throw std::invalid_argument("parse_digraph: negative value on line " +
                                                   std::to_string(line_no));
        }
        return fields;
    };

    const auto header = parse_fields(lines[0], 1, 1);
    const auto n = static_cast<std::size_t>(header[0]);
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = parse_fields(lines[i], 2, i + 1);
        edges.emplace_back(static_cast<std::size_t>(f[0]), static_cast<std::size_t>(f[1]));
    }
    return Digraph(n, edges);
}

std::string format_digraph(const Digraph& g) {
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace smallcover
