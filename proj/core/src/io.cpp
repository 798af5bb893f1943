#include "zmu/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace zmu {

namespace {

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

int parse_int(const std::string& token, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected an integer, got '" + token + "'");
    return value;
}

struct LineReader {
    std::istream& in;
    int line_no = 0;

    bool next(std::string& out) {
        if (!std::getline(in, out)) return false;
        ++line_no;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return true;
    }

    /// Next non-blank line; false at end of input.
    bool next_content(std::string& out) {
        while (next(out))
            if (!is_blank(out)) return true;
        return false;
    }

    void expect_end() {
        std::string line;
        if (next_content(line)) throw ParseError(line_no, "unexpected trailing content");
    }
};

/// Key=value headers are parsed with '=' treated as a separator.
std::vector<std::string> header_tokens(const std::string& line) {
    std::string spaced = line;
    std::replace(spaced.begin(), spaced.end(), '=', ' ');
    return tokenize(spaced);
}

BinaryMatrix read_matrix_body(LineReader& reader, int rows, int cols) {
    if (rows < 0 || cols < 0) throw ParseError(reader.line_no, "negative matrix size");
    BinaryMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        std::string line;
        if (!reader.next_content(line))
            throw ParseError(reader.line_no + 1, "unexpected end of matrix body");
        int c = 0;
        for (const char ch : line) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch != '0' && ch != '1')
                throw ParseError(reader.line_no, "matrix rows consist of 0/1 digits");
            if (c >= cols)
                throw ParseError(reader.line_no,
                                 "matrix row longer than " + std::to_string(cols) + " entries");
            if (ch == '1') m.set(r, c, true);
            ++c;
        }
        if (c != cols)
            throw ParseError(reader.line_no,
                             "expected " + std::to_string(cols) + " entries, got " +
                                 std::to_string(c));
    }
    return m;
}

BinaryMatrix read_matrix_from(LineReader& reader) {
    std::string line;
    if (!reader.next_content(line)) throw ParseError(reader.line_no + 1, "empty matrix input");
    const auto tokens = tokenize(line);
    if (tokens.size() != 2)
        throw ParseError(reader.line_no, "matrix header is 'rows cols'");
    const int rows = parse_int(tokens[0], reader.line_no);
    const int cols = parse_int(tokens[1], reader.line_no);
    return read_matrix_body(reader, rows, cols);
}

std::vector<int> parse_size_list(const std::vector<std::string>& tokens, std::size_t count,
                                 int line) {
    if (tokens.size() != count + 1)
        throw ParseError(line, "expected " + std::to_string(count) + " sizes");
    std::vector<int> sizes;
    for (std::size_t i = 1; i < tokens.size(); ++i)
        sizes.push_back(parse_int(tokens[i], line));
    return sizes;
}

ResidueSet parse_residue_cell(const std::string& token, int mu, int line) {
    std::vector<int> members;
    std::size_t pos = 0;
    while (pos <= token.size()) {
        const std::size_t comma = std::min(token.find(',', pos), token.size());
        const int r = parse_int(token.substr(pos, comma - pos), line);
        if (r < 0 || r >= mu)
            throw ParseError(line, "residue " + std::to_string(r) + " out of range for mu=" +
                                       std::to_string(mu));
        members.push_back(r);
        pos = comma + 1;
    }
    return ResidueSet(mu, members);
}

/// Parses "r4:1" / "c4:1" into (size, index).
std::pair<int, int> parse_symbol_cell(const std::string& token, int line) {
    const std::size_t colon = token.find(':');
    if (colon == std::string::npos)
        throw ParseError(line, "symbol cells look like r<size>:<index>");
    return {parse_int(token.substr(1, colon - 1), line),
            parse_int(token.substr(colon + 1), line)};
}

} // namespace

BinaryMatrix read_matrix(std::istream& in) {
    LineReader reader{in};
    BinaryMatrix m = read_matrix_from(reader);
    reader.expect_end();
    return m;
}

void write_matrix(std::ostream& out, const BinaryMatrix& matrix) {
    out << matrix.rows() << ' ' << matrix.cols() << '\n';
    for (int r = 0; r < matrix.rows(); ++r) {
        for (int c = 0; c < matrix.cols(); ++c) out << (matrix.get(r, c) ? '1' : '0');
        out << '\n';
    }
}

Scheme read_scheme(std::istream& in) {
    // Non-blank lines with their positions, consumed through a cursor.
    std::vector<std::pair<int, std::string>> lines;
    {
        LineReader reader{in};
        std::string line;
        while (reader.next(line))
            if (!is_blank(line)) lines.emplace_back(reader.line_no, line);
    }
    std::size_t cursor = 0;
    auto take = [&](const std::string& what) -> const std::pair<int, std::string>& {
        if (cursor >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().first + 1,
                             "unexpected end of input, expected " + what);
        return lines[cursor++];
    };

    const auto& [header_line, header_text] = take("scheme header");
    const auto header = header_tokens(header_text);
    if (header.size() != 8 || header[0] != "zmu-scheme" || header[1] != "v1" ||
        header[2] != "mu" || header[4] != "rows" || header[6] != "cols")
        throw ParseError(header_line,
                         "scheme header is 'zmu-scheme v1 mu=<mu> rows=<m> cols=<n>'");
    const int mu = parse_int(header[3], header_line);
    const int rows = parse_int(header[5], header_line);
    const int cols = parse_int(header[7], header_line);
    if (mu < 1 || rows < 0 || cols < 0) throw ParseError(header_line, "bad scheme sizes");

    std::vector<int> heights(static_cast<std::size_t>(rows), mu);
    std::vector<int> widths(static_cast<std::size_t>(cols), mu);
    while (cursor < lines.size()) {
        const auto tokens = header_tokens(lines[cursor].second);
        if (tokens.empty() || (tokens[0] != "row_heights" && tokens[0] != "col_widths")) break;
        const int line_no = lines[cursor].first;
        ++cursor;
        if (tokens[0] == "row_heights")
            heights = parse_size_list(tokens, static_cast<std::size_t>(rows), line_no);
        else
            widths = parse_size_list(tokens, static_cast<std::size_t>(cols), line_no);
    }

    Scheme scheme = [&] {
        try {
            return Scheme(mu, heights, widths);
        } catch (const Error& e) {
            throw ParseError(header_line, e.what());
        }
    }();

    std::map<std::string, std::vector<std::pair<int, int>>> raw_cells;
    for (int i = 0; i < rows; ++i) {
        const auto& [line_no, text] = take("a scheme grid row");
        const auto tokens = tokenize(text);
        if (static_cast<int>(tokens.size()) != cols)
            throw ParseError(line_no, "expected " + std::to_string(cols) + " cells, got " +
                                          std::to_string(tokens.size()));
        for (int j = 0; j < cols; ++j) {
            const std::string& cell = tokens[j];
            try {
                if (cell == "-") {
                    continue;
                } else if (cell.rfind("raw:", 0) == 0) {
                    raw_cells[cell.substr(4)].emplace_back(i, j);
                } else if (cell[0] == 'r' && cell.size() > 1 &&
                           std::isdigit(static_cast<unsigned char>(cell[1]))) {
                    const auto [height, index] = parse_symbol_cell(cell, line_no);
                    scheme.set_entry(i, j, RowSym{height, index});
                } else if (cell[0] == 'c' && cell.size() > 1 &&
                           std::isdigit(static_cast<unsigned char>(cell[1]))) {
                    const auto [width, index] = parse_symbol_cell(cell, line_no);
                    scheme.set_entry(i, j, ColSym{width, index});
                } else {
                    scheme.set_entry(i, j, parse_residue_cell(cell, mu, line_no));
                }
            } catch (const Error& e) {
                throw ParseError(line_no, e.what());
            }
        }
    }

    // Raw blocks follow as named matrix sections.
    auto pending = raw_cells;
    while (cursor < lines.size()) {
        const auto& [line_no, text] = lines[cursor++];
        const auto section = tokenize(text);
        if (section.size() != 2 || section[0] != "matrix")
            throw ParseError(line_no, "expected 'matrix <name>' section");
        const auto found = pending.find(section[1]);
        if (found == pending.end())
            throw ParseError(line_no, "matrix section '" + section[1] +
                                          "' does not match any raw: cell");
        const auto& [size_line, size_text] = take("a matrix header");
        const auto size_tokens = tokenize(size_text);
        if (size_tokens.size() != 2)
            throw ParseError(size_line, "matrix header is 'rows cols'");
        const int block_rows = parse_int(size_tokens[0], size_line);
        const int block_cols = parse_int(size_tokens[1], size_line);
        if (block_rows < 0 || block_cols < 0) throw ParseError(size_line, "negative matrix size");
        BinaryMatrix block(block_rows, block_cols);
        for (int r = 0; r < block_rows; ++r) {
            const auto& [row_line, row_text] = take("a matrix row");
            int c = 0;
            for (const char ch : row_text) {
                if (std::isspace(static_cast<unsigned char>(ch))) continue;
                if (ch != '0' && ch != '1')
                    throw ParseError(row_line, "matrix rows consist of 0/1 digits");
                if (c >= block_cols) throw ParseError(row_line, "matrix row too long");
                if (ch == '1') block.set(r, c, true);
                ++c;
            }
            if (c != block_cols)
                throw ParseError(row_line, "expected " + std::to_string(block_cols) +
                                               " entries, got " + std::to_string(c));
        }
        for (const auto& [i, j] : found->second) {
            try {
                scheme.set_entry(i, j, block);
            } catch (const Error& e) {
                throw ParseError(size_line, e.what());
            }
        }
        pending.erase(found);
    }
    if (!pending.empty())
        throw ParseError(lines.empty() ? 1 : lines.back().first,
                         "missing matrix section '" + pending.begin()->first + "'");
    return scheme;
}

void write_scheme(std::ostream& out, const Scheme& scheme) {
    out << "zmu-scheme v1 mu=" << scheme.modulus() << " rows=" << scheme.rows()
        << " cols=" << scheme.cols() << '\n';
    const auto uniform = [&](const std::vector<int>& sizes) {
        return std::all_of(sizes.begin(), sizes.end(),
                           [&](int s) { return s == scheme.modulus(); });
    };
    if (!uniform(scheme.row_heights())) {
        out << "row_heights=";
        for (const int h : scheme.row_heights()) out << ' ' << h;
        out << '\n';
    }
    if (!uniform(scheme.col_widths())) {
        out << "col_widths=";
        for (const int w : scheme.col_widths()) out << ' ' << w;
        out << '\n';
    }

    std::vector<std::pair<std::string, const BinaryMatrix*>> raws;
    for (int i = 0; i < scheme.rows(); ++i) {
        for (int j = 0; j < scheme.cols(); ++j) {
            if (j > 0) out << ' ';
            const SchemeEntry& entry = scheme.entry(i, j);
            if (std::holds_alternative<Blank>(entry)) {
                out << '-';
            } else if (const auto* set = std::get_if<ResidueSet>(&entry)) {
                if (set->empty()) {
                    out << '-';
                } else {
                    for (std::size_t k = 0; k < set->members().size(); ++k)
                        out << (k ? "," : "") << set->members()[k];
                }
            } else if (const auto* row = std::get_if<RowSym>(&entry)) {
                out << 'r' << row->height << ':' << row->index;
            } else if (const auto* col = std::get_if<ColSym>(&entry)) {
                out << 'c' << col->width << ':' << col->index;
            } else {
                const std::string name = "e" + std::to_string(raws.size() + 1);
                raws.emplace_back(name, &std::get<BinaryMatrix>(entry));
                out << "raw:" << name;
            }
        }
        out << '\n';
    }
    for (const auto& [name, block] : raws) {
        out << "matrix " << name << '\n';
        write_matrix(out, *block);
    }
}

VoltageGraph read_voltage_graph(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next_content(line))
        throw ParseError(reader.line_no + 1, "empty voltage graph input");
    const auto header = header_tokens(line);
    if (header.size() != 6 || header[0] != "voltage-graph" || header[1] != "v1" ||
        header[2] != "mu" || header[4] != "n")
        throw ParseError(reader.line_no, "voltage header is 'voltage-graph v1 mu=<mu> n=<n>'");
    const int mu = parse_int(header[3], reader.line_no);
    const int n = parse_int(header[5], reader.line_no);

    std::vector<Arc> arcs;
    while (reader.next_content(line)) {
        const auto tokens = tokenize(line);
        if (tokens.size() != 3)
            throw ParseError(reader.line_no, "arc lines are 'from to voltage'");
        Arc arc;
        arc.from = parse_int(tokens[0], reader.line_no);
        arc.to = parse_int(tokens[1], reader.line_no);
        if (arc.from < 0 || arc.from >= n || arc.to < 0 || arc.to >= n)
            throw ParseError(reader.line_no, "arc endpoint out of range");
        arc.voltage = mod_reduce(parse_int(tokens[2], reader.line_no), mu < 1 ? 1 : mu);
        arcs.push_back(arc);
    }
    try {
        return VoltageGraph(mu, n, std::move(arcs));
    } catch (const Error& e) {
        throw ParseError(1, e.what());
    }
}

void write_voltage_graph(std::ostream& out, const VoltageGraph& graph) {
    out << "voltage-graph v1 mu=" << graph.modulus() << " n=" << graph.vertex_count() << '\n';
    for (const Arc& arc : graph.arcs())
        out << arc.from << ' ' << arc.to << ' ' << arc.voltage << '\n';
}

InputKind sniff_input(const std::string& text) {
    std::istringstream in(text);
    LineReader reader{in};
    std::string line;
    if (!reader.next_content(line)) throw ParseError(1, "empty input");
    const auto tokens = tokenize(line);
    if (tokens[0] == "zmu-scheme") return InputKind::scheme;
    if (tokens[0] == "voltage-graph") return InputKind::voltage;
    if (std::isdigit(static_cast<unsigned char>(tokens[0][0]))) return InputKind::matrix;
    throw ParseError(reader.line_no, "unrecognized input header '" + tokens[0] + "'");
}

} // namespace zmu
