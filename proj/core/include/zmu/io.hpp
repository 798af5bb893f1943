#pragma once

#include "zmu/binary_matrix.hpp"
#include "zmu/error.hpp"
#include "zmu/scheme.hpp"
#include "zmu/voltage.hpp"

#include <iosfwd>
#include <string>

namespace zmu {

/// Text formats. Matrix: "rows cols" header, then one 0/1 digit row per line
/// (spaces between digits tolerated on input). Scheme: header
/// "zmu-scheme v1 mu=<mu> rows=<m> cols=<n>", optional "row_heights="/
/// "col_widths=" lines, one grid line per scheme row with cells "-",
/// "1,4", "r<s>:<i>", "c<s>:<i>" or "raw:<name>", and one
/// "matrix <name>" section per raw block after the grid. Voltage graph:
/// header "voltage-graph v1 mu=<mu> n=<n>", then "from to voltage" lines.
/// Readers throw ParseError with a 1-based line number.

BinaryMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const BinaryMatrix& matrix);

Scheme read_scheme(std::istream& in);
void write_scheme(std::ostream& out, const Scheme& scheme);

VoltageGraph read_voltage_graph(std::istream& in);
void write_voltage_graph(std::ostream& out, const VoltageGraph& graph);

enum class InputKind { matrix, scheme, voltage };

/// Decides by the header line which reader applies.
InputKind sniff_input(const std::string& text);

} // namespace zmu
