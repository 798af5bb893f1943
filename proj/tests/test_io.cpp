#include "zmu/io.hpp"
#include "zmu/catalog.hpp"
#include "zmu/error.hpp"

#include <doctest.h>

#include <sstream>

using namespace zmu;

namespace {

template <typename T, typename Writer, typename Reader>
T round_trip(const T& value, Writer writer, Reader reader) {
    std::ostringstream out;
    writer(out, value);
    std::istringstream in(out.str());
    return reader(in);
}

int parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        read_scheme(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("matrix round trip") {
    BinaryMatrix m(3, 4);
    m.set(0, 1, 1);
    m.set(2, 3, 1);
    m.set(1, 0, 1);
    CHECK(round_trip(m, write_matrix, read_matrix) == m);
}

TEST_CASE("matrix parse accepts spaced digits and flags bad rows") {
    std::istringstream ok("2 3\n1 0 1\n011\n");
    const BinaryMatrix m = read_matrix(ok);
    CHECK(m.get(0, 0) == 1);
    CHECK(m.get(0, 1) == 0);
    CHECK(m.get(1, 2) == 1);

    std::istringstream short_row("2 3\n101\n01\n");
    CHECK_THROWS_AS(read_matrix(short_row), ParseError);

    std::istringstream junk("2 3\n101\n0x1\n");
    try {
        read_matrix(junk);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    std::istringstream trailing("1 1\n1\nleftover\n");
    CHECK_THROWS_AS(read_matrix(trailing), ParseError);
}

TEST_CASE("scheme round trip covers every entry kind") {
    Scheme s(3, {3, 2, 3}, {3, 2, 3});
    s.set_entry(0, 0, ResidueSet(3, {0, 2}));
    s.set_entry(0, 1, ColSym{2, 2});
    s.set_entry(1, 0, RowSym{2, 1});
    BinaryMatrix block(2, 2);
    block.set(0, 1, 1);
    s.set_entry(1, 1, block);
    s.set_entry(2, 2, ResidueSet(3, {1}));
    // (0,2), (2,0) etc. stay Blank.
    const Scheme back = round_trip(s, write_scheme, read_scheme);
    CHECK(back == s);
}

TEST_CASE("uniform schemes omit the size lines") {
    Scheme s(4, 2, 2);
    s.set_entry(0, 1, ResidueSet(4, {1, 3}));
    std::ostringstream out;
    write_scheme(out, s);
    CHECK(out.str() == "zmu-scheme v1 mu=4 rows=2 cols=2\n- 1,3\n- -\n");
    std::istringstream in(out.str());
    CHECK(read_scheme(in) == s);
}

TEST_CASE("empty residue sets read back as blanks") {
    // The writer prints '-' for an empty set, so the round trip lands on
    // Blank; both blow up to the same zero block.
    Scheme s(3, 1, 1);
    s.set_entry(0, 0, ResidueSet(3, {}));
    const Scheme back = round_trip(s, write_scheme, read_scheme);
    CHECK(back.is_blank(0, 0));
    CHECK(blow_up(back) == blow_up(s));
}

TEST_CASE("scheme parse errors carry line numbers") {
    CHECK(parse_error_line("zmu-scheme v2 mu=3 rows=1 cols=1\n-\n") == 1);
    CHECK(parse_error_line("zmu-scheme v1 mu=3 rows=1\n-\n") == 1);
    CHECK(parse_error_line("zmu-scheme v1 mu=3 rows=1 cols=2\n- - -\n") == 2);
    CHECK(parse_error_line("zmu-scheme v1 mu=3 rows=1 cols=1\n5\n") == 2);
    CHECK(parse_error_line("zmu-scheme v1 mu=3 rows=2 cols=1\n-\n") == 3);
    CHECK(parse_error_line("zmu-scheme v1 mu=3 rows=1 cols=1\nraw:e1\n") == 2);
    CHECK(parse_error_line(
              "zmu-scheme v1 mu=3 rows=1 cols=1\nraw:e1\nmatrix e2\n3 3\n000\n000\n000\n") == 3);
    // Raw block of the wrong shape for its cell.
    CHECK(parse_error_line(
              "zmu-scheme v1 mu=3 rows=1 cols=1\nraw:e1\nmatrix e1\n2 2\n00\n00\n") == 4);
}

TEST_CASE("scheme parser tolerates blank lines and comments do not exist") {
    std::istringstream in("\nzmu-scheme v1 mu=2 rows=1 cols=1\n\n0,1\n\n");
    const Scheme s = read_scheme(in);
    CHECK(s.set_at(0, 0) == ResidueSet(2, {0, 1}));
}

TEST_CASE("voltage graph round trip") {
    const VoltageGraph g(5, 3, {{0, 1, 2}, {1, 1, 1}, {0, 2, 4}});
    CHECK(round_trip(g, write_voltage_graph, read_voltage_graph) == g);
}

TEST_CASE("voltage graph parse errors") {
    std::istringstream bad_header("voltage-graph v1 mu=0 n=2\n");
    CHECK_THROWS_AS(read_voltage_graph(bad_header), ParseError);

    std::istringstream bad_endpoint("voltage-graph v1 mu=5 n=2\n0 7 1\n");
    try {
        read_voltage_graph(bad_endpoint);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("sniff_input dispatches on the leading token") {
    CHECK(sniff_input("zmu-scheme v1 mu=2 rows=0 cols=0\n") == InputKind::scheme);
    CHECK(sniff_input("\n\nvoltage-graph v1 mu=3 n=1\n") == InputKind::voltage);
    CHECK(sniff_input("2 2\n10\n01\n") == InputKind::matrix);
    CHECK_THROWS_AS(sniff_input("who knows\n"), ParseError);
    CHECK_THROWS_AS(sniff_input(""), ParseError);
}

TEST_CASE("catalog fixtures survive serialization") {
    for (const auto& name : {"petersen", "T96", "affine_9_4_12_3", "reye"}) {
        const Scheme& s = named(name).scheme;
        CHECK(round_trip(s, write_scheme, read_scheme) == s);
    }
}
