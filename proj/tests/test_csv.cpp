#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "core/csv.hpp"
#include "core/errors.hpp"
#include "support.hpp"

using namespace banmf;
using testutil::random_bool;
using testutil::random_dense;
using testutil::TempFile;

TEST_CASE("bool matrix round-trips through CSV") {
    const BoolMatrix m = random_bool(6, 9, 71);
    std::stringstream buf;
    write_bool_csv(m, buf);
    CHECK(read_bool_csv(buf) == m);
}

TEST_CASE("bool matrix round-trips through a CSV file") {
    const BoolMatrix m = random_bool(4, 3, 72);
    TempFile f("roundtrip_bool");
    write_bool_csv(m, f.path());
    CHECK(read_bool_csv(f.path()) == m);
}

TEST_CASE("dense matrix round-trips bit-exactly through CSV") {
    DenseMatrix m = random_dense(5, 4, 73);
    m(0, 0) = 0.1;
    m(0, 1) = 1.0 / 3.0;
    m(1, 0) = 1e-17;
    m(1, 1) = 12345678.90123;
    std::stringstream buf;
    write_dense_csv(m, buf);
    const DenseMatrix back = read_dense_csv(buf);
    REQUIRE(back.same_shape(m));
    for (std::size_t p = 0; p < m.size(); ++p) CHECK(back.data[p] == m.data[p]);
}

TEST_CASE("skip_header drops the first line unparsed") {
    std::stringstream buf("col_a,col_b\n1,0\n0,1\n");
    const BoolMatrix m = read_bool_csv(buf, true);
    REQUIRE(m.rows == 2);
    REQUIRE(m.cols == 2);
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 1) == 1);
}

TEST_CASE("non-binary token reports its line and field location") {
    std::stringstream buf("1,0,1,0,1\n0,1,0,1,0\n1,0,1,1,2\n");
    try {
        read_bool_csv(buf);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 5);
        const std::string msg = e.what();
        CHECK(msg.find("'2'") != std::string::npos);
        CHECK(msg.find("(3,5)") != std::string::npos);
    }
}

TEST_CASE("missing-value token asks for pre-filtered input") {
    std::stringstream buf("1,0\n?,1\n");
    try {
        read_bool_csv(buf);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 1);
        const std::string msg = e.what();
        CHECK(msg.find("missing value") != std::string::npos);
        CHECK(msg.find("filter") != std::string::npos);
    }
}

TEST_CASE("ragged rows are rejected") {
    std::stringstream buf("1,0,1\n0,1\n");
    CHECK_THROWS_AS(read_bool_csv(buf), ParseError);
}

TEST_CASE("empty input is rejected") {
    std::stringstream empty("");
    CHECK_THROWS_AS(read_bool_csv(empty), ParseError);
    std::stringstream only_blank("\n\n");
    CHECK_THROWS_AS(read_bool_csv(only_blank), ParseError);
}

TEST_CASE("interior blank lines are rejected, trailing ones are not") {
    std::stringstream interior("1,0\n\n0,1\n");
    CHECK_THROWS_AS(read_bool_csv(interior), ParseError);
    std::stringstream trailing("1,0\n0,1\n\n\n");
    CHECK(read_bool_csv(trailing).rows == 2);
}

TEST_CASE("unopenable path raises an I/O error") {
    CHECK_THROWS_AS(read_bool_csv(std::string("/nonexistent/dir/x.csv")), IoError);
    CHECK_THROWS_AS(write_bool_csv(BoolMatrix(1, 1), std::string("/nonexistent/dir/x.csv")),
                    IoError);
}

TEST_CASE("dense reader accepts scientific notation and rejects trailing junk") {
    std::stringstream ok("1e-3,2.5E2\n-0.5,0\n");
    const DenseMatrix m = read_dense_csv(ok);
    CHECK(m(0, 0) == 1e-3);
    CHECK(m(0, 1) == 2.5e2);
    CHECK(m(1, 0) == -0.5);

    std::stringstream bad("1.5x,2\n");
    CHECK_THROWS_AS(read_dense_csv(bad), ParseError);
}

TEST_CASE("bool reader rejects numeric tokens other than 0 and 1") {
    std::stringstream bad("1,1.0\n");
    CHECK_THROWS_AS(read_bool_csv(bad), ParseError);
}

TEST_CASE("fields tolerate surrounding spaces and carriage returns") {
    std::stringstream buf(" 1 , 0\r\n0,\t1\r\n");
    const BoolMatrix m = read_bool_csv(buf);
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 1) == 0);
    CHECK(m(1, 1) == 1);
}

TEST_CASE("format_double writes shortest round-trip decimals") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.0) == "0");
    const double v = 1.0 / 3.0;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("write_text_file writes verbatim and fails on bad paths") {
    TempFile f("verbatim");
    write_text_file(f.path(), "a,b\n1,2\n");
    std::ifstream in(f.path());
    std::stringstream got;
    got << in.rdbuf();
    CHECK(got.str() == "a,b\n1,2\n");
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/f.txt", "x"), IoError);
}
