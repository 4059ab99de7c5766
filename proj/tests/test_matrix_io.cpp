#include "hpit/error.hpp"
#include "hpit/matrix_io.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <string>

namespace hpit {
namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an hpit::Error";
    return ErrorKind::Io;
}

std::string message_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

TEST(MatrixText, ParsesFixture) {
    const auto m = parse_cost_matrix("3\n4 1 3\n2 0 5\n3 2 2\n");
    EXPECT_EQ(m, CostMatrix::from_rows({{4, 1, 3}, {2, 0, 5}, {3, 2, 2}}));
}

TEST(MatrixText, AcceptsSignsExponentsAndBlankLines) {
    const auto m = parse_cost_matrix("\n2\n  -1.5e1 +2\n\n3.25   -0\n");
    EXPECT_EQ(m(0, 0), -15.0);
    EXPECT_EQ(m(0, 1), 2.0);
    EXPECT_EQ(m(1, 0), 3.25);
}

TEST(MatrixText, ErrorsNameLineAndColumn) {
    EXPECT_EQ(message_of([] { (void)parse_cost_matrix("2\n1 2\n3 x4\n"); }),
              "line 3, column 3: expected a decimal number, got 'x4'");
    EXPECT_NE(message_of([] { (void)parse_cost_matrix("2\n1 2 3\n3 4\n"); }).find("line 2, column 5"),
              std::string::npos);
    EXPECT_NE(message_of([] { (void)parse_cost_matrix("3\n1 2 3\n"); }).find("expected 3 matrix rows"),
              std::string::npos);
    EXPECT_EQ(kind_of([] { (void)parse_cost_matrix("two\n"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { (void)parse_cost_matrix("1\nnan\n"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { (void)parse_cost_matrix("0\n"); }), ErrorKind::EmptyInput);
    EXPECT_EQ(kind_of([] { (void)parse_cost_matrix(""); }), ErrorKind::Parse);
}

TEST(MatrixJson, ParsesAndRejects) {
    const auto m = parse_cost_matrix(R"({"size": 2, "entries": [[1, 2], [3.5, -4]]})");
    EXPECT_EQ(m, CostMatrix::from_rows({{1, 2}, {3.5, -4}}));
    EXPECT_EQ(kind_of([] { (void)parse_cost_matrix(R"({"size": 2, "entries": [[1, 2]]})"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { (void)parse_cost_matrix(R"({"size": 2, "entries": [[1, 2], [3, "a"]]})"); }),
              ErrorKind::Parse);
    EXPECT_NE(message_of([] { (void)parse_cost_matrix("{\n  \"size\": 2,\n  oops\n}"); }).find("line 3"),
              std::string::npos);
}

TEST(MatrixFormats, RoundTripProperty) {
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        const auto m = test::uniform_matrix(1 + rng.below(12), rng, -1e6, 1e6);
        EXPECT_EQ(parse_cost_matrix(format_cost_matrix_text(m)), m);
        EXPECT_EQ(parse_cost_matrix(cost_matrix_to_json(m).dump()), m);
    }
}

TEST(AssignmentJson, SchemaFields) {
    AssignmentResult r;
    r.permutation = Permutation({1, 0});
    r.total_cost = -3.5;
    r.iterations = 4;
    r.elapsed = std::chrono::nanoseconds(1234);
    const auto j = assignment_to_json(r);
    EXPECT_EQ(j["permutation"], nlohmann::json::array({1, 0}));
    EXPECT_EQ(j["total_cost"], -3.5);
    EXPECT_EQ(j["iterations"], 4);
    EXPECT_EQ(j["elapsed_ns"], 1234);
    EXPECT_EQ(j.size(), 4u);
}

TEST(MatrixFile, MissingFileIsIoError) {
    EXPECT_EQ(kind_of([] { (void)load_cost_matrix("/nonexistent/matrix.txt"); }), ErrorKind::Io);
}

}  // namespace
}  // namespace hpit
