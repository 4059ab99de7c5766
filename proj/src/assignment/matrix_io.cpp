#include "hpit/matrix_io.hpp"

#include "hpit/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hpit {

namespace {

struct Token {
    std::string_view text;
    std::size_t line = 0;
    std::size_t column = 0;
};

// Whitespace tokenizer that remembers 1-based line/column of each token.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view content = text.substr(pos, end - pos);
        std::vector<Token> tokens;
        std::size_t k = 0;
        while (k < content.size()) {
            while (k < content.size() && std::isspace(static_cast<unsigned char>(content[k]))) ++k;
            if (k >= content.size()) break;
            const std::size_t begin = k;
            while (k < content.size() && !std::isspace(static_cast<unsigned char>(content[k]))) ++k;
            tokens.push_back({content.substr(begin, k - begin), line, begin + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        if (end == text.size()) break;
        pos = end + 1;
        ++line;
    }
    return lines;
}

[[noreturn]] void parse_fail(const Token& t, const std::string& message) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " +
                                      message);
}

double parse_double(const Token& t) {
    double value = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (!t.text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) parse_fail(t, "expected a decimal number, got '" + std::string(t.text) + "'");
    if (!std::isfinite(value)) parse_fail(t, "non-finite value '" + std::string(t.text) + "'");
    return value;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

CostMatrix parse_cost_matrix_text(std::string_view text) {
    const auto lines = tokenize_lines(text);
    if (lines.empty()) throw Error(ErrorKind::Parse, "line 1, column 1: empty input, expected matrix size");

    const auto& header = lines.front();
    if (header.size() != 1) parse_fail(header[1], "expected a single size value on the first line");
    std::size_t size = 0;
    {
        const Token& t = header.front();
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), size);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
            parse_fail(t, "expected a non-negative integer size, got '" + std::string(t.text) + "'");
        }
    }
    if (size == 0) throw Error(ErrorKind::EmptyInput, "cost matrix size is 0");
    if (lines.size() - 1 != size) {
        const Token& where = lines.size() > size + 1 ? lines[size + 1].front() : lines.back().back();
        parse_fail(where, "expected " + std::to_string(size) + " matrix rows, found " + std::to_string(lines.size() - 1));
    }

    CostMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
        const auto& row = lines[i + 1];
        if (row.size() != size) {
            const Token& where = row.size() > size ? row[size] : row.back();
            parse_fail(where, "expected " + std::to_string(size) + " values in row, found " + std::to_string(row.size()));
        }
        for (std::size_t j = 0; j < size; ++j) m(i, j) = parse_double(row[j]);
    }
    return m;
}

std::string format_cost_matrix_text(const CostMatrix& matrix) {
    std::ostringstream out;
    out.precision(17);
    out << matrix.size() << '\n';
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            if (j) out << ' ';
            out << matrix(i, j);
        }
        out << '\n';
    }
    return out.str();
}

CostMatrix cost_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("entries")) {
        throw Error(ErrorKind::Parse, "cost matrix JSON needs \"size\" and \"entries\"");
    }
    if (!j["size"].is_number_unsigned() && !j["size"].is_number_integer()) {
        throw Error(ErrorKind::Parse, "\"size\" must be an integer");
    }
    const auto size = j["size"].get<long long>();
    if (size < 0) throw Error(ErrorKind::Parse, "\"size\" must be non-negative");
    if (size == 0) throw Error(ErrorKind::EmptyInput, "cost matrix size is 0");
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(size)) {
        throw Error(ErrorKind::Parse, "\"entries\" must be an array of " + std::to_string(size) + " rows");
    }
    CostMatrix m(static_cast<std::size_t>(size));
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != m.size()) {
            throw Error(ErrorKind::Parse, "entries[" + std::to_string(i) + "] must hold " + std::to_string(size) +
                                              " numbers");
        }
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (!row[k].is_number()) {
                throw Error(ErrorKind::Parse,
                            "entries[" + std::to_string(i) + "][" + std::to_string(k) + "] is not a number");
            }
            m(i, k) = row[k].get<double>();
        }
    }
    return m;
}

nlohmann::json cost_matrix_to_json(const CostMatrix& matrix) {
    return {{"size", matrix.size()}, {"entries", matrix.to_rows()}};
}

CostMatrix parse_cost_matrix(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                              ": invalid JSON");
        }
        return cost_matrix_from_json(j);
    }
    return parse_cost_matrix_text(text);
}

CostMatrix load_cost_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_cost_matrix(buffer.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

nlohmann::json assignment_to_json(const AssignmentResult& result) {
    const auto mapping = result.permutation.mapping();
    return {{"permutation", std::vector<std::size_t>(mapping.begin(), mapping.end())},
            {"total_cost", result.total_cost},
            {"iterations", result.iterations},
            {"elapsed_ns", result.elapsed.count()}};
}

}  // namespace hpit
