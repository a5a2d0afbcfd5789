#include "core/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace banmf {

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t line, std::size_t field) {
    std::ostringstream os;
    os << what << " at (" << line << "," << field << ")";
    throw ParseError(os.str(), line, field);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Parses one token into *out. Shared by both readers so location reporting
// and the missing-value message stay consistent.
template <typename T, typename ParseFn>
void parse_token(std::string_view tok, std::size_t line, std::size_t field, const char* expected,
                 T* out, ParseFn parse) {
    tok = trim(tok);
    if (tok == "?") {
        std::ostringstream os;
        os << "missing value '?' at (" << line << "," << field
           << "): filter out rows with missing data before running";
        throw ParseError(os.str(), line, field);
    }
    if (tok.empty()) fail("empty field", line, field);
    if (!parse(tok, out)) {
        std::ostringstream os;
        os << "invalid token '" << std::string(tok) << "', expected " << expected;
        fail(os.str(), line, field);
    }
}

template <typename T, typename ParseFn>
void read_matrix(std::istream& in, bool skip_header, const char* expected, ParseFn parse,
                 std::size_t* rows, std::size_t* cols, std::vector<T>* data) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();

    std::size_t first_line = 0;
    if (skip_header) {
        if (lines.empty()) throw ParseError("missing header line", 1, 1);
        first_line = 1;
    }
    *rows = 0;
    *cols = 0;
    for (std::size_t li = first_line; li < lines.size(); ++li) {
        const std::string& row = lines[li];
        const std::size_t line_no = li + 1;
        if (trim(row).empty()) fail("blank line inside matrix", line_no, 1);
        std::size_t field_no = 0;
        std::size_t pos = 0;
        while (true) {
            ++field_no;
            const std::size_t comma = row.find(',', pos);
            const std::string_view tok(row.data() + pos,
                                       (comma == std::string::npos ? row.size() : comma) - pos);
            T value{};
            parse_token(tok, line_no, field_no, expected, &value, parse);
            data->push_back(value);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (*rows == 0) {
            *cols = field_no;
        } else if (field_no != *cols) {
            std::ostringstream os;
            os << "row has " << field_no << " fields, expected " << *cols;
            fail(os.str(), line_no, field_no);
        }
        ++*rows;
    }
    if (*rows == 0) throw ParseError("no data rows", first_line + 1, 1);
}

bool parse_bool_token(std::string_view tok, std::uint8_t* out) {
    if (tok == "0") {
        *out = 0;
        return true;
    }
    if (tok == "1") {
        *out = 1;
        return true;
    }
    return false;
}

bool parse_double_token(std::string_view tok, double* out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, *out);
    return ec == std::errc() && ptr == last;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open for reading: " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    return f;
}

}  // namespace

BoolMatrix read_bool_csv(std::istream& in, bool skip_header) {
    BoolMatrix m;
    read_matrix(in, skip_header, "0 or 1", parse_bool_token, &m.rows, &m.cols, &m.data);
    return m;
}

BoolMatrix read_bool_csv(const std::string& path, bool skip_header) {
    auto f = open_in(path);
    return read_bool_csv(f, skip_header);
}

DenseMatrix read_dense_csv(std::istream& in, bool skip_header) {
    DenseMatrix m;
    read_matrix(in, skip_header, "a decimal real", parse_double_token, &m.rows, &m.cols, &m.data);
    return m;
}

DenseMatrix read_dense_csv(const std::string& path, bool skip_header) {
    auto f = open_in(path);
    return read_dense_csv(f, skip_header);
}

void write_bool_csv(const BoolMatrix& m, std::ostream& out) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ',';
            out << (m(i, j) ? '1' : '0');
        }
        out << '\n';
    }
}

void write_bool_csv(const BoolMatrix& m, const std::string& path) {
    auto f = open_out(path);
    write_bool_csv(m, f);
}

void write_dense_csv(const DenseMatrix& m, std::ostream& out) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_dense_csv(const DenseMatrix& m, const std::string& path) {
    auto f = open_out(path);
    write_dense_csv(m, f);
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
    auto f = open_out(path);
    f << content;
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace banmf
