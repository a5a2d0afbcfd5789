#pragma once

#include <iosfwd>
#include <string>

#include "core/matrix.hpp"

namespace banmf {

// Matrix CSV format: one matrix row per line, comma-separated values, no
// header by default (skip_header drops the first line on read). Boolean
// matrices use the tokens 0 and 1; dense matrices use decimal reals written
// in shortest round-trip form. Parse errors carry 1-based (line, field)
// locations; a "?" token gets a dedicated message since public datasets use
// it for missing values.

BoolMatrix read_bool_csv(std::istream& in, bool skip_header = false);
BoolMatrix read_bool_csv(const std::string& path, bool skip_header = false);
DenseMatrix read_dense_csv(std::istream& in, bool skip_header = false);
DenseMatrix read_dense_csv(const std::string& path, bool skip_header = false);

void write_bool_csv(const BoolMatrix& m, std::ostream& out);
void write_bool_csv(const BoolMatrix& m, const std::string& path);
void write_dense_csv(const DenseMatrix& m, std::ostream& out);
void write_dense_csv(const DenseMatrix& m, const std::string& path);

/// Shortest decimal string that parses back to exactly v.
std::string format_double(double v);

/// Writes content to path verbatim. Throws IoError on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace banmf
