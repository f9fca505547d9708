#pragma once

#include <string>
#include <string_view>

#include "semiholes/integer.hpp"
#include "semiholes/semigroup.hpp"

namespace semiholes {

/// Reads "m n" followed by m rows of n integers. Blank lines and '#' comments are skipped.
/// Throws ParseError with the offending line and column.
IntMat parse_mat(std::string_view text);

/// Inverse of parse_mat: header line, then one line per row.
std::string render_mat(const IntMat& A);

/// "[v1 v2 ... vm]".
std::string render_vec(const IntVec& v);

enum class ReportFormat { Text, Json };

/// Text: "Found k fundamental holes." then the standard pairs of every examined hole
/// with 1-based variable names. Json: matrix_dims, saturated, fundamental_holes,
/// families (free_columns 1-based). Throws OverflowError if a JSON entry exceeds 64 bits.
std::string render_report(const HoleReport& report, ReportFormat format);

}  // namespace semiholes
