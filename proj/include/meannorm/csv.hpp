#pragma once

#include <iosfwd>
#include <string>

#include "meannorm/matrix.hpp"

namespace meannorm {

/// Shortest decimal form that still round-trips binary64: 17 significant
/// digits.
std::string format_g17(double v);

/// One row per line, entries comma-separated, 17 significant digits.
void write_matrix_csv(std::ostream& out, const DenseMatrix& a);
void write_matrix_csv(std::ostream& out, const DenseSymMatrix& a);

/// Inverse of write_matrix_csv; rejects ragged rows or unparsable cells.
DenseMatrix read_matrix_csv(std::istream& in);

}  // namespace meannorm
