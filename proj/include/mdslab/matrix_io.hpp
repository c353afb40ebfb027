#pragma once

/// Plain-text matrix files:
///
///   q=4 p=2 m=2 mod=1,1     # field header; p/m/mod optional
///   k=3 n=6
///   <k rows of n integer encodings>
///
/// '#' starts a comment; blank lines are ignored.

#include <iosfwd>
#include <string>

#include "mdslab/matrix.hpp"

namespace mdslab {

/// Throws ParseError ("name:line:col: ...") or EncodingOutOfRange.
Matrix parse_matrix(std::istream& in, const std::string& name = "<input>");
Matrix read_matrix(const std::string& path);

void write_matrix(std::ostream& out, const Matrix& m);
std::string matrix_to_text(const Matrix& m);

}  // namespace mdslab
