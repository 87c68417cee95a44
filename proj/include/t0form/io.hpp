#pragma once

#include <iosfwd>
#include <string>

#include "t0form/standardize.hpp"

namespace t0form {

// Matrix file format:
//   t0matrix k m n
//   <m lines of n whitespace-separated tokens>
// Token "*" is the zero entry; a nonnegative integer e is zeta_k^e (reduced
// mod k). Blank lines and "#" comments are ignored. Parse errors carry a
// 1-based line and column.
T0Matrix parse_matrix(const std::string& text);
T0Matrix read_matrix_file(const std::string& path);

std::string format_matrix(const T0Matrix& a);

std::string format_entry(UnitEntry e);

// Certificate file format: two (perm, diag) pairs, M1 then M2:
//   perm: p0 p1 ...
//   diag: e0 e1 ...
// perm lists the image of each index under the permutation factor (the
// represented matrix maps basis vector i to basis vector p_i); diag lists
// the unit exponents indexed as stored. Comments and blank lines as above.
Certificate parse_certificate(const std::string& text, int k);
Certificate read_certificate_file(const std::string& path, int k);

std::string format_certificate(const Certificate& cert);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace t0form
