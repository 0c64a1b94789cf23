#pragma once

#include <string>

#include "gonlab/divisor.hpp"

namespace gonlab {

/// Sparse 1-based rendering: "v1=2,v4=-1". The zero divisor renders as "".
std::string divisor_to_sparse(const Divisor& d);
std::string script_to_sparse(const FiringScript& s);

/// Accepts the dense form "2,0,0,-1" (length must be n) or the sparse form
/// "v1=2,v4=-1"; "" and "0" mean the zero divisor.
Divisor divisor_from_text(const std::string& text, int n);

}  // namespace gonlab
