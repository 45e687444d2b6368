#pragma once

#include <gmpxx.h>

#include <string>

namespace dmt {

/// Exact arbitrary-precision integer used for every matrix entry and path count.
using Integer = mpz_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace dmt
