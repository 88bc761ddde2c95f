#ifndef SGI_RATIONAL_HPP
#define SGI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace sgi {

// Exact arbitrary-precision rational. GMP keeps values canonical as long as
// every value fed into arithmetic is canonical, so all construction goes
// through the helpers below.
using Rat = mpq_class;

/// Canonical rational num/den. den must be nonzero.
Rat rat(long num, long den = 1);

/// Parses "3", "-7" or "p/q". Throws std::invalid_argument on anything else.
Rat parse_rat(const std::string& token);

/// "p/q" when the denominator is not 1, plain integer otherwise.
std::string rat_str(const Rat& r);

/// -1, 0 or +1.
int rat_sign(const Rat& r);

}  // namespace sgi

#endif
