#pragma once

#include <cstdint>
#include <optional>

namespace sdfea {

// C(n, k) as an exact 64-bit integer, or nullopt if it does not fit.
std::optional<std::uint64_t> binomial_exact(int n, int k);

// Natural log of C(n, k) in extended precision. Exact-integer path when
// the coefficient fits 64 bits, lgamma otherwise; relative error stays
// below 1e-10 for n <= 1e4 either way.
long double log_binomial_ld(int n, int k);

double log_binomial(int n, int k);

}  // namespace sdfea
