#pragma once

#include <cstdint>
#include <span>

#include <gmpxx.h>

#include "ballot/walkmodel.hpp"

namespace ballot::closedform {

/// Exact factorial from a process-wide memo table (thread-safe).
mpz_class factorial(std::uint64_t n);

/// (2n)! / (n! (n+1)!)
mpz_class catalan(std::uint64_t n);

/// C_k(n) = (nk)! 0! 1! ... (k-1)! / ((n+k-1)! (n+k-2)! ... n!)
mpz_class super_catalan(std::uint64_t k, std::uint64_t n);

/// Product over i < j of (x_i - x_j).
mpz_class discriminant(std::span<const std::int64_t> xs);

/// Number of unit-step walks from the origin to `target` staying in x1 >= ... >= xk.
/// Target must be non-increasing with entries >= 0 (trailing zeros allowed);
/// throws Error{NotSorted} otherwise.
mpz_class walk_count(std::span<const std::int64_t> target);

/// (sum a_i)! / prod a_i!
mpz_class multinomial(std::span<const std::int64_t> counts);

/// (sum a_i)^(sum a_i) / prod a_i^(a_i), the growth rate of the fixed-endpoint sequence.
mpq_class connective_constant(const WeightVector& weights);

/// Same formula without the WeightVector invariants; used for formula-level checks.
mpq_class connective_constant_raw(std::span<const std::int64_t> weights);

}  // namespace ballot::closedform
