#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ballot/walkmodel.hpp"

namespace ballot {

/// p_0(n) x(n) + p_1(n) x(n+1) + ... + p_L(n) x(n+L) = 0 for every n >= offset.
///
/// coeffs[i][j] is the coefficient of n^j in p_i. A canonical recurrence has
/// integer coefficients with content 1 and a positive leading coefficient of p_L.
struct Recurrence {
    std::size_t order = 1;
    std::size_t degree = 0;
    std::vector<std::vector<mpz_class>> coeffs;
    std::size_t offset = 0;

    /// p_i(n).
    mpz_class evaluate(std::size_t i, std::size_t n) const;

    bool operator==(const Recurrence&) const = default;
};

/// Divides by the content, fixes the sign of p_L's leading coefficient and
/// trims all-zero high-degree columns. Throws InvalidArgument if p_L is zero.
void canonicalize(Recurrence& rec);

/// Smallest (order, then degree) recurrence with order <= max_order and
/// degree <= max_degree that annihilates every available term. std::nullopt is
/// an exact certificate that no such recurrence exists at the given bounds.
///
/// Needs at least (max_order+1)(max_degree+1) + max_order + 10 terms, otherwise
/// throws Error{InsufficientTerms}.
std::optional<Recurrence> guess(const Sequence& seq, std::size_t max_order, std::size_t max_degree);

/// Number of held-out equations kept back from the nullspace computation.
inline constexpr std::size_t kHeldOutEquations = 10;

bool verify(const Recurrence& rec, const Sequence& seq);

/// Runs the recurrence forward from `seed` until the sequence has `total` terms.
/// Throws Error{SingularLeadingCoefficient | NonIntegralTerm | InsufficientTerms}.
Sequence extend(const Recurrence& rec, const Sequence& seed, std::size_t total);

/// "(n+2)*x(n+1) + (-4n-2)*x(n) = 0" style rendering.
std::string to_display_string(const Recurrence& rec);

}  // namespace ballot
