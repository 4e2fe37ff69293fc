#pragma once

#include "ssp/curve.hpp"

namespace ssp {

enum class Extremality { maximal, minimal, neither };

std::string extremality_name(Extremality e);

/// Number of L-rational points on the smooth model: sum over x of
/// 1 + chi(c^{-1} f(x)) plus the two points above infinity when the leading
/// coefficient of c^{-1} f is a square in L (chi = quadratic character,
/// chi(0) = 0).
u64 count_points(const HyperellipticCurve& C, const FieldPtr& L);

/// Weil interval check: (count - (q+1))^2 <= 4 g^2 q.
bool within_weil_bound(u64 count, unsigned g, u64 q);

/// Classification over F_{p^2} for a curve defined over F_p or F_{p^2}:
/// maximal when the count is p^2 + 1 + 2gp, minimal at p^2 + 1 - 2gp.
Extremality classify_extremal(const HyperellipticCurve& C, u64 p);

} // namespace ssp
