#pragma once

#include "ssp/mpoly.hpp"

#include <string>

namespace ssp {

struct GroebnerOptions {
    MonomialOrder order = MonomialOrder::degrevlex;
    u64 max_pairs = 4000000;  // S-pairs processed before giving up
    size_t max_basis = 8000;  // basis elements before giving up
    bool sugar_selection = false; // false = normal strategy (minimal lcm)
};

struct GroebnerStats {
    u64 pairs_processed = 0;
    u64 reductions_to_zero = 0;
    size_t basis_size = 0;
};

/// Result of a basis computation. `ok == false` means the configured budget
/// was exhausted; the partial basis is never silently used downstream.
struct GroebnerResult {
    bool ok = false;
    std::string failure;
    std::vector<MPoly> basis; // reduced basis (monic heads, tails reduced)
    GroebnerStats stats;
};

/// Remainder of f under multivariate division by G; no term of the result is
/// divisible by any head term of G. Reducers are tried in a fixed sorted
/// order, so the outcome is deterministic.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& G, MonomialOrder order);

GroebnerResult buchberger(std::vector<MPoly> gens, const GroebnerOptions& opts = {});

/// x_i^q - x_i for every variable (q = field size).
std::vector<MPoly> field_equations(const FieldPtr& ctx, unsigned nvars);
/// Generators extended by the field equations (zero generators dropped,
/// duplicates not added).
std::vector<MPoly> add_field_equations(std::vector<MPoly> gens, const FieldPtr& ctx, unsigned nvars);

struct VarietyOptions {
    GroebnerOptions groebner;
    u64 max_scan = 4000000; // budget for enumeration fallback branches
};

struct VarietyResult {
    bool ok = false;
    std::string failure;
    std::vector<std::vector<FieldElem>> points; // lexicographically sorted
};

/// All F_q-rational zeros of the system. Requires the field equations among
/// the generators (so the ideal is zero-dimensional and radical). Solves by
/// lex triangularization with back-substitution, enumerating a coordinate
/// exhaustively when no univariate polynomial isolates it; every candidate
/// point is verified against the original generators before acceptance.
VarietyResult variety(const std::vector<MPoly>& gens, const VarietyOptions& opts = {});

} // namespace ssp
