#pragma once

#include "ssp/curve.hpp"
#include "ssp/groebner.hpp"

#include <optional>

namespace ssp {

/// Certificate of an isomorphism between c1 y^2 = f1 and c2 y^2 = f2 over
/// `field`: transform(F1, h) = lambda^2 * F2 where Fi homogenizes ci^{-1} fi.
/// Verified by substitution before it is ever returned.
struct IsomWitness {
    Mat2 h;
    FieldElem lambda;
    FieldPtr field;
};

enum class IsomEngine { root, groebner };

/// Curve base-changed to a larger field (the twist scalar is re-normalized
/// there, which preserves the isomorphism class).
HyperellipticCurve curve_over(const HyperellipticCurve& C, const FieldPtr& K);

/// All substitution pairs (h, lambda) with transform(F1, h) = lambda^2 F2:
/// h normalized so its first nonzero entry is 1, lambda the lex-smaller
/// square root (only that sign is listed). `K` decides rationality; with
/// `closure` the search runs over a concrete extension large enough to
/// realize every geometric isomorphism (splitting-field compositum plus a
/// quadratic step for lambda).
struct IsomSearch {
    std::vector<std::pair<Mat2, FieldElem>> pairs;
    FieldPtr field; // where entries of h and lambda live
};
IsomSearch all_isomorphisms(const HyperellipticCurve& C1, const HyperellipticCurve& C2,
                            const FieldPtr& K, bool closure, bool stop_at_first, u64 seed = 0);

/// Root-matching backend: Moebius maps between the branch loci in a common
/// splitting field, filtered by descent to K and the square condition.
std::optional<IsomWitness> is_isomorphic(const HyperellipticCurve& C1, const HyperellipticCurve& C2,
                                         const FieldPtr& K, u64 seed = 0);

std::optional<IsomWitness> is_isomorphic_closure(const HyperellipticCurve& C1,
                                                 const HyperellipticCurve& C2, u64 seed = 0);

/// Polynomial-system backend over K = F_q: unknown matrix entries, lambda,
/// and the two inverse certificates, with field equations; solved through
/// the Groebner engine. ok == false reports a solver budget failure.
struct GroebnerIsomResult {
    bool ok = false;
    std::string failure;
    std::optional<IsomWitness> witness;
};
GroebnerIsomResult is_isomorphic_groebner(const HyperellipticCurve& C1, const HyperellipticCurve& C2,
                                          const FieldPtr& K, const VarietyOptions& opts = {});

/// Coefficients (in X^j Z^{d-j}) of F transformed by a symbolic matrix whose
/// entries are the variables b_start..b_start+3; each coefficient is a
/// polynomial of degree d in those variables.
std::vector<MPoly> transform_coefficients_symbolic(const BinaryForm& F, unsigned nvars,
                                                   unsigned b_start);

HyperellipticCurve quadratic_twist(const HyperellipticCurve& C);

struct IsomClass {
    size_t representative;       // index of the lexicographically smallest member
    std::vector<size_t> members; // ascending indices into the input list
};

/// Partition into isomorphism classes over K (or over the closure) by
/// pairwise testing with union-find short-circuiting.
std::vector<IsomClass> classify(const std::vector<HyperellipticCurve>& curves, const FieldPtr& K,
                                bool closure, u64 seed = 0);

/// Smallest common field all curves embed into (lcm of the extension
/// degrees, reusing a matching context from the input when possible).
FieldPtr common_field(const std::vector<HyperellipticCurve>& curves);

} // namespace ssp
