#pragma once

#include "ssp/aut.hpp"

namespace ssp {

/// sigma-conjugacy data on an automorphism group computed over a concrete
/// extension of the base field: orbits of a |-> g^{-1} a g^sigma where sigma
/// is the base-field-size Frobenius applied entrywise.
struct SigmaOrbit {
    std::vector<size_t> members; // element indices, ascending
    size_t representative;       // smallest member
    size_t stabilizer_order;     // #{g : a = g^{-1} a g^sigma}
};

struct SigmaDecomposition {
    size_t group_order = 0;
    std::vector<SigmaOrbit> orbits;

    std::vector<size_t> stabilizer_orders() const; // sorted multiset
};

/// Requires the group to be sigma-stable (each entrywise Frobenius image is
/// again a group element); asserts the orbit-stabilizer identity per orbit.
SigmaDecomposition sigma_conjugacy(const AutGroup& G, const FieldPtr& base);

/// Orbit count equals the number of rational forms.
bool check_form_count(const SigmaDecomposition& dec, size_t observed_forms);

/// Multiset of |Aut|/|Orb(a)| equals the multiset of the forms' rational
/// automorphism group orders.
bool check_orbit_stabilizer(const SigmaDecomposition& dec, std::vector<size_t> form_aut_orders);

} // namespace ssp
