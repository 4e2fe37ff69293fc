#pragma once

#include "ssp/isom.hpp"

namespace ssp {

/// One automorphism class: a substitution pair (h, lambda) modulo the scalar
/// family (u*h, u^{g+1}*lambda). Representatives keep h with first nonzero
/// entry 1; both lambda signs appear as distinct group elements.
struct AutElem {
    Mat2 h;
    FieldElem lambda;

    std::vector<u64> key() const; // canonical bytes for table lookup
};

/// The automorphism group of c y^2 = f(x) over a fixed field, as an explicit
/// list of classes with a multiplication table.
class AutGroup {
public:
    AutGroup(FieldPtr field, unsigned g, std::vector<AutElem> elems);

    const FieldPtr& field() const { return field_; }
    unsigned genus() const { return g_; }
    size_t order() const { return elems_.size(); }
    const std::vector<AutElem>& elements() const { return elems_; }

    size_t identity() const { return id_; }
    size_t mul(size_t i, size_t j) const { return table_[i * elems_.size() + j]; }
    size_t inverse(size_t i) const { return inv_[i]; }
    size_t index_of(const AutElem& e) const; // throws if absent
    bool contains(const AutElem& e) const;

    /// Composes the underlying pairs and renormalizes to the class
    /// representative.
    AutElem compose(const AutElem& a, const AutElem& b) const;
    AutElem invert(const AutElem& a) const;

    unsigned element_order(size_t i) const;
    std::vector<unsigned> element_orders() const; // sorted
    bool is_abelian() const;
    size_t center_order() const;
    size_t derived_subgroup_order() const;

private:
    FieldPtr field_;
    unsigned g_;
    std::vector<AutElem> elems_;
    std::vector<size_t> table_;
    std::vector<size_t> inv_;
    size_t id_ = 0;
    std::map<std::vector<u64>, size_t> index_;
};

/// All pairs (h, lambda) with transform(F, h) = lambda^2 F over K, one
/// representative per scalar class, both lambda signs included.
std::vector<AutElem> compute_G_tilde(const HyperellipticCurve& C, const FieldPtr& K, u64 seed = 0);

/// Aut_K(C) as the quotient of the full substitution group by the scalar
/// family; computed from the class representatives directly.
AutGroup compute_aut(const HyperellipticCurve& C, const FieldPtr& K, u64 seed = 0);

/// Automorphism group over the algebraic closure, realized over the concrete
/// extension of degree 2*lcm(splitting degrees); the order is asserted
/// stable under doubling the extension.
AutGroup compute_aut_closure(const HyperellipticCurve& C, u64 seed = 0, bool stability_check = true);

/// Structure label from the invariant fingerprint (order, abelian
/// invariants, element-order multiset, center, derived subgroup). Groups
/// outside the catalog come back as "order-N-unrecognized".
std::string identify_group(const AutGroup& G);

/// Fingerprint catalog entry (used by identify_group and its tests).
struct GroupFingerprint {
    std::string label;
    size_t order;
    std::vector<unsigned> element_orders; // sorted
    bool abelian;
    size_t center;
    size_t derived;

    bool operator==(const GroupFingerprint& o) const;
};
std::vector<GroupFingerprint> group_catalog(size_t max_order = 48);
GroupFingerprint fingerprint_of(const AutGroup& G, const std::string& label = "");

} // namespace ssp
