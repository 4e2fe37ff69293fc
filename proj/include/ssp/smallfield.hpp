#pragma once

#include "ssp/field.hpp"

#include <cstdint>

namespace ssp {

using u16 = std::uint16_t;
using u32 = std::uint32_t;

/// Table-driven arithmetic for a small field (q <= 2^12 or so): elements are
/// their enumeration indices, operations are table lookups. Built once per
/// field and shared read-only by scan workers.
struct SmallField {
    FieldPtr ctx;
    u32 q = 0;
    u32 p = 0;
    unsigned k = 1;
    std::vector<u16> add_t; // q*q
    std::vector<u16> mul_t; // q*q
    std::vector<u16> neg_t; // q
    std::vector<u16> inv_t; // q (0 maps to 0)

    static SmallField build(const FieldPtr& ctx);

    u16 add(u16 a, u16 b) const { return add_t[static_cast<size_t>(a) * q + b]; }
    u16 mul(u16 a, u16 b) const { return mul_t[static_cast<size_t>(a) * q + b]; }
    u16 neg(u16 a) const { return neg_t[a]; }
    u16 sub(u16 a, u16 b) const { return add(a, neg(b)); }
    u16 inv(u16 a) const { return inv_t[a]; }

    FieldElem to_elem(u16 idx) const { return ctx->element_from_index(idx); }
    u16 from_elem(const FieldElem& e) const { return static_cast<u16>(ctx->index_of(e)); }
};

} // namespace ssp
