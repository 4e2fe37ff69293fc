#include "ssp/points.hpp"

#include "ssp/isom.hpp"

#include <stdexcept>

namespace ssp {

std::string extremality_name(Extremality e) {
    switch (e) {
        case Extremality::maximal: return "maximal";
        case Extremality::minimal: return "minimal";
        case Extremality::neither: return "neither";
    }
    return "?";
}

u64 count_points(const HyperellipticCurve& C, const FieldPtr& L) {
    if (!L->q_fits_u64() || L->q() > 2000000)
        throw std::invalid_argument("count_points: field too large for exhaustive counting");
    HyperellipticCurve CL = curve_over(C, L);
    const Poly f = CL.f * CL.c.inv();
    const u64 q = L->q();
    u64 count = 0;
    for (u64 i = 0; i < q; ++i) {
        FieldElem v = f.eval(L->element_from_index(i));
        if (v.is_zero())
            count += 1;
        else if (is_square(v))
            count += 2;
    }
    if (is_square(f.leading())) count += 2; // the two points above infinity
    return count;
}

bool within_weil_bound(u64 count, unsigned g, u64 q) {
    i64 dev = static_cast<i64>(count) - static_cast<i64>(q + 1);
    return static_cast<u64>(dev * dev) <= static_cast<u64>(4) * g * g * q;
}

Extremality classify_extremal(const HyperellipticCurve& C, u64 p) {
    if (C.ctx->p() != p) throw std::invalid_argument("classify_extremal: characteristic mismatch");
    if (C.ctx->k() > 2) throw std::invalid_argument("classify_extremal: base field beyond F_{p^2}");
    FieldPtr L = C.ctx->k() == 2 ? C.ctx : FieldCtx::make(p, 2);
    const u64 count = count_points(C, L);
    const u64 mid = p * p + 1;
    const u64 spread = 2 * C.g * p;
    if (!within_weil_bound(count, C.g, p * p)) throw std::logic_error("point count violates the Weil bound");
    if (count == mid + spread) return Extremality::maximal;
    if (count == mid - spread) return Extremality::minimal;
    return Extremality::neither;
}

} // namespace ssp
