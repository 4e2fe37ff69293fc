#include "ssp/smallfield.hpp"

#include <stdexcept>

namespace ssp {

SmallField SmallField::build(const FieldPtr& ctx) {
    SmallField F;
    F.ctx = ctx;
    if (!ctx->q_fits_u64() || ctx->q() > 4096)
        throw std::invalid_argument("SmallField: field too large for table arithmetic");
    F.q = static_cast<u32>(ctx->q());
    F.p = static_cast<u32>(ctx->p());
    F.k = ctx->k();
    const u32 q = F.q;
    std::vector<FieldElem> elems;
    elems.reserve(q);
    for (u32 i = 0; i < q; ++i) elems.push_back(ctx->element_from_index(i));
    F.add_t.resize(static_cast<size_t>(q) * q);
    F.mul_t.resize(static_cast<size_t>(q) * q);
    F.neg_t.resize(q);
    F.inv_t.resize(q);
    for (u32 a = 0; a < q; ++a) {
        F.neg_t[a] = static_cast<u16>(ctx->index_of(-elems[a]));
        F.inv_t[a] = a == 0 ? 0 : static_cast<u16>(ctx->index_of(elems[a].inv()));
        for (u32 b = 0; b < q; ++b) {
            F.add_t[static_cast<size_t>(a) * q + b] = static_cast<u16>(ctx->index_of(elems[a] + elems[b]));
            F.mul_t[static_cast<size_t>(a) * q + b] = static_cast<u16>(ctx->index_of(elems[a] * elems[b]));
        }
    }
    return F;
}

} // namespace ssp
