#include "ssp/galois.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssp {

std::vector<size_t> SigmaDecomposition::stabilizer_orders() const {
    std::vector<size_t> v;
    v.reserve(orbits.size());
    for (const auto& o : orbits) v.push_back(o.stabilizer_order);
    std::sort(v.begin(), v.end());
    return v;
}

SigmaDecomposition sigma_conjugacy(const AutGroup& G, const FieldPtr& base) {
    const auto& field = G.field();
    if (field->p() != base->p()) throw std::invalid_argument("sigma_conjugacy: characteristic mismatch");
    if (field->k() % base->k()) throw std::invalid_argument("sigma_conjugacy: field tower mismatch");
    const u64 steps = base->k(); // sigma = p^k0-power Frobenius

    const size_t n = G.order();
    std::vector<size_t> sigma_of(n);
    for (size_t i = 0; i < n; ++i) {
        const AutElem& e = G.elements()[i];
        AutElem img{Mat2{frobenius(e.h.a, steps), frobenius(e.h.b, steps), frobenius(e.h.c, steps),
                         frobenius(e.h.d, steps)},
                    frobenius(e.lambda, steps)};
        sigma_of[i] = G.index_of(img); // throws if the group is not sigma-stable
    }

    SigmaDecomposition dec;
    dec.group_order = n;
    std::vector<bool> assigned(n, false);
    for (size_t a = 0; a < n; ++a) {
        if (assigned[a]) continue;
        std::vector<size_t> members;
        size_t stab = 0;
        std::vector<bool> in_orbit(n, false);
        for (size_t g = 0; g < n; ++g) {
            size_t img = G.mul(G.mul(G.inverse(g), a), sigma_of[g]);
            if (!in_orbit[img]) {
                in_orbit[img] = true;
                members.push_back(img);
            }
            if (img == a) ++stab;
        }
        std::sort(members.begin(), members.end());
        for (size_t m : members) assigned[m] = true;
        if (members.size() * stab != n)
            throw std::logic_error("sigma_conjugacy: orbit-stabilizer identity failed");
        dec.orbits.push_back(SigmaOrbit{members, members.front(), stab});
    }
    return dec;
}

bool check_form_count(const SigmaDecomposition& dec, size_t observed_forms) {
    return dec.orbits.size() == observed_forms;
}

bool check_orbit_stabilizer(const SigmaDecomposition& dec, std::vector<size_t> form_aut_orders) {
    auto stabs = dec.stabilizer_orders();
    std::sort(form_aut_orders.begin(), form_aut_orders.end());
    return stabs == form_aut_orders;
}

} // namespace ssp
