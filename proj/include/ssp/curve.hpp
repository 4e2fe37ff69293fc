#pragma once

#include "ssp/poly.hpp"

namespace ssp {

/// The smooth model c*y^2 = f(x) with f monic of degree 2g+2, no x^{2g+1}
/// term, squarefree, and c either 1 or the canonical non-square. Requires
/// gcd(p, 2g+2) = 1 and q > 2g+1 so every hyperelliptic curve of genus g
/// has such a model.
struct HyperellipticCurve {
    FieldPtr ctx;
    unsigned g;
    FieldElem c;
    Poly f;

    /// Validates the shape above; a square c is normalized to 1 and any other
    /// non-square to the canonical one (both moves preserve the isomorphism
    /// class). Set `relax_size` to allow q = 2g+1 (the model family is still
    /// well-defined, only its completeness needs q > 2g+1).
    static HyperellipticCurve make(FieldPtr ctx, unsigned g, FieldElem c, Poly f,
                                   bool relax_size = false);

    bool operator==(const HyperellipticCurve& o) const;
    bool lex_less(const HyperellipticCurve& o) const;
    std::string str() const;
};

/// g x g matrix with (i,j) entry the coefficient of x^{p*i - j} in
/// f^{(p-1)/2}, 1 <= i,j <= g.
struct CartierMatrix {
    unsigned g;
    std::vector<FieldElem> entries; // row-major, entries[(i-1)*g + (j-1)]

    const FieldElem& at(unsigned i, unsigned j) const { return entries[(i - 1) * g + (j - 1)]; }
    bool is_zero() const;
    unsigned rank() const;
    std::string str() const;
};

/// Accepts deg f = 2g+1 or 2g+2 (both hyperelliptic model shapes).
CartierMatrix cartier_manin(const Poly& f, unsigned g);

/// Zero Cartier-Manin matrix; depends only on f, not on the twist c.
bool is_superspecial(const HyperellipticCurve& C);
bool is_superspecial(const Poly& f, unsigned g);

} // namespace ssp
