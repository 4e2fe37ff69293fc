#include "ssp/curve.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ssp {

HyperellipticCurve HyperellipticCurve::make(FieldPtr ctx, unsigned g, FieldElem c, Poly f,
                                            bool relax_size) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
    const u64 p = ctx->p();
    if (std::gcd(p, static_cast<u64>(2 * g + 2)) != 1)
        throw std::invalid_argument("characteristic divides 2g+2");
    if (ctx->k() == 1 && p < 2 * g + 1)
        throw std::invalid_argument("field too small for the degree 2g+2 model");
    if (!relax_size && ctx->k() == 1 && p == 2 * g + 1)
        throw std::invalid_argument("field of size 2g+1: model family incomplete");
    if (f.degree() != static_cast<int>(2 * g + 2)) throw std::invalid_argument("deg f must be 2g+2");
    if (!f.leading().is_one()) throw std::invalid_argument("f must be monic");
    if (!f.coeff(2 * g + 1).is_zero()) throw std::invalid_argument("x^{2g+1} coefficient must vanish");
    if (!is_squarefree(f)) throw std::invalid_argument("f must be squarefree");
    if (c.is_zero()) throw std::invalid_argument("c must be nonzero");
    if (!c.is_one()) {
        c = is_square(c) ? ctx->one() : find_nonsquare(ctx);
    }
    return HyperellipticCurve{std::move(ctx), g, std::move(c), std::move(f)};
}

bool HyperellipticCurve::operator==(const HyperellipticCurve& o) const {
    return g == o.g && c == o.c && f == o.f;
}

bool HyperellipticCurve::lex_less(const HyperellipticCurve& o) const {
    // raw comparison so lists mixing base fields still order deterministically
    auto key = [](const HyperellipticCurve& C) {
        std::vector<u64> k{C.ctx->p(), C.ctx->k()};
        for (u64 v : C.ctx->modulus()) k.push_back(v);
        for (u64 v : C.c.coeffs()) k.push_back(v);
        k.push_back(static_cast<u64>(C.f.degree() + 1));
        for (const auto& e : C.f.coeffs())
            for (u64 v : e.coeffs()) k.push_back(v);
        return k;
    };
    return key(*this) < key(o);
}

std::string HyperellipticCurve::str() const {
    std::ostringstream os;
    os << c.str() << "*y^2 = " << f.str() << " over " << ctx->describe();
    return os.str();
}

bool CartierMatrix::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

unsigned CartierMatrix::rank() const {
    // Gaussian elimination on a copy.
    std::vector<FieldElem> m = entries;
    unsigned rank = 0;
    for (unsigned col = 0; col < g && rank < g; ++col) {
        unsigned pivot = rank;
        while (pivot < g && m[pivot * g + col].is_zero()) ++pivot;
        if (pivot == g) continue;
        for (unsigned c2 = 0; c2 < g; ++c2) std::swap(m[pivot * g + c2], m[rank * g + c2]);
        FieldElem inv = m[rank * g + col].inv();
        for (unsigned c2 = 0; c2 < g; ++c2) m[rank * g + c2] = m[rank * g + c2] * inv;
        for (unsigned r = 0; r < g; ++r) {
            if (r == rank || m[r * g + col].is_zero()) continue;
            FieldElem fct = m[r * g + col];
            for (unsigned c2 = 0; c2 < g; ++c2) m[r * g + c2] -= fct * m[rank * g + c2];
        }
        ++rank;
    }
    return rank;
}

std::string CartierMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 1; i <= g; ++i) {
        if (i > 1) os << "; ";
        for (unsigned j = 1; j <= g; ++j) {
            if (j > 1) os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

CartierMatrix cartier_manin(const Poly& f, unsigned g) {
    const auto& ctx = f.ctx();
    const u64 p = ctx->p();
    if (p == 2) throw std::invalid_argument("odd characteristic required");
    const int d = f.degree();
    if (d != static_cast<int>(2 * g + 1) && d != static_cast<int>(2 * g + 2))
        throw std::invalid_argument("deg f must be 2g+1 or 2g+2");
    Poly h = pow(f, (p - 1) / 2);
    CartierMatrix M{g, {}};
    M.entries.reserve(static_cast<size_t>(g) * g);
    for (unsigned i = 1; i <= g; ++i)
        for (unsigned j = 1; j <= g; ++j)
            M.entries.push_back(h.coeff(static_cast<size_t>(p) * i - j));
    return M;
}

bool is_superspecial(const Poly& f, unsigned g) { return cartier_manin(f, g).is_zero(); }

bool is_superspecial(const HyperellipticCurve& C) { return is_superspecial(C.f, C.g); }

} // namespace ssp
