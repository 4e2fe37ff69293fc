#pragma once

#include "ssp/field.hpp"

#include <vector>

namespace ssp {

/// Dense univariate polynomial over a FieldCtx, ascending coefficients with
/// trailing zeros trimmed. Value semantics throughout.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr ctx) : ctx_(std::move(ctx)) {}
    Poly(FieldPtr ctx, std::vector<FieldElem> coeffs);

    static Poly from_ints(const FieldPtr& ctx, const std::vector<i64>& coeffs);
    static Poly constant(const FieldElem& c);
    static Poly x(const FieldPtr& ctx);

    const FieldPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElem coeff(size_t i) const;
    FieldElem leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& s) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;
    Poly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    /// Multiply by x^n.
    Poly shifted(unsigned n) const;

    /// Deterministic ordering key (degree, then coefficient vectors).
    bool lex_less(const Poly& o) const;

    std::string str() const;

private:
    FieldPtr ctx_;
    std::vector<FieldElem> c_;
    void trim();
};

Poly pow(const Poly& a, u64 e);
/// Quotient and remainder by a nonzero divisor.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b); // monic

bool is_squarefree(const Poly& f);

struct PolyFactor {
    Poly factor; // monic irreducible
    unsigned multiplicity;
};

/// Complete factorization over the coefficient field (squarefree split,
/// distinct-degree, then seeded Cantor-Zassenhaus splitting). Output is
/// sorted by degree then coefficient vectors, so runs are reproducible.
std::vector<PolyFactor> factor(const Poly& f, u64 seed = 0);

bool is_irreducible(const Poly& f);

/// Roots in the coefficient field itself, sorted, repeated per multiplicity.
std::vector<FieldElem> roots_in_field(const Poly& f, u64 seed = 0);

/// lcm of the irreducible factor degrees: the degree of the splitting field
/// over the coefficient field.
unsigned splitting_degree(const Poly& f, u64 seed = 0);

/// All roots of f in the extension L (requires every factor to split there).
std::vector<FieldElem> roots_in_extension(const Poly& f, const FieldPtr& L, u64 seed = 0);

/// Coefficientwise embedding into an extension.
Poly embed_poly(const Poly& f, const FieldPtr& L);

Poly compose(const Poly& f, const Poly& g); // f(g(x))

/// 2x2 matrix over a field; the substitution group acting on binary forms.
struct Mat2 {
    FieldElem a, b, c, d;

    static Mat2 identity(const FieldPtr& ctx);
    FieldElem det() const;
    Mat2 mul(const Mat2& o) const;
    Mat2 inverse() const;
    Mat2 scaled(const FieldElem& s) const;
    bool operator==(const Mat2& o) const;
    std::string str() const;
};

/// Homogeneous binary form of fixed degree d; coeffs[i] multiplies X^i Z^{d-i}.
class BinaryForm {
public:
    BinaryForm(FieldPtr ctx, unsigned degree);
    BinaryForm(FieldPtr ctx, unsigned degree, std::vector<FieldElem> coeffs);

    const FieldPtr& ctx() const { return ctx_; }
    unsigned form_degree() const { return d_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff(size_t i) const { return c_.at(i); }

    BinaryForm operator*(const FieldElem& s) const;
    BinaryForm operator-(const BinaryForm& o) const;
    bool operator==(const BinaryForm& o) const;
    bool is_zero() const;

private:
    FieldPtr ctx_;
    unsigned d_;
    std::vector<FieldElem> c_; // size d+1
};

/// Z^{2g+2} f(X/Z) for deg f <= 2g+2.
BinaryForm homogenize(const Poly& f, unsigned g);
/// F(x, 1); inverse of homogenize when deg f = 2g+2.
Poly dehomogenize(const BinaryForm& F);

/// (X,Z) |-> F(aX+bZ, cX+dZ) for h = [[a,b],[c,d]]; a right action:
/// transform(transform(F,h1),h2) == transform(F, h1*h2).
BinaryForm transform(const BinaryForm& F, const Mat2& h);

} // namespace ssp
