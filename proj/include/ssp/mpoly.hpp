#pragma once

#include "ssp/field.hpp"

#include <cstdint>
#include <map>

namespace ssp {

using u32 = std::uint32_t;
using Monomial = std::vector<u32>; // exponent vector, length = variable count

enum class MonomialOrder { degrevlex, lex };

u64 monomial_degree(const Monomial& m);
/// -1, 0, 1 for a < b, a == b, a > b in the given order (lex: x0 > x1 > ...).
int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order);
bool monomial_divides(const Monomial& a, const Monomial& b); // a | b
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_quotient(const Monomial& b, const Monomial& a); // b / a

/// Sparse multivariate polynomial over a FieldCtx with a fixed variable
/// count; no zero coefficients are stored. Terms are kept in a canonical
/// (plain lex descending) order independent of any monomial order in use.
class MPoly {
public:
    MPoly() = default;
    MPoly(FieldPtr ctx, unsigned nvars) : ctx_(std::move(ctx)), n_(nvars) {}

    static MPoly constant(const FieldPtr& ctx, unsigned nvars, const FieldElem& c);
    static MPoly constant(const FieldPtr& ctx, unsigned nvars, i64 c);
    static MPoly variable(const FieldPtr& ctx, unsigned nvars, unsigned i);

    const FieldPtr& ctx() const { return ctx_; }
    unsigned nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::map<Monomial, FieldElem, std::greater<Monomial>>& terms() const { return terms_; }
    bool is_constant() const;
    FieldElem constant_value() const; // 0 for the zero polynomial

    void add_term(const Monomial& m, const FieldElem& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const FieldElem& s) const;
    MPoly operator-() const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    u64 total_degree() const; // 0 for zero polynomial
    std::pair<Monomial, FieldElem> leading_term(MonomialOrder order) const;

    /// Partial evaluation; substituted variables disappear from the support.
    MPoly substitute(const std::map<unsigned, FieldElem>& values) const;
    FieldElem eval(const std::vector<FieldElem>& point) const;
    bool uses_var(unsigned i) const;

    std::string str() const;

private:
    FieldPtr ctx_;
    unsigned n_ = 0;
    std::map<Monomial, FieldElem, std::greater<Monomial>> terms_;
};

/// Rebuilds polynomials over the variables that actually occur, returning the
/// old-index list; used to hand solvers the smallest system possible.
std::pair<std::vector<MPoly>, std::vector<unsigned>> compress_variables(const std::vector<MPoly>& polys);

} // namespace ssp
