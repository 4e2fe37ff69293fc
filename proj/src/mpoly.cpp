#include "ssp/mpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ssp {

u64 monomial_degree(const Monomial& m) {
    u64 d = 0;
    for (u32 e : m) d += e;
    return d;
}

int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::lex) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    // degrevlex: higher total degree wins; on ties the *last* differing
    // exponent decides, smaller exponent meaning larger monomial.
    u64 da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) throw std::invalid_argument("monomial_quotient: not divisible");
        r[i] = b[i] - a[i];
    }
    return r;
}

MPoly MPoly::constant(const FieldPtr& ctx, unsigned nvars, const FieldElem& c) {
    MPoly r(ctx, nvars);
    if (!c.is_zero()) r.terms_.emplace(Monomial(nvars, 0), c);
    return r;
}

MPoly MPoly::constant(const FieldPtr& ctx, unsigned nvars, i64 c) {
    return constant(ctx, nvars, ctx->from_int(c));
}

MPoly MPoly::variable(const FieldPtr& ctx, unsigned nvars, unsigned i) {
    if (i >= nvars) throw std::out_of_range("variable index");
    MPoly r(ctx, nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    r.terms_.emplace(std::move(m), ctx->one());
    return r;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

FieldElem MPoly::constant_value() const {
    if (terms_.empty()) return ctx_->zero();
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.begin()->second;
}

void MPoly::add_term(const Monomial& m, const FieldElem& c) {
    if (m.size() != n_) throw std::invalid_argument("monomial length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(ctx_, n_);
    Monomial prod(n_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            for (unsigned i = 0; i < n_; ++i) prod[i] = m1[i] + m2[i];
            r.add_term(prod, c1 * c2);
        }
    }
    return r;
}

MPoly MPoly::operator*(const FieldElem& s) const {
    MPoly r(ctx_, n_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(ctx_, n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    auto it1 = terms_.begin();
    auto it2 = o.terms_.begin();
    for (; it1 != terms_.end(); ++it1, ++it2) {
        if (it1->first != it2->first || !(it1->second == it2->second)) return false;
    }
    return true;
}

u64 MPoly::total_degree() const {
    u64 d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

std::pair<Monomial, FieldElem> MPoly::leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (compare_monomials(it->first, best->first, order) > 0) best = it;
    }
    return {best->first, best->second};
}

MPoly MPoly::substitute(const std::map<unsigned, FieldElem>& values) const {
    MPoly r(ctx_, n_);
    Monomial reduced(n_);
    for (const auto& [m, c] : terms_) {
        FieldElem coeff = c;
        reduced = m;
        for (const auto& [var, val] : values) {
            u32 e = m[var];
            if (e) coeff = coeff * pow(val, e);
            reduced[var] = 0;
            if (coeff.is_zero()) break;
        }
        r.add_term(reduced, coeff);
    }
    return r;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& point) const {
    if (point.size() != n_) throw std::invalid_argument("eval: wrong point length");
    FieldElem acc = ctx_->zero();
    for (const auto& [m, c] : terms_) {
        FieldElem t = c;
        for (unsigned i = 0; i < n_; ++i)
            if (m[i]) t = t * pow(point[i], m[i]);
        acc += t;
    }
    return acc;
}

bool MPoly::uses_var(unsigned i) const {
    for (const auto& [m, c] : terms_)
        if (m[i]) return true;
    return false;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        for (unsigned i = 0; i < n_; ++i) {
            if (m[i]) os << "*x" << i << "^" << m[i];
        }
        first = false;
    }
    return os.str();
}

std::pair<std::vector<MPoly>, std::vector<unsigned>> compress_variables(const std::vector<MPoly>& polys) {
    if (polys.empty()) return {{}, {}};
    const unsigned n = polys[0].nvars();
    std::vector<unsigned> used;
    for (unsigned i = 0; i < n; ++i) {
        for (const auto& f : polys) {
            if (f.uses_var(i)) {
                used.push_back(i);
                break;
            }
        }
    }
    std::vector<MPoly> out;
    out.reserve(polys.size());
    Monomial m2(used.size());
    for (const auto& f : polys) {
        MPoly g(f.ctx(), static_cast<unsigned>(used.size()));
        for (const auto& [m, c] : f.terms()) {
            for (size_t j = 0; j < used.size(); ++j) m2[j] = m[used[j]];
            g.add_term(m2, c);
        }
        out.push_back(std::move(g));
    }
    return {std::move(out), std::move(used)};
}

} // namespace ssp
