#include "ssp/groebner.hpp"
#include "ssp/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ssp {

namespace {

// Terms sorted descending in the active order; the working representation
// inside the engine.
struct OPoly {
    std::vector<std::pair<Monomial, FieldElem>> t;

    bool is_zero() const { return t.empty(); }
    const Monomial& lm() const { return t.front().first; }
    const FieldElem& lc() const { return t.front().second; }
};

OPoly to_opoly(const MPoly& f, MonomialOrder order) {
    OPoly r;
    r.t.assign(f.terms().begin(), f.terms().end());
    std::sort(r.t.begin(), r.t.end(), [order](const auto& a, const auto& b) {
        return compare_monomials(a.first, b.first, order) > 0;
    });
    return r;
}

MPoly to_mpoly(const OPoly& f, const FieldPtr& ctx, unsigned n) {
    MPoly r(ctx, n);
    for (const auto& [m, c] : f.t) r.add_term(m, c);
    return r;
}

// r = a - coef * x^shift * b, all kept sorted.
OPoly axpy(const OPoly& a, const FieldElem& coef, const Monomial& shift, const OPoly& b,
           MonomialOrder order) {
    OPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    Monomial mb(shift.size());
    while (i < a.t.size() || j < b.t.size()) {
        if (j < b.t.size()) {
            for (size_t v = 0; v < shift.size(); ++v) mb[v] = b.t[j].first[v] + shift[v];
        }
        if (j == b.t.size()) {
            r.t.push_back(a.t[i++]);
            continue;
        }
        if (i == a.t.size()) {
            FieldElem c = -(coef * b.t[j].second);
            if (!c.is_zero()) r.t.emplace_back(mb, c);
            ++j;
            continue;
        }
        int cmp = compare_monomials(a.t[i].first, mb, order);
        if (cmp > 0) {
            r.t.push_back(a.t[i++]);
        } else if (cmp < 0) {
            FieldElem c = -(coef * b.t[j].second);
            if (!c.is_zero()) r.t.emplace_back(mb, c);
            ++j;
        } else {
            FieldElem c = a.t[i].second - coef * b.t[j].second;
            if (!c.is_zero()) r.t.emplace_back(a.t[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

// Full normal form of f against basis; reducers tried in basis order.
OPoly reduce_full(OPoly f, const std::vector<OPoly>& basis, MonomialOrder order) {
    OPoly result;
    while (!f.is_zero()) {
        bool reduced = false;
        const Monomial& m = f.lm();
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (monomial_divides(g.lm(), m)) {
                FieldElem coef = f.lc() / g.lc();
                Monomial shift = monomial_quotient(m, g.lm());
                f = axpy(f, coef, shift, g, order);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.t.push_back(f.t.front());
            f.t.erase(f.t.begin());
        }
    }
    return result;
}

// Head reduction only: stops as soon as the leading term is irreducible.
// The cheap variant used inside the pair loop; tails are cleaned up once at
// the end.
OPoly reduce_top(OPoly f, const std::vector<OPoly>& basis, MonomialOrder order) {
    while (!f.is_zero()) {
        bool reduced = false;
        const Monomial& m = f.lm();
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (monomial_divides(g.lm(), m)) {
                FieldElem coef = f.lc() / g.lc();
                Monomial shift = monomial_quotient(m, g.lm());
                f = axpy(f, coef, shift, g, order);
                reduced = true;
                break;
            }
        }
        if (!reduced) break;
    }
    return f;
}

OPoly make_monic(OPoly f) {
    if (f.is_zero() || f.lc().is_one()) return f;
    FieldElem inv = f.lc().inv();
    for (auto& [m, c] : f.t) c = c * inv;
    return f;
}

struct PairKey {
    u64 deg;
    Monomial lcm;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (lcm != o.lcm) return lcm < o.lcm;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& G, MonomialOrder order) {
    std::vector<OPoly> basis;
    basis.reserve(G.size());
    for (const auto& g : G)
        if (!g.is_zero()) basis.push_back(to_opoly(g, order));
    // fixed deterministic reducer order: by head monomial, then size
    std::sort(basis.begin(), basis.end(), [order](const OPoly& a, const OPoly& b) {
        int c = compare_monomials(a.lm(), b.lm(), order);
        if (c != 0) return c < 0;
        return a.t.size() < b.t.size();
    });
    OPoly r = reduce_full(to_opoly(f, order), basis, order);
    return to_mpoly(r, f.ctx(), f.nvars());
}

GroebnerResult buchberger(std::vector<MPoly> gens, const GroebnerOptions& opts) {
    GroebnerResult res;
    const MonomialOrder order = opts.order;
    FieldPtr ctx;
    unsigned n = 0;
    for (const auto& g : gens) {
        if (!g.is_zero()) {
            ctx = g.ctx();
            n = g.nvars();
            break;
        }
    }
    if (!ctx) { // zero ideal
        res.ok = true;
        return res;
    }
    for (const auto& g : gens)
        if (!g.is_zero() && (g.nvars() != n || !g.ctx()->same_field(*ctx)))
            throw std::invalid_argument("buchberger: mixed variable counts or fields");

    std::vector<OPoly> basis;
    // deterministic input order
    std::sort(gens.begin(), gens.end(), [order](const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
        auto la = a.leading_term(order), lb = b.leading_term(order);
        int c = compare_monomials(la.first, lb.first, order);
        if (c != 0) return c < 0;
        return a.num_terms() < b.num_terms();
    });
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        OPoly og = make_monic(to_opoly(g, order));
        basis.push_back(std::move(og));
    }

    auto constant_found = [&](const OPoly& f) {
        return !f.is_zero() && monomial_degree(f.lm()) == 0;
    };
    for (const auto& b : basis) {
        if (constant_found(b)) {
            res.ok = true;
            res.basis = {MPoly::constant(ctx, n, 1)};
            res.stats.basis_size = 1;
            return res;
        }
    }

    std::set<PairKey> queue;
    std::set<std::pair<size_t, size_t>> pending;
    auto push_pair = [&](size_t i, size_t j) {
        Monomial l = monomial_lcm(basis[i].lm(), basis[j].lm());
        u64 deg = monomial_degree(l);
        if (opts.sugar_selection) {
            // sugar degree: conservative upper bound for the S-poly degree
            u64 si = monomial_degree(l) - monomial_degree(basis[i].lm());
            u64 sj = monomial_degree(l) - monomial_degree(basis[j].lm());
            u64 di = 0, dj = 0;
            for (const auto& [m, c] : basis[i].t) di = std::max(di, monomial_degree(m));
            for (const auto& [m, c] : basis[j].t) dj = std::max(dj, monomial_degree(m));
            deg = std::max(di + si, dj + sj);
        }
        queue.insert(PairKey{deg, std::move(l), i, j});
        pending.insert({i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    while (!queue.empty()) {
        if (res.stats.pairs_processed >= opts.max_pairs) {
            res.failure = "pair budget exhausted";
            return res;
        }
        if (basis.size() >= opts.max_basis) {
            res.failure = "basis size budget exhausted";
            return res;
        }
        PairKey key = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({key.i, key.j});
        ++res.stats.pairs_processed;

        const OPoly& fi = basis[key.i];
        const OPoly& fj = basis[key.j];

        // product criterion: coprime heads reduce to zero
        Monomial sum(fi.lm().size());
        for (size_t v = 0; v < sum.size(); ++v) sum[v] = fi.lm()[v] + fj.lm()[v];
        if (sum == key.lcm) {
            ++res.stats.reductions_to_zero;
            continue;
        }
        // chain criterion: a third element divides the lcm and both side
        // pairs were already handled
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == key.i || k == key.j || basis[k].is_zero()) continue;
            if (!monomial_divides(basis[k].lm(), key.lcm)) continue;
            auto pik = std::minmax(key.i, k);
            auto pjk = std::minmax(key.j, k);
            if (!pending.count({pik.first, pik.second}) && !pending.count({pjk.first, pjk.second}))
                skip = true;
        }
        if (skip) {
            ++res.stats.reductions_to_zero;
            continue;
        }

        // S-polynomial
        Monomial shift_i = monomial_quotient(key.lcm, fi.lm());
        Monomial shift_j = monomial_quotient(key.lcm, fj.lm());
        OPoly zero;
        OPoly si = axpy(zero, -ctx->one(), shift_i, fi, order); // x^{shift_i} * fi
        OPoly s = axpy(si, ctx->one(), shift_j, fj, order);     // ... - x^{shift_j} * fj
        OPoly r = reduce_top(std::move(s), basis, order);
        if (r.is_zero()) {
            ++res.stats.reductions_to_zero;
            continue;
        }
        r = make_monic(std::move(r));
        if (monomial_degree(r.lm()) == 0) {
            res.ok = true;
            res.basis = {MPoly::constant(ctx, n, 1)};
            res.stats.basis_size = 1;
            return res;
        }
        size_t idx = basis.size();
        basis.push_back(std::move(r));
        for (size_t i = 0; i < idx; ++i)
            if (!basis[i].is_zero()) push_pair(i, idx);
    }

    // minimalize: drop elements whose head is divisible by another head
    std::vector<OPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        bool dominated = false;
        for (size_t j = 0; j < basis.size() && !dominated; ++j) {
            if (i == j || basis[j].is_zero()) continue;
            if (monomial_divides(basis[j].lm(), basis[i].lm())) {
                if (basis[j].lm() == basis[i].lm() && j > i) continue; // keep the first of equal heads
                dominated = true;
            }
        }
        if (!dominated) minimal.push_back(basis[i]);
    }
    // reduce tails
    std::vector<OPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<OPoly> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(make_monic(reduce_full(minimal[i], others, order)));
    }
    std::sort(reduced.begin(), reduced.end(), [order](const OPoly& a, const OPoly& b) {
        return compare_monomials(a.lm(), b.lm(), order) < 0;
    });
    res.ok = true;
    res.stats.basis_size = reduced.size();
    for (const auto& g : reduced) res.basis.push_back(to_mpoly(g, ctx, n));
    return res;
}

std::vector<MPoly> field_equations(const FieldPtr& ctx, unsigned nvars) {
    const u64 q = ctx->q();
    if (q > 1u << 20) throw std::invalid_argument("field equations: field too large");
    std::vector<MPoly> out;
    out.reserve(nvars);
    for (unsigned i = 0; i < nvars; ++i) {
        MPoly f(ctx, nvars);
        Monomial m(nvars, 0);
        m[i] = static_cast<u32>(q);
        f.add_term(m, ctx->one());
        m[i] = 1;
        f.add_term(m, -ctx->one());
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<MPoly> add_field_equations(std::vector<MPoly> gens, const FieldPtr& ctx, unsigned nvars) {
    std::vector<MPoly> out;
    for (auto& g : gens)
        if (!g.is_zero()) out.push_back(std::move(g));
    for (auto& f : field_equations(ctx, nvars)) {
        bool already = false;
        for (const auto& g : out)
            if (g == f) { already = true; break; }
        if (!already) out.push_back(std::move(f));
    }
    return out;
}

namespace {

// Univariate content of a multivariate polynomial supported on one variable.
bool as_univariate(const MPoly& f, unsigned var, Poly* out) {
    const unsigned n = f.nvars();
    std::vector<FieldElem> coeffs;
    for (const auto& [m, c] : f.terms()) {
        for (unsigned i = 0; i < n; ++i)
            if (i != var && m[i]) return false;
        if (coeffs.size() <= m[var]) coeffs.resize(m[var] + 1, f.ctx()->zero());
        coeffs[m[var]] = c;
    }
    if (out) *out = Poly(f.ctx(), std::move(coeffs));
    return true;
}

struct SolveState {
    const std::vector<MPoly>* original;
    FieldPtr ctx;
    unsigned n;
    u64 budget;
    u64 used = 0;
    bool failed = false;
    std::string failure;
    std::vector<std::vector<FieldElem>> points;
};

void back_substitute(const std::vector<MPoly>& polys, std::map<unsigned, FieldElem>& assign,
                     unsigned next_var_plus1, SolveState& st) {
    if (st.failed) return;
    if (next_var_plus1 == 0) {
        // full assignment: verify against the original system
        std::vector<FieldElem> point;
        point.reserve(st.n);
        for (unsigned i = 0; i < st.n; ++i) point.push_back(assign.at(i));
        for (const auto& g : *st.original)
            if (!g.eval(point).is_zero()) return;
        st.points.push_back(std::move(point));
        return;
    }
    const unsigned var = next_var_plus1 - 1;
    // substitute what we know, then hunt for univariate constraints in `var`
    std::vector<MPoly> cur;
    cur.reserve(polys.size());
    bool inconsistent = false;
    for (const auto& g : polys) {
        MPoly s = g.substitute(assign);
        if (s.is_zero()) continue;
        if (s.is_constant()) { inconsistent = true; break; }
        cur.push_back(std::move(s));
    }
    if (inconsistent) return;

    Poly uni;
    Poly acc;
    bool have = false;
    for (const auto& g : cur) {
        if (as_univariate(g, var, &uni)) {
            acc = have ? gcd(acc, uni) : uni.monic();
            have = true;
        }
    }

    std::vector<FieldElem> candidates;
    if (have && acc.degree() >= 1) {
        candidates = roots_in_field(acc);
    } else if (have && acc.degree() == 0) {
        return; // constant nonzero constraint
    } else {
        // no isolating polynomial: enumerate the coordinate
        u64 q = st.ctx->q();
        if (st.used + q > st.budget) {
            st.failed = true;
            st.failure = "enumeration budget exhausted";
            return;
        }
        for (u64 i = 0; i < q; ++i) candidates.push_back(st.ctx->element_from_index(i));
    }
    st.used += candidates.size();
    if (st.used > st.budget) {
        st.failed = true;
        st.failure = "enumeration budget exhausted";
        return;
    }
    for (const auto& root : candidates) {
        assign.emplace(var, root);
        back_substitute(cur, assign, var, st);
        assign.erase(var);
        if (st.failed) return;
    }
}

} // namespace

VarietyResult variety(const std::vector<MPoly>& gens, const VarietyOptions& opts) {
    VarietyResult out;
    FieldPtr ctx;
    unsigned n = 0;
    for (const auto& g : gens) {
        if (!g.is_zero()) {
            ctx = g.ctx();
            n = g.nvars();
            break;
        }
    }
    if (!ctx) {
        out.failure = "variety of the zero ideal is not finite";
        return out;
    }

    GroebnerOptions gopts = opts.groebner;
    gopts.order = MonomialOrder::degrevlex;
    GroebnerResult drl = buchberger(gens, gopts);
    if (!drl.ok) {
        out.failure = "degrevlex basis: " + drl.failure;
        return out;
    }
    if (drl.basis.size() == 1 && drl.basis[0].is_constant() && !drl.basis[0].is_zero()) {
        out.ok = true;
        return out;
    }
    gopts.order = MonomialOrder::lex;
    GroebnerResult lex = buchberger(drl.basis, gopts);
    if (!lex.ok) {
        out.failure = "lex basis: " + lex.failure;
        return out;
    }

    SolveState st;
    st.original = &gens;
    st.ctx = ctx;
    st.n = n;
    st.budget = opts.max_scan;
    std::map<unsigned, FieldElem> assign;
    back_substitute(lex.basis, assign, n, st);
    if (st.failed) {
        out.failure = st.failure;
        return out;
    }
    std::sort(st.points.begin(), st.points.end(),
              [](const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
                  for (size_t i = 0; i < a.size(); ++i) {
                      if (a[i] == b[i]) continue;
                      return a[i].lex_less(b[i]);
                  }
                  return false;
              });
    out.ok = true;
    out.points = std::move(st.points);
    return out;
}

} // namespace ssp
