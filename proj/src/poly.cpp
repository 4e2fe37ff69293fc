#include "ssp/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ssp {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(FieldPtr ctx, std::vector<FieldElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& e : c_)
        if (!e.ctx()->same_field(*ctx_)) throw std::invalid_argument("poly coefficient from wrong field");
    trim();
}

Poly Poly::from_ints(const FieldPtr& ctx, const std::vector<i64>& coeffs) {
    std::vector<FieldElem> c;
    c.reserve(coeffs.size());
    for (i64 v : coeffs) c.push_back(ctx->from_int(v));
    return Poly(ctx, std::move(c));
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.ctx(), {c}); }

Poly Poly::x(const FieldPtr& ctx) { return Poly(ctx, {ctx->zero(), ctx->one()}); }

FieldElem Poly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return ctx_->zero();
}

FieldElem Poly::leading() const {
    if (c_.empty()) return ctx_->zero();
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<FieldElem> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<FieldElem> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(coeff(i) - o.coeff(i));
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator*(const FieldElem& s) const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const auto& e : c_) r.push_back(e * s);
    return Poly(ctx_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const auto& e : c_) r.push_back(-e);
    return Poly(ctx_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(ctx_);
    std::vector<FieldElem> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * ctx_->from_int(static_cast<i64>(i)));
    return Poly(ctx_, std::move(r));
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem r = ctx_->zero();
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::shifted(unsigned n) const {
    if (is_zero() || n == 0) return n == 0 ? *this : Poly(ctx_);
    std::vector<FieldElem> r(c_.size() + n, ctx_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i + n] = c_[i];
    return Poly(ctx_, std::move(r));
}

bool Poly::lex_less(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == o.c_[i]) continue;
        return c_[i].lex_less(o.c_[i]);
    }
    return false;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].str() << "*x^" << i;
        first = false;
    }
    return os.str();
}

Poly pow(const Poly& a, u64 e) {
    Poly r = Poly::constant(a.ctx()->one());
    Poly b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& ctx = a.ctx();
    FieldElem linv = b.leading().inv();
    std::vector<FieldElem> rem(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {Poly(ctx), a};
    std::vector<FieldElem> q(static_cast<size_t>(dq) + 1, ctx->zero());
    for (int i = a.degree(); i >= db; --i) {
        FieldElem c = rem[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        FieldElem f = c * linv;
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= f * b.coeff(static_cast<size_t>(j));
    }
    return {Poly(ctx, std::move(q)), Poly(ctx, std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
    if (f.degree() == 0) return true;
    Poly d = f.derivative();
    if (d.is_zero()) return false; // f is a p-th power
    return gcd(f, d).degree() == 0;
}

namespace {

struct SplitMix {
    u64 s;
    u64 next() {
        u64 z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

u64 poly_hash(const Poly& f) {
    u64 h = 1469598103934665603ull;
    auto mix = [&](u64 v) { h = (h ^ v) * 1099511628211ull; };
    mix(f.ctx()->p());
    mix(f.ctx()->k());
    for (const auto& c : f.coeffs())
        for (u64 v : c.coeffs()) mix(v + 1);
    return h;
}

FieldElem random_elem(const FieldPtr& ctx, SplitMix& rng) {
    std::vector<i64> c(ctx->k());
    for (auto& v : c) v = static_cast<i64>(rng.next() % ctx->p());
    return ctx->from_coeffs(c);
}

Poly random_poly(const FieldPtr& ctx, unsigned deg_below, SplitMix& rng) {
    std::vector<FieldElem> c;
    c.reserve(deg_below);
    for (unsigned i = 0; i < deg_below; ++i) c.push_back(random_elem(ctx, rng));
    return Poly(ctx, std::move(c));
}

// Arithmetic modulo a fixed monic polynomial, with the p-power map cached.
struct ModRing {
    Poly f;
    FieldPtr ctx;
    Poly xp; // x^p mod f

    explicit ModRing(Poly fm) : f(std::move(fm)), ctx(f.ctx()) {
        Poly b = Poly::x(ctx);
        Poly r = Poly::constant(ctx->one());
        u64 e = ctx->p();
        while (e) {
            if (e & 1) r = divrem(r * b, f).second;
            b = divrem(b * b, f).second;
            e >>= 1;
        }
        xp = r;
    }

    Poly mul(const Poly& a, const Poly& b) const { return divrem(a * b, f).second; }

    Poly pow_u64(Poly a, u64 e) const {
        Poly r = Poly::constant(ctx->one());
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // t^p mod f: Frobenius on coefficients, then Horner in x^p.
    Poly frob_p(const Poly& t) const {
        Poly r(ctx);
        for (size_t i = t.coeffs().size(); i-- > 0;) {
            r = mul(r, xp);
            r = r + Poly::constant(frobenius(t.coeffs()[i], 1));
        }
        return r;
    }

    // t^{p^m} mod f.
    Poly frob_pm(Poly t, u64 m) const {
        for (u64 i = 0; i < m; ++i) t = frob_p(t);
        return t;
    }

    // t^{(Q-1)/2} mod f where Q = q^d = p^{k*d}, via
    // (Q-1)/2 = (p-1)/2 * (1 + p + ... + p^{k*d-1}).
    Poly pow_half(const Poly& t, unsigned d) const {
        const u64 steps = static_cast<u64>(ctx->k()) * d;
        Poly acc = divrem(t, f).second;
        Poly cur = acc;
        for (u64 i = 1; i < steps; ++i) {
            cur = frob_p(cur);
            acc = mul(acc, cur);
        }
        return pow_u64(acc, (ctx->p() - 1) / 2);
    }
};

// Cantor-Zassenhaus: split a monic product of degree-d irreducibles.
void edf(const Poly& h, unsigned d, SplitMix& rng, std::vector<Poly>& out) {
    if (h.degree() == static_cast<int>(d)) {
        out.push_back(h.monic());
        return;
    }
    const auto& ctx = h.ctx();
    ModRing R(h.monic());
    while (true) {
        Poly t = random_poly(ctx, static_cast<unsigned>(h.degree()), rng);
        if (t.is_zero()) continue;
        Poly w = R.pow_half(t, d) - Poly::constant(ctx->one());
        Poly g = gcd(w, h);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            edf(g, d, rng, out);
            edf(divrem(h, g).first, d, rng, out);
            return;
        }
    }
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Poly, unsigned>> ddf(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const auto& ctx = f.ctx();
    Poly rest = f.monic();
    ModRing R(rest);
    Poly xq = R.frob_pm(Poly::x(ctx), ctx->k()); // x^q mod f
    Poly xqd = xq;
    unsigned d = 1;
    while (rest.degree() >= static_cast<int>(2 * d)) {
        Poly g = gcd(xqd - Poly::x(ctx), rest);
        if (g.degree() > 0) {
            out.emplace_back(g.monic(), d);
            rest = divrem(rest, g).first;
        }
        ++d;
        if (rest.degree() < static_cast<int>(2 * d)) break;
        // advance xqd to x^{q^d} modulo the original modulus of R
        for (unsigned i = 0; i < ctx->k(); ++i) xqd = R.frob_p(xqd);
    }
    if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<unsigned>(rest.degree()));
    return out;
}

// p-th root of a polynomial whose derivative vanishes: f(x) = g(x^p).
Poly pth_root(const Poly& f) {
    const auto& ctx = f.ctx();
    const u64 p = ctx->p();
    std::vector<FieldElem> c;
    for (size_t i = 0; i <= static_cast<size_t>(f.degree()); i += p) {
        // coefficient p-th root: c^(p^(k-1))
        c.push_back(frobenius(f.coeff(i), ctx->k() - 1));
    }
    return Poly(ctx, std::move(c));
}

// Yun-style squarefree decomposition adapted to characteristic p.
void squarefree_parts(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
    Poly fm = f.monic();
    if (fm.degree() == 0) return;
    Poly d = fm.derivative();
    if (d.is_zero()) {
        squarefree_parts(pth_root(fm), mult * static_cast<unsigned>(fm.ctx()->p()), out);
        return;
    }
    Poly c = gcd(fm, d);
    Poly w = divrem(fm, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = divrem(w, y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
        ++i;
        w = y;
        c = divrem(c, y).first;
    }
    if (c.degree() > 0) squarefree_parts(pth_root(c), mult * static_cast<unsigned>(fm.ctx()->p()), out);
}

} // namespace

std::vector<PolyFactor> factor(const Poly& f, u64 seed) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    SplitMix rng{seed ^ poly_hash(f)};
    std::vector<std::pair<Poly, unsigned>> parts;
    squarefree_parts(f, 1, parts);
    std::vector<PolyFactor> out;
    for (const auto& [part, mult] : parts) {
        for (const auto& [prod, d] : ddf(part)) {
            std::vector<Poly> irr;
            edf(prod, d, rng, irr);
            for (auto& g : irr) out.push_back({std::move(g), mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return a.factor.lex_less(b.factor); });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

std::vector<FieldElem> roots_in_field(const Poly& f, u64 seed) {
    std::vector<FieldElem> roots;
    for (const auto& [g, mult] : factor(f, seed)) {
        if (g.degree() != 1) continue;
        FieldElem r = -g.coeff(0);
        for (unsigned i = 0; i < mult; ++i) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(),
              [](const FieldElem& a, const FieldElem& b) { return a.lex_less(b); });
    return roots;
}

unsigned splitting_degree(const Poly& f, u64 seed) {
    unsigned l = 1;
    for (const auto& [g, mult] : factor(f, seed))
        l = static_cast<unsigned>(std::lcm(l, static_cast<unsigned>(g.degree())));
    return l;
}

Poly embed_poly(const Poly& f, const FieldPtr& L) {
    std::vector<FieldElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& e : f.coeffs()) c.push_back(embed(e, L));
    return Poly(L, std::move(c));
}

namespace {

// One root of a polynomial that splits into linear factors over its field.
FieldElem find_one_root(const Poly& h, SplitMix& rng) {
    if (h.degree() == 1) return -(h.coeff(0) / h.coeff(1));
    const auto& ctx = h.ctx();
    ModRing R(h.monic());
    while (true) {
        Poly t = random_poly(ctx, static_cast<unsigned>(h.degree()), rng);
        if (t.degree() < 1) continue;
        Poly w = R.pow_half(t, 1) - Poly::constant(ctx->one());
        Poly g = gcd(w, h);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            const Poly& smaller = g.degree() * 2 <= h.degree() ? g : divrem(h, g).first;
            return find_one_root(smaller, rng);
        }
    }
}

} // namespace

std::vector<FieldElem> roots_in_extension(const Poly& f, const FieldPtr& L, u64 seed) {
    if (f.is_zero()) throw std::invalid_argument("roots_in_extension: zero polynomial");
    const auto& ctx = f.ctx();
    if (L->p() != ctx->p()) throw std::invalid_argument("roots_in_extension: characteristic mismatch");
    if (L->k() % ctx->k()) throw std::invalid_argument("roots_in_extension: incompatible degrees");
    const unsigned rel = L->k() / ctx->k();
    SplitMix rng{seed ^ poly_hash(f) ^ 0xabcdefull};
    std::vector<FieldElem> roots;
    for (const auto& [g, mult] : factor(f, seed)) {
        const unsigned d = static_cast<unsigned>(g.degree());
        if (rel % d)
            throw std::invalid_argument("roots_in_extension: extension too small for factor of degree " +
                                        std::to_string(d));
        Poly gL = embed_poly(g, L);
        FieldElem r = find_one_root(gL, rng);
        // remaining roots of the irreducible factor: conjugates under the
        // q-power Frobenius of the coefficient field
        FieldElem cur = r;
        for (unsigned i = 0; i < d; ++i) {
            if (!gL.eval(cur).is_zero()) throw std::logic_error("roots_in_extension: conjugate not a root");
            for (unsigned m = 0; m < mult; ++m) roots.push_back(cur);
            cur = frobenius(cur, ctx->k());
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const FieldElem& a, const FieldElem& b) { return a.lex_less(b); });
    return roots;
}

Poly compose(const Poly& f, const Poly& g) {
    Poly r(f.ctx());
    for (size_t i = f.coeffs().size(); i-- > 0;) r = r * g + Poly::constant(f.coeffs()[i]);
    return r;
}

Mat2 Mat2::identity(const FieldPtr& ctx) {
    return Mat2{ctx->one(), ctx->zero(), ctx->zero(), ctx->one()};
}

FieldElem Mat2::det() const { return a * d - b * c; }

Mat2 Mat2::mul(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const {
    FieldElem dt = det();
    if (dt.is_zero()) throw std::domain_error("singular matrix");
    FieldElem di = dt.inv();
    return Mat2{d * di, -(b * di), -(c * di), a * di};
}

Mat2 Mat2::scaled(const FieldElem& s) const { return Mat2{a * s, b * s, c * s, d * s}; }

bool Mat2::operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

std::string Mat2::str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

BinaryForm::BinaryForm(FieldPtr ctx, unsigned degree)
    : ctx_(std::move(ctx)), d_(degree), c_(degree + 1, ctx_->zero()) {}

BinaryForm::BinaryForm(FieldPtr ctx, unsigned degree, std::vector<FieldElem> coeffs)
    : ctx_(std::move(ctx)), d_(degree), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<size_t>(d_) + 1) throw std::invalid_argument("binary form length mismatch");
}

BinaryForm BinaryForm::operator*(const FieldElem& s) const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const auto& e : c_) r.push_back(e * s);
    return BinaryForm(ctx_, d_, std::move(r));
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    if (d_ != o.d_) throw std::invalid_argument("binary form degree mismatch");
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.push_back(c_[i] - o.c_[i]);
    return BinaryForm(ctx_, d_, std::move(r));
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    if (d_ != o.d_) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const FieldElem& e) { return e.is_zero(); });
}

BinaryForm homogenize(const Poly& f, unsigned g) {
    const unsigned d = 2 * g + 2;
    if (f.degree() > static_cast<int>(d)) throw std::invalid_argument("degree exceeds 2g+2");
    std::vector<FieldElem> c;
    c.reserve(d + 1);
    for (unsigned i = 0; i <= d; ++i) c.push_back(f.coeff(i));
    return BinaryForm(f.ctx(), d, std::move(c));
}

Poly dehomogenize(const BinaryForm& F) {
    return Poly(F.ctx(), F.coeffs());
}

BinaryForm transform(const BinaryForm& F, const Mat2& h) {
    const auto& ctx = F.ctx();
    if (h.det().is_zero()) throw std::domain_error("transform: singular matrix");
    const unsigned d = F.form_degree();
    // powers of the two linear forms aX+bZ and cX+dZ, as coefficient vectors in X
    std::vector<std::vector<FieldElem>> top(d + 1), bot(d + 1);
    top[0] = {ctx->one()};
    bot[0] = {ctx->one()};
    for (unsigned i = 1; i <= d; ++i) {
        top[i].assign(i + 1, ctx->zero());
        bot[i].assign(i + 1, ctx->zero());
        for (unsigned j = 0; j < i; ++j) {
            top[i][j + 1] += top[i - 1][j] * h.a;
            top[i][j] += top[i - 1][j] * h.b;
            bot[i][j + 1] += bot[i - 1][j] * h.c;
            bot[i][j] += bot[i - 1][j] * h.d;
        }
    }
    std::vector<FieldElem> out(d + 1, ctx->zero());
    for (unsigned i = 0; i <= d; ++i) {
        if (F.coeff(i).is_zero()) continue;
        // F_i * (aX+bZ)^i (cX+dZ)^{d-i}
        const auto& A = top[i];
        const auto& B = bot[d - i];
        for (unsigned s = 0; s < A.size(); ++s) {
            if (A[s].is_zero()) continue;
            FieldElem fa = F.coeff(i) * A[s];
            for (unsigned t = 0; t < B.size(); ++t) {
                if (B[t].is_zero()) continue;
                out[s + t] += fa * B[t];
            }
        }
    }
    return BinaryForm(ctx, d, std::move(out));
}

} // namespace ssp
