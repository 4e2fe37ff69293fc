#include "ssp/field.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ssp {

u64 add_mod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mul_mod(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % p);
}

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("inv_mod: zero");
    return pow_mod(a % p, p - 2, p); // p prime
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin bases for 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Dense polynomials over F_p (ascending coefficients), used only for modulus
// handling inside this translation unit.
using PPoly = std::vector<u64>;

void pp_trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pp_mul(const PPoly& a, const PPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
    pp_trim(r);
    return r;
}

// Remainder of a by monic m.
PPoly pp_rem(PPoly a, const PPoly& m, u64 p) {
    pp_trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        u64 lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead) {
            for (size_t i = 0; i < dm; ++i)
                a[shift + i] = sub_mod(a[shift + i], mul_mod(lead, m[i], p), p);
        }
        a.pop_back();
        pp_trim(a);
    }
    return a;
}

PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& m, u64 p) {
    return pp_rem(pp_mul(a, b, p), m, p);
}

PPoly pp_powmod(PPoly a, u64 e, const PPoly& m, u64 p) {
    PPoly r = {1};
    a = pp_rem(std::move(a), m, p);
    while (e) {
        if (e & 1) r = pp_mulmod(r, a, m, p);
        a = pp_mulmod(a, a, m, p);
        e >>= 1;
    }
    return r;
}

PPoly pp_gcd(PPoly a, PPoly b, u64 p) {
    pp_trim(a);
    pp_trim(b);
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        u64 lb = inv_mod(b.back(), p);
        PPoly bm(b.size());
        for (size_t i = 0; i < b.size(); ++i) bm[i] = mul_mod(b[i], lb, p);
        a = pp_rem(std::move(a), bm, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 la = inv_mod(a.back(), p);
        for (auto& c : a) c = mul_mod(c, la, p);
    }
    return a;
}

// x^{p^d} mod m, by iterating the p-power map.
PPoly pp_frob_power_of_x(const PPoly& m, u64 p, unsigned d) {
    PPoly t = {0, 1};
    for (unsigned i = 0; i < d; ++i) t = pp_powmod(std::move(t), p, m, p);
    return t;
}

bool pp_is_irreducible(const PPoly& m, u64 p) {
    const unsigned k = static_cast<unsigned>(m.size() - 1);
    if (k == 0) return false;
    if (k == 1) return true;
    // x^{p^k} == x mod m, and gcd(x^{p^{k/l}} - x, m) = 1 for prime l | k.
    PPoly xk = pp_frob_power_of_x(m, p, k);
    PPoly x = {0, 1};
    if (xk != x) return false;
    auto coprime_at = [&](unsigned d) {
        PPoly diff = pp_frob_power_of_x(m, p, d);
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = sub_mod(diff[1], 1, p);
        pp_trim(diff);
        return pp_gcd(diff, m, p).size() == 1;
    };
    unsigned rest = k;
    for (unsigned l = 2; l * l <= k; ++l) {
        if (rest % l) continue;
        while (rest % l == 0) rest /= l;
        if (!coprime_at(k / l)) return false;
    }
    if (rest > 1 && !coprime_at(k / rest)) return false;
    return true;
}

// Irreducibility with the Frobenius powers built up incrementally and early
// exits at the divisor checkpoints.
bool pp_is_irreducible_fast(const PPoly& m, u64 p) {
    const unsigned k = static_cast<unsigned>(m.size() - 1);
    if (k == 0) return false;
    if (k == 1) return true;
    if (m[0] == 0) return false; // divisible by x
    std::set<unsigned> checks;
    unsigned rest = k;
    for (unsigned l = 2; l * l <= k; ++l) {
        if (rest % l) continue;
        while (rest % l == 0) rest /= l;
        checks.insert(k / l);
    }
    if (rest > 1) checks.insert(k / rest);
    checks.insert(1); // cheap linear-factor prefilter
    PPoly t = {0, 1};
    PPoly x = {0, 1};
    for (unsigned d = 1; d <= k; ++d) {
        t = pp_powmod(std::move(t), p, m, p);
        if (d == k) {
            return t == x;
        }
        if (checks.count(d)) {
            PPoly diff = t;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = sub_mod(diff[1], 1, p);
            pp_trim(diff);
            if (pp_gcd(diff, m, p).size() != 1) return false;
        }
    }
    return false;
}

// Smallest monic irreducible of degree k in the canonical element-index
// order (constant coefficient varies fastest), so sparse low candidates like
// x^k + c and x^k + x + c are tried first.
PPoly pp_lowest_irreducible(u64 p, unsigned k) {
    std::vector<u64> c(k, 0);
    while (true) {
        PPoly m(c.begin(), c.end());
        m.push_back(1);
        if (pp_is_irreducible_fast(m, p)) return m;
        unsigned i = 0;
        while (i < k) {
            if (++c[i] < p) break;
            c[i] = 0;
            ++i;
        }
        if (i == k) throw std::logic_error("no irreducible found"); // cannot happen
    }
}

} // namespace

namespace {
// Process-wide context registry: repeated make() calls return the same
// instance, so Frobenius and embedding caches are shared.
std::mutex registry_mutex;
std::map<std::tuple<u64, unsigned, std::vector<u64>>, FieldPtr> registry;
} // namespace

FieldPtr FieldCtx::make(u64 p, unsigned k, const std::optional<std::vector<i64>>& modulus) {
    if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("field characteristic must be an odd prime");
    if (p >= (1ull << 61)) throw std::invalid_argument("characteristic too large");
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    std::vector<u64> m;
    if (k > 1) {
        if (modulus) {
            if (modulus->size() != static_cast<size_t>(k) + 1)
                throw std::invalid_argument("modulus degree mismatch");
            m.resize(k + 1);
            for (unsigned i = 0; i <= k; ++i) {
                i64 v = (*modulus)[i] % static_cast<i64>(p);
                if (v < 0) v += static_cast<i64>(p);
                m[i] = static_cast<u64>(v);
            }
            if (m[k] != 1) throw std::invalid_argument("modulus must be monic");
            if (!pp_is_irreducible(m, p)) throw std::invalid_argument("modulus is reducible");
        }
    } else if (modulus && modulus->size() > 2) {
        throw std::invalid_argument("modulus given for a prime field");
    }
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto it = registry.find({p, k, m});
        if (it != registry.end()) return it->second;
    }
    const bool generated = k > 1 && m.empty();
    if (generated) {
        m = pp_lowest_irreducible(p, k);
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto it = registry.find({p, k, m});
        if (it != registry.end()) {
            registry.emplace(std::make_tuple(p, k, std::vector<u64>{}), it->second);
            return it->second;
        }
    }
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->k_ = k;
    ctx->modulus_ = m;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto [pos, inserted] = registry.emplace(std::make_tuple(p, k, std::move(m)), ctx);
    if (generated) registry.emplace(std::make_tuple(p, k, std::vector<u64>{}), pos->second);
    return pos->second;
}

bool FieldCtx::q_fits_u64() const {
    __uint128_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
        q *= p_;
        if (q > ~0ull) return false;
    }
    return true;
}

u64 FieldCtx::q() const {
    if (!q_fits_u64()) throw std::overflow_error("field size exceeds 64 bits");
    u64 q = 1;
    for (unsigned i = 0; i < k_; ++i) q *= p_;
    return q;
}

bool FieldCtx::same_field(const FieldCtx& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

FieldElem FieldCtx::zero() const {
    return FieldElem(shared_from_this(), std::vector<u64>(k_, 0));
}

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::from_int(i64 v) const {
    std::vector<u64> c(k_, 0);
    i64 r = v % static_cast<i64>(p_);
    if (r < 0) r += static_cast<i64>(p_);
    c[0] = static_cast<u64>(r);
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem FieldCtx::from_coeffs(const std::vector<i64>& coeffs) const {
    if (coeffs.size() > k_) throw std::invalid_argument("coefficient vector too long");
    std::vector<u64> c(k_, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        i64 r = coeffs[i] % static_cast<i64>(p_);
        if (r < 0) r += static_cast<i64>(p_);
        c[i] = static_cast<u64>(r);
    }
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem FieldCtx::element_from_index(u64 idx) const {
    std::vector<u64> c(k_, 0);
    for (unsigned i = 0; i < k_ && idx; ++i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    if (idx) throw std::out_of_range("element index exceeds field size");
    return FieldElem(shared_from_this(), std::move(c));
}

u64 FieldCtx::index_of(const FieldElem& a) const {
    u64 idx = 0;
    for (unsigned i = k_; i-- > 0;) idx = idx * p_ + a.coeffs()[i];
    return idx;
}

FieldElem FieldCtx::gen() const {
    if (k_ == 1) throw std::logic_error("prime field has no modulus root");
    std::vector<u64> c(k_, 0);
    c[1] = 1;
    return FieldElem(shared_from_this(), std::move(c));
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "F_" << p_;
    if (k_ > 1) os << "^" << k_;
    return os.str();
}

const std::vector<u64>& FieldCtx::frobenius_matrix() const {
    std::lock_guard<std::mutex> lock(frob_mutex_);
    if (!frob_matrix_.empty() || k_ == 1) return frob_matrix_;
    // column i = coefficients of (t^i)^p = (t^p)^i mod modulus
    PPoly tp = pp_powmod({0, 1}, p_, modulus_, p_);
    frob_matrix_.assign(static_cast<size_t>(k_) * k_, 0);
    PPoly cur = {1};
    for (unsigned i = 0; i < k_; ++i) {
        for (size_t j = 0; j < cur.size(); ++j) frob_matrix_[static_cast<size_t>(i) * k_ + j] = cur[j];
        if (i + 1 < k_) cur = pp_mulmod(cur, tp, modulus_, p_);
    }
    return frob_matrix_;
}

FieldElem::FieldElem(FieldPtr ctx, std::vector<u64> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.size() != ctx_->k()) throw std::invalid_argument("coefficient length mismatch");
}

static void require_same(const FieldElem& a, const FieldElem& b) {
    if (a.ctx().get() == b.ctx().get()) return;
    if (!a.ctx() || !b.ctx() || !a.ctx()->same_field(*b.ctx()))
        throw std::invalid_argument("field context mismatch: " +
                                    (a.ctx() ? a.ctx()->describe() : std::string("null")) + " vs " +
                                    (b.ctx() ? b.ctx()->describe() : std::string("null")));
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool FieldElem::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

FieldElem FieldElem::operator-() const {
    std::vector<u64> r(c_.size());
    const u64 p = ctx_->p();
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] ? p - c_[i] : 0;
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same(*this, o);
    std::vector<u64> r(c_.size());
    const u64 p = ctx_->p();
    for (size_t i = 0; i < c_.size(); ++i) r[i] = add_mod(c_[i], o.c_[i], p);
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same(*this, o);
    std::vector<u64> r(c_.size());
    const u64 p = ctx_->p();
    for (size_t i = 0; i < c_.size(); ++i) r[i] = sub_mod(c_[i], o.c_[i], p);
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same(*this, o);
    const u64 p = ctx_->p();
    const unsigned k = ctx_->k();
    if (k == 1) {
        return FieldElem(ctx_, {mul_mod(c_[0], o.c_[0], p)});
    }
    std::vector<u64> prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        if (!c_[i]) continue;
        for (unsigned j = 0; j < k; ++j)
            prod[i + j] = add_mod(prod[i + j], mul_mod(c_[i], o.c_[j], p), p);
    }
    // reduce by monic modulus
    const auto& m = ctx_->modulus();
    for (unsigned d = 2 * k - 2; d >= k; --d) {
        u64 lead = prod[d];
        if (lead) {
            prod[d] = 0;
            for (unsigned i = 0; i < k; ++i)
                prod[d - k + i] = sub_mod(prod[d - k + i], mul_mod(lead, m[i], p), p);
        }
    }
    prod.resize(k);
    return FieldElem(ctx_, std::move(prod));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

bool FieldElem::operator==(const FieldElem& o) const {
    require_same(*this, o);
    return c_ == o.c_;
}

bool FieldElem::lex_less(const FieldElem& o) const {
    require_same(*this, o);
    return c_ < o.c_;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    const u64 p = ctx_->p();
    const unsigned k = ctx_->k();
    if (k == 1) return FieldElem(ctx_, {inv_mod(c_[0], p)});
    // extended Euclid in F_p[t] against the modulus
    PPoly r0(ctx_->modulus());
    PPoly r1(c_.begin(), c_.end());
    pp_trim(r1);
    PPoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        u64 l1 = inv_mod(r1.back(), p);
        PPoly q;
        PPoly rem = r0;
        pp_trim(rem);
        while (rem.size() >= r1.size() && !rem.empty()) {
            size_t shift = rem.size() - r1.size();
            u64 c = mul_mod(rem.back(), l1, p);
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = add_mod(q[shift], c, p);
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = sub_mod(rem[shift + i], mul_mod(c, r1[i], p), p);
            pp_trim(rem);
        }
        PPoly qs1 = pp_mul(q, s1, p);
        PPoly s2 = s0;
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] = sub_mod(s2[i], qs1[i], p);
        pp_trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd (a unit since modulus irreducible and input nonzero)
    if (r0.size() != 1) throw std::logic_error("inverse: gcd not constant");
    u64 scale = inv_mod(r0[0], p);
    std::vector<u64> out(k, 0);
    for (size_t i = 0; i < s0.size(); ++i) out[i] = mul_mod(s0[i], scale, p);
    return FieldElem(ctx_, std::move(out));
}

std::string FieldElem::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

FieldElem pow(const FieldElem& a, u64 e) {
    FieldElem r = a.ctx()->one();
    FieldElem b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElem frobenius(const FieldElem& a, u64 m) {
    const auto& ctx = a.ctx();
    const unsigned k = ctx->k();
    if (k == 1) return a;
    m %= k;
    if (m == 0) return a;
    const auto& F = ctx->frobenius_matrix();
    const u64 p = ctx->p();
    std::vector<u64> v = a.coeffs();
    for (u64 step = 0; step < m; ++step) {
        std::vector<u64> w(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            if (!v[i]) continue;
            for (unsigned j = 0; j < k; ++j)
                w[j] = add_mod(w[j], mul_mod(v[i], F[static_cast<size_t>(i) * k + j], p), p);
        }
        v = std::move(w);
    }
    return FieldElem(ctx, std::move(v));
}

u64 norm_to_prime(const FieldElem& a) {
    const auto& ctx = a.ctx();
    const unsigned k = ctx->k();
    if (k == 1) return a.coeffs()[0];
    FieldElem acc = a;
    FieldElem cur = a;
    for (unsigned i = 1; i < k; ++i) {
        cur = frobenius(cur, 1);
        acc = acc * cur;
    }
    // the norm lands in the prime field
    for (unsigned i = 1; i < k; ++i)
        if (acc.coeffs()[i]) throw std::logic_error("norm not in prime field");
    return acc.coeffs()[0];
}

bool is_square(const FieldElem& a) {
    if (a.is_zero()) throw std::domain_error("is_square: zero input");
    const u64 p = a.ctx()->p();
    // a^{(q-1)/2} = norm(a)^{(p-1)/2}, evaluated in F_p
    u64 n = norm_to_prime(a);
    return pow_mod(n, (p - 1) / 2, p) == 1;
}

namespace {

// Arithmetic in R = ctx[y]/(y^2 - a): pairs (c0, c1) with y^2 = a.
struct QuadRing {
    FieldElem a;
    std::pair<FieldElem, FieldElem> mul(const std::pair<FieldElem, FieldElem>& u,
                                        const std::pair<FieldElem, FieldElem>& v) const {
        return {u.first * v.first + u.second * v.second * a,
                u.first * v.second + u.second * v.first};
    }
};

} // namespace

FieldElem sqrt(const FieldElem& a) {
    const auto& ctx = a.ctx();
    if (a.is_zero()) return ctx->zero();
    if (!is_square(a)) throw std::domain_error("sqrt: non-square input");
    const u64 p = ctx->p();
    const unsigned k = ctx->k();
    // y^p = a^{(p-1)/2} * y in R = ctx[y]/(y^2 - a)
    QuadRing R{a};
    FieldElem w = pow(a, (p - 1) / 2);
    auto result_of = [&](const FieldElem& r) {
        FieldElem m = -r;
        return r.lex_less(m) ? r : m;
    };
    // Split y^2 - a by gcd with (y + delta)^{(q-1)/2} - 1, walking delta
    // through the deterministic element enumeration.
    const u64 wrap = ctx->q_fits_u64() ? ctx->q() : ~0ull;
    for (u64 di = 0;; ++di) {
        FieldElem delta = ctx->element_from_index(di % wrap);
        std::pair<FieldElem, FieldElem> t{delta, ctx->one()};
        // t^s where s = 1 + p + ... + p^{k-1}, via the p-power ring map
        auto frob_R = [&](const std::pair<FieldElem, FieldElem>& u) {
            return std::pair<FieldElem, FieldElem>{frobenius(u.first, 1), frobenius(u.second, 1) * w};
        };
        std::pair<FieldElem, FieldElem> acc = t, cur = t;
        for (unsigned i = 1; i < k; ++i) {
            cur = frob_R(cur);
            acc = R.mul(acc, cur);
        }
        // acc^{(p-1)/2}
        std::pair<FieldElem, FieldElem> res{ctx->one(), ctx->zero()};
        std::pair<FieldElem, FieldElem> base = acc;
        u64 e = (p - 1) / 2;
        while (e) {
            if (e & 1) res = R.mul(res, base);
            base = R.mul(base, base);
            e >>= 1;
        }
        // gcd(res - 1, y^2 - a): res - 1 = (c0 - 1) + c1 y
        FieldElem c0 = res.first - ctx->one();
        FieldElem c1 = res.second;
        if (!c1.is_zero()) {
            FieldElem r = -(c0 / c1);
            if (r * r == a) return result_of(r);
        }
        if (di > 4 * (k + 2) + 64) throw std::logic_error("sqrt: splitting failed");
    }
}

FieldElem find_nonsquare(const FieldPtr& ctx) {
    for (u64 i = 1;; ++i) {
        FieldElem a = ctx->element_from_index(i);
        if (!is_square(a)) return a;
    }
}

u64 multiplicative_order(const FieldElem& a) {
    if (a.is_zero()) throw std::domain_error("order of zero");
    u64 n = a.ctx()->q() - 1;
    if (n > (1ull << 40)) throw std::overflow_error("order computation out of scope");
    u64 order = n;
    u64 m = n;
    for (u64 d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        while (m % d == 0) m /= d;
        while (order % d == 0 && pow(a, order / d).is_one()) order /= d;
    }
    if (m > 1) {
        while (order % m == 0 && pow(a, order / m).is_one()) order /= m;
    }
    return order;
}

} // namespace ssp
