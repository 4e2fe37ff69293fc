#include "ssp/isom.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ssp {

HyperellipticCurve curve_over(const HyperellipticCurve& C, const FieldPtr& K) {
    if (C.ctx->same_field(*K)) return C;
    return HyperellipticCurve::make(K, C.g, embed(C.c, K), embed_poly(C.f, K), true);
}

HyperellipticCurve quadratic_twist(const HyperellipticCurve& C) {
    FieldElem c2 = C.c.is_one() ? find_nonsquare(C.ctx) : C.ctx->one();
    return HyperellipticCurve::make(C.ctx, C.g, c2, C.f, true);
}

namespace {

BinaryForm normalized_form(const HyperellipticCurve& C) {
    return homogenize(C.f * C.c.inv(), C.g);
}

// Splitting degrees and root sets are intrinsic to (f, L); pairwise
// classification revisits the same curves constantly, so both are memoized.
std::string field_key(const FieldPtr& F) {
    std::string k = std::to_string(F->p()) + "^" + std::to_string(F->k()) + ":";
    for (u64 v : F->modulus()) k += std::to_string(v) + ",";
    return k;
}

std::string poly_key(const Poly& f) {
    std::string k = field_key(f.ctx()) + "|";
    for (const auto& c : f.coeffs()) {
        for (u64 v : c.coeffs()) k += std::to_string(v) + ",";
        k += ";";
    }
    return k;
}

std::mutex isom_cache_mutex;
std::map<std::string, unsigned> splitting_cache;
std::map<std::string, std::shared_ptr<const std::vector<FieldElem>>> roots_cache;

unsigned cached_splitting_degree(const Poly& f, u64 seed) {
    std::string key = poly_key(f);
    {
        std::lock_guard<std::mutex> lock(isom_cache_mutex);
        auto it = splitting_cache.find(key);
        if (it != splitting_cache.end()) return it->second;
    }
    unsigned m = splitting_degree(f, seed);
    std::lock_guard<std::mutex> lock(isom_cache_mutex);
    splitting_cache.emplace(std::move(key), m);
    return m;
}

std::shared_ptr<const std::vector<FieldElem>> cached_roots(const Poly& f, const FieldPtr& L, u64 seed) {
    std::string key = poly_key(f) + "->" + field_key(L);
    {
        std::lock_guard<std::mutex> lock(isom_cache_mutex);
        auto it = roots_cache.find(key);
        if (it != roots_cache.end()) return it->second;
    }
    auto roots = std::make_shared<const std::vector<FieldElem>>(roots_in_extension(f, L, seed));
    std::lock_guard<std::mutex> lock(isom_cache_mutex);
    auto [pos, inserted] = roots_cache.emplace(std::move(key), std::move(roots));
    return pos->second;
}

// mu with T = mu * F, or nullopt if T is not proportional to F
std::optional<FieldElem> proportionality(const BinaryForm& T, const BinaryForm& F) {
    const unsigned d = F.form_degree();
    FieldElem mu = F.ctx()->zero();
    bool have = false;
    for (unsigned i = 0; i <= d; ++i) {
        if (F.coeff(i).is_zero()) {
            if (!T.coeff(i).is_zero()) return std::nullopt;
            continue;
        }
        FieldElem r = T.coeff(i) / F.coeff(i);
        if (!have) {
            mu = r;
            have = true;
        } else if (!(r == mu)) {
            return std::nullopt;
        }
    }
    if (!have || mu.is_zero()) return std::nullopt;
    return mu;
}

} // namespace

IsomSearch all_isomorphisms(const HyperellipticCurve& C1in, const HyperellipticCurve& C2in,
                            const FieldPtr& K, bool closure, bool stop_at_first, u64 seed) {
    if (C1in.g != C2in.g) throw std::invalid_argument("isomorphism test: genus mismatch");
    const HyperellipticCurve C1 = curve_over(C1in, K);
    const HyperellipticCurve C2 = curve_over(C2in, K);
    const unsigned g = C1.g;

    const unsigned m1 = cached_splitting_degree(C1.f, seed);
    const unsigned m2 = cached_splitting_degree(C2.f, seed);
    const unsigned m = static_cast<unsigned>(std::lcm(m1, m2));
    const unsigned Lk = K->k() * m * (closure ? 2 : 1);
    FieldPtr L = Lk == K->k() ? K : FieldCtx::make(K->p(), Lk);

    auto roots1_ptr = cached_roots(C1.f, L, seed);
    auto roots2_ptr = cached_roots(C2.f, L, seed);
    const auto& roots1 = *roots1_ptr;
    const auto& roots2 = *roots2_ptr;

    IsomSearch out;
    out.field = closure ? L : K;
    if (roots1.size() != roots2.size()) return out;
    const size_t n = roots1.size();

    std::map<std::vector<u64>, size_t> root1_index;
    for (size_t i = 0; i < n; ++i) root1_index.emplace(roots1[i].coeffs(), i);

    const BinaryForm F1 = normalized_form(C1);
    const BinaryForm F2 = normalized_form(C2);
    const BinaryForm F1L = closure ? homogenize(embed_poly(dehomogenize(F1), L), g) : F1;
    const BinaryForm F2L = closure ? homogenize(embed_poly(dehomogenize(F2), L), g) : F2;

    const FieldElem& p1 = roots1[0];
    const FieldElem& p2 = roots1[1];
    const FieldElem& p3 = roots1[2];
    // B maps (p1,p2,p3) to (0, inf, 1); M = adj(B) * A maps q_i to p_i
    Mat2 B{p3 - p2, -(p1 * (p3 - p2)), p3 - p1, -(p2 * (p3 - p1))};
    Mat2 Badj{B.d, -B.b, -B.c, B.a};

    for (size_t i1 = 0; i1 < n; ++i1) {
        for (size_t i2 = 0; i2 < n; ++i2) {
            if (i2 == i1) continue;
            for (size_t i3 = 0; i3 < n; ++i3) {
                if (i3 == i1 || i3 == i2) continue;
                const FieldElem& q1 = roots2[i1];
                const FieldElem& q2 = roots2[i2];
                const FieldElem& q3 = roots2[i3];
                Mat2 A{q3 - q2, -(q1 * (q3 - q2)), q3 - q1, -(q2 * (q3 - q1))};
                Mat2 M = Badj.mul(A);
                if (M.det().is_zero()) continue;
                // must permute the branch loci
                bool maps = true;
                for (size_t r = 0; r < n && maps; ++r) {
                    if (r == i1 || r == i2 || r == i3) continue;
                    FieldElem x = M.a * roots2[r] + M.b;
                    FieldElem z = M.c * roots2[r] + M.d;
                    if (z.is_zero()) {
                        maps = false;
                        break;
                    }
                    maps = root1_index.count((x / z).coeffs()) > 0;
                }
                if (!maps) continue;

                // normalize so the first nonzero entry is 1
                FieldElem alpha = !M.a.is_zero() ? M.a : (!M.b.is_zero() ? M.b : (!M.c.is_zero() ? M.c : M.d));
                Mat2 Mn = M.scaled(alpha.inv());

                Mat2 h = Mn;
                if (!closure) {
                    FieldElem ha, hb, hc, hd;
                    if (!in_subfield(Mn.a, K, &ha) || !in_subfield(Mn.b, K, &hb) ||
                        !in_subfield(Mn.c, K, &hc) || !in_subfield(Mn.d, K, &hd))
                        continue;
                    h = Mat2{ha, hb, hc, hd};
                }
                const BinaryForm& G1 = closure ? F1L : F1;
                const BinaryForm& G2 = closure ? F2L : F2;
                BinaryForm T = transform(G1, h);
                auto mu = proportionality(T, G2);
                if (!mu) continue;
                if (!is_square(*mu)) continue;
                FieldElem lambda = sqrt(*mu);
                if (!(transform(G1, h) == G2 * (lambda * lambda)))
                    throw std::logic_error("isomorphism witness failed verification");
                out.pairs.emplace_back(h, lambda);
                if (stop_at_first) return out;
            }
        }
    }
    return out;
}

std::optional<IsomWitness> is_isomorphic(const HyperellipticCurve& C1, const HyperellipticCurve& C2,
                                         const FieldPtr& K, u64 seed) {
    auto r = all_isomorphisms(C1, C2, K, false, true, seed);
    if (r.pairs.empty()) return std::nullopt;
    return IsomWitness{r.pairs[0].first, r.pairs[0].second, r.field};
}

std::optional<IsomWitness> is_isomorphic_closure(const HyperellipticCurve& C1,
                                                 const HyperellipticCurve& C2, u64 seed) {
    FieldPtr K = common_field({C1, C2});
    auto r = all_isomorphisms(C1, C2, K, true, true, seed);
    if (r.pairs.empty()) return std::nullopt;
    return IsomWitness{r.pairs[0].first, r.pairs[0].second, r.field};
}

std::vector<MPoly> transform_coefficients_symbolic(const BinaryForm& F, unsigned nvars,
                                                   unsigned b_start) {
    const auto& ctx = F.ctx();
    const unsigned d = F.form_degree();
    auto var = [&](unsigned i) { return MPoly::variable(ctx, nvars, b_start + i); };
    MPoly b1 = var(0), b2 = var(1), b3 = var(2), b4 = var(3);
    // powers of b1*X + b2*Z and b3*X + b4*Z as coefficient vectors in X
    std::vector<std::vector<MPoly>> top(d + 1), bot(d + 1);
    top[0] = {MPoly::constant(ctx, nvars, 1)};
    bot[0] = {MPoly::constant(ctx, nvars, 1)};
    for (unsigned i = 1; i <= d; ++i) {
        top[i].assign(i + 1, MPoly(ctx, nvars));
        bot[i].assign(i + 1, MPoly(ctx, nvars));
        for (unsigned j = 0; j < i; ++j) {
            top[i][j + 1] = top[i][j + 1] + top[i - 1][j] * b1;
            top[i][j] = top[i][j] + top[i - 1][j] * b2;
            bot[i][j + 1] = bot[i][j + 1] + bot[i - 1][j] * b3;
            bot[i][j] = bot[i][j] + bot[i - 1][j] * b4;
        }
    }
    std::vector<MPoly> out(d + 1, MPoly(ctx, nvars));
    for (unsigned i = 0; i <= d; ++i) {
        if (F.coeff(i).is_zero()) continue;
        const auto& A = top[i];
        const auto& Bv = bot[d - i];
        for (unsigned s = 0; s < A.size(); ++s) {
            if (A[s].is_zero()) continue;
            MPoly fa = A[s] * F.coeff(i);
            for (unsigned t = 0; t < Bv.size(); ++t) {
                if (Bv[t].is_zero()) continue;
                out[s + t] = out[s + t] + fa * Bv[t];
            }
        }
    }
    return out;
}

GroebnerIsomResult is_isomorphic_groebner(const HyperellipticCurve& C1in,
                                          const HyperellipticCurve& C2in, const FieldPtr& K,
                                          const VarietyOptions& opts) {
    GroebnerIsomResult res;
    const HyperellipticCurve C1 = curve_over(C1in, K);
    const HyperellipticCurve C2 = curve_over(C2in, K);
    const unsigned g = C1.g;
    const unsigned d = 2 * g + 2;
    const BinaryForm F1 = normalized_form(C1);
    const BinaryForm F2 = normalized_form(C2);

    // variables: b1 b2 b3 b4 lambda mu nu
    const unsigned n = 7;
    auto T = transform_coefficients_symbolic(F1, n, 0);
    MPoly lam = MPoly::variable(K, n, 4);
    MPoly mu = MPoly::variable(K, n, 5);
    MPoly nu = MPoly::variable(K, n, 6);
    std::vector<MPoly> gens;
    MPoly lam2 = lam * lam;
    for (unsigned j = 0; j <= d; ++j)
        gens.push_back(T[j] - lam2 * MPoly::constant(K, n, F2.coeff(j)));
    gens.push_back(lam * mu - MPoly::constant(K, n, 1));
    MPoly b1 = MPoly::variable(K, n, 0), b2 = MPoly::variable(K, n, 1);
    MPoly b3 = MPoly::variable(K, n, 2), b4 = MPoly::variable(K, n, 3);
    gens.push_back((b1 * b4 - b2 * b3) * nu - MPoly::constant(K, n, 1));
    gens = add_field_equations(std::move(gens), K, n);

    auto V = variety(gens, opts);
    if (!V.ok) {
        res.failure = V.failure;
        return res;
    }
    res.ok = true;
    for (const auto& pt : V.points) {
        Mat2 h{pt[0], pt[1], pt[2], pt[3]};
        if (h.det().is_zero()) continue;
        FieldElem lambda = pt[4];
        if (lambda.is_zero()) continue;
        if (!(transform(F1, h) == F2 * (lambda * lambda))) continue;
        res.witness = IsomWitness{h, lambda, K};
        break;
    }
    return res;
}

FieldPtr common_field(const std::vector<HyperellipticCurve>& curves) {
    if (curves.empty()) throw std::invalid_argument("common_field: empty list");
    const u64 p = curves[0].ctx->p();
    unsigned k = 1;
    for (const auto& C : curves) {
        if (C.ctx->p() != p) throw std::invalid_argument("common_field: mixed characteristics");
        k = static_cast<unsigned>(std::lcm(k, C.ctx->k()));
    }
    for (const auto& C : curves)
        if (C.ctx->k() == k) return C.ctx;
    return FieldCtx::make(p, k);
}

std::vector<IsomClass> classify(const std::vector<HyperellipticCurve>& curves, const FieldPtr& K,
                                bool closure, u64 seed) {
    const size_t n = curves.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            auto r = all_isomorphisms(curves[i], curves[j], K, closure, true, seed);
            if (!r.pairs.empty()) parent[find(j)] = find(i);
        }
    }
    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<IsomClass> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        size_t rep = members[0];
        for (size_t m : members)
            if (curves[m].lex_less(curves[rep])) rep = m;
        out.push_back(IsomClass{rep, members});
    }
    std::sort(out.begin(), out.end(),
              [](const IsomClass& a, const IsomClass& b) { return a.members[0] < b.members[0]; });
    return out;
}

} // namespace ssp
