#include "ssp/enumerate.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssp {

std::string backend_name(EnumBackend b) {
    switch (b) {
        case EnumBackend::groebner: return "groebner";
        case EnumBackend::exhaustive: return "exhaustive";
        case EnumBackend::hybrid: return "hybrid";
    }
    return "?";
}

EnumBackend backend_from_name(const std::string& name) {
    if (name == "groebner") return EnumBackend::groebner;
    if (name == "exhaustive") return EnumBackend::exhaustive;
    if (name == "hybrid") return EnumBackend::hybrid;
    throw std::invalid_argument("unknown backend: " + name);
}

void EnumParams::apply_defaults() {
    if (s1 || s2) return;
    const u64 q = ctx->q_fits_u64() ? ctx->q() : 0;
    if (g == 4) {
        if (q == 17 || q == 19) { s1 = 9; s2 = 6; return; }
        if (q == 289 || q == 361) { s1 = 8; s2 = 6; return; }
        if (q == 121) { s1 = 9; s2 = 8; return; }
        if (q == 169) { s1 = 9; s2 = 7; return; }
        if (q == 23) { s1 = 8; s2 = 5; return; }
    }
    s1 = 2 * g + 1;
    s2 = 2 * g >= 2 ? 2 * g - 2 : 0;
}

void EnumParams::validate() const {
    if (!ctx) throw std::invalid_argument("enumerate: missing field");
    if (g < 1) throw std::invalid_argument("enumerate: genus must be positive");
    if (std::gcd(ctx->p(), static_cast<u64>(2 * g + 2)) != 1)
        throw std::invalid_argument("enumerate: characteristic divides 2g+2");
    if (!ctx->q_fits_u64() || ctx->q() < 2 * g + 1)
        throw std::invalid_argument("enumerate: field too small for the normal form");
    if (s2 > s1 || s1 > 2 * g + 1)
        throw std::invalid_argument("enumerate: need s2 <= s1 <= 2g+1");
}

std::vector<MPoly> build_superspeciality_system(unsigned g, const FieldPtr& ctx,
                                                const std::map<unsigned, FieldElem>& fixed,
                                                const std::vector<unsigned>& symbolic) {
    const unsigned nslots = 2 * g + 1; // a_0..a_{2g-1} and b at slot 2g
    const unsigned n = static_cast<unsigned>(symbolic.size());
    std::vector<int> var_of(nslots, -1);
    for (unsigned j = 0; j < n; ++j) {
        if (symbolic[j] >= nslots) throw std::invalid_argument("symbolic slot out of range");
        var_of[symbolic[j]] = static_cast<int>(j);
    }
    // f as a univariate polynomial with multivariate coefficients
    const unsigned d = 2 * g + 2;
    std::vector<MPoly> fc(d + 1, MPoly(ctx, n));
    fc[d] = MPoly::constant(ctx, n, 1);
    for (unsigned slot = 0; slot < nslots; ++slot) {
        unsigned deg = slot; // slot i multiplies x^i; slot 2g multiplies x^{2g}
        if (var_of[slot] >= 0) {
            fc[deg] = MPoly::variable(ctx, n, static_cast<unsigned>(var_of[slot]));
        } else {
            auto it = fixed.find(slot);
            if (it == fixed.end()) throw std::invalid_argument("slot neither fixed nor symbolic");
            fc[deg] = MPoly::constant(ctx, n, it->second);
        }
    }
    // f^{(p-1)/2} by iterated multiplication
    const u64 m = (ctx->p() - 1) / 2;
    std::vector<MPoly> h = {MPoly::constant(ctx, n, 1)};
    std::vector<MPoly> base = fc;
    u64 e = m;
    auto mul_umpoly = [&](const std::vector<MPoly>& A, const std::vector<MPoly>& B) {
        std::vector<MPoly> R(A.size() + B.size() - 1, MPoly(ctx, n));
        for (size_t i = 0; i < A.size(); ++i) {
            if (A[i].is_zero()) continue;
            for (size_t j = 0; j < B.size(); ++j) {
                if (B[j].is_zero()) continue;
                R[i + j] = R[i + j] + A[i] * B[j];
            }
        }
        return R;
    };
    while (e) {
        if (e & 1) h = mul_umpoly(h, base);
        e >>= 1;
        if (e) base = mul_umpoly(base, base);
    }
    std::vector<MPoly> out;
    out.reserve(static_cast<size_t>(g) * g);
    const u64 p = ctx->p();
    for (unsigned i = 1; i <= g; ++i) {
        for (unsigned j = 1; j <= g; ++j) {
            size_t idx = static_cast<size_t>(p) * i - j;
            out.push_back(idx < h.size() ? h[idx] : MPoly(ctx, n));
        }
    }
    return out;
}

namespace {

struct PrimeOps {
    u32 p;
    u32 q;
    u16 add(u16 a, u16 b) const {
        u32 s = static_cast<u32>(a) + b;
        return static_cast<u16>(s >= p ? s - p : s);
    }
    u16 mul(u16 a, u16 b) const { return static_cast<u16>(static_cast<u32>(a) * b % p); }
    u16 dot(const u16* w, const u16* ap, unsigned n) const {
        u64 acc = 0;
        for (unsigned t = 0; t < n; ++t) acc += static_cast<u32>(w[t]) * ap[t];
        return static_cast<u16>(acc % p);
    }
    void poly_mul(const std::vector<u16>& a, const std::vector<u16>& b, std::vector<u16>& out) const {
        out.assign(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            const u32 ai = a[i];
            for (size_t j = 0; j < b.size(); ++j) {
                if (!b[j]) continue;
                out[i + j] = static_cast<u16>((out[i + j] + ai * b[j]) % p);
            }
        }
    }
};

struct TableOps {
    const SmallField* F;
    u32 q;
    u16 add(u16 a, u16 b) const { return F->add(a, b); }
    u16 mul(u16 a, u16 b) const { return F->mul(a, b); }
    u16 dot(const u16* w, const u16* ap, unsigned n) const {
        u16 acc = 0;
        for (unsigned t = 0; t < n; ++t) acc = F->add(acc, F->mul(w[t], ap[t]));
        return acc;
    }
    void poly_mul(const std::vector<u16>& a, const std::vector<u16>& b, std::vector<u16>& out) const {
        out.assign(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                if (!b[j]) continue;
                out[i + j] = F->add(out[i + j], F->mul(a[i], b[j]));
            }
        }
    }
};

// Scan over assignments of `free_slots`: the outer odometer walks every slot
// except slot 0, whose loop is folded into cached powers of g0 = f - a_0:
// the needed coefficients of (g0 + a_0)^m are degree-m polynomials in a_0
// with coefficients read off the precomputed g0^t.
template <class Ops>
void scan_range(const Ops& O, const SmallField& SF, unsigned g, const std::map<unsigned, u16>& fixed,
                const std::vector<unsigned>& free_slots, u64 begin, u64 end,
                std::vector<std::vector<u16>>& hits, u64& scanned) {
    const u32 q = O.q;
    const unsigned m = static_cast<unsigned>((SF.p - 1) / 2);
    const unsigned d = 2 * g + 2;
    const unsigned nslots = 2 * g + 1;

    // binomials C(m, s) as prime-subfield indices (index of small value v is v)
    std::vector<u16> binom(m + 1);
    {
        std::vector<u64> row(m + 1, 0);
        row[0] = 1;
        for (unsigned i = 1; i <= m; ++i)
            for (unsigned j = i; j-- > 0;) row[j + 1] = (row[j + 1] + row[j]) % SF.p;
        for (unsigned s = 0; s <= m; ++s) binom[s] = static_cast<u16>(row[s]);
    }
    // a^s table
    std::vector<u16> apow(static_cast<size_t>(q) * (m + 1));
    for (u32 a = 0; a < q; ++a) {
        apow[static_cast<size_t>(a) * (m + 1)] = 1;
        for (unsigned s = 1; s <= m; ++s)
            apow[static_cast<size_t>(a) * (m + 1) + s] =
                O.mul(apow[static_cast<size_t>(a) * (m + 1) + s - 1], static_cast<u16>(a));
    }
    // exponents p*i - j
    std::vector<unsigned> expo;
    for (unsigned i = 1; i <= g; ++i)
        for (unsigned j = 1; j <= g; ++j) expo.push_back(static_cast<unsigned>(SF.p) * i - j);

    std::vector<u16> coeffs(d + 1, 0);
    coeffs[d] = 1;
    for (const auto& [slot, val] : fixed) coeffs[slot] = val;

    std::vector<std::vector<u16>> pw(m + 1);
    pw[0] = {1};
    std::vector<u16> W(expo.size() * (m + 1));

    const unsigned nouter = static_cast<unsigned>(free_slots.size()) - 1;
    std::vector<u16> digits(nouter, 0);

    for (u64 L = begin; L < end; ++L) {
        u64 t = L;
        for (unsigned i = 0; i < nouter; ++i) {
            digits[i] = static_cast<u16>(t % q);
            t /= q;
            coeffs[free_slots[i + 1]] = digits[i];
        }
        coeffs[0] = 0;
        // g0 powers
        for (unsigned s = 1; s <= m; ++s) O.poly_mul(pw[s - 1], coeffs, pw[s]);
        // W[e][s] = C(m,s) * coeff(g0^{m-s}, e)
        for (size_t ei = 0; ei < expo.size(); ++ei) {
            const unsigned e = expo[ei];
            for (unsigned s = 0; s <= m; ++s) {
                const auto& P = pw[m - s];
                u16 c = e < P.size() ? P[e] : static_cast<u16>(0);
                W[ei * (m + 1) + s] = O.mul(binom[s], c);
            }
        }
        for (u32 a0 = 0; a0 < q; ++a0) {
            const u16* ap = &apow[static_cast<size_t>(a0) * (m + 1)];
            bool zero = true;
            for (size_t ei = 0; ei < expo.size(); ++ei) {
                if (O.dot(&W[ei * (m + 1)], ap, m + 1) != 0) {
                    zero = false;
                    break;
                }
            }
            if (zero) {
                std::vector<u16> cand(nslots + 2);
                for (unsigned s = 0; s <= d; ++s) cand[s] = coeffs[s];
                cand[0] = static_cast<u16>(a0);
                hits.push_back(std::move(cand));
            }
        }
        scanned += q;
    }
}

std::vector<std::vector<u16>> run_scan(const SmallField& SF, unsigned g,
                                       const std::map<unsigned, u16>& fixed,
                                       const std::vector<unsigned>& free_slots, unsigned workers,
                                       u64& scanned_total) {
    if (free_slots.empty() || free_slots[0] != 0)
        throw std::invalid_argument("scan: free slots must start with slot 0");
    u64 outer = 1;
    for (size_t i = 1; i < free_slots.size(); ++i) outer *= SF.q;

    std::vector<std::vector<std::vector<u16>>> hits_by_thread;
    std::vector<u64> scanned_by_thread;

#ifdef _OPENMP
    int nthreads = workers ? static_cast<int>(workers) : omp_get_max_threads();
    hits_by_thread.resize(nthreads);
    scanned_by_thread.assign(nthreads, 0);
    const u64 chunks = std::min<u64>(outer, static_cast<u64>(nthreads) * 64);
    const u64 chunk = (outer + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (u64 c = 0; c < chunks; ++c) {
        int tid = omp_get_thread_num();
        u64 b = c * chunk, e = std::min(outer, (c + 1) * chunk);
        if (b >= e) continue;
        if (SF.k == 1) {
            PrimeOps O{SF.p, SF.q};
            scan_range(O, SF, g, fixed, free_slots, b, e, hits_by_thread[tid], scanned_by_thread[tid]);
        } else {
            TableOps O{&SF, SF.q};
            scan_range(O, SF, g, fixed, free_slots, b, e, hits_by_thread[tid], scanned_by_thread[tid]);
        }
    }
#else
    (void)workers;
    hits_by_thread.resize(1);
    scanned_by_thread.assign(1, 0);
    if (SF.k == 1) {
        PrimeOps O{SF.p, SF.q};
        scan_range(O, SF, g, fixed, free_slots, 0, outer, hits_by_thread[0], scanned_by_thread[0]);
    } else {
        TableOps O{&SF, SF.q};
        scan_range(O, SF, g, fixed, free_slots, 0, outer, hits_by_thread[0], scanned_by_thread[0]);
    }
#endif

    std::vector<std::vector<u16>> hits;
    for (auto& h : hits_by_thread)
        for (auto& v : h) hits.push_back(std::move(v));
    for (u64 s : scanned_by_thread) scanned_total += s;
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace

std::vector<Poly> exhaustive_scan(const SmallField& F, unsigned g, const std::map<unsigned, u16>& fixed,
                                  const std::vector<unsigned>& free_slots, unsigned workers,
                                  u64* candidates_scanned, u64* squarefree_rejected) {
    if (!fixed.count(2 * g) && std::find(free_slots.begin(), free_slots.end(), 2 * g) == free_slots.end())
        throw std::invalid_argument("scan: slot 2g (the x^{2g} coefficient) must be set");
    u64 scanned = 0;
    auto hits = run_scan(F, g, fixed, free_slots, workers, scanned);
    if (candidates_scanned) *candidates_scanned += scanned;
    std::vector<Poly> out;
    u64 rejected = 0;
    for (const auto& cand : hits) {
        std::vector<FieldElem> c;
        c.reserve(2 * g + 3);
        for (unsigned i = 0; i <= 2 * g + 2; ++i) c.push_back(F.to_elem(cand[i]));
        Poly f(F.ctx, std::move(c));
        if (!is_squarefree(f)) {
            ++rejected;
            continue;
        }
        if (!is_superspecial(f, g)) throw std::logic_error("scan: generic recheck failed");
        out.push_back(std::move(f));
    }
    if (squarefree_rejected) *squarefree_rejected += rejected;
    return out;
}

std::vector<Poly> enumerate_superspecial_reference(unsigned g, const FieldPtr& ctx) {
    const u64 q = ctx->q();
    const unsigned nslots = 2 * g;
    std::vector<FieldElem> bvals = {ctx->zero(), ctx->one(), find_nonsquare(ctx)};
    std::vector<Poly> out;
    u64 total = 1;
    for (unsigned i = 0; i < nslots; ++i) total *= q;
    for (const auto& b : bvals) {
        for (u64 L = 0; L < total; ++L) {
            std::vector<FieldElem> c;
            c.reserve(2 * g + 3);
            u64 t = L;
            for (unsigned i = 0; i < nslots; ++i) {
                c.push_back(ctx->element_from_index(t % q));
                t /= q;
            }
            c.push_back(b);            // slot 2g
            c.push_back(ctx->zero()); // x^{2g+1}
            c.push_back(ctx->one());  // x^{2g+2}
            Poly f(ctx, std::move(c));
            if (!is_superspecial(f, g)) continue;
            if (!is_squarefree(f)) continue;
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return a.lex_less(b); });
    return out;
}

namespace {

struct SlotAssignment {
    std::vector<std::pair<unsigned, u64>> slots; // (slot, element index)
};

// mixed-radix enumeration over the given slots; slot 2g runs over the three
// canonical b values, everything else over the whole field
struct SlotSpace {
    std::vector<unsigned> slots;
    std::vector<u64> radix;
    std::vector<std::vector<u64>> values; // element indices per slot

    u64 size() const {
        u64 s = 1;
        for (u64 r : radix) s *= r;
        return s;
    }
    SlotAssignment at(u64 idx) const {
        SlotAssignment a;
        for (size_t i = 0; i < slots.size(); ++i) {
            a.slots.emplace_back(slots[i], values[i][idx % radix[i]]);
            idx /= radix[i];
        }
        return a;
    }
};

SlotSpace make_space(const FieldPtr& ctx, const std::vector<unsigned>& slots, unsigned bslot) {
    SlotSpace sp;
    sp.slots = slots;
    const u64 q = ctx->q();
    for (unsigned s : slots) {
        if (s == bslot) {
            auto eps = find_nonsquare(ctx);
            sp.radix.push_back(3);
            sp.values.push_back({0, 1, ctx->index_of(eps)});
        } else {
            sp.radix.push_back(q);
            std::vector<u64> all(q);
            for (u64 i = 0; i < q; ++i) all[i] = i;
            sp.values.push_back(std::move(all));
        }
    }
    return sp;
}

std::string curve_key(const Poly& f) {
    std::ostringstream os;
    for (const auto& c : f.coeffs()) {
        for (u64 v : c.coeffs()) os << v << ",";
        os << ";";
    }
    return os.str();
}

} // namespace

EnumerationReport enumerate_superspecial(const EnumParams& params_in) {
    EnumParams params = params_in;
    params.apply_defaults();
    params.validate();
    const auto t0 = std::chrono::steady_clock::now();

    const auto& ctx = params.ctx;
    const unsigned g = params.g;
    const u64 q = ctx->q();
    const unsigned bslot = 2 * g;

    EnumerationReport rep;
    rep.g = g;
    rep.p = ctx->p();
    rep.k = ctx->k();
    rep.s1 = params.s1;
    rep.s2 = params.s2;
    rep.backend = backend_name(params.backend);
    rep.model_complete = q > 2 * g + 1;
#ifdef _OPENMP
    rep.workers = params.workers ? params.workers : static_cast<unsigned>(omp_get_max_threads());
#else
    rep.workers = 1;
#endif

    std::vector<Poly> curves;

    if (params.backend == EnumBackend::exhaustive) {
        SmallField SF = SmallField::build(ctx);
        std::vector<unsigned> free_slots(2 * g);
        std::iota(free_slots.begin(), free_slots.end(), 0);
        auto eps = find_nonsquare(ctx);
        rep.tuples_total = 3;
        for (u64 bi : {static_cast<u64>(0), static_cast<u64>(1), ctx->index_of(eps)}) {
            std::map<unsigned, u16> fixed{{bslot, static_cast<u16>(bi)}};
            auto part = exhaustive_scan(SF, g, fixed, free_slots, params.workers,
                                        &rep.candidates_scanned, &rep.squarefree_rejected);
            for (auto& f : part) curves.push_back(std::move(f));
            ++rep.tuples_done;
        }
    } else {
        // slot partition
        const bool b_symbolic = params.s1 == 2 * g + 1;
        std::vector<unsigned> symbolic_slots, middle_slots, outer_slots;
        for (unsigned s = 0; s < std::min(params.s1, 2 * g); ++s) symbolic_slots.push_back(s);
        if (b_symbolic) symbolic_slots.push_back(bslot);
        for (unsigned s = params.s2; s < std::min(params.s1, 2 * g); ++s) middle_slots.push_back(s);
        if (b_symbolic) middle_slots.push_back(bslot);
        for (unsigned s = params.s1; s < 2 * g; ++s) outer_slots.push_back(s);
        if (!b_symbolic) outer_slots.push_back(bslot);
        std::vector<unsigned> inner_slots;
        for (unsigned s = 0; s < params.s2; ++s) inner_slots.push_back(s);

        std::vector<int> var_of(2 * g + 1, -1);
        for (size_t j = 0; j < symbolic_slots.size(); ++j) var_of[symbolic_slots[j]] = static_cast<int>(j);

        SlotSpace outer_space = make_space(ctx, outer_slots, bslot);
        SlotSpace middle_space = make_space(ctx, middle_slots, bslot);
        rep.tuples_total = outer_space.size() * middle_space.size();

        // checkpoint bookkeeping
        std::set<std::pair<u64, u64>> done;
        std::mutex ck_mutex;
        std::ofstream ck_out;
        if (!params.checkpoint_path.empty()) {
            std::ifstream in(params.checkpoint_path);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                auto j = nlohmann::json::parse(line, nullptr, false);
                if (j.is_discarded()) continue;
                u64 oi = j.at("outer").get<u64>(), mi = j.at("middle").get<u64>();
                done.insert({oi, mi});
                for (const auto& jc : j.at("curves")) {
                    std::vector<FieldElem> c;
                    for (const auto& jv : jc) {
                        std::vector<i64> coeffs = jv.get<std::vector<i64>>();
                        c.push_back(ctx->from_coeffs(coeffs));
                    }
                    curves.emplace_back(ctx, std::move(c));
                }
                ++rep.tuples_resumed;
            }
            ck_out.open(params.checkpoint_path, std::ios::app);
        }

        std::mutex merge_mutex;
        std::atomic<u64> a_done{0}, a_solved{0}, a_failed{0}, a_fallback{0}, a_inconsistent{0};
        std::atomic<u64> a_scanned{0}, a_rejected{0};

        // lazily built table field for fallback scans
        std::mutex sf_mutex;
        std::unique_ptr<SmallField> SF;
        auto get_sf = [&]() -> const SmallField& {
            std::lock_guard<std::mutex> lock(sf_mutex);
            if (!SF) SF = std::make_unique<SmallField>(SmallField::build(ctx));
            return *SF;
        };

        for (u64 oi = 0; oi < outer_space.size(); ++oi) {
            SlotAssignment outer = outer_space.at(oi);
            std::map<unsigned, FieldElem> fixed;
            for (const auto& [slot, vi] : outer.slots) fixed.emplace(slot, ctx->element_from_index(vi));
            auto system = build_superspeciality_system(g, ctx, fixed, symbolic_slots);

            const u64 mcount = middle_space.size();
            const i64 mcount_i = static_cast<i64>(mcount);
#ifdef _OPENMP
            int nthreads = params.workers ? static_cast<int>(params.workers) : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
#endif
            for (i64 mi_s = 0; mi_s < mcount_i; ++mi_s) {
                const u64 mi = static_cast<u64>(mi_s);
                {
                    std::lock_guard<std::mutex> lock(ck_mutex);
                    if (done.count({oi, mi})) continue;
                }
                SlotAssignment middle = middle_space.at(mi);
                std::map<unsigned, FieldElem> mvals;
                std::map<unsigned, FieldElem> subst; // by variable index
                for (const auto& [slot, vi] : middle.slots) {
                    FieldElem v = ctx->element_from_index(vi);
                    mvals.emplace(slot, v);
                    subst.emplace(static_cast<unsigned>(var_of[slot]), v);
                }
                std::vector<MPoly> S;
                S.reserve(system.size());
                for (const auto& P : system) S.push_back(P.substitute(subst));

                std::vector<Poly> found;
                u64 local_scanned = 0, local_rejected = 0;
                bool solved = false;

                std::vector<MPoly> nonzero;
                for (const auto& P : S)
                    if (!P.is_zero()) nonzero.push_back(P);
                auto [compressed, used_vars] = compress_variables(nonzero);
                bool trivially_inconsistent = false;
                for (const auto& P : compressed)
                    if (P.is_constant() && !P.is_zero()) trivially_inconsistent = true;

                if (trivially_inconsistent) {
                    solved = true;
                    a_inconsistent.fetch_add(1);
                } else if (params.backend != EnumBackend::exhaustive) {
                    // free inner variables that dropped out of the system
                    std::vector<unsigned> dropped;
                    {
                        std::set<unsigned> used_set(used_vars.begin(), used_vars.end());
                        for (unsigned j = 0; j < symbolic_slots.size(); ++j) {
                            unsigned slot = symbolic_slots[j];
                            if (slot < params.s2 && !used_set.count(j)) dropped.push_back(slot);
                        }
                    }
                    VarietyOptions vopts;
                    vopts.groebner.max_pairs = params.groebner_max_pairs;
                    vopts.max_scan = params.variety_max_scan;
                    VarietyResult V;
                    if (compressed.empty()) {
                        V.ok = true;
                        V.points.push_back({});
                    } else {
                        V = variety(add_field_equations(compressed, ctx, static_cast<unsigned>(used_vars.size())),
                                    vopts);
                    }
                    if (V.ok) {
                        solved = true;
                        a_solved.fetch_add(1);
                        if (V.points.empty()) a_inconsistent.fetch_add(1);
                        // assemble solutions, expanding unconstrained variables
                        u64 expansions = 1;
                        for (size_t t = 0; t < dropped.size(); ++t) expansions *= q;
                        for (const auto& pt : V.points) {
                            for (u64 ei = 0; ei < expansions; ++ei) {
                                std::map<unsigned, FieldElem> all = fixed;
                                for (const auto& [slot, v] : mvals) all.emplace(slot, v);
                                for (size_t uj = 0; uj < used_vars.size(); ++uj)
                                    all.emplace(symbolic_slots[used_vars[uj]], pt[uj]);
                                u64 t2 = ei;
                                for (unsigned dslot : dropped) {
                                    all.emplace(dslot, ctx->element_from_index(t2 % q));
                                    t2 /= q;
                                }
                                std::vector<FieldElem> c;
                                for (unsigned s = 0; s < 2 * g; ++s) c.push_back(all.at(s));
                                c.push_back(all.at(bslot));
                                c.push_back(ctx->zero());
                                c.push_back(ctx->one());
                                Poly f(ctx, std::move(c));
                                local_scanned += 1;
                                if (!is_superspecial(f, g)) throw std::logic_error("solver produced a bad curve");
                                if (!is_squarefree(f)) {
                                    ++local_rejected;
                                    continue;
                                }
                                found.push_back(std::move(f));
                            }
                        }
                    } else {
                        a_failed.fetch_add(1);
                    }
                }

                if (!solved) {
                    if (params.backend == EnumBackend::groebner) {
                        // recorded as failed; tuple contributes nothing
                    } else {
                        a_fallback.fetch_add(1);
                        const SmallField& sf = get_sf();
                        std::map<unsigned, u16> sfixed;
                        for (const auto& [slot, v] : fixed) sfixed[slot] = static_cast<u16>(ctx->index_of(v));
                        for (const auto& [slot, v] : mvals) sfixed[slot] = static_cast<u16>(ctx->index_of(v));
                        std::vector<unsigned> free_slots = inner_slots;
                        auto part = exhaustive_scan(sf, g, sfixed, free_slots, 1, &local_scanned, &local_rejected);
                        for (auto& f : part) found.push_back(std::move(f));
                        solved = true;
                    }
                }

                a_scanned.fetch_add(local_scanned);
                a_rejected.fetch_add(local_rejected);
                if (solved) {
                    a_done.fetch_add(1);
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    for (auto& f : found) curves.push_back(f);
                    if (ck_out.is_open()) {
                        nlohmann::json jc = nlohmann::json::array();
                        for (const auto& f : found) {
                            nlohmann::json jf = nlohmann::json::array();
                            for (const auto& ce : f.coeffs()) jf.push_back(ce.coeffs());
                            jc.push_back(jf);
                        }
                        nlohmann::json rec{{"outer", oi}, {"middle", mi}, {"curves", jc}};
                        std::lock_guard<std::mutex> lock2(ck_mutex);
                        ck_out << rec.dump() << "\n";
                        ck_out.flush();
                    }
                }
            }
        }
        rep.tuples_done = a_done.load() + rep.tuples_resumed;
        rep.groebner_solved = a_solved.load();
        rep.groebner_failed = a_failed.load();
        rep.fallback_used = a_fallback.load();
        rep.inconsistent = a_inconsistent.load();
        rep.candidates_scanned += a_scanned.load();
        rep.squarefree_rejected += a_rejected.load();
    }

    // canonical order and defensive dedup (overlapping checkpoint records)
    std::sort(curves.begin(), curves.end(), [](const Poly& a, const Poly& b) { return a.lex_less(b); });
    std::set<std::string> seen;
    std::vector<Poly> unique_curves;
    for (auto& f : curves) {
        auto key = curve_key(f);
        if (seen.insert(key).second) unique_curves.push_back(std::move(f));
    }
    rep.curves = std::move(unique_curves);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace ssp
