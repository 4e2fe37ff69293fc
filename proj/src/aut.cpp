#include "ssp/aut.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ssp {

std::vector<u64> AutElem::key() const {
    std::vector<u64> k;
    for (const FieldElem* e : {&h.a, &h.b, &h.c, &h.d, &lambda})
        for (u64 v : e->coeffs()) k.push_back(v);
    return k;
}

namespace {

AutElem normalize_pair(Mat2 H, FieldElem lam, unsigned g) {
    FieldElem alpha = !H.a.is_zero() ? H.a : (!H.b.is_zero() ? H.b : (!H.c.is_zero() ? H.c : H.d));
    if (!alpha.is_one()) {
        FieldElem ai = alpha.inv();
        H = H.scaled(ai);
        lam = lam * pow(ai, g + 1);
    }
    return AutElem{H, lam};
}

} // namespace

AutGroup::AutGroup(FieldPtr field, unsigned g, std::vector<AutElem> elems)
    : field_(std::move(field)), g_(g), elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end(),
              [](const AutElem& a, const AutElem& b) { return a.key() < b.key(); });
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (!index_.emplace(elems_[i].key(), i).second)
            throw std::invalid_argument("automorphism list has duplicates");
    }
    const size_t n = elems_.size();
    table_.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            AutElem p = compose(elems_[i], elems_[j]);
            auto it = index_.find(p.key());
            if (it == index_.end()) throw std::logic_error("automorphism set not closed under composition");
            table_[i * n + j] = it->second;
        }
    }
    AutElem e{Mat2::identity(field_), field_->one()};
    auto it = index_.find(e.key());
    if (it == index_.end()) throw std::logic_error("automorphism set lacks the identity");
    id_ = it->second;
    inv_.assign(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (table_[i * n + j] == id_) {
                inv_[i] = j;
                break;
            }
        }
        if (inv_[i] == n) throw std::logic_error("automorphism without inverse");
    }
}

size_t AutGroup::index_of(const AutElem& e) const {
    auto it = index_.find(e.key());
    if (it == index_.end()) throw std::out_of_range("element not in group");
    return it->second;
}

bool AutGroup::contains(const AutElem& e) const { return index_.count(e.key()) > 0; }

AutElem AutGroup::compose(const AutElem& a, const AutElem& b) const {
    return normalize_pair(a.h.mul(b.h), a.lambda * b.lambda, g_);
}

AutElem AutGroup::invert(const AutElem& a) const {
    return normalize_pair(a.h.inverse(), a.lambda.inv(), g_);
}

unsigned AutGroup::element_order(size_t i) const {
    unsigned ord = 1;
    size_t cur = i;
    while (cur != id_) {
        cur = mul(cur, i);
        ++ord;
        if (ord > elems_.size()) throw std::logic_error("element order exceeds group order");
    }
    return ord;
}

std::vector<unsigned> AutGroup::element_orders() const {
    std::vector<unsigned> v;
    v.reserve(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) v.push_back(element_order(i));
    std::sort(v.begin(), v.end());
    return v;
}

bool AutGroup::is_abelian() const {
    const size_t n = elems_.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (mul(i, j) != mul(j, i)) return false;
    return true;
}

size_t AutGroup::center_order() const {
    const size_t n = elems_.size();
    size_t c = 0;
    for (size_t i = 0; i < n; ++i) {
        bool central = true;
        for (size_t j = 0; j < n && central; ++j)
            if (mul(i, j) != mul(j, i)) central = false;
        if (central) ++c;
    }
    return c;
}

size_t AutGroup::derived_subgroup_order() const {
    const size_t n = elems_.size();
    std::set<size_t> sub;
    sub.insert(id_);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            sub.insert(mul(mul(inverse(i), inverse(j)), mul(i, j)));
    // subgroup closure
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<size_t> cur(sub.begin(), sub.end());
        for (size_t a : cur)
            for (size_t b : cur)
                if (sub.insert(mul(a, b)).second) grew = true;
    }
    return sub.size();
}

std::vector<AutElem> compute_G_tilde(const HyperellipticCurve& C, const FieldPtr& K, u64 seed) {
    auto r = all_isomorphisms(C, C, K, false, false, seed);
    std::vector<AutElem> out;
    out.reserve(2 * r.pairs.size());
    for (const auto& [h, lambda] : r.pairs) {
        out.push_back(AutElem{h, lambda});
        out.push_back(AutElem{h, -lambda});
    }
    std::sort(out.begin(), out.end(), [](const AutElem& a, const AutElem& b) { return a.key() < b.key(); });
    return out;
}

AutGroup compute_aut(const HyperellipticCurve& C, const FieldPtr& K, u64 seed) {
    return AutGroup(K, C.g, compute_G_tilde(C, K, seed));
}

AutGroup compute_aut_closure(const HyperellipticCurve& C, u64 seed, bool stability_check) {
    auto r = all_isomorphisms(C, C, C.ctx, true, false, seed);
    std::vector<AutElem> elems;
    elems.reserve(2 * r.pairs.size());
    for (const auto& [h, lambda] : r.pairs) {
        elems.push_back(AutElem{h, lambda});
        elems.push_back(AutElem{h, -lambda});
    }
    AutGroup G(r.field, C.g, std::move(elems));
    if (stability_check) {
        auto C2 = curve_over(C, r.field);
        auto r2 = all_isomorphisms(C2, C2, r.field, true, false, seed);
        if (2 * r2.pairs.size() != G.order())
            throw std::logic_error("closure automorphism group not stable under extension");
    }
    return G;
}

bool GroupFingerprint::operator==(const GroupFingerprint& o) const {
    return order == o.order && element_orders == o.element_orders && abelian == o.abelian &&
           center == o.center && derived == o.derived;
}

namespace {

// Abstract group given by a multiplication table over 0..n-1 with identity 0.
struct Table {
    size_t n = 0;
    std::vector<size_t> mul;

    size_t at(size_t i, size_t j) const { return mul[i * n + j]; }

    GroupFingerprint fingerprint(const std::string& label) const {
        GroupFingerprint fp;
        fp.label = label;
        fp.order = n;
        std::vector<size_t> inv(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (at(i, j) == 0) inv[i] = j;
        for (size_t i = 0; i < n; ++i) {
            unsigned ord = 1;
            size_t cur = i;
            while (cur != 0) {
                cur = at(cur, i);
                ++ord;
            }
            fp.element_orders.push_back(ord);
        }
        std::sort(fp.element_orders.begin(), fp.element_orders.end());
        fp.abelian = true;
        for (size_t i = 0; i < n && fp.abelian; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (at(i, j) != at(j, i)) {
                    fp.abelian = false;
                    break;
                }
        fp.center = 0;
        for (size_t i = 0; i < n; ++i) {
            bool central = true;
            for (size_t j = 0; j < n && central; ++j)
                if (at(i, j) != at(j, i)) central = false;
            if (central) ++fp.center;
        }
        std::set<size_t> sub{0};
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                sub.insert(at(at(inv[i], inv[j]), at(i, j)));
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<size_t> cur(sub.begin(), sub.end());
            for (size_t a : cur)
                for (size_t b : cur)
                    if (sub.insert(at(a, b)).second) grew = true;
        }
        fp.derived = sub.size();
        return fp;
    }
};

// direct product of cyclic groups (identity = all-zero tuple = index 0)
Table cyclic_product(const std::vector<unsigned>& ds) {
    size_t n = 1;
    for (unsigned d : ds) n *= d;
    Table t;
    t.n = n;
    t.mul.resize(n * n);
    auto digits = [&](size_t idx) {
        std::vector<unsigned> v(ds.size());
        for (size_t i = 0; i < ds.size(); ++i) {
            v[i] = static_cast<unsigned>(idx % ds[i]);
            idx /= ds[i];
        }
        return v;
    };
    auto pack = [&](const std::vector<unsigned>& v) {
        size_t idx = 0;
        for (size_t i = ds.size(); i-- > 0;) idx = idx * ds[i] + v[i];
        return idx;
    };
    for (size_t i = 0; i < n; ++i) {
        auto a = digits(i);
        for (size_t j = 0; j < n; ++j) {
            auto b = digits(j);
            std::vector<unsigned> c(ds.size());
            for (size_t v = 0; v < ds.size(); ++v) c[v] = (a[v] + b[v]) % ds[v];
            t.mul[i * n + j] = pack(c);
        }
    }
    return t;
}

// dihedral of order 2n: pairs (i, s), (i,s)(i',s') = (i + (-1)^s i', s+s')
Table dihedral(unsigned n) {
    Table t;
    t.n = 2 * n;
    t.mul.resize(t.n * t.n);
    auto pack = [&](unsigned i, unsigned s) { return static_cast<size_t>(s) * n + i; };
    for (unsigned s = 0; s < 2; ++s)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned s2 = 0; s2 < 2; ++s2)
                for (unsigned i2 = 0; i2 < n; ++i2) {
                    unsigned ri = s ? (i + n - i2 % n) % n : (i + i2) % n;
                    t.mul[pack(i, s) * t.n + pack(i2, s2)] = pack(ri, (s + s2) % 2);
                }
    return t;
}

// dicyclic of order 4n: (i, s) in Z_{2n} x {0,1}
Table dicyclic(unsigned n) {
    Table t;
    const unsigned m = 2 * n;
    t.n = 2 * m;
    t.mul.resize(t.n * t.n);
    auto pack = [&](unsigned i, unsigned s) { return static_cast<size_t>(s) * m + i; };
    for (unsigned s = 0; s < 2; ++s)
        for (unsigned i = 0; i < m; ++i)
            for (unsigned s2 = 0; s2 < 2; ++s2)
                for (unsigned i2 = 0; i2 < m; ++i2) {
                    unsigned ri, rs;
                    if (s == 0) {
                        ri = (i + i2) % m;
                        rs = s2;
                    } else if (s2 == 0) {
                        ri = (i + m - i2) % m;
                        rs = 1;
                    } else {
                        ri = (i + m - i2 + n) % m;
                        rs = 0;
                    }
                    t.mul[pack(i, s) * t.n + pack(i2, s2)] = pack(ri, rs);
                }
    return t;
}

// C5 : C4 with the faithful action (Frobenius group of order 20)
Table frobenius20() {
    Table t;
    t.n = 20;
    t.mul.resize(400);
    auto pack = [&](unsigned i, unsigned s) { return static_cast<size_t>(s) * 5 + i; };
    unsigned pw[4] = {1, 2, 4, 3}; // powers of 2 mod 5
    for (unsigned s = 0; s < 4; ++s)
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned s2 = 0; s2 < 4; ++s2)
                for (unsigned i2 = 0; i2 < 5; ++i2)
                    t.mul[pack(i, s) * 20 + pack(i2, s2)] = pack((i + pw[s] * i2) % 5, (s + s2) % 4);
    return t;
}

// C5 : D4 of order 40: triples (i, e, s) in Z10 x Z2 x Z2 with
// (i,e,1)(i',e',s') = (i - i', e + e' + i', 1 + s')
Table c5_d4() {
    Table t;
    t.n = 40;
    t.mul.resize(1600);
    auto pack = [&](unsigned i, unsigned e, unsigned s) { return (static_cast<size_t>(s) * 2 + e) * 10 + i; };
    for (unsigned s = 0; s < 2; ++s)
        for (unsigned e = 0; e < 2; ++e)
            for (unsigned i = 0; i < 10; ++i)
                for (unsigned s2 = 0; s2 < 2; ++s2)
                    for (unsigned e2 = 0; e2 < 2; ++e2)
                        for (unsigned i2 = 0; i2 < 10; ++i2) {
                            unsigned ri, re, rs;
                            if (s == 0) {
                                ri = (i + i2) % 10;
                                re = (e + e2) % 2;
                                rs = s2;
                            } else {
                                ri = (i + 10 - i2) % 10;
                                re = (e + e2 + i2) % 2;
                                rs = (1 + s2) % 2;
                            }
                            t.mul[pack(i, e, s) * 40 + pack(i2, e2, s2)] = pack(ri, re, rs);
                        }
    return t;
}

// closure of 2x2 matrices over F_p under multiplication
Table matrix_closure(u64 p, const std::vector<std::array<u64, 4>>& gens) {
    std::vector<std::array<u64, 4>> elems;
    std::array<u64, 4> id{1, 0, 0, 1};
    elems.push_back(id);
    auto matmul = [&](const std::array<u64, 4>& A, const std::array<u64, 4>& B) {
        return std::array<u64, 4>{(A[0] * B[0] + A[1] * B[2]) % p, (A[0] * B[1] + A[1] * B[3]) % p,
                                  (A[2] * B[0] + A[3] * B[2]) % p, (A[2] * B[1] + A[3] * B[3]) % p};
    };
    auto find = [&](const std::array<u64, 4>& A) {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == A) return static_cast<long>(i);
        return -1l;
    };
    for (const auto& g : gens)
        if (find(g) < 0) elems.push_back(g);
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j) {
                auto m = matmul(elems[i], elems[j]);
                if (find(m) < 0) {
                    elems.push_back(m);
                    grew = true;
                }
            }
    }
    Table t;
    t.n = elems.size();
    t.mul.resize(t.n * t.n);
    for (size_t i = 0; i < t.n; ++i)
        for (size_t j = 0; j < t.n; ++j) t.mul[i * t.n + j] = static_cast<size_t>(find(matmul(elems[i], elems[j])));
    return t;
}

std::string abelian_label(const std::vector<unsigned>& ds) {
    // descending invariant factors, e.g. C4xC2
    std::vector<unsigned> v = ds;
    std::sort(v.rbegin(), v.rend());
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << "x";
        os << "C" << v[i];
    }
    return os.str();
}

// invariant-factor chains d1 | d2 | ... | dr with product n
void abelian_chains(size_t n, unsigned max_first, std::vector<unsigned>& cur,
                    std::vector<std::vector<unsigned>>& out) {
    if (n == 1) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    for (unsigned d = 2; d <= std::min<size_t>(n, max_first); ++d) {
        if (n % d) continue;
        if (!cur.empty() && cur.back() % d != 0) continue; // need d | previous (descending chain)
        cur.push_back(d);
        abelian_chains(n / d, d, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<GroupFingerprint> group_catalog(size_t max_order) {
    std::vector<GroupFingerprint> cat;
    // abelian groups
    for (size_t n = 2; n <= max_order; ++n) {
        std::vector<std::vector<unsigned>> chains;
        std::vector<unsigned> cur;
        abelian_chains(n, static_cast<unsigned>(n), cur, chains);
        for (const auto& ch : chains)
            cat.push_back(cyclic_product(ch).fingerprint(abelian_label(ch)));
    }
    // dihedral
    for (unsigned n = 3; 2 * n <= max_order; ++n) {
        std::ostringstream os;
        os << "D" << n;
        cat.push_back(dihedral(n).fingerprint(os.str()));
    }
    // dicyclic (Dic2 = Q8; Dic5 is the semidirect product C5 : C4 with the
    // inverting action, the only order-20 group with C5 normal and a central
    // involution)
    for (unsigned n = 2; 4 * n <= max_order; ++n) {
        std::ostringstream os;
        if (n == 2)
            os << "Q8";
        else if (n == 5)
            os << "C5:C4";
        else
            os << "Dic" << n;
        cat.push_back(dicyclic(n).fingerprint(os.str()));
    }
    if (max_order >= 20) cat.push_back(frobenius20().fingerprint("F20"));
    if (max_order >= 40) cat.push_back(c5_d4().fingerprint("C5:D4"));
    if (max_order >= 24)
        cat.push_back(matrix_closure(3, {{1, 1, 0, 1}, {0, 2, 1, 0}}).fingerprint("SL(2,3)"));
    return cat;
}

GroupFingerprint fingerprint_of(const AutGroup& G, const std::string& label) {
    GroupFingerprint fp;
    fp.label = label;
    fp.order = G.order();
    fp.element_orders = G.element_orders();
    fp.abelian = G.is_abelian();
    fp.center = G.center_order();
    fp.derived = G.derived_subgroup_order();
    return fp;
}

std::string identify_group(const AutGroup& G) {
    static const std::vector<GroupFingerprint> cat = group_catalog();
    GroupFingerprint fp = fingerprint_of(G);
    for (const auto& c : cat) {
        fp.label = c.label;
        if (fp == c) return c.label;
    }
    std::ostringstream os;
    os << "order-" << G.order() << "-unrecognized";
    return os.str();
}

} // namespace ssp
