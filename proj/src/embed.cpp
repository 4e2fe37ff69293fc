#include "ssp/field.hpp"
#include "ssp/poly.hpp"

#include <stdexcept>

namespace ssp {

namespace {

// Row echelon of the k2 x k1 embedding matrix E, with the accumulated row
// transform T (k2 x k2), so solving E c = v is w = T v followed by pivot
// reads and a consistency check on the zero rows.
void build_solver(FieldCtx::Embedding& emb, u64 p, unsigned k2, unsigned k1) {
    std::vector<u64> R = emb.matrix; // row-major below: R[r * k1 + c]
    // matrix is stored column-major; convert
    std::vector<u64> M(static_cast<size_t>(k2) * k1);
    for (unsigned c = 0; c < k1; ++c)
        for (unsigned r = 0; r < k2; ++r) M[static_cast<size_t>(r) * k1 + c] = R[static_cast<size_t>(c) * k2 + r];
    std::vector<u64> T(static_cast<size_t>(k2) * k2, 0);
    for (unsigned i = 0; i < k2; ++i) T[static_cast<size_t>(i) * k2 + i] = 1;

    unsigned row = 0;
    emb.pivot_cols.assign(k1, -1);
    for (unsigned col = 0; col < k1 && row < k2; ++col) {
        unsigned pivot = row;
        while (pivot < k2 && M[static_cast<size_t>(pivot) * k1 + col] == 0) ++pivot;
        if (pivot == k2) continue;
        if (pivot != row) {
            for (unsigned c = 0; c < k1; ++c)
                std::swap(M[static_cast<size_t>(pivot) * k1 + c], M[static_cast<size_t>(row) * k1 + c]);
            for (unsigned c = 0; c < k2; ++c)
                std::swap(T[static_cast<size_t>(pivot) * k2 + c], T[static_cast<size_t>(row) * k2 + c]);
        }
        u64 inv = inv_mod(M[static_cast<size_t>(row) * k1 + col], p);
        for (unsigned c = 0; c < k1; ++c)
            M[static_cast<size_t>(row) * k1 + c] = mul_mod(M[static_cast<size_t>(row) * k1 + c], inv, p);
        for (unsigned c = 0; c < k2; ++c)
            T[static_cast<size_t>(row) * k2 + c] = mul_mod(T[static_cast<size_t>(row) * k2 + c], inv, p);
        for (unsigned r = 0; r < k2; ++r) {
            if (r == row) continue;
            u64 f = M[static_cast<size_t>(r) * k1 + col];
            if (!f) continue;
            for (unsigned c = 0; c < k1; ++c)
                M[static_cast<size_t>(r) * k1 + c] =
                    sub_mod(M[static_cast<size_t>(r) * k1 + c], mul_mod(f, M[static_cast<size_t>(row) * k1 + c], p), p);
            for (unsigned c = 0; c < k2; ++c)
                T[static_cast<size_t>(r) * k2 + c] =
                    sub_mod(T[static_cast<size_t>(r) * k2 + c], mul_mod(f, T[static_cast<size_t>(row) * k2 + c], p), p);
        }
        emb.pivot_cols[col] = static_cast<int>(row);
        ++row;
    }
    if (row != k1) throw std::logic_error("embedding matrix is not injective");
    emb.solver = std::move(T);
    emb.pivot_rows.assign(1, row); // first non-pivot row index
}

} // namespace

const FieldCtx::Embedding& FieldCtx::embedding_from(const FieldPtr& source) const {
    if (source->p() != p_) throw std::invalid_argument("embed: characteristic mismatch");
    if (k_ % source->k()) throw std::invalid_argument("embed: incompatible extension degrees");
    auto key = std::make_pair(static_cast<u64>(source->k()), source->modulus());
    {
        std::lock_guard<std::mutex> lock(embed_mutex_);
        auto it = embeddings_.find(key);
        if (it != embeddings_.end()) return *it->second;
    }
    // Computed outside the lock: the root search below re-enters this
    // context's arithmetic. Duplicate computations are identical, so a
    // losing race just discards its copy.
    auto emb = std::make_shared<Embedding>();
    emb->source = source;
    emb->target = shared_from_this();
    const unsigned k1 = source->k();
    const unsigned k2 = k_;
    emb->matrix.assign(static_cast<size_t>(k1) * k2, 0);

    if (k1 == 1) {
        emb->matrix[0] = 1;
    } else {
        // image of the source modulus root: the lexicographically smallest
        // root of the modulus in this field
        std::vector<i64> mc;
        mc.reserve(source->modulus().size());
        for (u64 v : source->modulus()) mc.push_back(static_cast<i64>(v));
        Poly h = Poly::from_ints(shared_from_this(), mc);
        auto roots = roots_in_field(h);
        if (roots.size() != static_cast<size_t>(k1))
            throw std::logic_error("embedding: modulus does not split in target");
        const FieldElem& theta = roots.front();
        FieldElem powi = shared_from_this()->one();
        for (unsigned i = 0; i < k1; ++i) {
            for (unsigned r = 0; r < k2; ++r)
                emb->matrix[static_cast<size_t>(i) * k2 + r] = powi.coeffs()[r];
            if (i + 1 < k1) powi = powi * theta;
        }
    }
    build_solver(*emb, p_, k2, k1);
    std::lock_guard<std::mutex> lock(embed_mutex_);
    auto [pos, inserted] = embeddings_.emplace(std::move(key), std::move(emb));
    return *pos->second;
}

FieldElem embed(const FieldElem& a, const FieldPtr& target) {
    const auto& src = a.ctx();
    if (src->same_field(*target)) {
        if (src.get() == target.get()) return a;
        return FieldElem(target, a.coeffs());
    }
    if (src->k() == 1) return target->from_int(static_cast<i64>(a.coeffs()[0]));
    const auto& emb = target->embedding_from(src);
    const u64 p = target->p();
    const unsigned k1 = src->k(), k2 = target->k();
    std::vector<u64> v(k2, 0);
    for (unsigned i = 0; i < k1; ++i) {
        u64 ai = a.coeffs()[i];
        if (!ai) continue;
        for (unsigned r = 0; r < k2; ++r)
            v[r] = add_mod(v[r], mul_mod(ai, emb.matrix[static_cast<size_t>(i) * k2 + r], p), p);
    }
    return FieldElem(target, std::move(v));
}

bool in_subfield(const FieldElem& a, const FieldPtr& source, FieldElem* pullback) {
    const auto& big = a.ctx();
    if (big->same_field(*source)) {
        if (pullback) *pullback = FieldElem(source, a.coeffs());
        return true;
    }
    const auto& emb = big->embedding_from(source);
    const u64 p = big->p();
    const unsigned k1 = source->k(), k2 = big->k();
    // w = T v
    std::vector<u64> w(k2, 0);
    for (unsigned r = 0; r < k2; ++r) {
        u64 acc = 0;
        for (unsigned c = 0; c < k2; ++c) {
            u64 t = emb.solver[static_cast<size_t>(r) * k2 + c];
            if (t) acc = add_mod(acc, mul_mod(t, a.coeffs()[c], p), p);
        }
        w[r] = acc;
    }
    const unsigned rank = emb.pivot_rows[0];
    for (unsigned r = rank; r < k2; ++r)
        if (w[r]) return false;
    if (pullback) {
        std::vector<u64> c(k1, 0);
        for (unsigned col = 0; col < k1; ++col) {
            int pr = emb.pivot_cols[col];
            if (pr >= 0) c[col] = w[static_cast<unsigned>(pr)];
        }
        *pullback = FieldElem(source, std::move(c));
    }
    return true;
}

} // namespace ssp
