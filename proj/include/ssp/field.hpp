#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ssp {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Arithmetic mod an odd prime p < 2^61.
u64 add_mod(u64 a, u64 b, u64 p);
u64 sub_mod(u64 a, u64 b, u64 p);
u64 mul_mod(u64 a, u64 b, u64 p);
u64 pow_mod(u64 a, u64 e, u64 p);
u64 inv_mod(u64 a, u64 p);
bool is_prime_u64(u64 n);

class FieldCtx;
class FieldElem;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// A finite field F_{p^k}, presented as F_p[t]/(modulus) for an explicit
/// monic irreducible modulus of degree k (no modulus when k = 1).
/// Elements are coefficient vectors over F_p, ascending in powers of t.
///
/// Contexts are immutable after construction and safe to share across
/// threads; the internal caches (Frobenius matrix, embeddings) are memoized
/// under a mutex.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    /// Builds F_{p^k}. If `modulus` is absent and k > 1, the lexicographically
    /// smallest monic irreducible of degree k is generated (ascending
    /// coefficient vectors compared entrywise), so presentations are
    /// reproducible. A supplied modulus is reduced mod p and must be monic,
    /// degree k, and irreducible.
    static FieldPtr make(u64 p, unsigned k,
                         const std::optional<std::vector<i64>>& modulus = std::nullopt);

    u64 p() const { return p_; }
    unsigned k() const { return k_; }
    /// Modulus coefficients, ascending, length k+1 (monic). Empty when k = 1.
    const std::vector<u64>& modulus() const { return modulus_; }

    bool q_fits_u64() const;
    /// p^k; throws when it does not fit in 64 bits.
    u64 q() const;

    bool same_field(const FieldCtx& other) const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(i64 v) const;
    FieldElem from_coeffs(const std::vector<i64>& coeffs) const;
    /// Element whose coefficient vector is the base-p expansion of idx.
    /// Enumerates the whole field as idx runs over [0, q).
    FieldElem element_from_index(u64 idx) const;
    u64 index_of(const FieldElem& a) const;

    /// t (the modulus root) for k > 1.
    FieldElem gen() const;

    std::string describe() const;

    // Internal caches, logically const.
    const std::vector<u64>&  frobenius_matrix() const; // k x k over F_p, column-major
    struct Embedding {
        FieldPtr source;
        FieldPtr target;
        std::vector<u64> matrix;      // k_target x k_source, column-major over F_p
        std::vector<u64> solver;      // row-echelon data for pullback
        std::vector<int> pivot_cols;  // echelon bookkeeping
        std::vector<unsigned> pivot_rows;
    };
    const Embedding& embedding_from(const FieldPtr& source) const;

private:
    FieldCtx() = default;
    u64 p_ = 0;
    unsigned k_ = 1;
    std::vector<u64> modulus_; // ascending, monic, size k+1; empty for k == 1

    mutable std::mutex frob_mutex_;
    mutable std::vector<u64> frob_matrix_;
    mutable std::mutex embed_mutex_;
    mutable std::map<std::pair<u64, std::vector<u64>>, std::shared_ptr<Embedding>> embeddings_;

    friend class FieldElem;
};

/// An element of a FieldCtx: a reduced coefficient vector of length k.
/// Plain value semantics; all arithmetic stays inside the owning context.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(FieldPtr ctx, std::vector<u64> coeffs);

    const FieldPtr& ctx() const { return ctx_; }
    const std::vector<u64>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    /// Lexicographic compare of coefficient vectors; the deterministic
    /// tie-break used throughout (sqrt roots, canonical representatives).
    bool lex_less(const FieldElem& o) const;

    FieldElem inv() const;

    std::string str() const;

private:
    FieldPtr ctx_;
    std::vector<u64> c_;
};

FieldElem pow(const FieldElem& a, u64 e);

/// a^{p^m} (the m-fold p-power Frobenius).
FieldElem frobenius(const FieldElem& a, u64 m);

/// Norm down to the prime field: a * a^p * ... * a^{p^{k-1}}, returned as a
/// residue in [0, p).
u64 norm_to_prime(const FieldElem& a);

/// Euler criterion, evaluated as norm(a)^{(p-1)/2} in F_p so no big exponents
/// arise. Rejects a = 0.
bool is_square(const FieldElem& a);

/// Square root of a square; of the two roots, returns the one with the
/// lexicographically smaller coefficient vector. Throws on non-squares.
FieldElem sqrt(const FieldElem& a);

/// Smallest non-square in index-enumeration order.
FieldElem find_nonsquare(const FieldPtr& ctx);

/// Multiplicative order (requires q to fit in u64 and a != 0).
u64 multiplicative_order(const FieldElem& a);

/// Image of `a` under the cached embedding of its field into `target`.
/// Degrees must divide and characteristics match.
FieldElem embed(const FieldElem& a, const FieldPtr& target);

/// Whether `a` (element of a big field) lies in the embedded image of
/// `source`; if so *pullback is set to its preimage.
bool in_subfield(const FieldElem& a, const FieldPtr& source, FieldElem* pullback = nullptr);

} // namespace ssp
