#pragma once

#include "ssp/curve.hpp"
#include "ssp/groebner.hpp"
#include "ssp/smallfield.hpp"

#include <map>
#include <string>

namespace ssp {

enum class EnumBackend { groebner, exhaustive, hybrid };

std::string backend_name(EnumBackend b);
EnumBackend backend_from_name(const std::string& name);

/// Parameters for the normal-form search
///   c y^2 = x^{2g+2} + b x^{2g} + a_{2g-1} x^{2g-1} + ... + a_0,
/// coefficient slots 0..2g-1 for the a_i plus slot 2g for b (values 0, 1,
/// and the canonical non-square).
///
/// s1 counts the slots treated symbolically while powering f; s2 of them
/// stay symbolic through the solver. With s1 = 2g+1 the b slot itself is
/// symbolic and the single big power is computed once; with s1 <= 2g the
/// power is recomputed per outer assignment (b and slots >= s1). The slots
/// in [s2, s1) are substituted tuple by tuple, and the solver sees the
/// remaining s2 variables.
struct EnumParams {
    unsigned g = 4;
    FieldPtr ctx;
    unsigned s1 = 0, s2 = 0; // 0,0 = pick defaults for (g, q)
    EnumBackend backend = EnumBackend::hybrid;
    unsigned workers = 0; // 0 = all available
    std::string checkpoint_path;
    u64 seed = 0;
    u64 groebner_max_pairs = 500000;
    u64 variety_max_scan = 30000000;

    void apply_defaults();
    void validate() const;
};

struct EnumerationReport {
    // parameter echo
    unsigned g = 0;
    u64 p = 0;
    unsigned k = 1;
    unsigned s1 = 0, s2 = 0;
    std::string backend;
    unsigned workers = 1;
    bool model_complete = true; // q > 2g+1

    std::vector<Poly> curves; // the set F, canonically sorted

    u64 tuples_total = 0;
    u64 tuples_done = 0;
    u64 tuples_resumed = 0;
    u64 groebner_solved = 0;
    u64 groebner_failed = 0;
    u64 fallback_used = 0;
    u64 inconsistent = 0;
    u64 candidates_scanned = 0;
    u64 squarefree_rejected = 0;
    double wall_seconds = 0;
};

/// The g^2 superspeciality constraints: coefficients of x^{p*i-j} in
/// f^{(p-1)/2}, with the slots listed in `symbolic` as variables (in that
/// order) and everything else read from `fixed`.
std::vector<MPoly> build_superspeciality_system(unsigned g, const FieldPtr& ctx,
                                                const std::map<unsigned, FieldElem>& fixed,
                                                const std::vector<unsigned>& symbolic);

/// Full search over the normal-form family; see EnumParams for the split.
EnumerationReport enumerate_superspecial(const EnumParams& params);

/// Cached-power scan over all assignments of the `free_slots` (ascending,
/// must start with slot 0), other slots read from `fixed` (slot 2g = b
/// required). Emits squarefree f with zero Cartier-Manin matrix. OpenMP
/// parallel over the outer assignments.
std::vector<Poly> exhaustive_scan(const SmallField& F, unsigned g,
                                  const std::map<unsigned, u16>& fixed,
                                  const std::vector<unsigned>& free_slots, unsigned workers,
                                  u64* candidates_scanned = nullptr,
                                  u64* squarefree_rejected = nullptr);

/// Straightforward per-candidate reference scan (generic arithmetic, no
/// caching): the independent oracle the fast kernel is tested against.
std::vector<Poly> enumerate_superspecial_reference(unsigned g, const FieldPtr& ctx);

} // namespace ssp
