#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibalg/algebra.hpp"
#include "fibalg/chain.hpp"

namespace fibalg {

/// The aperiodic Jordan algebra on a chain; valid for every (α, β).
struct JordanSpec {
    ChainSpec chain;
};

/// How a truncated product treats outputs that leave the index window.
enum class TruncationMode {
    ZeroProduct,  ///< the whole product is 0 if any output index leaves the window
    DropTerm,     ///< only the out-of-window terms are removed
};

std::string to_string(TruncationMode mode);
/// "zero-product" or "drop-term"; throws std::invalid_argument otherwise.
TruncationMode parse_truncation_mode(std::string_view text);

/// Finite truncation to generators L_{−N} … L_N.
struct TruncationSpec {
    ChainSpec chain;
    std::int64_t N = 0;
    TruncationMode mode = TruncationMode::ZeroProduct;

    bool in_window(std::int64_t n) const { return -N <= n && n <= N; }
};

/// Output indices (p, q) of L_n ∘ L_m = ½(L_p + L_q), with p from F(n) ⊢ F(m).
std::pair<std::int64_t, std::int64_t> jordan_indices(const JordanSpec& spec, std::int64_t n, std::int64_t m);

/// L_n ∘ L_m = ½(L_{n′−m′+2n−m} + L_{m′−n′+2m−n}).
AlgebraElement jordan_product(const JordanSpec& spec, std::int64_t n, std::int64_t m);

/// L_x ∘ L_y = ½(L_{x⊢y} + L_{y⊢x}) on point-keyed generators.  Throws NotInChain.
AlgebraElement jordan_product_points(const JordanSpec& spec, const GoldenRational& x, const GoldenRational& y);

/// Product on generators of either key kind, extended bilinearly to elements.
AlgebraElement jordan_product(const JordanSpec& spec, const BasisKey& a, const BasisKey& b);
AlgebraElement jordan_product(const JordanSpec& spec, const AlgebraElement& a, const AlgebraElement& b);

/// Rewrites point keys as chain indices (via index_of); index keys pass through.
AlgebraElement to_index_form(const ChainSpec& chain, const AlgebraElement& e);

struct SumRuleViolation {
    std::int64_t n, m, p, q;
};

/// Pairs in [lo, hi]² whose output indices do not satisfy p + q = n + m.
std::vector<SumRuleViolation> check_sum_rule(const JordanSpec& spec, std::int64_t lo, std::int64_t hi);

struct PairViolation {
    std::int64_t n, m;
    AlgebraElement lhs, rhs;
};

/// Pairs (x, y) = (L_n, L_m) breaking (x∘y)∘(x∘x) = x∘(y∘(x∘x)).
std::vector<PairViolation> check_jordan_identity(const JordanSpec& spec, std::int64_t lo, std::int64_t hi);

/// Strict monotonicity of n ↦ index(0 ⊢ n) and n ↦ index(n ⊢ 0) over a range.
struct MonotoneReport {
    int left_direction = 0;   ///< of n ↦ 0 ⊢ n: +1 increasing, −1 decreasing, 0 not strictly monotone
    int right_direction = 0;  ///< of n ↦ n ⊢ 0
    bool ok() const { return left_direction != 0 && right_direction != 0; }
};

MonotoneReport check_monotone_zero_maps(const JordanSpec& spec, std::int64_t lo, std::int64_t hi);

/**
 * True iff no element I = Σ_{|k|≤N} c_k L_k satisfies I ∘ L_n = L_n for all
 * |n| ≤ M, decided by an exact linear solve.  Requires 0 ≤ M < N.
 */
bool check_no_identity(const JordanSpec& spec, std::int64_t N, std::int64_t M);

/// Exact membership of target in span{L_0 ∘ L_n : |n| ≤ N}.
SpanCertificate ideal_membership(const JordanSpec& spec, const AlgebraElement& target, std::int64_t N);

/// True iff L_1 ∉ span{L_0 ∘ L_n : |n| ≤ N}.  Requires N ≥ 2.
bool check_proper_ideal(const JordanSpec& spec, std::int64_t N);

/// Product inside a truncation.  Throws IndexOutsideWindow for out-of-window inputs.
AlgebraElement truncated_product(const TruncationSpec& tspec, std::int64_t n, std::int64_t m);
AlgebraElement truncated_product(const TruncationSpec& tspec, const AlgebraElement& a, const AlgebraElement& b);

struct TruncatedAxiomsReport {
    bool commutative = true;
    bool jordan_identity = true;
    std::vector<PairViolation> commutativity_witnesses;
    std::vector<PairViolation> jordan_witnesses;
};

/// Exhaustive commutativity and Jordan-identity check over all generator pairs of the truncation.
TruncatedAxiomsReport check_truncated_axioms(const TruncationSpec& tspec);

/// Structure constants a^i_{jk} with L_j ∘ L_k = Σ_i a^i_{jk} L_i.
struct StructureConstant {
    std::int64_t i, j, k;
    GoldenRational value;

    friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

struct StructureConstantTable {
    std::string algebra = "jordan";
    ChainSpec chain;
    std::int64_t N = 0;
    TruncationMode mode = TruncationMode::ZeroProduct;
    std::vector<std::int64_t> basis;
    /// Nonzero entries with j ≤ k, ordered by (j, k, i).
    std::vector<StructureConstant> constants;

    /// a^i_{jk}, using the symmetry in (j, k) for j > k.
    GoldenRational coefficient(std::int64_t i, std::int64_t j, std::int64_t k) const;
    /// Σ_i a^i_{jk} L_i rebuilt from the table.
    AlgebraElement product(std::int64_t j, std::int64_t k) const;
};

StructureConstantTable export_structure_constants(const TruncationSpec& tspec);

}  // namespace fibalg
