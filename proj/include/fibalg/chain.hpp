#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fibalg/golden.hpp"

namespace fibalg {

/// Interval of the perpendicular space with independently open or closed ends.
struct Window {
    GoldenRational lo;
    GoldenRational hi;
    bool lo_closed = false;
    bool hi_closed = true;

    /// (lo, hi]
    static Window half_open(GoldenRational lo, GoldenRational hi) { return {std::move(lo), std::move(hi), false, true}; }
    /// [lo, hi]
    static Window closed(GoldenRational lo, GoldenRational hi) { return {std::move(lo), std::move(hi), true, true}; }

    bool contains(const GoldenRational& x) const;
    GoldenRational length() const { return hi - lo; }
    std::string to_string(Notation notation = Notation::Unicode) const;
};

/**
 * Parameters (α, β) of the Fibonacci chain
 *   F_{α,β}(n) = ⌊n/τ + α⌋ + nτ + β
 * whose acceptance window is (−1+α+β, α+β].
 */
class ChainSpec {
public:
    explicit ChainSpec(Rational alpha = 1, std::int64_t beta = 0);

    const Rational& alpha() const { return alpha_; }
    std::int64_t beta() const { return beta_; }
    const Window& window() const { return window_; }

    /// (−1+α+β)(α+β) ≥ 0: the window does not straddle the origin.
    bool is_lie_compatible() const;

    std::string label() const;

private:
    Rational alpha_;
    std::int64_t beta_;
    Window window_;
};

/// A chain coordinate F(index) = int_part + index·τ.
struct ChainPoint {
    std::int64_t index = 0;
    GoldenRational value;
    std::int64_t int_part = 0;

    friend bool operator==(const ChainPoint&, const ChainPoint&) = default;
};

ChainPoint point(const ChainSpec& spec, std::int64_t n);

/// 1 iff star(x) lies in the chain's window.  Throws NotDirichletInteger when x ∉ Z[τ].
bool membership(const ChainSpec& spec, const GoldenRational& x);

/// Index n with point(spec, n) = x.  Throws NotInChain otherwise.
std::int64_t index_of(const ChainSpec& spec, const GoldenRational& x);

/// Points for n = lo..hi, in increasing order.
std::vector<ChainPoint> range(const ChainSpec& spec, std::int64_t lo, std::int64_t hi);

/// All x ∈ Z[τ] with star(x) ∈ window and lo ≤ x ≤ hi, ascending.
std::vector<GoldenRational> model_set_points(const Window& window, const GoldenRational& lo,
                                             const GoldenRational& hi);

/// k-th iterate of A → AB, B → A starting from "B".
std::string substitution_word(int k);

/// One letter per gap: 'A' for 1+τ, 'B' for τ.  Throws UnexpectedGap otherwise.
std::string gap_word(std::span<const GoldenRational> ascending_points);
std::string gap_word(const ChainSpec& spec, std::int64_t lo, std::int64_t hi);

/// Quasiaddition x ⊢ y = τ²x − τy.
GoldenRational qadd(const GoldenRational& x, const GoldenRational& y);

/// Index of F(n) ⊢ F(m), i.e. n′ − m′ + 2n − m.
std::int64_t qadd_index(const ChainSpec& spec, std::int64_t n, std::int64_t m);

/// A named identity that failed on the listed arguments.
struct IdentityViolation {
    std::string identity;
    std::vector<GoldenRational> args;
};

struct IdentityReport {
    std::uint64_t checked = 0;
    std::vector<IdentityViolation> violations;
};

/**
 * Idempotence, n⊢(n⊢m) = m⊢n, translation (n+p)⊢(m+p) = (n⊢m)+p, the sum
 * rule, (n⊢m)−(m⊢n) = (n−m)⊢(m−n) and flexibility, over chain points with
 * indices in [lo, hi] (triples where p appears).
 */
IdentityReport check_quasiaddition_identities(const ChainSpec& spec, std::int64_t lo, std::int64_t hi);

/// membership(x⊢y) and star(x⊢y) = (2−τ)·star(x) + (τ−1)·star(y) over pairs of chain points.
IdentityReport check_quasiaddition_closure(const ChainSpec& spec, std::int64_t lo, std::int64_t hi);

/// Window membership against the explicit formula for every a+bτ with |a|, |b| ≤ bound.
IdentityReport check_chain_equivalence(const ChainSpec& spec, std::int64_t bound);

/// Fibonacci numbers for substitution-word lengths.
std::int64_t fibonacci(int k);

}  // namespace fibalg
