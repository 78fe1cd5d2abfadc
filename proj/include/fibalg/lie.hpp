#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fibalg/algebra.hpp"
#include "fibalg/chain.hpp"

namespace fibalg {

enum class LieKind { QCLie, Witt, Virasoro };

/// Which sign the Virasoro central term carries.
/// Equation: [L_n, L_{-n}] ∋ +(1/12)·n(n²−1)·C.  Table: the opposite sign,
/// i.e. (1/12)·m(m²−1)·C with m the second argument.
enum class CentralSign { Table, Equation };

/**
 * One of the three Lie-type algebras.
 *
 * QCLie lives on the model set of a closed window [a, b] (the default [0, 1]
 * gives F_{1,0} with the origin adjoined) and is valid iff ab ≥ 0.  Witt and
 * Virasoro are indexed by integers over a chain F_{α,β} and are valid iff
 * (−1+α+β)(α+β) ≥ 0.  Invalid specs can only be built in falsification mode.
 */
class LieAlgebraSpec {
public:
    static LieAlgebraSpec qclie(Window window = Window::closed(0, 1), bool falsify = false);
    static LieAlgebraSpec witt(ChainSpec chain, bool falsify = false);
    static LieAlgebraSpec virasoro(ChainSpec chain, CentralSign sign = CentralSign::Table, bool falsify = false);

    LieKind kind() const { return kind_; }
    const ChainSpec& chain() const { return chain_; }
    /// The window used by χ: the closed QCLie window, or the chain's half-open window.
    const Window& window() const { return window_; }
    CentralSign central_sign() const { return central_sign_; }
    bool falsification_mode() const { return falsify_; }

    /// The validity predicate of the algebra kind (independent of falsification mode).
    bool is_valid() const;

    std::string label() const;

private:
    LieAlgebraSpec(LieKind kind, ChainSpec chain, Window window, CentralSign sign, bool falsify);

    LieKind kind_;
    ChainSpec chain_;
    Window window_;
    CentralSign central_sign_;
    bool falsify_;
};

/// Points of F_{1,0} ∪ {0} in [lo, hi], ascending; the gap 0 → 1 is the unique length-1 tile.
std::vector<GoldenRational> defect_chain_points(const GoldenRational& lo, const GoldenRational& hi);

/// [L_x, L_y] = (y − x)·χ(x* + y*)·L_{x+y} on a QCLie spec.  Throws NotInChain.
AlgebraElement qclie_bracket(const LieAlgebraSpec& spec, const GoldenRational& x, const GoldenRational& y);
/// QCLie on the default window [0, 1].
AlgebraElement qclie_bracket(const GoldenRational& x, const GoldenRational& y);

/// [L_n, L_m] = (n − m)·χ(F(n)* + F(m)*)·L_{n+m}.
AlgebraElement witt_bracket(const LieAlgebraSpec& spec, std::int64_t n, std::int64_t m);

/// Witt term plus the central term on n = −m.
AlgebraElement virasoro_bracket(const LieAlgebraSpec& spec, std::int64_t n, std::int64_t m);

/// Coefficient of C in [L_n, L_m] under the spec's sign convention.
GoldenRational central_term(CentralSign sign, std::int64_t n, std::int64_t m);

/// Bracket on generators of any kind; [L, C] = [C, L] = 0 for Virasoro.
AlgebraElement bracket(const LieAlgebraSpec& spec, const BasisKey& a, const BasisKey& b);
AlgebraElement bracket(const LieAlgebraSpec& spec, const AlgebraElement& a, const AlgebraElement& b);

/// A failing tuple and the nonzero value the identity produced on it.
struct Violation {
    std::vector<BasisKey> args;
    AlgebraElement residual;
};

/// Generators L_lo … L_hi of an index-based spec.
std::vector<BasisKey> index_keys(std::int64_t lo, std::int64_t hi);
/// Generators L_x of a QCLie spec for the given points.
std::vector<BasisKey> point_keys(std::span<const GoldenRational> points);
/// The `count` points of the spec's model set with the smallest |x|, ascending.
std::vector<GoldenRational> smallest_points(const Window& window, std::size_t count);

/// [a,b] + [b,a] over all ordered pairs.
std::vector<Violation> check_antisymmetry(const LieAlgebraSpec& spec, std::span<const BasisKey> keys);
std::vector<Violation> check_antisymmetry(const LieAlgebraSpec& spec, std::int64_t lo, std::int64_t hi);

/// [a,[b,c]] + [b,[c,a]] + [c,[a,b]] over all ordered triples.
std::vector<Violation> check_jacobi(const LieAlgebraSpec& spec, std::span<const BasisKey> keys);
std::vector<Violation> check_jacobi(const LieAlgebraSpec& spec, std::int64_t lo, std::int64_t hi);

/// Nonzero brackets among points of F([c_low, 1]) in [lo, hi], χ taken on [c_low, 1].
std::vector<Violation> abelian_witnesses(const Rational& c_low, const GoldenRational& lo, const GoldenRational& hi);
bool check_abelian_subwindow(const Rational& c_low, const GoldenRational& lo, const GoldenRational& hi);

/// Brackets [L_x, L_y], x ∈ F([c,1]), y ∈ F([0,1]) in [lo, hi], leaving span{L_z : z ∈ F([c,1])}.
std::vector<Violation> ideal_witnesses(const Rational& c, const GoldenRational& lo, const GoldenRational& hi);
bool check_ideal(const Rational& c, const GoldenRational& lo, const GoldenRational& hi);

/// A triple of window values (s₁, s₂, s₃) breaking χ(s₁+s₂+s₃) = 1 ⇒ χ(s₁+s₂) = 1.
struct ChiFactorizationFailure {
    GoldenRational s1, s2, s3;
};

/// Checks the χ factorization premise on all triples of star images of `points`.
std::vector<ChiFactorizationFailure> check_chi_factorization(const Window& window,
                                                             std::span<const GoldenRational> points);

}  // namespace fibalg
