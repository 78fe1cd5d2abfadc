#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fibalg/golden.hpp"

namespace fibalg {

/**
 * Index of an algebra generator: the central element C, an integer chain
 * index n (for L_n), or an explicit chain point x ∈ Z[τ] (for L_x).
 *
 * Keys order as Central < ChainIndex (ascending) < Point (ascending), which
 * fixes iteration and serialization order.
 */
class BasisKey {
public:
    struct Central {
        auto operator<=>(const Central&) const = default;
    };
    struct ChainIndex {
        std::int64_t n;
        auto operator<=>(const ChainIndex&) const = default;
    };
    struct Point {
        GoldenRational x;
        auto operator<=>(const Point&) const = default;
    };

    static BasisKey central() { return BasisKey(Central{}); }
    static BasisKey index(std::int64_t n) { return BasisKey(ChainIndex{n}); }
    /// Throws NotDirichletInteger when x ∉ Z[τ].
    static BasisKey point(GoldenRational x);

    bool is_central() const { return std::holds_alternative<Central>(key_); }
    bool is_index() const { return std::holds_alternative<ChainIndex>(key_); }
    bool is_point() const { return std::holds_alternative<Point>(key_); }

    std::int64_t index() const { return std::get<ChainIndex>(key_).n; }
    const GoldenRational& point() const { return std::get<Point>(key_).x; }

    auto operator<=>(const BasisKey&) const = default;

private:
    using Variant = std::variant<Central, ChainIndex, Point>;
    explicit BasisKey(Variant v) : key_(std::move(v)) {}

    Variant key_;
};

/// "C", "L_{n}" or "L_{x}".
std::string to_string(const BasisKey& key, Notation notation = Notation::Unicode);

/// Finite formal linear combination of generators with exact coefficients.  Never stores zeros.
class AlgebraElement {
public:
    using Terms = std::map<BasisKey, GoldenRational>;

    AlgebraElement() = default;
    explicit AlgebraElement(const BasisKey& key, const GoldenRational& coeff = 1) { add_term(key, coeff); }

    void add_term(const BasisKey& key, const GoldenRational& coeff);
    const GoldenRational& coefficient(const BasisKey& key) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Terms::const_iterator begin() const { return terms_.begin(); }
    Terms::const_iterator end() const { return terms_.end(); }

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const GoldenRational& c);
    AlgebraElement operator-() const;

    /// Drops every term whose key fails the predicate.
    template <typename Pred>
    AlgebraElement filter(Pred&& keep) const
    {
        AlgebraElement out;
        for (const auto& [k, c] : terms_)
            if (keep(k))
                out.terms_.emplace(k, c);
        return out;
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    Terms terms_;
};

inline AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
inline AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
inline AlgebraElement operator*(const GoldenRational& c, AlgebraElement a) { return a *= c; }
inline AlgebraElement operator*(AlgebraElement a, const GoldenRational& c) { return a *= c; }

/// Generator shorthands: L_n, L_x and C.
inline AlgebraElement gen(std::int64_t n) { return AlgebraElement(BasisKey::index(n)); }
inline AlgebraElement gen_point(const GoldenRational& x) { return AlgebraElement(BasisKey::point(x)); }
inline AlgebraElement gen_central() { return AlgebraElement(BasisKey::central()); }

/// Σᵢⱼ aᵢ bⱼ · product(keyᵢ, keyⱼ).
template <typename Product>
AlgebraElement bilinear_extend(Product&& product_on_basis, const AlgebraElement& a, const AlgebraElement& b)
{
    AlgebraElement out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            AlgebraElement term = product_on_basis(ka, kb);
            if (!term.is_zero())
                out += (ca * cb) * term;
        }
    }
    return out;
}

enum class KeyKind { Index, Point };

/**
 * Renders terms in key order, e.g. "5C-8L_{0}", "(1+2τ)L_{1}",
 * "(1/2)L_{-7}+(1/2)L_{1}"; the zero element renders as "0".
 */
std::string to_string(const AlgebraElement& e, Notation notation = Notation::Unicode);

/// Inverse of to_string; key_kind decides whether "L_{1}" means index 1 or point 1.
AlgebraElement parse_element(std::string_view text, KeyKind key_kind);

/// Result of a span-membership query; coefficients reconstruct the target when in_span.
struct SpanCertificate {
    bool in_span = false;
    std::vector<GoldenRational> coefficients;
};

/// Decides target ∈ span(generators) over Q(√5) exactly.
SpanCertificate in_span(const AlgebraElement& target, std::span<const AlgebraElement> generators);

}  // namespace fibalg
