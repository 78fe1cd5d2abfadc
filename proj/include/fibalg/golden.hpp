#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fibalg {

using Integer = mpz_class;
using Rational = mpq_class;

/// How τ is spelled when rendering: "τ" for text tables, "t" for CSV/JSON fields.
enum class Notation { Unicode, Ascii };

/**
 * Exact element (p + q·τ)/d of Q(√5), where τ = (1+√5)/2.
 *
 * Values are always kept canonical: d > 0, gcd(|p|, |q|, d) = 1 and zero is
 * (0, 0, 1).  Equality is therefore component-wise.  The sub-ring with d = 1
 * is the Dirichlet ring Z[τ] in which all chain coordinates live.
 */
class GoldenRational {
public:
    GoldenRational() : p_(0), q_(0), d_(1) {}
    GoldenRational(long value) : p_(value), q_(0), d_(1) {}
    explicit GoldenRational(Integer p) : p_(std::move(p)), q_(0), d_(1) {}
    GoldenRational(Integer p, Integer q, Integer d = 1);
    explicit GoldenRational(const Rational& r);

    static GoldenRational tau() { return GoldenRational(Integer(0), Integer(1)); }

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& d() const { return d_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_dirichlet_integer() const { return d_ == 1; }
    bool is_rational() const { return q_ == 0; }

    /// Coefficient of 1 and of τ as exact rationals.
    Rational rational_part() const;
    Rational tau_part() const;

    /// Field norm x·x* = (p² + pq − q²)/d².
    Rational norm() const;

    GoldenRational operator-() const;
    GoldenRational& operator+=(const GoldenRational& rhs);
    GoldenRational& operator-=(const GoldenRational& rhs);
    GoldenRational& operator*=(const GoldenRational& rhs);
    /// Throws std::domain_error on division by zero.
    GoldenRational& operator/=(const GoldenRational& rhs);

    friend bool operator==(const GoldenRational& a, const GoldenRational& b)
    {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
    }
    friend std::strong_ordering operator<=>(const GoldenRational& a, const GoldenRational& b);

private:
    void canonicalize();

    Integer p_, q_, d_;
};

inline GoldenRational operator+(GoldenRational a, const GoldenRational& b) { return a += b; }
inline GoldenRational operator-(GoldenRational a, const GoldenRational& b) { return a -= b; }
inline GoldenRational operator*(GoldenRational a, const GoldenRational& b) { return a *= b; }
inline GoldenRational operator/(GoldenRational a, const GoldenRational& b) { return a /= b; }

/// Galois conjugation τ ↦ 1 − τ.  Involutive ring automorphism.
GoldenRational star(const GoldenRational& x);

/// Exact total order under the real embedding τ ≈ 1.618.
std::strong_ordering compare(const GoldenRational& a, const GoldenRational& b);

/// Sign of x as −1, 0 or +1.
int sign(const GoldenRational& x);

/// Greatest integer k with k ≤ x.
Integer floor(const GoldenRational& x);
/// Least integer k with k ≥ x.
Integer ceil(const GoldenRational& x);

GoldenRational abs(const GoldenRational& x);

/// Canonical rendering: "a", "bτ", "a+bτ", "a-bτ", with "/d" (or "(…)/d") when d > 1.
std::string to_string(const GoldenRational& x, Notation notation = Notation::Unicode);

/**
 * Parses the rendering grammar: optional sign, integer part, optional ±kτ,
 * optional "/d".  Accepts "τ" or "t" and a Unicode minus.  Throws
 * std::invalid_argument on malformed input.
 */
GoldenRational parse_golden(std::string_view text);

/// Parses an exact rational "a" or "a/b".  Decimal and float literals are rejected.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GoldenRational& x);

}  // namespace fibalg
