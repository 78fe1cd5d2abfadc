#include "fibalg/chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibalg/errors.hpp"

namespace fibalg {

namespace {

std::int64_t to_int64(const Integer& v)
{
    if (!v.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

const GoldenRational& tau_minus_one()
{
    static const GoldenRational value(Integer(-1), Integer(1));
    return value;
}

const GoldenRational& inv_sqrt5()
{
    // 1/√5 = (2τ − 1)/5
    static const GoldenRational value(Integer(-1), Integer(2), Integer(5));
    return value;
}

}  // namespace

bool Window::contains(const GoldenRational& x) const
{
    const auto lo_cmp = compare(lo, x);
    const auto hi_cmp = compare(x, hi);
    const bool above = lo_closed ? lo_cmp != std::strong_ordering::greater : lo_cmp == std::strong_ordering::less;
    const bool below = hi_closed ? hi_cmp != std::strong_ordering::greater : hi_cmp == std::strong_ordering::less;
    return above && below;
}

std::string Window::to_string(Notation notation) const
{
    return std::string(lo_closed ? "[" : "(") + fibalg::to_string(lo, notation) + "," +
           fibalg::to_string(hi, notation) + (hi_closed ? "]" : ")");
}

ChainSpec::ChainSpec(Rational alpha, std::int64_t beta) : alpha_(std::move(alpha)), beta_(beta)
{
    alpha_.canonicalize();
    const GoldenRational shift = GoldenRational(alpha_) + GoldenRational(beta_);
    window_ = Window::half_open(shift - 1, shift);
}

bool ChainSpec::is_lie_compatible() const
{
    return sign(window_.lo * window_.hi) >= 0;
}

std::string ChainSpec::label() const
{
    return "F_{" + alpha_.get_str() + "," + std::to_string(beta_) + "}";
}

ChainPoint point(const ChainSpec& spec, std::int64_t n)
{
    // n/τ = n(τ − 1)
    const GoldenRational shifted = GoldenRational(n) * tau_minus_one() + GoldenRational(spec.alpha());
    const std::int64_t int_part = to_int64(floor(shifted)) + spec.beta();
    return ChainPoint{n, GoldenRational(Integer(int_part), Integer(n)), int_part};
}

bool membership(const ChainSpec& spec, const GoldenRational& x)
{
    if (!x.is_dirichlet_integer())
        throw NotDirichletInteger("not in Z[τ]: " + to_string(x));
    return spec.window().contains(star(x));
}

std::int64_t index_of(const ChainSpec& spec, const GoldenRational& x)
{
    if (!membership(spec, x))
        throw NotInChain(to_string(x) + " is not a point of " + spec.label());
    const std::int64_t n = to_int64(x.q());
    if (point(spec, n).value != x)
        throw NotInChain(to_string(x) + " does not regenerate in " + spec.label());
    return n;
}

std::vector<ChainPoint> range(const ChainSpec& spec, std::int64_t lo, std::int64_t hi)
{
    if (lo > hi)
        throw std::invalid_argument("range: lo > hi");
    std::vector<ChainPoint> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n)
        out.push_back(point(spec, n));
    return out;
}

std::vector<GoldenRational> model_set_points(const Window& window, const GoldenRational& lo,
                                             const GoldenRational& hi)
{
    std::vector<GoldenRational> out;
    if (compare(lo, hi) == std::strong_ordering::greater)
        return out;
    // x − x* = q√5 bounds the τ-coefficient; x* ∈ window bounds the integer part.
    const Integer q_min = ceil((lo - window.hi) * inv_sqrt5());
    const Integer q_max = floor((hi - window.lo) * inv_sqrt5());
    for (Integer q = q_min; q <= q_max; ++q) {
        const GoldenRational shift = GoldenRational(Integer(-q), q);  // qτ − q
        const Integer p_min = ceil(window.lo + shift);
        const Integer p_max = floor(window.hi + shift);
        for (Integer p = p_min; p <= p_max; ++p) {
            GoldenRational x(p, q);
            if (!window.contains(star(x)))
                continue;
            if (compare(x, lo) == std::strong_ordering::less || compare(x, hi) == std::strong_ordering::greater)
                continue;
            out.push_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string substitution_word(int k)
{
    if (k < 0)
        throw std::invalid_argument("substitution_word: k < 0");
    std::string word = "B";
    for (int i = 0; i < k; ++i) {
        std::string next;
        next.reserve(word.size() * 2);
        for (char c : word)
            next += c == 'A' ? "AB" : "A";
        word = std::move(next);
    }
    return word;
}

std::string gap_word(std::span<const GoldenRational> points)
{
    const GoldenRational long_gap(Integer(1), Integer(1));
    const GoldenRational short_gap = GoldenRational::tau();
    std::string word;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const GoldenRational gap = points[i] - points[i - 1];
        if (gap == long_gap)
            word += 'A';
        else if (gap == short_gap)
            word += 'B';
        else
            throw UnexpectedGap("gap " + to_string(gap) + " between " + to_string(points[i - 1]) + " and " +
                                to_string(points[i]));
    }
    return word;
}

std::string gap_word(const ChainSpec& spec, std::int64_t lo, std::int64_t hi)
{
    if (lo >= hi)
        throw std::invalid_argument("gap_word: need lo < hi");
    std::vector<GoldenRational> values;
    values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& pt : range(spec, lo, hi))
        values.push_back(pt.value);
    return gap_word(values);
}

GoldenRational qadd(const GoldenRational& x, const GoldenRational& y)
{
    static const GoldenRational tau = GoldenRational::tau();
    static const GoldenRational tau2 = tau * tau;
    return tau2 * x - tau * y;
}

std::int64_t qadd_index(const ChainSpec& spec, std::int64_t n, std::int64_t m)
{
    return point(spec, n).int_part - point(spec, m).int_part + 2 * n - m;
}

namespace {

std::vector<GoldenRational> point_values(const ChainSpec& spec, std::int64_t lo, std::int64_t hi)
{
    std::vector<GoldenRational> out;
    for (const auto& pt : range(spec, lo, hi))
        out.push_back(pt.value);
    return out;
}

void expect(IdentityReport& report, bool holds, const char* name, std::vector<GoldenRational> args)
{
    ++report.checked;
    if (!holds)
        report.violations.push_back({name, std::move(args)});
}

}  // namespace

IdentityReport check_quasiaddition_identities(const ChainSpec& spec, std::int64_t lo, std::int64_t hi)
{
    const auto pts = point_values(spec, lo, hi);
    IdentityReport r;
    for (const auto& n : pts) {
        expect(r, qadd(n, n) == n, "idempotence", {n});
        for (const auto& m : pts) {
            const GoldenRational nm = qadd(n, m), mn = qadd(m, n);
            expect(r, qadd(n, nm) == mn, "n|-(n|-m) = m|-n", {n, m});
            expect(r, nm + mn == n + m, "(n|-m)+(m|-n) = n+m", {n, m});
            expect(r, nm - mn == qadd(n - m, m - n), "(n|-m)-(m|-n) = (n-m)|-(m-n)", {n, m});
            expect(r, qadd(n, mn) == qadd(nm, n), "flexibility", {n, m});
            for (const auto& p : pts)
                expect(r, qadd(n + p, m + p) == nm + p, "(n+p)|-(m+p) = (n|-m)+p", {n, m, p});
        }
    }
    return r;
}

IdentityReport check_quasiaddition_closure(const ChainSpec& spec, std::int64_t lo, std::int64_t hi)
{
    static const GoldenRational two_minus_tau(Integer(2), Integer(-1));
    const auto pts = point_values(spec, lo, hi);
    IdentityReport r;
    for (const auto& x : pts) {
        for (const auto& y : pts) {
            const GoldenRational z = qadd(x, y);
            expect(r, membership(spec, z), "membership", {x, y});
            expect(r, star(z) == two_minus_tau * star(x) + tau_minus_one() * star(y), "convex star image", {x, y});
        }
    }
    return r;
}

IdentityReport check_chain_equivalence(const ChainSpec& spec, std::int64_t bound)
{
    IdentityReport r;
    for (std::int64_t b = -bound; b <= bound; ++b) {
        const std::int64_t a_formula = point(spec, b).int_part;
        for (std::int64_t a = -bound; a <= bound; ++a) {
            const GoldenRational x{Integer(a), Integer(b)};
            expect(r, membership(spec, x) == (a == a_formula), "window membership = explicit formula", {x});
        }
    }
    return r;
}

std::int64_t fibonacci(int k)
{
    std::int64_t a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        const std::int64_t t = a + b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace fibalg
