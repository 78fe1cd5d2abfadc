#include "fibalg/lie.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibalg/errors.hpp"

namespace fibalg {

LieAlgebraSpec::LieAlgebraSpec(LieKind kind, ChainSpec chain, Window window, CentralSign sign, bool falsify)
    : kind_(kind), chain_(std::move(chain)), window_(std::move(window)), central_sign_(sign), falsify_(falsify)
{
    if (!falsify_ && !is_valid())
        throw InvalidAlgebra(label() + " fails its Lie validity predicate; use falsification mode to explore it");
}

LieAlgebraSpec LieAlgebraSpec::qclie(Window window, bool falsify)
{
    return LieAlgebraSpec(LieKind::QCLie, ChainSpec(1, 0), std::move(window), CentralSign::Table, falsify);
}

LieAlgebraSpec LieAlgebraSpec::witt(ChainSpec chain, bool falsify)
{
    Window w = chain.window();
    return LieAlgebraSpec(LieKind::Witt, std::move(chain), std::move(w), CentralSign::Table, falsify);
}

LieAlgebraSpec LieAlgebraSpec::virasoro(ChainSpec chain, CentralSign sign, bool falsify)
{
    Window w = chain.window();
    return LieAlgebraSpec(LieKind::Virasoro, std::move(chain), std::move(w), sign, falsify);
}

bool LieAlgebraSpec::is_valid() const
{
    if (kind_ == LieKind::QCLie)
        return sign(window_.lo * window_.hi) >= 0;
    return chain_.is_lie_compatible();
}

std::string LieAlgebraSpec::label() const
{
    switch (kind_) {
    case LieKind::QCLie:
        return "qclie" + window_.to_string();
    case LieKind::Witt:
        return "witt " + chain_.label();
    case LieKind::Virasoro:
        return "virasoro " + chain_.label();
    }
    return {};
}

std::vector<GoldenRational> defect_chain_points(const GoldenRational& lo, const GoldenRational& hi)
{
    if (compare(lo, hi) != std::strong_ordering::less)
        throw std::invalid_argument("defect_chain_points: need lo < hi");
    return model_set_points(Window::closed(0, 1), lo, hi);
}

AlgebraElement qclie_bracket(const LieAlgebraSpec& spec, const GoldenRational& x, const GoldenRational& y)
{
    for (const auto* v : {&x, &y})
        if (!v->is_dirichlet_integer() || !spec.window().contains(star(*v)))
            throw NotInChain(to_string(*v) + " is not a point of " + spec.label());
    if (x == y)
        return {};
    if (!spec.window().contains(star(x) + star(y)))
        return {};
    return AlgebraElement(BasisKey::point(x + y), y - x);
}

AlgebraElement qclie_bracket(const GoldenRational& x, const GoldenRational& y)
{
    static const LieAlgebraSpec spec = LieAlgebraSpec::qclie();
    return qclie_bracket(spec, x, y);
}

AlgebraElement witt_bracket(const LieAlgebraSpec& spec, std::int64_t n, std::int64_t m)
{
    if (n == m)
        return {};
    const GoldenRational s = star(point(spec.chain(), n).value) + star(point(spec.chain(), m).value);
    if (!spec.window().contains(s))
        return {};
    return AlgebraElement(BasisKey::index(n + m), GoldenRational(n - m));
}

GoldenRational central_term(CentralSign sign, std::int64_t n, std::int64_t m)
{
    if (n != -m)
        return {};
    const GoldenRational k = GoldenRational(n) * (GoldenRational(n) * GoldenRational(n) - 1) / GoldenRational(12);
    return sign == CentralSign::Equation ? k : -k;
}

AlgebraElement virasoro_bracket(const LieAlgebraSpec& spec, std::int64_t n, std::int64_t m)
{
    AlgebraElement out = witt_bracket(spec, n, m);
    out.add_term(BasisKey::central(), central_term(spec.central_sign(), n, m));
    return out;
}

AlgebraElement bracket(const LieAlgebraSpec& spec, const BasisKey& a, const BasisKey& b)
{
    switch (spec.kind()) {
    case LieKind::QCLie:
        if (!a.is_point() || !b.is_point())
            throw std::invalid_argument("qclie brackets take point generators");
        return qclie_bracket(spec, a.point(), b.point());
    case LieKind::Witt:
        if (!a.is_index() || !b.is_index())
            throw std::invalid_argument("witt brackets take integer-indexed generators");
        return witt_bracket(spec, a.index(), b.index());
    case LieKind::Virasoro:
        if (a.is_central() || b.is_central())
            return {};
        if (!a.is_index() || !b.is_index())
            throw std::invalid_argument("virasoro brackets take integer-indexed generators");
        return virasoro_bracket(spec, a.index(), b.index());
    }
    return {};
}

AlgebraElement bracket(const LieAlgebraSpec& spec, const AlgebraElement& a, const AlgebraElement& b)
{
    return bilinear_extend([&spec](const BasisKey& x, const BasisKey& y) { return bracket(spec, x, y); }, a, b);
}

std::vector<BasisKey> index_keys(std::int64_t lo, std::int64_t hi)
{
    if (lo > hi)
        throw std::invalid_argument("index_keys: lo > hi");
    std::vector<BasisKey> keys;
    for (std::int64_t n = lo; n <= hi; ++n)
        keys.push_back(BasisKey::index(n));
    return keys;
}

std::vector<BasisKey> point_keys(std::span<const GoldenRational> points)
{
    std::vector<BasisKey> keys;
    for (const auto& x : points)
        keys.push_back(BasisKey::point(x));
    return keys;
}

std::vector<GoldenRational> smallest_points(const Window& window, std::size_t count)
{
    std::vector<GoldenRational> pts;
    for (long radius = 4; pts.size() < count; radius *= 2)
        pts = model_set_points(window, GoldenRational(-radius), GoldenRational(radius));
    std::stable_sort(pts.begin(), pts.end(), [](const GoldenRational& a, const GoldenRational& b) {
        return compare(abs(a), abs(b)) == std::strong_ordering::less;
    });
    pts.resize(count);
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<Violation> check_antisymmetry(const LieAlgebraSpec& spec, std::span<const BasisKey> keys)
{
    std::vector<Violation> out;
    for (const auto& a : keys) {
        for (const auto& b : keys) {
            AlgebraElement r = bracket(spec, a, b) + bracket(spec, b, a);
            if (!r.is_zero())
                out.push_back({{a, b}, std::move(r)});
        }
    }
    return out;
}

std::vector<Violation> check_antisymmetry(const LieAlgebraSpec& spec, std::int64_t lo, std::int64_t hi)
{
    const auto keys = index_keys(lo, hi);
    return check_antisymmetry(spec, keys);
}

std::vector<Violation> check_jacobi(const LieAlgebraSpec& spec, std::span<const BasisKey> keys)
{
    // Inner brackets are single generators (plus C), so cache them per ordered pair.
    const std::size_t n = keys.size();
    std::vector<AlgebraElement> inner(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inner[i * n + j] = bracket(spec, keys[i], keys[j]);

    std::vector<Violation> out;
    for (std::size_t i = 0; i < n; ++i) {
        const AlgebraElement a(keys[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const AlgebraElement b(keys[j]);
            for (std::size_t k = 0; k < n; ++k) {
                const AlgebraElement c(keys[k]);
                AlgebraElement r = bracket(spec, a, inner[j * n + k]);
                r += bracket(spec, b, inner[k * n + i]);
                r += bracket(spec, c, inner[i * n + j]);
                if (!r.is_zero())
                    out.push_back({{keys[i], keys[j], keys[k]}, std::move(r)});
            }
        }
    }
    return out;
}

std::vector<Violation> check_jacobi(const LieAlgebraSpec& spec, std::int64_t lo, std::int64_t hi)
{
    const auto keys = index_keys(lo, hi);
    return check_jacobi(spec, keys);
}

std::vector<Violation> abelian_witnesses(const Rational& c_low, const GoldenRational& lo, const GoldenRational& hi)
{
    if (c_low >= 1)
        throw std::invalid_argument("abelian_witnesses: need c_low < 1");
    const auto sub = LieAlgebraSpec::qclie(Window::closed(GoldenRational(c_low), 1), true);
    const auto pts = model_set_points(sub.window(), lo, hi);
    std::vector<Violation> out;
    for (const auto& x : pts) {
        for (const auto& y : pts) {
            AlgebraElement r = qclie_bracket(sub, x, y);
            if (!r.is_zero())
                out.push_back({{BasisKey::point(x), BasisKey::point(y)}, std::move(r)});
        }
    }
    return out;
}

bool check_abelian_subwindow(const Rational& c_low, const GoldenRational& lo, const GoldenRational& hi)
{
    return abelian_witnesses(c_low, lo, hi).empty();
}

std::vector<Violation> ideal_witnesses(const Rational& c, const GoldenRational& lo, const GoldenRational& hi)
{
    if (c <= 0 || c >= 1)
        throw std::invalid_argument("ideal_witnesses: need 0 < c < 1");
    const Window sub = Window::closed(GoldenRational(c), 1);
    const auto full = LieAlgebraSpec::qclie();
    const auto ideal_pts = model_set_points(sub, lo, hi);
    const auto all_pts = model_set_points(full.window(), lo, hi);
    std::vector<Violation> out;
    for (const auto& x : ideal_pts) {
        for (const auto& y : all_pts) {
            AlgebraElement r = qclie_bracket(full, x, y);
            const bool leaves = std::any_of(r.begin(), r.end(), [&sub](const auto& term) {
                return !sub.contains(star(term.first.point()));
            });
            if (leaves)
                out.push_back({{BasisKey::point(x), BasisKey::point(y)}, std::move(r)});
        }
    }
    return out;
}

bool check_ideal(const Rational& c, const GoldenRational& lo, const GoldenRational& hi)
{
    return ideal_witnesses(c, lo, hi).empty();
}

std::vector<ChiFactorizationFailure> check_chi_factorization(const Window& window,
                                                             std::span<const GoldenRational> points)
{
    std::vector<GoldenRational> stars;
    for (const auto& x : points) {
        GoldenRational s = star(x);
        if (!window.contains(s))
            throw NotInChain(to_string(x) + " has star image outside " + window.to_string());
        stars.push_back(std::move(s));
    }
    std::vector<ChiFactorizationFailure> out;
    for (const auto& a : stars) {
        for (const auto& b : stars) {
            if (window.contains(a + b))
                continue;
            for (const auto& c : stars)
                if (window.contains(a + b + c))
                    out.push_back({a, b, c});
        }
    }
    return out;
}

}  // namespace fibalg
