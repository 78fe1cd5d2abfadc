#include "fibalg/jordan.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "fibalg/errors.hpp"
#include "fibalg/linsolve.hpp"

namespace fibalg {

namespace {

const GoldenRational& half()
{
    static const GoldenRational value(Integer(1), Integer(0), Integer(2));
    return value;
}

}  // namespace

std::string to_string(TruncationMode mode)
{
    return mode == TruncationMode::ZeroProduct ? "zero-product" : "drop-term";
}

TruncationMode parse_truncation_mode(std::string_view text)
{
    if (text == "zero-product")
        return TruncationMode::ZeroProduct;
    if (text == "drop-term")
        return TruncationMode::DropTerm;
    throw std::invalid_argument("unknown truncation mode '" + std::string(text) + "'");
}

std::pair<std::int64_t, std::int64_t> jordan_indices(const JordanSpec& spec, std::int64_t n, std::int64_t m)
{
    return {qadd_index(spec.chain, n, m), qadd_index(spec.chain, m, n)};
}

AlgebraElement jordan_product(const JordanSpec& spec, std::int64_t n, std::int64_t m)
{
    const auto [p, q] = jordan_indices(spec, n, m);
    AlgebraElement out(BasisKey::index(p), half());
    out.add_term(BasisKey::index(q), half());
    return out;
}

AlgebraElement jordan_product_points(const JordanSpec& spec, const GoldenRational& x, const GoldenRational& y)
{
    for (const auto* v : {&x, &y})
        if (!membership(spec.chain, *v))
            throw NotInChain(to_string(*v) + " is not a point of " + spec.chain.label());
    AlgebraElement out(BasisKey::point(qadd(x, y)), half());
    out.add_term(BasisKey::point(qadd(y, x)), half());
    return out;
}

AlgebraElement jordan_product(const JordanSpec& spec, const BasisKey& a, const BasisKey& b)
{
    if (a.is_index() && b.is_index())
        return jordan_product(spec, a.index(), b.index());
    if (a.is_point() && b.is_point())
        return jordan_product_points(spec, a.point(), b.point());
    throw std::invalid_argument("jordan product needs two index keys or two point keys");
}

AlgebraElement jordan_product(const JordanSpec& spec, const AlgebraElement& a, const AlgebraElement& b)
{
    return bilinear_extend([&spec](const BasisKey& x, const BasisKey& y) { return jordan_product(spec, x, y); },
                           a, b);
}

AlgebraElement to_index_form(const ChainSpec& chain, const AlgebraElement& e)
{
    AlgebraElement out;
    for (const auto& [k, c] : e)
        out.add_term(k.is_point() ? BasisKey::index(index_of(chain, k.point())) : k, c);
    return out;
}

std::vector<SumRuleViolation> check_sum_rule(const JordanSpec& spec, std::int64_t lo, std::int64_t hi)
{
    std::vector<SumRuleViolation> out;
    for (std::int64_t n = lo; n <= hi; ++n) {
        for (std::int64_t m = lo; m <= hi; ++m) {
            const auto [p, q] = jordan_indices(spec, n, m);
            if (p + q != n + m)
                out.push_back({n, m, p, q});
        }
    }
    return out;
}

namespace {

template <typename Product>
std::vector<PairViolation> jordan_identity_pairs(std::int64_t lo, std::int64_t hi, Product&& product)
{
    std::vector<PairViolation> out;
    for (std::int64_t n = lo; n <= hi; ++n) {
        const AlgebraElement x = gen(n);
        const AlgebraElement xx = product(x, x);
        for (std::int64_t m = lo; m <= hi; ++m) {
            const AlgebraElement y = gen(m);
            AlgebraElement lhs = product(product(x, y), xx);
            AlgebraElement rhs = product(x, product(y, xx));
            if (lhs != rhs)
                out.push_back({n, m, std::move(lhs), std::move(rhs)});
        }
    }
    return out;
}

}  // namespace

std::vector<PairViolation> check_jordan_identity(const JordanSpec& spec, std::int64_t lo, std::int64_t hi)
{
    return jordan_identity_pairs(lo, hi, [&spec](const AlgebraElement& a, const AlgebraElement& b) {
        return jordan_product(spec, a, b);
    });
}

MonotoneReport check_monotone_zero_maps(const JordanSpec& spec, std::int64_t lo, std::int64_t hi)
{
    if (lo >= hi)
        throw std::invalid_argument("check_monotone_zero_maps: need lo < hi");
    auto direction = [&](auto&& f) {
        int dir = 0;
        for (std::int64_t n = lo; n < hi; ++n) {
            const std::int64_t a = f(n), b = f(n + 1);
            const int step = b > a ? 1 : (b < a ? -1 : 0);
            if (step == 0 || (dir != 0 && step != dir))
                return 0;
            dir = step;
        }
        return dir;
    };
    MonotoneReport r;
    r.left_direction = direction([&](std::int64_t n) { return qadd_index(spec.chain, 0, n); });
    r.right_direction = direction([&](std::int64_t n) { return qadd_index(spec.chain, n, 0); });
    return r;
}

bool check_no_identity(const JordanSpec& spec, std::int64_t N, std::int64_t M)
{
    if (M < 0 || M >= N)
        throw std::invalid_argument("check_no_identity: need 0 <= M < N");

    // Unknowns c_k for |k| ≤ N; one equation per (constraint n, output index).
    std::map<std::pair<std::int64_t, std::int64_t>, Eigen::Index> rows;
    auto row_of = [&rows](std::int64_t n, std::int64_t idx) {
        return rows.try_emplace({n, idx}, static_cast<Eigen::Index>(rows.size())).first->second;
    };
    std::vector<std::tuple<Eigen::Index, Eigen::Index, GoldenRational>> entries;
    for (std::int64_t n = -M; n <= M; ++n) {
        row_of(n, n);
        for (std::int64_t k = -N; k <= N; ++k)
            for (const auto& [key, c] : jordan_product(spec, k, n))
                entries.emplace_back(row_of(n, key.index()), k + N, c);
    }

    DenseMatrix<GoldenRational> a = DenseMatrix<GoldenRational>::Zero(static_cast<Eigen::Index>(rows.size()), 2 * N + 1);
    DenseVector<GoldenRational> b = DenseVector<GoldenRational>::Zero(static_cast<Eigen::Index>(rows.size()));
    for (const auto& [r, col, c] : entries)
        a(r, col) += c;
    for (std::int64_t n = -M; n <= M; ++n)
        b(rows.at({n, n})) = 1;
    return !solve_golden(a, b).solvable;
}

SpanCertificate ideal_membership(const JordanSpec& spec, const AlgebraElement& target, std::int64_t N)
{
    std::vector<AlgebraElement> gens;
    for (std::int64_t n = -N; n <= N; ++n)
        gens.push_back(jordan_product(spec, 0, n));
    return in_span(target, gens);
}

bool check_proper_ideal(const JordanSpec& spec, std::int64_t N)
{
    if (N < 2)
        throw std::invalid_argument("check_proper_ideal: need N >= 2");
    return !ideal_membership(spec, gen(1), N).in_span;
}

AlgebraElement truncated_product(const TruncationSpec& tspec, std::int64_t n, std::int64_t m)
{
    for (std::int64_t v : {n, m})
        if (!tspec.in_window(v))
            throw IndexOutsideWindow("L_" + std::to_string(v) + " is outside [-" + std::to_string(tspec.N) + ", " +
                                     std::to_string(tspec.N) + "]");
    const JordanSpec spec{tspec.chain};
    const auto [p, q] = jordan_indices(spec, n, m);
    if (tspec.mode == TruncationMode::ZeroProduct && !(tspec.in_window(p) && tspec.in_window(q)))
        return {};
    return jordan_product(spec, n, m).filter([&](const BasisKey& k) { return tspec.in_window(k.index()); });
}

AlgebraElement truncated_product(const TruncationSpec& tspec, const AlgebraElement& a, const AlgebraElement& b)
{
    return bilinear_extend(
        [&tspec](const BasisKey& x, const BasisKey& y) { return truncated_product(tspec, x.index(), y.index()); }, a,
        b);
}

TruncatedAxiomsReport check_truncated_axioms(const TruncationSpec& tspec)
{
    TruncatedAxiomsReport report;
    for (std::int64_t n = -tspec.N; n <= tspec.N; ++n) {
        for (std::int64_t m = -tspec.N; m <= tspec.N; ++m) {
            AlgebraElement nm = truncated_product(tspec, n, m);
            AlgebraElement mn = truncated_product(tspec, m, n);
            if (nm != mn)
                report.commutativity_witnesses.push_back({n, m, std::move(nm), std::move(mn)});
        }
    }
    report.jordan_witnesses =
        jordan_identity_pairs(-tspec.N, tspec.N, [&tspec](const AlgebraElement& a, const AlgebraElement& b) {
            return truncated_product(tspec, a, b);
        });
    report.commutative = report.commutativity_witnesses.empty();
    report.jordan_identity = report.jordan_witnesses.empty();
    return report;
}

GoldenRational StructureConstantTable::coefficient(std::int64_t i, std::int64_t j, std::int64_t k) const
{
    if (j > k)
        std::swap(j, k);
    const auto it = std::find_if(constants.begin(), constants.end(), [&](const StructureConstant& c) {
        return c.i == i && c.j == j && c.k == k;
    });
    return it == constants.end() ? GoldenRational() : it->value;
}

AlgebraElement StructureConstantTable::product(std::int64_t j, std::int64_t k) const
{
    if (j > k)
        std::swap(j, k);
    AlgebraElement out;
    for (const auto& c : constants)
        if (c.j == j && c.k == k)
            out.add_term(BasisKey::index(c.i), c.value);
    return out;
}

StructureConstantTable export_structure_constants(const TruncationSpec& tspec)
{
    StructureConstantTable table;
    table.chain = tspec.chain;
    table.N = tspec.N;
    table.mode = tspec.mode;
    for (std::int64_t n = -tspec.N; n <= tspec.N; ++n)
        table.basis.push_back(n);
    for (std::int64_t j = -tspec.N; j <= tspec.N; ++j)
        for (std::int64_t k = j; k <= tspec.N; ++k)
            for (const auto& [key, c] : truncated_product(tspec, j, k))
                table.constants.push_back({key.index(), j, k, c});
    return table;
}

}  // namespace fibalg
