#include "fibalg/algebra.hpp"

#include <stdexcept>

#include "fibalg/errors.hpp"
#include "fibalg/linsolve.hpp"

namespace fibalg {

BasisKey BasisKey::point(GoldenRational x)
{
    if (!x.is_dirichlet_integer())
        throw NotDirichletInteger("generator key not in Z[τ]: " + fibalg::to_string(x));
    return BasisKey(Point{std::move(x)});
}

std::string to_string(const BasisKey& key, Notation notation)
{
    if (key.is_central())
        return "C";
    if (key.is_index())
        return "L_{" + std::to_string(key.index()) + "}";
    return "L_{" + to_string(key.point(), notation) + "}";
}

void AlgebraElement::add_term(const BasisKey& key, const GoldenRational& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

const GoldenRational& AlgebraElement::coefficient(const BasisKey& key) const
{
    static const GoldenRational zero;
    const auto it = terms_.find(key);
    return it == terms_.end() ? zero : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs)
{
    for (const auto& [k, c] : rhs.terms_)
        add_term(k, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs)
{
    for (const auto& [k, c] : rhs.terms_)
        add_term(k, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GoldenRational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement out = *this;
    for (auto& [k, v] : out.terms_)
        v = -v;
    return out;
}

namespace {

std::string render_coefficient(const GoldenRational& c, Notation notation)
{
    if (c == GoldenRational(1))
        return "";
    if (c == GoldenRational(-1))
        return "-";
    if (c.is_rational() && c.d() != 1 && c.p() < 0)
        return "-" + render_coefficient(-c, notation);
    const bool single = c.d() == 1 && (c.p() == 0 || c.q() == 0);
    const std::string s = to_string(c, notation);
    return single ? s : "(" + s + ")";
}

}  // namespace

std::string to_string(const AlgebraElement& e, Notation notation)
{
    if (e.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, c] : e) {
        std::string term = render_coefficient(c, notation) + to_string(k, notation);
        if (!out.empty() && term.front() != '-')
            out += '+';
        out += term;
    }
    return out;
}

namespace {

// Replaces the Unicode minus with '-' and strips blanks; τ is left for parse_golden.
std::string clean_element_text(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "−") == 0) {
            out += '-';
            i += 2;
        } else if (text[i] != ' ' && text[i] != '\t') {
            out += text[i];
        }
    }
    return out;
}

[[noreturn]] void bad_element(std::string_view text)
{
    throw std::invalid_argument("malformed element: '" + std::string(text) + "'");
}

}  // namespace

AlgebraElement parse_element(std::string_view text, KeyKind key_kind)
{
    const std::string s = clean_element_text(text);
    AlgebraElement out;
    if (s == "0")
        return out;
    if (s.empty())
        bad_element(text);

    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        }
        GoldenRational coeff = 1;
        if (i < s.size() && s[i] == '(') {
            // coefficients like ((1+τ)/2) nest
            std::size_t close = i;
            for (int depth = 0; close < s.size(); ++close) {
                depth += s[close] == '(' ? 1 : s[close] == ')' ? -1 : 0;
                if (depth == 0)
                    break;
            }
            if (close >= s.size())
                bad_element(text);
            coeff = parse_golden(s.substr(i + 1, close - i - 1));
            i = close + 1;
        } else {
            const std::size_t start = i;
            while (i < s.size() && s[i] != 'L' && s[i] != 'C')
                ++i;
            if (i > start)
                coeff = parse_golden(s.substr(start, i - start));
        }
        if (i >= s.size())
            bad_element(text);

        BasisKey key = BasisKey::central();
        if (s[i] == 'C') {
            ++i;
        } else {
            // 'L' followed by "_{…}" or "_n"
            ++i;
            if (i >= s.size() || s[i] != '_')
                bad_element(text);
            ++i;
            std::string inner;
            if (i < s.size() && s[i] == '{') {
                const std::size_t close = s.find('}', i);
                if (close == std::string::npos)
                    bad_element(text);
                inner = s.substr(i + 1, close - i - 1);
                i = close + 1;
            } else {
                const std::size_t start = i;
                if (i < s.size() && s[i] == '-')
                    ++i;
                while (i < s.size() && s[i] >= '0' && s[i] <= '9')
                    ++i;
                inner = s.substr(start, i - start);
            }
            const GoldenRational value = parse_golden(inner);
            if (key_kind == KeyKind::Index) {
                if (!value.is_rational() || value.d() != 1 || !value.p().fits_slong_p())
                    bad_element(text);
                key = BasisKey::index(value.p().get_si());
            } else {
                key = BasisKey::point(value);
            }
        }
        out.add_term(key, negative ? -coeff : coeff);
    }
    return out;
}

SpanCertificate in_span(const AlgebraElement& target, std::span<const AlgebraElement> generators)
{
    std::map<BasisKey, Eigen::Index> rows;
    auto row_of = [&rows](const BasisKey& k) {
        return rows.try_emplace(k, static_cast<Eigen::Index>(rows.size())).first->second;
    };
    for (const auto& [k, c] : target)
        row_of(k);
    for (const auto& g : generators)
        for (const auto& [k, c] : g)
            row_of(k);

    const auto ncols = static_cast<Eigen::Index>(generators.size());
    DenseMatrix<GoldenRational> a = DenseMatrix<GoldenRational>::Zero(static_cast<Eigen::Index>(rows.size()), ncols);
    DenseVector<GoldenRational> b = DenseVector<GoldenRational>::Zero(static_cast<Eigen::Index>(rows.size()));
    for (Eigen::Index j = 0; j < ncols; ++j)
        for (const auto& [k, c] : generators[static_cast<std::size_t>(j)])
            a(rows.at(k), j) = c;
    for (const auto& [k, c] : target)
        b(rows.at(k)) = c;

    SpanCertificate out;
    const auto sol = solve_golden(a, b);
    out.in_span = sol.solvable;
    if (sol.solvable)
        out.coefficients.assign(sol.x.data(), sol.x.data() + sol.x.size());
    return out;
}

}  // namespace fibalg
