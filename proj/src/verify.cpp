#include "fibalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "fibalg/chain.hpp"
#include "fibalg/errors.hpp"

namespace fibalg {

namespace {

std::string ascii(const GoldenRational& x) { return to_string(x, Notation::Ascii); }
std::string ascii(const BasisKey& k) { return to_string(k, Notation::Ascii); }
std::string ascii(const AlgebraElement& e) { return to_string(e, Notation::Ascii); }

std::string rational_str(const Rational& r) { return r.get_str(); }

json chain_params(const VerifyParams& p, std::int64_t range)
{
    return json{{"alpha", rational_str(p.alpha)}, {"beta", p.beta}, {"range", range}};
}

void list(Verdict& v, json item)
{
    ++v.violation_count;
    if (v.violations.size() < Verdict::max_listed)
        v.violations.push_back(std::move(item));
}

json lie_violation(const Violation& viol)
{
    json args = json::array();
    for (const auto& k : viol.args)
        args.push_back(ascii(k));
    return json{{"args", std::move(args)}, {"residual", ascii(viol.residual)}};
}

json pair_violation(const PairViolation& pv)
{
    return json{{"n", pv.n}, {"m", pv.m}, {"lhs", ascii(pv.lhs)}, {"rhs", ascii(pv.rhs)}};
}

void add_identity_report(Verdict& v, const IdentityReport& report)
{
    v.checked = report.checked;
    for (const auto& viol : report.violations) {
        json args = json::array();
        for (const auto& x : viol.args)
            args.push_back(ascii(x));
        list(v, json{{"identity", viol.identity}, {"args", std::move(args)}});
    }
}

LieAlgebraSpec lie_spec(const VerifyParams& p)
{
    const ChainSpec chain(p.alpha, p.beta);
    if (p.algebra == "witt")
        return LieAlgebraSpec::witt(chain, p.falsify);
    if (p.algebra == "virasoro")
        return LieAlgebraSpec::virasoro(chain, p.central_sign, p.falsify);
    if (p.algebra == "qclie") {
        if (p.window_lo >= p.window_hi)
            throw std::invalid_argument("qclie window needs lo < hi");
        return LieAlgebraSpec::qclie(Window::closed(GoldenRational(p.window_lo), GoldenRational(p.window_hi)),
                                     p.falsify);
    }
    throw std::invalid_argument("unknown algebra '" + p.algebra + "' (expected witt, virasoro or qclie)");
}

json lie_params(const VerifyParams& p, const LieAlgebraSpec& spec, std::int64_t range)
{
    json j{{"algebra", p.algebra}};
    if (spec.kind() == LieKind::QCLie) {
        j["window"] = json::array({rational_str(p.window_lo), rational_str(p.window_hi)});
    } else {
        j["alpha"] = rational_str(p.alpha);
        j["beta"] = p.beta;
    }
    if (spec.kind() == LieKind::Virasoro)
        j["central_sign"] = p.central_sign == CentralSign::Table ? "table" : "equation";
    j["range"] = range;
    j["falsify"] = p.falsify;
    j["valid"] = spec.is_valid();
    return j;
}

/// Index generators for Witt/Virasoro (plus C), or the 2·range+1 smallest points for QCLie.
std::vector<BasisKey> lie_keys(const LieAlgebraSpec& spec, std::int64_t range)
{
    if (spec.kind() == LieKind::QCLie)
        return point_keys(smallest_points(spec.window(), static_cast<std::size_t>(2 * range + 1)));
    auto keys = index_keys(-range, range);
    if (spec.kind() == LieKind::Virasoro)
        keys.insert(keys.begin(), BasisKey::central());
    return keys;
}

Verdict lie_suite(const std::string& name, const VerifyParams& p, bool jacobi)
{
    const auto spec = lie_spec(p);
    const std::int64_t range = p.range.value_or(15);
    const auto keys = lie_keys(spec, range);
    Verdict v;
    v.suite = name;
    v.params = lie_params(p, spec, range);
    const auto n = static_cast<std::uint64_t>(keys.size());
    v.checked = jacobi ? n * n * n : n * n;
    for (const auto& viol : jacobi ? check_jacobi(spec, keys) : check_antisymmetry(spec, keys))
        list(v, lie_violation(viol));
    // Antisymmetry holds by construction; Jacobi is expected to fail exactly on invalid specs.
    const bool predicted = jacobi && !spec.is_valid();
    v.expected_outcome = (v.violation_count > 0) == predicted;
    return v;
}

Verdict jordan_identity_suite(const VerifyParams& p)
{
    const std::int64_t range = p.range.value_or(20);
    Verdict v;
    v.suite = "jordan-identity";
    v.params = chain_params(p, range);
    const auto n = static_cast<std::uint64_t>(2 * range + 1);
    v.checked = n * n;
    for (const auto& pv : check_jordan_identity(JordanSpec{ChainSpec(p.alpha, p.beta)}, -range, range))
        list(v, pair_violation(pv));
    v.expected_outcome = v.violation_count == 0;
    return v;
}

Verdict identity_suite(const std::string& name, const VerifyParams& p, std::int64_t default_range,
                       const std::function<IdentityReport(const ChainSpec&, std::int64_t)>& run)
{
    const std::int64_t range = p.range.value_or(default_range);
    Verdict v;
    v.suite = name;
    v.params = chain_params(p, range);
    add_identity_report(v, run(ChainSpec(p.alpha, p.beta), range));
    v.expected_outcome = v.violation_count == 0;
    return v;
}

Verdict sum_rule_suite(const VerifyParams& p)
{
    const std::int64_t range = p.range.value_or(50);
    Verdict v;
    v.suite = "sum-rule";
    v.params = chain_params(p, range);
    const auto n = static_cast<std::uint64_t>(2 * range + 1);
    v.checked = n * n;
    for (const auto& s : check_sum_rule(JordanSpec{ChainSpec(p.alpha, p.beta)}, -range, range))
        list(v, json{{"n", s.n}, {"m", s.m}, {"p", s.p}, {"q", s.q}});
    v.expected_outcome = v.violation_count == 0;
    return v;
}

Verdict subwindow_suite(const std::string& name, const VerifyParams& p, bool abelian)
{
    const std::int64_t range = p.range.value_or(20);
    Verdict v;
    v.suite = name;
    v.params = json{{"c", rational_str(p.c)}, {"range", range}};
    const GoldenRational lo(-range), hi(range);
    const Window sub = Window::closed(GoldenRational(p.c), 1);
    const auto sub_pts = model_set_points(sub, lo, hi).size();
    const auto all_pts = abelian ? sub_pts : model_set_points(Window::closed(0, 1), lo, hi).size();
    v.checked = static_cast<std::uint64_t>(sub_pts * all_pts);
    for (const auto& viol : abelian ? abelian_witnesses(p.c, lo, hi) : ideal_witnesses(p.c, lo, hi))
        list(v, lie_violation(viol));
    // Sub-windows starting at or above 1/2 are abelian; below that nothing is claimed.
    if (abelian && p.c < Rational(1, 2))
        v.expected_outcome = true;
    else
        v.expected_outcome = v.violation_count == 0;
    v.details = json{{abelian ? "abelian" : "ideal", v.violation_count == 0}};
    return v;
}

Verdict no_identity_suite(const VerifyParams& p)
{
    Verdict v;
    v.suite = "no-identity";
    v.params = json{{"alpha", rational_str(p.alpha)}, {"beta", p.beta}, {"N", p.N}, {"M", p.M}};
    v.checked = 1;
    if (!check_no_identity(JordanSpec{ChainSpec(p.alpha, p.beta)}, p.N, p.M))
        list(v, json{{"finding", "an identity element exists on the constrained generators"}});
    v.expected_outcome = v.violation_count == 0;
    return v;
}

Verdict proper_ideal_suite(const VerifyParams& p)
{
    Verdict v;
    v.suite = "proper-ideal";
    v.params = json{{"alpha", rational_str(p.alpha)}, {"beta", p.beta}, {"N", p.N}};
    v.checked = 1;
    const auto cert = ideal_membership(JordanSpec{ChainSpec(p.alpha, p.beta)}, gen(1), p.N);
    if (cert.in_span) {
        json coeffs = json::array();
        for (const auto& c : cert.coefficients)
            coeffs.push_back(ascii(c));
        list(v, json{{"finding", "L_{1} lies in span{L_0 o L_n}"}, {"coefficients", std::move(coeffs)}});
    }
    v.expected_outcome = v.violation_count == 0;
    return v;
}

Verdict truncated_axioms_suite(const VerifyParams& p)
{
    const TruncationSpec tspec{ChainSpec(p.alpha, p.beta), p.N, p.mode};
    Verdict v;
    v.suite = "truncated-axioms";
    v.params = json{{"alpha", rational_str(p.alpha)}, {"beta", p.beta}, {"N", p.N}, {"mode", to_string(p.mode)}};
    const auto n = static_cast<std::uint64_t>(2 * p.N + 1);
    v.checked = 2 * n * n;
    const auto report = check_truncated_axioms(tspec);
    for (const auto& w : report.commutativity_witnesses) {
        json item = pair_violation(w);
        item["axiom"] = "commutativity";
        list(v, std::move(item));
    }
    for (const auto& w : report.jordan_witnesses) {
        json item = pair_violation(w);
        item["axiom"] = "jordan-identity";
        list(v, std::move(item));
    }
    v.details = json{{"commutative", report.commutative}, {"jordan_identity", report.jordan_identity}};
    // Commutativity is structural; the Jordan identity is claimed for the zero-product truncation only.
    v.expected_outcome = report.commutative && (p.mode == TruncationMode::DropTerm || report.jordan_identity);
    return v;
}

Verdict gap_word_suite(const VerifyParams& p)
{
    Verdict v;
    v.suite = "gap-word";
    v.params = json{{"alpha", rational_str(p.alpha)}, {"beta", p.beta}, {"gaps", p.gaps}};
    v.checked = 2;
    const ChainSpec spec(p.alpha, p.beta);
    const std::string prefix = gap_word(spec, 0, 100);
    int found_at = -1;
    for (int k = 0; k <= 15 && found_at < 0; ++k)
        if (substitution_word(k).find(prefix) != std::string::npos)
            found_at = k;
    if (found_at < 0)
        list(v, json{{"finding", "first 100 gap letters are not a factor of any substitution word with k <= 15"}});

    const std::string word = gap_word(spec, 0, p.gaps);
    const auto a = std::count(word.begin(), word.end(), 'A');
    const auto b = std::count(word.begin(), word.end(), 'B');
    const GoldenRational ratio = b == 0 ? GoldenRational() : GoldenRational(a) / GoldenRational(b);
    const bool close = b != 0 && compare(abs(ratio - GoldenRational::tau()), GoldenRational(Integer(1), Integer(0), Integer(100))) ==
                                     std::strong_ordering::less;
    if (!close)
        list(v, json{{"finding", "A/B frequency ratio is not within 0.01 of tau"}, {"A", a}, {"B", b}});
    v.details = json{{"factor_of_substitution_word_k", found_at}, {"A", a}, {"B", b}};
    v.expected_outcome = v.violation_count == 0;
    return v;
}

using SuiteFn = std::function<Verdict(const VerifyParams&)>;

const std::map<std::string, SuiteFn, std::less<>>& suites()
{
    static const std::map<std::string, SuiteFn, std::less<>> table{
        {"jacobi", [](const VerifyParams& p) { return lie_suite("jacobi", p, true); }},
        {"antisymmetry", [](const VerifyParams& p) { return lie_suite("antisymmetry", p, false); }},
        {"jordan-identity", jordan_identity_suite},
        {"quasiadd",
         [](const VerifyParams& p) {
             return identity_suite("quasiadd", p, 12, [](const ChainSpec& s, std::int64_t r) {
                 return check_quasiaddition_identities(s, -r, r);
             });
         }},
        {"closure",
         [](const VerifyParams& p) {
             return identity_suite("closure", p, 12, [](const ChainSpec& s, std::int64_t r) {
                 return check_quasiaddition_closure(s, -r, r);
             });
         }},
        {"sum-rule", sum_rule_suite},
        {"abelian", [](const VerifyParams& p) { return subwindow_suite("abelian", p, true); }},
        {"ideal", [](const VerifyParams& p) { return subwindow_suite("ideal", p, false); }},
        {"no-identity", no_identity_suite},
        {"proper-ideal", proper_ideal_suite},
        {"truncated-axioms", truncated_axioms_suite},
        {"chain-equivalence",
         [](const VerifyParams& p) {
             return identity_suite("chain-equivalence", p, 60, [](const ChainSpec& s, std::int64_t r) {
                 return check_chain_equivalence(s, r);
             });
         }},
        {"gap-word", gap_word_suite},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites())
        out.push_back(name);
    return out;
}

Verdict run_verify(std::string_view suite, const VerifyParams& params)
{
    const auto it = suites().find(suite);
    if (it == suites().end())
        throw UnknownSuite("unknown suite '" + std::string(suite) + "'");
    if (params.range && *params.range < 0)
        throw std::invalid_argument("--range must be non-negative");
    const auto start = std::chrono::steady_clock::now();
    Verdict v = it->second(params);
    v.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
}

json to_json(const Verdict& v, bool include_elapsed)
{
    json j{{"suite", v.suite},
           {"params", v.params},
           {"checked", v.checked},
           {"violation_count", v.violation_count},
           {"violations", v.violations},
           {"expected_outcome", v.expected_outcome}};
    if (!v.details.is_null())
        j["details"] = v.details;
    if (include_elapsed)
        j["elapsed"] = v.elapsed_seconds;
    return j;
}

std::string run_export(const TruncationSpec& tspec, OutputFormat format)
{
    const auto table = export_structure_constants(tspec);
    if (format == OutputFormat::Csv)
        return to_csv(table);
    if (format == OutputFormat::Json)
        return to_json(table).dump(2) + "\n";
    throw std::invalid_argument("export-sc writes json or csv");
}

}  // namespace fibalg
