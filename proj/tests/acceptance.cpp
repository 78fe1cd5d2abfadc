// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "fibalg/jordan.hpp"
#include "fibalg/serialize.hpp"
#include "fibalg/tables.hpp"
#include "fibalg/verify.hpp"
#include "oracle.hpp"
#include "reference_tables.hpp"

using namespace fibalg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& note)
    {
        if (!ok)
            pass = false;
        notes.push_back((ok ? "ok: " : "failed: ") + note);
    }
    void note(const std::string& text) { notes.push_back(text); }
};

template <typename... Parts>
std::string cat(const Parts&... parts)
{
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

std::string fmt_seconds(double s) { return cat(std::fixed, std::setprecision(3), s, " s"); }

TableCell parse_printed(const std::string& text, const Table& shape)
{
    if (std::holds_alternative<GoldenRational>(shape.cells.front().front()))
        return parse_golden(text);
    return parse_element(text, shape.key_kind);
}

struct CellDiff {
    std::size_t row, col;
    TableCell printed, computed;
};

std::vector<CellDiff> diff_table(const Table& t, const reference::PrintedTable& ref, Outcome& o)
{
    std::vector<CellDiff> diffs;
    const bool shape_ok = ref.cells.size() == t.cells.size() &&
                          std::all_of(ref.cells.begin(), ref.cells.end(), [&](const auto& row) {
                              return row.size() == t.cells.front().size();
                          });
    o.require(shape_ok, cat("table ", t.id, " shape ", t.cells.size(), "x", t.cells.front().size()));
    if (!shape_ok)
        return diffs;
    for (std::size_t r = 0; r < t.cells.size(); ++r)
        for (std::size_t c = 0; c < t.cells[r].size(); ++c) {
            const TableCell printed = parse_printed(ref.cells[r][c], t);
            // canonical rendering on both sides
            if (render_cell(printed, Notation::Unicode) != render_cell(t.cells[r][c], Notation::Unicode))
                diffs.push_back({r, c, printed, t.cells[r][c]});
        }
    return diffs;
}

std::string describe(const Table& t, const CellDiff& d)
{
    return cat("row ", t.row_labels[d.row], ", column ", t.col_labels[d.col], ": printed ",
               render_cell(d.printed, Notation::Unicode), ", computed ", render_cell(d.computed, Notation::Unicode));
}

Outcome criterion_tables()
{
    Outcome o;
    for (const std::string id : {"1", "2", "3", "4", "5", "jordan"}) {
        const auto t0 = Clock::now();
        const Table t = build_table(id);
        const std::string text = render(t, OutputFormat::Text);
        const double secs = seconds_since(t0);
        const auto diffs = diff_table(t, reference::printed_table(id), o);
        o.require(diffs.empty(), cat("table ", id, ": ", diffs.size(), " differing cells"));
        for (const auto& d : diffs)
            o.note(cat("  table ", id, " ", describe(t, d)));
        o.require(secs < 1.0, cat("table ", id, " built and rendered in ", fmt_seconds(secs)));
        (void)text;
    }
    return o;
}

bool has_central(const TableCell& cell)
{
    const auto* e = std::get_if<AlgebraElement>(&cell);
    return e && !e->coefficient(BasisKey::central()).is_zero();
}

AlgebraElement non_central(const TableCell& cell)
{
    return std::get<AlgebraElement>(cell).filter([](const BasisKey& k) { return !k.is_central(); });
}

Outcome criterion_virasoro_tables()
{
    Outcome o;
    for (const std::string id : {"6", "7"}) {
        const auto& ref = reference::printed_table(id);
        const auto t0 = Clock::now();
        const Table table_sign = build_table(id, CentralSign::Table);
        const Table eq_sign = build_table(id, CentralSign::Equation);
        render(table_sign, OutputFormat::Text);
        render(eq_sign, OutputFormat::Text);
        const double secs = seconds_since(t0);

        const auto d_table = diff_table(table_sign, ref, o);
        o.require(d_table.empty(), cat("table ", id, ", table sign: ", d_table.size(), " differing cells"));
        for (const auto& d : d_table)
            o.note(cat("  ", describe(table_sign, d)));

        const auto d_eq = diff_table(eq_sign, ref, o);
        std::size_t central_cells = 0;
        for (std::size_t r = 0; r < ref.cells.size(); ++r)
            for (std::size_t c = 0; c < ref.cells[r].size(); ++c)
                central_cells += has_central(parse_printed(ref.cells[r][c], eq_sign));
        bool only_signs = true;
        for (const auto& d : d_eq) {
            const auto& p = std::get<AlgebraElement>(d.printed);
            const auto& e = std::get<AlgebraElement>(d.computed);
            const auto& pc = p.coefficient(BasisKey::central());
            only_signs = only_signs && has_central(d.printed) && non_central(d.printed) == non_central(d.computed) &&
                         pc == -e.coefficient(BasisKey::central());
            o.note(cat("  equation sign, ", describe(eq_sign, d)));
        }
        o.require(only_signs && d_eq.size() == central_cells,
                  cat("table ", id, ", equation sign: ", d_eq.size(), " differing cells, all central-sign flips; ",
                      central_cells, " printed cells carry C"));
        o.require(secs < 1.0, cat("table ", id, " both signs in ", fmt_seconds(secs)));
    }
    return o;
}

Verdict verify(const std::string& suite, const std::function<void(VerifyParams&)>& set)
{
    VerifyParams p;
    set(p);
    return run_verify(suite, p);
}

Outcome criterion_jacobi()
{
    Outcome o;
    const auto t0 = Clock::now();
    for (const auto& alpha : {Rational(0), Rational(1)}) {
        const auto v = verify("jacobi", [&](VerifyParams& p) {
            p.alpha = alpha;
            p.range = 15;
        });
        o.require(v.checked == 29791 && v.violation_count == 0,
                  cat("Witt alpha=", alpha, ": ", v.checked, " triples, ", v.violation_count, " violations"));
    }
    const auto bad = verify("jacobi", [](VerifyParams& p) {
        p.alpha = Rational(1, 2);
        p.range = 15;
        p.falsify = true;
    });
    o.require(bad.violation_count > 0, cat("Witt alpha=1/2 (falsification): ", bad.violation_count,
                                           " violating triples, first ",
                                           bad.violations.empty() ? "none" : bad.violations.front().dump()));
    const double secs = seconds_since(t0);
    o.require(secs < 30.0, cat("total ", fmt_seconds(secs)));
    return o;
}

Outcome criterion_jordan_identity()
{
    Outcome o;
    const auto t0 = Clock::now();
    for (const auto& alpha : {Rational(0), Rational(1, 2), Rational(1)}) {
        const auto v = verify("jordan-identity", [&](VerifyParams& p) {
            p.alpha = alpha;
            p.range = 20;
        });
        o.require(v.checked == 41 * 41 && v.violation_count == 0,
                  cat("alpha=", alpha, ": ", v.checked, " pairs, ", v.violation_count, " violations"));
    }
    const double secs = seconds_since(t0);
    o.require(secs < 30.0, cat("total ", fmt_seconds(secs)));
    return o;
}

Outcome criterion_quasiaddition()
{
    Outcome o;
    for (const auto& alpha : {Rational(0), Rational(1, 2), Rational(1)})
        for (const std::string suite : {"quasiadd", "closure"}) {
            const auto v = verify(suite, [&](VerifyParams& p) {
                p.alpha = alpha;
                p.range = 12;
            });
            o.require(v.checked > 0 && v.violation_count == 0,
                      cat(suite, " alpha=", alpha, ": ", v.checked, " checks, ", v.violation_count, " violations"));
        }
    return o;
}

Outcome criterion_sum_rule()
{
    Outcome o;
    for (const auto& alpha : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(1)}) {
        const auto v = verify("sum-rule", [&](VerifyParams& p) {
            p.alpha = alpha;
            p.range = 50;
        });
        o.require(v.checked == 101 * 101 && v.violation_count == 0,
                  cat("alpha=", alpha, ": ", v.checked, " pairs, ", v.violation_count, " violations"));
    }
    return o;
}

Outcome criterion_chain_equivalence()
{
    Outcome o;
    for (const auto& alpha : {Rational(0), Rational(1, 2), Rational(1)}) {
        const auto v = verify("chain-equivalence", [&](VerifyParams& p) {
            p.alpha = alpha;
            p.range = 60;
        });
        o.require(v.checked == 121 * 121 && v.violation_count == 0,
                  cat("alpha=", alpha, ": ", v.checked, " Dirichlet integers, ", v.violation_count, " disagreements"));
    }
    return o;
}

Outcome criterion_gap_word()
{
    Outcome o;
    const auto v = verify("gap-word", [](VerifyParams& p) { p.gaps = 10000; });
    o.require(v.violation_count == 0, cat("suite verdict ", v.details.dump()));
    const auto a = v.details["A"].get<double>(), b = v.details["B"].get<double>();
    // decimal cross-check of the ratio
    const oracle::Dec gap = oracle::Dec(a) / oracle::Dec(b) - oracle::tau();
    o.require(a + b == 10000 && abs(gap) < oracle::Dec("0.01"),
              cat("#A/#B = ", a, "/", b, ", |ratio - tau| = ", oracle::Dec(abs(gap)).str(6)));
    return o;
}

Outcome criterion_non_unital()
{
    Outcome o;
    const JordanSpec spec{ChainSpec(1, 0)};
    const auto t0 = Clock::now();
    o.require(check_no_identity(spec, 12, 4), "no identity supported on |k| <= 12 acts on |n| <= 4");
    o.require(check_proper_ideal(spec, 12), "L_1 outside span{L_0 o L_n : |n| <= 12}");
    const double secs = seconds_since(t0);
    o.require(secs < 10.0, cat("total ", fmt_seconds(secs)));
    return o;
}

Outcome criterion_truncations()
{
    Outcome o;
    for (std::int64_t n = 4; n <= 6; ++n)
        for (const auto mode : {TruncationMode::ZeroProduct, TruncationMode::DropTerm}) {
            const TruncationSpec tspec{ChainSpec(1, 0), n, mode};
            const std::string tag = cat("N=", n, " ", to_string(mode));
            const auto report = check_truncated_axioms(tspec);
            o.require(report.commutative, cat(tag, ": commutative"));
            std::string witness;
            if (!report.jordan_witnesses.empty()) {
                const auto& w = report.jordan_witnesses.front();
                witness = cat(", e.g. (L_", w.n, ", L_", w.m, "): ", to_string(w.lhs), " vs ", to_string(w.rhs));
            }
            o.note(cat(tag, ": Jordan identity ", report.jordan_identity ? "holds" : "fails", " (",
                       report.jordan_witnesses.size(), " witness pairs", witness, ")"));

            const auto table = export_structure_constants(tspec);
            bool symmetric = true, rebuilt = true;
            const auto from_json = structure_constants_from_json(json::parse(to_json(table).dump()));
            const auto from_csv = structure_constants_from_csv(to_csv(table), tspec);
            for (std::int64_t j = -n; j <= n; ++j)
                for (std::int64_t k = -n; k <= n; ++k) {
                    for (std::int64_t i = -n; i <= n; ++i)
                        symmetric = symmetric && table.coefficient(i, j, k) == table.coefficient(i, k, j);
                    const auto want = truncated_product(tspec, j, k);
                    rebuilt = rebuilt && from_json.product(j, k) == want && from_csv.product(j, k) == want;
                }
            o.require(symmetric, cat(tag, ": exported constants symmetric"));
            o.require(rebuilt, cat(tag, ": JSON and CSV round trips rebuild every product"));
        }
    return o;
}

Outcome criterion_oracle()
{
    Outcome o;
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<long> coeff(-1000000000L, 1000000000L), den(1, 100000);
    int floor_bad = 0, compare_bad = 0;
    GoldenRational prev;
    oracle::Dec prev_dec = 0;
    for (int i = 0; i < 10000; ++i) {
        const long p = coeff(rng), q = coeff(rng), d = den(rng);
        const GoldenRational x{Integer(p), Integer(q), Integer(d)};
        const oracle::Dec xd = oracle::value(p, q, d);
        floor_bad += floor(x) != static_cast<long>(boost::multiprecision::floor(xd));
        const auto want = xd < prev_dec ? std::strong_ordering::less
                                        : (xd > prev_dec ? std::strong_ordering::greater : std::strong_ordering::equal);
        compare_bad += compare(x, prev) != want;
        prev = x;
        prev_dec = xd;
    }
    o.require(floor_bad == 0 && compare_bad == 0,
              cat("10000 samples against 100-digit decimals: ", floor_bad, " floor and ", compare_bad,
                  " compare disagreements"));
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 table reproduction (tables 1-5, Jordan)", criterion_tables},
        {"2 Virasoro tables under both central signs", criterion_virasoro_tables},
        {"3 Jacobi identity, Witt [-15,15]^3", criterion_jacobi},
        {"4 Jordan identity [-20,20]^2", criterion_jordan_identity},
        {"5 quasiaddition identities and closure [-12,12]", criterion_quasiaddition},
        {"6 sum rule [-50,50]^2", criterion_sum_rule},
        {"7 chain equivalence |a|,|b| <= 60", criterion_chain_equivalence},
        {"8 gap word factor and frequency", criterion_gap_word},
        {"9 non-unitality and proper ideal", criterion_non_unital},
        {"10 truncated Jordan algebras N=4..6", criterion_truncations},
        {"11 exact arithmetic vs decimal oracle", criterion_oracle},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.require(false, cat("exception: ", e.what()));
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << '\n';
        for (const auto& n : o.notes)
            std::cout << "      " << n << '\n';
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
