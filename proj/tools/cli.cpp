#include "cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fibalg/chain.hpp"
#include "fibalg/errors.hpp"
#include "fibalg/jordan.hpp"
#include "fibalg/lie.hpp"
#include "fibalg/serialize.hpp"
#include "fibalg/tables.hpp"
#include "fibalg/verify.hpp"

namespace fibalg::cli {

namespace {

constexpr int kUsage = 2;
constexpr int kUnexpected = 1;

struct Options {
    std::string alpha = "1";
    std::int64_t beta = 0;
    std::string format = "text";
    std::string central_sign = "table";
};

CentralSign parse_sign(const std::string& s)
{
    if (s == "table")
        return CentralSign::Table;
    if (s == "equation")
        return CentralSign::Equation;
    throw std::invalid_argument("unknown central sign '" + s + "' (expected table or equation)");
}

std::int64_t parse_int(const std::string& s)
{
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

std::string ascii(const GoldenRational& x) { return to_string(x, Notation::Ascii); }

void add_chain_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--alpha", o.alpha, "chain phase α, an exact rational such as 1/2");
    cmd->add_option("--beta", o.beta, "integer shift β");
}

void add_format_flag(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
}

int cmd_chain(const Options& o, std::int64_t from, std::int64_t to, std::ostream& out)
{
    const ChainSpec spec(parse_rational(o.alpha), o.beta);
    const auto pts = range(spec, from, to);
    switch (parse_output_format(o.format)) {
    case OutputFormat::Text: {
        std::size_t w = 1;
        for (const auto& p : pts)
            w = std::max(w, std::to_string(p.index).size());
        out << spec.label() << '\n';
        for (const auto& p : pts)
            out << std::setw(static_cast<int>(w)) << p.index << "  " << to_string(p.value) << '\n';
        break;
    }
    case OutputFormat::Csv:
        out << "n,value,p,q\n";
        for (const auto& p : pts)
            out << p.index << ',' << ascii(p.value) << ',' << p.value.p() << ',' << p.value.q() << '\n';
        break;
    case OutputFormat::Json: {
        json arr = json::array();
        for (const auto& p : pts)
            arr.push_back(json{{"n", p.index}, {"value", ascii(p.value)}});
        out << json{{"chain", spec.label()}, {"points", std::move(arr)}}.dump(2) << '\n';
        break;
    }
    }
    return 0;
}

void emit_element(const AlgebraElement& e, const std::string& format, std::ostream& out)
{
    if (format == "json")
        out << json{{"value", to_string(e, Notation::Ascii)}, {"terms", to_json(e)}}.dump(2) << '\n';
    else
        out << to_string(e, format == "csv" ? Notation::Ascii : Notation::Unicode) << '\n';
}

int cmd_bracket(const Options& o, const std::string& algebra, const std::string& a, const std::string& b,
                bool falsify, std::ostream& out)
{
    const ChainSpec chain(parse_rational(o.alpha), o.beta);
    AlgebraElement result;
    if (algebra == "qclie") {
        const auto spec = LieAlgebraSpec::qclie(Window::closed(0, 1), falsify);
        result = qclie_bracket(spec, parse_golden(a), parse_golden(b));
    } else {
        const auto spec = algebra == "witt" ? LieAlgebraSpec::witt(chain, falsify)
                                            : LieAlgebraSpec::virasoro(chain, parse_sign(o.central_sign), falsify);
        result = bracket(spec, BasisKey::index(parse_int(a)), BasisKey::index(parse_int(b)));
    }
    emit_element(result, o.format, out);
    return 0;
}

int cmd_jordan(const Options& o, const std::string& a, const std::string& b, bool points, std::ostream& out)
{
    const JordanSpec spec{ChainSpec(parse_rational(o.alpha), o.beta)};
    const AlgebraElement result = points ? jordan_product_points(spec, parse_golden(a), parse_golden(b))
                                         : jordan_product(spec, parse_int(a), parse_int(b));
    emit_element(result, o.format, out);
    return 0;
}

int cmd_qadd(const Options& o, const std::string& a, const std::string& b, std::ostream& out)
{
    const GoldenRational r = qadd(parse_golden(a), parse_golden(b));
    if (o.format == "json")
        out << json{{"x", ascii(parse_golden(a))}, {"y", ascii(parse_golden(b))}, {"value", ascii(r)},
                    {"exact", to_json(r)}}
                   .dump(2)
            << '\n';
    else
        out << to_string(r, o.format == "csv" ? Notation::Ascii : Notation::Unicode) << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fibonacci-chain quasicrystals and their aperiodic Lie, Witt/Virasoro and Jordan algebras", "fibalg"};
    app.require_subcommand(1);
    Options o;

    auto* chain = app.add_subcommand("chain", "list chain points F_{α,β}(n)");
    std::int64_t from = -4, to = 4;
    std::optional<std::int64_t> chain_range;
    add_chain_flags(chain, o);
    add_format_flag(chain, o);
    chain->add_option("--from", from, "first index");
    chain->add_option("--to", to, "last index");
    chain->add_option("--range", chain_range, "shorthand for --from -R --to R");

    auto* qadd_cmd = app.add_subcommand("qadd", "quasiaddition x ⊢ y = τ²x − τy");
    std::string qa, qb;
    add_format_flag(qadd_cmd, o);
    qadd_cmd->add_option("x", qa, "a+bτ (t accepted)")->required();
    qadd_cmd->add_option("y", qb, "a+bτ (t accepted)")->required();

    auto* br = app.add_subcommand("bracket", "Lie bracket of two generators");
    std::string algebra = "witt", ba, bb;
    bool falsify = false;
    add_chain_flags(br, o);
    add_format_flag(br, o);
    br->add_option("--algebra", algebra, "qclie, witt or virasoro")
        ->check(CLI::IsMember({"qclie", "witt", "virasoro"}));
    br->add_option("--central-sign", o.central_sign, "table or equation")
        ->check(CLI::IsMember({"table", "equation"}));
    br->add_flag("--falsify", falsify, "allow specs that fail the validity predicate");
    br->add_option("N", ba, "index (or point for qclie)")->required();
    br->add_option("M", bb, "index (or point for qclie)")->required();

    auto* jo = app.add_subcommand("jordan", "Jordan product L_n ∘ L_m");
    std::string ja, jb;
    bool points = false;
    add_chain_flags(jo, o);
    add_format_flag(jo, o);
    jo->add_flag("--points", points, "read N and M as chain points instead of indices");
    jo->add_option("N", ja)->required();
    jo->add_option("M", jb)->required();

    auto* table = app.add_subcommand("table", "reproduce a table (1-7 or jordan)");
    std::string table_id;
    add_format_flag(table, o);
    table->add_option("--central-sign", o.central_sign, "table or equation")
        ->check(CLI::IsMember({"table", "equation"}));
    table->add_option("id", table_id)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON verdict");
    std::string suite;
    VerifyParams vp;
    std::string c_text = "1/2", wlo = "0", whi = "1", mode = "zero-product";
    bool timing = false;
    add_chain_flags(verify, o);
    verify->add_option("suite", suite)->required();
    verify->add_option("--range", vp.range, "half-width R of the index range [-R, R]");
    verify->add_flag("--falsify", vp.falsify, "run on specs that fail the validity predicate");
    verify->add_option("--algebra", vp.algebra, "witt, virasoro or qclie")
        ->check(CLI::IsMember({"qclie", "witt", "virasoro"}));
    verify->add_option("--central-sign", o.central_sign)->check(CLI::IsMember({"table", "equation"}));
    verify->add_option("--window-lo", wlo, "qclie window lower end");
    verify->add_option("--window-hi", whi, "qclie window upper end");
    verify->add_option("--N", vp.N, "truncation or span size");
    verify->add_option("--M", vp.M, "constrained generators for no-identity");
    verify->add_option("--mode", mode)->check(CLI::IsMember({"zero-product", "drop-term"}));
    verify->add_option("--c", c_text, "lower end of the sub-window [c, 1]");
    verify->add_option("--gaps", vp.gaps, "gap count for the frequency check");
    verify->add_flag("--timing", timing, "include elapsed seconds in the verdict");

    auto* exp = app.add_subcommand("export-sc", "export structure constants of a truncated Jordan algebra");
    std::int64_t big_n = 6;
    std::string exp_format = "json", out_path;
    add_chain_flags(exp, o);
    exp->add_option("--N", big_n, "truncation L_{-N} … L_N")->check(CLI::NonNegativeNumber);
    exp->add_option("--mode", mode)->check(CLI::IsMember({"zero-product", "drop-term"}));
    exp->add_option("--format", exp_format)->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("--out", out_path, "output file (stdout when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*chain) {
            if (chain_range) {
                from = -*chain_range;
                to = *chain_range;
            }
            return cmd_chain(o, from, to, out);
        }
        if (*qadd_cmd)
            return cmd_qadd(o, qa, qb, out);
        if (*br)
            return cmd_bracket(o, algebra, ba, bb, falsify, out);
        if (*jo)
            return cmd_jordan(o, ja, jb, points, out);
        if (*table) {
            out << run_table(table_id, parse_output_format(o.format), parse_sign(o.central_sign));
            return 0;
        }
        if (*verify) {
            vp.alpha = parse_rational(o.alpha);
            vp.beta = o.beta;
            vp.central_sign = parse_sign(o.central_sign);
            vp.window_lo = parse_rational(wlo);
            vp.window_hi = parse_rational(whi);
            vp.mode = parse_truncation_mode(mode);
            vp.c = parse_rational(c_text);
            const Verdict v = run_verify(suite, vp);
            out << to_json(v, timing).dump(2) << '\n';
            return v.expected_outcome ? 0 : kUnexpected;
        }
        if (*exp) {
            const TruncationSpec tspec{ChainSpec(parse_rational(o.alpha), o.beta), big_n, parse_truncation_mode(mode)};
            const std::string text = run_export(tspec, parse_output_format(exp_format));
            if (out_path.empty()) {
                out << text;
                return 0;
            }
            std::ofstream file(out_path, std::ios::binary);
            if (!file || !(file << text) || !file.flush()) {
                err << "error: cannot write '" << out_path << "': " << std::strerror(errno) << '\n';
                return kUnexpected;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace fibalg::cli
