#include "fibalg/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fibalg/chain.hpp"
#include "fibalg/errors.hpp"
#include "fibalg/jordan.hpp"

namespace fibalg {

namespace {

using ojson = nlohmann::ordered_json;

std::string index_label(std::int64_t n) { return "L_{" + std::to_string(n) + "}"; }

std::size_t display_width(std::string_view s)
{
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string replace_all(std::string s, std::string_view from, std::string_view to)
{
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
        s.replace(pos, from.size(), to);
    return s;
}

std::string ascii(std::string s)
{
    s = replace_all(std::move(s), "τ", "t");
    s = replace_all(std::move(s), "⊢", "|-");
    return replace_all(std::move(s), "∘", "o");
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    return "\"" + replace_all(s, "\"", "\"\"") + "\"";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n') {
            if (any || !field.empty()) {
                row.push_back(std::move(field));
                rows.push_back(std::move(row));
            }
            row.clear();
            field.clear();
            any = false;
        } else if (c != '\r') {
            field += c;
            any = true;
        }
    }
    if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

TableCell parse_cell(const std::string& text, const TableCell& like, KeyKind kind)
{
    if (std::holds_alternative<GoldenRational>(like))
        return parse_golden(text);
    return parse_element(text, kind);
}

Table chain_points_table()
{
    Table t;
    t.id = "1";
    t.title = "Fibonacci chain points F_{α,β}(n)";
    t.corner = "n";
    for (std::int64_t n = -4; n <= 4; ++n)
        t.col_labels.push_back(std::to_string(n));
    for (const auto& [alpha, label] : {std::pair{Rational(1), "F_{1,0}(n)"}, std::pair{Rational(1, 2), "F_{1/2,0}(n)"},
                                       std::pair{Rational(0), "F_{0,0}(n)"}}) {
        const ChainSpec spec(alpha, 0);
        t.row_labels.emplace_back(label);
        auto& row = t.cells.emplace_back();
        for (const auto& p : range(spec, -4, 4))
            row.emplace_back(p.value);
    }
    return t;
}

Table quasiaddition_table()
{
    Table t;
    t.id = "2";
    t.title = "Quasiaddition x ⊢ y on F_{1,0}";
    t.corner = "x⊢y";
    const auto pts = range(ChainSpec(1, 0), -3, 3);
    for (const auto& p : pts) {
        t.col_labels.push_back(to_string(p.value));
        t.row_labels.push_back(to_string(p.value));
    }
    for (const auto& x : pts) {
        auto& row = t.cells.emplace_back();
        for (const auto& y : pts)
            row.emplace_back(qadd(x.value, y.value));
    }
    return t;
}

Table qclie_table()
{
    Table t;
    t.id = "3";
    t.title = "Quasicrystal Lie algebra brackets [L_x, L_y] on F_{1,0} ∪ {0}";
    t.corner = "[L_x,L_y]";
    t.key_kind = KeyKind::Point;
    const auto rows = defect_chain_points(GoldenRational(-9), GoldenRational(7));
    const std::vector<GoldenRational> cols(std::find(rows.begin(), rows.end(), GoldenRational(0)), rows.end());
    const auto spec = LieAlgebraSpec::qclie();
    for (const auto& y : cols)
        t.col_labels.push_back(to_string(BasisKey::point(y)));
    for (const auto& x : rows) {
        t.row_labels.push_back(to_string(BasisKey::point(x)));
        auto& row = t.cells.emplace_back();
        for (const auto& y : cols)
            row.emplace_back(qclie_bracket(spec, x, y));
    }
    return t;
}

Table lie_index_table(std::string id, const LieAlgebraSpec& spec, std::string title)
{
    Table t;
    t.id = std::move(id);
    t.title = std::move(title);
    t.corner = "[L_m,L_n]";
    for (std::int64_t n = 0; n <= 7; ++n)
        t.col_labels.push_back(index_label(n));
    for (std::int64_t m = -4; m <= 4; ++m) {
        t.row_labels.push_back(index_label(m));
        auto& row = t.cells.emplace_back();
        for (std::int64_t n = 0; n <= 7; ++n)
            row.emplace_back(bracket(spec, BasisKey::index(m), BasisKey::index(n)));
    }
    return t;
}

Table jordan_table()
{
    Table t;
    t.id = "jordan";
    t.title = "Aperiodic Jordan algebra products L_a ∘ L_b on F_{1,0}";
    t.corner = "L_a∘L_b";
    const JordanSpec spec{ChainSpec(1, 0)};
    for (std::int64_t b = -2; b <= 2; ++b)
        t.col_labels.push_back(index_label(b));
    for (std::int64_t a = -4; a <= 4; ++a) {
        t.row_labels.push_back(index_label(a));
        auto& row = t.cells.emplace_back();
        for (std::int64_t b = -2; b <= 2; ++b)
            row.emplace_back(jordan_product(spec, a, b));
    }
    return t;
}

std::string sign_label(CentralSign sign) { return sign == CentralSign::Table ? "table" : "equation"; }

}  // namespace

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "text")
        return OutputFormat::Text;
    if (text == "csv")
        return OutputFormat::Csv;
    if (text == "json")
        return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected text, csv or json)");
}

std::string canonical_table_id(std::string_view id)
{
    if (id == "jordan" || id == "8" || id == "7-jordan")
        return "jordan";
    if (id.size() == 1 && id[0] >= '1' && id[0] <= '7')
        return std::string(id);
    throw std::invalid_argument("unknown table '" + std::string(id) + "' (expected 1-7 or jordan)");
}

std::vector<std::string> table_ids() { return {"1", "2", "3", "4", "5", "6", "7", "jordan"}; }

Table build_table(std::string_view id, CentralSign central_sign)
{
    const std::string key = canonical_table_id(id);
    if (key == "1")
        return chain_points_table();
    if (key == "2")
        return quasiaddition_table();
    if (key == "3")
        return qclie_table();
    if (key == "4")
        return lie_index_table("4", LieAlgebraSpec::witt(ChainSpec(0, 0)), "Aperiodic Witt algebra on F_{0,0}");
    if (key == "5")
        return lie_index_table("5", LieAlgebraSpec::witt(ChainSpec(1, 0)), "Aperiodic Witt algebra on F_{1,0}");
    if (key == "6")
        return lie_index_table("6", LieAlgebraSpec::virasoro(ChainSpec(0, 0), central_sign),
                               "Aperiodic Virasoro algebra on F_{0,0} (central sign: " + sign_label(central_sign) + ")");
    if (key == "7")
        return lie_index_table("7", LieAlgebraSpec::virasoro(ChainSpec(1, 0), central_sign),
                               "Aperiodic Virasoro algebra on F_{1,0} (central sign: " + sign_label(central_sign) + ")");
    return jordan_table();
}

std::string render_cell(const TableCell& cell, Notation notation)
{
    return std::visit([notation](const auto& v) { return to_string(v, notation); }, cell);
}

std::string render(const Table& t, OutputFormat format)
{
    std::ostringstream os;
    if (format == OutputFormat::Text) {
        std::vector<std::vector<std::string>> grid;
        grid.push_back({t.corner});
        grid.back().insert(grid.back().end(), t.col_labels.begin(), t.col_labels.end());
        for (std::size_t r = 0; r < t.cells.size(); ++r) {
            auto& line = grid.emplace_back();
            line.push_back(t.row_labels[r]);
            for (const auto& c : t.cells[r])
                line.push_back(render_cell(c, Notation::Unicode));
        }
        std::vector<std::size_t> width(grid.front().size(), 0);
        for (const auto& line : grid)
            for (std::size_t c = 0; c < line.size(); ++c)
                width[c] = std::max(width[c], display_width(line[c]));
        os << "Table " << t.id << ": " << t.title << '\n';
        for (std::size_t r = 0; r < grid.size(); ++r) {
            std::string text;
            for (std::size_t c = 0; c < grid[r].size(); ++c) {
                if (c > 0)
                    text += c == 1 ? " | " : "  ";
                text += grid[r][c] + std::string(width[c] - display_width(grid[r][c]), ' ');
            }
            text.erase(text.find_last_not_of(' ') + 1);
            os << text << '\n';
            if (r == 0) {
                std::string rule;
                for (std::size_t c = 0; c < width.size(); ++c)
                    rule += (c == 0 ? "" : c == 1 ? "-+-" : "--") + std::string(width[c], '-');
                os << rule << '\n';
            }
        }
        return os.str();
    }
    if (format == OutputFormat::Csv) {
        os << csv_field(ascii(t.corner));
        for (const auto& c : t.col_labels)
            os << ',' << csv_field(ascii(c));
        os << '\n';
        for (std::size_t r = 0; r < t.cells.size(); ++r) {
            os << csv_field(ascii(t.row_labels[r]));
            for (const auto& c : t.cells[r])
                os << ',' << csv_field(render_cell(c, Notation::Ascii));
            os << '\n';
        }
        return os.str();
    }
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < t.cells.size(); ++r) {
        ojson cells = ojson::array();
        for (const auto& c : t.cells[r])
            cells.push_back(render_cell(c, Notation::Ascii));
        rows.push_back(ojson{{"label", ascii(t.row_labels[r])}, {"cells", std::move(cells)}});
    }
    ojson cols = ojson::array();
    for (const auto& c : t.col_labels)
        cols.push_back(ascii(c));
    const ojson doc{{"table", t.id},
                    {"title", ascii(t.title)},
                    {"corner", ascii(t.corner)},
                    {"columns", std::move(cols)},
                    {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

std::vector<std::vector<TableCell>> parse_rendered_cells(std::string_view text, OutputFormat format, const Table& shape)
{
    std::vector<std::vector<std::string>> raw;
    if (format == OutputFormat::Csv) {
        auto rows = parse_csv(text);
        if (rows.empty())
            throw std::invalid_argument("empty CSV table");
        for (std::size_t r = 1; r < rows.size(); ++r)
            raw.emplace_back(rows[r].begin() + 1, rows[r].end());
    } else if (format == OutputFormat::Json) {
        const auto doc = ojson::parse(text);
        for (const auto& row : doc.at("rows"))
            raw.push_back(row.at("cells").get<std::vector<std::string>>());
    } else {
        throw std::invalid_argument("only csv and json renderings can be parsed back");
    }
    if (raw.size() != shape.cells.size())
        throw std::invalid_argument("row count differs from the table shape");
    std::vector<std::vector<TableCell>> out;
    for (std::size_t r = 0; r < raw.size(); ++r) {
        if (raw[r].size() != shape.cells[r].size())
            throw std::invalid_argument("column count differs from the table shape");
        auto& row = out.emplace_back();
        for (std::size_t c = 0; c < raw[r].size(); ++c)
            row.push_back(parse_cell(raw[r][c], shape.cells[r][c], shape.key_kind));
    }
    return out;
}

std::string run_table(std::string_view id, OutputFormat format, CentralSign central_sign)
{
    return render(build_table(id, central_sign), format);
}

}  // namespace fibalg
