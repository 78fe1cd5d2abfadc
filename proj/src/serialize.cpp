#include "fibalg/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fibalg {

namespace {

json integer_to_json(const Integer& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Integer integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string())
        return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

std::vector<std::string> split(std::string_view line, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::int64_t to_int64(const std::string& s)
{
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

void sort_constants(std::vector<StructureConstant>& cs)
{
    std::sort(cs.begin(), cs.end(), [](const StructureConstant& a, const StructureConstant& b) {
        return std::tie(a.j, a.k, a.i) < std::tie(b.j, b.k, b.i);
    });
}

}  // namespace

json to_json(const GoldenRational& x)
{
    return json{{"p", integer_to_json(x.p())}, {"q", integer_to_json(x.q())}, {"d", integer_to_json(x.d())}};
}

GoldenRational golden_from_json(const json& j)
{
    return GoldenRational(integer_from_json(j.at("p")), integer_from_json(j.at("q")),
                          j.contains("d") ? integer_from_json(j.at("d")) : Integer(1));
}

json to_json(const BasisKey& key)
{
    if (key.is_central())
        return json{{"central", true}};
    if (key.is_index())
        return json{{"n", key.index()}};
    return json{{"point", to_string(key.point(), Notation::Ascii)}};
}

BasisKey key_from_json(const json& j)
{
    if (j.contains("n"))
        return BasisKey::index(j.at("n").get<std::int64_t>());
    if (j.contains("point"))
        return BasisKey::point(parse_golden(j.at("point").get<std::string>()));
    if (j.value("central", false))
        return BasisKey::central();
    throw std::invalid_argument("unrecognised basis key " + j.dump());
}

json to_json(const AlgebraElement& e)
{
    json out = json::array();
    for (const auto& [k, c] : e)
        out.push_back(json{{"key", to_json(k)}, {"coeff", to_json(c)}});
    return out;
}

AlgebraElement element_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("an element is a JSON array of terms");
    AlgebraElement out;
    for (const auto& term : j)
        out.add_term(key_from_json(term.at("key")), golden_from_json(term.at("coeff")));
    return out;
}

json to_json(const StructureConstantTable& table)
{
    json constants = json::array();
    for (const auto& c : table.constants)
        constants.push_back(json{{"i", c.i}, {"j", c.j}, {"k", c.k}, {"value", to_json(c.value)}});
    return json{{"algebra", table.algebra},
                {"alpha", table.chain.alpha().get_str()},
                {"beta", table.chain.beta()},
                {"N", table.N},
                {"mode", to_string(table.mode)},
                {"basis", table.basis},
                {"constants", std::move(constants)}};
}

StructureConstantTable structure_constants_from_json(const json& j)
{
    StructureConstantTable t;
    t.algebra = j.at("algebra").get<std::string>();
    t.chain = ChainSpec(parse_rational(j.at("alpha").get<std::string>()), j.at("beta").get<std::int64_t>());
    t.N = j.at("N").get<std::int64_t>();
    t.mode = parse_truncation_mode(j.at("mode").get<std::string>());
    t.basis = j.at("basis").get<std::vector<std::int64_t>>();
    for (const auto& c : j.at("constants"))
        t.constants.push_back({c.at("i").get<std::int64_t>(), c.at("j").get<std::int64_t>(),
                               c.at("k").get<std::int64_t>(), golden_from_json(c.at("value"))});
    sort_constants(t.constants);
    return t;
}

std::string to_csv(const StructureConstantTable& table)
{
    std::ostringstream os;
    os << "i,j,k,p,q,d\n";
    for (const auto& c : table.constants)
        os << c.i << ',' << c.j << ',' << c.k << ',' << c.value.p() << ',' << c.value.q() << ',' << c.value.d()
           << '\n';
    return os.str();
}

StructureConstantTable structure_constants_from_csv(std::string_view csv, const TruncationSpec& tspec)
{
    StructureConstantTable t;
    t.chain = tspec.chain;
    t.N = tspec.N;
    t.mode = tspec.mode;
    for (std::int64_t n = -tspec.N; n <= tspec.N; ++n)
        t.basis.push_back(n);

    bool header = true;
    std::size_t start = 0;
    while (start < csv.size()) {
        auto end = csv.find('\n', start);
        if (end == std::string_view::npos)
            end = csv.size();
        std::string_view line = csv.substr(start, end - start);
        start = end + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (header) {
            if (line != "i,j,k,p,q,d")
                throw std::invalid_argument("unexpected CSV header '" + std::string(line) + "'");
            header = false;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 6)
            throw std::invalid_argument("malformed CSV row '" + std::string(line) + "'");
        t.constants.push_back(
            {to_int64(f[0]), to_int64(f[1]), to_int64(f[2]), GoldenRational(Integer(f[3]), Integer(f[4]), Integer(f[5]))});
    }
    sort_constants(t.constants);
    return t;
}

}  // namespace fibalg
