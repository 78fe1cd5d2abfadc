#include <doctest.h>

#include "fibalg/errors.hpp"
#include "fibalg/jordan.hpp"
#include "fibalg/serialize.hpp"
#include "oracle.hpp"

using namespace fibalg;

namespace {

GoldenRational g(long p, long q, long d = 1) { return GoldenRational(Integer(p), Integer(q), Integer(d)); }
const GoldenRational half = g(1, 0, 2);
const JordanSpec j10{ChainSpec(1, 0)};

AlgebraElement halves(std::int64_t p, std::int64_t q) { return half * (gen(p) + gen(q)); }

}  // namespace

TEST_CASE("product examples")
{
    CHECK(jordan_product(j10, 0, 1) == halves(2, -1));
    CHECK(jordan_product(j10, -2, -2) == gen(-2));
    CHECK(jordan_product(j10, -4, 2) == halves(12, -14));
    CHECK(jordan_product(j10, -4, -2) == halves(1, -7));
    CHECK(jordan_indices(j10, 0, 1) == std::pair<std::int64_t, std::int64_t>{-1, 2});

    CHECK(jordan_product_points(j10, g(1, 0), g(1, 1)) == half * (gen_point(g(0, -1)) + gen_point(g(2, 2))));
    CHECK(jordan_product_points(j10, g(2, 3), g(2, 3)) == gen_point(g(2, 3)));
    CHECK_THROWS_AS(jordan_product_points(j10, g(0, 1), g(1, 0)), NotInChain);
}

TEST_CASE("products agree with the oracle")
{
    struct A {
        long num, den, beta;
    };
    for (const A a : {A{1, 1, 0}, A{0, 1, 0}, A{1, 2, 0}, A{2, 5, 3}}) {
        const JordanSpec spec{ChainSpec(Rational(a.num, a.den), a.beta)};
        for (long n = -30; n <= 30; ++n)
            for (long m = -30; m <= 30; ++m) {
                const auto [p, q] = oracle::jordan(a.num, a.den, a.beta, n, m);
                CHECK(jordan_product(spec, n, m) == halves(p, q));
            }
    }
}

TEST_CASE("commutativity, idempotence and point/index agreement")
{
    for (const auto& alpha : {Rational(0), Rational(1, 2), Rational(1)}) {
        const JordanSpec spec{ChainSpec(alpha, 0)};
        for (long n = -25; n <= 25; ++n) {
            CHECK(jordan_product(spec, n, n) == gen(n));
            const auto x = point(spec.chain, n).value;
            for (long m = -25; m <= 25; ++m) {
                const auto nm = jordan_product(spec, n, m);
                CHECK(nm == jordan_product(spec, m, n));
                const auto y = point(spec.chain, m).value;
                const auto pts = jordan_product_points(spec, x, y);
                for (const auto& [key, coeff] : pts)
                    CHECK(membership(spec.chain, key.point()));
                CHECK(to_index_form(spec.chain, pts) == nm);
            }
        }
    }
}

TEST_CASE("sum rule")
{
    CHECK(check_sum_rule(j10, -50, 50).empty());
    CHECK(check_sum_rule(JordanSpec{ChainSpec(Rational(1, 2), 0)}, -50, 50).empty());
    const auto [p, q] = jordan_indices(j10, -4, -2);
    CHECK(p + q == -6);
}

TEST_CASE("Jordan identity on generators")
{
    for (const auto& alpha : {Rational(0), Rational(1, 2), Rational(1)})
        CHECK(check_jordan_identity(JordanSpec{ChainSpec(alpha, 0)}, -20, 20).empty());
    CHECK(check_jordan_identity(JordanSpec{ChainSpec(Rational(1, 3), -2)}, -10, 10).empty());
}

TEST_CASE("Jordan identity fails for a general element")
{
    // Basis pairs are all fine, but x = L_0 + L_1 breaks it for some L_m.
    const AlgebraElement x = gen(0) + gen(1);
    const auto xx = jordan_product(j10, x, x);
    int failures = 0;
    for (long m = -6; m <= 6; ++m) {
        const auto y = gen(m);
        const auto lhs = jordan_product(j10, jordan_product(j10, x, y), xx);
        const auto rhs = jordan_product(j10, x, jordan_product(j10, y, xx));
        failures += lhs != rhs;
    }
    CHECK(failures > 0);
}

TEST_CASE("monotone zero maps")
{
    const auto r = check_monotone_zero_maps(j10, -20, 20);
    CHECK(r.ok());
    CHECK(r.left_direction == -1);
    CHECK(r.right_direction == 1);
    CHECK(check_monotone_zero_maps(JordanSpec{ChainSpec(0, 0)}, -20, 20).ok());
    CHECK(check_monotone_zero_maps(j10, 3, 4).ok());
    CHECK_THROWS_AS(check_monotone_zero_maps(j10, 4, 4), std::invalid_argument);
}

TEST_CASE("no identity element")
{
    CHECK(check_no_identity(j10, 12, 4));
    CHECK(check_no_identity(JordanSpec{ChainSpec(0, 0)}, 12, 4));
    CHECK_THROWS_AS(check_no_identity(j10, 0, -1), std::invalid_argument);
    CHECK_THROWS_AS(check_no_identity(j10, 4, 4), std::invalid_argument);
}

TEST_CASE("proper ideal")
{
    CHECK(check_proper_ideal(j10, 12));
    CHECK(check_proper_ideal(j10, 4));
    const auto cert = ideal_membership(j10, jordan_product(j10, 0, 3), 12);
    REQUIRE(cert.in_span);
    AlgebraElement rebuilt;
    for (long n = -12; n <= 12; ++n)
        rebuilt += cert.coefficients[static_cast<std::size_t>(n + 12)] * jordan_product(j10, 0, n);
    CHECK(rebuilt == jordan_product(j10, 0, 3));
    CHECK_THROWS_AS(check_proper_ideal(j10, 1), std::invalid_argument);
}

TEST_CASE("truncated products")
{
    const TruncationSpec zp{ChainSpec(1, 0), 6, TruncationMode::ZeroProduct};
    const TruncationSpec dt{ChainSpec(1, 0), 6, TruncationMode::DropTerm};
    CHECK(truncated_product(zp, 0, 1) == halves(2, -1));
    CHECK(truncated_product(dt, 0, 1) == halves(2, -1));
    CHECK(truncated_product(zp, -4, 2).is_zero());
    CHECK(truncated_product(dt, -4, 2).is_zero());
    CHECK_THROWS_AS(truncated_product(zp, 7, 0), IndexOutsideWindow);
    CHECK_THROWS_AS(truncated_product(dt, 0, -7), IndexOutsideWindow);

    // Both modes against the untruncated product, one term in and one out.
    int mixed = 0;
    for (long n = -6; n <= 6; ++n)
        for (long m = -6; m <= 6; ++m) {
            const auto [p, q] = jordan_indices(j10, n, m);
            const bool pin = zp.in_window(p), qin = zp.in_window(q);
            const auto full = jordan_product(j10, n, m);
            CHECK(truncated_product(zp, n, m) == (pin && qin ? full : AlgebraElement()));
            const auto kept = full.filter([&](const BasisKey& k) { return zp.in_window(k.index()); });
            CHECK(truncated_product(dt, n, m) == kept);
            mixed += pin != qin;
        }
    CHECK(mixed > 0);
}

TEST_CASE("truncated axioms")
{
    for (std::int64_t n = 4; n <= 6; ++n) {
        const auto zp = check_truncated_axioms({ChainSpec(1, 0), n, TruncationMode::ZeroProduct});
        CHECK(zp.commutative);
        CHECK(zp.commutativity_witnesses.empty());
        CHECK(zp.jordan_identity == zp.jordan_witnesses.empty());
        const auto dt = check_truncated_axioms({ChainSpec(1, 0), n, TruncationMode::DropTerm});
        CHECK(dt.commutative);
        CHECK(dt.jordan_identity == dt.jordan_witnesses.empty());
        // Witnesses, when present, really fail.
        const TruncationSpec tspec{ChainSpec(1, 0), n, TruncationMode::DropTerm};
        for (const auto& w : dt.jordan_witnesses) {
            const auto x = gen(w.n), y = gen(w.m);
            const auto xx = truncated_product(tspec, x, x);
            CHECK(truncated_product(tspec, truncated_product(tspec, x, y), xx) == w.lhs);
            CHECK(truncated_product(tspec, x, truncated_product(tspec, y, xx)) == w.rhs);
            CHECK(w.lhs != w.rhs);
        }
    }
}

TEST_CASE("structure constant export")
{
    const TruncationSpec tspec{ChainSpec(1, 0), 6, TruncationMode::ZeroProduct};
    const auto table = export_structure_constants(tspec);
    CHECK(table.basis.size() == 13);
    CHECK(table.coefficient(2, 0, 1) == half);
    CHECK(table.coefficient(-1, 0, 1) == half);
    CHECK(table.coefficient(-1, 1, 0) == half);
    for (long n = -6; n <= 6; ++n)
        CHECK(table.coefficient(n, n, n) == 1);
    for (const auto& c : table.constants) {
        CHECK(c.j <= c.k);
        CHECK((c.value == half || c.value == 1));
    }
    for (long j = -6; j <= 6; ++j)
        for (long k = -6; k <= 6; ++k) {
            CHECK(table.product(j, k) == truncated_product(tspec, j, k));
            for (long i = -6; i <= 6; ++i)
                CHECK(table.coefficient(i, j, k) == table.coefficient(i, k, j));
        }

    const auto back = structure_constants_from_json(json::parse(to_json(table).dump()));
    CHECK(back.constants == table.constants);
    CHECK(back.basis == table.basis);
    CHECK(back.N == 6);
    CHECK(back.chain.alpha() == table.chain.alpha());
    CHECK(back.chain.beta() == table.chain.beta());
    CHECK(back.mode == table.mode);
    const auto csv = to_csv(table);
    CHECK(csv.rfind("i,j,k,p,q,d\n", 0) == 0);
    CHECK(structure_constants_from_csv(csv, tspec).constants == table.constants);

    const auto tiny = export_structure_constants({ChainSpec(1, 0), 0, TruncationMode::DropTerm});
    REQUIRE(tiny.constants.size() == 1);
    CHECK(tiny.constants[0] == StructureConstant{0, 0, 0, GoldenRational(1)});

    const auto j = to_json(table);
    CHECK(j["algebra"] == "jordan");
    CHECK(j["mode"] == "zero-product");
    CHECK(j["constants"][0].contains("value"));
}
