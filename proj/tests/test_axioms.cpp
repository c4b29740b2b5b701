#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "msm/axioms.hpp"
#include "msm/search.hpp"
#include "oracle.hpp"

using namespace msm;

namespace {

std::vector<Point> pts(const MsSpace& s, std::initializer_list<const char*> ids)
{
    std::vector<Point> out;
    for (const char* id : ids) out.push_back(s.point(id));
    return out;
}

bool contains(const ValidationReport& r, const Violation& v)
{
    return std::find(r.violations.begin(), r.violations.end(), v) != r.violations.end();
}

MsSpace ms2_violating()
{
    // m(a,a,a)=m(b,b,b)=3, m(a,a,b)=m(a,b,b)=1
    return oracle::make_space({"a", "b"}, [](std::uint32_t x, std::uint32_t y, std::uint32_t z) -> Value {
        return (x == y && y == z) ? 3 : 1;
    });
}

}  // namespace

TEST_CASE("example1 satisfies every M_s axiom over all ordered tuples")
{
    MsSpace s = builtin_example1();
    ValidationReport r = validate_ms(s);
    CHECK(*r.is_ms);
    CHECK_FALSE(r.is_partial_s.has_value());
    CHECK(r.violations.empty());
    CHECK(r.checks_performed == 9 + 27 + 9 + 81);
    CHECK(r.checks.at(Axiom::MS1) == 9);
    CHECK(r.checks.at(Axiom::MS2) == 27);
    CHECK(r.checks.at(Axiom::MS3) == 9);
    CHECK(r.checks.at(Axiom::MS4) == 81);
    CHECK(check_ms_axiom1(s).empty());
    CHECK(check_ms_axiom2(s).empty());
    CHECK(check_ms_axiom3(s).empty());
    CHECK(check_ms_axiom4(s).empty());
}

TEST_CASE("example1 is not partial S: self-distance of 1 exceeds m(1,2,3)")
{
    MsSpace s = builtin_example1();
    ValidationReport r = check_partial_s(s);
    CHECK_FALSE(*r.is_partial_s);
    Violation expected{Axiom::PS_iii, pts(s, {"1", "2", "3"}), Value(8), Value(6), IffDirection::none};
    CHECK(contains(r, expected));
    // 13 ordered triples with m(x,x,x) > m(x,y,z), nothing else fails.
    CHECK(r.violations_found.at(Axiom::PS_iii) == 13);
    CHECK(r.violations.size() == 13);
    CHECK(r.violations_found.at(Axiom::PS_i) == 0);
    CHECK(r.violations_found.at(Axiom::PS_ii) == 0);
    CHECK(r.violations_found.at(Axiom::PS_iv) == 0);
    for (const Violation& v : r.violations) CHECK(v.axiom == Axiom::PS_iii);
}

TEST_CASE("classify merges both verdicts")
{
    ValidationReport r = classify(builtin_example1());
    CHECK(*r.is_ms);
    CHECK_FALSE(*r.is_partial_s);
    CHECK(r.checks_performed == 126 + 126);

    ValidationReport d = classify(discrete_space(3));
    CHECK(*d.is_ms);
    CHECK(*d.is_partial_s);
    CHECK(d.violations.empty());

    ValidationReport one = classify(discrete_space(1));
    CHECK(*one.is_ms);
    CHECK(*one.is_partial_s);
}

TEST_CASE("axiom 2 violation is reported with min_self and the value")
{
    MsSpace s = ms2_violating();
    ValidationReport r = validate_ms(s);
    CHECK_FALSE(*r.is_ms);
    auto v2 = check_ms_axiom2(s);
    REQUIRE_FALSE(v2.empty());
    CHECK(v2.front() == Violation{Axiom::MS2, pts(s, {"a", "a", "b"}), Value(3), Value(1), IffDirection::none});
    CHECK(v2.size() == 6);  // every ordered arrangement of {a,a,b} and {a,b,b}
}

TEST_CASE("axiom 1: both directions")
{
    // Distinct points with equal self-distances and m(a,a,b) equal to them.
    MsSpace flat = oracle::make_space({"a", "b"}, [](std::uint32_t, std::uint32_t, std::uint32_t) { return Value(2); });
    auto v = check_ms_axiom1(flat);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == Violation{Axiom::MS1, pts(flat, {"a", "b"}), Value(2), Value(2), IffDirection::only_if});
    CHECK(v[1].witness == pts(flat, {"b", "a"}));

    // With x = y the three compared values coincide, so "if" never fails.
    CHECK(check_ms_axiom1(discrete_space(4)).empty());
}

TEST_CASE("axiom 3 needs a non-symmetric table")
{
    MsSpace::Builder b(false);
    b.add_point("a");
    b.add_point("b");
    for (std::uint32_t x = 0; x < 2; ++x)
        for (std::uint32_t y = 0; y < 2; ++y)
            for (std::uint32_t z = 0; z < 2; ++z) {
                Value v = (x == y && y == z) ? 0 : 1;
                if (x == 0 && y == 0 && z == 1) v = 2;
                b.set(Point{x}, Point{y}, Point{z}, v);
            }
    MsSpace s = b.build();
    auto v = check_ms_axiom3(s);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == Violation{Axiom::MS3, pts(s, {"a", "b"}), Value(2), Value(1), IffDirection::none});
    CHECK(v[1] == Violation{Axiom::MS3, pts(s, {"b", "a"}), Value(1), Value(2), IffDirection::none});
    CHECK_FALSE(*check_partial_s(s).is_partial_s);
}

TEST_CASE("axiom 4 violation")
{
    // a,b,c with zero self-distances, small pair values and a large triple.
    MsSpace s = oracle::make_space({"a", "b", "c"}, [](std::uint32_t x, std::uint32_t y, std::uint32_t z) -> Value {
        if (x == y && y == z) return 0;
        if (x != y && y != z) return 10;
        return 1;
    });
    auto v = check_ms_axiom4(s);
    REQUIRE_FALSE(v.empty());
    // First in lexicographic order: (a,b,c) with t=a: 10 > 0 + 1 + 1.
    CHECK(v.front() == Violation{Axiom::MS4, pts(s, {"a", "b", "c", "a"}), Value(10), Value(2), IffDirection::none});
    for (const Violation& w : v) CHECK(replays(s, w));
}

TEST_CASE("strengthened identity is reported but never decides is_ms")
{
    // Self-distances 0, pair values 1, and m(a,b,c) = 0.
    MsSpace s = oracle::make_space({"a", "b", "c"}, [](std::uint32_t x, std::uint32_t y, std::uint32_t z) -> Value {
        if (x == y || y == z) return (x == y && y == z) ? 0 : 1;
        return 0;
    });
    ValidationReport plain = validate_ms(s);
    ValidationReport strong = validate_ms(s, {.strengthened_identity = true});
    CHECK(*plain.is_ms);
    CHECK(*strong.is_ms);
    CHECK(plain.checks_performed == strong.checks_performed);
    CHECK(strong.violations_found.at(Axiom::MS1_strong) == 6);
    CHECK(strong.violations.front() ==
          Violation{Axiom::MS1_strong, pts(s, {"a", "b", "c"}), Value(0), Value(0), IffDirection::only_if});
    CHECK(validate_ms(builtin_example1(), {.strengthened_identity = true}).violations.empty());
}

TEST_CASE("violation cap keeps the counts exact")
{
    MsSpace s = builtin_example1();
    ValidationReport r = check_partial_s(s, {.max_violations_per_axiom = 2});
    CHECK(r.violations.size() == 2);
    CHECK(r.violations_found.at(Axiom::PS_iii) == 13);
    CHECK_FALSE(*r.is_partial_s);
}

TEST_CASE("names and arities")
{
    for (Axiom a : {Axiom::MS1, Axiom::MS2, Axiom::MS3, Axiom::MS4, Axiom::PS_i, Axiom::PS_ii, Axiom::PS_iii,
                    Axiom::PS_iv, Axiom::MS1_strong})
        CHECK(parse_axiom(axiom_name(a)) == a);
    CHECK_FALSE(parse_axiom("MS5"));
    CHECK(witness_arity(Axiom::MS4) == 4);
    CHECK(witness_arity(Axiom::PS_iii) == 3);
    CHECK(witness_arity(Axiom::PS_iv) == 2);
}

TEST_CASE("property: validators agree with the brute-force oracle")
{
    gen::Rng rng(17);
    int ms = 0, ps = 0;
    for (int i = 0; i < 600; ++i) {
        std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        MsSpace s = (i % 2) ? gen::near_valid(rng, n) : gen::any_table(rng, n);
        ValidationReport r = classify(s);
        CHECK(*r.is_ms == oracle::is_ms(s));
        CHECK(*r.is_partial_s == oracle::is_partial_s(s));
        ms += *r.is_ms;
        ps += *r.is_partial_s;
        const std::uint64_t n2 = n * n, n3 = n2 * n, n4 = n3 * n;
        CHECK(r.checks_performed == 2 * (2 * n2 + n3 + n4));
    }
    // The sample has to exercise both verdicts.
    CHECK(ms > 50);
    CHECK(ps > 20);
}

TEST_CASE("property: every violation replays and witnesses are sorted")
{
    gen::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        MsSpace s = gen::any_table(rng, 2 + static_cast<std::size_t>(i % 3));
        ValidationReport r = classify(s, {.strengthened_identity = true});
        for (std::size_t k = 0; k < r.violations.size(); ++k) {
            const Violation& v = r.violations[k];
            CHECK(v.witness.size() == witness_arity(v.axiom));
            CHECK(replays(s, v));
            if (k > 0 && r.violations[k - 1].axiom == v.axiom) CHECK(r.violations[k - 1].witness < v.witness);
        }
        CHECK(classify(s, {.strengthened_identity = true}).violations == r.violations);
    }
}

TEST_CASE("replays rejects a tampered witness")
{
    MsSpace s = builtin_example1();
    Violation v{Axiom::PS_iii, pts(s, {"1", "2", "3"}), Value(8), Value(6), IffDirection::none};
    CHECK(replays(s, v));
    v.rhs = Value(7);
    CHECK_FALSE(replays(s, v));
    v = Violation{Axiom::PS_iii, pts(s, {"3", "1", "2"}), Value(5), Value(6), IffDirection::none};
    CHECK_FALSE(replays(s, v));
}

TEST_CASE("partial S conditions give M_s axioms 1 to 3 but not axiom 4")
{
    // (i) is axiom 1, (iv) is axiom 3, and (iii) gives min_self <= m.
    int axiom4_failures = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GenConfig c;
        c.n = 2 + seed % 5;
        c.seed = seed * 7919;
        auto s = gen_partial_s(c);
        REQUIRE(s);
        CHECK(oracle::is_partial_s(*s));
        ValidationReport r = validate_ms(*s);
        CHECK(r.violations_found.at(Axiom::MS1) == 0);
        CHECK(r.violations_found.at(Axiom::MS2) == 0);
        CHECK(r.violations_found.at(Axiom::MS3) == 0);
        CHECK(*r.is_ms == oracle::is_ms(*s));
        axiom4_failures += !*r.is_ms;
    }
    CHECK(axiom4_failures > 0);
}

TEST_CASE("smallest known partial S space that is not M_s")
{
    // s(1)=0, s(2)=s(3)=1, m(1,1,2)=1, m(1,1,3)=m(2,2,3)=2, m(1,2,3)=3
    MsSpace s = oracle::make_space({"1", "2", "3"}, [](std::uint32_t x, std::uint32_t y, std::uint32_t z) -> Value {
        if (x == y && y == z) return x == 0 ? 0 : 1;
        if (x != y && y != z) return 3;
        return (x == 0 && z == 1) ? 1 : 2;
    });
    CHECK(oracle::is_partial_s(s));
    CHECK_FALSE(oracle::is_ms(s));
    ValidationReport r = classify(s);
    CHECK(*r.is_partial_s);
    CHECK_FALSE(*r.is_ms);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front() ==
          Violation{Axiom::MS4, pts(s, {"1", "2", "3", "2"}), Value(3), Value(2), IffDirection::none});
    CHECK(r.violations_found.at(Axiom::MS4) == 6);
    CHECK(r.violations.size() == 6);
}
