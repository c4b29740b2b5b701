#include <doctest.h>

#include "generators.hpp"
#include "msm/fixedpoint.hpp"
#include "msm/search.hpp"
#include "msm/topology.hpp"
#include "oracle.hpp"

using namespace msm;

namespace {

SelfMap map_of(const MsSpace& s, std::initializer_list<const char*> images)
{
    std::vector<Point> out;
    for (const char* id : images) out.push_back(s.point(id));
    return SelfMap(s, out);
}

std::vector<Point> seq_of(const MsSpace& s, std::initializer_list<const char*> ids)
{
    std::vector<Point> out;
    for (const char* id : ids) out.push_back(s.point(id));
    return out;
}

}  // namespace

TEST_CASE("constant map onto 3 in example1")
{
    MsSpace s = builtin_example1();
    SelfMap t = SelfMap::constant(s, s.point("3"));

    ContractionReport b = banach_constant(s, t);
    REQUIRE(b.constant);
    CHECK(*b.constant == Value(1));  // m(3,3,3)/m(3,3,3)
    CHECK(b.witness == seq_of(s, {"3", "3"}));
    CHECK(b.lhs == Value(5));
    CHECK(b.rhs == Value(5));
    CHECK_FALSE(b.admissible);
    CHECK_FALSE(b.infeasible_witness);

    ContractionReport k = kannan_constant(s, t);
    REQUIRE(k.constant);
    CHECK(*k.constant == Value(1, 2));  // 5 / (5 + 5) at (3,3)
    CHECK(k.witness == seq_of(s, {"3", "3"}));
    CHECK_FALSE(k.admissible);
    CHECK(*k.constant == *oracle::kannan_l(s, t));
}

TEST_CASE("two-point space, map onto the zero point")
{
    MsSpace s = oracle::twopoint();
    SelfMap t = SelfMap::constant(s, s.point("a"));
    ContractionReport b = banach_constant(s, t);
    CHECK(b.admissible);
    CHECK(*b.constant == Value(0));
    CHECK(b.witness == seq_of(s, {"a", "a"}));

    ContractionReport k = kannan_constant(s, t);
    CHECK(k.admissible);
    CHECK(*k.constant == Value(0));

    HarnessResult h = theorem_harness(s, t, ContractionKind::banach);
    CHECK(h.admissible);
    CHECK(h.conclusions_hold);
    CHECK(h.fixed_point == s.point("a"));

    SolveTrace tr = picard(s, t, s.point("b"));
    CHECK(tr.outcome == SolveOutcome::fixed_point);
    CHECK(tr.orbit == seq_of(s, {"b", "a", "a"}));
    CHECK(tr.steps == 2);
    CHECK(tr.fixed_point == s.point("a"));
    CHECK(*tr.self_distance_at_fix == Value(0));
    CHECK(tr.step_gaps == std::vector<Value>{2, 0});
}

TEST_CASE("identity maps")
{
    MsSpace s = builtin_example1();
    SelfMap id = SelfMap::identity(s);
    ContractionReport b = banach_constant(s, id);
    CHECK(*b.constant == Value(1));
    CHECK(b.witness == seq_of(s, {"1", "1"}));
    CHECK_FALSE(b.admissible);

    // m(x,x,y) / (m(x,x,x) + m(y,y,y)): 8/16, 8/17, 7/13, 9/18, 7/14, 5/10
    ContractionReport k = kannan_constant(s, id);
    CHECK(*k.constant == Value(7, 13));
    CHECK(k.witness == seq_of(s, {"1", "3"}));
    CHECK(*k.constant == *oracle::kannan_l(s, id));
    CHECK_FALSE(k.admissible);

    // On the discrete space: m(x,x,x) = 0, so x != y gives 1 / 0.
    MsSpace d = discrete_space(3);
    ContractionReport kd = kannan_constant(d, SelfMap::identity(d));
    CHECK_FALSE(kd.constant);
    CHECK_FALSE(kd.admissible);
    REQUIRE(kd.infeasible_witness);
    CHECK((*kd.infeasible_witness)[0] == Point{0});
    CHECK((*kd.infeasible_witness)[1] == Point{1});

    ContractionReport phi = phi_check(s, id, PhiFunction::parse("linear:1/2"));
    CHECK_FALSE(phi.admissible);
    CHECK(phi.witness == seq_of(s, {"1", "1", "1"}));
    CHECK(phi.lhs == Value(8));
    CHECK(phi.rhs == Value(4));
}

TEST_CASE("infeasible banach pair")
{
    // m(a,a,a) = 0 but T sends a into b with m(b,b,b) = 2 > 0.
    MsSpace s = oracle::twopoint();
    SelfMap t = SelfMap::constant(s, s.point("b"));
    ContractionReport b = banach_constant(s, t);
    CHECK_FALSE(b.constant);
    CHECK_FALSE(b.admissible);
    REQUIRE(b.infeasible_witness);
    CHECK((*b.infeasible_witness)[0] == s.point("a"));
    CHECK((*b.infeasible_witness)[1] == s.point("a"));
    CHECK_FALSE(oracle::banach_k(s, t));
}

TEST_CASE("phi contraction on the two-point space")
{
    MsSpace s = oracle::twopoint();
    SelfMap t = SelfMap::constant(s, s.point("a"));
    for (const char* text : {"linear:1/4", "linear:1/2", "saturating:1"}) {
        PhiFunction phi = PhiFunction::parse(text);
        ContractionReport r = phi_check(s, t, phi);
        CHECK(r.admissible);
        CHECK(r.witness.empty());
        HarnessResult h = theorem_harness(s, t, ContractionKind::phi, phi);
        CHECK(h.conclusions_hold);
    }
    CHECK_THROWS_AS(analyze_contraction(s, t, ContractionKind::phi), InputError);
}

TEST_CASE("swap map cycles")
{
    MsSpace s = builtin_example1();
    SelfMap swap = map_of(s, {"2", "1", "3"});
    SolveTrace t = picard(s, swap, s.point("1"));
    CHECK(t.outcome == SolveOutcome::cycle);
    CHECK(t.cycle == seq_of(s, {"1", "2"}));
    CHECK(t.orbit == seq_of(s, {"1", "2", "1"}));
    CHECK_FALSE(t.fixed_point);
    CHECK(enumerate_fixed_points(swap) == seq_of(s, {"3"}));

    SolveTrace from3 = picard(s, swap, s.point("3"));
    CHECK(from3.outcome == SolveOutcome::fixed_point);
    CHECK(from3.steps == 1);
    CHECK(*from3.self_distance_at_fix == Value(5));

    SolveTrace capped = picard(s, swap, s.point("1"), 1);
    CHECK(capped.outcome == SolveOutcome::max_iter);
    CHECK(capped.steps == 1);
}

TEST_CASE("names")
{
    for (auto k : {ContractionKind::banach, ContractionKind::kannan, ContractionKind::phi})
        CHECK(parse_kind(kind_name(k)) == k);
    CHECK_FALSE(parse_kind("chatterjea"));
    CHECK(outcome_name(SolveOutcome::fixed_point) == "fixed_point");
    CHECK(outcome_name(SolveOutcome::cycle) == "cycle");
    CHECK(outcome_name(SolveOutcome::max_iter) == "max_iter");
}

TEST_CASE("property: constants match the oracle and are attained")
{
    gen::Rng rng(31);
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 300; ++seed) {
        GenConfig c;
        c.n = 2 + seed % 4;
        c.seed = seed;
        auto s = gen_ms(c);
        REQUIRE(s);
        for (int j = 0; j < 3; ++j) {
            SelfMap t = gen::any_map(rng, *s);
            ++checked;
            ContractionReport b = banach_constant(*s, t);
            ContractionReport k = kannan_constant(*s, t);
            CHECK(b.constant == oracle::banach_k(*s, t));
            CHECK(k.constant == oracle::kannan_l(*s, t));
            CHECK(b.admissible == (b.constant && *b.constant < Value(1)));
            CHECK(k.admissible == (k.constant && *k.constant < Value(1, 2)));
            if (b.constant && !b.rhs.is_zero()) CHECK(b.lhs / b.rhs == *b.constant);
            for (const char* text : {"linear:1/4", "saturating:1"}) {
                PhiFunction phi = PhiFunction::parse(text);
                CHECK(phi_check(*s, t, phi).admissible == oracle::phi_ok(*s, t, phi));
            }
        }
    }
}

TEST_CASE("property: harness conclusions for every admissible map")
{
    int admissible = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        GenConfig c;
        c.n = 2 + seed % 3;
        c.seed = 1000 + seed;
        auto s = gen_ms(c);
        REQUIRE(s);
        for (auto kind : {ContractionKind::banach, ContractionKind::kannan}) {
            for (const SelfMap& t : admissible_maps(*s, kind)) {
                ++admissible;
                HarnessResult h = theorem_harness(*s, t, kind);
                CHECK(h.conclusions_hold);
                auto fixed = oracle::fixed_points(t);
                REQUIRE(fixed.size() == 1);
                CHECK(h.fixed_point == Point{fixed[0]});
                CHECK(oracle::m(*s, fixed[0], fixed[0], fixed[0]) == Value(0));
                for (Point x0 : s->points()) {
                    SolveTrace tr = picard(*s, t, x0);
                    CHECK(tr.fixed_point == Point{fixed[0]});
                    // The orbit converges to the fixed point.
                    CHECK(convergence_gaps(*s, tr.orbit, *tr.fixed_point).verdict);
                    if (kind == ContractionKind::banach) {
                        // m(x_{i+1},x_{i+1},x_i) <= k m(x_i,x_i,x_{i-1})
                        const auto& o = tr.orbit;
                        for (std::size_t i = 1; i + 1 < o.size(); ++i)
                            CHECK(oracle::m(*s, o[i + 1].index, o[i + 1].index, o[i].index) <=
                                  *h.report.constant * oracle::m(*s, o[i].index, o[i].index, o[i - 1].index));
                    }
                }
            }
        }
    }
    CHECK(admissible > 40);
}

TEST_CASE("property: no admissible map without a zero self-distance")
{
    // A fixed point of an admissible map has m(u,u,u) = 0.
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenConfig c;
        c.n = 2 + seed % 3;
        c.seed = 500 + seed;
        auto s = gen_ms(c);
        REQUIRE(s);
        bool any_zero = false;
        for (std::uint32_t x = 0; x < s->size(); ++x) any_zero |= oracle::m(*s, x, x, x).is_zero();
        if (!any_zero) {
            CHECK(admissible_maps(*s, ContractionKind::banach).empty());
            CHECK(admissible_maps(*s, ContractionKind::kannan).empty());
        }
    }
    MsSpace e = builtin_example1();
    CHECK(admissible_maps(e, ContractionKind::banach).empty());
}
