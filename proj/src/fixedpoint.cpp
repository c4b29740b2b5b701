#include "msm/fixedpoint.hpp"

#include <algorithm>

namespace msm {

namespace {

void check_map(const MsSpace& space, const SelfMap& map)
{
    if (map.size() != space.size()) {
        throw InputError("map covers " + std::to_string(map.size()) + " points, space has " +
                         std::to_string(space.size()));
    }
    for (Point p : map.images())
        if (p.index >= space.size()) throw InputError("map image out of range");
}

// Shared max-ratio sweep over ordered pairs for the banach and kannan constants.
template <class Num, class Den>
ContractionReport max_ratio(const MsSpace& space, ContractionKind kind, const Value& bound, Num numerator,
                            Den denominator)
{
    ContractionReport r;
    r.kind = kind;
    std::optional<Value> best;
    for (Point x : space.points()) {
        for (Point y : space.points()) {
            Value num = numerator(x, y);
            Value den = denominator(x, y);
            Value ratio;
            if (num.is_zero()) {
                ratio = 0;
            } else if (den.is_zero()) {
                if (!r.infeasible_witness) r.infeasible_witness = std::array<Point, 2>{x, y};
                continue;
            } else {
                ratio = num / den;
            }
            if (!best || ratio > *best) {
                best = ratio;
                r.witness = {x, y};
                r.lhs = num;
                r.rhs = den;
            }
        }
    }
    if (r.infeasible_witness) {
        r.witness = {r.infeasible_witness->at(0), r.infeasible_witness->at(1)};
        r.lhs = numerator(r.witness[0], r.witness[1]);
        r.rhs = 0;
        r.admissible = false;
    } else {
        r.constant = best;
        r.admissible = *best < bound;
    }
    return r;
}

}  // namespace

std::string_view kind_name(ContractionKind kind)
{
    switch (kind) {
    case ContractionKind::banach: return "banach";
    case ContractionKind::kannan: return "kannan";
    case ContractionKind::phi: return "phi";
    }
    return "";
}

std::optional<ContractionKind> parse_kind(std::string_view name)
{
    if (name == "banach") return ContractionKind::banach;
    if (name == "kannan") return ContractionKind::kannan;
    if (name == "phi") return ContractionKind::phi;
    return std::nullopt;
}

ContractionReport banach_constant(const MsSpace& space, const SelfMap& map)
{
    check_map(space, map);
    return max_ratio(
        space, ContractionKind::banach, Value(1),
        [&](Point x, Point y) { return space(map(x), map(x), map(y)); },
        [&](Point x, Point y) { return space(x, x, y); });
}

ContractionReport kannan_constant(const MsSpace& space, const SelfMap& map)
{
    check_map(space, map);
    return max_ratio(
        space, ContractionKind::kannan, Value(1, 2),
        [&](Point x, Point y) { return space(map(x), map(x), map(y)); },
        [&](Point x, Point y) { return space(x, x, map(x)) + space(y, y, map(y)); });
}

ContractionReport phi_check(const MsSpace& space, const SelfMap& map, const PhiFunction& phi)
{
    check_map(space, map);
    ContractionReport r;
    r.kind = ContractionKind::phi;
    r.admissible = true;
    for (Point x : space.points())
        for (Point y : space.points())
            for (Point z : space.points()) {
                const Value& m = space(x, y, z);
                Value lhs = space(map(x), map(y), map(z));
                Value rhs = m - phi(m);
                if (lhs > rhs) {
                    r.admissible = false;
                    r.witness = {x, y, z};
                    r.lhs = lhs;
                    r.rhs = rhs;
                    return r;
                }
            }
    return r;
}

ContractionReport analyze_contraction(const MsSpace& space, const SelfMap& map, ContractionKind kind,
                                      const std::optional<PhiFunction>& phi)
{
    switch (kind) {
    case ContractionKind::banach: return banach_constant(space, map);
    case ContractionKind::kannan: return kannan_constant(space, map);
    case ContractionKind::phi:
        if (!phi) throw InputError("phi contraction needs a phi function");
        return phi_check(space, map, *phi);
    }
    throw InputError("unknown contraction kind");
}

std::string_view outcome_name(SolveOutcome outcome)
{
    switch (outcome) {
    case SolveOutcome::fixed_point: return "fixed_point";
    case SolveOutcome::cycle: return "cycle";
    case SolveOutcome::max_iter: return "max_iter";
    }
    return "";
}

SolveTrace picard(const MsSpace& space, const SelfMap& map, Point x0, std::size_t max_iter)
{
    check_map(space, map);
    if (x0.index >= space.size()) throw InputError("start point out of range");
    if (max_iter == 0) max_iter = 4 * space.size();

    SolveTrace trace;
    std::vector<std::optional<std::size_t>> first_visit(space.size());
    Point cur = x0;
    trace.orbit.push_back(cur);
    first_visit[cur.index] = 0;
    while (trace.steps < max_iter) {
        Point next = map(cur);
        ++trace.steps;
        trace.orbit.push_back(next);
        trace.step_gaps.push_back(excess(space, next, next, cur));
        if (next == cur) {
            trace.outcome = SolveOutcome::fixed_point;
            trace.fixed_point = cur;
            trace.self_distance_at_fix = space(cur, cur, cur);
            return trace;
        }
        if (auto seen = first_visit[next.index]) {
            trace.outcome = SolveOutcome::cycle;
            trace.cycle.assign(trace.orbit.begin() + static_cast<std::ptrdiff_t>(*seen), trace.orbit.end() - 1);
            return trace;
        }
        first_visit[next.index] = trace.orbit.size() - 1;
        cur = next;
    }
    trace.outcome = SolveOutcome::max_iter;
    return trace;
}

std::vector<Point> enumerate_fixed_points(const SelfMap& map)
{
    std::vector<Point> out;
    for (std::uint32_t i = 0; i < map.size(); ++i)
        if (map(Point{i}) == Point{i}) out.push_back(Point{i});
    return out;
}

HarnessResult theorem_harness(const MsSpace& space, const SelfMap& map, ContractionKind kind,
                              const std::optional<PhiFunction>& phi)
{
    HarnessResult h;
    h.report = analyze_contraction(space, map, kind, phi);
    h.admissible = h.report.admissible;
    if (!h.admissible) return h;

    auto fixed = enumerate_fixed_points(map);
    h.unique_fixed_point = fixed.size() == 1;
    if (!h.unique_fixed_point) {
        h.details.push_back("expected one fixed point, found " + std::to_string(fixed.size()));
        return h;
    }
    Point u = fixed.front();
    h.fixed_point = u;

    h.self_distance_zero = space(u, u, u).is_zero();
    if (!h.self_distance_zero)
        h.details.push_back("m(u,u,u) = " + space(u, u, u).to_string() + " at u = " + space.id(u));

    h.picard_converges = true;
    for (Point x0 : space.points()) {
        SolveTrace t = picard(space, map, x0);
        if (t.outcome != SolveOutcome::fixed_point || t.fixed_point != u) {
            h.picard_converges = false;
            h.details.push_back("picard from " + space.id(x0) + " ended in " + std::string(outcome_name(t.outcome)));
        }
    }
    h.conclusions_hold = h.unique_fixed_point && h.self_distance_zero && h.picard_converges;
    return h;
}

}  // namespace msm
