#include "msm/topology.hpp"

#include <algorithm>

#include "dense_table.hpp"

namespace msm {

namespace {

void check_points(const MsSpace& space, std::span<const Point> seq)
{
    for (Point p : seq)
        if (p.index >= space.size()) throw InputError("point index " + std::to_string(p.index) + " out of range");
}

template <class It>
bool all_same(It first, It last)
{
    return std::adjacent_find(first, last, std::not_equal_to<>{}) == last;
}

}  // namespace

std::vector<Point> ball(const MsSpace& space, Point center, const Value& radius)
{
    if (radius.sign() < 0) throw InputError("ball radius must be non-negative");
    check_points(space, std::span(&center, 1));
    std::vector<Point> out;
    for (Point y : space.points())
        if (excess(space, center, center, y) <= radius) out.push_back(y);
    return out;
}

std::size_t tail_length(std::size_t len) { return (len + 3) / 4; }

GapProfile convergence_gaps(const MsSpace& space, std::span<const Point> seq, Point limit)
{
    if (seq.empty()) throw InputError("sequence must be non-empty");
    check_points(space, seq);
    check_points(space, std::span(&limit, 1));

    GapProfile profile;
    profile.seq.assign(seq.begin(), seq.end());
    profile.limit = limit;
    for (Point xn : seq) {
        profile.gaps.push_back(excess(space, xn, xn, limit));
        profile.spread.push_back(max_self(space, xn, xn, limit) - min_self(space, xn, xn, limit));
    }
    const std::size_t tail = tail_length(seq.size());
    profile.verdict = std::all_of(profile.gaps.end() - static_cast<std::ptrdiff_t>(tail), profile.gaps.end(),
                                  [](const Value& g) { return g.is_zero(); });
    return profile;
}

GapProfile cauchy_profile(const MsSpace& space, std::span<const Point> seq)
{
    if (seq.empty()) throw InputError("sequence must be non-empty");
    check_points(space, seq);

    const std::size_t len = seq.size();
    GapProfile profile;
    profile.seq.assign(seq.begin(), seq.end());
    profile.gaps.reserve(len * len);
    for (Point xn : seq)
        for (Point xm : seq) profile.gaps.push_back(excess(space, xn, xn, xm));
    for (std::size_t i = 0; i + 1 < len; ++i) {
        Point a = seq[i];
        Point b = seq[i + 1];
        profile.spread.push_back(max_self(space, a, a, b) - min_self(space, a, a, b));
    }

    const std::size_t start = len - tail_length(len);
    std::vector<Value> tail_gaps;
    for (std::size_t i = start; i < len; ++i)
        for (std::size_t j = start; j < len; ++j) tail_gaps.push_back(profile.gaps[i * len + j]);
    const std::size_t spread_tail = tail_length(profile.spread.size());
    profile.verdict = all_same(tail_gaps.begin(), tail_gaps.end()) &&
                      all_same(profile.spread.end() - static_cast<std::ptrdiff_t>(spread_tail), profile.spread.end());
    return profile;
}

LemmaCheck lemma1_check(const MsSpace& space, Point xp, Point yp, Point x, Point y)
{
    LemmaCheck c;
    c.lhs = abs(excess(space, xp, xp, yp) - excess(space, x, x, y));
    c.rhs = Value(2) * (excess(space, xp, xp, x) + excess(space, yp, yp, y));
    c.holds = c.lhs <= c.rhs;
    return c;
}

LemmaSweep lemma1_sweep(const MsSpace& space)
{
    return detail::with_dense_table(space, [&](const auto& t) {
        using V = typename std::decay_t<decltype(t)>::value_type;
        const std::size_t n = t.n;
        std::vector<V> e(n * n);  // pair excess e(p,p,q)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) e[p * n + q] = t.at(p, p, q) - std::min(t.self(p), t.self(q));

        LemmaSweep sweep;
        for (std::size_t xp = 0; xp < n; ++xp)
            for (std::size_t yp = 0; yp < n; ++yp)
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {
                        ++sweep.checked;
                        V diff = e[xp * n + yp] - e[x * n + y];
                        if (diff < V(0)) diff = -diff;
                        V bound = e[xp * n + x] + e[yp * n + y];
                        bound = bound + bound;
                        if (diff > bound) {
                            ++sweep.failures;
                            if (!sweep.first_failure) {
                                auto P = [](std::size_t i) { return Point{static_cast<std::uint32_t>(i)}; };
                                sweep.first_failure = {P(xp), P(yp), P(x), P(y)};
                            }
                        }
                    }
        sweep.all_hold = sweep.failures == 0;
        return sweep;
    });
}

}  // namespace msm
