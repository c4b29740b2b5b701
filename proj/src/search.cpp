#include "msm/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace msm {

namespace {

constexpr std::size_t min_points = 2;
constexpr std::size_t max_gen_points = 16;

// Grid values as integers over a common denominator.
struct Grid {
    std::int64_t denom = 1;
    std::vector<std::int64_t> units;
    std::int64_t ceiling = 0;
    // Smallest positive gap between grid values (1 if the grid has one value).
    std::int64_t step = 1;
};

Grid make_grid(const std::vector<Value>& values, std::uint32_t ceiling_factor)
{
    Grid g;
    for (const Value& v : values) g.denom = std::lcm(g.denom, v.den());
    for (const Value& v : values) g.units.push_back(v.num() * (g.denom / v.den()));
    g.ceiling = *std::max_element(g.units.begin(), g.units.end()) * std::int64_t{ceiling_factor};
    std::vector<std::int64_t> sorted = g.units;
    std::sort(sorted.begin(), sorted.end());
    std::optional<std::int64_t> step;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] > sorted[i - 1] && (!step || sorted[i] - sorted[i - 1] < *step)) step = sorted[i] - sorted[i - 1];
    g.step = step.value_or(1);
    return g;
}

// Symmetric n^3 table in grid units; set() writes every permutation, and
// m(p,p,q) and m(q,q,p) are kept equal since both targets require it.
class SymTable {
public:
    explicit SymTable(std::size_t n) : n_(n), v_(n * n * n, 0) {}

    std::size_t n() const { return n_; }
    std::int64_t at(std::size_t x, std::size_t y, std::size_t z) const { return v_[(x * n_ + y) * n_ + z]; }
    std::int64_t self(std::size_t x) const { return at(x, x, x); }

    void set(std::size_t x, std::size_t y, std::size_t z, std::int64_t value)
    {
        std::array<std::size_t, 3> p{x, y, z};
        std::sort(p.begin(), p.end());
        write(p, value);
        if (p[0] == p[1] && p[1] != p[2]) write({p[0], p[2], p[2]}, value);
        else if (p[0] != p[1] && p[1] == p[2]) write({p[0], p[0], p[2]}, value);
    }

private:
    void write(std::array<std::size_t, 3> p, std::int64_t value)
    {
        do {
            v_[(p[0] * n_ + p[1]) * n_ + p[2]] = value;
        } while (std::next_permutation(p.begin(), p.end()));
    }

    std::size_t n_;
    std::vector<std::int64_t> v_;
};

SymTable draw_table(SplitMix64& rng, const Grid& grid, std::size_t n)
{
    SymTable t(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y)
            for (std::size_t z = y; z < n; ++z) t.set(x, y, z, grid.units[rng.below(grid.units.size())]);
    return t;
}

MsSpace to_space(const SymTable& t, std::int64_t denom)
{
    MsSpace::Builder b(true);
    for (std::size_t i = 1; i <= t.n(); ++i) b.add_point(std::to_string(i));
    auto P = [](std::size_t i) { return Point{static_cast<std::uint32_t>(i)}; };
    for (std::size_t x = 0; x < t.n(); ++x)
        for (std::size_t y = x; y < t.n(); ++y)
            for (std::size_t z = y; z < t.n(); ++z) b.set(P(x), P(y), P(z), Value(t.at(x, y, z), denom));
    return b.build();
}

enum class Target { ms, partial_s };

// Raises entries until the target's inequalities hold. Returns false if an
// entry would exceed the ceiling or the rounds run out.
//
// ms:        axiom 2 (raise m(x,y,z) to min_self), then axiom 4 (raise the
//            smallest non-degenerate excess term m(p,p,t), p != t, by the deficit).
// partial_s: condition (iii) (raise m(x,y,z) to max_self, one grid step higher
//            for m(p,p,q) when s(p) = s(q)), then condition (ii) (raise the
//            smallest m(p,p,t), p != t, by the deficit).
// Both sides are symmetric in x, y, z, so sweeping multisets x <= y <= z suffices.
bool repair(SymTable& t, const Grid& grid, std::size_t max_rounds, Target target)
{
    const std::size_t n = t.n();
    for (std::size_t round = 0; round < max_rounds; ++round) {
        bool changed = false;

        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x; y < n; ++y)
                for (std::size_t z = y; z < n; ++z) {
                    std::int64_t floor = target == Target::ms
                                             ? std::min({t.self(x), t.self(y), t.self(z)})
                                             : std::max({t.self(x), t.self(y), t.self(z)});
                    // Raising m(p,p,q) to exactly s(p) = s(q) would recreate the
                    // three-way equality that condition (i) forbids.
                    const bool pair_pattern = (x == y) != (y == z);
                    if (target == Target::partial_s && pair_pattern && t.self(x) == t.self(z))
                        floor += grid.step;
                    if (floor > grid.ceiling) return false;
                    if (t.at(x, y, z) < floor) {
                        t.set(x, y, z, floor);
                        changed = true;
                    }
                }

        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x; y < n; ++y)
                for (std::size_t z = y; z < n; ++z)
                    for (std::size_t w = 0; w < n; ++w) {
                        const std::array<std::size_t, 3> ps{x, y, z};
                        // term(p): excess m(p,p,w) - min_self for ms, raw m(p,p,w) for partial_s.
                        auto term = [&](std::size_t p) {
                            return target == Target::ms ? t.at(p, p, w) - std::min(t.self(p), t.self(w))
                                                        : t.at(p, p, w);
                        };
                        std::int64_t lhs = target == Target::ms
                                               ? t.at(x, y, z) - std::min({t.self(x), t.self(y), t.self(z)})
                                               : t.at(x, y, z);
                        std::int64_t rhs = term(x) + term(y) + term(z) - (target == Target::ms ? 0 : t.self(w));
                        if (lhs <= rhs) continue;

                        std::optional<std::size_t> pick;
                        for (std::size_t p : ps)
                            if (p != w && (!pick || term(p) < term(*pick))) pick = p;
                        if (!pick) return false;  // x = y = z = w never violates
                        std::int64_t raised = t.at(*pick, *pick, w) + (lhs - rhs);
                        if (raised > grid.ceiling) return false;
                        t.set(*pick, *pick, w, raised);
                        changed = true;
                    }

        if (!changed) return true;
    }
    return false;
}

template <class T, class Fn>
std::optional<std::pair<std::uint64_t, T>> first_success(std::uint64_t trials, unsigned workers, Fn fn)
{
    if (workers <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t)
            if (auto r = fn(t)) return std::pair{t, std::move(*r)};
        return std::nullopt;
    }

    std::atomic<std::uint64_t> best{trials};
    std::mutex mu;
    std::optional<std::pair<std::uint64_t, T>> result;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t t = w; t < trials; t += workers) {
                if (t >= best.load()) return;
                if (auto r = fn(t)) {
                    std::lock_guard lock(mu);
                    if (t < best.load()) {
                        best = t;
                        result = std::pair{t, std::move(*r)};
                    }
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    return result;
}

}  // namespace

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return r % bound;
}

std::vector<Value> default_grid()
{
    std::vector<Value> grid;
    for (std::int64_t k = 0; k <= 20; ++k) grid.emplace_back(k, 2);
    return grid;
}

void check_config(const GenConfig& config)
{
    if (config.n < min_points || config.n > max_gen_points)
        throw InputError("generator size must be in 2..16, got " + std::to_string(config.n));
    if (config.value_grid.empty()) throw InputError("value grid is empty");
    for (const Value& v : config.value_grid)
        if (v.sign() < 0) throw InputError("negative grid value " + v.to_string());
    if (config.ceiling_factor == 0) throw InputError("ceiling factor must be positive");
}

std::optional<MsSpace> gen_ms_trial(const GenConfig& config, std::uint64_t trial)
{
    check_config(config);
    Grid grid = make_grid(config.value_grid, config.ceiling_factor);
    SplitMix64 rng(config.seed + trial);
    SymTable t = draw_table(rng, grid, config.n);
    if (!repair(t, grid, config.max_repair_rounds, Target::ms)) return std::nullopt;
    MsSpace space = to_space(t, grid.denom);
    // The validator is the gate; axiom 1 failures are rejected here.
    if (!*validate_ms(space, {.max_violations_per_axiom = 0}).is_ms) return std::nullopt;
    return space;
}

std::optional<MsSpace> gen_partial_s_trial(const GenConfig& config, std::uint64_t trial)
{
    check_config(config);
    Grid grid = make_grid(config.value_grid, config.ceiling_factor);
    SplitMix64 rng(config.seed + trial);
    SymTable t = draw_table(rng, grid, config.n);
    if (!repair(t, grid, config.max_repair_rounds, Target::partial_s)) return std::nullopt;
    MsSpace space = to_space(t, grid.denom);
    if (!*check_partial_s(space, {.max_violations_per_axiom = 0}).is_partial_s) return std::nullopt;
    return space;
}

std::optional<MsSpace> gen_ms(const GenConfig& config)
{
    check_config(config);
    auto r = first_success<MsSpace>(config.trials, config.workers,
                                    [&](std::uint64_t t) { return gen_ms_trial(config, t); });
    if (!r) return std::nullopt;
    return std::move(r->second);
}

std::optional<MsSpace> gen_partial_s(const GenConfig& config)
{
    check_config(config);
    auto r = first_success<MsSpace>(config.trials, config.workers,
                                    [&](std::uint64_t t) { return gen_partial_s_trial(config, t); });
    if (!r) return std::nullopt;
    return std::move(r->second);
}

std::optional<Violation> separating_witness(const ValidationReport& report)
{
    const Violation* first_ps = nullptr;
    const Violation* first_ps3 = nullptr;
    for (const Violation& v : report.violations) {
        if (v.axiom != Axiom::PS_i && v.axiom != Axiom::PS_ii && v.axiom != Axiom::PS_iii &&
            v.axiom != Axiom::PS_iv)
            continue;
        if (!first_ps) first_ps = &v;
        if (v.axiom != Axiom::PS_iii) continue;
        if (!first_ps3) first_ps3 = &v;
        const auto& w = v.witness;
        if (w[0] != w[1] && w[1] != w[2] && w[0] != w[2]) return v;
    }
    if (first_ps3) return *first_ps3;
    if (first_ps) return *first_ps;
    return std::nullopt;
}

std::optional<Separation> find_ms_not_partial_s(const GenConfig& config, std::span<const MsSpace> injected)
{
    check_config(config);
    auto separates = [](const MsSpace& space) -> std::optional<Violation> {
        if (!*validate_ms(space, {.max_violations_per_axiom = 0}).is_ms) return std::nullopt;
        ValidationReport partial = check_partial_s(space);
        if (*partial.is_partial_s) return std::nullopt;
        return separating_witness(partial);
    };

    for (std::size_t i = 0; i < injected.size(); ++i)
        if (auto w = separates(injected[i])) return Separation{injected[i], *w, i, true};

    auto r = first_success<Separation>(config.trials, config.workers,
                                       [&](std::uint64_t t) -> std::optional<Separation> {
                                           auto space = gen_ms_trial(config, t);
                                           if (!space) return std::nullopt;
                                           auto w = separates(*space);
                                           if (!w) return std::nullopt;
                                           return Separation{std::move(*space), *w, t, false};
                                       });
    if (!r) return std::nullopt;
    return std::move(r->second);
}

namespace {

// Advances images as a base-n counter, last point least significant.
bool next_map(std::vector<Point>& images, std::size_t n)
{
    for (std::size_t i = images.size(); i-- > 0;) {
        if (images[i].index + 1 < n) {
            ++images[i].index;
            return true;
        }
        images[i].index = 0;
    }
    return false;
}

}  // namespace

std::optional<SelfMap> gen_admissible_map(const MsSpace& space, ContractionKind kind,
                                          const std::optional<PhiFunction>& phi, const GenConfig& config)
{
    const std::size_t n = space.size();
    if (n <= 4) {
        std::vector<Point> images(n, Point{0});
        do {
            SelfMap map(space, images);
            if (analyze_contraction(space, map, kind, phi).admissible) return map;
        } while (next_map(images, n));
        return std::nullopt;
    }
    SplitMix64 rng(config.seed);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        std::vector<Point> images(n);
        for (auto& p : images) p = Point{static_cast<std::uint32_t>(rng.below(n))};
        SelfMap map(space, std::move(images));
        if (analyze_contraction(space, map, kind, phi).admissible) return map;
    }
    return std::nullopt;
}

std::vector<SelfMap> admissible_maps(const MsSpace& space, ContractionKind kind, const std::optional<PhiFunction>& phi)
{
    const std::size_t n = space.size();
    if (n > 6) throw InputError("exhaustive map enumeration is limited to 6 points");
    std::vector<SelfMap> out;
    std::vector<Point> images(n, Point{0});
    do {
        SelfMap map(space, images);
        if (analyze_contraction(space, map, kind, phi).admissible) out.push_back(std::move(map));
    } while (next_map(images, n));
    return out;
}

}  // namespace msm
