#include "msm/axioms.hpp"

#include <algorithm>
#include <array>

#include "dense_table.hpp"

namespace msm {

namespace {

constexpr std::array<std::string_view, 9> axiom_names{
    "MS1", "MS2", "MS3", "MS4", "PS_i", "PS_ii", "PS_iii", "PS_iv", "MS1_strong"};

struct Sweep {
    std::vector<Violation> violations;
    std::uint64_t checks = 0;
    std::uint64_t found = 0;
};

Point pt(std::size_t i) { return Point{static_cast<std::uint32_t>(i)}; }

// Collects violations up to a cap while counting all of them.
class Collector {
public:
    Collector(Axiom axiom, std::size_t cap) : axiom_(axiom), cap_(cap) {}

    template <class Table>
    void add(const Table& t, std::vector<Point> witness, const typename Table::value_type& lhs,
             const typename Table::value_type& rhs, IffDirection dir = IffDirection::none)
    {
        ++sweep_.found;
        if (sweep_.violations.size() < cap_)
            sweep_.violations.push_back({axiom_, std::move(witness), t.to_value(lhs), t.to_value(rhs), dir});
    }
    void count(std::uint64_t n = 1) { sweep_.checks += n; }
    Sweep take() { return std::move(sweep_); }

private:
    Axiom axiom_;
    std::size_t cap_;
    Sweep sweep_;
};

template <class T>
T min3(const T& a, const T& b, const T& c)
{
    return std::min({a, b, c});
}

// MS1 and PS_i share the same condition.
template <class Table>
Sweep sweep_identity(const Table& t, Axiom axiom, std::size_t cap)
{
    Collector c(axiom, cap);
    for (std::size_t x = 0; x < t.n; ++x) {
        for (std::size_t y = 0; y < t.n; ++y) {
            c.count();
            const bool all_equal = t.self(x) == t.self(y) && t.self(y) == t.at(x, x, y);
            if (x != y && all_equal)
                c.add(t, {pt(x), pt(y)}, t.self(x), t.at(x, x, y), IffDirection::only_if);
            else if (x == y && !all_equal)
                c.add(t, {pt(x), pt(y)}, t.self(x), t.at(x, x, y), IffDirection::if_);
        }
    }
    return c.take();
}

template <class Table>
Sweep sweep_ms2(const Table& t, std::size_t cap)
{
    Collector c(Axiom::MS2, cap);
    for (std::size_t x = 0; x < t.n; ++x)
        for (std::size_t y = 0; y < t.n; ++y)
            for (std::size_t z = 0; z < t.n; ++z) {
                c.count();
                auto lo = min3(t.self(x), t.self(y), t.self(z));
                if (lo > t.at(x, y, z)) c.add(t, {pt(x), pt(y), pt(z)}, lo, t.at(x, y, z));
            }
    return c.take();
}

// MS3 and PS_iv share the same condition.
template <class Table>
Sweep sweep_pair_symmetry(const Table& t, Axiom axiom, std::size_t cap)
{
    Collector c(axiom, cap);
    for (std::size_t x = 0; x < t.n; ++x)
        for (std::size_t y = 0; y < t.n; ++y) {
            c.count();
            if (t.at(x, x, y) != t.at(y, y, x)) c.add(t, {pt(x), pt(y)}, t.at(x, x, y), t.at(y, y, x));
        }
    return c.take();
}

template <class Table>
Sweep sweep_ms4(const Table& t, std::size_t cap)
{
    using V = typename Table::value_type;
    const std::size_t n = t.n;
    // pair_gap[p*n+q] = m(p,p,q) - min_self(p,p,q)
    std::vector<V> pair_gap(n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) pair_gap[p * n + q] = t.at(p, p, q) - std::min(t.self(p), t.self(q));

    Collector c(Axiom::MS4, cap);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                V lhs = t.at(x, y, z) - min3(t.self(x), t.self(y), t.self(z));
                for (std::size_t w = 0; w < n; ++w) {
                    V rhs = pair_gap[x * n + w] + pair_gap[y * n + w] + pair_gap[z * n + w];
                    if (lhs > rhs) c.add(t, {pt(x), pt(y), pt(z), pt(w)}, lhs, rhs);
                }
                c.count(n);
            }
    return c.take();
}

template <class Table>
Sweep sweep_ps2(const Table& t, std::size_t cap)
{
    using V = typename Table::value_type;
    const std::size_t n = t.n;
    Collector c(Axiom::PS_ii, cap);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const V& lhs = t.at(x, y, z);
                for (std::size_t w = 0; w < n; ++w) {
                    V rhs = t.at(x, x, w) + t.at(y, y, w) + t.at(z, z, w) - t.self(w);
                    if (lhs > rhs) c.add(t, {pt(x), pt(y), pt(z), pt(w)}, lhs, rhs);
                }
                c.count(n);
            }
    return c.take();
}

template <class Table>
Sweep sweep_ps3(const Table& t, std::size_t cap)
{
    Collector c(Axiom::PS_iii, cap);
    for (std::size_t x = 0; x < t.n; ++x)
        for (std::size_t y = 0; y < t.n; ++y)
            for (std::size_t z = 0; z < t.n; ++z) {
                c.count();
                if (t.self(x) > t.at(x, y, z)) c.add(t, {pt(x), pt(y), pt(z)}, t.self(x), t.at(x, y, z));
            }
    return c.take();
}

template <class Table>
Sweep sweep_strong_identity(const Table& t, std::size_t cap)
{
    Collector c(Axiom::MS1_strong, cap);
    for (std::size_t x = 0; x < t.n; ++x)
        for (std::size_t y = 0; y < t.n; ++y)
            for (std::size_t z = 0; z < t.n; ++z) {
                c.count();
                const bool all_equal =
                    t.self(x) == t.self(y) && t.self(y) == t.self(z) && t.self(z) == t.at(x, y, z);
                const bool same_point = x == y && y == z;
                if (!same_point && all_equal)
                    c.add(t, {pt(x), pt(y), pt(z)}, t.self(x), t.at(x, y, z), IffDirection::only_if);
                else if (same_point && !all_equal)
                    c.add(t, {pt(x), pt(y), pt(z)}, t.self(x), t.at(x, y, z), IffDirection::if_);
            }
    return c.take();
}

Sweep run_sweep(const MsSpace& space, Axiom axiom, std::size_t cap)
{
    return detail::with_dense_table(space, [&](const auto& t) {
        switch (axiom) {
        case Axiom::MS1:
        case Axiom::PS_i: return sweep_identity(t, axiom, cap);
        case Axiom::MS2: return sweep_ms2(t, cap);
        case Axiom::MS3:
        case Axiom::PS_iv: return sweep_pair_symmetry(t, axiom, cap);
        case Axiom::MS4: return sweep_ms4(t, cap);
        case Axiom::PS_ii: return sweep_ps2(t, cap);
        case Axiom::PS_iii: return sweep_ps3(t, cap);
        case Axiom::MS1_strong: return sweep_strong_identity(t, cap);
        }
        return Sweep{};
    });
}

bool merge(ValidationReport& report, Axiom axiom, Sweep sweep, bool counts_toward_verdict)
{
    report.checks[axiom] = sweep.checks;
    report.violations_found[axiom] = sweep.found;
    if (counts_toward_verdict) report.checks_performed += sweep.checks;
    report.violations.insert(report.violations.end(), std::make_move_iterator(sweep.violations.begin()),
                             std::make_move_iterator(sweep.violations.end()));
    return sweep.found == 0;
}

constexpr std::size_t default_cap = ValidationOptions{}.max_violations_per_axiom;

}  // namespace

std::string_view axiom_name(Axiom axiom) { return axiom_names.at(static_cast<std::size_t>(axiom)); }

std::optional<Axiom> parse_axiom(std::string_view name)
{
    for (std::size_t i = 0; i < axiom_names.size(); ++i)
        if (axiom_names[i] == name) return static_cast<Axiom>(i);
    return std::nullopt;
}

std::size_t witness_arity(Axiom axiom)
{
    switch (axiom) {
    case Axiom::MS1:
    case Axiom::MS3:
    case Axiom::PS_i:
    case Axiom::PS_iv: return 2;
    case Axiom::MS2:
    case Axiom::PS_iii:
    case Axiom::MS1_strong: return 3;
    case Axiom::MS4:
    case Axiom::PS_ii: return 4;
    }
    return 0;
}

std::string_view direction_name(IffDirection direction)
{
    switch (direction) {
    case IffDirection::only_if: return "only-if";
    case IffDirection::if_: return "if";
    case IffDirection::none: break;
    }
    return "";
}

std::vector<Violation> check_ms_axiom1(const MsSpace& space)
{
    return run_sweep(space, Axiom::MS1, default_cap).violations;
}

std::vector<Violation> check_ms_axiom2(const MsSpace& space)
{
    return run_sweep(space, Axiom::MS2, default_cap).violations;
}

std::vector<Violation> check_ms_axiom3(const MsSpace& space)
{
    return run_sweep(space, Axiom::MS3, default_cap).violations;
}

std::vector<Violation> check_ms_axiom4(const MsSpace& space)
{
    return run_sweep(space, Axiom::MS4, default_cap).violations;
}

ValidationReport validate_ms(const MsSpace& space, const ValidationOptions& options)
{
    ValidationReport report;
    const std::size_t cap = options.max_violations_per_axiom;
    bool ok = true;
    for (Axiom a : {Axiom::MS1, Axiom::MS2, Axiom::MS3, Axiom::MS4})
        ok = merge(report, a, run_sweep(space, a, cap), true) && ok;
    if (options.strengthened_identity)
        merge(report, Axiom::MS1_strong, run_sweep(space, Axiom::MS1_strong, cap), false);
    report.is_ms = ok;
    return report;
}

ValidationReport check_partial_s(const MsSpace& space, const ValidationOptions& options)
{
    ValidationReport report;
    const std::size_t cap = options.max_violations_per_axiom;
    bool ok = true;
    for (Axiom a : {Axiom::PS_i, Axiom::PS_ii, Axiom::PS_iii, Axiom::PS_iv})
        ok = merge(report, a, run_sweep(space, a, cap), true) && ok;
    report.is_partial_s = ok;
    return report;
}

ValidationReport classify(const MsSpace& space, const ValidationOptions& options)
{
    ValidationReport report = validate_ms(space, options);
    ValidationReport partial = check_partial_s(space, options);
    report.is_partial_s = partial.is_partial_s;
    report.checks_performed += partial.checks_performed;
    report.checks.insert(partial.checks.begin(), partial.checks.end());
    report.violations_found.insert(partial.violations_found.begin(), partial.violations_found.end());
    // MS1_strong (if present) sorts after the PS group.
    auto strong = std::stable_partition(report.violations.begin(), report.violations.end(),
                                        [](const Violation& v) { return v.axiom != Axiom::MS1_strong; });
    std::vector<Violation> tail(std::make_move_iterator(strong), std::make_move_iterator(report.violations.end()));
    report.violations.erase(strong, report.violations.end());
    report.violations.insert(report.violations.end(), std::make_move_iterator(partial.violations.begin()),
                             std::make_move_iterator(partial.violations.end()));
    report.violations.insert(report.violations.end(), std::make_move_iterator(tail.begin()),
                             std::make_move_iterator(tail.end()));
    return report;
}

bool replays(const MsSpace& space, const Violation& v)
{
    if (v.witness.size() != witness_arity(v.axiom)) return false;
    for (Point p : v.witness)
        if (p.index >= space.size()) return false;
    const auto& w = v.witness;
    auto m = [&](Point a, Point b, Point c) { return space(a, b, c); };
    auto self = [&](Point a) { return space(a, a, a); };

    Value lhs, rhs;
    bool violated = false;
    switch (v.axiom) {
    case Axiom::MS1:
    case Axiom::PS_i: {
        lhs = self(w[0]);
        rhs = m(w[0], w[0], w[1]);
        const bool all_equal = lhs == self(w[1]) && lhs == rhs;
        violated = (w[0] != w[1] && all_equal && v.direction == IffDirection::only_if) ||
                   (w[0] == w[1] && !all_equal && v.direction == IffDirection::if_);
        break;
    }
    case Axiom::MS2:
        lhs = min_self(space, w[0], w[1], w[2]);
        rhs = m(w[0], w[1], w[2]);
        violated = lhs > rhs;
        break;
    case Axiom::MS3:
    case Axiom::PS_iv:
        lhs = m(w[0], w[0], w[1]);
        rhs = m(w[1], w[1], w[0]);
        violated = lhs != rhs;
        break;
    case Axiom::MS4:
        lhs = excess(space, w[0], w[1], w[2]);
        rhs = excess(space, w[0], w[0], w[3]) + excess(space, w[1], w[1], w[3]) + excess(space, w[2], w[2], w[3]);
        violated = lhs > rhs;
        break;
    case Axiom::PS_ii:
        lhs = m(w[0], w[1], w[2]);
        rhs = m(w[0], w[0], w[3]) + m(w[1], w[1], w[3]) + m(w[2], w[2], w[3]) - self(w[3]);
        violated = lhs > rhs;
        break;
    case Axiom::PS_iii:
        lhs = self(w[0]);
        rhs = m(w[0], w[1], w[2]);
        violated = lhs > rhs;
        break;
    case Axiom::MS1_strong: {
        lhs = self(w[0]);
        rhs = m(w[0], w[1], w[2]);
        const bool all_equal = lhs == self(w[1]) && lhs == self(w[2]) && lhs == rhs;
        const bool same_point = w[0] == w[1] && w[1] == w[2];
        violated = (!same_point && all_equal && v.direction == IffDirection::only_if) ||
                   (same_point && !all_equal && v.direction == IffDirection::if_);
        break;
    }
    }
    return violated && lhs == v.lhs && rhs == v.rhs;
}

}  // namespace msm
