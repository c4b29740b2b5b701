#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "msm/core.hpp"

namespace msm {

/// Closed ball: { y : m(x,x,y) - min_self(x,x,y) <= radius }, in point order.
/// radius = 0 is allowed; a negative radius throws InputError.
std::vector<Point> ball(const MsSpace& space, Point center, const Value& radius);

/// Gap diagnostics for a finite prefix of a sequence.
///
/// Limits cannot be decided from a prefix. The verdict is a finite-prefix
/// surrogate: the relevant quantities must be exactly constant (zero for
/// convergence) over the last quarter of the prefix, rounded up.
struct GapProfile {
    std::vector<Point> seq;
    std::optional<Point> limit;
    /// convergence_gaps: g_n = m(x_n,x_n,x) - min_self(x_n,x_n,x).
    /// cauchy_profile:   row-major len x len matrix of
    ///                   m(x_n,x_n,x_m) - min_self(x_n,x_n,x_m).
    std::vector<Value> gaps;
    /// convergence_gaps: max_self(x_n,x_n,x) - min_self(x_n,x_n,x).
    /// cauchy_profile:   max_self - min_self over consecutive (x_n,x_n,x_{n+1}).
    std::vector<Value> spread;
    /// "converged" or "cauchy-like" under the finite-prefix surrogate.
    bool verdict = false;
};

/// Length of the tail window used by the surrogate verdicts: ceil(len / 4).
std::size_t tail_length(std::size_t len);

/// Throws InputError on an empty sequence or unknown points.
GapProfile convergence_gaps(const MsSpace& space, std::span<const Point> seq, Point limit);
GapProfile cauchy_profile(const MsSpace& space, std::span<const Point> seq);

struct LemmaCheck {
    bool holds = false;
    Value lhs;
    Value rhs;
};

/// |e(xp,xp,yp) - e(x,x,y)| <= 2 [e(xp,xp,x) + e(yp,yp,y)], e = excess.
/// The inequality behind sequential continuity of the excess.
LemmaCheck lemma1_check(const MsSpace& space, Point xp, Point yp, Point x, Point y);

struct LemmaSweep {
    bool all_hold = true;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    /// (xp, yp, x, y) of the first failure in lexicographic order.
    std::optional<std::array<Point, 4>> first_failure;
};

/// lemma1_check over all n^4 quadruples.
LemmaSweep lemma1_sweep(const MsSpace& space);

}  // namespace msm
