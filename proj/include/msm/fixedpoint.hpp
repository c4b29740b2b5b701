#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msm/core.hpp"

namespace msm {

/// banach:  m(Tx,Tx,Ty) <= k m(x,x,y),                    k in [0,1)
/// kannan:  m(Tx,Tx,Ty) <= l [m(x,x,Tx) + m(y,y,Ty)],     l in [0,1/2)
/// phi:     m(Tx,Ty,Tz) <= m(x,y,z) - phi(m(x,y,z))
enum class ContractionKind { banach, kannan, phi };

std::string_view kind_name(ContractionKind kind);
std::optional<ContractionKind> parse_kind(std::string_view name);

struct ContractionReport {
    ContractionKind kind = ContractionKind::banach;
    bool admissible = false;
    /// k* or lambda*: the smallest constant satisfying the inequality for every
    /// pair. Unset for phi, and unset when some pair is infeasible.
    std::optional<Value> constant;
    /// banach/kannan: the lexicographically smallest pair attaining the
    /// constant (unset if infeasible). phi: the first violating triple, if any.
    std::vector<Point> witness;
    /// banach/kannan: numerator and denominator of the witness ratio.
    /// phi: m(Tx,Ty,Tz) and m(x,y,z) - phi(m(x,y,z)) at the witness.
    Value lhs;
    Value rhs;
    /// First pair with a zero denominator and positive numerator: no finite
    /// constant works.
    std::optional<std::array<Point, 2>> infeasible_witness;
};

/// Ratio conventions: numerator 0 contributes 0 (including 0/0);
/// positive numerator over 0 makes the map infeasible.
ContractionReport banach_constant(const MsSpace& space, const SelfMap& map);
ContractionReport kannan_constant(const MsSpace& space, const SelfMap& map);
ContractionReport phi_check(const MsSpace& space, const SelfMap& map, const PhiFunction& phi);

/// Dispatches on kind; phi is required for ContractionKind::phi.
ContractionReport analyze_contraction(const MsSpace& space, const SelfMap& map, ContractionKind kind,
                                      const std::optional<PhiFunction>& phi = std::nullopt);

enum class SolveOutcome { fixed_point, cycle, max_iter };

std::string_view outcome_name(SolveOutcome outcome);

struct SolveTrace {
    SolveOutcome outcome = SolveOutcome::max_iter;
    /// x0, T x0, T^2 x0, ... ; ends with the repeated fixed point, or with the
    /// first revisited point of a cycle.
    std::vector<Point> orbit;
    std::optional<Point> fixed_point;
    /// The cycle in orbit order, starting at its first visited point.
    std::vector<Point> cycle;
    /// Number of map applications.
    std::size_t steps = 0;
    /// m(u,u,u) at the fixed point u.
    std::optional<Value> self_distance_at_fix;
    /// Per step: m(x_{n+1},x_{n+1},x_n) - min_self(x_{n+1},x_{n+1},x_n).
    std::vector<Value> step_gaps;
};

/// Picard iteration x_{n+1} = T x_n from x0. Stops at an exact fixed point,
/// a revisited point (cycle of length >= 2), or after max_iter steps.
/// max_iter = 0 means the default of 4n.
SolveTrace picard(const MsSpace& space, const SelfMap& map, Point x0, std::size_t max_iter = 0);

/// { x : T x = x } in point order.
std::vector<Point> enumerate_fixed_points(const SelfMap& map);

struct HarnessResult {
    bool admissible = false;
    /// Exactly one fixed point.
    bool unique_fixed_point = false;
    /// m(u,u,u) = 0 at that fixed point.
    bool self_distance_zero = false;
    /// Picard from every start point ends at that fixed point without a cycle.
    bool picard_converges = false;
    /// All three of the above (false when not admissible).
    bool conclusions_hold = false;
    std::optional<Point> fixed_point;
    ContractionReport report;
    /// One line per failed conclusion.
    std::vector<std::string> details;
};

/// If the contraction is admissible, checks the fixed-point conclusions
/// against the exhaustive oracle. Finite spaces are treated as complete.
HarnessResult theorem_harness(const MsSpace& space, const SelfMap& map, ContractionKind kind,
                              const std::optional<PhiFunction>& phi = std::nullopt);

}  // namespace msm
