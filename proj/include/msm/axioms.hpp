#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "msm/core.hpp"

namespace msm {

/// MS1..MS4: the M_s axioms. PS_i..PS_iv: the partial S-metric conditions.
/// MS1_strong: the optional strengthened identity check
/// (m(x,x,x)=m(y,y,y)=m(z,z,z)=m(x,y,z) iff x=y=z). It is sufficient for MS1
/// but not necessary, so its violations never affect is_ms.
enum class Axiom { MS1, MS2, MS3, MS4, PS_i, PS_ii, PS_iii, PS_iv, MS1_strong };

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);
/// Number of points in a witness for this axiom.
std::size_t witness_arity(Axiom axiom);

/// Which half of an identity biconditional failed (MS1, PS_i, MS1_strong).
/// only_if: distinct points but all compared values equal.
/// if_:     equal points but compared values differ.
enum class IffDirection { none, only_if, if_ };

std::string_view direction_name(IffDirection direction);

/// One failed instance of an axiom, replayable against the raw table.
///
/// lhs/rhs per axiom (witness in brackets):
///   MS1, PS_i  [x y]      lhs = m(x,x,x), rhs = m(x,x,y)
///   MS2        [x y z]    lhs = min_self(x,y,z), rhs = m(x,y,z)        (lhs > rhs)
///   MS3, PS_iv [x y]      lhs = m(x,x,y), rhs = m(y,y,x)               (lhs != rhs)
///   MS4        [x y z t]  lhs = m(x,y,z) - min_self(x,y,z),
///                         rhs = sum of m(p,p,t) - min_self(p,p,t) over p in {x,y,z}
///   PS_ii      [x y z t]  lhs = S(x,y,z), rhs = S(x,x,t)+S(y,y,t)+S(z,z,t)-S(t,t,t)
///   PS_iii     [x y z]    lhs = S(x,x,x), rhs = S(x,y,z)
///   MS1_strong [x y z]    lhs = m(x,x,x), rhs = m(x,y,z)
struct Violation {
    Axiom axiom = Axiom::MS1;
    std::vector<Point> witness;
    Value lhs;
    Value rhs;
    IffDirection direction = IffDirection::none;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationOptions {
    /// Also run MS1_strong (reported, never changes is_ms).
    bool strengthened_identity = false;
    /// Violations kept per axiom; counting continues past the cap.
    std::size_t max_violations_per_axiom = 1000;
};

struct ValidationReport {
    /// Set by validate_ms / classify.
    std::optional<bool> is_ms;
    /// Set by check_partial_s / classify.
    std::optional<bool> is_partial_s;
    /// Grouped by axiom (in enum order), lexicographic witness order within a group.
    std::vector<Violation> violations;
    /// Sum of `checks` over the axioms that define the verdicts.
    std::uint64_t checks_performed = 0;
    std::map<Axiom, std::uint64_t> checks;
    /// Violations found per axiom, including any beyond the cap.
    std::map<Axiom, std::uint64_t> violations_found;
};

// Each sweep enumerates ordered tuples: n^2 pairs for MS1/MS3, n^3 triples for
// MS2, n^4 quadruples for MS4, in both symmetric and strict mode.
std::vector<Violation> check_ms_axiom1(const MsSpace& space);
std::vector<Violation> check_ms_axiom2(const MsSpace& space);
std::vector<Violation> check_ms_axiom3(const MsSpace& space);
std::vector<Violation> check_ms_axiom4(const MsSpace& space);

ValidationReport validate_ms(const MsSpace& space, const ValidationOptions& options = {});
ValidationReport check_partial_s(const MsSpace& space, const ValidationOptions& options = {});

/// validate_ms and check_partial_s merged: both verdicts, all violations.
ValidationReport classify(const MsSpace& space, const ValidationOptions& options = {});

/// Recomputes lhs/rhs from the raw table with plain Rational arithmetic and
/// checks that they match and violate the axiom.
bool replays(const MsSpace& space, const Violation& violation);

}  // namespace msm
