#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "msm/axioms.hpp"
#include "msm/core.hpp"
#include "msm/fixedpoint.hpp"

namespace msm {

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
/// two xor-shift-multiply rounds. Portable and fully specified, so seeded
/// streams are identical on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// {0, 1/2, 1, ..., 19/2, 10}
std::vector<Value> default_grid();

struct GenConfig {
    /// Point count, 2..16.
    std::size_t n = 3;
    std::uint64_t seed = 0;
    /// Values drawn for the initial table.
    std::vector<Value> value_grid = default_grid();
    /// Repairs may raise entries up to ceiling_factor * max(value_grid).
    std::uint32_t ceiling_factor = 2;
    std::size_t max_repair_rounds = 50;
    /// Independent draws; trial t uses the stream SplitMix64(seed + t).
    std::uint64_t trials = 1000;
    /// Trials run in parallel when > 1. Results do not depend on it.
    unsigned workers = 1;
};

/// Throws InputError for n outside 2..16, an empty grid, a negative grid value
/// or a zero ceiling_factor.
void check_config(const GenConfig& config);

/// One draw plus repair. Returns a space passing validate_ms, or nothing.
std::optional<MsSpace> gen_ms_trial(const GenConfig& config, std::uint64_t trial);
/// One draw plus repair. Returns a space passing check_partial_s, or nothing.
std::optional<MsSpace> gen_partial_s_trial(const GenConfig& config, std::uint64_t trial);

/// Lowest-index successful trial, or nothing after config.trials failures.
std::optional<MsSpace> gen_ms(const GenConfig& config);
std::optional<MsSpace> gen_partial_s(const GenConfig& config);

struct Separation {
    MsSpace space;
    /// A partial-S violation (PS_iii with distinct points when available).
    Violation witness;
    /// Trial index, or position in the injected list.
    std::uint64_t trial = 0;
    bool injected = false;
};

/// First M_s-space that is not a partial S-metric space. Injected candidates
/// are tried first, in order; then generated trials.
std::optional<Separation> find_ms_not_partial_s(const GenConfig& config, std::span<const MsSpace> injected = {});

/// The witness preferred by find_ms_not_partial_s among a report's violations.
std::optional<Violation> separating_witness(const ValidationReport& partial_report);

/// First admissible map: all n^n maps in lexicographic image order for n <= 4,
/// otherwise config.trials maps sampled from SplitMix64(config.seed).
std::optional<SelfMap> gen_admissible_map(const MsSpace& space, ContractionKind kind,
                                          const std::optional<PhiFunction>& phi, const GenConfig& config);

/// Every admissible map, lexicographic image order. Throws InputError for n > 6.
std::vector<SelfMap> admissible_maps(const MsSpace& space, ContractionKind kind,
                                     const std::optional<PhiFunction>& phi = std::nullopt);

}  // namespace msm
