#pragma once

// Dense copies of a space's value table for the exhaustive sweeps.
//
// When every value shares a common denominator L small enough that all
// scaled entries stay below 2^58, the table is stored as integers v*L and
// the sweeps run in plain int64 (sums of four entries cannot overflow).
// Otherwise the sweeps fall back to Rational. Both are exact.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "msm/core.hpp"

namespace msm::detail {

inline constexpr std::int64_t scaled_limit = std::int64_t{1} << 58;

struct ScaledTable {
    using value_type = std::int64_t;
    std::size_t n = 0;
    std::int64_t denom = 1;
    std::vector<std::int64_t> v;

    std::int64_t at(std::size_t x, std::size_t y, std::size_t z) const { return v[(x * n + y) * n + z]; }
    std::int64_t self(std::size_t x) const { return at(x, x, x); }
    Value to_value(std::int64_t s) const { return Value(s, denom); }
};

struct RationalTable {
    using value_type = Value;
    std::size_t n = 0;
    std::vector<Value> v;

    const Value& at(std::size_t x, std::size_t y, std::size_t z) const { return v[(x * n + y) * n + z]; }
    const Value& self(std::size_t x) const { return at(x, x, x); }
    Value to_value(const Value& s) const { return s; }
};

inline std::optional<ScaledTable> scale_table(const MsSpace& space)
{
    const std::size_t n = space.size();
    ScaledTable t;
    t.n = n;
    __int128 lcm = 1;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t z = 0; z < n; ++z) {
                __int128 d = space(Point{x}, Point{y}, Point{z}).den();
                lcm = lcm / std::gcd(static_cast<std::int64_t>(lcm), static_cast<std::int64_t>(d)) * d;
                if (lcm >= scaled_limit) return std::nullopt;
            }
    t.denom = static_cast<std::int64_t>(lcm);
    t.v.reserve(n * n * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t z = 0; z < n; ++z) {
                const Value& val = space(Point{x}, Point{y}, Point{z});
                __int128 s = static_cast<__int128>(val.num()) * (lcm / val.den());
                if (s >= scaled_limit || s <= -scaled_limit) return std::nullopt;
                t.v.push_back(static_cast<std::int64_t>(s));
            }
    return t;
}

inline RationalTable rational_table(const MsSpace& space)
{
    const std::size_t n = space.size();
    RationalTable t;
    t.n = n;
    t.v.reserve(n * n * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t z = 0; z < n; ++z) t.v.push_back(space(Point{x}, Point{y}, Point{z}));
    return t;
}

/// Calls fn with the fastest exact table available for the space.
template <class Fn>
decltype(auto) with_dense_table(const MsSpace& space, Fn&& fn)
{
    if (auto scaled = scale_table(space)) return fn(*scaled);
    return fn(rational_table(space));
}

}  // namespace msm::detail
