#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace msm {

/// Exact rational number with a normalized int64 numerator/denominator pair.
///
/// The denominator is always positive and gcd(num, den) == 1, so equal values
/// have equal representations. Intermediate products are formed in 128 bits;
/// a result that does not fit back into 64 bits throws std::overflow_error
/// instead of wrapping. Nothing in this type ever rounds.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    /// Accepts "7", "3.5", "7/2", with an optional leading '-'.
    static std::optional<Rational> try_parse(std::string_view text);
    /// As try_parse, throwing std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    /// "p/q", or just "p" for integers.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace msm
