#include "msm/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace msm {

namespace {

using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b)
{
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(wide v)
{
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

std::optional<std::int64_t> parse_digits(std::string_view s)
{
    if (!all_digits(s)) return std::nullopt;
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den)
{
    if (den == 0) throw std::domain_error("rational division by zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits(num) || !fits(den)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

std::optional<Rational> Rational::try_parse(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    std::optional<Rational> value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_digits(text.substr(0, slash));
        auto den = parse_digits(text.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        value = Rational(*num, *den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        // 18 fractional digits keeps 10^k inside int64.
        if (!all_digits(whole) || !all_digits(frac) || frac.size() > 18) return std::nullopt;
        auto w = parse_digits(whole);
        auto f = parse_digits(frac);
        if (!w || !f) return std::nullopt;
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        try {
            value = Rational(*w) + Rational(*f, scale);
        } catch (const std::overflow_error&) {
            return std::nullopt;
        }
    } else {
        auto w = parse_digits(text);
        if (!w) return std::nullopt;
        value = Rational(*w);
    }
    return negative ? -*value : *value;
}

Rational Rational::parse(std::string_view text)
{
    if (auto r = try_parse(text)) return *r;
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
}

std::string Rational::to_string() const
{
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs)
{
    wide g = wide_gcd(den_, rhs.den_);
    wide num = static_cast<wide>(num_) * (rhs.den_ / g) + static_cast<wide>(rhs.num_) * (den_ / g);
    wide den = static_cast<wide>(den_) * (rhs.den_ / g);
    return *this = from_wide(num, den);
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs)
{
    return *this = from_wide(static_cast<wide>(num_) * rhs.num_, static_cast<wide>(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = from_wide(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    wide l = static_cast<wide>(lhs.num_) * rhs.den_;
    wide r = static_cast<wide>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace msm
