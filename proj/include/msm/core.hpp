#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msm/rational.hpp"

namespace msm {

/// Values of m_s. Non-negative for every table entry; differences of values
/// (gaps, spreads) use the same type.
using Value = Rational;

/// Malformed or inconsistent input: unknown ids, bad tables, bad parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Index of a point in its space, in declaration order.
struct Point {
    std::uint32_t index = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// A finite candidate M_s-space: points plus an exact value for every triple.
///
/// Construction only checks shape (totality, no duplicates, non-negative
/// values). Whether the axioms hold is decided by the axioms module.
/// In symmetric mode one value is stored per multiset {x, y, z}; lookups in any
/// argument order return it.
class MsSpace {
public:
    static constexpr std::size_t max_points = 64;

    class Builder;

    std::size_t size() const { return ids_.size(); }
    bool symmetric() const { return symmetric_; }

    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(Point p) const { return ids_.at(p.index); }
    std::optional<Point> find(std::string_view id) const;
    /// Throws InputError for an unknown id.
    Point point(std::string_view id) const;
    std::vector<Point> points() const;

    const Value& operator()(Point x, Point y, Point z) const
    {
        return table_[(static_cast<std::size_t>(x.index) * size() + y.index) * size() + z.index];
    }

    friend bool operator==(const MsSpace&, const MsSpace&) = default;

private:
    MsSpace() = default;

    std::vector<std::string> ids_;
    std::vector<Value> table_;  // n^3, row-major over (x, y, z)
    bool symmetric_ = true;
};

class MsSpace::Builder {
public:
    explicit Builder(bool symmetric = true) : symmetric_(symmetric) {}

    /// Ids must be non-empty, unique, and free of whitespace and '#'.
    Point add_point(std::string id);
    /// Sets one entry (all permutations in symmetric mode). Throws InputError
    /// on a duplicate entry, unknown point or negative value.
    void set(Point x, Point y, Point z, Value value);
    bool has(Point x, Point y, Point z) const;
    std::size_t size() const { return ids_.size(); }
    bool symmetric() const { return symmetric_; }
    std::optional<Point> find(std::string_view id) const;

    /// Throws InputError naming the first missing entry.
    MsSpace build() const;

private:
    using Key = std::array<std::uint32_t, 3>;
    Key key(Point x, Point y, Point z) const;
    void check_point(Point p) const;

    bool symmetric_;
    std::vector<std::string> ids_;
    std::map<Key, Value> entries_;  // sorted keys in symmetric mode
};

/// A total self-map of one space's points.
class SelfMap {
public:
    /// Throws InputError if images.size() != space size or an image is out of range.
    SelfMap(const MsSpace& space, std::vector<Point> images);

    static SelfMap identity(const MsSpace& space);
    static SelfMap constant(const MsSpace& space, Point target);

    Point operator()(Point p) const { return images_.at(p.index); }
    const std::vector<Point>& images() const { return images_; }
    std::size_t size() const { return images_.size(); }

    friend bool operator==(const SelfMap&, const SelfMap&) = default;

private:
    std::vector<Point> images_;
};

/// Comparison function for the weak (phi) contraction.
/// linear:     phi(t) = c t,         0 < c < 1
/// saturating: phi(t) = c t / (1+t), 0 < c <= 1
class PhiFunction {
public:
    enum class Family { linear, saturating };

    PhiFunction(Family family, Rational c);
    /// "linear:1/2", "saturating:1".
    static PhiFunction parse(std::string_view text);

    Family family() const { return family_; }
    const Rational& parameter() const { return c_; }
    Value operator()(const Value& t) const;
    std::string to_string() const;

private:
    Family family_;
    Rational c_;
};

Value ms_value(const MsSpace& space, Point x, Point y, Point z);
Value ms_value(const MsSpace& space, std::string_view x, std::string_view y, std::string_view z);

/// min of the three self-distances m_s(p,p,p).
Value min_self(const MsSpace& space, Point x, Point y, Point z);
Value min_self(const MsSpace& space, std::string_view x, std::string_view y, std::string_view z);
/// max of the three self-distances.
Value max_self(const MsSpace& space, Point x, Point y, Point z);
Value max_self(const MsSpace& space, std::string_view x, std::string_view y, std::string_view z);

/// m_s(x,y,z) - min_self(x,y,z). Non-negative on any space satisfying axiom 2.
Value excess(const MsSpace& space, Point x, Point y, Point z);

/// The three-point instance {1,2,3}: m(1,2,3)=6, m(1,1,2)=m(2,2,1)=m(1,1,1)=8,
/// m(1,1,3)=m(3,3,1)=m(3,3,2)=m(2,2,3)=7, m(2,2,2)=9, m(3,3,3)=5.
/// An M_s-space that is not a partial S-metric space.
MsSpace builtin_example1();

/// m = 0 when x = y = z, 1 otherwise. Points are "1".."n".
MsSpace discrete_space(std::size_t n);

}  // namespace msm
