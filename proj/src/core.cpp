#include "msm/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace msm {

namespace {

bool valid_id(std::string_view id)
{
    if (id.empty() || id.find('#') != std::string_view::npos) return false;
    return std::none_of(id.begin(), id.end(),
                        [](unsigned char c) { return std::isspace(c) || std::iscntrl(c); });
}

void check_in_space(const MsSpace& space, Point p)
{
    if (p.index >= space.size())
        throw InputError("point index " + std::to_string(p.index) + " out of range");
}

}  // namespace

std::optional<Point> MsSpace::find(std::string_view id) const
{
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return Point{static_cast<std::uint32_t>(it - ids_.begin())};
}

Point MsSpace::point(std::string_view id) const
{
    if (auto p = find(id)) return *p;
    throw InputError("unknown point '" + std::string(id) + "'");
}

std::vector<Point> MsSpace::points() const
{
    std::vector<Point> out(size());
    for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Point{i};
    return out;
}

Point MsSpace::Builder::add_point(std::string id)
{
    if (!valid_id(id)) throw InputError("invalid point id '" + id + "'");
    if (find(id)) throw InputError("duplicate point id '" + id + "'");
    if (ids_.size() >= MsSpace::max_points)
        throw InputError("too many points (limit " + std::to_string(MsSpace::max_points) + ")");
    if (!entries_.empty()) throw InputError("points must be declared before values");
    ids_.push_back(std::move(id));
    return Point{static_cast<std::uint32_t>(ids_.size() - 1)};
}

std::optional<Point> MsSpace::Builder::find(std::string_view id) const
{
    auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return std::nullopt;
    return Point{static_cast<std::uint32_t>(it - ids_.begin())};
}

void MsSpace::Builder::check_point(Point p) const
{
    if (p.index >= ids_.size())
        throw InputError("point index " + std::to_string(p.index) + " out of range");
}

MsSpace::Builder::Key MsSpace::Builder::key(Point x, Point y, Point z) const
{
    Key k{x.index, y.index, z.index};
    if (symmetric_) std::sort(k.begin(), k.end());
    return k;
}

void MsSpace::Builder::set(Point x, Point y, Point z, Value value)
{
    check_point(x);
    check_point(y);
    check_point(z);
    if (value.sign() < 0)
        throw InputError("negative value " + value.to_string() + " for (" + ids_[x.index] + "," +
                         ids_[y.index] + "," + ids_[z.index] + ")");
    auto [it, inserted] = entries_.emplace(key(x, y, z), value);
    if (!inserted) {
        throw InputError("duplicate entry for (" + ids_[x.index] + "," + ids_[y.index] + "," +
                         ids_[z.index] + ")");
    }
}

bool MsSpace::Builder::has(Point x, Point y, Point z) const
{
    return entries_.contains(key(x, y, z));
}

MsSpace MsSpace::Builder::build() const
{
    const std::size_t n = ids_.size();
    if (n == 0) throw InputError("space has no points");
    MsSpace space;
    space.ids_ = ids_;
    space.symmetric_ = symmetric_;
    space.table_.resize(n * n * n);
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
            for (std::uint32_t z = 0; z < n; ++z) {
                auto it = entries_.find(key(Point{x}, Point{y}, Point{z}));
                if (it == entries_.end()) {
                    throw InputError("missing entry for (" + ids_[x] + "," + ids_[y] + "," + ids_[z] +
                                     ")");
                }
                space.table_[(x * n + y) * n + z] = it->second;
            }
        }
    }
    return space;
}

SelfMap::SelfMap(const MsSpace& space, std::vector<Point> images) : images_(std::move(images))
{
    if (images_.size() != space.size()) {
        throw InputError("map has " + std::to_string(images_.size()) + " images for a space of " +
                         std::to_string(space.size()) + " points");
    }
    for (Point p : images_) check_in_space(space, p);
}

SelfMap SelfMap::identity(const MsSpace& space) { return SelfMap(space, space.points()); }

SelfMap SelfMap::constant(const MsSpace& space, Point target)
{
    return SelfMap(space, std::vector<Point>(space.size(), target));
}

PhiFunction::PhiFunction(Family family, Rational c) : family_(family), c_(c)
{
    if (c_.sign() <= 0) throw InputError("phi parameter must be positive, got " + c_.to_string());
    if (family_ == Family::linear && c_ >= Rational(1))
        throw InputError("linear phi needs 0 < c < 1, got " + c_.to_string());
    if (family_ == Family::saturating && c_ > Rational(1))
        throw InputError("saturating phi needs 0 < c <= 1, got " + c_.to_string());
}

PhiFunction PhiFunction::parse(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw InputError("phi must look like family:param, got '" + std::string(text) + "'");
    auto family = text.substr(0, colon);
    auto param = Rational::try_parse(text.substr(colon + 1));
    if (!param) throw InputError("bad phi parameter in '" + std::string(text) + "'");
    if (family == "linear") return PhiFunction(Family::linear, *param);
    if (family == "saturating") return PhiFunction(Family::saturating, *param);
    throw InputError("unknown phi family '" + std::string(family) + "'");
}

Value PhiFunction::operator()(const Value& t) const
{
    if (family_ == Family::linear) return c_ * t;
    return c_ * t / (Rational(1) + t);
}

std::string PhiFunction::to_string() const
{
    return (family_ == Family::linear ? "linear:" : "saturating:") + c_.to_string();
}

Value ms_value(const MsSpace& space, Point x, Point y, Point z)
{
    check_in_space(space, x);
    check_in_space(space, y);
    check_in_space(space, z);
    return space(x, y, z);
}

Value ms_value(const MsSpace& space, std::string_view x, std::string_view y, std::string_view z)
{
    return space(space.point(x), space.point(y), space.point(z));
}

Value min_self(const MsSpace& space, Point x, Point y, Point z)
{
    return std::min({ms_value(space, x, x, x), ms_value(space, y, y, y), ms_value(space, z, z, z)});
}

Value min_self(const MsSpace& space, std::string_view x, std::string_view y, std::string_view z)
{
    return min_self(space, space.point(x), space.point(y), space.point(z));
}

Value max_self(const MsSpace& space, Point x, Point y, Point z)
{
    return std::max({ms_value(space, x, x, x), ms_value(space, y, y, y), ms_value(space, z, z, z)});
}

Value max_self(const MsSpace& space, std::string_view x, std::string_view y, std::string_view z)
{
    return max_self(space, space.point(x), space.point(y), space.point(z));
}

Value excess(const MsSpace& space, Point x, Point y, Point z)
{
    return ms_value(space, x, y, z) - min_self(space, x, y, z);
}

MsSpace builtin_example1()
{
    MsSpace::Builder b(true);
    Point p1 = b.add_point("1");
    Point p2 = b.add_point("2");
    Point p3 = b.add_point("3");
    b.set(p1, p2, p3, 6);
    b.set(p1, p1, p2, 8);
    b.set(p2, p2, p1, 8);
    b.set(p1, p1, p1, 8);
    b.set(p1, p1, p3, 7);
    b.set(p3, p3, p1, 7);
    b.set(p3, p3, p2, 7);
    b.set(p2, p2, p3, 7);
    b.set(p2, p2, p2, 9);
    b.set(p3, p3, p3, 5);
    return b.build();
}

MsSpace discrete_space(std::size_t n)
{
    MsSpace::Builder b(true);
    for (std::size_t i = 1; i <= n; ++i) b.add_point(std::to_string(i));
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = x; y < n; ++y)
            for (std::uint32_t z = y; z < n; ++z)
                b.set(Point{x}, Point{y}, Point{z}, (x == y && y == z) ? 0 : 1);
    return b.build();
}

}  // namespace msm
