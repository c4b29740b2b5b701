#include "msm/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace msm {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

// Splits a line on blanks, dropping everything from '#' on.
std::vector<Token> tokenize(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> significant_lines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto tokens = tokenize(text.substr(pos, end - pos));
        if (!tokens.empty()) out.push_back({number, std::move(tokens)});
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const Line& line, std::size_t token, const std::string& message)
{
    std::size_t column = 1;
    if (token < line.tokens.size())
        column = line.tokens[token].column;
    else if (!line.tokens.empty())  // missing token: just past the last one
        column = line.tokens.back().column + line.tokens.back().text.size() + 1;
    throw ParseError(line.number, column, message);
}

[[noreturn]] void fail_at_end(std::string_view text, const std::string& message)
{
    std::size_t lines = 1;
    for (char c : text)
        if (c == '\n') ++lines;
    throw ParseError(lines, 1, message);
}

void expect_arity(const Line& line, std::size_t count, std::string_view form)
{
    if (line.tokens.size() != count) {
        std::size_t at = std::min(line.tokens.size(), count);
        fail(line, at, "expected '" + std::string(form) + "'");
    }
}

std::size_t parse_count(const Line& line, std::size_t token)
{
    auto text = line.tokens[token].text;
    std::size_t value = 0;
    if (text.empty() || text.size() > 6) fail(line, token, "bad point count '" + std::string(text) + "'");
    for (char c : text) {
        if (c < '0' || c > '9') fail(line, token, "bad point count '" + std::string(text) + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message)
{
}

MsSpace parse_instance(std::string_view text)
{
    auto lines = significant_lines(text);
    std::size_t i = 0;
    auto next = [&](std::string_view what) -> const Line& {
        if (i >= lines.size()) fail_at_end(text, "unexpected end of file, expected " + std::string(what));
        return lines[i++];
    };

    const Line& header = next("'msspace v1'");
    if (header.tokens.size() != 2 || header.tokens[0].text != "msspace" || header.tokens[1].text != "v1")
        fail(header, 0, "expected header 'msspace v1'");

    const Line& count_line = next("'points <n>'");
    if (count_line.tokens[0].text != "points") fail(count_line, 0, "expected 'points <n>'");
    expect_arity(count_line, 2, "points <n>");
    const std::size_t n = parse_count(count_line, 1);
    if (n == 0) fail(count_line, 1, "a space needs at least one point");
    if (n > MsSpace::max_points)
        fail(count_line, 1, "too many points (limit " + std::to_string(MsSpace::max_points) + ")");

    std::vector<std::string> ids;
    for (std::size_t k = 0; k < n; ++k) {
        const Line& line = next("'point <id>'");
        if (line.tokens[0].text != "point")
            fail(line, 0, "expected 'point <id>' (" + std::to_string(n - k) + " more declared)");
        expect_arity(line, 2, "point <id>");
        ids.emplace_back(line.tokens[1].text);
    }

    const Line& sym_line = next("'sym on|off'");
    if (sym_line.tokens[0].text == "point") fail(sym_line, 0, "more points than declared by 'points'");
    if (sym_line.tokens[0].text != "sym") fail(sym_line, 0, "expected 'sym on|off'");
    expect_arity(sym_line, 2, "sym on|off");
    bool symmetric;
    if (sym_line.tokens[1].text == "on")
        symmetric = true;
    else if (sym_line.tokens[1].text == "off")
        symmetric = false;
    else
        fail(sym_line, 1, "expected 'on' or 'off'");

    MsSpace::Builder builder(symmetric);
    for (std::size_t k = 0; k < n; ++k) {
        // Re-find the declaring line for diagnostics.
        const Line& decl = lines[2 + k];
        try {
            builder.add_point(ids[k]);
        } catch (const InputError& e) {
            fail(decl, 1, e.what());
        }
    }

    while (i < lines.size()) {
        const Line& line = lines[i++];
        if (line.tokens[0].text != "val") fail(line, 0, "expected 'val <x> <y> <z> <value>'");
        expect_arity(line, 5, "val <x> <y> <z> <value>");
        Point p[3];
        for (std::size_t k = 0; k < 3; ++k) {
            auto found = builder.find(line.tokens[1 + k].text);
            if (!found) fail(line, 1 + k, "undeclared point '" + std::string(line.tokens[1 + k].text) + "'");
            p[k] = *found;
        }
        auto value = Rational::try_parse(line.tokens[4].text);
        if (!value) fail(line, 4, "malformed value '" + std::string(line.tokens[4].text) + "'");
        if (value->sign() < 0) fail(line, 4, "negative value '" + std::string(line.tokens[4].text) + "'");
        if (builder.has(p[0], p[1], p[2]))
            fail(line, 1, symmetric ? "duplicate entry for this multiset" : "duplicate entry for this triple");
        builder.set(p[0], p[1], p[2], *value);
    }

    try {
        return builder.build();
    } catch (const InputError& e) {
        fail_at_end(text, e.what());
    }
}

std::string serialize_instance(const MsSpace& space)
{
    std::ostringstream os;
    const std::size_t n = space.size();
    os << "msspace v1\n";
    os << "points " << n << "\n";
    for (const auto& id : space.ids()) os << "point " << id << "\n";
    os << "sym " << (space.symmetric() ? "on" : "off") << "\n";
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = space.symmetric() ? x : 0; y < n; ++y)
            for (std::uint32_t z = space.symmetric() ? y : 0; z < n; ++z) {
                Point px{x}, py{y}, pz{z};
                os << "val " << space.id(px) << ' ' << space.id(py) << ' ' << space.id(pz) << ' '
                   << space(px, py, pz) << "\n";
            }
    return os.str();
}

SelfMap parse_map(std::string_view text, const MsSpace& space)
{
    auto lines = significant_lines(text);
    if (lines.empty()) fail_at_end(text, "unexpected end of file, expected 'msmap v1'");
    const Line& header = lines[0];
    if (header.tokens.size() != 2 || header.tokens[0].text != "msmap" || header.tokens[1].text != "v1")
        fail(header, 0, "expected header 'msmap v1'");

    std::vector<std::optional<Point>> images(space.size());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0].text != "map") fail(line, 0, "expected 'map <from> <to>'");
        expect_arity(line, 3, "map <from> <to>");
        auto from = space.find(line.tokens[1].text);
        if (!from) fail(line, 1, "unknown point '" + std::string(line.tokens[1].text) + "'");
        auto to = space.find(line.tokens[2].text);
        if (!to) fail(line, 2, "unknown point '" + std::string(line.tokens[2].text) + "'");
        if (images[from->index]) fail(line, 1, "point '" + space.id(*from) + "' mapped twice");
        images[from->index] = *to;
    }
    std::vector<Point> out;
    for (std::uint32_t k = 0; k < images.size(); ++k) {
        if (!images[k]) fail_at_end(text, "no image for point '" + space.id(Point{k}) + "'");
        out.push_back(*images[k]);
    }
    return SelfMap(space, std::move(out));
}

std::string serialize_map(const SelfMap& map, const MsSpace& space)
{
    std::ostringstream os;
    os << "msmap v1\n";
    for (Point p : space.points()) os << "map " << space.id(p) << ' ' << space.id(map(p)) << "\n";
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace msm
