#pragma once

/// @file tsplib.hpp
/// @brief TSPLIB reader/writer for the EUC_2D subset, plus the reference
/// table of known-best tour lengths for the 48 benchmark instances.
///
/// Node ids are 1-based on disk and 0-based everywhere else; the conversion
/// happens here and nowhere else.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace fss::tsplib {

class TsplibError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed header or data line. The message names the offending line.
class ParseError : public TsplibError {
  public:
    using TsplibError::TsplibError;
};

/// File missing or unreadable.
class IoError : public TsplibError {
  public:
    using TsplibError::TsplibError;
};

class UnsupportedTypeError : public TsplibError {
  public:
    using TsplibError::TsplibError;
};

/// Dimension missing, too small, or disagreeing with the coordinate section.
class DimensionError : public TsplibError {
  public:
    using TsplibError::TsplibError;
};

enum class EdgeWeightType { euc_2d };

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

struct RawInstance {
    std::string name;
    std::size_t dimension = 0;
    std::vector<Point> coords;
    EdgeWeightType edge_weight_type = EdgeWeightType::euc_2d;

    friend bool operator==(const RawInstance&, const RawInstance&) = default;
};

/// A parsed `.tour` / `.opt.tour` file; `order` is 0-based.
struct TourFile {
    std::string name;
    std::size_t dimension = 0;
    std::vector<int> order;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

inline std::string where(std::size_t line_no, std::string_view line) {
    return "line " + std::to_string(line_no) + ": '" + std::string(trim(line)) + "'";
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
    T value{};
    // from_chars rejects a leading '+', which some generators emit.
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

/// Splits "KEY: value" / "KEY : value" / "KEY" into an upper-cased key and
/// the trimmed value.
inline std::pair<std::string, std::string_view> split_keyword(std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
        return {upper(trim(line)), {}};
    return {upper(trim(line.substr(0, colon))), trim(line.substr(colon + 1))};
}

struct Header {
    std::string name;
    std::string type;
    std::optional<std::size_t> dimension;
    std::string edge_weight_type;
};

inline bool is_known_keyword(const std::string& key) {
    static constexpr std::array<std::string_view, 11> keys = {
        "NAME",           "TYPE",          "COMMENT",         "DIMENSION",
        "CAPACITY",       "EDGE_WEIGHT_TYPE", "EDGE_WEIGHT_FORMAT", "EDGE_DATA_FORMAT",
        "NODE_COORD_TYPE", "DISPLAY_DATA_TYPE", "EOF"};
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

/// Consumes header lines up to (not including) the line whose keyword is one
/// of `sections`. Returns the index of that line, or lines.size().
inline std::size_t read_header(const std::vector<std::string_view>& lines,
                               std::initializer_list<std::string_view> sections,
                               Header& header) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto line = trim(lines[i]);
        if (line.empty())
            continue;
        auto [key, value] = split_keyword(line);
        if (std::find(sections.begin(), sections.end(), key) != sections.end())
            return i;
        if (!is_known_keyword(key) || (key != "EOF" && line.find(':') == std::string_view::npos))
            throw ParseError("malformed header at " + where(i + 1, lines[i]));
        if (key == "NAME") {
            header.name = std::string(value);
        } else if (key == "TYPE") {
            // Some files append a free-form suffix, e.g. "TSP (M.~Hofmeister)".
            auto words = split_ws(value);
            header.type = words.empty() ? std::string{} : upper(words.front());
        } else if (key == "DIMENSION") {
            auto dim = parse_number<long long>(value);
            if (!dim || *dim < 0)
                throw ParseError("bad DIMENSION at " + where(i + 1, lines[i]));
            header.dimension = static_cast<std::size_t>(*dim);
        } else if (key == "EDGE_WEIGHT_TYPE") {
            header.edge_weight_type = upper(value);
        } else if (key == "EOF") {
            return lines.size();
        }
    }
    return lines.size();
}

} // namespace detail

/// Parses a TSPLIB `.tsp` file restricted to TYPE TSP / EDGE_WEIGHT_TYPE EUC_2D.
inline RawInstance parse_instance(std::string_view text) {
    using namespace detail;
    auto lines = split_lines(text);
    Header header;
    auto section = read_header(lines, {"NODE_COORD_SECTION"}, header);

    if (!header.type.empty() && header.type != "TSP")
        throw UnsupportedTypeError("unsupported problem TYPE '" + header.type + "' (only TSP)");
    if (header.edge_weight_type.empty())
        throw ParseError("missing EDGE_WEIGHT_TYPE");
    if (header.edge_weight_type != "EUC_2D")
        throw UnsupportedTypeError("unsupported EDGE_WEIGHT_TYPE '" + header.edge_weight_type +
                                   "' (only EUC_2D)");
    if (!header.dimension)
        throw DimensionError("missing DIMENSION");
    if (*header.dimension < 3)
        throw DimensionError("DIMENSION " + std::to_string(*header.dimension) +
                             " is below the minimum of 3");
    if (section == lines.size())
        throw ParseError("missing NODE_COORD_SECTION");

    const std::size_t n = *header.dimension;
    RawInstance raw;
    raw.name = header.name;
    raw.dimension = n;
    raw.coords.resize(n);
    std::vector<bool> seen(n, false);
    std::size_t count = 0;

    for (std::size_t i = section + 1; i < lines.size(); ++i) {
        auto line = trim(lines[i]);
        if (line.empty())
            continue;
        if (upper(line) == "EOF")
            break;
        auto tokens = split_ws(line);
        if (tokens.size() != 3)
            throw ParseError("expected '<id> <x> <y>' at " + where(i + 1, lines[i]));
        auto id = parse_number<long long>(tokens[0]);
        auto x = parse_number<double>(tokens[1]);
        auto y = parse_number<double>(tokens[2]);
        if (!id || !x || !y)
            throw ParseError("bad coordinate record at " + where(i + 1, lines[i]));
        if (*id < 1 || static_cast<std::size_t>(*id) > n)
            throw DimensionError("node id " + std::to_string(*id) + " outside 1.." +
                                 std::to_string(n) + " at " + where(i + 1, lines[i]));
        auto idx = static_cast<std::size_t>(*id - 1);
        if (seen[idx])
            throw ParseError("duplicate node id at " + where(i + 1, lines[i]));
        seen[idx] = true;
        raw.coords[idx] = Point{*x, *y};
        ++count;
    }
    if (count != n)
        throw DimensionError("DIMENSION is " + std::to_string(n) + " but " +
                             std::to_string(count) + " coordinates were given");
    return raw;
}

/// Writes `raw` as TSPLIB text. Coordinates use the shortest representation
/// that parses back to the same double.
inline std::string serialize_instance(const RawInstance& raw) {
    auto fmt = [](double v) {
        std::array<char, 64> buf{};
        auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        return std::string(buf.data(), ptr);
    };
    std::string out;
    out += "NAME : " + raw.name + "\n";
    out += "TYPE : TSP\n";
    out += "DIMENSION : " + std::to_string(raw.dimension) + "\n";
    out += "EDGE_WEIGHT_TYPE : EUC_2D\n";
    out += "NODE_COORD_SECTION\n";
    for (std::size_t i = 0; i < raw.coords.size(); ++i)
        out += std::to_string(i + 1) + " " + fmt(raw.coords[i].x) + " " + fmt(raw.coords[i].y) + "\n";
    out += "EOF\n";
    return out;
}

/// Parses a TSPLIB tour file (TOUR_SECTION terminated by -1).
inline TourFile parse_tour(std::string_view text) {
    using namespace detail;
    auto lines = split_lines(text);
    Header header;
    auto section = read_header(lines, {"TOUR_SECTION"}, header);
    if (!header.type.empty() && header.type != "TOUR")
        throw UnsupportedTypeError("expected TYPE TOUR, got '" + header.type + "'");
    if (section == lines.size())
        throw ParseError("missing TOUR_SECTION");

    TourFile tour;
    tour.name = header.name;
    bool terminated = false;
    for (std::size_t i = section + 1; i < lines.size() && !terminated; ++i) {
        auto line = trim(lines[i]);
        if (line.empty())
            continue;
        if (upper(line) == "EOF")
            break;
        for (auto token : split_ws(line)) {
            auto id = parse_number<long long>(token);
            if (!id)
                throw ParseError("bad tour entry at " + where(i + 1, lines[i]));
            if (*id == -1) {
                terminated = true;
                break;
            }
            if (*id < 1)
                throw ParseError("bad node id at " + where(i + 1, lines[i]));
            tour.order.push_back(static_cast<int>(*id - 1));
        }
    }
    tour.dimension = header.dimension.value_or(tour.order.size());
    if (tour.order.size() != tour.dimension)
        throw DimensionError("tour lists " + std::to_string(tour.order.size()) +
                             " nodes but DIMENSION is " + std::to_string(tour.dimension));
    return tour;
}

/// Writes a 0-based node order as a 1-based TSPLIB tour file.
inline std::string serialize_tour(std::string_view name, const std::vector<int>& order,
                                  std::string_view comment = {}) {
    std::string out;
    out += "NAME : " + std::string(name) + "\n";
    if (!comment.empty())
        out += "COMMENT : " + std::string(comment) + "\n";
    out += "TYPE : TOUR\n";
    out += "DIMENSION : " + std::to_string(order.size()) + "\n";
    out += "TOUR_SECTION\n";
    for (int v : order)
        out += std::to_string(v + 1) + "\n";
    out += "-1\nEOF\n";
    return out;
}

/// One row of the published comparison: tour lengths per method plus the
/// best known length. GRASP/FSS with 2-opt, GRASP/DCTSP/FSS with 3-opt.
struct ReferenceRow {
    std::string_view name;
    std::int64_t grasp_2opt;
    std::int64_t fss_2opt;
    std::int64_t grasp_3opt;
    std::int64_t dctsp;
    std::int64_t fss_3opt;
    std::int64_t known_best;
};

inline constexpr std::array<ReferenceRow, 48> reference_results{{
    {"eil51", 426, 426, 426, 426, 426, 426},
    {"berlin52", 7542, 7542, 7542, 7542, 7542, 7542},
    {"pr76", 108351, 108159, 108159, 108159, 108159, 108159},
    {"rat99", 1223, 1211, 1211, 1211, 1211, 1211},
    {"kroA100", 21282, 21282, 21282, 21282, 21282, 21282},
    {"kroB100", 22157, 22141, 22141, 22141, 22141, 22141},
    {"kroC100", 20802, 20749, 20749, 20749, 20749, 20749},
    {"kroD100", 21468, 21309, 21294, 21294, 21294, 21294},
    {"kroE100", 22106, 22100, 22068, 22068, 22068, 22068},
    {"rd100", 7960, 7910, 7910, 7910, 7910, 7910},
    {"eil101", 638, 629, 629, 629, 629, 629},
    {"lin105", 14379, 14379, 14379, 14379, 14379, 14379},
    {"pr107", 44394, 44303, 44303, 44303, 44303, 44303},
    {"pr124", 59159, 59030, 59030, 59030, 59030, 59030},
    {"ch130", 6135, 6110, 6110, 6110, 6110, 6110},
    {"pr136", 98614, 96920, 96772, 96772, 96772, 96772},
    {"pr144", 58554, 58537, 58537, 58537, 58537, 58537},
    {"ch150", 6586, 6549, 6528, 6528, 6528, 6528},
    {"kroA150", 26768, 26524, 26524, 26525, 26524, 26524},
    {"pr152", 74315, 73682, 73682, 73682, 73682, 73682},
    {"rat195", 2391, 2330, 2331, 2323, 2323, 2323},
    {"kroA200", 29803, 29368, 29380, 29382, 29368, 29368},
    {"kroB200", 29909, 29447, 29482, 29437, 29437, 29437},
    {"ts225", 127485, 127301, 126643, 126643, 126643, 126643},
    {"pr226", 80714, 80369, 80414, 80369, 80369, 80369},
    {"gil262", 2456, 2378, 2385, 2379, 2378, 2378},
    {"pr264", 50744, 49135, 49135, 49135, 49135, 49135},
    {"a280", 2658, 2584, 2589, 2579, 2579, 2579},
    {"pr299", 49522, 48256, 48235, 48207, 48191, 48191},
    {"rd400", 15986, 15322, 15385, 15299, 15284, 15281},
    {"fl417", 12066, 11883, 11895, 11883, 11871, 11861},
    {"pr439", 110564, 107259, 107401, 107303, 107217, 107217},
    {"pcb442", 52790, 50945, 50946, 50860, 50846, 50778},
    {"d493", 36192, 35055, 35253, 35136, 35018, 35002},
    {"rat575", 7143, 6795, 6863, 6814, 6776, 6773},
    {"p654", 35113, 34812, 34707, 34658, 34645, 34643},
    {"d657", 51226, 49258, 49531, 49110, 49014, 48912},
    {"rat783", 9352, 8869, 8897, 8848, 8815, 8806},
    {"pr1002", 276251, 264737, 262060, 260218, 259512, 259045},
    {"pcb1173", 61210, 57788, 57676, 57061, 56965, 56892},
    {"d1291", 54537, 51026, 51616, 51099, 50862, 50801},
    {"rl1304", 270441, 255867, 255185, 253842, 253361, 252948},
    {"rl1323", 288538, 271837, 273115, 271914, 270678, 270199},
    {"fl1400", 21044, 20398, 20310, 20167, 20149, 20127},
    {"fl1577", 23274, 22512, 22427, 22352, 22300, 22249},
    {"rl1889", 339151, 322883, 319250, 317825, 317801, 316536},
    {"d2103", 86179, 81197, 81312, 81078, 80551, 80450},
    {"pr2392", 409970, 387169, 386017, 380030, 379307, 378032},
}};

inline const ReferenceRow* reference_row(std::string_view name) {
    for (const auto& row : reference_results)
        if (row.name == name)
            return &row;
    return nullptr;
}

/// Best known tour length for one of the 48 benchmark instances.
inline std::optional<std::int64_t> known_best(std::string_view name) {
    if (const auto* row = reference_row(name))
        return row->known_best;
    return std::nullopt;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read " + path.string());
    return text.str();
}

inline RawInstance load_instance(const std::filesystem::path& path) {
    try {
        return parse_instance(read_file(path));
    } catch (const IoError&) {
        throw;
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const UnsupportedTypeError& e) {
        throw UnsupportedTypeError(path.string() + ": " + e.what());
    } catch (const DimensionError& e) {
        throw DimensionError(path.string() + ": " + e.what());
    }
}

inline TourFile load_tour(const std::filesystem::path& path) { return parse_tour(read_file(path)); }

} // namespace fss::tsplib
