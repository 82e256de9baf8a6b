#include "qtsp/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qtsp {

namespace {

std::string slurp(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail_at(const std::string& origin, std::size_t line, const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

void check_points(const EuclideanInstance& inst, const std::string& origin) {
    if (inst.points.size() < 2)
        throw ParseError(origin + ": instance has " + std::to_string(inst.points.size()) +
                         " points; at least 2 required");
    for (const Point& p : inst.points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw ParseError(origin + ": non-finite coordinate");
}

}  // namespace

EuclideanInstance read_instance_json(std::istream& in, const std::string& origin) {
    const std::string text = slurp(in);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(origin + ": top-level value is not an object");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw ParseError(origin + ": missing \"points\" array");

    EuclideanInstance inst;
    inst.name = doc.value("name", origin);
    for (const auto& entry : doc["points"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw ParseError(origin + ": point " + std::to_string(inst.points.size()) +
                             " is not a pair of numbers");
        inst.points.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
    check_points(inst, origin);
    return inst;
}

void write_instance_json(const EuclideanInstance& inst, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["name"] = inst.name;
    doc["points"] = nlohmann::ordered_json::array();
    for (const Point& p : inst.points) doc["points"].push_back({p.x, p.y});
    out << doc.dump(2) << "\n";
}

EuclideanInstance read_instance_tsplib(std::istream& in, const std::string& origin) {
    EuclideanInstance inst;
    std::string declared_type;
    long dimension = -1;
    bool in_coords = false;
    std::size_t lineno = 0;
    std::string line;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty()) continue;
        if (s == "EOF") break;

        if (!in_coords) {
            if (s == "NODE_COORD_SECTION") {
                if (declared_type.empty())
                    throw UnsupportedFormatError(
                        origin + ": EDGE_WEIGHT_TYPE not declared; only EUC_2D is supported");
                in_coords = true;
                continue;
            }
            const std::size_t colon = s.find(':');
            if (colon == std::string::npos)
                fail_at(origin, lineno, "expected \"KEY : VALUE\" or NODE_COORD_SECTION");
            const std::string key = trim(s.substr(0, colon));
            const std::string value = trim(s.substr(colon + 1));
            if (key == "NAME") {
                inst.name = value;
            } else if (key == "DIMENSION") {
                try {
                    dimension = std::stol(value);
                } catch (const std::exception&) {
                    fail_at(origin, lineno, "DIMENSION is not an integer");
                }
            } else if (key == "EDGE_WEIGHT_TYPE") {
                declared_type = value;
                if (value != "EUC_2D")
                    throw UnsupportedFormatError(origin + ": EDGE_WEIGHT_TYPE " + value +
                                                 " is not supported; only EUC_2D");
            }
            // COMMENT, TYPE, DISPLAY_DATA_TYPE and the rest are ignored.
            continue;
        }

        long index;
        double x, y;
        std::istringstream row(s);
        if (!(row >> index >> x >> y)) fail_at(origin, lineno, "expected \"i x y\"");
        std::string rest;
        if (row >> rest) fail_at(origin, lineno, "trailing content after coordinates");
        if (index != static_cast<long>(inst.points.size()) + 1)
            fail_at(origin, lineno,
                    "node index " + std::to_string(index) + " out of order (expected " +
                        std::to_string(inst.points.size() + 1) + ")");
        inst.points.push_back({x, y});
    }

    if (!in_coords) throw ParseError(origin + ": no NODE_COORD_SECTION found");
    if (dimension >= 0 && dimension != static_cast<long>(inst.points.size()))
        throw ParseError(origin + ": DIMENSION " + std::to_string(dimension) + " but " +
                         std::to_string(inst.points.size()) + " coordinate rows");
    if (inst.name.empty()) inst.name = origin;
    check_points(inst, origin);
    return inst;
}

EuclideanInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");

    std::string ext = std::filesystem::path(path).extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    bool json;
    if (ext == ".json") {
        json = true;
    } else if (ext == ".tsp" || ext == ".tsplib") {
        json = false;
    } else {
        int c;
        while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
        json = (c == '{');
    }

    const std::string stem = std::filesystem::path(path).stem().string();
    EuclideanInstance inst = json ? read_instance_json(in, path) : read_instance_tsplib(in, path);
    if (inst.name == path) inst.name = stem;
    return inst;
}

}  // namespace qtsp
