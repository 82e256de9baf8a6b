#include "qtsp/geometry.hpp"

#include <algorithm>
#include <limits>

#include "qtsp/rng.hpp"

namespace qtsp {

namespace {

struct Extent {
    double min_x, min_y, width, height;
};

Extent extent_of(const std::vector<Point>& pts) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -min_x, max_y = -min_y;
    for (const Point& p : pts) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    return {min_x, min_y, max_x - min_x, max_y - min_y};
}

}  // namespace

void validate(const EuclideanInstance& inst) {
    if (inst.size() < 2)
        throw DegenerateInstanceError("instance needs at least 2 points");
    const Extent e = extent_of(inst.points);
    if (e.width == 0.0 && e.height == 0.0)
        throw DegenerateInstanceError("all points coincide; zero extent");
}

NormalizedInstance normalize(const EuclideanInstance& inst) {
    validate(inst);
    const Extent e = extent_of(inst.points);
    const double side = std::max(e.width, e.height);
    NormalizedInstance out;
    out.name = inst.name;
    out.offset = {-e.min_x, -e.min_y};
    out.scale = 1.0 / side;
    out.points.reserve(inst.points.size());
    for (const Point& p : inst.points)
        out.points.push_back({(p.x + out.offset.x) * out.scale,
                              (p.y + out.offset.y) * out.scale});
    return out;
}

double tour_length(const EuclideanInstance& inst, const Permutation& perm) {
    if (perm.size() != inst.size())
        throw DimensionError("permutation length " + std::to_string(perm.size()) +
                             " != point count " + std::to_string(inst.size()));
    const int n = perm.size();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const Point a = inst.points[static_cast<std::size_t>(perm.order[static_cast<std::size_t>(i)] - 1)];
        const Point b = inst.points[static_cast<std::size_t>(perm.order[static_cast<std::size_t>((i + 1) % n)] - 1)];
        total += dist(a, b);
    }
    return total;
}

double insertion_increment(const EuclideanInstance& inst, std::span<const int> partial,
                           int new_point, int position) {
    const int t = static_cast<int>(partial.size());
    if (t < 1) throw RangeError("insertion_increment: empty partial tour");
    if (position < 1 || position > t + 1)
        throw RangeError("insertion_increment: position " + std::to_string(position) +
                         " outside [1, " + std::to_string(t + 1) + "]");
    if (new_point < 1 || new_point > inst.size())
        throw RangeError("insertion_increment: point index out of range");
    const Point v = inst.points[static_cast<std::size_t>(new_point - 1)];
    // Positions 1 and t+1 both split the cyclic edge (last, first).
    const int u_idx = (position == 1 || position == t + 1) ? partial[static_cast<std::size_t>(t - 1)]
                                                           : partial[static_cast<std::size_t>(position - 2)];
    const int w_idx = (position == 1 || position == t + 1) ? partial[0]
                                                           : partial[static_cast<std::size_t>(position - 1)];
    const Point u = inst.points[static_cast<std::size_t>(u_idx - 1)];
    const Point w = inst.points[static_cast<std::size_t>(w_idx - 1)];
    return dist(u, v) + dist(v, w) - dist(u, w);
}

std::pair<double, double> length_bounds(int n) {
    if (n < 2) throw RangeError("length_bounds: n must be at least 2");
    return {2.0, std::sqrt(2.0) * n};
}

EuclideanInstance generate(InstanceKind kind, int n, std::uint64_t seed) {
    if (n < 2) throw SizeLimitError("generate: n must be at least 2");
    EuclideanInstance inst;
    inst.points.reserve(static_cast<std::size_t>(n));
    switch (kind) {
        case InstanceKind::uniform: {
            Rng rng(seed);
            inst.name = "uniform-" + std::to_string(n) + "-" + std::to_string(seed);
            for (int i = 0; i < n; ++i) {
                const double x = rng.uniform();
                const double y = rng.uniform();
                inst.points.push_back({x, y});
            }
            break;
        }
        case InstanceKind::two_corner:
            inst.name = "two-corner-" + std::to_string(n);
            for (int i = 0; i < n; ++i)
                inst.points.push_back(i % 2 == 0 ? Point{0.0, 0.0} : Point{1.0, 1.0});
            break;
        case InstanceKind::collinear:
            inst.name = "collinear-" + std::to_string(n);
            for (int i = 0; i < n; ++i)
                inst.points.push_back({0.0, static_cast<double>(i) / (n - 1)});
            break;
    }
    return inst;
}

InstanceKind parse_instance_kind(const std::string& text) {
    if (text == "uniform") return InstanceKind::uniform;
    if (text == "two-corner") return InstanceKind::two_corner;
    if (text == "collinear") return InstanceKind::collinear;
    throw UsageError("unknown instance kind '" + text +
                     "' (expected uniform, two-corner, collinear)");
}

}  // namespace qtsp
