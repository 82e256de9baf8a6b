#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtsp/errors.hpp"
#include "qtsp/permcode.hpp"

namespace qtsp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Planar point set. Permutation entries index points 1-based.
struct EuclideanInstance {
    std::vector<Point> points;
    std::string name;

    int size() const { return static_cast<int>(points.size()); }
};

// Instance translated and scaled so that its smallest enclosing axis-parallel
// square is the unit square: normalized = (original + offset) * scale.
struct NormalizedInstance : EuclideanInstance {
    double scale = 1.0;
    Point offset{0.0, 0.0};
};

// At least 2 points, not all coincident.
void validate(const EuclideanInstance& inst);

NormalizedInstance normalize(const EuclideanInstance& inst);

// Cyclic tour length: consecutive distances in perm order plus the edge from
// the last point back to the first.
double tour_length(const EuclideanInstance& inst, const Permutation& perm);

// Cost of inserting point `new_point` (1-based index) at `position` into the
// cyclic tour over `partial`: d(u,v) + d(v,w) - d(u,w) for the split edge
// (u,w). Positions 1 and |partial|+1 both split the wraparound edge.
double insertion_increment(const EuclideanInstance& inst, std::span<const int> partial,
                           int new_point, int position);

// (2, sqrt(2) * n): bounds valid for every tour of every normalized instance.
std::pair<double, double> length_bounds(int n);

enum class InstanceKind { uniform, two_corner, collinear };

// Deterministic for a fixed seed. `uniform` draws i.i.d. in the unit square;
// `two_corner` splits the points between (0,0) and (1,1); `collinear` spaces
// them evenly on the segment x = 0, y in [0, 1].
EuclideanInstance generate(InstanceKind kind, int n, std::uint64_t seed);

InstanceKind parse_instance_kind(const std::string& text);

}  // namespace qtsp
