#pragma once

#include "sharpmilnor/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sharpmilnor {

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Line a*x + b*y + c*z = 0 in the real projective plane, normalized so the
// first nonzero coordinate is 1.
struct ProjLine {
    Rat a, b, c;

    static ProjLine make(Rat a, Rat b, Rat c);
    bool operator==(const ProjLine& o) const { return a == o.a && b == o.b && c == o.c; }
    bool is_infinity() const { return a == 0 && b == 0; }
};

// Affine line a*x + b*y = c, normalized like its projective closure.
struct AffLine {
    Rat a, b, c;

    static AffLine make(Rat a, Rat b, Rat c);
    bool vertical() const { return b == 0; }
    Rat slope() const;             // throws on vertical
    Rat vertical_x() const;        // throws on non-vertical
    Rat value_at(const Rat& x) const;  // y of the line at x; throws on vertical
    bool contains(const Point& p) const { return a * p.x + b * p.y == c; }
    ProjLine closure() const { return ProjLine::make(a, b, -c); }
    bool operator==(const AffLine& o) const { return a == o.a && b == o.b && c == o.c; }
};

enum class Mode { Affine, Projective };

struct Arrangement {
    Mode mode = Mode::Affine;
    std::vector<ProjLine> lines;       // projective mode (or closures in affine mode)
    std::vector<AffLine> affine_lines; // affine mode only
    std::vector<std::string> names;

    size_t size() const {
        return mode == Mode::Affine ? affine_lines.size() : lines.size();
    }
    // Projective closure: homogenized lines plus the line at infinity.
    Arrangement projective_closure() const;
};

Arrangement make_affine(std::vector<AffLine> lines, std::vector<std::string> names = {});
Arrangement make_projective(std::vector<ProjLine> lines, std::vector<std::string> names = {});

// Location of a rank-2 lattice element: an affine point or a direction class
// [dx : dy] at infinity (normalized, dy >= 0 and dx = 1 when dy = 0).
struct Location {
    bool at_infinity = false;
    Rat x, y;  // affine point, or direction (dx, dy)
    bool operator==(const Location& o) const {
        return at_infinity == o.at_infinity && x == o.x && y == o.y;
    }
};

struct LatticePoint {
    Location where;
    std::vector<int> incident;  // line indices, ascending
    int multiplicity() const { return static_cast<int>(incident.size()); }
};

// Exact intersection of two distinct affine lines; nullopt when parallel.
// Identical lines are an input error.
std::optional<Point> intersect(const AffLine& l1, const AffLine& l2);

// Intersection of two distinct projective lines as a Location (affine chart z=1).
Location intersect_proj(const ProjLine& l1, const ProjLine& l2);

// All rank-2 intersection classes. In projective mode this includes points at
// infinity; in affine mode only affine points (parallel pairs meet nowhere).
std::vector<LatticePoint> build_lattice(const Arrangement& arr);

// Sum over points of C(m,2) (used by the lattice completeness invariant).
Int lattice_pair_count(const std::vector<LatticePoint>& points);

}  // namespace sharpmilnor
