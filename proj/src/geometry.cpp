#include "sharpmilnor/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sharpmilnor {

ProjLine ProjLine::make(Rat a, Rat b, Rat c) {
    if (a == 0 && b == 0 && c == 0) throw std::invalid_argument("degenerate line");
    Rat lead = a != 0 ? a : (b != 0 ? b : c);
    return ProjLine{a / lead, b / lead, c / lead};
}

AffLine AffLine::make(Rat a, Rat b, Rat c) {
    if (a == 0 && b == 0) throw std::invalid_argument("degenerate line");
    Rat lead = a != 0 ? a : b;
    return AffLine{a / lead, b / lead, c / lead};
}

Rat AffLine::slope() const {
    if (vertical()) throw std::domain_error("vertical line has no slope");
    return -a / b;
}

Rat AffLine::vertical_x() const {
    if (!vertical()) throw std::domain_error("not vertical");
    return c / a;
}

Rat AffLine::value_at(const Rat& x) const {
    if (vertical()) throw std::domain_error("vertical line");
    return (c - a * x) / b;
}

Arrangement make_affine(std::vector<AffLine> lines, std::vector<std::string> names) {
    Arrangement arr;
    arr.mode = Mode::Affine;
    arr.affine_lines = std::move(lines);
    for (size_t i = 0; i < arr.affine_lines.size(); ++i)
        arr.lines.push_back(arr.affine_lines[i].closure());
    if (names.empty())
        for (size_t i = 0; i < arr.affine_lines.size(); ++i)
            names.push_back("L" + std::to_string(i + 1));
    arr.names = std::move(names);
    for (size_t i = 0; i < arr.lines.size(); ++i)
        for (size_t j = i + 1; j < arr.lines.size(); ++j)
            if (arr.lines[i] == arr.lines[j]) throw std::invalid_argument("duplicate line");
    return arr;
}

Arrangement make_projective(std::vector<ProjLine> lines, std::vector<std::string> names) {
    Arrangement arr;
    arr.mode = Mode::Projective;
    arr.lines = std::move(lines);
    if (names.empty())
        for (size_t i = 0; i < arr.lines.size(); ++i)
            names.push_back("L" + std::to_string(i + 1));
    arr.names = std::move(names);
    for (size_t i = 0; i < arr.lines.size(); ++i)
        for (size_t j = i + 1; j < arr.lines.size(); ++j)
            if (arr.lines[i] == arr.lines[j]) throw std::invalid_argument("duplicate line");
    return arr;
}

Arrangement Arrangement::projective_closure() const {
    if (mode == Mode::Projective) return *this;
    std::vector<ProjLine> closed = lines;
    std::vector<std::string> n = names;
    closed.push_back(ProjLine::make(Rat(0), Rat(0), Rat(1)));
    n.push_back("Hinf");
    return make_projective(std::move(closed), std::move(n));
}

std::optional<Point> intersect(const AffLine& l1, const AffLine& l2) {
    if (l1 == l2) throw std::invalid_argument("duplicate line");
    Rat det = l1.a * l2.b - l2.a * l1.b;
    if (det == 0) return std::nullopt;
    return Point{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

Location intersect_proj(const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2) throw std::invalid_argument("duplicate line");
    // Cross product of coefficient vectors gives the intersection point [x:y:z].
    Rat x = l1.b * l2.c - l1.c * l2.b;
    Rat y = l1.c * l2.a - l1.a * l2.c;
    Rat z = l1.a * l2.b - l1.b * l2.a;
    Location loc;
    if (z != 0) {
        loc.at_infinity = false;
        loc.x = x / z;
        loc.y = y / z;
    } else {
        loc.at_infinity = true;
        // Normalize the direction class [x : y].
        if (y != 0) {
            loc.x = x / y;
            loc.y = 1;
        } else {
            loc.x = 1;
            loc.y = 0;
        }
    }
    return loc;
}

namespace {

std::tuple<bool, Rat, Rat> location_key(const Location& loc) {
    return {loc.at_infinity, loc.x, loc.y};
}

}  // namespace

std::vector<LatticePoint> build_lattice(const Arrangement& arr) {
    if (arr.size() < 2) throw std::invalid_argument("need at least 2 lines");
    std::map<std::tuple<bool, Rat, Rat>, LatticePoint> by_location;
    size_t n = arr.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Location loc;
            if (arr.mode == Mode::Affine) {
                auto p = intersect(arr.affine_lines[i], arr.affine_lines[j]);
                if (!p) continue;
                loc = Location{false, p->x, p->y};
            } else {
                loc = intersect_proj(arr.lines[i], arr.lines[j]);
            }
            auto& entry = by_location[location_key(loc)];
            entry.where = loc;
            auto add = [&entry](int idx) {
                if (std::find(entry.incident.begin(), entry.incident.end(), idx) ==
                    entry.incident.end())
                    entry.incident.push_back(idx);
            };
            add(static_cast<int>(i));
            add(static_cast<int>(j));
        }
    }
    std::vector<LatticePoint> points;
    for (auto& [key, pt] : by_location) {
        std::sort(pt.incident.begin(), pt.incident.end());
        points.push_back(std::move(pt));
    }
    return points;
}

Int lattice_pair_count(const std::vector<LatticePoint>& points) {
    Int total = 0;
    for (const auto& p : points) {
        Int m = p.multiplicity();
        total += m * (m - 1) / 2;
    }
    return total;
}

}  // namespace sharpmilnor
