#pragma once

#include "sharpmilnor/frame.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sharpmilnor {

// Concrete generic polar origin for a sharp frame. V0 = (-R, -lambda*R) sits
// far below and left of the arrangement; the sweep-end data is replaced by an
// east probe (x = xstar) for slanted lines and a bottom ray for verticals.
struct PolarSystem {
    Rat lambda;  // exceeds every finite slope
    Rat radius;  // R
    Rat v0x, v0y;
    Rat xstar;  // > every point x
    Rat ylow;   // < every point y
    bool validated = false;
};

struct PointPolarData {
    std::set<int> upper;            // U(P)
    std::set<int> upper_cone;       // lines of U(P) whose sweep-end facet lies in Cone(P)
    std::set<int> anchor_maxima;    // per-anchor maxima of the slanted part of the upper cone
    std::set<int> h0_guarded;       // vertical members kept by the guarded rule
    std::optional<int> neighbor;    // pencil neighbor, at most one line
};

PolarSystem choose_polar(const SharpFrame& frame);

class PolarContext {
public:
    PolarContext(const SharpFrame& frame, PolarSystem sys);

    const SharpFrame& frame() const { return *frame_; }
    const PolarSystem& sys() const { return sys_; }

    const std::set<int>& upper_set(int point) const;
    const std::set<int>& upper_cone(int point) const;
    // Standard upper-cone-max: per-anchor maxima plus the guarded verticals.
    std::set<int> upper_cone_max(int point) const;
    // Variant used by the last/min pipeline, where the first parallel's row is
    // kept live: its membership follows the plain upper-cone rule.
    std::set<int> upper_cone_max_lastmin(int point) const;
    std::optional<int> neighbor(int point) const;

    // q inside the closed sector at `point` bounded by the extreme incident
    // lines and containing the probe midpoint.
    bool cone_membership(int point, const Point& q) const;

    Point probe(int line) const;  // sweep-end representative f(H)

    // Checks (a) point order = ascending angle, (b) cone well-formedness,
    // (c) the lattice characterization of U(P); returns human-readable
    // violations, empty when the system is sound.
    std::vector<std::string> validate() const;

    // Points in ascending angle about V0 (the global point order).
    const std::vector<int>& point_order() const { return point_order_; }

private:
    const SharpFrame* frame_;
    PolarSystem sys_;
    std::vector<PointPolarData> data_;
    std::vector<int> point_order_;
    std::vector<std::string> pending_violations_;
    bool generic_ok_ = true;

    void compute();
};

}  // namespace sharpmilnor
