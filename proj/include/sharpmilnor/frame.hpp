#pragma once

#include "sharpmilnor/geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sharpmilnor {

using Mat3 = std::array<std::array<Rat, 3>, 3>;

struct SharpPair {
    int first, second;  // line indices in the projective arrangement
};

// A deconed chart of a sharp projective arrangement:
//   - the chosen pair line is at infinity, the other is the line x = 0,
//   - every affine intersection point has x <= 0,
//   - anchors (points on x = 0) ascend in y.
//
// Lines carry two orderings used everywhere downstream:
//   global order: parallels by ascending x, then the sharp line, then the
//   slanted lines grouped by anchor (ascending y) and sorted by slope;
//   per-line point order: anchor first then strictly decreasing x on slanted
//   lines, ascending y on vertical lines.
struct SharpFrame {
    // Provenance
    SharpPair pair;
    int infinity_choice = 0;  // 0: pair.first at infinity, 1: pair.second
    int orientation = 1;      // -1 composes with y -> -y
    Mat3 transform;           // projective map applied to the input

    // Chart data
    std::vector<AffLine> lines;       // affine images, input order minus the infinity line
    std::vector<std::string> names;
    std::vector<LatticePoint> points; // affine lattice of the chart, polar (angle) order set later
    int sharp_line = -1;              // index into `lines`

    // Orders
    std::vector<int> order;        // line indices sorted by the global order
    std::vector<int> order_pos;    // inverse permutation: order_pos[line] = rank
    std::vector<int> parallels;    // vertical lines (x < 0), ascending x; index k-2 is H_k^{P0}
    std::vector<int> anchors;      // point ids of the anchors, ascending y
    std::vector<std::vector<int>> points_on_line;  // per line, point ids in point order
    std::vector<std::vector<int>> lines_at_point;  // per point, incident lines in global order
    std::vector<int> anchor_of_line;  // anchor position (0-based) of each slanted line, -1 otherwise

    int n() const { return static_cast<int>(lines.size()); }
    int p0_multiplicity() const { return static_cast<int>(parallels.size()) + 2; }
    bool before(int line_a, int line_b) const { return order_pos[line_a] < order_pos[line_b]; }

    // H_k^{P0} for 1 <= k <= m(P0)-1: k = 1 is the sharp line, k >= 2 the
    // parallel with the (k-1)-th largest x. Returns -1 for out-of-range k.
    int p0_line(int k) const {
        if (k == 1) return sharp_line;
        int idx = static_cast<int>(parallels.size()) - (k - 1);
        if (k < 1 || idx < 0 || idx >= static_cast<int>(parallels.size())) return -1;
        return parallels[static_cast<size_t>(idx)];
    }
    // Inverse of p0_line: k with H_k^{P0} = line, or -1 if not through P0.
    int p0_index(int line) const;

    // H_j^{P} (1-based rank in S(P) under the global order); -1 if absent.
    int line_at_point_rank(int point, int rank) const;
    int rank_in_point(int point, int line) const;  // 1-based, -1 if not incident

    int last_point(int line) const;  // final point id in the line's point order
    int min_point(int line) const;   // second point id; throws "isolated line" / too few

    bool is_anchor_point(int point) const;
    int anchor_position(int point) const;  // 0-based position among anchors, -1 otherwise

    Point coords(int point) const {
        return Point{points[static_cast<size_t>(point)].where.x,
                     points[static_cast<size_t>(point)].where.y};
    }
};

// All unordered sharp pairs of a projective arrangement.
std::vector<SharpPair> find_sharp_pairs(const Arrangement& projective);

// Build the chart for one of the four natural frames of a sharp pair.
SharpFrame build_frame(const Arrangement& projective, SharpPair pair, int which_at_infinity,
                       int orientation);

// The four frames of a pair, in order (inf=first,+1), (inf=first,-1),
// (inf=second,+1), (inf=second,-1).
std::vector<SharpFrame> four_frames(const Arrangement& projective, SharpPair pair);

std::string frame_label(const SharpFrame& frame);

}  // namespace sharpmilnor
