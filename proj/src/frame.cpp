#include "sharpmilnor/frame.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sharpmilnor {

namespace {

Rat det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

// Image of a line under the point map x' = M x: coefficients transform by the
// inverse transpose; we use the adjugate (projective scale is irrelevant).
std::array<Rat, 3> line_image(const Mat3& m, const std::array<Rat, 3>& coeffs) {
    Mat3 adj;
    adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj[1][0] = -(m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj[0][1] = -(m[0][1] * m[2][2] - m[0][2] * m[2][1]);
    adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj[2][1] = -(m[0][0] * m[2][1] - m[0][1] * m[2][0]);
    adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj[1][2] = -(m[0][0] * m[1][2] - m[0][2] * m[1][0]);
    adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    // l'(x') = l(x) with x = M^{-1} x', so l' = l * M^{-1} and
    // l'_j = sum_i l_i adj[i][j] up to the determinant scalar.
    std::array<Rat, 3> out{};
    for (int j = 0; j < 3; ++j) {
        Rat s = 0;
        for (int i = 0; i < 3; ++i) s += coeffs[i] * adj[i][j];
        out[j] = s;
    }
    return out;
}

std::array<Rat, 3> apply_point(const Mat3& m, const std::array<Rat, 3>& p) {
    std::array<Rat, 3> out{};
    for (int i = 0; i < 3; ++i) out[i] = m[i][0] * p[0] + m[i][1] * p[1] + m[i][2] * p[2];
    return out;
}

void clear_denominators(Mat3& m) {
    for (int i = 0; i < 3; ++i) {
        Int lcm = 1;
        for (int j = 0; j < 3; ++j) lcm = boost::multiprecision::lcm(lcm, denominator(m[i][j]));
        Int g = 0;
        for (int j = 0; j < 3; ++j) {
            m[i][j] *= Rat(lcm);
            g = boost::multiprecision::gcd(g, numerator(m[i][j]));
        }
        if (g != 0)
            for (int j = 0; j < 3; ++j) m[i][j] /= Rat(g);
    }
}

// Chart transform for the pair: row0 = other-line functional (-> x'),
// row1 = completing standard basis vector (-> y'), row2 = infinity-line
// functional (-> z'). The completion is the e_i with the smallest nonzero
// |det|, ties to the smallest i.
Mat3 chart_transform(const ProjLine& at_infinity, const ProjLine& sharp) {
    std::array<Rat, 3> kinf{at_infinity.a, at_infinity.b, at_infinity.c};
    std::array<Rat, 3> ksh{sharp.a, sharp.b, sharp.c};
    std::optional<Mat3> best;
    Rat best_abs;
    for (int i = 0; i < 3; ++i) {
        Mat3 m{};
        for (int j = 0; j < 3; ++j) {
            m[0][j] = ksh[j];
            m[1][j] = (j == i) ? Rat(1) : Rat(0);
            m[2][j] = kinf[j];
        }
        Rat d = det3(m);
        if (d == 0) continue;
        Rat ad = d < 0 ? -d : d;
        if (!best || ad < best_abs) {
            best = m;
            best_abs = ad;
        }
    }
    if (!best) throw std::logic_error("no nonsingular chart completion");
    Mat3 m = *best;
    clear_denominators(m);
    return m;
}

Mat3 diag_transform(Rat dx, Rat dy) {
    Mat3 m{};
    m[0][0] = dx;
    m[1][1] = dy;
    m[2][2] = 1;
    return m;
}

}  // namespace

std::vector<SharpPair> find_sharp_pairs(const Arrangement& projective) {
    if (projective.mode != Mode::Projective) throw std::invalid_argument("projective arrangement required");
    if (projective.size() < 3) throw std::invalid_argument("need at least 3 lines");
    auto lattice = build_lattice(projective);
    std::vector<SharpPair> result;
    int n = static_cast<int>(projective.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // Chart with line i at infinity; test all off-pair points strictly
            // on one side of line j's image.
            Mat3 m = chart_transform(projective.lines[static_cast<size_t>(i)],
                                     projective.lines[static_cast<size_t>(j)]);
            int seen = 0;  // bit 1: positive side, bit 2: negative side
            bool sharp = true;
            for (const auto& pt : lattice) {
                bool on_i = std::find(pt.incident.begin(), pt.incident.end(), i) != pt.incident.end();
                bool on_j = std::find(pt.incident.begin(), pt.incident.end(), j) != pt.incident.end();
                if (on_i || on_j) continue;
                std::array<Rat, 3> h{};
                if (pt.where.at_infinity)
                    h = {pt.where.x, pt.where.y, Rat(0)};
                else
                    h = {pt.where.x, pt.where.y, Rat(1)};
                auto im = apply_point(m, h);
                if (im[2] == 0 || im[0] == 0) {
                    // On the pair after transform: cannot happen for off-pair points.
                    sharp = false;
                    break;
                }
                Rat side = im[0] / im[2];
                seen |= side > 0 ? 1 : 2;
                if (seen == 3) {
                    sharp = false;
                    break;
                }
            }
            if (sharp) result.push_back(SharpPair{i, j});
        }
    }
    return result;
}

int SharpFrame::p0_index(int line) const {
    if (line == sharp_line) return 1;
    auto it = std::find(parallels.begin(), parallels.end(), line);
    if (it == parallels.end()) return -1;
    return static_cast<int>(parallels.size()) - static_cast<int>(it - parallels.begin()) + 1;
}

int SharpFrame::line_at_point_rank(int point, int rank) const {
    const auto& s = lines_at_point[static_cast<size_t>(point)];
    if (rank < 1 || rank > static_cast<int>(s.size())) return -1;
    return s[static_cast<size_t>(rank - 1)];
}

int SharpFrame::rank_in_point(int point, int line) const {
    const auto& s = lines_at_point[static_cast<size_t>(point)];
    auto it = std::find(s.begin(), s.end(), line);
    if (it == s.end()) return -1;
    return static_cast<int>(it - s.begin()) + 1;
}

int SharpFrame::last_point(int line) const {
    const auto& pts = points_on_line[static_cast<size_t>(line)];
    if (pts.empty()) throw std::domain_error("isolated line");
    return pts.back();
}

int SharpFrame::min_point(int line) const {
    const auto& pts = points_on_line[static_cast<size_t>(line)];
    if (pts.empty()) throw std::domain_error("isolated line");
    if (pts.size() < 2) throw std::domain_error("line has a single point");
    return pts[1];
}

bool SharpFrame::is_anchor_point(int point) const { return anchor_position(point) >= 0; }

int SharpFrame::anchor_position(int point) const {
    auto it = std::find(anchors.begin(), anchors.end(), point);
    return it == anchors.end() ? -1 : static_cast<int>(it - anchors.begin());
}

SharpFrame build_frame(const Arrangement& projective, SharpPair pair, int which_at_infinity,
                       int orientation) {
    if (projective.mode != Mode::Projective) throw std::invalid_argument("projective arrangement required");
    int inf_idx = which_at_infinity == 0 ? pair.first : pair.second;
    int sharp_idx = which_at_infinity == 0 ? pair.second : pair.first;

    Mat3 m = chart_transform(projective.lines[static_cast<size_t>(inf_idx)],
                             projective.lines[static_cast<size_t>(sharp_idx)]);

    // Map all lattice points; decide whether x -> -x is needed.
    auto lattice = build_lattice(projective);
    bool any_positive = false, any_negative = false;
    for (const auto& pt : lattice) {
        bool on_pair = false;
        for (int idx : pt.incident)
            if (idx == inf_idx || idx == sharp_idx) { on_pair = true; break; }
        std::array<Rat, 3> h = pt.where.at_infinity
                                   ? std::array<Rat, 3>{pt.where.x, pt.where.y, Rat(0)}
                                   : std::array<Rat, 3>{pt.where.x, pt.where.y, Rat(1)};
        auto im = apply_point(m, h);
        if (im[2] == 0) {
            if (!on_pair) throw std::invalid_argument("pair is not sharp");
            continue;
        }
        Rat x = im[0] / im[2];
        if (x > 0) any_positive = true;
        if (x < 0) any_negative = true;
        if (x != 0 && on_pair) throw std::logic_error("pair point off the sharp image");
        if (!on_pair && x == 0) throw std::logic_error("off-pair point on the sharp image");
    }
    if (any_positive && any_negative) throw std::invalid_argument("pair is not sharp");
    if (any_positive) m = mat_mul(diag_transform(Rat(-1), Rat(1)), m);
    if (orientation == -1) m = mat_mul(diag_transform(Rat(1), Rat(-1)), m);
    clear_denominators(m);

    SharpFrame frame;
    frame.pair = pair;
    frame.infinity_choice = which_at_infinity;
    frame.orientation = orientation;
    frame.transform = m;

    // Affine images of all lines except the one at infinity.
    for (size_t i = 0; i < projective.size(); ++i) {
        if (static_cast<int>(i) == inf_idx) continue;
        auto im = line_image(m, {projective.lines[i].a, projective.lines[i].b,
                                 projective.lines[i].c});
        // a x + b y + c z = 0  ->  affine a x + b y = -c
        if (im[0] == 0 && im[1] == 0) throw std::logic_error("line mapped to infinity");
        frame.lines.push_back(AffLine::make(im[0], im[1], -im[2]));
        frame.names.push_back(projective.names.empty() ? "L" + std::to_string(i + 1)
                                                       : projective.names[i]);
        if (static_cast<int>(i) == sharp_idx)
            frame.sharp_line = static_cast<int>(frame.lines.size()) - 1;
    }
    const AffLine& sharp = frame.lines[static_cast<size_t>(frame.sharp_line)];
    if (!sharp.vertical() || sharp.vertical_x() != 0)
        throw std::logic_error("sharp line not normalized to x = 0");

    // Affine lattice of the chart.
    Arrangement chart = make_affine(frame.lines, frame.names);
    frame.points = build_lattice(chart);

    // Parallels: vertical lines other than the sharp one, ascending x.
    for (int i = 0; i < frame.n(); ++i) {
        if (i == frame.sharp_line) continue;
        if (frame.lines[static_cast<size_t>(i)].vertical()) {
            if (frame.lines[static_cast<size_t>(i)].vertical_x() >= 0)
                throw std::logic_error("parallel with nonnegative x");
            frame.parallels.push_back(i);
        }
    }
    std::sort(frame.parallels.begin(), frame.parallels.end(), [&](int a, int b) {
        return frame.lines[static_cast<size_t>(a)].vertical_x() <
               frame.lines[static_cast<size_t>(b)].vertical_x();
    });

    // Anchors: points on the sharp line, ascending y.
    for (size_t p = 0; p < frame.points.size(); ++p)
        if (frame.points[p].where.x == 0) frame.anchors.push_back(static_cast<int>(p));
    std::sort(frame.anchors.begin(), frame.anchors.end(), [&](int a, int b) {
        return frame.points[static_cast<size_t>(a)].where.y <
               frame.points[static_cast<size_t>(b)].where.y;
    });

    // Anchor of each slanted line (its crossing with the sharp line).
    frame.anchor_of_line.assign(static_cast<size_t>(frame.n()), -1);
    for (int i = 0; i < frame.n(); ++i) {
        if (frame.lines[static_cast<size_t>(i)].vertical()) continue;
        Rat y0 = frame.lines[static_cast<size_t>(i)].value_at(Rat(0));
        for (size_t a = 0; a < frame.anchors.size(); ++a)
            if (frame.points[static_cast<size_t>(frame.anchors[a])].where.y == y0)
                frame.anchor_of_line[static_cast<size_t>(i)] = static_cast<int>(a);
        if (frame.anchor_of_line[static_cast<size_t>(i)] < 0)
            throw std::logic_error("slanted line without anchor");
    }

    // Global order: parallels ascending x, sharp, slanted by (anchor, slope).
    frame.order = frame.parallels;
    frame.order.push_back(frame.sharp_line);
    std::vector<int> slanted;
    for (int i = 0; i < frame.n(); ++i)
        if (!frame.lines[static_cast<size_t>(i)].vertical()) slanted.push_back(i);
    std::sort(slanted.begin(), slanted.end(), [&](int a, int b) {
        int aa = frame.anchor_of_line[static_cast<size_t>(a)];
        int ab = frame.anchor_of_line[static_cast<size_t>(b)];
        if (aa != ab) return aa < ab;
        return frame.lines[static_cast<size_t>(a)].slope() <
               frame.lines[static_cast<size_t>(b)].slope();
    });
    frame.order.insert(frame.order.end(), slanted.begin(), slanted.end());
    frame.order_pos.assign(static_cast<size_t>(frame.n()), -1);
    for (size_t r = 0; r < frame.order.size(); ++r)
        frame.order_pos[static_cast<size_t>(frame.order[r])] = static_cast<int>(r);

    // Per-line point orders and per-point line orders.
    frame.points_on_line.assign(static_cast<size_t>(frame.n()), {});
    frame.lines_at_point.assign(frame.points.size(), {});
    for (size_t p = 0; p < frame.points.size(); ++p) {
        for (int li : frame.points[p].incident)
            frame.points_on_line[static_cast<size_t>(li)].push_back(static_cast<int>(p));
        frame.lines_at_point[p] = frame.points[p].incident;
        std::sort(frame.lines_at_point[p].begin(), frame.lines_at_point[p].end(),
                  [&](int a, int b) { return frame.before(a, b); });
    }
    for (int li = 0; li < frame.n(); ++li) {
        auto& pts = frame.points_on_line[static_cast<size_t>(li)];
        if (pts.empty()) throw std::domain_error("isolated line");
        if (frame.lines[static_cast<size_t>(li)].vertical()) {
            std::sort(pts.begin(), pts.end(), [&](int a, int b) {
                return frame.points[static_cast<size_t>(a)].where.y <
                       frame.points[static_cast<size_t>(b)].where.y;
            });
        } else {
            std::sort(pts.begin(), pts.end(), [&](int a, int b) {
                return frame.points[static_cast<size_t>(a)].where.x >
                       frame.points[static_cast<size_t>(b)].where.x;
            });
            // Anchor first: it has x = 0, the maximum, so descending x already
            // places it first.
        }
    }

    // Frame invariants.
    for (const auto& pt : frame.points)
        if (pt.where.x > 0) throw std::logic_error("affine point with positive x");
    for (size_t a = 0; a + 1 < frame.anchors.size(); ++a)
        if (!(frame.points[static_cast<size_t>(frame.anchors[a])].where.y <
              frame.points[static_cast<size_t>(frame.anchors[a + 1])].where.y))
            throw std::logic_error("anchors not strictly ascending");
    return frame;
}

std::vector<SharpFrame> four_frames(const Arrangement& projective, SharpPair pair) {
    std::vector<SharpFrame> frames;
    for (int inf = 0; inf < 2; ++inf)
        for (int ori : {1, -1}) frames.push_back(build_frame(projective, pair, inf, ori));
    return frames;
}

std::string frame_label(const SharpFrame& frame) {
    std::ostringstream out;
    out << "pair(" << frame.pair.first + 1 << "," << frame.pair.second + 1 << "):inf="
        << (frame.infinity_choice == 0 ? frame.pair.first + 1 : frame.pair.second + 1)
        << ":orient=" << (frame.orientation == 1 ? "+1" : "-1");
    return out.str();
}

}  // namespace sharpmilnor
