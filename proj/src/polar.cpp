#include "sharpmilnor/polar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sharpmilnor {

namespace {

// Ray parameter s with V0 + s*(P - V0) on the line; nullopt when parallel.
std::optional<Rat> ray_crossing(const PolarSystem& sys, const Point& p, const AffLine& line) {
    Rat dx = p.x - sys.v0x;
    Rat dy = p.y - sys.v0y;
    Rat denom = line.a * dx + line.b * dy;
    if (denom == 0) return std::nullopt;
    return (line.c - line.a * sys.v0x - line.b * sys.v0y) / denom;
}

}  // namespace

PolarSystem choose_polar(const SharpFrame& frame) {
    PolarSystem sys;
    Rat max_slope = 0;  // empty max convention
    bool any = false;
    for (const auto& l : frame.lines) {
        if (l.vertical()) continue;
        if (!any || l.slope() > max_slope) max_slope = l.slope();
        any = true;
    }
    if (!any) max_slope = 0;
    sys.lambda = max_slope + 1;
    // V0 travels along y = lambda*x, so two lattice points on that line stay
    // collinear with V0 for every radius; step lambda past such lines.
    auto lambda_line_count = [&frame](const Rat& lambda) {
        int count = 0;
        for (const auto& pt : frame.points)
            if (pt.where.y == lambda * pt.where.x) ++count;
        return count;
    };
    while (lambda_line_count(sys.lambda) >= 2) sys.lambda += 1;

    Rat minx, maxx, miny, maxy;
    bool first = true;
    for (const auto& pt : frame.points) {
        if (first) {
            minx = maxx = pt.where.x;
            miny = maxy = pt.where.y;
            first = false;
        } else {
            minx = std::min(minx, pt.where.x);
            maxx = std::max(maxx, pt.where.x);
            miny = std::min(miny, pt.where.y);
            maxy = std::max(maxy, pt.where.y);
        }
    }
    if (first) throw std::domain_error("no lattice points");
    sys.xstar = maxx + 1;
    sys.ylow = miny - 1;

    Rat r = (maxx - minx) + (maxy - miny) + 1;
    auto predicates_hold = [&](const Rat& R) {
        Rat v0x = -R, v0y = -sys.lambda * R;
        for (const auto& l : frame.lines) {
            if (l.vertical()) {
                if (!(v0x < l.vertical_x())) return false;
            } else {
                if (!(l.value_at(v0x) > v0y)) return false;
            }
        }
        for (const auto& pt : frame.points)
            if (!(v0x < pt.where.x)) return false;
        // No two lattice points collinear with V0.
        size_t np = frame.points.size();
        for (size_t i = 0; i < np; ++i)
            for (size_t j = i + 1; j < np; ++j) {
                Rat ax = frame.points[i].where.x - v0x, ay = frame.points[i].where.y - v0y;
                Rat bx = frame.points[j].where.x - v0x, by = frame.points[j].where.y - v0y;
                if (ax * by - ay * bx == 0) return false;
            }
        // Every crossing of a non-incident line with a ray has positive parameter.
        PolarSystem probe{sys.lambda, R, v0x, v0y, sys.xstar, sys.ylow, false};
        for (size_t p = 0; p < np; ++p) {
            const auto& pt = frame.points[p];
            for (int li = 0; li < frame.n(); ++li) {
                if (std::find(pt.incident.begin(), pt.incident.end(), li) != pt.incident.end())
                    continue;
                auto s = ray_crossing(probe, Point{pt.where.x, pt.where.y},
                                      frame.lines[static_cast<size_t>(li)]);
                if (!s) return false;  // ray-parallel line: move V0
                if (!(*s > 0)) return false;
            }
        }
        return true;
    };
    while (!predicates_hold(r)) r *= 2;
    sys.radius = r;
    sys.v0x = -r;
    sys.v0y = -sys.lambda * r;
    sys.validated = true;
    return sys;
}

PolarContext::PolarContext(const SharpFrame& frame, PolarSystem sys)
    : frame_(&frame), sys_(std::move(sys)) {
    compute();
}

Point PolarContext::probe(int line) const {
    const AffLine& l = frame_->lines[static_cast<size_t>(line)];
    if (l.vertical()) return Point{l.vertical_x(), sys_.ylow};
    return Point{sys_.xstar, l.value_at(sys_.xstar)};
}

bool PolarContext::cone_membership(int point, const Point& q) const {
    const auto& incident = frame_->lines_at_point[static_cast<size_t>(point)];
    const AffLine& lo = frame_->lines[static_cast<size_t>(incident.front())];
    const AffLine& hi = frame_->lines[static_cast<size_t>(incident.back())];
    Point a = probe(incident.front());
    Point b = probe(incident.back());
    Point ref{(a.x + b.x) / 2, (a.y + b.y) / 2};
    auto side = [](const AffLine& l, const Point& p) {
        return sign(l.a * p.x + l.b * p.y - l.c);
    };
    int ref_lo = side(lo, ref), ref_hi = side(hi, ref);
    if (ref_lo == 0 || ref_hi == 0) throw std::logic_error("cone reference on boundary");
    int q_lo = side(lo, q), q_hi = side(hi, q);
    return (q_lo == 0 || q_lo == ref_lo) && (q_hi == 0 || q_hi == ref_hi);
}

void PolarContext::compute() {
    const SharpFrame& f = *frame_;
    size_t np = f.points.size();
    data_.assign(np, {});
    int m0 = f.p0_multiplicity();

    for (size_t p = 0; p < np; ++p) {
        Point loc{f.points[p].where.x, f.points[p].where.y};
        auto& d = data_[p];
        // U(P)
        for (int li = 0; li < f.n(); ++li) {
            const auto& inc = f.points[p].incident;
            if (std::find(inc.begin(), inc.end(), li) != inc.end()) continue;
            auto s = ray_crossing(sys_, loc, f.lines[static_cast<size_t>(li)]);
            if (!s) {
                d.upper.insert(li);  // parallel to the ray counts as beyond
                continue;
            }
            if (*s <= 0) {
                generic_ok_ = false;
                std::ostringstream out;
                out << "polar origin not generic: nonpositive crossing of "
                    << f.names[static_cast<size_t>(li)] << " at point " << p;
                pending_violations_.push_back(out.str());
                continue;
            }
            if (*s > 1) d.upper.insert(li);
        }

        bool anchor = f.is_anchor_point(static_cast<int>(p));
        if (!anchor) try {
            // Upper cone: slanted members via the probe point, verticals via
            // the pencil rule.
            for (int li : d.upper) {
                if (f.lines[static_cast<size_t>(li)].vertical()) continue;
                if (cone_membership(static_cast<int>(p), probe(li))) d.upper_cone.insert(li);
            }
            int on_parallel = -1;
            for (int li : f.points[p].incident) {
                int k = f.p0_index(li);
                if (k >= 2) on_parallel = k;
            }
            if (on_parallel > 0)
                for (int k = 1; k < on_parallel; ++k) {
                    int li = f.p0_line(k);
                    if (li >= 0) d.upper_cone.insert(li);
                }

            // Per-anchor maxima of the slanted part.
            for (size_t a = 0; a < f.anchors.size(); ++a) {
                int best = -1;
                for (int li : d.upper_cone) {
                    if (f.lines[static_cast<size_t>(li)].vertical()) continue;
                    if (f.anchor_of_line[static_cast<size_t>(li)] != static_cast<int>(a)) continue;
                    if (best < 0 || f.before(best, li)) best = li;
                }
                if (best >= 0) d.anchor_maxima.insert(best);
            }
            // Guarded verticals.
            int leftmost = f.p0_line(m0 - 1);
            bool leftmost_in_s = false;
            if (leftmost >= 0) {
                const auto& inc = f.points[p].incident;
                leftmost_in_s = std::find(inc.begin(), inc.end(), leftmost) != inc.end();
            }
            if (!leftmost_in_s)
                for (int k = 2; k <= m0 - 2; ++k) {
                    int li = f.p0_line(k);
                    if (li >= 0 && d.upper_cone.count(li)) d.h0_guarded.insert(li);
                }

            // Pencil neighbor.
            int min_line = f.lines_at_point[p].front();
            if (!f.lines[static_cast<size_t>(min_line)].vertical()) {
                int a = f.anchor_of_line[static_cast<size_t>(min_line)];
                int anchor_pt = f.anchors[static_cast<size_t>(a)];
                int rank = f.rank_in_point(anchor_pt, min_line);
                if (rank >= 3) d.neighbor = f.line_at_point_rank(anchor_pt, rank - 1);
            }
        } catch (const std::exception& e) {
            generic_ok_ = false;
            pending_violations_.push_back(std::string("polar data failure: ") + e.what());
        }
    }

    point_order_.resize(np);
    std::iota(point_order_.begin(), point_order_.end(), 0);
    std::sort(point_order_.begin(), point_order_.end(), [&](int a, int b) {
        Rat ax = f.points[static_cast<size_t>(a)].where.x - sys_.v0x;
        Rat ay = f.points[static_cast<size_t>(a)].where.y - sys_.v0y;
        Rat bx = f.points[static_cast<size_t>(b)].where.x - sys_.v0x;
        Rat by = f.points[static_cast<size_t>(b)].where.y - sys_.v0y;
        return ay * bx < by * ax;  // ascending angle, both dx > 0
    });
}

const std::set<int>& PolarContext::upper_set(int point) const {
    if (!generic_ok_) throw std::domain_error("polar origin not generic");
    return data_[static_cast<size_t>(point)].upper;
}
const std::set<int>& PolarContext::upper_cone(int point) const {
    return data_[static_cast<size_t>(point)].upper_cone;
}
std::set<int> PolarContext::upper_cone_max(int point) const {
    const auto& d = data_[static_cast<size_t>(point)];
    std::set<int> r = d.anchor_maxima;
    r.insert(d.h0_guarded.begin(), d.h0_guarded.end());
    return r;
}
std::set<int> PolarContext::upper_cone_max_lastmin(int point) const {
    const auto& d = data_[static_cast<size_t>(point)];
    std::set<int> r = d.anchor_maxima;
    r.insert(d.h0_guarded.begin(), d.h0_guarded.end());
    int first_parallel = frame_->p0_line(2);
    if (frame_->p0_multiplicity() > 3 && first_parallel >= 0 &&
        d.upper_cone.count(first_parallel))
        r.insert(first_parallel);
    return r;
}
std::optional<int> PolarContext::neighbor(int point) const {
    return data_[static_cast<size_t>(point)].neighbor;
}

std::vector<std::string> PolarContext::validate() const {
    std::vector<std::string> violations = pending_violations_;
    const SharpFrame& f = *frame_;
    try {
        // (a) per-line point order equals ascending angle about V0.
        for (int li = 0; li < f.n(); ++li) {
            const auto& pts = f.points_on_line[static_cast<size_t>(li)];
            for (size_t i = 0; i + 1 < pts.size(); ++i) {
                Rat ax = f.points[static_cast<size_t>(pts[i])].where.x - sys_.v0x;
                Rat ay = f.points[static_cast<size_t>(pts[i])].where.y - sys_.v0y;
                Rat bx = f.points[static_cast<size_t>(pts[i + 1])].where.x - sys_.v0x;
                Rat by = f.points[static_cast<size_t>(pts[i + 1])].where.y - sys_.v0y;
                if (!(ay * bx < by * ax)) {
                    std::ostringstream out;
                    out << "line " << f.names[static_cast<size_t>(li)]
                        << ": point order disagrees with polar angle at position " << i;
                    violations.push_back(out.str());
                }
            }
        }
        // (b) interior incident lines pass the cone test.
        for (size_t p = 0; p < f.points.size(); ++p) {
            if (f.is_anchor_point(static_cast<int>(p))) continue;
            const auto& inc = f.lines_at_point[p];
            for (size_t i = 1; i + 1 < inc.size(); ++i) {
                if (!cone_membership(static_cast<int>(p), probe(inc[i]))) {
                    std::ostringstream out;
                    out << "cone of point " << p << " misses interior line "
                        << f.names[static_cast<size_t>(inc[i])];
                    violations.push_back(out.str());
                }
            }
        }
        // (c) lattice characterization of U(P) for earlier lines.
        for (int h = 0; h < f.n(); ++h) {
            const auto& pts = f.points_on_line[static_cast<size_t>(h)];
            for (size_t i = 0; i < pts.size(); ++i) {
                int p = pts[i];
                for (int hp = 0; hp < f.n(); ++hp) {
                    if (hp == h || !f.before(hp, h)) continue;
                    const auto& inc = f.points[static_cast<size_t>(p)].incident;
                    if (std::find(inc.begin(), inc.end(), hp) != inc.end()) continue;
                    bool expected = false;
                    for (size_t j = 0; j < i; ++j) {
                        const auto& inc2 =
                            f.points[static_cast<size_t>(pts[j])].incident;
                        if (std::find(inc2.begin(), inc2.end(), hp) != inc2.end())
                            expected = true;
                    }
                    bool actual = data_[static_cast<size_t>(p)].upper.count(hp) > 0;
                    if (expected != actual) {
                        std::ostringstream out;
                        out << "U-characterization fails: line "
                            << f.names[static_cast<size_t>(hp)] << " vs point " << i
                            << " of " << f.names[static_cast<size_t>(h)];
                        violations.push_back(out.str());
                    }
                }
            }
        }
    } catch (const std::exception& e) {
        violations.push_back(std::string("validation aborted: ") + e.what());
    }
    return violations;
}

}  // namespace sharpmilnor
