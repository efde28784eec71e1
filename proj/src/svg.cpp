#include "sharpmilnor/svg.hpp"

#include <algorithm>
#include <sstream>

namespace sharpmilnor {

namespace {

double to_d(const Rat& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

}  // namespace

std::string plot_svg(const SharpFrame& frame) {
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const auto& pt : frame.points) {
        double x = to_d(pt.where.x), y = to_d(pt.where.y);
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    double pad = std::max({maxx - minx, maxy - miny, 1.0}) * 0.25;
    minx -= pad;
    maxx += pad;
    miny -= pad;
    maxy += pad;

    double width = 640, height = 640;
    auto sx = [&](double x) { return (x - minx) / (maxx - minx) * width; };
    auto sy = [&](double y) { return height - (y - miny) / (maxy - miny) * height; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int li = 0; li < frame.n(); ++li) {
        const AffLine& l = frame.lines[static_cast<size_t>(li)];
        double x1, y1, x2, y2;
        if (l.vertical()) {
            x1 = x2 = to_d(l.vertical_x());
            y1 = miny;
            y2 = maxy;
        } else {
            x1 = minx;
            x2 = maxx;
            double s = to_d(l.slope());
            double b = to_d(l.value_at(Rat(0)));
            y1 = s * x1 + b;
            y2 = s * x2 + b;
        }
        bool sharp = li == frame.sharp_line;
        out << "  <line x1=\"" << sx(x1) << "\" y1=\"" << sy(y1) << "\" x2=\"" << sx(x2)
            << "\" y2=\"" << sy(y2) << "\" stroke=\"" << (sharp ? "crimson" : "steelblue")
            << "\" stroke-width=\"" << (sharp ? 2.0 : 1.0) << "\"/>\n";
        out << "  <text x=\"" << sx(x2) - 40 << "\" y=\"" << sy(y2) + 12
            << "\" font-size=\"10\">" << frame.names[static_cast<size_t>(li)] << "</text>\n";
    }
    for (int anchor : frame.anchors) {
        Point p = frame.coords(anchor);
        out << "  <circle cx=\"" << sx(to_d(p.x)) << "\" cy=\"" << sy(to_d(p.y))
            << "\" r=\"4\" fill=\"crimson\"/>\n";
    }
    for (int li = 0; li < frame.n(); ++li) {
        Point lastp = frame.coords(frame.last_point(li));
        out << "  <circle cx=\"" << sx(to_d(lastp.x)) << "\" cy=\"" << sy(to_d(lastp.y))
            << "\" r=\"3\" fill=\"none\" stroke=\"darkgreen\"/>\n";
        if (frame.points_on_line[static_cast<size_t>(li)].size() >= 2) {
            Point minp = frame.coords(frame.min_point(li));
            out << "  <rect x=\"" << sx(to_d(minp.x)) - 2.5 << "\" y=\""
                << sy(to_d(minp.y)) - 2.5
                << "\" width=\"5\" height=\"5\" fill=\"none\" stroke=\"darkorange\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace sharpmilnor
