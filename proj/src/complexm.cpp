#include "sharpmilnor/complexm.hpp"

#include <algorithm>
#include <sstream>

#include "vendor_json.hpp"

namespace sharpmilnor {

LaurentPoly boundary2_entry(const PolarContext& polar, int line, int point, int j) {
    const SharpFrame& f = polar.frame();
    const auto& upper = polar.upper_set(point);
    int m = f.points[static_cast<size_t>(point)].multiplicity();
    int a = f.rank_in_point(point, line);

    // A: lines before `line` in the global order that lie in U(P).
    auto count_upper_before = [&](int h) {
        int count = 0;
        for (int other : upper)
            if (f.before(other, h)) ++count;
        return count;
    };

    if (a > 0) {
        long long A = count_upper_before(line);
        long long C = a - 1;
        long long B = (a >= j + 1) ? (a - 1 - j) : (a - 1 + m - j);
        return LaurentPoly::t_power(A) *
               (LaurentPoly::t_power(B) - LaurentPoly::t_power(C));
    }

    bool anchor = f.is_anchor_point(point);
    if (!anchor && polar.upper_cone(point).count(line)) {
        long long A = count_upper_before(line);
        long long L = 0, Ub = 0;
        for (int rank = 1; rank <= m; ++rank) {
            int h = f.line_at_point_rank(point, rank);
            if (!f.before(h, line)) continue;
            if (rank <= j)
                ++L;
            else
                ++Ub;
        }
        return LaurentPoly::t_power(A) *
               (LaurentPoly::one() - LaurentPoly::t_power(L)) *
               (LaurentPoly::t_power(Ub) - LaurentPoly::t_power(m - j));
    }
    return LaurentPoly::zero();
}

BoundaryMatrix assemble_boundary(const PolarContext& polar) {
    const SharpFrame& f = polar.frame();
    BoundaryMatrix m;
    m.row_lines = f.order;
    m.row_of_line.assign(static_cast<size_t>(f.n()), -1);
    for (size_t r = 0; r < m.row_lines.size(); ++r)
        m.row_of_line[static_cast<size_t>(m.row_lines[r])] = static_cast<int>(r);
    m.block_start.assign(f.points.size(), -1);
    for (int p : polar.point_order()) {
        int mult = f.points[static_cast<size_t>(p)].multiplicity();
        m.block_start[static_cast<size_t>(p)] = static_cast<int>(m.columns.size());
        for (int j = 1; j < mult; ++j) m.columns.push_back(Cell2{p, j});
    }
    m.entries.assign(m.row_lines.size(),
                     std::vector<LaurentPoly>(m.columns.size(), LaurentPoly::zero()));
    for (size_t r = 0; r < m.row_lines.size(); ++r)
        for (size_t c = 0; c < m.columns.size(); ++c)
            m.entries[r][c] =
                boundary2_entry(polar, m.row_lines[r], m.columns[c].point, m.columns[c].j);
    return m;
}

std::vector<LaurentPoly> boundary1(const SharpFrame& frame) {
    return std::vector<LaurentPoly>(static_cast<size_t>(frame.n()), one_minus_t());
}

Cell2 good_column(const SharpFrame& frame, int point, int line) {
    int rank = frame.rank_in_point(point, line);
    if (rank < 1) throw std::invalid_argument("line not incident to point");
    int mult = frame.points[static_cast<size_t>(point)].multiplicity();
    return Cell2{point, rank == 1 ? mult - 1 : 1};
}

std::string matrix_dump_text(const SharpFrame& frame, const BoundaryMatrix& m,
                             const std::vector<bool>* removed_rows) {
    std::ostringstream out;
    out << "columns:";
    for (const auto& c : m.columns) out << " (" << c.point << "," << c.j << ")";
    out << "\n";
    for (size_t r = 0; r < m.entries.size(); ++r) {
        int line = m.row_lines[r];
        if (removed_rows && (*removed_rows)[static_cast<size_t>(line)]) continue;
        out << frame.names[static_cast<size_t>(line)] << ":";
        for (const auto& e : m.entries[r]) out << " [" << e.to_string() << "]";
        out << "\n";
    }
    return out.str();
}

std::string matrix_dump_json(const SharpFrame& frame, const BoundaryMatrix& m,
                             const std::vector<bool>* removed_rows) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    j["columns"] = nlohmann::json::array();
    j["entries"] = nlohmann::json::array();
    for (const auto& c : m.columns)
        j["columns"].push_back({{"point", c.point}, {"j", c.j}});
    for (size_t r = 0; r < m.entries.size(); ++r) {
        int line = m.row_lines[r];
        if (removed_rows && (*removed_rows)[static_cast<size_t>(line)]) continue;
        j["rows"].push_back(frame.names[static_cast<size_t>(line)]);
        nlohmann::json row = nlohmann::json::array();
        for (const auto& e : m.entries[r]) row.push_back(e.to_string());
        j["entries"].push_back(row);
    }
    return j.dump(2);
}

}  // namespace sharpmilnor
