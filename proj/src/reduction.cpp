#include "sharpmilnor/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vendor_json.hpp"

namespace sharpmilnor {

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

bool row_zero_on_block(const BoundaryMatrix& m, int line, int point) {
    int start = m.block_start[static_cast<size_t>(point)];
    if (start < 0) return true;
    int r = m.row_of_line[static_cast<size_t>(line)];
    int j = start;
    while (j < m.cols() && m.columns[static_cast<size_t>(j)].point == point) {
        if (!m.entries[static_cast<size_t>(r)][static_cast<size_t>(j)].is_zero()) return false;
        ++j;
    }
    return true;
}

}  // namespace

ReductionState::ReductionState(const PolarContext& polar)
    : polar_(&polar), original_(assemble_boundary(polar)), mat_(original_) {
    removed_.assign(static_cast<size_t>(frame().n()), false);
}

void ReductionState::row_sub(int target, const LaurentPoly& factor, int pivot,
                             const char* stage) {
    int rt = mat_.row_of_line[static_cast<size_t>(target)];
    int rp = mat_.row_of_line[static_cast<size_t>(pivot)];
    for (size_t c = 0; c < mat_.columns.size(); ++c) {
        const LaurentPoly& pe = mat_.entries[static_cast<size_t>(rp)][c];
        if (pe.is_zero()) continue;
        mat_.entries[static_cast<size_t>(rt)][c] -= factor * pe;
    }
    log_.push_back(RowOp{target, pivot, factor, stage});
}

void ReductionState::drop_sharp_row() {
    removed_[static_cast<size_t>(frame().sharp_line)] = true;
    sharp_dropped_ = true;
}

void ReductionState::diagonalize_m1() {
    if (!sharp_dropped_) throw std::logic_error("sharp row must be dropped first");
    const SharpFrame& f = frame();
    LaurentPoly tinv = LaurentPoly::t_power(-1);
    for (int anchor_pt : f.anchors) {
        int m = f.points[static_cast<size_t>(anchor_pt)].multiplicity();
        for (int i = 2; i <= m - 1; ++i) {
            int hi = f.line_at_point_rank(anchor_pt, i);
            int hnext = f.line_at_point_rank(anchor_pt, i + 1);
            row_sub(hi, tinv, hnext, "anchor-diagonalization");
        }
    }
    m1_done_ = true;
    check_anchor_blocks();
    check_effect_on_rest();
}

void ReductionState::check_anchor_blocks() const {
    const SharpFrame& f = frame();
    for (int anchor_pt : f.anchors) {
        int m = f.points[static_cast<size_t>(anchor_pt)].multiplicity();
        int start = mat_.block_start[static_cast<size_t>(anchor_pt)];
        LaurentPoly unit_tm = one_minus_t_pow(m);
        for (int rank = 2; rank <= m - 1; ++rank) {
            int line = f.line_at_point_rank(anchor_pt, rank);
            for (int j = 1; j <= m - 1; ++j) {
                const LaurentPoly& e = mat_.at(line, start + j - 1);
                if (j == rank) {
                    if (!e.is_associate_of(unit_tm))
                        throw std::logic_error("anchor block pivot is not 1-t^m");
                } else if (!e.is_zero()) {
                    throw std::logic_error("anchor block not diagonal");
                }
            }
        }
        int lastline = f.line_at_point_rank(anchor_pt, m);
        const LaurentPoly& e1 = mat_.at(lastline, start);
        if (!e1.is_associate_of(one_minus_t()))
            throw std::logic_error("anchor block lacks the 1-t pivot");
    }
}

void ReductionState::check_effect_on_rest() const {
    const SharpFrame& f = frame();
    LaurentPoly tinv = LaurentPoly::t_power(-1);
    for (size_t p = 0; p < f.points.size(); ++p) {
        int point = static_cast<int>(p);
        if (f.is_anchor_point(point)) continue;
        int start = mat_.block_start[p];
        int mult = f.points[p].multiplicity();
        const auto& inc = f.points[p].incident;
        auto in_s = [&](int line) {
            return std::find(inc.begin(), inc.end(), line) != inc.end();
        };
        int min_line = f.lines_at_point[p].front();
        const auto& ucone = polar_->upper_cone(point);
        std::set<int> maxima;
        {
            auto d = polar_->upper_cone_max(point);
            for (int li : d)
                if (!f.lines[static_cast<size_t>(li)].vertical()) maxima.insert(li);
        }
        for (int anchor_pt : f.anchors) {
            int m = f.points[static_cast<size_t>(anchor_pt)].multiplicity();
            for (int i = 2; i <= m - 1; ++i) {
                int hi = f.line_at_point_rank(anchor_pt, i);
                int hnext = f.line_at_point_rank(anchor_pt, i + 1);
                for (int j = 1; j <= mult - 1; ++j) {
                    int col = start + j - 1;
                    const LaurentPoly& now = mat_.at(hi, col);
                    LaurentPoly old = original_.at(hi, col);
                    LaurentPoly old_next = original_.at(hnext, col);
                    if (old.is_zero()) {
                        LaurentPoly expected = -(tinv * old_next);
                        if (now != expected)
                            throw std::logic_error("unexpected fill-in during diagonalization");
                        if (!now.is_zero() && hnext != min_line)
                            throw std::logic_error("fill-in outside the pencil-neighbor case");
                    } else if (in_s(hi)) {
                        if (now != old)
                            throw std::logic_error("incident block changed by diagonalization");
                    } else if (ucone.count(hi)) {
                        if (!maxima.count(hi) && !now.is_zero())
                            throw std::logic_error("non-maximal upper-cone row not cleared");
                    }
                }
            }
        }
    }
}

void ReductionState::eliminate_p0_rows(EliminateMode mode) {
    if (!m1_done_) throw std::logic_error("anchor diagonalization required first");
    const SharpFrame& f = frame();
    int m0 = f.p0_multiplicity();
    int kmin = mode == EliminateMode::Last ? 2 : 3;
    int leftmost = f.p0_line(m0 - 1);
    // Row operations clearing the removable parallel rows off their own blocks.
    for (int k = kmin; k <= m0 - 2; ++k) {
        int line = f.p0_line(k);
        LaurentPoly coeff = LaurentPoly::t_power(m0 - k - 2) * one_minus_t();
        // target += coeff * pivot, i.e. target -= (-coeff) * pivot
        row_sub(line, -coeff, leftmost, "parallel-cleanup");
    }
    // Support check: a cleaned parallel row may only touch blocks where the
    // line is incident or kept by the guarded vertical rule.
    for (int k = kmin; k <= m0 - 2; ++k) {
        int line = f.p0_line(k);
        for (size_t p = 0; p < f.points.size(); ++p) {
            int point = static_cast<int>(p);
            if (row_zero_on_block(mat_, line, point)) continue;
            const auto& inc = f.points[p].incident;
            bool in_s = std::find(inc.begin(), inc.end(), line) != inc.end();
            bool kept = !f.is_anchor_point(point) &&
                        polar_->upper_cone_max(point).count(line) > 0;
            if (!in_s && !kept)
                throw std::logic_error("parallel row supported outside S and the kept cone");
        }
    }

    // Protected columns per mode.
    LineFamilies fam = removable_set(f);
    std::set<int> protected_cols;
    auto add_protected = [&](int line, int point) {
        Cell2 c = good_column(f, point, line);
        protected_cols.insert(mat_.column_of(c.point, c.j));
    };
    if (mode == EliminateMode::Last) {
        for (int line : fam.aprime) {
            int k = f.p0_index(line);
            if (k >= 2 && k <= m0 - 2) continue;  // the rows being removed
            add_protected(line, f.last_point(line));
        }
    } else {
        for (int line : fam.a0prime) {
            bool h2_form = false;
            if (!f.lines[static_cast<size_t>(line)].vertical())
                h2_form = f.rank_in_point(
                              f.anchors[static_cast<size_t>(
                                  f.anchor_of_line[static_cast<size_t>(line)])],
                              line) == 2;
            else if (m0 > 3 && line == f.p0_line(2))
                h2_form = true;
            add_protected(line, h2_form ? f.min_point(line) : f.last_point(line));
        }
    }

    // Remove each cleaned parallel row through its final point.
    for (int k = m0 - 2; k >= kmin; --k) {
        int line = f.p0_line(k);
        int point = f.last_point(line);
        Cell2 gc = good_column(f, point, line);
        int col = mat_.column_of(gc.point, gc.j);
        const LaurentPoly& pivot = entry(line, col);
        if (!pivot.is_associate_of(one_minus_t()))
            throw std::logic_error("parallel pivot is not a unit times 1-t");
        for (int pc : protected_cols)
            if (!entry(line, pc).is_zero())
                throw std::logic_error("parallel removal touches a protected column");
        LaurentPoly pivot_copy = pivot;
        for (int other = 0; other < f.n(); ++other) {
            if (other == line || removed_[static_cast<size_t>(other)]) continue;
            if (!f.before(line, other)) continue;
            const LaurentPoly e = entry(other, col);
            if (e.is_zero()) continue;
            row_sub(other, div_exact(e, pivot_copy), line, "parallel-removal");
        }
        removed_[static_cast<size_t>(line)] = true;
    }
}

bool ReductionState::graph_reduce(const std::vector<ReduceVertex>& vertices) {
    const SharpFrame& f = frame();
    std::vector<ReduceVertex> order = vertices;
    std::sort(order.begin(), order.end(), [&](const ReduceVertex& a, const ReduceVertex& b) {
        return f.before(a.line, b.line);
    });
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        if (order[i].line == order[i + 1].line)
            throw std::invalid_argument("graph vertices must carry distinct lines");
    }
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (order[i].point == order[j].point)
                throw std::invalid_argument("graph vertices must carry distinct points");

    std::map<int, int> vertex_col;  // line -> designated column
    for (const auto& v : order) {
        Cell2 gc = good_column(f, v.point, v.line);
        vertex_col[v.line] = mat_.column_of(gc.point, gc.j);
    }

    for (const auto& v : order) {
        int col = vertex_col[v.line];
        LaurentPoly pivot = entry(v.line, col);
        if (!pivot.is_associate_of(one_minus_t()))
            throw std::logic_error("designated pivot is not a unit times 1-t");
        for (int other : f.order) {
            if (other == v.line || removed_[static_cast<size_t>(other)]) continue;
            if (!f.before(v.line, other)) continue;
            const LaurentPoly e = entry(other, col);
            if (e.is_zero()) continue;
            auto it = vertex_col.find(other);
            if (it != vertex_col.end() && !entry(v.line, it->second).is_zero()) {
                BlockRecord rec;
                rec.pivot_line = v.line;
                rec.target_line = other;
                rec.pivot_point = v.point;
                rec.target_point = -1;
                for (const auto& w : order)
                    if (w.line == other) rec.target_point = w.point;
                rec.pivot_col = col;
                rec.target_col = it->second;
                rec.e_pp = entry(v.line, col);
                rec.e_pt = entry(v.line, it->second);
                rec.e_tp = entry(other, col);
                rec.e_tt = entry(other, it->second);
                blocked_ = rec;
                return false;
            }
            row_sub(other, div_exact(e, pivot), v.line, "graph-reduction");
        }
        for (int other : f.order) {
            if (other == v.line || removed_[static_cast<size_t>(other)]) continue;
            if (f.before(v.line, other) && !entry(other, col).is_zero())
                throw std::logic_error("designated column not cleared");
        }
        removed_[static_cast<size_t>(v.line)] = true;
    }
    return true;
}

std::string ReductionState::log_json() const {
    nlohmann::json j;
    j["operations"] = nlohmann::json::array();
    const SharpFrame& f = frame();
    for (const auto& op : log_)
        j["operations"].push_back(
            {{"target", f.names[static_cast<size_t>(op.target_line)]},
             {"pivot", f.names[static_cast<size_t>(op.pivot_line)]},
             {"factor", op.factor.to_string()},
             {"stage", op.stage}});
    if (blocked_) {
        j["blocked"] = {{"pivot_line", f.names[static_cast<size_t>(blocked_->pivot_line)]},
                        {"target_line", f.names[static_cast<size_t>(blocked_->target_line)]},
                        {"pivot_point", blocked_->pivot_point},
                        {"target_point", blocked_->target_point},
                        {"submatrix",
                         {blocked_->e_pp.to_string(), blocked_->e_pt.to_string(),
                          blocked_->e_tp.to_string(), blocked_->e_tt.to_string()}}};
    }
    return j.dump(2);
}

LineFamilies removable_set(const SharpFrame& f) {
    LineFamilies fam;
    int nplus1 = f.n() + 1;
    int m0 = f.p0_multiplicity();
    for (int li = 0; li < f.n(); ++li) {
        if (li == f.sharp_line) continue;
        if (f.lines[static_cast<size_t>(li)].vertical()) {
            fam.aprime.insert(li);
            continue;
        }
        int anchor_pt =
            f.anchors[static_cast<size_t>(f.anchor_of_line[static_cast<size_t>(li)])];
        int m = f.points[static_cast<size_t>(anchor_pt)].multiplicity();
        int rank = f.rank_in_point(anchor_pt, li);
        bool removable = gcd_ll(m, nplus1) == 1 || gcd_ll(m, m0) == 1 || rank == m;
        if (removable)
            fam.removable.insert(li);
        else
            fam.aprime.insert(li);
    }
    fam.a0 = fam.aprime;
    fam.a0prime = fam.aprime;
    for (int k = 2; k <= m0 - 2; ++k) {
        int li = f.p0_line(k);
        if (li < 0) continue;
        fam.a0.erase(li);
        if (k > 2) fam.a0prime.erase(li);
    }
    auto anchored_mult = [&](int li) {
        if (f.lines[static_cast<size_t>(li)].vertical()) return -1;
        int anchor_pt =
            f.anchors[static_cast<size_t>(f.anchor_of_line[static_cast<size_t>(li)])];
        return f.points[static_cast<size_t>(anchor_pt)].multiplicity();
    };
    fam.a03 = fam.a0;
    for (auto it = fam.a03.begin(); it != fam.a03.end();) {
        if (anchored_mult(*it) == 3)
            it = fam.a03.erase(it);
        else
            ++it;
    }
    fam.a034 = fam.a0prime;
    for (auto it = fam.a034.begin(); it != fam.a034.end();) {
        int m = anchored_mult(*it);
        if (m == 3 || m == 4)
            it = fam.a034.erase(it);
        else
            ++it;
    }
    return fam;
}

int rank_mod_cyclotomic(const BoundaryMatrix& m, long long d) {
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    size_t rows = m.entries.size(), cols = m.columns.size();
    std::vector<std::vector<CycloElem>> a;
    a.reserve(rows);
    for (size_t r = 0; r < rows; ++r) {
        std::vector<CycloElem> row;
        row.reserve(cols);
        for (size_t c = 0; c < cols; ++c) row.push_back(reduce_mod(m.entries[r][c], d));
        a.push_back(std::move(row));
    }
    int rank = 0;
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
        size_t sel = rows;
        for (size_t r = pivot_row; r < rows; ++r)
            if (!a[r][c].is_zero()) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[pivot_row], a[sel]);
        CycloElem inv = a[pivot_row][c].inverse();
        for (size_t r = pivot_row + 1; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            CycloElem factor = a[r][c] * inv;
            for (size_t cc = c; cc < cols; ++cc)
                a[r][cc] = a[r][cc] - factor * a[pivot_row][cc];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

BettiTable milnor_betti(const PolarContext& polar) {
    const SharpFrame& f = polar.frame();
    BoundaryMatrix m = assemble_boundary(polar);
    BettiTable table;
    table.n = f.n();
    long long nplus1 = table.n + 1;
    long long b1 = table.n;
    for (long long d = 2; d <= nplus1; ++d) {
        if (nplus1 % d != 0) continue;
        int beta = table.n - 1 - rank_mod_cyclotomic(m, d);
        if (beta < 0) throw std::logic_error("negative eigenvalue multiplicity");
        if (beta > 1) table.sharp_bound_violated = true;
        table.betas[d] = beta;
        b1 += static_cast<long long>(beta) * euler_phi(d);
    }
    table.b1_fiber = b1;
    return table;
}

}  // namespace sharpmilnor
