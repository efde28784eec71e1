#pragma once

#include "sharpmilnor/complexm.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sharpmilnor {

enum class EliminateMode { Last, LastMin };

struct RowOp {
    int target_line;
    int pivot_line;
    LaurentPoly factor;  // target -= factor * pivot  (factor 0 encodes raw adds)
    std::string stage;
};

struct BlockRecord {
    int pivot_line, target_line;
    int pivot_point, target_point;
    int pivot_col, target_col;
    LaurentPoly e_pp, e_tp, e_pt, e_tt;  // 2x2 submatrix rows (pivot,target) x cols (pivot,target)
};

struct ReduceVertex {
    int line;
    int point;
};

class ReductionState {
public:
    ReductionState(const PolarContext& polar);

    const PolarContext& polar() const { return *polar_; }
    const SharpFrame& frame() const { return polar_->frame(); }
    const BoundaryMatrix& matrix() const { return mat_; }
    const BoundaryMatrix& original() const { return original_; }
    const std::vector<bool>& removed() const { return removed_; }
    const std::vector<RowOp>& log() const { return log_; }
    const std::optional<BlockRecord>& blocked() const { return blocked_; }

    void drop_sharp_row();
    // Anchor-block diagonalization; verifies its effect on the other blocks
    // entry by entry and throws on any mismatch.
    void diagonalize_m1();
    // Clears the kept-parallel rows against the removable ones and removes the
    // removable parallel rows through their final points. The protected
    // columns depend on the mode.
    void eliminate_p0_rows(EliminateMode mode);

    // Row reduction along the vertex list in global line order. Stops and
    // records the 2x2 blocking pattern when one pivot row interferes with a
    // later vertex's designated column. Returns true on success.
    bool graph_reduce(const std::vector<ReduceVertex>& vertices);

    std::string log_json() const;

private:
    const PolarContext* polar_;
    BoundaryMatrix original_;
    BoundaryMatrix mat_;
    std::vector<bool> removed_;
    std::vector<RowOp> log_;
    std::optional<BlockRecord> blocked_;
    bool sharp_dropped_ = false;
    bool m1_done_ = false;

    LaurentPoly& entry(int line, int col) {
        return mat_.entries[static_cast<size_t>(
            mat_.row_of_line[static_cast<size_t>(line)])][static_cast<size_t>(col)];
    }
    void row_sub(int target, const LaurentPoly& factor, int pivot, const char* stage);
    void check_anchor_blocks() const;
    void check_effect_on_rest() const;
};

// The removable slanted lines and the derived line families.
struct LineFamilies {
    std::set<int> removable;  // slanted lines clearable by the coprimality argument
    std::set<int> aprime;     // survivors: kept slanted lines plus all parallels
    std::set<int> a0;         // aprime minus the non-extreme parallels
    std::set<int> a0prime;    // aprime minus parallels other than the first and last
    std::set<int> a03;        // a0 minus lines anchored at multiplicity-3 points
    std::set<int> a034;       // a0prime minus lines anchored at multiplicity-3/4 points
};

LineFamilies removable_set(const SharpFrame& frame);

// Rank of the matrix over Q[t]/(Phi_d), entries reduced entrywise.
int rank_mod_cyclotomic(const BoundaryMatrix& m, long long d);

struct BettiTable {
    int n = 0;                        // affine line count
    std::map<long long, int> betas;   // d -> beta_{1,d}, for divisors d > 1 of n+1
    long long b1_fiber = 0;
    bool sharp_bound_violated = false;  // some beta exceeds 1

    int beta(long long d) const {
        auto it = betas.find(d);
        return it == betas.end() ? 0 : it->second;
    }
};

// Eigenvalue multiplicities by exact rank over cyclotomic fields, computed
// from the unreduced boundary matrix of the frame.
BettiTable milnor_betti(const PolarContext& polar);

}  // namespace sharpmilnor
