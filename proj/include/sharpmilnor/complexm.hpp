#pragma once

#include "sharpmilnor/laurent.hpp"
#include "sharpmilnor/polar.hpp"

#include <string>
#include <vector>

namespace sharpmilnor {

// Column address: the 2-cell between the j-th and (j+1)-th incident lines of a
// point (1 <= j < m(P)).
struct Cell2 {
    int point;
    int j;
};

// Rows are the lines in global order (one critical 1-cell per line, including
// the sharp one until it is dropped); columns are blocks of m(P)-1 cells per
// affine point, points in polar order.
struct BoundaryMatrix {
    std::vector<int> row_lines;   // line index by row, global order
    std::vector<int> row_of_line; // inverse
    std::vector<Cell2> columns;
    std::vector<int> block_start;  // per point id, first column of its block (-1 if none)
    std::vector<std::vector<LaurentPoly>> entries;  // [row][col]

    int rows() const { return static_cast<int>(row_lines.size()); }
    int cols() const { return static_cast<int>(columns.size()); }
    int column_of(int point, int j) const { return block_start[static_cast<size_t>(point)] + j - 1; }
    const LaurentPoly& at(int line, int col) const {
        return entries[static_cast<size_t>(row_of_line[static_cast<size_t>(line)])]
                      [static_cast<size_t>(col)];
    }
};

// Single entry of the second boundary map for row `line` and cell [C_j^P < P].
LaurentPoly boundary2_entry(const PolarContext& polar, int line, int point, int j);

// Full matrix; d1 is the all-(1-t) row vector, so the chain condition is
// "every column sums to zero".
BoundaryMatrix assemble_boundary(const PolarContext& polar);

// First boundary map: one (1-t) entry per line, in global order.
std::vector<LaurentPoly> boundary1(const SharpFrame& frame);

// The column whose entry on `line` is a unit times (1-t).
Cell2 good_column(const SharpFrame& frame, int point, int line);

std::string matrix_dump_text(const SharpFrame& frame, const BoundaryMatrix& m,
                             const std::vector<bool>* removed_rows = nullptr);
std::string matrix_dump_json(const SharpFrame& frame, const BoundaryMatrix& m,
                             const std::vector<bool>* removed_rows = nullptr);

}  // namespace sharpmilnor
