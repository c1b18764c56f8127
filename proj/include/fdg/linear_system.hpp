#pragma once

#include "fdg/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace fdg {

/// Linear equations whose unknowns are the entries of several matrices X_0, X_1, ...
///
/// Each call to add_equation imposes  sum_j L_j X_{b_j} R_j = C  entrywise.  The system carries
/// `rhs_count` independent right-hand sides so that one elimination answers many lifting
/// problems with the same coefficients.  Elimination is sparse and online: every equation is
/// reduced against the current echelon rows as it arrives.
///
/// Solutions are canonical: free unknowns (non-pivot columns of the rref) are zero.
class MatrixSystem {
public:
    using Block = std::size_t;

    struct Term {
        Block block;
        Matrix left;  ///< multiplies X from the left; rows = rows of the equation
        Matrix right; ///< multiplies X from the right; cols = cols of the equation
    };

    explicit MatrixSystem(std::size_t rhs_count = 1);

    Block add_unknown(std::size_t rows, std::size_t cols);

    /// `rhs` is empty (homogeneous) or holds one matrix per right-hand side.
    void add_equation(const std::vector<Term>& terms, const std::vector<Matrix>& rhs = {});
    /// Shorthand for X_block = value, where `value` has one entry per right-hand side.
    void fix_unknown(Block block, const std::vector<Matrix>& value);

    std::size_t unknown_count() const noexcept { return offsets_.back(); }
    std::size_t rhs_count() const noexcept { return rhs_count_; }
    std::size_t rank() const noexcept { return pivots_.size(); }

    /// Canonical solution for right-hand side k, unpacked per block.
    std::optional<std::vector<Matrix>> solve(std::size_t k = 0) const;
    bool consistent(std::size_t k = 0) const { return !inconsistent_[k]; }
    bool all_consistent() const;

    /// Basis of the homogeneous solution space, one column per free unknown, in flat coordinates.
    Matrix nullspace() const;

    std::vector<Matrix> unpack(const Matrix& flat_column) const;
    Matrix pack(const std::vector<Matrix>& blocks) const;

    std::size_t block_offset(Block b) const { return offsets_[b]; }
    std::size_t block_rows(Block b) const { return shapes_[b].first; }
    std::size_t block_cols(Block b) const { return shapes_[b].second; }

private:
    using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
    struct Row {
        SparseRow coefficients; ///< sorted by column; first entry is the pivot with value 1
        std::vector<Rational> rhs;
    };

    void insert(SparseRow coefficients, std::vector<Rational> rhs);
    std::vector<Rational> back_substitute(std::size_t k, std::optional<std::size_t> free_column) const;

    std::size_t rhs_count_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::pair<std::size_t, std::size_t>> shapes_;
    std::map<std::size_t, Row> pivots_;
    std::vector<bool> inconsistent_;
};

} // namespace fdg
