#pragma once

// Small exact linear algebra over the rationals: rank, kernel, and symmetric
// congruence diagonalization. Dense routines; every matrix in this codebase
// is tiny except the Milnor truncation matrices, which use the sparse
// echelon routine below.

#include "pw/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace pw {

using QMatrix = std::vector<std::vector<Rational>>;

// Rank by exact Gaussian elimination. Rows may be ragged-free only.
int matrix_rank(QMatrix m);

// Basis of the right kernel {v : m v = 0}.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// Result of a congruence diagonalization P M P^T = diag(pivots) for a
// symmetric M. Signature data (counts of positive/negative/zero pivots) is
// congruence-invariant, so semidefiniteness can be read off the pivots.
struct CongruenceDiagonalization {
    std::vector<Rational> pivots;
    QMatrix transform;  // the matrix P
};

CongruenceDiagonalization congruence_diagonalize(QMatrix m);

// Incremental sparse row echelon over the rationals; rows are sparse vectors
// keyed by column index. Used for rank of the large, very sparse Milnor
// truncation matrices.
class SparseEchelon {
public:
    using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

    // Reduces the row against the current echelon and absorbs any nonzero
    // remainder. Returns true when the row increased the rank.
    bool insert(SparseRow row);

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    // pivot column -> monic row with that leading column
    std::map<int, SparseRow> pivots_;
};

}  // namespace pw
