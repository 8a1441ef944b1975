#include "pw/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pw {

namespace {

void require_rectangular(const QMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.front().size()) {
            throw std::invalid_argument("matrix rows of unequal length");
        }
    }
}

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> echelonize(QMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    require_rectangular(m);
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int matrix_rank(QMatrix m) { return static_cast<int>(echelonize(m).size()); }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    if (m.empty()) return {};
    QMatrix reduced = m;
    const std::vector<std::size_t> pivot_cols = echelonize(reduced);
    const std::size_t cols = m.front().size();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        // Reduced echelon: pivot row i solves for its pivot column.
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -reduced[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

CongruenceDiagonalization congruence_diagonalize(QMatrix m) {
    const std::size_t n = m.size();
    require_rectangular(m);
    if (n != 0 && m.front().size() != n) {
        throw std::invalid_argument("congruence diagonalization needs a square matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m[i][j] != m[j][i]) {
                throw std::invalid_argument("congruence diagonalization needs a symmetric matrix");
            }
        }
    }

    QMatrix p(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;

    // Symmetric row+column operations; each is mirrored into P so that
    // P M0 P^T stays equal to the working matrix.
    const auto add_row_col = [&](std::size_t dst, std::size_t src, const Rational& factor) {
        for (std::size_t j = 0; j < n; ++j) m[dst][j] += factor * m[src][j];
        for (std::size_t j = 0; j < n; ++j) m[j][dst] += factor * m[j][src];
        for (std::size_t j = 0; j < n; ++j) p[dst][j] += factor * p[src][j];
    };
    const auto swap_row_col = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        for (std::size_t j = 0; j < n; ++j) std::swap(m[j][a], m[j][b]);
        std::swap(p[a], p[b]);
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][i] == 0) {
            // Prefer moving a later nonzero diagonal entry into place.
            std::size_t diag = i;
            while (diag < n && m[diag][diag] == 0) ++diag;
            if (diag < n) {
                swap_row_col(i, diag);
            } else {
                std::size_t off = i + 1;
                while (off < n && m[i][off] == 0) ++off;
                if (off == n) continue;  // zero row from i onward: pivot 0
                // m[off][off] = 0 here, so the update gives m[i][i] = 2 m[i][off] != 0.
                add_row_col(i, off, Rational(1));
                if (m[i][i] == 0) throw std::logic_error("congruence pivot recovery failed");
            }
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m[j][i] == 0) continue;
            add_row_col(j, i, -m[j][i] / m[i][i]);
        }
    }

    CongruenceDiagonalization out;
    out.pivots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.pivots.push_back(m[i][i]);
    out.transform = std::move(p);
    return out;
}

bool SparseEchelon::insert(SparseRow row) {
    const auto axpy = [](const SparseRow& a, const Rational& c, const SparseRow& b) {
        // a + c*b with both inputs sorted by column
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, c * b[j].second);
                ++j;
            } else {
                const Rational v = a[i].second + c * b[j].second;
                if (v != 0) out.emplace_back(a[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    };

    while (!row.empty()) {
        const auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            const Rational inv = Rational(1) / row.front().second;
            if (inv != 1) {
                for (auto& [col, v] : row) v *= inv;
            }
            pivots_.emplace(row.front().first, std::move(row));
            return true;
        }
        row = axpy(row, -row.front().second, it->second);
    }
    return false;
}

}  // namespace pw
