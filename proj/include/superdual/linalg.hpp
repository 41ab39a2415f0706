#pragma once

#include <superdual/rational.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace superdual {

// Dense exact matrices. Elimination is over the rationals, so rank decisions
// never depend on a tolerance.
using Matrix = std::vector<std::vector<Rational>>;

struct EchelonForm {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

inline EchelonForm row_reduce(Matrix a, std::size_t cols)
{
    EchelonForm out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.size() && a[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == a.size()) {
            continue;
        }
        std::swap(a[row], a[pivot]);
        const Rational inv = Rational(1) / a[row][col];
        for (std::size_t c = col; c < cols; ++c) {
            a[row][c] *= inv;
        }
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) {
                continue;
            }
            const Rational f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                if (a[row][c] != 0) {
                    a[r][c] -= f * a[row][c];
                }
            }
        }
        out.pivots.push_back(col);
        ++row;
    }
    a.resize(row);
    out.reduced = std::move(a);
    return out;
}

inline std::size_t rank(const Matrix &a, std::size_t cols) { return row_reduce(a, cols).pivots.size(); }

// Basis of {v : a v = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(const Matrix &a, std::size_t cols)
{
    const EchelonForm ef = row_reduce(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ef.pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
            v[ef.pivots[r]] = -ef.reduced[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Some solution of a x = b, or nothing when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix &a, const std::vector<Rational> &b, std::size_t cols)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("solve: row count mismatch");
    }
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) {
        aug[r].resize(cols);
        aug[r].push_back(b[r]);
    }
    const EchelonForm ef = row_reduce(std::move(aug), cols + 1);
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) {
        if (ef.pivots[r] == cols) {
            return std::nullopt;
        }
        x[ef.pivots[r]] = ef.reduced[r][cols];
    }
    return x;
}

} // namespace superdual
