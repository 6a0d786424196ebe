#pragma once

#include "rational.hpp"

#include <cstddef>
#include <vector>

namespace w3calc {

// Reduced row echelon form over the rationals; zero rows are dropped and
// pivots are taken left to right, so the result is canonical for a given
// row span.
struct EchelonForm {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots; // pivot column of each row
    std::size_t rank() const { return rows.size(); }
};

inline EchelonForm rref(std::vector<std::vector<Rational>> m) {
    EchelonForm out;
    if (m.empty()) return out;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] /= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

// Canonical representative of v modulo the row span of e (in place).
inline void reduce_against(std::vector<Rational>& v, const EchelonForm& e) {
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        Rational f = v[e.pivots[r]];
        if (f == 0) continue;
        for (std::size_t c = e.pivots[r]; c < v.size(); ++c) v[c] -= f * e.rows[r][c];
    }
}

} // namespace w3calc
