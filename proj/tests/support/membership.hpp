#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <vector>

namespace w3test {

// Fraction-free Bareiss elimination over exact integers, following the rank
// profile; exact divisibility by the previous pivot is asserted, not assumed.
inline std::size_t bareiss_rank(std::vector<std::vector<w3calc::Int>> m) {
    using w3calc::Int;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[rank], m[sel]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                Int num = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                Int q, rem;
                boost::multiprecision::divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("fraction-free step lost exactness");
                m[r][c] = q;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

// v lies in the row span of m iff appending it leaves the rank unchanged.
inline bool bareiss_member(const std::vector<std::vector<w3calc::Int>>& m,
                           const std::vector<w3calc::Int>& v) {
    std::size_t base = bareiss_rank(m);
    std::vector<std::vector<w3calc::Int>> aug = m;
    aug.push_back(v);
    return bareiss_rank(aug) == base;
}

} // namespace w3test
