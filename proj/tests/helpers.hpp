#pragma once

#include <random>

#include "ltc/linalg.hpp"

namespace testing {

inline ltc::Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<ltc::Vector> rs;
    std::size_t cols = 0;
    for (auto r : rows) {
        ltc::Vector v;
        for (long x : r) v.emplace_back(x);
        cols = v.size();
        rs.push_back(std::move(v));
    }
    return ltc::Matrix::from_rows(rs, cols);
}

inline ltc::Vector vec(std::initializer_list<long> xs) {
    ltc::Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline ltc::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long spread = 2) {
    ltc::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = static_cast<long>(rng() % (2 * spread + 1)) - spread;
    return m;
}

}  // namespace testing
