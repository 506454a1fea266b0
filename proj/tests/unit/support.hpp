#pragma once

#include "anticode/codes.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Field oracle_of(const anticode::Field& f) {
    std::vector<oracle::U> mod(f.modulus().begin(), f.modulus().end());
    return oracle::field(f.characteristic(), f.degree(), std::move(mod));
}

inline oracle::Gen gen_of(const anticode::LinearCode& c) {
    const auto& g = c.generator();
    oracle::Gen out(g.rows(), oracle::Row(g.cols()));
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t j = 0; j < g.cols(); ++j) out[r][j] = g(r, j);
    return out;
}

inline anticode::Matrix matrix_of(const anticode::Field& f, const oracle::Gen& g) {
    return anticode::Matrix::from_rows(f, g);
}

}  // namespace support
