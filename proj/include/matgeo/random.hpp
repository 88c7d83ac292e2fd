#pragma once

#include <cstdint>
#include <random>

#include "matgeo/matrix.hpp"

namespace matgeo {

// Uniform draw from [0, n) by rejection. std::uniform_int_distribution is
// implementation-defined, so fixed-seed runs would differ across standard
// libraries; this sampler is bit-identical everywhere.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw Error("rng_below needs a positive bound");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

inline Matrix random_matrix(std::mt19937_64& rng, const FieldSpec& f, int rows, int cols) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, static_cast<Elt>(rng_below(rng, f.order())));
    return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, const FieldSpec& f, int n) {
    while (true) {
        Matrix m = random_matrix(rng, f, n, n);
        if (rank(m) == n) return m;
    }
}

}  // namespace matgeo
