#pragma once

#include <random>

#include "cyclorep/linalg.hpp"

namespace testing_support {

using namespace cyclorep;

/// Coefficients uniform in [-height, height] over denominators 1..den.
inline CycloNum random_num(std::mt19937_64& rng, int d, int height = 10, int den = 3) {
    const Field& f = Field::get(d);
    std::uniform_int_distribution<int> num(-height, height), de(1, den);
    Poly p;
    for (int i = 0; i < f.phi(); ++i) p.push_back(make_rational(num(rng), de(rng)));
    return CycloNum(f, p);
}

inline CycloNum random_nonzero(std::mt19937_64& rng, int d) {
    CycloNum z = random_num(rng, d);
    while (z.is_zero()) z = random_num(rng, d);
    return z;
}

inline CycloMatrix random_matrix(std::mt19937_64& rng, int d, std::size_t r, std::size_t c) {
    CycloMatrix m = CycloMatrix::zero(d, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_num(rng, d, 5, 2);
    return m;
}

inline CycloVec random_vec(std::mt19937_64& rng, int d, std::size_t n) {
    CycloVec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_num(rng, d, 5, 2));
    return v;
}

}  // namespace testing_support
