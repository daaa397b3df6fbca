/*
   Copyright 2026 The umbral project authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UMBRAL_TEST_SUPPORT_HPP
#define UMBRAL_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/power_series.hpp"
#include "umbral/rational.hpp"

namespace umbral::test {

inline std::mt19937 make_rng(unsigned seed = 0x5eedu) {
    return std::mt19937(seed);
}

inline Rational random_rational(std::mt19937& rng, long num_bound = 50, long den_bound = 12) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
    for (;;) {
        Rational r = random_rational(rng);
        if (!r.is_zero()) {
            return r;
        }
    }
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t max_degree) {
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    const std::size_t d = deg(rng);
    std::vector<Rational> c(d + 1);
    for (auto& v : c) {
        v = random_rational(rng);
    }
    return Polynomial(std::move(c));
}

inline PowerSeries random_series(std::mt19937& rng, std::size_t precision) {
    std::vector<Rational> c(precision + 1);
    for (auto& v : c) {
        v = random_rational(rng, 9, 6);
    }
    return PowerSeries(std::move(c));
}

inline PowerSeries random_invertible_series(std::mt19937& rng, std::size_t precision) {
    PowerSeries s = random_series(rng, precision);
    std::vector<Rational> c = s.coeffs();
    c[0] = random_nonzero_rational(rng);
    return PowerSeries(std::move(c));
}

inline PowerSeries random_delta_series(std::mt19937& rng, std::size_t precision) {
    PowerSeries s = random_series(rng, precision);
    std::vector<Rational> c = s.coeffs();
    c[0] = Rational(0);
    c[1] = random_nonzero_rational(rng);
    return PowerSeries(std::move(c));
}

} // namespace umbral::test

#endif
