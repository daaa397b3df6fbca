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

#include "umbral/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace umbral {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) {
        throw std::invalid_argument("power series needs at least the constant coefficient");
    }
}

PowerSeries PowerSeries::zero(std::size_t precision) {
    return PowerSeries(std::vector<Rational>(precision + 1, Rational(0)));
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t precision) {
    std::vector<Rational> v(precision + 1, Rational(0));
    v[0] = c;
    return PowerSeries(std::move(v));
}

const Rational& PowerSeries::coeff(std::size_t k) const {
    if (k >= c_.size()) {
        throw std::out_of_range("coefficient beyond series precision");
    }
    return c_[k];
}

std::optional<std::size_t> PowerSeries::order() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) {
            return k;
        }
    }
    return std::nullopt;
}

PowerSeries PowerSeries::truncated(std::size_t precision) const {
    if (precision >= this->precision()) {
        return *this;
    }
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + precision + 1));
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r(*this);
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = a.c_[k] + b.c_[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = a.c_[k] - b.c_[k];
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries operator*(PowerSeries a, const Rational& s) {
    for (auto& c : a.c_) {
        c *= s;
    }
    return a;
}

PowerSeries operator*(const Rational& s, PowerSeries a) {
    return std::move(a) * s;
}

PowerSeries PowerSeries::inverse() const {
    if (c_[0].is_zero()) {
        throw NotInvertible("series with zero constant term has no reciprocal");
    }
    const std::size_t n = precision();
    std::vector<Rational> b(n + 1, Rational(0));
    b[0] = Rational(1) / c_[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc += c_[j] * b[k - j];
        }
        b[k] = -acc / c_[0];
    }
    return PowerSeries(std::move(b));
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (!inner.c_[0].is_zero()) {
        throw InnerNotDelta("composition requires an inner series with zero constant term");
    }
    const std::size_t n = std::min(precision(), inner.precision());
    const PowerSeries in = inner.truncated(n);
    // Horner: coefficients of degree > n cannot influence t^0..t^n since
    // the inner series has order >= 1.
    PowerSeries acc = PowerSeries::constant(c_[std::min(precision(), n)], n);
    for (std::size_t i = std::min(precision(), n); i-- > 0;) {
        acc = acc * in + PowerSeries::constant(c_[i], n);
    }
    return acc;
}

PowerSeries PowerSeries::reversion() const {
    if (order() != std::optional<std::size_t>(1)) {
        throw NotDelta("compositional inverse requires a series of order 1");
    }
    const std::size_t n = precision(); // >= 1 because order 1 exists
    // Lagrange inversion: [t^m] fbar = (1/m) [t^{m-1}] (t/f)^m.
    std::vector<Rational> q(c_.begin() + 1, c_.end()); // f/t, precision n-1
    const PowerSeries inv = PowerSeries(std::move(q)).inverse();
    std::vector<Rational> r(n + 1, Rational(0));
    PowerSeries power = PowerSeries::constant(Rational(1), n - 1);
    for (std::size_t m = 1; m <= n; ++m) {
        power = power * inv;
        r[m] = power.coeff(m - 1) / Rational(static_cast<long>(m));
    }
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::pow(std::size_t e) const {
    PowerSeries acc = PowerSeries::constant(Rational(1), precision());
    for (std::size_t i = 0; i < e; ++i) {
        acc = acc * (*this);
    }
    return acc;
}

PowerSeries PowerSeries::with_scaled_argument(const Rational& alpha) const {
    std::vector<Rational> c(c_.size());
    Rational p(1);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        c[k] = c_[k] * p;
        p *= alpha;
    }
    return PowerSeries(std::move(c));
}

namespace series {

PowerSeries monomial(std::size_t k, std::size_t precision) {
    std::vector<Rational> c(precision + 1, Rational(0));
    if (k <= precision) {
        c[k] = Rational(1);
    }
    return PowerSeries(std::move(c));
}

PowerSeries geometric(std::size_t precision) {
    return PowerSeries(std::vector<Rational>(precision + 1, Rational(1)));
}

PowerSeries one_minus_t(std::size_t precision) {
    std::vector<Rational> c(precision + 1, Rational(0));
    c[0] = Rational(1);
    if (precision >= 1) {
        c[1] = Rational(-1);
    }
    return PowerSeries(std::move(c));
}

PowerSeries t_over_one_minus_t(std::size_t precision) {
    std::vector<Rational> c(precision + 1, Rational(1));
    c[0] = Rational(0);
    return PowerSeries(std::move(c));
}

PowerSeries t_over_t_minus_one(std::size_t precision) {
    std::vector<Rational> c(precision + 1, Rational(-1));
    c[0] = Rational(0);
    return PowerSeries(std::move(c));
}

PowerSeries exponential(std::size_t precision) {
    std::vector<Rational> c(precision + 1);
    for (std::size_t k = 0; k <= precision; ++k) {
        c[k] = Rational(mpz_class(1), factorial_int(k));
    }
    return PowerSeries(std::move(c));
}

PowerSeries exponential_at(const Rational& y, std::size_t precision) {
    std::vector<Rational> c(precision + 1);
    Rational yp(1);
    for (std::size_t k = 0; k <= precision; ++k) {
        c[k] = yp / factorial(k);
        yp *= y;
    }
    return PowerSeries(std::move(c));
}

PowerSeries exp_minus_one(std::size_t precision) {
    PowerSeries e = exponential(precision);
    return e - PowerSeries::constant(Rational(1), precision);
}

PowerSeries log_one_plus(std::size_t precision) {
    std::vector<Rational> c(precision + 1, Rational(0));
    for (std::size_t k = 1; k <= precision; ++k) {
        c[k] = Rational(k % 2 == 0 ? -1 : 1, static_cast<long>(k));
    }
    return PowerSeries(std::move(c));
}

} // namespace series

} // namespace umbral
