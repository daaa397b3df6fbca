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

#ifndef UMBRAL_POWER_SERIES_HPP
#define UMBRAL_POWER_SERIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Truncated formal power series in t over Rational.
///
/// Stores the plain coefficients of t^0 .. t^N, where N is the precision:
/// the series is known exactly through t^N and nothing is claimed beyond.
/// Every binary operation returns the minimum of the input precisions, so
/// a result never pretends to more knowledge than its inputs carry.
class PowerSeries {
public:
    /// precision = coeffs.size() - 1; coeffs must be non-empty.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries zero(std::size_t precision);
    static PowerSeries constant(const Rational& c, std::size_t precision);

    std::size_t precision() const { return c_.size() - 1; }

    /// Coefficient of t^k; k must not exceed the precision.
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Smallest k with a nonzero coefficient; nullopt marks the zero
    /// series (as far as this truncation can tell).
    std::optional<std::size_t> order() const;
    bool is_invertible() const { return order() == std::optional<std::size_t>(0); }
    bool is_delta() const { return order() == std::optional<std::size_t>(1); }

    PowerSeries truncated(std::size_t precision) const;

    /// Reciprocal series b with (*this) * b = 1 up to precision.
    /// Throws NotInvertible when the constant term is zero.
    PowerSeries inverse() const;

    /// Substitution (*this)(inner(t)); inner must have zero constant term.
    PowerSeries compose(const PowerSeries& inner) const;

    /// Compositional inverse fbar with compose(fbar) = fbar.compose(*this) = t,
    /// computed by Lagrange inversion. Throws NotDelta unless order is 1.
    PowerSeries reversion() const;

    PowerSeries pow(std::size_t e) const;

    /// f(alpha * t): coefficient k scaled by alpha^k.
    PowerSeries with_scaled_argument(const Rational& alpha) const;

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(PowerSeries a, const Rational& s);
    friend PowerSeries operator*(const Rational& s, PowerSeries a);

    /// Equal precision and identical coefficients.
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

private:
    std::vector<Rational> c_;
};

namespace series {

PowerSeries monomial(std::size_t k, std::size_t precision); // t^k
PowerSeries geometric(std::size_t precision);               // 1/(1-t)
PowerSeries one_minus_t(std::size_t precision);
PowerSeries t_over_one_minus_t(std::size_t precision);      // t/(1-t)
PowerSeries t_over_t_minus_one(std::size_t precision);      // t/(t-1)
PowerSeries exponential(std::size_t precision);             // e^t
PowerSeries exponential_at(const Rational& y, std::size_t precision); // e^{yt}
PowerSeries exp_minus_one(std::size_t precision);           // e^t - 1
PowerSeries log_one_plus(std::size_t precision);            // log(1+t)

} // namespace series

} // namespace umbral

#endif
