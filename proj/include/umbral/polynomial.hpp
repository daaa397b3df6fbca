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

#ifndef UMBRAL_POLYNOMIAL_HPP
#define UMBRAL_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense univariate polynomial over Rational, coefficient k = coefficient
/// of x^k. The highest stored coefficient is nonzero; the zero polynomial
/// is the empty vector and its degree() is nullopt, never a sentinel int.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t degree, const Rational& coeff = Rational(1));

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const;

    /// Coefficient of x^k; zero beyond the stored degree.
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial derivative() const;

    /// Horner evaluation at an exact rational point.
    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Human-readable form such as "x^2 - x + 1/6" (for messages only).
    std::string str() const;

private:
    std::vector<Rational> c_;

    void trim();
};

} // namespace umbral

#endif
