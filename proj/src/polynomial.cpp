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

#include "umbral/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace umbral {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coeff) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
}

std::optional<std::size_t> Polynomial::degree() const {
    if (c_.empty()) {
        return std::nullopt;
    }
    return c_.size() - 1;
}

Rational Polynomial::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) {
        return Polynomial();
    }
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size(), Rational(0));
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size(), Rational(0));
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) {
        c *= s;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(prod));
}

std::string Polynomial::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) {
            continue;
        }
        const Rational mag = abs(c_[i]);
        if (out.empty()) {
            if (c_[i].sign() < 0) {
                out += "-";
            }
        } else {
            out += c_[i].sign() < 0 ? " - " : " + ";
        }
        const bool unit = (mag == Rational(1));
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) {
                out += mag.str() + "*";
            }
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace umbral
