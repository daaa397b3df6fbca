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

#include "umbral/families.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

#include "umbral/errors.hpp"

namespace umbral {

std::string to_string(BinomialConvention c) {
    return c == BinomialConvention::Generalized ? "generalized" : "zero-neg";
}

std::optional<BinomialConvention> parse_convention(std::string_view text) {
    if (text == "generalized") {
        return BinomialConvention::Generalized;
    }
    if (text == "zero-neg") {
        return BinomialConvention::ZeroOnNegativeTop;
    }
    return std::nullopt;
}

Rational binomial_under(BinomialConvention conv, long top, long l) {
    if (l < 0) {
        return Rational(0);
    }
    if (conv == BinomialConvention::ZeroOnNegativeTop) {
        if (l == 0) {
            return Rational(1);
        }
        if (top < 0 || top < l) {
            return Rational(0);
        }
    }
    return binomial(top, static_cast<unsigned long>(l));
}

FamilyTag FamilyTag::simple(Kind kind) {
    if (kind == Kind::FrobeniusEuler) {
        throw BadParams("frobenius-euler needs a lambda parameter");
    }
    return FamilyTag{kind, std::nullopt};
}

FamilyTag FamilyTag::frobenius(const Rational& lambda) {
    if (lambda == Rational(1)) {
        throw LambdaIsOne("frobenius-euler lambda must differ from 1");
    }
    return FamilyTag{Kind::FrobeniusEuler, lambda};
}

std::optional<FamilyTag::Kind> parse_family(std::string_view text) {
    if (text == "monomial") {
        return FamilyTag::Kind::Monomial;
    }
    if (text == "laguerre") {
        return FamilyTag::Kind::Laguerre;
    }
    if (text == "bernoulli") {
        return FamilyTag::Kind::Bernoulli;
    }
    if (text == "euler") {
        return FamilyTag::Kind::Euler;
    }
    if (text == "frobenius-euler") {
        return FamilyTag::Kind::FrobeniusEuler;
    }
    if (text == "falling-factorial") {
        return FamilyTag::Kind::FallingFactorial;
    }
    return std::nullopt;
}

std::string to_string(FamilyTag::Kind kind) {
    switch (kind) {
    case FamilyTag::Kind::Monomial:
        return "monomial";
    case FamilyTag::Kind::Laguerre:
        return "laguerre";
    case FamilyTag::Kind::Bernoulli:
        return "bernoulli";
    case FamilyTag::Kind::Euler:
        return "euler";
    case FamilyTag::Kind::FrobeniusEuler:
        return "frobenius-euler";
    case FamilyTag::Kind::FallingFactorial:
        return "falling-factorial";
    }
    return "?";
}

Polynomial family_polynomial(const FamilyTag& tag, std::size_t n) {
    switch (tag.kind) {
    case FamilyTag::Kind::Monomial:
        return Polynomial::monomial(n);
    case FamilyTag::Kind::Laguerre:
        return laguerre(n);
    case FamilyTag::Kind::Bernoulli:
        return bernoulli(n);
    case FamilyTag::Kind::Euler:
        return euler(n);
    case FamilyTag::Kind::FrobeniusEuler:
        if (!tag.lambda) {
            throw BadParams("frobenius-euler needs a lambda parameter");
        }
        return frobenius_euler(n, *tag.lambda);
    case FamilyTag::Kind::FallingFactorial:
        return falling_factorial(n);
    }
    throw BadParams("unknown family");
}

Polynomial laguerre(std::size_t n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        const Rational b(binomial_int(mpz_class(static_cast<long>(n)), r), factorial_int(r));
        c[r] = (r % 2 == 0) ? b : -b;
    }
    return Polynomial(std::move(c));
}

ExponentialPolynomial ExponentialPolynomial::derivative() const {
    return ExponentialPolynomial{poly.derivative() - poly};
}

Polynomial laguerre_rodrigues(std::size_t n) {
    ExponentialPolynomial ep{Polynomial::monomial(n)};
    for (std::size_t i = 0; i < n; ++i) {
        ep = ep.derivative();
    }
    return ep.poly * (Rational(1) / factorial(n));
}

namespace {

// (e^t - 1)/t known exactly through t^prec: coefficient k is 1/(k+1)!.
PowerSeries bernoulli_g(std::size_t prec) {
    std::vector<Rational> c(prec + 1);
    for (std::size_t k = 0; k <= prec; ++k) {
        c[k] = Rational(mpz_class(1), factorial_int(k + 1));
    }
    return PowerSeries(std::move(c));
}

// (e^t + 1)/2
PowerSeries euler_g(std::size_t prec) {
    std::vector<Rational> c(prec + 1);
    c[0] = Rational(1);
    for (std::size_t k = 1; k <= prec; ++k) {
        c[k] = Rational(mpz_class(1), 2 * factorial_int(k));
    }
    return PowerSeries(std::move(c));
}

// (e^t - lambda)/(1 - lambda)
PowerSeries frobenius_g(const Rational& lambda, std::size_t prec) {
    if (lambda == Rational(1)) {
        throw LambdaIsOne("frobenius-euler lambda must differ from 1");
    }
    std::vector<Rational> c(prec + 1);
    c[0] = Rational(1);
    const Rational scale = Rational(1) / (Rational(1) - lambda);
    for (std::size_t k = 1; k <= prec; ++k) {
        c[k] = scale / factorial(k);
    }
    return PowerSeries(std::move(c));
}

// Numbers N_k = k! [t^k] (1/g) for the invertible series g of the family.
std::vector<Rational> numbers_from_g(const PowerSeries& g, std::size_t n) {
    const PowerSeries inv = g.inverse();
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        out[k] = factorial(k) * inv.coeff(k);
    }
    return out;
}

// P_n(x) = sum_k C(n,k) N_k x^{n-k}: the binomial convolution shared by
// the Bernoulli, Euler and Frobenius-Euler families.
Polynomial polynomial_from_numbers(const std::vector<Rational>& numbers, std::size_t n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k) {
        c[n - k] = binomial(static_cast<long>(n), k) * numbers[k];
    }
    return Polynomial(std::move(c));
}

} // namespace

Polynomial bernoulli(std::size_t n) {
    return polynomial_from_numbers(bernoulli_numbers_upto(n), n);
}

Polynomial euler(std::size_t n) {
    return polynomial_from_numbers(euler_numbers_upto(n), n);
}

Polynomial frobenius_euler(std::size_t n, const Rational& lambda) {
    return polynomial_from_numbers(frobenius_euler_numbers_upto(n, lambda), n);
}

std::vector<Rational> bernoulli_numbers_upto(std::size_t n) {
    return numbers_from_g(bernoulli_g(n), n);
}

std::vector<Rational> euler_numbers_upto(std::size_t n) {
    return numbers_from_g(euler_g(n), n);
}

std::vector<Rational> frobenius_euler_numbers_upto(std::size_t n, const Rational& lambda) {
    return numbers_from_g(frobenius_g(lambda, n), n);
}

Rational bernoulli_number(std::size_t k) {
    return bernoulli_numbers_upto(k)[k];
}

Rational euler_number(std::size_t k) {
    return euler_numbers_upto(k)[k];
}

Rational frobenius_euler_number(std::size_t k, const Rational& lambda) {
    return frobenius_euler_numbers_upto(k, lambda)[k];
}

namespace {

std::mutex g_stirling_mutex;
std::vector<std::vector<mpz_class>> g_stirling_rows = {{mpz_class(1)}};

} // namespace

Rational stirling2(std::size_t n, std::size_t k) {
    if (k > n) {
        return Rational(0);
    }
    std::lock_guard<std::mutex> lock(g_stirling_mutex);
    while (g_stirling_rows.size() <= n) {
        const auto& prev = g_stirling_rows.back();
        const std::size_t m = g_stirling_rows.size();
        std::vector<mpz_class> row(m + 1);
        row[0] = 0;
        row[m] = 1;
        for (std::size_t j = 1; j < m; ++j) {
            row[j] = mpz_class(static_cast<long>(j)) * prev[j] + prev[j - 1];
        }
        g_stirling_rows.push_back(std::move(row));
    }
    return Rational(g_stirling_rows[n][k], mpz_class(1));
}

Polynomial falling_factorial(std::size_t k) {
    Polynomial p = Polynomial::constant(Rational(1));
    for (std::size_t j = 0; j < k; ++j) {
        p = p * Polynomial(std::vector<Rational>{Rational(-static_cast<long>(j)), Rational(1)});
    }
    return p;
}

Rational gamma_moment(std::size_t m) {
    return factorial(m);
}

Rational laguerre_inner_product(const Polynomial& p, const Polynomial& q) {
    const Polynomial prod = p * q;
    Rational acc(0);
    for (std::size_t m = 0; m < prod.coeffs().size(); ++m) {
        if (!prod.coeffs()[m].is_zero()) {
            acc += prod.coeffs()[m] * gamma_moment(m);
        }
    }
    return acc;
}

BasisExpansion laguerre_expand(const Polynomial& p) {
    if (p.is_zero()) {
        return BasisExpansion{Basis::Laguerre, {}};
    }
    const std::size_t deg = *p.degree();
    std::vector<Rational> c(deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) {
        c[k] = laguerre_inner_product(p, laguerre(k));
    }
    return BasisExpansion{Basis::Laguerre, std::move(c)};
}

BasisExpansion monomial_to_laguerre(std::size_t n) {
    std::vector<Rational> c(n + 1);
    const Rational nfact = factorial(n);
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational b = nfact * binomial(static_cast<long>(n), k);
        c[k] = (k % 2 == 0) ? b : -b;
    }
    return BasisExpansion{Basis::Laguerre, std::move(c)};
}

BasisExpansion monomial_to_falling_factorial(std::size_t n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        c[k] = stirling2(n, k);
    }
    return BasisExpansion{Basis::FallingFactorial, std::move(c)};
}

BasisExpansion falling_factorial_expand(const Polynomial& p) {
    if (p.is_zero()) {
        return BasisExpansion{Basis::FallingFactorial, {}};
    }
    const std::size_t deg = *p.degree();
    std::vector<Rational> c(deg + 1, Rational(0));
    for (std::size_t n = 0; n <= deg; ++n) {
        if (p.coeffs()[n].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            c[k] += p.coeffs()[n] * stirling2(n, k);
        }
    }
    return BasisExpansion{Basis::FallingFactorial, std::move(c)};
}

Rational euler_number_closed_form(std::size_t k) {
    Rational acc(0);
    for (std::size_t j = 0; j <= k; ++j) {
        acc += pow(Rational(-1, 2), static_cast<long>(j)) * factorial(j) * stirling2(k, j);
    }
    return acc;
}

Rational bernoulli_number_closed_form(std::size_t k) {
    Rational acc(0);
    for (std::size_t j = 0; j <= k; ++j) {
        for (std::size_t l = 0; l <= j; ++l) {
            const Rational term = binomial(static_cast<long>(j), l) * stirling2(k + l, l) /
                                  binomial(static_cast<long>(k + l), l);
            acc += (l % 2 == 0) ? term : -term;
        }
    }
    return acc;
}

Rational frobenius_number_closed_form(std::size_t k, const Rational& lambda) {
    if (lambda == Rational(1)) {
        throw LambdaIsOne("frobenius-euler lambda must differ from 1");
    }
    Rational acc(0);
    for (std::size_t j = 0; j <= k; ++j) {
        acc += factorial(j) * stirling2(k, j) * pow(lambda - Rational(1), -static_cast<long>(j));
    }
    return acc;
}

Polynomial reconstruct(const BasisExpansion& e) {
    Polynomial acc;
    switch (e.basis) {
    case Basis::Monomial:
        return Polynomial(e.coeffs);
    case Basis::Laguerre:
        for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
            if (!e.coeffs[k].is_zero()) {
                acc += e.coeffs[k] * laguerre(k);
            }
        }
        return acc;
    case Basis::LaguerreScaled:
        for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
            if (!e.coeffs[k].is_zero()) {
                acc += e.coeffs[k] * factorial(k) * laguerre(k);
            }
        }
        return acc;
    case Basis::FallingFactorial:
        for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
            if (!e.coeffs[k].is_zero()) {
                acc += e.coeffs[k] * falling_factorial(k);
            }
        }
        return acc;
    case Basis::FamilySpecific:
        break;
    }
    throw BadParams("family-specific expansions carry no intrinsic basis to rebuild from");
}

namespace pairs {

namespace {

std::size_t at_least_one(std::size_t precision) {
    return std::max<std::size_t>(precision, 1);
}

} // namespace

ShefferPair monomial(std::size_t precision) {
    const std::size_t p = at_least_one(precision);
    return ShefferPair(PowerSeries::constant(Rational(1), p), series::monomial(1, p));
}

ShefferPair bernoulli(std::size_t precision) {
    const std::size_t p = at_least_one(precision);
    return ShefferPair(bernoulli_g(p), series::monomial(1, p));
}

ShefferPair euler(std::size_t precision) {
    const std::size_t p = at_least_one(precision);
    return ShefferPair(euler_g(p), series::monomial(1, p));
}

ShefferPair frobenius_euler(const Rational& lambda, std::size_t precision) {
    const std::size_t p = at_least_one(precision);
    return ShefferPair(frobenius_g(lambda, p), series::monomial(1, p));
}

ShefferPair laguerre_scaled(std::size_t precision) {
    const std::size_t p = at_least_one(precision);
    return ShefferPair(series::geometric(p), series::t_over_t_minus_one(p));
}

ShefferPair falling_factorial(std::size_t precision) {
    const std::size_t p = at_least_one(precision);
    return ShefferPair(PowerSeries::constant(Rational(1), p), series::exp_minus_one(p));
}

} // namespace pairs

} // namespace umbral
