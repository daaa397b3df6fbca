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

#include "umbral/sheffer.hpp"

#include <algorithm>
#include <utility>

#include "umbral/errors.hpp"

namespace umbral {

std::string to_string(Basis b) {
    switch (b) {
    case Basis::Monomial:
        return "monomial";
    case Basis::Laguerre:
        return "laguerre";
    case Basis::LaguerreScaled:
        return "laguerre-scaled";
    case Basis::FallingFactorial:
        return "falling-factorial";
    case Basis::FamilySpecific:
        return "family-specific";
    }
    return "?";
}

ShefferPair::ShefferPair(PowerSeries g, PowerSeries f) : g_(std::move(g)), f_(std::move(f)) {
    if (!g_.is_invertible()) {
        throw NotInvertible("Sheffer pair requires g of order 0");
    }
    if (!f_.is_delta()) {
        throw NotDelta("Sheffer pair requires f of order 1");
    }
}

std::size_t ShefferPair::precision() const {
    return std::min(g_.precision(), f_.precision());
}

Rational functional_apply(const PowerSeries& f, const Polynomial& p) {
    if (p.is_zero()) {
        return Rational(0);
    }
    const std::size_t deg = *p.degree();
    if (f.precision() < deg) {
        throw InsufficientPrecision("functional needs precision >= degree of the polynomial");
    }
    Rational acc(0);
    for (std::size_t n = 0; n <= deg; ++n) {
        if (!p.coeffs()[n].is_zero()) {
            acc += p.coeffs()[n] * factorial(n) * f.coeff(n);
        }
    }
    return acc;
}

Polynomial operator_apply(const PowerSeries& f, const Polynomial& p) {
    if (p.is_zero()) {
        return Polynomial();
    }
    const std::size_t kmax = std::min(f.precision(), *p.degree());
    Polynomial result;
    Polynomial d = p;
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (!f.coeff(k).is_zero()) {
            result += d * f.coeff(k);
        }
        d = d.derivative();
    }
    return result;
}

namespace {

// Rows <g f^k | x^m> = m! [t^m](g f^k) for k, m <= n_max. Lower-triangular
// with nonzero diagonal k! g_0 f_1^k.
std::vector<std::vector<Rational>> moment_matrix(const ShefferPair& pair, std::size_t n_max) {
    std::vector<std::vector<Rational>> m(n_max + 1, std::vector<Rational>(n_max + 1));
    PowerSeries gfk = pair.g().truncated(n_max);
    const PowerSeries f = pair.f().truncated(n_max);
    for (std::size_t k = 0; k <= n_max; ++k) {
        if (k > 0) {
            gfk = gfk * f;
        }
        for (std::size_t col = 0; col <= n_max; ++col) {
            m[k][col] = factorial(col) * gfk.coeff(col);
        }
    }
    return m;
}

} // namespace

std::vector<Polynomial> sheffer_polynomials(const ShefferPair& pair, std::size_t n_max) {
    if (pair.precision() < n_max) {
        throw InsufficientPrecision("pair precision must be >= n_max");
    }
    const auto m = moment_matrix(pair, n_max);
    std::vector<Polynomial> seq;
    seq.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<Rational> s(n + 1, Rational(0));
        for (std::size_t k = n + 1; k-- > 0;) {
            Rational rhs = (k == n) ? Rational(factorial(n)) : Rational(0);
            for (std::size_t col = k + 1; col <= n; ++col) {
                rhs -= m[k][col] * s[col];
            }
            s[k] = rhs / m[k][k];
        }
        seq.emplace_back(std::move(s));
    }
    return seq;
}

std::vector<Polynomial> sheffer_polynomials_gf(const ShefferPair& pair, std::size_t n_max) {
    if (pair.precision() < n_max) {
        throw InsufficientPrecision("pair precision must be >= n_max");
    }
    const std::size_t prec = std::max<std::size_t>(n_max, 1);
    const PowerSeries fbar = pair.f().truncated(prec).reversion();
    PowerSeries column = pair.g().truncated(prec).compose(fbar).inverse(); // 1/g(fbar)
    // S_k(y) = k! sum_j [t^k]( (1/g(fbar)) fbar^j / j! ) y^j
    std::vector<std::vector<Rational>> coef(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) {
        coef[k].assign(k + 1, Rational(0));
    }
    for (std::size_t j = 0; j <= n_max; ++j) {
        if (j > 0) {
            column = column * fbar * Rational(1, static_cast<long>(j));
        }
        for (std::size_t k = j; k <= n_max; ++k) {
            coef[k][j] = factorial(k) * column.coeff(k);
        }
    }
    std::vector<Polynomial> seq;
    seq.reserve(n_max + 1);
    for (auto& c : coef) {
        seq.emplace_back(std::move(c));
    }
    return seq;
}

ShefferCheckResult sheffer_check(const ShefferPair& pair, const std::vector<Polynomial>& seq) {
    if (seq.empty()) {
        return {true, std::nullopt};
    }
    std::size_t max_deg = 0;
    for (const auto& p : seq) {
        if (auto d = p.degree()) {
            max_deg = std::max(max_deg, *d);
        }
    }
    if (pair.precision() < max_deg) {
        throw InsufficientPrecision("pair precision must cover the sequence degrees");
    }
    std::vector<PowerSeries> gfk;
    gfk.reserve(seq.size());
    gfk.push_back(pair.g().truncated(max_deg));
    const PowerSeries f = pair.f().truncated(max_deg);
    for (std::size_t k = 1; k < seq.size(); ++k) {
        gfk.push_back(gfk.back() * f);
    }
    for (std::size_t n = 0; n < seq.size(); ++n) {
        for (std::size_t k = 0; k < seq.size(); ++k) {
            const Rational found = functional_apply(gfk[k], seq[n]);
            const Rational expected = (n == k) ? Rational(factorial(n)) : Rational(0);
            if (found != expected) {
                return {false, ShefferCheckResult::Violation{n, k, found, expected}};
            }
        }
    }
    return {true, std::nullopt};
}

BasisExpansion connection_coefficients(const ShefferPair& source, const ShefferPair& target,
                                       std::size_t n) {
    if (source.precision() < n || target.precision() < n) {
        throw InsufficientPrecision("pair precisions must be >= n");
    }
    const std::size_t prec = std::max<std::size_t>(n, 1);
    const PowerSeries fbar = source.f().truncated(prec).reversion();
    const PowerSeries base = target.g().truncated(prec).compose(fbar) *
                             source.g().truncated(prec).compose(fbar).inverse();
    const PowerSeries lf = target.f().truncated(prec).compose(fbar);
    std::vector<Rational> c(n + 1);
    PowerSeries cur = base;
    const Rational nfact = factorial(n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            cur = cur * lf;
        }
        c[k] = nfact * cur.coeff(n) / factorial(k);
    }
    return BasisExpansion{Basis::FamilySpecific, std::move(c)};
}

Polynomial umbral_compose(const Polynomial& q, const std::vector<Polynomial>& p) {
    if (q.is_zero()) {
        return Polynomial();
    }
    const std::size_t deg = *q.degree();
    if (p.size() <= deg) {
        throw MissingBasisElement("umbral composition needs deg(q)+1 basis polynomials");
    }
    Polynomial result;
    for (std::size_t k = 0; k <= deg; ++k) {
        if (!q.coeffs()[k].is_zero()) {
            result += q.coeffs()[k] * p[k];
        }
    }
    return result;
}

} // namespace umbral
