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

#include "umbral/audit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "umbral/errors.hpp"
#include "umbral/sheffer.hpp"

namespace umbral {

namespace {

long as_long(std::size_t v) {
    return static_cast<long>(v);
}

Polynomial laguerre_recombine(const std::vector<Rational>& c) {
    Polynomial acc;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) {
            acc += c[k] * laguerre(k);
        }
    }
    return acc;
}

// The intermediate transfer form shared by the corrected Euler, Bernoulli
// and Frobenius-Euler expansions:
//   C_k = n! sum_{l=0}^{n-k} (-1)^k C(k+l, l) N_{n-k-l} / (n-k-l)!
std::vector<Rational> intermediate_transfer_coeffs(const std::vector<Rational>& numbers,
                                                   std::size_t n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t l = 0; l + k <= n; ++l) {
            acc += binomial(as_long(k + l), l) * numbers[n - k - l] / factorial(n - k - l);
        }
        acc *= factorial(n);
        c[k] = (k % 2 == 0) ? acc : -acc;
    }
    return c;
}

// The printed transfer form of the same expansions:
//   C_k = n! sum_{l=0}^{n-k} C(k-l-2, l) (-1)^k N_{n-k-l} / (k! (n-k-l)!)
// The binomial C(k-l-2, l) can see a negative top, so the convention is a
// parameter.
std::vector<Rational> printed_transfer_coeffs(const std::vector<Rational>& numbers, std::size_t n,
                                              BinomialConvention conv) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t l = 0; l + k <= n; ++l) {
            acc += binomial_under(conv, as_long(k) - as_long(l) - 2, as_long(l)) *
                   numbers[n - k - l] / factorial(n - k - l);
        }
        acc *= factorial(n) / factorial(k);
        c[k] = (k % 2 == 0) ? acc : -acc;
    }
    return c;
}

// Euler expansion with the sign slip kept as printed:
//   C_k = n! sum_l sum_j (-1)^{k+l} C(k+l, l) j! S2(n-k-l, j) / (2^j (n-k-l)!)
std::vector<Rational> euler_stirling_printed_coeffs(std::size_t n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t l = 0; l + k <= n; ++l) {
            Rational inner(0);
            for (std::size_t j = 0; j + k + l <= n; ++j) {
                inner += factorial(j) * stirling2(n - k - l, j) /
                         (pow(Rational(2), as_long(j)) * factorial(n - k - l));
            }
            inner *= binomial(as_long(k + l), l);
            acc += (l % 2 == 0) ? inner : -inner;
        }
        acc *= factorial(n);
        c[k] = (k % 2 == 0) ? acc : -acc;
    }
    return c;
}

// Bernoulli expansion through Stirling numbers:
//   C_k = n! sum_l sum_j sum_m (-1)^{m+k} C(j,m) S2(n-k-l+m, m)
//         / ((n-k-l)! C(n-k-l+m, m))
std::vector<Rational> bernoulli_stirling_coeffs(std::size_t n) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t l = 0; l + k <= n; ++l) {
            const std::size_t r = n - k - l;
            for (std::size_t j = 0; j <= r; ++j) {
                for (std::size_t m = 0; m <= j; ++m) {
                    const Rational term = binomial(as_long(j), m) * stirling2(r + m, m) /
                                          (factorial(r) * binomial(as_long(r + m), m));
                    acc += (m % 2 == 0) ? term : -term;
                }
            }
        }
        acc *= factorial(n);
        c[k] = (k % 2 == 0) ? acc : -acc;
    }
    return c;
}

// Frobenius-Euler expansion through Stirling numbers:
//   C_k = n! sum_l sum_j (-1)^k C(k+l, l) j! S2(n-k-l, j)
//         / ((n-k-l)! (lambda-1)^j)
std::vector<Rational> frobenius_stirling_coeffs(std::size_t n, const Rational& lambda) {
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational acc(0);
        for (std::size_t l = 0; l + k <= n; ++l) {
            Rational inner(0);
            for (std::size_t j = 0; j + k + l <= n; ++j) {
                inner += factorial(j) * stirling2(n - k - l, j) /
                         (factorial(n - k - l) * pow(lambda - Rational(1), as_long(j)));
            }
            acc += binomial(as_long(k + l), l) * inner;
        }
        acc *= factorial(n);
        c[k] = (k % 2 == 0) ? acc : -acc;
    }
    return c;
}

Polynomial laguerre_ode_residual(std::size_t n) {
    const Polynomial ln = laguerre(n);
    const Polynomial x = Polynomial::monomial(1);
    return x * ln.derivative().derivative() +
           (Polynomial::constant(Rational(1)) - x) * ln.derivative() +
           Rational(as_long(n)) * ln;
}

Polynomial normalized_pair_polynomial(const ShefferPair& pair, std::size_t n) {
    return sheffer_polynomials(pair, n)[n] * (Rational(1) / factorial(n));
}

std::vector<Polynomial> scaled_laguerre_basis(std::size_t n) {
    std::vector<Polynomial> p;
    p.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        p.push_back(factorial(k) * laguerre(k));
    }
    return p;
}

std::vector<Polynomial> laguerre_basis(std::size_t n) {
    std::vector<Polynomial> p;
    p.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        p.push_back(laguerre(k));
    }
    return p;
}

Polynomial alternating_binomial_laguerre_sum(std::size_t n) {
    Polynomial acc;
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational b = binomial(as_long(n), k);
        acc += ((k % 2 == 0) ? b : -b) * laguerre(k);
    }
    return acc;
}

std::vector<IdentityDescriptor> build_registry() {
    std::vector<IdentityDescriptor> reg;

    auto add = [&reg](IdentityDescriptor d) { reg.push_back(std::move(d)); };

    {
        IdentityDescriptor d;
        d.id = "eq9-ode";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "x L_n'' + (1-x) L_n' + n L_n = 0";
        d.lhs_poly = [](const EvalParams& p) { return laguerre_ode_residual(p.n); };
        d.rhs_poly = [](const EvalParams&) { return Polynomial(); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq10-rodrigues";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "Rodrigues route equals the closed form of L_n";
        d.lhs_poly = [](const EvalParams& p) { return laguerre_rodrigues(p.n); };
        d.rhs_poly = [](const EvalParams& p) { return laguerre(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq11-orth";
        d.kind = IdentityKind::GramRow;
        d.summary = "<L_n, L_m> = delta_{n,m} under the e^{-x} weight";
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq19-lowering";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "f(t) applied to n! L_n lowers to n (n-1)! L_{n-1} for f = t/(t-1)";
        d.lhs_poly = [](const EvalParams& p) {
            const std::size_t prec = std::max<std::size_t>(p.n, 1);
            return operator_apply(series::t_over_t_minus_one(prec),
                                  factorial(p.n) * laguerre(p.n));
        };
        d.rhs_poly = [](const EvalParams& p) {
            if (p.n == 0) {
                return Polynomial();
            }
            return Polynomial(factorial(p.n) * laguerre(p.n - 1));
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq26";
        d.kind = IdentityKind::LaguerreExpansion;
        d.summary = "x^n = n! sum_k (-1)^k C(n,k) L_k(x)";
        d.lhs_poly = [](const EvalParams& p) { return Polynomial::monomial(p.n); };
        d.rhs_laguerre = [](const EvalParams& p) { return monomial_to_laguerre(p.n).coeffs; };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq28";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "x^n = sum_k S2(n,k) (x)_k";
        d.lhs_poly = [](const EvalParams& p) { return Polynomial::monomial(p.n); };
        d.rhs_poly = [](const EvalParams& p) {
            return reconstruct(monomial_to_falling_factorial(p.n));
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq33-umbral";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "umbral self-composition of n! L_n over the k! L_k basis gives x^n";
        d.lhs_poly = [](const EvalParams& p) {
            return umbral_compose(factorial(p.n) * laguerre(p.n), scaled_laguerre_basis(p.n));
        };
        d.rhs_poly = [](const EvalParams& p) { return Polynomial::monomial(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq39";
        d.kind = IdentityKind::NumberIdentity;
        d.summary = "E_n = sum_j (-1/2)^j j! S2(n,j) vs the generating function";
        d.lhs_value = [](const EvalParams& p) { return euler_number_closed_form(p.n); };
        d.rhs_value = [](const EvalParams& p) { return euler_number(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq48";
        d.kind = IdentityKind::NumberIdentity;
        d.summary = "B_n = sum_j sum_l (-1)^l C(j,l) S2(n+l,l)/C(n+l,l) vs the generating function";
        d.lhs_value = [](const EvalParams& p) { return bernoulli_number_closed_form(p.n); };
        d.rhs_value = [](const EvalParams& p) { return bernoulli_number(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "eq57";
        d.kind = IdentityKind::NumberIdentity;
        d.takes_lambda = true;
        d.summary = "H_n(lambda) = sum_j j!/(lambda-1)^j S2(n,j) vs the generating function";
        d.lhs_value = [](const EvalParams& p) {
            return frobenius_number_closed_form(p.n, *p.lambda);
        };
        d.rhs_value = [](const EvalParams& p) { return frobenius_euler_number(p.n, *p.lambda); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm1";
        d.kind = IdentityKind::PolynomialIdentity;
        d.takes_k = true;
        d.summary = "L_k(x) = (-1)^k/(n! C(n,k)) S2(n,k) (x)_k";
        d.lhs_poly = [](const EvalParams& p) { return laguerre(*p.k); };
        d.rhs_poly = [](const EvalParams& p) {
            const std::size_t k = *p.k;
            const Rational scale = stirling2(p.n, k) /
                                   (factorial(p.n) * binomial(as_long(p.n), k));
            return falling_factorial(k) * ((k % 2 == 0) ? scale : -scale);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm2-literal";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "(1/n!)(L_n o L)(x) = sum_k (-1)^k C(n,k) L_k, composing unscaled L_k";
        d.lhs_poly = [](const EvalParams& p) {
            return umbral_compose(laguerre(p.n), laguerre_basis(p.n)) *
                   (Rational(1) / factorial(p.n));
        };
        d.rhs_poly = [](const EvalParams& p) { return alternating_binomial_laguerre_sum(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm2-normalized";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "(1/n!)(n!L_n o k!L)(x) = sum_k (-1)^k C(n,k) L_k, composing n! L_n";
        d.lhs_poly = [](const EvalParams& p) {
            return umbral_compose(factorial(p.n) * laguerre(p.n), scaled_laguerre_basis(p.n)) *
                   (Rational(1) / factorial(p.n));
        };
        d.rhs_poly = [](const EvalParams& p) { return alternating_binomial_laguerre_sum(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm3-printed";
        d.kind = IdentityKind::LaguerreExpansion;
        d.summary = "E_n in the Laguerre basis via Stirling numbers, final printed form";
        d.lhs_poly = [](const EvalParams& p) { return euler(p.n); };
        d.rhs_laguerre = [](const EvalParams& p) { return euler_stirling_printed_coeffs(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm3-eq35";
        d.kind = IdentityKind::LaguerreExpansion;
        d.summary = "E_n in the Laguerre basis: intermediate transfer form with Stirling-closed E_k";
        d.lhs_poly = [](const EvalParams& p) { return euler(p.n); };
        d.rhs_laguerre = [](const EvalParams& p) {
            std::vector<Rational> numbers(p.n + 1);
            for (std::size_t m = 0; m <= p.n; ++m) {
                numbers[m] = euler_number_closed_form(m);
            }
            return intermediate_transfer_coeffs(numbers, p.n);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm4";
        d.kind = IdentityKind::LaguerreExpansion;
        d.summary = "B_n in the Laguerre basis via Stirling numbers, final printed form";
        d.lhs_poly = [](const EvalParams& p) { return bernoulli(p.n); };
        d.rhs_laguerre = [](const EvalParams& p) { return bernoulli_stirling_coeffs(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm5";
        d.kind = IdentityKind::LaguerreExpansion;
        d.takes_lambda = true;
        d.summary = "H_n(x|lambda) in the Laguerre basis via Stirling numbers";
        d.lhs_poly = [](const EvalParams& p) { return frobenius_euler(p.n, *p.lambda); };
        d.rhs_laguerre = [](const EvalParams& p) {
            return frobenius_stirling_coeffs(p.n, *p.lambda);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm6-printed";
        d.kind = IdentityKind::LaguerreExpansion;
        d.convention_sensitive = true;
        d.summary = "E_n in the Laguerre basis with C(k-l-2,l) weights, final printed form";
        d.lhs_poly = [](const EvalParams& p) { return euler(p.n); };
        d.rhs_laguerre = [](const EvalParams& p) {
            return printed_transfer_coeffs(euler_numbers_upto(p.n), p.n, p.convention);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm6-eq35";
        d.kind = IdentityKind::LaguerreExpansion;
        d.summary = "E_n in the Laguerre basis: intermediate transfer form with generating-function E_k";
        d.lhs_poly = [](const EvalParams& p) { return euler(p.n); };
        d.rhs_laguerre = [](const EvalParams& p) {
            return intermediate_transfer_coeffs(euler_numbers_upto(p.n), p.n);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm7-printed";
        d.kind = IdentityKind::LaguerreExpansion;
        d.convention_sensitive = true;
        d.summary = "B_n in the Laguerre basis with C(k-l-2,l) weights, final printed form";
        d.lhs_poly = [](const EvalParams& p) { return bernoulli(p.n); };
        d.rhs_laguerre = [](const EvalParams& p) {
            return printed_transfer_coeffs(bernoulli_numbers_upto(p.n), p.n, p.convention);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "thm7-eq50";
        d.kind = IdentityKind::LaguerreExpansion;
        d.summary = "B_n in the Laguerre basis: intermediate transfer form with generating-function B_k";
        d.lhs_poly = [](const EvalParams& p) { return bernoulli(p.n); };
        d.rhs_laguerre = [](const EvalParams& p) {
            return intermediate_transfer_coeffs(bernoulli_numbers_upto(p.n), p.n);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hfinal-printed";
        d.kind = IdentityKind::LaguerreExpansion;
        d.takes_lambda = true;
        d.convention_sensitive = true;
        d.summary = "H_n(x|lambda) in the Laguerre basis with C(k-l-2,l) weights, final display";
        d.lhs_poly = [](const EvalParams& p) { return frobenius_euler(p.n, *p.lambda); };
        d.rhs_laguerre = [](const EvalParams& p) {
            return printed_transfer_coeffs(frobenius_euler_numbers_upto(p.n, *p.lambda), p.n,
                                           p.convention);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "hfinal-eq59";
        d.kind = IdentityKind::LaguerreExpansion;
        d.takes_lambda = true;
        d.summary = "H_n(x|lambda) in the Laguerre basis: intermediate transfer form";
        d.lhs_poly = [](const EvalParams& p) { return frobenius_euler(p.n, *p.lambda); };
        d.rhs_laguerre = [](const EvalParams& p) {
            return intermediate_transfer_coeffs(frobenius_euler_numbers_upto(p.n, *p.lambda), p.n);
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "cor-post-thm6";
        d.kind = IdentityKind::NumberIdentity;
        d.takes_k = true;
        d.convention_sensitive = true;
        d.summary = "displayed equality between the two Euler coefficient sums, per (n, k)";
        d.lhs_value = [](const EvalParams& p) {
            const std::size_t k = *p.k;
            const auto numbers = euler_numbers_upto(p.n);
            Rational acc(0);
            for (std::size_t l = 0; l + k <= p.n; ++l) {
                acc += binomial_under(p.convention, as_long(k) - as_long(l) - 2, as_long(l)) *
                       numbers[p.n - k - l] / (factorial(k) * factorial(p.n - k - l));
            }
            return acc;
        };
        d.rhs_value = [](const EvalParams& p) {
            const std::size_t k = *p.k;
            Rational acc(0);
            for (std::size_t l = 0; l + k <= p.n; ++l) {
                Rational inner(0);
                for (std::size_t j = 0; j + k + l <= p.n; ++j) {
                    inner += factorial(j) * stirling2(p.n - k - l, j) /
                             (pow(Rational(2), as_long(j)) * factorial(p.n - k - l));
                }
                inner *= binomial(as_long(k + l), l);
                acc += (l % 2 == 0) ? inner : -inner;
            }
            return acc;
        };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "laguerre-pair-eq30";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "does the pair (1-t, t/(1-t)) generate n! L_n?";
        d.lhs_poly = [](const EvalParams& p) {
            const std::size_t prec = std::max<std::size_t>(p.n, 1);
            return normalized_pair_polynomial(
                ShefferPair(series::one_minus_t(prec), series::t_over_one_minus_t(prec)), p.n);
        };
        d.rhs_poly = [](const EvalParams& p) { return laguerre(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "laguerre-pair-eq63";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "does the pair (1-t, t/(t-1)) generate n! L_n?";
        d.lhs_poly = [](const EvalParams& p) {
            const std::size_t prec = std::max<std::size_t>(p.n, 1);
            return normalized_pair_polynomial(
                ShefferPair(series::one_minus_t(prec), series::t_over_t_minus_one(prec)), p.n);
        };
        d.rhs_poly = [](const EvalParams& p) { return laguerre(p.n); };
        add(std::move(d));
    }
    {
        IdentityDescriptor d;
        d.id = "laguerre-pair-derived";
        d.kind = IdentityKind::PolynomialIdentity;
        d.summary = "does the pair (1/(1-t), t/(t-1)) generate n! L_n?";
        d.lhs_poly = [](const EvalParams& p) {
            return normalized_pair_polynomial(pairs::laguerre_scaled(p.n), p.n);
        };
        d.rhs_poly = [](const EvalParams& p) { return laguerre(p.n); };
        add(std::move(d));
    }

    return reg;
}

std::pair<std::vector<Rational>, std::vector<Rational>> pad_to_common(std::vector<Rational> a,
                                                                      std::vector<Rational> b) {
    const std::size_t len = std::max(a.size(), b.size());
    a.resize(len, Rational(0));
    b.resize(len, Rational(0));
    return {std::move(a), std::move(b)};
}

VerificationReport assemble_report(const IdentityDescriptor& d, const EvalParams& p,
                                   std::vector<Rational> lhs, std::vector<Rational> rhs) {
    auto [l, r] = pad_to_common(std::move(lhs), std::move(rhs));
    VerificationReport rep;
    rep.identity = d.id;
    rep.n = p.n;
    rep.k = d.takes_k ? p.k : std::nullopt;
    rep.lambda = d.takes_lambda ? p.lambda : std::nullopt;
    rep.convention = d.convention_sensitive ? std::optional<BinomialConvention>(p.convention)
                                            : std::nullopt;
    rep.match = true;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] != r[i]) {
            rep.match = false;
            rep.first_diff = FirstDiff{i, l[i], r[i]};
            break;
        }
    }
    rep.lhs = std::move(l);
    rep.rhs = std::move(r);
    return rep;
}

void validate_params(const IdentityDescriptor& d, const EvalParams& p) {
    if (d.takes_k) {
        if (!p.k) {
            throw BadParams(d.id + " requires a k parameter");
        }
        if (*p.k > p.n) {
            throw BadParams(d.id + " requires k <= n");
        }
    } else if (p.k) {
        throw BadParams(d.id + " does not take a k parameter");
    }
    if (d.takes_lambda) {
        if (!p.lambda) {
            throw BadParams(d.id + " requires a lambda parameter");
        }
        if (*p.lambda == Rational(1)) {
            throw BadParams("lambda must differ from 1");
        }
    } else if (p.lambda) {
        throw BadParams(d.id + " does not take a lambda parameter");
    }
}

} // namespace

const std::vector<IdentityDescriptor>& identity_registry() {
    static const std::vector<IdentityDescriptor> reg = build_registry();
    return reg;
}

const IdentityDescriptor& find_identity(const std::string& id) {
    for (const auto& d : identity_registry()) {
        if (d.id == id) {
            return d;
        }
    }
    throw UnknownIdentity("no identity registered under '" + id + "'");
}

std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    ids.reserve(identity_registry().size());
    for (const auto& d : identity_registry()) {
        ids.push_back(d.id);
    }
    return ids;
}

VerificationReport evaluate_identity(const std::string& id, const EvalParams& params) {
    const IdentityDescriptor& d = find_identity(id);
    validate_params(d, params);

    switch (d.kind) {
    case IdentityKind::LaguerreExpansion: {
        const Polynomial lhs = d.lhs_poly(params);
        const Polynomial rhs = laguerre_recombine(d.rhs_laguerre(params));
        return assemble_report(d, params, lhs.coeffs(), rhs.coeffs());
    }
    case IdentityKind::PolynomialIdentity: {
        const Polynomial lhs = d.lhs_poly(params);
        const Polynomial rhs = d.rhs_poly(params);
        return assemble_report(d, params, lhs.coeffs(), rhs.coeffs());
    }
    case IdentityKind::NumberIdentity: {
        return assemble_report(d, params, {d.lhs_value(params)}, {d.rhs_value(params)});
    }
    case IdentityKind::GramRow: {
        const Polynomial ln = laguerre(params.n);
        std::vector<Rational> row(params.n + 1);
        std::vector<Rational> unit(params.n + 1, Rational(0));
        for (std::size_t m = 0; m <= params.n; ++m) {
            row[m] = laguerre_inner_product(ln, laguerre(m));
        }
        unit[params.n] = Rational(1);
        return assemble_report(d, params, std::move(row), std::move(unit));
    }
    }
    throw BadParams("unhandled identity kind");
}

std::vector<VerificationReport> audit_range(const AuditRequest& req) {
    std::vector<std::string> ids = req.ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (const auto& id : ids) {
        find_identity(id); // throws UnknownIdentity up front
    }
    for (const auto& lambda : req.lambdas) {
        if (lambda == Rational(1)) {
            throw BadParams("lambda must differ from 1");
        }
    }
    const std::vector<BinomialConvention> conventions =
        req.conventions.empty() ? std::vector<BinomialConvention>{BinomialConvention::Generalized}
                                : req.conventions;

    std::vector<VerificationReport> reports;
    for (const auto& id : ids) {
        const IdentityDescriptor& d = find_identity(id);
        if (d.takes_lambda && req.lambdas.empty()) {
            throw BadParams(d.id + " requires at least one lambda value");
        }
        for (std::size_t n = 0; n <= req.n_max; ++n) {
            const std::size_t k_hi = d.takes_k ? n : 0;
            for (std::size_t k = 0; k <= k_hi; ++k) {
                const std::size_t lam_count = d.takes_lambda ? req.lambdas.size() : 1;
                for (std::size_t li = 0; li < lam_count; ++li) {
                    const std::size_t conv_count = d.convention_sensitive ? conventions.size() : 1;
                    for (std::size_t ci = 0; ci < conv_count; ++ci) {
                        EvalParams p;
                        p.n = n;
                        if (d.takes_k) {
                            p.k = k;
                        }
                        if (d.takes_lambda) {
                            p.lambda = req.lambdas[li];
                        }
                        p.convention = d.convention_sensitive ? conventions[ci]
                                                              : BinomialConvention::Generalized;
                        reports.push_back(evaluate_identity(id, p));
                    }
                }
            }
        }
    }
    return reports;
}

std::vector<LambdaCertification> certify_lambda(const std::vector<VerificationReport>& reports) {
    // key = (identity, n, convention-or-none), in first-appearance order
    using Key = std::tuple<std::string, std::size_t, std::string>;
    std::vector<Key> order;
    std::map<Key, std::set<std::string>> matched;
    std::map<Key, bool> seen;
    for (const auto& rep : reports) {
        if (!rep.lambda) {
            continue;
        }
        Key key{rep.identity, rep.n, rep.convention ? to_string(*rep.convention) : std::string()};
        if (!seen.count(key)) {
            seen[key] = true;
            order.push_back(key);
        }
        if (rep.match) {
            matched[key].insert(rep.lambda->str());
        }
    }
    std::vector<LambdaCertification> out;
    out.reserve(order.size());
    for (const auto& key : order) {
        LambdaCertification c;
        c.identity = std::get<0>(key);
        c.n = std::get<1>(key);
        const std::string& conv = std::get<2>(key);
        if (!conv.empty()) {
            c.convention = parse_convention(conv);
        }
        c.matched = matched.count(key) ? matched[key].size() : 0;
        c.required = c.n + 1;
        c.certified = c.matched >= c.required;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<DiffEntry> diff_report(const std::vector<VerificationReport>& a,
                                   const std::vector<VerificationReport>& b) {
    using Key = std::tuple<std::size_t, long, std::string>;
    auto key_of = [](const VerificationReport& r) {
        return Key{r.n, r.k ? as_long(*r.k) : -1, r.lambda ? r.lambda->str() : std::string()};
    };
    auto fold = [&key_of](const std::vector<VerificationReport>& reports) {
        std::map<Key, bool> status;
        std::vector<Key> order;
        for (const auto& r : reports) {
            const Key key = key_of(r);
            auto it = status.find(key);
            if (it == status.end()) {
                status[key] = r.match;
                order.push_back(key);
            } else {
                it->second = it->second && r.match;
            }
        }
        return std::pair(std::move(status), std::move(order));
    };
    auto [sa, order_a] = fold(a);
    auto [sb, order_b] = fold(b);
    if (sa.size() != sb.size()) {
        throw CoverageMismatch("report sets cover different parameter grids");
    }
    for (const auto& [key, unused] : sa) {
        (void)unused;
        if (!sb.count(key)) {
            throw CoverageMismatch("report sets cover different parameter grids");
        }
    }
    std::vector<DiffEntry> out;
    out.reserve(order_a.size());
    for (const auto& key : order_a) {
        DiffEntry e;
        e.n = std::get<0>(key);
        if (std::get<1>(key) >= 0) {
            e.k = static_cast<std::size_t>(std::get<1>(key));
        }
        if (!std::get<2>(key).empty()) {
            e.lambda = Rational::from_string(std::get<2>(key));
        }
        e.a_match = sa[key];
        e.b_match = sb[key];
        out.push_back(std::move(e));
    }
    return out;
}

bool all_match(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.match; });
}

} // namespace umbral
