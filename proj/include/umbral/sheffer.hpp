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

#ifndef UMBRAL_SHEFFER_HPP
#define UMBRAL_SHEFFER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/power_series.hpp"

namespace umbral {

enum class Basis {
    Monomial,
    Laguerre,
    LaguerreScaled, // n! L_n
    FallingFactorial,
    FamilySpecific,
};

std::string to_string(Basis b);

/// Coefficient vector tagged with the basis it expands over:
/// p(x) = sum_k coeffs[k] * basis_k(x).
struct BasisExpansion {
    Basis basis;
    std::vector<Rational> coeffs;
};

/// An invertible series g (order 0) paired with a delta series f (order 1);
/// the data determining a unique Sheffer sequence S_n via
/// <g f^k | S_n> = n! delta_{n,k}. Orders are validated at construction.
class ShefferPair {
public:
    ShefferPair(PowerSeries g, PowerSeries f);

    const PowerSeries& g() const { return g_; }
    const PowerSeries& f() const { return f_; }

    /// min of the two component precisions.
    std::size_t precision() const;

private:
    PowerSeries g_;
    PowerSeries f_;
};

/// Linear functional <f(t) | p(x)> = sum_n p_n * n! * [t^n] f.
/// Throws InsufficientPrecision when f carries fewer coefficients than
/// the degree of p requires.
Rational functional_apply(const PowerSeries& f, const Polynomial& p);

/// f(t) acting on p(x) as a differential operator:
/// sum_k [t^k] f * p^(k)(x). Only the first deg(p)+1 coefficients of f
/// can contribute.
Polynomial operator_apply(const PowerSeries& f, const Polynomial& p);

/// S_0 .. S_{n_max} for the pair, by exact back-substitution in the
/// triangular orthogonality system <g f^k | S_n> = n! delta_{n,k}.
std::vector<Polynomial> sheffer_polynomials(const ShefferPair& pair, std::size_t n_max);

/// Same sequence through the generating function (1/g(fbar)) e^{y fbar(t)},
/// expanding e^{y fbar} column-wise in powers of y. Serves as an
/// independent cross-check of sheffer_polynomials.
std::vector<Polynomial> sheffer_polynomials_gf(const ShefferPair& pair, std::size_t n_max);

struct ShefferCheckResult {
    struct Violation {
        std::size_t n = 0;
        std::size_t k = 0;
        Rational found;
        Rational expected;
    };
    bool ok = false;
    std::optional<Violation> violation; // first (n, k) that fails, scanning n outer
};

/// Verifies <g f^k | seq[n]> = n! delta_{n,k} over all n, k below seq.size().
ShefferCheckResult sheffer_check(const ShefferPair& pair, const std::vector<Polynomial>& seq);

/// Coefficients C_{n,k} with s_n(x) = sum_k C_{n,k} r_k(x), where s_n is
/// the source pair's sequence and r_k the target pair's:
/// C_{n,k} = (1/k!) < (h(fbar)/g(fbar)) l(fbar)^k | x^n > for source (g, f),
/// target (h, l).
BasisExpansion connection_coefficients(const ShefferPair& source, const ShefferPair& target,
                                       std::size_t n);

/// Umbral composition (q o p)(x) = sum_k q_k p[k](x) over the monomial
/// coefficients q_k of q. Throws MissingBasisElement when p has fewer
/// than deg(q)+1 entries.
Polynomial umbral_compose(const Polynomial& q, const std::vector<Polynomial>& p);

} // namespace umbral

#endif
