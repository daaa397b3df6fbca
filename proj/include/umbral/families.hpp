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

#ifndef UMBRAL_FAMILIES_HPP
#define UMBRAL_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbral/polynomial.hpp"
#include "umbral/sheffer.hpp"

namespace umbral {

/// How to read C(top, l) when top may be a negative integer.
/// Generalized: top*(top-1)*...*(top-l+1)/l!, so C(-3, 1) = -3.
/// ZeroOnNegativeTop: 0 whenever top < 0 or top < l, except C(top, 0) = 1.
enum class BinomialConvention {
    Generalized,
    ZeroOnNegativeTop,
};

std::string to_string(BinomialConvention c);
std::optional<BinomialConvention> parse_convention(std::string_view text);
Rational binomial_under(BinomialConvention conv, long top, long l);

/// One of the polynomial families this library generates.
struct FamilyTag {
    enum class Kind {
        Monomial,
        Laguerre,
        Bernoulli,
        Euler,
        FrobeniusEuler,
        FallingFactorial,
    };

    Kind kind = Kind::Monomial;
    std::optional<Rational> lambda; // FrobeniusEuler only; must differ from 1

    static FamilyTag simple(Kind kind);
    static FamilyTag frobenius(const Rational& lambda); // LambdaIsOne
};

std::optional<FamilyTag::Kind> parse_family(std::string_view text);
std::string to_string(FamilyTag::Kind kind);

/// n-th member of the tagged family.
Polynomial family_polynomial(const FamilyTag& tag, std::size_t n);

/// L_n(x) = sum_r (-1)^r C(n,r) x^r / r!, leading coefficient (-1)^n/n!.
Polynomial laguerre(std::size_t n);

/// q(x) e^{-x}; closed under d/dx via (q e^{-x})' = (q' - q) e^{-x}.
struct ExponentialPolynomial {
    Polynomial poly;

    ExponentialPolynomial derivative() const;
};

/// L_n through the Rodrigues route: n derivative steps on x^n e^{-x},
/// divided by n!. Agrees with laguerre(n).
Polynomial laguerre_rodrigues(std::size_t n);

Polynomial bernoulli(std::size_t n);
Polynomial euler(std::size_t n);
Polynomial frobenius_euler(std::size_t n, const Rational& lambda); // LambdaIsOne

/// Number sequences from their generating functions (series inversion):
/// B_k, E_k = E_k(0), H_k(lambda). The *_upto variants return indices 0..n
/// from a single inversion.
Rational bernoulli_number(std::size_t k);
Rational euler_number(std::size_t k);
Rational frobenius_euler_number(std::size_t k, const Rational& lambda);
std::vector<Rational> bernoulli_numbers_upto(std::size_t n);
std::vector<Rational> euler_numbers_upto(std::size_t n);
std::vector<Rational> frobenius_euler_numbers_upto(std::size_t n, const Rational& lambda);

/// Stirling number of the second kind, by the standard recurrence
/// (memoized behind an internal lock).
Rational stirling2(std::size_t n, std::size_t k);

/// (x)_k = x(x-1)...(x-k+1); (x)_0 = 1.
Polynomial falling_factorial(std::size_t k);

/// Exact value of the weight integral of x^m over [0, inf): m!.
Rational gamma_moment(std::size_t m);

/// <p, q> = integral of e^{-x} p(x) q(x) over [0, inf), computed exactly
/// through the moment rule x^m -> m!.
Rational laguerre_inner_product(const Polynomial& p, const Polynomial& q);

/// THE ORACLE: C_k = <p, L_k> for 0 <= k <= deg(p). Orthonormality makes
/// the recombination sum_k C_k L_k reproduce p exactly, unconditionally;
/// every audited identity is judged against this expansion.
BasisExpansion laguerre_expand(const Polynomial& p);

/// x^n = n! sum_k (-1)^k C(n,k) L_k(x); closed-form coefficients.
BasisExpansion monomial_to_laguerre(std::size_t n);

/// x^n = sum_k S2(n,k) (x)_k.
BasisExpansion monomial_to_falling_factorial(std::size_t n);

/// Falling-factorial expansion of an arbitrary polynomial, by linearity.
BasisExpansion falling_factorial_expand(const Polynomial& p);

/// Stirling closed forms for the number sequences. Each agrees with the
/// generating-function numbers above.
Rational euler_number_closed_form(std::size_t k);
Rational bernoulli_number_closed_form(std::size_t k);
Rational frobenius_number_closed_form(std::size_t k, const Rational& lambda);

/// Rebuild the polynomial a tagged expansion stands for. FamilySpecific
/// expansions carry no intrinsic basis and throw BadParams.
Polynomial reconstruct(const BasisExpansion& e);

/// Sheffer pairs of the classical families, at the requested series
/// precision (raised to at least 1 so the delta component exists).
namespace pairs {

ShefferPair monomial(std::size_t precision);                                 // (1, t)
ShefferPair bernoulli(std::size_t precision);                                // ((e^t-1)/t, t)
ShefferPair euler(std::size_t precision);                                    // ((e^t+1)/2, t)
ShefferPair frobenius_euler(const Rational& lambda, std::size_t precision);  // ((e^t-l)/(1-l), t)
ShefferPair laguerre_scaled(std::size_t precision);                          // (1/(1-t), t/(t-1))
ShefferPair falling_factorial(std::size_t precision);                        // (1, e^t-1)

} // namespace pairs

} // namespace umbral

#endif
