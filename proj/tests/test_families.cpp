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

#include <doctest.h>

#include <vector>

#include "test_support.hpp"
#include "umbral/families.hpp"

using namespace umbral;

namespace {

// Independent Stirling oracle: enumerate all set partitions of {0..n-1}
// via restricted growth strings and count those with exactly k blocks.
// Deliberately avoids the recurrence the implementation uses.
void count_partitions(std::vector<std::size_t>& rgs, std::size_t pos, std::size_t max_used,
                      std::vector<unsigned long>& by_blocks) {
    if (pos == rgs.size()) {
        ++by_blocks[max_used + 1];
        return;
    }
    for (std::size_t b = 0; b <= max_used + 1; ++b) {
        rgs[pos] = b;
        count_partitions(rgs, pos + 1, std::max(max_used, b), by_blocks);
    }
}

std::vector<unsigned long> partition_counts(std::size_t n) {
    std::vector<unsigned long> by_blocks(n + 2, 0);
    if (n == 0) {
        by_blocks[0] = 1; // the empty partition
        return by_blocks;
    }
    std::vector<std::size_t> rgs(n, 0);
    count_partitions(rgs, 1, 0, by_blocks); // rgs[0] is fixed to block 0
    return by_blocks;
}

Polynomial x_power(std::size_t n) {
    return Polynomial::monomial(n);
}

} // namespace

TEST_CASE("laguerre closed form at small degrees") {
    CHECK(laguerre(0) == Polynomial::constant(Rational(1)));
    CHECK(laguerre(1) == Polynomial(std::vector<Rational>{Rational(1), Rational(-1)}));
    CHECK(laguerre(2) ==
          Polynomial(std::vector<Rational>{Rational(1), Rational(-2), Rational(1, 2)}));
}

TEST_CASE("laguerre leading coefficient is (-1)^n / n!") {
    for (std::size_t n = 0; n <= 12; ++n) {
        const Rational lead = laguerre(n).coeff(n);
        const Rational expected = Rational(1) / factorial(n);
        CHECK(lead == (n % 2 == 0 ? expected : -expected));
    }
}

TEST_CASE("rodrigues route reproduces the closed form") {
    CHECK(laguerre_rodrigues(0) == Polynomial::constant(Rational(1)));
    CHECK(laguerre_rodrigues(1) == laguerre(1));
    CHECK(laguerre_rodrigues(2) == laguerre(2));
    for (std::size_t n = 3; n <= 15; ++n) {
        CHECK(laguerre_rodrigues(n) == laguerre(n));
    }
}

TEST_CASE("exponential polynomial derivative rule") {
    // d/dx (x e^{-x}) = (1 - x) e^{-x}
    const ExponentialPolynomial ep{Polynomial::monomial(1)};
    CHECK(ep.derivative().poly ==
          Polynomial(std::vector<Rational>{Rational(1), Rational(-1)}));
}

TEST_CASE("laguerre satisfies its differential equation") {
    const Polynomial x = Polynomial::monomial(1);
    const Polynomial one = Polynomial::constant(Rational(1));
    for (std::size_t n = 0; n <= 20; ++n) {
        const Polynomial u = laguerre(n);
        const Polynomial residual = x * u.derivative().derivative() +
                                    (one - x) * u.derivative() +
                                    Rational(static_cast<long>(n)) * u;
        CHECK(residual.is_zero());
    }
}

TEST_CASE("classical polynomials at small degrees") {
    CHECK(bernoulli(2) ==
          Polynomial(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}));
    CHECK(euler(1) == Polynomial(std::vector<Rational>{Rational(-1, 2), Rational(1)}));
    CHECK(frobenius_euler(1, Rational(2)) ==
          Polynomial(std::vector<Rational>{Rational(1), Rational(1)}));
}

TEST_CASE("frobenius-euler at lambda = -1 is the Euler family") {
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(frobenius_euler(n, Rational(-1)) == euler(n));
    }
    CHECK_THROWS_AS(frobenius_euler(3, Rational(1)), LambdaIsOne);
    CHECK_THROWS_AS(frobenius_euler_number(3, Rational(1)), LambdaIsOne);
    CHECK_THROWS_AS(frobenius_number_closed_form(3, Rational(1)), LambdaIsOne);
}

TEST_CASE("binomial convolution structure of the Appell-style families") {
    const Rational lambda(5, 3);
    for (std::size_t n = 0; n <= 10; ++n) {
        Polynomial b, e, h;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational c = binomial(static_cast<long>(n), k);
            b += Polynomial::monomial(n - k, c * bernoulli_number(k));
            e += Polynomial::monomial(n - k, c * euler_number(k));
            h += Polynomial::monomial(n - k, c * frobenius_euler_number(k, lambda));
        }
        CHECK(b == bernoulli(n));
        CHECK(e == euler(n));
        CHECK(h == frobenius_euler(n, lambda));
    }
}

TEST_CASE("stirling2 against brute-force partition enumeration") {
    CHECK(stirling2(3, 2) == Rational(3));
    CHECK(stirling2(4, 2) == Rational(7));
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto counts = partition_counts(n);
        CHECK(stirling2(n, n) == Rational(1));
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) == Rational(static_cast<long>(counts[k])));
        }
        CHECK(stirling2(n, n + 3) == Rational(0));
    }
}

TEST_CASE("stirling2 against the functional definition <(e^t-1)^k | x^n>/k!") {
    for (std::size_t n = 0; n <= 8; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const PowerSeries f = series::exp_minus_one(n).pow(k);
            const Rational via_functional = functional_apply(f, x_power(n)) / factorial(k);
            CHECK(stirling2(n, k) == via_functional);
        }
    }
}

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(0) == Polynomial::constant(Rational(1)));
    CHECK(falling_factorial(2) ==
          Polynomial(std::vector<Rational>{Rational(0), Rational(-1), Rational(1)}));
    CHECK(falling_factorial(3) == Polynomial(std::vector<Rational>{Rational(0), Rational(2),
                                                                   Rational(-3), Rational(1)}));
}

TEST_CASE("gamma moments are factorials") {
    CHECK(gamma_moment(0) == Rational(1));
    CHECK(gamma_moment(4) == Rational(24));
    CHECK(gamma_moment(10) == Rational(3628800));
}

TEST_CASE("weighted inner product basics") {
    CHECK(laguerre_inner_product(Polynomial::constant(Rational(1)), x_power(2)) == Rational(2));
    CHECK(laguerre_inner_product(laguerre(1), laguerre(1)) == Rational(1));
}

TEST_CASE("laguerre orthonormality") {
    for (std::size_t m = 0; m <= 8; ++m) {
        for (std::size_t n = 0; n <= 8; ++n) {
            CHECK(laguerre_inner_product(laguerre(m), laguerre(n)) ==
                  (m == n ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("oracle: expansion of an exact basis polynomial is the unit vector") {
    const BasisExpansion e = laguerre_expand(laguerre(3));
    REQUIRE(e.coeffs.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(e.coeffs[k] == (k == 3 ? Rational(1) : Rational(0)));
    }
    CHECK(e.basis == Basis::Laguerre);
}

TEST_CASE("oracle: x^2 and E_1 expansions frozen from moment integration") {
    const BasisExpansion x2 = laguerre_expand(x_power(2));
    CHECK(x2.coeffs == std::vector<Rational>{Rational(2), Rational(-4), Rational(2)});

    const BasisExpansion e1 = laguerre_expand(euler(1));
    CHECK(e1.coeffs == std::vector<Rational>{Rational(1, 2), Rational(-1)});

    CHECK(laguerre_expand(Polynomial()).coeffs.empty());
}

TEST_CASE("oracle round trip on random polynomials") {
    auto rng = test::make_rng(0xacce55u);
    for (int i = 0; i < 50; ++i) {
        const Polynomial p = test::random_polynomial(rng, 10);
        CHECK(reconstruct(laguerre_expand(p)) == p);
    }
}

TEST_CASE("monomial to Laguerre closed form equals the oracle") {
    for (std::size_t n = 0; n <= 10; ++n) {
        const BasisExpansion closed = monomial_to_laguerre(n);
        CHECK(closed.coeffs == laguerre_expand(x_power(n)).coeffs);
        CHECK(reconstruct(closed) == x_power(n));
    }
    CHECK(monomial_to_laguerre(0).coeffs == std::vector<Rational>{Rational(1)});
    CHECK(monomial_to_laguerre(1).coeffs == std::vector<Rational>{Rational(1), Rational(-1)});
}

TEST_CASE("monomial to falling factorial rows are Stirling rows") {
    CHECK(monomial_to_falling_factorial(1).coeffs ==
          std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(monomial_to_falling_factorial(3).coeffs ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(3), Rational(1)});
    CHECK(monomial_to_falling_factorial(4).coeffs ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(7), Rational(6), Rational(1)});
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(reconstruct(monomial_to_falling_factorial(n)) == x_power(n));
    }
}

TEST_CASE("falling factorial expansion of arbitrary polynomials round trips") {
    auto rng = test::make_rng(0xfa11u);
    for (int i = 0; i < 30; ++i) {
        const Polynomial p = test::random_polynomial(rng, 9);
        CHECK(reconstruct(falling_factorial_expand(p)) == p);
    }
}

TEST_CASE("number closed forms match the generating functions") {
    CHECK(euler_number_closed_form(2) == Rational(0));
    CHECK(bernoulli_number_closed_form(1) == Rational(-1, 2));
    for (std::size_t k = 0; k <= 15; ++k) {
        CHECK(euler_number_closed_form(k) == euler_number(k));
        CHECK(bernoulli_number_closed_form(k) == bernoulli_number(k));
    }
    const std::vector<Rational> lambdas = {Rational(-1), Rational(2), Rational(1, 2),
                                           Rational(5, 3)};
    for (const auto& lambda : lambdas) {
        CHECK(frobenius_number_closed_form(1, lambda) == Rational(1) / (lambda - Rational(1)));
        for (std::size_t k = 0; k <= 12; ++k) {
            CHECK(frobenius_number_closed_form(k, lambda) == frobenius_euler_number(k, lambda));
        }
    }
}

TEST_CASE("sheffer pairs generate their families") {
    const auto eul = sheffer_polynomials(pairs::euler(10), 10);
    const auto ber = sheffer_polynomials(pairs::bernoulli(10), 10);
    const auto fro = sheffer_polynomials(pairs::frobenius_euler(Rational(2), 10), 10);
    const auto lag = sheffer_polynomials(pairs::laguerre_scaled(10), 10);
    const auto fall = sheffer_polynomials(pairs::falling_factorial(10), 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(eul[n] == euler(n));
        CHECK(ber[n] == bernoulli(n));
        CHECK(fro[n] == frobenius_euler(n, Rational(2)));
        CHECK(lag[n] == factorial(n) * laguerre(n));
        CHECK(fall[n] == falling_factorial(n));
    }
}

TEST_CASE("binomial conventions differ only on negative tops") {
    CHECK(binomial_under(BinomialConvention::Generalized, -3, 1) == Rational(-3));
    CHECK(binomial_under(BinomialConvention::ZeroOnNegativeTop, -3, 1) == Rational(0));
    CHECK(binomial_under(BinomialConvention::ZeroOnNegativeTop, -2, 0) == Rational(1));
    CHECK(binomial_under(BinomialConvention::Generalized, -2, 0) == Rational(1));
    for (long top = 0; top <= 6; ++top) {
        for (long l = 0; l <= 8; ++l) {
            CHECK(binomial_under(BinomialConvention::Generalized, top, l) ==
                  binomial_under(BinomialConvention::ZeroOnNegativeTop, top, l));
        }
    }
    CHECK(parse_convention("generalized") == BinomialConvention::Generalized);
    CHECK(parse_convention("zero-neg") == BinomialConvention::ZeroOnNegativeTop);
    CHECK(!parse_convention("other").has_value());
}

TEST_CASE("family tags validate their parameters") {
    CHECK_THROWS_AS(FamilyTag::frobenius(Rational(1)), LambdaIsOne);
    CHECK_THROWS_AS(FamilyTag::simple(FamilyTag::Kind::FrobeniusEuler), BadParams);
    const FamilyTag tag = FamilyTag::frobenius(Rational(2));
    CHECK(family_polynomial(tag, 1) ==
          Polynomial(std::vector<Rational>{Rational(1), Rational(1)}));
    CHECK(family_polynomial(FamilyTag::simple(FamilyTag::Kind::Laguerre), 2) == laguerre(2));
    CHECK(parse_family("bernoulli") == FamilyTag::Kind::Bernoulli);
    CHECK(!parse_family("hermite").has_value());
}

TEST_CASE("family-specific expansions cannot be reconstructed blindly") {
    const BasisExpansion e{Basis::FamilySpecific, {Rational(1)}};
    CHECK_THROWS_AS(reconstruct(e), BadParams);
    const BasisExpansion scaled{Basis::LaguerreScaled, {Rational(0), Rational(1)}};
    CHECK(reconstruct(scaled) == factorial(1) * laguerre(1));
}
