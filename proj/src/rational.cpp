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

#include "umbral/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace umbral {

Rational::Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    v_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
            throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
        }
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text), mpz_class(1));
    }
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw DivisionByZero("division by zero rational");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent == 0) {
        return Rational(1);
    }
    if (exponent < 0) {
        if (base.is_zero()) {
            throw DivisionByZero("zero raised to a negative power");
        }
        return pow(Rational(base.den(), base.num()), -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(std::move(num), std::move(den));
}

mpz_class factorial_int(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational factorial(unsigned long n) {
    return Rational(factorial_int(n), mpz_class(1));
}

mpz_class binomial_int(const mpz_class& top, unsigned long l) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), l);
    return r;
}

Rational binomial(long top, unsigned long l) {
    return Rational(binomial_int(mpz_class(top), l), mpz_class(1));
}

} // namespace umbral
