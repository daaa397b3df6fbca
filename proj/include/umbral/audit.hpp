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

#ifndef UMBRAL_AUDIT_HPP
#define UMBRAL_AUDIT_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "umbral/families.hpp"
#include "umbral/polynomial.hpp"

namespace umbral {

/// What an identity asserts and therefore how its two sides are built
/// and compared (always exactly; no tolerance exists anywhere).
enum class IdentityKind {
    /// LHS is a polynomial, RHS a Laguerre coefficient formula recombined
    /// through L_k; compared coefficient-by-coefficient in the monomial
    /// basis. laguerre_expand(LHS) is the independent truth value.
    LaguerreExpansion,
    /// Both sides are polynomials; compared in the monomial basis.
    PolynomialIdentity,
    /// Both sides are single rationals.
    NumberIdentity,
    /// LHS is the vector <L_n, L_m> for m = 0..n, RHS the unit vector e_n.
    GramRow,
};

struct EvalParams {
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<Rational> lambda;
    BinomialConvention convention = BinomialConvention::Generalized;
};

struct FirstDiff {
    std::size_t index = 0;
    Rational lhs;
    Rational rhs;
};

/// Outcome of one exact evaluation. lhs/rhs hold the compared vectors
/// (monomial coefficients, a Gram row, or a single value), padded to a
/// common length. match means equality at every index.
struct VerificationReport {
    std::string identity;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<Rational> lambda;
    std::optional<BinomialConvention> convention;
    bool match = false;
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
    std::optional<FirstDiff> first_diff;
};

/// A registered identity: which parameters it takes and how to build its
/// two sides. Builders are deterministic and total on the declared domain.
struct IdentityDescriptor {
    std::string id;
    IdentityKind kind = IdentityKind::PolynomialIdentity;
    bool takes_k = false;
    bool takes_lambda = false;
    bool convention_sensitive = false;
    std::string summary;

    std::function<Polynomial(const EvalParams&)> lhs_poly;
    std::function<Polynomial(const EvalParams&)> rhs_poly;
    std::function<std::vector<Rational>(const EvalParams&)> rhs_laguerre;
    std::function<Rational(const EvalParams&)> lhs_value;
    std::function<Rational(const EvalParams&)> rhs_value;
};

/// The full catalogue, in its canonical (registration) order.
const std::vector<IdentityDescriptor>& identity_registry();

/// Throws UnknownIdentity.
const IdentityDescriptor& find_identity(const std::string& id);

std::vector<std::string> registry_ids();

/// Evaluates one identity at one parameter point. Throws UnknownIdentity
/// or BadParams (missing/extra k or lambda, k > n, lambda = 1).
VerificationReport evaluate_identity(const std::string& id, const EvalParams& params);

struct AuditRequest {
    std::vector<std::string> ids;
    std::size_t n_max = 0;
    std::vector<Rational> lambdas;
    std::vector<BinomialConvention> conventions = {BinomialConvention::Generalized};
};

/// Evaluates the cross product of parameters each identity accepts, in the
/// deterministic order: id (lexicographic), n ascending, k ascending,
/// lambda in input order, convention in input order.
std::vector<VerificationReport> audit_range(const AuditRequest& req);

/// Per (identity, n [, convention]) aggregation for lambda-parameterized
/// identities: both sides are polynomials of degree <= n in 1/(lambda-1)
/// at fixed n, so matches at n+1 distinct lambda values certify the
/// identity in lambda for that n.
struct LambdaCertification {
    std::string identity;
    std::size_t n = 0;
    std::optional<BinomialConvention> convention;
    std::size_t matched = 0;  // distinct lambda values that matched
    std::size_t required = 0; // n + 1
    bool certified = false;
};

std::vector<LambdaCertification> certify_lambda(const std::vector<VerificationReport>& reports);

/// One row of a variant-vs-variant comparison: the statuses of two report
/// sets at the same (n, k, lambda) point. When one side was evaluated
/// under several conventions its status is the conjunction.
struct DiffEntry {
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<Rational> lambda;
    bool a_match = false;
    bool b_match = false;
};

/// Pairs two report sets point-by-point, surfacing exactly where one
/// variant of an identity diverges from another. Throws CoverageMismatch
/// when the parameter grids differ.
std::vector<DiffEntry> diff_report(const std::vector<VerificationReport>& a,
                                   const std::vector<VerificationReport>& b);

bool all_match(const std::vector<VerificationReport>& reports);

} // namespace umbral

#endif
