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

#ifndef UMBRAL_REPORT_IO_HPP
#define UMBRAL_REPORT_IO_HPP

#include <string>
#include <vector>

#include "umbral/audit.hpp"

namespace umbral {

struct RunInfo {
    std::size_t n_max = 0;
    std::vector<Rational> lambdas;
    std::vector<BinomialConvention> conventions;
};

/// Single JSON document:
/// {"run": {"n_max", "lambda", "convention"}, "reports": [...]}.
/// Rationals are "p/q" strings throughout; emission is byte-deterministic.
std::string reports_to_json(const RunInfo& run, const std::vector<VerificationReport>& reports);

/// Fixed header:
/// identity,n,lambda,convention,status,first_diff_index,first_diff_lhs,first_diff_rhs
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

std::string reports_to_markdown(const RunInfo& run, const std::vector<VerificationReport>& reports,
                                const std::vector<LambdaCertification>& certifications);

std::string reports_to_plain(const RunInfo& run, const std::vector<VerificationReport>& reports,
                             const std::vector<LambdaCertification>& certifications);

} // namespace umbral

#endif
