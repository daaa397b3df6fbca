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

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "umbral/audit.hpp"
#include "umbral/families.hpp"
#include "umbral/report_io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace umbral;

// Exit codes: 0 everything matched, 1 at least one mismatch, 2 usage error.
constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Enough distinct lambda values to certify lambda-identities through n = 12.
const std::vector<std::string> kDefaultLambdas = {"-1", "2",  "1/2", "5/3", "3",  "-2", "7/2",
                                                  "-3", "4",  "-1/2", "5",  "9",  "-5/3"};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rational> parse_lambdas(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& item : split_csv(text)) {
        const Rational v = Rational::from_string(item);
        if (v == Rational(1)) {
            throw BadParams("lambda must differ from 1");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> default_lambdas() {
    std::vector<Rational> out;
    out.reserve(kDefaultLambdas.size());
    for (const auto& s : kDefaultLambdas) {
        out.push_back(Rational::from_string(s));
    }
    return out;
}

json coefficients_json(const std::vector<Rational>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) {
        arr.push_back(c.str());
    }
    return arr;
}

void emit_coefficients(const std::string& format, const json& meta,
                       const std::vector<Rational>& coeffs) {
    if (format == "json") {
        json doc = meta;
        doc["coefficients"] = coefficients_json(coeffs);
        std::cout << doc.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "index,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::cout << i << ',' << coeffs[i].str() << '\n';
        }
    } else if (format == "md") {
        std::cout << "| k | coefficient |\n|---:|---:|\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::cout << "| " << i << " | " << coeffs[i].str() << " |\n";
        }
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::cout << (i ? " " : "") << coeffs[i].str();
        }
        std::cout << '\n';
    }
}

int run_expand(const std::string& family_text, long n, const std::string& basis_text,
               const std::string& lambda_text, const std::string& format) {
    if (n < 0) {
        throw BadParams("--n must be >= 0");
    }
    const auto kind = parse_family(family_text);
    if (!kind) {
        throw BadParams("unknown family '" + family_text + "'");
    }
    FamilyTag tag = (*kind == FamilyTag::Kind::FrobeniusEuler)
                        ? [&] {
                              if (lambda_text.empty()) {
                                  throw BadParams("frobenius-euler requires --lambda");
                              }
                              const auto values = parse_lambdas(lambda_text);
                              if (values.size() != 1) {
                                  throw BadParams("expand takes exactly one lambda value");
                              }
                              return FamilyTag::frobenius(values[0]);
                          }()
                        : FamilyTag::simple(*kind);
    if (*kind != FamilyTag::Kind::FrobeniusEuler && !lambda_text.empty()) {
        throw BadParams("--lambda only applies to frobenius-euler");
    }

    const Polynomial p = family_polynomial(tag, static_cast<std::size_t>(n));
    std::vector<Rational> coeffs;
    if (basis_text == "monomial") {
        coeffs = p.coeffs();
    } else if (basis_text == "laguerre") {
        coeffs = laguerre_expand(p).coeffs;
    } else if (basis_text == "falling-factorial") {
        coeffs = falling_factorial_expand(p).coeffs;
    } else {
        throw BadParams("unknown basis '" + basis_text + "'");
    }

    json meta;
    meta["family"] = family_text;
    if (tag.lambda) {
        meta["lambda"] = tag.lambda->str();
    }
    meta["n"] = n;
    meta["basis"] = basis_text;
    emit_coefficients(format, meta, coeffs);
    return kExitMatch;
}

int run_table(const std::string& what, long rows, const std::string& lambda_text,
              const std::string& format) {
    if (rows < 0) {
        throw BadParams("--rows must be >= 0");
    }
    const auto r = static_cast<std::size_t>(rows);

    if (what == "stirling2") {
        if (!lambda_text.empty()) {
            throw BadParams("--lambda does not apply to stirling2");
        }
        if (format == "json") {
            json doc;
            doc["what"] = what;
            doc["rows"] = rows;
            json table = json::array();
            for (std::size_t n = 0; n <= r; ++n) {
                json row = json::array();
                for (std::size_t k = 0; k <= n; ++k) {
                    row.push_back(stirling2(n, k).str());
                }
                table.push_back(std::move(row));
            }
            doc["values"] = std::move(table);
            std::cout << doc.dump(2) << '\n';
        } else if (format == "csv") {
            std::cout << "n,k,value\n";
            for (std::size_t n = 0; n <= r; ++n) {
                for (std::size_t k = 0; k <= n; ++k) {
                    std::cout << n << ',' << k << ',' << stirling2(n, k).str() << '\n';
                }
            }
        } else if (format == "md") {
            std::cout << "| n \\ k | values 0..n |\n|---:|---|\n";
            for (std::size_t n = 0; n <= r; ++n) {
                std::cout << "| " << n << " | ";
                for (std::size_t k = 0; k <= n; ++k) {
                    std::cout << (k ? " " : "") << stirling2(n, k).str();
                }
                std::cout << " |\n";
            }
        } else {
            for (std::size_t n = 0; n <= r; ++n) {
                for (std::size_t k = 0; k <= n; ++k) {
                    std::cout << (k ? " " : "") << stirling2(n, k).str();
                }
                std::cout << '\n';
            }
        }
        return kExitMatch;
    }

    std::vector<Rational> values(r + 1);
    json meta;
    meta["what"] = what;
    meta["rows"] = rows;
    if (what == "bernoulli-numbers" || what == "euler-numbers") {
        if (!lambda_text.empty()) {
            throw BadParams("--lambda does not apply to " + what);
        }
        values = (what == "bernoulli-numbers") ? bernoulli_numbers_upto(r)
                                               : euler_numbers_upto(r);
    } else if (what == "frobenius-numbers") {
        if (lambda_text.empty()) {
            throw BadParams("frobenius-numbers requires --lambda");
        }
        const auto lams = parse_lambdas(lambda_text);
        if (lams.size() != 1) {
            throw BadParams("table takes exactly one lambda value");
        }
        meta["lambda"] = lams[0].str();
        values = frobenius_euler_numbers_upto(r, lams[0]);
    } else {
        throw BadParams("unknown table '" + what + "'");
    }

    if (format == "csv") {
        std::cout << "index,value\n";
        for (std::size_t i = 0; i <= r; ++i) {
            std::cout << i << ',' << values[i].str() << '\n';
        }
        return kExitMatch;
    }
    if (format == "json") {
        meta["values"] = coefficients_json(values);
        std::cout << meta.dump(2) << '\n';
        return kExitMatch;
    }
    if (format == "md") {
        std::cout << "| index | value |\n|---:|---:|\n";
        for (std::size_t i = 0; i <= r; ++i) {
            std::cout << "| " << i << " | " << values[i].str() << " |\n";
        }
        return kExitMatch;
    }
    for (std::size_t i = 0; i <= r; ++i) {
        std::cout << (i ? " " : "") << values[i].str();
    }
    std::cout << '\n';
    return kExitMatch;
}

int run_audit(const std::string& ids_text, long n_max, const std::string& lambda_text,
              const std::string& convention_text, const std::string& expect_text,
              const std::string& format) {
    if (n_max < 0) {
        throw BadParams("--n-max must be >= 0");
    }
    AuditRequest req;
    req.n_max = static_cast<std::size_t>(n_max);
    if (ids_text == "all") {
        req.ids = registry_ids();
    } else {
        req.ids = split_csv(ids_text);
    }
    req.lambdas = lambda_text.empty() ? default_lambdas() : parse_lambdas(lambda_text);
    const auto conv = parse_convention(convention_text);
    if (!conv) {
        throw BadParams("unknown binomial convention '" + convention_text + "'");
    }
    req.conventions = {*conv};

    std::set<std::string> expected_mismatches;
    if (!expect_text.empty()) {
        for (const auto& id : split_csv(expect_text)) {
            find_identity(id); // reject unknown ids up front
            expected_mismatches.insert(id);
        }
    }

    const auto reports = audit_range(req);
    const auto certifications = certify_lambda(reports);

    const RunInfo run{req.n_max, req.lambdas, req.conventions};
    if (format == "json") {
        std::cout << reports_to_json(run, reports);
    } else if (format == "csv") {
        std::cout << reports_to_csv(reports);
    } else if (format == "md") {
        std::cout << reports_to_markdown(run, reports, certifications);
    } else {
        std::cout << reports_to_plain(run, reports, certifications);
    }

    for (const auto& r : reports) {
        if (!r.match && !expected_mismatches.count(r.identity)) {
            return kExitMismatch;
        }
    }
    return kExitMatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact umbral-calculus engine: polynomial family expansions, number tables,\n"
                 "and a coefficient-by-coefficient identity auditor over exact rationals."};
    app.require_subcommand(1);

    std::string format = "plain";
    std::string lambda_text;

    auto* expand = app.add_subcommand("expand", "expand a family polynomial in a basis");
    std::string family_text;
    std::string basis_text = "monomial";
    long n = 0;
    expand->add_option("--family", family_text,
                       "monomial|laguerre|bernoulli|euler|frobenius-euler|falling-factorial")
        ->required();
    expand->add_option("--n", n, "polynomial index")->required();
    expand->add_option("--basis", basis_text, "monomial|laguerre|falling-factorial");
    expand->add_option("--lambda", lambda_text, "frobenius-euler parameter (exact rational)");
    expand->add_option("--format", format, "json|csv|md|plain");

    auto* table = app.add_subcommand("table", "print a number triangle or sequence");
    std::string what;
    long rows = 0;
    table->add_option("--what", what,
                      "stirling2|bernoulli-numbers|euler-numbers|frobenius-numbers")
        ->required();
    table->add_option("--rows", rows, "largest index to print")->required();
    table->add_option("--lambda", lambda_text, "frobenius-numbers parameter (exact rational)");
    table->add_option("--format", format, "json|csv|md|plain");

    auto* audit = app.add_subcommand("audit", "evaluate registered identities exactly");
    std::string ids_text = "all";
    std::string convention_text = "generalized";
    std::string expect_text;
    long n_max = 12;
    audit->add_option("--identity", ids_text, "comma-separated identity ids, or 'all'");
    audit->add_option("--n-max", n_max, "largest n to evaluate (default 12)");
    audit->add_option("--lambda", lambda_text,
                      "comma-separated exact rationals for lambda-identities");
    audit->add_option("--binomial", convention_text, "generalized|zero-neg");
    audit->add_option("--expect-mismatch", expect_text,
                      "ids whose mismatches do not fail the run");
    audit->add_option("--format", format, "json|csv|md|plain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (format != "json" && format != "csv" && format != "md" && format != "plain") {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }

    try {
        if (expand->parsed()) {
            return run_expand(family_text, n, basis_text, lambda_text, format);
        }
        if (table->parsed()) {
            return run_table(what, rows, lambda_text, format);
        }
        return run_audit(ids_text, n_max, lambda_text, convention_text, expect_text, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
