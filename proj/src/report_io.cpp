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

#include "umbral/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace umbral {

namespace {

using json = nlohmann::ordered_json;

json rationals_to_json(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) {
        arr.push_back(v.str());
    }
    return arr;
}

std::string conventions_str(const std::vector<BinomialConvention>& conventions) {
    std::string out;
    for (const auto& c : conventions) {
        if (!out.empty()) {
            out += ",";
        }
        out += to_string(c);
    }
    return out;
}

std::string status_str(bool match) {
    return match ? "match" : "mismatch";
}

} // namespace

std::string reports_to_json(const RunInfo& run, const std::vector<VerificationReport>& reports) {
    json doc;
    doc["run"] = json::object();
    doc["run"]["n_max"] = run.n_max;
    doc["run"]["lambda"] = rationals_to_json(run.lambdas);
    doc["run"]["convention"] = conventions_str(run.conventions);
    json arr = json::array();
    for (const auto& r : reports) {
        json rec;
        rec["identity"] = r.identity;
        rec["n"] = r.n;
        if (r.k) {
            rec["k"] = *r.k;
        }
        if (r.lambda) {
            rec["lambda"] = r.lambda->str();
        }
        if (r.convention) {
            rec["convention"] = to_string(*r.convention);
        }
        rec["status"] = status_str(r.match);
        rec["lhs"] = rationals_to_json(r.lhs);
        rec["rhs"] = rationals_to_json(r.rhs);
        if (r.first_diff) {
            json fd;
            fd["index"] = r.first_diff->index;
            fd["lhs"] = r.first_diff->lhs.str();
            fd["rhs"] = r.first_diff->rhs.str();
            rec["first_diff"] = std::move(fd);
        }
        arr.push_back(std::move(rec));
    }
    doc["reports"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os << "identity,n,lambda,convention,status,first_diff_index,first_diff_lhs,first_diff_rhs\n";
    for (const auto& r : reports) {
        os << r.identity << ',' << r.n << ',';
        if (r.lambda) {
            os << r.lambda->str();
        }
        os << ',';
        if (r.convention) {
            os << to_string(*r.convention);
        }
        os << ',' << status_str(r.match) << ',';
        if (r.first_diff) {
            os << r.first_diff->index << ',' << r.first_diff->lhs.str() << ','
               << r.first_diff->rhs.str();
        } else {
            os << ",,";
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::string report_params(const VerificationReport& r) {
    std::string out = "n=" + std::to_string(r.n);
    if (r.k) {
        out += " k=" + std::to_string(*r.k);
    }
    if (r.lambda) {
        out += " lambda=" + r.lambda->str();
    }
    if (r.convention) {
        out += " convention=" + to_string(*r.convention);
    }
    return out;
}

std::string run_header(const RunInfo& run) {
    std::string lams;
    for (const auto& l : run.lambdas) {
        if (!lams.empty()) {
            lams += ",";
        }
        lams += l.str();
    }
    return "n_max=" + std::to_string(run.n_max) + " lambda=[" + lams + "] convention=" +
           conventions_str(run.conventions);
}

std::pair<std::size_t, std::size_t> tally(const std::vector<VerificationReport>& reports) {
    std::size_t matches = 0;
    for (const auto& r : reports) {
        if (r.match) {
            ++matches;
        }
    }
    return {matches, reports.size() - matches};
}

} // namespace

std::string reports_to_plain(const RunInfo& run, const std::vector<VerificationReport>& reports,
                             const std::vector<LambdaCertification>& certifications) {
    std::ostringstream os;
    os << "run: " << run_header(run) << '\n';
    for (const auto& r : reports) {
        os << r.identity << ' ' << report_params(r) << ": " << status_str(r.match);
        if (r.first_diff) {
            os << " at index " << r.first_diff->index << " (lhs=" << r.first_diff->lhs.str()
               << ", rhs=" << r.first_diff->rhs.str() << ")";
        }
        os << '\n';
    }
    for (const auto& c : certifications) {
        os << "lambda-certification: " << c.identity << " n=" << c.n;
        if (c.convention) {
            os << " convention=" << to_string(*c.convention);
        }
        os << ": " << (c.certified ? "certified" : "not certified") << " (" << c.matched
           << " matching lambdas, " << c.required << " required)\n";
    }
    const auto [matches, mismatches] = tally(reports);
    os << "summary: " << matches << " match, " << mismatches << " mismatch\n";
    return os.str();
}

std::string reports_to_markdown(const RunInfo& run, const std::vector<VerificationReport>& reports,
                                const std::vector<LambdaCertification>& certifications) {
    std::ostringstream os;
    os << "## Audit (" << run_header(run) << ")\n\n";
    os << "| identity | n | k | lambda | convention | status | first diff |\n";
    os << "|---|---:|---:|---:|---|---|---|\n";
    for (const auto& r : reports) {
        os << "| " << r.identity << " | " << r.n << " | ";
        if (r.k) {
            os << *r.k;
        }
        os << " | ";
        if (r.lambda) {
            os << r.lambda->str();
        }
        os << " | ";
        if (r.convention) {
            os << to_string(*r.convention);
        }
        os << " | " << status_str(r.match) << " | ";
        if (r.first_diff) {
            os << "index " << r.first_diff->index << ": " << r.first_diff->lhs.str() << " vs "
               << r.first_diff->rhs.str();
        }
        os << " |\n";
    }
    if (!certifications.empty()) {
        os << "\n### Lambda certification\n\n";
        os << "| identity | n | convention | certified | matching | required |\n";
        os << "|---|---:|---|---|---:|---:|\n";
        for (const auto& c : certifications) {
            os << "| " << c.identity << " | " << c.n << " | "
               << (c.convention ? to_string(*c.convention) : "") << " | "
               << (c.certified ? "yes" : "no") << " | " << c.matched << " | " << c.required
               << " |\n";
        }
    }
    const auto [matches, mismatches] = tally(reports);
    os << "\n**" << matches << " match, " << mismatches << " mismatch**\n";
    return os.str();
}

} // namespace umbral
