/*
   Copyright 2026 The x13verify Authors

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

// Command-line front end. Reports go to `out` as JSON lines, the summary to `err`.
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.

#ifndef X13_CLI_HPP
#define X13_CLI_HPP

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "x13/checks.hpp"

namespace x13::cli {

inline constexpr const char* kVersion = "x13verify 1.0.0";

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

namespace detail {

inline HyperellipticModel named_model(const std::string& name) {
    if (name == "x") return x13model::model();
    if (name == "d1") return x13model::d1_curve();
    if (name == "d2") return x13model::d2_curve();
    if (name == "d2min") return x13model::d2_minimal();
    throw std::invalid_argument("unknown curve '" + name + "' (expected x, d1, d2 or d2min)");
}

inline HyperellipticModel load_model(const std::string& curve, const std::string& model_path) {
    if (model_path.empty()) return named_model(curve);
    std::ifstream in(model_path);
    if (!in) throw std::invalid_argument("cannot open model file '" + model_path + "'");
    return HyperellipticModel::from_json(nlohmann::json::parse(in));
}

class Emitter {
   public:
    Emitter(std::ostream& out, std::ostream& err, bool json_only, bool deterministic)
        : out_(out), err_(err), json_only_(json_only), deterministic_(deterministic) {}

    void line(const nlohmann::json& j) { out_ << j.dump() << '\n'; }

    void report(VerificationReport r) {
        if (deterministic_) r.elapsed_ms = 0;
        line(r.to_json());
        if (r.failed()) failed_ = true;
        ++count_;
        if (!json_only_)
            err_ << "[" << to_string(r.status) << "] " << r.check_id << " (" << r.elapsed_ms << " ms)\n";
    }

    int finish() {
        if (!json_only_)
            err_ << count_ << " check(s), " << (failed_ ? "FAILED" : "all passed") << "\n";
        return failed_ ? kFailure : kOk;
    }

   private:
    std::ostream& out_;
    std::ostream& err_;
    bool json_only_;
    bool deterministic_;
    bool failed_ = false;
    int count_ = 0;
};

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of 13-torsion over cyclic cubic fields", "x13verify"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    bool json_only = false, deterministic = false;
    app.add_flag("--json-only", json_only, "Suppress the human-readable summary on stderr");
    app.add_flag("--deterministic", deterministic, "Report elapsed_ms as 0 so reruns are byte-identical");

    checks::VerifyAllOptions all_opt;
    auto* all = app.add_subcommand("verify-all", "Run every check");
    all->add_option("--height", all_opt.family_height, "Height bound for the family sweep")->check(CLI::PositiveNumber);
    all->add_option("--fingerprint-bound", all_opt.fingerprint_bound, "Prime bound for splitting fingerprints")
        ->check(CLI::Range(50u, 1000000u));

    std::string t_text;
    std::int64_t height = 0;
    auto* family = app.add_subcommand("family", "The one-parameter family E_t");
    family->require_subcommand(1);
    auto* fam_verify = family->add_subcommand("verify", "Verify one parameter t");
    fam_verify->add_option("--t", t_text, "Parameter as p/q")->required();
    auto* fam_sweep = family->add_subcommand("sweep", "Verify all nonzero t up to a height");
    fam_sweep->add_option("--height", height, "Height bound")->required()->check(CLI::PositiveNumber);

    std::string map_text, value_text;
    auto* fiber = app.add_subcommand("fiber", "Fibers of the degree-3 maps on X_1(13)");
    fiber->require_subcommand(1);
    auto* fib_classify = fiber->add_subcommand("classify", "Classify one fiber");
    fib_classify->add_option("--map", map_text, "y or t")->required()->check(CLI::IsMember({"y", "t"}));
    fib_classify->add_option("--value", value_text, "Parameter value as p/q")->required();
    auto* fib_sweep = fiber->add_subcommand("sweep", "Find cyclic fibers up to a height");
    fib_sweep->add_option("--height", height, "Height bound")->required()->check(CLI::PositiveNumber);

    std::string curve = "d1", model_path;
    auto* search = app.add_subcommand("search", "Bounded-height rational point search");
    search->add_option("--curve", curve, "x, d1, d2 or d2min")->check(CLI::IsMember({"x", "d1", "d2", "d2min"}));
    search->add_option("--model", model_path, "JSON file {\"f\": [...], \"h\": [...]}");
    search->add_option("--height", height, "Height bound")->required()->check(CLI::PositiveNumber);

    std::uint64_t prime = 0;
    int degree = 1;
    auto* count = app.add_subcommand("count", "Point count over F_p or F_p^2");
    count->add_option("--curve", curve, "x, d1, d2 or d2min")->check(CLI::IsMember({"x", "d1", "d2", "d2min"}));
    count->add_option("--model", model_path, "JSON file {\"f\": [...], \"h\": [...]}");
    count->add_option("--p", prime, "Prime")->required();
    count->add_option("--degree", degree, "Extension degree (1 or 2)")->check(CLI::IsMember({1, 2}));

    std::uint32_t fingerprint_bound = 1000;
    auto* spor = app.add_subcommand("sporadic", "The sporadic curve E0 over K");
    spor->require_subcommand(1);
    auto* spor_verify = spor->add_subcommand("verify", "Verify all claims about K and E0");
    spor_verify->add_option("--fingerprint-bound", fingerprint_bound, "Prime bound for splitting fingerprints")
        ->check(CLI::Range(50u, 1000000u));

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    detail::Emitter em(out, err, json_only, deterministic);
    try {
        if (*all) {
            checks::verify_all(all_opt, [&](const VerificationReport& r) { em.report(r); });
        } else if (*fam_verify) {
            const Rational t = Rational::parse(t_text);
            if (t.is_zero()) throw std::invalid_argument("--t must be nonzero");
            em.report(checks::family_verify(t));
        } else if (*fam_sweep) {
            em.report(checks::family_sweep(height));
        } else if (*fib_classify) {
            em.report(checks::fiber_classify(parse_fiber_map(map_text), Rational::parse(value_text)));
        } else if (*fib_sweep) {
            em.report(checks::fiber_sweep(height));
        } else if (*search) {
            const auto m = detail::load_model(curve, model_path);
            const auto pts = search_rational_points(m, height);
            bool ok = true;
            for (const auto& p : pts) {
                em.line(p.to_json());
                ok = ok && lies_on(m, p);
            }
            VerificationReport r;
            r.check_id = "search";
            r.claim_ref = "bounded-height rational point search on a hyperelliptic model";
            r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
            r.details = {{"curve", model_path.empty() ? curve : model_path},
                         {"height", height},
                         {"genus", m.genus()},
                         {"count", pts.size()}};
            em.report(r);
        } else if (*count) {
            const auto m = detail::load_model(curve, model_path);
            VerificationReport r;
            r.check_id = "count";
            r.claim_ref = "point count of the reduction of a hyperelliptic model";
            const auto n = degree == 1 ? count_points_fp(m, prime) : count_points_fp2(m, prime);
            r.details = {{"curve", model_path.empty() ? curve : model_path},
                         {"p", prime},
                         {"degree", degree},
                         {"count", n},
                         {"smooth", is_smooth_mod_p(m, prime)}};
            r.status = CheckStatus::Pass;
            em.report(r);
        } else if (*spor_verify) {
            for (auto& r : checks::sporadic_checks(fingerprint_bound)) em.report(std::move(r));
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return em.finish();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace x13::cli

#endif  // X13_CLI_HPP
