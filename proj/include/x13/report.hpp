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

#ifndef X13_REPORT_HPP
#define X13_REPORT_HPP

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace x13 {

enum class CheckStatus { Pass, Fail, Evidence };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Evidence: return "evidence";
    }
    return "fail";
}

struct VerificationReport {
    std::string check_id;
    CheckStatus status = CheckStatus::Fail;
    std::string claim_ref;  // the mathematical claim this check backs
    nlohmann::json details = nlohmann::json::object();
    std::int64_t elapsed_ms = 0;

    bool failed() const { return status == CheckStatus::Fail; }

    nlohmann::json to_json() const {
        return {{"check_id", check_id},
                {"status", to_string(status)},
                {"claim_ref", claim_ref},
                {"details", details},
                {"elapsed_ms", elapsed_ms}};
    }
};

inline bool any_failed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.failed()) return true;
    return false;
}

class Stopwatch {
   public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace x13

#endif  // X13_REPORT_HPP
