#pragma once

#include "malg/core/algebra.hpp"
#include "malg/core/check_result.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace malg::cli {

enum class Format { json, text };

struct ModelSummary {
    std::string kind;
    std::size_t states = 0;
    std::size_t measurements = 0;
    // Ray models: states is the sample size at this height.
    std::optional<int> sample_height;
};

ModelSummary summarize(const std::string& kind, const core::MAlgebra& alg);

struct Report {
    std::string command;
    ModelSummary model;
    std::vector<core::CheckResult> results;
    // connective: the measurement the formula evaluates to.
    std::optional<std::string> value;

    bool passed() const;
};

nlohmann::json to_json(const core::CheckResult& r);
nlohmann::json to_json(const Report& r);

/// json: sorted keys, no whitespace, newline-terminated. text: a summary
/// line, one line per result with its first witness, and the overall verdict.
std::string format_report(const Report& r, Format format);

/// "Idempotence" for the nine properties, the id itself otherwise.
std::string result_label(const std::string& property);

}  // namespace malg::cli
