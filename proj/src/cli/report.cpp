#include "malg/cli/report.hpp"

#include "malg/core/axioms.hpp"

#include <algorithm>
#include <sstream>

namespace malg::cli {

ModelSummary summarize(const std::string& kind, const core::MAlgebra& alg) {
    ModelSummary s{kind, alg.state_count(), alg.measurement_count(), std::nullopt};
    if (const auto* r = alg.ray()) s.sample_height = r->sample_height();
    return s;
}

bool Report::passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

nlohmann::json to_json(const core::CheckResult& r) {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
        nlohmann::json j{{"states", w.states}, {"measurements", w.measurements}};
        if (!w.detail.empty()) j["detail"] = w.detail;
        ws.push_back(std::move(j));
    }
    nlohmann::json j{{"property", r.property},
                     {"status", std::string(core::to_string(r.status))},
                     {"checked", r.checked_count},
                     {"advisory", r.advisory},
                     {"witnesses", std::move(ws)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json model{{"kind", r.model.kind}, {"states", r.model.states}, {"measurements", r.model.measurements}};
    if (r.model.sample_height) model["sample_height"] = *r.model.sample_height;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& c : r.results) results.push_back(to_json(c));
    nlohmann::json j{{"command", r.command},
                     {"model", std::move(model)},
                     {"results", std::move(results)},
                     {"overall", r.passed() ? "pass" : "fail"}};
    if (r.value) j["value"] = *r.value;
    return j;
}

std::string result_label(const std::string& property) {
    if (auto p = core::parse_property(property)) return core::display_name(*p);
    return property;
}

namespace {

std::string upper(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = c == '_' ? ' ' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::string joined(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
    return out;
}

}  // namespace

std::string format_report(const Report& r, Format format) {
    if (format == Format::json) return to_json(r).dump() + "\n";
    std::ostringstream out;
    out << "model: " << r.model.kind << ", ";
    if (r.model.sample_height)
        out << r.model.states << " sampled states (height " << *r.model.sample_height << ")";
    else
        out << r.model.states << " states";
    out << ", " << r.model.measurements << " measurements\n";
    for (const auto& c : r.results) {
        out << result_label(c.property) << ": " << upper(core::to_string(c.status)) << " (checked " << c.checked_count
            << ")";
        if (c.advisory) out << " [advisory]";
        if (!c.note.empty()) out << "; " << c.note;
        out << "\n";
        if (!c.witnesses.empty()) {
            const auto& w = c.witnesses.front();
            out << "  witness:";
            if (!w.states.empty()) out << " states [" << joined(w.states) << "]";
            if (!w.measurements.empty()) out << " measurements [" << joined(w.measurements) << "]";
            if (!w.detail.empty()) out << " " << w.detail;
            out << "\n";
        }
    }
    if (r.value) out << "value: " << *r.value << "\n";
    out << "overall: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace malg::cli
