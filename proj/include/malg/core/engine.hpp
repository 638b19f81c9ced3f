#pragma once

// Helpers shared by the generic check implementations.

#include "malg/core/check_result.hpp"
#include "malg/core/kernels.hpp"

#include <string>
#include <vector>

namespace malg::core {

template <class Measurement>
std::vector<std::string> names_of(const std::vector<Measurement>& ms) {
    std::vector<std::string> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(m.name);
    return out;
}

/// Turns index witnesses into named ones. `label` maps a state index to text.
template <class Label>
std::vector<Witness> name_witnesses(const std::vector<RawWitness>& raw, const std::vector<std::string>& names,
                                    Label&& label) {
    std::vector<Witness> out;
    for (const auto& r : raw) {
        Witness w;
        for (auto s : r.states) w.states.push_back(label(s));
        for (auto m : r.measurements) w.measurements.push_back(names[m]);
        out.push_back(std::move(w));
    }
    return out;
}

/// fail when there are witnesses, vacuous when nothing was checked,
/// `ok` otherwise.
inline CheckResult make_result(std::string property, Status ok, std::uint64_t checked,
                               std::vector<Witness> witnesses) {
    CheckResult r;
    r.property = std::move(property);
    r.checked_count = checked;
    r.witnesses = std::move(witnesses);
    if (!r.witnesses.empty())
        r.status = Status::fail;
    else if (checked == 0)
        r.status = Status::vacuous;
    else
        r.status = ok;
    return r;
}

template <class A>
Status pointwise_status(const A& alg) {
    return alg.exhaustive() ? Status::pass : Status::sampled_pass;
}

}  // namespace malg::core
