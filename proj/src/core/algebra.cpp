#include "malg/core/algebra.hpp"

namespace malg::core {

std::vector<std::string> MAlgebra::measurement_names() const {
    return visit([](const auto& a) {
        std::vector<std::string> out;
        for (const auto& m : a.measurements()) out.push_back(m.name);
        return out;
    });
}

std::vector<std::string> MAlgebra::state_labels() const {
    return visit([](const auto& a) {
        std::vector<std::string> out;
        for (const auto& s : a.states()) out.push_back(a.label(s));
        return out;
    });
}

MAlgebra MAlgebra::with_height(std::optional<int> height) const {
    if (const auto* r = ray(); r && height && *height != r->sample_height()) return MAlgebra(r->resampled(*height));
    return *this;
}

}  // namespace malg::core
