#include "malg/errors.hpp"
#include "malg/models/models.hpp"

#include <algorithm>

namespace malg::models {

using core::FiniteAlgebra;
using core::FiniteMap;
using core::StateId;

core::MAlgebra build_table(const TableModelSpec& spec) {
    std::map<std::string, StateId> ids;
    for (const auto& s : spec.states)
        if (!ids.emplace(s, static_cast<StateId>(ids.size())).second) throw InputError("duplicate state id '" + s + "'");
    const auto zero = ids.find(spec.zero);
    if (zero == ids.end()) throw InputError("zero state '" + spec.zero + "' is not listed in states");

    std::vector<FiniteAlgebra::Measurement> ms;
    for (const auto& [name, table] : spec.measurements) {
        FiniteMap map;
        map.image.resize(spec.states.size());
        for (const auto& [from, to] : table) {
            if (!ids.contains(from))
                throw InputError("measurement '" + name + "' maps unknown state '" + from + "'");
            if (!ids.contains(to))
                throw InputError("measurement '" + name + "' maps '" + from + "' to unknown state '" + to + "'");
        }
        for (const auto& s : spec.states) {
            auto it = table.find(s);
            if (it == table.end()) throw InputError("measurement '" + name + "' has no entry for state '" + s + "'");
            map.image[ids[s]] = ids[it->second];
        }
        ms.push_back({name, std::move(map)});
    }
    return FiniteAlgebra(core::Backend::table, spec.states, zero->second, std::move(ms), spec.negations);
}

}  // namespace malg::models
