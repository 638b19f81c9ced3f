#include "malg/core/ops.hpp"

#include "malg/core/check_result.hpp"
#include "malg/errors.hpp"

namespace malg::core {

namespace {

template <class A>
typename A::State state_of(const A& alg, std::string_view label) {
    if (auto s = alg.parse_state(label)) return *s;
    throw InputError("unknown state '" + std::string(label) + "'");
}

}  // namespace

std::string apply(const MAlgebra& alg, std::string_view m, std::string_view x) {
    return alg.visit([&](const auto& a) { return a.label(a.apply(a.measurement(m).map, state_of(a, x))); });
}

Extent extent(const MAlgebra& alg, std::string_view m) {
    return alg.visit([&](const auto& a) {
        Extent e;
        const auto map = a.measurement(m).map;
        e.complete = a.exhaustive();
        for (const auto& x : a.states()) {
            const auto y = a.apply(map, x);
            const bool fixed = y == x;
            const bool zero = a.is_zero(y);
            if (fixed) e.fp.push_back(a.label(x));
            if (zero) e.z.push_back(a.label(x));
            if (fixed || zero) e.def.push_back(a.label(x));
        }
        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, RayAlgebra>) {
            const auto fp = ratlin::Subspace::column_space(map);
            e.fp_subspace = fp.to_string();
            e.z_subspace = ratlin::orthocomplement(fp).to_string();
        }
        return e;
    });
}

bool preserves(const MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) { return x.preserves(x.measurement(a).map, x.measurement(b).map); });
}

bool commutes(const MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) { return x.commutes(x.measurement(a).map, x.measurement(b).map); });
}

RawMap compose_raw(const MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) -> RawMap { return x.compose(x.measurement(a).map, x.measurement(b).map); });
}

std::optional<std::string> membership(const MAlgebra& alg, const RawMap& map) {
    return alg.visit([&](const auto& x) -> std::optional<std::string> {
        using Map = typename std::decay_t<decltype(x)>::Map;
        const auto* m = std::get_if<Map>(&map);
        if (!m) return std::nullopt;
        if (auto r = x.resolve(*m)) return r->name;
        return std::nullopt;
    });
}

std::string negation_of(const MAlgebra& alg, std::string_view m) {
    return alg.visit([&](const auto& x) {
        const auto meas = x.measurement(m);
        if (auto n = x.negation(meas)) return n->name;
        throw AxiomViolation(Property::negation, Witness{{}, {meas.name}, ""},
                             "no measurement swaps the fixpoints and zeros of '" + meas.name + "'");
    });
}

std::optional<std::string> point_measurement(const MAlgebra& alg, std::string_view x) {
    return alg.visit([&](const auto& a) -> std::optional<std::string> {
        if (auto e = a.point_measurement(state_of(a, x))) return e->name;
        return std::nullopt;
    });
}

}  // namespace malg::core
