#include "malg/errors.hpp"
#include "malg/models/models.hpp"

namespace malg::models {

core::MAlgebra build_ray(const RayModelSpec& spec) {
    if (spec.dimension == 0) throw InputError("dimension must be positive");
    std::vector<core::NamedSubspace> subspaces;
    for (const auto& [name, gens] : spec.subspaces) {
        for (const auto& g : gens)
            if (g.size() != spec.dimension)
                throw InputError("generator of subspace '" + name + "' has dimension " + std::to_string(g.size()) +
                                 ", expected " + std::to_string(spec.dimension));
        subspaces.push_back({name, ratlin::Subspace::span(spec.dimension, gens)});
    }
    return core::RayAlgebra(spec.dimension, std::move(subspaces), spec.full_lattice, spec.sample_height);
}

core::MAlgebra build(const ModelSpec& spec) {
    return std::visit(
        [](const auto& s) -> core::MAlgebra {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, TableModelSpec>) return build_table(s);
            else if constexpr (std::is_same_v<S, PropositionalModelSpec>) return build_propositional(s);
            else return build_ray(s);
        },
        spec);
}

std::vector<std::string> sample_states(const core::MAlgebra& alg, int height) {
    const auto* ray = alg.ray();
    if (!ray) throw InputError("only ray algebras are sampled");
    std::vector<std::string> out;
    for (const auto& r : core::RayAlgebra::sample(ray->dimension(), ray->subspaces(), height))
        out.push_back(r.to_string());
    return out;
}

}  // namespace malg::models
