#include "malg/errors.hpp"
#include "malg/logic/formula.hpp"
#include "malg/models/models.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace malg::models {

using core::FiniteAlgebra;
using core::FiniteMap;
using core::StateId;
using logic::Formula;

namespace {

void validate_atoms(const std::vector<std::string>& atoms) {
    if (atoms.empty()) throw InputError("at least one atom is required");
    if (atoms.size() > kMaxAtoms)
        throw InputError("propositional models are limited to " + std::to_string(kMaxAtoms) + " atoms, got " +
                         std::to_string(atoms.size()));
    std::set<std::string> seen;
    for (const auto& a : atoms) {
        const bool ident = !a.empty() && (std::isalpha(static_cast<unsigned char>(a[0])) || a[0] == '_') &&
                           std::all_of(a.begin(), a.end(), [](char c) {
                               return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                           });
        if (!ident) throw InputError("atom '" + a + "' is not an identifier");
        if (a == "top" || a == "bot") throw InputError("atom name '" + a + "' is reserved");
        if (!seen.insert(a).second) throw InputError("duplicate atom '" + a + "'");
    }
}

// Shortest formula (by node count) for every model set; ties go to the
// lexicographically smaller text.
std::vector<std::string> all_class_names(const std::vector<std::string>& atoms) {
    const std::size_t k = atoms.size();
    const std::size_t valuations = std::size_t{1} << k;
    const std::size_t classes = std::size_t{1} << valuations;
    const std::uint64_t full = classes - 1;

    std::vector<std::optional<Formula>> best(classes);
    std::vector<std::string> text(classes);
    std::vector<std::vector<std::uint64_t>> by_size(2);
    std::size_t found = 0;

    auto offer = [&](std::uint64_t tt, Formula f, std::map<std::uint64_t, std::pair<std::string, Formula>>& round) {
        if (best[tt]) return;
        std::string s = logic::to_string(f);
        auto it = round.find(tt);
        if (it == round.end() || s < it->second.first) round.insert_or_assign(tt, std::pair{std::move(s), std::move(f)});
    };
    auto commit = [&](std::map<std::uint64_t, std::pair<std::string, Formula>>& round, std::size_t size) {
        by_size.resize(size + 1);
        for (auto& [tt, entry] : round) {
            best[tt] = entry.second;
            text[tt] = entry.first;
            by_size[size].push_back(tt);
            ++found;
        }
    };

    {
        std::map<std::uint64_t, std::pair<std::string, Formula>> round;
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t tt = 0;
            for (std::size_t j = 0; j < valuations; ++j) {
                const std::size_t v = valuations - 1 - j;
                if ((v >> (k - 1 - i)) & 1u) tt |= std::uint64_t{1} << j;
            }
            offer(tt, Formula::slot(atoms[i]), round);
        }
        commit(round, 1);
    }
    for (std::size_t size = 2; found < classes; ++size) {
        std::map<std::uint64_t, std::pair<std::string, Formula>> round;
        for (auto tt : by_size[size - 1]) offer(full & ~tt, Formula::negation(*best[tt]), round);
        for (std::size_t left = 1; left + 1 < size; ++left) {
            const std::size_t right = size - 1 - left;
            for (auto a : by_size[left])
                for (auto b : by_size[right]) {
                    offer(a & b, Formula::conjunction(*best[a], *best[b]), round);
                    offer(a | b, Formula::disjunction(*best[a], *best[b]), round);
                    offer((full & ~a) | b, Formula::implication(*best[a], *best[b]), round);
                }
        }
        commit(round, size);
    }
    text[full] = "top";
    text[0] = "bot";
    return text;
}

}  // namespace

std::string valuation_label(std::size_t atom_count, std::size_t j) {
    const std::size_t v = (std::size_t{1} << atom_count) - 1 - j;
    std::string out = "v";
    for (std::size_t i = 0; i < atom_count; ++i) out += ((v >> (atom_count - 1 - i)) & 1u) ? '1' : '0';
    return out;
}

std::string class_name(const std::vector<std::string>& atoms, std::uint64_t models) {
    validate_atoms(atoms);
    const auto names = all_class_names(atoms);
    if (models >= names.size()) throw InputError("model set out of range");
    return names[models];
}

core::MAlgebra build_propositional(const PropositionalModelSpec& spec) {
    validate_atoms(spec.atoms);
    const std::size_t k = spec.atoms.size();
    const std::size_t valuations = std::size_t{1} << k;
    const std::size_t classes = std::size_t{1} << valuations;
    const auto names = all_class_names(spec.atoms);

    std::vector<std::string> labels;
    for (std::size_t j = 0; j < valuations; ++j) labels.push_back(valuation_label(k, j));
    auto set_label = [&](std::uint64_t mask) {
        std::vector<std::string> members;
        for (std::size_t j = 0; j < valuations; ++j)
            if ((mask >> j) & 1u) members.push_back(labels[j]);
        std::sort(members.begin(), members.end());
        std::string out = "{";
        for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + members[i];
        return out + "}";
    };

    std::vector<std::string> states;
    // Model set of each state.
    std::vector<std::uint64_t> models;
    if (spec.variant == Variant::all_theories) {
        for (std::uint64_t mask = 0; mask < classes; ++mask) models.push_back(mask);
    } else {
        models.push_back(0);
        for (std::size_t j = 0; j < valuations; ++j) models.push_back(std::uint64_t{1} << j);
    }
    std::map<std::uint64_t, StateId> id_of;
    for (auto m : models) {
        id_of[m] = static_cast<StateId>(states.size());
        states.push_back(set_label(m));
    }

    std::vector<FiniteAlgebra::Measurement> ms;
    std::map<std::string, std::string> negations;
    for (std::uint64_t s = 0; s < classes; ++s) {
        FiniteMap map;
        for (auto m : models) map.image.push_back(id_of.at(m & s));
        ms.push_back({names[s], std::move(map)});
        negations[names[s]] = names[(classes - 1) & ~s];
    }
    return FiniteAlgebra(core::Backend::propositional, std::move(states), 0, std::move(ms), std::move(negations));
}

}  // namespace malg::models
