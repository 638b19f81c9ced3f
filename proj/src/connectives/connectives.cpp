#include "malg/connectives/connectives.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace malg::connectives {

std::string conjunction(const core::MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) { return conjoin(x, x.measurement(a), x.measurement(b)).name; });
}

std::string disjunction(const core::MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) { return disjoin(x, x.measurement(a), x.measurement(b)).name; });
}

std::string implication(const core::MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) { return implies(x, x.measurement(a), x.measurement(b)).name; });
}

bool is_classical(const core::MAlgebra& alg, std::string_view m) {
    return alg.visit([&](const auto& x) { return classical(x, x.measurement(m)); });
}

CommutingSet::CommutingSet(const core::MAlgebra& alg, std::vector<std::string> members)
    : alg_(&alg), members_(std::move(members)) {
    if (members_.empty()) throw InputError("a commuting set needs at least one member");
    std::set<std::string> seen;
    for (const auto& m : members_)
        if (!seen.insert(m).second) throw InputError("measurement '" + m + "' is listed twice");
    alg.visit([&](const auto& x) {
        std::vector<typename std::decay_t<decltype(x)>::Measurement> ms;
        for (const auto& m : members_) ms.push_back(x.measurement(m));
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = i + 1; j < ms.size(); ++j)
                if (!x.commutes(ms[i].map, ms[j].map)) throw NonCommutingPair(ms[i].name, ms[j].name);
    });
}

bool CommutingSet::contains(std::string_view name) const {
    return std::find(members_.begin(), members_.end(), name) != members_.end();
}

std::string eval_formula(const CommutingSet& cs, const logic::Formula& f,
                         const std::map<std::string, std::string>& binding, bool verify_closure) {
    for (const auto& s : f.slots()) {
        auto it = binding.find(s);
        if (it == binding.end()) throw InputError("slot '" + s + "' is not bound");
        if (!cs.contains(it->second))
            throw InputError("slot '" + s + "' is bound to '" + it->second + "', which is not in the commuting set");
    }
    return cs.algebra().visit([&](const auto& alg) {
        using M = typename std::decay_t<decltype(alg)>::Measurement;
        std::vector<M> members;
        for (const auto& m : cs.members()) members.push_back(alg.measurement(m));
        auto check = [&](const M& r) {
            if (!verify_closure) return;
            for (const auto& m : members)
                if (!alg.commutes(r.map, m.map))
                    throw InternalError("'" + r.name + "' does not commute with member '" + m.name + "'");
        };
        std::function<M(const logic::Formula&)> eval = [&](const logic::Formula& g) -> M {
            M r;
            try {
                switch (g.op()) {
                    case logic::Op::slot: return alg.measurement(binding.at(g.name()));
                    case logic::Op::negation: r = negate(alg, eval(g.lhs())); break;
                    case logic::Op::conjunction: r = conjoin(alg, eval(g.lhs()), eval(g.rhs())); break;
                    case logic::Op::disjunction: r = disjoin(alg, eval(g.lhs()), eval(g.rhs())); break;
                    case logic::Op::implication: r = implies(alg, eval(g.lhs()), eval(g.rhs())); break;
                }
            } catch (const NonCommutingPair& e) {
                throw InternalError(std::string("commuting set lost closure: ") + e.what());
            }
            check(r);
            return r;
        };
        return eval(f).name;
    });
}

}  // namespace malg::connectives
