#include "malg/core/lemmas.hpp"

#include "malg/core/axioms.hpp"
#include "malg/core/engine.hpp"
#include "malg/errors.hpp"

#include <functional>

namespace malg::core {

namespace {

template <class A>
using Ms = std::vector<typename A::Measurement>;

template <class A>
Status pairwise_status(const A& alg) {
    if constexpr (std::is_same_v<A, RayAlgebra>) return alg.full_lattice() ? Status::sampled_pass : Status::pass;
    return Status::pass;
}

// One result per lemma quantified over ordered measurement pairs.
// `holds(i, j)` evaluates the instance.
template <class A>
CheckResult over_pairs(const A& alg, std::string_view id, const Budget& b,
                       const std::function<bool(std::size_t, std::size_t)>& holds) {
    const auto& ms = alg.measurements();
    auto t = sweep(ms.size(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
            ++local.checked;
            if (!holds(i, j))
                local.add({{}, {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}}, b.max_witnesses);
        }
    });
    return make_result(std::string(id), pairwise_status(alg), t.checked,
                       name_witnesses(t.witnesses, names_of(ms), [](std::uint32_t) { return std::string(); }));
}

// One result per lemma quantified over (x, a, b). `holds(snap, x, a, b)`.
template <class A>
CheckResult over_cells(const A& alg, const Snapshot<A>& snap, std::string_view id, const Budget& b,
                       const std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t)>& holds) {
    const auto& ms = alg.measurements();
    const auto k = static_cast<std::uint32_t>(ms.size());
    auto t = sweep(snap.root_count(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        const auto x = static_cast<std::uint32_t>(i);
        for (std::uint32_t a = 0; a < k; ++a)
            for (std::uint32_t c = 0; c < k; ++c) {
                ++local.checked;
                if (!holds(x, a, c)) local.add({{x}, {a, c}}, b.max_witnesses);
            }
    });
    return make_result(std::string(id), pointwise_status(alg), t.checked,
                       name_witnesses(t.witnesses, names_of(ms), [&](std::uint32_t s) { return snap.label(s); }));
}

template <class A>
std::vector<CheckResult> run_lemmas(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    charge(alg.states().size() * ms.size() * ms.size(), b, "lemma suite");
    std::vector<CheckResult> out;

    // a.b is the map x -> b(a(x)).
    std::vector<std::vector<bool>> in_m(ms.size(), std::vector<bool>(ms.size()));
    parallel_for(ms.size(), b.exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < ms.size(); ++j)
            in_m[i][j] = alg.resolve(alg.compose(ms[i].map, ms[j].map)).has_value();
    });
    auto fp_eq = [&](std::size_t i, std::size_t j) {
        return alg.fp_subset(ms[i].map, ms[j].map) && alg.fp_subset(ms[j].map, ms[i].map);
    };

    out.push_back(over_pairs(alg, lemma_ids[0], b, [&](std::size_t i, std::size_t j) {
        return !fp_eq(i, j) || alg.same(ms[i].map, ms[j].map);
    }));

    {
        Tally t;
        for (std::uint32_t i = 0; i < ms.size(); ++i) {
            ++t.checked;
            const auto n = alg.negation(ms[i]);
            const auto nn = n ? alg.negation(*n) : std::nullopt;
            if (!nn || !alg.same(nn->map, ms[i].map)) t.add({{}, {i}}, b.max_witnesses);
        }
        t.trim(b.max_witnesses);
        out.push_back(make_result(std::string(lemma_ids[1]), pairwise_status(alg), t.checked,
                                  name_witnesses(t.witnesses, names_of(ms), [](std::uint32_t) { return std::string(); })));
    }

    Snapshot<A> snap(alg, ms, 2, b.exec);
    out.push_back(over_cells(alg, snap, lemma_ids[2], b, [&](std::uint32_t x, std::uint32_t a, std::uint32_t c) {
        const auto ax = snap.image(a, x);
        return !(snap.fixed(c, x) && snap.zeroed(c, ax)) || ax == snap.zero();
    }));
    out.push_back(over_cells(alg, snap, lemma_ids[3], b, [&](std::uint32_t x, std::uint32_t a, std::uint32_t c) {
        const auto ax = snap.image(a, x);
        return !(snap.zeroed(c, x) && snap.fixed(c, ax)) || ax == snap.zero();
    }));

    out.push_back(over_pairs(alg, lemma_ids[4], b, [&](std::size_t i, std::size_t j) {
        return alg.fp_subset(ms[i].map, ms[j].map) == alg.z_subset(ms[j].map, ms[i].map);
    }));
    out.push_back(over_pairs(alg, lemma_ids[5], b, [&](std::size_t i, std::size_t j) {
        return alg.preserves(ms[i].map, ms[j].map) == alg.preserves(ms[j].map, ms[i].map);
    }));
    out.push_back(over_pairs(alg, lemma_ids[6], b, [&](std::size_t i, std::size_t j) {
        if (!in_m[i][j]) return true;
        return alg.fp_is_meet(alg.compose(ms[i].map, ms[j].map), ms[i].map, ms[j].map);
    }));
    out.push_back(over_pairs(alg, lemma_ids[7], b, [&](std::size_t i, std::size_t j) {
        return !in_m[i][j] || alg.preserves(ms[j].map, ms[i].map);
    }));
    out.push_back(over_pairs(alg, lemma_ids[8], b, [&](std::size_t i, std::size_t j) {
        return in_m[i][j] == alg.preserves(ms[j].map, ms[i].map);
    }));
    out.push_back(over_pairs(alg, lemma_ids[9], b, [&](std::size_t i, std::size_t j) {
        return in_m[i][j] == in_m[j][i];
    }));
    out.push_back(over_pairs(alg, lemma_ids[10], b, [&](std::size_t i, std::size_t j) {
        return in_m[i][j] == alg.commutes(ms[i].map, ms[j].map);
    }));
    out.push_back(over_pairs(alg, lemma_ids[11], b, [&](std::size_t i, std::size_t j) {
        if (!alg.fp_subset(ms[i].map, ms[j].map)) return true;
        return alg.same(alg.compose(ms[i].map, ms[j].map), ms[i].map) &&
               alg.same(alg.compose(ms[j].map, ms[i].map), ms[i].map);
    }));
    return out;
}

template <class A>
TopBot find_top_bot(const A& alg) {
    const auto& ms = alg.measurements();
    if (ms.empty()) throw InputError("the algebra has no measurements");
    const auto& a = ms.front();
    const auto n = alg.negation(a);
    if (!n)
        throw AxiomViolation(Property::negation, Witness{{}, {a.name}, ""},
                             "no negation of '" + a.name + "', so bottom cannot be formed");
    const auto bot = alg.resolve(alg.compose(a.map, n->map));
    if (!bot)
        throw AxiomViolation(Property::composition, Witness{{}, {a.name, n->name}, ""},
                             "the composite of '" + a.name + "' and its negation is not in M");
    const auto top = alg.negation(*bot);
    if (!top)
        throw AxiomViolation(Property::negation, Witness{{}, {bot->name}, ""},
                             "no negation of '" + bot->name + "', so top cannot be formed");
    for (const auto& x : alg.states()) {
        if (!alg.is_zero(alg.apply(bot->map, x)))
            throw AxiomViolation(Property::negation, Witness{{alg.label(x)}, {bot->name}, ""},
                                 "'" + bot->name + "' does not annihilate " + alg.label(x));
        if (alg.apply(top->map, x) != x)
            throw AxiomViolation(Property::negation, Witness{{alg.label(x)}, {top->name}, ""},
                                 "'" + top->name + "' does not fix " + alg.label(x));
    }
    return {top->name, bot->name};
}

}  // namespace

std::vector<CheckResult> lemma_suite(const MAlgebra& alg, const Budget& budget) {
    const MAlgebra sized = alg.with_height(budget.height);
    auto results = sized.visit([&](const auto& a) { return run_lemmas(a, budget); });
    const auto axioms = check_axioms(sized, {defining_axioms.begin(), defining_axioms.end()}, budget);
    const bool axioms_ok = std::all_of(axioms.begin(), axioms.end(), [](const CheckResult& r) { return r.passed(); });
    for (auto& r : results) {
        if (!axioms_ok) {
            r.advisory = true;
            r.note = "a defining axiom fails on this algebra";
        } else if (!r.passed()) {
            r.note = "fails although all six axioms hold: this indicates an implementation bug";
        }
    }
    return results;
}

TopBot top_bot(const MAlgebra& alg) {
    return alg.visit([](const auto& a) { return find_top_bot(a); });
}

}  // namespace malg::core
