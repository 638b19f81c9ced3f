#include "malg/logic/harness.hpp"

#include "malg/connectives/closure.hpp"
#include "malg/core/engine.hpp"
#include "malg/logic/formula.hpp"

#include <unordered_map>

namespace malg::logic {

using connectives::CommutingSet;
using connectives::PropClosure;
using core::CheckResult;
using core::RawWitness;
using core::Tally;

namespace {

enum Finding : std::uint32_t { not_fixing = 0, equivalent_differ = 1, entailment_broken = 2 };

template <class A>
std::vector<typename A::Measurement> members_of(const A& alg, const CommutingSet& cs) {
    std::vector<typename A::Measurement> out;
    for (const auto& m : cs.members()) out.push_back(alg.measurement(m));
    return out;
}

template <class A>
CheckResult run_theorem(const A& alg, const CommutingSet& cs, int max_depth, int max_slots, const core::Budget& b) {
    if (max_slots < 1 || max_slots > kMaxSlots)
        throw InputError("slot count must be between 1 and " + std::to_string(kMaxSlots));
    if (max_depth < 1) throw InputError("formula depth must be at least 1");
    std::vector<std::string> slots;
    for (int i = 0; i < max_slots; ++i) slots.push_back(std::string(1, static_cast<char>('a' + i)));
    const FormulaSet fs(slots, max_depth);

    std::vector<std::uint64_t> tt(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) tt[i] = truth_table(fs.formula(i), slots);
    const std::size_t rows = std::size_t{1} << max_slots;
    const std::uint64_t full = rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;

    const auto members = members_of(alg, cs);
    const PropClosure<A> cl(alg, members);
    const std::size_t k = members.size();
    std::uint64_t bindings = 1;
    for (int i = 0; i < max_slots; ++i) {
        bindings *= k;
        core::charge(bindings, b, "tautology harness");
    }
    core::charge(bindings * fs.size(), b, "tautology harness");

    const auto& nodes = fs.nodes();
    auto tally = core::sweep(bindings, b.exec, b.max_witnesses, [&](std::size_t bi, Tally& local) {
        std::vector<std::uint32_t> assign(max_slots);
        for (int s = 0, rest = static_cast<int>(bi); s < max_slots; ++s, rest /= static_cast<int>(k))
            assign[s] = static_cast<std::uint32_t>(rest % k);
        std::vector<std::uint32_t> res(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            switch (n.op) {
                case Op::slot: res[i] = cl.generators()[assign[n.lhs]]; break;
                case Op::negation: res[i] = cl.neg(res[n.lhs]); break;
                case Op::conjunction: res[i] = cl.conj(res[n.lhs], res[n.rhs]); break;
                case Op::disjunction: res[i] = cl.disj(res[n.lhs], res[n.rhs]); break;
                case Op::implication: res[i] = cl.impl(res[n.lhs], res[n.rhs]); break;
            }
        }
        local.checked += nodes.size();
        auto report = [&](Finding what, std::size_t f, std::size_t g) {
            local.add({{what, static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(g)}, assign}, b.max_witnesses);
        };

        std::unordered_map<std::uint64_t, std::uint32_t> rep;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (tt[i] == full && !cl.fp_all(res[i])) report(not_fixing, i, i);
            auto [it, fresh] = rep.try_emplace(tt[i], static_cast<std::uint32_t>(i));
            if (!fresh && res[it->second] != res[i]) report(equivalent_differ, it->second, i);
        }
        auto entails = [&](std::uint32_t f, std::uint32_t g) {
            if (!cl.leq(res[f], res[g])) report(entailment_broken, f, g);
        };
        if (max_slots <= 3) {
            // Truth tables fit in 8 bits: walk the submasks of each class.
            std::vector<std::int64_t> at(256, -1);
            for (const auto& [t, i] : rep) at[t] = i;
            for (std::uint64_t c2 = 0; c2 < 256; ++c2) {
                if (at[c2] < 0) continue;
                for (std::uint64_t c1 = c2;; c1 = (c1 - 1) & c2) {
                    if (at[c1] >= 0 && c1 != c2)
                        entails(static_cast<std::uint32_t>(at[c1]), static_cast<std::uint32_t>(at[c2]));
                    if (c1 == 0) break;
                }
            }
        } else {
            for (const auto& [t1, f] : rep)
                for (const auto& [t2, g] : rep)
                    if (t1 != t2 && (t1 & ~t2) == 0) entails(f, g);
        }
    });

    std::vector<core::Witness> witnesses;
    for (const auto& w : tally.witnesses) {
        core::Witness out;
        std::string binding;
        for (int s = 0; s < max_slots; ++s) {
            out.measurements.push_back(cs.members()[w.measurements[s]]);
            binding += (s ? ", " : "") + slots[s] + "=" + cs.members()[w.measurements[s]];
        }
        const std::string f = to_string(fs.formula(w.states[1]));
        const std::string g = to_string(fs.formula(w.states[2]));
        switch (w.states[0]) {
            case not_fixing: out.detail = "tautology " + f + " does not fix every state"; break;
            case equivalent_differ: out.detail = f + " and " + g + " are equivalent but evaluate differently"; break;
            default: out.detail = f + " entails " + g + " but its fixpoints are not included"; break;
        }
        out.detail += " under " + binding;
        witnesses.push_back(std::move(out));
    }
    // FP(f) = X is decided exactly on both backends: exhaustively or as P = I.
    return core::make_result("tautologies_fix_all_states", core::Status::pass, tally.checked, std::move(witnesses));
}

template <class A>
std::vector<CheckResult> run_schemes(const A& alg, const CommutingSet& cs, const core::Budget& b) {
    const auto members = members_of(alg, cs);
    const PropClosure<A> cl(alg, members);
    const auto n = static_cast<std::uint32_t>(cl.size());
    core::charge(std::uint64_t{n} * n * n, b, "scheme instances");
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back(cl.member(i).name);

    auto pairs = [&](std::string_view id, auto holds) {
        Tally t;
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y) {
                ++t.checked;
                if (!holds(x, y)) t.add({{}, {x, y}}, b.max_witnesses);
            }
        t.trim(b.max_witnesses);
        return core::make_result(std::string(id), core::Status::pass, t.checked,
                                 core::name_witnesses(t.witnesses, names, [](std::uint32_t) { return std::string(); }));
    };

    std::vector<CheckResult> out;
    out.push_back(pairs(scheme_ids[0], [&](auto a, auto c) {
        return !(cl.fp_all(a) && cl.fp_all(cl.impl(a, c))) || cl.fp_all(c);
    }));
    out.push_back(pairs(scheme_ids[1], [&](auto a, auto c) { return cl.fp_all(cl.impl(a, cl.impl(c, a))); }));
    {
        auto t = core::sweep(n, b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
            const auto a = static_cast<std::uint32_t>(i);
            for (std::uint32_t c = 0; c < n; ++c)
                for (std::uint32_t d = 0; d < n; ++d) {
                    ++local.checked;
                    const auto lhs = cl.impl(a, cl.impl(c, d));
                    const auto rhs = cl.impl(cl.impl(a, c), cl.impl(a, d));
                    if (!cl.fp_all(cl.impl(lhs, rhs))) local.add({{}, {a, c, d}}, b.max_witnesses);
                }
        });
        out.push_back(core::make_result(std::string(scheme_ids[2]), core::Status::pass, t.checked,
                                        core::name_witnesses(t.witnesses, names,
                                                             [](std::uint32_t) { return std::string(); })));
    }
    out.push_back(pairs(scheme_ids[3], [&](auto a, auto c) {
        const auto nb = cl.neg(c);
        return cl.fp_all(cl.impl(cl.impl(nb, cl.neg(a)), cl.impl(cl.impl(nb, a), c)));
    }));
    out.push_back(pairs(scheme_ids[4], [&](auto a, auto c) { return cl.conj(a, c) == cl.neg(cl.impl(a, cl.neg(c))); }));
    out.push_back(pairs(scheme_ids[5], [&](auto a, auto c) { return cl.disj(a, c) == cl.impl(cl.neg(a), c); }));
    return out;
}

}  // namespace

std::vector<Formula> scheme_formulas() {
    std::vector<Formula> out;
    for (const char* text : {"a -> (b -> a)", "(a -> (b -> c)) -> ((a -> b) -> (a -> c))",
                             "(~b -> ~a) -> ((~b -> a) -> b)", "(a & b -> ~(a -> ~b)) & (~(a -> ~b) -> a & b)",
                             "(a | b -> (~a -> b)) & ((~a -> b) -> a | b)"})
        out.push_back(parse_formula(text));
    return out;
}

CheckResult verify_tautology_theorem(const CommutingSet& cs, int max_depth, int max_slots, const core::Budget& budget) {
    return cs.algebra().visit([&](const auto& a) { return run_theorem(a, cs, max_depth, max_slots, budget); });
}

std::vector<CheckResult> verify_schemes(const CommutingSet& cs, const core::Budget& budget) {
    return cs.algebra().visit([&](const auto& a) { return run_schemes(a, cs, budget); });
}

}  // namespace malg::logic
