#include "malg/core/axioms.hpp"

#include "malg/core/engine.hpp"
#include "malg/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace malg::core {

namespace {

template <class A>
using Ms = std::vector<typename A::Measurement>;

template <class A>
CheckResult finish(const A&, Property p, Status ok, const Tally& tally, const Snapshot<A>& snap,
                   const Ms<A>& ms) {
    return make_result(std::string(property_id(p)), ok, tally.checked,
                       name_witnesses(tally.witnesses, names_of(ms), [&](std::uint32_t s) { return snap.label(s); }));
}

// Separability and strong separability on a full ray lattice range over all
// subspaces, so the candidates include the projection onto every sampled ray.
template <class A>
Ms<A> separating_candidates(const A& alg) {
    Ms<A> out = alg.measurements();
    if constexpr (std::is_same_v<A, RayAlgebra>) {
        if (alg.full_lattice()) {
            std::set<std::string> seen;
            for (const auto& m : out) seen.insert(m.name);
            for (const auto& x : alg.states())
                if (auto e = alg.point_measurement(x); e && seen.insert(e->name).second) out.push_back(*e);
            std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
        }
    }
    return out;
}

template <class A>
bool analytic_membership(const A& alg) {
    if constexpr (std::is_same_v<A, RayAlgebra>) return !alg.full_lattice();
    return true;
}

template <class A>
CheckResult illegitimate(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    Snapshot<A> snap(alg, ms, 1, b.exec);
    Tally t;
    for (std::uint32_t m = 0; m < ms.size(); ++m) {
        ++t.checked;
        if (!snap.zeroed(m, snap.zero())) t.add({{snap.zero()}, {m}}, b.max_witnesses);
    }
    t.trim(b.max_witnesses);
    // Linear maps fix the zero vector, so the ray verdict is exact.
    return finish(alg, Property::illegitimate, Status::pass, t, snap, ms);
}

template <class A>
CheckResult idempotence(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    charge(alg.states().size() * ms.size(), b, "idempotence");
    Snapshot<A> snap(alg, ms, 2, b.exec);
    auto t = sweep(snap.root_count(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        const auto x = static_cast<std::uint32_t>(i);
        for (std::uint32_t m = 0; m < ms.size(); ++m) {
            ++local.checked;
            const auto y = snap.image(m, x);
            if (snap.image(m, y) != y) local.add({{x}, {m}}, b.max_witnesses);
        }
    });
    return finish(alg, Property::idempotence, pointwise_status(alg), t, snap, ms);
}

template <class A>
CheckResult composition(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    Snapshot<A> snap(alg, ms, 0, b.exec);
    auto t = sweep(ms.size(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        for (std::uint32_t j = 0; j < ms.size(); ++j) {
            ++local.checked;
            const auto& alpha = ms[i];
            const auto& beta = ms[j];
            if (!alg.preserves(alpha.map, beta.map)) continue;
            if (!alg.resolve(alg.compose(beta.map, alpha.map)))
                local.add({{}, {static_cast<std::uint32_t>(i), j}}, b.max_witnesses);
        }
    });
    auto r = finish(alg, Property::composition, analytic_membership(alg) ? Status::pass : Status::sampled_pass, t,
                    snap, ms);
    for (auto& w : r.witnesses) w.detail = w.measurements[0] + " preserves " + w.measurements[1] + " but the composite is not in M";
    return r;
}

template <class A>
CheckResult interference(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    const std::size_t k = ms.size();
    charge(alg.states().size() * k * k, b, "interference");
    Snapshot<A> snap(alg, ms, 3, b.exec);
    auto t = sweep(snap.root_count(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        const auto x = static_cast<std::uint32_t>(i);
        for (std::uint32_t a = 0; a < k; ++a) {
            const bool fixes = snap.fixed(a, x);
            for (std::uint32_t bb = 0; bb < k; ++bb) {
                ++local.checked;
                if (!fixes) continue;
                const auto bx = snap.image(bb, x);
                const auto abx = snap.image(a, bx);
                if (snap.image(bb, abx) == abx && abx != bx) local.add({{x}, {a, bb}}, b.max_witnesses);
            }
        }
    });
    return finish(alg, Property::interference, pointwise_status(alg), t, snap, ms);
}

template <class A>
CheckResult cumulativity(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    const std::size_t k = ms.size();
    charge(alg.states().size() * k * k, b, "cumulativity");
    Snapshot<A> snap(alg, ms, 2, b.exec);
    auto t = sweep(snap.root_count(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        const auto x = static_cast<std::uint32_t>(i);
        for (std::uint32_t a = 0; a < k; ++a) {
            const auto ax = snap.image(a, x);
            for (std::uint32_t bb = 0; bb < k; ++bb) {
                ++local.checked;
                const auto bx = snap.image(bb, x);
                if (snap.fixed(bb, ax) && snap.fixed(a, bx) && ax != bx) local.add({{x}, {a, bb}}, b.max_witnesses);
            }
        }
    });
    return finish(alg, Property::cumulativity, pointwise_status(alg), t, snap, ms);
}

template <class A>
CheckResult negation(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    Snapshot<A> snap(alg, ms, 1, b.exec);
    Tally t;
    std::vector<std::string> names = names_of(ms);
    for (std::uint32_t m = 0; m < ms.size(); ++m) {
        const auto neg = alg.negation(ms[m]);
        if (!neg) {
            ++t.checked;
            t.add({{}, {m}}, b.max_witnesses);
            continue;
        }
        if constexpr (std::is_same_v<A, RayAlgebra>) {
            // I - P fixes exactly ker P and annihilates exactly im P.
            ++t.checked;
            if (!(neg->map * ms[m].map).is_zero() || !((neg->map + ms[m].map) == A::Map::identity(alg.dimension())))
                t.add({{}, {m}}, b.max_witnesses);
        } else {
            const auto n = static_cast<std::uint32_t>(*alg.index_of(neg->name));
            for (std::uint32_t x = 0; x < snap.root_count(); ++x) {
                ++t.checked;
                if (snap.fixed(n, x) != snap.zeroed(m, x) || snap.zeroed(n, x) != snap.fixed(m, x)) {
                    t.add({{x}, {m, n}}, b.max_witnesses);
                    break;
                }
            }
        }
    }
    t.trim(b.max_witnesses);
    auto r = finish(alg, Property::negation, Status::pass, t, snap, ms);
    for (auto& w : r.witnesses)
        w.detail = w.measurements.size() == 1 ? "no measurement swaps the fixpoints and zeros of " + w.measurements[0]
                                              : "fixpoints and zeros are not swapped at this state";
    return r;
}

template <class A>
CheckResult separability(const A& alg, const Budget& b) {
    const auto ms = separating_candidates(alg);
    const std::size_t n = alg.states().size();
    charge(n * n * ms.size(), b, "separability");
    Snapshot<A> snap(alg, ms, 1, b.exec);
    auto t = sweep(snap.root_count(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        const auto x = static_cast<std::uint32_t>(i);
        if (x == snap.zero()) return;
        std::vector<std::uint32_t> fixing;
        for (std::uint32_t m = 0; m < ms.size(); ++m)
            if (snap.fixed(m, x)) fixing.push_back(m);
        for (std::uint32_t y = 0; y < snap.root_count(); ++y) {
            if (y == x || y == snap.zero()) continue;
            ++local.checked;
            const bool separated =
                std::any_of(fixing.begin(), fixing.end(), [&](std::uint32_t m) { return !snap.fixed(m, y); });
            if (!separated) local.add({{x, y}, {}}, b.max_witnesses);
        }
    });
    return finish(alg, Property::separability, pointwise_status(alg), t, snap, ms);
}

template <class A>
CheckResult strong_separability(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    Snapshot<A> snap(alg, ms, 0, b.exec);
    auto t = sweep(snap.root_count(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        const auto x = static_cast<std::uint32_t>(i);
        if (x == snap.zero()) return;
        ++local.checked;
        const auto e = alg.point_measurement(snap.state(x));
        if (!e || alg.apply(e->map, snap.state(x)) != snap.state(x)) local.add({{x}, {}}, b.max_witnesses);
    });
    return finish(alg, Property::strong_separability, pointwise_status(alg), t, snap, ms);
}

template <class A>
CheckResult l_cumulativity(const A& alg, const Budget& b) {
    const auto& ms = alg.measurements();
    const std::size_t k = ms.size();
    if (b.loop_length < 2) throw InputError("loop length must be at least 2");
    std::uint64_t cells = 0;
    for (int len = 2; len <= b.loop_length; ++len) {
        std::uint64_t c = alg.states().size();
        for (int i = 0; i < len; ++i) {
            c *= k;
            charge(c, b, "l-cumulativity");
        }
        cells += c;
    }
    charge(cells, b, "l-cumulativity");
    Snapshot<A> snap(alg, ms, 2, b.exec);
    auto t = sweep(snap.root_count(), b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
        const auto x = static_cast<std::uint32_t>(i);
        std::vector<std::uint32_t> cycle;
        // Extends a chain in which each image is fixed by the next measurement.
        std::function<void(int)> extend = [&](int len) {
            const auto last = snap.image(cycle.back(), x);
            if (static_cast<int>(cycle.size()) == len) {
                if (!snap.fixed(cycle.front(), last)) return;
                for (auto m : cycle)
                    if (snap.image(m, x) != last) {
                        local.add({{x}, cycle}, b.max_witnesses);
                        return;
                    }
                return;
            }
            for (std::uint32_t m = 0; m < k; ++m) {
                if (!snap.fixed(m, last)) continue;
                cycle.push_back(m);
                extend(len);
                cycle.pop_back();
            }
        };
        for (int len = 2; len <= b.loop_length; ++len) {
            std::uint64_t c = 1;
            for (int j = 0; j < len; ++j) c *= k;
            local.checked += c;
            for (std::uint32_t m = 0; m < k; ++m) {
                cycle.assign(1, m);
                extend(len);
            }
        }
    });
    return finish(alg, Property::l_cumulativity, pointwise_status(alg), t, snap, ms);
}

template <class A>
CheckResult dispatch(const A& alg, Property p, const Budget& b) {
    switch (p) {
        case Property::illegitimate: return illegitimate(alg, b);
        case Property::idempotence: return idempotence(alg, b);
        case Property::composition: return composition(alg, b);
        case Property::interference: return interference(alg, b);
        case Property::cumulativity: return cumulativity(alg, b);
        case Property::negation: return negation(alg, b);
        case Property::separability: return separability(alg, b);
        case Property::strong_separability: return strong_separability(alg, b);
        case Property::l_cumulativity: return l_cumulativity(alg, b);
    }
    throw InputError("unknown property");
}

template <class A>
typename A::State state_of(const A& alg, const std::string& label) {
    if (auto s = alg.parse_state(label)) return *s;
    throw InputError("unknown state '" + label + "'");
}

template <class A>
bool replay(const A& alg, Property p, const Witness& w) {
    std::vector<typename A::State> xs;
    for (const auto& s : w.states) xs.push_back(state_of(alg, s));
    std::vector<typename A::Measurement> ms;
    for (const auto& m : w.measurements) ms.push_back(alg.measurement(m));
    auto ap = [&](const typename A::Measurement& m, const typename A::State& x) { return alg.apply(m.map, x); };
    auto need = [&](std::size_t states, std::size_t measurements) {
        if (xs.size() != states || ms.size() != measurements)
            throw InputError("witness shape does not match property '" + std::string(property_id(p)) + "'");
    };
    switch (p) {
        case Property::illegitimate:
            need(1, 1);
            return !alg.is_zero(ap(ms[0], alg.zero()));
        case Property::idempotence: {
            need(1, 1);
            const auto y = ap(ms[0], xs[0]);
            return ap(ms[0], y) != y;
        }
        case Property::composition:
            need(0, 2);
            return alg.preserves(ms[0].map, ms[1].map) && !alg.resolve(alg.compose(ms[1].map, ms[0].map));
        case Property::interference: {
            need(1, 2);
            const auto& x = xs[0];
            const auto bx = ap(ms[1], x);
            const auto abx = ap(ms[0], bx);
            return ap(ms[0], x) == x && ap(ms[1], abx) == abx && abx != bx;
        }
        case Property::cumulativity: {
            need(1, 2);
            const auto ax = ap(ms[0], xs[0]);
            const auto bx = ap(ms[1], xs[0]);
            return ap(ms[1], ax) == ax && ap(ms[0], bx) == bx && ax != bx;
        }
        case Property::negation: {
            if (xs.empty()) {
                need(0, 1);
                const auto neg = alg.negation(ms[0]);
                if (!neg) return true;
                if constexpr (std::is_same_v<A, RayAlgebra>)
                    return !(neg->map * ms[0].map).is_zero() ||
                           !((neg->map + ms[0].map) == A::Map::identity(alg.dimension()));
                return false;
            }
            need(1, 2);
            const auto& x = xs[0];
            const bool neg_fixes = ap(ms[1], x) == x;
            const bool neg_zeroes = alg.is_zero(ap(ms[1], x));
            return neg_fixes != alg.is_zero(ap(ms[0], x)) || neg_zeroes != (ap(ms[0], x) == xs[0]);
        }
        case Property::separability: {
            need(2, 0);
            if (xs[0] == xs[1] || alg.is_zero(xs[0]) || alg.is_zero(xs[1])) return false;
            for (const auto& m : separating_candidates(alg))
                if (ap(m, xs[0]) == xs[0] && ap(m, xs[1]) != xs[1]) return false;
            if constexpr (std::is_same_v<A, RayAlgebra>)
                if (auto e = alg.point_measurement(xs[0]); e && alg.full_lattice()) return false;
            return true;
        }
        case Property::strong_separability: {
            need(1, 0);
            if (alg.is_zero(xs[0])) return false;
            const auto e = alg.point_measurement(xs[0]);
            return !e || ap(*e, xs[0]) != xs[0];
        }
        case Property::l_cumulativity: {
            if (xs.size() != 1 || ms.size() < 2) need(1, 2);
            const auto& x = xs[0];
            const std::size_t n = ms.size();
            for (std::size_t i = 0; i < n; ++i) {
                const auto y = ap(ms[i], x);
                if (ap(ms[(i + 1) % n], y) != y) return false;
            }
            for (std::size_t i = 1; i < n; ++i)
                if (ap(ms[i], x) != ap(ms[0], x)) return true;
            return false;
        }
    }
    return false;
}

}  // namespace

CheckResult check_axiom(const MAlgebra& alg, Property property, const Budget& budget) {
    const MAlgebra sized = alg.with_height(budget.height);
    return sized.visit([&](const auto& a) { return dispatch(a, property, budget); });
}

std::vector<CheckResult> check_axioms(const MAlgebra& alg, const std::vector<Property>& properties,
                                      const Budget& budget) {
    const MAlgebra sized = alg.with_height(budget.height);
    std::vector<CheckResult> out;
    std::map<Property, bool> defining_ok;
    for (auto p : properties) {
        out.push_back(sized.visit([&](const auto& a) { return dispatch(a, p, budget); }));
        if (is_defining(p)) defining_ok[p] = out.back().passed();
    }
    const bool wants_optional = std::any_of(properties.begin(), properties.end(), [](Property p) { return !is_defining(p); });
    if (!wants_optional) return out;
    bool all_ok = true;
    for (auto p : defining_axioms) {
        if (!defining_ok.contains(p))
            defining_ok[p] = sized.visit([&](const auto& a) { return dispatch(a, p, budget); }).passed();
        all_ok = all_ok && defining_ok[p];
    }
    if (!all_ok)
        for (std::size_t i = 0; i < properties.size(); ++i)
            if (!is_defining(properties[i])) {
                out[i].advisory = true;
                out[i].note = "a defining axiom fails on this algebra";
            }
    return out;
}

bool replays(const MAlgebra& alg, Property property, const Witness& witness) {
    return alg.visit([&](const auto& a) { return replay(a, property, witness); });
}

std::string display_name(Property property) {
    switch (property) {
        case Property::illegitimate: return "Illegitimate";
        case Property::idempotence: return "Idempotence";
        case Property::composition: return "Composition";
        case Property::interference: return "Interference";
        case Property::cumulativity: return "Cumulativity";
        case Property::negation: return "Negation";
        case Property::separability: return "Separability";
        case Property::strong_separability: return "Strong separability";
        case Property::l_cumulativity: return "L-cumulativity";
    }
    return "unknown";
}

}  // namespace malg::core
