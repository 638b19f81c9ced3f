#include "malg/order/order.hpp"

#include "malg/connectives/connectives.hpp"
#include "malg/core/axioms.hpp"
#include "malg/core/engine.hpp"
#include "malg/core/lemmas.hpp"

#include <algorithm>
#include <map>

namespace malg::order {

using connectives::conjoin;
using connectives::disjoin;
using connectives::implies;
using core::CheckResult;
using core::RawWitness;
using core::Status;
using core::Tally;

namespace {

constexpr std::uint32_t kNone = ~std::uint32_t{0};

template <class A>
using M = typename A::Measurement;

template <class F>
auto attempt(F&& f) -> std::optional<decltype(f())> {
    try {
        return f();
    } catch (const core::AxiomViolation&) {
        return std::nullopt;
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
}

template <class A>
Status exact_status(const A& alg) {
    if constexpr (std::is_same_v<A, core::RayAlgebra>)
        return alg.full_lattice() ? Status::sampled_pass : Status::pass;
    else
        return Status::pass;
}

struct Extremes {
    std::optional<std::uint32_t> bot;
    std::optional<std::uint32_t> top;
};

// Positions of bottom and top among the listed measurements, when both can
// be formed and are listed.
template <class A>
Extremes extremes(const core::MAlgebra& wrapped, const A& alg) {
    Extremes out;
    try {
        const auto tb = core::top_bot(wrapped);
        if (auto i = alg.index_of(tb.bot)) out.bot = static_cast<std::uint32_t>(*i);
        if (auto i = alg.index_of(tb.top)) out.top = static_cast<std::uint32_t>(*i);
    } catch (const core::AxiomViolation&) {
    }
    return out;
}

std::vector<std::string> quoted(const std::vector<std::string>& names, const std::vector<std::uint32_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(names[i]);
    return out;
}

// ---------------------------------------------------------------- bounds

enum BoundLaw : std::uint32_t {
    orders_disagree,
    not_reflexive,
    not_antisymmetric,
    not_transitive,
    no_bottom,
    bottom_not_least,
    no_top,
    top_not_greatest,
    order_without_commutation,
    glb_missing,
    glb_not_lower,
    glb_not_greatest,
    lub_missing,
    lub_not_upper,
    lub_not_least,
};

template <class A>
CheckResult bounds_impl(const core::MAlgebra& wrapped, const A& alg, const core::Budget& b) {
    const auto& ms = alg.measurements();
    const std::size_t n = ms.size();
    core::charge(std::uint64_t{n} * n * n, b, "order bounds");
    std::vector<std::vector<char>> le(n, std::vector<char>(n)), lz = le, com = le;
    std::vector<std::vector<std::optional<M<A>>>> meet(n, std::vector<std::optional<M<A>>>(n)), join = meet;
    core::parallel_for(n, b.exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            le[i][j] = alg.fp_subset(ms[i].map, ms[j].map);
            lz[i][j] = alg.z_subset(ms[j].map, ms[i].map);
            com[i][j] = alg.commutes(ms[i].map, ms[j].map);
            if (com[i][j]) {
                meet[i][j] = attempt([&] { return conjoin(alg, ms[i], ms[j]); });
                join[i][j] = attempt([&] { return disjoin(alg, ms[i], ms[j]); });
            }
        }
    });
    const auto [bot, top] = extremes(wrapped, alg);

    auto tally = core::sweep(n, b.exec, b.max_witnesses, [&](std::size_t ii, Tally& t) {
        const auto i = static_cast<std::uint32_t>(ii);
        auto w = [&](BoundLaw law, std::vector<std::uint32_t> idx) { t.add({{law}, std::move(idx)}, b.max_witnesses); };
        ++t.checked;
        if (!le[i][i]) w(not_reflexive, {i});
        if (!bot) w(no_bottom, {});
        else if (!le[*bot][i]) w(bottom_not_least, {*bot, i});
        if (!top) w(no_top, {});
        else if (!le[i][*top]) w(top_not_greatest, {i, *top});
        for (std::uint32_t j = 0; j < n; ++j) {
            t.checked += 1 + n;
            if (le[i][j] != lz[i][j]) w(orders_disagree, {i, j});
            if (i < j && le[i][j] && le[j][i] && !alg.same(ms[i].map, ms[j].map)) w(not_antisymmetric, {i, j});
            if (le[i][j] && !com[i][j]) w(order_without_commutation, {i, j});
            for (std::uint32_t k = 0; k < n; ++k)
                if (le[i][j] && le[j][k] && !le[i][k]) w(not_transitive, {i, j, k});
            if (!com[i][j] || j < i) continue;
            if (const auto& g = meet[i][j]) {
                if (!alg.fp_subset(g->map, ms[i].map) || !alg.fp_subset(g->map, ms[j].map)) w(glb_not_lower, {i, j});
                for (std::uint32_t k = 0; k < n; ++k)
                    if (le[k][i] && le[k][j] && !alg.fp_subset(ms[k].map, g->map)) w(glb_not_greatest, {i, j, k});
            } else {
                w(glb_missing, {i, j});
            }
            if (const auto& l = join[i][j]) {
                if (!alg.fp_subset(ms[i].map, l->map) || !alg.fp_subset(ms[j].map, l->map)) w(lub_not_upper, {i, j});
                for (std::uint32_t k = 0; k < n; ++k)
                    if (le[i][k] && le[j][k] && !alg.fp_subset(l->map, ms[k].map)) w(lub_not_least, {i, j, k});
            } else {
                w(lub_missing, {i, j});
            }
        }
    });

    const auto names = core::names_of(ms);
    std::vector<core::Witness> witnesses;
    for (const auto& r : tally.witnesses) {
        core::Witness out{{}, quoted(names, r.measurements), ""};
        const auto& m = r.measurements;
        auto name = [](const std::optional<M<A>>& x) { return x ? x->name : std::string("?"); };
        switch (r.states[0]) {
            case orders_disagree: out.detail = "FP inclusion and reversed Z inclusion disagree"; break;
            case not_reflexive: out.detail = "not below itself"; break;
            case not_antisymmetric: out.detail = "mutually below but different"; break;
            case not_transitive: out.detail = "first <= second <= third but not first <= third"; break;
            case no_bottom: out.detail = "no bottom element can be formed"; break;
            case bottom_not_least: out.detail = "bottom is not below"; break;
            case no_top: out.detail = "no top element can be formed"; break;
            case top_not_greatest: out.detail = "not below top"; break;
            case order_without_commutation: out.detail = "comparable but not commuting"; break;
            case glb_missing: out.detail = "the conjunction is not in M"; break;
            case glb_not_lower: out.detail = "the conjunction " + name(meet[m[0]][m[1]]) + " is not a lower bound"; break;
            case glb_not_greatest:
                out.detail = "a lower bound is not below the conjunction " + name(meet[m[0]][m[1]]);
                break;
            case lub_missing: out.detail = "the disjunction is not in M"; break;
            case lub_not_upper: out.detail = "the disjunction " + name(join[m[0]][m[1]]) + " is not an upper bound"; break;
            default: out.detail = "an upper bound is not above the disjunction " + name(join[m[0]][m[1]]); break;
        }
        witnesses.push_back(std::move(out));
    }
    auto r = core::make_result("partial_order_bounds", exact_status(alg), tally.checked, std::move(witnesses));
    std::size_t apart = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) apart += !com[i][j];
    r.note = "bounds not applicable to " + std::to_string(apart) + " non-commuting pair" + (apart == 1 ? "" : "s");
    return r;
}

// ------------------------------------------------------- orthocomplement

template <class A>
std::vector<CheckResult> orthomodular_impl(const core::MAlgebra& wrapped, const A& alg, const core::Budget& b) {
    const auto& ms = alg.measurements();
    const std::size_t n = ms.size();
    core::charge(std::uint64_t{n} * n, b, "orthocomplement laws");
    std::vector<std::optional<M<A>>> neg(n);
    core::parallel_for(n, b.exec, [&](std::size_t i) { neg[i] = alg.negation(ms[i]); });
    const auto [bot, top] = extremes(wrapped, alg);
    const auto names = core::names_of(ms);

    // Each tally entry is (law-specific code, measurement indices).
    std::array<Tally, 5> t;
    std::vector<std::array<Tally, 5>> rows(n);
    core::parallel_for(n, b.exec, [&](std::size_t ii) {
        const auto i = static_cast<std::uint32_t>(ii);
        auto& row = rows[i];
        auto w = [&](int law, std::uint32_t code, std::vector<std::uint32_t> idx) {
            row[law].add({{code}, std::move(idx)}, b.max_witnesses);
        };
        const auto& a = ms[i];
        const auto& na = neg[i];

        ++row[0].checked;
        if (!na) w(0, 0, {i});
        else if (auto nn = alg.negation(*na); !nn || !alg.same(nn->map, a.map)) w(0, 1, {i});

        ++row[2].checked;
        ++row[3].checked;
        if (!na) {
            w(2, 0, {i});
            w(3, 0, {i});
        } else {
            auto g = attempt([&] { return conjoin(alg, a, *na); });
            if (!g) w(2, 1, {i});
            else if (!bot || !alg.same(g->map, ms[*bot].map)) w(2, 2, {i});
            auto l = attempt([&] { return disjoin(alg, a, *na); });
            if (!l) w(3, 1, {i});
            else if (!top || !alg.same(l->map, ms[*top].map)) w(3, 2, {i});
        }

        for (std::uint32_t j = 0; j < n; ++j) {
            if (!alg.fp_subset(a.map, ms[j].map)) continue;
            ++row[1].checked;
            ++row[4].checked;
            if (!na || !neg[j]) {
                w(1, 0, {i, j});
                w(4, 0, {i, j});
                continue;
            }
            if (!alg.fp_subset(neg[j]->map, na->map)) w(1, 1, {i, j});
            auto gamma = attempt([&] { return conjoin(alg, *na, ms[j]); });
            if (!gamma) {
                w(4, 1, {i, j});
                continue;
            }
            auto l = attempt([&] { return disjoin(alg, a, *gamma); });
            if (!l) w(4, 2, {i, j});
            else if (!alg.same(l->map, ms[j].map)) w(4, 3, {i, j});
        }
        for (auto& r : row) r.trim(b.max_witnesses);
    });
    for (auto& row : rows)
        for (int k = 0; k < 5; ++k) t[k].merge(std::move(row[k]));

    std::vector<CheckResult> out;
    for (int k = 0; k < 5; ++k) {
        t[k].trim(b.max_witnesses);
        std::vector<core::Witness> ws;
        for (const auto& r : t[k].witnesses) {
            core::Witness w{{}, quoted(names, r.measurements), ""};
            const auto code = r.states[0];
            if (code == 0) {
                w.detail = "a negation is missing";
            } else if (k == 0) {
                w.detail = "the double negation differs";
            } else if (k == 1) {
                w.detail = "the negations are not reversed";
            } else if (k == 2 || k == 3) {
                const char* what = k == 2 ? "conjunction with the negation" : "disjunction with the negation";
                w.detail = std::string("the ") + what + (code == 1 ? " is not in M" : (k == 2 ? " is not bottom" : " is not top"));
            } else {
                w.detail = code == 1   ? "the conjunction of the first's negation with the second is not available"
                           : code == 2 ? "the disjunction with the relative complement is not available"
                                       : "the second is not the join of the first and its relative complement";
            }
            ws.push_back(std::move(w));
        }
        out.push_back(core::make_result(std::string(orthocomplement_ids[k]), exact_status(alg), t[k].checked, std::move(ws)));
    }
    return out;
}

// ------------------------------------------------ strong separability

template <class A>
std::vector<CheckResult> strong_sep_impl(const A& alg, const core::Budget& b) {
    using State = typename A::State;
    const auto& ms = alg.measurements();
    std::vector<State> xs;
    for (const auto& x : alg.states())
        if (!alg.is_zero(x)) xs.push_back(x);
    std::map<State, std::uint32_t> index;
    for (std::size_t i = 0; i < xs.size(); ++i) index.emplace(xs[i], static_cast<std::uint32_t>(i));

    std::vector<std::optional<M<A>>> point(xs.size());
    core::parallel_for(xs.size(), b.exec, [&](std::size_t i) { point[i] = alg.point_measurement(xs[i]); });
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!point[i])
            throw PreconditionError("state " + alg.label(xs[i]) +
                                    " has no point measurement, so the algebra is not strongly separable");
    core::charge(std::uint64_t{xs.size()} * xs.size() * std::max<std::size_t>(ms.size(), 1), b,
                 "strong separability");

    const std::size_t n = ms.size();
    std::vector<std::optional<M<A>>> neg(n);
    // impl[a][k] is a -> e_y for the k-th sampled fixpoint y of a.
    std::vector<std::vector<std::uint32_t>> fixed(n);
    std::vector<std::vector<std::optional<M<A>>>> impl(n);
    core::parallel_for(n, b.exec, [&](std::size_t a) {
        neg[a] = alg.negation(ms[a]);
        for (std::uint32_t y = 0; y < xs.size(); ++y)
            if (alg.apply(ms[a].map, xs[y]) == xs[y]) {
                fixed[a].push_back(y);
                impl[a].push_back(attempt([&] { return implies(alg, ms[a], *point[y]); }));
            }
    });

    auto point_of = [&](const State& y) -> std::optional<M<A>> {
        auto it = index.find(y);
        return it != index.end() ? point[it->second] : alg.point_measurement(y);
    };

    // Witness keys: states {code, x, y}, measurements {a}.
    std::vector<std::array<Tally, 3>> rows(xs.size());
    core::parallel_for(xs.size(), b.exec, [&](std::size_t xi) {
        auto& row = rows[xi];
        const auto x = static_cast<std::uint32_t>(xi);
        for (std::uint32_t a = 0; a < n; ++a) {
            auto w = [&](int part, std::uint32_t code, std::uint32_t y) {
                row[part].add({{code, x, y}, {a}}, b.max_witnesses);
            };
            const State ax = alg.apply(ms[a].map, xs[x]);
            std::optional<M<A>> e_ax;
            if (!alg.is_zero(ax)) {
                ++row[0].checked;
                e_ax = point_of(ax);
                if (!e_ax) w(0, 0, kNone);
                else if (!alg.fp_subset(e_ax->map, ms[a].map)) w(0, 1, kNone);
                else if (auto imp = attempt([&] { return implies(alg, ms[a], *e_ax); }); !imp) w(0, 2, kNone);
                else if (alg.apply(imp->map, xs[x]) != xs[x]) w(0, 3, kNone);
            }
            for (std::size_t k = 0; !alg.is_zero(ax) && k < fixed[a].size(); ++k) {
                ++row[1].checked;
                const auto y = fixed[a][k];
                const auto& imp = impl[a][k];
                if (!imp) {
                    w(1, 0, y);
                    continue;
                }
                const bool holds = alg.apply(imp->map, xs[x]) == xs[x];
                if (holds != (xs[y] == ax)) w(1, holds ? 1 : 2, y);
            }
            if (!neg[a]) {
                ++row[2].checked;
                w(2, 0, kNone);
                continue;
            }
            const State nx = alg.apply(neg[a]->map, xs[x]);
            if (alg.is_zero(ax) || alg.is_zero(nx)) continue;
            ++row[2].checked;
            const auto e_nx = point_of(nx);
            if (!e_ax || !e_nx) {
                w(2, 1, kNone);
                continue;
            }
            auto d = attempt([&] { return disjoin(alg, *e_ax, *e_nx); });
            if (!d) w(2, 2, kNone);
            else if (alg.apply(d->map, xs[x]) != xs[x]) w(2, 3, kNone);
        }
        for (auto& r : row) r.trim(b.max_witnesses);
    });

    std::array<Tally, 3> t;
    for (auto& row : rows)
        for (int k = 0; k < 3; ++k) t[k].merge(std::move(row[k]));

    const auto names = core::names_of(ms);
    std::vector<CheckResult> out;
    for (int k = 0; k < 3; ++k) {
        t[k].trim(b.max_witnesses);
        std::vector<core::Witness> ws;
        for (const auto& r : t[k].witnesses) {
            core::Witness w;
            w.states.push_back(alg.label(xs[r.states[1]]));
            if (r.states[2] != kNone) w.states.push_back(alg.label(xs[r.states[2]]));
            w.measurements = quoted(names, r.measurements);
            const auto code = r.states[0];
            if (k == 0) {
                static constexpr const char* text[] = {
                    "the image has no point measurement", "the point measurement of the image is not below the measurement",
                    "the implication to the point measurement is not available",
                    "the state is not fixed by the implication to the point measurement of its image"};
                w.detail = text[code];
            } else if (k == 1) {
                w.detail = code == 0   ? "the implication to the point measurement is not available"
                           : code == 1 ? "fixed by the implication to a point measurement other than its image"
                                       : "not fixed by the implication to the point measurement of its image";
            } else {
                static constexpr const char* text[] = {
                    "the measurement has no negation", "a component has no point measurement",
                    "the disjunction of the component point measurements is not available",
                    "the state is not fixed by the disjunction of its component point measurements"};
                w.detail = text[code];
            }
            ws.push_back(std::move(w));
        }
        out.push_back(core::make_result(std::string(strong_separability_ids[k]), core::pointwise_status(alg),
                                        t[k].checked, std::move(ws)));
    }
    out[1].note = alg.exhaustive() ? "" : "uniqueness checked among sampled states only";
    return out;
}

// ----------------------------------------------------------- classical

template <class A>
std::vector<M<A>> central_candidates(const A& alg) {
    auto out = alg.measurements();
    if constexpr (std::is_same_v<A, core::RayAlgebra>) {
        if (alg.full_lattice())
            for (const auto& x : alg.states())
                if (!alg.is_zero(x))
                    if (auto e = alg.point_measurement(x)) out.push_back(*e);
    }
    return out;
}

template <class A>
std::vector<CheckResult> classical_impl(const core::MAlgebra& wrapped, const A& alg, const core::Budget& b) {
    const auto& ms = alg.measurements();
    const std::size_t n = ms.size();
    const auto names = core::names_of(ms);
    std::vector<char> cls(n);
    core::parallel_for(n, b.exec, [&](std::size_t i) { cls[i] = connectives::classical(alg, ms[i]); });
    std::vector<CheckResult> out;

    const auto sep = core::check_axiom(wrapped, core::Property::separability, b);
    if (sep.status == Status::fail) {
        auto r = core::make_result("classical_iff_central", Status::pass, 0, {});
        r.note = "the algebra is not separable";
        out.push_back(std::move(r));
    } else {
        const auto ks = central_candidates(alg);
        auto t = core::sweep(n, b.exec, b.max_witnesses, [&](std::size_t i, Tally& local) {
            bool central = true;
            for (const auto& k : ks) central = central && alg.commutes(ms[i].map, k.map);
            ++local.checked;
            if (central != static_cast<bool>(cls[i]))
                local.add({{central ? 1u : 0u}, {static_cast<std::uint32_t>(i)}}, b.max_witnesses);
        });
        std::vector<core::Witness> ws;
        for (const auto& r : t.witnesses)
            ws.push_back({{}, quoted(names, r.measurements),
                          r.states[0] ? "commutes with every measurement but is not classical"
                                      : "classical but fails to commute with some measurement"});
        out.push_back(core::make_result("classical_iff_central", core::pointwise_status(alg), t.checked, std::move(ws)));
    }

    auto t = core::sweep(n, b.exec, b.max_witnesses, [&](std::size_t ii, Tally& local) {
        if (!cls[ii]) return;
        const auto i = static_cast<std::uint32_t>(ii);
        ++local.checked;
        auto n_i = attempt([&] { return connectives::negate(alg, ms[i]); });
        if (!n_i || !connectives::classical(alg, *n_i)) local.add({{0}, {i}}, b.max_witnesses);
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (!cls[j] || !alg.commutes(ms[i].map, ms[j].map)) continue;
            ++local.checked;
            auto ok = [&](auto&& f) {
                auto r = attempt(f);
                return r && connectives::classical(alg, *r);
            };
            if (!ok([&] { return conjoin(alg, ms[i], ms[j]); })) local.add({{1}, {i, j}}, b.max_witnesses);
            if (!ok([&] { return disjoin(alg, ms[i], ms[j]); })) local.add({{2}, {i, j}}, b.max_witnesses);
            if (!ok([&] { return implies(alg, ms[i], ms[j]); })) local.add({{3}, {i, j}}, b.max_witnesses);
        }
    });
    static constexpr const char* text[] = {"the negation is not classical", "the conjunction is not classical",
                                           "the disjunction is not classical", "the implication is not classical"};
    std::vector<core::Witness> ws;
    for (const auto& r : t.witnesses) ws.push_back({{}, quoted(names, r.measurements), text[r.states[0]]});
    out.push_back(core::make_result("classical_closure", core::pointwise_status(alg), t.checked, std::move(ws)));
    return out;
}

}  // namespace

bool leq(const core::MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) { return x.fp_subset(x.measurement(a).map, x.measurement(b).map); });
}

bool leq_by_zeros(const core::MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) { return x.z_subset(x.measurement(b).map, x.measurement(a).map); });
}

std::optional<std::string> glb(const core::MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) -> std::optional<std::string> {
        const auto ma = x.measurement(a);
        const auto mb = x.measurement(b);
        if (!x.commutes(ma.map, mb.map)) return std::nullopt;
        return conjoin(x, ma, mb).name;
    });
}

std::optional<std::string> lub(const core::MAlgebra& alg, std::string_view a, std::string_view b) {
    return alg.visit([&](const auto& x) -> std::optional<std::string> {
        const auto ma = x.measurement(a);
        const auto mb = x.measurement(b);
        if (!x.commutes(ma.map, mb.map)) return std::nullopt;
        return disjoin(x, ma, mb).name;
    });
}

PosetView::PosetView(const core::MAlgebra& alg) : alg_(&alg), names_(alg.measurement_names()) {
    rel_.assign(names_.size(), std::vector<bool>(names_.size()));
    alg.visit([&](const auto& x) {
        const auto& ms = x.measurements();
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = 0; j < ms.size(); ++j) rel_[i][j] = x.fp_subset(ms[i].map, ms[j].map);
    });
}

bool PosetView::leq(std::string_view a, std::string_view b) const {
    auto find = [&](std::string_view s) {
        auto it = std::lower_bound(names_.begin(), names_.end(), s);
        if (it == names_.end() || *it != s) throw InputError("unknown measurement '" + std::string(s) + "'");
        return static_cast<std::size_t>(it - names_.begin());
    };
    return rel_[find(a)][find(b)];
}

CheckResult bounds_check(const core::MAlgebra& alg, const core::Budget& budget) {
    return alg.visit([&](const auto& x) { return bounds_impl(alg, x, budget); });
}

std::vector<CheckResult> orthomodular_check(const core::MAlgebra& alg, const core::Budget& budget) {
    return alg.visit([&](const auto& x) { return orthomodular_impl(alg, x, budget); });
}

std::vector<CheckResult> strong_sep_check(const core::MAlgebra& alg, const core::Budget& budget) {
    const core::MAlgebra sized = alg.with_height(budget.height);
    return sized.visit([&](const auto& x) { return strong_sep_impl(x, budget); });
}

std::vector<CheckResult> classical_checks(const core::MAlgebra& alg, const core::Budget& budget) {
    const core::MAlgebra sized = alg.with_height(budget.height);
    return sized.visit([&](const auto& x) { return classical_impl(sized, x, budget); });
}

}  // namespace malg::order
