// One line per acceptance criterion; exit status 1 if any fails.

#include "malg/connectives/connectives.hpp"
#include "malg/core/axioms.hpp"
#include "malg/core/lemmas.hpp"
#include "malg/core/ops.hpp"
#include "malg/logic/harness.hpp"
#include "malg/models/fixtures.hpp"
#include "malg/order/order.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace malg;
using core::Property;
using core::Status;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

core::MAlgebra fixture(const std::string& name) {
    for (auto& [n, spec] : models::fixtures::all())
        if (n == name) return models::build(spec);
    throw std::runtime_error("no fixture " + name);
}

const std::vector<Property> kDefining(core::defining_axioms.begin(), core::defining_axioms.end());

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::vector<std::string> members_of(const std::string& set_label) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : set_label) {
        if (c == '{' || c == '}' || c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

bool nested(const std::string& a, const std::string& b) {
    auto x = members_of(a), y = members_of(b);
    if (x.size() > y.size()) std::swap(x, y);
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

// Every commuting subset of the listed measurements with 1..3 members.
std::vector<std::vector<std::string>> commuting_subsets(const core::MAlgebra& alg) {
    const auto names = alg.measurement_names();
    const auto n = names.size();
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({names[i]});
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!core::commutes(alg, names[i], names[j])) continue;
            out.push_back({names[i], names[j]});
            for (std::size_t k = j + 1; k < n; ++k)
                if (core::commutes(alg, names[i], names[k]) && core::commutes(alg, names[j], names[k]))
                    out.push_back({names[i], names[j], names[k]});
        }
    }
    return out;
}

void axiom_suite(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto* f : {"f1", "t2", "t2_maximal", "r2", "r3"}) {
        const auto alg = fixture(f);
        for (const auto& r : core::check_axioms(alg, kDefining)) {
            // Ray checks decided on the matrices report pass, the rest sampled_pass.
            const bool ok = alg.exhaustive() ? r.status == Status::pass : r.passed() && r.status != Status::vacuous;
            o.require(ok, std::string(f) + " " + r.property);
        }
    }
    const auto t2 = fixture("t2");
    o.require(t2.state_count() == 16 && t2.measurement_count() == 16, "T2 is 16 x 16");
    const double s = seconds_since(t0);
    o.require(s < 10, "runtime under 10 s");
    o.detail << "six axioms on F1, T2, T2-maximal (exhaustive), R2, R3 (H=3) in " << s << " s";
}

void separability_verdicts(Outcome& o) {
    const auto t2 = fixture("t2");
    const auto sep = core::check_axiom(t2, Property::separability);
    o.require(sep.status == Status::fail, "T2 fails separability");
    if (!sep.witnesses.empty()) {
        const auto& w = sep.witnesses.front();
        o.require(w.states.size() == 2 && nested(w.states[0], w.states[1]), "T2 witness is a nested pair");
        o.require(core::replays(t2, Property::separability, w), "T2 witness replays");
        o.detail << "T2 witness " << w.states[0] << " / " << w.states[1] << "; ";
    }
    const auto max = fixture("t2_maximal");
    o.require(core::check_axiom(max, Property::separability).status == Status::pass, "T2-maximal separable");
    o.require(core::check_axiom(max, Property::strong_separability).status == Status::pass,
              "T2-maximal strongly separable");
    for (const auto* f : {"r2_full", "r3_full"})
        o.require(core::check_axiom(fixture(f), Property::strong_separability).status == Status::sampled_pass,
                  std::string(f) + " strongly separable");
    o.detail << "T2-maximal separable and strongly separable; R2-full, R3-full strongly separable (sampled)";
}

void lemma_suite(Outcome& o) {
    std::size_t fixtures = 0;
    for (auto& [name, spec] : models::fixtures::all()) {
        const auto alg = models::build(spec);
        bool axioms_hold = true;
        for (const auto& r : core::check_axioms(alg, kDefining)) axioms_hold = axioms_hold && r.passed();
        if (!axioms_hold) continue;
        ++fixtures;
        const auto results = core::lemma_suite(alg);
        o.require(results.size() == 12, "twelve lemma checks");
        for (const auto& r : results) o.require(r.passed() && !r.advisory, name + " " + r.property);
    }
    o.detail << "12 lemma checks on " << fixtures << " fixtures";
}

void tautology_harness(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t sets = 0;
    std::uint64_t checked = 0;
    for (const auto* f : {"t2", "r2"}) {
        const auto alg = fixture(f);
        for (const auto& members : commuting_subsets(alg)) {
            const auto r = logic::verify_tautology_theorem(connectives::CommutingSet(alg, members), 3, 3);
            o.require(r.status == Status::pass, std::string(f) + " set of " + std::to_string(members.size()));
            checked += r.checked_count;
            ++sets;
        }
    }
    const double s = seconds_since(t0);
    o.require(s < 60, "runtime under 60 s");
    o.detail << sets << " commuting sets on T2 and R2, depth 3, " << checked << " evaluations in " << s << " s";
}

void schemes(Outcome& o) {
    std::size_t sets = 0;
    for (const auto* f : {"t2", "r2"}) {
        const auto alg = fixture(f);
        for (const auto& members : commuting_subsets(alg)) {
            for (const auto& r : logic::verify_schemes(connectives::CommutingSet(alg, members)))
                o.require(r.passed() && r.status != Status::vacuous, std::string(f) + " " + r.property);
            ++sets;
        }
    }
    for (const auto& f : logic::scheme_formulas()) o.require(logic::is_tautology(f).is_tautology, "scheme oracle");
    o.detail << "modus ponens, three schemes and two definability identities over " << sets << " commuting sets";
}

void orthomodularity(Outcome& o) {
    for (auto& [name, spec] : models::fixtures::all())
        for (const auto& r : order::orthomodular_check(models::build(spec)))
            o.require(r.passed(), name + " " + r.property);
    const auto r3 = fixture("r3");
    o.require(order::leq(r3, "px", "pxy"), "px <= pxy");
    const auto meet = order::glb(r3, core::negation_of(r3, "px"), "pxy");
    const auto join = meet ? order::lub(r3, "px", *meet) : std::nullopt;
    o.require(join == std::optional<std::string>("pxy"), "pxy = px | (~px & pxy)");
    o.detail << "five laws on all fixtures; R3: px | (~px & pxy) = " << join.value_or("none");
}

void strong_separability(Outcome& o) {
    for (const auto* f : {"r2_full", "r3_full"}) {
        const auto alg = fixture(f);
        o.require(alg.ray()->sample_height() == 3, "H = 3");
        for (const auto& r : order::strong_sep_check(alg))
            o.require(r.status == Status::sampled_pass, std::string(f) + " " + r.property);
    }
    const auto alg = fixture("r3_full");
    const auto e1 = core::point_measurement(alg, "(1,1,0)");
    const auto e2 = core::point_measurement(alg, "(0,0,1)");
    o.require(e1 && e2, "point measurements exist");
    if (e1 && e2) {
        const auto join = connectives::disjunction(alg, *e1, *e2);
        o.require(core::apply(alg, join, "(1,1,1)") == "(1,1,1)", "(1,1,1) fixed by the join");
        o.detail << "(1,1,1) in FP(" << *core::extent(alg, join).fp_subspace << "); ";
    }
    o.detail << "dependence, uniqueness and decomposition on R2-full and R3-full";
}

std::vector<models::TableModelSpec> t2_mutants(const models::TableModelSpec& base) {
    std::vector<models::TableModelSpec> out;
    for (const auto& [m, table] : base.measurements)
        for (const auto& [x, y] : table) {
            if (x == base.zero) continue;
            for (const auto& z : base.states) {
                if (z == y) continue;
                auto spec = base;
                spec.measurements[m][x] = z;
                out.push_back(std::move(spec));
            }
        }
    return out;
}

void mutation_sensitivity(Outcome& o) {
    const auto t2_alg = fixture("t2");
    const auto& t2 = *t2_alg.finite();
    models::TableModelSpec base;
    base.states = t2.state_names();
    base.zero = t2.label(t2.zero());
    for (const auto& m : t2.measurements())
        for (auto x : t2.states()) base.measurements[m.name][t2.label(x)] = t2.label(t2.apply(m.map, x));

    const auto corpus = t2_mutants(base);
    std::size_t caught = 0, replayed = 0;
    for (const auto& spec : corpus) {
        const auto alg = models::build(spec);
        bool failed = false;
        for (const auto& r : core::check_axioms(alg, kDefining)) {
            if (r.status != Status::fail) continue;
            failed = true;
            const auto p = *core::parse_property(r.property);
            bool all = !r.witnesses.empty();
            for (const auto& w : r.witnesses) all = all && core::replays(alg, p, w);
            replayed += all;
            o.require(all, "witness replays");
        }
        caught += failed;
    }
    o.require(corpus.size() >= 50, "at least 50 mutants");
    o.require(caught == corpus.size(), "every mutant caught");
    o.detail << caught << " of " << corpus.size() << " single-entry mutants fail a defining axiom; "
             << replayed << " failing results replayed";
}

void l_cumulativity(Outcome& o) {
    for (const auto* f : {"r2", "r3"})
        for (int n = 2; n <= 3; ++n) {
            core::Budget b;
            b.loop_length = n;
            o.require(core::check_axiom(fixture(f), Property::l_cumulativity, b).status == Status::sampled_pass,
                      std::string(f) + " n=" + std::to_string(n));
        }
    o.detail << "cycles of length 2 and 3 on R2 and R3 at H=3";
}

void preservation_agreement(Outcome& o) {
    std::size_t pairs = 0;
    for (const auto* f : {"r2", "r3", "r2_full", "r3_full"}) {
        const auto alg = fixture(f);
        const auto& r = *alg.ray();
        for (const auto& a : r.measurements())
            for (const auto& b : r.measurements()) {
                bool pointwise = true;
                for (const auto& x : r.states()) {
                    if (r.apply(b.map, x) != x) continue;
                    const auto ax = r.apply(a.map, x);
                    pointwise = pointwise && r.apply(b.map, ax) == ax;
                }
                o.require(r.preserves(a.map, b.map) == pointwise, std::string(f) + " " + a.name + "/" + b.name);
                ++pairs;
            }
    }
    o.detail << pairs << " subspace pairs agree on every sampled state";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"axiom suite", axiom_suite},
        {"separability verdicts", separability_verdicts},
        {"lemma suite", lemma_suite},
        {"tautologies fix every state", tautology_harness},
        {"axiom schemes and definability", schemes},
        {"orthomodularity", orthomodularity},
        {"strong separability theorems", strong_separability},
        {"mutation sensitivity", mutation_sensitivity},
        {"l-cumulativity", l_cumulativity},
        {"analytic preservation", preservation_agreement},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "threw: " << e.what();
        }
        failures += !o.ok;
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
