#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "malg/core/axioms.hpp"
#include "malg/core/lemmas.hpp"
#include "malg/core/ops.hpp"
#include "malg/models/fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace malg;
using core::Property;
using core::Status;

namespace {

core::MAlgebra fixture(const std::string& name) {
    for (auto& [n, spec] : models::fixtures::all())
        if (n == name) return models::build(spec);
    FAIL("no fixture " << name);
    throw;
}

std::vector<Property> defining() { return {core::defining_axioms.begin(), core::defining_axioms.end()}; }

bool contains(const std::vector<std::string>& xs, const std::string& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// The finite algebra as an explicit table, for mutation.
models::TableModelSpec as_table(const core::FiniteAlgebra& a) {
    models::TableModelSpec s;
    s.states = a.state_names();
    s.zero = a.label(a.zero());
    for (const auto& m : a.measurements())
        for (auto x : a.states()) s.measurements[m.name][a.label(x)] = a.label(a.apply(m.map, x));
    return s;
}

}  // namespace

TEST_CASE("apply follows the measurement action") {
    const auto r2 = fixture("r2");
    const auto t2 = fixture("t2");
    CHECK(core::apply(r2, "pd", "(1,0)") == "(1,1)");
    CHECK(core::apply(t2, "p", "{v00,v11}") == "{v11}");
    for (const auto& m : r2.measurement_names()) CHECK(core::apply(r2, m, "0") == "0");
    for (const auto& m : t2.measurement_names()) CHECK(core::apply(t2, m, "{}") == "{}");
    CHECK_THROWS_AS(core::apply(r2, "nope", "(1,0)"), InputError);
    CHECK_THROWS_AS(core::apply(t2, "p", "{v22}"), InputError);
}

TEST_CASE("extent lists fixpoints and zeros") {
    const auto top = core::extent(fixture("f1"), "top");
    CHECK(top.fp == std::vector<std::string>{"0", "a"});
    CHECK(top.z == std::vector<std::string>{"0"});
    CHECK(top.complete);

    const auto p = core::extent(fixture("t2"), "p");
    CHECK(p.fp.size() == 4);
    for (const auto* s : {"{}", "{v10}", "{v11}", "{v10,v11}"}) CHECK(contains(p.fp, s));
    CHECK(p.def.size() == p.fp.size() + p.z.size() - 1);

    const auto px = core::extent(fixture("r2"), "px");
    CHECK(!px.complete);
    CHECK(px.fp_subspace == "span{(1,0)}");
    CHECK(px.z_subspace == "span{(0,1)}");
    CHECK(px.fp == std::vector<std::string>{"0", "(1,0)"});
    CHECK(px.z == std::vector<std::string>{"0", "(0,1)"});
}

TEST_CASE("preservation and commutation examples") {
    const auto t2 = fixture("t2");
    const auto names = t2.measurement_names();
    for (const auto& a : names)
        for (const auto& b : names) {
            CHECK(core::preserves(t2, a, b));
            CHECK(core::commutes(t2, a, b));
        }
    const auto r2 = fixture("r2");
    CHECK_FALSE(core::preserves(r2, "px", "pd"));
    CHECK_FALSE(core::commutes(r2, "px", "pd"));
    for (auto& [name, spec] : models::fixtures::all()) {
        const auto alg = models::build(spec);
        for (const auto& a : alg.measurement_names()) {
            const auto na = core::negation_of(alg, a);
            CHECK(core::preserves(alg, na, a));
            CHECK(core::commutes(alg, a, na));
        }
    }
}

TEST_CASE("compose_raw and membership") {
    const auto r2 = fixture("r2");
    CHECK(core::membership(r2, core::compose_raw(r2, "px", "py")) == "bot");
    CHECK_FALSE(core::membership(r2, core::compose_raw(r2, "px", "pd")).has_value());
    CHECK(core::membership(r2, core::compose_raw(r2, "top", "pd")) == "pd");
    CHECK(core::membership(r2, core::compose_raw(r2, "pd", "pd")) == "pd");
    const auto f1 = fixture("f1");
    CHECK(core::membership(f1, core::compose_raw(f1, "top", "top")) == "top");
    CHECK(core::membership(f1, core::compose_raw(f1, "top", "bot")) == "bot");
}

TEST_CASE("negation examples") {
    CHECK(core::negation_of(fixture("r2"), "pd") == "pdperp");
    CHECK(core::negation_of(fixture("t2"), "p") == "~p");
    for (const auto* f : {"f1", "t2", "r2", "r3"}) CHECK(core::negation_of(fixture(f), "top") == "bot");
}

TEST_CASE("top and bottom") {
    for (const auto* f : {"f1", "t2", "t2_maximal", "r2", "r3", "r2_full"}) {
        const auto tb = core::top_bot(fixture(f));
        CHECK(tb.top == "top");
        CHECK(tb.bot == "bot");
    }
    const auto full = core::extent(fixture("r2"), "top");
    CHECK(full.fp_subspace == "span{(1,0),(0,1)}");
}

TEST_CASE("point measurements") {
    CHECK(core::point_measurement(fixture("r2_full"), "(1,1)") == "pd");
    CHECK(core::point_measurement(fixture("r2_full"), "(1,2)") == "span{(1,2)}");
    CHECK(core::point_measurement(fixture("t2_maximal"), "{v11}") == "p&q");
    CHECK_FALSE(core::point_measurement(fixture("t2"), "{v10,v11}").has_value());
}

TEST_CASE("defining axioms hold on every fixture") {
    for (auto& [name, spec] : models::fixtures::all()) {
        CAPTURE(name);
        const auto alg = models::build(spec);
        for (const auto& r : core::check_axioms(alg, defining())) {
            CAPTURE(r.property);
            CHECK(r.passed());
            CHECK(r.status != Status::vacuous);
            if (alg.exhaustive()) CHECK(r.status == Status::pass);
        }
    }
}

TEST_CASE("checked counts on the small fixtures") {
    CHECK(core::check_axiom(fixture("f1"), Property::idempotence).checked_count == 4);
    const auto t2 = fixture("t2");
    CHECK(core::check_axiom(t2, Property::idempotence).checked_count == 256);
    const auto r = core::check_axiom(fixture("r2"), Property::interference);
    CHECK(r.status == Status::sampled_pass);
}

TEST_CASE("separability verdicts") {
    const auto t2 = fixture("t2");
    const auto sep = core::check_axiom(t2, Property::separability);
    REQUIRE(sep.status == Status::fail);
    CHECK(sep.witnesses.front().states == std::vector<std::string>{"{v10,v11}", "{v11}"});
    for (const auto& w : sep.witnesses) CHECK(core::replays(t2, Property::separability, w));
    CHECK(core::check_axiom(t2, Property::strong_separability).status == Status::fail);

    const auto max = fixture("t2_maximal");
    for (auto p : core::all_properties) CHECK(core::check_axiom(max, p).status == Status::pass);
    for (const auto* f : {"r2_full", "r3_full"}) {
        CAPTURE(f);
        CHECK(core::check_axiom(fixture(f), Property::strong_separability).status == Status::sampled_pass);
        CHECK(core::check_axiom(fixture(f), Property::separability).status == Status::sampled_pass);
    }
    CHECK(core::check_axiom(fixture("f1"), Property::separability).status == Status::vacuous);
}

TEST_CASE("l_cumulativity on ray fixtures") {
    for (const auto* f : {"r2", "r3"})
        for (int n = 2; n <= 3; ++n) {
            core::Budget b;
            b.loop_length = n;
            CHECK(core::check_axiom(fixture(f), Property::l_cumulativity, b).status == Status::sampled_pass);
        }
}

TEST_CASE("the lemma suite passes on every fixture") {
    for (auto& [name, spec] : models::fixtures::all()) {
        CAPTURE(name);
        const auto results = core::lemma_suite(models::build(spec));
        REQUIRE(results.size() == core::lemma_ids.size());
        for (std::size_t i = 0; i < results.size(); ++i) {
            CAPTURE(results[i].property);
            CHECK(results[i].property == core::lemma_ids[i]);
            CHECK(results[i].passed());
            CHECK_FALSE(results[i].advisory);
        }
    }
    // FP(pd . pdperp) = {0} = FP(pd) & FP(pdperp).
    const auto r2 = fixture("r2");
    const auto comp = core::membership(r2, core::compose_raw(r2, "pd", "pdperp"));
    REQUIRE(comp.has_value());
    CHECK(core::extent(r2, *comp).fp == std::vector<std::string>{"0"});
}

TEST_CASE("serial and parallel kernels agree") {
    for (auto& [name, spec] : models::fixtures::all()) {
        CAPTURE(name);
        const auto alg = models::build(spec);
        core::Budget serial, parallel;
        serial.exec = core::Exec::serial;
        parallel.exec = core::Exec::parallel;
        serial.max_witnesses = parallel.max_witnesses = 3;
        const std::vector<Property> all(core::all_properties.begin(), core::all_properties.end());
        CHECK(core::check_axioms(alg, all, serial) == core::check_axioms(alg, all, parallel));
        CHECK(core::lemma_suite(alg, serial) == core::lemma_suite(alg, parallel));
    }
}

TEST_CASE("analytic preservation agrees with the pointwise definition") {
    for (const auto* f : {"r2", "r3", "r2_full", "r3_full"}) {
        CAPTURE(f);
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
                CAPTURE(a.name);
                CAPTURE(b.name);
                CHECK(r.preserves(a.map, b.map) == pointwise);
            }
    }
}

TEST_CASE("a mutant that breaks idempotence") {
    const auto t2_alg = fixture("t2");
    const auto* t2 = t2_alg.finite();
    REQUIRE(t2);
    auto spec = as_table(*t2);
    spec.measurements["p"]["{v11}"] = "{v10}";
    const auto mutant = models::build(spec);
    const auto r = core::check_axiom(mutant, Property::idempotence);
    REQUIRE(r.status == Status::fail);
    CHECK(r.witnesses.front().states == std::vector<std::string>{"{v01,v11}"});
    CHECK(r.witnesses.front().measurements == std::vector<std::string>{"p"});
    for (const auto& w : r.witnesses) CHECK(core::replays(mutant, Property::idempotence, w));
}

TEST_CASE("every single-entry mutant of T2 on a non-zero state fails a defining axiom") {
    const auto t2_alg = fixture("t2");
    const auto* t2 = t2_alg.finite();
    REQUIRE(t2);
    const auto base = as_table(*t2);
    std::size_t mutants = 0;
    for (const auto& [m, table] : base.measurements)
        for (const auto& [x, y] : table) {
            if (x == base.zero) continue;
            for (const auto& z : base.states) {
                if (z == y) continue;
                auto spec = base;
                spec.measurements[m][x] = z;
                const auto alg = models::build(spec);
                bool failed = false;
                for (const auto& r : core::check_axioms(alg, defining())) {
                    if (r.status != Status::fail) continue;
                    failed = true;
                    const auto p = *core::parse_property(r.property);
                    for (const auto& w : r.witnesses) CHECK(core::replays(alg, p, w));
                }
                CAPTURE(m);
                CAPTURE(x);
                CAPTURE(z);
                CHECK(failed);
                ++mutants;
            }
        }
    CHECK(mutants == 16 * 15 * 15);
}

TEST_CASE("input validation") {
    models::TableModelSpec bad = models::fixtures::f1();
    bad.measurements["top"]["a"] = "b";
    CHECK_THROWS_AS(models::build(bad), InputError);
    bad = models::fixtures::f1();
    bad.zero = "z";
    CHECK_THROWS_AS(models::build(bad), InputError);
    CHECK_THROWS_AS(core::check_axiom(fixture("r3"), Property::idempotence, core::Budget{100}), BudgetExceeded);
}
