#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "malg/connectives/closure.hpp"
#include "malg/connectives/connectives.hpp"
#include "malg/core/ops.hpp"
#include "malg/models/fixtures.hpp"

using namespace malg;
using namespace malg::connectives;

namespace {

core::MAlgebra fixture(const std::string& name) {
    for (auto& [n, spec] : models::fixtures::all())
        if (n == name) return models::build(spec);
    throw std::runtime_error("no fixture " + name);
}

std::string eval(const CommutingSet& cs, const std::string& text, std::map<std::string, std::string> binding) {
    return eval_formula(cs, logic::parse_formula(text), binding, true);
}

}  // namespace

TEST_CASE("conjunction") {
    const auto r2 = fixture("r2");
    const auto t2 = fixture("t2");
    CHECK(conjunction(r2, "px", "py") == "bot");
    CHECK(conjunction(t2, "p", "q") == "p&q");
    for (const auto* f : {"f1", "t2", "r2", "r3"}) {
        const auto alg = fixture(f);
        for (const auto& a : alg.measurement_names()) {
            CHECK(conjunction(alg, a, "top") == a);
            CHECK(conjunction(alg, a, a) == a);
        }
    }
}

TEST_CASE("disjunction, including a strict one") {
    const auto r2 = fixture("r2");
    CHECK(disjunction(r2, "px", "py") == "top");
    CHECK(core::apply(r2, "top", "(1,1)") == "(1,1)");
    CHECK(core::apply(r2, "px", "(1,1)") != "(1,1)");
    CHECK(core::apply(r2, "py", "(1,1)") != "(1,1)");
    CHECK(disjunction(fixture("t2"), "p", "q") == "p|q");
    for (const auto* f : {"t2", "r3"}) {
        const auto alg = fixture(f);
        for (const auto& a : alg.measurement_names()) CHECK(disjunction(alg, a, core::negation_of(alg, a)) == "top");
    }
}

TEST_CASE("implication") {
    const auto t2 = fixture("t2");
    CHECK(implication(t2, "p", "q") == "p->q");
    for (const auto& a : t2.measurement_names()) CHECK(implication(t2, a, a) == "top");
    const auto r2 = fixture("r2");
    CHECK(implication(r2, "pd", "pd") == "top");
    CHECK(core::apply(r2, implication(r2, "pd", "pd"), "(1,0)") == "(1,0)");
}

TEST_CASE("non-commuting pairs are refused") {
    const auto r2 = fixture("r2");
    try {
        conjunction(r2, "px", "pd");
        FAIL("expected NonCommutingPair");
    } catch (const NonCommutingPair& e) {
        CHECK(e.first() == "px");
        CHECK(e.second() == "pd");
    }
    CHECK_THROWS_AS(disjunction(r2, "pd", "py"), NonCommutingPair);
    CHECK_THROWS_AS(implication(r2, "px", "pdperp"), NonCommutingPair);
    CHECK_THROWS_AS(CommutingSet(r2, {"px", "py", "pd"}), NonCommutingPair);
    CHECK_THROWS_AS(CommutingSet(r2, {"px", "px"}), InputError);
    CHECK_THROWS_AS(CommutingSet(r2, {}), InputError);
}

TEST_CASE("formula evaluation") {
    const auto r2 = fixture("r2");
    const CommutingSet axes(r2, {"px", "py"});
    CHECK(eval(axes, "a -> (b -> a)", {{"a", "px"}, {"b", "py"}}) == "top");
    CHECK(eval(axes, "a | ~a", {{"a", "px"}}) == "top");
    CHECK(eval(axes, "a & b", {{"a", "px"}, {"b", "py"}}) == "bot");
    CHECK_THROWS_AS(eval(axes, "a & b", {{"a", "px"}}), InputError);
    CHECK_THROWS_AS(eval(axes, "a", {{"a", "pd"}}), InputError);
    const auto t2 = fixture("t2");
    const CommutingSet pq(t2, {"p", "q"});
    CHECK(eval(pq, "~(a & ~b)", {{"a", "p"}, {"b", "q"}}) == "p->q");
    CHECK(eval(pq, "a | ~a", {{"a", "q"}}) == "top");
}

TEST_CASE("classical measurements") {
    const auto max = fixture("t2_maximal");
    for (const auto& m : max.measurement_names()) CHECK(is_classical(max, m));
    const auto r2 = fixture("r2");
    CHECK_FALSE(is_classical(r2, "pd"));
    for (const auto* f : {"f1", "t2", "r2", "r3_full"}) {
        CHECK(is_classical(fixture(f), "top"));
        CHECK(is_classical(fixture(f), "bot"));
    }
    // Connectives of classical measurements stay classical.
    for (const auto& a : max.measurement_names()) {
        CHECK(is_classical(max, core::negation_of(max, a)));
        for (const auto& b : max.measurement_names()) {
            CHECK(is_classical(max, conjunction(max, a, b)));
            CHECK(is_classical(max, disjunction(max, a, b)));
            CHECK(is_classical(max, implication(max, a, b)));
        }
    }
}

TEST_CASE("connective results commute with their arguments") {
    for (const auto* f : {"t2", "r3", "r3_full"}) {
        CAPTURE(f);
        const auto alg = fixture(f);
        const auto names = alg.measurement_names();
        for (const auto& a : names)
            for (const auto& b : names) {
                if (!core::commutes(alg, a, b)) continue;
                for (const auto& c : {conjunction(alg, a, b), disjunction(alg, a, b), implication(alg, a, b)}) {
                    CHECK(core::commutes(alg, c, a));
                    CHECK(core::commutes(alg, c, b));
                }
            }
    }
}

TEST_CASE("conjunction is the unique member with the intersected fixpoints") {
    const auto t2 = fixture("t2");
    const auto& fa = *t2.finite();
    for (const auto& a : fa.measurements())
        for (const auto& b : fa.measurements()) {
            const auto c = conjoin(fa, a, b);
            int found = 0;
            for (const auto& m : fa.measurements()) found += fa.fp_is_meet(m.map, a.map, b.map);
            CHECK(found == 1);
            CHECK(fa.fp_is_meet(c.map, a.map, b.map));
        }
}

TEST_CASE("modus ponens holds pointwise") {
    const auto t2 = fixture("t2");
    const auto& fa = *t2.finite();
    for (const auto& a : fa.measurements())
        for (const auto& b : fa.measurements()) {
            const auto imp = implies(fa, a, b);
            for (auto x : fa.states())
                if (fa.apply(a.map, x) == x && fa.apply(imp.map, x) == x) CHECK(fa.apply(b.map, x) == x);
        }
}

TEST_CASE("implication fixpoints are the states a sends into FP(b)") {
    const auto t2 = fixture("t2");
    const auto& fa = *t2.finite();
    for (const auto& a : fa.measurements())
        for (const auto& b : fa.measurements()) {
            const auto imp = implies(fa, a, b);
            for (auto x : fa.states()) {
                const auto ax = fa.apply(a.map, x);
                CHECK((fa.apply(imp.map, x) == x) == (fa.apply(b.map, ax) == ax));
            }
        }
}

TEST_CASE("closure tables") {
    const auto t2 = fixture("t2");
    const auto& fa = *t2.finite();
    const PropClosure<core::FiniteAlgebra> one(fa, {fa.measurement("p")});
    CHECK(one.size() == 4);
    const PropClosure<core::FiniteAlgebra> two(fa, {fa.measurement("p"), fa.measurement("q")});
    CHECK(two.size() == 16);
    for (std::uint32_t i = 0; i < two.size(); ++i)
        for (std::uint32_t j = 0; j < two.size(); ++j)
            CHECK(two.member(two.impl(i, j)).name == implies(fa, two.member(i), two.member(j)).name);
    const auto r3 = fixture("r3");
    const auto& ra = *r3.ray();
    const PropClosure<core::RayAlgebra> axes(ra, {ra.measurement("px"), ra.measurement("py")});
    CHECK(axes.size() == 8);
}
