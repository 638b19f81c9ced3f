#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "malg/connectives/connectives.hpp"
#include "malg/core/ops.hpp"
#include "malg/models/fixtures.hpp"
#include "malg/order/order.hpp"

using namespace malg;
using namespace malg::order;

namespace {

core::MAlgebra fixture(const std::string& name) {
    for (auto& [n, spec] : models::fixtures::all())
        if (n == name) return models::build(spec);
    throw std::runtime_error("no fixture " + name);
}

const std::vector<std::string> kAll = {"f1", "t2", "t2_maximal", "r2", "r2_full", "r3", "r3_full"};

bool all_passed(const std::vector<core::CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.passed()) return false;
    return true;
}

core::Budget with(core::Exec e) {
    core::Budget b;
    b.exec = e;
    return b;
}

}  // namespace

TEST_CASE("order examples") {
    const auto r3 = fixture("r3");
    CHECK(leq(r3, "px", "pxy"));
    CHECK_FALSE(leq(r3, "pxy", "px"));
    CHECK(leq_by_zeros(r3, "px", "pxy"));
    const auto r2 = fixture("r2");
    CHECK_FALSE(leq(r2, "px", "pd"));
    CHECK_FALSE(leq(r2, "pd", "px"));
    for (const auto& f : kAll) {
        const auto alg = fixture(f);
        for (const auto& a : alg.measurement_names()) {
            CHECK(leq(alg, "bot", a));
            CHECK(leq(alg, a, "top"));
        }
    }
}

TEST_CASE("the two orders agree and leq is a partial order") {
    for (const auto& f : kAll) {
        CAPTURE(f);
        const auto alg = fixture(f);
        const PosetView p(alg);
        const auto n = p.names().size();
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(p.leq(i, i));
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(p.leq(i, j) == leq_by_zeros(alg, p.names()[i], p.names()[j]));
                if (i != j) CHECK_FALSE((p.leq(i, j) && p.leq(j, i)));
                if (p.leq(i, j)) CHECK(core::commutes(alg, p.names()[i], p.names()[j]));
                for (std::size_t k = 0; k < n; ++k)
                    if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
            }
        }
    }
    CHECK_THROWS_AS(PosetView(fixture("r2")).leq("px", "nope"), InputError);
}

TEST_CASE("bounds examples") {
    const auto r2 = fixture("r2");
    CHECK(glb(r2, "pd", "pdperp") == "bot");
    CHECK(lub(r2, "pd", "pdperp") == "top");
    CHECK_FALSE(glb(r2, "px", "pd").has_value());
    CHECK_FALSE(lub(r2, "px", "pd").has_value());
    const auto t2 = fixture("t2");
    CHECK(glb(t2, "p", "q") == "p&q");
    CHECK(lub(t2, "p", "q") == "p|q");
    const auto f1 = fixture("f1");
    CHECK(glb(f1, "top", "bot") == "bot");
    CHECK(lub(f1, "top", "bot") == "top");
}

TEST_CASE("bounds are greatest and least among the listed measurements") {
    for (const auto* f : {"t2", "r3"}) {
        CAPTURE(f);
        const auto alg = fixture(f);
        const auto names = alg.measurement_names();
        for (const auto& a : names)
            for (const auto& b : names) {
                const auto m = glb(alg, a, b);
                const auto j = lub(alg, a, b);
                if (!core::commutes(alg, a, b)) {
                    CHECK_FALSE(m.has_value());
                    continue;
                }
                REQUIRE(m.has_value());
                REQUIRE(j.has_value());
                CHECK(leq(alg, *m, a));
                CHECK(leq(alg, *m, b));
                CHECK(leq(alg, a, *j));
                CHECK(leq(alg, b, *j));
                for (const auto& c : names) {
                    if (leq(alg, c, a) && leq(alg, c, b)) CHECK(leq(alg, c, *m));
                    if (leq(alg, a, c) && leq(alg, b, c)) CHECK(leq(alg, *j, c));
                }
            }
    }
}

TEST_CASE("bounds check on every fixture") {
    for (const auto& f : kAll) {
        CAPTURE(f);
        const auto r = bounds_check(fixture(f));
        CHECK(r.property == "partial_order_bounds");
        CHECK(r.passed());
        CHECK(r.witnesses.empty());
    }
    const auto r = bounds_check(fixture("r2"));
    CHECK(r.note.find("non-commuting") != std::string::npos);
}

TEST_CASE("orthocomplement laws on every fixture") {
    for (const auto& f : kAll) {
        CAPTURE(f);
        const auto rs = orthomodular_check(fixture(f));
        REQUIRE(rs.size() == orthocomplement_ids.size());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            CHECK(rs[i].property == orthocomplement_ids[i]);
            CHECK(rs[i].passed());
        }
    }
}

TEST_CASE("orthomodular law on an axis inside a plane") {
    const auto r3 = fixture("r3");
    REQUIRE(leq(r3, "px", "pxy"));
    const auto npx = core::negation_of(r3, "px");
    CHECK(npx == "pyz");
    CHECK(glb(r3, npx, "pxy") == "py");
    CHECK(lub(r3, "px", "py") == "pxy");
    CHECK(core::negation_of(r3, npx) == "px");
}

TEST_CASE("orthogonal decomposition of (1,1,1)") {
    const auto alg = fixture("r3_full");
    const auto ax = core::apply(alg, "pxy", "(1,1,1)");
    const auto nax = core::apply(alg, core::negation_of(alg, "pxy"), "(1,1,1)");
    CHECK(ax == "(1,1,0)");
    CHECK(nax == "(0,0,1)");
    const auto e1 = core::point_measurement(alg, ax);
    const auto e2 = core::point_measurement(alg, nax);
    REQUIRE(e1);
    REQUIRE(e2);
    const auto join = connectives::disjunction(alg, *e1, *e2);
    CHECK(core::apply(alg, join, "(1,1,1)") == "(1,1,1)");
    CHECK(core::extent(alg, join).fp_subspace == "span{(1,1,0),(0,0,1)}");
    // x is also fixed by pxy -> e_pxy(x).
    CHECK(core::apply(alg, connectives::implication(alg, "pxy", *e1), "(1,1,1)") == "(1,1,1)");
}

TEST_CASE("orthogonal decomposition in the plane") {
    const auto alg = fixture("r2_full");
    const auto ax = core::apply(alg, "px", "(2,1)");
    const auto nax = core::apply(alg, core::negation_of(alg, "px"), "(2,1)");
    CHECK(ax == "(1,0)");
    CHECK(nax == "(0,1)");
    const auto join = connectives::disjunction(alg, *core::point_measurement(alg, ax), *core::point_measurement(alg, nax));
    CHECK(join == "top");
}

TEST_CASE("strong separability theorems") {
    for (const auto* f : {"t2_maximal", "r2_full", "r3_full"}) {
        CAPTURE(f);
        const auto rs = strong_sep_check(fixture(f));
        REQUIRE(rs.size() == strong_separability_ids.size());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            CHECK(rs[i].property == strong_separability_ids[i]);
            CHECK(rs[i].passed());
        }
    }
    // Classical measurements never split a state, so decomposition has nothing to check there.
    CHECK(strong_sep_check(fixture("t2_maximal"))[2].status == core::Status::vacuous);
    for (const auto* f : {"t2", "r2", "r3"}) {
        CAPTURE(f);
        CHECK_THROWS_AS(strong_sep_check(fixture(f)), PreconditionError);
    }
}

TEST_CASE("point measurements fix exactly their state") {
    const auto alg = fixture("r2_full");
    for (const auto& x : alg.state_labels()) {
        if (x == "0") continue;
        const auto e = core::point_measurement(alg, x);
        REQUIRE(e);
        const auto fp = core::extent(alg, *e).fp;
        CHECK(fp == std::vector<std::string>{"0", x});
    }
    CHECK_FALSE(core::point_measurement(fixture("r2"), "(1,2)").has_value());
    CHECK(core::point_measurement(alg, "(1,1)") == "pd");
}

TEST_CASE("projection dependence at (1,0) under pd") {
    const auto alg = fixture("r2_full");
    const auto ax = core::apply(alg, "pd", "(1,0)");
    CHECK(ax == "(1,1)");
    const auto e = core::point_measurement(alg, ax);
    REQUIRE(e == "pd");
    CHECK(connectives::implication(alg, "pd", *e) == "top");
    CHECK(glb(alg, "pd", "pdperp") == "bot");
}

TEST_CASE("classical checks") {
    for (const auto& f : kAll) {
        CAPTURE(f);
        const auto rs = classical_checks(fixture(f));
        REQUIRE(rs.size() == 2);
        CHECK(rs[0].property == "classical_iff_central");
        CHECK(rs[1].property == "classical_closure");
        CHECK(all_passed(rs));
    }
    const auto t2 = classical_checks(fixture("t2"));
    CHECK(t2[0].status == core::Status::vacuous);
    CHECK(t2[0].note.find("not separable") != std::string::npos);
}

TEST_CASE("serial and parallel order checks agree") {
    for (const auto* f : {"t2", "r3", "r2_full"}) {
        CAPTURE(f);
        const auto alg = fixture(f);
        auto collect = [&](core::Exec e) {
            auto rs = orthomodular_check(alg, with(e));
            rs.insert(rs.begin(), bounds_check(alg, with(e)));
            for (auto& r : classical_checks(alg, with(e))) rs.push_back(r);
            return rs;
        };
        const auto a = collect(core::Exec::serial);
        const auto b = collect(core::Exec::parallel);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].property == b[i].property);
            CHECK(a[i].status == b[i].status);
            CHECK(a[i].checked_count == b[i].checked_count);
        }
    }
    const auto full = fixture("r3_full");
    const auto s = strong_sep_check(full, with(core::Exec::serial));
    const auto p = strong_sep_check(full, with(core::Exec::parallel));
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i].checked_count == p[i].checked_count);
}
