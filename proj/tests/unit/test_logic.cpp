#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "malg/logic/formula.hpp"
#include "malg/logic/harness.hpp"
#include "malg/models/fixtures.hpp"

#include <functional>
#include <set>

using namespace malg;
using namespace malg::logic;

namespace {

core::MAlgebra fixture(const std::string& name) {
    for (auto& [n, spec] : models::fixtures::all())
        if (n == name) return models::build(spec);
    throw std::runtime_error("no fixture " + name);
}

// Reference evaluator over a name -> value map.
bool value_of(const Formula& f, const std::map<std::string, bool>& v) {
    switch (f.op()) {
        case Op::slot: return v.at(f.name());
        case Op::negation: return !value_of(f.lhs(), v);
        case Op::conjunction: return value_of(f.lhs(), v) && value_of(f.rhs(), v);
        case Op::disjunction: return value_of(f.lhs(), v) || value_of(f.rhs(), v);
        case Op::implication: return !value_of(f.lhs(), v) || value_of(f.rhs(), v);
    }
    return false;
}

// Key identifying a formula up to the order of & and | operands.
std::string canonical(const Formula& f) {
    switch (f.op()) {
        case Op::slot: return f.name();
        case Op::negation: return "~" + canonical(f.lhs());
        case Op::implication: return "(" + canonical(f.lhs()) + ">" + canonical(f.rhs()) + ")";
        default: {
            auto l = canonical(f.lhs()), r = canonical(f.rhs());
            if (r < l) std::swap(l, r);
            return "(" + l + (f.op() == Op::conjunction ? "&" : "|") + r + ")";
        }
    }
}

// Brute force: every tree of depth <= d, deduplicated by canonical().
std::size_t brute_count(const std::vector<std::string>& slots, int d) {
    std::vector<Formula> all;
    for (const auto& s : slots) all.push_back(Formula::slot(s));
    for (int level = 2; level <= d; ++level) {
        std::vector<Formula> next = all;
        for (const auto& f : all) next.push_back(Formula::negation(f));
        for (const auto& f : all)
            for (const auto& g : all) {
                next.push_back(Formula::conjunction(f, g));
                next.push_back(Formula::disjunction(f, g));
                next.push_back(Formula::implication(f, g));
            }
        std::set<std::string> seen;
        all.clear();
        for (auto& f : next)
            if (seen.insert(canonical(f)).second) all.push_back(f);
    }
    return all.size();
}

}  // namespace

TEST_CASE("parser precedence and associativity") {
    const auto a = Formula::slot("a"), b = Formula::slot("b"), c = Formula::slot("c");
    CHECK(parse_formula("a -> b -> c") == Formula::implication(a, Formula::implication(b, c)));
    CHECK(parse_formula("~(a & ~b)") == Formula::negation(Formula::conjunction(a, Formula::negation(b))));
    CHECK(parse_formula("a | b & c") == Formula::disjunction(a, Formula::conjunction(b, c)));
    CHECK(parse_formula("a & b & c") == Formula::conjunction(Formula::conjunction(a, b), c));
    CHECK(parse_formula("~~a") == Formula::negation(Formula::negation(a)));
    CHECK(parse_formula("(a -> b) -> c") == Formula::implication(Formula::implication(a, b), c));
    CHECK(parse_formula(" a->b ") == Formula::implication(a, b));
}

TEST_CASE("parse errors carry a position") {
    const std::vector<std::pair<std::string, std::size_t>> bad = {
        {"a &", 3}, {"(a | b", 6}, {"a b", 2}, {"", 0}, {"a - b", 2}, {"a | )", 4}, {"#", 0}};
    for (const auto& [text, pos] : bad) {
        CAPTURE(text);
        try {
            parse_formula(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.position() == pos);
        }
    }
}

TEST_CASE("depth and slots") {
    CHECK(parse_formula("a").depth() == 1);
    CHECK(parse_formula("~a").depth() == 2);
    CHECK(parse_formula("a -> (b -> a)").depth() == 3);
    CHECK(parse_formula("c & a | b & a").slots() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("printing reparses to the same tree") {
    const FormulaSet set({"a", "b", "c"}, 3);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& f = set.formula(i);
        CHECK(parse_formula(to_string(f)) == f);
    }
    CHECK(to_string(parse_formula("(a -> b) -> c")) == "(a->b)->c");
    CHECK(to_string(parse_formula("a -> (b -> c)")) == "a->b->c");
    CHECK(to_string(parse_formula("(a | b) & c")) == "(a|b)&c");
    CHECK(to_string(parse_formula("~(a & b)")) == "~(a&b)");
}

TEST_CASE("formula sets match a brute-force enumeration") {
    for (std::size_t k = 1; k <= 3; ++k)
        for (int d = 1; d <= 3; ++d) {
            CAPTURE(k);
            CAPTURE(d);
            const std::vector<std::string> abc{"a", "b", "c"};
            const std::vector<std::string> slots(abc.begin(), abc.begin() + static_cast<std::ptrdiff_t>(k));
            const FormulaSet set(slots, d);
            const auto expected = brute_count(slots, d);
            CHECK(set.size() == expected);
            CHECK(FormulaSet::count(k, d) == expected);
            std::set<std::string> keys;
            for (std::size_t i = 0; i < set.size(); ++i) {
                CHECK(set.formula(i).depth() <= d);
                keys.insert(canonical(set.formula(i)));
            }
            CHECK(keys.size() == set.size());
        }
    CHECK(FormulaSet::count(3, 3) == 1515);
    CHECK_THROWS_AS(FormulaSet({"a", "b", "c", "d", "e", "f"}, 6), BudgetExceeded);
    CHECK_THROWS_AS(FormulaSet({"a", "b", "c"}, 4, 100), BudgetExceeded);
}

TEST_CASE("truth tables agree with the reference evaluator") {
    const std::vector<std::string> slots{"a", "b", "c"};
    const FormulaSet set(slots, 3);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto table = truth_table(set.formula(i), slots);
        for (std::uint64_t bits = 0; bits < 8; ++bits) {
            const std::map<std::string, bool> v{{"a", bits & 1}, {"b", bits >> 1 & 1}, {"c", bits >> 2 & 1}};
            CHECK(((table >> bits) & 1) == value_of(set.formula(i), v));
            CHECK(evaluate(set.formula(i), slots, bits) == value_of(set.formula(i), v));
        }
    }
    CHECK_THROWS_AS(evaluate(parse_formula("a & z"), slots, 0), InputError);
}

TEST_CASE("tautology decisions") {
    for (const auto* t : {"a -> a", "a | ~a", "a -> (b -> a)", "(a -> (b -> c)) -> ((a -> b) -> (a -> c))",
                          "(~b -> ~a) -> ((~b -> a) -> b)", "~(a & ~a)"}) {
        CAPTURE(t);
        const auto v = is_tautology(parse_formula(t));
        CHECK(v.is_tautology);
        CHECK_FALSE(v.falsifying.has_value());
    }
    const auto v = is_tautology(parse_formula("a -> b"));
    CHECK_FALSE(v.is_tautology);
    REQUIRE(v.falsifying.has_value());
    CHECK(v.falsifying->at("a") == true);
    CHECK(v.falsifying->at("b") == false);
    for (const auto* t : {"a", "a & ~a", "(a -> b) -> a", "a | b -> a & b"}) {
        CAPTURE(t);
        const auto f = parse_formula(t);
        const auto w = is_tautology(f);
        REQUIRE_FALSE(w.is_tautology);
        CHECK_FALSE(value_of(f, *w.falsifying));
    }
    for (const auto& f : scheme_formulas()) CHECK(is_tautology(f).is_tautology);
    CHECK(scheme_formulas().size() == 5);
}

TEST_CASE("tautologies fix every state on commuting sets") {
    const auto t2 = fixture("t2");
    const auto all = t2.measurement_names();
    const auto r = verify_tautology_theorem(connectives::CommutingSet(t2, all), 3, 2);
    CHECK(r.status == core::Status::pass);
    CHECK(r.witnesses.empty());
    CHECK(r.checked_count > 0);

    const auto r2 = fixture("r2");
    const auto s = verify_tautology_theorem(connectives::CommutingSet(r2, {"bot", "px", "py", "top"}), 3, 3);
    CHECK(s.status == core::Status::pass);
    CHECK(s.checked_count > 0);

    const auto r3 = fixture("r3");
    const auto u = verify_tautology_theorem(connectives::CommutingSet(r3, {"px", "py", "pxy"}), 3, 2);
    CHECK(u.status == core::Status::pass);
}

TEST_CASE("a non-tautology that happens to fix every state is not flagged") {
    const auto t2 = fixture("t2");
    const auto r = verify_tautology_theorem(connectives::CommutingSet(t2, {"top"}), 2, 1);
    CHECK(r.status == core::Status::pass);
}

TEST_CASE("serial and parallel runs agree") {
    const auto t2 = fixture("t2");
    const connectives::CommutingSet cs(t2, {"p", "q", "top"});
    core::Budget serial, parallel;
    serial.exec = core::Exec::serial;
    parallel.exec = core::Exec::parallel;
    const auto a = verify_tautology_theorem(cs, 3, 2, serial);
    const auto b = verify_tautology_theorem(cs, 3, 2, parallel);
    CHECK(a.status == b.status);
    CHECK(a.checked_count == b.checked_count);
    const auto sa = verify_schemes(cs, serial);
    const auto sb = verify_schemes(cs, parallel);
    REQUIRE(sa.size() == sb.size());
    for (std::size_t i = 0; i < sa.size(); ++i) {
        CHECK(sa[i].property == sb[i].property);
        CHECK(sa[i].checked_count == sb[i].checked_count);
        CHECK(sa[i].status == sb[i].status);
    }
}

TEST_CASE("harness budget") {
    const auto t2 = fixture("t2");
    const connectives::CommutingSet cs(t2, {"p", "q"});
    CHECK_THROWS_AS(verify_tautology_theorem(cs, 6, 3), BudgetExceeded);
    core::Budget tiny;
    tiny.max_cells = 1000;
    CHECK_THROWS_AS(verify_tautology_theorem(cs, 3, 3, tiny), BudgetExceeded);
}

TEST_CASE("axiom schemes") {
    for (const auto& [name, members] : std::vector<std::pair<std::string, std::vector<std::string>>>{
             {"t2", {"p", "q"}},
             {"t2_maximal", {"p", "q"}},
             {"r2", {"bot", "px", "py", "top"}},
             {"r3", {"px", "py", "pxy"}}}) {
        CAPTURE(name);
        const auto alg = fixture(name);
        const auto results = verify_schemes(connectives::CommutingSet(alg, members));
        REQUIRE(results.size() == scheme_ids.size());
        for (std::size_t i = 0; i < results.size(); ++i) {
            CHECK(results[i].property == scheme_ids[i]);
            CHECK(results[i].status == core::Status::pass);
            CHECK(results[i].checked_count > 0);
        }
    }
}

TEST_CASE("definability biconditionals have identical truth tables") {
    const std::vector<std::string> ab{"a", "b"};
    CHECK(truth_table(parse_formula("a & b"), ab) == truth_table(parse_formula("~(a -> ~b)"), ab));
    CHECK(truth_table(parse_formula("a | b"), ab) == truth_table(parse_formula("~a -> b"), ab));
}

TEST_CASE("schemes over every T2 measurement") {
    const auto t2 = fixture("t2");
    for (const auto& r : verify_schemes(connectives::CommutingSet(t2, t2.measurement_names()))) {
        CAPTURE(r.property);
        CHECK(r.status == core::Status::pass);
    }
}

TEST_CASE("conjunction is definable from implication and negation") {
    const auto t2 = fixture("t2");
    const connectives::CommutingSet pq(t2, {"p", "q"});
    const std::map<std::string, std::string> bind{{"a", "p"}, {"b", "q"}};
    const auto via_impl = connectives::eval_formula(pq, parse_formula("~(a -> ~b)"), bind, true);
    CHECK(via_impl == connectives::conjunction(t2, "p", "q"));
    CHECK(via_impl == "p&q");
    CHECK(connectives::eval_formula(pq, parse_formula("~a -> b"), bind, true) == "p|q");
}
