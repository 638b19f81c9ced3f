#include "malg/cli/app.hpp"

#include "malg/cli/model_file.hpp"
#include "malg/cli/report.hpp"
#include "malg/connectives/connectives.hpp"
#include "malg/core/axioms.hpp"
#include "malg/core/engine.hpp"
#include "malg/core/lemmas.hpp"
#include "malg/logic/formula.hpp"
#include "malg/logic/harness.hpp"
#include "malg/order/order.hpp"

#include <CLI11.hpp>

#include <map>

namespace malg::cli {

namespace {

struct Options {
    std::string file;
    std::string format = "text";
    bool serial = false;
    std::optional<int> height;
    int loop_n = 3;
    std::vector<std::string> axioms;
    std::string expr;
    std::vector<std::string> bind;
    std::vector<std::string> commuting;
    int depth = 3;
    int slots = 3;
    bool strong_sep = false;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("file", o.file, "Model file (JSON)")->required();
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--serial", o.serial, "Run the serial reference kernels");
}

void add_height(CLI::App* sub, Options& o) {
    sub->add_option("--height", o.height, "Ray sample height (default: the model's)")->check(CLI::Range(0, 1000));
}

struct Loaded {
    std::string kind;
    core::MAlgebra alg;
};

Loaded load(const Options& o) {
    const auto spec = load_model_file(o.file);
    try {
        return {std::string(kind_name(spec)), models::build(spec).with_height(o.height)};
    } catch (const InputError& e) {
        throw InputError(o.file + ": " + e.what());
    }
}

core::Budget budget_of(const Options& o) {
    core::Budget b;
    b.height = o.height;
    b.loop_length = o.loop_n;
    b.exec = o.serial ? core::Exec::serial : core::Exec::parallel;
    return b;
}

std::vector<core::Property> parse_axioms(const std::vector<std::string>& ids) {
    if (ids.empty()) return {core::defining_axioms.begin(), core::defining_axioms.end()};
    std::vector<core::Property> out;
    for (const auto& id : ids) {
        if (id == "all") {
            out.insert(out.end(), core::all_properties.begin(), core::all_properties.end());
        } else if (id == "defining") {
            out.insert(out.end(), core::defining_axioms.begin(), core::defining_axioms.end());
        } else if (auto p = core::parse_property(id)) {
            out.push_back(*p);
        } else {
            throw InputError("--axioms: unknown property '" + id + "'");
        }
    }
    return out;
}

std::vector<core::CheckResult> run_connective(const Options& o, const core::MAlgebra& alg,
                                              std::optional<std::string>& value) {
    logic::Formula f = [&] {
        try {
            return logic::parse_formula(o.expr);
        } catch (const logic::ParseError& e) {
            throw InputError(std::string("--expr: ") + e.what());
        }
    }();
    std::map<std::string, std::string> binding;
    std::vector<std::string> members;
    for (const auto& b : o.bind) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == b.size())
            throw InputError("--bind: expected slot=measurement, got '" + b + "'");
        const auto slot = b.substr(0, eq);
        const auto name = b.substr(eq + 1);
        if (!binding.emplace(slot, name).second) throw InputError("--bind: slot '" + slot + "' is bound twice");
        if (std::find(members.begin(), members.end(), name) == members.end()) members.push_back(name);
    }
    for (const auto& m : members) alg.visit([&](const auto& a) { a.measurement(m); });

    const std::uint64_t pairs = members.empty() ? 0 : members.size() * (members.size() - 1) / 2;
    try {
        const connectives::CommutingSet cs(alg, members);
        auto certified = core::make_result("commutation", core::Status::pass, pairs, {});
        try {
            value = connectives::eval_formula(cs, f, binding, true);
            return {certified, core::make_result("connective", core::Status::pass, 1, {})};
        } catch (const core::AxiomViolation& e) {
            auto w = e.witness();
            w.detail = e.what();
            return {certified, core::make_result("connective", core::Status::pass, 1, {w})};
        }
    } catch (const NonCommutingPair& e) {
        core::Witness w{{}, {e.first(), e.second()}, "connectives are defined only for commuting measurements"};
        return {core::make_result("commutation", core::Status::pass, pairs, {w})};
    }
}

std::vector<core::CheckResult> run_tautology(const Options& o, const core::MAlgebra& alg, const core::Budget& b) {
    std::optional<connectives::CommutingSet> cs;
    try {
        cs.emplace(alg, o.commuting);
    } catch (const PreconditionError& e) {
        throw InputError(std::string("--commuting: ") + e.what());
    }
    std::vector<core::CheckResult> out{logic::verify_tautology_theorem(*cs, o.depth, o.slots, b)};
    for (auto& r : logic::verify_schemes(*cs, b)) out.push_back(std::move(r));
    return out;
}

std::vector<core::CheckResult> run_order(const Options& o, const core::MAlgebra& alg, const core::Budget& b) {
    std::vector<core::CheckResult> out{order::bounds_check(alg, b)};
    for (auto& r : order::orthomodular_check(alg, b)) out.push_back(std::move(r));
    for (auto& r : order::classical_checks(alg, b)) out.push_back(std::move(r));
    if (o.strong_sep) {
        try {
            for (auto& r : order::strong_sep_check(alg, b)) out.push_back(std::move(r));
        } catch (const PreconditionError& e) {
            throw InputError(std::string("--strong-sep: ") + e.what());
        }
    }
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Decide M-algebra axioms, lemmas, connectives and order laws on a model file", "malgcheck"};
    app.require_subcommand(1, 1);

    auto* check = app.add_subcommand("check", "Check defining and optional axioms");
    add_common(check, o);
    add_height(check, o);
    check->add_option("--axioms", o.axioms, "Comma-separated property ids, 'defining' or 'all'")->delimiter(',');
    check->add_option("--loop-n", o.loop_n, "Longest measurement cycle for l_cumulativity")->check(CLI::Range(2, 8));

    auto* lemmas = app.add_subcommand("lemmas", "Check the consequences of the six axioms");
    add_common(lemmas, o);
    add_height(lemmas, o);

    auto* connective = app.add_subcommand("connective", "Evaluate a formula over commuting measurements");
    add_common(connective, o);
    connective->add_option("--expr", o.expr, "Formula, e.g. \"~(a & ~b)\"")->required();
    connective->add_option("--bind", o.bind, "slot=measurement,...")->delimiter(',')->required();

    auto* tautology = app.add_subcommand("tautology", "Check that tautologies fix every state");
    add_common(tautology, o);
    tautology->add_option("--commuting", o.commuting, "Comma-separated commuting measurements")
        ->delimiter(',')
        ->required();
    tautology->add_option("--depth", o.depth, "Maximum formula depth")->check(CLI::Range(1, 8));
    tautology->add_option("--slots", o.slots, "Number of formula slots")->check(CLI::Range(1, logic::kMaxSlots));

    auto* ord = app.add_subcommand("order", "Check order, bounds and orthocomplement laws");
    add_common(ord, o);
    add_height(ord, o);
    ord->add_flag("--strong-sep", o.strong_sep, "Also check the point-measurement theorems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_input;
    }

    try {
        const auto loaded = load(o);
        const auto budget = budget_of(o);
        Report report;
        report.model = summarize(loaded.kind, loaded.alg);
        const auto* sub = app.get_subcommands().front();
        report.command = sub->get_name();
        if (sub == check)
            report.results = core::check_axioms(loaded.alg, parse_axioms(o.axioms), budget);
        else if (sub == lemmas)
            report.results = core::lemma_suite(loaded.alg, budget);
        else if (sub == connective)
            report.results = run_connective(o, loaded.alg, report.value);
        else if (sub == tautology)
            report.results = run_tautology(o, loaded.alg, budget);
        else
            report.results = run_order(o, loaded.alg, budget);
        out << format_report(report, o.format == "json" ? Format::json : Format::text);
        return report.passed() ? exit_pass : exit_fail;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const core::AxiomViolation& e) {
        err << "axiom violation: " << e.what() << "\n";
        return exit_fail;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace malg::cli
