#include "atlas/acceptance.hpp"
#include "atlas/carrier.hpp"
#include "atlas/classify.hpp"
#include "atlas/groebner.hpp"
#include "atlas/sl2method.hpp"
#include "atlas/tables.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <set>

using namespace atlas;

namespace {

enum Exit { ok = 0, verification_failure = 1, input_error = 2, inconsistency = 3 };

struct Config {
    std::string mode = "real";
    std::string format = "text";
    bool merge = false;
    bool crosscheck = false;
    std::uint64_t seed = 1;
    long budget = GroebnerBudget{}.max_pairs;
    std::string expr, expr2, report;
    bool corrupt_sigma = false;
    std::vector<int> only;
};

DecideOptions decide_options(const Config& cfg)
{
    DecideOptions d;
    d.budget.max_pairs = cfg.budget;
    return d;
}

std::vector<TensorElement> table_expansions()
{
    std::vector<TensorElement> reps;
    for (const auto& row : table1())
        for (const auto& v : expand_row(row))
            reps.push_back(v);
    return reps;
}

std::string text_table(const std::vector<OrbitRecord>& recs)
{
    std::ostringstream os;
    for (const auto& r : recs) {
        os << "row " << r.complex_class << "  dim " << r.dim << "  alpha(" << r.alpha_k << ") gamma(" << r.alpha_k << ';'
           << r.gamma_k << ") beta(" << r.alpha_k << ';' << r.beta_k << ')';
        if (r.delta)
            os << " delta(" << *r.delta << ')';
        os << "  " << to_string(r.rep) << '\n';
    }
    return os.str();
}

int cross_check_complex(const Config& cfg)
{
    AcceptanceOptions a;
    a.seed = cfg.seed;
    a.only = {11};
    auto r = run_acceptance(a).front();
    std::cerr << "cross-check: " << to_string(r.status) << ": " << r.detail << '\n';
    return r.status == CriterionStatus::pass ? ok : inconsistency;
}

int cmd_enumerate_complex(const Config& cfg)
{
    auto orbits = complex_orbits();
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.table_row < b.table_row; });
    if (cfg.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& o : orbits)
            arr.push_back({{"complex_class", o.table_row},
                           {"dim", o.dim},
                           {"alpha", o.alpha},
                           {"gamma", o.gamma},
                           {"carrier", o.carrier.name},
                           {"rep", to_string(o.rep)}});
        std::cout << arr.dump(2) << '\n';
    } else if (cfg.format == "tsv") {
        std::cout << "complex_class\tdim\talpha\tgamma\trep\n";
        for (const auto& o : orbits)
            std::cout << o.table_row << '\t' << o.dim << '\t' << label_string(o.alpha) << '\t' << label_string(o.gamma)
                      << '\t' << to_string(o.rep) << '\n';
    } else {
        for (const auto& o : orbits)
            std::cout << "row " << o.table_row << "  dim " << o.dim << "  alpha " << label_string(o.alpha) << "  gamma "
                      << label_string(o.gamma) << "  " << to_string(o.rep) << '\n';
        std::cout << orbits.size() << " complex orbits\n";
    }
    if (orbits.size() != 30)
        return verification_failure;
    return cfg.crosscheck ? cross_check_complex(cfg) : ok;
}

int cmd_enumerate_real(const Config& cfg)
{
    const auto d = decide_options(cfg);
    auto split = split_classes(fingerprint_all_parallel(table_expansions()), d);
    auto recs = assign_delta(split.classes);
    int code = ok;
    if (cfg.crosscheck) {
        HomogeneityOptions h;
        h.seed = cfg.seed;
        RealRouteOptions r;
        r.decide = d;
        try {
            auto route = collect_classes(real_orbits_by_characteristic(complex_characteristics(h), r));
            auto a = unmatched_classes(route, recs, d), b = unmatched_classes(recs, route, d);
            std::cerr << "cross-check: characteristic route " << route.size() << " classes, unmatched " << a.size() << '/'
                      << b.size() << '\n';
            if (!a.empty() || !b.empty() || route.size() != recs.size())
                code = inconsistency;
        } catch (const std::logic_error& e) {
            std::cerr << "cross-check: " << e.what() << '\n';
            code = inconsistency;
        }
    }
    if (cfg.merge)
        recs = merge_to_gprime(recs).records;
    if (cfg.format == "json")
        std::cout << to_json(recs);
    else if (cfg.format == "tsv")
        std::cout << to_tsv(recs);
    else
        std::cout << text_table(recs) << recs.size() << (cfg.merge ? " orbits under G0'\n" : " real orbits\n");
    if (split.unknown_pairs > 0)
        std::cerr << "degraded: " << split.unknown_pairs << " undecided pairs (raise --budget)\n";
    return code;
}

int cmd_labels(const Config& cfg)
{
    auto v = parse_sign_expr(cfg.expr);
    OrbitRecord r = fingerprint(v);
    // delta: the class of v among the Table I classes of its complex class
    if (r.complex_class > 0) {
        auto row = assign_delta(split_classes(fingerprint_all_serial(expand_row(table1()[r.complex_class - 1]))).classes);
        for (const auto& c : row)
            if (c.key() == r.key() && c.delta &&
                decide_conjugacy(v, c.rep).kind == ConjugacyVerdict::Kind::Conjugate)
                r.delta = c.delta;
    }
    if (cfg.format == "json") {
        std::cout << to_json({r});
        return ok;
    }
    std::cout << "element     " << to_string(v) << '\n'
              << "dim         " << r.dim << '\n'
              << "complex     row " << r.complex_class << '\n'
              << "alpha       alpha(" << r.alpha_k << ") = " << label_string(r.alpha) << '\n'
              << "gamma       gamma(" << r.alpha_k << ';' << r.gamma_k << ") = " << label_string(r.gamma) << '\n'
              << "beta        beta(" << r.alpha_k << ';' << r.beta_k << ") = " << label_string(r.beta) << '\n'
              << "delta       " << (r.delta ? std::to_string(*r.delta) : "-") << '\n'
              << "signatures  " << fingerprint_string(r.signatures) << '\n';
    return ok;
}

int cmd_conjugate(const Config& cfg)
{
    auto e = parse_sign_expr(cfg.expr), e2 = parse_sign_expr(cfg.expr2);
    auto v = decide_conjugacy(e, e2, decide_options(cfg));
    std::cout << "verdict  " << to_string(v.kind) << '\n';
    if (v.witness) {
        std::cout << "witness  " << to_string(*v.witness) << '\n';
        if (v.scaled)
            std::cout << "scaled   factors have positive determinant\n";
        std::cout << "verified " << (verify_verdict(v, e, e2) ? "yes" : "no") << '\n';
    }
    if (!v.certificate.empty())
        std::cout << "certificate  " << v.certificate << '\n';
    if (!v.reason.empty())
        std::cout << "reason   " << v.reason << '\n';
    return ok;
}

int cmd_verify(const Config& cfg)
{
    AcceptanceOptions a;
    a.seed = cfg.seed;
    a.budget.max_pairs = cfg.budget;
    a.corrupt_sigma = cfg.corrupt_sigma;
    a.only = cfg.only;
    auto results = run_acceptance(a, [](const CriterionResult& r) {
        std::cout << "criterion " << r.id << ' ' << to_string(r.status) << ' ' << r.title << ": " << r.detail << std::endl;
    });
    if (!cfg.report.empty()) {
        std::ofstream out(cfg.report);
        if (!out) {
            std::cerr << "cannot write " << cfg.report << '\n';
            return input_error;
        }
        out << acceptance_json(results);
    }
    return acceptance_exit_code(results);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"orbit-atlas: nilpotent orbits of SL2(R)^4 on V2^{x4}"};
    app.require_subcommand(1);
    Config cfg;

    auto* en = app.add_subcommand("enumerate", "complex or real orbit table");
    en->add_option("--mode", cfg.mode)->check(CLI::IsMember({"complex", "real"}));
    en->add_flag("--merge-gprime", cfg.merge, "merge delta pairs into G0' orbits");
    en->add_flag("--crosscheck", cfg.crosscheck, "run the characteristic route as well");
    en->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "tsv", "text"}));
    en->add_option("--seed", cfg.seed);
    en->add_option("--budget", cfg.budget, "S-pairs per Groebner run");

    auto* la = app.add_subcommand("labels", "labels, dimension and signatures of an element");
    la->add_option("expr", cfg.expr)->required();
    la->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));

    auto* co = app.add_subcommand("conjugate", "decide G0-conjugacy of two elements");
    co->add_option("e", cfg.expr)->required();
    co->add_option("e2", cfg.expr2)->required();
    co->add_option("--budget", cfg.budget, "S-pairs per Groebner run");

    auto* vp = app.add_subcommand("verify-paper", "run acceptance criteria 1-11");
    vp->add_option("--report", cfg.report, "JSON report file");
    vp->add_option("--seed", cfg.seed);
    vp->add_option("--budget", cfg.budget, "S-pairs per Groebner run");
    vp->add_option("--only", cfg.only, "criterion ids");
    vp->add_flag("--corrupt-sigma", cfg.corrupt_sigma, "fault injection: swap two sigma images");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : input_error;
    }
    try {
        if (en->parsed())
            return cfg.mode == "complex" ? cmd_enumerate_complex(cfg) : cmd_enumerate_real(cfg);
        if (la->parsed())
            return cmd_labels(cfg);
        if (co->parsed())
            return cmd_conjugate(cfg);
        return cmd_verify(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return inconsistency;
    }
}
