#include "rpart/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rpart/asymptotics.hpp"
#include "rpart/lemmas.hpp"
#include "rpart/partition_table.hpp"
#include "rpart/verify.hpp"

namespace rpart::cli {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_string(Subcommand s) {
    switch (s) {
        case Subcommand::compute: return "compute";
        case Subcommand::asymptote: return "asymptote";
        case Subcommand::lemmas: return "lemmas";
        case Subcommand::verify: return "verify";
    }
    return "?";
}

std::vector<std::int64_t> parse_grid(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("--grid: bad value '" + tok + "'");
        }
        if (used != tok.size() || v < 1) throw UsageError("--grid: bad value '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("--grid: empty list");
    return out;
}

const ResidueClassSet& require_set(const RunConfig& c) {
    if (!c.set) throw UsageError("--modulus/--residues: a residue set is required");
    return *c.set;
}

// ---- compute ---------------------------------------------------------------

int run_compute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto& set = require_set(c);
    std::optional<PartitionTable> table;
    if (c.algo != Algo::recursion) table = compute_table_euler(set, c.limit);
    if (c.algo != Algo::euler) {
        auto rec = compute_table_recursion(set, c.limit);
        if (table && !(*table == rec)) {
            err << "euler and recursion tables disagree\n";
            return kExitCheckFailed;
        }
        table = std::move(rec);
    }
    if (c.format == Format::csv) {
        out << "n,p_A(n)\n";
        for (std::int64_t n = 0; n <= table->limit(); ++n) out << n << ',' << (*table)[n].get_str() << '\n';
    } else {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : table->values()) vals.push_back(v.get_str());
        out << nlohmann::json{{"config", c.to_json()}, {"values", vals}}.dump(2) << '\n';
    }
    return kExitOk;
}

// ---- asymptote -------------------------------------------------------------

int run_asymptote(const RunConfig& c, std::ostream& out) {
    const auto& set = require_set(c);
    if (!set.gcd_condition()) {
        throw UsageError("--residues: gcd(r_1..r_l, m) != 1 for " + set.describe() +
                         "; the lower bound and log ratio need it");
    }
    require_epsilon(c.eps);
    if (c.limit < 1) throw UsageError("--limit: must be at least 1");
    const auto step = c.grid_step > 0 ? c.grid_step : std::max<std::int64_t>(1, c.limit / 100);
    const auto table = compute_table_euler(set, c.limit);
    const auto rep = log_ratio_report(table, step, c.eps);
    const auto thr = empirical_N_threshold(set, c.eps, c.limit, step);
    if (c.format == Format::csv) {
        out << "n,log_pA,c0_sqrt_n,ratio\n";
        for (const auto& p : rep.points) {
            out << p.n << ',' << num(p.log_pA) << ',' << num(p.c0_sqrt_n) << ',' << num(p.ratio) << '\n';
        }
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& p : rep.points) {
            rows.push_back({{"n", p.n}, {"log_pA", p.log_pA}, {"c0_sqrt_n", p.c0_sqrt_n}, {"ratio", p.ratio}});
        }
        nlohmann::json j{{"config", c.to_json()},
                         {"c0", rep.c0},
                         {"K_upper", rep.upper->k},
                         {"K_lower", rep.lower->k},
                         {"N_threshold", thr.threshold ? nlohmann::json(*thr.threshold) : nlohmann::json("not found")},
                         {"K_note", "minimal/maximal K over the finite table range"},
                         {"report", rep.to_json()},
                         {"threshold_search", thr.to_json()},
                         {"rows", rows}};
        out << j.dump(2) << '\n';
    }
    return kExitOk;
}

// ---- lemmas ----------------------------------------------------------------

struct Row {
    LemmaReport rep;
    std::int64_t n;
    double arg;
};

void lemma_rows(const RunConfig& c, const std::string& which, std::vector<Row>& rows) {
    const ResidueClassSet set = c.set.value_or(ResidueClassSet(1, {1}));
    const double c1v = c1(set.modulus(), set.ell(), c.theta);
    const std::int64_t n0 = set.gcd_condition() ? set.representability_threshold() : 0;
    for (auto n : c.grid) {
        const double sqrt_n = std::sqrt(static_cast<double>(n));
        if (which == "1") {
            for (int i = 0; i <= 8; ++i) {
                const double t = static_cast<double>(n) * i / 8.0;
                rows.push_back({sqrt_bounds_check(n, t), n, t});
            }
        } else if (which == "2" || which == "3") {
            // arguments e^{-c1 k m / (2 sqrt n)} met in the bounds, k = 1, 2, 4, ...
            for (std::int64_t k = 1;; k *= 2) {
                const double x = c1v * static_cast<double>(k * set.modulus()) / (2 * sqrt_n);
                if (x > 40.0) break;
                if (which == "2") {
                    rows.push_back({exp_quotient_check(x), n, x});
                } else {
                    const double q = std::exp(-x);
                    rows.push_back({cubic_qseries_check(q), n, q});
                }
            }
        } else if (which == "4") {
            rows.push_back({lambert_sum(n, c1v), n, c1v});
        } else if (which == "5") {
            rows.push_back({weighted_exp_sum(set, n, c.theta), n, c.theta});
        } else if (which == "6") {
            if (n < 2 * n0) throw UsageError("--grid: lemma 6 needs n >= 2 N0 = " + std::to_string(2 * n0));
            rows.push_back({tail_sum(set, n, n0, c1v), n, c1v});
        } else if (which == "7") {
            rows.push_back({cube_weighted_sum(set, n, c1v), n, c1v});
        } else if (which == "induction") {
            require_epsilon(c.eps);
            rows.push_back({induction_inequality_check(set, c.eps, n, InductionSide::upper), n, c.eps});
            if (set.gcd_condition() && n >= 2 * n0) {
                rows.push_back({induction_inequality_check(set, c.eps, n, InductionSide::lower), n, c.eps});
            }
        }
    }
}

int run_lemmas(const RunConfig& c, std::ostream& out) {
    static const std::vector<std::string> all{"1", "2", "3", "4", "5", "6", "7", "induction"};
    std::vector<Row> rows;
    if (c.which == "all") {
        for (const auto& w : all) lemma_rows(c, w, rows);
    } else {
        lemma_rows(c, c.which, rows);
    }
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.rep.pass;
    if (c.format == Format::csv) {
        out << "lemma,n,arg,lhs,rhs,margin,truncation,pass\n";
        for (const auto& r : rows) {
            out << r.rep.lemma << ',' << r.n << ',' << num(r.arg) << ',' << num(r.rep.lhs) << ','
                << num(r.rep.rhs) << ',' << num(r.rep.margin) << ',' << num(r.rep.truncation) << ','
                << (r.rep.pass ? "true" : "false") << '\n';
        }
    } else {
        nlohmann::json reports = nlohmann::json::array();
        for (const auto& r : rows) reports.push_back(r.rep.to_json());
        out << nlohmann::json{{"config", c.to_json()}, {"all_pass", ok}, {"reports", reports}}.dump(2) << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const RunConfig& c, std::ostream& out) {
    const auto limit = c.limit > 0 ? c.limit : 2000;
    const auto results = run_property_suite(limit);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    if (c.format == Format::csv) {
        out << "check,pass,detail\n";
        for (const auto& r : results) out << r.name << ',' << (r.pass ? "true" : "false") << ",\"" << r.detail << "\"\n";
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) arr.push_back({{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        out << nlohmann::json{{"config", c.to_json()}, {"all_pass", ok}, {"checks", arr}}.dump(2) << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j{{"subcommand", to_string(subcommand)},
                     {"limit", limit},
                     {"eps", eps},
                     {"theta", theta},
                     {"grid", grid},
                     {"grid_step", grid_step},
                     {"algo", algo == Algo::euler ? "euler" : algo == Algo::recursion ? "recursion" : "both"},
                     {"which", which},
                     {"format", format == Format::csv ? "csv" : "json"}};
    j["set"] = set ? set->to_json() : nlohmann::json(nullptr);
    return j;
}

std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Restricted partition functions over congruence classes"};
    app.require_subcommand(1);

    std::int64_t modulus = 0;
    std::string residues;
    std::string set_json;
    std::int64_t limit = 0;
    double eps = 0.1;
    double theta = 0.0;
    std::string grid;
    std::int64_t grid_step = 0;
    std::string algo = "euler";
    std::string which = "all";
    std::string format = "csv";
    std::string out_path;

    auto add_set = [&](CLI::App* sub) {
        sub->add_option("--modulus", modulus, "modulus m");
        sub->add_option("--residues", residues, "comma-separated residues in [1, m]");
        sub->add_option("--set-json", set_json, R"(descriptor {"m": M, "r": [..]})");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "output file (default: standard output)");
    };

    auto* compute = app.add_subcommand("compute", "exact table p_A(0..N)");
    add_set(compute);
    compute->add_option("--limit", limit, "table limit N")->required();
    compute->add_option("--algo", algo, "euler, recursion or both")
        ->check(CLI::IsMember({"euler", "recursion", "both"}));
    add_common(compute);

    auto* asym = app.add_subcommand("asymptote", "log p_A(n) / (c0 sqrt n) with envelope fits");
    add_set(asym);
    asym->add_option("--limit", limit, "table limit N")->required();
    asym->add_option("--eps", eps, "epsilon in (0, 1/2)");
    asym->add_option("--grid-step", grid_step, "grid spacing (default N/100)");
    add_common(asym);

    auto* lem = app.add_subcommand("lemmas", "numeric checks of the exponential-sum estimates");
    add_set(lem);
    lem->add_option("--which", which, "1..7, induction or all")
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "7", "induction", "all"}));
    lem->add_option("--grid", grid, "comma-separated n values");
    lem->add_option("--eps", eps, "epsilon in (0, 1/2) for the induction step");
    lem->add_option("--theta", theta, "theta > -1 used for c1");
    add_common(lem);

    auto* ver = app.add_subcommand("verify", "run the property suite of every module");
    ver->add_option("--limit", limit, "table size for the exact checks (default 2000)");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig c;
    if (compute->parsed()) c.subcommand = Subcommand::compute;
    if (asym->parsed()) c.subcommand = Subcommand::asymptote;
    if (lem->parsed()) c.subcommand = Subcommand::lemmas;
    if (ver->parsed()) c.subcommand = Subcommand::verify;

    try {
        if (!set_json.empty()) {
            if (modulus != 0 || !residues.empty()) {
                throw UsageError("--set-json: cannot be combined with --modulus/--residues");
            }
            c.set = ResidueClassSet::from_json(nlohmann::json::parse(set_json));
        } else if (modulus != 0 || !residues.empty()) {
            if (residues.empty()) throw UsageError("--residues: required with --modulus");
            if (modulus == 0) throw UsageError("--modulus: required with --residues");
            c.set = ResidueClassSet::from_strings(modulus, residues);
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("--set-json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(set_json.empty() ? "--residues: " : "--set-json: ") + e.what());
    }
    if ((c.subcommand == Subcommand::compute || c.subcommand == Subcommand::asymptote) && !c.set) {
        throw UsageError("--modulus/--residues: a residue set is required");
    }
    if (limit < 0) throw UsageError("--limit: must be nonnegative");
    if (grid_step < 0) throw UsageError("--grid-step: must be positive");
    if (!(theta > -1.0)) throw UsageError("--theta: must exceed -1");
    if (c.subcommand == Subcommand::asymptote || (c.subcommand == Subcommand::lemmas &&
                                                   (which == "induction" || which == "all"))) {
        if (!(eps > 0.0 && eps < 0.5)) throw UsageError("--eps: must lie in (0, 1/2)");
    }
    c.limit = limit;
    c.eps = eps;
    c.theta = theta;
    c.grid = grid.empty() ? std::vector<std::int64_t>{100, 1000, 10000} : parse_grid(grid);
    c.grid_step = grid_step;
    c.algo = algo == "euler" ? Algo::euler : algo == "recursion" ? Algo::recursion : Algo::both;
    c.which = which;
    c.format = format == "json" ? Format::json : Format::csv;
    c.out = out_path;
    return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.subcommand) {
            case Subcommand::compute: return run_compute(config, out, err);
            case Subcommand::asymptote: return run_asymptote(config, out);
            case Subcommand::lemmas: return run_lemmas(config, out);
            case Subcommand::verify: return run_verify(config, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> config;
    try {
        config = parse(argc, argv, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (!config) return kExitOk;
    if (config->out.empty()) return run(*config, out, err);
    std::ofstream file(config->out, std::ios::binary);
    if (!file) {
        err << "usage error: --out: cannot open " << config->out << '\n';
        return kExitUsage;
    }
    return run(*config, file, err);
}

}  // namespace rpart::cli
