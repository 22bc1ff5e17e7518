// SPDX-License-Identifier: Apache-2.0
#include "forests/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forests/accessibility.hpp"
#include "forests/calculus.hpp"
#include "forests/components.hpp"
#include "forests/edge_list.hpp"
#include "forests/markov.hpp"
#include "forests/oracle.hpp"
#include "forests/output.hpp"
#include "forests/ranking.hpp"

namespace forests {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string input;
    std::string format = "tsv";
    int precision = 12;
    double tau = 1.0;
    double alpha = -1.0;  // <0 means "default"
    std::string method = "mean";
    std::string direction = "out";
    bool limiting = false;
    bool dense = false;
    int k = -1;
    std::uint64_t seed = 0;
    std::int64_t cap = kDefaultEnumerationCap;
    std::int64_t trials = 100'000;
};

Json matrix_json(const Eigen::MatrixXd& m, int precision) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(round_to_precision(m(i, j), precision));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_json(const Eigen::VectorXd& v, int precision) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        row.push_back(round_to_precision(v[i], precision));
    return row;
}

Json set_list_json(const std::vector<std::set<int>>& sets) {
    Json out = Json::array();
    for (const auto& s : sets) out.push_back(s);
    return out;
}

std::string scalar_tsv(const Json& v, int precision) {
    if (v.is_number_float()) return format_number(v.get<double>(), precision);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

// Generic TSV rendering: scalars and flat arrays become one line, arrays of
// arrays one line per row, arrays of objects one line per object.
std::string to_tsv(const Json& payload, int precision) {
    std::string out;
    auto join_array = [&](const Json& arr) {
        std::string line;
        for (const auto& v : arr) {
            line += '\t';
            if (v.is_array()) {
                bool first = true;
                for (const auto& w : v) {
                    if (!first) line += ',';
                    first = false;
                    line += scalar_tsv(w, precision);
                }
            } else {
                line += scalar_tsv(v, precision);
            }
        }
        return line;
    };
    for (const auto& [key, value] : payload.items()) {
        if (value.is_array() && !value.empty() && value.front().is_array()) {
            for (const auto& row : value) out += key + join_array(row) + "\n";
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            for (const auto& obj : value) {
                std::string line = key;
                for (const auto& [k2, v2] : obj.items()) {
                    line += '\t';
                    line += v2.is_array() ? join_array(v2).substr(1) : scalar_tsv(v2, precision);
                }
                out += line + "\n";
            }
        } else if (value.is_array()) {
            out += key + join_array(value) + "\n";
        } else {
            out += key + "\t" + scalar_tsv(value, precision) + "\n";
        }
    }
    return out;
}

std::string verdict_label(const ConditionResult& r) {
    if (r.strict_verdict.passed()) return "pass";
    if (r.nonstrict_verdict.passed()) return "pass-nonstrict-only";
    return "fail";
}

Json witness_json(const Verdict& v, int precision) {
    Json w = Json::object();
    if (v.witness) {
        w["vertices"] = v.witness->vertices;
        Json vals = Json::array();
        for (double x : v.witness->values) vals.push_back(round_to_precision(x, precision));
        w["values"] = std::move(vals);
    }
    return w;
}

MeasureSpec measure_from_options(const Options& opt) {
    if (opt.dense) {
        double alpha = opt.alpha < 0 ? 0.0 : opt.alpha;
        return {MeasureKind::DenseOut, alpha};
    }
    bool out = opt.direction == "out";
    if (opt.limiting)
        return {out ? MeasureKind::LimitingOut : MeasureKind::LimitingIn, 0.0};
    return {out ? MeasureKind::Out : MeasureKind::In, opt.tau};
}

Json cmd_info(const WeightedDigraph& g) {
    SourceKnotInfo info = strong_components(g);
    Json payload;
    payload["n"] = g.order();
    payload["d_prime"] = info.d_prime;
    payload["components"] = set_list_json(info.components);
    Json cond = Json::array();
    for (const auto& [a, b] : info.condensation_arcs) cond.push_back(Json::array({a + 1, b + 1}));
    payload["condensation_arcs"] = std::move(cond);
    payload["source_knots"] = set_list_json(info.source_knots);
    payload["exclusive_reach"] = set_list_json(info.exclusive_reach);
    return payload;
}

Json cmd_forests(const WeightedDigraph& g, const Options& opt) {
    ForestExpansion exp = forest_expansion(g);
    Json payload;
    payload["d_prime"] = exp.d_prime;
    Json sigma = Json::array();
    for (int k = 0; k <= exp.max_arcs(); ++k)
        sigma.push_back(round_to_precision(exp.sigma[k], opt.precision));
    payload["sigma"] = std::move(sigma);
    payload["sigma_tau"] = round_to_precision(sigma_of_tau(exp, opt.tau), opt.precision);
    payload["tau"] = opt.tau;
    payload["j_tau"] = matrix_json(j_of_tau(exp, opt.tau).j_matrix, opt.precision);
    payload["j_tilde"] = matrix_json(j_tilde(exp).j_tilde, opt.precision);
    if (opt.k >= 0) {
        Eigen::MatrixXd jk = j_k(exp, opt.k);  // validates the index
        payload["k"] = opt.k;
        payload["q_k"] = matrix_json(exp.q_matrices.at(opt.k), opt.precision);
        payload["j_k"] = matrix_json(jk, opt.precision);
    }
    return payload;
}

Json cmd_access(const WeightedDigraph& g, const Options& opt) {
    AccessibilityMatrix P = compute_measure(g, measure_from_options(opt));
    Json payload;
    payload["kind"] = measure_kind_name(P.kind);
    if (P.kind == MeasureKind::Out || P.kind == MeasureKind::In) payload["tau"] = P.param;
    if (P.kind == MeasureKind::DenseOut) payload["alpha"] = P.param;
    payload["p"] = matrix_json(P.p, opt.precision);
    return payload;
}

Json cmd_rank(const WeightedDigraph& g, const Options& opt) {
    Json payload;
    ScoreVector scores;
    if (opt.method == "mean" || opt.method == "kernel") {
        scores = mean_limit_scores(g);
    } else if (opt.method == "daniels") {
        scores = daniels_tree_scores(g);
    } else if (opt.method == "borda") {
        scores = borda_scores(g, opt.tau);
    } else {
        throw CLI::ValidationError("--method", "unknown method '" + opt.method + "'");
    }
    payload["method"] = score_method_name(scores.method);
    if (scores.method == ScoreMethod::Borda) payload["tau"] = scores.tau;
    payload["scores"] = vector_json(scores.values, opt.precision);
    if (opt.method == "kernel") {
        Json basis = Json::array();
        for (const auto& v : kernel_basis(g)) basis.push_back(vector_json(v, opt.precision));
        payload["basis"] = std::move(basis);
    }
    RankingReport report = rank(scores);
    payload["ordering"] = report.ordering;
    Json ties = Json::array();
    for (const auto& group : report.tie_groups) ties.push_back(group);
    payload["tie_groups"] = std::move(ties);
    return payload;
}

Json cmd_markov(const WeightedDigraph& g, const Options& opt, int& exit_code) {
    std::optional<double> alpha;
    if (opt.alpha >= 0) alpha = opt.alpha;
    MarkovChain chain = inverse_chain(g, alpha);
    CesaroResult cesaro = cesaro_limit(chain);
    Json payload;
    payload["alpha"] = round_to_precision(chain.alpha, opt.precision);
    payload["p"] = matrix_json(chain.p, opt.precision);
    payload["cesaro"] = matrix_json(cesaro.pi, opt.precision);
    payload["iterations"] = cesaro.iterations;
    payload["residual"] = round_to_precision(cesaro.residual, opt.precision);
    payload["converged"] = cesaro.converged;
    payload["theorem3_deviation"] =
        round_to_precision((cesaro.pi - j_tilde(g).j_tilde.transpose()).cwiseAbs().maxCoeff(),
                           opt.precision);
    if (!cesaro.converged) exit_code = 3;
    return payload;
}

Json cmd_audit(const WeightedDigraph& g, const Options& opt) {
    MeasureSpec spec = measure_from_options(opt);
    AuditReport report = audit(spec, g, default_perturbation_plan(g));
    Json payload;
    payload["measure"] = measure_kind_name(spec.kind);
    if (spec.kind == MeasureKind::Out || spec.kind == MeasureKind::In)
        payload["tau"] = spec.param;
    Json results = Json::array();
    for (const auto& r : report.results) {
        Json item;
        item["condition"] = r.condition;
        item["variant"] = std::string(1, r.variant);
        item["verdict"] = verdict_label(r);
        const Verdict& interesting =
            !r.strict_verdict.passed() ? r.strict_verdict : r.nonstrict_verdict;
        item["witness"] = witness_json(interesting, opt.precision);
        results.push_back(std::move(item));
    }
    payload["results"] = std::move(results);
    if (spec.kind == MeasureKind::Out)
        payload["theorem4_profile"] = theorem4_profile_holds(report, Variant::A);
    else if (spec.kind == MeasureKind::In)
        payload["theorem4_profile"] = theorem4_profile_holds(report, Variant::B);
    else if (spec.kind == MeasureKind::LimitingOut)
        payload["theorem5_profile"] = theorem5_profile_holds(report, Variant::A);
    else if (spec.kind == MeasureKind::LimitingIn)
        payload["theorem5_profile"] = theorem5_profile_holds(report, Variant::B);
    return payload;
}

Json cmd_oracle_check(const WeightedDigraph& g, const Options& opt, int& exit_code) {
    ForestExpansion engine = forest_expansion(g);
    OracleExpansion oracle = oracle_expansion(g, opt.cap);
    double max_dev = 0.0;
    const int n = g.order();
    for (int k = 0; k <= n; ++k) {
        double exact = oracle.sigma_exact[k].get_d();
        max_dev = std::max(max_dev, std::abs(engine.sigma[k] - exact) / std::max(1.0, exact));
    }
    int kmax = n - oracle.d_prime;
    for (int k = 0; k <= std::min(kmax, engine.max_arcs()); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double exact = oracle.q_exact[k].at(i, j).get_d();
                max_dev = std::max(max_dev, std::abs(engine.q_matrices[k](i, j) - exact) /
                                                std::max(1.0, exact));
            }
    Json payload;
    payload["engine_d_prime"] = engine.d_prime;
    payload["oracle_d_prime"] = oracle.d_prime;
    payload["max_deviation"] = round_to_precision(max_dev, opt.precision);
    if (engine.d_prime != oracle.d_prime || max_dev > 1e-9) exit_code = 3;
    return payload;
}

Json cmd_simulate(const WeightedDigraph& g, const Options& opt) {
    DisseminationEstimate est = simulate_dissemination(g, opt.trials, opt.seed, opt.cap);
    ForestExpansion exp = forest_expansion(g);
    Eigen::MatrixXd q_total = Eigen::MatrixXd::Zero(g.order(), g.order());
    double sigma_total = 0.0;
    for (int k = 0; k <= exp.max_arcs(); ++k) {
        q_total += exp.q_matrices[k];
        sigma_total += exp.sigma[k];
    }
    Eigen::MatrixXd j_expected = q_total / sigma_total;
    Json payload;
    payload["trials"] = est.trials;
    payload["successes"] = est.successes;
    payload["seed"] = opt.seed;
    payload["j_hat"] = matrix_json(est.j_hat, opt.precision);
    payload["std_error"] = matrix_json(est.std_error, opt.precision);
    payload["j_expected"] = matrix_json(j_expected, opt.precision);
    payload["max_abs_deviation"] =
        round_to_precision((est.j_hat - j_expected).cwiseAbs().maxCoeff(), opt.precision);
    return payload;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NumericalBreakdown:
        case ErrorCode::ZeroSigma:
            return 3;
        case ErrorCode::IndexBeyondMaxForest:
            return 1;
        default:
            return 2;
    }
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text) {
    CLI::App app{"Spanning-forest matrix calculus for weighted digraphs"};
    app.require_subcommand(1);
    Options opt;

    std::vector<CLI::App*> subs;
    for (const char* name : {"info", "forests", "access", "rank", "markov", "audit",
                             "oracle-check", "simulate"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", opt.input, "edge-list file (default: stdin)");
        sub->add_option("--format", opt.format)->check(CLI::IsMember({"tsv", "json"}));
        sub->add_option("--precision", opt.precision)->check(CLI::Range(1, 17));
        sub->add_option("--tau", opt.tau)->check(CLI::PositiveNumber);
        sub->add_option("--alpha", opt.alpha);
        sub->add_option("--method", opt.method)
            ->check(CLI::IsMember({"kernel", "mean", "daniels", "borda"}));
        sub->add_option("--direction", opt.direction)->check(CLI::IsMember({"out", "in"}));
        sub->add_flag("--limiting", opt.limiting);
        sub->add_flag("--dense", opt.dense);
        sub->add_option("--k", opt.k);
        sub->add_option("--seed", opt.seed);
        sub->add_option("--cap", opt.cap);
        sub->add_option("--trials", opt.trials);
        subs.push_back(sub);
    }

    CliResult result;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 1;
        result.diagnostics = std::string(e.what()) + "\n";
        return result;
    }

    try {
        std::string text;
        std::string source;
        if (!opt.input.empty()) {
            std::ifstream file(opt.input);
            if (!file)
                throw Error(ErrorCode::ParseError, "cannot open input file '" + opt.input + "'");
            std::ostringstream buf;
            buf << file.rdbuf();
            text = buf.str();
            source = opt.input;
        } else {
            text = stdin_text;
            source = "<stdin>";
        }
        WeightedDigraph g = to_digraph(parse_edge_list(text, source));

        const std::string command = app.get_subcommands().front()->get_name();
        Json payload;
        payload["command"] = command;
        Json body;
        if (command == "info") body = cmd_info(g);
        else if (command == "forests") body = cmd_forests(g, opt);
        else if (command == "access") body = cmd_access(g, opt);
        else if (command == "rank") body = cmd_rank(g, opt);
        else if (command == "markov") body = cmd_markov(g, opt, result.exit_code);
        else if (command == "audit") body = cmd_audit(g, opt);
        else if (command == "oracle-check") body = cmd_oracle_check(g, opt, result.exit_code);
        else body = cmd_simulate(g, opt);
        for (auto& [key, value] : body.items()) payload[key] = std::move(value);

        if (opt.format == "json") {
            result.output = payload.dump(2) + "\n";
        } else {
            result.output = to_tsv(payload, opt.precision);
        }
    } catch (const CLI::ValidationError& e) {
        result.exit_code = 1;
        result.diagnostics = std::string(e.what()) + "\n";
    } catch (const Error& e) {
        result.exit_code = exit_code_for(e.code());
        result.diagnostics = std::string(e.what()) + "\n";
    }
    return result;
}

}  // namespace forests
