// qsd: command line front end for the state-discrimination toolkit.
// JSON in, JSON reports out (12 significant digits, deterministic), CSV for
// the figure scan. Exit codes: 0 success, 1 library error, 2 malformed input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "qsd/casebook.hpp"
#include "qsd/json_io.hpp"
#include "qsd/locc.hpp"

using namespace qsd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLibrary = 1;
constexpr int kExitBadInput = 2;

struct Options {
    std::string ensemble_file;
    std::string targets_file;
    std::string k_file;
    std::string matrix_file;
    std::string out_file;
    std::string casebook_name;
    std::vector<std::string> positional;
    double a = -1.0, b = -1.0, c = -1.0, d = -1.0;
    double p1 = -1.0, q1 = -1.0;
    int grid = 50;
    int dim = 4;
    unsigned long seed = 0;
    bool compact = false;
    bool anti_parallel = false;
};

void emit(const Json& report, const Options& opt) {
    std::cout << (opt.compact ? report.dump() : report.dump(2)) << "\n";
}

Json json_num(double v) { return report_round(v); }

Json stats_json(const std::vector<PerStateStats>& stats) {
    Json out = Json::array();
    for (const PerStateStats& s : stats) {
        Json j;
        j["success"] = json_num(s.success);
        j["error"] = json_num(s.error);
        j["inconclusive"] = json_num(s.inconclusive);
        out.push_back(std::move(j));
    }
    return out;
}

Json rounded_matrix(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(Json::array({json_num(m(i, j).real()), json_num(m(i, j).imag())}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json bound_json(const BoundReport& r) {
    Json j;
    j["bound_value"] = json_num(r.bound_value);
    j["satisfied"] = r.satisfied;
    j["lhs"] = json_num(r.lhs);
    j["rhs"] = json_num(r.rhs);
    j["witness"] = r.witness;
    return j;
}

std::pair<double, PureState> ensemble_pure_item(const Ensemble& e, std::size_t i) {
    if (!std::holds_alternative<PureState>(e.items[i].second))
        throw JsonError("this command needs pure states in the ensemble");
    return {e.items[i].first, std::get<PureState>(e.items[i].second)};
}

int cmd_helstrom(const Options& opt) {
    Ensemble e = ensemble_from_json(load_json_file(opt.ensemble_file));
    if (e.size() != 2) throw JsonError("helstrom needs a two-state ensemble");
    DensityOperator r1 = to_density(e.items[0].second);
    DensityOperator r2 = to_density(e.items[1].second);
    DiscriminationResult res =
        helstrom_two_state(e.items[0].first, r1, e.items[1].first, r2);
    OptimalityDiagnostics diag = verify_min_error_optimality(e, res.povm());

    Json report;
    report["command"] = "helstrom";
    report["inputs"]["ensemble"] = opt.ensemble_file;
    report["inputs"]["priors"] = Json::array({json_num(e.items[0].first), json_num(e.items[1].first)});
    report["outputs"]["error_probability"] = json_num(res.error_probability);
    report["outputs"]["per_state_stats"] = stats_json(res.per_state_stats);
    Json povm = Json::array();
    for (std::size_t k = 0; k < res.povm().size(); ++k) {
        Json el;
        el["label"] = res.povm().labels()[k];
        el["element"] = rounded_matrix(res.povm().elements()[k]);
        povm.push_back(std::move(el));
    }
    report["outputs"]["povm"] = std::move(povm);
    report["tolerances"]["optimality"] = report_tolerance(1e-8);
    report["verdicts"]["optimal"] =
        diag.max_operator_violation <= report_tolerance(1e-8) &&
        diag.max_cross_residual <= report_tolerance(1e-8);
    report["verdicts"]["max_operator_violation"] = json_num(diag.max_operator_violation);
    report["verdicts"]["max_cross_residual"] = json_num(diag.max_cross_residual);
    emit(report, opt);
    return kExitOk;
}

int cmd_uqsd(const Options& opt) {
    Ensemble e = ensemble_from_json(load_json_file(opt.ensemble_file));
    if (e.size() != 2) throw JsonError("uqsd needs a two-state ensemble");
    auto [p1, psi1] = ensemble_pure_item(e, 0);
    auto [p2, psi2] = ensemble_pure_item(e, 1);
    DiscriminationResult res = uqsd_two_state(p1, psi1, p2, psi2);

    Json report;
    report["command"] = "uqsd";
    report["inputs"]["ensemble"] = opt.ensemble_file;
    report["inputs"]["overlap"] = json_num(std::abs(overlap(psi1, psi2)));
    report["outputs"]["strategy"] =
        res.povm().size() == 3 ? "povm" : "projective";
    report["outputs"]["failure_probability"] = json_num(res.failure_probability);
    report["outputs"]["per_state_stats"] = stats_json(res.per_state_stats);
    emit(report, opt);
    return kExitOk;
}

int cmd_qss(const Options& opt) {
    Ensemble e = ensemble_from_json(load_json_file(opt.ensemble_file));
    Json tj = load_json_file(opt.targets_file);
    if (!tj.contains("states") || !tj["states"].is_array())
        throw JsonError("targets file needs a \"states\" array");
    std::vector<PureState> targets;
    for (const Json& s : tj["states"]) targets.push_back(pure_state_from_json(s));
    Matrix k = matrix_from_json(load_json_file(opt.k_file));

    std::vector<std::pair<double, PureState>> sources;
    std::vector<PureState> source_states;
    for (std::size_t i = 0; i < e.size(); ++i) {
        sources.push_back(ensemble_pure_item(e, i));
        source_states.push_back(sources.back().second);
    }
    QssFeasibility feas =
        qss_feasibility(overlap_matrix(source_states), overlap_matrix(targets), k);

    Json report;
    report["command"] = "qss";
    report["inputs"]["ensemble"] = opt.ensemble_file;
    report["inputs"]["targets"] = opt.targets_file;
    report["inputs"]["k"] = opt.k_file;
    report["outputs"]["feasible"] = feas.feasible;
    report["outputs"]["min_eigenvalue_k"] = json_num(feas.min_eigenvalue_k);
    report["outputs"]["min_eigenvalue_f"] = json_num(feas.min_eigenvalue_f);
    if (feas.feasible) {
        QssOperators ops = qss_success_operators(sources, targets, k);
        report["outputs"]["total_success_probability"] =
            json_num(ops.total_success_probability);
        Json per = Json::array();
        for (Eigen::Index i = 0; i < ops.per_state_success.size(); ++i)
            per.push_back(json_num(ops.per_state_success(i)));
        report["outputs"]["per_state_success"] = std::move(per);
        Json mats = Json::array();
        for (const Matrix& m : ops.success_operators) mats.push_back(rounded_matrix(m));
        report["outputs"]["success_operators"] = std::move(mats);
    }
    emit(report, opt);
    return kExitOk;
}

int cmd_majorize(const Options& opt) {
    if (opt.positional.size() != 2) throw JsonError("majorize needs two probability-vector files");
    ProbVector x = probvector_from_json(load_json_file(opt.positional[0]));
    ProbVector y = probvector_from_json(load_json_file(opt.positional[1]));
    MajorizationReport r = majorizes(x, y);

    Json report;
    report["command"] = "majorize";
    report["inputs"]["x"] = opt.positional[0];
    report["inputs"]["y"] = opt.positional[1];
    report["outputs"]["verdict"] = to_string(r.verdict);
    Json pl = Json::array(), pr = Json::array();
    for (Eigen::Index i = 0; i < r.prefix_sums_left.size(); ++i) {
        pl.push_back(json_num(r.prefix_sums_left(i)));
        pr.push_back(json_num(r.prefix_sums_right(i)));
    }
    report["outputs"]["prefix_sums_left"] = std::move(pl);
    report["outputs"]["prefix_sums_right"] = std::move(pr);
    if (r.first_violation_index)
        report["outputs"]["first_violation_index"] = *r.first_violation_index;
    report["tolerances"]["prefix"] = tol::majorization;
    emit(report, opt);
    return kExitOk;
}

int cmd_nielsen(const Options& opt) {
    if (opt.p1 < 0.0 || opt.q1 < 0.0) throw JsonError("nielsen needs --p1 and --q1");
    NielsenProtocol proto = nielsen_protocol_2qubit(opt.p1, opt.q1);

    Json report;
    report["command"] = "nielsen";
    report["inputs"]["p1"] = json_num(opt.p1);
    report["inputs"]["q1"] = json_num(opt.q1);
    report["outputs"]["alpha"] = json_num(proto.alpha);
    report["outputs"]["beta"] = json_num(proto.beta);
    report["outputs"]["m1"] = rounded_matrix(proto.measurement.operators()[0]);
    report["outputs"]["m2"] = rounded_matrix(proto.measurement.operators()[1]);
    report["outputs"]["completeness_residual"] =
        json_num(proto.measurement.completeness_residual());
    double worst = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
        const Matrix op = kron(proto.measurement.operators()[k], Matrix::Identity(2, 2));
        Vector out = op * proto.intermediate.amplitudes();
        out /= out.norm();
        SchmidtDecomposition s = schmidt_decompose(PureState(out, 2, 2));
        worst = std::max(worst, std::abs(s.coefficients(0) * s.coefficients(0) - opt.q1));
    }
    report["outputs"]["posterior_schmidt_residual"] = json_num(worst);
    report["tolerances"]["posterior"] = report_tolerance(1e-9);
    report["verdicts"]["posterior_matches_target"] = worst <= report_tolerance(1e-9);
    emit(report, opt);
    return kExitOk;
}

int cmd_walgate(const Options& opt) {
    Ensemble e = ensemble_from_json(load_json_file(opt.ensemble_file));
    if (e.size() != 2) throw JsonError("walgate needs two states");
    auto [p1, psi1] = ensemble_pure_item(e, 0);
    auto [p2, psi2] = ensemble_pure_item(e, 1);
    if (psi1.dim_b() < 2) throw JsonError("walgate needs bipartite states (set dims)");
    WalgateProtocol proto = walgate_protocol(psi1, psi2);
    auto [id1, id2] = walgate_identification_probabilities(proto, psi1, psi2);

    Json report;
    report["command"] = "walgate";
    report["inputs"]["ensemble"] = opt.ensemble_file;
    report["outputs"]["zero_diagonal_residual"] = json_num(proto.zero_diagonal_residual);
    report["outputs"]["identification_probabilities"] =
        Json::array({json_num(id1), json_num(id2)});
    report["outputs"]["alice_basis"] = rounded_matrix(proto.alice_basis);
    report["tolerances"]["identification"] = report_tolerance(1e-9);
    report["verdicts"]["perfect"] = 1.0 - std::min(id1, id2) <= report_tolerance(1e-9);
    emit(report, opt);
    return kExitOk;
}

int cmd_equidiag(const Options& opt) {
    Matrix m;
    Json input;
    if (!opt.matrix_file.empty()) {
        m = matrix_from_json(load_json_file(opt.matrix_file));
        input["matrix"] = opt.matrix_file;
    } else {
        std::mt19937_64 rng(opt.seed);
        std::normal_distribution<double> g(0.0, 1.0);
        m = Matrix(opt.dim, opt.dim);
        for (int i = 0; i < opt.dim; ++i)
            for (int j = 0; j < opt.dim; ++j) m(i, j) = Complex(g(rng), g(rng));
        m -= (m.trace() / static_cast<double>(opt.dim)) * Matrix::Identity(opt.dim, opt.dim);
        input["random_dim"] = opt.dim;
        input["seed"] = opt.seed;
    }
    EquidiagResult r = equidiag_power2(m);

    Json report;
    report["command"] = "equidiag";
    report["inputs"] = std::move(input);
    report["outputs"]["max_abs_diagonal"] = json_num(r.max_abs_diagonal);
    report["outputs"]["unitary"] = rounded_matrix(r.unitary);
    report["outputs"]["transformed_diagonal"] = [&] {
        Json d = Json::array();
        for (Eigen::Index i = 0; i < r.transformed.rows(); ++i)
            d.push_back(Json::array(
                {json_num(r.transformed(i, i).real()), json_num(r.transformed(i, i).imag())}));
        return d;
    }();
    report["tolerances"]["diagonal"] = report_tolerance(1e-9);
    report["verdicts"]["equi_diagonal"] = r.max_abs_diagonal <= report_tolerance(1e-9);
    emit(report, opt);
    return kExitOk;
}

BellFamilyParams params_from_options(const Options& opt) {
    const double a = opt.a, c = opt.c;
    if (a < 0.0 || c < 0.0) throw JsonError("casebook needs at least --a and --c");
    if (opt.b >= 0.0 && opt.d >= 0.0) return BellFamilyParams::make(a, opt.b, c, opt.d);
    return BellFamilyParams::from_ac(a, c);
}

int cmd_casebook(const Options& opt) {
    const BellFamilyParams p = params_from_options(opt);
    Json report;
    report["command"] = "casebook";
    report["inputs"]["name"] = opt.casebook_name;
    report["inputs"]["a"] = json_num(p.a);
    report["inputs"]["b"] = json_num(p.b);
    report["inputs"]["c"] = json_num(p.c);
    report["inputs"]["d"] = json_num(p.d);

    const std::string& name = opt.casebook_name;
    if (name == "ghosh4") {
        Ghosh4Report r = ghosh4_negativity(p);
        report["outputs"]["log_negativity"] = json_num(r.numeric_log_negativity);
        report["outputs"]["closed_form"] = json_num(r.closed_form);
        report["outputs"]["report"] = bound_json(r.report);
        report["verdicts"]["satisfied"] = r.report.satisfied;
    } else if (name == "ghosh3") {
        Ghosh3Report r = ghosh3_negativity(p, opt.anti_parallel);
        report["inputs"]["anti_parallel"] = opt.anti_parallel;
        report["outputs"]["log_negativity"] = json_num(r.numeric_log_negativity);
        report["outputs"]["closed_form"] = json_num(r.closed_form);
        report["outputs"]["condition_value"] = json_num(r.condition_value);
        report["outputs"]["negativity_bound_met"] = r.negativity_bound_met;
        report["outputs"]["report"] = bound_json(r.report);
        report["verdicts"]["satisfied"] = r.report.satisfied;
    } else if (name == "maj4") {
        Maj4Report r = maj4_indistinguishability(p);
        Json ev = Json::array();
        for (int i = 0; i < 4; ++i) ev.push_back(json_num(r.numeric_eigenvalues(i)));
        report["outputs"]["eigenvalues"] = std::move(ev);
        report["outputs"]["verdict"] = to_string(r.verdict);
        report["outputs"]["report"] = bound_json(r.report);
        report["verdicts"]["satisfied"] = r.report.satisfied;
    } else if (name == "maj3") {
        Maj3Report r = maj3_feasibility(p);
        Json ev = Json::array();
        for (int i = 0; i < 4; ++i) ev.push_back(json_num(r.numeric_eigenvalues(i)));
        report["outputs"]["eigenvalues"] = std::move(ev);
        report["outputs"]["verdict"] = to_string(r.verdict);
        report["outputs"]["report"] = bound_json(r.report);
        report["verdicts"]["satisfied"] = r.report.satisfied;
    } else if (name == "assisted") {
        AssistedReport r = assisted_bound(p);
        report["outputs"]["alpha2_bound"] = json_num(r.report.bound_value);
        report["outputs"]["lambda1"] = json_num(r.lambda1_numeric);
        report["outputs"]["report"] = bound_json(r.report);
        report["verdicts"]["satisfied"] = r.report.satisfied;
    } else if (name == "preserve2") {
        Preserve2Report r = preserve2_bound(p);
        report["outputs"]["alpha2_bound"] = json_num(r.report.bound_value);
        report["outputs"]["p1"] = json_num(r.p1);
        report["outputs"]["p2"] = json_num(r.p2);
        report["outputs"]["det_residual"] = json_num(r.det_residual);
        report["outputs"]["concurrence_phi"] = json_num(r.concurrence_phi);
        report["outputs"]["concurrence_saturating"] = json_num(r.concurrence_saturating);
        report["outputs"]["degenerate"] = r.degenerate;
        report["outputs"]["report"] = bound_json(r.report);
        report["verdicts"]["satisfied"] = r.report.satisfied;
    } else if (name == "preserve4product") {
        Preserve4ProductReport r = preserve4_product_bound(p, opt.grid);
        report["outputs"]["alpha2_bound"] = json_num(r.report.bound_value);
        report["outputs"]["grid_min"] = json_num(r.grid_min);
        report["outputs"]["report"] = bound_json(r.report);
        report["verdicts"]["satisfied"] = r.report.satisfied;
    } else if (name == "preserve4bell") {
        Preserve4BellReport r = preserve4_bell_bound(p);
        Json rhs = Json::array();
        for (int i = 0; i < 4; ++i) rhs.push_back(json_num(r.rhs(i)));
        report["outputs"]["rhs"] = std::move(rhs);
        report["outputs"]["cost_ebits"] = json_num(r.cost_ebits);
        report["outputs"]["report"] = bound_json(r.report);
        report["verdicts"]["satisfied"] = r.report.satisfied;
    } else {
        throw JsonError("unknown casebook name: " + name);
    }
    emit(report, opt);
    return kExitOk;
}

int cmd_figure1(const Options& opt) {
    auto rows = figure1_scan(opt.grid);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.out_file.empty()) {
        file.open(opt.out_file, std::ios::binary);
        if (!file) throw JsonError("cannot write " + opt.out_file);
        out = &file;
    }
    (*out) << "a2,c2,avg_entanglement,cost\n";
    char line[160];
    for (const Figure1Row& r : rows) {
        std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g\n", r.a2, r.c2,
                      r.avg_entanglement, r.cost);
        (*out) << line;
    }
    if (!opt.out_file.empty()) {
        Json report;
        report["command"] = "figure1";
        report["inputs"]["grid"] = opt.grid;
        report["outputs"]["rows"] = static_cast<int>(rows.size());
        report["outputs"]["csv"] = opt.out_file;
        emit(report, opt);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum state discrimination toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.compact, "compact single-line report");
    };

    CLI::App* helstrom = app.add_subcommand("helstrom", "two-state minimum-error discrimination");
    helstrom->add_option("--ensemble", opt.ensemble_file)->required();
    add_common(helstrom);

    CLI::App* uqsd = app.add_subcommand("uqsd", "unambiguous two-state discrimination");
    uqsd->add_option("--ensemble", opt.ensemble_file)->required();
    add_common(uqsd);

    CLI::App* qss = app.add_subcommand("qss", "quantum state separation feasibility/operators");
    qss->add_option("--ensemble", opt.ensemble_file)->required();
    qss->add_option("--targets", opt.targets_file)->required();
    qss->add_option("--k", opt.k_file)->required();
    add_common(qss);

    CLI::App* maj = app.add_subcommand("majorize", "compare two probability vectors");
    maj->add_option("files", opt.positional, "x.json y.json")->expected(2);
    add_common(maj);

    CLI::App* nielsen = app.add_subcommand("nielsen", "two-qubit entanglement transformation");
    nielsen->add_option("--p1", opt.p1)->required();
    nielsen->add_option("--q1", opt.q1)->required();
    add_common(nielsen);

    CLI::App* walgate = app.add_subcommand("walgate", "LOCC discrimination of orthogonal states");
    walgate->add_option("--ensemble", opt.ensemble_file)->required();
    add_common(walgate);

    CLI::App* equidiag = app.add_subcommand("equidiag", "equi-diagonalize a matrix");
    equidiag->add_option("--matrix", opt.matrix_file);
    equidiag->add_option("--dim", opt.dim)->check(CLI::PositiveNumber);
    equidiag->add_option("--seed", opt.seed);
    add_common(equidiag);

    CLI::App* casebook = app.add_subcommand("casebook", "run a named quantitative case");
    casebook->add_option("name", opt.casebook_name,
                         "ghosh4|ghosh3|maj4|maj3|assisted|preserve2|preserve4product|preserve4bell")
        ->required();
    casebook->add_option("--a", opt.a);
    casebook->add_option("--b", opt.b);
    casebook->add_option("--c", opt.c);
    casebook->add_option("--d", opt.d);
    casebook->add_option("--grid", opt.grid);
    casebook->add_flag("--anti", opt.anti_parallel, "use the anti-parallel state choice");
    add_common(casebook);

    CLI::App* figure1 = app.add_subcommand("figure1", "cost versus average entanglement scan");
    figure1->add_option("--grid", opt.grid)->check(CLI::Range(2, 1000));
    figure1->add_option("--out", opt.out_file);
    figure1->add_option("--seed", opt.seed);
    add_common(figure1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (helstrom->parsed()) return cmd_helstrom(opt);
        if (uqsd->parsed()) return cmd_uqsd(opt);
        if (qss->parsed()) return cmd_qss(opt);
        if (maj->parsed()) return cmd_majorize(opt);
        if (nielsen->parsed()) return cmd_nielsen(opt);
        if (walgate->parsed()) return cmd_walgate(opt);
        if (equidiag->parsed()) return cmd_equidiag(opt);
        if (casebook->parsed()) return cmd_casebook(opt);
        if (figure1->parsed()) return cmd_figure1(opt);
    } catch (const JsonError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitBadInput;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitLibrary;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitLibrary;
    }
    return kExitBadInput;
}
