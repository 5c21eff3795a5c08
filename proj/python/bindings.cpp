// Python bindings for the discrimination toolkit. Matrices and amplitude
// vectors cross the boundary as numpy arrays; reports come back as dicts.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsd/casebook.hpp"
#include "qsd/locc.hpp"

namespace py = pybind11;
using namespace qsd;

namespace {

PureState make_state(const Vector& amplitudes, int dim_a, int dim_b) {
    if (dim_a == 0) dim_a = static_cast<int>(amplitudes.size());
    return PureState(amplitudes, dim_a, dim_b);
}

DensityOperator make_density(const Matrix& m) { return validate_density(m); }

py::dict bound_dict(const BoundReport& r) {
    py::dict d;
    d["bound_value"] = r.bound_value;
    d["satisfied"] = r.satisfied;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["witness"] = r.witness;
    return d;
}

py::dict discrimination_dict(const DiscriminationResult& r) {
    py::dict d;
    d["strategy"] = std::string(to_string(r.strategy));
    d["error_probability"] = r.error_probability;
    d["failure_probability"] = r.failure_probability;
    py::list stats;
    for (const PerStateStats& s : r.per_state_stats)
        stats.append(py::make_tuple(s.success, s.error, s.inconclusive));
    d["per_state_stats"] = stats;
    py::list elements, labels;
    for (std::size_t i = 0; i < r.povm().size(); ++i) {
        elements.append(r.povm().elements()[i]);
        labels.append(r.povm().labels()[i]);
    }
    d["elements"] = elements;
    d["labels"] = labels;
    return d;
}

Ensemble pure_ensemble(const std::vector<std::pair<double, Vector>>& items, int dim_a,
                       int dim_b) {
    Ensemble e;
    for (const auto& [p, v] : items) e.items.emplace_back(p, make_state(v, dim_a, dim_b));
    e.validate();
    return e;
}

}  // namespace

PYBIND11_MODULE(_qsd, m) {
    m.doc() = "quantum state discrimination toolkit";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    // dense linear algebra
    m.def("kron", py::overload_cast<const Matrix&, const Matrix&>(&kron), py::arg("a"),
          py::arg("b"));
    m.def(
        "partial_trace",
        [](const Matrix& rho, int dim_a, int dim_b, const std::string& over) {
            return partial_trace(rho, dim_a, dim_b,
                                 over == "A" || over == "a" ? Subsystem::A : Subsystem::B);
        },
        py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("over") = "B");
    m.def("partial_transpose", &partial_transpose, py::arg("rho"), py::arg("dim_a"),
          py::arg("dim_b"));
    m.def("hermitian_eig", [](const Matrix& a) {
        HermitianEig e = hermitian_eig(a);
        return py::make_tuple(e.eigenvalues, e.eigenvectors);
    });
    m.def("svd", [](const Matrix& a) {
        SvdResult s = svd(a);
        return py::make_tuple(s.u, s.singular_values, s.v);
    });
    m.def("trace_norm", &trace_norm);

    // states and monotones
    m.def("validate_density", [](const Matrix& m_) { return make_density(m_).matrix(); },
          "validate and return a density operator");
    m.def(
        "purify",
        [](const Matrix& rho) { return purify(make_density(rho)).amplitudes(); },
        py::arg("rho"));
    m.def(
        "schmidt",
        [](const Vector& amps, int dim_a, int dim_b) {
            SchmidtDecomposition s = schmidt_decompose(make_state(amps, dim_a, dim_b));
            return py::make_tuple(s.coefficients, s.left_basis, s.right_basis, s.rank);
        },
        py::arg("amplitudes"), py::arg("dim_a"), py::arg("dim_b"));
    m.def(
        "entanglement_entropy",
        [](const Vector& amps, int dim_a, int dim_b) {
            return entanglement_entropy(make_state(amps, dim_a, dim_b));
        },
        py::arg("amplitudes"), py::arg("dim_a"), py::arg("dim_b"));
    m.def("concurrence", [](const Matrix& rho) { return concurrence(make_density(rho)); });
    m.def(
        "log_negativity",
        [](const Matrix& rho, int dim_a, int dim_b) {
            return log_negativity(make_density(rho), dim_a, dim_b);
        },
        py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"));
    m.def(
        "density_from_ensemble",
        [](const std::vector<std::pair<double, Vector>>& items) {
            std::size_t dim = items.front().second.size();
            return density_from_ensemble(pure_ensemble(items, static_cast<int>(dim), 1)).matrix();
        },
        py::arg("items"), "mixture of (probability, amplitude vector) pairs");

    // measurement statistics
    m.def(
        "outcome_probabilities",
        [](const std::vector<Matrix>& kraus, const Matrix& rho) {
            return outcome_probabilities(Measurement(kraus), make_density(rho));
        },
        py::arg("kraus"), py::arg("rho"));
    m.def(
        "posterior_state",
        [](const std::vector<Matrix>& kraus, const Matrix& rho, std::size_t outcome) {
            return posterior_state(Measurement(kraus), make_density(rho), outcome).matrix();
        },
        py::arg("kraus"), py::arg("rho"), py::arg("outcome"));
    m.def(
        "forgetful_apply",
        [](const std::vector<Matrix>& kraus, const Matrix& rho) {
            return forgetful_apply(Measurement(kraus), make_density(rho)).matrix();
        },
        py::arg("kraus"), py::arg("rho"));

    // majorization
    m.def(
        "majorizes",
        [](const RealVector& x, const RealVector& y) {
            MajorizationReport r = majorizes(ProbVector(x), ProbVector(y));
            py::dict d;
            d["verdict"] = std::string(to_string(r.verdict));
            d["prefix_sums_left"] = r.prefix_sums_left;
            d["prefix_sums_right"] = r.prefix_sums_right;
            if (r.first_violation_index) d["first_violation_index"] = *r.first_violation_index;
            return d;
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "nielsen_feasible",
        [](const Vector& source, int sa, int sb, const Vector& target, int ta, int tb) {
            return nielsen_feasible(make_state(source, sa, sb), make_state(target, ta, tb));
        },
        py::arg("source"), py::arg("source_dim_a"), py::arg("source_dim_b"), py::arg("target"),
        py::arg("target_dim_a"), py::arg("target_dim_b"));
    m.def(
        "t_transform_chain",
        [](const RealVector& x, const RealVector& y) {
            return t_transform_chain(ProbVector(x), ProbVector(y));
        },
        py::arg("x"), py::arg("y"));
    m.def(
        "birkhoff_decompose",
        [](const RealMatrix& d) {
            py::list out;
            for (const BirkhoffTerm& t : birkhoff_decompose(d))
                out.append(py::make_tuple(t.weight, t.permutation));
            return out;
        },
        py::arg("doubly_stochastic"));
    m.def(
        "construct_transform_measurement",
        [](const Matrix& rho, const std::vector<std::pair<double, Matrix>>& targets) {
            std::vector<std::pair<double, DensityOperator>> ts;
            for (const auto& [p, t] : targets) ts.emplace_back(p, make_density(t));
            Measurement meas = construct_transform_measurement(make_density(rho), ts);
            return py::make_tuple(meas.operators(), meas.labels());
        },
        py::arg("rho"), py::arg("targets"));

    // discrimination strategies
    m.def(
        "perfect_discrimination",
        [](const std::vector<Vector>& states) {
            std::vector<PureState> ss;
            for (const Vector& v : states) ss.push_back(make_state(v, 0, 1));
            return discrimination_dict(perfect_discrimination(ss));
        },
        py::arg("states"));
    m.def(
        "helstrom_two_state",
        [](double p1, const Matrix& rho1, double p2, const Matrix& rho2) {
            return discrimination_dict(
                helstrom_two_state(p1, make_density(rho1), p2, make_density(rho2)));
        },
        py::arg("p1"), py::arg("rho1"), py::arg("p2"), py::arg("rho2"));
    m.def("helstrom_pure_bound", &helstrom_pure_bound, py::arg("p1"), py::arg("p2"),
          py::arg("overlap"));
    m.def(
        "brute_force_min_error",
        [](double p1, const Vector& psi1, double p2, const Vector& psi2, int grid) {
            return brute_force_min_error(
                Ensemble{{p1, make_state(psi1, 2, 1)}, {p2, make_state(psi2, 2, 1)}}, grid);
        },
        py::arg("p1"), py::arg("psi1"), py::arg("p2"), py::arg("psi2"), py::arg("grid") = 32);
    m.def(
        "uqsd_two_state",
        [](double p1, const Vector& psi1, double p2, const Vector& psi2) {
            return discrimination_dict(
                uqsd_two_state(p1, make_state(psi1, 0, 1), p2, make_state(psi2, 0, 1)));
        },
        py::arg("p1"), py::arg("psi1"), py::arg("p2"), py::arg("psi2"));
    m.def(
        "reciprocal_states",
        [](const std::vector<Vector>& states) {
            std::vector<PureState> ss;
            for (const Vector& v : states) ss.push_back(make_state(v, 0, 1));
            return reciprocal_states(ss);
        },
        py::arg("states"));
    m.def(
        "qss_feasibility",
        [](const Matrix& a, const Matrix& a_target, const Matrix& k) {
            QssFeasibility f = qss_feasibility(OverlapMatrix{a}, OverlapMatrix{a_target}, k);
            py::dict d;
            d["feasible"] = f.feasible;
            d["failure_operator"] = f.failure_operator;
            d["min_eigenvalue_k"] = f.min_eigenvalue_k;
            d["min_eigenvalue_f"] = f.min_eigenvalue_f;
            return d;
        },
        py::arg("overlap"), py::arg("overlap_target"), py::arg("k"));

    // LOCC protocols
    m.def("equidiag_2x2", [](const Matrix& m_) {
        EquidiagResult r = equidiag_2x2(m_);
        return py::make_tuple(r.unitary, r.transformed, r.max_abs_diagonal);
    });
    m.def("equidiag_power2", [](const Matrix& m_) {
        EquidiagResult r = equidiag_power2(m_);
        return py::make_tuple(r.unitary, r.transformed, r.max_abs_diagonal);
    });
    m.def(
        "walgate",
        [](const Vector& psi1, const Vector& psi2, int dim_a, int dim_b) {
            PureState s1 = make_state(psi1, dim_a, dim_b);
            PureState s2 = make_state(psi2, dim_a, dim_b);
            WalgateProtocol proto = walgate_protocol(s1, s2);
            auto [id1, id2] = walgate_identification_probabilities(proto, s1, s2);
            py::dict d;
            d["alice_basis"] = proto.alice_basis;
            d["zero_diagonal_residual"] = proto.zero_diagonal_residual;
            d["identification_probabilities"] = py::make_tuple(id1, id2);
            return d;
        },
        py::arg("psi1"), py::arg("psi2"), py::arg("dim_a"), py::arg("dim_b"));
    m.def(
        "virmani",
        [](const Vector& psi1, const Vector& psi2, int dim_a, int dim_b, double p1) {
            VirmaniResult r = virmani_nonorthogonal(make_state(psi1, dim_a, dim_b),
                                                    make_state(psi2, dim_a, dim_b), p1, 1.0 - p1);
            py::dict d;
            d["branch_overlaps"] = r.branch_overlaps;
            d["branch_errors"] = r.branch_errors;
            d["achievable_error"] = r.achievable_error;
            return d;
        },
        py::arg("psi1"), py::arg("psi2"), py::arg("dim_a"), py::arg("dim_b"), py::arg("p1"));
    m.def(
        "nielsen_protocol",
        [](double p1, double q1) {
            NielsenProtocol p = nielsen_protocol_2qubit(p1, q1);
            py::dict d;
            d["alpha"] = p.alpha;
            d["beta"] = p.beta;
            d["m1"] = p.measurement.operators()[0];
            d["m2"] = p.measurement.operators()[1];
            d["intermediate"] = p.intermediate.amplitudes();
            return d;
        },
        py::arg("p1"), py::arg("q1"));
    m.def(
        "distill_outcome_stats",
        [](int n, double cos2theta) {
            DistillStats s = distill_outcome_stats(n, cos2theta);
            return py::make_tuple(s.probabilities, s.subspace_dims);
        },
        py::arg("n"), py::arg("cos2theta"));

    // casebook
    auto params = [](double a, double c) { return BellFamilyParams::from_ac(a, c); };
    m.def(
        "ghosh4",
        [params](double a, double c) {
            Ghosh4Report r = ghosh4_negativity(params(a, c));
            py::dict d = bound_dict(r.report);
            d["log_negativity"] = r.numeric_log_negativity;
            d["closed_form"] = r.closed_form;
            return d;
        },
        py::arg("a"), py::arg("c"));
    m.def(
        "ghosh3",
        [params](double a, double c, bool anti_parallel) {
            Ghosh3Report r = ghosh3_negativity(params(a, c), anti_parallel);
            py::dict d = bound_dict(r.report);
            d["log_negativity"] = r.numeric_log_negativity;
            d["closed_form"] = r.closed_form;
            d["condition_value"] = r.condition_value;
            d["negativity_bound_met"] = r.negativity_bound_met;
            return d;
        },
        py::arg("a"), py::arg("c"), py::arg("anti_parallel") = false);
    m.def(
        "maj4",
        [params](double a, double c) {
            Maj4Report r = maj4_indistinguishability(params(a, c));
            py::dict d = bound_dict(r.report);
            d["eigenvalues"] = r.numeric_eigenvalues;
            d["analytic_eigenvalues"] = r.analytic_eigenvalues;
            d["verdict"] = std::string(to_string(r.verdict));
            return d;
        },
        py::arg("a"), py::arg("c"));
    m.def(
        "maj3",
        [params](double a, double c) {
            Maj3Report r = maj3_feasibility(params(a, c));
            py::dict d = bound_dict(r.report);
            d["eigenvalues"] = r.numeric_eigenvalues;
            d["verdict"] = std::string(to_string(r.verdict));
            return d;
        },
        py::arg("a"), py::arg("c"));
    m.def(
        "assisted_bound",
        [params](double a, double c) {
            AssistedReport r = assisted_bound(params(a, c));
            py::dict d = bound_dict(r.report);
            d["lambda1"] = r.lambda1_numeric;
            return d;
        },
        py::arg("a"), py::arg("c"));
    m.def(
        "preserve2_bound",
        [params](double a, double c) {
            Preserve2Report r = preserve2_bound(params(a, c));
            py::dict d = bound_dict(r.report);
            d["p1"] = r.p1;
            d["p2"] = r.p2;
            d["concurrence_phi"] = r.concurrence_phi;
            d["concurrence_saturating"] = r.concurrence_saturating;
            d["degenerate"] = r.degenerate;
            return d;
        },
        py::arg("a"), py::arg("c"));
    m.def(
        "preserve4_product_bound",
        [params](double a, double c, int grid) {
            Preserve4ProductReport r = preserve4_product_bound(params(a, c), grid);
            py::dict d = bound_dict(r.report);
            d["grid_min"] = r.grid_min;
            return d;
        },
        py::arg("a"), py::arg("c"), py::arg("grid") = 100);
    m.def(
        "preserve4_bell_bound",
        [params](double a, double c) {
            Preserve4BellReport r = preserve4_bell_bound(params(a, c));
            py::dict d = bound_dict(r.report);
            d["rhs"] = r.rhs;
            d["cost_ebits"] = r.cost_ebits;
            return d;
        },
        py::arg("a"), py::arg("c"));
    m.def(
        "figure1_scan",
        [](int grid) {
            auto rows = figure1_scan(grid);
            RealMatrix out(static_cast<Eigen::Index>(rows.size()), 4);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                out(static_cast<Eigen::Index>(i), 0) = rows[i].a2;
                out(static_cast<Eigen::Index>(i), 1) = rows[i].c2;
                out(static_cast<Eigen::Index>(i), 2) = rows[i].avg_entanglement;
                out(static_cast<Eigen::Index>(i), 3) = rows[i].cost;
            }
            return out;
        },
        py::arg("grid"), "columns: a2, c2, avg_entanglement, cost");
}
