// Copyright 2026 The xyzhea Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "xyzhea/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "xyzhea/ansatz.hpp"
#include "xyzhea/csv.hpp"
#include "xyzhea/eigensolver.hpp"
#include "xyzhea/error.hpp"
#include "xyzhea/experiments.hpp"
#include "xyzhea/hamiltonian_io.hpp"
#include "xyzhea/layerwise.hpp"
#include "xyzhea/pauli_compiler.hpp"

namespace xyzhea {

namespace {

using nlohmann::json;

struct ProblemFlags {
    int heisenberg = 0;
    double J = -1.0;
    std::string file;
    std::string reference; // neel | metadata | bitstring; empty = metadata if present, else neel
    std::string penalty;   // n_up,n_down,beta
};

struct OptimizerFlags {
    int restarts = 7;
    int max_iter = 3000;
    double grad_tol = 1e-7;
    int workers = 0;
    std::uint64_t seed = 1;
};

struct Problem {
    PauliSum h;
    std::string reference;
    int n_sites = 0; // built-in lattice models only
    json source;
};

void add_problem_flags(CLI::App *app, ProblemFlags &f) {
    app->add_option("--heisenberg", f.heisenberg, "Built-in 1D Heisenberg chain with N sites");
    app->add_option("-J,--coupling", f.J, "Heisenberg coupling (-1 = antiferromagnetic)")
        ->capture_default_str();
    app->add_option("--hamiltonian", f.file, "Hamiltonian JSON file");
    app->add_option("--reference", f.reference,
                    "Reference state: neel, metadata, or a bitstring (qubit 0 first)");
    app->add_option("--penalty", f.penalty, "Add beta[(N_up-n_up)^2+(N_dn-n_dn)^2]: n_up,n_down,beta");
}

void add_optimizer_flags(CLI::App *app, OptimizerFlags &f) {
    app->add_option("--restarts", f.restarts, "Random starts per layer (one per step size)")
        ->capture_default_str();
    app->add_option("--max-iter", f.max_iter, "BFGS iteration cap per start")->capture_default_str();
    app->add_option("--grad-tol", f.grad_tol, "BFGS gradient max-norm tolerance")
        ->capture_default_str();
    app->add_option("--workers", f.workers,
                    "Worker threads (default: $XYZHEA_WORKERS, else all cores)");
    app->add_option("--seed", f.seed, "Random seed")->capture_default_str();
}

LayerwiseOptions layerwise_options(const OptimizerFlags &f) {
    if (f.max_iter < 1) {
        throw InputError("--max-iter must be >= 1");
    }
    if (!(f.grad_tol > 0.0)) {
        throw InputError("--grad-tol must be positive");
    }
    LayerwiseOptions o;
    o.bfgs.max_iterations = f.max_iter;
    o.bfgs.gradient_tolerance = f.grad_tol;
    o.restarts = RestartSpec::with_count(f.restarts, f.seed);
    o.workers = resolve_workers(f.workers);
    return o;
}

json optimizer_metadata(const LayerwiseOptions &o) {
    return {{"seed", o.restarts.seed},
            {"restart_count", o.restarts.step_sizes.size()},
            {"restart_step_sizes", o.restarts.step_sizes},
            {"bfgs_max_iterations", o.bfgs.max_iterations},
            {"bfgs_gradient_tolerance", o.bfgs.gradient_tolerance},
            {"bfgs_wolfe_c1", o.bfgs.c1},
            {"bfgs_wolfe_c2", o.bfgs.c2},
            {"workers", o.workers}};
}

bool is_bitstring(const std::string &s) {
    return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

Problem load_problem(const ProblemFlags &f) {
    const bool builtin = f.heisenberg != 0;
    if (builtin == !f.file.empty()) {
        throw InputError("give exactly one of --heisenberg N and --hamiltonian FILE");
    }
    Problem p;
    std::optional<std::string> stored_reference;
    if (builtin) {
        if (f.heisenberg < 2) {
            throw InputError("--heisenberg needs N >= 2");
        }
        p.h = heisenberg_1d(f.heisenberg, f.J);
        p.n_sites = f.heisenberg;
        p.source = {{"model", "heisenberg_1d"}, {"n_sites", f.heisenberg}, {"J", f.J}};
    } else {
        HamiltonianFile file = load_hamiltonian(f.file);
        p.h = file.hamiltonian;
        stored_reference = file.reference_bitstring();
        p.source = {{"file", f.file}, {"metadata", file.metadata}};
    }
    const int n = p.h.n_qubits();

    if (f.reference.empty()) {
        p.reference = stored_reference ? *stored_reference : neel_bitstring(n);
    } else if (f.reference == "neel") {
        p.reference = neel_bitstring(n);
    } else if (f.reference == "metadata") {
        if (!stored_reference) {
            throw InputError("--reference metadata: no reference_bitstring in the Hamiltonian file");
        }
        p.reference = *stored_reference;
    } else if (is_bitstring(f.reference)) {
        p.reference = f.reference;
    } else {
        throw InputError("--reference must be neel, metadata, or a 0/1 string");
    }
    if (static_cast<int>(p.reference.size()) != n) {
        throw InputError("reference '" + p.reference + "' does not have " + std::to_string(n) +
                         " qubits");
    }

    if (!f.penalty.empty()) {
        int n_up = 0;
        int n_down = 0;
        double beta = 0.0;
        char c1 = 0;
        char c2 = 0;
        std::istringstream ss(f.penalty);
        if (!(ss >> n_up >> c1 >> n_down >> c2 >> beta) || c1 != ',' || c2 != ',' ||
            !(ss >> std::ws).eof()) {
            throw InputError("--penalty expects n_up,n_down,beta");
        }
        p.h = p.h + number_penalty(n, n_up, n_down, beta);
        p.source["penalty"] = {{"n_up", n_up}, {"n_down", n_down}, {"beta", beta}};
    }
    return p;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw InputError("cannot write " + path);
    }
    return f;
}

json base_metadata(const std::string &subcommand, int argc, const char *const *argv) {
    std::vector<std::string> args(argv, argv + argc);
    return {{"subcommand", subcommand}, {"argv", args}};
}

// ---------------------------------------------------------------------------

int cmd_ed(const ProblemFlags &pf, const std::string &out_path, json meta, std::ostream &out) {
    const Problem p = load_problem(pf);
    const GroundState gs = exact_ground_state(p.h);
    out << "n_qubits " << p.h.n_qubits() << '\n';
    out << "energy " << format_real(gs.energy) << '\n';
    if (p.n_sites > 0) {
        out << "per_site_energy " << format_real(gs.energy / p.n_sites) << '\n';
    }
    out << "residual " << format_real(gs.residual) << '\n';
    const json result = {{"n_qubits", p.h.n_qubits()},
                         {"energy", gs.energy},
                         {"residual", gs.residual},
                         {"method", gs.method == EigenMethod::Dense ? "dense" : "lanczos"}};
    open_output(out_path) << result.dump(2) << '\n';
    meta["hamiltonian"] = p.source;
    write_sidecar(out_path, meta);
    return kExitOk;
}

int cmd_vqe(const ProblemFlags &pf, const OptimizerFlags &of, const std::string &ansatz, int layers,
            const std::string &out_path, json meta, std::ostream &out) {
    const AnsatzKind kind = parse_ansatz_kind(ansatz);
    if (layers < 1) {
        throw InputError("--layers must be >= 1");
    }
    const Problem p = load_problem(pf);
    LayerwiseOptions opts = layerwise_options(of);
    opts.on_layer = [&](const LayerRecord &rec) {
        out << "layer " << rec.layer << " energy " << format_real(rec.energy) << " step "
            << format_real(rec.step_size) << " iterations " << rec.iterations << '\n';
        out.flush();
    };
    const ConvergenceSweep sweep = convergence_sweep(p.h, kind, p.reference, layers, opts, p.n_sites);
    auto f = open_output(out_path);
    write_convergence_csv(f, sweep.rows);
    const ConvergenceRow &last = sweep.rows.back();
    out << "exact " << format_real(sweep.exact_energy) << '\n';
    out << "final_error " << format_real(last.error_vs_exact) << '\n';
    if (p.n_sites > 0) {
        out << "final_per_site_error " << format_real(last.error_vs_exact / p.n_sites) << '\n';
    }
    meta["hamiltonian"] = p.source;
    meta["ansatz"] = ansatz_name(kind);
    meta["reference"] = p.reference;
    meta["layers"] = layers;
    meta["exact_energy"] = sweep.exact_energy;
    meta["optimizer"] = optimizer_metadata(opts);
    write_sidecar(out_path, meta);
    return kExitOk;
}

int cmd_compile_pauli(const std::string &pauli_text, int n, double theta, const std::string &ansatz,
                      std::uint64_t seed, const std::string &out_path, json meta, std::ostream &out) {
    const AnsatzKind kind = parse_ansatz_kind(ansatz);
    if (!has_identity_layer(kind)) {
        throw InputError("compile-pauli needs --ansatz xyz1f or xyz2f");
    }
    if (n < 1) {
        throw InputError("--n must be >= 1");
    }
    const std::string pauli = parse_pauli_string(pauli_text, n);
    const CompiledRotation compiled = compile_pauli_rotation(pauli, theta, kind);

    // Random input state; oracle exp(i theta P) = cos(theta) + i sin(theta) P.
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<cplx> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        a = {gauss(rng), gauss(rng)};
    }
    Statevector psi(n, std::move(amps));
    psi.normalize();
    const PauliSum p_op(n, {{1.0, pauli}});
    Statevector p_psi(n);
    p_op.apply(psi, p_psi);
    std::vector<cplx> expected(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        expected[i] = std::cos(theta) * psi[i] + cplx(0.0, std::sin(theta)) * p_psi[i];
    }
    const Statevector oracle(n, std::move(expected));
    const Statevector got = run(build_ansatz(kind, n, 1), compiled.params, psi);
    const double fid = fidelity(got, oracle);

    std::string bonds;
    for (std::size_t k = 0; k < compiled.bonds.size(); ++k) {
        bonds += (k ? "," : "") + std::string(bond_gate_name(compiled.bonds[k]));
    }
    out << "pauli " << pauli << '\n';
    out << "bonds " << bonds << '\n';
    out << "carrier " << compiled.carrier << '\n';
    out << "params";
    for (double v : compiled.params) {
        out << ' ' << format_real(v);
    }
    out << '\n';
    out << "fidelity " << format_real(fid) << '\n';
    out << "infidelity " << format_real(1.0 - fid) << '\n';

    std::vector<std::string> bond_names;
    for (BondGate b : compiled.bonds) {
        bond_names.emplace_back(bond_gate_name(b));
    }
    const json result = {{"pauli", pauli},         {"theta", theta},
                         {"ansatz", ansatz_name(kind)}, {"bonds", bond_names},
                         {"carrier", compiled.carrier}, {"params", compiled.params},
                         {"fidelity", fid}};
    open_output(out_path) << result.dump(2) << '\n';
    meta["seed"] = seed;
    write_sidecar(out_path, meta);
    return kExitOk;
}

int cmd_counts(const std::string &ansatz, int n, int layers, const std::string &out_path, json meta,
               std::ostream &out) {
    const AnsatzKind kind = parse_ansatz_kind(ansatz);
    const ResourceCounts table = table_counts(kind, n, layers);
    const ResourceCounts built = count_resources(build_ansatz(kind, n, layers));
    out << "ansatz " << ansatz_name(kind) << " n " << n << " layers " << layers << '\n';
    out << "params " << built.n_params << '\n';
    out << "two_qubit " << built.n_two_qubit << '\n';
    out << "single_qubit " << built.n_single_qubit << '\n';
    out << "depth " << table.asap_depth << '\n';
    out << "asap_depth " << built.asap_depth << '\n';
    auto f = open_output(out_path);
    f << "kind,n_qubits,layers,n_params,n_two_qubit,n_single_qubit,depth_formula,asap_depth\n";
    f << ansatz_name(kind) << ',' << n << ',' << layers << ',' << built.n_params << ','
      << built.n_two_qubit << ',' << built.n_single_qubit << ',' << table.asap_depth << ','
      << built.asap_depth << '\n';
    write_sidecar(out_path, meta);
    return kExitOk;
}

int cmd_size_consistency(const std::string &ansatz, int n, const std::vector<int> &layers, double J,
                         const OptimizerFlags &of, const std::string &out_path, json meta,
                         std::ostream &out) {
    const AnsatzKind kind = parse_ansatz_kind(ansatz);
    if (n < 2) {
        throw InputError("--n must be >= 2");
    }
    const LayerwiseOptions opts = layerwise_options(of);
    const auto rows = size_consistency_test(kind, n, layers, J, opts);
    for (const auto &r : rows) {
        out << "L " << r.layers << " e_sub " << format_real(r.e_sub) << " e_composite "
            << format_real(r.e_composite) << " infidelity_sub " << format_real(r.infidelity_sub)
            << " infidelity_composite " << format_real(r.infidelity_composite) << '\n';
    }
    auto f = open_output(out_path);
    write_size_consistency_csv(f, rows);
    meta["n_sub"] = n;
    meta["J"] = J;
    meta["embedding"] = kind == AnsatzKind::XYZ2F
                            ? "exact composition, boundary U2 = identity"
                            : "positional, boundary parameters set to 0";
    meta["optimizer"] = optimizer_metadata(opts);
    write_sidecar(out_path, meta);
    return kExitOk;
}

int cmd_barren_plateau(const std::string &ansatz, const std::vector<int> &ns,
                       const std::vector<int> &layers, int samples, const std::string &mode,
                       double J, const OptimizerFlags &of, const std::string &out_path, json meta,
                       std::ostream &out) {
    VarianceConfig config;
    config.samples = samples;
    config.seed = of.seed;
    config.J = J;
    config.layerwise = layerwise_options(of);
    config.workers = config.layerwise.workers;
    const auto rows = barren_plateau_variance(parse_ansatz_kind(ansatz), ns, layers,
                                              parse_variance_mode(mode), config);
    for (const auto &r : rows) {
        out << "N " << r.n_qubits << " L " << r.layers << ' ' << r.parameter_id << " variance "
            << format_real(r.variance) << '\n';
    }
    auto f = open_output(out_path);
    write_variance_csv(f, rows);
    meta["J"] = J;
    meta["optimizer"] = optimizer_metadata(config.layerwise);
    write_sidecar(out_path, meta);
    return kExitOk;
}

int cmd_scaling(const std::string &ansatz, const std::vector<int> &ns, double tol, int max_layers,
                double J, const OptimizerFlags &of, const std::string &out_path, json meta,
                std::ostream &out) {
    const AnsatzKind kind = parse_ansatz_kind(ansatz);
    const LayerwiseOptions opts = layerwise_options(of);
    auto f = open_output(out_path);
    f << "n_qubits,layers,reached,error,n_params,n_two_qubit,asap_depth\n";
    std::vector<std::pair<double, double>> params_pts;
    std::vector<std::pair<double, double>> two_qubit_pts;
    for (int n : ns) {
        if (n < 2) {
            throw InputError("--n values must be >= 2");
        }
        const AccuracyResult r = layers_to_accuracy(heisenberg_1d(n, J), kind, neel_bitstring(n),
                                                    tol, max_layers, opts, n);
        out << "N " << n << (r.reached ? " reached at L " : " not reached by L ") << r.layers
            << " n_params " << r.counts.n_params << " n_two_qubit " << r.counts.n_two_qubit << '\n';
        out.flush();
        f << n << ',' << r.layers << ',' << (r.reached ? 1 : 0) << ',' << format_real(r.error) << ','
          << r.counts.n_params << ',' << r.counts.n_two_qubit << ',' << r.counts.asap_depth << '\n';
        if (r.reached) {
            params_pts.emplace_back(n, r.counts.n_params);
            two_qubit_pts.emplace_back(n, r.counts.n_two_qubit);
        }
    }
    meta["tolerance_per_site"] = tol;
    meta["max_layers"] = max_layers;
    meta["optimizer"] = optimizer_metadata(opts);
    if (params_pts.size() >= 3) {
        const PowerLaw fp = power_law_fit(params_pts);
        const PowerLaw f2 = power_law_fit(two_qubit_pts);
        out << "n_params ~ " << format_real(fp.prefactor) << " N^" << format_real(fp.exponent) << '\n';
        out << "n_two_qubit ~ " << format_real(f2.prefactor) << " N^" << format_real(f2.exponent)
            << '\n';
        meta["fit_n_params"] = {{"prefactor", fp.prefactor}, {"exponent", fp.exponent}};
        meta["fit_n_two_qubit"] = {{"prefactor", f2.prefactor}, {"exponent", f2.exponent}};
    } else {
        out << "fit skipped: fewer than 3 sizes reached the tolerance\n";
    }
    write_sidecar(out_path, meta);
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Layerwise VQE with hardware-efficient ansatzes", "xyzhea"};
    app.require_subcommand(1);

    ProblemFlags pf;
    OptimizerFlags of;
    std::string out_path;
    std::string ansatz = "xyz2f";
    int layers = 4;
    int n = 0;
    double J = -1.0;

    auto *ed = app.add_subcommand("ed", "Exact ground state");
    add_problem_flags(ed, pf);
    ed->add_option("--out", out_path, "Result JSON")->default_str("ed.json");

    auto *vqe = app.add_subcommand("vqe", "Layerwise VQE, writes convergence CSV");
    add_problem_flags(vqe, pf);
    add_optimizer_flags(vqe, of);
    vqe->add_option("--ansatz", ansatz, "ry_linear, ry_full, ryrz_full, aswap, xyz1f, xyz2f")
        ->capture_default_str();
    vqe->add_option("--layers", layers, "Maximum number of layers")->capture_default_str();
    vqe->add_option("--out", out_path, "Convergence CSV")->default_str("convergence.csv");

    std::string pauli;
    double theta = 0.0;
    auto *cp = app.add_subcommand("compile-pauli", "One XYZ layer equal to exp(i theta P)");
    cp->add_option("--pauli", pauli, "Pauli string, e.g. Z0Z1Z2Z4Z5 or ZZZIZZ")->required();
    cp->add_option("--n", n, "Number of qubits")->required();
    cp->add_option("--theta", theta, "Rotation angle")->required();
    cp->add_option("--ansatz", ansatz, "xyz1f or xyz2f")->capture_default_str();
    cp->add_option("--seed", of.seed, "Seed of the random test state")->capture_default_str();
    cp->add_option("--out", out_path, "Result JSON")->default_str("compile_pauli.json");

    std::vector<int> layer_list{2, 4};
    auto *sc = app.add_subcommand("size-consistency", "Two decoupled Heisenberg chains");
    add_optimizer_flags(sc, of);
    sc->add_option("--ansatz", ansatz)->capture_default_str();
    sc->add_option("--n", n, "Sites per subsystem")->default_val(6);
    sc->add_option("--layers", layer_list, "Layer counts")->delimiter(',')->capture_default_str();
    sc->add_option("-J,--coupling", J)->capture_default_str();
    sc->add_option("--out", out_path)->default_str("size_consistency.csv");

    std::vector<int> n_list{4, 6, 8, 10};
    std::vector<int> bp_layers{20};
    int samples = 100;
    std::string mode = "random";
    auto *bp = app.add_subcommand("barren-plateau", "Gradient variance over random parameters");
    add_optimizer_flags(bp, of);
    bp->add_option("--ansatz", ansatz)->capture_default_str();
    bp->add_option("--n", n_list, "System sizes")->delimiter(',')->capture_default_str();
    bp->add_option("--layers", bp_layers, "Layer counts")->delimiter(',')->capture_default_str();
    bp->add_option("--samples", samples)->capture_default_str();
    bp->add_option("--mode", mode, "random or layerwise")->capture_default_str();
    bp->add_option("-J,--coupling", J)->capture_default_str();
    bp->add_option("--out", out_path)->default_str("variance.csv");

    std::vector<int> scaling_n{4, 6, 8};
    double tol = kChemicalAccuracy;
    int max_layers = 20;
    auto *sl = app.add_subcommand("scaling", "Layers to reach a per-site tolerance, power-law fit");
    add_optimizer_flags(sl, of);
    sl->add_option("--ansatz", ansatz)->capture_default_str();
    sl->add_option("--n", scaling_n, "System sizes")->delimiter(',')->capture_default_str();
    sl->add_option("--tol", tol, "Per-site energy tolerance")->capture_default_str();
    sl->add_option("--max-layers", max_layers)->capture_default_str();
    sl->add_option("-J,--coupling", J)->capture_default_str();
    sl->add_option("--out", out_path)->default_str("scaling.csv");

    auto *ct = app.add_subcommand("counts", "Parameter, gate and depth counts");
    ct->add_option("--ansatz", ansatz)->required();
    ct->add_option("--n", n, "Number of qubits")->required();
    ct->add_option("--layers", layers)->required();
    ct->add_option("--out", out_path)->default_str("counts.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    CLI::App *sub = app.get_subcommands().front();
    if (out_path.empty()) {
        out_path = sub->get_option("--out")->get_default_str();
    }
    json meta = base_metadata(sub->get_name(), argc, argv);
    try {
        if (sub == ed) {
            return cmd_ed(pf, out_path, meta, out);
        }
        if (sub == vqe) {
            return cmd_vqe(pf, of, ansatz, layers, out_path, meta, out);
        }
        if (sub == cp) {
            return cmd_compile_pauli(pauli, n, theta, ansatz, of.seed, out_path, meta, out);
        }
        if (sub == sc) {
            return cmd_size_consistency(ansatz, n, layer_list, J, of, out_path, meta, out);
        }
        if (sub == bp) {
            return cmd_barren_plateau(ansatz, n_list, bp_layers, samples, mode, J, of, out_path,
                                      meta, out);
        }
        if (sub == sl) {
            return cmd_scaling(ansatz, scaling_n, tol, max_layers, J, of, out_path, meta, out);
        }
        return cmd_counts(ansatz, n, layers, out_path, meta, out);
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace xyzhea
