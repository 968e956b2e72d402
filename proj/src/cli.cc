// Copyright 2026 The qcss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcss/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

#include "qcss/ftprep.h"
#include "qcss/oracle.h"
#include "qcss/registry.h"

namespace qcss {

namespace {

using ordered_json = nlohmann::ordered_json;

struct NoiseFlags {
    bool idle = false;
    bool correlated_add = false;
    std::string channel = "depolarizing";

    NoiseModel model(double eps) const {
        NoiseModel m;
        m.epsilon = eps;
        m.idle = idle;
        m.correlated_add = correlated_add;
        m.channel = parse_channel(channel);
        m.validate();
        return m;
    }
    ordered_json json() const {
        return {{"idle", idle}, {"correlated_add", correlated_add}, {"channel", channel}};
    }
};

void add_noise_flags(CLI::App *cmd, NoiseFlags &nf) {
    cmd->add_flag("--idle", nf.idle, "Fault every live qudit left idle in a time step");
    cmd->add_flag("--correlated-add", nf.correlated_add, "One two-qudit fault per ADD instead of two single ones");
    cmd->add_option("--channel", nf.channel, "Fault channel: depolarizing, x or z")->capture_default_str();
}

std::vector<double> parse_epsilons(const std::string &text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size() || !(v >= 0 && v <= 1)) {
            throw std::invalid_argument("invalid epsilon `" + item + "`: expected a number in [0, 1]");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("no epsilon values given");
    }
    return out;
}

/// Writes to the named file, or to `fallback` when the name is empty.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::invalid_argument("cannot open `" + path + "` for writing");
            }
            out_ = &file_;
        }
    }
    std::ostream &stream() {
        return *out_;
    }

   private:
    std::ofstream file_;
    std::ostream *out_;
};

CssCode css_of(const std::string &selector) {
    return CssCode::from_classical(resolve_code(selector));
}

std::string bool_str(bool b) {
    return b ? "true" : "false";
}

void print_matrix(std::ostream &out, const Matrix &m, std::uint32_t q) {
    for (std::size_t r = 0; r < m.rows(); r++) {
        out << "  " << vec_str(m.row(r), q) << "\n";
    }
}

// ---- code --------------------------------------------------------------------

int cmd_code_info(const std::string &sel, std::ostream &out) {
    LinearCode c = resolve_code(sel);
    out << "name: " << c.name() << "\n";
    out << "field: " << c.field().descriptor() << "\n";
    out << "params: " << c.params() << "\n";
    out << "generator:\n";
    print_matrix(out, c.generator(), c.field().q());
    out << "parity-check:\n";
    print_matrix(out, c.parity_check(), c.field().q());
    return kExitOk;
}

int cmd_code_check(const std::string &sel, std::ostream &out) {
    LinearCode c = resolve_code(sel);
    std::size_t d = c.min_distance();
    out << "code: " << c.name() << " " << c.params() << "\n";
    out << "perfect=" << bool_str(is_perfect(c)) << "\n";
    out << "weakly-self-dual=" << bool_str(contains_dual(c)) << "\n";
    out << "d=" << d << "\n";
    out << "t=" << (d - 1) / 2 << "\n";
    return kExitOk;
}

// ---- css ---------------------------------------------------------------------

int cmd_css_build(const std::string &sel, std::ostream &out) {
    CssCode code = css_of(sel);
    std::uint32_t q = code.field().q();
    out << "code: " << code.name() << " " << code.params() << "\n";
    out << "t=" << code.t() << "\n";
    out << "perfect=" << bool_str(is_perfect(code.base())) << "\n";
    out << "x-stabilizers:\n";
    for (const auto &p : code.x_stabilizers()) {
        out << "  " << p.str() << "\n";
    }
    out << "z-stabilizers:\n";
    for (const auto &p : code.z_stabilizers()) {
        out << "  " << p.str() << "\n";
    }
    out << "D:\n";
    print_matrix(out, code.d_matrix(), q);
    out << "logical-x:\n";
    for (const auto &p : code.logical_x()) {
        out << "  " << p.str() << "\n";
    }
    out << "logical-z:\n";
    for (const auto &p : code.logical_z()) {
        out << "  " << p.str() << "\n";
    }
    return kExitOk;
}

// ---- circuit / run -------------------------------------------------------------

int cmd_circuit_emit(const std::string &sel, const std::string &kind, const std::string &order,
                     const std::string &path, std::ostream &out) {
    CssCode code = css_of(sel);
    Sink sink(path, out);
    if (kind == "encoder") {
        write_circuit(sink.stream(), encoding_circuit(code));
    } else if (kind == "prep") {
        write_circuit(sink.stream(), build_prep_circuit(code, parse_order(order)).circuit);
    } else if (kind == "teleport") {
        write_circuit(sink.stream(), build_teleport_circuit(code).circuit);
    } else {
        throw std::invalid_argument("unknown circuit kind `" + kind + "` (encoder, prep, teleport)");
    }
    return kExitOk;
}

int cmd_run(const std::string &circuit_path, const std::string &sel, double eps, std::uint64_t trials,
            std::uint64_t seed, const NoiseFlags &nf, std::ostream &out) {
    std::optional<CssCode> code;
    if (!sel.empty()) {
        code = css_of(sel);
    }
    auto resolve = [&](const std::string &label, std::size_t size) -> Matrix {
        if (label == "none") {
            return Matrix(0, size);
        }
        if (label == "full") {
            return Matrix::identity(size);
        }
        if (!code) {
            throw std::invalid_argument("block support `" + label + "` needs --code");
        }
        if (label == "perp") {
            return code->g_perp();
        }
        if (label == "c") {
            return code->h_perp();
        }
        throw std::invalid_argument("unknown block support `" + label + "`");
    };
    std::ifstream in(circuit_path);
    if (!in) {
        throw std::invalid_argument("cannot read circuit `" + circuit_path + "`");
    }
    Circuit c = read_circuit(in, resolve);
    NoiseModel noise = nf.model(eps);
    Schedule s = Schedule::build(c, noise);
    out << "# qcss " << kVersion << " run\n";
    out << "# circuit: " << circuit_path << " qudits=" << c.n_qudits() << " gates=" << c.gates().size()
        << " sites=" << s.sites.size() << "\n";
    out << "# noise: " << noise.str() << "\n";
    out << "# seed: " << seed << "\n";
    for (std::uint64_t i = 0; i < trials; i++) {
        Rng rng(stream_seed(seed, i));
        auto faults = sample_faults(s, noise, rng);
        FrameState st = run_frame(c, s, faults, &rng);
        out << "trial " << i << " faults=" << faults.size() << "\n";
        for (std::size_t b = 0; b < c.blocks().size(); b++) {
            out << "  " << c.blocks()[b].name << " ";
            if (st.block_words[b].empty()) {
                out << "-";
            } else {
                out << vec_str(st.block_words[b], c.field().q());
            }
            out << "\n";
        }
    }
    return kExitOk;
}

// ---- oracle --------------------------------------------------------------------

int cmd_oracle_verify(const std::string &sel, const std::string &checks_text, std::size_t samples,
                      std::uint64_t seed, std::ostream &out) {
    CssCode code = css_of(sel);
    out << "code: " << code.name() << " " << code.params() << "\n";
    bool all_ok = true;
    auto report = [&](const std::string &name, bool ok, const std::string &detail) {
        out << (ok ? "PASS " : "FAIL ") << name << " " << detail << "\n";
        all_ok = all_ok && ok;
    };
    auto run_check = [&](const std::string &check) {
        if (check == "eq2") {
            StateVector enc = simulate_dense(encoding_circuit(code));
            StateVector ref = build_codeword(code, Vec(code.k_logical(), 0));
            double dev = exact_distance(enc, ref);
            report(check, dev <= 1e-10, fmt::format("max_deviation={:.3g}", dev));
        } else if (check == "conjugation") {
            ConjugationReport r = conjugation_check(code.field_ptr());
            report(check, r.mismatches == 0,
                   fmt::format("checked={} mismatches={} max_deviation={:.3g}", r.checked, r.mismatches,
                               r.max_deviation));
        } else if (check == "theorem2") {
            if (!is_perfect(code.base())) {
                out << "SKIP theorem2 base code is not perfect\n";
                return;
            }
            const Field &f = code.field();
            std::size_t n = code.n();
            StateVector zero = build_codeword(code, Vec(code.k_logical(), 0));
            std::size_t tested = 0;
            std::size_t failures = 0;
            std::size_t exact = 0;
            double worst = 0;
            auto test = [&](const Vec &v) {
                Theorem2Witness w = theorem2_witness(code, v, &zero);
                tested++;
                exact += w.phase_exact;
                worst = std::max(worst, w.deviation);
                failures += hamming_weight(w.witness) > code.t() || w.deviation > 1e-10;
            };
            double bits = static_cast<double>(n) * std::log2(static_cast<double>(f.q()));
            if (bits <= 16) {
                for (std::size_t w = code.t() + 1; w <= n; w++) {
                    for_each_weight_vector(n, f.q(), w, [&](std::span<const elem_t> v, std::span<const std::size_t>) {
                        test(Vec(v.begin(), v.end()));
                        return true;
                    });
                }
            } else {
                Rng rng(seed);
                while (tested < samples) {
                    Vec v(n);
                    for (auto &e : v) {
                        e = static_cast<elem_t>(rng.below(f.q()));
                    }
                    if (hamming_weight(v) > code.t()) {
                        test(v);
                    }
                }
            }
            report(check, failures == 0,
                   fmt::format("tested={} failures={} phase_exact={} max_deviation={:.3g}", tested, failures, exact,
                               worst));
        } else if (check == "dualsum") {
            DualSumReport r = dual_sum_check(code.base());
            report(check, r.ok, fmt::format("checked={} max_deviation={:.3g}", r.checked, r.max_deviation));
        } else if (check == "teleport") {
            if (code.k_logical() != 1) {
                out << "SKIP teleport needs K = 1\n";
                return;
            }
            const double h = std::numbers::sqrt2 / 2;
            double worst = 1;
            std::size_t branches = 0;
            for (auto [a, b] : {std::pair<amp_t, amp_t>{1, 0}, {h, h}, {h, amp_t(0, h)}}) {
                TeleportDenseReport r = teleport_encode_dense(code, a, b);
                worst = std::min(worst, r.min_fidelity);
                branches += r.branches;
            }
            report(check, std::abs(1 - worst) <= 1e-9,
                   fmt::format("branches={} min_fidelity={:.12f}", branches, worst));
        } else {
            throw std::invalid_argument("unknown oracle check `" + check +
                                        "` (eq2, conjugation, theorem2, dualsum, teleport)");
        }
    };
    std::stringstream list(checks_text);
    std::string check;
    while (std::getline(list, check, ',')) {
        // Size guards mark a check as out of reach, not as failed.
        try {
            run_check(check);
        } catch (const std::length_error &e) {
            out << "SKIP " << check << " " << e.what() << "\n";
        }
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

// ---- faults --------------------------------------------------------------------

int cmd_faults_enumerate(const std::string &sel, const std::string &order_text, bool teleport, const NoiseFlags &nf,
                         std::ostream &out) {
    CssCode code = css_of(sel);
    NoiseModel noise = nf.model(0.0);
    out << "# qcss " << kVersion << " faults enumerate\n";
    out << "# code: " << code.name() << " " << code.params() << " t=" << code.t() << "\n";
    out << "# noise: " << noise.str() << "\n";
    if (teleport) {
        TeleportFrameReport r = teleport_single_faults(code, noise);
        out << "# network: teleport\n";
        out << "faults=" << r.faults << " strict_ok=" << r.strict_ok << " equivalent_ok=" << r.equivalent_ok << "\n";
        for (const auto &v : r.violations) {
            out << "violation: " << v << "\n";
        }
        return r.equivalent_ok == r.faults ? kExitOk : kExitCheckFailed;
    }
    PrepOrder order = order_text.empty() ? PrepStrategy::for_code(code).order : parse_order(order_text);
    PrepStrategy{&code, order}.validate();
    SoundnessReport r = single_fault_soundness(code, order, noise);
    out << "# network: " << order_name(order) << "\n";
    out << "sites=" << r.sites << " faults=" << r.faults << " accepted=" << r.accepted
        << " violations=" << r.violations << "\n";
    for (const auto &v : r.examples) {
        out << "violation: " << v << "\n";
    }
    return r.violations == 0 ? kExitOk : kExitCheckFailed;
}

// ---- ftprep --------------------------------------------------------------------

struct FtprepArgs {
    std::string code;
    std::string eps = "0.002,0.005,0.01,0.02";
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::string order;
    std::string out;
    std::string format = "csv";
    std::string gnuplot;
    unsigned workers = 1;
    bool no_batch = false;
    NoiseFlags noise;
};

std::string num(double v) {
    return fmt::format("{:.8g}", v);
}

int cmd_ftprep_run(const FtprepArgs &a, std::ostream &out) {
    CssCode code = css_of(a.code);
    PrepOrder order = a.order.empty() ? PrepStrategy::for_code(code).order : parse_order(a.order);
    PrepStrategy strategy{&code, order};
    strategy.validate();
    std::vector<double> eps = parse_epsilons(a.eps);
    if (a.format != "csv" && a.format != "json") {
        throw std::invalid_argument("unknown format `" + a.format + "` (csv, json)");
    }
    if (!a.gnuplot.empty() && a.out.empty()) {
        throw std::invalid_argument("--gnuplot needs --out so the script can reference the data file");
    }
    McOptions opt;
    opt.noise = a.noise.model(0.0);
    opt.workers = std::max(1u, a.workers);
    opt.batch = !a.no_batch;
    McResult res = montecarlo_scaling(strategy, eps, a.trials, a.seed, opt);

    // Worker count is deliberately absent: it does not change the results.
    ordered_json config = {{"command", "ftprep run"},
                           {"code", a.code},
                           {"order", std::string(order_name(order))},
                           {"eps", eps},
                           {"trials", a.trials},
                           {"seed", a.seed},
                           {"noise", a.noise.json()},
                           {"batch", opt.batch}};
    Sink sink(a.out, out);
    std::ostream &o = sink.stream();
    if (a.format == "json") {
        ordered_json doc = {{"tool", "qcss"}, {"version", std::string(kVersion)}, {"config", config},
                            {"code", code.params()}, {"seed", a.seed}};
        ordered_json pts = ordered_json::array();
        for (const auto &p : res.points) {
            pts.push_back({{"epsilon", p.epsilon},
                           {"trials", p.trials},
                           {"accepted", p.accepted},
                           {"failures", p.failures},
                           {"p_fail", p.p_fail},
                           {"ci_lo", p.ci_lo},
                           {"ci_hi", p.ci_hi},
                           {"stderr", p.stderr_p},
                           {"accept_rate", p.accept_rate},
                           {"x_failures", p.x_failures},
                           {"z_failures", p.z_failures},
                           {"p_fail_unconditional", p.p_fail_unconditional}});
        }
        doc["points"] = pts;
        doc["fit"] = {{"slope", res.slope ? ordered_json(*res.slope) : ordered_json(nullptr)},
                      {"slope_stderr", res.slope_stderr},
                      {"points_fitted", res.points_fitted}};
        o << doc.dump(2) << "\n";
    } else {
        o << "# qcss " << kVersion << "\n";
        o << "# config: " << config.dump() << "\n";
        o << "# code: " << code.name() << " " << code.params() << "\n";
        o << "# seed: " << a.seed << "\n";
        o << "epsilon,trials,accepted,failures,p_fail,ci_lo,ci_hi,stderr,accept_rate,x_failures,z_failures,"
             "p_fail_unconditional\n";
        for (const auto &p : res.points) {
            o << num(p.epsilon) << "," << p.trials << "," << p.accepted << "," << p.failures << "," << num(p.p_fail)
              << "," << num(p.ci_lo) << "," << num(p.ci_hi) << "," << num(p.stderr_p) << "," << num(p.accept_rate)
              << "," << p.x_failures << "," << p.z_failures << "," << num(p.p_fail_unconditional) << "\n";
        }
        if (res.slope) {
            o << "# fit: slope=" << num(*res.slope) << " stderr=" << num(res.slope_stderr)
              << " points=" << res.points_fitted << "\n";
        } else {
            o << "# fit: none (fewer than two points with " << opt.min_failures_for_fit << " failures)\n";
        }
    }
    if (!a.gnuplot.empty()) {
        std::ofstream g(a.gnuplot);
        if (!g) {
            throw std::invalid_argument("cannot open `" + a.gnuplot + "` for writing");
        }
        g << "# qcss " << kVersion << " plot for " << a.out << "\n";
        g << "set datafile separator ','\nset logscale xy\nset key left top\n";
        g << "set xlabel 'epsilon'\nset ylabel 'p_fail | accepted'\n";
        g << "set title '" << code.name() << " " << code.params() << " " << order_name(order) << "'\n";
        if (a.format == "csv") {
            g << "f(x) = c * x**s\nc = 1; s = " << code.t() + 1 << "\n";
            g << "fit f(x) '" << a.out << "' using 1:5 via c, s\n";
            g << "plot '" << a.out << "' using 1:5:6:7 with yerrorbars title 'Monte Carlo', f(x) title 'fit'\n";
        } else {
            g << "# the JSON output is not plottable directly; rerun with --format csv\n";
        }
    }
    return kExitOk;
}

// ---- cost ----------------------------------------------------------------------

int cmd_cost(const std::string &sel, std::ostream &out) {
    std::vector<std::string> names = sel.empty() ? builtin_css_catalogue() : std::vector<std::string>{sel};
    out << fmt::format("{:<16} {:<14} {:>5} {:>5} {:>10} {:>11} {:>6} {}\n", "code", "params", "g_X", "g_Z",
                       "N_t_steane", "N_t_present", "rounds", "g_Z>=g_X");
    bool ok = true;
    for (const auto &name : names) {
        CssCode code = css_of(name);
        CostReport r = cost_report(code);
        bool lemma = r.g_z >= r.g_x;
        ok = ok && lemma;
        out << fmt::format("{:<16} {:<14} {:>5} {:>5} {:>10} {:>11} {:>6} {}\n", name, code.params(), r.g_x, r.g_z,
                           r.n_t_steane, r.n_t_present, r.rounds, bool_str(lemma));
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qcss: q-ary CSS codes and fault-tolerant |0_E> preparation"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::function<int()> action;

    auto *code_cmd = app.add_subcommand("code", "Inspect classical codes")->require_subcommand(1);
    std::string code_sel;
    auto *code_info = code_cmd->add_subcommand("info", "Generator, parity check and parameters");
    code_info->add_option("code", code_sel, "Builtin name or code file")->required();
    code_info->callback([&] { action = [&] { return cmd_code_info(code_sel, out); }; });
    auto *code_check = code_cmd->add_subcommand("check", "Perfectness, dual containment, d and t");
    code_check->add_option("code", code_sel, "Builtin name or code file")->required();
    code_check->callback([&] { action = [&] { return cmd_code_check(code_sel, out); }; });

    auto *css_cmd = app.add_subcommand("css", "Build CSS codes")->require_subcommand(1);
    auto *css_build = css_cmd->add_subcommand("build", "Stabilizers, D and logical operators");
    css_build->add_option("code", code_sel, "Builtin name or code file")->required();
    css_build->callback([&] { action = [&] { return cmd_css_build(code_sel, out); }; });

    auto *circuit_cmd = app.add_subcommand("circuit", "Emit circuits")->require_subcommand(1);
    std::string kind = "encoder";
    std::string order;
    std::string out_path;
    auto *emit = circuit_cmd->add_subcommand("emit", "Write a circuit in the text interchange format");
    emit->add_option("--code", code_sel, "Builtin name or code file")->required();
    emit->add_option("--kind", kind, "encoder, prep or teleport")->capture_default_str();
    emit->add_option("--order", order, "Preparation order for --kind prep (raw, fig1, fig2+fig1, fig1+fig2)");
    emit->add_option("--out", out_path, "Output file (default stdout)");
    emit->callback([&] {
        action = [&] { return cmd_circuit_emit(code_sel, kind, order.empty() ? "fig1" : order, out_path, out); };
    });

    std::string circuit_path;
    double run_eps = 0;
    std::uint64_t run_trials = 1;
    std::uint64_t seed = 1;
    NoiseFlags nf;
    auto *run = app.add_subcommand("run", "Sample noisy frames of a circuit file");
    run->add_option("circuit", circuit_path, "Circuit file")->required();
    run->add_option("--code", code_sel, "Code supplying block supports (perp, c)");
    run->add_option("--eps", run_eps, "Fault probability per site")->capture_default_str();
    run->add_option("--trials", run_trials, "Number of trials")->capture_default_str();
    run->add_option("--seed", seed, "Random seed")->capture_default_str();
    add_noise_flags(run, nf);
    run->callback([&] {
        action = [&] { return cmd_run(circuit_path, code_sel, run_eps, run_trials, seed, nf, out); };
    });

    auto *oracle_cmd = app.add_subcommand("oracle", "Dense state-vector checks")->require_subcommand(1);
    std::string checks = "eq2,conjugation,theorem2,dualsum,teleport";
    std::size_t samples = 500;
    auto *verify = oracle_cmd->add_subcommand("verify", "Run the dense checks");
    verify->add_option("--code", code_sel, "Builtin name or code file")->required();
    verify->add_option("--checks", checks, "Comma-separated checks")->capture_default_str();
    verify->add_option("--samples", samples, "Random samples for theorem2 on large codes")->capture_default_str();
    verify->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
    verify->callback([&] { action = [&] { return cmd_oracle_verify(code_sel, checks, samples, seed, out); }; });

    auto *faults_cmd = app.add_subcommand("faults", "Single-fault analysis")->require_subcommand(1);
    bool teleport = false;
    auto *enumerate = faults_cmd->add_subcommand("enumerate", "Inject every single fault and check the residual");
    enumerate->add_option("--code", code_sel, "Builtin name or code file")->required();
    enumerate->add_option("--order", order, "Preparation order (default: by perfectness)");
    enumerate->add_flag("--teleport", teleport, "Analyse the teleportation encoder instead");
    add_noise_flags(enumerate, nf);
    enumerate->callback([&] { action = [&] { return cmd_faults_enumerate(code_sel, order, teleport, nf, out); }; });

    auto *ftprep_cmd = app.add_subcommand("ftprep", "Monte Carlo of fault-tolerant preparation")->require_subcommand(1);
    FtprepArgs fa;
    auto *ft_run = ftprep_cmd->add_subcommand("run", "Failure rate against epsilon");
    ft_run->add_option("--code", fa.code, "Builtin name or code file")->required();
    ft_run->add_option("--eps", fa.eps, "Comma-separated fault probabilities")->capture_default_str();
    ft_run->add_option("--trials", fa.trials, "Trials per epsilon")->capture_default_str();
    ft_run->add_option("--seed", fa.seed, "Random seed")->capture_default_str();
    ft_run->add_option("--order", fa.order, "raw, fig1, fig2+fig1 or fig1+fig2 (default: by perfectness)");
    ft_run->add_option("--out", fa.out, "Output file (default stdout)");
    ft_run->add_option("--format", fa.format, "csv or json")->capture_default_str();
    ft_run->add_option("--gnuplot", fa.gnuplot, "Also write a gnuplot script here");
    ft_run->add_option("--workers", fa.workers, "Worker threads")->capture_default_str();
    ft_run->add_flag("--no-batch", fa.no_batch, "Disable the bit-sliced q = 2 simulator");
    add_noise_flags(ft_run, fa.noise);
    ft_run->callback([&] { action = [&] { return cmd_ftprep_run(fa, out); }; });

    auto *cost = app.add_subcommand("cost", "Gate and time-step costs against Steane's scheme");
    std::string cost_sel;
    cost->add_option("--code", cost_sel, "Builtin name or code file (default: every builtin CSS code)");
    cost->callback([&] { action = [&] { return cmd_cost(cost_sel, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitInvalid;
    }
    try {
        return action ? action() : kExitInvalid;
    } catch (const std::exception &e) {
        err << "qcss: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace qcss
