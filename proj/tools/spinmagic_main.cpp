// Copyright 2026 The spinmagic Authors
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

// Command-line front end: sweep commands that reproduce the figure data,
// state I/O, and scalar diagnostics. Emits CSV or JSON tables with a
// stable header contract; runs are deterministic for a fixed
// configuration (row order is index-driven at any thread count).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "spinmagic/husimi.hpp"
#include "spinmagic/io.hpp"
#include "spinmagic/magic_metrics.hpp"
#include "spinmagic/parallel.hpp"
#include "spinmagic/protocols.hpp"
#include "spinmagic/readout.hpp"

namespace sm = spinmagic;
using nlohmann::json;

namespace {

constexpr int kExactSymmetricLimit = 200;
constexpr int kExactCoherentLimit = 400;
constexpr int kOracleLimit = 14;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "a,b,c" or "a..b" or "a..b:step" (inclusive; default step 100).
std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(item));
            continue;
        }
        int a = std::stoi(item.substr(0, dots));
        std::string rest = item.substr(dots + 2);
        int step = 100;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            step = std::stoi(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        int b = std::stoi(rest);
        if (step <= 0 || b < a) throw UsageError("bad range " + item);
        for (int v = a; v <= b; v += step) out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty n list");
    for (int v : out)
        if (v < 2 || v % 2 != 0)
            throw UsageError("n values must be even and positive");
    return out;
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config " + path);
    json j;
    in >> j;
    if (!j.is_object()) throw UsageError("config must be a JSON object");
    return j;
}

template <typename T>
void config_override(const json& cfg, const char* key, T& value) {
    if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

double sentinel_xi2(const sm::SymmetricState& s, bool& ok) {
    try {
        ok = true;
        return sm::squeezing_parameter(s);
    } catch (const std::domain_error&) {
        ok = false;
        return 0.0;
    }
}

/// chi t on the descending branch with xi^2(t) = target.
double solve_fixed_xi2(int n, sm::TwistProtocol proto, double target,
                       const sm::SqueezingOptimum& best) {
    if (target <= best.xi2_best || target >= 1.0)
        throw UsageError("fixed xi2 must lie in (xi2_best, 1)");
    auto xi2_at = [&](double t) {
        sm::SymmetricState x0 = sm::plus_x_state(n);
        return proto == sm::TwistProtocol::OAT
                   ? sm::squeezing_parameter(sm::evolve_oat(x0, t))
                   : sm::squeezing_parameter(sm::evolve_tact(x0, t));
    };
    double lo = best.t_best * 1e-6, hi = best.t_best;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * best.t_best; ++it) {
        double mid = 0.5 * (lo + hi);
        (xi2_at(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct OutputOptions {
    std::string out = "-";
    std::string format = "csv";
};

void emit(const sm::Table& t, const OutputOptions& o) {
    if (o.format != "csv" && o.format != "json")
        throw UsageError("format must be csv or json");
    sm::write_table(o.out, t, o.format == "json");
}

// ---------------------------------------------------------------- commands

int cmd_oat_sweep(const json& cfg, int n, double q, double t_max, int steps,
                  int exact_below, OutputOptions out) {
    config_override(cfg, "n", n);
    config_override(cfg, "q", q);
    config_override(cfg, "t_max", t_max);
    config_override(cfg, "steps", steps);
    config_override(cfg, "exact_below", exact_below);
    config_override(cfg, "out", out.out);
    config_override(cfg, "format", out.format);
    if (n < 2 || n % 2 != 0) throw UsageError("n must be even");
    if (steps <= 0) throw UsageError("steps must be positive");
    if (t_max <= 0.0) throw UsageError("t-max must be positive");
    bool exact = n <= exact_below;
    if (exact && n > kExactSymmetricLimit)
        throw UsageError("exact SRE above n = 200 refused (cost guard)");

    sm::Table tab;
    tab.header = {"chi_t", "m2_approx", "m2_exact", "xi2", "log2_E", "Q"};
    tab.rows.resize(steps);
    sm::SymmetricState x0 = sm::plus_x_state(n);
    for (int i = 0; i < steps; ++i) {
        double t = t_max * (i + 1) / steps;
        sm::SymmetricState s = sm::evolve_oat(x0, t);
        std::vector<std::optional<double>> row(6);
        row[0] = t;
        row[1] = sm::sre_approx(sm::overlap_sextet(s), q, n);
        if (exact) row[2] = sm::sre_exact_symmetric(s, q);
        bool ok;
        double xi2 = sentinel_xi2(s, ok);
        if (ok) row[3] = xi2;
        sm::BellResult b = sm::oat_bell_correlator(n, t, sm::BellAxis::X);
        if (std::isfinite(b.log2_e)) {
            row[4] = b.log2_e;
            row[5] = b.q;
        }
        tab.rows[i] = std::move(row);
    }
    emit(tab, out);
    return 0;
}

int cmd_scaling(const json& cfg, std::string protocol, std::string n_list,
                bool best, double fixed_xi2, double q, int exact_below,
                OutputOptions out) {
    config_override(cfg, "protocol", protocol);
    config_override(cfg, "n_list", n_list);
    config_override(cfg, "best", best);
    config_override(cfg, "fixed_xi2", fixed_xi2);
    config_override(cfg, "q", q);
    config_override(cfg, "exact_below", exact_below);
    config_override(cfg, "out", out.out);
    config_override(cfg, "format", out.format);
    sm::TwistProtocol proto;
    if (protocol == "oat")
        proto = sm::TwistProtocol::OAT;
    else if (protocol == "tact")
        proto = sm::TwistProtocol::TACT;
    else
        throw UsageError("protocol must be oat or tact");
    if (!best && fixed_xi2 <= 0.0)
        throw UsageError("pass --best or --fixed-xi2 V");
    std::vector<int> ns = parse_n_list(n_list);

    sm::Table tab;
    tab.header = {"n", "t_used", "xi2", "m2_approx", "m2_exact"};
    for (int n : ns) {
        sm::SqueezingOptimum opt = sm::find_best_squeezing(n, proto);
        double t = best ? opt.t_best : solve_fixed_xi2(n, proto, fixed_xi2, opt);
        sm::SymmetricState s =
            proto == sm::TwistProtocol::OAT
                ? sm::evolve_oat(sm::plus_x_state(n), t)
                : sm::evolve_tact(sm::plus_x_state(n), t);
        std::vector<std::optional<double>> row(5);
        row[0] = n;
        row[1] = t;
        row[2] = sm::squeezing_parameter(s);
        row[3] = sm::sre_approx(sm::overlap_sextet(s), q, n);
        if (n <= exact_below && n <= kExactSymmetricLimit)
            row[4] = sm::sre_exact_symmetric(s, q);
        tab.rows.push_back(std::move(row));
    }
    emit(tab, out);
    return 0;
}

int cmd_kitten(const json& cfg, std::string n_list, std::string heads_list,
               double q, int exact_below, OutputOptions out) {
    config_override(cfg, "n_list", n_list);
    config_override(cfg, "heads", heads_list);
    config_override(cfg, "q", q);
    config_override(cfg, "exact_below", exact_below);
    config_override(cfg, "out", out.out);
    config_override(cfg, "format", out.format);
    std::vector<int> ns = parse_n_list(n_list);
    std::vector<int> heads = parse_n_list(heads_list);

    sm::Table tab;
    tab.header = {"n", "heads", "m2_approx", "m2_exact", "log2_E", "Q"};
    for (int n : ns)
        for (int h : heads) {
            if (h > n) continue;
            sm::SymmetricState k = sm::kitten_state(n, h);
            std::vector<std::optional<double>> row(6);
            row[0] = n;
            row[1] = h;
            row[2] = sm::sre_approx(sm::overlap_sextet(k), q, n);
            if (n <= exact_below) {
                if (n > kExactCoherentLimit)
                    throw UsageError(
                        "exact coherent SRE above n = 400 refused (cost "
                        "guard)");
                row[3] =
                    sm::sre_exact_coherent(sm::kitten_superposition(n, h), q);
            }
            sm::BellResult b =
                sm::oat_bell_correlator(n, M_PI / h, sm::BellAxis::X);
            row[4] = b.log2_e;
            row[5] = b.q;
            tab.rows.push_back(std::move(row));
        }
    emit(tab, out);
    return 0;
}

int cmd_dicke(const json& cfg, std::string n_list, double q, int exact_below,
              OutputOptions out) {
    config_override(cfg, "n_list", n_list);
    config_override(cfg, "q", q);
    config_override(cfg, "exact_below", exact_below);
    config_override(cfg, "out", out.out);
    config_override(cfg, "format", out.format);
    std::vector<int> ns = parse_n_list(n_list);
    sm::Table tab;
    tab.header = {"n", "m2_approx", "m2_exact", "log2_E", "Q"};
    for (int n : ns) {
        sm::SymmetricState d = sm::dicke_state(n, 0);
        std::vector<std::optional<double>> row(5);
        row[0] = n;
        row[1] = sm::sre_approx(sm::overlap_sextet(d), q, n);
        if (n <= exact_below) {
            if (n > kExactSymmetricLimit)
                throw UsageError("exact SRE above n = 200 refused (cost guard)");
            row[2] = sm::sre_exact_symmetric(d, q);
        }
        sm::BellResult b = sm::bell_correlator(d, sm::BellAxis::X);
        row[3] = b.log2_e;
        row[4] = b.q;
        tab.rows.push_back(std::move(row));
    }
    emit(tab, out);
    return 0;
}

int cmd_gghz(const json& cfg, int n, int eps_steps, double q,
             OutputOptions out) {
    config_override(cfg, "n", n);
    config_override(cfg, "eps_steps", eps_steps);
    config_override(cfg, "q", q);
    config_override(cfg, "out", out.out);
    config_override(cfg, "format", out.format);
    if (eps_steps < 2) throw UsageError("eps grid needs at least 2 points");
    if (n > kExactCoherentLimit)
        throw UsageError("exact coherent SRE above n = 400 refused");
    sm::Table tab;
    tab.header = {"two_epsilon", "m2_exact", "m2_approx",
                  "log2_E",      "Q",        "q_over_max"};
    for (int i = 0; i < eps_steps; ++i) {
        double e2 = M_PI * i / (eps_steps - 1);
        sm::CoherentSuperposition g = sm::generalized_ghz(n, e2);
        sm::SymmetricState st = g.to_state();
        std::vector<std::optional<double>> row(6);
        row[0] = e2;
        row[1] = sm::sre_exact_coherent(g, q);
        row[2] = sm::sre_approx(sm::overlap_sextet(st), q, n);
        sm::BellResult b = sm::bell_correlator(st, sm::BellAxis::Z);
        if (std::isfinite(b.log2_e)) {
            row[3] = b.log2_e;
            row[4] = b.q;
            row[5] = b.q / (n - 2.0);
        }
        tab.rows.push_back(std::move(row));
    }
    emit(tab, out);
    return 0;
}

int cmd_readout(const json& cfg, int n, double chi_t, double theta,
                std::uint64_t shots, std::uint64_t seed, std::string mode,
                OutputOptions out) {
    config_override(cfg, "n", n);
    config_override(cfg, "chi_t", chi_t);
    config_override(cfg, "theta", theta);
    config_override(cfg, "shots", shots);
    config_override(cfg, "seed", seed);
    config_override(cfg, "mode", mode);
    config_override(cfg, "out", out.out);
    config_override(cfg, "format", out.format);
    sm::CalibrationMode cmode;
    if (mode == "paper-literal")
        cmode = sm::CalibrationMode::PaperLiteral;
    else if (mode == "analytic-gain")
        cmode = sm::CalibrationMode::AnalyticGain;
    else
        throw UsageError("mode must be paper-literal or analytic-gain");

    sm::SymmetricState prepared = sm::evolve_oat(sm::plus_x_state(n), chi_t);
    sm::OverlapSextet truth = sm::overlap_sextet(prepared);
    sm::Table tab;
    tab.header = {"target",   "re_est",  "im_est", "sigma_re",
                  "sigma_im", "re_true", "im_true"};
    for (int t = 0; t < 6; ++t) {
        sm::Cardinal target = static_cast<sm::Cardinal>(t);
        sm::CalibrationGain gain = sm::calibrate(n, target, theta, cmode);
        sm::ReadoutPlan plan;
        plan.n_qubits = n;
        plan.chi_t = chi_t;
        plan.kick_angle = theta;
        plan.target = target;
        plan.shots = shots;
        plan.seed = seed;
        sm::OverlapEstimate est = sm::estimate_overlap(plan, gain);
        sm::Complex tv = truth.get(target).to_complex();
        tab.rows.push_back({double(t), est.value.real(), est.value.imag(),
                            est.sigma_re, est.sigma_im, tv.real(), tv.imag()});
    }
    emit(tab, out);
    return 0;
}

int cmd_husimi(const json& cfg, std::string state_path, std::string grid,
               OutputOptions out) {
    config_override(cfg, "state", state_path);
    config_override(cfg, "grid", grid);
    config_override(cfg, "out", out.out);
    config_override(cfg, "format", out.format);
    auto x = grid.find('x');
    if (x == std::string::npos) throw UsageError("grid must look like 181x361");
    int p = std::stoi(grid.substr(0, x));
    int qn = std::stoi(grid.substr(x + 1));
    sm::StoredState stored = sm::read_state_file(state_path);
    sm::SymmetricState st =
        std::holds_alternative<sm::SymmetricState>(stored)
            ? std::get<sm::SymmetricState>(stored)
            : std::get<sm::CoherentSuperposition>(stored).to_state();
    sm::HusimiGrid g = sm::husimi(st, p, qn);
    sm::Table tab;
    tab.header = {"theta", "phi", "value"};
    for (size_t it = 0; it < g.thetas.size(); ++it)
        for (size_t ip = 0; ip < g.phis.size(); ++ip)
            tab.rows.push_back(
                {g.thetas[it], g.phis[ip], g.value(int(it), int(ip))});
    emit(tab, out);
    return 0;
}

int cmd_sre(const json& cfg, std::string state_path, std::string method,
            double q, OutputOptions out) {
    config_override(cfg, "state", state_path);
    config_override(cfg, "method", method);
    config_override(cfg, "q", q);
    config_override(cfg, "out", out.out);
    config_override(cfg, "format", out.format);
    sm::StoredState stored = sm::read_state_file(state_path);
    auto as_state = [&]() {
        return std::holds_alternative<sm::SymmetricState>(stored)
                   ? std::get<sm::SymmetricState>(stored)
                   : std::get<sm::CoherentSuperposition>(stored).to_state();
    };
    double value;
    if (method == "oracle") {
        if (as_state().n_qubits() > kOracleLimit)
            throw UsageError("oracle refused above n = 14 (cost guard)");
        value = sm::sre_oracle_statevector(as_state(), q);
    } else if (method == "symmetric") {
        if (as_state().n_qubits() > kExactSymmetricLimit)
            throw UsageError("exact SRE above n = 200 refused (cost guard)");
        value = sm::sre_exact_symmetric(as_state(), q);
    } else if (method == "coherent") {
        if (!std::holds_alternative<sm::CoherentSuperposition>(stored))
            throw UsageError(
                "coherent method needs a coherent_components state file");
        value = sm::sre_exact_coherent(
            std::get<sm::CoherentSuperposition>(stored), q);
    } else if (method == "approx") {
        auto st = as_state();
        value = sm::sre_approx(sm::overlap_sextet(st), q, st.n_qubits());
    } else {
        throw UsageError("method must be oracle|symmetric|coherent|approx");
    }
    sm::Table tab;
    tab.header = {"m_q"};
    tab.rows.push_back({value});
    emit(tab, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-stabilizerness, squeezing, and Bell correlations of "
                 "symmetric twisting-protocol states"};
    app.require_subcommand(1);

    std::string config_path;
    int threads = 0;
    app.add_option("--config", config_path, "JSON config; overrides flags");
    app.add_option("--threads", threads, "worker threads (0 = auto)");

    OutputOptions out;
    int n = 100, steps = 200, exact_below = 0, eps_steps = 50;
    double q = 2.0, t_max = M_PI_2, fixed_xi2 = 0.0, chi_t = 0.05,
           theta = 0.01;
    bool best = false;
    std::string n_list = "100..1000", heads = "2,4,6,8,10", protocol = "oat",
                mode = "analytic-gain", state_path, grid = "181x361",
                method = "approx";
    std::uint64_t shots = 0, seed = 1;

    auto add_output = [&](CLI::App* c) {
        c->add_option("--out", out.out, "output path ('-' = stdout)");
        c->add_option("--format", out.format, "csv or json");
    };

    CLI::App* oat = app.add_subcommand(
        "oat-sweep", "SRE, squeezing, and Bell correlator along an OAT sweep");
    oat->add_option("--n", n);
    oat->add_option("--q", q);
    oat->add_option("--t-max", t_max);
    oat->add_option("--steps", steps);
    oat->add_option("--exact-below", exact_below,
                    "also compute exact SRE when n <= this");
    add_output(oat);

    CLI::App* sca =
        app.add_subcommand("scaling", "squeezing-time scaling over n");
    sca->add_option("--protocol", protocol);
    sca->add_option("--n-list", n_list);
    sca->add_flag("--best", best, "use the best-squeezing time");
    sca->add_option("--fixed-xi2", fixed_xi2);
    sca->add_option("--q", q);
    sca->add_option("--exact-below", exact_below);
    add_output(sca);

    CLI::App* kit = app.add_subcommand("kitten", "kitten-state diagnostics");
    kit->add_option("--n-list", n_list);
    kit->add_option("--heads", heads);
    kit->add_option("--q", q);
    kit->add_option("--exact-below", exact_below);
    add_output(kit);

    CLI::App* dic =
        app.add_subcommand("dicke", "zero-magnetization Dicke states");
    dic->add_option("--n-list", n_list);
    dic->add_option("--q", q);
    dic->add_option("--exact-below", exact_below);
    add_output(dic);

    CLI::App* ggz = app.add_subcommand("gghz", "generalized GHZ family");
    ggz->add_option("--n", n);
    ggz->add_option("--eps-grid", eps_steps);
    ggz->add_option("--q", q);
    add_output(ggz);

    CLI::App* rdo = app.add_subcommand(
        "readout", "twist-echo overlap readout simulation");
    rdo->add_option("--n", n);
    rdo->add_option("--chi-t", chi_t);
    rdo->add_option("--theta", theta);
    rdo->add_option("--shots", shots);
    rdo->add_option("--seed", seed);
    rdo->add_option("--mode", mode);
    add_output(rdo);

    CLI::App* hus = app.add_subcommand("husimi", "Husimi grid of a state");
    hus->add_option("--state", state_path)->required();
    hus->add_option("--grid", grid);
    add_output(hus);

    CLI::App* sre = app.add_subcommand("sre", "SRE of a stored state");
    sre->add_option("--state", state_path)->required();
    sre->add_option("--method", method);
    sre->add_option("--q", q);
    add_output(sre);

    // global flags (--threads, --config) remain usable after the
    // subcommand name
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        json cfg = load_config(config_path);
        config_override(cfg, "threads", threads);
        if (threads > 0) sm::set_default_thread_count(threads);
        if (oat->parsed())
            return cmd_oat_sweep(cfg, n, q, t_max, steps, exact_below, out);
        if (sca->parsed())
            return cmd_scaling(cfg, protocol, n_list, best, fixed_xi2, q,
                               exact_below, out);
        if (kit->parsed())
            return cmd_kitten(cfg, n_list, heads, q, exact_below, out);
        if (dic->parsed()) return cmd_dicke(cfg, n_list, q, exact_below, out);
        if (ggz->parsed()) return cmd_gghz(cfg, n, eps_steps, q, out);
        if (rdo->parsed())
            return cmd_readout(cfg, n, chi_t, theta, shots, seed, mode, out);
        if (hus->parsed()) return cmd_husimi(cfg, state_path, grid, out);
        if (sre->parsed()) return cmd_sre(cfg, state_path, method, q, out);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
