// sqztomo: command-line surface of the squeeze-tomography toolkit.
//
// Subcommands: tomogram, transform, dynamics, figure, verify, dump.
// Exit codes: 0 success, 1 recorded kernel discrepancy (verify only),
// 2 configuration/validation failure, 3 truncation-leakage hard failure.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "sqz/dynamics.hpp"
#include "sqz/io.hpp"
#include "sqz/kernels.hpp"
#include "sqz/special.hpp"
#include "sqz/states.hpp"
#include "sqz/tomography.hpp"
#include "sqz/verify.hpp"
#include "sqz/wigner.hpp"

namespace {

using sqz::Complex;
using sqz::OrderedJson;

constexpr int kExitConfig = 2;
constexpr int kExitTruncation = 3;

struct RunConfig {
    int cutoff = 128;
    int n_max = 40;
    std::string state = "vacuum";
    std::string lambda_spec = "0";
    std::string theta_spec = "0";
    std::string route = "oracle";
    std::string format = "json";
    std::string out;
    int x_points = 257;
    int munu_points = 81;
    double x_window = 12.0;
    double munu_window = 6.0;
    bool quick = false;
};

int env_default_cutoff() {
    if (const char* s = std::getenv("SQZTOMO_DEFAULT_CUTOFF")) {
        try {
            const int v = std::stoi(s);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 128;
}

/// "a:b:step" inclusive range, comma list, or a single number.
std::vector<double> parse_value_list(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::istringstream is(spec);
        std::string a, b, h;
        std::getline(is, a, ':');
        std::getline(is, b, ':');
        std::getline(is, h, ':');
        const double lo = std::stod(a), hi = std::stod(b);
        const double step = h.empty() ? 1.0 : std::stod(h);
        if (step <= 0.0 || hi < lo) throw std::invalid_argument("bad range spec: " + spec);
        for (double v = lo; v <= hi + 0.5 * step; v += step)
            out.push_back(std::min(v, hi));
        return out;
    }
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

OrderedJson config_json(const RunConfig& c) {
    OrderedJson j;
    j["cutoff"] = c.cutoff;
    j["n_max"] = c.n_max;
    j["state"] = c.state;
    j["lambda"] = c.lambda_spec;
    j["theta"] = c.theta_spec;
    j["route"] = c.route;
    j["format"] = c.format;
    j["x_points"] = c.x_points;
    j["munu_points"] = c.munu_points;
    j["x_window"] = c.x_window;
    j["munu_window"] = c.munu_window;
    j["quick"] = c.quick;
    return j;
}

void write_output(const RunConfig& c, const std::string& content) {
    if (c.out.empty())
        std::cout << content;
    else
        sqz::atomic_write(c.out, content);
}

/// flags > config file > defaults: overlay the config file onto `c` for every
/// key the user did not pass explicitly on the command line.
void apply_config_file(CLI::App* cmd, const std::string& path, RunConfig& c) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    OrderedJson j = OrderedJson::parse(in);
    auto overlay = [&](const char* flag, auto& field) {
        const std::string key = std::string(flag).substr(2);
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        if (j.contains(key) && (!opt || opt->count() == 0)) field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
    };
    overlay("--cutoff", c.cutoff);
    overlay("--n-max", c.n_max);
    overlay("--state", c.state);
    overlay("--lambda", c.lambda_spec);
    overlay("--theta", c.theta_spec);
    overlay("--route", c.route);
    overlay("--format", c.format);
    overlay("--out", c.out);
    overlay("--x-points", c.x_points);
    overlay("--munu-points", c.munu_points);
    // keys with '-' in the flag but '_' in JSON
    if (j.contains("n_max")) {
        const CLI::Option* opt = cmd->get_option_no_throw("--n-max");
        if (!opt || opt->count() == 0) c.n_max = j.at("n_max").get<int>();
    }
    if (j.contains("x_points")) {
        const CLI::Option* opt = cmd->get_option_no_throw("--x-points");
        if (!opt || opt->count() == 0) c.x_points = j.at("x_points").get<int>();
    }
    if (j.contains("munu_points")) {
        const CLI::Option* opt = cmd->get_option_no_throw("--munu-points");
        if (!opt || opt->count() == 0) c.munu_points = j.at("munu_points").get<int>();
    }
}

void add_common_options(CLI::App* cmd, RunConfig& c, std::string& config_path) {
    cmd->add_option("--state", c.state, "state spec: vacuum | fock:M | coherent:RE+IMj | cat:RE+IMj:+|- | thermal:T");
    cmd->add_option("--lambda", c.lambda_spec, "squeeze parameter: value, list, or a:b:step");
    cmd->add_option("--theta", c.theta_spec, "rotation angle: value, list, or a:b:step");
    cmd->add_option("--route", c.route, "computation route");
    cmd->add_option("--cutoff", c.cutoff, "Fock-space cutoff N");
    cmd->add_option("--n-max", c.n_max, "largest photon number reported");
    cmd->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", c.out, "output path (stdout when omitted)");
    cmd->add_option("--config", config_path, "JSON config file (flags take precedence)");
    cmd->add_option("--x-points", c.x_points, "quadrature nodes for the X integral");
    cmd->add_option("--munu-points", c.munu_points, "quadrature nodes per (mu, nu) axis");
    cmd->add_flag("--quick", c.quick, "reduced budgets");
}

double closed_form_tomogram(const sqz::StateSpec& spec, int n, const sqz::TomographyFrame& f,
                            int m_sum_max) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, sqz::VacuumSpec>)
                return sqz::squeeze_tomogram_vacuum(n, f.lambda);
            else if constexpr (std::is_same_v<T, sqz::FockSpec>)
                return sqz::squeeze_tomogram_fock(n, f.lambda, s.m);
            else if constexpr (std::is_same_v<T, sqz::CoherentSpec>)
                return sqz::squeeze_tomogram_coherent(n, f.lambda, f.theta, s.alpha);
            else if constexpr (std::is_same_v<T, sqz::CatSpec>)
                return sqz::squeeze_tomogram_cat(n, f.lambda, f.theta, s.alpha, s.parity);
            else
                return sqz::squeeze_tomogram_thermal(n, f.lambda, s.temperature, m_sum_max);
        },
        spec);
}

std::string tomogram_csv(const RunConfig& c, const sqz::SqueezeTomogram& tg) {
    std::ostringstream os;
    os << "# sqztomo tomogram route=" << c.route << " state=" << c.state
       << " cutoff=" << c.cutoff << "\n";
    os << "# lambda theta n W tail_mass\n";
    for (size_t f = 0; f < tg.frames.size(); ++f) {
        for (int n = 0; n <= tg.n_max; ++n)
            os << sqz::format_float(tg.frames[f].lambda) << " "
               << sqz::format_float(tg.frames[f].theta) << " " << n << " "
               << sqz::format_float(tg.values[f][n]) << " "
               << sqz::format_float(tg.tail_mass[f]) << "\n";
        os << "\n";
    }
    return os.str();
}

std::string tomogram_json(const RunConfig& c, const sqz::SqueezeTomogram& tg) {
    OrderedJson j;
    j["config"] = config_json(c);
    j["n_max"] = tg.n_max;
    j["preclip_min"] = tg.preclip_min;
    OrderedJson frames = OrderedJson::array();
    for (size_t f = 0; f < tg.frames.size(); ++f) {
        OrderedJson fj;
        fj["lambda"] = tg.frames[f].lambda;
        fj["theta"] = tg.frames[f].theta;
        fj["mu"] = tg.frames[f].mu;
        fj["nu"] = tg.frames[f].nu;
        fj["tail_mass"] = tg.tail_mass[f];
        fj["values"] = tg.values[f];
        frames.push_back(std::move(fj));
    }
    j["frames"] = std::move(frames);
    return sqz::dump_deterministic(j) + "\n";
}

int cmd_tomogram(const RunConfig& c) {
    const sqz::StateSpec spec = sqz::parse_state(c.state);
    const auto lambdas = parse_value_list(c.lambda_spec);
    const auto thetas = parse_value_list(c.theta_spec);
    std::vector<sqz::TomographyFrame> frames;
    for (double th : thetas)
        for (double la : lambdas) frames.emplace_back(la, th);

    sqz::SqueezeTomogram tg;
    if (c.route == "oracle" || c.route == "kernel_density" || c.route == "kernel_wigner" ||
        c.route == "kernel_symplectic") {
        const sqz::DensityMatrix rho = sqz::make_density(spec, c.cutoff);
        if (c.route == "oracle") {
            tg = sqz::squeeze_tomogram_oracle(rho, frames, c.n_max);
        } else {
            tg.n_max = c.n_max;
            tg.frames = frames;
            sqz::GridSpec gs;
            gs.q_min = gs.p_min = -7.0;
            gs.q_max = gs.p_max = 7.0;
            gs.q_points = gs.p_points = c.quick ? 121 : 201;
            sqz::WignerGrid wig;
            sqz::TomogramSampler sampler;
            if (c.route == "kernel_wigner") wig = sqz::wigner_from_state(rho, gs);
            if (c.route == "kernel_symplectic") sampler = sqz::make_symplectic_sampler(rho);
            sqz::QuadratureSpec qs;
            qs.x_points = c.x_points;
            qs.munu_points = c.munu_points;
            qs.x_window = c.x_window;
            qs.munu_window = c.munu_window;
            for (const auto& f : frames) {
                std::vector<double> row(c.n_max + 1);
                double mass = 0.0;
                for (int n = 0; n <= c.n_max; ++n) {
                    double v;
                    if (c.route == "kernel_density")
                        v = sqz::squeeze_via_density_kernel(rho, f, n);
                    else if (c.route == "kernel_wigner")
                        v = sqz::squeeze_via_wigner_kernel(wig, f, n);
                    else
                        v = sqz::squeeze_via_symplectic_kernel(sampler, f, n, qs);
                    tg.preclip_min = std::min(tg.preclip_min, v);
                    row[n] = std::max(v, 0.0);
                    mass += row[n];
                }
                tg.values.push_back(std::move(row));
                tg.tail_mass.push_back(1.0 - mass);
            }
        }
    } else if (c.route == "closed_form") {
        const int m_sum_max = c.cutoff + 100;
        tg.n_max = c.n_max;
        tg.frames = frames;
        for (const auto& f : frames) {
            std::vector<double> row(c.n_max + 1);
            double mass = 0.0;
            for (int n = 0; n <= c.n_max; ++n) {
                const double v = closed_form_tomogram(spec, n, f, m_sum_max);
                tg.preclip_min = std::min(tg.preclip_min, v);
                row[n] = std::max(v, 0.0);
                mass += row[n];
            }
            tg.values.push_back(std::move(row));
            tg.tail_mass.push_back(1.0 - mass);
        }
    } else {
        throw std::invalid_argument("unknown route: " + c.route);
    }

    write_output(c, c.format == "csv" ? tomogram_csv(c, tg) : tomogram_json(c, tg));
    return 0;
}

int cmd_transform(const RunConfig& c, const std::string& target) {
    const sqz::StateSpec spec = sqz::parse_state(c.state);
    const sqz::DensityMatrix rho = sqz::make_density(spec, c.cutoff);
    const sqz::TomogramSampler sampler = sqz::make_symplectic_sampler(rho);
    sqz::QuadratureSpec qs;
    qs.x_points = c.x_points;
    qs.munu_points = c.munu_points;
    qs.x_window = c.x_window;
    qs.munu_window = c.munu_window;

    OrderedJson j;
    j["config"] = config_json(c);
    j["target"] = target;

    if (target == "wigner") {
        sqz::GridSpec gs;
        gs.q_min = gs.p_min = -4.0;
        gs.q_max = gs.p_max = 4.0;
        gs.q_points = gs.p_points = c.quick ? 21 : 41;
        const sqz::WignerGrid rec = sqz::wigner_from_symplectic(sampler, gs, qs);
        const sqz::WignerGrid direct = sqz::wigner_from_state(rho, gs);
        double err = 0.0;
        for (int iq = 0; iq < gs.q_points; ++iq)
            for (int ip = 0; ip < gs.p_points; ++ip)
                err = std::max(err, std::abs(rec.value_at(iq, ip) - direct.value_at(iq, ip)));
        j["q"] = rec.q;
        j["p"] = rec.p;
        OrderedJson rows = OrderedJson::array();
        for (int iq = 0; iq < gs.q_points; ++iq) {
            OrderedJson row = OrderedJson::array();
            for (int ip = 0; ip < gs.p_points; ++ip) row.push_back(rec.value_at(iq, ip));
            rows.push_back(std::move(row));
        }
        j["values"] = std::move(rows);
        j["max_error_vs_direct"] = err;
    } else if (target == "density") {
        const int rec_cutoff = std::min(c.cutoff, c.quick ? 12 : 24);
        double defect = 0.0;
        const sqz::DensityMatrix rec = sqz::density_from_symplectic(sampler, rec_cutoff, qs, &defect);
        const double err =
            (rec.rho - rho.rho.topLeftCorner(rec_cutoff, rec_cutoff)).cwiseAbs().maxCoeff();
        j["cutoff"] = rec_cutoff;
        j["rho"] = sqz::matrix_to_json(rec.rho);
        j["hermiticity_defect"] = defect;
        j["max_error_vs_direct"] = err;
    } else {
        throw std::invalid_argument("unknown transform target: " + target);
    }
    write_output(c, sqz::dump_deterministic(j) + "\n");
    return 0;
}

int cmd_dynamics(const RunConfig& c, double gamma, const std::string& alpha_text) {
    if (gamma < 0.0 || gamma >= 1.0)
        throw std::invalid_argument("dynamics requires 0 <= gamma < 1");
    const sqz::StateSpec as = sqz::parse_state("coherent:" + alpha_text);
    const Complex alpha = std::get<sqz::CoherentSpec>(as).alpha;

    const int nq = c.quick ? 61 : 241, nt = c.quick ? 61 : 301;
    const double q_min = -3.0, q_max = 3.0, t_max = 30.0;
    std::vector<double> qs_grid(nq), ts(nt);
    for (int i = 0; i < nq; ++i) qs_grid[i] = q_min + (q_max - q_min) * i / (nq - 1);
    for (int i = 0; i < nt; ++i) ts[i] = t_max * i / (nt - 1);

    OrderedJson j;
    j["config"] = config_json(c);
    j["gamma"] = gamma;
    j["alpha"] = {alpha.real(), alpha.imag()};
    j["q"] = qs_grid;
    j["t"] = ts;

    OrderedJson density = OrderedJson::array();
    OrderedJson moments = OrderedJson::array();
    for (double t : ts) {
        OrderedJson row = OrderedJson::array();
        for (double q : qs_grid) row.push_back(sqz::kanai_density(gamma, alpha, q, t));
        density.push_back(std::move(row));
        const sqz::GaussianMoments m = sqz::kanai_moments(gamma, alpha, t);
        OrderedJson mj;
        mj["t"] = t;
        mj["mean_q"] = m.mean_q;
        mj["mean_p"] = m.mean_p;
        mj["sigma_q"] = m.sigma_q;
        mj["sigma_p"] = m.sigma_p;
        mj["sigma_pq"] = m.sigma_pq;
        mj["squeezed"] = m.squeezed;
        moments.push_back(std::move(mj));
    }
    j["density"] = std::move(density);
    j["moments"] = std::move(moments);

    const sqz::UncertaintyAudit audit = sqz::uncertainty_audit(gamma, ts);
    OrderedJson aj;
    aj["gamma"] = audit.gamma;
    aj["invariant_value"] = audit.invariant_value;
    aj["reference_value"] = audit.reference_value;
    aj["constancy_drift"] = audit.constancy_drift;
    aj["reconciling_scale"] = audit.reconciling_scale;
    aj["matches_quarter"] = std::abs(audit.invariant_value - 0.25) <= 1e-9;
    j["uncertainty_audit"] = std::move(aj);

    if (c.format == "csv") {
        std::ostringstream os;
        os << "# sqztomo dynamics gamma=" << gamma << " alpha=" << alpha_text << "\n";
        os << "# q t density\n";
        for (int it = 0; it < nt; ++it) {
            for (int iq = 0; iq < nq; ++iq)
                os << sqz::format_float(qs_grid[iq]) << " " << sqz::format_float(ts[it]) << " "
                   << sqz::format_float(j["density"][it][iq].get<double>()) << "\n";
            os << "\n";
        }
        write_output(c, os.str());
    } else {
        write_output(c, sqz::dump_deterministic(j) + "\n");
    }
    return 0;
}

int cmd_figure(const RunConfig& c, const std::string& fig_id) {
    OrderedJson meta;
    meta["figure"] = fig_id;
    if (fig_id == "fig1") {
        RunConfig fc = c;
        fc.state = "coherent:0.5+0j";
        meta["gamma"] = 0.1;
        meta["alpha"] = {0.5, 0.0};
        meta["q_range"] = {-3.0, 3.0};
        meta["q_points"] = fc.quick ? 61 : 241;
        meta["t_range"] = {0.0, 30.0};
        meta["t_points"] = fc.quick ? 61 : 301;
        meta["config"] = config_json(fc);
        if (!c.out.empty()) sqz::atomic_write(c.out + ".meta.json", sqz::dump_deterministic(meta) + "\n");
        return cmd_dynamics(fc, 0.1, "0.5+0j");
    }
    if (fig_id == "fig2") {
        RunConfig fc = c;
        fc.state = "coherent:3+0j";
        fc.lambda_spec = "-1.5:1.5:0.05";
        fc.theta_spec = "0";
        fc.route = "closed_form";
        fc.n_max = 40;
        meta["alpha"] = {3.0, 0.0};
        meta["theta"] = 0.0;
        meta["lambda_range"] = {-1.5, 1.5};
        meta["lambda_step"] = 0.05;
        meta["n_max"] = 40;
        meta["config"] = config_json(fc);
        if (!c.out.empty()) sqz::atomic_write(c.out + ".meta.json", sqz::dump_deterministic(meta) + "\n");
        return cmd_tomogram(fc);
    }
    throw std::invalid_argument("unknown figure id: " + fig_id);
}

int cmd_verify(const RunConfig& c) {
    const int cutoff = c.quick ? 64 : c.cutoff;
    const int n_max = c.quick ? 24 : c.n_max;
    const sqz::VerificationReport rep = sqz::run_verification(cutoff, n_max, c.quick);
    const std::string base = c.out.empty() ? "VERIFICATION" : c.out;
    sqz::atomic_write(base + ".md", rep.to_markdown());
    OrderedJson j = rep.to_json();
    j["config"] = config_json(c);
    sqz::atomic_write(base + ".json", sqz::dump_deterministic(j) + "\n");
    std::cout << (rep.mandatory_pass() ? "mandatory checks: pass\n" : "mandatory checks: FAIL\n");
    if (rep.any_discrepancy()) std::cout << "kernel discrepancies recorded\n";
    if (!rep.mandatory_pass()) return 3;
    return rep.any_discrepancy() ? 1 : 0;
}

int cmd_dump(const RunConfig& c, const std::string& op, double lambda, double theta,
             double beta_re, double beta_im) {
    sqz::Matrix m;
    if (op == "squeeze")
        m = sqz::squeeze_matrix(lambda, c.cutoff);
    else if (op == "rotation")
        m = sqz::rotation_matrix(theta, c.cutoff);
    else if (op == "displacement")
        m = sqz::displacement_operator(Complex(beta_re, beta_im), c.cutoff);
    else if (op == "annihilation")
        m = sqz::annihilation_matrix(c.cutoff);
    else if (op == "dequantizer")
        m = sqz::squeeze_dequantizer(c.n_max, sqz::TomographyFrame(lambda, theta), c.cutoff);
    else
        throw std::invalid_argument("unknown operator: " + op);
    OrderedJson j;
    j["config"] = config_json(c);
    j["operator"] = op;
    j["matrix"] = sqz::matrix_to_json(m);
    write_output(c, sqz::dump_deterministic(j) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"squeeze-tomography toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.cutoff = env_default_cutoff();
    std::string config_path;

    auto* tomogram = app.add_subcommand("tomogram", "photon-number tomogram of a state");
    add_common_options(tomogram, cfg, config_path);

    auto* transform = app.add_subcommand("transform", "tomogram-based reconstructions");
    std::string target = "wigner";
    transform->add_option("--to", target, "wigner | density");
    add_common_options(transform, cfg, config_path);

    auto* dynamics = app.add_subcommand("dynamics", "damped-oscillator packet evolution");
    double gamma = 0.1;
    std::string alpha_text = "0.5+0j";
    dynamics->add_option("--gamma", gamma, "damping parameter, 0 <= gamma < 1");
    dynamics->add_option("--alpha", alpha_text, "initial coherent amplitude");
    add_common_options(dynamics, cfg, config_path);

    auto* figure = app.add_subcommand("figure", "reference data grids");
    std::string fig_id;
    figure->add_option("id", fig_id, "fig1 | fig2")->required();
    add_common_options(figure, cfg, config_path);

    auto* verify = app.add_subcommand("verify", "route-vs-oracle cross validation");
    add_common_options(verify, cfg, config_path);

    auto* dump = app.add_subcommand("dump", "operator matrices");
    std::string op;
    double beta_re = 0.0, beta_im = 0.0, dump_lambda = 0.0, dump_theta = 0.0;
    dump->add_option("--op", op, "squeeze | rotation | displacement | annihilation | dequantizer")->required();
    dump->add_option("--op-lambda", dump_lambda, "squeeze parameter for the operator");
    dump->add_option("--op-theta", dump_theta, "rotation angle for the operator");
    dump->add_option("--beta-re", beta_re, "displacement amplitude, real part");
    dump->add_option("--beta-im", beta_im, "displacement amplitude, imaginary part");
    add_common_options(dump, cfg, config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    CLI::App* active = app.get_subcommands().front();
    try {
        if (!config_path.empty()) apply_config_file(active, config_path, cfg);
        if (cfg.cutoff <= 0 || cfg.n_max < 0 || cfg.x_points < 3 || cfg.munu_points < 3)
            throw std::invalid_argument("invalid budgets");
        if (active == tomogram) return cmd_tomogram(cfg);
        if (active == transform) return cmd_transform(cfg, target);
        if (active == dynamics) return cmd_dynamics(cfg, gamma, alpha_text);
        if (active == figure) return cmd_figure(cfg, fig_id);
        if (active == verify) return cmd_verify(cfg);
        if (active == dump) return cmd_dump(cfg, op, dump_lambda, dump_theta, beta_re, beta_im);
    } catch (const std::exception& e) {
        const std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        if (what.find("tail") != std::string::npos || what.find("truncat") != std::string::npos ||
            what.find("leak") != std::string::npos)
            return kExitTruncation;
        return kExitConfig;
    }
    return kExitConfig;
}
