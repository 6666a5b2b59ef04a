// Command-line front end: emits CSV/JSON tables for the scattering
// calculations (ambiguity scans, gas cross sections, temperature scaling,
// packet properties, asymptotics, angular quantization, divergence probes).
//
// Exit codes: 0 ok, 2 usage, 3 singular configuration, 4 numeric accuracy,
// 5 not found.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "scatter/cmpath.hpp"
#include "scatter/error.hpp"
#include "scatter/kinematics.hpp"
#include "scatter/lfpath.hpp"
#include "scatter/numerics/fit.hpp"
#include "scatter/numerics/quadrature.hpp"
#include "scatter/numerics/random.hpp"
#include "scatter/quantization.hpp"
#include "scatter/spherical.hpp"
#include "scatter/thermal.hpp"
#include "scatter/wavepackets.hpp"

using json = nlohmann::json;
using namespace scatter;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kDefaultSeed = 0x5EEDCAFEULL;
constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kSingular = 3,
    kAccuracy = 4,
    kNotFound = 5,
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    json meta = json::object();

    void add_row(std::initializer_list<json> cells) { rows.emplace_back(cells); }
};

std::string format_cell(const json& cell) {
    if (cell.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", cell.get<double>());
        return buf;
    }
    if (cell.is_string()) return cell.get<std::string>();
    return cell.dump();
}

void write_table(const Table& table, const std::string& out_path, const std::string& format) {
    std::string text;
    if (format == "json") {
        json doc;
        doc["meta"] = table.meta;
        json rows = json::array();
        for (const auto& row : table.rows) {
            json obj = json::object();
            for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c]] = row[c];
            rows.push_back(obj);
        }
        doc["rows"] = rows;
        text = doc.dump(1) + "\n";
    } else {
        text = "# " + table.meta.dump() + "\n";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            text += table.columns[c];
            text += (c + 1 < table.columns.size()) ? ',' : '\n';
        }
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                text += format_cell(row[c]);
                text += (c + 1 < row.size()) ? ',' : '\n';
            }
        }
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error("cannot open output file: " + out_path);
        file << text;
    }
}

json base_meta(const std::string& command, std::uint64_t seed, const json& flags) {
    json meta;
    meta["command"] = command;
    meta["flags"] = flags;
    meta["seed"] = seed;
    meta["version"] = kVersion;
    return meta;
}

struct CommonOpts {
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "output path (default stdout)");
    cmd->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", opts.seed, "random seed");
}

// ---------------------------------------------------------------- ambiguity

int cmd_ambiguity(double mu, double b, double ki, double pix, double piy, double piz,
                  int theta_steps, const CommonOpts& common) {
    CollisionConfig cfg;
    cfg.ki = {0.0, 0.0, ki};
    cfg.pi = {pix, piy, piz};
    cfg.mu = mu;
    cfg.b = b;

    Table table;
    table.columns = {"theta_deg", "branch", "k_f", "dw_lf", "dw_cm", "ratio"};
    for (int step = 0; step <= theta_steps; ++step) {
        const double theta = kPi * step / theta_steps;
        const Vec3 n{std::sin(theta), 0.0, std::cos(theta)};
        const auto branches = final_momentum_roots(cfg, n);
        if (branches.empty()) {
            table.add_row({180.0 * step / theta_steps, -1, 0.0, 0.0, 0.0, ""});
            continue;
        }
        const double one_mu = 1.0 + cfg.mu;
        const double q = cfg.relative_speed();
        for (std::size_t i = 0; i < branches.size(); ++i) {
            const double kf2 = branches[i].k_f * branches[i].k_f;
            const double lf = std::norm(cfg.b) / (4.0 * kPi * kPi) * kf2 * kf2 /
                              branches[i].discriminant;
            const double cm = std::norm(cfg.b) / (4.0 * kPi * kPi * one_mu * one_mu) * kf2 * q /
                              std::sqrt(branches[i].discriminant);
            table.add_row({180.0 * step / theta_steps, static_cast<int>(i), branches[i].k_f, lf,
                           cm, lf / cm});
        }
    }

    // Heavy-target sanity: the two routes merge as mu -> 0.
    CollisionConfig heavy = cfg;
    heavy.mu = 1e-8;
    double worst = 0.0;
    for (int step = 1; step < 8; ++step) {
        const double theta = kPi * step / 8.0;
        const Vec3 n{std::sin(theta), 0.0, std::cos(theta)};
        const double lf = lf_probability_density(heavy, n);
        const double cm = backmapped_lf_density(heavy, n);
        if (cm > 0.0) worst = std::max(worst, std::abs(lf / cm - 1.0));
    }
    table.meta = base_meta("ambiguity", common.seed,
                           {{"mu", mu},
                            {"b", b},
                            {"ki", ki},
                            {"pix", pix},
                            {"piy", piy},
                            {"piz", piz},
                            {"theta_steps", theta_steps}});
    table.meta["mu0_sanity_max_ratio_deviation"] = worst;
    write_table(table, common.out, common.format);
    return kOk;
}

// ------------------------------------------------------------------- gas-xs

int cmd_gas_xs(double ki, double T, double mu, double b, int grid, long samples,
               const CommonOpts& common) {
    GasSpec gas{T, mu, 0.0, b};

    // Kinematic band: omega = -kappa^2/2 + ki kappa v with |v| < 1.
    const double kappa_lo = 0.15 * ki, kappa_hi = 1.8 * ki, v_cap = 0.9;

    struct Cell {
        double omega, kappa, closed;
        Vec3 kf;
    };
    std::vector<Cell> cells;
    for (int a = 0; a < grid; ++a) {
        const double kappa = kappa_lo + (kappa_hi - kappa_lo) * (a + 0.5) / grid;
        for (int o = 0; o < grid; ++o) {
            const double v = -v_cap + 2.0 * v_cap * (o + 0.5) / grid;
            const double omega = -0.5 * kappa * kappa + ki * kappa * v;
            const double kf2 = ki * ki - 2.0 * omega;
            if (kf2 <= 0.0) continue;
            const double kf = std::sqrt(kf2);
            const double cos_theta = (ki * ki + kf2 - kappa * kappa) / (2.0 * ki * kf);
            if (std::abs(cos_theta) > 1.0) continue;
            Cell cell;
            cell.omega = omega;
            cell.kappa = kappa;
            cell.kf = {kf * std::sqrt(1.0 - cos_theta * cos_theta), 0.0, kf * cos_theta};
            cell.closed = gas_double_differential(ki, cell.kf, gas);
            cells.push_back(cell);
        }
    }

    // Monte Carlo oracle: (|b|^2/ki) < delta_eps(E_R - omega + mu p.kappa) >
    // over one shared Maxwellian pool, three nascent widths combined by
    // Richardson weights, per-sample so the standard error is direct.
    numerics::SeededStream stream(common.seed, 1);
    std::vector<Vec3> pool(static_cast<std::size_t>(samples));
    for (auto& p : pool) p = maxwell_sample(T, mu, stream);

    Table table;
    table.columns = {"omega", "kappa", "closed", "mc", "mc_stderr", "z"};
    int bad_cells = 0;
    for (const auto& cell : cells) {
        const Vec3 kappa_vec = Vec3{0.0, 0.0, ki} - cell.kf;
        const double sigma_x = cell.kappa * std::sqrt(mu * T);  // spread of the delta argument
        const double gap = 0.5 * mu * cell.kappa * cell.kappa - cell.omega;
        const double eps[3] = {0.45 * sigma_x, 0.33 * sigma_x, 0.22 * sigma_x};
        // Lagrange weights sending (eps^2, I) to eps = 0.
        double t[3], w[3];
        for (int j = 0; j < 3; ++j) t[j] = eps[j] * eps[j];
        w[0] = t[1] * t[2] / ((t[1] - t[0]) * (t[2] - t[0]));
        w[1] = t[0] * t[2] / ((t[0] - t[1]) * (t[2] - t[1]));
        w[2] = t[0] * t[1] / ((t[0] - t[2]) * (t[1] - t[2]));

        double sum = 0.0, sum2 = 0.0;
        long hits = 0;
        for (const Vec3& p : pool) {
            const double x = gap + mu * p.dot(kappa_vec);
            double y = 0.0;
            if (std::abs(x) < 8.0 * eps[0]) {
                ++hits;
                for (int j = 0; j < 3; ++j)
                    y += w[j] * std::exp(-x * x / t[j]) / (eps[j] * std::sqrt(kPi));
            }
            sum += y;
            sum2 += y * y;
        }
        const double mean = sum / samples;
        const double var = std::max(sum2 / samples - mean * mean, 0.0);
        const double mc = std::norm(gas.b) / ki * mean;
        const double mc_err = std::norm(gas.b) / ki * std::sqrt(var / samples);
        // A hitless cell only signals non-convergence when the closed form
        // expects real weight there (cold gas leaves most of the band empty).
        const double cell_scale =
            std::norm(gas.b) / (ki * cell.kappa * std::sqrt(2.0 * kPi * mu * T));
        if (hits < 10 && cell.closed > 1e-6 * cell_scale) ++bad_cells;
        const double z = mc_err > 0.0 ? (mc - cell.closed) / mc_err : 0.0;
        table.add_row({cell.omega, cell.kappa, cell.closed, mc, mc_err, z});
    }
    if (bad_cells > 0)
        throw AccuracyError("gas-xs: " + std::to_string(bad_cells) +
                            " cells collected fewer than 10 Monte Carlo hits");

    table.meta = base_meta("gas-xs", common.seed,
                           {{"ki", ki},
                            {"T", T},
                            {"mu", mu},
                            {"b", b},
                            {"grid", grid},
                            {"samples", samples}});
    table.meta["total_cross_section"] = gas_total_cross_section(ki, gas);
    write_table(table, common.out, common.format);
    return kOk;
}

// ---------------------------------------------------------------- temp-scan

int cmd_temp_scan(double ki, double Tmin, double Tmax, int points, const std::string& area_mode,
                  double mu, double b, const CommonOpts& common) {
    if (!(Tmin < Tmax)) throw PreconditionError("temp-scan: need Tmin < Tmax");

    const double A_const =
        area_mode == "const" ? calibrated_constant_area(ki, GasSpec{Tmin, mu, 0.0, b}) : 0.0;

    Table table;
    table.columns = {"T", "sigma"};
    std::vector<double> Ts, sigmas;
    for (int i = 0; i < points; ++i) {
        const double T =
            points == 1 ? Tmin : Tmin * std::pow(Tmax / Tmin, static_cast<double>(i) / (points - 1));
        GasSpec gas{T, mu, 0.0, b};
        const double sigma = area_mode == "const" ? gas_total_constant_area(ki, gas, A_const)
                                                  : gas_total_cross_section(ki, gas);
        Ts.push_back(T);
        sigmas.push_back(sigma);
        table.add_row({T, sigma});
    }

    numerics::PowerLawFit fit;
    try {
        fit = numerics::powerlaw_fit(Ts, sigmas);
    } catch (const Error& e) {
        throw AccuracyError(std::string("temp-scan: fit failed: ") + e.what());
    }

    table.meta = base_meta("temp-scan", common.seed,
                           {{"ki", ki},
                            {"Tmin", Tmin},
                            {"Tmax", Tmax},
                            {"points", points},
                            {"area_mode", area_mode},
                            {"mu", mu},
                            {"b", b}});
    table.meta["exponent"] = fit.exponent;
    table.meta["exponent_stderr"] = fit.exponent_stderr;
    if (area_mode == "const") table.meta["A_const"] = A_const;
    write_table(table, common.out, common.format);
    return kOk;
}

// ------------------------------------------------------------------- packet

PacketFamily parse_family(const std::string& name) {
    if (name == "gaussian" || name == "g") return PacketFamily::gaussian;
    if (name == "dB" || name == "db" || name == "singular") return PacketFamily::dB_singular;
    if (name == "ns" || name == "nonsingular") return PacketFamily::dB_nonsingular;
    throw PreconditionError("packet: unknown family " + name);
}

int cmd_packet(const std::string& family, double s, double k, double t, const std::string& what,
               double rx, double ry, double rz, double u_step, const CommonOpts& common) {
    PacketSpec spec{parse_family(family), s, Vec3{0.0, 0.0, k}};

    Table table;
    table.meta = base_meta("packet", common.seed,
                           {{"family", family},
                            {"s", s},
                            {"k", k},
                            {"t", t},
                            {"what", what},
                            {"rx", rx},
                            {"ry", ry},
                            {"rz", rz},
                            {"u", u_step}});

    if (what == "value") {
        const auto value = packet_value(spec, Vec3{rx, ry, rz}, t);
        table.columns = {"re", "im", "abs"};
        table.add_row({value.real(), value.imag(), std::abs(value)});
    } else if (what == "norm") {
        const auto norm = packet_norm(spec, t);
        table.columns = {"norm", "reference"};
        if (norm.finite)
            table.add_row({norm.value, 1.0});
        else
            table.add_row({"infinite", "infinite"});
    } else if (what == "area") {
        table.columns = {"numeric", "closed"};
        table.add_row({front_area_numeric(spec, t), front_area_closed(spec, t)});
    } else if (what == "residual") {
        const std::vector<Vec3> probes = {spec.k * t + Vec3{0.9, 0.2, -0.4},
                                          spec.k * t + Vec3{-0.5, 1.0, 0.7}};
        table.columns = {"spacing", "residual"};
        for (const double h : {2e-3, 1e-3})
            table.add_row({h, schrodinger_residual(spec, h, probes, t)});
    } else if (what == "reflection") {
        table.columns = {"s", "deficit"};
        table.add_row({s, reflection_deficit(spec, u_step)});
    } else if (what == "scatter") {
        std::vector<Vec3> directions;
        for (int i = 0; i < 8; ++i) {
            const double theta = kPi * (i + 0.5) / 8.0;
            directions.push_back({std::sin(theta), 0.0, std::cos(theta)});
        }
        const std::complex<double> amplitude = 1.0;
        const auto w0 = scatter_fixed_center(spec, amplitude, Vec3{0, 0, 0}, directions);
        const auto w1 = scatter_fixed_center(spec, amplitude, Vec3{10.0 / s, 0, 0}, directions);
        const auto w2 = scatter_fixed_center(spec, amplitude, Vec3{100.0 / s, 0, 0}, directions);
        table.columns = {"theta_deg", "weight_rho0", "weight_rho10", "weight_rho100"};
        for (std::size_t i = 0; i < directions.size(); ++i)
            table.add_row({180.0 * (i + 0.5) / 8.0, w0[i], w1[i], w2[i]});
    } else {
        throw PreconditionError("packet: unknown request " + what);
    }
    write_table(table, common.out, common.format);
    return kOk;
}

// -------------------------------------------------------------- asymptotics

int cmd_asymptotics(double k, double rmin, double rmax, int points, const CommonOpts& common) {
    if (!(k * rmin >= 1.0)) throw PreconditionError("asymptotics: need k rmin >= 1");

    Table table;
    table.columns = {"r", "abs_decomposition", "abs_spherical", "residual", "residual_times_r"};
    for (int i = 0; i < points; ++i) {
        const double r =
            points == 1 ? rmin : rmin * std::pow(rmax / rmin, static_cast<double>(i) / (points - 1));
        const int order = static_cast<int>(k * r * 0.75) + 120;
        const auto decomposition = hemisphere_decomposition(k, r, order);
        const auto spherical = std::exp(std::complex<double>(0.0, k * r)) / r;
        const double residual = std::abs(decomposition - spherical);
        table.add_row({r, std::abs(decomposition), std::abs(spherical), residual, residual * r});
    }
    table.meta = base_meta("asymptotics", common.seed,
                           {{"k", k}, {"rmin", rmin}, {"rmax", rmax}, {"points", points}});
    write_table(table, common.out, common.format);
    return kOk;
}

// ----------------------------------------------------------------- quantize

int cmd_quantize(double mu, double b, double ki, int N, const std::vector<double>& cone_axis,
                 double cone_angle_deg, const CommonOpts& common) {
    CollisionConfig cfg;
    cfg.ki = {0.0, 0.0, ki};
    cfg.mu = mu;
    cfg.b = b;

    const Vec3 axis = Vec3{cone_axis[0], cone_axis[1], cone_axis[2]}.normalized();
    const double half_angle = cone_angle_deg * kPi / 180.0;

    const auto cm = quantize_cm(cfg, N);
    const auto lf = transport_to_lf(cm);
    const auto order = square_order_invariance(cfg, N, axis, half_angle);
    const double area = front_area(cfg);
    const double quantum = angular_quantum(area, cfg.relative_speed(), cfg.mu);
    const double one_mu = 1.0 + mu;

    Table table;
    table.columns = {"quantity", "value"};
    table.add_row({"elements_cm", static_cast<int>(cm.elements.size())});
    table.add_row({"elements_lf", static_cast<int>(lf.elements.size())});
    table.add_row({"d_omega_cm", cm.elements.front().d_omega});
    table.add_row({"abs_df_cm", std::abs(cm.elements.front().d_f)});
    table.add_row({"window_square_before", order.before});
    table.add_row({"window_square_after", order.after});
    table.add_row({"front_area", area});
    table.add_row({"angular_quantum", quantum});
    table.add_row({"quantized_dsigma_domega", quantized_cross_section_density(cfg, area)});
    table.add_row({"flat_dsigma_domega", std::norm(cfg.b) / (one_mu * one_mu)});

    table.meta = base_meta("quantize", common.seed,
                           {{"mu", mu},
                            {"b", b},
                            {"ki", ki},
                            {"N", N},
                            {"cone_axis", cone_axis},
                            {"cone_angle_deg", cone_angle_deg}});
    write_table(table, common.out, common.format);
    return kOk;
}

// --------------------------------------------------------- divergence-probe

int cmd_divergence_probe(double mu, double ki, const CommonOpts& common) {
    const auto probe = divergence_probe(Vec3{0.0, 0.0, ki}, mu);
    json doc;
    doc["meta"] = base_meta("divergence-probe", common.seed, {{"mu", mu}, {"ki", ki}});
    doc["pi"] = {probe.pi.x, probe.pi.y, probe.pi.z};
    doc["n"] = {probe.n.x, probe.n.y, probe.n.z};
    doc["discriminant"] = probe.discriminant;
    doc["k_f"] = probe.k_f;
    const std::string text = doc.dump(1) + "\n";
    if (common.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(common.out, std::ios::binary);
        if (!file) throw Error("cannot open output file: " + common.out);
        file << text;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scattering-analysis toolbox"};
    app.require_subcommand(1);

    CommonOpts common;

    // ambiguity
    double mu = 1.0, b = 1.0, ki = 1.0, pix = 0.0, piy = 0.0, piz = 0.0;
    int theta_steps = 36;
    auto* ambiguity = app.add_subcommand("ambiguity", "LF vs CM angular densities");
    ambiguity->add_option("--mu", mu);
    ambiguity->add_option("--b", b);
    ambiguity->add_option("--ki", ki);
    ambiguity->add_option("--pix", pix);
    ambiguity->add_option("--piy", piy);
    ambiguity->add_option("--piz", piz);
    ambiguity->add_option("--theta-steps", theta_steps)->check(CLI::PositiveNumber);
    add_common(ambiguity, common);

    // gas-xs
    double gT = 1.0;
    int grid = 20;
    long samples = 1000000;
    auto* gas = app.add_subcommand("gas-xs", "monatomic-gas double differential");
    gas->add_option("--ki", ki);
    gas->add_option("--T", gT);
    gas->add_option("--mu", mu);
    gas->add_option("--b", b);
    gas->add_option("--grid", grid)->check(CLI::Range(2, 64));
    gas->add_option("--samples", samples)->check(CLI::PositiveNumber);
    add_common(gas, common);

    // temp-scan
    double Tmin = 1.0, Tmax = 10.0;
    int points = 8;
    std::string area_mode = "dynamic";
    auto* scan = app.add_subcommand("temp-scan", "cross section vs temperature");
    scan->add_option("--ki", ki);
    scan->add_option("--Tmin", Tmin);
    scan->add_option("--Tmax", Tmax);
    scan->add_option("--points", points)->check(CLI::PositiveNumber);
    scan->add_option("--area-mode", area_mode)->check(CLI::IsMember({"dynamic", "const"}));
    scan->add_option("--mu", mu);
    scan->add_option("--b", b);
    add_common(scan, common);

    // packet
    std::string family = "gaussian", what = "value";
    double s = 1.0, pk = 1.0, t = 0.0, rx = 0.0, ry = 0.0, rz = 1.0, step_height = 2.0;
    auto* packet = app.add_subcommand("packet", "wave-packet properties");
    packet->add_option("--family", family);
    packet->add_option("--s", s)->check(CLI::PositiveNumber);
    packet->add_option("--k", pk);
    packet->add_option("--t", t);
    packet->add_option("--what", what)
        ->check(CLI::IsMember({"value", "norm", "area", "residual", "reflection", "scatter"}));
    packet->add_option("--rx", rx);
    packet->add_option("--ry", ry);
    packet->add_option("--rz", rz);
    packet->add_option("--u", step_height);
    add_common(packet, common);

    // asymptotics
    double ak = 1.0, rmin = 10.0, rmax = 1000.0;
    int apoints = 10;
    auto* asym = app.add_subcommand("asymptotics", "hemisphere decomposition residuals");
    asym->add_option("--k", ak);
    asym->add_option("--rmin", rmin);
    asym->add_option("--rmax", rmax);
    asym->add_option("--points", apoints)->check(CLI::PositiveNumber);
    add_common(asym, common);

    // quantize
    int N = 1000;
    std::vector<double> cone_axis = {0.0, 0.0, 1.0};
    double cone_angle = 30.0;
    auto* quant = app.add_subcommand("quantize", "equal-amplitude angular elements");
    quant->add_option("--mu", mu);
    quant->add_option("--b", b);
    quant->add_option("--ki", ki);
    quant->add_option("--N", N);
    quant->add_option("--cone-axis", cone_axis, "axis components x y z")->expected(3);
    quant->add_option("--cone-angle", cone_angle);
    add_common(quant, common);

    // divergence-probe
    auto* probe = app.add_subcommand("divergence-probe", "singular kinematic pair");
    probe->add_option("--mu", mu);
    probe->add_option("--ki", ki);
    add_common(probe, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (ambiguity->parsed())
            return cmd_ambiguity(mu, b, ki, pix, piy, piz, theta_steps, common);
        if (gas->parsed()) return cmd_gas_xs(ki, gT, mu, b, grid, samples, common);
        if (scan->parsed())
            return cmd_temp_scan(ki, Tmin, Tmax, points, area_mode, mu, b, common);
        if (packet->parsed())
            return cmd_packet(family, s, pk, t, what, rx, ry, rz, step_height, common);
        if (asym->parsed()) return cmd_asymptotics(ak, rmin, rmax, apoints, common);
        if (quant->parsed())
            return cmd_quantize(mu, b, ki, N, cone_axis, cone_angle, common);
        if (probe->parsed()) return cmd_divergence_probe(mu, ki, common);
    } catch (const SingularityError& e) {
        std::cerr << "singular configuration: " << e.what() << "\n";
        return kSingular;
    } catch (const AccuracyError& e) {
        std::cerr << "accuracy failure: " << e.what() << "\n";
        return kAccuracy;
    } catch (const NotFoundError& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return kNotFound;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
