// pointkernel: command-line front end for the point-interaction library.
//
// Exit codes: 0 success, 1 usage error, 2 non-representable conversion,
// 3 verification failure.
#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <pointkernel/pointkernel.hpp>

namespace pk = pointkernel;
using json = nlohmann::json;

namespace {

enum ExitCode { Success = 0, Usage = 1, NotRepresentable = 2, VerificationFailed = 3 };

/// Raised for argument combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v)
{
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string command_echo(int argc, char** argv)
{
    std::string out = "pointkernel";
    for (int i = 1; i < argc; ++i) {
        out += ' ';
        out += argv[i];
    }
    return out;
}

class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

class Csv {
public:
    Csv(std::ostream& os, const std::string& echo, const std::vector<std::string>& columns) : os_(os)
    {
        os_ << "# pointkernel v" << pk::version << ", " << echo << '\n';
        for (std::size_t i = 0; i < columns.size(); ++i)
            os_ << (i ? "," : "") << columns[i];
        os_ << '\n';
    }

    Csv& cell(double v) { return raw(num(v)); }
    Csv& cell(const std::string& v) { return raw(v); }
    Csv& cell(bool v) { return raw(v ? "true" : "false"); }
    Csv& cell(int v) { return raw(std::to_string(v)); }
    void end()
    {
        os_ << '\n';
        first_ = true;
    }

private:
    Csv& raw(const std::string& v)
    {
        os_ << (first_ ? "" : ",") << v;
        first_ = false;
        return *this;
    }

    std::ostream& os_;
    bool first_ = true;
};

json complex_json(pk::complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json interaction_json(const pk::PointInteraction& pi)
{
    // + 0.0 folds negative zeros from the parity map.
    return {{"c1", pi.c1 + 0.0}, {"c2", complex_json(pi.c2 + 0.0)}, {"c3", pi.c3 + 0.0}};
}

json pair_json(const pk::ProjectivePair& pair)
{
    json j{{"p", pair.p()}, {"q", pair.q()}};
    if (pair.is_dirichlet())
        j["kind"] = "dirichlet";
    else if (pair.is_neumann())
        j["kind"] = "neumann";
    else
        j["kind"] = "robin";
    if (auto b = pair.derivative_ratio())
        j["b"] = *b;
    if (auto bt = pair.value_ratio())
        j["b_tilde"] = *bt;
    return j;
}

json envelope(const std::string& echo)
{
    return {{"tool", "pointkernel"}, {"version", std::string(pk::version)}, {"command", echo}};
}

/// --tol wins over POINTKERNEL_TOL; otherwise the suite default applies.
std::optional<double> tolerance_override(const std::optional<double>& flag)
{
    if (flag)
        return flag;
    if (const char* env = std::getenv("POINTKERNEL_TOL")) {
        double v = 0.0;
        const std::string s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !(v > 0.0))
            throw UsageError("POINTKERNEL_TOL must be a positive number");
        return v;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- convert

struct ConvertArgs {
    double c1 = 0.0, c2re = 0.0, c2im = 0.0, c3 = 0.0;
    std::string to;
    bool from_connected = false;
    bool from_separated = false;
    double theta = 0.0, a11 = 1.0, a12 = 0.0, a21 = 0.0, a22 = 1.0;
    double plus_p = 1.0, plus_q = 0.0, minus_p = 1.0, minus_q = 0.0;
    std::string out;
};

int run_convert(const ConvertArgs& a, const std::string& echo)
{
    const int modes = (a.to.empty() ? 0 : 1) + (a.from_connected ? 1 : 0) + (a.from_separated ? 1 : 0);
    if (modes != 1)
        throw UsageError("exactly one of --to, --from-connected, --from-separated is required");

    Sink sink(a.out);
    json doc = envelope(echo);
    int code = Success;
    try {
        pk::PointInteraction pi;
        if (a.from_connected) {
            const pk::ConnectedSAE conn{a.theta, a.a11, a.a12, a.a21, a.a22};
            doc["input"] = {{"connected", {{"theta", conn.theta}, {"a", {{conn.a11, conn.a12}, {conn.a21, conn.a22}}}}}};
            pi = pk::from_connected(conn);
            doc["interaction"] = interaction_json(pi);
        } else if (a.from_separated) {
            const pk::SeparatedSAE sep{pk::ProjectivePair(a.plus_p, a.plus_q), pk::ProjectivePair(a.minus_p, a.minus_q)};
            doc["input"] = {{"separated", {{"plus", pair_json(sep.side_plus)}, {"minus", pair_json(sep.side_minus)}}}};
            pi = pk::from_separated(sep);
            doc["interaction"] = interaction_json(pi);
        } else {
            pi = {a.c1, pk::complex{a.c2re, a.c2im}, a.c3};
            doc["input"] = interaction_json(pi);
            if (a.to == "connected") {
                const auto conn = pk::to_connected(pi);
                doc["connected"] = {{"theta", conn.theta},
                                    {"a", {{conn.a11, conn.a12}, {conn.a21, conn.a22}}},
                                    {"det", conn.det()}};
            } else {
                const auto conv = pk::classify_separated(pi);
                doc["separated"] = {{"plus", pair_json(conv.sae.side_plus)},
                                    {"minus", pair_json(conv.sae.side_minus)},
                                    {"case", static_cast<int>(conv.which)},
                                    {"chart_disagreement", conv.chart_disagreement}};
            }
        }
        doc["determinant"] = pk::determinant(pi);
        doc["parity"] = interaction_json(pk::parity(pi));
    } catch (const pk::Error& e) {
        if (e.kind() != pk::ErrorKind::NotRepresentable && e.kind() != pk::ErrorKind::NotConnected &&
            e.kind() != pk::ErrorKind::NotSeparated)
            throw UsageError(e.what());
        doc["error"] = {{"kind", std::string(pk::to_string(e.kind()))}, {"message", e.what()}};
        code = NotRepresentable;
    }
    sink.stream() << doc.dump(2) << '\n';
    return code;
}

// ---------------------------------------------------------------- scatter

struct ScatterArgs {
    double c1 = 0.0, c2re = 0.0, c2im = 0.0, c3 = 0.0;
    std::optional<int> delta_n;
    double coupling = 0.0;
    double k_min = 1.0, k_max = 1.0;
    int k_steps = 1;
    std::string out;
};

std::vector<double> linear_grid(double lo, double hi, int steps)
{
    std::vector<double> out;
    for (int i = 0; i < steps; ++i)
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
    return out;
}

int run_scatter(const ScatterArgs& a, const std::string& echo)
{
    if (!(a.k_min > 0.0) || !(a.k_max >= a.k_min) || a.k_steps < 1)
        throw UsageError("need k-min > 0, k-max >= k-min, k-steps >= 1");
    if (a.delta_n && *a.delta_n < 1)
        throw UsageError("--delta-n must be >= 1");

    Sink sink(a.out);
    Csv csv(sink.stream(), echo,
            {"k", "c1", "c2_re", "c2_im", "c3", "t_plus_re", "t_plus_im", "t_minus_re", "t_minus_im", "r_plus_re",
             "r_plus_im", "r_minus_re", "r_minus_im", "transmission", "unitarity_defect"});
    for (double k : linear_grid(a.k_min, a.k_max, a.k_steps)) {
        const pk::PointInteraction pi = a.delta_n
                                            ? pk::super_singular_interaction({*a.delta_n, a.coupling}, k)
                                            : pk::PointInteraction{a.c1, pk::complex{a.c2re, a.c2im}, a.c3};
        const auto s = pk::scattering(pi, k);
        csv.cell(k).cell(pi.c1).cell(pi.c2.real()).cell(pi.c2.imag()).cell(pi.c3);
        for (pk::complex z : {s.t_plus, s.t_minus, s.r_plus, s.r_minus})
            csv.cell(z.real()).cell(z.imag());
        csv.cell(pk::transmission_probability(pi, k)).cell(s.unitarity_defect()).end();
    }
    return Success;
}

// ---------------------------------------------------------------- propagator

struct PropagatorArgs {
    double coupling = 0.0;
    bool imaginary_time = false;
    double t = 1.0, s = 0.0;
    std::vector<double> x, y;
    std::string out;
};

int run_propagator(const PropagatorArgs& a, const std::string& echo)
{
    if (!(a.t > a.s))
        throw UsageError("need t > s");
    for (const auto* axis : {&a.x, &a.y})
        for (double v : *axis)
            if (v == 0.0 || !std::isfinite(v))
                throw UsageError("grid points must be finite and nonzero");

    const auto axis = a.imaginary_time ? pk::TimeAxis::ImaginaryTime : pk::TimeAxis::RealTime;
    Sink sink(a.out);
    Csv csv(sink.stream(), echo, {"x", "y", "t", "s", "re", "im", "free_re", "free_im"});
    for (double x : a.x)
        for (double y : a.y) {
            const auto p = pk::delta_prime_propagator(a.coupling, y, a.t, x, a.s, axis);
            const auto f = pk::free_kernel(y, a.t, x, a.s, axis);
            csv.cell(x).cell(y).cell(a.t).cell(a.s).cell(p.real()).cell(p.imag()).cell(f.real()).cell(f.imag()).end();
        }
    return Success;
}

// ---------------------------------------------------------------- born

struct BornArgs {
    double coupling = 0.0;
    int terms = 5;
    std::string out;
};

int run_born(const BornArgs& a, const std::string& echo)
{
    if (a.terms < 0)
        throw UsageError("--terms must be >= 0");
    const auto series = pk::born_series(a.coupling, a.terms);

    Sink sink(a.out);
    auto& os = sink.stream();
    Csv csv(os, echo,
            {"term", "sign", "direct_pp", "direct_pm", "direct_mp", "direct_mm", "mirror_pp", "mirror_pm", "mirror_mp",
             "mirror_mm", "partial_error", "ratio", "converges"});
    pk::QuadrantKernelState partial = pk::QuadrantKernelState::free();
    const auto closed = pk::delta_prime_state(a.coupling);
    auto row = [&](int i, double sign, const pk::QuadrantKernelState& term) {
        csv.cell(i).cell(sign);
        for (double v : term.direct)
            csv.cell(v);
        for (double v : term.mirror)
            csv.cell(v);
        csv.cell(partial.distance(closed)).cell(series.ratio).cell(series.converges).end();
    };
    row(0, 1.0, partial);
    double sign = 1.0;
    for (std::size_t i = 0; i < series.terms.size(); ++i) {
        sign = -sign;
        partial += sign * series.terms[i];
        row(static_cast<int>(i) + 1, sign, series.terms[i]);
    }
    return Success;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    std::optional<double> tol;
    unsigned long long seed = 42;
    std::string out;
};

struct CheckRow {
    std::string suite;
    std::string check;
    double value;
    double tolerance;
    bool passed;
};

void suite_jumps(std::vector<CheckRow>& rows, const std::optional<double>& tol)
{
    const double t = 1.0, s = 0.0, limit = tol.value_or(1e-6);
    const pk::LayerDensity one{[](double) { return 1.0; }, [](int order, double) { return order == 0 ? 1.0 : 0.0; }};
    const pk::LayerDensity ramp{[s](double tau) { return tau - s; },
                                [s](int order, double tt) { return order == 0 ? tt - s : (order == 1 ? 1.0 : 0.0); }};
    for (const auto& [name, g] : {std::pair{"g=1", one}, std::pair{"g=tau-s", ramp}}) {
        try {
            const auto report = pk::layer_jump_check(g, 3, t, s, limit);
            for (const auto& j : report.jumps)
                rows.push_back({"jumps", std::string(name) + " k=" + std::to_string(j.order),
                                std::abs(j.jump - j.expected), limit, j.passed});
        } catch (const pk::Error& e) {
            rows.push_back({"jumps", std::string(name) + " " + std::string(pk::to_string(e.kind())), 0.0, limit, false});
        }
    }
}

void suite_residual(std::vector<CheckRow>& rows, const std::optional<double>& tol)
{
    const double limit = tol.value_or(1e-6);
    std::vector<pk::KernelProbe> probes;
    for (double y : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0})
        for (double x : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0})
            probes.push_back({y, 1.0, x, 0.0});
    for (double c : {0.5, 1.0, 2.0, -2.0}) {
        const std::string name = "c=" + num(c);
        try {
            const double r = pk::integral_equation_residual(c, probes);
            rows.push_back({"residual", name, r, limit, r <= limit});
        } catch (const pk::Error& e) {
            rows.push_back({"residual", name + " " + std::string(pk::to_string(e.kind())), 0.0, limit, false});
        }
    }
}

void suite_scatter_oracle(std::vector<CheckRow>& rows, const std::optional<double>& tol, unsigned long long seed)
{
    const double limit = tol.value_or(1e-10);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-50.0, 50.0), kd(1e-3, 20.0);
    double oracle = 0.0, defect = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const pk::PointInteraction pi{u(rng), pk::complex{u(rng), u(rng)}, u(rng)};
        const double k = kd(rng);
        const auto s = pk::scattering(pi, k);
        const auto left = pk::solve_stationary(pi, k, pk::Incidence::FromLeft);
        const auto right = pk::solve_stationary(pi, k, pk::Incidence::FromRight);
        oracle = std::max({oracle, std::abs(left.transmission - s.t_plus), std::abs(left.reflection - s.r_plus),
                           std::abs(right.transmission - s.t_minus), std::abs(right.reflection - s.r_minus)});
        defect = std::max(defect, s.unitarity_defect());
    }
    rows.push_back({"scatter-oracle", "linear solve vs closed form", oracle, limit, oracle <= limit});
    const double unit_limit = tol.value_or(1e-12);
    rows.push_back({"scatter-oracle", "unitarity", defect, unit_limit, defect <= unit_limit});

    double griffiths = 0.0;
    for (int n = 1; n <= 6; ++n)
        for (double c : {-2.0, -0.5, 0.5, 2.0})
            for (double k : {0.5, 1.0, 3.0}) {
                const auto r = pk::check_griffiths_form({n, c}, k, limit);
                griffiths = std::max({griffiths, r.deriv_residual, r.value_residual});
            }
    rows.push_back({"scatter-oracle", "griffiths form", griffiths, limit, griffiths <= limit});
}

void suite_bc(std::vector<CheckRow>& rows, const std::optional<double>& tol, unsigned long long seed)
{
    const double analytic_limit = tol.value_or(1e-12);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uc(-10.0, 10.0), ux(-3.0, 3.0), ut(0.01, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double c = uc(rng), x = ux(rng), t = ut(rng);
        const auto bd = pk::propagator_boundary_data(c, t, x, 0.0, pk::TimeAxis::ImaginaryTime);
        worst = std::max(worst, pk::check_jump_average(bd, {0.0, c, 0.0}, analytic_limit).max_residual());
    }
    rows.push_back({"bc", "analytic boundary data", worst, analytic_limit, worst <= analytic_limit});

    const double fd_limit = tol.value_or(1e-8);
    for (const auto& [c, x] : {std::pair{1.0, 1.0}, std::pair{0.0, -0.7}, std::pair{-2.0, 0.8}, std::pair{2.0, 0.8}}) {
        const std::string name = "finite difference c=" + num(c) + " x=" + num(x);
        try {
            const auto report = pk::fd_boundary_check(c, 1.0, x, pk::JumpProbe::defaults(), fd_limit);
            rows.push_back({"bc", name, report.mismatch, fd_limit, report.passed});
        } catch (const pk::Error& e) {
            rows.push_back({"bc", name + " " + std::string(pk::to_string(e.kind())), 0.0, fd_limit, false});
        }
    }
}

int run_verify(const VerifyArgs& a, const std::string& echo)
{
    const auto tol = tolerance_override(a.tol);
    std::vector<CheckRow> rows;
    const bool all = a.suite == "all";
    if (all || a.suite == "jumps")
        suite_jumps(rows, tol);
    if (all || a.suite == "residual")
        suite_residual(rows, tol);
    if (all || a.suite == "scatter-oracle")
        suite_scatter_oracle(rows, tol, a.seed);
    if (all || a.suite == "bc")
        suite_bc(rows, tol, a.seed);

    Sink sink(a.out);
    Csv csv(sink.stream(), echo, {"suite", "check", "value", "tolerance", "passed"});
    bool ok = true;
    for (const auto& r : rows) {
        csv.cell(r.suite).cell(r.check).cell(r.value).cell(r.tolerance).cell(r.passed).end();
        ok = ok && r.passed;
    }
    return ok ? Success : VerificationFailed;
}

// ---------------------------------------------------------------- supersingular

struct SuperSingularArgs {
    int n = 1;
    double coupling = 0.0;
    double k = 1.0;
    std::optional<double> tol;
    std::string out;
};

int run_supersingular(const SuperSingularArgs& a, const std::string& echo)
{
    if (a.n < 1)
        throw UsageError("--n must be >= 1");
    if (!(a.k > 0.0))
        throw UsageError("--k must be > 0");
    const double limit = tolerance_override(a.tol).value_or(1e-10);
    const pk::SuperSingularSpec spec{a.n, a.coupling};
    const auto pi = pk::super_singular_interaction(spec, a.k);
    const auto s = pk::scattering(pi, a.k);
    const auto g = pk::check_griffiths_form(spec, a.k, limit);

    json doc = envelope(echo);
    doc["n"] = a.n;
    doc["coupling"] = a.coupling;
    doc["k"] = a.k;
    doc["interaction"] = interaction_json(pi);
    doc["scattering"] = {{"t_plus", complex_json(s.t_plus)},
                         {"t_minus", complex_json(s.t_minus)},
                         {"r_plus", complex_json(s.r_plus)},
                         {"r_minus", complex_json(s.r_minus)},
                         {"transmission", pk::transmission_probability(pi, a.k)},
                         {"unitarity_defect", s.unitarity_defect()}};
    doc["griffiths"] = {{"satisfied", g.satisfied},
                        {"deriv_residual", g.deriv_residual},
                        {"value_residual", g.value_residual},
                        {"tolerance", limit}};
    Sink sink(a.out);
    sink.stream() << doc.dump(2) << '\n';
    return Success;
}

void add_interaction_flags(CLI::App* cmd, double& c1, double& c2re, double& c2im, double& c3)
{
    cmd->add_option("--c1", c1, "delta coupling c1");
    cmd->add_option("--c2re", c2re, "real part of c2");
    cmd->add_option("--c2im", c2im, "imaginary part of c2");
    cmd->add_option("--c3", c3, "coupling c3");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"One-dimensional point interactions: conversions, scattering, propagators, Born series"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pk::version));

    ConvertArgs convert;
    auto* c_convert = app.add_subcommand("convert", "convert between jump-average, connected and separated forms");
    add_interaction_flags(c_convert, convert.c1, convert.c2re, convert.c2im, convert.c3);
    c_convert->add_option("--to", convert.to, "target parameterization")->check(CLI::IsMember({"connected", "separated"}));
    c_convert->add_flag("--from-connected", convert.from_connected, "input given as --theta --a11 --a12 --a21 --a22");
    c_convert->add_flag("--from-separated", convert.from_separated,
                        "input given as Robin pairs p u' = q u: --plus-p --plus-q --minus-p --minus-q");
    c_convert->add_option("--theta", convert.theta);
    c_convert->add_option("--a11", convert.a11);
    c_convert->add_option("--a12", convert.a12);
    c_convert->add_option("--a21", convert.a21);
    c_convert->add_option("--a22", convert.a22);
    c_convert->add_option("--plus-p", convert.plus_p);
    c_convert->add_option("--plus-q", convert.plus_q);
    c_convert->add_option("--minus-p", convert.minus_p);
    c_convert->add_option("--minus-q", convert.minus_q);
    c_convert->add_option("--out", convert.out, "write to file instead of stdout");

    ScatterArgs scatter;
    auto* c_scatter = app.add_subcommand("scatter", "S-matrix sweep over k (CSV)");
    add_interaction_flags(c_scatter, scatter.c1, scatter.c2re, scatter.c2im, scatter.c3);
    auto* delta_n = c_scatter->add_option("--delta-n", scatter.delta_n, "super-singular order n of c delta^(n)");
    c_scatter->add_option("--coupling", scatter.coupling, "super-singular coupling c")->needs(delta_n);
    c_scatter->add_option("--k-min", scatter.k_min);
    c_scatter->add_option("--k-max", scatter.k_max);
    c_scatter->add_option("--k-steps", scatter.k_steps);
    c_scatter->add_option("--out", scatter.out);

    PropagatorArgs prop;
    auto* c_prop = app.add_subcommand("propagator", "delta-prime propagator on an (x, y) grid (CSV)");
    c_prop->add_option("--coupling", prop.coupling)->required();
    c_prop->add_flag("--imaginary-time", prop.imaginary_time, "heat-kernel axis instead of real time");
    c_prop->add_option("--t", prop.t, "receiver time");
    c_prop->add_option("--s", prop.s, "source time");
    c_prop->add_option("--x", prop.x, "source positions, comma separated")->delimiter(',')->required();
    c_prop->add_option("--y", prop.y, "receiver positions, comma separated")->delimiter(',')->required();
    c_prop->add_option("--out", prop.out);

    BornArgs born;
    auto* c_born = app.add_subcommand("born", "Born-series term table (CSV)");
    c_born->add_option("--coupling", born.coupling)->required();
    c_born->add_option("--terms", born.terms);
    c_born->add_option("--out", born.out);

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "run numerical verification suites");
    c_verify->add_option("--suite", verify.suite)
        ->check(CLI::IsMember({"all", "jumps", "residual", "scatter-oracle", "bc"}));
    c_verify->add_option("--tol", verify.tol, "override every suite tolerance (also POINTKERNEL_TOL)")
        ->check(CLI::PositiveNumber);
    c_verify->add_option("--seed", verify.seed, "seed for randomized checks");
    c_verify->add_option("--out", verify.out);

    SuperSingularArgs ss;
    auto* c_ss = app.add_subcommand("supersingular", "energy-dependent couplings and S-matrix of c delta^(n)");
    c_ss->add_option("--n", ss.n)->required();
    c_ss->add_option("--coupling", ss.coupling)->required();
    c_ss->add_option("--k", ss.k)->required();
    c_ss->add_option("--tol", ss.tol)->check(CLI::PositiveNumber);
    c_ss->add_option("--out", ss.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    const std::string echo = command_echo(argc, argv);
    try {
        if (*c_convert)
            return run_convert(convert, echo);
        if (*c_scatter)
            return run_scatter(scatter, echo);
        if (*c_prop)
            return run_propagator(prop, echo);
        if (*c_born)
            return run_born(born, echo);
        if (*c_verify)
            return run_verify(verify, echo);
        if (*c_ss)
            return run_supersingular(ss, echo);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const pk::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }
    return Usage;
}
