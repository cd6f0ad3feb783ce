#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grushin/grid.hpp"
#include "grushin/gtransform.hpp"
#include "grushin/heat.hpp"
#include "grushin/io.hpp"
#include "grushin/verify.hpp"

namespace grushin::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs one library step and tags any error with the module and operation.
template <class F>
auto step(const char* where, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const std::exception& e) {
        throw Failure(std::string(where) + ": " + e.what());
    }
}

// String-valued flags, filled from the command line first and the config file second.
class Flags {
public:
    void add(CLI::App* app, const std::string& key, const std::string& help)
    {
        options_[key] = app->add_option("--" + key, values_[key], help);
    }

    void merge(const io::Header& config)
    {
        for (const auto& [key, opt] : options_)
            if (opt->count() == 0) {
                const auto it = config.find(key);
                if (it != config.end())
                    values_[key] = it->second;
                else
                    values_.erase(key);
            }
    }

    std::optional<std::string> get(const std::string& key) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            return std::nullopt;
        return it->second;
    }

    std::string need(const std::string& key) const
    {
        auto v = get(key);
        if (!v)
            throw UsageError("missing required flag --" + key);
        return *v;
    }

    double real(const std::string& key) const { return to_real(key, need(key)); }

    std::optional<double> maybe_real(const std::string& key) const
    {
        auto v = get(key);
        if (!v)
            return std::nullopt;
        return to_real(key, *v);
    }

    int integer(const std::string& key, int fallback) const
    {
        auto v = get(key);
        if (!v)
            return fallback;
        const double x = to_real(key, *v);
        if (x != std::floor(x) || x < 1 || x > 1e6)
            throw UsageError("--" + key + ": expected a positive integer, got '" + *v + "'");
        return static_cast<int>(x);
    }

    std::string input(const std::string& key) const
    {
        const std::string path = need(key);
        if (!std::filesystem::exists(path))
            throw UsageError("--" + key + ": no such file '" + path + "'");
        return path;
    }

    static double to_real(const std::string& key, const std::string& text)
    {
        try {
            const double x = io::parse_real(text);
            if (!std::isfinite(x))
                throw std::invalid_argument("non-finite");
            return x;
        } catch (const std::invalid_argument&) {
            throw UsageError("--" + key + ": expected a real number, got '" + text + "'");
        }
    }

private:
    std::map<std::string, std::string> values_;
    std::map<std::string, CLI::Option*> options_;
};

double type_param(const Flags& f, const std::string& key, std::optional<double> fallback)
{
    const auto v = f.maybe_real(key);
    if (!v && !fallback)
        throw UsageError("missing required flag --" + key);
    const double x = v ? *v : *fallback;
    if (!(x > -1.0))
        throw UsageError("--" + key + ": must be > -1");
    return x;
}

TypePair type_pair(const Flags& f, std::optional<TypePair> fallback = std::nullopt)
{
    return {type_param(f, "alpha", fallback ? std::optional(fallback->alpha.value()) : std::nullopt),
            type_param(f, "beta", fallback ? std::optional(fallback->beta.value()) : std::nullopt)};
}

double time_param(const Flags& f)
{
    const double t = f.real("t");
    if (!(t > 0.0))
        throw UsageError("--t: must be > 0");
    return t;
}

io::Header type_header(const std::string& format, const TypePair& tp)
{
    return {{"format", format}, {"alpha", io::format_real(tp.alpha.value())}, {"beta", io::format_real(tp.beta.value())}};
}

std::vector<double> parse_list(const std::string& key, const std::string& text, char sep)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        out.push_back(Flags::to_real(key, item));
    return out;
}

// log:a:b:n or lin:a:b:n
std::vector<double> parse_grid(const std::string& text)
{
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    if (colon == std::string::npos || (kind != "log" && kind != "lin"))
        throw UsageError("--grid: expected log:a:b:n or lin:a:b:n, got '" + text + "'");
    const auto v = parse_list("grid", text.substr(colon + 1), ':');
    if (v.size() != 3 || v[2] < 2 || v[2] != std::floor(v[2]) || !(v[1] > v[0]) || (kind == "log" && !(v[0] > 0)))
        throw UsageError("--grid: need a < b, n >= 2 (and a > 0 for log), got '" + text + "'");
    const int n = static_cast<int>(v[2]);
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) / (n - 1);
        xs[i] = kind == "log" ? std::exp(std::log(v[0]) + u * (std::log(v[1]) - std::log(v[0])))
                              : v[0] + u * (v[1] - v[0]);
    }
    return xs;
}

io::GridFile load_grid(const std::string& path)
{
    return step("io.read_grid", [&] { return io::read_grid(path); });
}

int cmd_gtransform(const Flags& f, std::ostream& out)
{
    const auto input = load_grid(f.input("input"));
    const TypePair tp = type_pair(f, input.tp);
    const std::string output = f.need("output");
    gt::TransformOptions opts;
    opts.n_max = f.integer("nmax", opts.n_max);
    const auto sd = step("gtransform.g_forward_sampled", [&] {
        return gt::g_forward_sampled(tp, trapezoid_rule(input.grid.r_nodes), trapezoid_rule(input.grid.s_nodes),
                                     input.grid.values.data(), opts);
    });
    step("io.write_spectral", [&] { io::write_spectral(output, sd); });
    out << "wrote " << output << ": n_max=" << sd.n_max << " n_tau=" << sd.tau_grid.size()
        << " norm=" << io::format_real(gt::plancherel_norm(sd)) << '\n';
    return ok;
}

int cmd_igtransform(const Flags& f, std::ostream& out)
{
    const auto sd = step("io.read_spectral", [&] { return io::read_spectral(f.input("input")); });
    const auto pts = step("io.read_points", [&] { return io::read_points(f.input("points")); });
    const std::string output = f.need("output");
    const auto values = step("gtransform.g_inverse", [&] { return gt::g_inverse(sd, pts); });
    step("io.write_point_values", [&] { io::write_point_values(output, type_header("values", sd.tp), pts, values); });
    out << "wrote " << output << ": " << pts.size() << " points\n";
    return ok;
}

int cmd_heat_kernel(const Flags& f, std::ostream& out)
{
    const double t = time_param(f);
    const TypePair tp = type_pair(f);
    const auto p = parse_list("point", f.need("point"), ',');
    if (p.size() != 4 || !(p[0] > 0) || !(p[1] > 0) || !(p[2] > 0) || !(p[3] > 0))
        throw UsageError("--point: expected four positive reals r,s,u,v");
    const double k = step("heat.heat_kernel", [&] { return heat::heat_kernel({t, tp}, p[0], p[1], p[2], p[3]); });
    out << io::format_real(k) << '\n';
    return ok;
}

int cmd_heat_apply(const Flags& f, std::ostream& out)
{
    const double t = time_param(f);
    const auto input = load_grid(f.input("input"));
    const TypePair tp = type_pair(f, input.tp);
    const auto pts = step("io.read_points", [&] { return io::read_points(f.input("points")); });
    const std::string output = f.need("output");
    const std::string route = f.get("route").value_or("kernel");
    const auto rr = trapezoid_rule(input.grid.r_nodes);
    const auto sr = trapezoid_rule(input.grid.s_nodes);
    const HeatParams hp(t, tp);
    std::vector<double> values;
    if (route == "kernel") {
        values = step("heat.heat_apply_sampled",
                      [&] { return heat::heat_apply_sampled(hp, rr, sr, input.grid.values.data(), pts); });
    } else if (route == "spectral") {
        gt::TransformOptions opts;
        opts.n_max = f.integer("nmax", opts.n_max);
        const auto sd = step("gtransform.g_forward_sampled",
                             [&] { return gt::g_forward_sampled(tp, rr, sr, input.grid.values.data(), opts); });
        const auto decayed = step("gtransform.apply_multiplier", [&] {
            return gt::apply_multiplier(sd, {[t](double y) { return std::exp(-t * y); }, true});
        });
        values = step("gtransform.g_inverse", [&] { return gt::g_inverse(decayed, pts); });
    } else {
        throw UsageError("--route: expected kernel or spectral, got '" + route + "'");
    }
    auto header = type_header("values", tp);
    header["t"] = io::format_real(t);
    header["route"] = route;
    step("io.write_point_values", [&] { io::write_point_values(output, header, pts, values); });
    out << "wrote " << output << ": " << pts.size() << " points\n";
    return ok;
}

int cmd_profiles(const Flags& f, std::ostream& out)
{
    const std::string kind = f.need("kind");
    if (kind != "F1" && kind != "F2")
        throw UsageError("--kind: expected F1 or F2, got '" + kind + "'");
    const TypePair tp = type_pair(f);
    const auto xs = parse_grid(f.get("grid").value_or("log:1e-3:1e-1:25"));
    const std::string output = f.need("output");
    const auto ys = step("heat.diagonal_profile", [&] {
        return heat::diagonal_profile(kind == "F1" ? heat::Profile::F1 : heat::Profile::F2, tp, xs);
    });
    const double slope = heat::loglog_slope(xs, ys);
    auto header = type_header("profile", tp);
    header["kind"] = kind;
    header["slope"] = io::format_real(slope);
    step("io.write_columns", [&] { io::write_columns(output, header, {"x", "value"}, {xs, ys}); });
    out << "wrote " << output << ": slope=" << io::format_real(slope) << '\n';
    return ok;
}

int cmd_verify(const Flags& f, std::ostream& out)
{
    const std::string suite = f.get("suite").value_or("all");
    if (!verify::is_suite(suite))
        throw UsageError("--suite: unknown suite '" + suite + "'");
    const double scale = f.maybe_real("tol-scale").value_or(1.0);
    if (!(scale > 0.0))
        throw UsageError("--tol-scale: must be > 0");
    const auto results = verify::run_suite(suite, scale);
    verify::print_table(out, results);
    return verify::all_pass(results) ? ok : failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectral toolkit for bi-radial Grushin-type operators"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("--config", config_path, "key=value file; flags override its values");

    struct Command {
        const char* name;
        const char* help;
        std::vector<std::pair<const char*, const char*>> flags;
        int (*body)(const Flags&, std::ostream&);
    };
    const std::vector<Command> commands = {
        {"gtransform",
         "forward transform of a grid file",
         {{"alpha", "type parameter alpha > -1 (default: input header)"},
          {"beta", "type parameter beta > -1 (default: input header)"},
          {"input", "grid file f.csv"},
          {"nmax", "number of Laguerre indices (default 96)"},
          {"output", "spectral file F.csv"}},
         cmd_gtransform},
        {"igtransform",
         "inverse transform at points",
         {{"input", "spectral file F.csv"}, {"points", "points file r,s"}, {"output", "values file"}},
         cmd_igtransform},
        {"heat-kernel",
         "one heat-kernel value",
         {{"t", "time > 0"}, {"alpha", "alpha > -1"}, {"beta", "beta > -1"}, {"point", "r,s,u,v"}},
         cmd_heat_kernel},
        {"heat-apply",
         "heat semigroup applied to a grid file",
         {{"t", "time > 0"},
          {"alpha", "alpha > -1 (default: input header)"},
          {"beta", "beta > -1 (default: input header)"},
          {"input", "grid file f.csv"},
          {"points", "points file r,s"},
          {"route", "kernel or spectral (default kernel)"},
          {"nmax", "Laguerre indices for the spectral route (default 96)"},
          {"output", "values file"}},
         cmd_heat_apply},
        {"profiles",
         "diagonal kernel profiles at t = 1/2",
         {{"kind", "F1 or F2"},
          {"alpha", "alpha > -1"},
          {"beta", "beta > -1"},
          {"grid", "log:a:b:n or lin:a:b:n (default log:1e-3:1e-1:25)"},
          {"output", "csv file"}},
         cmd_profiles},
        {"verify",
         "run a verification suite",
         {{"suite", "all|specfun|hankel|laguerre|gtransform|heat|diffop (default all)"},
          {"tol-scale", "multiplier for the error bounds (default 1)"}},
         cmd_verify},
    };

    std::vector<Flags> flags(commands.size());
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].help);
        for (const auto& [key, help] : commands[i].flags)
            flags[i].add(sub, key, help);
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    for (std::size_t i = 0; i < commands.size(); ++i) {
        if (!subs[i]->parsed())
            continue;
        try {
            io::Header config;
            if (!config_path.empty()) {
                if (!std::filesystem::exists(config_path))
                    throw UsageError("--config: no such file '" + config_path + "'");
                config = step("io.read_config", [&] { return io::read_config(config_path); });
            }
            flags[i].merge(config);
            return commands[i].body(flags[i], out);
        } catch (const UsageError& e) {
            err << commands[i].name << ": usage error: " << e.what() << '\n';
            return usage;
        } catch (const std::exception& e) {
            err << commands[i].name << ": " << e.what() << '\n';
            return failure;
        }
    }
    return usage;
}

}  // namespace grushin::cli
