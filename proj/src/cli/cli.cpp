#include "vbell/cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"
#include "vbell/constants.hpp"
#include "vbell/figures.hpp"
#include "vbell/inequalities.hpp"
#include "vbell/localization.hpp"
#include "vbell/optimizer.hpp"
#include "vbell/probabilities.hpp"

namespace vbell::cli
{
namespace
{
//---------------------------------------------------------------------------//
// Argument helpers
//---------------------------------------------------------------------------//
class UsageError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

double parse_double(std::string const& text, std::string const& what)
{
    std::istringstream is(text);
    is.imbue(std::locale::classic());
    double v = 0;
    is >> v;
    if (is.fail() || !is.eof())
        throw UsageError("invalid number for " + what + ": '" + text + "'");
    return v;
}

//! "theta,phi" in radians
Direction parse_direction(std::string const& text, std::string const& what)
{
    auto const comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError(what + " must be given as theta,phi");
    double const theta = parse_double(text.substr(0, comma), what);
    double const phi = parse_double(text.substr(comma + 1), what);
    try
    {
        return Direction(theta, phi);
    }
    catch (std::domain_error const& e)
    {
        throw UsageError(what + ": " + e.what());
    }
}

//! "psi", "xi" or a number
double parse_state(std::string const& text)
{
    if (text == "psi")
        return psi_c;
    if (text == "xi")
        return xi_c;
    return parse_double(text, "--state");
}

Vec3 parse_vec3(std::string const& text, std::string const& what)
{
    std::vector<double> v;
    std::size_t start = 0;
    while (true)
    {
        auto const comma = text.find(',', start);
        v.push_back(parse_double(text.substr(start, comma - start), what));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (v.size() != 3)
        throw UsageError(what + " needs three components px,py,pz");
    return {v[0], v[1], v[2]};
}

//---------------------------------------------------------------------------//
// Output
//---------------------------------------------------------------------------//
struct OutputOptions
{
    std::string format;
    std::string path;
    int precision{12};
};

void add_output_options(CLI::App* cmd, OutputOptions& o, std::string default_format)
{
    o.format = std::move(default_format);
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", o.path, "Write the report to this file");
    cmd->add_option("--precision", o.precision, "Significant digits")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

void emit(OutputOptions const& o, std::string const& text, std::ostream& out)
{
    if (o.path.empty())
    {
        out << text;
        return;
    }
    std::ofstream f(o.path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file " + o.path);
    f << text;
}

std::string dump(Json const& j) { return j.dump(2) + "\n"; }

//---------------------------------------------------------------------------//
// State options shared by several subcommands
//---------------------------------------------------------------------------//
struct StateOptions
{
    std::string state;
    std::optional<double> c_param;
    double x{0};
    std::string n{"0,0"};

    //! c from --c/--cparam, else --state, else psi
    double resolve_c() const
    {
        if (c_param)
        {
            if (!state.empty())
                throw UsageError("give either --state or --c/--cparam, not both");
            return *c_param;
        }
        return state.empty() ? psi_c : parse_state(state);
    }

    CenterOfMassState resolve() const
    {
        CenterOfMassState s{resolve_c(), x, parse_direction(n, "--n")};
        try
        {
            s.validate();
        }
        catch (std::domain_error const& e)
        {
            throw UsageError(e.what());
        }
        return s;
    }
};

void add_state_options(CLI::App* cmd, StateOptions& s, bool c_is_state)
{
    cmd->add_option("--state", s.state, "State: psi, xi, or a value of c");
    cmd->add_option(c_is_state ? "--cparam,--c" : "--cparam", s.c_param,
                    "State parameter c");
    cmd->add_option("--x", s.x, "Boost parameter x = |k|^2 / m^2")
        ->capture_default_str();
    cmd->add_option("--n", s.n, "Particle direction theta,phi")->capture_default_str();
}

//---------------------------------------------------------------------------//
// Directions
//---------------------------------------------------------------------------//
struct DirectionOptions
{
    std::optional<std::string> a, b, c, d;
    std::optional<int> fig;

    std::vector<Direction> resolve() const
    {
        std::vector<Direction> dirs;
        if (fig)
        {
            if (a || b || c || d)
                throw UsageError("--fig cannot be combined with explicit directions");
            FigurePreset p;
            try
            {
                p = figure_preset(*fig);
            }
            catch (std::out_of_range const& e)
            {
                throw UsageError(e.what());
            }
            dirs = {p.settings.a, p.settings.b};
            if (p.settings.c)
                dirs.push_back(*p.settings.c);
            if (p.settings.d)
                dirs.push_back(*p.settings.d);
            return dirs;
        }
        if (!a || !b)
            throw UsageError("directions --a and --b are required");
        dirs = {parse_direction(*a, "--a"), parse_direction(*b, "--b")};
        if (c)
            dirs.push_back(parse_direction(*c, "third direction"));
        if (d)
        {
            if (!c)
                throw UsageError("direction d given without direction c");
            dirs.push_back(parse_direction(*d, "--d"));
        }
        return dirs;
    }

    MeasurementSettings resolve_for(InequalityKind kind) const
    {
        auto const dirs = resolve();
        if (static_cast<int>(dirs.size()) != direction_count(kind))
        {
            throw UsageError(std::string(to_string(kind)) + " needs "
                             + std::to_string(direction_count(kind))
                             + " directions, got "
                             + std::to_string(dirs.size()));
        }
        MeasurementSettings s{dirs[0], dirs[1], dirs[2], std::nullopt};
        if (dirs.size() == 4)
            s.d = dirs[3];
        return s;
    }
};

void add_direction_options(CLI::App* cmd, DirectionOptions& d, bool c_is_direction)
{
    cmd->add_option("--a", d.a, "Direction a as theta,phi");
    cmd->add_option("--b", d.b, "Direction b as theta,phi");
    cmd->add_option(c_is_direction ? "--cdir,--c" : "--cdir", d.c,
                    "Direction c as theta,phi");
    cmd->add_option("--d", d.d, "Direction d as theta,phi");
    cmd->add_option("--fig", d.fig, "Use the direction set of figure preset 1-5");
}

InequalityKind parse_kind(std::string const& name)
{
    try
    {
        return parse_inequality_kind(name);
    }
    catch (std::invalid_argument const& e)
    {
        throw UsageError(e.what());
    }
}

Json result_json(InequalityResult const& r, int precision)
{
    return Json{{"inequality", std::string(to_string(r.kind))},
                {"value", rounded(r.value, precision)},
                {"bound", rounded(r.classical_bound, precision)},
                {"violated", r.violated},
                {"state", to_json(r.state, precision)},
                {"settings", to_json(r.settings, precision)}};
}

std::vector<std::pair<std::string, std::string>>
result_rows(InequalityResult const& r, int precision)
{
    auto num = [precision](double v) { return format_number(v, precision); };
    std::vector<std::pair<std::string, std::string>> rows{
        {"inequality", std::string(to_string(r.kind))},
        {"value", num(r.value)},
        {"bound", num(r.classical_bound)},
        {"violated", r.violated ? "true" : "false"},
        {"c", num(r.state.c)},
        {"x", num(r.state.x)},
        {"n_theta", num(r.state.n.theta())},
        {"n_phi", num(r.state.n.phi())}};
    auto add_dir = [&](std::string const& name, Direction const& d) {
        rows.emplace_back(name + "_theta", num(d.theta()));
        rows.emplace_back(name + "_phi", num(d.phi()));
    };
    add_dir("a", r.settings.a);
    add_dir("b", r.settings.b);
    if (r.settings.c)
        add_dir("c", *r.settings.c);
    if (r.settings.d)
        add_dir("d", *r.settings.d);
    return rows;
}

//---------------------------------------------------------------------------//
// Subcommands
//---------------------------------------------------------------------------//
struct ProbsCommand
{
    StateOptions state;
    std::string a, b;
    std::vector<std::string> engines;
    bool check{false};
    double mass{1};
    std::optional<std::string> k_momentum, p_momentum;
    OutputOptions output;

    void setup(CLI::App* cmd)
    {
        add_state_options(cmd, state, true);
        cmd->add_option("--a", a, "Alice direction theta,phi")->required();
        cmd->add_option("--b", b, "Bob direction theta,phi")->required();
        cmd->add_option("--engine", engines, "closed, trace, psi or xi (repeat with --check)")
            ->check(CLI::IsMember({"closed", "trace", "psi", "xi"}));
        cmd->add_flag("--check", check, "Compare two engines and report the deviation");
        cmd->add_option("--mass", mass, "Boson mass (trace engine)")->capture_default_str();
        cmd->add_option("--k", k_momentum, "Particle 3-momentum px,py,pz (trace engine)");
        cmd->add_option("--p", p_momentum, "Antiparticle 3-momentum px,py,pz (trace engine)");
        add_output_options(cmd, output, "json");
    }

    ProbabilityTable table(std::string const& engine, CenterOfMassState const& s,
                           Direction const& da, Direction const& db) const
    {
        bool const general_frame = k_momentum || p_momentum;
        if (general_frame && engine != "trace")
            throw UsageError("--k/--p are only supported by the trace engine");
        if (engine == "trace")
        {
            if (general_frame)
            {
                if (!k_momentum || !p_momentum)
                    throw UsageError("give both --k and --p");
                ScalarStateSpec spec = [&] {
                    try
                    {
                        return ScalarStateSpec::general(
                            s.c, FourVector::on_shell(mass, parse_vec3(*k_momentum, "--k")),
                            FourVector::on_shell(mass, parse_vec3(*p_momentum, "--p")),
                            mass);
                    }
                    catch (std::domain_error const& e)
                    {
                        throw UsageError(e.what());
                    }
                }();
                return prob_table_trace(spec, da, db);
            }
            return prob_table_trace(s.to_spec(mass), da, db);
        }
        if (engine == "psi")
            return prob_table_psi(s.x, s.n, da, db);
        if (engine == "xi")
            return prob_table_xi(s.x, s.n, da, db);
        return prob_table_closed(s, da, db);
    }

    int run(std::ostream& out) const
    {
        CenterOfMassState const s = state.resolve();
        Direction const da = parse_direction(a, "--a");
        Direction const db = parse_direction(b, "--b");
        int const prec = output.precision;

        if (check)
        {
            std::vector<std::string> pair = engines;
            if (pair.size() != 2)
                pair = {"trace", "closed"};
            double const dev = table(pair[0], s, da, db).max_deviation(table(pair[1], s, da, db));
            constexpr double tol = 1e-10;
            bool const pass = dev < tol;
            if (output.format == "json")
            {
                emit(output,
                     dump(Json{{"command", "probs-check"},
                               {"engines", pair},
                               {"state", to_json(s, prec)},
                               {"max_deviation", rounded(dev, prec)},
                               {"tolerance", tol},
                               {"pass", pass}}),
                     out);
            }
            else
            {
                emit(output,
                     key_value_csv({{"engine_1", pair[0]},
                                    {"engine_2", pair[1]},
                                    {"max_deviation", format_number(dev, prec)},
                                    {"pass", pass ? "true" : "false"}}),
                     out);
            }
            return pass ? exit_ok : exit_numerical;
        }

        if (engines.size() > 1)
            throw UsageError("multiple --engine values need --check");
        std::string const engine = engines.empty() ? "closed" : engines.front();
        ProbabilityTable const t = table(engine, s, da, db);
        if (std::abs(t.sum() - 1) > 1e-8)
            throw NumericalContractError("probability table sum off by more than 1e-8");

        if (output.format == "json")
        {
            emit(output,
                 dump(Json{{"command", "probs"},
                           {"engine", engine},
                           {"state", to_json(s, prec)},
                           {"a", to_json(da, prec)},
                           {"b", to_json(db, prec)},
                           {"p", to_json(t, prec)},
                           {"sum", rounded(t.sum(), prec)},
                           {"correlation", rounded(t.correlation(), prec)}}),
                 out);
        }
        else
        {
            std::vector<std::pair<std::string, std::string>> rows;
            for (Outcome oa : all_outcomes)
                for (Outcome ob : all_outcomes)
                    rows.emplace_back("p[" + outcome_label(oa) + "][" + outcome_label(ob) + "]",
                                      format_number(t(oa, ob), prec));
            rows.emplace_back("sum", format_number(t.sum(), prec));
            rows.emplace_back("correlation", format_number(t.correlation(), prec));
            emit(output, key_value_csv(rows), out);
        }
        return exit_ok;
    }
};

struct IneqCommand
{
    std::string kind;
    StateOptions state;
    DirectionOptions dirs;
    OutputOptions output;

    void setup(CLI::App* cmd)
    {
        cmd->add_option("kind", kind, "chsh, mermin or cglmp")->required();
        add_state_options(cmd, state, false);
        add_direction_options(cmd, dirs, true);
        add_output_options(cmd, output, "json");
    }

    int run(std::ostream& out) const
    {
        InequalityKind const k = parse_kind(kind);
        CenterOfMassState const s = state.resolve();
        InequalityResult const r = evaluate(k, s, dirs.resolve_for(k));
        if (output.format == "json")
        {
            Json j{{"command", "ineq"}};
            j.update(result_json(r, output.precision));
            emit(output, dump(j), out);
        }
        else
        {
            emit(output, key_value_csv(result_rows(r, output.precision)), out);
        }
        return exit_ok;
    }
};

struct GridOptions
{
    double xmin{0};
    double xmax{5};
    double step{0.01};
};

void add_grid_options(CLI::App* cmd, GridOptions& g)
{
    cmd->add_option("--xmin", g.xmin, "First grid point")->capture_default_str();
    cmd->add_option("--xmax", g.xmax, "Last grid point")->capture_default_str();
    cmd->add_option("--step", g.step, "Grid spacing")->capture_default_str();
}

std::vector<double> resolve_grid(GridOptions const& g)
{
    try
    {
        return make_grid(g.xmin, g.xmax, g.step);
    }
    catch (std::invalid_argument const& e)
    {
        throw UsageError(e.what());
    }
}

//! CSV or JSON text for scan rows.
std::string render_scan(std::vector<ScanRow> const& rows,
                        std::vector<std::string> const& columns, double bound,
                        OutputOptions const& output, Json const& header)
{
    int const prec = output.precision;
    if (output.format == "csv")
    {
        std::string s = "x";
        for (auto const& c : columns)
            s += "," + c;
        s += ",bound\n";
        std::string const bound_text = format_number(bound, prec);
        for (auto const& row : rows)
        {
            s += format_number(row.x, prec);
            for (double v : row.values)
                s += "," + format_number(v, prec);
            s += "," + bound_text + "\n";
        }
        return s;
    }
    Json j = header;
    std::vector<std::string> cols{"x"};
    cols.insert(cols.end(), columns.begin(), columns.end());
    cols.emplace_back("bound");
    j["columns"] = cols;
    Json data = Json::array();
    for (auto const& row : rows)
    {
        Json r = Json::array({rounded(row.x, prec)});
        for (double v : row.values)
            r.push_back(rounded(v, prec));
        r.push_back(rounded(bound, prec));
        data.push_back(r);
    }
    j["rows"] = data;
    return dump(j);
}

struct ScanCommand
{
    std::string kind;
    std::vector<double> c_values;
    std::string n{"0,0"};
    DirectionOptions dirs;
    GridOptions grid;
    OutputOptions output;

    void setup(CLI::App* cmd)
    {
        cmd->add_option("--ineq", kind, "chsh, mermin or cglmp")->required();
        cmd->add_option("--c,--cparam", c_values,
                        "State parameters to scan (default: psi and xi)");
        cmd->add_option("--n", n, "Particle direction theta,phi")->capture_default_str();
        add_direction_options(cmd, dirs, false);
        add_grid_options(cmd, grid);
        add_output_options(cmd, output, "csv");
    }

    int run(std::ostream& out) const
    {
        InequalityKind const k = parse_kind(kind);
        MeasurementSettings const settings = dirs.resolve_for(k);
        Direction const nd = parse_direction(n, "--n");
        auto const xs = resolve_grid(grid);

        std::vector<double> cs{psi_c, xi_c};
        std::vector<std::string> columns{"value_psi", "value_xi"};
        if (!c_values.empty())
        {
            cs = c_values;
            columns.clear();
            for (double c : cs)
                columns.push_back("value_c=" + format_number(c, output.precision));
        }
        auto const rows = scan(k, settings, nd, cs, xs);
        Json header{{"command", "scan"},
                    {"inequality", std::string(to_string(k))},
                    {"n", to_json(nd, output.precision)},
                    {"settings", to_json(settings, output.precision)},
                    {"c", cs}};
        emit(output, render_scan(rows, columns, classical_bound(k), output, header), out);
        return exit_ok;
    }
};

struct FigureCommand
{
    int id{0};
    GridOptions grid;
    OutputOptions output;

    void setup(CLI::App* cmd)
    {
        cmd->add_option("--id", id, "Figure preset 1-5")->required();
        add_grid_options(cmd, grid);
        add_output_options(cmd, output, "csv");
    }

    int run(std::ostream& out) const
    {
        FigurePreset preset;
        try
        {
            preset = figure_preset(id);
        }
        catch (std::out_of_range const& e)
        {
            throw UsageError(e.what());
        }
        auto const xs = resolve_grid(grid);
        std::vector<double> const cs{psi_c, xi_c};
        auto const rows = scan(preset.kind, preset.settings, preset.n, cs, xs);
        int const prec = output.precision;

        Json settings{{"command", "figure"},
                      {"id", id},
                      {"inequality", std::string(to_string(preset.kind))},
                      {"bound", classical_bound(preset.kind)},
                      {"n", to_json(preset.n, prec)},
                      {"settings", to_json(preset.settings, prec)},
                      {"states", Json{{"psi", psi_c}, {"xi", xi_c}}},
                      {"grid",
                       Json{{"xmin", grid.xmin},
                            {"xmax", grid.xmax},
                            {"step", grid.step},
                            {"count", xs.size()}}}};
        emit(output,
             render_scan(rows, {"value_psi", "value_xi"}, classical_bound(preset.kind),
                         output, settings),
             out);
        if (!output.path.empty())
        {
            Json sidecar = settings;
            sidecar["output"] = output.path;
            sidecar["format"] = output.format;
            sidecar["precision"] = prec;
            std::ofstream f(output.path + ".json", std::ios::binary);
            if (!f)
                throw std::runtime_error("cannot write sidecar " + output.path + ".json");
            f << dump(sidecar);
        }
        return exit_ok;
    }
};

struct OptimizeCommand
{
    std::string kind;
    StateOptions state;
    OptimizerConfig config;
    OutputOptions output;

    void setup(CLI::App* cmd)
    {
        cmd->add_option("--ineq", kind, "chsh, mermin or cglmp")->required();
        add_state_options(cmd, state, true);
        cmd->add_option("--restarts", config.restarts, "Multistart count")
            ->capture_default_str();
        cmd->add_option("--max-iters", config.max_iters, "Simplex iterations per restart")
            ->capture_default_str();
        cmd->add_option("--tolerance", config.simplex_tolerance,
                        "Simplex value-spread tolerance")
            ->capture_default_str();
        cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
        add_output_options(cmd, output, "json");
    }

    int run(std::ostream& out) const
    {
        InequalityKind const k = parse_kind(kind);
        CenterOfMassState const s = state.resolve();
        try
        {
            config.validate();
        }
        catch (std::invalid_argument const& e)
        {
            throw UsageError(e.what());
        }
        OptimizeResult const r = optimize(k, s, config);
        int const prec = output.precision;
        if (output.format == "json")
        {
            Json j{{"command", "optimize"}};
            j.update(result_json(r.best, prec));
            j["restarts"] = r.restarts;
            j["seed"] = config.seed;
            j["evaluations"] = r.evaluations;
            j["best_initial"] = rounded(r.best_initial, prec);
            emit(output, dump(j), out);
        }
        else
        {
            auto rows = result_rows(r.best, prec);
            rows.emplace_back("restarts", std::to_string(r.restarts));
            rows.emplace_back("seed", std::to_string(config.seed));
            rows.emplace_back("evaluations", std::to_string(r.evaluations));
            rows.emplace_back("best_initial", format_number(r.best_initial, prec));
            emit(output, key_value_csv(rows), out);
        }
        return exit_ok;
    }
};

struct LocalizeCommand
{
    std::string particle{"muon"};
    std::optional<double> lambda;
    double edge{1e-6};
    double gamma{1};
    OutputOptions output;

    void setup(CLI::App* cmd)
    {
        cmd->add_option("--particle", particle, "muon, electron or custom")
            ->check(CLI::IsMember({"muon", "electron", "custom"}))
            ->capture_default_str();
        cmd->add_option("--lambda", lambda, "Reduced Compton wavelength in m (custom)");
        cmd->add_option("--l", edge, "Detector edge length in m")->capture_default_str();
        cmd->add_option("--gamma", gamma, "Lorentz factor")->capture_default_str();
        add_output_options(cmd, output, "json");
    }

    int run(std::ostream& out) const
    {
        double wavelength = 0;
        if (particle == "muon")
            wavelength = constants::reduced_compton_wavelength(constants::muon_mass);
        else if (particle == "electron")
            wavelength = constants::reduced_compton_wavelength(constants::electron_mass);
        else if (!lambda)
            throw UsageError("--particle custom needs --lambda");
        if (lambda)
            wavelength = *lambda;

        LocalizationParams const params{edge, wavelength, gamma};
        double tau = 0;
        CubeKernel kernel;
        try
        {
            tau = scaling_factor(params);
            kernel = delta_cube(Vec3::Zero(), params);
        }
        catch (std::domain_error const& e)
        {
            throw UsageError(e.what());
        }
        int const prec = output.precision;
        if (output.format == "json")
        {
            emit(output,
                 dump(Json{{"command", "localize"},
                           {"particle", particle},
                           {"lambda_m", rounded(wavelength, prec)},
                           {"edge_length_m", rounded(edge, prec)},
                           {"gamma", rounded(gamma, prec)},
                           {"tau", rounded(tau, prec)},
                           {"shape_at_zero", rounded(kernel.shape, prec)},
                           {"prefactor", rounded(kernel.prefactor, prec)}}),
                 out);
        }
        else
        {
            emit(output,
                 key_value_csv({{"particle", particle},
                                {"lambda_m", format_number(wavelength, prec)},
                                {"edge_length_m", format_number(edge, prec)},
                                {"gamma", format_number(gamma, prec)},
                                {"tau", format_number(tau, prec)},
                                {"shape_at_zero", format_number(kernel.shape, prec)},
                                {"prefactor", format_number(kernel.prefactor, prec)}}),
                 out);
        }
        return exit_ok;
    }
};

//---------------------------------------------------------------------------//
// Config files
//---------------------------------------------------------------------------//
/*!
 * Replace "--config FILE" after a subcommand by the flags the file holds.
 *
 * Keys are option names without dashes. Keys at top level or in a section
 * named after the subcommand apply; options also given on the command line
 * keep their command-line value.
 */
std::vector<std::string> expand_config(std::vector<std::string> const& args)
{
    std::size_t pos = 0;
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i)
    {
        if (args[i] == "--config" && i + 1 < args.size())
        {
            pos = i;
            path = args[i + 1];
            break;
        }
        if (args[i].rfind("--config=", 0) == 0)
        {
            pos = i;
            path = args[i].substr(9);
            break;
        }
    }
    if (pos == 0)
        return args;
    if (pos == 1)
        throw CLI::ValidationError("--config", "must follow the subcommand");
    std::string const& subcommand = args[1];
    std::size_t const width = args[pos] == "--config" ? 2 : 1;

    auto given = [&](std::string const& flag) {
        for (auto const& a : args)
        {
            if (a == flag || a.rfind(flag + "=", 0) == 0)
                return true;
        }
        return false;
    };

    std::vector<std::string> out(args.begin(), args.begin() + static_cast<long>(pos));
    for (auto const& item : CLI::ConfigTOML().from_file(path))
    {
        bool const applies = item.parents.empty()
                             || (item.parents.size() == 1 && item.parents[0] == subcommand);
        if (!applies || item.name == "++" || item.name == "--")
            continue;
        std::string const flag = "--" + item.name;
        if (given(flag))
            continue;
        for (auto const& value : item.inputs)
            out.push_back(flag + "=" + value);
    }
    out.insert(out.end(), args.begin() + static_cast<long>(pos + width), args.end());
    return out;
}

}  // namespace

//---------------------------------------------------------------------------//
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bell-type inequalities for relativistic vector boson pairs", "vbell"};
    app.require_subcommand(1);

    ProbsCommand probs;
    IneqCommand ineq;
    ScanCommand scan_cmd;
    FigureCommand figure;
    OptimizeCommand optimize_cmd;
    LocalizeCommand localize;

    auto* probs_app = app.add_subcommand("probs", "Joint outcome probability table");
    auto* ineq_app = app.add_subcommand("ineq", "Evaluate a Bell-type inequality");
    auto* scan_app = app.add_subcommand("scan", "Inequality values along an x grid");
    auto* figure_app = app.add_subcommand("figure", "Reproduce a figure preset as CSV");
    auto* optimize_app = app.add_subcommand("optimize", "Maximize an inequality over settings");
    auto* localize_app = app.add_subcommand("localize", "Detector localization scaling");

    // Consumed by expand_config before parsing; declared for help and validation
    std::string config_path;
    for (auto* sub : {probs_app, ineq_app, scan_app, figure_app, optimize_app, localize_app})
        sub->add_option("--config", config_path, "Read options from a key = value file");

    probs.setup(probs_app);
    ineq.setup(ineq_app);
    scan_cmd.setup(scan_app);
    figure.setup(figure_app);
    optimize_cmd.setup(optimize_app);
    localize.setup(localize_app);

    std::vector<std::string> expanded;
    try
    {
        expanded = expand_config(args);
    }
    catch (CLI::Error const& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    std::vector<char const*> argv;
    argv.reserve(expanded.size());
    for (auto const& a : expanded)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return exit_ok;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try
    {
        if (probs_app->parsed())
            return probs.run(out);
        if (ineq_app->parsed())
            return ineq.run(out);
        if (scan_app->parsed())
            return scan_cmd.run(out);
        if (figure_app->parsed())
            return figure.run(out);
        if (optimize_app->parsed())
            return optimize_cmd.run(out);
        if (localize_app->parsed())
            return localize.run(out);
    }
    catch (NumericalContractError const& e)
    {
        err << "numerical contract violated: " << e.what() << "\n";
        return exit_numerical;
    }
    catch (std::invalid_argument const& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (std::domain_error const& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_usage;
}

}  // namespace vbell::cli
