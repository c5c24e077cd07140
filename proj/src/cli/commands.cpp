#include "twobc/cli/commands.hpp"

#include "twobc/core_model.hpp"
#include "twobc/errors.hpp"
#include "twobc/path_integral.hpp"
#include "twobc/quantization.hpp"
#include "twobc/two_time_bvp.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <ostream>
#include <set>

namespace twobc::cli
{
    using nlohmann::json;

    namespace
    {
        json nullable(const std::optional<double>& v)
        {
            return v ? json(*v) : json(nullptr);
        }

        // Physical inputs shared by every command, converted to natural units.
        struct Physics
        {
            FieldParams params;
            bool si = false;

            double length(const KeyValueConfig& cfg, const std::string& key) const
            {
                const double v = cfg.get_positive(key);
                return si ? si::length_to_natural(v) : v;
            }
        };

        Physics read_physics(const KeyValueConfig& cfg)
        {
            const std::string units = cfg.get_string("units", "natural");
            if (units != "natural" && units != "si")
                throw ConfigError("key 'units' must be 'natural' or 'si', got '" + units + "'");
            const double mass = cfg.get_double("mass");
            if (mass < 0.0)
                throw ConfigError("key 'mass' must be >= 0");
            Physics p{FieldParams(0.0), units == "si"};
            p.params = p.si ? FieldParams::from_si_mass(mass) : FieldParams(mass);
            return p;
        }

        json physics_json(const Physics& p)
        {
            return json{{"units", p.si ? "si" : "natural"},
                        {"mass", p.params.mass()},
                        {"speed_of_light", p.params.speed_of_light()},
                        {"hbar", p.params.hbar()},
                        {"rest_angular_frequency", p.params.compton_angular_frequency()}};
        }

        ConstraintForm read_form(const KeyValueConfig& cfg, const Overrides& ov)
        {
            std::string name = cfg.get_string("form", "dispersion");
            if (ov.form)
                name = *ov.form;
            if (name == "dispersion")
                return ConstraintForm::DispersionConsistent;
            if (name == "paper")
                return ConstraintForm::PaperLiteral;
            throw ConfigError("key 'form' must be 'dispersion' or 'paper', got '" + name + "'");
        }

        PairSearchOptions read_search(const KeyValueConfig& cfg)
        {
            PairSearchOptions opts;
            const long long cap = cfg.get_int("max_n_x", opts.max_n_x);
            if (cap < 1 || cap > 10'000'000)
                throw ConfigError("key 'max_n_x' must be in [1, 1e7]");
            opts.max_n_x = static_cast<int>(cap);
            return opts;
        }

        std::size_t read_count(const KeyValueConfig& cfg, const std::string& key, long long min_value,
                               std::optional<long long> fallback = std::nullopt)
        {
            const long long v = fallback ? cfg.get_int(key, *fallback) : cfg.get_int(key);
            if (v < min_value)
                throw ConfigError("key '" + key + "' must be >= " + std::to_string(min_value));
            return static_cast<std::size_t>(v);
        }

        BoundarySlice read_slice(const KeyValueConfig& cfg, const std::string& key, const CavityGrid& grid,
                                 std::size_t n_modes)
        {
            const std::string file_key = key + "_file";
            const bool inline_given = cfg.has(key);
            const bool file_given = cfg.has(file_key);
            if (inline_given == file_given)
                throw ConfigError("give exactly one of '" + key + "' (sine coefficients) or '" + file_key
                                  + "' (sampled profile)");
            if (inline_given)
                return BoundarySlice{cfg.get_doubles(key)};

            std::filesystem::path path = cfg.get_string(file_key);
            if (path.is_relative())
                path = cfg.base_dir() / path;
            const auto samples = read_samples(path);
            if (samples.size() != grid.n_space())
                throw ConfigError("key '" + file_key + "': profile has " + std::to_string(samples.size())
                                  + " samples, n_space is " + std::to_string(grid.n_space()));
            return decompose_profile(samples, grid, n_modes);
        }
    } // namespace

    CommandOutput run_pairs(const KeyValueConfig& cfg, const Overrides& ov)
    {
        const Physics phys = read_physics(cfg);
        const double length = phys.length(cfg, "length");
        const double delta_t = cfg.get_positive("delta_t");
        const double tolerance = ov.tolerance ? *ov.tolerance : cfg.get_positive("tolerance", 1e-9);
        const ConstraintForm form = read_form(cfg, ov);
        const PairSearchOptions search = read_search(cfg);
        cfg.reject_unused();

        const auto pairs = find_admissible_pairs(phys.params, length, delta_t, tolerance, form, search);

        CsvTable table({"n_x", "n_t", "residual", "frequency"});
        json list = json::array();
        std::set<int> n_ts;
        for (const auto& p : pairs)
        {
            const double frequency = static_cast<double>(p.n_t) * pi / delta_t;
            const Mode mode = make_mode(phys.params, length, p.n_x);
            list.push_back(json{{"n_x", p.n_x},
                                {"n_t", p.n_t},
                                {"residual", p.residual},
                                {"frequency", frequency},
                                {"wavenumber", mode.wavenumber},
                                {"dispersion_frequency", mode.frequency}});
            table.add_row(std::vector<std::string>{std::to_string(p.n_x), std::to_string(p.n_t),
                                                   format_double(p.residual), format_double(frequency)});
            n_ts.insert(p.n_t);
        }
        json bounds = json::array();
        for (int n_t : n_ts)
            bounds.push_back(json{{"n_t", n_t}, {"bound", nullable(compton_bound(phys.params, n_t))}});

        json report{{"command", "pairs"},
                    {"inputs", cfg.raw()},
                    {"natural_units", physics_json(phys)},
                    {"length", length},
                    {"delta_t", delta_t},
                    {"form", to_string(form)},
                    {"tolerance", tolerance},
                    {"max_n_x", search.max_n_x},
                    {"pairs", list},
                    {"pair_count", pairs.size()},
                    {"compton_bounds", bounds}};
        return {report, table};
    }

    CommandOutput run_scan(const KeyValueConfig& cfg, const Overrides& ov)
    {
        const Physics phys = read_physics(cfg);
        const double length = phys.length(cfg, "length");
        const double dt_min = cfg.get_positive("dt_min");
        const double dt_max = cfg.get_positive("dt_max");
        if (!(dt_min < dt_max))
            throw ConfigError("keys 'dt_min' and 'dt_max' must satisfy dt_min < dt_max");
        const std::size_t steps = read_count(cfg, "steps", 2);
        const ConstraintForm form = read_form(cfg, ov);
        const PairSearchOptions search = read_search(cfg);

        std::vector<double> tolerances;
        if (ov.tolerance)
        {
            tolerances = {*ov.tolerance};
            // The flag wins; still consume the keys so they are not "unknown".
            if (cfg.has("tolerance"))
                cfg.get_positive("tolerance");
            if (cfg.has("tolerances"))
                cfg.get_doubles("tolerances");
        }
        else if (cfg.has("tolerances"))
        {
            if (cfg.has("tolerance"))
                throw ConfigError("give either 'tolerance' or 'tolerances', not both");
            tolerances = cfg.get_doubles("tolerances");
            for (double t : tolerances)
                if (!(t > 0.0))
                    throw ConfigError("key 'tolerances' entries must be > 0");
        }
        else
        {
            tolerances = {cfg.get_positive("tolerance", 1e-9)};
        }
        cfg.reject_unused();

        const bool sweep = cfg.has("tolerances") && !ov.tolerance;
        CsvTable table = sweep ? CsvTable({"tolerance", "delta_t", "solution_count"})
                               : CsvTable({"delta_t", "solution_count"});
        json summaries = json::array();
        for (double tol : tolerances)
        {
            const auto rep = scan_delta_t(phys.params, length, dt_min, dt_max, steps, tol, form, search);
            std::size_t hits = 0;
            for (std::size_t i = 0; i < steps; ++i)
            {
                if (rep.solution_counts[i] > 0)
                    ++hits;
                std::vector<std::string> row{format_double(rep.delta_t_values[i]),
                                             std::to_string(rep.solution_counts[i])};
                if (sweep)
                    row.insert(row.begin(), format_double(tol));
                table.add_row(row);
            }
            summaries.push_back(json{{"tolerance", tol},
                                     {"admissible_fraction", rep.admissible_fraction},
                                     {"admissible_points", hits},
                                     {"steps", steps}});
        }

        json report{{"command", "scan"},
                    {"inputs", cfg.raw()},
                    {"natural_units", physics_json(phys)},
                    {"length", length},
                    {"dt_min", dt_min},
                    {"dt_max", dt_max},
                    {"form", to_string(form)},
                    {"max_n_x", search.max_n_x},
                    {"summaries", summaries}};
        return {report, table};
    }

    CommandOutput run_bvp(const KeyValueConfig& cfg, const Overrides& ov)
    {
        const Physics phys = read_physics(cfg);
        const double length = phys.length(cfg, "length");
        const double delta_t = cfg.get_positive("delta_t");
        const std::size_t n_space = read_count(cfg, "n_space", 2);
        const std::size_t n_time = read_count(cfg, "n_time", 2);
        const CavityGrid grid(length, delta_t, n_space, n_time);

        const std::size_t n_modes = read_count(cfg, "n_modes", 1, static_cast<long long>(n_space));
        if (n_modes > n_space)
            throw ConfigError("key 'n_modes' exceeds n_space; the grid cannot resolve that many modes");

        BvpTolerances tol;
        tol.resonance = cfg.get_positive("resonance_tolerance", tol.resonance);
        tol.compatibility = cfg.get_positive("compatibility_tolerance", tol.compatibility);
        if (ov.tolerance)
            tol.resonance = tol.compatibility = *ov.tolerance;

        const std::string model_name = cfg.get_string("frequency_model", "continuum");
        if (model_name != "continuum" && model_name != "stencil")
            throw ConfigError("key 'frequency_model' must be 'continuum' or 'stencil'");
        const FrequencyModel model =
            model_name == "stencil" ? FrequencyModel::DiscreteStencil : FrequencyModel::Continuum;

        const BoundarySlice initial = read_slice(cfg, "initial", grid, n_modes);
        const BoundarySlice final = read_slice(cfg, "final", grid, n_modes);
        cfg.reject_unused();
        if (initial.n_modes() != final.n_modes())
            throw ConfigError("mode-count mismatch: initial has " + std::to_string(initial.n_modes())
                              + " modes, final has " + std::to_string(final.n_modes()));

        const FieldSolution sol = solve_field_bvp(phys.params, grid, initial, final, tol, model);

        CsvTable table({"t", "x", "phi"});
        for (std::size_t j = 0; j < sol.field.rows(); ++j)
            for (std::size_t i = 0; i < sol.field.cols(); ++i)
                table.add_row(std::vector<double>{grid.t(j), grid.x(i), sol.field(j, i)});

        json modes = json::array();
        json infeasible = json::array();
        for (const auto& m : sol.mode_solutions)
        {
            modes.push_back(json{{"n_x", m.mode.n_x},
                                 {"classification", to_string(m.classification)},
                                 {"wavenumber", m.mode.wavenumber},
                                 {"frequency", m.mode.frequency},
                                 {"sin_omega_dt", std::sin(m.mode.frequency * delta_t)},
                                 {"coeff_cos", m.coeff_cos},
                                 {"coeff_sin", m.coeff_sin},
                                 {"free_parameter", m.free_parameter},
                                 {"mismatch", m.mismatch},
                                 {"resonance_index", m.resonance_index ? json(*m.resonance_index) : json(nullptr)}});
            if (m.classification == ModeClass::Infeasible)
                infeasible.push_back(m.mode.n_x);
        }

        json report{{"command", "bvp"},
                    {"inputs", cfg.raw()},
                    {"natural_units", physics_json(phys)},
                    {"grid",
                     json{{"length", length},
                          {"delta_t", delta_t},
                          {"n_space", n_space},
                          {"n_time", n_time},
                          {"space_step", grid.space_step()},
                          {"time_step", grid.time_step()}}},
                    {"frequency_model", model_name},
                    {"tolerances", json{{"resonance", tol.resonance}, {"compatibility", tol.compatibility}}},
                    {"feasible", sol.feasible},
                    {"kge_residual_max", sol.kge_residual_max},
                    {"modes", modes},
                    {"infeasible_modes", infeasible}};
        return {report, table};
    }

    CommandOutput run_pathint(const KeyValueConfig& cfg, const Overrides& ov)
    {
        const std::size_t n_slices = read_count(cfg, "n_slices", 1);
        const std::string scheme_name = cfg.get_string("scheme", "trapezoid");
        if (scheme_name != "midpoint" && scheme_name != "trapezoid")
            throw ConfigError("key 'scheme' must be 'midpoint' or 'trapezoid'");
        const PotentialScheme scheme =
            scheme_name == "trapezoid" ? PotentialScheme::Trapezoid : PotentialScheme::Midpoint;

        // The mode comes either from the cavity (mass, length, n_x) or from an
        // explicit angular frequency.
        Mode mode{};
        json natural = nullptr;
        double hbar = 1.0;
        if (cfg.has("omega"))
        {
            for (const char* key : {"mass", "length", "units"})
                if (cfg.has(key))
                    throw ConfigError(std::string("key '") + key + "' conflicts with 'omega'");
            const double omega = cfg.get_double("omega");
            if (omega < 0.0)
                throw ConfigError("key 'omega' must be >= 0");
            mode = Mode{static_cast<int>(cfg.get_int("n_x", 1)), std::nan(""), omega};
        }
        else
        {
            const Physics phys = read_physics(cfg);
            const double length = phys.length(cfg, "length");
            const long long n_x = cfg.get_int("n_x", 1);
            if (n_x < 1)
                throw ConfigError("key 'n_x' must be >= 1");
            mode = make_mode(phys.params, length, static_cast<int>(n_x));
            natural = physics_json(phys);
            hbar = phys.params.hbar();
        }

        double delta_t = 0.0;
        if (cfg.has("discrete_resonance"))
        {
            if (cfg.has("delta_t"))
                throw ConfigError("give either 'delta_t' or 'discrete_resonance', not both");
            const long long n_t = cfg.get_int("discrete_resonance");
            if (n_t < 1 || n_t > static_cast<long long>(n_slices))
                throw ConfigError("key 'discrete_resonance' must be in [1, n_slices]");
            if (!(mode.frequency > 0.0))
                throw ConfigError("key 'discrete_resonance' needs a positive mode frequency");
            delta_t = discrete_resonant_delta_t(mode.frequency, static_cast<int>(n_slices), static_cast<int>(n_t),
                                                scheme);
        }
        else
        {
            delta_t = cfg.get_positive("delta_t");
        }

        const double alpha = cfg.get_double("alpha");
        const double beta = cfg.get_double("beta");
        JointProbabilityOptions jp;
        jp.singularity = cfg.get_positive("singularity_tolerance", jp.singularity);
        jp.compatibility = cfg.get_positive("compatibility_tolerance", jp.compatibility);
        if (ov.tolerance)
            jp.singularity = *ov.tolerance;

        BruteForceOptions bf_opts;
        if (cfg.has("bruteforce_epsilons"))
            bf_opts.epsilons = cfg.get_doubles("bruteforce_epsilons");
        bf_opts.tolerance = cfg.get_positive("bruteforce_tolerance", bf_opts.tolerance);
        cfg.reject_unused();

        if (ov.bruteforce && n_slices > 3)
            throw ConfigError("--bruteforce needs n_slices <= 3: the nested quadrature costs O(nodes^2) per slice "
                              "with ~1e3-1e4 nodes, so n_slices = "
                              + std::to_string(n_slices) + " is out of reach");

        const auto spec = LatticeActionSpec::make(mode, delta_t, static_cast<int>(n_slices), alpha, beta, scheme, hbar);
        const JointProbability z = joint_probability_exact(spec, jp);
        const StationaryPhaseReport sp = stationary_phase_report(spec, jp);

        CsvTable table({"j", "t", "a"});
        if (sp.stationary_point_exists)
        {
            const std::size_t n = static_cast<std::size_t>(spec.n_slices);
            for (std::size_t j = 0; j <= n + 1; ++j)
            {
                const double a = (j == 0) ? alpha : (j == n + 1) ? beta : sp.stationary_path[j - 1];
                const double t = (j == n + 1) ? delta_t : spec.delta * static_cast<double>(j);
                table.add_row(std::vector<std::string>{std::to_string(j), format_double(t), format_double(a)});
            }
        }

        json report{{"command", "pathint"},
                    {"inputs", cfg.raw()},
                    {"natural_units", natural},
                    {"frequency", mode.frequency},
                    {"n_x", mode.n_x},
                    {"delta_t", delta_t},
                    {"delta", spec.delta},
                    {"n_slices", spec.n_slices},
                    {"scheme", to_string(scheme)},
                    {"singularity_tolerance", jp.singularity},
                    {"magnitude", z.magnitude},
                    {"log_magnitude", z.log_magnitude},
                    {"phase", z.phase},
                    {"probability", z.probability()},
                    {"relative_weight", z.relative_weight},
                    {"classical_action", nullable(z.classical_action)},
                    {"kernel_rank_deficiency", z.kernel_rank_deficiency},
                    {"compatibility_residual", z.compatibility_residual},
                    {"eigenvalues",
                     json{{"positive", z.positive_eigenvalues},
                          {"negative", z.negative_eigenvalues},
                          {"min_abs", z.min_abs_eigenvalue},
                          {"max_abs", z.max_abs_eigenvalue},
                          {"singularity_ambiguous", z.singularity_ambiguous}}},
                    {"stationary_phase",
                     json{{"exists", sp.stationary_point_exists},
                          {"family_dimension", sp.family_dimension},
                          {"classical_action", nullable(sp.classical_action)},
                          {"weight_ratio", sp.weight_ratio}}}};

        if (ov.bruteforce)
        {
            const BruteForceResult bf = joint_probability_bruteforce(spec, bf_opts);
            const double rel = z.magnitude > 0.0 ? std::abs(bf.magnitude - z.magnitude) / z.magnitude
                                                 : std::nan("");
            report["bruteforce"] = json{{"magnitude", bf.magnitude},
                                        {"phase", bf.phase},
                                        {"relative_magnitude_difference", rel},
                                        {"phase_difference", std::abs(std::remainder(bf.phase - z.phase, 2.0 * pi))},
                                        {"log_magnitude_change", bf.log_magnitude_change},
                                        {"phase_change", bf.phase_change},
                                        {"max_nodes", bf.max_nodes},
                                        {"epsilons", bf.epsilons}};
        }
        return {report, table};
    }

    CommandOutput run_dispersion(const KeyValueConfig& cfg, const Overrides&)
    {
        const Physics phys = read_physics(cfg);
        json report{{"command", "dispersion"}, {"inputs", cfg.raw()}, {"natural_units", physics_json(phys)}};

        if (cfg.has("n_max"))
        {
            const double length = phys.length(cfg, "length");
            const std::size_t n_max = read_count(cfg, "n_max", 1);
            cfg.reject_unused();
            CsvTable table({"n_x", "k", "omega"});
            for (std::size_t n = 1; n <= n_max; ++n)
            {
                const Mode m = make_mode(phys.params, length, static_cast<int>(n));
                table.add_row(std::vector<std::string>{std::to_string(n), format_double(m.wavenumber),
                                                       format_double(m.frequency)});
            }
            report["length"] = length;
            report["rows"] = n_max;
            return {report, table};
        }

        double k_min = cfg.get_double("k_min");
        double k_max = cfg.get_double("k_max");
        if (!(k_min < k_max))
            throw ConfigError("keys 'k_min' and 'k_max' must satisfy k_min < k_max");
        const std::size_t steps = read_count(cfg, "steps", 2);
        cfg.reject_unused();
        if (phys.si)
        {
            // 1/m to 1/light-second.
            k_min *= si::speed_of_light;
            k_max *= si::speed_of_light;
        }
        CsvTable table({"k", "omega"});
        for (std::size_t i = 0; i < steps; ++i)
        {
            const double k = (i + 1 == steps)
                                 ? k_max
                                 : k_min + (k_max - k_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
            table.add_row(std::vector<double>{k, dispersion(phys.params, k)});
        }
        report["rows"] = steps;
        return {report, table};
    }

    CommandOutput run_compton(const KeyValueConfig& cfg, const Overrides&)
    {
        const Physics phys = read_physics(cfg);
        const std::size_t n_max = read_count(cfg, "n_max", 1, 10);
        cfg.reject_unused();

        CsvTable table({"n_t", "bound"});
        json bounds = json::array();
        const double rest = phys.params.compton_angular_frequency();
        if (rest > 0.0)
        {
            for (std::size_t n = 1; n <= n_max; ++n)
            {
                const double b = *compton_bound(phys.params, static_cast<int>(n));
                table.add_row(std::vector<std::string>{std::to_string(n), format_double(b)});
                bounds.push_back(json{{"n_t", n}, {"bound", b}});
            }
        }
        json report{{"command", "compton"},
                    {"inputs", cfg.raw()},
                    {"natural_units", physics_json(phys)},
                    {"bounded", rest > 0.0},
                    {"compton_period", rest > 0.0 ? json(2.0 * pi / rest) : json(nullptr)},
                    {"bounds", bounds}};
        return {report, table};
    }

    int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
    {
        CLI::App app{"Two-time boundary-value tools for a Klein-Gordon field in a 1D cavity", "twobc"};
        app.require_subcommand(1);

        std::string config_path;
        std::string out_dir = ".";
        std::string form;
        double tolerance = 0.0;
        bool bruteforce = false;

        using Runner = std::function<CommandOutput(const KeyValueConfig&, const Overrides&)>;
        const std::vector<std::tuple<std::string, std::string, Runner>> commands{
            {"pairs", "admissible (n_x, n_t) pairs for one (L, dt)", run_pairs},
            {"scan", "admissible-pair counts over a dt window", run_scan},
            {"bvp", "two-time boundary-value solve of the cavity field", run_bvp},
            {"pathint", "lattice joint-probability integral of one mode", run_pathint},
            {"dispersion", "omega(k) table", run_dispersion},
            {"compton", "largest dt per frequency index", run_compton},
        };

        std::map<std::string, std::pair<CLI::App*, CLI::Option*>> handles;
        std::map<std::string, CLI::Option*> form_opts;
        for (const auto& [name, help, runner] : commands)
        {
            CLI::App* sub = app.add_subcommand(name, help);
            sub->add_option("--config", config_path, "key = value configuration file")->required();
            sub->add_option("--out", out_dir, "output directory")->capture_default_str();
            form_opts[name] = sub->add_option("--form", form, "constraint form")
                                  ->check(CLI::IsMember({"dispersion", "paper"}));
            CLI::Option* tol = sub->add_option("--tolerance", tolerance, "override the command's main tolerance")
                                   ->check(CLI::PositiveNumber);
            if (name == "pathint")
                sub->add_flag("--bruteforce", bruteforce, "cross-check against direct quadrature (n_slices <= 3)");
            handles[name] = {sub, tol};
        }

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try
        {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp&)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError& e)
        {
            err << "error: " << e.what() << "\n";
            return exit_input_error;
        }

        for (const auto& [name, help, runner] : commands)
        {
            auto [sub, tol_opt] = handles[name];
            if (!sub->parsed())
                continue;
            Overrides ov;
            if (form_opts[name]->count() > 0)
                ov.form = form;
            if (tol_opt->count() > 0)
                ov.tolerance = tolerance;
            ov.bruteforce = bruteforce;
            try
            {
                const KeyValueConfig cfg = KeyValueConfig::load(config_path);
                const CommandOutput result = runner(cfg, ov);
                const std::filesystem::path dir(out_dir);
                std::filesystem::create_directories(dir);
                const auto csv_path = dir / (name + ".csv");
                const auto json_path = dir / (name + ".json");
                write_text(csv_path, result.table.str());
                write_json(json_path, result.report);
                out << "wrote " << csv_path.string() << " and " << json_path.string() << "\n";
                return exit_ok;
            }
            catch (const ConfigError& e)
            {
                err << "error: " << e.what() << "\n";
                return exit_input_error;
            }
            catch (const ConvergenceError& e)
            {
                err << "numerical failure: " << e.what() << "\n";
                return exit_numerical_failure;
            }
            catch (const std::invalid_argument& e)
            {
                // Library precondition failures are input problems.
                err << "error: " << e.what() << "\n";
                return exit_input_error;
            }
            catch (const std::exception& e)
            {
                err << "internal failure: " << e.what() << "\n";
                return exit_numerical_failure;
            }
        }
        err << "error: no subcommand\n";
        return exit_input_error;
    }
} // namespace twobc::cli
