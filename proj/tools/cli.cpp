#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "shp/errors.hpp"
#include "shp/io.hpp"

namespace shp::cli {

namespace {

// Flags are parsed into their own RunConfig and copied over the file config only when given.
class Binder {
public:
    explicit Binder(RunConfig& flags) : flags_(flags) {}

    template <class M>
    CLI::Option* option(CLI::App* app, const std::string& name, M RunConfig::*field,
                        const std::string& desc) {
        auto* opt = app->add_option(name, flags_.*field, desc);
        track(opt, field);
        return opt;
    }

    void flag(CLI::App* app, const std::string& name, bool RunConfig::*field, const std::string& desc) {
        track(app->add_flag(name, flags_.*field, desc), field);
    }

    void apply(RunConfig& to) const {
        for (const auto& f : appliers_) f(flags_, to);
    }

private:
    template <class M>
    void track(CLI::Option* opt, M RunConfig::*field) {
        appliers_.push_back([opt, field](const RunConfig& from, RunConfig& to) {
            if (opt->count() > 0) to.*field = from.*field;
        });
    }

    RunConfig& flags_;
    std::vector<std::function<void(const RunConfig&, RunConfig&)>> appliers_;
};

void add_potential(Binder& b, CLI::App* app) {
    b.option(app, "--potential", &RunConfig::potential, "coulomb | oscillator | tabulated | positronium");
    b.option(app, "--Z", &RunConfig::Z, "nuclear charge for coulomb");
    b.option(app, "--omega", &RunConfig::omega, "oscillator hbar*omega in the active energy unit");
    b.option(app, "--table", &RunConfig::table, "CSV file of rho,V for tabulated");
    b.option(app, "--mass", &RunConfig::mass, "reduced mass in electron masses");
    b.option(app, "--total-mass", &RunConfig::total_mass, "total mass in electron masses");
    b.option(app, "--m1", &RunConfig::m1, "first constituent mass in electron masses");
    b.option(app, "--m2", &RunConfig::m2, "second constituent mass in electron masses");
}

void add_state(Binder& b, CLI::App* app) {
    b.option(app, "--n", &RunConfig::n, "O(2,1) index n");
    b.option(app, "--k", &RunConfig::k, "ladder index k, m = n + k");
    b.option(app, "--l", &RunConfig::l, "angular momentum l");
    b.option(app, "--eps", &RunConfig::eps, "regularization for n = 0");
    b.flag(app, "--conjugated", &RunConfig::conjugated, "use the conjugate representation");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covariant two-body bound states: spectra, wavefunctions, checks and orbits", "shp"};
    app.require_subcommand(0, 1);

    RunConfig flags;
    Binder b(flags);
    std::string units, format, config_path;
    auto* units_opt =
        app.add_option("--units", units, "atomic | ev")->check(CLI::IsMember({"atomic", "ev"}));
    auto* format_opt =
        app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    b.option(&app, "--out", &RunConfig::out, "output file, '-' for stdout");
    b.option(&app, "--tol", &RunConfig::tol, "tolerance");
    b.option(&app, "--grid", &RunConfig::grid, "grid resolution");
    app.add_option("--config", config_path, "JSON config; flags win on conflict");

    auto* spectrum = app.add_subcommand("spectrum", "bound-state spectrum table");
    auto* wavefn = app.add_subcommand("wavefn", "sample a closed-form wavefunction on a quadrature grid");
    auto* verify = app.add_subcommand("verify", "run verification checks, JSON report");
    auto* orbit = app.add_subcommand("orbit", "transport a bundle along a Lorentz transformation");
    auto* constants = app.add_subcommand("constants", "print the active unit system");
    for (auto* s : {spectrum, wavefn, verify, orbit, constants}) s->fallthrough();

    add_potential(b, spectrum);
    b.option(spectrum, "--method", &RunConfig::method, "numeric | analytic");
    b.option(spectrum, "--N-max", &RunConfig::N_max, "largest principal number for coulomb");
    b.option(spectrum, "--l-max", &RunConfig::l_max, "largest l");
    b.option(spectrum, "--levels", &RunConfig::levels, "radial levels per l (oscillator, tabulated)");

    add_potential(b, wavefn);
    b.option(wavefn, "--n-a", &RunConfig::n_a, "radial quantum number");
    add_state(b, wavefn);

    b.option(verify, "--suite", &RunConfig::suite, "angular | ladder | casimir | radial | induced | all");
    b.option(verify, "--seed", &RunConfig::seed, "random seed");

    b.option(orbit, "--orbit", &RunConfig::orbit, "JSON file of orbit directions");
    b.option(orbit, "--boost", &RunConfig::boost, "rapidity vector");
    b.option(orbit, "--rotate", &RunConfig::rotate, "axis x y z and angle");
    b.flag(orbit, "--random", &RunConfig::random_lambda, "draw Lambda from --seed");
    b.option(orbit, "--seed", &RunConfig::seed, "random seed");
    b.flag(orbit, "--no-family", &RunConfig::no_family, "transport the samples only");
    b.flag(orbit, "--interpolate", &RunConfig::interpolate, "fall back to the nearest sample");
    add_state(b, orbit);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = load_config_json(io::read_text_file(config_path), config_path);
        b.apply(cfg);
        if (units_opt->count() > 0)
            cfg.units = units == "ev" ? radial::UnitSystem::Mode::ElectronVolt : radial::UnitSystem::Mode::Atomic;
        if (format_opt->count() > 0) cfg.format = format == "json" ? Format::Json : Format::Csv;
        if (auto subs = app.get_subcommands(); !subs.empty()) cfg.command = subs.front()->get_name();
        if (cfg.command.empty()) {
            err << "no command given\n" << app.help();
            return 2;
        }

        const auto result = dispatch(cfg);
        if (cfg.out.empty() || cfg.out == "-") out << result.text;
        else io::write_text_file(cfg.out, result.text);
        return result.exit_code;
    } catch (const Error& e) {
        err << "shp: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace shp::cli
