#include "hopfbloch/cli/commands.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "hopfbloch/bloch.hpp"
#include "hopfbloch/cli/check.hpp"
#include "hopfbloch/cli/records.hpp"
#include "hopfbloch/cli/svg.hpp"
#include "hopfbloch/gates.hpp"

namespace hopfbloch::cli {

namespace {

struct InputOptions {
    std::string state;
    std::string bell;

    void add_to(CLI::App& cmd) {
        auto* s = cmd.add_option("--state", state, "amplitudes as \"re,im;re,im;re,im;re,im\"");
        auto* b = cmd.add_option("--bell", bell, "Bell preset")->check(CLI::IsMember({"00", "01", "10", "11"}));
        s->excludes(b);
    }

    std::optional<TwoQubitState> load() const {
        if (!state.empty()) return parse_state(state);
        if (!bell.empty()) return bell_state((bell[0] - '0') * 2 + (bell[1] - '0'));
        return std::nullopt;
    }

    TwoQubitState require() const {
        auto s = load();
        if (!s) throw Error(ErrorKind::Parse, "one of --state or --bell is required");
        return *s;
    }
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return kExitParse;
        case ErrorKind::UnknownGate: return kExitUnknownGate;
        default: return kExitDomain;
    }
}

struct CoordsCommand {
    InputOptions input;
    bool fix_phase = false;
    bool canonical = false;
    std::string format = "json";

    void add_to(CLI::App& cmd) {
        input.add_to(cmd);
        cmd.add_flag("--fix-phase", fix_phase, "move zeta_B out as a global phase");
        cmd.add_flag("--canonical", canonical, "report the b >= 0 branch");
        cmd.add_option("--format", format)->check(CLI::IsMember({"json"}));
    }

    int run(std::ostream& out) const {
        const TwoQubitState s = input.require();
        BlochCoordinates c = extract(s);
        if (fix_phase) c = normalize_global_phase(c);
        if (canonical) c = canonicalize(c);
        print_json(out, coords_json(s, c));
        return kExitOk;
    }
};

struct AmplitudesCommand {
    std::string angles;
    bool roundtrip = false;
    std::string format = "json";

    void add_to(CLI::App& cmd) {
        cmd.add_option("--angles", angles, "theta_a,phi_a,chi,xi,theta_b,phi_b,zeta_b")->required();
        cmd.add_flag("--roundtrip", roundtrip, "re-extract and report the largest amplitude deviation");
        cmd.add_option("--format", format)->check(CLI::IsMember({"json"}));
    }

    int run(std::ostream& out) const {
        const TwoQubitState s = reconstruct(parse_angles(angles));
        Json j = state_json(s);
        if (roundtrip) {
            BlochCoordinates c;
            try {
                c = extract(s);
            } catch (const SouthPoleAError&) {
                c = south_pole_coordinates(s);
            }
            j["roundtrip"] = Json{{"coords", angles_json(c)},
                                  {"max_deviation", distance_up_to_phase(reconstruct(c), s)}};
        }
        print_json(out, j);
        return kExitOk;
    }
};

struct TrajectoryCommand {
    std::string gate;
    InputOptions input;
    std::string axis;
    std::optional<double> eta;
    std::optional<double> omega;
    int n1 = kDefaultSamplesPerStage;
    int n2 = kDefaultSamplesPerStage;
    std::string format = "csv";

    void add_to(CLI::App& cmd) {
        cmd.add_option("gate", gate, "cnot, cz, swap or cu")->required();
        input.add_to(cmd);
        cmd.add_option("--axis", axis, "rotation axis \"x,y,z\" (cu only)");
        cmd.add_option("--eta", eta, "phase angle (cu only)");
        cmd.add_option("--omega", omega, "rotation angle (cu only)");
        cmd.add_option("--n1", n1, "samples in the phase ramp");
        cmd.add_option("--n2", n2, "samples in the rotation ramp");
        cmd.add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));
    }

    GateSpec spec() const {
        const GateKind kind = parse_gate(gate);
        if (kind != GateKind::ControlledU) {
            if (!axis.empty() || eta || omega)
                throw Error(ErrorKind::Parse, "--axis, --eta and --omega apply to cu only");
            if (kind == GateKind::CNOT) return GateSpec::cnot();
            if (kind == GateKind::CZ) return GateSpec::cz();
            return GateSpec::swap();
        }
        const std::array<double, 3> n = axis.empty() ? std::array<double, 3>{1.0, 0.0, 0.0} : parse_axis(axis);
        return GateSpec::controlled_u(n, omega.value_or(kPi), eta.value_or(kPi / 2.0));
    }

    int run(std::ostream& out) const {
        const GateSpec g = spec();
        const Trajectory tr = trajectory(g, input.require(), n1, n2);
        if (format == "json")
            print_json(out, trajectory_json(tr));
        else if (format == "svg")
            out << trajectory_svg(tr);
        else
            out << trajectory_csv(tr);
        return kExitOk;
    }
};

struct CheckCommand {
    InputOptions input;
    std::uint64_t seed = 1;
    int count = 1000;
    double tolerance = 1e-9;

    void add_to(CLI::App& cmd) {
        input.add_to(cmd);
        cmd.add_option("--seed", seed, "seed for random states (HOPFBLOCH_SEED overrides)");
        cmd.add_option("--count", count, "number of random states")->check(CLI::PositiveNumber);
        cmd.add_option("--tolerance", tolerance, "pass threshold")->check(CLI::PositiveNumber);
    }

    int run(std::ostream& out) const {
        std::uint64_t effective = seed;
        if (const char* env = std::getenv("HOPFBLOCH_SEED")) {
            try {
                std::size_t used = 0;
                effective = std::stoull(env, &used);
                if (env[used] != '\0') throw std::invalid_argument(env);
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::Parse, std::string("HOPFBLOCH_SEED is not an unsigned integer: ") + env);
            }
        }
        const CheckReport report = run_checks(input.load(), effective, count, tolerance);
        print_json(out, report.to_json());
        return report.pass() ? kExitOk : kExitCheckFailed;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Two-qubit pure states in seven Bloch angles", "hopfbloch");
    app.require_subcommand(1);

    CoordsCommand coords;
    AmplitudesCommand amplitudes;
    TrajectoryCommand traj;
    CheckCommand check;
    auto* coords_cmd = app.add_subcommand("coords", "amplitudes to Bloch coordinates");
    auto* amplitudes_cmd = app.add_subcommand("amplitudes", "Bloch coordinates to amplitudes");
    auto* traj_cmd = app.add_subcommand("traj", "sampled gate trajectory");
    auto* check_cmd = app.add_subcommand("check", "invariant suite on one state or random states");
    coords.add_to(*coords_cmd);
    amplitudes.add_to(*amplitudes_cmd);
    traj.add_to(*traj_cmd);
    check.add_to(*check_cmd);

    std::vector<const char*> argv{"hopfbloch"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParse;
    }

    try {
        if (coords_cmd->parsed()) return coords.run(out);
        if (amplitudes_cmd->parsed()) return amplitudes.run(out);
        if (traj_cmd->parsed()) return traj.run(out);
        return check.run(out);
    } catch (const Error& e) {
        print_json(out, error_json(e));
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

}  // namespace hopfbloch::cli
