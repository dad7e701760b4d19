#include "hopfbloch/cli/records.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "hopfbloch/tolerances.hpp"

namespace hopfbloch::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double parse_number(std::string_view s, const std::string& context) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
        throw Error(ErrorKind::Parse, "bad number '" + std::string(s) + "' in " + context);
    return v;
}

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* what) {
    const auto parts = split(text, ',');
    if (parts.size() != count)
        throw Error(ErrorKind::Parse, std::string(what) + " needs " + std::to_string(count) + " comma-separated values");
    std::vector<double> v;
    for (const auto p : parts) v.push_back(parse_number(p, what));
    return v;
}

Json number(double v) { return round12(v); }

Json triple(double a, double b, double c) { return Json::array({number(a), number(b), number(c)}); }

Json flags_json(const Flags& f) {
    Json arr = Json::array();
    for (const auto& n : f.names()) arr.push_back(n);
    return arr;
}

const char* stage_name(Stage s) { return s == Stage::PhaseRamp ? "phase_ramp" : "rotation_ramp"; }

std::string join_flags(const Flags& f) {
    std::string out;
    for (const auto& n : f.names()) {
        if (!out.empty()) out += '|';
        out += n;
    }
    return out;
}

}  // namespace

double round12(double v) {
    if (std::abs(v) < kZeroTol) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", round12(v));
    return buf;
}

TwoQubitState parse_state(const std::string& text) {
    const auto parts = split(text, ';');
    if (parts.size() != 4) throw Error(ErrorKind::Parse, "state needs four 're,im' pairs separated by ';'");
    CVector<4> amps{};
    for (std::size_t n = 0; n < 4; ++n) {
        const auto ri = split(parts[n], ',');
        if (ri.size() != 2) throw Error(ErrorKind::Parse, "amplitude " + std::to_string(n) + " is not 're,im'");
        amps[n] = Complex(parse_number(ri[0], "state"), parse_number(ri[1], "state"));
    }
    return TwoQubitState::make(amps);
}

BlochCoordinates parse_angles(const std::string& text) {
    const auto v = parse_list(text, 7, "angles");
    BlochCoordinates c;
    c.theta_a = v[0];
    c.phi_a = v[1];
    c.chi = v[2];
    c.xi = v[3];
    c.theta_b = v[4];
    c.phi_b = v[5];
    c.zeta_b = v[6];
    return c;
}

std::array<double, 3> parse_axis(const std::string& text) {
    const auto v = parse_list(text, 3, "axis");
    return {v[0], v[1], v[2]};
}

GateKind parse_gate(const std::string& name) {
    if (name == "cnot") return GateKind::CNOT;
    if (name == "cz") return GateKind::CZ;
    if (name == "swap") return GateKind::SWAP;
    if (name == "cu") return GateKind::ControlledU;
    throw Error(ErrorKind::UnknownGate, "unknown gate '" + name + "' (expected cnot, cz, swap or cu)");
}

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT: return "cnot";
        case GateKind::CZ: return "cz";
        case GateKind::SWAP: return "swap";
        case GateKind::ControlledU: return "cu";
    }
    return "?";
}

Json complex_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Json state_json(const TwoQubitState& s) {
    Json amps = Json::array();
    for (const auto& a : s.amplitudes()) amps.push_back(complex_json(a));
    return Json{{"amplitudes", amps}};
}

Json angles_json(const BlochCoordinates& c) {
    return Json{{"theta_a", number(c.theta_a)}, {"phi_a", number(c.phi_a)}, {"chi", number(c.chi)},
                {"xi", number(c.xi)},           {"theta_b", number(c.theta_b)}, {"phi_b", number(c.phi_b)},
                {"zeta_b", number(c.zeta_b)}};
}

Json coords_json(const TwoQubitState& s, const BlochCoordinates& c) {
    const S4Point p = c.base();
    const auto t = c.t();
    const auto qb = c.qubit_b_cartesian();
    Json j = state_json(s);
    j["coords"] = angles_json(c);
    j["cartesian"] = Json{{"x0", number(p.x0)}, {"x1", number(p.x1)}, {"x2", number(p.x2)},
                          {"x3", number(p.x3)}, {"x4", number(p.x4)}};
    j["b"] = number(c.b());
    j["t"] = triple(t.x(), t.y(), t.z());
    j["qubit_b"] = triple(qb[0], qb[1], qb[2]);
    j["concurrence"] = number(concurrence(s).c);
    j["flags"] = flags_json(c.flags);
    j["alternate"] = angles_json(alternate_branch(c));
    return j;
}

Json error_json(const Error& e) {
    Json body{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (const auto* sp = dynamic_cast<const SouthPoleAError*>(&e)) {
        const SingleQubitState& psi = sp->psi_b();
        body["psi_b"] = Json::array({complex_json(psi.zero), complex_json(psi.one)});
        const TwoQubitState s = product_state({0.0, 1.0}, psi);
        body["fallback"] = coords_json(s, south_pole_coordinates(s));
    }
    return Json{{"error", body}};
}

Json trajectory_json(const Trajectory& tr) {
    Json gate{{"name", gate_name(tr.gate.kind)},
              {"axis", triple(tr.gate.axis[0], tr.gate.axis[1], tr.gate.axis[2])},
              {"eta", number(tr.gate.eta)},
              {"omega", number(tr.gate.omega)}};
    Json samples = Json::array();
    for (const auto& smp : tr.samples) {
        Json row{{"stage", stage_name(smp.stage)}, {"s", number(smp.s)}, {"eta", number(smp.eta)},
                 {"omega", number(smp.omega)}};
        row["amplitudes"] = state_json(smp.state)["amplitudes"];
        row["coords"] = angles_json(smp.coords);
        row["c"] = number(concurrence(smp.state).c);
        row["branch_flip"] = smp.branch_flip;
        row["flags"] = flags_json(smp.coords.flags);
        samples.push_back(std::move(row));
    }
    return Json{{"gate", gate}, {"initial", state_json(tr.initial)}, {"final", state_json(tr.final_state)},
                {"samples", samples}};
}

const std::string& trajectory_csv_header() {
    static const std::string header =
        "stage,s,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,delta_re,delta_im,"
        "theta_a,phi_a,chi,xi,theta_b,phi_b,zeta_b,c,branch_flip,flags";
    return header;
}

std::string trajectory_csv(const Trajectory& tr) {
    std::ostringstream out;
    out << trajectory_csv_header() << '\n';
    for (const auto& smp : tr.samples) {
        out << stage_name(smp.stage) << ',' << format_number(smp.s);
        for (const auto& a : smp.state.amplitudes())
            out << ',' << format_number(a.real()) << ',' << format_number(a.imag());
        for (const double v : smp.coords.angles()) out << ',' << format_number(v);
        out << ',' << format_number(concurrence(smp.state).c) << ',' << (smp.branch_flip ? 1 : 0) << ','
            << join_flags(smp.coords.flags) << '\n';
    }
    return out.str();
}

}  // namespace hopfbloch::cli
