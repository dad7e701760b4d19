#include "hopfbloch/cli/svg.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

namespace hopfbloch::cli {

namespace {

constexpr double kPanel = 300.0;
constexpr double kRadius = 110.0;
constexpr double kAzimuth = 0.6;
constexpr double kElevation = 0.35;

using Vec3 = std::array<double, 3>;

struct Point2 {
    double x;
    double y;
};

// Oblique orthographic view of the unit sphere centred in panel `index`.
Point2 project(const Vec3& p, int index) {
    const double ca = std::cos(kAzimuth), sa = std::sin(kAzimuth);
    const double ce = std::cos(kElevation), se = std::sin(kElevation);
    const double u = -p[0] * sa + p[1] * ca;
    const double depth = p[0] * ca + p[1] * sa;
    const double v = p[2] * ce - depth * se;
    return {kPanel * (index + 0.5) + kRadius * u, kPanel * 0.5 + 20.0 - kRadius * v};
}

std::string points_attr(const std::vector<Vec3>& pts, int index) {
    std::string s;
    char buf[48];
    for (const auto& p : pts) {
        const Point2 q = project(p, index);
        std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", s.empty() ? "" : " ", q.x, q.y);
        s += buf;
    }
    return s;
}

std::vector<Vec3> great_circle(const std::function<Vec3(double)>& f) {
    std::vector<Vec3> pts;
    for (int n = 0; n <= 72; ++n) pts.push_back(f(kTwoPi * n / 72.0));
    return pts;
}

Vec3 polar_point(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

void panel(std::ostringstream& out, int index, const char* id, const char* label, const std::vector<Vec3>& path) {
    out << "  <g class=\"sphere\" id=\"" << id << "\">\n";
    out << "    <text x=\"" << kPanel * (index + 0.5) << "\" y=\"24\" text-anchor=\"middle\">" << label << "</text>\n";
    const std::vector<std::vector<Vec3>> wires = {
        great_circle([](double a) { return Vec3{std::cos(a), std::sin(a), 0.0}; }),
        great_circle([](double a) { return Vec3{std::cos(a), 0.0, std::sin(a)}; }),
        great_circle([](double a) { return Vec3{0.0, std::cos(a), std::sin(a)}; }),
    };
    for (const auto& w : wires)
        out << "    <polyline class=\"wire\" fill=\"none\" stroke=\"#bbb\" points=\"" << points_attr(w, index)
            << "\"/>\n";
    out << "    <polyline class=\"path\" fill=\"none\" stroke=\"#c22\" stroke-width=\"2\" points=\""
        << points_attr(path, index) << "\"/>\n";
    if (!path.empty()) {
        const Point2 a = project(path.front(), index), b = project(path.back(), index);
        char buf[160];
        std::snprintf(buf, sizeof buf, "    <circle class=\"start\" cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#2a2\"/>\n",
                      a.x, a.y);
        out << buf;
        std::snprintf(buf, sizeof buf, "    <circle class=\"end\" cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#22c\"/>\n",
                      b.x, b.y);
        out << buf;
    }
    out << "  </g>\n";
}

}  // namespace

std::string trajectory_svg(const Trajectory& tr) {
    std::vector<Vec3> a, t, b;
    for (const auto& smp : tr.samples) {
        const auto& c = smp.coords;
        a.push_back(polar_point(c.theta_a, c.phi_a));
        t.push_back(polar_point(c.chi, c.xi));
        b.push_back(c.qubit_b_cartesian());
    }
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * kPanel << "\" height=\"" << kPanel + 20
        << "\" viewBox=\"0 0 " << 3 * kPanel << ' ' << kPanel + 20 << "\" font-family=\"sans-serif\" font-size=\"14\">\n";
    panel(out, 0, "qubit-a", "qubit A (theta_A, phi_A)", a);
    panel(out, 1, "entanglement", "entanglement (chi, xi)", t);
    panel(out, 2, "qubit-b", "qubit B (theta_B, phi_B)", b);
    out << "</svg>\n";
    return out.str();
}

}  // namespace hopfbloch::cli
