#include "maskit/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace maskit {

std::string format_double(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string format_complex(cplx z) {
    if (std::abs(z.imag()) <= 1e-14 * std::max(1.0, std::abs(z.real())))
        return format_double(z.real());
    return format_double(z.real()) + "," + format_double(z.imag());
}

void write_jsonl(const RayPolyline& ray, std::ostream& out) {
    for (const auto& s : ray.samples) {
        nlohmann::ordered_json j;
        j["ray"] = ray.label;
        j["theta"] = s.theta_nominal;
        j["tau1"] = {s.point.tau1.real(), s.point.tau1.imag()};
        j["tau2"] = {s.point.tau2.real(), s.point.tau2.imag()};
        j["residual"] = s.residual;
        nlohmann::ordered_json tr = nlohmann::ordered_json::object();
        for (const auto& [w, v] : s.traces) tr[w] = v;
        j["traces"] = tr;
        j["flags"] = s.flags;
        out << j.dump() << '\n';
    }
}

void write_csv_header(std::ostream& out) {
    out << "label,theta,re_tau1,im_tau1,re_tau2,im_tau2,residual,arclength,flags\n";
}

void write_csv(const RayPolyline& ray, std::ostream& out) {
    for (const auto& s : ray.samples) {
        std::string flags;
        for (const auto& f : s.flags) flags += (flags.empty() ? "" : ";") + f;
        out << ray.label << ',' << format_double(s.theta_nominal) << ','
            << format_double(s.point.tau1.real()) << ',' << format_double(s.point.tau1.imag()) << ','
            << format_double(s.point.tau2.real()) << ',' << format_double(s.point.tau2.imag()) << ','
            << format_double(s.residual) << ',' << format_double(s.arclength) << ',' << flags << '\n';
    }
}

void write_svg(const std::vector<RayPolyline>& rays, const SvgPlot& plot, std::ostream& out) {
    auto pick = [&](const ParameterPoint& p) { return plot.axis == 2 ? p.tau2 : p.tau1; };
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& r : rays)
        for (const auto& s : r.samples) {
            const cplx z = pick(s.point);
            x0 = std::min(x0, z.real());
            x1 = std::max(x1, z.real());
            y0 = std::min(y0, z.imag());
            y1 = std::max(y1, z.imag());
        }
    if (!(x1 >= x0)) x0 = -1, x1 = 1, y0 = 0, y1 = 2;
    const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-6});
    x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
    // Equal scale on both axes.
    const double scale = std::min(plot.width / (x1 - x0), plot.height / (y1 - y0));
    auto sx = [&](double x) { return format_double((x - x0) * scale); };
    auto sy = [&](double y) { return format_double((y1 - y) * scale); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << plot.width << "\" height=\""
        << plot.height << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& r : rays) {
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
        for (const auto& s : r.samples) {
            const cplx z = pick(s.point);
            out << sx(z.real()) << ',' << sy(z.imag()) << ' ';
        }
        out << "\"/>\n";
        if (r.terminus.kind == TerminusKind::CUSP && !r.samples.empty()) {
            const cplx z = pick(r.samples.back().point);
            out << "<circle cx=\"" << sx(z.real()) << "\" cy=\"" << sy(z.imag())
                << "\" r=\"3\" fill=\"red\"><title>" << r.terminus.curve.str() << "</title></circle>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace maskit
