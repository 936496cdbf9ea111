#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "maskit/matrix.hpp"
#include "maskit/tracer.hpp"

namespace maskit {

// Shortest round-trip decimal form.
std::string format_double(double x);
// "-2" for real values, "re,im" otherwise.
std::string format_complex(cplx z);

void write_jsonl(const RayPolyline& ray, std::ostream& out);
void write_csv_header(std::ostream& out);
void write_csv(const RayPolyline& ray, std::ostream& out);

struct SvgPlot {
    int axis = 1;  // plot tau_axis
    int width = 640, height = 480;
};

// Polylines of tau_axis for each ray, cusp termini marked.
void write_svg(const std::vector<RayPolyline>& rays, const SvgPlot& plot, std::ostream& out);

}  // namespace maskit
