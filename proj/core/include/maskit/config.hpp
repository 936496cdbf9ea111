#pragma once

#include <istream>
#include <string>

#include "maskit/tracer.hpp"

namespace maskit {

// key=value lines; '#' starts a comment. Keys: newton_tol, cusp_tol,
// max_steps, fd_step, symbolic_cap, initial_step, max_step, wheel_depth.
TracerConfig parse_config(std::istream& in);
TracerConfig load_config(const std::string& path);
void validate(const TracerConfig& cfg);

}  // namespace maskit
