#pragma once

#include <string>
#include <vector>

#include <maskit/tracer.hpp>

namespace maskit::cli {

struct Check {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    bool ok = false;
};

struct RecipeResult {
    std::string name;
    std::vector<Check> checks;
    std::vector<RayPolyline> rays;
    std::vector<PlaneCorner> corners;

    bool ok() const;
};

std::vector<std::string> recipe_names();
// Runs ex1, ex2, ex3, ex3a or ex4; throws PreconditionError for other names.
RecipeResult run_recipe(const std::string& name, double seed_theta, const TracerConfig& cfg);

}  // namespace maskit::cli
