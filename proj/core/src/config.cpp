#include "maskit/config.hpp"

#include <charconv>
#include <fstream>
#include <string_view>

#include "maskit/errors.hpp"

namespace maskit {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(std::string_view v, const std::string& key, int line) {
    T x{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw Error(ErrorKind::usage, "config line " + std::to_string(line) + ": bad value for " + key);
    return x;
}

}  // namespace

TracerConfig parse_config(std::istream& in) {
    TracerConfig cfg;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s = raw;
        if (const auto h = s.find('#'); h != std::string_view::npos) s = s.substr(0, h);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::usage, "config line " + std::to_string(line) + ": expected key=value");
        const std::string key(trim(s.substr(0, eq)));
        const std::string_view val = trim(s.substr(eq + 1));
        if (key == "newton_tol") cfg.newton_tol = parse_number<double>(val, key, line);
        else if (key == "cusp_tol") cfg.cusp_tol = parse_number<double>(val, key, line);
        else if (key == "max_steps") cfg.max_steps = parse_number<int>(val, key, line);
        else if (key == "fd_step") cfg.fd_step = parse_number<double>(val, key, line);
        else if (key == "symbolic_cap") cfg.symbolic_cap = parse_number<std::size_t>(val, key, line);
        else if (key == "initial_step") cfg.initial_step = parse_number<double>(val, key, line);
        else if (key == "max_step") cfg.max_step = parse_number<double>(val, key, line);
        else if (key == "wheel_depth") cfg.wheel_depth = parse_number<int>(val, key, line);
        else throw Error(ErrorKind::usage, "config line " + std::to_string(line) + ": unknown key " + key);
    }
    validate(cfg);
    return cfg;
}

TracerConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read config " + path);
    return parse_config(f);
}

void validate(const TracerConfig& cfg) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw Error(ErrorKind::usage, std::string("config: ") + name + " must be positive");
    };
    positive(cfg.newton_tol, "newton_tol");
    positive(cfg.cusp_tol, "cusp_tol");
    positive(cfg.fd_step, "fd_step");
    positive(cfg.initial_step, "initial_step");
    positive(cfg.max_step, "max_step");
    positive(cfg.min_step, "min_step");
    positive(cfg.max_steps, "max_steps");
    positive(static_cast<double>(cfg.symbolic_cap), "symbolic_cap");
    positive(cfg.wheel_depth, "wheel_depth");
    positive(cfg.max_newton_iter, "max_newton_iter");
    if (cfg.initial_step > cfg.max_step)
        throw Error(ErrorKind::usage, "config: initial_step exceeds max_step");
}

}  // namespace maskit
