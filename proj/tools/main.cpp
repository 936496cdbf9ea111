#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include <maskit/maskit.hpp>

#include "recipes.hpp"

namespace fs = std::filesystem;
using namespace maskit;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_precondition = 2;
constexpr int exit_numerical = 3;
constexpr int exit_regression = 4;

double parse_real(std::string_view s, const std::string& what) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error(ErrorKind::usage, "bad number '" + std::string(s) + "' in " + what);
    return x;
}

// "RE,IM" or "RE"
cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {parse_real(s, s), 0.0};
    return {parse_real(std::string_view(s).substr(0, comma), s),
            parse_real(std::string_view(s).substr(comma + 1), s)};
}

std::vector<double> parse_list(const std::string& s, std::size_t n, const std::string& what) {
    std::vector<double> out;
    std::string_view v = s;
    for (;;) {
        const auto comma = v.find(',');
        out.push_back(parse_real(v.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        v.remove_prefix(comma + 1);
    }
    if (out.size() != n)
        throw Error(ErrorKind::usage, what + " needs " + std::to_string(n) + " comma-separated numbers");
    return out;
}

struct Globals {
    std::string config;
    std::string emit;
    std::string out;
    double seed_theta = 0.1;
};

TracerConfig tracer_config(const Globals& g) {
    return g.config.empty() ? TracerConfig{} : load_config(g.config);
}

// Text artifacts go to --out DIR/<stem>.<ext> when given, else to stdout.
void emit_text(const Globals& g, const std::string& stem, const std::string& ext,
               const std::function<void(std::ostream&)>& write) {
    if (g.out.empty()) {
        write(std::cout);
        return;
    }
    fs::create_directories(g.out);
    const fs::path path = fs::path(g.out) / (stem + "." + ext);
    std::ofstream f(path);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    write(f);
    if (!f) throw IoError("write to " + path.string() + " failed");
    std::cerr << "wrote " << path.string() << '\n';
}

void emit_rays(const Globals& g, const std::string& stem, const std::vector<RayPolyline>& rays) {
    const std::string fmt = g.emit.empty() ? "jsonl" : g.emit;
    if (fmt == "jsonl") {
        emit_text(g, stem, "jsonl", [&](std::ostream& o) {
            for (const auto& r : rays) write_jsonl(r, o);
        });
    } else if (fmt == "csv") {
        emit_text(g, stem, "csv", [&](std::ostream& o) {
            write_csv_header(o);
            for (const auto& r : rays) write_csv(r, o);
        });
    } else if (fmt == "svg") {
        emit_text(g, stem, "svg", [&](std::ostream& o) { write_svg(rays, SvgPlot{}, o); });
    } else {
        throw Error(ErrorKind::usage, "--emit for rays must be jsonl, csv or svg");
    }
}

void print_terminus(const RayPolyline& r) {
    const auto& last = r.samples.back();
    std::cerr << r.label << ": " << r.samples.size() << " samples, terminus "
              << to_string(r.terminus.kind);
    if (r.terminus.kind == TerminusKind::CUSP) std::cerr << '(' << r.terminus.curve.str() << ')';
    std::cerr << " at tau1 = " << format_complex(last.point.tau1)
              << ", tau2 = " << format_complex(last.point.tau2) << '\n';
}

// The trace test alone accepts some powers (T^2 has the right leading block).
CanonicalCoords simple_coords(const GroupWord& w) {
    if (!is_simple(cyclic_reduce(w))) throw NotSimpleError(w.str() + " is not a simple closed curve");
    return infer_coords_from_trace(w);
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::usage: return exit_usage;
        case ErrorKind::precondition: return exit_precondition;
        case ErrorKind::numerical: return exit_numerical;
        case ErrorKind::io: return exit_precondition;
    }
    return exit_usage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maskit embedding of the twice punctured torus: traces, coordinates, pleating rays"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config, "key=value tracer config file");
    app.add_option("--emit", g.emit, "output format: jsonl, csv, svg (rays) or pgm, svg (limitset)");
    app.add_option("--out", g.out, "directory for artifacts (default: stdout or .)");
    app.add_option("--seed-theta", g.seed_theta, "bending scale at the seed")->check(CLI::PositiveNumber);

    std::function<int()> action;

    // trace WORD [TAU1] [TAU2]
    std::string word, tau1_s = "0,1", tau2_s = "0,1";
    auto* trace_cmd = app.add_subcommand("trace", "numeric trace of a word at (tau1, tau2)");
    trace_cmd->add_option("word", word, "word over a A b B t T")->required();
    trace_cmd->add_option("tau1", tau1_s, "RE,IM (default 0,1)");
    trace_cmd->add_option("tau2", tau2_s, "RE,IM (default 0,1)");
    trace_cmd->callback([&] {
        action = [&] {
            const ParameterPoint p{parse_complex(tau1_s), parse_complex(tau2_s)};
            std::cout << format_complex(trace(parse_word(word), p)) << '\n';
            return 0;
        };
    });

    auto* poly_cmd = app.add_subcommand("poly", "exact trace polynomial of a word");
    poly_cmd->add_option("word", word, "word")->required();
    poly_cmd->callback([&] {
        action = [&] {
            const auto cfg = tracer_config(g);
            const BiPoly p = trace_poly(parse_word(word), cfg.symbolic_cap);
            if (g.emit == "json") std::cout << p.json() << '\n';
            else std::cout << p.str() << '\n';
            return 0;
        };
    });

    bool check_arcs = false;
    auto* coords_cmd = app.add_subcommand("coords", "canonical coordinates (q1,p1,q2,p2) of a simple curve");
    coords_cmd->add_option("word", word, "word")->required();
    coords_cmd->add_flag("--check", check_arcs, "also derive them from the arc system and compare");
    coords_cmd->callback([&] {
        action = [&] {
            const GroupWord w = parse_word(word);
            if (!check_arcs) {
                std::cout << simple_coords(w).str() << '\n';
                return 0;
            }
            const auto rec = reconcile_coords(w);
            std::cout << rec.trace.str() << '\n';
            std::cerr << rec.message << '\n';
            return rec.agree ? 0 : exit_precondition;
        };
    });

    std::string word2;
    bool show_disjoint = false;
    auto* pairing_cmd = app.add_subcommand("pairing", "Thurston symplectic pairing of two curves");
    pairing_cmd->add_option("w1", word, "first word")->required();
    pairing_cmd->add_option("w2", word2, "second word")->required();
    pairing_cmd->add_flag("--disjoint", show_disjoint, "also report whether the curves are disjoint");
    pairing_cmd->callback([&] {
        action = [&] {
            const auto a = simple_coords(parse_word(word));
            const auto b = simple_coords(parse_word(word2));
            std::cout << thurston_pairing(a, b) << '\n';
            if (show_disjoint)
                std::cout << (disjoint(parse_word(word), parse_word(word2)) ? "disjoint" : "not disjoint")
                          << '\n';
            return 0;
        };
    });

    std::optional<double> theta_start;
    double theta_end = 100.0;
    int steps = 0;
    auto* ray_cmd = app.add_subcommand("ray", "trace the pleating ray of a curve to its cusp");
    ray_cmd->add_option("--curve", word, "support curve")->required();
    ray_cmd->add_option("--theta-start", theta_start, "seed bending scale (default --seed-theta)");
    ray_cmd->add_option("--theta-end", theta_end, "stop once the nominal scale passes this");
    ray_cmd->add_option("--steps", steps, "maximum number of samples (default max_steps)");
    ray_cmd->callback([&] {
        action = [&] {
            const auto cfg = tracer_config(g);
            const auto ray = trace_ray(parse_word(word), theta_start.value_or(g.seed_theta),
                                       theta_end, steps, cfg);
            print_terminus(ray);
            emit_rays(g, "ray", {ray});
            return ray.terminus.kind == TerminusKind::DIVERGED ? exit_numerical : 0;
        };
    });

    int grid = 19;
    auto* plane_cmd = app.add_subcommand("plane", "trace pseudo-rays of the pleating plane of two disjoint curves");
    plane_cmd->add_option("--c1", word, "first curve")->required();
    plane_cmd->add_option("--c2", word2, "second curve")->required();
    plane_cmd->add_option("--grid", grid, "number of interior weights s = k/(grid+1)")->check(CLI::PositiveNumber);
    plane_cmd->add_option("--theta-start", theta_start, "seed bending scale (default --seed-theta)");
    plane_cmd->add_option("--theta-end", theta_end, "stop once the nominal scale passes this");
    plane_cmd->callback([&] {
        action = [&] {
            const auto cfg = tracer_config(g);
            const auto pl = trace_plane(parse_word(word), parse_word(word2), grid,
                                        theta_start.value_or(g.seed_theta), theta_end, cfg);
            std::cerr << "normalization " << pl.normalization
                      << (pl.exceptional ? " (exceptional pair)" : "") << '\n';
            for (const auto& r : pl.rays) print_terminus(r);
            for (const auto& k : pl.corners)
                std::cerr << "corner " << k.first.str() << '/' << k.second.str()
                          << " at tau1 = " << format_complex(k.point.tau1)
                          << ", tau2 = " << format_complex(k.point.tau2) << '\n';
            emit_rays(g, "plane", pl.rays);
            return 0;
        };
    });

    int depth = 8;
    std::string viewport_s = "-4,-0.5,4,3", px_s = "800,400";
    auto* limit_cmd = app.add_subcommand("limitset", "render orbit points of 0 under words of bounded length");
    limit_cmd->add_option("--tau1", tau1_s, "RE,IM")->required();
    limit_cmd->add_option("--tau2", tau2_s, "RE,IM")->required();
    limit_cmd->add_option("--depth", depth, "maximum word length")->check(CLI::NonNegativeNumber);
    limit_cmd->add_option("--viewport", viewport_s, "x0,y0,x1,y1");
    limit_cmd->add_option("--px", px_s, "W,H");
    limit_cmd->callback([&] {
        action = [&] {
            const ParameterPoint p{parse_complex(tau1_s), parse_complex(tau2_s)};
            require_upper(p);
            const auto v = parse_list(viewport_s, 4, "--viewport");
            const auto s = parse_list(px_s, 2, "--px");
            const Viewport vp{{v[0], v[1]}, {v[2], v[3]}, static_cast<int>(s[0]), static_cast<int>(s[1])};
            validate(vp);
            const auto pts = limit_points(p, depth);
            if (pts.decorative)
                std::cerr << "warning: parameter point not proved inside; picture is decorative\n";
            const std::string fmt = g.emit.empty() ? "pgm" : g.emit;
            if (fmt != "pgm" && fmt != "svg") throw Error(ErrorKind::usage, "--emit for limitset must be pgm or svg");
            const fs::path dir = g.out.empty() ? fs::path(".") : fs::path(g.out);
            fs::create_directories(dir);
            const fs::path path = dir / ("limitset." + fmt);
            if (fmt == "pgm") render_pgm(pts.points, vp, path.string());
            else render_svg(pts.points, vp, path.string());
            std::cout << pts.points.size() << " points -> " << path.string() << '\n';
            return 0;
        };
    });

    auto* domain_cmd = app.add_subcommand("domain-check", "sufficient and necessary membership tests");
    domain_cmd->add_option("--tau1", tau1_s, "RE,IM")->required();
    domain_cmd->add_option("--tau2", tau2_s, "RE,IM")->required();
    domain_cmd->callback([&] {
        action = [&] {
            const auto v = membership({parse_complex(tau1_s), parse_complex(tau2_s)});
            std::cout << to_string(v.status) << '\n';
            std::cerr << v.witness << '\n';
            return 0;
        };
    });

    std::string example;
    auto* ex_cmd = app.add_subcommand("examples", "worked examples with regression checks");
    ex_cmd->add_option("name", example, "ex1, ex2, ex3, ex3a or ex4")->required();
    ex_cmd->callback([&] {
        action = [&] {
            const auto cfg = tracer_config(g);
            const auto r = cli::run_recipe(example, g.seed_theta, cfg);
            for (const auto& c : r.checks)
                std::cout << (c.ok ? "PASS " : "FAIL ") << r.name << ": " << c.name << " = "
                          << format_double(c.value) << " (tol " << format_double(c.tol) << ")\n";
            for (const auto& k : r.corners)
                std::cout << "corner " << k.first.str() << '/' << k.second.str()
                          << " tau1 = " << format_complex(k.point.tau1)
                          << " tau2 = " << format_complex(k.point.tau2) << '\n';
            Globals files = g;
            if (files.out.empty()) files.out = ".";
            files.emit = "jsonl";
            emit_rays(files, r.name, r.rays);
            files.emit = "svg";
            emit_rays(files, r.name, r.rays);
            return r.ok() ? 0 : exit_regression;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    }
}
