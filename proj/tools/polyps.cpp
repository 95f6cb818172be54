// polyps command-line front end.
//
// Exit codes: 0 success, 2 user error, 3 numerical precondition failure.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyps/polyps.hpp"
#include "polyps/svg.hpp"

namespace {

using namespace polyps;

struct RunConfig {
    std::string in_path;
    std::string gen_spec;
    bool structured = false;
    std::string epsilon = "auto";
    int N = 100;
    int trials = 1000;
    int index = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string svg_path;
};

ProblemBundle resolve_input(const RunConfig& cfg) {
    if (!cfg.in_path.empty() && !cfg.gen_spec.empty())
        throw ParseError("--in and --gen are mutually exclusive");
    if (!cfg.in_path.empty()) return load_polynomial(cfg.in_path);
    if (cfg.gen_spec.empty()) throw ParseError("one of --in or --gen is required");

    const std::string& g = cfg.gen_spec;
    if (g == "example2") return gen_example2();
    if (g.rfind("mass-spring:", 0) == 0) {
        const int n = std::stoi(g.substr(12));
        return gen_mass_spring(n);
    }
    if (g.rfind("random:", 0) == 0) {
        const std::string rest = g.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos) throw ParseError("expected random:N:SEED, got " + g);
        const int n = std::stoi(rest.substr(0, colon));
        const std::uint64_t seed = std::stoull(rest.substr(colon + 1));
        return gen_random_quadratic(n, seed);
    }
    throw ParseError("unknown generator spec: " + g);
}

// epsilon is either a decimal or "auto"; auto is only meaningful for the
// cloud subcommands, which resolve it from the defectivity estimate
std::optional<double> parse_epsilon(const std::string& text) {
    if (text == "auto") return std::nullopt;
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError("bad --epsilon value: " + text);
    }
    if (used != text.size() || value < 0.0) throw ParseError("bad --epsilon value: " + text);
    return value;
}

// writes to the path when given, stdout otherwise
template <class Fn>
void emit(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open " + path + " for writing");
    fn(os);
}

void emit_cloud(const Cloud& cloud, const RunConfig& cfg, const MatrixPolynomial& P) {
    emit(cfg.out_path, [&](std::ostream& os) { write_csv(cloud, os); });
    if (cfg.out_path.empty()) {
        write_meta(cloud, std::cerr);
    } else {
        std::ofstream meta(cfg.out_path + ".meta.json");
        if (!meta) throw ParseError("cannot open " + cfg.out_path + ".meta.json for writing");
        write_meta(cloud, meta);
    }
    if (!cfg.svg_path.empty()) {
        std::ofstream svg(cfg.svg_path);
        if (!svg) throw ParseError("cannot open " + cfg.svg_path + " for writing");
        write_svg_scatter(cloud, polyeig(P), svg);
    }
}

int cmd_eig(const RunConfig& cfg) {
    auto b = resolve_input(cfg);
    auto eigs = polyeig(b.P);
    emit(cfg.out_path, [&](std::ostream& os) {
        os << "index,re,im\n";
        os.precision(17);
        for (std::size_t k = 0; k < eigs.size(); ++k)
            os << k + 1 << ',' << eigs[k].real() << ',' << eigs[k].imag() << '\n';
    });
    return 0;
}

int cmd_cond(const RunConfig& cfg) {
    auto b = resolve_input(cfg);
    auto table = cfg.structured ? condition_table(b.P, b.w, b.S) : condition_table(b.P, b.w);
    emit(cfg.out_path, [&](std::ostream& os) { write_csv(table, os); });
    return 0;
}

int cmd_defect(const RunConfig& cfg) {
    auto b = resolve_input(cfg);
    auto rep = cfg.structured ? structured_defectivity_estimate(b.P, b.w, b.S)
                              : unstructured_defectivity_estimate(b.P, b.w);
    emit(cfg.out_path, [&](std::ostream& os) { write_report(rep, os); });
    return 0;
}

int cmd_cloud(const RunConfig& cfg) {
    auto b = resolve_input(cfg);
    const auto eps = parse_epsilon(cfg.epsilon);
    Cloud cloud;
    if (cfg.index > 0) {
        double value;
        if (eps) {
            value = *eps;
        } else {
            auto rep = cfg.structured ? structured_defectivity_estimate(b.P, b.w, b.S)
                                      : unstructured_defectivity_estimate(b.P, b.w);
            value = rep.epsilon;
        }
        cloud = single_index_cloud(b.P, b.w, cfg.index, value, cfg.N,
                                   cfg.structured ? std::optional<StructureSet>(b.S)
                                                  : std::nullopt);
    } else if (cfg.structured) {
        cloud = approx_structured_pseudospectrum(b.P, b.w, b.S, cfg.N, eps);
    } else {
        cloud = approx_pseudospectrum(b.P, b.w, cfg.N, eps);
    }
    cloud.meta.problem_id = b.id;
    emit_cloud(cloud, cfg, b.P);
    return 0;
}

int cmd_random_cloud(const RunConfig& cfg) {
    auto b = resolve_input(cfg);
    const auto eps = parse_epsilon(cfg.epsilon);
    double value;
    if (eps) {
        value = *eps;
    } else {
        auto rep = cfg.structured ? structured_defectivity_estimate(b.P, b.w, b.S)
                                  : unstructured_defectivity_estimate(b.P, b.w);
        value = rep.epsilon;
    }
    auto cloud = random_baseline_cloud(b.P, b.w, cfg.trials, value,
                                       cfg.structured ? std::optional<StructureSet>(b.S)
                                                      : std::nullopt,
                                       cfg.seed);
    cloud.meta.problem_id = b.id;
    emit_cloud(cloud, cfg, b.P);
    return 0;
}

int cmd_gen(const RunConfig& cfg) {
    if (cfg.gen_spec.empty()) throw ParseError("gen requires --gen");
    if (cfg.out_path.empty()) throw ParseError("gen requires --out");
    auto b = resolve_input(cfg);
    save_polynomial(b, cfg.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenvalue sensitivity and pseudospectrum clouds for matrix polynomials"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string subcommand;
    for (const auto& name : {"eig", "cond", "defect", "cloud", "random-cloud", "gen"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--in", cfg.in_path, "polynomial bundle (JSON)");
        sub->add_option("--gen", cfg.gen_spec, "example2 | mass-spring:N | random:N:SEED");
        sub->add_flag("--structured", cfg.structured, "use the bundle's structure classes");
        sub->add_option("--epsilon", cfg.epsilon, "perturbation size, or 'auto'");
        sub->add_option("--N", cfg.N, "phase grid size")->check(CLI::PositiveNumber);
        sub->add_option("--trials", cfg.trials, "random trials")->check(CLI::PositiveNumber);
        sub->add_option("--index", cfg.index, "1-based eigenvalue index for a single sweep");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--out", cfg.out_path, "output path (stdout if omitted)");
        sub->add_option("--svg", cfg.svg_path, "scatter plot path");
        sub->callback([&subcommand, name] { subcommand = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (subcommand == "eig") return cmd_eig(cfg);
        if (subcommand == "cond") return cmd_cond(cfg);
        if (subcommand == "defect") return cmd_defect(cfg);
        if (subcommand == "cloud") return cmd_cloud(cfg);
        if (subcommand == "random-cloud") return cmd_random_cloud(cfg);
        if (subcommand == "gen") return cmd_gen(cfg);
        std::cerr << "error: unknown subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: ParseError: " << e.what() << '\n';
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: DimensionMismatch: " << e.what() << '\n';
        return 2;
    } catch (const SingularLeadingCoefficient& e) {
        std::cerr << "error: SingularLeadingCoefficient: " << e.what() << '\n';
        return 3;
    } catch (const NotSimple& e) {
        std::cerr << "error: NotSimple: " << e.what() << '\n';
        return 3;
    } catch (const DegenerateSpectrum& e) {
        std::cerr << "error: DegenerateSpectrum: " << e.what() << '\n';
        return 3;
    } catch (const ZeroProjection& e) {
        std::cerr << "error: ZeroProjection: " << e.what() << '\n';
        return 3;
    } catch (const AllZeroDirection& e) {
        std::cerr << "error: AllZeroDirection: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
