// Command-line front end: construction dumps, profiles, direction sweeps,
// verification suites and the seminorm estimators. Exit codes: 0 pass,
// 1 assertion failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plradon/analysis.hpp"
#include "plradon/construction.hpp"
#include "plradon/io_json.hpp"
#include "plradon/profile.hpp"
#include "plradon/sobolev.hpp"

namespace {

using nlohmann::json;
using namespace plradon;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << content;
}

int run_construct(int levels, const std::string& out) {
    const Truncation tr = build_truncation(levels);
    write_output(out, truncation_to_json(tr).dump(2) + "\n");
    return 0;
}

int run_profile(const std::string& omega, int levels, const std::string& mode,
                const std::string& out) {
    const Truncation tr = build_truncation(levels);
    json j;
    const auto special = special_from_name(omega);
    if (mode == "exact") {
        if (!special) {
            std::cerr << "exact mode requires one of the twelve special direction names\n";
            return 2;
        }
        j = profile_to_json(region_profile_exact(tr.region, *special));
        j["meta"] = meta_json(levels, "exact", 0);
        j["meta"]["omega"] = special_name(*special);
    } else {
        Direction d = special ? Direction::special(*special)
                              : Direction::angle(std::stod(omega) * std::numbers::pi / 180.0);
        if (special && is_edge_normal(*special)) {
            std::cerr << "float mode is forbidden at the edge-normal directions; use exact\n";
            return 2;
        }
        j = profile_to_json(region_profile_float(tr.region, d));
        j["meta"] = meta_json(levels, "float", 0);
        j["meta"]["omega"] = d.describe();
    }
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int run_sweep(int grid, int levels, int refine, const std::string& out) {
    auto dirs = uniform_grid(grid);
    if (refine > 0) {
        for (int m = 0; m < 12; ++m) {
            const SpecialDir sd = special_from_thirty_deg(m);
            for (int n = 3; n <= refine; ++n) {
                for (int sgn : {-1, 1}) {
                    dirs.push_back(
                        Direction::angle(special_angle(sd) + sgn * std::ldexp(1.0, -n)));
                }
            }
        }
    }
    SweepTable table = lip_sweep(dirs, levels);
    table.grid_spec = "uniform:" + std::to_string(grid) +
                      (refine > 0 ? "+dyadic<=2^-" + std::to_string(refine) : "");
    write_output(out, sweep_to_csv(table, 0));
    return 0;
}

json spacing_to_json(const SpacingReport& rep) {
    json failures = json::array();
    for (const auto& e : rep.entries) {
        if (!e.ok) {
            failures.push_back({{"j", e.level_a}, {"i", e.level_b}, {"k", e.k},
                                {"sq_dist", e.sq_dist.to_double()},
                                {"sq_bound", e.sq_bound.to_double()}});
        }
    }
    return failures;
}

int run_verify(const std::string& suite, int levels, const std::string& out) {
    json report;
    report["suite"] = suite;
    report["meta"] = meta_json(levels, "exact", 0);
    bool pass = false;

    if (suite == "fj") {
        const int jmax = std::max(0, levels);
        json rows = json::array();
        pass = true;
        for (int j = 0; j <= jmax; ++j) {
            const FjReport r = verify_fj(j, 100);
            pass = pass && r.ok();
            rows.push_back({{"j", j},
                            {"values_ok", r.values_ok},
                            {"breakpoints_ok", r.breakpoints_ok},
                            {"continuous_ok", r.continuous_ok},
                            {"mismatches", r.mismatches.size()}});
        }
        report["rows"] = rows;
    } else if (suite == "Fk") {
        const FkReport r = verify_Fk(std::max(2, levels));
        pass = r.all_ok;
        json rows = json::array();
        for (const auto& cl : r.per_k) {
            rows.push_back({{"k", cl.k},
                            {"restriction_ok", cl.restriction_ok},
                            {"tail_constant_ok", cl.tail_constant_ok},
                            {"head_constant_ok", cl.head_constant_ok},
                            {"cover_ok", cl.cover_ok},
                            {"slope_bound_ok", cl.slope_bound_ok}});
        }
        report["rows"] = rows;
    } else if (suite == "special") {
        const Truncation tr = build_truncation(levels);
        pass = true;
        json rows = json::array();
        for (SpecialDir d : {SpecialDir::Omega0Perp, SpecialDir::Omega1Perp,
                             SpecialDir::Omega2Perp, SpecialDir::NegOmega0Perp,
                             SpecialDir::NegOmega1Perp, SpecialDir::NegOmega2Perp}) {
            const auto r = special_direction_check(tr, d);
            pass = pass && r.ok;
            rows.push_back({{"omega", special_name(d)},
                            {"rho", r.rho.to_double()},
                            {"interior_jumps", r.interior_jump_count},
                            {"surviving_jumps", r.jumps.size()},
                            {"windowed_lipschitz", r.windowed_lipschitz.to_double()}});
        }
        report["rows"] = rows;
    } else if (suite == "claim") {
        const ClaimReport r = claim_suite(3, 10, 1000, 12345);
        pass = r.all_ok;
        json rows = json::array();
        for (const auto& c : r.cases) {
            rows.push_back({{"N", c.n},
                            {"levels", c.levels},
                            {"bound", c.bound},
                            {"max_count", c.max_count},
                            {"ok", c.ok}});
        }
        report["rows"] = rows;
    } else if (suite == "bounds") {
        // Area bound and series limit, spacing, and the sup bound on a grid.
        const QS3 half_height(Rat(0), Rat(1, 2));
        const QS3 limit = limit_area();
        bool area_ok = true;
        QS3 prev(0);
        for (int j = 1; j <= std::max(2, levels); ++j) {
            const QS3 a = truncation_area(j);
            area_ok = area_ok && a < half_height && prev < a &&
                      abs(limit - a) <= QS3(Rat::pow2(-2 * j));
            prev = a;
        }
        const Truncation tr = build_truncation(std::max(2, levels));
        const SpacingReport sp = spacing_check(tr);
        const SweepTable sw = lip_sweep(uniform_grid(180), std::max(2, levels));
        const double two_sqrt3 = 2 * QS3::sqrt3().to_double();
        const bool sup_ok = sw.sup_bound <= two_sqrt3 + 1e-9;
        pass = area_ok && sp.all_ok && sup_ok;
        report["area_ok"] = area_ok;
        report["spacing_ok"] = sp.all_ok;
        report["spacing_failures"] = spacing_to_json(sp);
        report["sup_bound"] = sw.sup_bound;
        report["sup_ok"] = sup_ok;
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }

    report["pass"] = pass;
    write_output(out, report.dump(2) + "\n");
    return pass ? 0 : 1;
}

int run_sobolev(const std::string& check, const std::string& shape_name, double delta_min,
                long long samples, std::uint64_t seed, int levels, const std::string& out) {
    if (check == "slice") {
        json rows = json::array();
        bool pass = true;
        for (double sigma : {0.5, 1.0, 2.0}) {
            const auto r = slice_identity_gaussian(sigma);
            pass = pass && r.rel_err <= 1e-6;
            rows.push_back({{"sigma", r.sigma}, {"lhs", r.lhs}, {"rhs", r.rhs},
                            {"rel_err", r.rel_err}});
        }
        json report{{"check", "slice"}, {"rows", rows}, {"pass", pass}};
        report["meta"] = meta_json(levels, "float", seed);
        write_output(out, report.dump(2) + "\n");
        return pass ? 0 : 1;
    }
    if (check == "chain") {
        const auto r = chain_inequality_check(levels, 720);
        json report{{"check", "chain"}, {"lhs", r.lhs}, {"rhs", r.rhs},
                    {"m_hat", r.m_hat}, {"pass", r.ok}};
        report["meta"] = meta_json(levels, "float", seed);
        write_output(out, report.dump(2) + "\n");
        return r.ok ? 0 : 1;
    }
    if (check == "gagliardo") {
        SobolevShape shape = SobolevShape::ball(1.0);
        if (shape_name == "triangle") {
            shape = SobolevShape::triangle(
                StandardTriangle{Point{QS3(0), QS3(0)}, QS3(1), Orientation::Up});
        } else if (shape_name == "set") {
            shape = SobolevShape::region(build_truncation(levels).region);
        }
        const double delta_max = 1.0 / 16.0;
        int dyadic_levels = 1;
        for (double d = delta_max; d / 2 >= delta_min * 0.999999; d /= 2) ++dyadic_levels;
        const auto rows = gagliardo_dyadic(shape, delta_max, dyadic_levels, samples, seed);
        write_output(out, estimates_to_csv(rows, levels, "monte-carlo", seed));
        return 0;
    }
    std::cerr << "unknown check: " << check << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact piecewise-linear profiles of a recursive triangle construction"};
    app.require_subcommand(1);

    int levels = 4;
    std::string out;

    auto* construct = app.add_subcommand("construct", "emit the truncated construction as JSON");
    construct->add_option("--levels", levels, "number of levels")->required();
    construct->add_option("--out", out, "output path (default stdout)");

    std::string omega = "omega0";
    std::string mode = "exact";
    auto* profile = app.add_subcommand("profile", "emit one profile as JSON");
    profile->add_option("--omega", omega, "special name or angle in degrees")->required();
    profile->add_option("--levels", levels, "number of levels")->required();
    profile->add_option("--mode", mode, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    profile->add_option("--out", out, "output path (default stdout)");

    int grid = 720;
    int refine = 0;
    auto* sweep = app.add_subcommand("sweep", "emit a direction sweep as CSV");
    sweep->add_option("--grid", grid, "uniform grid size");
    sweep->add_option("--levels", levels, "number of levels")->required();
    sweep->add_option("--dyadic-refine", refine,
                      "add offsets 2^-3..2^-n around each special direction");
    sweep->add_option("--out", out, "output path (default stdout)");

    std::string suite = "fj";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "fj|Fk|special|claim|bounds")->required()
        ->check(CLI::IsMember({"fj", "Fk", "special", "claim", "bounds"}));
    verify->add_option("--levels", levels, "number of levels");
    verify->add_option("--out", out, "output path (default stdout)");

    std::string check = "slice";
    std::string shape = "ball";
    double delta_min = 1.0 / 4096.0;
    long long samples = 2000000;
    std::uint64_t seed = 20240905;
    auto* sobolev = app.add_subcommand("sobolev", "seminorm estimators and identities");
    sobolev->add_option("--check", check, "gagliardo|slice|chain")->required()
        ->check(CLI::IsMember({"gagliardo", "slice", "chain"}));
    sobolev->add_option("--shape", shape, "ball|triangle|set")
        ->check(CLI::IsMember({"ball", "triangle", "set"}));
    sobolev->add_option("--delta-min", delta_min, "smallest truncation radius");
    sobolev->add_option("--samples", samples, "Monte-Carlo samples per shell");
    sobolev->add_option("--seed", seed, "RNG seed");
    sobolev->add_option("--levels", levels, "number of levels for shape=set / chain");
    sobolev->add_option("--out", out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed()) return run_construct(levels, out);
        if (profile->parsed()) return run_profile(omega, levels, mode, out);
        if (sweep->parsed()) return run_sweep(grid, levels, refine, out);
        if (verify->parsed()) return run_verify(suite, levels, out);
        if (sobolev->parsed())
            return run_sobolev(check, shape, delta_min, samples, seed, levels, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
