// Command-line front end for the barrier-cover solver.
//
//   barrier_cover decide --algo {greedy|lp|matching} --d <D> -i inst.json [-o sol.json]
//   barrier_cover solve  --algo {greedy|lp|matching|factor2|best} --resolution <r>
//                        -i inst.json [-o sol.json]
//   barrier_cover gen    --n <n> --barrier <M> --radius-min <a> --radius-max <b>
//                        --spread <s> --seed <k> -o inst.json
//   barrier_cover verify -i inst.json -s sol.json
//   barrier_cover oracle -i inst.json [--precision <p>]
//   barrier_cover bench  --suite <dir>
//   barrier_cover render -i inst.json [-s sol.json] -o fig.svg
//
// Exit codes: 0 ok, 1 infeasible / gaps found, 2 malformed input or usage.
// BARRIER_COVER_EPS overrides the interval tolerance (default 1e-9).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "barrier_cover/barrier_cover.hpp"

namespace bc = barrier_cover;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_infeasible = 1;
constexpr int exit_bad_input = 2;

// Deterministic 53-bit uniform draw; the distribution adapters in <random>
// are implementation-defined, mt19937 itself is pinned by the standard.
double next_unit(std::mt19937& rng) {
    const std::uint64_t a = rng() >> 5;  // 27 bits
    const std::uint64_t b = rng() >> 6;  // 26 bits
    return static_cast<double>(a * 67108864.0 + b) / 9007199254740992.0;
}
double uniform(std::mt19937& rng, double lo, double hi) {
    return lo + (hi - lo) * next_unit(rng);
}

bc::DecisionKind parse_kind(const std::string& name) {
    if (name == "greedy") return bc::DecisionKind::greedy;
    if (name == "lp") return bc::DecisionKind::lp;
    if (name == "matching") return bc::DecisionKind::matching;
    if (name == "factor2") return bc::DecisionKind::factor2;
    throw bc::MalformedInput("unknown algorithm: " + name);
}

void write_solution(const std::string& path, const bc::Instance& inst,
                    const bc::Solution& sol, double base, double reported) {
    const auto file = bc::make_solution_file(inst, sol, base, reported);
    bc::save_json(path, bc::solution_to_json(file));
}

int cmd_decide(const std::string& input, const std::string& output,
               const std::string& algo, double bound) {
    const bc::Instance inst = bc::load_instance(input);
    const bc::DecisionKind kind = parse_kind(algo);
    if (kind == bc::DecisionKind::factor2)
        throw bc::MalformedInput("decide: factor2 is not a decision procedure");
    const bc::DecisionOutcome outcome = bc::run_decision(inst, kind, bound);
    if (!outcome) {
        std::cout << "infeasible\n";
        return exit_infeasible;
    }
    std::cout << "feasible\n";
    if (!output.empty()) {
        const double slack =
            (kind == bc::DecisionKind::greedy ? 2 : 1) * inst.max_radius();
        write_solution(output, inst, *outcome, bound, bound + slack);
    }
    return exit_ok;
}

int cmd_solve(const std::string& input, const std::string& output,
              const std::string& algo, double resolution) {
    const bc::Instance inst = bc::load_instance(input);
    std::optional<bc::SearchResult> result;
    if (algo == "best")
        result = bc::solve_best(inst, resolution);
    else if (algo == "factor2")
        result = bc::factor2_solve(inst, resolution);
    else
        result = bc::solve(inst, parse_kind(algo), resolution);
    if (!result) {
        std::cout << "infeasible\n";
        return exit_infeasible;
    }
    std::cout << "algo " << bc::to_string(result->kind) << "\n"
              << "base_D " << bc::round12(result->base_bound) << "\n"
              << "reported_D " << bc::round12(result->reported_bound) << "\n"
              << "max_move " << bc::round12(result->solution.max_move(inst)) << "\n";
    if (!output.empty())
        write_solution(output, inst, result->solution, result->base_bound,
                       result->reported_bound);
    return exit_ok;
}

int cmd_gen(const std::string& output, int n, double barrier, double r_min,
            double r_max, double spread, unsigned seed) {
    if (n <= 0 || barrier <= 0 || r_min <= 0 || r_max < r_min)
        throw bc::MalformedInput("gen: invalid parameters");
    std::mt19937 rng(seed);
    bc::Instance inst;
    inst.barrier_length = barrier;
    for (int i = 0; i < n; ++i) {
        bc::Sensor s;
        s.x = uniform(rng, -spread, barrier + spread);
        s.y = uniform(rng, -spread, spread);
        s.r = uniform(rng, r_min, r_max);
        inst.sensors.push_back(s);
    }
    bc::save_json(output, bc::instance_to_json(inst));
    return exit_ok;
}

int cmd_verify(const std::string& input, const std::string& solution_path) {
    const bc::Instance inst = bc::load_instance(input);
    const bc::SolutionFile file = bc::load_solution(solution_path);
    if (file.solution.positions.size() != inst.sensors.size())
        throw bc::MalformedInput("verify: solution/instance sensor count mismatch");
    const bc::CoverageReport rep = bc::verify_solution(inst, file.solution);
    std::cout << "covered " << (rep.covered ? "true" : "false") << "\n"
              << "max_move " << bc::round12(rep.max_move) << "\n";
    for (const auto& gap : rep.gaps)
        std::cout << "gap [" << bc::round12(gap.lo) << ", " << bc::round12(gap.hi)
                  << "]\n";
    return rep.covered ? exit_ok : exit_infeasible;
}

int cmd_oracle(const std::string& input, double precision) {
    const bc::Instance inst = bc::load_instance(input);
    const auto opt = bc::oracle::exact_2d(inst, precision);
    if (!opt) {
        std::cout << "infeasible\n";
        return exit_infeasible;
    }
    std::cout << "optimum " << bc::round12(*opt) << "\n";
    return exit_ok;
}

bool integral_instance(const bc::Instance& inst) {
    const auto whole = [](double v) { return std::abs(v - std::round(v)) < 1e-9; };
    if (!whole(inst.barrier_length)) return false;
    for (const auto& s : inst.sensors)
        if (!whole(s.r)) return false;
    return true;
}

int cmd_bench(const std::string& suite) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(suite))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw bc::MalformedInput("bench: no .json instances in " + suite);

    std::cout << "instance            algo      max_move    reported    ratio\n";
    for (const auto& path : files) {
        const bc::Instance inst = bc::load_instance(path.string());
        std::optional<double> optimum;
        if (inst.sensors.size() <= bc::oracle::max_exact_sensors)
            optimum = bc::oracle::exact_2d(inst, 1e-6);

        std::vector<std::pair<std::string, std::optional<bc::SearchResult>>> runs;
        runs.emplace_back("greedy", bc::solve(inst, bc::DecisionKind::greedy, 1e-3));
        runs.emplace_back("lp", bc::solve(inst, bc::DecisionKind::lp, 1e-3));
        if (integral_instance(inst))
            runs.emplace_back("matching",
                              bc::solve(inst, bc::DecisionKind::matching, 1e-3));
        runs.emplace_back("factor2", bc::factor2_solve(inst, 1e-6));
        runs.emplace_back("best", bc::solve_best(inst, 1e-3));

        for (const auto& [name, res] : runs) {
            std::printf("%-19s %-9s", path.filename().string().c_str(), name.c_str());
            if (!res) {
                std::printf(" infeasible\n");
                continue;
            }
            const double realized = res->solution.max_move(inst);
            std::printf(" %11.6f %11.6f", realized, res->reported_bound);
            if (optimum && *optimum > 1e-9)
                std::printf(" %8.3f\n", realized / *optimum);
            else
                std::printf("        -\n");
        }
    }
    return exit_ok;
}

int cmd_render(const std::string& input, const std::string& solution_path,
               const std::string& output) {
    const bc::Instance inst = bc::load_instance(input);
    std::optional<bc::Solution> sol;
    if (!solution_path.empty()) {
        const auto file = bc::load_solution(solution_path);
        if (file.solution.positions.size() != inst.sensors.size())
            throw bc::MalformedInput("render: solution/instance sensor count mismatch");
        sol = file.solution;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << bc::render_svg(inst, sol ? &*sol : nullptr);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout.precision(12);
    if (const char* eps = std::getenv("BARRIER_COVER_EPS")) {
        const double v = std::strtod(eps, nullptr);
        if (v > 0) bc::set_epsilon(v);
    }

    CLI::App app{"min-max sensor relocation onto a line barrier"};
    app.require_subcommand(1);

    std::string input, output, solution_path, algo = "lp", suite;
    double bound = 0, resolution = 1, precision = 1e-6;
    int n = 8;
    double barrier = 10, r_min = 1, r_max = 2, spread = 2;
    unsigned seed = 1;

    auto* decide = app.add_subcommand("decide", "fixed-bound feasibility");
    decide->add_option("--algo", algo)->check(CLI::IsMember({"greedy", "lp", "matching"}));
    decide->add_option("--d", bound)->required();
    decide->add_option("-i,--input", input)->required();
    decide->add_option("-o,--output", output);

    auto* solve = app.add_subcommand("solve", "minimize the movement bound");
    solve->add_option("--algo", algo)
        ->check(CLI::IsMember({"greedy", "lp", "matching", "factor2", "best"}));
    solve->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
    solve->add_option("-i,--input", input)->required();
    solve->add_option("-o,--output", output);

    auto* gen = app.add_subcommand("gen", "emit a random instance");
    gen->add_option("--n", n)->check(CLI::PositiveNumber);
    gen->add_option("--barrier", barrier)->check(CLI::PositiveNumber);
    gen->add_option("--radius-min", r_min)->check(CLI::PositiveNumber);
    gen->add_option("--radius-max", r_max)->check(CLI::PositiveNumber);
    gen->add_option("--spread", spread)->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", output)->required();

    auto* verify = app.add_subcommand("verify", "check a solution file");
    verify->add_option("-i,--input", input)->required();
    verify->add_option("-s,--solution", solution_path)->required();

    auto* oracle = app.add_subcommand("oracle", "exact optimum (small n)");
    oracle->add_option("-i,--input", input)->required();
    oracle->add_option("--precision", precision)->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "compare algorithms over a directory");
    bench->add_option("--suite", suite)->required();

    auto* render = app.add_subcommand("render", "emit an SVG figure");
    render->add_option("-i,--input", input)->required();
    render->add_option("-s,--solution", solution_path);
    render->add_option("-o,--output", output)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) return cmd_decide(input, output, algo, bound);
        if (solve->parsed()) return cmd_solve(input, output, algo, resolution);
        if (gen->parsed())
            return cmd_gen(output, n, barrier, r_min, r_max, spread, seed);
        if (verify->parsed()) return cmd_verify(input, solution_path);
        if (oracle->parsed()) return cmd_oracle(input, precision);
        if (bench->parsed()) return cmd_bench(suite);
        if (render->parsed()) return cmd_render(input, solution_path, output);
    } catch (const bc::MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_bad_input;
}
