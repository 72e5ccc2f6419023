// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here; run via ctest or directly.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "barrier_cover/barrier_cover.hpp"

using namespace barrier_cover;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string name;
    bool ok = true;
    std::ostringstream why;
    std::chrono::steady_clock::time_point start;

    Criterion(int id_, std::string name_)
        : id(id_), name(std::move(name_)), start(std::chrono::steady_clock::now()) {}

    void expect(bool cond, const std::string& detail) {
        if (!cond) {
            if (!ok) why << "; ";
            ok = false;
            why << detail;
        }
    }
    void expect_under(double seconds) {
        const double took = elapsed();
        expect(took < seconds, "runtime " + std::to_string(took) + "s over budget");
    }
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
    ~Criterion() {
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id,
                    name.c_str(), elapsed(), ok ? "" : " -- ",
                    ok ? "" : why.str().c_str());
        if (!ok) ++failures;
    }
};

Instance make_instance(double barrier, std::vector<Sensor> sensors) {
    Instance inst;
    inst.barrier_length = barrier;
    inst.sensors = std::move(sensors);
    return inst;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    double unit() {
        const std::uint64_t a = gen() >> 5, b = gen() >> 6;
        return static_cast<double>(a * 67108864.0 + b) / 9007199254740992.0;
    }
    double real(double lo, double hi) { return lo + (hi - lo) * unit(); }
    int integer(int lo, int hi) {
        return lo + static_cast<int>(unit() * (hi - lo + 1e-12)) % (hi - lo + 1);
    }
};

// n in [2,6], integer coordinates in [0,20], radii in [1,4], barrier length
// feasible by capacity.
Instance random_suite_instance(Rng& rng) {
    Instance inst;
    const int n = rng.integer(2, 6);
    int capacity = 0;
    for (int i = 0; i < n; ++i) {
        Sensor s;
        s.x = rng.integer(0, 20);
        s.y = rng.integer(0, 20);
        s.r = rng.integer(1, 4);
        capacity += static_cast<int>(2 * s.r);
        inst.sensors.push_back(s);
    }
    inst.barrier_length = rng.integer(2, std::min(capacity, 30));
    return inst;
}

std::string at(int seed) { return " (seed " + std::to_string(seed) + ")"; }

void criterion_1() {
    Criterion c(1, "greedy tight example");
    const Instance inst = make_instance(10, {{9, 0, 1}, {6, 0, 4}});
    const auto opt = oracle::exact_2d(inst, 1e-6);
    c.expect(opt && std::abs(*opt - 2) <= 1e-6, "oracle optimum != 2");
    const auto outcome = decide_greedy(inst, 2);
    c.expect(outcome.has_value(), "greedy infeasible at budget 2");
    if (outcome) {
        const double realized = outcome->max_move(inst);
        c.expect(std::abs(realized - 8) <= 1e-6, "realized movement != 8");
        c.expect(realized <= 2 + 2 * inst.max_radius() + 1e-9,
                 "movement exceeds budget + 2 r_max");
        c.expect(verify_solution(inst, *outcome).covered, "cover has gaps");
    }
    c.expect_under(1.0);
}

void criterion_2() {
    Criterion c(2, "integrality-gap example");
    const Instance inst = make_instance(10, {{5, 0, 1}, {5, 0, 4}});
    c.expect(decide_lp(inst, 1), "lp not feasible at budget 1");
    const auto opt = oracle::exact_2d(inst, 1e-6);
    c.expect(opt && std::abs(*opt - 4) <= 1e-6, "oracle optimum != 4");
    const auto outcome = round_solution(inst, 4);
    c.expect(outcome.has_value(), "rounding infeasible at budget 4");
    if (outcome) {
        c.expect(outcome->max_move(inst) <= 8 + 1e-6,
                 "movement exceeds optimum + r_max");
        c.expect(verify_solution(inst, *outcome).covered, "cover has gaps");
    }
    c.expect_under(1.0);
}

void criterion_3() {
    Criterion c(3, "rounding pipeline walkthrough");
    const Instance inst = make_instance(6, {{3, 0, 1}, {3, -1.2, 1}, {3, 2, 1}});
    const auto outcome = round_solution(inst, 2);
    c.expect(outcome.has_value(), "rounding infeasible at budget 2");
    if (outcome) {
        c.expect(outcome->max_move(inst) <= 3 + 1e-6,
                 "movement exceeds budget + r_max");
        c.expect(verify_solution(inst, *outcome).covered, "cover has gaps");
    }
    // Re-run the pipeline stages to inspect blocks and offsets directly.
    const BarrierGraph g = transfer(inst, 2);
    const LpModel m = build_lp(g, inst);
    const auto cover = solve_lp(m);
    c.expect(lp_cover_complete(cover.objective, 6), "lp cover incomplete");
    const auto components =
        exchange_phase_components(swap_phase(pre_aggregate(cover, m, g)));
    double edge = 0;
    for (const auto& sub : components) {
        c.expect(std::abs(sub.lo - edge) <= 1e-9, "blocks do not tile");
        edge = sub.hi;
        c.expect(sub.offset >= -1 - 1e-6 && sub.offset <= 1 + 1e-6,
                 "offset outside [-r_max, r_max]");
    }
    c.expect(std::abs(edge - 6) <= 1e-9, "blocks do not reach the barrier end");
    c.expect_under(1.0);
}

void criterion_4() {
    Criterion c(4, "randomized guarantee suite (200 instances)");
    Rng rng(1040);
    for (int seed = 0; seed < 200; ++seed) {
        const Instance inst = random_suite_instance(rng);
        const auto opt = oracle::exact_2d(inst, 1e-6);
        if (!opt) {
            c.expect(false, "oracle infeasible" + at(seed));
            continue;
        }
        const double r_max = inst.max_radius();

        const auto greedy = decide_greedy(inst, *opt);
        c.expect(greedy.has_value(), "greedy infeasible at optimum" + at(seed));
        if (greedy) {
            c.expect(verify_solution(inst, *greedy).covered,
                     "greedy cover has gaps" + at(seed));
            c.expect(greedy->max_move(inst) <= *opt + 2 * r_max + 1e-6,
                     "greedy exceeds optimum + 2 r_max" + at(seed));
        }

        const auto rounded = round_solution(inst, *opt);
        c.expect(rounded.has_value(), "rounding infeasible at optimum" + at(seed));
        if (rounded) {
            c.expect(verify_solution(inst, *rounded).covered,
                     "rounded cover has gaps" + at(seed));
            c.expect(rounded->max_move(inst) <= *opt + r_max + 1e-6,
                     "rounding exceeds optimum + r_max" + at(seed));
        }

        const auto f2 = factor2_solve(inst, 1e-6);
        c.expect(f2.has_value(), "factor2 infeasible" + at(seed));
        if (f2) {
            c.expect(verify_solution(inst, f2->solution).covered,
                     "factor2 cover has gaps" + at(seed));
            c.expect(f2->reported_bound >= *opt - 1e-6,
                     "factor2 below the optimum" + at(seed));
            c.expect(f2->reported_bound <= 2 * *opt + 1e-4,
                     "factor2 above twice the optimum" + at(seed));
        }
        if (!c.ok) break;
    }
    c.expect_under(60.0);
}

std::vector<std::pair<Instance, int>> integer_suite() {
    std::vector<std::pair<Instance, int>> suite;
    Rng rng(1050);
    for (int seed = 0; seed < 100; ++seed) {
        Instance inst = random_suite_instance(rng);
        const int top = static_cast<int>(std::ceil(max_barrier_distance(inst)));
        suite.emplace_back(std::move(inst), rng.integer(0, top));
    }
    return suite;
}

void criterion_5(const std::vector<std::pair<Instance, int>>& suite) {
    Criterion c(5, "lp/matching agreement (100 integer instances)");
    int seed = 0;
    for (const auto& [inst, budget] : suite) {
        const bool lp_ok = decide_lp(inst, budget);
        const auto matched = decide_matching(inst, budget);
        c.expect(matched.has_value() == lp_ok,
                 "lp and matching disagree" + at(seed));
        if (matched && lp_ok) {
            const auto rounded = round_solution(inst, budget);
            c.expect(rounded.has_value(), "lp rounding failed" + at(seed));
            const double cap = budget + inst.max_radius() + 1e-6;
            c.expect(verify_solution(inst, *matched).covered &&
                         matched->max_move(inst) <= cap,
                     "matching solution out of bounds" + at(seed));
            if (rounded)
                c.expect(verify_solution(inst, *rounded).covered &&
                             rounded->max_move(inst) <= cap,
                         "lp solution out of bounds" + at(seed));
        }
        ++seed;
    }
    c.expect_under(60.0);
}

void criterion_6(const std::vector<std::pair<Instance, int>>& suite) {
    Criterion c(6, "flow vs simplex objectives on the same graphs");
    int seed = 0;
    for (const auto& [inst, budget] : suite) {
        const LpModel m = build_lp(transfer(inst, budget), inst);
        const double via_flow = solve_lp(m).objective;
        const double via_simplex = solve_lp_simplex(m).objective;
        c.expect(std::abs(via_flow - via_simplex) <= 1e-6,
                 "objectives differ" + at(seed));
        ++seed;
    }
    c.expect_under(60.0);
}

void criterion_7() {
    Criterion c(7, "monotonicity sweeps");
    Rng rng(1070);
    for (int seed = 0; seed < 50; ++seed) {
        const Instance inst = random_suite_instance(rng);
        const double top = max_barrier_distance(inst);
        double prev_obj = -1;
        bool was_feasible = false;
        for (int step = 0; step < 10; ++step) {
            const double budget = top * step / 9.0;
            const double obj = solve_lp(build_lp(transfer(inst, budget), inst)).objective;
            c.expect(obj >= prev_obj - 1e-6, "lp objective dropped" + at(seed));
            prev_obj = obj;
            const bool ok = decide_matching(inst, budget).has_value();
            c.expect(!was_feasible || ok, "matching feasibility dropped" + at(seed));
            was_feasible = ok;
        }

        std::vector<int> order(inst.sensors.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::abs(inst.sensors[a].y) < std::abs(inst.sensors[b].y);
        });
        std::vector<LineSensor> line;
        double prev_h = std::numeric_limits<double>::infinity();
        for (int idx : order) {
            line.push_back({inst.sensors[idx].x, inst.sensors[idx].r});
            const double h = solve_1d(line, inst.barrier_length, 1e-6);
            c.expect(h <= prev_h + 1e-6, "prefix 1d optimum increased" + at(seed));
            prev_h = h;
        }
        if (!c.ok) break;
    }
    c.expect_under(60.0);
}

void criterion_8(const std::vector<std::pair<Instance, int>>& suite) {
    Criterion c(8, "search bracket for lp and matching");
    int seed = 0;
    for (const auto& [inst, budget] : suite) {
        (void)budget;
        for (auto kind : {DecisionKind::lp, DecisionKind::matching}) {
            const auto result = solve(inst, kind, 1.0);
            if (!result) {
                c.expect(inst.total_capacity() < inst.barrier_length + 1e-9,
                         "solve failed on a capacity-feasible instance" + at(seed));
                continue;
            }
            const auto decide = [&](double bound) {
                return kind == DecisionKind::lp
                           ? decide_lp(inst, bound)
                           : decide_matching(inst, bound).has_value();
            };
            c.expect(decide(result->base_bound),
                     "base bound not feasible" + at(seed));
            if (result->base_bound - 1.0 >= 0)
                c.expect(!decide(result->base_bound - 1.0),
                         "bound below the bracket still feasible" + at(seed));
        }
        ++seed;
    }
    c.expect_under(120.0);
}

void criterion_9() {
    Criterion c(9, "1d decision vs exhaustive oracle");
    Rng rng(1090);
    for (int seed = 0; seed < 100; ++seed) {
        const int n = rng.integer(1, 7);
        const double barrier = rng.integer(2, 14);
        std::vector<LineSensor> line;
        Instance flat;
        flat.barrier_length = barrier;
        for (int i = 0; i < n; ++i) {
            line.push_back({rng.real(-4, barrier + 4), rng.real(0.5, 4)});
            flat.sensors.push_back({line.back().x, 0, line.back().r});
        }
        const double top = max_barrier_distance(flat);
        for (int probe = 0; probe < 5; ++probe) {
            const double budget = rng.real(0, top + 1);
            c.expect(decide_1d(line, barrier, budget) ==
                         oracle::any_order_feasible(flat, budget),
                     "1d decision disagrees with the oracle" + at(seed));
        }
        if (!c.ok) break;
    }
    c.expect_under(60.0);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    const auto suite = integer_suite();
    criterion_5(suite);
    criterion_6(suite);
    criterion_7();
    criterion_8(suite);
    criterion_9();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures ? 1 : 0;
}
