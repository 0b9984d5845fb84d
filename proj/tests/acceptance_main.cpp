// Release gate: one check per shipping guarantee, one PASS/FAIL line each.
// Exits nonzero when any check fails. Slower than the unit suites because it
// exercises the full default benchmark and the exhaustive oracle selftest.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cgbench/adjustment.hpp"
#include "cgbench/benchgen.hpp"
#include "cgbench/endpoint.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/grading.hpp"
#include "cgbench/graph.hpp"
#include "cgbench/identify.hpp"
#include "cgbench/prompt.hpp"
#include "cgbench/report.hpp"
#include "cgbench/rng.hpp"
#include "cgbench/selftest.hpp"
#include "cgbench/tasks.hpp"

using namespace cgbench;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (detail.empty()) detail = why;
    }
};

// independent copy of the stock per-cell counts, FA FO HM CS YN EX order,
// so drift in the library defaults cannot hide from this gate
struct CountRow {
    const char* code;
    int counts[kQTypeCount];
};
const CountRow kStockCounts[kTaskCount] = {
    {"SN", {48, 0, 48, 48, 48, 0}},   {"SE", {48, 0, 48, 48, 48, 0}},
    {"2NR", {24, 0, 24, 24, 24, 24}}, {"3NR", {24, 0, 24, 24, 24, 24}},
    {"PT", {24, 72, 24, 24, 24, 0}},  {"CL", {0, 36, 0, 36, 36, 36}},
    {"TO", {0, 48, 0, 48, 48, 0}},    {"BLP", {0, 72, 0, 36, 36, 0}},
    {"DS", {0, 60, 0, 30, 30, 0}},    {"MEC", {0, 60, 0, 0, 60, 0}},
    {"MB", {0, 48, 0, 48, 48, 0}},    {"DP", {24, 0, 24, 24, 24, 24}},
    {"BKP", {24, 48, 24, 24, 24, 0}}, {"CC", {36, 0, 36, 0, 36, 0}},
    {"CT", {0, 0, 0, 0, 120, 0}},     {"CF", {0, 0, 0, 0, 120, 0}},
    {"MRS", {48, 0, 48, 48, 48, 0}},  {"BAS", {0, 72, 0, 24, 24, 12}},
    {"FAS", {0, 72, 0, 24, 24, 24}},  {"CEI", {0, 0, 0, 0, 120, 0}},
};
constexpr int kStockTotal = 2808;
constexpr std::uint64_t kSeed = 42;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

Outcome check_default_counts(const Benchmark& bench, double gen_seconds) {
    Outcome out;
    if (static_cast<int>(bench.questions.size()) != kStockTotal)
        out.fail("generated " + std::to_string(bench.questions.size()) + " questions, wanted " +
                 std::to_string(kStockTotal));

    std::map<std::string, std::map<std::string, int>> seen;
    for (const QuestionInstance& q : bench.questions)
        ++seen[task_code(q.task)][qtype_code(q.qtype)];
    for (const CountRow& row : kStockCounts)
        for (int qi = 0; qi < kQTypeCount; ++qi) {
            const char* qc = qtype_code(static_cast<QType>(qi));
            int got = seen[row.code][qc];
            if (got != row.counts[qi])
                out.fail(std::string(row.code) + " " + qc + " has " + std::to_string(got) +
                         " questions, wanted " + std::to_string(row.counts[qi]));
        }

    if (bench.manifest.at("total").get<int>() != kStockTotal) out.fail("manifest total is off");
    if (gen_seconds >= 120.0)
        out.fail("generation took " + fmt(gen_seconds) + "s, budget is 120s");
    if (out.ok)
        out.detail = std::to_string(kStockTotal) + " questions in " + fmt(gen_seconds) + "s";
    return out;
}

Outcome check_determinism(const Benchmark& first) {
    Outcome out;
    GenConfig cfg;
    Benchmark again = generate_benchmark(cfg, kSeed, 8);
    Benchmark serial = generate_benchmark(cfg, kSeed, 1);

    std::string d0 = benchmark_digest(first.questions);
    if (benchmark_digest(again.questions) != d0) out.fail("same seed, different digest");
    if (benchmark_digest(serial.questions) != d0) out.fail("worker count changed the digest");

    if (serial.questions.size() != first.questions.size()) {
        out.fail("worker count changed the question count");
    } else {
        for (std::size_t i = 0; i < first.questions.size(); ++i)
            if (first.questions[i].to_json().dump() != serial.questions[i].to_json().dump()) {
                out.fail("question " + first.questions[i].id + " differs between 8 and 1 workers");
                break;
            }
    }
    if (first.manifest.dump() != serial.manifest.dump())
        out.fail("manifest differs between 8 and 1 workers");
    if (out.ok) out.detail = "digest " + d0;
    return out;
}

Outcome check_selftest() {
    Outcome out;
    Clock::time_point start = Clock::now();
    std::vector<SelftestResult> results = run_selftest(7);
    double took = seconds_since(start);

    std::map<std::string, const SelftestResult*> by_name;
    for (const SelftestResult& r : results) {
        by_name[r.name] = &r;
        if (!r.pass())
            out.fail(r.name + " found " + std::to_string(r.mismatches) + "/" +
                     std::to_string(r.cases) + " mismatches: " + r.detail);
    }
    auto require_cases = [&](const std::string& name, long at_least) {
        auto it = by_name.find(name);
        if (it == by_name.end())
            out.fail("selftest is missing the " + name + " battery");
        else if (it->second->cases < at_least)
            out.fail(name + " ran " + std::to_string(it->second->cases) + " cases, wanted " +
                     std::to_string(at_least));
    };
    require_cases("dsep", 5000);
    require_cases("mec", 1);
    require_cases("adjustment", 1000);
    require_cases("identify", 1);
    if (took >= 600.0) out.fail("selftest took " + fmt(took) + "s, budget is 600s");
    if (out.ok) {
        long total = 0;
        for (const SelftestResult& r : results) total += r.cases;
        out.detail = std::to_string(total) + " cases in " + fmt(took) + "s";
    }
    return out;
}

Outcome check_canonical_cases() {
    Outcome out;

    MixedGraph conf = MixedGraph::build(GraphKind::Dag, {'Z', 'X', 'Y'},
                                        {{'Z', 'X'}, {'Z', 'Y'}, {'X', 'Y'}});
    if (!adjustment_verify(conf, {'X', 'Y', {'Z'}, Criterion::Backdoor}))
        out.fail("confounder: {Z} rejected as a backdoor set");
    if (!adjustment_is_minimal(conf, 'X', 'Y', Criterion::Backdoor, {'Z'}))
        out.fail("confounder: {Z} not reported minimal");
    auto minimal = adjustment_find_minimal(conf, 'X', 'Y', Criterion::Backdoor);
    if (!minimal || *minimal != std::vector<char>{'Z'})
        out.fail("confounder: minimal backdoor set is not {Z}");

    MixedGraph front = MixedGraph::build(GraphKind::Admg, {'X', 'M', 'Y'},
                                         {{'X', 'M'}, {'M', 'Y'}}, {{'X', 'Y'}});
    if (!adjustment_verify(front, {'X', 'Y', {'M'}, Criterion::Frontdoor}))
        out.fail("frontdoor: {M} rejected");
    if (!effect_identifiable(front, 'X', 'Y')) out.fail("frontdoor: effect not identifiable");

    MixedGraph bow =
        MixedGraph::build(GraphKind::Admg, {'X', 'Y'}, {{'X', 'Y'}}, {{'X', 'Y'}});
    if (adjustment_exists(bow, 'X', 'Y', Criterion::Backdoor))
        out.fail("bow: a backdoor set was reported");
    if (effect_identifiable(bow, 'X', 'Y')) out.fail("bow: effect reported identifiable");

    if (out.ok) out.detail = "confounder, frontdoor and bow all as expected";
    return out;
}

Outcome check_mock_run(const Benchmark& bench) {
    Outcome out;
    ModelEndpoint oracle = endpoint_by_name({}, "oracle_mock");
    ModelEndpoint random = endpoint_by_name({}, "random_mock");
    random.builtin_seed = 2718;

    long oracle_wrong = 0;
    AccCell yesno, choice;
    for (const QuestionInstance& q : bench.questions) {
        GradeRecord g = grade(q, "oracle_mock", "basic", call_model(oracle, "", &q));
        if (g.verdict != Verdict::Correct) {
            ++oracle_wrong;
            if (oracle_wrong == 1)
                out.fail("oracle answer marked " + std::string(verdict_name(g.verdict)) +
                         " on " + q.id);
        }
        GradeRecord r = grade(q, "random_mock", "basic", call_model(random, "", &q));
        if (q.qtype == QType::YesNo || q.qtype == QType::Exist) yesno.add(r.verdict);
        if (q.qtype == QType::ChooseSet) choice.add(r.verdict);
    }
    if (oracle_wrong)
        out.fail("oracle missed " + std::to_string(oracle_wrong) + " of " +
                 std::to_string(bench.questions.size()));

    if (yesno.ungradable || choice.ungradable) out.fail("random answers came back ungradable");
    double yn_acc = yesno.accuracy();
    double cs_acc = choice.accuracy();
    if (std::fabs(yn_acc - 0.5) > 0.03)
        out.fail("random yes/no accuracy " + fmt(yn_acc) + " outside 0.50 +/- 0.03");
    if (std::fabs(cs_acc - 0.25) > 0.03)
        out.fail("random choice accuracy " + fmt(cs_acc) + " outside 0.25 +/- 0.03");
    if (out.ok)
        out.detail = "oracle 1.000, random " + fmt(yn_acc) + " on " +
                     std::to_string(yesno.graded()) + " yes/no and " + fmt(cs_acc) + " on " +
                     std::to_string(choice.graded()) + " choices";
    return out;
}

// published style-comparison accuracies for one model, percent, with the
// task order NR3 PT BLP BKP CC MRS FAS
struct StyleRow {
    Task t;
    double basic, def, icl1, icl3;
};
const StyleRow kPublishedRows[] = {
    {Task::NR3, 55.2, 60.4, 57.3, 54.2}, {Task::PT, 33.3, 23.6, 31.9, 26.4},
    {Task::BLP, 43.1, 56.9, 44.4, 48.6}, {Task::BKP, 44.4, 62.5, 52.8, 55.6},
    {Task::CC, 58.3, 59.7, 48.6, 65.3},  {Task::MRS, 25.7, 43.1, 30.6, 34.0},
    {Task::FAS, 62.5, 65.3, 69.4, 63.9},
};

Outcome check_style_deltas() {
    Outcome out;
    Tables tables;
    auto put = [&](const std::string& style, Task t, double pct) {
        AccCell cell;
        cell.correct = static_cast<int>(pct * 10.0 + 0.5);  // thousandths, exact
        cell.incorrect = 1000 - cell.correct;
        tables["gpt-4"][style].by_task[task_code(t)] = cell;
    };
    for (const StyleRow& row : kPublishedRows) {
        put("basic", row.t, row.basic);
        put("def", row.t, row.def);
        put("icl1", row.t, row.icl1);
        put("icl3", row.t, row.icl3);
    }

    Json report = criteria_report(tables, default_chains(), true);
    const Json& b3 = report.at("b3").at("gpt-4");
    auto expect = [&](const char* task, const char* style, double want) {
        double got = b3.at("tasks").at(task).at(style).get<double>();
        if (std::fabs(got - want) > 0.05)
            out.fail(std::string(task) + " " + style + " delta " + fmt(got) + ", wanted " +
                     fmt(want) + " +/- 0.05");
    };
    expect("BKP", "def", 18.1);
    expect("BKP", "icl1", 8.4);
    expect("BKP", "icl3", 11.2);
    double mean = b3.at("mean_def_delta").get<double>();
    if (std::fabs(mean - 7.0) > 0.05)
        out.fail("mean definition delta " + fmt(mean) + ", wanted 7.0 +/- 0.05");
    if (out.ok)
        out.detail = "deltas 18.1 / 8.4 / 11.2, mean " + fmt(mean);
    return out;
}

Outcome check_chain_logic() {
    Outcome out;
    Rng rng(99);
    const std::vector<std::vector<Task>> chain = {{Task::CC, Task::CT, Task::CF}};
    int trials = 120;
    for (int i = 0; i < trials; ++i) {
        int correct[3];
        double acc[3];
        for (int k = 0; k < 3; ++k) {
            correct[k] = static_cast<int>(rng.below(101));
            acc[k] = correct[k] / 100.0;
        }
        // ties show up rarely by chance; force some
        if (i % 7 == 0) correct[1] = correct[0], acc[1] = acc[0];

        Tables tables;
        StyleTables& st = tables["m"]["basic"];
        const Task order[3] = {Task::CC, Task::CT, Task::CF};
        for (int k = 0; k < 3; ++k) {
            AccCell cell;
            cell.correct = correct[k];
            cell.incorrect = 100 - correct[k];
            st.by_task_qtype[task_code(order[k])]["YN"] = cell;
        }
        Json row = criteria_report(tables, chain, false).at("b4").at("m").at("basic")[0];
        bool hand = acc[1] <= acc[0] + 1e-9 && acc[2] <= acc[1] + 1e-9;
        std::string want = hand ? "monotone" : "violated";
        if (row.at("verdict") != want) {
            out.fail("triple " + fmt(acc[0]) + "/" + fmt(acc[1]) + "/" + fmt(acc[2]) +
                     " judged " + row.at("verdict").get<std::string>() + ", wanted " + want);
            break;
        }
        if (chain_monotone({acc[0], acc[1], acc[2]}) != hand) {
            out.fail("predicate disagrees with the hand check");
            break;
        }
    }
    if (out.ok) out.detail = std::to_string(trials) + " randomized triples agree";
    return out;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](const char* name, const Outcome& out) {
        std::printf("%s  %s%s%s%s\n", out.ok ? "PASS" : "FAIL", name,
                    out.detail.empty() ? "" : " (", out.detail.c_str(),
                    out.detail.empty() ? "" : ")");
        std::fflush(stdout);
        if (!out.ok) ++failures;
    };
    auto guarded = [&](const char* name, auto&& fn) {
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out.fail(std::string("threw: ") + e.what());
        }
        report(name, out);
    };

    Benchmark bench;
    {
        Outcome out;
        Clock::time_point start = Clock::now();
        try {
            bench = generate_benchmark(GenConfig{}, kSeed, 8);
            out = check_default_counts(bench, seconds_since(start));
        } catch (const std::exception& e) {
            out.fail(std::string("threw: ") + e.what());
        }
        report("default generation matches the stock count table", out);
    }
    bool have_bench = static_cast<int>(bench.questions.size()) == kStockTotal;

    guarded("same config and seed reproduce the benchmark byte for byte", [&] {
        if (!have_bench) {
            Outcome out;
            out.fail("skipped: no benchmark to compare against");
            return out;
        }
        return check_determinism(bench);
    });
    guarded("oracles agree with brute force on the selftest batteries", check_selftest);
    guarded("canonical confounder, frontdoor and bow graphs behave", check_canonical_cases);
    guarded("mock endpoints score as designed on the full benchmark", [&] {
        if (!have_bench) {
            Outcome out;
            out.fail("skipped: no benchmark to grade");
            return out;
        }
        return check_mock_run(bench);
    });
    guarded("style deltas match the published comparison table", check_style_deltas);
    guarded("chain verdicts match a hand predicate on random triples", check_chain_logic);

    if (failures) std::printf("%d acceptance check(s) failed\n", failures);
    return failures ? 1 : 0;
}
