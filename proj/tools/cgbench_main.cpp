#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cgbench/benchgen.hpp"
#include "cgbench/endpoint.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/grading.hpp"
#include "cgbench/io_util.hpp"
#include "cgbench/prompt.hpp"
#include "cgbench/report.hpp"
#include "cgbench/selftest.hpp"

using namespace cgbench;

namespace {

std::string join_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

std::vector<QuestionInstance> load_questions(const std::string& path) {
    std::vector<QuestionInstance> out;
    for (const Json& row : read_jsonl(path)) out.push_back(QuestionInstance::from_json(row));
    return out;
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int cmd_generate(const std::string& config_path, bool seed_set, std::uint64_t seed,
                 const std::string& out_dir, int workers) {
    if (!seed_set)
        fail(Err::ConfigInvalid, "master_seed is required; pass --seed");
    GenConfig cfg;
    if (!config_path.empty()) cfg = GenConfig::from_json(read_json_file(config_path));
    Benchmark bench = generate_benchmark(cfg, seed, workers);
    std::filesystem::create_directories(out_dir);
    std::vector<Json> rows;
    for (const QuestionInstance& q : bench.questions) rows.push_back(q.to_json());
    write_jsonl_atomic(join_path(out_dir, "questions.jsonl"), rows);
    write_json_atomic(join_path(out_dir, "manifest.json"), bench.manifest);
    std::cout << bench.questions.size() << " questions, digest "
              << bench.manifest.at("digest").get<std::string>() << "\n";
    return 0;
}

int cmd_render(const std::string& questions_path, const std::string& style_word,
               const std::string& config_path, const std::string& out_dir) {
    Style style = style_from_name(style_word);
    Json definitions = Json::object();
    if (!config_path.empty()) {
        Json cfg = read_json_file(config_path);
        if (cfg.is_object() && cfg.contains("definitions")) definitions = cfg.at("definitions");
    }
    std::vector<QuestionInstance> questions = load_questions(questions_path);
    std::vector<Json> rows;
    for (const QuestionInstance& q : questions) {
        Json row;
        row["question_id"] = q.id;
        row["style"] = style_name(style);
        row["prompt"] = render_prompt(q, style, questions, definitions);
        rows.push_back(row);
    }
    std::filesystem::create_directories(out_dir);
    write_jsonl_atomic(join_path(out_dir, "prompts.jsonl"), rows);
    std::cout << rows.size() << " prompts rendered in style " << style_name(style) << "\n";
    return 0;
}

int cmd_ask(const std::string& prompts_path, const std::string& questions_path,
            const std::string& endpoint_name, const std::string& config_path,
            const std::string& out_dir, int concurrency) {
    std::vector<ModelEndpoint> eps;
    if (!config_path.empty()) eps = endpoints_from_json(read_json_file(config_path));
    ModelEndpoint ep = endpoint_by_name(eps, endpoint_name);

    std::map<std::string, QuestionInstance> by_id;
    if (!ep.builtin.empty() || std::filesystem::exists(questions_path))
        for (QuestionInstance& q : load_questions(questions_path)) by_id.emplace(q.id, q);

    std::vector<Json> prompts = read_jsonl(prompts_path);
    int width = concurrency > 0 ? concurrency : ep.max_concurrency;
    if (width < 1) width = 1;
    if (width > 64) width = 64;

    std::vector<Json> rows(prompts.size());
    std::atomic<std::size_t> next{0};
    std::mutex fail_mu;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= prompts.size()) return;
            {
                std::lock_guard<std::mutex> lock(fail_mu);
                if (first_error) return;
            }
            try {
                const Json& p = prompts[i];
                std::string qid = p.at("question_id").get<std::string>();
                const QuestionInstance* inst = nullptr;
                auto it = by_id.find(qid);
                if (it != by_id.end()) inst = &it->second;
                auto started = std::chrono::steady_clock::now();
                std::string text = call_model(ep, p.at("prompt").get<std::string>(), inst);
                auto elapsed = std::chrono::steady_clock::now() - started;
                Json row;
                row["question_id"] = qid;
                row["model"] = ep.name;
                row["style"] = p.at("style");
                row["response_text"] = text;
                row["latency_ms"] =
                    std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
                row["timestamp"] = iso_timestamp();
                rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (width == 1 || prompts.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < width; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::filesystem::create_directories(out_dir);
    write_jsonl_atomic(join_path(out_dir, "responses.jsonl"), rows);
    std::cout << rows.size() << " responses from " << ep.name << "\n";
    return 0;
}

int cmd_grade(const std::string& questions_path, const std::string& responses_path,
              const std::string& overrides_path, const std::string& out_dir) {
    std::map<std::string, QuestionInstance> by_id;
    for (QuestionInstance& q : load_questions(questions_path)) by_id.emplace(q.id, q);
    std::vector<GradeRecord> records;
    for (const Json& row : read_jsonl(responses_path)) {
        std::string qid = row.at("question_id").get<std::string>();
        auto it = by_id.find(qid);
        if (it == by_id.end()) fail(Err::UnknownQuestionId, "response references '" + qid + "'");
        records.push_back(grade(it->second, row.at("model").get<std::string>(),
                                row.at("style").get<std::string>(),
                                row.at("response_text").get<std::string>()));
    }
    if (!overrides_path.empty()) apply_overrides(records, read_jsonl(overrides_path));
    std::vector<Json> rows;
    int correct = 0, incorrect = 0, ungradable = 0;
    for (const GradeRecord& r : records) {
        rows.push_back(r.to_json());
        if (r.verdict == Verdict::Correct)
            ++correct;
        else if (r.verdict == Verdict::Incorrect)
            ++incorrect;
        else
            ++ungradable;
    }
    std::filesystem::create_directories(out_dir);
    write_jsonl_atomic(join_path(out_dir, "grades.jsonl"), rows);
    std::cout << correct << " correct, " << incorrect << " incorrect, " << ungradable
              << " ungradable\n";
    return 0;
}

int cmd_report(const std::string& questions_path, const std::string& grades_path,
               const std::string& out_dir) {
    std::vector<QuestionInstance> questions = load_questions(questions_path);
    std::vector<GradeRecord> grades;
    bool any_secondary = false;
    for (const Json& row : read_jsonl(grades_path)) {
        grades.push_back(GradeRecord::from_json(row));
        if (grades.back().style != "basic") any_secondary = true;
    }
    Tables tables = aggregate(questions, grades);
    Json report = criteria_report(tables, default_chains(), any_secondary);
    std::filesystem::create_directories(out_dir);
    write_json_atomic(join_path(out_dir, "report.json"), report);
    std::string text = report_text(tables);
    write_text_atomic(join_path(out_dir, "report.txt"), text);
    std::cout << text;
    return 0;
}

int cmd_selftest(std::uint64_t seed, bool quick) {
    SelftestConfig cfg;
    if (quick) {
        cfg.exhaustive = false;
        cfg.dsep_cases = 1000;
        cfg.identify_samples = 400;
    }
    bool all_pass = true;
    for (const SelftestResult& r : run_selftest(seed, cfg)) {
        if (r.pass()) {
            std::cout << "PASS " << r.name << " (" << r.cases << " cases)\n";
        } else {
            all_pass = false;
            std::cout << "FAIL " << r.name << " (" << r.mismatches << "/" << r.cases
                      << " mismatches) " << r.detail << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"causal graph benchmark toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    std::string questions_path = "questions.jsonl";
    std::string prompts_path = "prompts.jsonl";
    std::string responses_path = "responses.jsonl";
    std::string grades_path = "grades.jsonl";
    std::string overrides_path, style_word = "basic", endpoint_name;
    std::uint64_t seed = 0;
    bool seed_set = false, quick = false;
    int concurrency = 0;

    auto* gen = app.add_subcommand("generate", "build the question set");
    gen->add_option("--config", config_path, "generation config JSON");
    gen->add_option("--seed", seed, "master seed")->each([&](const std::string&) {
        seed_set = true;
    });
    gen->add_option("--out", out_dir, "output directory");
    gen->add_option("--concurrency", concurrency, "worker threads");

    auto* ren = app.add_subcommand("render", "render prompts for a style");
    ren->add_option("--questions", questions_path, "questions.jsonl path");
    ren->add_option("--style", style_word, "basic|def|icl1|icl3");
    ren->add_option("--config", config_path, "config JSON with definitions");
    ren->add_option("--out", out_dir, "output directory");

    auto* ask = app.add_subcommand("ask", "send prompts to a model endpoint");
    ask->add_option("--prompts", prompts_path, "prompts.jsonl path");
    ask->add_option("--questions", questions_path, "questions.jsonl path");
    ask->add_option("--endpoint", endpoint_name, "endpoint name")->required();
    ask->add_option("--config", config_path, "endpoint config JSON");
    ask->add_option("--out", out_dir, "output directory");
    ask->add_option("--concurrency", concurrency, "parallel requests");

    auto* grd = app.add_subcommand("grade", "grade model responses");
    grd->add_option("--questions", questions_path, "questions.jsonl path");
    grd->add_option("--responses", responses_path, "responses.jsonl path");
    grd->add_option("--overrides", overrides_path, "verdict overrides JSONL");
    grd->add_option("--out", out_dir, "output directory");

    auto* rep = app.add_subcommand("report", "aggregate grades into the report");
    rep->add_option("--questions", questions_path, "questions.jsonl path");
    rep->add_option("--grades", grades_path, "grades.jsonl path");
    rep->add_option("--out", out_dir, "output directory");

    std::uint64_t st_seed = 1;
    auto* st = app.add_subcommand("selftest", "cross-check the oracles");
    st->add_option("--seed", st_seed, "selftest seed");
    st->add_flag("--quick", quick, "smaller batteries, skip exhaustive sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (gen->parsed()) return cmd_generate(config_path, seed_set, seed, out_dir, concurrency);
        if (ren->parsed()) return cmd_render(questions_path, style_word, config_path, out_dir);
        if (ask->parsed())
            return cmd_ask(prompts_path, questions_path, endpoint_name, config_path, out_dir,
                           concurrency);
        if (grd->parsed())
            return cmd_grade(questions_path, responses_path, overrides_path, out_dir);
        if (rep->parsed()) return cmd_report(questions_path, grades_path, out_dir);
        if (st->parsed()) return cmd_selftest(st_seed, quick);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
