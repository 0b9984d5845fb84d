#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cgbench/benchgen.hpp"
#include "cgbench/grading.hpp"
#include "cgbench/prompt.hpp"
#include "cgbench/sampling.hpp"

using namespace cgbench;

TEST_CASE("default config carries the stock counts") {
    GenConfig cfg;
    CHECK(cfg.total() == 2808);
    CHECK(cfg.at(Task::SN, QType::FindAll) == 48);
    CHECK(cfg.at(Task::SN, QType::FindOne) == 0);
    CHECK(cfg.at(Task::BKP, QType::FindOne) == 48);
    CHECK(cfg.at(Task::CEI, QType::YesNo) == 120);
    CHECK(cfg.at(Task::CT, QType::YesNo) == 120);
    CHECK(cfg.at(Task::PT, QType::FindOne) == 72);
    CHECK(cfg.at(Task::MEC, QType::FindOne) == 60);
    CHECK(GenConfig::zeros().total() == 0);
}

TEST_CASE("config json round trip and validation") {
    Json j = Json::parse(R"({"counts": {"SN": {"FA": 5}, "DS": {"FO": 2}}})");
    GenConfig cfg = GenConfig::from_json(j);
    CHECK(cfg.total() == 7);
    CHECK(cfg.at(Task::SN, QType::FindAll) == 5);
    CHECK(cfg.at(Task::DS, QType::FindOne) == 2);
    CHECK(GenConfig::from_json(cfg.to_json()).total() == 7);

    // defaults when no counts key is present
    CHECK(GenConfig::from_json(Json::object()).total() == 2808);

    CHECK_THROWS_AS(GenConfig::from_json(Json::parse(R"({"counts": {"XX": {"FA": 1}}})")), Error);
    CHECK_THROWS_AS(GenConfig::from_json(Json::parse(R"({"counts": {"SN": {"ZZ": 1}}})")), Error);
    CHECK_THROWS_AS(GenConfig::from_json(Json::parse(R"({"counts": {"SN": {"FA": -1}}})")), Error);
    // SN has no existence questions
    CHECK_THROWS_AS(GenConfig::from_json(Json::parse(R"({"counts": {"SN": {"EX": 1}}})")), Error);
    CHECK_THROWS_AS(GenConfig::from_json(Json::parse("[1,2]")), Error);
}

TEST_CASE("make_question is deterministic and verifier-clean") {
    GraphSpec spec;
    spec.n_nodes = 6;
    spec.n_edges = 8;
    MixedGraph g = sample_graph(spec, 99);
    QuestionInstance a = make_question(g, Task::NR2, QType::FindAll, 4242);
    QuestionInstance b = make_question(g, Task::NR2, QType::FindAll, 4242);
    CHECK(a.to_json() == b.to_json());
    QuestionInstance c = make_question(g, Task::NR2, QType::FindAll, 4243);
    CHECK(a.to_json() != c.to_json());

    CHECK_THROWS_AS(make_question(g, Task::SN, QType::Exist, 1), Error);
}

TEST_CASE("small benchmark honors the config") {
    GenConfig cfg = GenConfig::zeros();
    cfg.set(Task::SN, QType::FindAll, 4);
    cfg.set(Task::PT, QType::FindOne, 6);
    cfg.set(Task::CL, QType::Exist, 12);
    cfg.set(Task::BAS, QType::YesNo, 6);
    Benchmark bench = generate_benchmark(cfg, 7, 2);
    REQUIRE(bench.questions.size() == 28);

    std::set<std::string> ids;
    int cl_yes = 0;
    for (const QuestionInstance& q : bench.questions) {
        ids.insert(q.id);
        CHECK(!q.prompt_core.empty());
        const MixedGraph g = q.graph();
        CHECK(g.n() >= 4);
        CHECK(g.n() <= 9);
        if (q.task == Task::CL && q.ground_truth.at("value").get<bool>()) ++cl_yes;
    }
    CHECK(ids.size() == bench.questions.size());
    // the yes/no channel alternates by slot, so a 12-cell splits 6/6
    CHECK(cl_yes == 6);
    CHECK(bench.manifest.at("total").get<int>() == 28);
    CHECK(bench.manifest.at("digest").get<std::string>().size() == 16);
}

TEST_CASE("worker fan-out does not change the bytes") {
    GenConfig cfg = GenConfig::zeros();
    cfg.set(Task::DP, QType::Exist, 8);
    cfg.set(Task::MB, QType::ChooseSet, 6);
    cfg.set(Task::CC, QType::HowMany, 4);
    Benchmark one = generate_benchmark(cfg, 31, 1);
    Benchmark eight = generate_benchmark(cfg, 31, 8);
    CHECK(benchmark_digest(one.questions) == benchmark_digest(eight.questions));
    CHECK(one.manifest == eight.manifest);
}

TEST_CASE("choice cells carry four options with exactly one correct") {
    GenConfig cfg = GenConfig::zeros();
    cfg.set(Task::MRS, QType::ChooseSet, 6);
    cfg.set(Task::TO, QType::ChooseSet, 6);
    Benchmark bench = generate_benchmark(cfg, 55, 1);
    for (const QuestionInstance& q : bench.questions) {
        REQUIRE(q.choices.size() == 4);
        std::string label = q.ground_truth.at("value").get<std::string>();
        int hits = 0;
        for (const Choice& ch : q.choices) {
            if (ch.label == label) ++hits;
            // every option is spelled out in the prompt body
            CHECK(q.prompt_core.find(ch.label + ". " + ch.text) != std::string::npos);
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("question instances round trip through json") {
    GraphSpec spec;
    spec.n_nodes = 5;
    spec.n_edges = 6;
    MixedGraph g = sample_graph(spec, 5);
    QuestionInstance q = make_question(g, Task::TO, QType::YesNo, 17, 1);
    q.id = "TO-YN-1";
    Json j = q.to_json();
    CHECK(j.at("n_v").get<int>() == 5);
    CHECK(j.at("n_e").get<int>() == 6);
    QuestionInstance back = QuestionInstance::from_json(j);
    CHECK(back.to_json() == j);
}

TEST_CASE("ground truths satisfy their own verifiers on a sample") {
    GenConfig cfg = GenConfig::zeros();
    cfg.set(Task::PT, QType::FindOne, 6);
    cfg.set(Task::BLP, QType::FindOne, 6);
    cfg.set(Task::BKP, QType::FindOne, 6);
    cfg.set(Task::BAS, QType::FindOne, 6);
    cfg.set(Task::FAS, QType::FindOne, 6);
    cfg.set(Task::DS, QType::FindOne, 6);
    cfg.set(Task::MEC, QType::FindOne, 6);
    cfg.set(Task::CL, QType::FindOne, 6);
    Benchmark bench = generate_benchmark(cfg, 23, 2);
    for (const QuestionInstance& q : bench.questions) {
        // the answer the oracle wrote down must grade as correct
        CHECK(answer_correct(q, ground_truth_answer_text(q)));
    }
}
