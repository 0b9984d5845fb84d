#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgbench/answers.hpp"
#include "cgbench/benchgen.hpp"
#include "cgbench/dsep.hpp"
#include "cgbench/extract.hpp"
#include "cgbench/grading.hpp"
#include "cgbench/prompt.hpp"
#include "cgbench/sampling.hpp"

using namespace cgbench;

namespace {

QuestionInstance instance(Task t, QType q, std::uint64_t gseed, std::uint64_t qseed,
                          int variant = 0, int n = 6, int e = 8) {
    GraphSpec spec;
    spec.kind = t == Task::CC || t == Task::MRS || t == Task::FAS || t == Task::CEI
                    ? GraphKind::Admg
                    : GraphKind::Dag;
    spec.n_nodes = n;
    spec.n_edges = e;
    if (spec.kind == GraphKind::Admg) spec.n_bidirected = e / 4;
    MixedGraph g = sample_graph(spec, gseed);
    QuestionInstance inst = make_question(g, t, q, qseed, variant);
    inst.id = std::string(task_code(t)) + "-" + qtype_code(q) + "-1";
    return inst;
}

}  // namespace

TEST_CASE("answer extraction follows the marker") {
    CHECK(extract_answer("Thinking...\nAnswer: Yes, B is a node.", QType::YesNo) == "yes");
    CHECK(extract_answer("The count is four. Answer: 4", QType::HowMany) == "4");
    CHECK_FALSE(extract_answer("I cannot determine this.", QType::ChooseSet).has_value());

    CHECK(extract_answer("answer : no", QType::Exist) == "no");
    CHECK(extract_answer("Answer: A. {B, C}", QType::ChooseSet) == "A");
    CHECK(extract_answer("The answer is (c)", QType::ChooseSet) == "C");
    CHECK(extract_answer("Answer: B, D, E", QType::FindAll) == "B, D, E");
    CHECK(extract_answer("Answer: A -> B -> C.", QType::FindOne) == "A -> B -> C");
    // the last marker wins
    CHECK(extract_answer("Answer: No\nWait. Answer: Yes", QType::YesNo) == "yes");
    // last-line fallback without a marker
    CHECK(extract_answer("Reasoning here.\nSo the result is 12", QType::HowMany) == "12");
    CHECK(extract_answer("it must be yes", QType::YesNo) == "yes");
    CHECK_FALSE(extract_answer("", QType::YesNo).has_value());
    CHECK_FALSE(extract_answer("Answer: maybe", QType::YesNo).has_value());
    CHECK_FALSE(extract_answer("Answer:", QType::FindAll).has_value());
}

TEST_CASE("basic prompt shows graph, question and format instruction") {
    QuestionInstance q = instance(Task::NR2, QType::HowMany, 3, 4);
    std::string p = render_prompt(q, Style::Basic);
    CHECK(p.find("Graph: nodes: ") != std::string::npos);
    CHECK(p.find("Question: " + q.prompt_core.substr(0, 20)) != std::string::npos);
    CHECK(p.find("Finish your response with \"Answer: <number>\"") != std::string::npos);
}

TEST_CASE("definition-guided prompt prepends the definition") {
    QuestionInstance q = instance(Task::BKP, QType::HowMany, 5, 6);
    std::string p = render_prompt(q, Style::DefinitionGuided);
    CHECK(p.find("backdoor path is any path") != std::string::npos);
    CHECK(p.find("Definition: ") < p.find("Graph: "));

    // no built-in definition for plain node counting
    QuestionInstance bare = instance(Task::SN, QType::HowMany, 5, 6);
    CHECK_THROWS_AS(render_prompt(bare, Style::DefinitionGuided), Error);
    Json defs = Json::object();
    defs["SN"] = "A node is a vertex of the graph.";
    std::string with = render_prompt(bare, Style::DefinitionGuided, {}, defs);
    CHECK(with.find("vertex of the graph") != std::string::npos);
}

TEST_CASE("icl prompts embed solved exemplars with distinct graphs") {
    std::vector<QuestionInstance> pool;
    for (std::uint64_t s = 0; s < 6; ++s) {
        pool.push_back(instance(Task::NR2, QType::HowMany, 10 + s, 20 + s));
        pool.back().id = "2NR-HM-" + std::to_string(s + 1);
    }
    QuestionInstance target = pool[0];
    std::string p1 = render_prompt(target, Style::Icl1, pool);
    CHECK(p1.find("Example 1:") != std::string::npos);
    CHECK(p1.find("Answer: ") != std::string::npos);
    CHECK(p1.find("Now the question:") != std::string::npos);

    std::string p3 = render_prompt(target, Style::Icl3, pool);
    CHECK(p3.find("Example 3:") != std::string::npos);
    // deterministic: both renders agree
    CHECK(p3 == render_prompt(target, Style::Icl3, pool));
    // the target's own graph never appears as a shot
    CHECK(p3.find("Example 1:\nGraph: " + target.graph().text_form()) == std::string::npos);

    std::vector<QuestionInstance> tiny{pool[0], pool[1]};
    CHECK_THROWS_AS(render_prompt(pool[0], Style::Icl3, tiny), Error);
}

TEST_CASE("style names round trip") {
    for (Style s : {Style::Basic, Style::DefinitionGuided, Style::Icl1, Style::Icl3})
        CHECK(style_from_name(style_name(s)) == s);
    CHECK_THROWS_AS(style_from_name("fancy"), Error);
    CHECK(style_shots(Style::Icl3) == 3);
}

TEST_CASE("oracle answers grade correct across formats") {
    struct Cell {
        Task t;
        QType q;
        int variant;
    };
    // one representative per ground-truth kind, including every FindOne family
    std::vector<Cell> cells{
        {Task::SN, QType::FindAll, 0},   {Task::SE, QType::FindAll, 0},
        {Task::NR3, QType::FindAll, 0},  {Task::PT, QType::FindAll, 0},
        {Task::PT, QType::FindOne, 1},   {Task::TO, QType::FindOne, 0},
        {Task::BLP, QType::FindOne, 1},  {Task::DS, QType::FindOne, 0},
        {Task::MEC, QType::FindOne, 0},  {Task::MB, QType::FindOne, 0},
        {Task::DP, QType::FindAll, 0},   {Task::BKP, QType::FindOne, 1},
        {Task::CC, QType::FindAll, 0},   {Task::MRS, QType::FindAll, 0},
        {Task::BAS, QType::FindOne, 2},  {Task::FAS, QType::FindOne, 1},
        {Task::CEI, QType::YesNo, 1},    {Task::NR2, QType::HowMany, 0},
        {Task::MEC, QType::YesNo, 0},    {Task::CC, QType::HowMany, 0},
        {Task::TO, QType::ChooseSet, 0},
    };
    std::uint64_t gseed = 1000;
    for (const Cell& c : cells) {
        for (std::uint64_t k = 0; k < 4; ++k) {
            QuestionInstance q;
            bool made = false;
            for (std::uint64_t attempt = 0; attempt < 80 && !made; ++attempt) {
                try {
                    q = instance(c.t, c.q, gseed + 37 * attempt + k,
                                 gseed + 91 * attempt + 3 * k, c.variant);
                    made = true;
                } catch (const Error&) {
                }
            }
            REQUIRE(made);
            std::string text = "Some reasoning.\nAnswer: " + ground_truth_answer_text(q);
            GradeRecord r = grade(q, "oracle", "basic", text);
            CHECK(r.verdict == Verdict::Correct);
        }
        gseed += 101;
    }
}

TEST_CASE("wrong answers grade incorrect, junk grades ungradable") {
    QuestionInstance yn = instance(Task::DP, QType::YesNo, 8, 9, 1);
    bool truth = yn.ground_truth.at("value").get<bool>();
    GradeRecord wrong = grade(yn, "m", "basic", truth ? "Answer: No" : "Answer: Yes");
    CHECK(wrong.verdict == Verdict::Incorrect);
    GradeRecord junk = grade(yn, "m", "basic", "Answer: perhaps");
    CHECK(junk.verdict == Verdict::Ungradable);
    CHECK_FALSE(junk.extracted.has_value());

    QuestionInstance hm = instance(Task::SN, QType::HowMany, 8, 9);
    long n = hm.ground_truth.at("value").get<long>();
    CHECK(grade(hm, "m", "basic", "Answer: " + std::to_string(n + 1)).verdict ==
          Verdict::Incorrect);

    // letters outside the graph poison a set answer without crashing
    QuestionInstance mb = instance(Task::MB, QType::FindOne, 8, 9);
    CHECK(grade(mb, "m", "basic", "Answer: Q, R").verdict == Verdict::Incorrect);
}

TEST_CASE("find-one accepts any valid witness, not just the stored one") {
    // X <- Z -> Y plus X -> W <- Y: more than one valid separator exists
    MixedGraph g = MixedGraph::build(
        GraphKind::Dag, {'Z', 'X', 'Y', 'W'},
        {{'Z', 'X'}, {'Z', 'Y'}, {'X', 'W'}, {'Y', 'W'}});
    QuestionInstance q = make_question(g, Task::DS, QType::FindOne, 5021, 0);
    q.id = "DS-FO-1";
    std::string stored = ground_truth_answer_text(q);
    GradeRecord r1 = grade(q, "m", "basic", "Answer: " + stored);
    CHECK(r1.verdict == Verdict::Correct);

    char x = q.ground_truth.at("x").get<std::string>()[0];
    char y = q.ground_truth.at("y").get<std::string>()[0];
    // every valid separator must be accepted for the "valid" variant
    if (q.ground_truth.at("variant") == "valid") {
        for (const std::string& alt : {std::string("Z"), std::string("none")}) {
            auto parsed = parse_node_list(alt);
            REQUIRE(parsed.has_value());
            bool valid = true;
            try {
                valid = d_separated(g, x, y, *parsed);
            } catch (const Error&) {
                valid = false;
            }
            GradeRecord r = grade(q, "m", "basic", "Answer: " + alt);
            CHECK((r.verdict == Verdict::Correct) == valid);
        }
    }
}

TEST_CASE("grade records round trip and overrides apply") {
    QuestionInstance q = instance(Task::SE, QType::YesNo, 2, 3, 1);
    GradeRecord r = grade(q, "gpt-x", "icl1", "Answer: Yes");
    Json j = r.to_json();
    GradeRecord back = GradeRecord::from_json(j);
    CHECK(back.question_id == r.question_id);
    CHECK(back.verdict == r.verdict);
    CHECK(back.to_json() == j);

    std::vector<GradeRecord> records{r};
    records[0].verdict = Verdict::Ungradable;
    Json o = Json::object();
    o["question_id"] = r.question_id;
    o["model"] = "gpt-x";
    o["verdict"] = "correct";
    apply_overrides(records, {o});
    CHECK(records[0].verdict == Verdict::Correct);

    Json bad = Json::object();
    bad["question_id"] = r.question_id;
    CHECK_THROWS_AS(apply_overrides(records, {bad}), Error);
}
