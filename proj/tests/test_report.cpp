#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cgbench/errors.hpp"
#include "cgbench/report.hpp"

using namespace cgbench;

namespace {

QuestionInstance stub(const std::string& id, Task t, QType q) {
    QuestionInstance inst;
    inst.id = id;
    inst.task = t;
    inst.qtype = q;
    return inst;
}

GradeRecord graded(const std::string& id, const std::string& model, const std::string& style,
                   Verdict v) {
    GradeRecord r;
    r.question_id = id;
    r.model = model;
    r.style = style;
    r.verdict = v;
    return r;
}

AccCell cell(int correct, int incorrect, int ungradable = 0) {
    AccCell c;
    c.correct = correct;
    c.incorrect = incorrect;
    c.ungradable = ungradable;
    return c;
}

// task accuracies in percent, basic / def / icl1 / icl3, denominators of 1000
struct StyleRow {
    Task t;
    double basic, def, icl1, icl3;
};

Tables published_style_tables() {
    const StyleRow rows[] = {
        {Task::NR3, 55.2, 60.4, 57.3, 54.2}, {Task::PT, 33.3, 23.6, 31.9, 26.4},
        {Task::BLP, 43.1, 56.9, 44.4, 48.6}, {Task::BKP, 44.4, 62.5, 52.8, 55.6},
        {Task::CC, 58.3, 59.7, 48.6, 65.3},  {Task::MRS, 25.7, 43.1, 30.6, 34.0},
        {Task::FAS, 62.5, 65.3, 69.4, 63.9},
    };
    Tables t;
    auto put = [&](const std::string& style, Task task, double pct) {
        int correct = static_cast<int>(pct * 10.0 + 0.5);
        t["gpt4"][style].by_task[task_code(task)] = cell(correct, 1000 - correct);
    };
    for (const StyleRow& r : rows) {
        put("basic", r.t, r.basic);
        put("def", r.t, r.def);
        put("icl1", r.t, r.icl1);
        put("icl3", r.t, r.icl3);
    }
    return t;
}

}  // namespace

TEST_CASE("accuracy cells count verdicts and exclude ungradable") {
    AccCell c;
    c.add(Verdict::Correct);
    c.add(Verdict::Correct);
    c.add(Verdict::Incorrect);
    c.add(Verdict::Ungradable);
    CHECK(c.correct == 2);
    CHECK(c.incorrect == 1);
    CHECK(c.ungradable == 1);
    CHECK(c.graded() == 3);
    CHECK(c.accuracy() == doctest::Approx(2.0 / 3.0));
    CHECK(AccCell{}.accuracy() == 0.0);
}

TEST_CASE("aggregate rolls grades into every breakdown") {
    std::vector<QuestionInstance> qs{
        stub("q1", Task::SN, QType::YesNo),
        stub("q2", Task::SN, QType::HowMany),
        stub("q3", Task::DS, QType::FindOne),
    };
    std::vector<GradeRecord> gs{
        graded("q1", "m1", "basic", Verdict::Correct),
        graded("q1", "m1", "basic", Verdict::Incorrect),
        graded("q2", "m1", "basic", Verdict::Correct),
        graded("q3", "m1", "basic", Verdict::Ungradable),
        graded("q1", "m2", "def", Verdict::Correct),
    };
    Tables t = aggregate(qs, gs);
    REQUIRE(t.count("m1") == 1);
    REQUIRE(t.at("m1").count("basic") == 1);
    const StyleTables& st = t.at("m1").at("basic");
    CHECK(st.by_task.at("SN").correct == 2);
    CHECK(st.by_task.at("SN").incorrect == 1);
    CHECK(st.by_task.at("DS").ungradable == 1);
    CHECK(st.by_qtype.at("YN").graded() == 2);
    CHECK(st.by_qtype.at("HM").correct == 1);
    CHECK(st.by_task_qtype.at("SN").at("YN").incorrect == 1);
    CHECK(st.by_level.at(level_name(task_level(Task::SN))).graded() == 3);
    CHECK(st.by_level.at(level_name(task_level(Task::DS))).ungradable == 1);
    CHECK(t.at("m2").at("def").by_task.at("SN").correct == 1);

    std::vector<GradeRecord> bad{graded("nope", "m1", "basic", Verdict::Correct)};
    try {
        aggregate(qs, bad);
        FAIL("expected an unknown question error");
    } catch (const Error& e) {
        CHECK(e.code() == Err::UnknownQuestionId);
    }
}

TEST_CASE("guessing baselines depend on the answer format") {
    CHECK(random_baseline(Task::SN, QType::YesNo) == doctest::Approx(0.5));
    CHECK(random_baseline(Task::NR2, QType::Exist) == doctest::Approx(0.5));
    CHECK(random_baseline(Task::SN, QType::ChooseSet) == doctest::Approx(0.25));
    CHECK(random_baseline(Task::SN, QType::FindAll) == 0.0);
    CHECK(random_baseline(Task::PT, QType::FindOne) == 0.0);
    CHECK(random_baseline(Task::SN, QType::HowMany) == 0.0);
    try {
        random_baseline(Task::SN, QType::Exist);  // no such cell in the benchmark
        FAIL("expected an unsupported pair error");
    } catch (const Error& e) {
        CHECK(e.code() == Err::UnsupportedPair);
    }
}

TEST_CASE("chain monotonicity tolerates ties but not gains") {
    CHECK(chain_monotone({0.6, 0.5, 0.4}));
    CHECK(chain_monotone({0.5, 0.5, 0.5}));
    CHECK_FALSE(chain_monotone({0.4, 0.41}));
    CHECK_FALSE(chain_monotone({0.6, 0.5, 0.55}));
    CHECK(chain_monotone({0.3}));
    CHECK(chain_monotone({}));
    CHECK(chain_monotone({0.5, 0.5 + 1e-10}));  // float noise is not a gain
}

TEST_CASE("the three difficulty ladders") {
    auto chains = default_chains();
    REQUIRE(chains.size() == 3);
    CHECK(chains[0] == std::vector<Task>{Task::CC, Task::CT, Task::CF});
    CHECK(chains[1] == std::vector<Task>{Task::NR3, Task::BKP, Task::BAS});
    CHECK(chains[2] == std::vector<Task>{Task::NR3, Task::BLP, Task::DS});
}

TEST_CASE("report compares accuracy to the guessing baseline per task") {
    Tables t;
    StyleTables& st = t["m"]["basic"];
    st.by_task["SN"] = cell(70, 30);
    st.by_task_qtype["SN"]["YN"] = cell(70, 30);
    st.by_task["PT"] = cell(20, 80);
    st.by_task_qtype["PT"]["FO"] = cell(20, 80);
    st.by_task["MEC"] = cell(40, 60);
    st.by_task_qtype["MEC"]["YN"] = cell(40, 60);
    // BLP graded on a mixed bag: 36 YN at 0.5 plus 72 FO at 0, weighted baseline 1/6
    st.by_task["BLP"] = cell(30, 78);
    st.by_task_qtype["BLP"]["YN"] = cell(20, 16);
    st.by_task_qtype["BLP"]["FO"] = cell(10, 62);

    Json r = criteria_report(t, default_chains(), false);
    const Json& b1 = r.at("b1").at("m").at("basic");
    CHECK(b1.at("SN").at("baseline").get<double>() == doctest::Approx(0.5));
    CHECK(b1.at("SN").at("exceeds") == true);
    CHECK(b1.at("PT").at("baseline").get<double>() == doctest::Approx(0.0));
    CHECK(b1.at("PT").at("exceeds") == true);
    CHECK(b1.at("MEC").at("exceeds") == false);
    CHECK(b1.at("BLP").at("baseline").get<double>() ==
          doctest::Approx(36.0 * 0.5 / 108.0));
    CHECK(r.count("b3") == 0);  // not requested

    const Json& acc = r.at("accuracy").at("m").at("basic");
    CHECK(acc.at("by_task").at("SN").at("accuracy").get<double>() == doctest::Approx(0.7));
    CHECK(acc.at("by_task_qtype").at("BLP").at("FO").at("correct") == 10);
}

TEST_CASE("qtype spread is the gap between best and worst format") {
    Tables t;
    StyleTables& st = t["m"]["basic"];
    st.by_qtype["YN"] = cell(60, 40);
    st.by_qtype["EX"] = cell(58, 42);
    st.by_qtype["CS"] = cell(50, 50);
    st.by_qtype["FA"] = cell(30, 70);
    st.by_qtype["FO"] = cell(35, 65);
    st.by_qtype["HM"] = cell(37, 63);
    st.by_qtype["XX"] = cell(0, 0, 5);  // ungraded cells stay out of the spread

    Json r = criteria_report(t, {}, false);
    const Json& b2 = r.at("b2").at("m").at("basic");
    CHECK(b2.at("spread").get<double>() == doctest::Approx(0.30));
    CHECK(b2.at("by_qtype").at("FA").get<double>() == doctest::Approx(0.30));
    CHECK(b2.at("by_qtype").count("XX") == 0);

    Tables empty;
    empty["m"]["basic"] = StyleTables{};
    Json r2 = criteria_report(empty, {}, false);
    CHECK(r2.at("b2").at("m").at("basic").at("spread").get<double>() == 0.0);
}

TEST_CASE("style deltas reproduce a published model comparison") {
    Tables t = published_style_tables();
    Json r = criteria_report(t, default_chains(), true);
    const Json& b3 = r.at("b3").at("gpt4");
    const Json& bkp = b3.at("tasks").at("BKP");
    CHECK(bkp.at("basic").get<double>() == doctest::Approx(0.444).epsilon(0.001));
    CHECK(bkp.at("def").get<double>() == doctest::Approx(18.1).epsilon(0.003));
    CHECK(bkp.at("icl1").get<double>() == doctest::Approx(8.4).epsilon(0.006));
    CHECK(bkp.at("icl3").get<double>() == doctest::Approx(11.2).epsilon(0.005));
    CHECK(b3.at("mean_def_delta").get<double>() == doctest::Approx(7.0).epsilon(0.008));
    // the one task definitions hurt
    CHECK(b3.at("tasks").at("PT").at("def").get<double>() < 0.0);
}

TEST_CASE("style comparison without the needed runs is an error") {
    Tables basic_only;
    basic_only["m"]["basic"].by_task["SN"] = cell(5, 5);
    try {
        criteria_report(basic_only, {}, true);
        FAIL("expected a missing style error");
    } catch (const Error& e) {
        CHECK(e.code() == Err::MissingStyleRun);
    }

    Tables def_only;
    def_only["m"]["def"].by_task["SN"] = cell(5, 5);
    CHECK_THROWS_AS(criteria_report(def_only, {}, true), Error);

    // asked not to compare styles, the same tables are fine
    Json r = criteria_report(basic_only, {}, false);
    CHECK(r.count("b3") == 0);
}

TEST_CASE("chain verdicts distinguish monotone, violated and missing data") {
    Tables t;
    StyleTables& st = t["m"]["basic"];
    auto yn = [&](Task task, int correct) {
        st.by_task_qtype[task_code(task)]["YN"] = cell(correct, 100 - correct);
    };
    yn(Task::CC, 70);
    yn(Task::CT, 60);
    yn(Task::CF, 55);
    yn(Task::NR3, 60);
    yn(Task::BKP, 65);
    yn(Task::BAS, 50);
    yn(Task::BLP, 55);  // DS absent, third chain cannot be judged

    Json r = criteria_report(t, default_chains(), false);
    const Json& rows = r.at("b4").at("m").at("basic");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].at("verdict") == "monotone");
    CHECK(rows[0].at("accuracies")[0].get<double>() == doctest::Approx(0.70));
    CHECK(rows[1].at("verdict") == "violated");
    CHECK(rows[2].at("verdict") == "insufficient-data");
    CHECK(rows[2].count("accuracies") == 0);
}

TEST_CASE("plain text report lines up tasks against models") {
    Tables t;
    t["alpha"]["basic"].by_task["SN"] = cell(7, 3);
    t["beta"]["basic"].by_task["TO"] = cell(1, 3);
    std::string text = report_text(t);
    CHECK(text.find("style basic") != std::string::npos);
    CHECK(text.find("alpha") != std::string::npos);
    CHECK(text.find("beta") != std::string::npos);
    CHECK(text.find("SN") != std::string::npos);
    CHECK(text.find("70.0") != std::string::npos);
    CHECK(text.find("25.0") != std::string::npos);
    CHECK(text.find('-') != std::string::npos);  // the cells neither model graded
}
