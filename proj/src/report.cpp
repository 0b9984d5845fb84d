#include "cgbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "cgbench/errors.hpp"

namespace cgbench {

void AccCell::add(Verdict v) {
    if (v == Verdict::Correct)
        ++correct;
    else if (v == Verdict::Incorrect)
        ++incorrect;
    else
        ++ungradable;
}

Tables aggregate(const std::vector<QuestionInstance>& questions,
                 const std::vector<GradeRecord>& grades) {
    std::map<std::string, const QuestionInstance*> by_id;
    for (const QuestionInstance& q : questions) by_id[q.id] = &q;
    Tables tables;
    for (const GradeRecord& g : grades) {
        auto it = by_id.find(g.question_id);
        if (it == by_id.end())
            fail(Err::UnknownQuestionId, "grade references '" + g.question_id + "'");
        const QuestionInstance& q = *it->second;
        StyleTables& st = tables[g.model][g.style];
        std::string task = task_code(q.task);
        st.by_task[task].add(g.verdict);
        st.by_qtype[qtype_code(q.qtype)].add(g.verdict);
        st.by_level[level_name(task_level(q.task))].add(g.verdict);
        st.by_task_qtype[task][qtype_code(q.qtype)].add(g.verdict);
    }
    return tables;
}

double random_baseline(Task t, QType q) {
    if (!pair_allowed(t, q))
        fail(Err::UnsupportedPair, std::string(task_code(t)) + " has no " + qtype_code(q) +
                                       " questions to guess at");
    switch (q) {
        case QType::YesNo:
        case QType::Exist: return 0.5;
        case QType::ChooseSet: return 0.25;
        default: return 0.0;
    }
}

bool chain_monotone(const std::vector<double>& accs) {
    for (std::size_t i = 0; i + 1 < accs.size(); ++i)
        if (accs[i + 1] > accs[i] + 1e-9) return false;
    return true;
}

std::vector<std::vector<Task>> default_chains() {
    return {{Task::CC, Task::CT, Task::CF},
            {Task::NR3, Task::BKP, Task::BAS},
            {Task::NR3, Task::BLP, Task::DS}};
}

namespace {

Json cell_json(const AccCell& c) {
    return Json{{"correct", c.correct},
                {"incorrect", c.incorrect},
                {"ungradable", c.ungradable},
                {"accuracy", c.accuracy()}};
}

Json cells_json(const std::map<std::string, AccCell>& cells) {
    Json out = Json::object();
    for (const auto& [name, c] : cells) out[name] = cell_json(c);
    return out;
}

// count-weighted guessing accuracy over the qtypes a task was graded on
double task_baseline(const StyleTables& st, Task t) {
    auto it = st.by_task_qtype.find(task_code(t));
    if (it == st.by_task_qtype.end()) return 0.0;
    double weighted = 0.0;
    long total = 0;
    for (const auto& [qt, cell] : it->second) {
        if (!cell.graded()) continue;
        weighted += cell.graded() * random_baseline(t, qtype_from_code(qt));
        total += cell.graded();
    }
    return total ? weighted / total : 0.0;
}

const AccCell* find_cell(const std::map<std::string, AccCell>& cells, const std::string& key) {
    auto it = cells.find(key);
    return it == cells.end() || !it->second.graded() ? nullptr : &it->second;
}

// the tasks that ship with definition text, in canonical order
const Task kDefinedTasks[] = {Task::NR3, Task::PT,  Task::BLP, Task::BKP,
                              Task::CC,  Task::MRS, Task::FAS};

}  // namespace

Json criteria_report(const Tables& tables, const std::vector<std::vector<Task>>& chains,
                     bool want_b3) {
    Json report;

    Json accuracy = Json::object();
    for (const auto& [model, styles] : tables) {
        for (const auto& [style, st] : styles) {
            Json entry;
            entry["by_task"] = cells_json(st.by_task);
            entry["by_qtype"] = cells_json(st.by_qtype);
            entry["by_level"] = cells_json(st.by_level);
            Json cross = Json::object();
            for (const auto& [task, row] : st.by_task_qtype) cross[task] = cells_json(row);
            entry["by_task_qtype"] = cross;
            accuracy[model][style] = entry;
        }
    }
    report["accuracy"] = accuracy;

    Json b1 = Json::object();
    for (const auto& [model, styles] : tables) {
        for (const auto& [style, st] : styles) {
            Json per_task = Json::object();
            for (const auto& [task, cell] : st.by_task) {
                if (!cell.graded()) continue;
                double base = task_baseline(st, task_from_code(task));
                per_task[task] = Json{{"accuracy", cell.accuracy()},
                                      {"baseline", base},
                                      {"exceeds", cell.accuracy() > base}};
            }
            b1[model][style] = per_task;
        }
    }
    report["b1"] = b1;

    Json b2 = Json::object();
    for (const auto& [model, styles] : tables) {
        for (const auto& [style, st] : styles) {
            Json accs = Json::object();
            double lo = 2.0, hi = -1.0;
            for (const auto& [qt, cell] : st.by_qtype) {
                if (!cell.graded()) continue;
                double a = cell.accuracy();
                accs[qt] = a;
                lo = std::min(lo, a);
                hi = std::max(hi, a);
            }
            b2[model][style] = Json{{"by_qtype", accs}, {"spread", hi < lo ? 0.0 : hi - lo}};
        }
    }
    report["b2"] = b2;

    if (want_b3) {
        Json b3 = Json::object();
        const char* secondary[] = {"def", "icl1", "icl3"};
        bool any_model = false;
        for (const auto& [model, styles] : tables) {
            auto basic_it = styles.find("basic");
            if (basic_it == styles.end()) continue;
            std::vector<std::string> have;
            for (const char* s : secondary)
                if (styles.count(s)) have.push_back(s);
            if (have.empty()) continue;
            any_model = true;

            Json per_task = Json::object();
            double def_sum = 0.0;
            int def_n = 0;
            for (Task t : kDefinedTasks) {
                std::string code = task_code(t);
                const AccCell* base = find_cell(basic_it->second.by_task, code);
                if (!base) continue;
                Json row = Json{{"basic", base->accuracy()}};
                for (const std::string& s : have) {
                    const AccCell* cell = find_cell(styles.at(s).by_task, code);
                    if (!cell) continue;
                    double delta = (cell->accuracy() - base->accuracy()) * 100.0;
                    row[s] = delta;
                    if (s == "def") {
                        def_sum += delta;
                        ++def_n;
                    }
                }
                per_task[code] = row;
            }
            Json entry = Json{{"tasks", per_task}};
            if (def_n) entry["mean_def_delta"] = def_sum / def_n;
            b3[model] = entry;
        }
        if (!any_model)
            fail(Err::MissingStyleRun,
                 "style deltas need a basic run plus def/icl1/icl3 for some model");
        report["b3"] = b3;
    }

    Json b4 = Json::object();
    for (const auto& [model, styles] : tables) {
        for (const auto& [style, st] : styles) {
            Json rows = Json::array();
            for (const auto& chain : chains) {
                Json names = Json::array();
                std::vector<double> accs;
                bool complete = true;
                for (Task t : chain) {
                    names.push_back(task_code(t));
                    auto it = st.by_task_qtype.find(task_code(t));
                    const AccCell* cell =
                        it == st.by_task_qtype.end() ? nullptr : find_cell(it->second, "YN");
                    if (!cell) {
                        complete = false;
                        break;
                    }
                    accs.push_back(cell->accuracy());
                }
                Json row = Json{{"tasks", names}};
                if (!complete) {
                    row["verdict"] = "insufficient-data";
                } else {
                    row["accuracies"] = accs;
                    row["verdict"] = chain_monotone(accs) ? "monotone" : "violated";
                }
                rows.push_back(row);
            }
            b4[model][style] = rows;
        }
    }
    report["b4"] = b4;

    return report;
}

std::string report_text(const Tables& tables) {
    std::set<std::string> styles;
    for (const auto& [model, per_style] : tables)
        for (const auto& [style, st] : per_style) styles.insert(style);

    std::string out;
    char buf[64];
    for (const std::string& style : styles) {
        std::vector<std::string> models;
        for (const auto& [model, per_style] : tables)
            if (per_style.count(style)) models.push_back(model);

        out += "accuracy by task, style " + style + " (percent of graded)\n";
        std::snprintf(buf, sizeof buf, "%-6s", "task");
        out += buf;
        for (const std::string& m : models) {
            std::snprintf(buf, sizeof buf, " %12.12s", m.c_str());
            out += buf;
        }
        out += '\n';
        for (int ti = 0; ti < kTaskCount; ++ti) {
            std::string code = task_code(static_cast<Task>(ti));
            bool any = false;
            std::string line;
            std::snprintf(buf, sizeof buf, "%-6s", code.c_str());
            line += buf;
            for (const std::string& m : models) {
                const auto& st = tables.at(m).at(style);
                const AccCell* cell = find_cell(st.by_task, code);
                if (cell) {
                    std::snprintf(buf, sizeof buf, " %12.1f", cell->accuracy() * 100.0);
                    any = true;
                } else {
                    std::snprintf(buf, sizeof buf, " %12s", "-");
                }
                line += buf;
            }
            if (any) out += line + "\n";
        }
        out += '\n';
    }
    return out;
}

}  // namespace cgbench
