#include "cgbench/grading.hpp"

#include <algorithm>

#include "cgbench/adjustment.hpp"
#include "cgbench/answers.hpp"
#include "cgbench/basic_ops.hpp"
#include "cgbench/causal_paths.hpp"
#include "cgbench/dsep.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/extract.hpp"
#include "cgbench/mec.hpp"
#include "cgbench/tasks.hpp"

namespace cgbench {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Correct: return "correct";
        case Verdict::Incorrect: return "incorrect";
        case Verdict::Ungradable: return "ungradable";
    }
    fail(Err::ConfigInvalid, "bad verdict value");
}

Verdict verdict_from_name(const std::string& name) {
    if (name == "correct") return Verdict::Correct;
    if (name == "incorrect") return Verdict::Incorrect;
    if (name == "ungradable") return Verdict::Ungradable;
    fail(Err::ConfigInvalid, "unknown verdict '" + name + "'");
}

Json GradeRecord::to_json() const {
    Json j;
    j["question_id"] = question_id;
    j["model"] = model;
    j["style"] = style;
    j["response_text"] = response_text;
    j["extracted"] = extracted ? Json(*extracted) : Json(nullptr);
    j["verdict"] = verdict_name(verdict);
    j["ground_truth"] = ground_truth;
    return j;
}

GradeRecord GradeRecord::from_json(const Json& j) {
    GradeRecord r;
    r.question_id = j.at("question_id").get<std::string>();
    r.model = j.at("model").get<std::string>();
    r.style = j.at("style").get<std::string>();
    if (j.contains("response_text")) r.response_text = j.at("response_text").get<std::string>();
    if (j.contains("extracted") && !j.at("extracted").is_null())
        r.extracted = j.at("extracted").get<std::string>();
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    if (j.contains("ground_truth")) r.ground_truth = j.at("ground_truth");
    return r;
}

namespace {

std::vector<char> canon_set(std::vector<char> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<char> chars_of(const Json& arr) {
    std::vector<char> out;
    for (const auto& v : arr) out.push_back(v.get<std::string>()[0]);
    return out;
}

char truth_char(const Json& t, const char* key) {
    return t.at(key).get<std::string>()[0];
}

// rebuilds a NodePath from a bare node sequence; nullopt when some
// consecutive pair is not connected (orientation read off the graph)
std::optional<NodePath> path_from_nodes(const MixedGraph& g, const std::vector<char>& seq) {
    if (seq.size() < 2) return std::nullopt;
    NodePath p;
    p.nodes = seq;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int u = g.index_of(seq[i]), v = g.index_of(seq[i + 1]);
        if (u < 0 || v < 0) return std::nullopt;
        if (g.has_directed(u, v))
            p.steps.push_back(Step::Forward);
        else if (g.has_directed(v, u))
            p.steps.push_back(Step::Backward);
        else if (g.has_bidirected(u, v))
            p.steps.push_back(Step::Bidirected);
        else if (g.has_undirected(u, v))
            p.steps.push_back(Step::Undirected);
        else
            return std::nullopt;
    }
    return p;
}

bool all_known(const MixedGraph& g, const std::vector<char>& vs) {
    for (char v : vs)
        if (g.index_of(v) < 0) return false;
    return true;
}

bool nodeset_correct(const QuestionInstance& inst, const std::string& answer) {
    const Json& t = inst.ground_truth;
    auto parsed = parse_node_list(answer);
    if (!parsed) return false;
    std::vector<char> z = canon_set(*parsed);
    if (z.size() != parsed->size()) return false;  // duplicates disqualify
    std::string variant = t.contains("variant") ? t.at("variant").get<std::string>() : "";
    const MixedGraph g = inst.graph();

    if (inst.task == Task::BLP && inst.qtype == QType::FindOne) {
        auto seq = parse_node_seq(t.at("path").get<std::string>());
        if (!seq) return false;
        auto p = path_from_nodes(g, *seq);
        if (!p || !all_known(g, z)) return false;
        if (!is_path_blocked(g, *p, z).blocked) return false;
        return variant != "minimal" || z.size() == blocking_set_minimal(g, *p).size();
    }
    if (inst.task == Task::DS && inst.qtype == QType::FindOne) {
        char x = truth_char(t, "x"), y = truth_char(t, "y");
        if (!all_known(g, z)) return false;
        if (std::find(z.begin(), z.end(), x) != z.end() ||
            std::find(z.begin(), z.end(), y) != z.end())
            return false;
        if (!d_separated(g, x, y, z)) return false;
        if (variant != "minimal") return true;
        auto least = d_separator_minimal(g, x, y);
        return least && z.size() == least->size();
    }
    if ((inst.task == Task::BAS || inst.task == Task::FAS) && inst.qtype == QType::FindOne) {
        char x = truth_char(t, "x"), y = truth_char(t, "y");
        Criterion c = inst.task == Task::BAS ? Criterion::Backdoor : Criterion::Frontdoor;
        if (!all_known(g, z)) return false;
        if (!adjustment_verify(g, {x, y, z, c})) return false;
        if (variant == "minimal") return adjustment_is_minimal(g, x, y, c, z);
        if (variant == "maximal") return adjustment_is_maximal(g, x, y, c, z);
        return true;
    }
    // closed-form sets (memberships, blankets, root sets) need an exact match
    return z == canon_set(chars_of(t.at("value")));
}

bool edgeset_correct(const QuestionInstance& inst, const std::string& answer) {
    std::vector<std::string> got;
    std::string trimmed = trim_copy(answer);
    std::string low = trimmed;
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (low != "none" && !trimmed.empty()) {
        std::string cur;
        auto push = [&]() -> bool {
            std::string item = trim_copy(cur);
            cur.clear();
            if (item.empty()) return true;
            std::string e = normalize_edge(item);
            if (e.empty()) return false;
            got.push_back(e);
            return true;
        };
        for (char c : trimmed) {
            if (c == ',' || c == ';') {
                if (!push()) return false;
            } else {
                cur += c;
            }
        }
        if (!push()) return false;
    }
    std::vector<std::string> want;
    for (const auto& e : inst.ground_truth.at("value")) {
        // the stored truth may spell undirected edges in sampling order
        std::string n = normalize_edge(e.get<std::string>());
        want.push_back(n.empty() ? e.get<std::string>() : n);
    }
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

bool tripleset_correct(const QuestionInstance& inst, const std::string& answer) {
    const Json& t = inst.ground_truth;
    const MixedGraph g = inst.graph();
    std::string pattern = t.at("pattern").get<std::string>();

    auto canonical = [&](const Triple& tr) -> std::optional<std::string> {
        char a = tr.a, m = tr.m, b = tr.b;
        if (g.index_of(a) < 0 || g.index_of(m) < 0 || g.index_of(b) < 0) return std::nullopt;
        if (a == m || a == b || m == b) return std::nullopt;
        auto has = [&](char u, char v) { return g.has_directed(g.index_of(u), g.index_of(v)); };
        if (pattern == std::string(triple_kind_name(TripleKind::Chain))) {
            if (has(a, m) && has(m, b)) return triple_text({a, m, b});
            if (has(b, m) && has(m, a)) return triple_text({b, m, a});
            return std::nullopt;
        }
        char lo = std::min(a, b), hi = std::max(a, b);
        if (pattern == std::string(triple_kind_name(TripleKind::Fork))) {
            if (has(m, a) && has(m, b)) return triple_text({lo, m, hi});
            return std::nullopt;
        }
        if (has(a, m) && has(b, m) && classify_triple(g, lo, m, hi) == TripleKind::VStructure)
            return triple_text({lo, m, hi});
        return std::nullopt;
    };

    std::vector<std::string> got;
    for (const std::string& item : split_items(answer)) {
        auto tr = parse_triple(item);
        if (!tr) return false;
        auto c = canonical(*tr);
        if (!c) return false;
        got.push_back(*c);
    }
    std::vector<std::string> want;
    for (const auto& arr : t.at("value")) {
        auto v = chars_of(arr);
        want.push_back(triple_text({v[0], v[1], v[2]}));
    }
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

bool pathset_correct(const QuestionInstance& inst, const std::string& answer) {
    const Json& t = inst.ground_truth;
    const MixedGraph g = inst.graph();
    bool reversible = g.kind() == GraphKind::Undirected;
    auto canon = [&](std::vector<char> seq) {
        if (reversible) {
            std::vector<char> rev(seq.rbegin(), seq.rend());
            if (rev < seq) seq = rev;
        }
        return seq;
    };
    std::vector<std::vector<char>> got;
    for (const std::string& item : split_items(answer)) {
        auto seq = parse_node_seq(item);
        if (!seq) return false;
        got.push_back(canon(*seq));
    }
    std::vector<std::vector<char>> want;
    for (const auto& p : t.at("value")) {
        auto seq = parse_node_seq(p.get<std::string>());
        want.push_back(canon(*seq));
    }
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

bool path_correct(const QuestionInstance& inst, const std::string& answer) {
    const Json& t = inst.ground_truth;
    const MixedGraph g = inst.graph();
    char x = truth_char(t, "x"), y = truth_char(t, "y");
    auto seq = parse_node_seq(answer);
    if (!seq || seq->size() < 2) return false;
    // a path written from y back to x names the same object
    if (seq->front() == y && seq->back() == x) std::reverse(seq->begin(), seq->end());
    if (seq->front() != x || seq->back() != y) return false;

    std::string flavor = t.at("flavor").get<std::string>();
    if (flavor == "backdoor") {
        if (!verify_backdoor_path(g, x, y, *seq)) return false;
    } else {
        auto p = path_from_nodes(g, *seq);
        if (!p || !verify_path(g, *p)) return false;
    }
    std::string variant = t.contains("variant") ? t.at("variant").get<std::string>() : "";
    if (variant == "shortest" || variant == "longest")
        return seq->size() - 1 == t.at("length").get<std::size_t>();
    return true;
}

bool graph_correct(const QuestionInstance& inst, const std::string& answer) {
    const MixedGraph g = inst.graph();
    MixedGraph other = parse_graph_text(GraphKind::Dag, answer);
    std::vector<char> mine = g.labels(), theirs = other.labels();
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs) return false;
    if (!markov_equivalent(g, other)) return false;
    // "another graph" must differ somewhere
    for (char a : mine)
        for (char b : mine)
            if (a != b && g.has_directed(g.index_of(a), g.index_of(b)) !=
                              other.has_directed(other.index_of(a), other.index_of(b)))
                return true;
    return false;
}

bool partition_correct(const QuestionInstance& inst, const std::string& answer) {
    std::vector<std::vector<char>> got;
    std::size_t members = 0;
    for (const std::string& item : split_items(answer)) {
        auto block = parse_node_list(item);
        if (!block || block->empty()) return false;
        got.push_back(canon_set(*block));
        if (got.back().size() != block->size()) return false;
        members += got.back().size();
    }
    std::vector<std::vector<char>> want;
    std::size_t want_members = 0;
    for (const auto& arr : inst.ground_truth.at("value")) {
        want.push_back(canon_set(chars_of(arr)));
        want_members += want.back().size();
    }
    if (members != want_members) return false;  // overlapping blocks disqualify
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

bool ordering_correct(const QuestionInstance& inst, const std::string& answer) {
    auto seq = parse_node_seq(answer);
    if (!seq) return false;
    return verify_topological(inst.graph(), *seq);
}

bool cycle_correct(const QuestionInstance& inst, const std::string& answer) {
    auto seq = parse_node_seq(answer);
    if (!seq) return false;
    return verify_cycle(inst.graph(), *seq);
}

}  // namespace

bool answer_correct(const QuestionInstance& inst, const std::string& answer) {
    const Json& t = inst.ground_truth;
    std::string kind = t.at("kind").get<std::string>();
    try {
        if (kind == "yesno") return (answer == "yes") == t.at("value").get<bool>();
        if (kind == "number") {
            auto n = parse_integer(answer);
            return n && *n == t.at("value").get<long>();
        }
        if (kind == "option") return answer == t.at("value").get<std::string>();
        if (kind == "nodeset") return nodeset_correct(inst, answer);
        if (kind == "edgeset") return edgeset_correct(inst, answer);
        if (kind == "tripleset") return tripleset_correct(inst, answer);
        if (kind == "pathset") return pathset_correct(inst, answer);
        if (kind == "path") return path_correct(inst, answer);
        if (kind == "cycle") return cycle_correct(inst, answer);
        if (kind == "ordering") return ordering_correct(inst, answer);
        if (kind == "graph") return graph_correct(inst, answer);
        if (kind == "partition") return partition_correct(inst, answer);
    } catch (const Error&) {
        return false;  // a malformed witness is wrong, not a crash
    }
    fail(Err::ConfigInvalid, "no grader for truth kind '" + kind + "'");
}

GradeRecord grade(const QuestionInstance& inst, const std::string& model,
                  const std::string& style, const std::string& response_text) {
    GradeRecord r;
    r.question_id = inst.id;
    r.model = model;
    r.style = style;
    r.response_text = response_text;
    r.ground_truth = inst.ground_truth;
    auto extracted = extract_answer(response_text, inst.qtype);
    if (!extracted) {
        r.verdict = Verdict::Ungradable;
        return r;
    }
    r.extracted = *extracted;
    r.verdict = answer_correct(inst, *extracted) ? Verdict::Correct : Verdict::Incorrect;
    return r;
}

void apply_overrides(std::vector<GradeRecord>& records, const std::vector<Json>& overrides) {
    for (std::size_t i = 0; i < overrides.size(); ++i) {
        const Json& o = overrides[i];
        if (!o.is_object() || !o.contains("question_id") || !o.contains("model") ||
            !o.contains("verdict"))
            fail(Err::ConfigInvalid,
                 "override " + std::to_string(i) + " needs question_id, model and verdict");
        std::string qid = o.at("question_id").get<std::string>();
        std::string model = o.at("model").get<std::string>();
        Verdict v = verdict_from_name(o.at("verdict").get<std::string>());
        for (GradeRecord& r : records)
            if (r.question_id == qid && r.model == model) r.verdict = v;
    }
}

}  // namespace cgbench
