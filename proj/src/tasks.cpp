#include "cgbench/tasks.hpp"

#include "cgbench/errors.hpp"

namespace cgbench {
namespace {

struct TaskRow {
    Task task;
    const char* code;
    Level level;
    // question counts by type: FA, FO, HM, CS, YN, EX
    int counts[kQTypeCount];
};

// stock layout: 2808 questions over 20 tasks
const TaskRow kRows[kTaskCount] = {
    {Task::SN, "SN", Level::Basic, {48, 0, 48, 48, 48, 0}},
    {Task::SE, "SE", Level::Basic, {48, 0, 48, 48, 48, 0}},
    {Task::NR2, "2NR", Level::Basic, {24, 0, 24, 24, 24, 24}},
    {Task::NR3, "3NR", Level::Basic, {24, 0, 24, 24, 24, 24}},
    {Task::PT, "PT", Level::Basic, {24, 72, 24, 24, 24, 0}},
    {Task::CL, "CL", Level::Basic, {0, 36, 0, 36, 36, 36}},
    {Task::TO, "TO", Level::Basic, {0, 48, 0, 48, 48, 0}},
    {Task::BLP, "BLP", Level::Intermediate, {0, 72, 0, 36, 36, 0}},
    {Task::DS, "DS", Level::Intermediate, {0, 60, 0, 30, 30, 0}},
    {Task::MEC, "MEC", Level::Intermediate, {0, 60, 0, 0, 60, 0}},
    {Task::MB, "MB", Level::Intermediate, {0, 48, 0, 48, 48, 0}},
    {Task::DP, "DP", Level::Intermediate, {24, 0, 24, 24, 24, 24}},
    {Task::BKP, "BKP", Level::Intermediate, {24, 48, 24, 24, 24, 0}},
    {Task::CC, "CC", Level::Advanced, {36, 0, 36, 0, 36, 0}},
    {Task::CT, "CT", Level::Advanced, {0, 0, 0, 0, 120, 0}},
    {Task::CF, "CF", Level::Advanced, {0, 0, 0, 0, 120, 0}},
    {Task::MRS, "MRS", Level::Advanced, {48, 0, 48, 48, 48, 0}},
    {Task::BAS, "BAS", Level::Advanced, {0, 72, 0, 24, 24, 12}},
    {Task::FAS, "FAS", Level::Advanced, {0, 72, 0, 24, 24, 24}},
    {Task::CEI, "CEI", Level::Advanced, {0, 0, 0, 0, 120, 0}},
};

const TaskRow& row(Task t) { return kRows[static_cast<int>(t)]; }

const char* kQTypeCodes[kQTypeCount] = {"FA", "FO", "HM", "CS", "YN", "EX"};

}  // namespace

const char* task_code(Task t) { return row(t).code; }

Task task_from_code(const std::string& code) {
    for (const TaskRow& r : kRows)
        if (code == r.code) return r.task;
    fail(Err::ParseError, "unknown task code '" + code + "'");
}

const char* qtype_code(QType q) { return kQTypeCodes[static_cast<int>(q)]; }

QType qtype_from_code(const std::string& code) {
    for (int i = 0; i < kQTypeCount; ++i)
        if (code == kQTypeCodes[i]) return static_cast<QType>(i);
    fail(Err::ParseError, "unknown question type code '" + code + "'");
}

const char* level_name(Level l) {
    switch (l) {
        case Level::Basic: return "basic";
        case Level::Intermediate: return "intermediate";
        case Level::Advanced: return "advanced";
    }
    return "?";
}

Level task_level(Task t) { return row(t).level; }

std::vector<Task> task_prerequisites(Task t) {
    switch (t) {
        case Task::BLP: return {Task::NR3};
        case Task::BKP: return {Task::NR3};
        case Task::DS: return {Task::BLP};
        case Task::BAS: return {Task::BKP};
        case Task::CT: return {Task::CC};
        case Task::CF: return {Task::CT};
        default: return {};
    }
}

int default_count(Task t, QType q) { return row(t).counts[static_cast<int>(q)]; }

bool pair_allowed(Task t, QType q) { return default_count(t, q) > 0; }

int variant_count(Task t, QType q) {
    if (q != QType::FindOne) return 1;
    switch (t) {
        case Task::PT: return 3;   // some, shortest, longest
        case Task::BKP: return 2;  // shortest, longest
        case Task::BLP: return 2;  // valid, minimal
        case Task::DS: return 2;
        case Task::BAS: return 3;  // valid, minimal, maximal
        case Task::FAS: return 3;
        default: return 1;
    }
}

std::string variant_name(Task t, QType q, int variant) {
    if (variant_count(t, q) == 1) return "";
    switch (t) {
        case Task::PT:
            return variant == 0 ? "one" : variant == 1 ? "shortest" : "longest";
        case Task::BKP:
            return variant == 0 ? "shortest" : "longest";
        case Task::BLP:
        case Task::DS:
            return variant == 0 ? "valid" : "minimal";
        case Task::BAS:
        case Task::FAS:
            return variant == 0 ? "valid" : variant == 1 ? "minimal" : "maximal";
        default: return "";
    }
}

std::string task_definition(Task t) {
    switch (t) {
        case Task::NR3:
            return "Given a DAG with three nodes X, Y, Z.\n"
                   "(1) A \"chain\" is a sequence of nodes connected by edges where each node has "
                   "only one predecessor and one successor (except for the first and last nodes in "
                   "the chain). The simplest chain in a causal graph can be illustrated as "
                   "\"X->Y->Z\".\n"
                   "(2) A \"fork\" refers to a situation where one node has multiple outgoing edges "
                   "leading to different successor nodes. The simplest fork in a causal graph can "
                   "be illustrated as \"X<-Y->Z\".\n"
                   "(3) A \"v-structure\" means one node is a child of the two others that "
                   "themselves are not adjacent. The simplest v-structure in a causal graph can be "
                   "illustrated as \"X->Y<-Z\".";
        case Task::PT:
            return "A path in a DAG is a sequence of (at least two) distinct nodes i_1,...,i_m "
                   "such that there is an edge between i_k and i_{k+1} for all k=1,...,m.";
        case Task::BLP:
            return "In a DAG, a path p is said to be blocked by a set of nodes Z if and only if:\n"
                   "(1) p contains a chain i->m->j or a fork i<-m->j such that the middle node m "
                   "is in Z, or\n"
                   "(2) p contains an inverted fork (or collider) i->m<-j such that the middle "
                   "node m is not in Z and such that no descendant of m is in Z.";
        case Task::BKP:
            return "Given an ordered pair of variables (X, Y), a backdoor path is any path from X "
                   "to Y that starts with an arrow pointing into X. This backdoor path is a "
                   "non-causal path from X to Y.";
        case Task::CC:
            return "Let G be a causal graph such that a subset of its bidirected arcs forms a "
                   "spanning tree over all nodes in G. Then G is a C-component.";
        case Task::MRS:
            return "Let G be a causal graph and X is one node that belongs to G. If X does not "
                   "have any descendant, then we call X a root set of G. Maximal root set "
                   "contains all the root sets of G.";
        case Task::FAS:
            return "If a set of variables Z satisfies the front-door criterion relative to an "
                   "ordered pair of variables (X, Y):\n"
                   "(1) Z intercepts all directed paths from X to Y;\n"
                   "(2) there is no unblocked back-door path from X to Z; and\n"
                   "(3) all back-door paths from Z to Y are blocked by X.\n"
                   "Then we call Z a frontdoor adjustment set, this set allows us to accurately "
                   "estimate the causal effect of X on Y.";
        default: return "";
    }
}

}  // namespace cgbench
