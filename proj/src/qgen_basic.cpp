#include <algorithm>
#include <string>
#include <vector>

#include "cgbench/answers.hpp"
#include "cgbench/errors.hpp"
#include "src/qgen.hpp"

namespace cgbench::qgen {
namespace {

// ---- SN ----

void sn_cs(Build& b) {
    bool negated = b.variant != 0;
    b.out.polarity = negated ? "is-not" : "is";
    b.out.prompt_core = negated ? "Which of the following is NOT a node of this graph?"
                                : "Which of the following is a node of this graph?";
    std::vector<char> inside = b.g.labels();
    b.rng.shuffle(inside);
    std::vector<char> outside = foreign_letters(b.g, b.rng, 3);
    std::string correct;
    std::vector<std::string> wrong;
    if (negated) {
        correct = one(outside[0]);
        for (int i = 0; i < 3; ++i) wrong.push_back(one(inside[static_cast<std::size_t>(i)]));
    } else {
        correct = one(inside[0]);
        for (char c : outside) wrong.push_back(one(c));
    }
    b.out.ground_truth = truth_option(attach_options(b, correct, wrong));
}

void build_sn_impl(Build& b) {
    switch (b.qtype) {
        case QType::FindAll:
            b.out.prompt_core = "List all nodes of this graph.";
            b.out.ground_truth = {{"kind", "nodeset"},
                                  {"value", label_array(sorted_labels(b.g.labels()))}};
            break;
        case QType::HowMany:
            b.out.prompt_core = "How many nodes does this graph have?";
            b.out.ground_truth = truth_number(b.g.n());
            break;
        case QType::ChooseSet:
            sn_cs(b);
            break;
        case QType::YesNo: {
            char v = want_yes(b) ? random_node(b.g, b.rng) : foreign_letters(b.g, b.rng, 1)[0];
            b.out.prompt_core = "Is " + one(v) + " a node of this graph?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["node"] = one(v);
            break;
        }
        default:
            fail(Err::UnsupportedPair, "SN has no such question type");
    }
}

// ---- SE ----

std::vector<std::string> non_edges(const MixedGraph& g, Rng& rng) {
    std::vector<std::string> out;
    bool undirected = g.kind() == GraphKind::Undirected;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            if (undirected) {
                if (u < v && !g.has_undirected(u, v))
                    out.push_back(edge_text(g.label(u), g.label(v), EdgeCat::Undirected));
            } else if (!g.has_directed(u, v)) {
                out.push_back(edge_text(g.label(u), g.label(v), EdgeCat::Directed));
            }
        }
    rng.shuffle(out);
    return out;
}

void se_cs(Build& b) {
    bool negated = b.variant != 0;
    b.out.polarity = negated ? "is-not" : "is";
    b.out.prompt_core = negated ? "Which of the following is NOT an edge of this graph?"
                                : "Which of the following is an edge of this graph?";
    std::vector<std::string> inside = list_edges(b.g);
    b.rng.shuffle(inside);
    std::vector<std::string> outside = non_edges(b.g, b.rng);
    if (outside.size() < 3 || inside.size() < 3)
        fail(Err::ExhaustedRetries, "not enough edges and non-edges for options");
    std::string correct;
    std::vector<std::string> wrong;
    if (negated) {
        correct = outside[0];
        wrong.assign(inside.begin(), inside.begin() + 3);
    } else {
        correct = inside[0];
        wrong.assign(outside.begin(), outside.begin() + 3);
    }
    b.out.ground_truth = truth_option(attach_options(b, correct, wrong));
}

void build_se_impl(Build& b) {
    switch (b.qtype) {
        case QType::FindAll: {
            std::vector<std::string> edges = list_edges(b.g);
            std::sort(edges.begin(), edges.end());
            b.out.prompt_core = "List all edges of this graph.";
            b.out.ground_truth = {{"kind", "edgeset"}, {"value", edges}};
            break;
        }
        case QType::HowMany:
            b.out.prompt_core = "How many edges does this graph have?";
            b.out.ground_truth = truth_number(count_edges(b.g));
            break;
        case QType::ChooseSet:
            se_cs(b);
            break;
        case QType::YesNo: {
            std::string e;
            if (want_yes(b)) {
                std::vector<std::string> edges = list_edges(b.g);
                e = b.rng.pick(edges);
            } else {
                std::vector<std::string> fake = non_edges(b.g, b.rng);
                if (fake.empty()) fail(Err::ExhaustedRetries, "graph is complete, no non-edge");
                e = fake[0];
            }
            b.out.prompt_core = "Is " + e + " a edge of this graph?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["edge"] = e;
            break;
        }
        default:
            fail(Err::UnsupportedPair, "SE has no such question type");
    }
}

// ---- 2NR ----

const Relation kRelations[] = {Relation::Parents, Relation::Children, Relation::Ancestors,
                               Relation::Descendants};

void build_nr2_impl(Build& b) {
    Relation rel = kRelations[b.rng.below(4)];
    char v = random_node(b.g, b.rng);
    std::string rn = relation_name(rel);
    switch (b.qtype) {
        case QType::FindAll:
            b.out.prompt_core = "List all " + rn + " of " + one(v) + ".";
            b.out.ground_truth = {{"kind", "nodeset"},
                                  {"value", label_array(sorted_labels(relatives(b.g, v, rel)))},
                                  {"node", one(v)},
                                  {"relation", rn}};
            break;
        case QType::HowMany:
            b.out.prompt_core = "How many " + rn + " does " + one(v) + " have?";
            b.out.ground_truth = truth_number(static_cast<long>(relatives(b.g, v, rel).size()));
            b.out.ground_truth["node"] = one(v);
            b.out.ground_truth["relation"] = rn;
            break;
        case QType::ChooseSet: {
            std::vector<char> in;
            for (int t = 0; t < kTries && in.empty(); ++t) {
                rel = kRelations[b.rng.below(4)];
                v = random_node(b.g, b.rng);
                in = relatives(b.g, v, rel);
            }
            if (in.empty()) fail(Err::ExhaustedRetries, "no populated kinship found");
            rn = relation_name(rel);
            Mask non = b.g.all_mask() & ~b.g.to_mask(in) & ~mask_bit(b.g.index_of(v));
            std::vector<char> wrongs = b.g.to_labels(non);
            b.rng.shuffle(wrongs);
            while (wrongs.size() < 3) wrongs.push_back(foreign_letters(b.g, b.rng, 1)[0]);
            b.out.prompt_core =
                "Which of the following is one of the " + rn + " of " + one(v) + "?";
            std::string correct = one(b.rng.pick(in));
            b.out.ground_truth = truth_option(
                attach_options(b, correct, {one(wrongs[0]), one(wrongs[1]), one(wrongs[2])}));
            break;
        }
        case QType::YesNo: {
            std::vector<char> in;
            Mask non = 0;
            for (int t = 0; t < kTries; ++t) {
                rel = kRelations[b.rng.below(4)];
                v = random_node(b.g, b.rng);
                in = relatives(b.g, v, rel);
                non = b.g.all_mask() & ~b.g.to_mask(in) & ~mask_bit(b.g.index_of(v));
                if (want_yes(b) ? !in.empty() : non != 0) break;
            }
            rn = relation_name(rel);
            char u;
            if (want_yes(b)) {
                if (in.empty()) fail(Err::ExhaustedRetries, "no populated kinship found");
                u = b.rng.pick(in);
            } else {
                if (!non) fail(Err::ExhaustedRetries, "relation covers the whole graph");
                std::vector<char> outs = b.g.to_labels(non);
                u = b.rng.pick(outs);
            }
            b.out.prompt_core = "Is " + one(u) + " one of the " + rn + " of " + one(v) + "?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["candidate"] = one(u);
            b.out.ground_truth["node"] = one(v);
            b.out.ground_truth["relation"] = rn;
            break;
        }
        case QType::Exist: {
            for (int t = 0; t < kTries; ++t) {
                rel = kRelations[b.rng.below(4)];
                v = random_node(b.g, b.rng);
                if (relatives(b.g, v, rel).empty() != want_yes(b)) break;
            }
            bool has = !relatives(b.g, v, rel).empty();
            if (has != want_yes(b)) fail(Err::ExhaustedRetries, "kinship balance unreachable");
            rn = relation_name(rel);
            b.out.prompt_core = "Does " + one(v) + " have any " + rn + "?";
            b.out.ground_truth = truth_yesno(has);
            b.out.ground_truth["node"] = one(v);
            b.out.ground_truth["relation"] = rn;
            break;
        }
        default:
            fail(Err::UnsupportedPair, "2NR has no such question type");
    }
}

// ---- 3NR ----

const TripleKind kKinds[] = {TripleKind::Chain, TripleKind::Fork, TripleKind::VStructure};

Json triple_array(const std::vector<Triple>& ts) {
    Json a = Json::array();
    for (const Triple& t : ts) a.push_back(Json::array({one(t.a), one(t.m), one(t.b)}));
    return a;
}

Triple random_triple(const MixedGraph& g, Rng& rng) {
    char a = random_node(g, rng), m = random_node(g, rng), c = random_node(g, rng);
    while (m == a) m = random_node(g, rng);
    while (c == a || c == m) c = random_node(g, rng);
    return {a, m, c};
}

void build_nr3_impl(Build& b) {
    TripleKind k = kKinds[b.rng.below(3)];
    switch (b.qtype) {
        case QType::FindAll:
            b.out.prompt_core = std::string("List all ") + triple_kind_plural(k) +
                                " of this graph.";
            b.out.ground_truth = {{"kind", "tripleset"},
                                  {"value", triple_array(enumerate_triples(b.g, k))},
                                  {"pattern", triple_kind_name(k)}};
            break;
        case QType::HowMany:
            b.out.prompt_core = std::string("How many ") + triple_kind_plural(k) +
                                " does this graph have?";
            b.out.ground_truth = truth_number(static_cast<long>(enumerate_triples(b.g, k).size()));
            b.out.ground_truth["pattern"] = triple_kind_name(k);
            break;
        case QType::ChooseSet: {
            std::vector<Triple> in;
            for (int t = 0; t < kTries && in.empty(); ++t) {
                k = kKinds[b.rng.below(3)];
                in = enumerate_triples(b.g, k);
            }
            if (in.empty()) fail(Err::ExhaustedRetries, "graph shows none of the patterns");
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                Triple cand = random_triple(b.g, b.rng);
                if (classify_triple(b.g, cand.a, cand.m, cand.b) == k) continue;
                std::string txt = triple_text(cand);
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "no counterexample triples");
            b.out.prompt_core = std::string("Which of the following is a ") + triple_kind_name(k) +
                                " of this graph?";
            b.out.ground_truth = truth_option(attach_options(b, triple_text(b.rng.pick(in)), wrong));
            break;
        }
        case QType::YesNo: {
            Triple t{0, 0, 0};
            bool ok = false;
            for (int i = 0; i < kTries && !ok; ++i) {
                k = kKinds[b.rng.below(3)];
                if (want_yes(b)) {
                    std::vector<Triple> in = enumerate_triples(b.g, k);
                    if (in.empty()) continue;
                    t = b.rng.pick(in);
                    ok = true;
                } else {
                    t = random_triple(b.g, b.rng);
                    ok = classify_triple(b.g, t.a, t.m, t.b) != k;
                }
            }
            if (!ok) fail(Err::ExhaustedRetries, "triple balance unreachable");
            b.out.prompt_core = "Does " + triple_text(t) + " form a " + triple_kind_name(k) +
                                " in this graph?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["triple"] = Json::array({one(t.a), one(t.m), one(t.b)});
            b.out.ground_truth["pattern"] = triple_kind_name(k);
            break;
        }
        case QType::Exist: {
            bool ok = false;
            for (int i = 0; i < kTries && !ok; ++i) {
                k = kKinds[b.rng.below(3)];
                ok = enumerate_triples(b.g, k).empty() != want_yes(b);
            }
            if (!ok) fail(Err::ExhaustedRetries, "pattern presence balance unreachable");
            b.out.prompt_core = std::string("Are there any ") + triple_kind_name(k) +
                                " of this graph?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["pattern"] = triple_kind_name(k);
            break;
        }
        default:
            fail(Err::UnsupportedPair, "3NR has no such question type");
    }
}

// ---- PT ----

void build_pt_impl(Build& b) {
    auto [x, y] = random_pair(b.g, b.rng);
    std::vector<NodePath> paths = all_paths(b.g, x, y);
    for (int t = 0; t < kTries && paths.empty(); ++t) {
        std::tie(x, y) = random_pair(b.g, b.rng);
        paths = all_paths(b.g, x, y);
    }
    if (paths.empty()) fail(Err::ExhaustedRetries, "no connected pair found");
    std::string sx = one(x), sy = one(y);
    switch (b.qtype) {
        case QType::FindAll: {
            Json v = Json::array();
            for (const NodePath& p : paths) v.push_back(p.text());
            b.out.prompt_core = "Find all path from " + sx + " to " + sy + ".";
            b.out.ground_truth = {
                {"kind", "pathset"}, {"value", v}, {"x", sx}, {"y", sy}, {"flavor", "any"}};
            break;
        }
        case QType::FindOne: {
            const char* forms[] = {"one", "shortest", "longest"};
            const char* lead[] = {"Find one path from ", "Find the shortest path from ",
                                  "Find the longest path from "};
            int f = b.variant % 3;
            NodePath p = f == 0   ? one_path(b.g, x, y)
                         : f == 1 ? shortest_path(b.g, x, y)
                                  : longest_path(b.g, x, y);
            b.out.prompt_core = std::string(lead[f]) + sx + " to " + sy + ".";
            b.out.ground_truth = {{"kind", "path"},
                                  {"value", p.text()},
                                  {"x", sx},
                                  {"y", sy},
                                  {"variant", forms[f]},
                                  {"length", p.steps.size()},
                                  {"flavor", "any"}};
            break;
        }
        case QType::HowMany:
            b.out.prompt_core = "How many paths are there from " + sx + " to " + sy + ".";
            b.out.ground_truth = truth_number(static_cast<long>(paths.size()));
            b.out.ground_truth["x"] = sx;
            b.out.ground_truth["y"] = sy;
            break;
        case QType::ChooseSet: {
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                std::string txt = seq_path_text(b.g, fake_path_seq(b.g, x, y, paths, b.rng));
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "fake paths collapsed");
            b.out.prompt_core = "Which of the following is a path from " + sx + " to " + sy + "?";
            b.out.ground_truth =
                truth_option(attach_options(b, b.rng.pick(paths).text(), wrong));
            break;
        }
        case QType::YesNo: {
            std::string shown = want_yes(b)
                                    ? b.rng.pick(paths).text()
                                    : seq_path_text(b.g, fake_path_seq(b.g, x, y, paths, b.rng));
            b.out.prompt_core = "Is " + shown + " a path from " + sx + " to " + sy + "?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["x"] = sx;
            b.out.ground_truth["y"] = sy;
            b.out.ground_truth["path"] = shown;
            break;
        }
        default:
            fail(Err::UnsupportedPair, "PT has no such question type");
    }
}

// ---- CL ----

std::string closed_cycle_text(const MixedGraph& g, std::vector<char> cyc) {
    return seq_path_text(g, cyc);
}

std::vector<char> fake_cycle_seq(const MixedGraph& g, Rng& rng) {
    std::vector<char> base;
    if (cycle_exists(g)) {
        base = find_cycle(g);
        base.pop_back();  // open form perturbs more cleanly
    } else {
        int len = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n() - 2)));
        std::vector<char> all = g.labels();
        rng.shuffle(all);
        base.assign(all.begin(), all.begin() + len);
    }
    for (int t = 0; t < kTries; ++t) {
        std::vector<char> seq = t == 0 && !cycle_exists(g) ? base : perturb_seq(base, g, rng);
        if (seq.size() >= 2 && !verify_cycle(g, seq)) return seq;
    }
    fail(Err::ExhaustedRetries, "every perturbation stayed a cycle");
}

void build_cl_impl(Build& b) {
    switch (b.qtype) {
        case QType::FindOne: {
            if (!cycle_exists(b.g)) fail(Err::ExhaustedRetries, "acyclic graph for cycle search");
            b.out.prompt_core = "Find one cycle in this graph.";
            b.out.ground_truth = {{"kind", "cycle"},
                                  {"value", closed_cycle_text(b.g, find_cycle(b.g))}};
            break;
        }
        case QType::ChooseSet: {
            if (!cycle_exists(b.g)) fail(Err::ExhaustedRetries, "acyclic graph for cycle options");
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                std::string txt = seq_path_text(b.g, fake_cycle_seq(b.g, b.rng));
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "fake cycles collapsed");
            b.out.prompt_core = "Which of the following is a cycle in this graph?";
            b.out.ground_truth = truth_option(
                attach_options(b, closed_cycle_text(b.g, find_cycle(b.g)), wrong));
            break;
        }
        case QType::YesNo: {
            std::string shown;
            if (want_yes(b)) {
                if (!cycle_exists(b.g)) fail(Err::ExhaustedRetries, "no cycle to affirm");
                shown = closed_cycle_text(b.g, find_cycle(b.g));
            } else {
                shown = seq_path_text(b.g, fake_cycle_seq(b.g, b.rng));
            }
            b.out.prompt_core = "Is " + shown + " a cycle in this graph?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["sequence"] = shown;
            break;
        }
        case QType::Exist:
            if (cycle_exists(b.g) != want_yes(b))
                fail(Err::ExhaustedRetries, "cycle presence does not match the target");
            b.out.prompt_core = "Are there any cycle in this graph?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            break;
        default:
            fail(Err::UnsupportedPair, "CL has no such question type");
    }
}

// ---- TO ----

std::vector<char> random_topo_order(const MixedGraph& g, Rng& rng) {
    std::vector<int> indeg(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) indeg[static_cast<std::size_t>(v)] = std::popcount(g.parents(v));
    std::vector<char> out;
    std::vector<int> ready;
    for (int v = 0; v < g.n(); ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::size_t i = rng.below(ready.size());
        int v = ready[i];
        ready.erase(ready.begin() + static_cast<long>(i));
        out.push_back(g.label(v));
        Mask ch = g.children(v);
        for (int c = 0; c < g.n(); ++c)
            if (mask_has(ch, c) && --indeg[static_cast<std::size_t>(c)] == 0) ready.push_back(c);
    }
    return out;
}

std::vector<char> bad_ordering(const MixedGraph& g, Rng& rng) {
    std::vector<char> base = random_topo_order(g, rng);
    for (int t = 0; t < kTries; ++t) {
        std::vector<char> seq = base;
        std::size_t i = rng.below(seq.size()), j = rng.below(seq.size());
        std::swap(seq[i], seq[j]);
        if (!verify_topological(g, seq)) return seq;
    }
    fail(Err::ExhaustedRetries, "all swaps stayed topological");
}

void build_to_impl(Build& b) {
    switch (b.qtype) {
        case QType::FindOne:
            b.out.prompt_core = "Find one valid topological ordering in this graph.";
            b.out.ground_truth = {{"kind", "ordering"},
                                  {"value", label_array(topological_order(b.g))}};
            break;
        case QType::ChooseSet: {
            std::string correct = list_text(random_topo_order(b.g, b.rng));
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                std::string txt = list_text(bad_ordering(b.g, b.rng));
                if (txt != correct && std::find(wrong.begin(), wrong.end(), txt) == wrong.end())
                    wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "orderings collapsed");
            b.out.prompt_core =
                "Which of the following is a valid topological ordering of this graph?";
            b.out.ground_truth = truth_option(attach_options(b, correct, wrong));
            break;
        }
        case QType::YesNo: {
            std::vector<char> seq =
                want_yes(b) ? random_topo_order(b.g, b.rng) : bad_ordering(b.g, b.rng);
            b.out.prompt_core =
                "Is " + list_text(seq) + " a valid topological ordering of this graph?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["sequence"] = label_array(seq);
            break;
        }
        default:
            fail(Err::UnsupportedPair, "TO has no such question type");
    }
}

}  // namespace

void build_sn(Build& b) { build_sn_impl(b); }
void build_se(Build& b) { build_se_impl(b); }
void build_nr2(Build& b) { build_nr2_impl(b); }
void build_nr3(Build& b) { build_nr3_impl(b); }
void build_pt(Build& b) { build_pt_impl(b); }
void build_cl(Build& b) { build_cl_impl(b); }
void build_to(Build& b) { build_to_impl(b); }

}  // namespace cgbench::qgen
