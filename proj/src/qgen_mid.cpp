#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cgbench/answers.hpp"
#include "cgbench/causal_paths.hpp"
#include "cgbench/dsep.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/mec.hpp"
#include "src/qgen.hpp"

namespace cgbench::qgen {
namespace {

// z candidates never include the path endpoints / query endpoints
Mask condition_pool(const MixedGraph& g, char x, char y) {
    return g.all_mask() & ~(mask_bit(g.index_of(x)) | mask_bit(g.index_of(y)));
}

// ---- BLP ----

NodePath pick_long_path(const MixedGraph& g, Rng& rng) {
    auto has_long = [&](char x, char y) {
        for (const NodePath& p : all_paths(g, x, y))
            if (p.steps.size() >= 2) return true;
        return false;
    };
    auto [x, y] = find_pair(g, rng, has_long, "no path with an interior found");
    std::vector<NodePath> longs;
    for (NodePath& p : all_paths(g, x, y))
        if (p.steps.size() >= 2) longs.push_back(std::move(p));
    return rng.pick(longs);
}

bool blocks(const MixedGraph& g, const NodePath& p, const std::vector<char>& z) {
    return is_path_blocked(g, p, z).blocked;
}

// a set that provably leaves the path open: colliders in, non-colliders out
std::vector<char> open_keeper(const MixedGraph& g, const NodePath& p) {
    std::vector<char> z;
    for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
        std::vector<char> alone{p.nodes[i]};
        if (!blocks(g, p, alone)) z.push_back(p.nodes[i]);  // collider when excluded...
    }
    // the heuristic above can misfire with rule-2 descendants; verify and
    // fall back to a direct search
    if (!blocks(g, p, z)) return z;
    Mask pool = condition_pool(g, p.nodes.front(), p.nodes.back());
    for (Mask s = pool;; s = (s - 1) & pool) {
        std::vector<char> cand = g.to_labels(s);
        if (!blocks(g, p, cand)) return cand;
        if (s == 0) break;
    }
    fail(Err::ExhaustedRetries, "every set blocks this path");
}

std::vector<std::vector<char>> nonblocking_sets(const MixedGraph& g, const NodePath& p, Rng& rng,
                                                std::size_t want) {
    std::vector<std::vector<char>> out{sorted_labels(open_keeper(g, p))};
    Mask pool = condition_pool(g, p.nodes.front(), p.nodes.back());
    for (int t = 0; t < kTries * 4 && out.size() < want; ++t) {
        std::vector<char> z = sorted_labels(random_subset(g, pool, rng));
        if (!blocks(g, p, z) && std::find(out.begin(), out.end(), z) == out.end())
            out.push_back(z);
    }
    return out;
}

void build_blp_impl(Build& b) {
    NodePath p = pick_long_path(b.g, b.rng);
    std::string pt = p.text();
    switch (b.qtype) {
        case QType::FindOne: {
            bool minimal = b.variant % 2 == 1;
            std::vector<char> z =
                minimal ? blocking_set_minimal(b.g, p) : blocking_set_valid(b.g, p);
            b.out.prompt_core =
                (minimal ? "Find the minimal nodeset that can block "
                         : "Find one valid nodeset that can block ") +
                pt + ".";
            b.out.ground_truth = {{"kind", "nodeset"},
                                  {"value", label_array(sorted_labels(z))},
                                  {"path", pt},
                                  {"variant", minimal ? "minimal" : "valid"}};
            break;
        }
        case QType::ChooseSet: {
            std::vector<char> z = blocking_set_valid(b.g, p);
            if (z.empty()) z = blocking_set_minimal(b.g, p);
            std::vector<std::string> wrong;
            for (const auto& s : nonblocking_sets(b.g, p, b.rng, 3)) wrong.push_back(set_text(s));
            while (wrong.size() < 3) {
                std::vector<char> padded = sorted_labels(open_keeper(b.g, p));
                padded.push_back(foreign_letters(b.g, b.rng, 1)[0]);
                std::string txt = set_text(padded);
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end())
                    wrong.push_back(txt);
            }
            b.out.prompt_core = "Which of the following nodesets can block " + pt + "?";
            b.out.ground_truth =
                truth_option(attach_options(b, set_text(sorted_labels(z)), wrong));
            b.out.ground_truth["path"] = pt;
            break;
        }
        case QType::YesNo: {
            std::vector<char> z;
            if (want_yes(b)) {
                z = blocking_set_valid(b.g, p);
                if (z.empty()) z = blocking_set_minimal(b.g, p);
            } else {
                z = open_keeper(b.g, p);
            }
            z = sorted_labels(z);
            b.out.prompt_core = "Can " + pt + " be blocked by " + set_text(z) + "?";
            b.out.ground_truth = truth_yesno(blocks(b.g, p, z));
            b.out.ground_truth["path"] = pt;
            b.out.ground_truth["set"] = label_array(z);
            if (b.out.ground_truth.at("value").get<bool>() != want_yes(b))
                fail(Err::ExhaustedRetries, "blocking target unreachable");
            break;
        }
        default:
            fail(Err::UnsupportedPair, "BLP has no such question type");
    }
}

// ---- DS ----

struct SepPair {
    char x, y;
    std::vector<char> valid;
};

SepPair pick_separable(const MixedGraph& g, Rng& rng) {
    auto [x, y] = find_pair(
        g, rng, [&](char a, char c) { return d_separator_valid(g, a, c).has_value(); },
        "no separable pair found");
    return {x, y, *d_separator_valid(g, x, y)};
}

// prefers a random witness, falls back to the empty set when the pair is
// marginally dependent
std::optional<std::vector<char>> nonseparating_set(const MixedGraph& g, char x, char y, Rng& rng) {
    Mask pool = condition_pool(g, x, y);
    for (int t = 0; t < kTries; ++t) {
        std::vector<char> z = sorted_labels(random_subset(g, pool, rng));
        if (!d_separated(g, x, y, z)) return z;
    }
    if (!d_separated(g, x, y, {})) return std::vector<char>{};
    return std::nullopt;
}

void build_ds_impl(Build& b) {
    switch (b.qtype) {
        case QType::FindOne: {
            SepPair sp = pick_separable(b.g, b.rng);
            bool minimal = b.variant % 2 == 1;
            std::vector<char> z = minimal ? *d_separator_minimal(b.g, sp.x, sp.y) : sp.valid;
            b.out.prompt_core = (minimal ? "Find the minimal nodeset that can d-separate "
                                         : "Find one valid nodeset that can d-separate ") +
                                one(sp.x) + " and " + one(sp.y) + ".";
            b.out.ground_truth = {{"kind", "nodeset"},
                                  {"value", label_array(sorted_labels(z))},
                                  {"x", one(sp.x)},
                                  {"y", one(sp.y)},
                                  {"variant", minimal ? "minimal" : "valid"}};
            break;
        }
        case QType::ChooseSet: {
            SepPair sp = pick_separable(b.g, b.rng);
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                auto z = nonseparating_set(b.g, sp.x, sp.y, b.rng);
                if (!z) break;
                std::string txt = set_text(*z);
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            while (wrong.size() < 3) {
                std::vector<char> padded = sorted_labels(sp.valid);
                padded.push_back(foreign_letters(b.g, b.rng, 1)[0]);
                std::string txt = set_text(padded);
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end())
                    wrong.push_back(txt);
            }
            b.out.prompt_core = "Which of the following nodesets can d-separate " + one(sp.x) +
                                " and " + one(sp.y) + "?";
            b.out.ground_truth =
                truth_option(attach_options(b, set_text(sorted_labels(sp.valid)), wrong));
            b.out.ground_truth["x"] = one(sp.x);
            b.out.ground_truth["y"] = one(sp.y);
            break;
        }
        case QType::YesNo: {
            char x = 0, y = 0;
            std::vector<char> z;
            if (want_yes(b)) {
                SepPair sp = pick_separable(b.g, b.rng);
                x = sp.x;
                y = sp.y;
                z = sorted_labels(sp.valid);
            } else {
                auto adjacent_or_dependent = [&](char u, char v) {
                    int iu = b.g.index_of(u), iv = b.g.index_of(v);
                    return b.g.has_directed(iu, iv) || b.g.has_directed(iv, iu) ||
                           !d_separated(b.g, u, v, {});
                };
                std::tie(x, y) =
                    find_pair(b.g, b.rng, adjacent_or_dependent, "no dependent pair found");
                auto cand = nonseparating_set(b.g, x, y, b.rng);
                if (!cand) fail(Err::ExhaustedRetries, "no dependent pair found");
                z = *cand;
            }
            b.out.prompt_core =
                "Are " + one(x) + " and " + one(y) + " d-separated by " + set_text(z) + "?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["x"] = one(x);
            b.out.ground_truth["y"] = one(y);
            b.out.ground_truth["set"] = label_array(z);
            break;
        }
        default:
            fail(Err::UnsupportedPair, "DS has no such question type");
    }
}

// ---- MEC ----

std::string directed_edge_list(const MixedGraph& g) {
    std::vector<std::string> parts;
    for (auto [u, v] : g.directed())
        parts.push_back(edge_text(g.label(u), g.label(v), EdgeCat::Directed));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return out.empty() ? "none" : out;
}

MixedGraph inequivalent_dag(const MixedGraph& g, Rng& rng) {
    std::vector<MixedGraph::LabelPair> base;
    for (auto [u, v] : g.directed()) base.push_back({g.label(u), g.label(v)});
    for (int t = 0; t < kTries * 4; ++t) {
        std::vector<MixedGraph::LabelPair> edges = base;
        int mode = static_cast<int>(rng.below(3));
        if (mode == 0 && !edges.empty()) {
            auto& e = edges[rng.below(edges.size())];
            std::swap(e.first, e.second);
        } else if (mode == 1 && !edges.empty()) {
            edges.erase(edges.begin() + static_cast<long>(rng.below(edges.size())));
        } else {
            auto [a, c] = random_pair(g, rng);
            edges.push_back({a, c});
        }
        try {
            MixedGraph cand = MixedGraph::build(GraphKind::Dag, g.labels(), edges);
            if (!markov_equivalent(g, cand)) return cand;
        } catch (const Error&) {
            // duplicate edge or cycle; try another perturbation
        }
    }
    fail(Err::ExhaustedRetries, "no inequivalent neighbor found");
}

void build_mec_impl(Build& b) {
    switch (b.qtype) {
        case QType::FindOne: {
            auto other = mec_other_member(b.g);
            if (!other) fail(Err::ExhaustedRetries, "equivalence class is a singleton");
            b.out.prompt_core = "Find another graph that belongs to the same markov equivalent "
                                "class of the given graph.";
            b.out.ground_truth = {{"kind", "graph"}, {"value", other->text_form()}};
            break;
        }
        case QType::YesNo: {
            std::optional<MixedGraph> shown;
            if (want_yes(b)) {
                shown = mec_other_member(b.g);
                if (!shown) fail(Err::ExhaustedRetries, "equivalence class is a singleton");
            } else {
                shown = inequivalent_dag(b.g, b.rng);
            }
            std::vector<char> nodes = sorted_labels(shown->labels());
            b.out.prompt_core = "Given another DAG with nodes " + list_text(nodes) +
                                " and directed edges " + directed_edge_list(*shown) +
                                ", do these two graphs belong to the same markov equivalent "
                                "class?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["other"] = graph_to_json(*shown);
            break;
        }
        default:
            fail(Err::UnsupportedPair, "MEC has no such question type");
    }
}

// ---- MB ----

void build_mb_impl(Build& b) {
    char v = random_node(b.g, b.rng);
    std::vector<char> blanket = sorted_labels(markov_blanket(b.g, v));
    Mask pool = b.g.all_mask() & ~mask_bit(b.g.index_of(v));
    switch (b.qtype) {
        case QType::FindOne:
            b.out.prompt_core = "What is the markov blanket of " + one(v) + ".";
            b.out.ground_truth = {
                {"kind", "nodeset"}, {"value", label_array(blanket)}, {"node", one(v)}};
            break;
        case QType::ChooseSet: {
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                std::string txt = set_text(perturb_set(blanket, pool, b.g, b.rng));
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "blanket perturbations collapsed");
            b.out.prompt_core = "Which of the following is the markov blanket of " + one(v) + "?";
            b.out.ground_truth = truth_option(attach_options(b, set_text(blanket), wrong));
            b.out.ground_truth["node"] = one(v);
            break;
        }
        case QType::YesNo: {
            std::vector<char> shown =
                want_yes(b) ? blanket : perturb_set(blanket, pool, b.g, b.rng);
            b.out.prompt_core = "Is " + set_text(shown) + " the markov blanket of " + one(v) + "?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["node"] = one(v);
            b.out.ground_truth["set"] = label_array(shown);
            break;
        }
        default:
            fail(Err::UnsupportedPair, "MB has no such question type");
    }
}

// ---- DP ----

struct DirPair {
    char x, y;
    std::vector<NodePath> paths;
};

DirPair pick_directed_pair(const MixedGraph& g, Rng& rng) {
    auto [x, y] = find_pair(
        g, rng, [&](char a, char c) { return directed_path_exists(g, a, c); },
        "no causally connected pair found");
    return {x, y, directed_paths(g, x, y)};
}

std::vector<char> fake_directed_seq(const MixedGraph& g, char x, char y,
                                    const std::vector<NodePath>& real, Rng& rng) {
    // mixed-orientation paths between the endpoints make the best decoys
    std::vector<NodePath> mixed;
    for (NodePath& p : all_paths(g, x, y))
        if (!verify_directed_path(g, x, y, p.nodes)) mixed.push_back(std::move(p));
    if (!mixed.empty() && rng.coin()) return rng.pick(mixed).nodes;
    for (int t = 0; t < kTries; ++t) {
        std::vector<char> seq = perturb_seq(rng.pick(real).nodes, g, rng);
        if (!verify_directed_path(g, x, y, seq)) return seq;
    }
    fail(Err::ExhaustedRetries, "no invalid directed-path variant found");
}

void build_dp_impl(Build& b) {
    if (b.qtype == QType::Exist) {
        auto [x, y] = find_pair(
            b.g, b.rng,
            [&](char a, char c) { return directed_path_exists(b.g, a, c) == want_yes(b); },
            "directed-path balance unreachable");
        b.out.prompt_core =
            "Is there a directed path from " + one(x) + " to " + one(y) + "?";
        b.out.ground_truth = truth_yesno(want_yes(b));
        b.out.ground_truth["x"] = one(x);
        b.out.ground_truth["y"] = one(y);
        return;
    }
    DirPair dp = pick_directed_pair(b.g, b.rng);
    std::string sx = one(dp.x), sy = one(dp.y);
    switch (b.qtype) {
        case QType::FindAll: {
            Json v = Json::array();
            for (const NodePath& p : dp.paths) v.push_back(p.text());
            b.out.prompt_core = "Find all directed paths from " + sx + " to " + sy + ".";
            b.out.ground_truth = {
                {"kind", "pathset"}, {"value", v}, {"x", sx}, {"y", sy}, {"flavor", "directed"}};
            break;
        }
        case QType::HowMany:
            b.out.prompt_core =
                "How many directed paths are there from " + sx + " to " + sy + "?";
            b.out.ground_truth = truth_number(static_cast<long>(dp.paths.size()));
            b.out.ground_truth["x"] = sx;
            b.out.ground_truth["y"] = sy;
            break;
        case QType::ChooseSet: {
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                std::string txt =
                    seq_path_text(b.g, fake_directed_seq(b.g, dp.x, dp.y, dp.paths, b.rng));
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "fake directed paths collapsed");
            b.out.prompt_core =
                "Which of the following is a directed path from " + sx + " to " + sy + "?";
            b.out.ground_truth =
                truth_option(attach_options(b, b.rng.pick(dp.paths).text(), wrong));
            break;
        }
        case QType::YesNo: {
            std::string shown =
                want_yes(b)
                    ? b.rng.pick(dp.paths).text()
                    : seq_path_text(b.g, fake_directed_seq(b.g, dp.x, dp.y, dp.paths, b.rng));
            b.out.prompt_core =
                "Is " + shown + " a directed path from " + sx + " to " + sy + "?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["x"] = sx;
            b.out.ground_truth["y"] = sy;
            b.out.ground_truth["path"] = shown;
            break;
        }
        default:
            fail(Err::UnsupportedPair, "DP has no such question type");
    }
}

// ---- BKP ----

struct BackPair {
    char x, y;
    std::vector<NodePath> paths;
};

BackPair pick_backdoor_pair(const MixedGraph& g, Rng& rng) {
    auto [x, y] = find_pair(
        g, rng, [&](char a, char c) { return backdoor_path_count(g, a, c) > 0; },
        "no pair with a backdoor path found");
    return {x, y, backdoor_paths(g, x, y)};
}

std::vector<char> fake_backdoor_seq(const MixedGraph& g, char x, char y,
                                    const std::vector<NodePath>& real, Rng& rng) {
    std::vector<NodePath> front;
    for (NodePath& p : all_paths(g, x, y))
        if (!verify_backdoor_path(g, x, y, p.nodes)) front.push_back(std::move(p));
    if (!front.empty() && rng.coin()) return rng.pick(front).nodes;
    for (int t = 0; t < kTries; ++t) {
        std::vector<char> seq = perturb_seq(rng.pick(real).nodes, g, rng);
        if (!verify_backdoor_path(g, x, y, seq)) return seq;
    }
    fail(Err::ExhaustedRetries, "no invalid backdoor variant found");
}

void build_bkp_impl(Build& b) {
    BackPair bp = pick_backdoor_pair(b.g, b.rng);
    std::string sx = one(bp.x), sy = one(bp.y);
    switch (b.qtype) {
        case QType::FindAll: {
            Json v = Json::array();
            for (const NodePath& p : bp.paths) v.push_back(p.text());
            b.out.prompt_core = "Find all backdoor paths from " + sx + " to " + sy + ".";
            b.out.ground_truth = {
                {"kind", "pathset"}, {"value", v}, {"x", sx}, {"y", sy}, {"flavor", "backdoor"}};
            break;
        }
        case QType::FindOne: {
            bool longest = b.variant % 2 == 1;
            NodePath p =
                longest ? backdoor_longest(b.g, bp.x, bp.y) : backdoor_shortest(b.g, bp.x, bp.y);
            b.out.prompt_core = (longest ? "Find the longest backdoor path from "
                                         : "Find the shortest backdoor path from ") +
                                sx + " to " + sy + ".";
            b.out.ground_truth = {{"kind", "path"},
                                  {"value", p.text()},
                                  {"x", sx},
                                  {"y", sy},
                                  {"variant", longest ? "longest" : "shortest"},
                                  {"length", p.steps.size()},
                                  {"flavor", "backdoor"}};
            break;
        }
        case QType::HowMany:
            b.out.prompt_core =
                "How many backdoor paths are there from " + sx + " to " + sy + ".";
            b.out.ground_truth = truth_number(static_cast<long>(bp.paths.size()));
            b.out.ground_truth["x"] = sx;
            b.out.ground_truth["y"] = sy;
            break;
        case QType::ChooseSet: {
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                std::string txt =
                    seq_path_text(b.g, fake_backdoor_seq(b.g, bp.x, bp.y, bp.paths, b.rng));
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "fake backdoor paths collapsed");
            b.out.prompt_core =
                "Which of the following is a backdoor path from " + sx + " to " + sy + "?";
            b.out.ground_truth =
                truth_option(attach_options(b, b.rng.pick(bp.paths).text(), wrong));
            break;
        }
        case QType::YesNo: {
            std::string shown =
                want_yes(b)
                    ? b.rng.pick(bp.paths).text()
                    : seq_path_text(b.g, fake_backdoor_seq(b.g, bp.x, bp.y, bp.paths, b.rng));
            b.out.prompt_core = "Is " + shown + " a backdoor path " + sx + " to " + sy + "?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["x"] = sx;
            b.out.ground_truth["y"] = sy;
            b.out.ground_truth["path"] = shown;
            break;
        }
        default:
            fail(Err::UnsupportedPair, "BKP has no such question type");
    }
}

}  // namespace

void build_blp(Build& b) { build_blp_impl(b); }
void build_ds(Build& b) { build_ds_impl(b); }
void build_mec(Build& b) { build_mec_impl(b); }
void build_mb(Build& b) { build_mb_impl(b); }
void build_dp(Build& b) { build_dp_impl(b); }
void build_bkp(Build& b) { build_bkp_impl(b); }

}  // namespace cgbench::qgen
