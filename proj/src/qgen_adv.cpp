#include <algorithm>
#include <string>
#include <vector>

#include "cgbench/adjustment.hpp"
#include "cgbench/answers.hpp"
#include "cgbench/causal_paths.hpp"
#include "cgbench/components.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/identify.hpp"
#include "src/qgen.hpp"

namespace cgbench::qgen {
namespace {

// ---- CC / CT / CF ----

void build_cc_impl(Build& b) {
    switch (b.qtype) {
        case QType::FindAll: {
            Json v = Json::array();
            for (const auto& block : c_component_partition(b.g))
                v.push_back(label_array(block));
            b.out.prompt_core =
                "It can be uniquely partitioned into a set C(G) of subgraphs, each a maximal "
                "C-component. Write down such partition of the given graph.";
            b.out.ground_truth = {{"kind", "partition"}, {"value", v}};
            break;
        }
        case QType::HowMany:
            b.out.prompt_core =
                "It can be uniquely partitioned into a set C(G) of subgraphs, each a maximal "
                "C-component. How many subgraphs are there in C(G)?";
            b.out.ground_truth = truth_number(c_component_count(b.g));
            break;
        case QType::YesNo:
            if (is_c_component(b.g) != want_yes(b))
                fail(Err::ExhaustedRetries, "graph does not match the wanted verdict");
            b.out.prompt_core = "Is it a C-component??";
            b.out.ground_truth = truth_yesno(want_yes(b));
            break;
        default:
            fail(Err::UnsupportedPair, "CC has no such question type");
    }
}

void build_ct_impl(Build& b) {
    if (b.qtype != QType::YesNo) fail(Err::UnsupportedPair, "CT has no such question type");
    if (is_c_tree(b.g) != want_yes(b))
        fail(Err::ExhaustedRetries, "graph does not match the wanted verdict");
    b.out.prompt_core = "Is it a C-tree?";
    b.out.ground_truth = truth_yesno(want_yes(b));
}

void build_cf_impl(Build& b) {
    if (b.qtype != QType::YesNo) fail(Err::UnsupportedPair, "CF has no such question type");
    if (is_c_forest(b.g) != want_yes(b))
        fail(Err::ExhaustedRetries, "graph does not match the wanted verdict");
    b.out.prompt_core = "Is it a C-forest?";
    b.out.ground_truth = truth_yesno(want_yes(b));
}

// ---- MRS ----

void build_mrs_impl(Build& b) {
    std::vector<char> roots = maximal_root_set(b.g);
    switch (b.qtype) {
        case QType::FindAll:
            b.out.prompt_core = "Find the maximal root set of this graph.";
            b.out.ground_truth = {{"kind", "nodeset"}, {"value", label_array(roots)}};
            break;
        case QType::HowMany:
            b.out.prompt_core =
                "How many nodes are there in the maximal root set of this graph?";
            b.out.ground_truth = truth_number(maximal_root_set_count(b.g));
            break;
        case QType::ChooseSet: {
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                std::string txt = set_text(perturb_set(roots, b.g.all_mask(), b.g, b.rng));
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "root-set perturbations collapsed");
            b.out.prompt_core =
                "Which of the following options is the maximal root set of this graph?";
            b.out.ground_truth = truth_option(attach_options(b, set_text(roots), wrong));
            break;
        }
        case QType::YesNo: {
            std::vector<char> shown =
                want_yes(b) ? roots : perturb_set(roots, b.g.all_mask(), b.g, b.rng);
            b.out.prompt_core = "Is " + set_text(shown) + " the maximal root set of this graph?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["set"] = label_array(shown);
            break;
        }
        default:
            fail(Err::UnsupportedPair, "MRS has no such question type");
    }
}

// ---- BAS / FAS ----

const char* criterion_word(Criterion c) {
    return c == Criterion::Backdoor ? "backdoor" : "frontdoor";
}

struct AdjPair {
    char x, y;
};

// adjustment questions stick to causally connected pairs; a set for a pair
// with no effect to adjust for is technically fine but reads as nonsense
AdjPair pick_adjustable(const MixedGraph& g, Criterion c, Rng& rng) {
    auto [x, y] = find_pair(
        g, rng,
        [&](char a, char b) {
            return directed_path_exists(g, a, b) && adjustment_exists(g, a, b, c);
        },
        "no pair with a valid adjustment set found");
    return {x, y};
}

std::vector<char> invalid_adjustment(const MixedGraph& g, char x, char y, Criterion c, Rng& rng) {
    Mask pool = g.all_mask() & ~(mask_bit(g.index_of(x)) | mask_bit(g.index_of(y)));
    for (int t = 0; t < kTries * 2; ++t) {
        std::vector<char> z = sorted_labels(random_subset(g, pool, rng));
        if (!adjustment_verify(g, {x, y, z, c})) return z;
    }
    // every subset of the pool is valid; an out-of-graph member settles it
    std::vector<char> z{foreign_letters(g, rng, 1)[0]};
    return z;
}

void build_adjustment_impl(Build& b, Criterion c) {
    std::string word = criterion_word(c);
    switch (b.qtype) {
        case QType::FindOne: {
            AdjPair p = pick_adjustable(b.g, c, b.rng);
            int f = b.variant % 3;
            std::vector<char> z;
            const char* vname = nullptr;
            if (f == 1) {
                z = *adjustment_find_minimal(b.g, p.x, p.y, c);
                vname = "minimal";
            } else if (f == 2) {
                z = *adjustment_find_maximal(b.g, p.x, p.y, c);
                vname = "maximal";
            } else {
                z = *adjustment_find_valid(b.g, p.x, p.y, c);
                vname = "valid";
            }
            b.out.prompt_core = "Find one " + std::string(vname) + " " + word +
                                " adjustment set for " + one(p.x) + " and " + one(p.y) + ".";
            b.out.ground_truth = {{"kind", "nodeset"},
                                  {"value", label_array(sorted_labels(z))},
                                  {"x", one(p.x)},
                                  {"y", one(p.y)},
                                  {"variant", vname},
                                  {"criterion", word}};
            break;
        }
        case QType::ChooseSet: {
            AdjPair p = pick_adjustable(b.g, c, b.rng);
            std::vector<char> z = *adjustment_find_valid(b.g, p.x, p.y, c);
            std::vector<std::string> wrong;
            for (int t = 0; t < kTries * 4 && wrong.size() < 3; ++t) {
                std::string txt = set_text(invalid_adjustment(b.g, p.x, p.y, c, b.rng));
                if (std::find(wrong.begin(), wrong.end(), txt) == wrong.end()) wrong.push_back(txt);
            }
            if (wrong.size() < 3) fail(Err::ExhaustedRetries, "invalid adjustment sets collapsed");
            b.out.prompt_core = "Which of the following sets is a valid " + word +
                                " adjustment set for " + one(p.x) + " and " + one(p.y) + "?";
            b.out.ground_truth =
                truth_option(attach_options(b, set_text(sorted_labels(z)), wrong));
            b.out.ground_truth["x"] = one(p.x);
            b.out.ground_truth["y"] = one(p.y);
            break;
        }
        case QType::YesNo: {
            AdjPair p = pick_adjustable(b.g, c, b.rng);
            std::vector<char> shown =
                want_yes(b) ? sorted_labels(*adjustment_find_valid(b.g, p.x, p.y, c))
                            : invalid_adjustment(b.g, p.x, p.y, c, b.rng);
            b.out.prompt_core = "Is " + set_text(shown) + " a valid " + word +
                                " adjustment set for " + one(p.x) + " and " + one(p.y) + "?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["x"] = one(p.x);
            b.out.ground_truth["y"] = one(p.y);
            b.out.ground_truth["set"] = label_array(shown);
            break;
        }
        case QType::Exist: {
            auto ok = [&](char u, char v) {
                if (want_yes(b))
                    return directed_path_exists(b.g, u, v) && adjustment_exists(b.g, u, v, c);
                return !adjustment_exists(b.g, u, v, c);
            };
            auto [x, y] = find_pair(b.g, b.rng, ok, "adjustment-existence balance unreachable");
            b.out.prompt_core = "Does there exist a valid " + word + " adjustment set for " +
                                one(x) + " and " + one(y) + "?";
            b.out.ground_truth = truth_yesno(want_yes(b));
            b.out.ground_truth["x"] = one(x);
            b.out.ground_truth["y"] = one(y);
            break;
        }
        default:
            fail(Err::UnsupportedPair, "adjustment tasks have no such question type");
    }
}

// ---- CEI ----

void build_cei_impl(Build& b) {
    if (b.qtype != QType::YesNo) fail(Err::UnsupportedPair, "CEI has no such question type");
    // only effects on genuine downstream nodes are asked about
    auto [x, y] = find_pair(
        b.g, b.rng,
        [&](char u, char v) {
            return mask_has(b.g.descendants(b.g.index_of(u)), b.g.index_of(v)) &&
                   effect_identifiable(b.g, u, v) == want_yes(b);
        },
        "identifiability balance unreachable");
    b.out.prompt_core =
        "Can the causal effect of " + one(x) + " on " + one(y) + " be identified or not?";
    b.out.ground_truth = truth_yesno(want_yes(b));
    b.out.ground_truth["x"] = one(x);
    b.out.ground_truth["y"] = one(y);
}

}  // namespace

void build_cc(Build& b) { build_cc_impl(b); }
void build_ct(Build& b) { build_ct_impl(b); }
void build_cf(Build& b) { build_cf_impl(b); }
void build_mrs(Build& b) { build_mrs_impl(b); }
void build_bas(Build& b) { build_adjustment_impl(b, Criterion::Backdoor); }
void build_fas(Build& b) { build_adjustment_impl(b, Criterion::Frontdoor); }
void build_cei(Build& b) { build_cei_impl(b); }

}  // namespace cgbench::qgen
