#pragma once

// Internal construction layer behind make_question: one builder per task
// fills prompt_core, choices, polarity and ground_truth on a prepared
// instance. Builders throw ExhaustedRetries when the host graph cannot
// satisfy the request.

#include <string>
#include <vector>

#include "cgbench/basic_ops.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/question.hpp"
#include "cgbench/rng.hpp"

namespace cgbench::qgen {

struct Build {
    const MixedGraph& g;
    Rng& rng;
    QType qtype;
    // FindOne: template form index. ChoiceSelection on SN/SE: 0 = "is",
    // 1 = "is NOT". YesNo/Existence: 1 = aim for a yes instance, 0 for no.
    int variant;
    QuestionInstance& out;
};

void build_sn(Build& b);
void build_se(Build& b);
void build_nr2(Build& b);
void build_nr3(Build& b);
void build_pt(Build& b);
void build_cl(Build& b);
void build_to(Build& b);
void build_blp(Build& b);
void build_ds(Build& b);
void build_mec(Build& b);
void build_mb(Build& b);
void build_dp(Build& b);
void build_bkp(Build& b);
void build_cc(Build& b);
void build_ct(Build& b);
void build_cf(Build& b);
void build_mrs(Build& b);
void build_bas(Build& b);
void build_fas(Build& b);
void build_cei(Build& b);

// ---- shared helpers (qgen_util.cpp) ----

bool want_yes(const Build& b);

std::string one(char c);
Json label_array(const std::vector<char>& v);
char random_node(const MixedGraph& g, Rng& rng);
std::pair<char, char> random_pair(const MixedGraph& g, Rng& rng);

// orientation-blind simple-path check over the node sequence
bool valid_path_seq(const MixedGraph& g, char x, char y, const std::vector<char>& seq);

// perturbs one of `real` until the result stops being a path from x to y
std::vector<char> fake_path_seq(const MixedGraph& g, char x, char y,
                                const std::vector<NodePath>& real, Rng& rng);

// k letters absent from g, drawn without replacement
std::vector<char> foreign_letters(const MixedGraph& g, Rng& rng, int k);

// uniformly drawn node subset of `pool` (possibly empty)
std::vector<char> random_subset(const MixedGraph& g, Mask pool, Rng& rng);

std::vector<char> sorted_labels(std::vector<char> v);

// Renders a node sequence as a path using g's actual edge orientations;
// absent edges fall back to the kind's plain arrow so fabricated paths
// still look like paths.
std::string seq_path_text(const MixedGraph& g, const std::vector<char>& seq);

// Appends "\nA. ...\nB. ..." to the prompt, stores the shuffled options in
// out.choices and returns the label of `correct`. Distractor list must
// hold exactly 3 entries, all distinct from `correct`.
std::string attach_options(Build& b, const std::string& correct,
                           const std::vector<std::string>& distractors);

// ground-truth assembly
Json truth_yesno(bool v);
Json truth_number(long v);
Json truth_option(const std::string& label);

// Mutates a node set into a different one over `pool` (drop, add or swap
// one element). Result differs from the input; may be empty.
std::vector<char> perturb_set(const std::vector<char>& s, Mask pool, const MixedGraph& g, Rng& rng);

// Node sequence perturbation for fake paths/orderings: swaps two positions,
// replaces one node with an unused one, or truncates/extends.
std::vector<char> perturb_seq(const std::vector<char>& seq, const MixedGraph& g, Rng& rng);

constexpr int kTries = 64;

// Random pair probing with an exhaustive sweep as the last resort, so a
// throw really means no ordered pair satisfies the predicate.
template <class F>
std::pair<char, char> find_pair(const MixedGraph& g, Rng& rng, F&& ok, const char* what) {
    for (int t = 0; t < kTries; ++t) {
        auto [x, y] = random_pair(g, rng);
        if (ok(x, y)) return {x, y};
    }
    for (char x : g.labels())
        for (char y : g.labels())
            if (x != y && ok(x, y)) return {x, y};
    fail(Err::ExhaustedRetries, what);
}

}  // namespace cgbench::qgen
