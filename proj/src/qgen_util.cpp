#include "src/qgen.hpp"

#include <algorithm>

#include "cgbench/answers.hpp"
#include "cgbench/errors.hpp"

namespace cgbench::qgen {

bool want_yes(const Build& b) { return b.variant != 0; }

std::string one(char c) { return std::string(1, c); }

Json label_array(const std::vector<char>& v) {
    Json a = Json::array();
    for (char c : v) a.push_back(one(c));
    return a;
}

char random_node(const MixedGraph& g, Rng& rng) {
    return g.label(static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n()))));
}

std::pair<char, char> random_pair(const MixedGraph& g, Rng& rng) {
    char x = random_node(g, rng), y = random_node(g, rng);
    while (y == x) y = random_node(g, rng);
    return {x, y};
}

namespace {
bool linked(const MixedGraph& g, int u, int v) {
    return mask_has(g.children(u) | g.parents(u) | g.siblings(u) | g.neighbors(u), v);
}
}  // namespace

bool valid_path_seq(const MixedGraph& g, char x, char y, const std::vector<char>& seq) {
    if (seq.size() < 2 || seq.front() != x || seq.back() != y) return false;
    std::vector<char> sorted(seq);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        int u = g.index_of(seq[i]), v = g.index_of(seq[i + 1]);
        if (u < 0 || v < 0 || !linked(g, u, v)) return false;
    }
    return true;
}

std::vector<char> fake_path_seq(const MixedGraph& g, char x, char y,
                                const std::vector<NodePath>& real, Rng& rng) {
    for (int t = 0; t < kTries; ++t) {
        std::vector<char> seq = perturb_seq(rng.pick(real).nodes, g, rng);
        if (!valid_path_seq(g, x, y, seq)) return seq;
    }
    fail(Err::ExhaustedRetries, "no invalid path variant found");
}

std::vector<char> foreign_letters(const MixedGraph& g, Rng& rng, int k) {
    std::vector<char> pool;
    for (char c = 'A'; c <= 'Z'; ++c)
        if (!g.has_node(c)) pool.push_back(c);
    if (static_cast<int>(pool.size()) < k)
        fail(Err::ExhaustedRetries, "not enough unused letters");
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

std::vector<char> random_subset(const MixedGraph& g, Mask pool, Rng& rng) {
    std::vector<char> out;
    for (int v = 0; v < g.n(); ++v)
        if (mask_has(pool, v) && rng.coin()) out.push_back(g.label(v));
    return out;
}

std::vector<char> sorted_labels(std::vector<char> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::string seq_path_text(const MixedGraph& g, const std::vector<char>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) {
            int u = g.index_of(seq[i - 1]), v = g.index_of(seq[i]);
            const char* join = g.kind() == GraphKind::Undirected ? " - " : " -> ";
            if (mask_has(g.children(u), v))
                join = " -> ";
            else if (mask_has(g.parents(u), v))
                join = " <- ";
            else if (mask_has(g.siblings(u), v))
                join = " <-> ";
            else if (mask_has(g.neighbors(u), v))
                join = " - ";
            out += join;
        }
        out.push_back(seq[i]);
    }
    return out;
}

std::string attach_options(Build& b, const std::string& correct,
                           const std::vector<std::string>& distractors) {
    if (distractors.size() != 3) fail(Err::ExhaustedRetries, "option construction fell short");
    std::vector<std::string> texts = distractors;
    std::size_t slot = b.rng.below(4);
    texts.insert(texts.begin() + static_cast<long>(slot), correct);
    std::string label;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        std::string l(1, static_cast<char>('A' + i));
        b.out.choices.push_back({l, texts[i]});
        b.out.prompt_core += "\n" + l + ". " + texts[i];
        if (i == slot) label = l;
    }
    return label;
}

Json truth_yesno(bool v) { return Json{{"kind", "yesno"}, {"value", v}}; }

Json truth_number(long v) { return Json{{"kind", "number"}, {"value", v}}; }

Json truth_option(const std::string& label) { return Json{{"kind", "option"}, {"value", label}}; }

std::vector<char> perturb_set(const std::vector<char>& s, Mask pool, const MixedGraph& g,
                              Rng& rng) {
    for (int t = 0; t < kTries; ++t) {
        std::vector<char> out = s;
        Mask in = g.to_mask(s);
        Mask outside = pool & ~in;
        int mode = static_cast<int>(rng.below(3));
        if (mode == 0 && !out.empty()) {
            out.erase(out.begin() + static_cast<long>(rng.below(out.size())));
        } else if (mode == 1 && outside) {
            std::vector<char> cand = g.to_labels(outside);
            out.push_back(rng.pick(cand));
        } else if (!out.empty() && outside) {
            std::vector<char> cand = g.to_labels(outside);
            out[rng.below(out.size())] = rng.pick(cand);
        } else {
            continue;
        }
        std::sort(out.begin(), out.end());
        if (out != sorted_labels(s)) return out;
    }
    fail(Err::ExhaustedRetries, "set perturbation stuck");
}

std::vector<char> perturb_seq(const std::vector<char>& seq, const MixedGraph& g, Rng& rng) {
    for (int t = 0; t < kTries; ++t) {
        std::vector<char> out = seq;
        int mode = static_cast<int>(rng.below(3));
        if (mode == 0 && out.size() >= 2) {
            std::size_t i = rng.below(out.size()), j = rng.below(out.size());
            std::swap(out[i], out[j]);
        } else if (mode == 1) {
            Mask used = g.to_mask(out);
            Mask rest = g.all_mask() & ~used;
            if (!rest) continue;
            std::vector<char> cand = g.to_labels(rest);
            out[rng.below(out.size())] = rng.pick(cand);
        } else if (out.size() >= 3) {
            out.pop_back();
        } else {
            continue;
        }
        if (out != seq) return out;
    }
    fail(Err::ExhaustedRetries, "sequence perturbation stuck");
}

}  // namespace cgbench::qgen
