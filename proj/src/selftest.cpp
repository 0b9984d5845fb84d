#include "cgbench/selftest.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "cgbench/adjustment.hpp"
#include "cgbench/basic_ops.hpp"
#include "cgbench/dsep.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/graph.hpp"
#include "cgbench/identify.hpp"
#include "cgbench/mec.hpp"
#include "cgbench/rng.hpp"
#include "cgbench/sampling.hpp"

// Reference implementations live here and share nothing with the library
// oracles beyond the graph container: paths are enumerated over explicit
// edge lists, separation is decided by blocking every path, equivalence by
// comparing full separation signatures, identifiability by hedge search.

namespace cgbench {
namespace {

struct RefEdge { int u, v, cat; };  // cat: 0 directed u->v, 1 bidirected, 2 undirected

struct RefGraph {
    int n = 0;
    std::vector<RefEdge> edges;
    std::vector<std::vector<int>> touch;  // edge indices incident to each node
    std::vector<Mask> kids, pars, sibs;
};

RefGraph make_ref(const MixedGraph& g) {
    RefGraph r;
    r.n = g.n();
    for (auto [a, b] : g.directed()) r.edges.push_back({a, b, 0});
    for (auto [a, b] : g.bidirected()) r.edges.push_back({a, b, 1});
    for (auto [a, b] : g.undirected()) r.edges.push_back({a, b, 2});
    r.touch.resize(static_cast<std::size_t>(r.n));
    r.kids.assign(static_cast<std::size_t>(r.n), 0);
    r.pars.assign(static_cast<std::size_t>(r.n), 0);
    r.sibs.assign(static_cast<std::size_t>(r.n), 0);
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        const RefEdge& e = r.edges[i];
        r.touch[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
        r.touch[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
        if (e.cat == 0) {
            r.kids[static_cast<std::size_t>(e.u)] |= mask_bit(e.v);
            r.pars[static_cast<std::size_t>(e.v)] |= mask_bit(e.u);
        } else if (e.cat == 1) {
            r.sibs[static_cast<std::size_t>(e.u)] |= mask_bit(e.v);
            r.sibs[static_cast<std::size_t>(e.v)] |= mask_bit(e.u);
        }
    }
    return r;
}

struct RefStep { int edge; bool from_u; };

struct RefPath {
    std::vector<int> nodes;
    std::vector<RefStep> steps;
};

bool head_at_src(const RefEdge& e, bool from_u) {
    if (e.cat == 1) return true;
    if (e.cat == 2) return false;
    return !from_u;
}

bool head_at_dst(const RefEdge& e, bool from_u) {
    if (e.cat == 1) return true;
    if (e.cat == 2) return false;
    return from_u;
}

void ref_paths_rec(const RefGraph& g, int at, int goal, Mask seen, RefPath& cur,
                   std::vector<RefPath>& out) {
    if (at == goal) {
        out.push_back(cur);
        return;
    }
    for (int ei : g.touch[static_cast<std::size_t>(at)]) {
        const RefEdge& e = g.edges[static_cast<std::size_t>(ei)];
        bool from_u = e.u == at;
        int next = from_u ? e.v : e.u;
        if (mask_has(seen, next)) continue;
        cur.nodes.push_back(next);
        cur.steps.push_back({ei, from_u});
        ref_paths_rec(g, next, goal, seen | mask_bit(next), cur, out);
        cur.nodes.pop_back();
        cur.steps.pop_back();
    }
}

std::vector<RefPath> ref_paths(const RefGraph& g, int x, int y) {
    std::vector<RefPath> out;
    RefPath cur;
    cur.nodes.push_back(x);
    ref_paths_rec(g, x, y, mask_bit(x), cur, out);
    return out;
}

std::string ref_text(const MixedGraph& g, const RefGraph& rg, const RefPath& p) {
    std::string out(1, g.label(p.nodes[0]));
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const RefEdge& e = rg.edges[static_cast<std::size_t>(p.steps[i].edge)];
        if (e.cat == 1)
            out += " <-> ";
        else if (e.cat == 2)
            out += " - ";
        else
            out += p.steps[i].from_u ? " -> " : " <- ";
        out += g.label(p.nodes[i + 1]);
    }
    return out;
}

NodePath to_node_path(const MixedGraph& g, const RefGraph& rg, const RefPath& p) {
    NodePath np;
    for (int v : p.nodes) np.nodes.push_back(g.label(v));
    for (const RefStep& s : p.steps) {
        const RefEdge& e = rg.edges[static_cast<std::size_t>(s.edge)];
        if (e.cat == 1)
            np.steps.push_back(Step::Bidirected);
        else if (e.cat == 2)
            np.steps.push_back(Step::Undirected);
        else
            np.steps.push_back(s.from_u ? Step::Forward : Step::Backward);
    }
    return np;
}

Mask ref_desc(const RefGraph& g, int v) {  // v plus everything reachable forward
    Mask out = mask_bit(v);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < g.n; ++u) {
            if (!mask_has(out, u)) continue;
            Mask add = g.kids[static_cast<std::size_t>(u)] & ~out;
            if (add) {
                out |= add;
                grew = true;
            }
        }
    }
    return out;
}

bool ref_blocked(const RefGraph& g, const RefPath& p, Mask z) {
    for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) {
        int m = p.nodes[i];
        const RefStep& into = p.steps[i - 1];
        const RefStep& from = p.steps[i];
        bool collider = head_at_dst(g.edges[static_cast<std::size_t>(into.edge)], into.from_u) &&
                        head_at_src(g.edges[static_cast<std::size_t>(from.edge)], from.from_u);
        if (collider) {
            if ((ref_desc(g, m) & z) == 0) return true;
        } else if (mask_has(z, m)) {
            return true;
        }
    }
    return false;
}

bool ref_dsep(const RefGraph& g, int x, int y, Mask z) {
    for (const RefPath& p : ref_paths(g, x, y))
        if (!ref_blocked(g, p, z)) return false;
    return true;
}

bool ref_is_backdoor(const RefGraph& g, const RefPath& p) {
    return head_at_src(g.edges[static_cast<std::size_t>(p.steps[0].edge)], p.steps[0].from_u);
}

bool ref_backdoor_ok(const RefGraph& g, int x, int y, Mask z) {
    if (mask_has(z, x) || mask_has(z, y)) return false;
    if ((ref_desc(g, x) & ~mask_bit(x)) & z) return false;
    for (const RefPath& p : ref_paths(g, x, y))
        if (ref_is_backdoor(g, p) && !ref_blocked(g, p, z)) return false;
    return true;
}

bool ref_frontdoor_ok(const RefGraph& g, int x, int y, Mask z) {
    if (mask_has(z, x) || mask_has(z, y)) return false;
    for (const RefPath& p : ref_paths(g, x, y)) {
        bool causal = true;
        for (const RefStep& s : p.steps) {
            const RefEdge& e = g.edges[static_cast<std::size_t>(s.edge)];
            if (!(e.cat == 0 && s.from_u)) causal = false;
        }
        if (!causal) continue;
        Mask interior = 0;
        for (std::size_t i = 1; i + 1 < p.nodes.size(); ++i) interior |= mask_bit(p.nodes[i]);
        if ((interior & z) == 0) return false;
    }
    for (int m = 0; m < g.n; ++m) {
        if (!mask_has(z, m)) continue;
        for (const RefPath& p : ref_paths(g, x, m))
            if (ref_is_backdoor(g, p) && !ref_blocked(g, p, 0)) return false;
        for (const RefPath& p : ref_paths(g, m, y))
            if (ref_is_backdoor(g, p) && !ref_blocked(g, p, mask_bit(x))) return false;
    }
    return true;
}

bool ref_adjustment_ok(const RefGraph& g, int x, int y, Mask z, Criterion c) {
    return c == Criterion::Backdoor ? ref_backdoor_ok(g, x, y, z) : ref_frontdoor_ok(g, x, y, z);
}

Mask ref_an_cut(const RefGraph& g, int y, int x) {  // ancestors of y once edges into x are gone
    Mask out = mask_bit(y);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.n; ++v) {
            if (!mask_has(out, v) || v == x) continue;
            Mask add = g.pars[static_cast<std::size_t>(v)] & ~out;
            if (add) {
                out |= add;
                grew = true;
            }
        }
    }
    return out;
}

bool ref_sib_connected(const RefGraph& g, Mask m) {
    if (m == 0) return false;
    Mask seen = mask_bit(std::countr_zero(m));
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.n; ++v) {
            if (!mask_has(seen, v)) continue;
            Mask add = (g.sibs[static_cast<std::size_t>(v)] & m) & ~seen;
            if (add) {
                seen |= add;
                grew = true;
            }
        }
    }
    return seen == m;
}

Mask ref_childless(const RefGraph& g, Mask f) {
    Mask out = 0;
    for (int v = 0; v < g.n; ++v)
        if (mask_has(f, v) && (g.kids[static_cast<std::size_t>(v)] & f) == 0) out |= mask_bit(v);
    return out;
}

// Hedge search. A hedge needs nested bidirected-connected sets F ⊇ F' with
// x in F only, plus a root set R inside F' ∩ An(y) (y's ancestors once
// edges into x are cut) such that everything outside R keeps a directed
// child in its set; R can absorb extra members freely, so existence reduces
// to childless(F) ∪ childless(F') fitting inside An(y) ∩ F'.
bool ref_identifiable(const RefGraph& g, int x, int y) {
    Mask an = ref_an_cut(g, y, x);
    std::uint64_t full = (std::uint64_t{1} << g.n) - 1;
    for (std::uint64_t f = 1; f <= full; ++f) {
        Mask fm = static_cast<Mask>(f);
        if (!mask_has(fm, x)) continue;
        if (!ref_sib_connected(g, fm)) continue;
        Mask req_f = ref_childless(g, fm);
        Mask inner = fm & ~mask_bit(x);
        for (Mask fp = inner; fp; fp = (fp - 1) & inner) {
            if (!ref_sib_connected(g, fp)) continue;
            Mask allowed = an & fp;
            if (!allowed) continue;
            Mask req = req_f | ref_childless(g, fp);
            if ((req & ~allowed) == 0) return false;
        }
    }
    return true;
}

// ---- battery plumbing ----

std::string set_text(const std::vector<char>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += s[i];
    }
    return out + "}";
}

void note_mismatch(SelftestResult& r, const std::string& what) {
    ++r.mismatches;
    if (r.detail.empty()) r.detail = what;
}

MixedGraph sample_any(Rng& rng, GraphKind kind) {
    int n = 4 + static_cast<int>(rng.below(6));
    int pairs = n * (n - 1) / 2;
    int cap = std::min(10, max_edges(kind, n));
    int n_e = (n - 1) + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - (n - 1) + 1)));
    GraphSpec s;
    s.kind = kind;
    s.n_nodes = n;
    s.n_edges = n_e;
    s.bi_ratio_cap = -1.0;  // the checks should see skews the generator avoids
    if (kind == GraphKind::Admg) {
        int lo = std::max(0, n_e - pairs);
        int hi = std::min(n_e, pairs);
        s.n_bidirected = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    return sample_graph(s, rng);
}

std::vector<char> mask_labels(const MixedGraph& g, Mask m) {
    std::vector<char> out;
    for (int v = 0; v < g.n(); ++v)
        if (mask_has(m, v)) out.push_back(g.label(v));
    return out;
}

SelftestResult paths_battery(std::uint64_t seed, long target) {
    SelftestResult r{"paths"};
    Rng rng(seed);
    const GraphKind kinds[] = {GraphKind::Dag, GraphKind::Admg, GraphKind::Undirected,
                               GraphKind::Directed};
    int which = 0;
    while (r.cases < target) {
        MixedGraph g = sample_any(rng, kinds[which++ % 4]);
        RefGraph rg = make_ref(g);
        for (int t = 0; t < 6 && r.cases < target; ++t) {
            int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
            int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
            if (x == y) continue;
            std::vector<std::string> lib, ref;
            for (const NodePath& p : all_paths(g, g.label(x), g.label(y))) lib.push_back(p.text());
            for (const RefPath& p : ref_paths(rg, x, y)) ref.push_back(ref_text(g, rg, p));
            std::sort(lib.begin(), lib.end());
            std::sort(ref.begin(), ref.end());
            ++r.cases;
            if (lib != ref)
                note_mismatch(r, "path sets differ for " + std::string(1, g.label(x)) + " to " +
                                     g.label(y) + " on " + g.text_form());
        }
    }
    return r;
}

SelftestResult blocking_battery(std::uint64_t seed, long target) {
    SelftestResult r{"blocking"};
    Rng rng(seed);
    int which = 0;
    while (r.cases < target) {
        MixedGraph g = sample_any(rng, which++ % 2 ? GraphKind::Admg : GraphKind::Dag);
        RefGraph rg = make_ref(g);
        int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
        int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
        if (x == y) continue;
        auto refs = ref_paths(rg, x, y);
        if (refs.empty()) continue;
        const RefPath& rp = refs[rng.below(refs.size())];
        NodePath np = to_node_path(g, rg, rp);
        Mask zm = static_cast<Mask>(rng.below(std::uint64_t{1} << g.n())) &
                  ~(mask_bit(x) | mask_bit(y));
        bool lib = is_path_blocked(g, np, mask_labels(g, zm)).blocked;
        bool ref = ref_blocked(rg, rp, zm);
        ++r.cases;
        if (lib != ref)
            note_mismatch(r, "blocking verdict differs on " + np.text() + " given " +
                                 set_text(mask_labels(g, zm)) + " in " + g.text_form());
        if (np.nodes.size() < 3) continue;
        // the constructive blockers must satisfy the reference rules, and the
        // minimal one must match the brute-force minimum over interior subsets
        std::vector<char> valid = blocking_set_valid(g, np);
        std::vector<char> minimal = blocking_set_minimal(g, np);
        ++r.cases;
        if (!ref_blocked(rg, rp, g.to_mask(valid)) || !ref_blocked(rg, rp, g.to_mask(minimal)))
            note_mismatch(r, "constructed blocker fails the reference rules on " + np.text());
        Mask interior = 0;
        for (std::size_t i = 1; i + 1 < rp.nodes.size(); ++i) interior |= mask_bit(rp.nodes[i]);
        std::size_t best = np.nodes.size();
        for (Mask sub = interior;; sub = (sub - 1) & interior) {
            if (ref_blocked(rg, rp, sub))
                best = std::min(best, static_cast<std::size_t>(std::popcount(sub)));
            if (sub == 0) break;
        }
        ++r.cases;
        if (best != minimal.size())
            note_mismatch(r, "minimal blocker size differs on " + np.text() + ": got " +
                                 std::to_string(minimal.size()) + ", brute force finds " +
                                 std::to_string(best));
    }
    return r;
}

SelftestResult dsep_battery(std::uint64_t seed, long target) {
    SelftestResult r{"dsep"};
    Rng rng(seed);
    int which = 0;
    while (r.cases < target) {
        MixedGraph g = sample_any(rng, which++ % 2 ? GraphKind::Admg : GraphKind::Dag);
        RefGraph rg = make_ref(g);
        for (int t = 0; t < 8 && r.cases < target; ++t) {
            int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
            int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
            if (x == y) continue;
            Mask zm = static_cast<Mask>(rng.below(std::uint64_t{1} << g.n())) &
                      ~(mask_bit(x) | mask_bit(y));
            bool lib = d_separated(g, g.label(x), g.label(y), mask_labels(g, zm));
            ++r.cases;
            if (lib != ref_dsep(rg, x, y, zm))
                note_mismatch(r, "separation verdict differs for " + std::string(1, g.label(x)) +
                                     " vs " + g.label(y) + " given " +
                                     set_text(mask_labels(g, zm)) + " in " + g.text_form());
        }
        if (which % 8 == 0 && g.n() <= 6) {
            int x = 0, y = 1;
            Mask rest = g.all_mask() & ~(mask_bit(x) | mask_bit(y));
            bool any = false;
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                if (ref_dsep(rg, x, y, sub)) any = true;
                if (sub == 0) break;
            }
            auto found = d_separator_valid(g, g.label(x), g.label(y));
            ++r.cases;
            if (found.has_value() != any ||
                (found && !ref_dsep(rg, x, y, g.to_mask(*found))))
                note_mismatch(r, "separator search disagrees with brute force on " + g.text_form());
        }
    }
    return r;
}

std::vector<MixedGraph> all_dags(int n) {
    std::vector<char> labels;
    for (int i = 0; i < n; ++i) labels.push_back(static_cast<char>('A' + i));
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    long total = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) total *= 3;
    std::vector<MixedGraph> out;
    for (long state = 0; state < total; ++state) {
        std::vector<MixedGraph::LabelPair> edges;
        long s = state;
        for (auto [i, j] : slots) {
            int d = static_cast<int>(s % 3);
            s /= 3;
            if (d == 1) edges.push_back({labels[i], labels[j]});
            if (d == 2) edges.push_back({labels[j], labels[i]});
        }
        try {
            out.push_back(MixedGraph::build(GraphKind::Dag, labels, edges));
        } catch (const Error&) {
            // cyclic orientation
        }
    }
    return out;
}

std::uint32_t dsep_signature(const MixedGraph& g) {
    RefGraph rg = make_ref(g);
    std::uint32_t sig = 0;
    int bit = 0;
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y) {
            Mask rest = g.all_mask() & ~(mask_bit(x) | mask_bit(y));
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                if (ref_dsep(rg, x, y, sub)) sig |= std::uint32_t{1} << bit;
                ++bit;
                if (sub == 0) break;
            }
        }
    return sig;
}

std::vector<std::pair<char, char>> directed_label_pairs(const MixedGraph& g) {
    std::vector<std::pair<char, char>> out;
    for (auto [a, b] : g.directed()) out.push_back({g.label(a), g.label(b)});
    std::sort(out.begin(), out.end());
    return out;
}

SelftestResult mec_battery(bool exhaustive) {
    SelftestResult r{"mec"};
    int top = exhaustive ? 4 : 3;
    for (int n = 3; n <= top; ++n) {
        std::vector<MixedGraph> dags = all_dags(n);
        std::vector<std::uint32_t> sigs;
        for (const MixedGraph& g : dags) sigs.push_back(dsep_signature(g));
        std::vector<long> class_size(dags.size(), 0);
        for (std::size_t i = 0; i < dags.size(); ++i)
            for (std::size_t j = 0; j < dags.size(); ++j)
                if (sigs[i] == sigs[j]) ++class_size[i];
        for (std::size_t i = 0; i < dags.size(); ++i) {
            for (std::size_t j = 0; j < dags.size(); ++j) {
                bool lib = markov_equivalent(dags[i], dags[j]);
                ++r.cases;
                if (lib != (sigs[i] == sigs[j]))
                    note_mismatch(r, "equivalence verdict differs for " + dags[i].text_form() +
                                         " vs " + dags[j].text_form());
            }
            auto other = mec_other_member(dags[i]);
            ++r.cases;
            if (other.has_value() != (class_size[i] > 1)) {
                note_mismatch(r, "class membership search disagrees with signature census on " +
                                     dags[i].text_form());
            } else if (other) {
                bool same_edges = directed_label_pairs(*other) == directed_label_pairs(dags[i]);
                if (same_edges || dsep_signature(*other) != sigs[i])
                    note_mismatch(r, "returned class member is wrong for " + dags[i].text_form());
            }
        }
    }
    return r;
}

SelftestResult adjustment_battery(std::uint64_t seed, long target) {
    SelftestResult r{"adjustment"};
    Rng rng(seed);
    int which = 0;
    while (r.cases < target) {
        Criterion crit = which % 2 ? Criterion::Frontdoor : Criterion::Backdoor;
        GraphKind kind = which % 4 < 2 ? GraphKind::Dag : GraphKind::Admg;
        ++which;
        MixedGraph g = sample_any(rng, kind);
        RefGraph rg = make_ref(g);
        for (int t = 0; t < 4 && r.cases < target; ++t) {
            int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
            int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n())));
            if (x == y) continue;
            Mask zm = static_cast<Mask>(rng.below(std::uint64_t{1} << g.n()));
            if (t % 4 != 3) zm &= ~(mask_bit(x) | mask_bit(y));
            AdjustmentQuery q{g.label(x), g.label(y), mask_labels(g, zm), crit};
            bool lib = adjustment_verify(g, q);
            ++r.cases;
            if (lib != ref_adjustment_ok(rg, x, y, zm, crit))
                note_mismatch(r, std::string(crit == Criterion::Backdoor ? "backdoor" : "frontdoor") +
                                     " verdict differs for " + g.label(x) + " on " + g.label(y) +
                                     " given " + set_text(mask_labels(g, zm)) + " in " +
                                     g.text_form());
        }
        if (which % 6 == 0 && g.n() <= 6) {
            int x = 0, y = g.n() - 1;
            Mask rest = g.all_mask() & ~(mask_bit(x) | mask_bit(y));
            int brute_best = -1;
            for (Mask sub = rest;; sub = (sub - 1) & rest) {
                if (ref_adjustment_ok(rg, x, y, sub, crit)) {
                    int sz = std::popcount(sub);
                    if (brute_best < 0 || sz < brute_best) brute_best = sz;
                }
                if (sub == 0) break;
            }
            auto found = adjustment_find_minimal(g, g.label(x), g.label(y), crit);
            ++r.cases;
            if (found.has_value() != (brute_best >= 0) ||
                (found && (static_cast<int>(found->size()) != brute_best ||
                           !ref_adjustment_ok(rg, x, y, g.to_mask(*found), crit))))
                note_mismatch(r, "minimal adjustment search disagrees with brute force on " +
                                     g.text_form());
        }
    }
    return r;
}

void identify_check(SelftestResult& r, const MixedGraph& g, const RefGraph& rg, int x, int y) {
    bool lib = effect_identifiable(g, g.label(x), g.label(y));
    ++r.cases;
    if (lib != ref_identifiable(rg, x, y))
        note_mismatch(r, "identifiability differs for " + std::string(1, g.label(x)) + " on " +
                             g.label(y) + " in " + g.text_form());
}

SelftestResult identify_battery(std::uint64_t seed, long samples, bool exhaustive) {
    SelftestResult r{"identify"};
    Rng rng(seed);
    if (exhaustive) {
        // 4 nodes: every bidirected overlay of every DAG, every ordered pair,
        // with no edge budget. Covers the bow patterns the generator's
        // bidirected share cap rules out.
        std::vector<std::pair<char, char>> slots4;
        for (char a = 'A'; a <= 'D'; ++a)
            for (char b = static_cast<char>(a + 1); b <= 'D'; ++b) slots4.push_back({a, b});
        for (const MixedGraph& dag : all_dags(4)) {
            std::vector<MixedGraph::LabelPair> directed;
            for (auto [a, b] : dag.directed()) directed.push_back({dag.label(a), dag.label(b)});
            for (Mask bi = 0; bi < 64; ++bi) {
                std::vector<MixedGraph::LabelPair> bidirected;
                for (int s = 0; s < 6; ++s)
                    if (mask_has(bi, s)) bidirected.push_back(slots4[static_cast<std::size_t>(s)]);
                MixedGraph g =
                    MixedGraph::build(GraphKind::Admg, dag.labels(), directed, bidirected);
                RefGraph rg = make_ref(g);
                for (int x = 0; x < 4; ++x)
                    for (int y = 0; y < 4; ++y)
                        if (x != y) identify_check(r, g, rg, x, y);
            }
        }
        // 5 nodes: every ADMG the generator could emit (4..10 edges total,
        // bidirected at most half the directed count), pairs rotated so each
        // of the 20 shows up on every 5th graph.
        std::vector<std::pair<char, char>> slots5;
        for (char a = 'A'; a <= 'E'; ++a)
            for (char b = static_cast<char>(a + 1); b <= 'E'; ++b) slots5.push_back({a, b});
        std::vector<std::pair<int, int>> pairs5;
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                if (x != y) pairs5.push_back({x, y});
        long graph_no = 0;
        for (const MixedGraph& dag : all_dags(5)) {
            int d = static_cast<int>(dag.directed().size());
            if (d + d / 2 < 4) continue;  // even the fullest overlay stays under 4 edges
            std::vector<MixedGraph::LabelPair> directed;
            for (auto [a, b] : dag.directed()) directed.push_back({dag.label(a), dag.label(b)});
            for (Mask bi = 0; bi < 1024; ++bi) {
                int b = std::popcount(bi);
                if (2 * b > d || d + b < 4 || d + b > 10) continue;
                std::vector<MixedGraph::LabelPair> bidirected;
                for (int s = 0; s < 10; ++s)
                    if (mask_has(bi, s)) bidirected.push_back(slots5[static_cast<std::size_t>(s)]);
                MixedGraph g =
                    MixedGraph::build(GraphKind::Admg, dag.labels(), directed, bidirected);
                RefGraph rg = make_ref(g);
                for (int k = 0; k < 20; k += 5) {
                    auto [x, y] = pairs5[static_cast<std::size_t>((graph_no + k) % 20)];
                    identify_check(r, g, rg, x, y);
                }
                ++graph_no;
            }
        }
    }
    long done = 0;
    while (done < samples) {
        GraphSpec s;
        s.kind = GraphKind::Admg;
        s.n_nodes = 5;
        s.n_edges = 4 + static_cast<int>(rng.below(7));
        s.n_bidirected = static_cast<int>(rng.below(static_cast<std::uint64_t>(s.n_edges) + 1));
        s.bi_ratio_cap = -1.0;
        MixedGraph g = sample_graph(s, rng);
        RefGraph rg = make_ref(g);
        int x = static_cast<int>(rng.below(5));
        int y = static_cast<int>(rng.below(5));
        if (x == y) continue;
        ++done;
        identify_check(r, g, rg, x, y);
    }
    return r;
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed, const SelftestConfig& cfg) {
    std::vector<SelftestResult> out;
    out.push_back(paths_battery(mix_seed(seed, 1), cfg.path_pairs));
    out.push_back(blocking_battery(mix_seed(seed, 2), cfg.blocking_cases));
    out.push_back(dsep_battery(mix_seed(seed, 3), cfg.dsep_cases));
    out.push_back(mec_battery(cfg.exhaustive));
    out.push_back(adjustment_battery(mix_seed(seed, 4), cfg.adjustment_cases));
    out.push_back(identify_battery(mix_seed(seed, 5), cfg.identify_samples, cfg.exhaustive));
    return out;
}

}  // namespace cgbench
