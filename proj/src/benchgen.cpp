#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cgbench/benchgen.hpp"
#include "cgbench/errors.hpp"
#include "cgbench/rng.hpp"
#include "cgbench/sampling.hpp"
#include "src/qgen.hpp"

namespace cgbench {

GenConfig::GenConfig() {
    for (int t = 0; t < kTaskCount; ++t)
        for (int q = 0; q < kQTypeCount; ++q)
            counts[t][q] = default_count(static_cast<Task>(t), static_cast<QType>(q));
}

GenConfig GenConfig::zeros() {
    GenConfig c;
    for (auto& row : c.counts)
        for (int& n : row) n = 0;
    return c;
}

int GenConfig::at(Task t, QType q) const {
    return counts[static_cast<int>(t)][static_cast<int>(q)];
}

void GenConfig::set(Task t, QType q, int n) {
    counts[static_cast<int>(t)][static_cast<int>(q)] = n;
}

int GenConfig::total() const {
    int sum = 0;
    for (const auto& row : counts)
        for (int n : row) sum += n;
    return sum;
}

GenConfig GenConfig::from_json(const Json& j) {
    if (!j.is_object()) fail(Err::ConfigInvalid, "config root must be an object");
    if (!j.contains("counts")) return GenConfig();
    const Json& c = j.at("counts");
    if (!c.is_object()) fail(Err::ConfigInvalid, "counts must map task codes to objects");
    GenConfig out = zeros();
    for (auto it = c.begin(); it != c.end(); ++it) {
        Task t = task_from_code(it.key());
        if (!it.value().is_object())
            fail(Err::ConfigInvalid, "counts." + it.key() + " must map question types to numbers");
        for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
            QType q = qtype_from_code(jt.key());
            if (!jt.value().is_number_integer())
                fail(Err::ConfigInvalid,
                     "counts." + it.key() + "." + jt.key() + " must be an integer");
            int n = jt.value().get<int>();
            if (n < 0)
                fail(Err::ConfigInvalid, "counts." + it.key() + "." + jt.key() + " is negative");
            if (n > 0 && !pair_allowed(t, q))
                fail(Err::ConfigInvalid,
                     it.key() + "." + jt.key() + " is not a supported combination");
            out.set(t, q, n);
        }
    }
    return out;
}

Json GenConfig::to_json() const {
    Json c = Json::object();
    for (int t = 0; t < kTaskCount; ++t) {
        Json row = Json::object();
        for (int q = 0; q < kQTypeCount; ++q)
            if (counts[t][q] > 0) row[qtype_code(static_cast<QType>(q))] = counts[t][q];
        if (!row.empty()) c[task_code(static_cast<Task>(t))] = row;
    }
    return Json{{"counts", c}};
}

QuestionInstance make_question(const MixedGraph& g, Task t, QType q, std::uint64_t seed,
                               int variant) {
    if (!pair_allowed(t, q))
        fail(Err::UnsupportedPair,
             std::string(task_code(t)) + " has no " + qtype_code(q) + " questions");
    QuestionInstance out;
    out.task = t;
    out.qtype = q;
    out.seed = seed;
    out.graph_json = graph_to_json(g);
    Rng rng(mix_seed(seed, 0x71));
    qgen::Build b{g, rng, q, variant, out};
    switch (t) {
        case Task::SN: qgen::build_sn(b); break;
        case Task::SE: qgen::build_se(b); break;
        case Task::NR2: qgen::build_nr2(b); break;
        case Task::NR3: qgen::build_nr3(b); break;
        case Task::PT: qgen::build_pt(b); break;
        case Task::CL: qgen::build_cl(b); break;
        case Task::TO: qgen::build_to(b); break;
        case Task::BLP: qgen::build_blp(b); break;
        case Task::DS: qgen::build_ds(b); break;
        case Task::MEC: qgen::build_mec(b); break;
        case Task::MB: qgen::build_mb(b); break;
        case Task::DP: qgen::build_dp(b); break;
        case Task::BKP: qgen::build_bkp(b); break;
        case Task::CC: qgen::build_cc(b); break;
        case Task::CT: qgen::build_ct(b); break;
        case Task::CF: qgen::build_cf(b); break;
        case Task::MRS: qgen::build_mrs(b); break;
        case Task::BAS: qgen::build_bas(b); break;
        case Task::FAS: qgen::build_fas(b); break;
        case Task::CEI: qgen::build_cei(b); break;
    }
    return out;
}

namespace {

struct WorkItem {
    Task t;
    QType q;
    int slot;
    int count;
};

int slot_nv(Task t, int slot) {
    if (t == Task::CT || t == Task::CF) return 4 + slot % 3;
    return 4 + slot % 6;
}

GraphKind slot_kind(Task t, int slot) {
    switch (t) {
        case Task::SN:
        case Task::SE:
            return (slot / 2) % 2 == 0 ? GraphKind::Undirected : GraphKind::Directed;
        case Task::PT:
            return (slot / 2) % 2 == 0 ? GraphKind::Undirected : GraphKind::Dag;
        case Task::CL:
            return GraphKind::Directed;
        case Task::CC:
        case Task::CT:
        case Task::CF:
        case Task::MRS:
        case Task::FAS:
        case Task::CEI:
            return GraphKind::Admg;
        default:
            return GraphKind::Dag;
    }
}

// The variant channel carries whatever the cell flips over: the phrasing
// form for FindOne, the is/is-not polarity for name/edge choices, the
// wanted verdict for YesNo/Exist.
int slot_variant(Task t, QType q, int slot) {
    switch (q) {
        case QType::FindOne:
            return (slot / 6) % std::max(1, variant_count(t, q));
        case QType::ChooseSet:
            return (t == Task::SN || t == Task::SE) ? slot % 2 : 0;
        case QType::YesNo:
            // a whole-graph C-component can only fit the edge budget at
            // four nodes, so only those slots aim for yes
            if (t == Task::CC) return slot % 6 == 0 ? 1 : 0;
            return slot % 2 == 0 ? 1 : 0;
        case QType::Exist:
            return slot % 2 == 0 ? 1 : 0;
        default:
            return 0;
    }
}

// evenly spaced edge counts across the slots that share a node count
int slot_ne(int slot, int count, int period, int lo, int hi) {
    if (hi < lo) hi = lo;
    int per = count / period, extra = count % period;
    int m = per + (slot % period < extra ? 1 : 0);
    int k = slot / period;
    if (m <= 1) return (lo + hi) / 2;
    return lo + static_cast<int>(std::lround(static_cast<double>(k) * (hi - lo) / (m - 1)));
}

std::vector<char> draw_labels(int n, Rng& rng) {
    std::vector<char> a;
    for (char c = 'A'; c <= 'Z'; ++c) a.push_back(c);
    rng.shuffle(a);
    a.resize(static_cast<std::size_t>(n));
    return a;
}

// a directed cycle of random length plus tree attachments and filler edges
MixedGraph cyclic_graph(int n_v, int n_e, Rng& rng) {
    std::vector<char> l = draw_labels(n_v, rng);
    int cl = n_v > 3 ? 3 + static_cast<int>(rng.below(static_cast<std::uint32_t>(n_v - 2))) : 3;
    std::vector<MixedGraph::LabelPair> e;
    auto linked = [&](char a, char b) {
        for (const auto& p : e)
            if ((p.first == a && p.second == b) || (p.first == b && p.second == a)) return true;
        return false;
    };
    for (int i = 0; i < cl; ++i) e.push_back({l[static_cast<std::size_t>(i)],
                                              l[static_cast<std::size_t>((i + 1) % cl)]});
    for (int i = cl; i < n_v; ++i) {
        char other = l[rng.below(static_cast<std::uint32_t>(i))];
        if (rng.coin())
            e.push_back({l[static_cast<std::size_t>(i)], other});
        else
            e.push_back({other, l[static_cast<std::size_t>(i)]});
    }
    int extra = n_e - n_v;
    for (int k = 0; k < extra; ++k) {
        bool placed = false;
        for (int t = 0; t < 200 && !placed; ++t) {
            char a = l[rng.below(static_cast<std::uint32_t>(n_v))];
            char b = l[rng.below(static_cast<std::uint32_t>(n_v))];
            if (a != b && !linked(a, b)) {
                e.push_back({a, b});
                placed = true;
            }
        }
        if (!placed) {
            for (char a : l)
                for (char b : l)
                    if (!placed && a != b && !linked(a, b)) {
                        e.push_back({a, b});
                        placed = true;
                    }
        }
    }
    return MixedGraph::build(GraphKind::Directed, l, e);
}

MixedGraph acyclic_directed(int n_v, int n_e, Rng& rng) {
    GraphSpec s;
    s.kind = GraphKind::Dag;
    s.n_nodes = n_v;
    s.n_edges = n_e;
    MixedGraph d = sample_graph(s, rng);
    std::vector<MixedGraph::LabelPair> e;
    for (auto [u, v] : d.directed()) e.push_back({d.label(u), d.label(v)});
    return MixedGraph::build(GraphKind::Directed, d.labels(), e);
}

// Directed part points each node at an earlier one (an in-tree, so nobody
// has two children), bidirected part spans everything. The form knob breaks
// exactly one property: 0 keeps all of them, 1 leaves a second childless
// node, 2 gives one node two children, 3 splits the bidirected part.
MixedGraph ctree_graph(int n_v, int form, Rng& rng) {
    std::vector<char> l = draw_labels(n_v, rng);
    std::vector<MixedGraph::LabelPair> di, bi;
    int second_target = 0;
    for (int i = 1; i < n_v; ++i) {
        if ((form == 1 || form == 2) && i == n_v - 1) continue;
        int j = static_cast<int>(rng.below(static_cast<std::uint32_t>(i)));
        if (i == 2) second_target = j == 0 ? 1 : 0;
        di.push_back({l[static_cast<std::size_t>(i)], l[static_cast<std::size_t>(j)]});
    }
    if (form == 2)
        di.push_back({l[2], l[static_cast<std::size_t>(second_target)]});
    if (form == 3) {
        int h = n_v / 2;
        for (int i = 1; i < h; ++i)
            bi.push_back({l[static_cast<std::size_t>(i)],
                          l[rng.below(static_cast<std::uint32_t>(i))]});
        for (int i = h + 1; i < n_v; ++i)
            bi.push_back({l[static_cast<std::size_t>(i)],
                          l[static_cast<std::size_t>(h + static_cast<int>(rng.below(
                                                             static_cast<std::uint32_t>(i - h))))]});
    } else {
        for (int i = 1; i < n_v; ++i)
            bi.push_back({l[static_cast<std::size_t>(i)],
                          l[rng.below(static_cast<std::uint32_t>(i))]});
    }
    return MixedGraph::build(GraphKind::Admg, l, di, bi);
}

// complete directed order plus a spanning bidirected tree: the densest
// four-node graph that is one C-component inside the edge budget
MixedGraph whole_component_graph(Rng& rng) {
    std::vector<char> l = draw_labels(4, rng);
    std::vector<MixedGraph::LabelPair> di, bi;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            di.push_back({l[static_cast<std::size_t>(i)], l[static_cast<std::size_t>(j)]});
    for (int i = 1; i < 4; ++i)
        bi.push_back({l[static_cast<std::size_t>(i)], l[rng.below(static_cast<std::uint32_t>(i))]});
    return MixedGraph::build(GraphKind::Admg, l, di, bi);
}

// DAG draw with one confounding arc dropped onto an existing edge; that bow
// makes the covered effect non-identifiable no matter what else is added
MixedGraph bowed_graph(int n_v, int n_e, Rng& rng) {
    int bi_cap = std::min(n_e / 3, n_e - (n_v - 1));
    int bi_n = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(bi_cap)));
    GraphSpec s;
    s.kind = GraphKind::Dag;
    s.n_nodes = n_v;
    s.n_edges = n_e - bi_n;
    MixedGraph d = sample_graph(s, rng);
    std::vector<MixedGraph::LabelPair> di, bi;
    for (auto [u, v] : d.directed()) di.push_back({d.label(u), d.label(v)});
    bi.push_back(di[rng.below(static_cast<std::uint32_t>(di.size()))]);
    auto seen = [&](char a, char b) {
        for (const auto& p : bi)
            if ((p.first == a && p.second == b) || (p.first == b && p.second == a)) return true;
        return false;
    };
    std::vector<char> l = d.labels();
    for (int k = 1; k < bi_n; ++k) {
        for (int t = 0; t < 200; ++t) {
            char a = l[rng.below(static_cast<std::uint32_t>(l.size()))];
            char b = l[rng.below(static_cast<std::uint32_t>(l.size()))];
            if (a != b && !seen(a, b)) {
                bi.push_back({a, b});
                break;
            }
        }
    }
    return MixedGraph::build(GraphKind::Admg, l, di, bi);
}

// x -> m -> y with x <-> y, remaining nodes chained off y. Filler edges
// jump forward past the chain, never into {x, m, y}, which keeps {m} a
// working frontdoor set for (x, y).
MixedGraph frontdoor_graph(int n_v, int n_e, Rng& rng) {
    std::vector<char> l = draw_labels(n_v, rng);
    std::vector<MixedGraph::LabelPair> di, bi;
    di.push_back({l[0], l[1]});
    di.push_back({l[1], l[2]});
    bi.push_back({l[0], l[2]});
    for (int i = 3; i < n_v; ++i)
        di.push_back({l[static_cast<std::size_t>(i - 1)], l[static_cast<std::size_t>(i)]});
    std::vector<MixedGraph::LabelPair> fill;
    for (int i = 0; i < n_v; ++i)
        for (int j = i + 2; j < n_v; ++j)
            if (!(i == 0 && j == 2))
                fill.push_back({l[static_cast<std::size_t>(i)], l[static_cast<std::size_t>(j)]});
    rng.shuffle(fill);
    for (int k = n_e - n_v; k > 0 && !fill.empty(); --k) {
        di.push_back(fill.back());
        fill.pop_back();
    }
    return MixedGraph::build(GraphKind::Admg, l, di, bi);
}

MixedGraph plain_graph(GraphKind kind, int n_v, int n_e, int n_bi, Rng& rng) {
    GraphSpec s;
    s.kind = kind;
    s.n_nodes = n_v;
    s.n_edges = n_e;
    s.n_bidirected = n_bi;
    return sample_graph(s, rng);
}

MixedGraph task_graph(Task t, QType q, int slot, int count, int variant, int attempt,
                      std::uint64_t seed) {
    Rng rng(seed);
    int n_v = slot_nv(t, slot);
    GraphKind kind = slot_kind(t, slot);
    int pairs = n_v * (n_v - 1) / 2;
    int lo = n_v - 1;
    int hi = std::min(10, pairs);
    bool want = variant == 1;
    switch (t) {
        case Task::CT:
            return ctree_graph(n_v, want ? 0 : 1 + (slot / 2) % 3, rng);
        case Task::CF:
            if (want) return ctree_graph(n_v, (slot / 2) % 2, rng);
            return ctree_graph(n_v, 2 + (slot / 2) % 2, rng);
        case Task::CC: {
            if (q == QType::YesNo && want) return whole_component_graph(rng);
            int n_e = slot_ne(slot, count, 6, lo, hi);
            int cap = n_e / 3;
            // YesNo misses keep the bidirected part one edge short of
            // spanning, which decides the verdict by counting alone
            if (q == QType::YesNo) cap = std::min(cap, n_v - 2);
            int n_bi = cap > 0 ? static_cast<int>(rng.below(static_cast<std::uint32_t>(cap + 1)))
                               : 0;
            return plain_graph(kind, n_v, n_e, n_bi, rng);
        }
        case Task::CL: {
            bool cyclic = q == QType::FindOne || q == QType::ChooseSet || want;
            int n_e = slot_ne(slot, count, 6, cyclic ? n_v : lo, hi);
            return cyclic ? cyclic_graph(n_v, n_e, rng) : acyclic_directed(n_v, n_e, rng);
        }
        case Task::CEI: {
            int n_e = slot_ne(slot, count, 6, n_v, hi);
            if (!want) return bowed_graph(n_v, n_e, rng);
            int n_bi = attempt < 8
                           ? static_cast<int>(rng.below(static_cast<std::uint32_t>(n_e / 3 + 1)))
                           : 0;
            return plain_graph(kind, n_v, n_e, n_bi, rng);
        }
        case Task::FAS: {
            int n_e = slot_ne(slot, count, 6, n_v, hi);
            if (attempt >= 4 && (q != QType::Exist || want))
                return frontdoor_graph(n_v, n_e, rng);
            int n_bi = static_cast<int>(rng.below(static_cast<std::uint32_t>(n_e / 3 + 1)));
            return plain_graph(kind, n_v, n_e, n_bi, rng);
        }
        case Task::SE:
            if (q == QType::ChooseSet || q == QType::YesNo) hi = std::min(hi, pairs - 3);
            return plain_graph(kind, n_v, slot_ne(slot, count, 6, lo, hi), 0, rng);
        case Task::DS:
            hi = std::min(hi, pairs - 1);
            return plain_graph(kind, n_v, slot_ne(slot, count, 6, lo, hi), 0, rng);
        case Task::MRS: {
            int n_e = slot_ne(slot, count, 6, lo, hi);
            int n_bi = static_cast<int>(rng.below(static_cast<std::uint32_t>(n_e / 3 + 1)));
            return plain_graph(kind, n_v, n_e, n_bi, rng);
        }
        default:
            return plain_graph(kind, n_v, slot_ne(slot, count, 6, lo, hi), 0, rng);
    }
}

QuestionInstance build_instance(const WorkItem& it, std::uint64_t inst_seed) {
    int variant = slot_variant(it.t, it.q, it.slot);
    for (int attempt = 0;; ++attempt) {
        std::uint64_t gseed = mix_seed(inst_seed, 2 * static_cast<std::uint64_t>(attempt));
        std::uint64_t qseed = mix_seed(inst_seed, 2 * static_cast<std::uint64_t>(attempt) + 1);
        try {
            MixedGraph g = task_graph(it.t, it.q, it.slot, it.count, variant, attempt, gseed);
            QuestionInstance q = make_question(g, it.t, it.q, qseed, variant);
            q.id = std::string(task_code(it.t)) + "-" + qtype_code(it.q) + "-" +
                   std::to_string(it.slot + 1);
            return q;
        } catch (const Error& e) {
            if (e.code() != Err::ExhaustedRetries || attempt >= 199) throw;
        }
    }
}

}  // namespace

Benchmark generate_benchmark(const GenConfig& cfg, std::uint64_t master_seed, int workers) {
    std::vector<WorkItem> items;
    for (int ti = 0; ti < kTaskCount; ++ti)
        for (int qi = 0; qi < kQTypeCount; ++qi) {
            Task t = static_cast<Task>(ti);
            QType q = static_cast<QType>(qi);
            int c = cfg.counts[ti][qi];
            if (c < 0) fail(Err::ConfigInvalid, "negative count configured");
            if (c > 0 && !pair_allowed(t, q))
                fail(Err::ConfigInvalid, std::string(task_code(t)) + "." + qtype_code(q) +
                                             " is not a supported combination");
            for (int s = 0; s < c; ++s) items.push_back({t, q, s, c});
        }

    std::vector<QuestionInstance> qs(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size() || failed.load()) return;
            try {
                qs[i] = build_instance(items[i], mix_seed(master_seed, i));
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    int w = std::clamp(workers, 1, 64);
    if (w == 1 || items.size() < 2) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < w; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    Benchmark out;
    out.questions = std::move(qs);
    Json counts = Json::object();
    for (int ti = 0; ti < kTaskCount; ++ti) {
        Json row = Json::object();
        for (int qi = 0; qi < kQTypeCount; ++qi)
            if (cfg.counts[ti][qi] > 0)
                row[qtype_code(static_cast<QType>(qi))] = cfg.counts[ti][qi];
        if (!row.empty()) counts[task_code(static_cast<Task>(ti))] = row;
    }
    out.manifest = Json{{"master_seed", master_seed},
                        {"total", out.questions.size()},
                        {"counts", counts},
                        {"digest", benchmark_digest(out.questions)}};
    return out;
}

std::string benchmark_digest(const std::vector<QuestionInstance>& qs) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const QuestionInstance& q : qs) {
        std::string line = q.to_json().dump();
        line += '\n';
        for (char c : line) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cgbench
