#include "cgbench/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "cgbench/errors.hpp"

namespace cgbench {
namespace {

using Pair = std::pair<int, int>;  // i < j

std::vector<Pair> all_pairs(int n) {
    std::vector<Pair> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back({i, j});
    return out;
}

// draws k distinct entries from pool, consuming it
std::vector<Pair> draw(std::vector<Pair>& pool, int k, Rng& rng) {
    std::vector<Pair> out;
    for (int t = 0; t < k; ++t) {
        std::size_t idx = static_cast<std::size_t>(rng.below(pool.size()));
        out.push_back(pool[idx]);
        pool[idx] = pool.back();
        pool.pop_back();
    }
    return out;
}

}  // namespace

int max_edges(GraphKind kind, int n_nodes) {
    if (n_nodes < 2) return 0;
    int pairs = n_nodes * (n_nodes - 1) / 2;
    return kind == GraphKind::Admg ? 2 * pairs : pairs;
}

MixedGraph sample_graph(const GraphSpec& spec, Rng& rng) {
    int n = spec.n_nodes;
    if (n < 1 || n > 26) fail(Err::InfeasibleSpec, "node count must be between 1 and 26");
    if (spec.n_edges < 0 || spec.n_bidirected < 0)
        fail(Err::InfeasibleSpec, "edge counts must be nonnegative");
    if (spec.kind != GraphKind::Admg && spec.n_bidirected != 0)
        fail(Err::InfeasibleSpec, "bidirected edges need an ADMG");
    int pairs = n * (n - 1) / 2;
    int n_bi = spec.n_bidirected;
    int n_di = spec.n_edges - n_bi;
    if (n_di < 0) fail(Err::InfeasibleSpec, "more bidirected edges than edges in total");
    if (spec.bi_ratio_cap >= 0.0 && n_bi > spec.bi_ratio_cap * n_di)
        fail(Err::InfeasibleSpec, "bidirected edges exceed the allowed share");
    if (n_bi > pairs || n_di > pairs)
        fail(Err::InfeasibleSpec, "edge count exceeds what " + std::to_string(n) + " nodes can hold");
    bool tree = spec.connected && n >= 2;
    if (tree && spec.n_edges < n - 1)
        fail(Err::InfeasibleSpec, "too few edges for a connected graph");

    std::vector<char> alphabet;
    for (char c = 'A'; c <= 'Z'; ++c) alphabet.push_back(c);
    rng.shuffle(alphabet);
    std::vector<char> labels(alphabet.begin(), alphabet.begin() + n);

    // rank that orients every directed edge of acyclic kinds
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;

    std::vector<Pair> tree_pairs;
    if (tree) {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        for (int i = 1; i < n; ++i) {
            int a = order[i], b = order[rng.below(static_cast<std::uint64_t>(i))];
            tree_pairs.push_back({std::min(a, b), std::max(a, b)});
        }
    }

    std::vector<Pair> di_pairs, bi_pairs, un_pairs;
    if (spec.kind == GraphKind::Admg) {
        int t = static_cast<int>(tree_pairs.size());
        int lo = std::max(0, t - n_di), hi = std::min(n_bi, t);
        if (lo > hi) fail(Err::InfeasibleSpec, "cannot connect the graph with these counts");
        int t_bi = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
        rng.shuffle(tree_pairs);
        for (int i = 0; i < t; ++i)
            (i < t_bi ? bi_pairs : di_pairs).push_back(tree_pairs[i]);
        // a pair may carry a directed and a bidirected edge at once, so the
        // pools only exclude pairs already holding the same category
        std::vector<Pair> free_bi = all_pairs(n), free_di = all_pairs(n);
        auto remove_from = [](std::vector<Pair>& pool, const std::vector<Pair>& used) {
            for (const Pair& p : used)
                pool.erase(std::find(pool.begin(), pool.end(), p));
        };
        remove_from(free_bi, bi_pairs);
        remove_from(free_di, di_pairs);
        for (const Pair& p : draw(free_bi, n_bi - t_bi, rng)) bi_pairs.push_back(p);
        for (const Pair& p : draw(free_di, n_di - (t - t_bi), rng)) di_pairs.push_back(p);
    } else {
        std::vector<Pair> pool = all_pairs(n);
        auto used = tree_pairs;
        for (const Pair& p : used)
            pool.erase(std::find(pool.begin(), pool.end(), p));
        for (const Pair& p : draw(pool, spec.n_edges - static_cast<int>(used.size()), rng))
            used.push_back(p);
        if (spec.kind == GraphKind::Undirected)
            un_pairs = used;
        else
            di_pairs = used;
    }

    std::vector<MixedGraph::LabelPair> directed, bidirected, undirected;
    for (const Pair& p : di_pairs) {
        int tail = p.first, head = p.second;
        if (spec.kind == GraphKind::Directed) {
            if (rng.coin()) std::swap(tail, head);
        } else if (pos[tail] > pos[head]) {
            std::swap(tail, head);
        }
        directed.push_back({labels[tail], labels[head]});
    }
    for (const Pair& p : bi_pairs) bidirected.push_back({labels[p.first], labels[p.second]});
    for (const Pair& p : un_pairs) undirected.push_back({labels[p.first], labels[p.second]});
    return MixedGraph::build(spec.kind, labels, directed, bidirected, undirected);
}

MixedGraph sample_graph(const GraphSpec& spec, std::uint64_t seed) {
    Rng rng(seed);
    return sample_graph(spec, rng);
}

}  // namespace cgbench
