#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgbench/question.hpp"
#include "cgbench/tasks.hpp"

namespace cgbench {

// Per-cell instance counts. Default-constructed configs carry the stock
// benchmark sizes; a config file with a "counts" key starts from all zeros
// and fills in only the listed cells.
struct GenConfig {
    int counts[kTaskCount][kQTypeCount];

    GenConfig();
    static GenConfig zeros();
    static GenConfig from_json(const Json& j);
    Json to_json() const;

    int at(Task t, QType q) const;
    void set(Task t, QType q, int n);
    int total() const;
};

// Builds a single question of the given family on a caller-supplied graph.
// The variant index selects the phrasing form for FindOne cells, the
// polarity for choice cells, and the wanted verdict (1 = yes) for
// YesNo/Exist cells. Throws UnsupportedPair for combinations that do not
// exist and ExhaustedRetries when the graph cannot host the request.
QuestionInstance make_question(const MixedGraph& g, Task t, QType q, std::uint64_t seed,
                               int variant = 0);

struct Benchmark {
    std::vector<QuestionInstance> questions;
    Json manifest;
};

// Generates every configured instance. The result depends only on (config,
// master_seed); the worker count changes wall time, never bytes.
Benchmark generate_benchmark(const GenConfig& cfg, std::uint64_t master_seed, int workers = 1);

// FNV-1a over the serialized question lines, as 16 hex digits
std::string benchmark_digest(const std::vector<QuestionInstance>& qs);

}  // namespace cgbench
