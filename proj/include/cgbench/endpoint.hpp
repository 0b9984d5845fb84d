#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgbench/question.hpp"

namespace cgbench {

struct RetryPolicy {
    int attempts = 3;             // total tries, not extra retries
    double backoff_seconds = 0.5; // sleep before the second try
    double multiplier = 2.0;      // backoff growth per retry
};

struct ModelEndpoint {
    std::string name;
    std::string base_url;      // full URL of the completion endpoint
    std::string auth_env_var;  // env var holding the bearer token, may be empty
    Json request_template;     // body skeleton; "{prompt}" marks insertion points
    int max_concurrency = 4;
    double timeout_seconds = 60.0;
    RetryPolicy retry;
    std::string builtin;            // "", "oracle_mock" or "random_mock"
    std::uint64_t builtin_seed = 0; // random_mock only
};

// Accepts either a bare list of endpoint entries or {"endpoints": [...]}.
std::vector<ModelEndpoint> endpoints_from_json(const Json& j);

// Looks up by name; the two builtin names resolve even when absent from the
// list, so mock runs need no config file. Throws EndpointNotFound otherwise.
ModelEndpoint endpoint_by_name(const std::vector<ModelEndpoint>& eps, const std::string& name);

// Sends one prompt and returns the response text. Builtins answer locally
// and need the question for context; network endpoints post the filled
// request template with bearer auth from auth_env_var, retrying 429 and 5xx
// per the policy before surfacing RateLimited / HttpError / Timeout.
std::string call_model(const ModelEndpoint& ep, const std::string& prompt,
                       const QuestionInstance* inst = nullptr);

}  // namespace cgbench
