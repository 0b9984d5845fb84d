#include "cgbench/endpoint.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "cgbench/errors.hpp"
#include "cgbench/prompt.hpp"
#include "cgbench/rng.hpp"
#include "cgbench/tasks.hpp"

namespace cgbench {

namespace {

Json default_request_template(const std::string& model) {
    return Json{{"model", model},
                {"messages", Json::array({Json{{"role", "user"}, {"content", "{prompt}"}}})}};
}

ModelEndpoint parse_endpoint(const Json& e, std::size_t idx) {
    std::string where = "endpoints[" + std::to_string(idx) + "]";
    if (!e.is_object()) fail(Err::ConfigInvalid, where + " must be an object");
    ModelEndpoint ep;
    if (!e.contains("name") || !e.at("name").is_string() ||
        e.at("name").get<std::string>().empty())
        fail(Err::ConfigInvalid, where + ".name is required");
    ep.name = e.at("name").get<std::string>();
    if (e.contains("builtin")) {
        ep.builtin = e.at("builtin").get<std::string>();
        if (ep.builtin != "oracle_mock" && ep.builtin != "random_mock")
            fail(Err::ConfigInvalid, where + ".builtin must be oracle_mock or random_mock");
        if (e.contains("seed")) ep.builtin_seed = e.at("seed").get<std::uint64_t>();
        return ep;
    }
    if (!e.contains("base_url") || !e.at("base_url").is_string())
        fail(Err::ConfigInvalid, where + ".base_url is required for network endpoints");
    ep.base_url = e.at("base_url").get<std::string>();
    if (e.contains("auth_env_var")) ep.auth_env_var = e.at("auth_env_var").get<std::string>();
    ep.request_template = e.contains("request_template") ? e.at("request_template")
                                                         : default_request_template(ep.name);
    if (e.contains("max_concurrency")) {
        ep.max_concurrency = e.at("max_concurrency").get<int>();
        if (ep.max_concurrency < 1)
            fail(Err::ConfigInvalid, where + ".max_concurrency must be at least 1");
    }
    if (e.contains("timeout_seconds")) {
        ep.timeout_seconds = e.at("timeout_seconds").get<double>();
        if (ep.timeout_seconds <= 0)
            fail(Err::ConfigInvalid, where + ".timeout_seconds must be positive");
    }
    if (e.contains("retry")) {
        const Json& r = e.at("retry");
        if (r.contains("attempts")) ep.retry.attempts = r.at("attempts").get<int>();
        if (r.contains("backoff_seconds"))
            ep.retry.backoff_seconds = r.at("backoff_seconds").get<double>();
        if (r.contains("multiplier")) ep.retry.multiplier = r.at("multiplier").get<double>();
        if (ep.retry.attempts < 1) fail(Err::ConfigInvalid, where + ".retry.attempts must be >= 1");
    }
    return ep;
}

}  // namespace

std::vector<ModelEndpoint> endpoints_from_json(const Json& j) {
    const Json* list = &j;
    if (j.is_object()) {
        if (!j.contains("endpoints"))
            fail(Err::ConfigInvalid, "endpoint config needs an \"endpoints\" list");
        list = &j.at("endpoints");
    }
    if (!list->is_array()) fail(Err::ConfigInvalid, "endpoints must be a list");
    std::vector<ModelEndpoint> out;
    for (std::size_t i = 0; i < list->size(); ++i) out.push_back(parse_endpoint((*list)[i], i));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t k = i + 1; k < out.size(); ++k)
            if (out[i].name == out[k].name)
                fail(Err::ConfigInvalid, "duplicate endpoint name '" + out[i].name + "'");
    return out;
}

ModelEndpoint endpoint_by_name(const std::vector<ModelEndpoint>& eps, const std::string& name) {
    for (const ModelEndpoint& ep : eps)
        if (ep.name == name) return ep;
    if (name == "oracle_mock" || name == "random_mock") {
        ModelEndpoint ep;
        ep.name = name;
        ep.builtin = name;
        return ep;
    }
    fail(Err::EndpointNotFound, "no endpoint named '" + name + "'");
}

namespace {

std::string mock_response(const ModelEndpoint& ep, const QuestionInstance& inst) {
    if (ep.builtin == "oracle_mock") return "Answer: " + ground_truth_answer_text(inst);
    Rng rng(mix_seed(ep.builtin_seed, fnv1a(inst.id)));
    switch (inst.qtype) {
        case QType::YesNo:
        case QType::Exist: return rng.coin() ? "Answer: Yes" : "Answer: No";
        case QType::ChooseSet: return std::string("Answer: ") + char('A' + rng.below(4));
        case QType::HowMany: return "Answer: " + std::to_string(rng.below(16));
        default: return "Answer: none";
    }
}

void substitute_prompt(Json& node, const std::string& prompt) {
    if (node.is_string()) {
        std::string s = node.get<std::string>();
        std::size_t at = s.find("{prompt}");
        if (at == std::string::npos) return;
        std::string out;
        std::size_t from = 0;
        while (at != std::string::npos) {
            out += s.substr(from, at - from);
            out += prompt;
            from = at + 8;
            at = s.find("{prompt}", from);
        }
        out += s.substr(from);
        node = out;
        return;
    }
    if (node.is_object() || node.is_array())
        for (auto& child : node) substitute_prompt(child, prompt);
}

// pulls the completion text out of the common response layouts, falling back
// to the raw body for anything unrecognized
std::string response_text_of(const std::string& body) {
    Json j = Json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return body;
    if (j.contains("choices") && j.at("choices").is_array() && !j.at("choices").empty()) {
        const Json& c = j.at("choices")[0];
        if (c.contains("message") && c.at("message").contains("content") &&
            c.at("message").at("content").is_string())
            return c.at("message").at("content").get<std::string>();
        if (c.contains("text") && c.at("text").is_string()) return c.at("text").get<std::string>();
    }
    if (j.contains("content") && j.at("content").is_array() && !j.at("content").empty()) {
        const Json& c = j.at("content")[0];
        if (c.contains("text") && c.at("text").is_string()) return c.at("text").get<std::string>();
    }
    for (const char* key : {"completion", "text", "output"})
        if (j.contains(key) && j.at(key).is_string()) return j.at(key).get<std::string>();
    return body;
}

struct UrlParts {
    std::string origin;  // scheme://host[:port]
    std::string path;
};

UrlParts split_url(const std::string& url) {
    std::size_t scheme = url.find("://");
    if (scheme == std::string::npos) fail(Err::ConfigInvalid, "base_url needs a scheme: " + url);
    std::size_t slash = url.find('/', scheme + 3);
    if (slash == std::string::npos) return {url, "/"};
    return {url.substr(0, slash), url.substr(slash)};
}

bool timeout_error(httplib::Error e) {
    return e == httplib::Error::ConnectionTimeout || e == httplib::Error::Read ||
           e == httplib::Error::Write;
}

}  // namespace

std::string call_model(const ModelEndpoint& ep, const std::string& prompt,
                       const QuestionInstance* inst) {
    if (!ep.builtin.empty()) {
        if (!inst)
            fail(Err::ConfigInvalid, ep.builtin + " needs the question instance for context");
        return mock_response(ep, *inst);
    }

    UrlParts url = split_url(ep.base_url);
    httplib::Headers headers;
    if (!ep.auth_env_var.empty()) {
        const char* token = std::getenv(ep.auth_env_var.c_str());
        if (!token || !*token)
            fail(Err::AuthMissing, "environment variable " + ep.auth_env_var + " is not set");
        headers.emplace("Authorization", std::string("Bearer ") + token);
    }
    Json body_json = ep.request_template;
    substitute_prompt(body_json, prompt);
    std::string body = body_json.dump();

    auto stamp = [](double seconds) {
        time_t whole = static_cast<time_t>(seconds);
        time_t micros = static_cast<time_t>((seconds - static_cast<double>(whole)) * 1e6);
        return std::make_pair(whole, micros);
    };

    for (int attempt = 0;; ++attempt) {
        httplib::Client cli(url.origin);
        auto [sec, usec] = stamp(ep.timeout_seconds);
        cli.set_connection_timeout(sec, usec);
        cli.set_read_timeout(sec, usec);
        cli.set_write_timeout(sec, usec);

        httplib::Result res = cli.Post(url.path, headers, body, "application/json");
        bool last = attempt + 1 >= ep.retry.attempts;
        if (res && res->status >= 200 && res->status < 300) return response_text_of(res->body);

        if (last) {
            if (!res) {
                if (timeout_error(res.error()))
                    fail(Err::Timeout, ep.name + ": no response within " +
                                           std::to_string(ep.timeout_seconds) + "s");
                fail(Err::HttpError, ep.name + ": " + httplib::to_string(res.error()));
            }
            if (res->status == 429)
                fail(Err::RateLimited, ep.name + ": still rate limited after " +
                                           std::to_string(ep.retry.attempts) + " attempts");
            fail(Err::HttpError,
                 ep.name + ": HTTP " + std::to_string(res->status) + " from " + ep.base_url);
        }
        // client errors other than 429 will not improve on retry
        if (res && res->status >= 400 && res->status < 500 && res->status != 429)
            fail(Err::HttpError,
                 ep.name + ": HTTP " + std::to_string(res->status) + " from " + ep.base_url);

        double sleep_s = ep.retry.backoff_seconds * std::pow(ep.retry.multiplier, attempt);
        std::this_thread::sleep_for(std::chrono::duration<double>(sleep_s));
    }
}

}  // namespace cgbench
