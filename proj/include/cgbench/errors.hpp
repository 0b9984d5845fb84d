#pragma once

#include <stdexcept>
#include <string>

namespace cgbench {

// Every failure the library can signal, by name. The CLI maps these to
// nonzero exit codes; tests match on the code rather than the message.
enum class Err {
    // graph construction
    SelfLoop,
    DuplicateEdge,
    EdgeKindMismatch,
    UnknownEndpoint,
    CycleInDag,
    // queries
    UnknownNode,
    NoPathExists,
    NoCycleExists,
    CyclicGraph,
    EndpointInZ,
    InvalidPath,
    Unblockable,
    NodeSetMismatch,
    NoBackdoorPath,
    WrongGraphKind,
    // generation
    InfeasibleSpec,
    UnsupportedPair,
    ExhaustedRetries,
    ConfigInvalid,
    MissingDefinition,
    InsufficientShots,
    // evaluation
    Timeout,
    AuthMissing,
    HttpError,
    RateLimited,
    UnknownQuestionId,
    MissingStyleRun,
    EndpointNotFound,
    // cli / io
    ParseError,
    IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace cgbench
