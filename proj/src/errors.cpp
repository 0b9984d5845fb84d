#include "cgbench/errors.hpp"

namespace cgbench {

const char* err_name(Err e) {
    switch (e) {
        case Err::SelfLoop: return "SelfLoop";
        case Err::DuplicateEdge: return "DuplicateEdge";
        case Err::EdgeKindMismatch: return "EdgeKindMismatch";
        case Err::UnknownEndpoint: return "UnknownEndpoint";
        case Err::CycleInDag: return "CycleInDag";
        case Err::UnknownNode: return "UnknownNode";
        case Err::NoPathExists: return "NoPathExists";
        case Err::NoCycleExists: return "NoCycleExists";
        case Err::CyclicGraph: return "CyclicGraph";
        case Err::EndpointInZ: return "EndpointInZ";
        case Err::InvalidPath: return "InvalidPath";
        case Err::Unblockable: return "Unblockable";
        case Err::NodeSetMismatch: return "NodeSetMismatch";
        case Err::NoBackdoorPath: return "NoBackdoorPath";
        case Err::WrongGraphKind: return "WrongGraphKind";
        case Err::InfeasibleSpec: return "InfeasibleSpec";
        case Err::UnsupportedPair: return "UnsupportedPair";
        case Err::ExhaustedRetries: return "ExhaustedRetries";
        case Err::ConfigInvalid: return "ConfigInvalid";
        case Err::MissingDefinition: return "MissingDefinition";
        case Err::InsufficientShots: return "InsufficientShots";
        case Err::Timeout: return "Timeout";
        case Err::AuthMissing: return "AuthMissing";
        case Err::HttpError: return "HttpError";
        case Err::RateLimited: return "RateLimited";
        case Err::UnknownQuestionId: return "UnknownQuestionId";
        case Err::MissingStyleRun: return "MissingStyleRun";
        case Err::EndpointNotFound: return "EndpointNotFound";
        case Err::ParseError: return "ParseError";
        case Err::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace cgbench
