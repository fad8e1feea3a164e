#include "dhg/error.hpp"

namespace dhg {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyTail: return "EmptyTail";
    case ErrorCode::EmptyHead: return "EmptyHead";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DoubleInit: return "DoubleInit";
    case ErrorCode::MergeSameClass: return "MergeSameClass";
    case ErrorCode::NotRepresentative: return "NotRepresentative";
    case ErrorCode::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorCode::CyclicHypergraph: return "CyclicHypergraph";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::UnusedVariable: return "UnusedVariable";
    case ErrorCode::DuplicateSet: return "DuplicateSet";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace dhg
