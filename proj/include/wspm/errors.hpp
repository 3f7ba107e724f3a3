#pragma once

#include <stdexcept>
#include <string>

namespace wspm {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InputError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("parse error at line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct BadParamsError : Error {
    using Error::Error;
};

struct NotCubicError : Error {
    int vertex;
    int degree;
    NotCubicError(int vertex_, int degree_)
        : Error("vertex " + std::to_string(vertex_) + " has degree " + std::to_string(degree_) +
                ", expected 3"),
          vertex(vertex_),
          degree(degree_) {}
};

struct DeadEdgeError : Error {
    explicit DeadEdgeError(int edge) : Error("edge " + std::to_string(edge) + " is not live") {}
};

struct SameVertexError : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    using Error::Error;
};

struct HasBridgeError : Error {
    int edge;
    explicit HasBridgeError(int edge_)
        : Error("graph has a bridge (edge " + std::to_string(edge_) + ")"), edge(edge_) {}
};

struct ComponentCountMismatchError : Error {
    int components;
    explicit ComponentCountMismatchError(int components_)
        : Error("expected exactly 2 components, found " + std::to_string(components_)),
          components(components_) {}
};

struct NotTwoCutError : Error {
    using Error::Error;
};

struct LoopWouldFormError : Error {
    using Error::Error;
};

struct NotDegree2Error : Error {
    using Error::Error;
};

struct NotCactusCutError : Error {
    using Error::Error;
};

struct NotCactusError : Error {
    using Error::Error;
};

struct RepresentationGapError : Error {
    using Error::Error;
};

struct AgreementViolatedError : Error {
    using Error::Error;
};

struct NoWspmError : Error {
    using Error::Error;
};

struct BudgetExceededError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    int cap;
    explicit TooLargeError(int cap_)
        : Error("input exceeds enumeration cap " + std::to_string(cap_)), cap(cap_) {}
};

}  // namespace wspm
