#ifndef M22_ERRORS_HPP
#define M22_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace m22 {

// Input could not be parsed (bad JSON, bad graph6, malformed trace).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called outside its contract (unknown vertex, edge
// missing, wrong degree, size cap exceeded, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural guarantee failed on a concrete instance. This firing is
// itself a bug (or a counterexample) and carries the offending graph as
// JSON so it can be inspected.
struct TheoremViolation : std::runtime_error {
    std::string graph_json;
    TheoremViolation(const std::string& msg, std::string graph)
        : std::runtime_error(msg), graph_json(std::move(graph)) {}
};

}  // namespace m22

#endif
