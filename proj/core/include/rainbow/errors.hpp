#ifndef RAINBOW_ERRORS_HPP
#define RAINBOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rainbow {

struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotATree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VertexOutsideTree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ForestNotMaximal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TreeEdgeNotMappable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoTreeVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VertexNotInB1 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SkeletonInvariantViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PaletteMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural precondition of the strongest construction failed at run time
/// (possible when a heuristic forest or an unexpected skeleton is supplied).
/// Carries the id of the failed check so callers can report it and fall back.
struct LemmaViolation : std::runtime_error {
    std::string check_id;
    LemmaViolation(std::string id, const std::string& what)
        : std::runtime_error("check '" + id + "' failed: " + what), check_id(std::move(id)) {}
};

/// Internal consistency failure: a state the algorithms should never reach.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rainbow

#endif
