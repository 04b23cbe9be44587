#ifndef FLOWROOTS_ERRORS_HPP
#define FLOWROOTS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flowroots {

// Base class for all library errors. Subcommands map these to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedInput : Error {
    std::size_t byte_offset;
    MalformedInput(const std::string& what, std::size_t offset)
        : Error(what + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
};

struct UnknownEdge : Error {
    int edge_id;
    explicit UnknownEdge(int id) : Error("unknown edge id " + std::to_string(id)), edge_id(id) {}
};

struct Disconnected : Error {
    Disconnected() : Error("graph is disconnected") {}
};

struct HasBridge : Error {
    int edge_id;
    explicit HasBridge(int id) : Error("graph has a bridge (edge " + std::to_string(id) + ")"), edge_id(id) {}
};

struct NotThreeEdgeConnected : Error {
    NotThreeEdgeConnected() : Error("graph is not 3-edge-connected") {}
};

struct NotMonic : Error {
    NotMonic() : Error("polynomial is not monic up to sign") {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct NotAFlat : Error {
    NotAFlat() : Error("set is not a flat of the matroid") {}
};

struct GlueNotPresent : Error {
    explicit GlueNotPresent(const std::string& what) : Error(what) {}
};

struct NotAProperCutset : Error {
    explicit NotAProperCutset(const std::string& what) : Error(what) {}
};

struct InvalidScript : Error {
    std::size_t line_no;
    InvalidScript(const std::string& what, std::size_t line)
        : Error(what + " (script line " + std::to_string(line) + ")"), line_no(line) {}
};

struct DisconnectedInput : Error {
    DisconnectedInput() : Error("operation requires a connected graph") {}
};

// Raised when an algebraic identity the computation relies on fails to hold.
// Reaching this indicates a bug, never bad user input.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

}  // namespace flowroots

#endif
