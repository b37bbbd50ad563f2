#ifndef CHROMADISC_ERRORS_HPP
#define CHROMADISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chromadisc {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Construction rejected a self-loop {v,v}.
struct LoopEdgeError : Error {
    explicit LoopEdgeError(int v)
        : Error("loop edge at vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

// An endpoint label lies outside 0..n-1.
struct VertexOutOfRangeError : Error {
    VertexOutOfRangeError(int v, int n)
        : Error("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n)),
          vertex(v), n(n) {}
    int vertex;
    int n;
};

// An operation required an edge that the graph does not contain.
struct EdgeNotPresentError : Error {
    EdgeNotPresentError(int u, int v)
        : Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} not present") {}
};

struct EmptyVertexSetError : Error {
    EmptyVertexSetError() : Error("induced subgraph of empty vertex set") {}
};

// An enumeration would exceed its configured size cap.
struct SizeGuardError : Error {
    SizeGuardError(const std::string& what_exceeded, long long value, long long cap)
        : Error(what_exceeded + " = " + std::to_string(value) +
                " exceeds enumeration cap " + std::to_string(cap)) {}
};

struct DisconnectedError : Error {
    explicit DisconnectedError(const std::string& op)
        : Error(op + " requires a connected graph") {}
};

// Input to a bijection map fails its domain invariants.
struct InvariantViolationError : Error {
    explicit InvariantViolationError(const std::string& msg) : Error(msg) {}
};

// Text input could not be parsed; line numbers are 1-based.
struct ParseError : Error {
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

// A repeated edge in an input file. Rejected rather than silently merged.
struct DuplicateEdgeError : ParseError {
    DuplicateEdgeError(int line, int u, int v)
        : ParseError(line, "duplicate edge {" + std::to_string(u) + "," +
                               std::to_string(v) + "} (edges must be listed once)") {}
};

}  // namespace chromadisc

#endif
