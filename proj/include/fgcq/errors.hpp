#ifndef FGCQ_ERRORS_HPP
#define FGCQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fgcq {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": " + msg),
          line(line_), column(col_) {}
};

struct NotAcyclic : Error {
    explicit NotAcyclic(const std::string& msg = "query is not acyclic") : Error(msg) {}
};

struct IsAcyclic : Error {
    explicit IsAcyclic(const std::string& msg = "hypergraph is acyclic, no hard witness exists")
        : Error(msg) {}
};

struct NotFreeConnex : Error {
    explicit NotFreeConnex(const std::string& msg = "query is not free-connex acyclic")
        : Error(msg) {}
};

struct NotJoinQuery : Error {
    explicit NotJoinQuery(const std::string& msg = "operation requires a join query")
        : Error(msg) {}
};

struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& msg = "order is not a permutation of the body variables")
        : Error(msg) {}
};

struct DisruptiveTrioPresent : Error {
    std::string y1, y2, y3;
    DisruptiveTrioPresent(std::string y1_, std::string y2_, std::string y3_)
        : Error("disruptive trio (" + y1_ + "," + y2_ + "," + y3_ + ") under the requested order"),
          y1(std::move(y1_)), y2(std::move(y2_)), y3(std::move(y3_)) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg = "position exceeds the number of answers")
        : Error(msg) {}
};

struct PrefixMismatch : Error {
    explicit PrefixMismatch(const std::string& msg = "tuple is not over a prefix of the variable order")
        : Error(msg) {}
};

struct NoCoveringAtom : Error {
    explicit NoCoveringAtom(const std::string& msg = "no atom covers all query variables")
        : Error(msg) {}
};

struct UnknownValue : Error {
    explicit UnknownValue(const std::string& msg = "value not present") : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "matrix dimensions differ") : Error(msg) {}
};

struct SelfLoop : Error {
    explicit SelfLoop(const std::string& msg = "graph contains a self-loop") : Error(msg) {}
};

struct UnsupportedK : Error {
    explicit UnsupportedK(const std::string& msg = "k must be divisible by 3") : Error(msg) {}
};

struct NotCyclic : Error {
    explicit NotCyclic(const std::string& msg = "query is acyclic") : Error(msg) {}
};

struct NonBinaryAtom : Error {
    explicit NonBinaryAtom(const std::string& msg = "all atoms must be binary") : Error(msg) {}
};

struct UniformityMismatch : Error {
    explicit UniformityMismatch(const std::string& msg = "hypergraph uniformity does not match k")
        : Error(msg) {}
};

struct DivisibilityViolation : Error {
    explicit DivisibilityViolation(const std::string& msg = "k' must be divisible by k")
        : Error(msg) {}
};

struct NoDisjointPair : Error {
    explicit NoDisjointPair(const std::string& msg = "no two variables avoid a common atom")
        : Error(msg) {}
};

struct InvalidEmbedding : Error {
    explicit InvalidEmbedding(const std::string& msg) : Error(msg) {}
};

struct InvalidTree : Error {
    explicit InvalidTree(const std::string& msg = "join tree does not fit the query") : Error(msg) {}
};

struct MissingWeight : Error {
    explicit MissingWeight(const std::string& msg = "tuple has no weight and no default is configured")
        : Error(msg) {}
};

struct InstanceTooLarge : Error {
    explicit InstanceTooLarge(const std::string& msg = "instance exceeds the brute-force cap")
        : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace fgcq

#endif // FGCQ_ERRORS_HPP
