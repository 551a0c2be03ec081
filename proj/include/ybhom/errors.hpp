#ifndef YBHOM_ERRORS_HPP
#define YBHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ybhom {

/// Base class for all mathematical and usage errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

/// The Yang-Baxter equation fails on the witness triple (a,b,c).
struct YbeViolation : Error {
    int a, b, c;
    YbeViolation(int a_, int b_, int c_)
        : Error("YBE violated at triple (" + std::to_string(a_) + "," +
                std::to_string(b_) + "," + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct RowNotPermutation : Error {
    int row;
    explicit RowNotPermutation(int row_)
        : Error("row " + std::to_string(row_) + " is not a permutation"), row(row_) {}
};

/// The cycle property (a.b).(a.c) = (b.a).(b.c) fails at (a,b,c).
struct CycleViolation : Error {
    int a, b, c;
    CycleViolation(int a_, int b_, int c_)
        : Error("cycle property violated at (" + std::to_string(a_) + "," +
                std::to_string(b_) + "," + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct SelfDistributivityViolation : Error {
    int a, b, c;
    SelfDistributivityViolation(int a_, int b_, int c_)
        : Error("self-distributivity violated at (" + std::to_string(a_) + "," +
                std::to_string(b_) + "," + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct NotLeftNondegenerate : Error {
    NotLeftNondegenerate() : Error("braided set is not left non-degenerate") {}
};

struct NotInvertible : Error {
    NotInvertible() : Error("braiding is not invertible") {}
};

struct NotAssociative : Error {
    NotAssociative() : Error("multiplication table is not associative") {}
};

struct NotUnit : Error {
    NotUnit() : Error("designated element is not a two-sided unit") {}
};

struct ModuleViolation : Error {
    explicit ModuleViolation(const std::string& msg) : Error(msg) {}
};

/// A structural precondition of an operation does not hold; the message
/// names the missing property.
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what_missing)
        : Error("precondition failed: " + what_missing) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(const std::string& msg) : Error(msg) {}
};

struct NoDegeneracies : Error {
    NoDegeneracies() : Error("chain model carries no degeneracies") {}
};

struct RelationViolation : Error {
    explicit RelationViolation(const std::string& msg) : Error(msg) {}
};

struct SplittingFailure : Error {
    explicit SplittingFailure(const std::string& msg) : Error(msg) {}
};

struct NotAComplex : Error {
    explicit NotAComplex(const std::string& msg) : Error(msg) {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& msg) : Error(msg) {}
};

struct NotACocycle : Error {
    NotACocycle() : Error("cochain is not a 2-cocycle") {}
};

struct NotASection : Error {
    NotASection() : Error("map is not a section of the projection") {}
};

struct NotCompatible : Error {
    explicit NotCompatible(const std::string& which)
        : Error("cocycle pair fails condition: " + which) {}
};

struct UnsupportedDegree : Error {
    explicit UnsupportedDegree(int d)
        : Error("cohomology degree " + std::to_string(d) + " not supported") {}
};

struct Degenerate : Error {
    Degenerate() : Error("cycle set is degenerate: squaring map is not bijective") {}
};

struct NotSquareFree : Error {
    NotSquareFree() : Error("cycle set is not square-free") {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

struct BudgetExceeded : Error {
    long long nodes;
    explicit BudgetExceeded(long long nodes_)
        : Error("search budget exceeded after " + std::to_string(nodes_) + " nodes"),
          nodes(nodes_) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace ybhom

#endif
