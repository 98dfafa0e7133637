#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lowdisc {

// Base of all typed errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfUnitCube : Error {
    std::size_t index;  // flat slot i*d+k of the offending coordinate
    double value;
    OutOfUnitCube(std::size_t idx, double v)
        : Error("coordinate " + std::to_string(idx) + " = " + std::to_string(v) +
                " outside [0,1]"),
          index(idx), value(v) {}
};

struct RaggedInput : Error {
    explicit RaggedInput(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t ln, const std::string& what)
        : Error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

struct DimensionUnsupported : Error {
    explicit DimensionUnsupported(const std::string& what) : Error(what) {}
};

struct IndexTooLarge : Error {
    explicit IndexTooLarge(const std::string& what) : Error(what) {}
};

struct KindUnsupported : Error {
    explicit KindUnsupported(const std::string& what) : Error(what) {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
    std::uint64_t estimated_boxes;
    explicit BudgetExceeded(std::uint64_t est)
        : Error("enumeration budget exceeded, estimated " + std::to_string(est) +
                " boxes"),
          estimated_boxes(est) {}
};

struct TooExpensive : Error {
    explicit TooExpensive(const std::string& what) : Error(what) {}
};

struct NonFiniteGradient : Error {
    std::size_t i, k;
    NonFiniteGradient(std::size_t pi, std::size_t pk)
        : Error("non-finite gradient at point " + std::to_string(pi) +
                ", coordinate " + std::to_string(pk)),
          i(pi), k(pk) {}
};

}  // namespace lowdisc
