#ifndef BERK_ERRORS_HPP
#define BERK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace berk {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by exact zero") {}
};

// divisor (or other required quantity) is zero to its precision but not known exact
struct IndeterminateZero : Error {
    explicit IndeterminateZero(const std::string& w = "operand is zero to precision") : Error(w) {}
};

struct IndeterminateValuation : Error {
    IndeterminateValuation() : Error("valuation indeterminate: no terms below the precision bound") {}
};

struct NotIntegral : Error {
    NotIntegral() : Error("residue undefined: negative valuation") {}
};

struct IndeterminateGeometry : Error {
    explicit IndeterminateGeometry(const std::string& w) : Error(w) {}
};

struct SlopeNotSimple : Error {
    explicit SlopeNotSimple(const std::string& w) : Error(w) {}
};

struct ResidueRootIrrational : Error {
    explicit ResidueRootIrrational(const std::string& w = "residue root is not rational") : Error(w) {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& w, std::size_t pos)
        : Error(w + " at offset " + std::to_string(pos)), position(pos) {}
};

struct ConstraintViolated : Error {
    explicit ConstraintViolated(const std::string& w) : Error(w) {}
};

struct Degenerate : Error {
    explicit Degenerate(const std::string& w) : Error(w) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& w) : Error(w) {}
};

struct IndeterminateCoefficient : Error {
    explicit IndeterminateCoefficient(const std::string& w) : Error(w) {}
};

struct PrecisionExhausted : Error {
    std::string exponent_reached;
    explicit PrecisionExhausted(const std::string& exp)
        : Error("working precision exhausted at exponent " + exp), exponent_reached(exp) {}
};

struct IterationCap : Error {
    IterationCap() : Error("multiplicity iteration cap reached") {}
};

struct UnclassifiableInput : Error {
    explicit UnclassifiableInput(const std::string& w) : Error(w) {}
};

struct PairingUndefined : Error {
    explicit PairingUndefined(const std::string& w) : Error(w) {}
};

struct RootsNotLiftable : Error {
    explicit RootsNotLiftable(const std::string& w) : Error(w) {}
};

}  // namespace berk

#endif
