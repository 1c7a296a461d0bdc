#pragma once

#include <stdexcept>
#include <string>

namespace hopfcross {

// Every refusal carries a stable machine-readable code next to the human text.
// Codes: DivisionByZero, FieldMismatch, ParseError, ZeroDenominator, ShapeMismatch,
// Singular, NotConvInvertible, NoAntipode, NotAGroup, CharTwo, SystemNotCertified,
// GroupAxiomFailure, NotCocommutative, NotCoalgebraMap, LazyCheckFailed, NotBijective,
// NotNormal, LeftActionNotTrivial, PreconditionFailed, NotAnIntegral, NotRootOfUnity,
// AlphaNotSymmetric, UpsilonConditionFailed, SearchSpaceTooLarge, QuadrupleNotCertified,
// NotABraiding, ShapeNotSpecial, IoError, NotSubcoalgebra, NotSubalgebra
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

} // namespace hopfcross
