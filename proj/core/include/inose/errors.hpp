// SPDX-License-Identifier: Apache-2.0
#ifndef INOSE_ERRORS_HPP
#define INOSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace inose {

// Every domain error carries a stable name so front ends can surface it
// verbatim and map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define INOSE_ERROR_TYPE(NAME)                                        \
    struct NAME : Error {                                             \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

INOSE_ERROR_TYPE(DivisionByZero);
INOSE_ERROR_TYPE(IndeterminateMismatch);
INOSE_ERROR_TYPE(NotInSubfield);
INOSE_ERROR_TYPE(SingularPoint);
INOSE_ERROR_TYPE(CommonComponent);
INOSE_ERROR_TYPE(SingularInput);
INOSE_ERROR_TYPE(PointNotOnCurve);
INOSE_ERROR_TYPE(DegreeMismatch);
INOSE_ERROR_TYPE(NotSquarefree);
INOSE_ERROR_TYPE(EmptyFamily);
INOSE_ERROR_TYPE(ResidualNotLinear);
INOSE_ERROR_TYPE(GcdNotLinear);
INOSE_ERROR_TYPE(TransformDenominatorVanishes);
INOSE_ERROR_TYPE(NonIntegralIntersection);
INOSE_ERROR_TYPE(HeightMismatch);
INOSE_ERROR_TYPE(IsogenyInvalid);
INOSE_ERROR_TYPE(JInvariantsEqual);
INOSE_ERROR_TYPE(ParseError);
INOSE_ERROR_TYPE(InternalError);

#undef INOSE_ERROR_TYPE

}  // namespace inose

#endif
