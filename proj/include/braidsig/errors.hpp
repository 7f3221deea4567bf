#pragma once

#include <stdexcept>
#include <string>

namespace braidsig {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// word parsing / construction
struct MalformedToken : Error { using Error::Error; };
struct GeneratorOutOfRange : Error { using Error::Error; };
struct WrongStrandCount : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct UnknownFamily : Error { using Error::Error; };

// diagrams and forms
struct MalformedDiagram : Error { using Error::Error; };
struct NotBipartite : Error { using Error::Error; };
struct RegionNotWhite : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };

// verification
struct PreconditionViolated : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// fatal verification outcomes: these indicate an implementation bug or a
// counterexample to a proven statement, so they are never downgraded.
struct VerificationFatal : Error { using Error::Error; };
struct PipelineDisagreement : VerificationFatal { using VerificationFatal::VerificationFatal; };
struct BoundViolation : VerificationFatal { using VerificationFatal::VerificationFatal; };
struct FamilyMismatch : VerificationFatal { using VerificationFatal::VerificationFatal; };

} // namespace braidsig
