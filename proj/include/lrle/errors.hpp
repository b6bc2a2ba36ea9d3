#pragma once

#include <stdexcept>
#include <string>

namespace lrle {

// Error taxonomy shared by all modules. Everything derives from Error so
// callers (and the CLI) can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonInjectiveGauge : Error {
    using Error::Error;
};
struct DegenerateSpectrum : Error {
    using Error::Error;
};
struct NonUnitary : Error {
    using Error::Error;
};
struct NormalizationViolation : Error {
    using Error::Error;
};
struct NotNormalized : Error {
    using Error::Error;
};
struct WrongShape : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};
struct CriterionViolated : Error {
    using Error::Error;
};
struct WrongBondDimension : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};

}  // namespace lrle
