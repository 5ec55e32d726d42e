#pragma once

#include <stdexcept>
#include <string>

namespace gridrisk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// grid-model
struct DisconnectedNetwork : Error {
    using Error::Error;
};
struct SingularReduction : Error {
    using Error::Error;
};

// lp-core
struct NumericalBreakdown : Error {
    using Error::Error;
};

// ed-solver
struct InfeasibleED : Error {
    using Error::Error;
};

// nn-core
struct ShapeMismatch : Error {
    using Error::Error;
};

// proxies
struct RepairInfeasible : Error {
    using Error::Error;
};

// training
struct DivergedTraining : Error {
    using Error::Error;
};

// risk-metrics
struct MismatchedHorizons : Error {
    using Error::Error;
};

// file I/O
struct ParseError : Error {
    using Error::Error;
};

}  // namespace gridrisk
