#pragma once

#include <stdexcept>
#include <string>

namespace ghz {

/// Operand sizes disagree (qubit counts, vector lengths, empty inputs).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds what a dense or exhaustive routine will materialize.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Argument outside the mathematical domain of the operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operator contains a letter the operation is not defined for (e.g. Z in an X/Y routine).
struct UnsupportedLetterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace ghz
