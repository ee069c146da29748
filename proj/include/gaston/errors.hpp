#pragma once

#include <stdexcept>
#include <string>

namespace gaston {

// Error taxonomy used across the library. Callers can catch the broad
// std:: bases or the specific type.

// Invalid argument values (bad ratios, dim mismatches, empty inputs).
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Node/edge indices outside the graph's ranges.
struct BoundsError : std::out_of_range {
    explicit BoundsError(const std::string& msg) : std::out_of_range(msg) {}
};

// Edge endpoints violating a relation's type signature.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed binary or text file structure.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input with semantically bad content (cycles, NaNs).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Optimization diverged or produced non-finite values.
struct TrainingError : std::runtime_error {
    explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite evaluation inside numeric routines.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Degenerate statistical input (e.g. zero variance for correlation).
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gaston
