#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mars {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid arguments: dimension mismatches, out-of-range indices, bad parameters.
struct InputError : Error {
    using Error::Error;
};

// Malformed text input. line == 0 means "location unknown".
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_no = 0)
        : Error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    std::size_t line;
};

// Input parsed but violates a structural rule (edge counts, ranges, duplicates).
struct StructuralError : Error {
    using Error::Error;
};

// Persisted document does not match the problem it is checked against.
struct IntegrityError : Error {
    using Error::Error;
};

// Persisted document written by an incompatible format version.
struct VersionError : Error {
    using Error::Error;
};

// A relaxation failed to reach a fixed point within the sweep budget.
// Carries the spin state at the moment the budget ran out.
struct DivergedError : Error {
    DivergedError(const std::string& msg, std::vector<double> state, std::int64_t sweeps_done)
        : Error(msg), partial_state(std::move(state)), sweeps(sweeps_done) {}
    std::vector<double> partial_state;
    std::int64_t sweeps;
};

}  // namespace mars
