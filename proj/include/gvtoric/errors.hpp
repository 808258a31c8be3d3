#ifndef GVTORIC_ERRORS_HPP
#define GVTORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gvtoric {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input: bad partition data, bad diagram, bad flags.
struct config_error : error {
    explicit config_error(const std::string& what) : error(what) {}
};

// Division by an identically zero rational function.
struct division_by_zero_error : error {
    explicit division_by_zero_error(const std::string& what) : error(what) {}
};

// A quantity that must reduce to a Laurent polynomial did not.
struct not_polynomial_error : error {
    explicit not_polynomial_error(const std::string& what) : error(what) {}
};

// A Laurent polynomial that must be invariant under v -> 1/v is not.
struct not_symmetric_error : error {
    explicit not_symmetric_error(const std::string& what) : error(what) {}
};

// An odd power of v survived where only even powers are representable in x.
struct half_power_error : error {
    explicit half_power_error(const std::string& what) : error(what) {}
};

// A coefficient that must be an integer is not. Fatal by design: it means
// the amplitude data violates the integrality theorem, so there is no
// sensible value to return.
struct integrality_violation : error {
    explicit integrality_violation(const std::string& what) : error(what) {}
};

// Character of a symmetric group evaluated on a class of the wrong size.
struct degree_mismatch_error : error {
    explicit degree_mismatch_error(const std::string& what) : error(what) {}
};

} // namespace gvtoric

#endif
