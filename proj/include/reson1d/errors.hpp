#ifndef RESON1D_ERRORS_HPP
#define RESON1D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reson1d {

// Argument lies outside the supported domain of an operation.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Gamma evaluated at (or within 1e-14 of) a non-positive integer.
struct GammaPoleError : DomainError {
    explicit GammaPoleError(const std::string& what) : DomainError(what) {}
};

// Series or quadrature failed to reach the requested tolerance.
struct NonConvergenceError : std::runtime_error {
    explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature representation of K_nu unreliable for this order/argument.
struct OrderTooLargeError : DomainError {
    explicit OrderTooLargeError(const std::string& what) : DomainError(what) {}
};

// Pointwise potential value requested from a distribution (delta barrier).
struct NotPointwiseError : DomainError {
    explicit NotPointwiseError(const std::string& what) : DomainError(what) {}
};

// Reflection amplitude evaluated exactly at one of its poles.
struct AmplitudePoleError : std::runtime_error {
    explicit AmplitudePoleError(const std::string& what) : std::runtime_error(what) {}
};

// Newton iteration converged to Im k >= 0 (bound/anti-resonance candidate).
struct WrongHalfPlaneError : std::runtime_error {
    explicit WrongHalfPlaneError(const std::string& what) : std::runtime_error(what) {}
};

// Supplied pole does not satisfy the quantization condition of the model.
struct PoleMismatchError : std::runtime_error {
    explicit PoleMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// Integration start point not deep enough inside the forbidden region.
struct RegionNotDeepError : DomainError {
    explicit RegionNotDeepError(const std::string& what) : DomainError(what) {}
};

}  // namespace reson1d

#endif
