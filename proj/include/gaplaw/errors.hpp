// errors.hpp — Exception types shared by all gaplaw modules

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace gaplaw {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters supplied by the caller (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

// An argument outside the region where an integral or closed form is defined.
class DomainError : public InputError {
public:
    using InputError::InputError;
};

// The numerics could not deliver a trustworthy value (CLI exit code 3).
class NumericalError : public Error {
public:
    using Error::Error;
};

// First-order stationary-point correction is too large to be meaningful.
class LinearResponseError : public NumericalError {
public:
    LinearResponseError(double tau0, double delta_tau)
        : NumericalError(message(tau0, delta_tau)), tau0_(tau0), delta_tau_(delta_tau) {}

    double tau0() const noexcept { return tau0_; }
    double delta_tau() const noexcept { return delta_tau_; }

private:
    static std::string message(double tau0, double delta_tau) {
        std::ostringstream os;
        os << "stationary-point correction outside linear-response regime: tau0=" << tau0
           << ", delta_tau=" << delta_tau;
        return os.str();
    }

    double tau0_;
    double delta_tau_;
};

}  // namespace gaplaw
