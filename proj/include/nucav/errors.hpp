#pragma once

#include <stdexcept>
#include <string>

namespace nucav {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownMaterial : Error {
    explicit UnknownMaterial(const std::string& name)
        : Error("unknown material: " + name) {}
};

struct UnknownIsotope : Error {
    explicit UnknownIsotope(const std::string& name)
        : Error("unknown isotope: " + name) {}
};

struct EnergyOutOfRange : Error {
    using Error::Error;
};

struct NonPositiveThickness : Error {
    using Error::Error;
};

struct ResonantLayerZero : Error {
    using Error::Error;
};

struct DegenerateInterface : Error {
    using Error::Error;
};

struct IsotopeMismatch : Error {
    using Error::Error;
};

struct ZeroBackground : Error {
    using Error::Error;
};

struct EmptyWindow : Error {
    using Error::Error;
};

struct OutOfBounds : Error {
    using Error::Error;
};

struct AllInfeasible : Error {
    using Error::Error;
};

struct TargetUnreachable : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace nucav
