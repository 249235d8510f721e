#pragma once

#include <stdexcept>
#include <string>

namespace qlat {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

struct FactorBoundExceeded : Error {
    explicit FactorBoundExceeded(const std::string& what) : Error(what) {}
};

struct NotASquare : Error {
    explicit NotASquare(const std::string& what) : Error(what) {}
};

struct IsotropicVector : Error {
    explicit IsotropicVector(const std::string& what) : Error(what) {}
};

struct ZeroPairing : Error {
    explicit ZeroPairing(const std::string& what) : Error(what) {}
};

struct NotIntegral : Error {
    explicit NotIntegral(const std::string& what) : Error(what) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what) : Error(what) {}
};

struct NotInOddPart : Error {
    explicit NotInOddPart(const std::string& what) : Error(what) {}
};

struct ClosureDiverged : Error {
    explicit ClosureDiverged(const std::string& what) : Error(what) {}
};

struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& what) : Error(what) {}
};

}  // namespace qlat
