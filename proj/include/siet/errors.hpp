#pragma once

#include <stdexcept>
#include <string>

namespace siet {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyLayers : Error {
    EmptyLayers() : Error("constellation requires at least one layer") {}
};

struct NonDecreasingAmplitudes : Error {
    explicit NonDecreasingAmplitudes(const std::string& what) : Error(what) {}
};

struct NonPositiveInput : Error {
    explicit NonPositiveInput(const std::string& what) : Error(what) {}
};

struct SingleSymbolConstellation : Error {
    SingleSymbolConstellation() : Error("constellation has a single symbol; no neighbor exists") {}
};

struct RadiusTooLarge : Error {
    explicit RadiusTooLarge(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

struct NonIntegralType : Error {
    explicit NonIntegralType(const std::string& what) : Error(what) {}
};

struct RequestExceedsCount : Error {
    explicit RequestExceedsCount(const std::string& what) : Error(what) {}
};

struct SamplingExhausted : Error {
    explicit SamplingExhausted(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct OverlappingRegions : Error {
    explicit OverlappingRegions(const std::string& what) : Error(what) {}
};

struct GridEmpty : Error {
    GridEmpty() : Error("sweep grid is empty") {}
};

struct EmptyInput : Error {
    explicit EmptyInput(const std::string& what) : Error(what) {}
};

struct InvalidTargets : Error {
    explicit InvalidTargets(const std::string& what) : Error(what) {}
};

}  // namespace siet
