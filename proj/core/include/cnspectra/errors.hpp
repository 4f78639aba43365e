#pragma once

#include <stdexcept>
#include <string>

namespace cns {

/// Malformed caller input: bad vertex tuple, bad graph6 bytes, bad flag value.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A classification routine was called outside its hypotheses
/// (non-planar graph, disconnected graph, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds an implementation ceiling (e.g. canonical forms above 64 vertices).
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A generator target that is provably unrealizable.
struct TargetError : std::runtime_error {
    explicit TargetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cns
