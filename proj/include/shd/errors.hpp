#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "shd/exact.hpp"

namespace shd {

// Malformed file: bad JSON, wrong value type, missing or unknown key.
struct SyntaxError : std::runtime_error {
  explicit SyntaxError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed file referencing an id that is not defined anywhere.
struct ReferenceError : std::runtime_error {
  explicit ReferenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by operations whose contract requires an admissible diagram.
// Carries a nonnegative nontrivial periodic domain as evidence.
struct NotAdmissible : std::runtime_error {
  std::map<std::string, Int> witness;  // interior region id -> multiplicity
  NotAdmissible(const std::string& msg, std::map<std::string, Int> w)
      : std::runtime_error(msg), witness(std::move(w)) {}
};

struct NotNice : std::runtime_error {
  explicit NotNice(const std::string& msg) : std::runtime_error(msg) {}
};

// A domain whose boundary jumps do not match the requested generator pair.
struct NotConnecting : std::runtime_error {
  explicit NotConnecting(const std::string& msg) : std::runtime_error(msg) {}
};

// Defensive: an area certificate missing some interior region.
struct EmptyCertificateOnInteriorRegions : std::runtime_error {
  explicit EmptyCertificateOnInteriorRegions(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Enumeration caps (bitmask-backed loops are capped at 62 entries).
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace shd
