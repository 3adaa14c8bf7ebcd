// SPDX-License-Identifier: MIT
//
// Exception types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace crlink {

// A truncated series or iteration hit its term cap before meeting its
// tolerance. Distinct from std::domain_error so callers can tell "bad input"
// from "gave up converging".
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature failed to reach the requested tolerance.
class quadrature_error : public std::runtime_error {
 public:
  explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

// A scenario or policy is structurally infeasible (e.g. the truncation
// threshold leaves no usable channel mass, or no positive transmit power
// satisfies the constraints).
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Experiment configuration file problems; carries a machine-readable
// category plus the offending line/field where known.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crlink
