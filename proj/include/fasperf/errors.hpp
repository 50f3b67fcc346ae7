// SPDX-License-Identifier: Apache-2.0
//
// fasperf - outage and rate analysis for fluid antenna receivers
// Copyright (c) 2026 fasperf contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fas {

/// A series or quadrature failed to reach the requested tolerance.
/// `achieved` carries the error bound that was actually reached.
class accuracy_error : public std::runtime_error {
  public:
    accuracy_error(const std::string &msg, double achieved_bound)
        : std::runtime_error(msg), achieved(achieved_bound) {}
    double achieved;
};

/// Port geometry request does not match the layout (wrong kind, non-square
/// port count for a planar grid, too few ports).
class layout_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A correlation coefficient of magnitude one makes a formula singular.
class singularity_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Request exceeds a hard structural limit (e.g. subset expansion size).
class capacity_error : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Invalid parameter combination detected before any computation.
class validation_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Output destination cannot be written.
class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace fas
