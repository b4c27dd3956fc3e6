// Copyright 2026 The metdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef METDIM_ERROR_HPP_
#define METDIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace metdim {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or vertex reference (self-loop, duplicate edge,
/// out-of-range endpoint, size below a family minimum, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A distance-based operation was given a disconnected graph.
class NotConnected : public Error {
 public:
  NotConnected() : Error("graph is not connected") {}
  explicit NotConnected(const std::string& what) : Error(what) {}
};

/// Input order exceeds an exact-search guardrail.
class GuardrailExceeded : public Error {
 public:
  using Error::Error;
};

/// Basis enumeration hit its cap where an exact answer was required.
class TruncatedEnumeration : public Error {
 public:
  using Error::Error;
};

/// JSON input did not match the graph / recipe schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace metdim

#endif  // METDIM_ERROR_HPP_
