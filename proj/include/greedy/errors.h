// Copyright 2026 The Authors.
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

#ifndef GREEDY_ERRORS_H_
#define GREEDY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace greedy {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested cardinality exceeds the ground set.
class InvalidCardinality : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured size guard.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A construction or audit parameter is outside its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An independence predicate is not closed under subsets, or rejects the
// empty set.
class MalformedSystem : public Error {
 public:
  using Error::Error;
};

// Malformed text input: rationals, instance descriptors, flow files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A linear program has no finite optimum.
class UnboundedProblem : public Error {
 public:
  using Error::Error;
};

}  // namespace greedy

#endif  // GREEDY_ERRORS_H_
