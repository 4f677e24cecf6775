// Copyright 2026 The noisecut Authors
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

#ifndef NOISECUT_ERRORS_HPP_
#define NOISECUT_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace noisecut {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new failure modes should derive from one of the groups below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structural problems with an instance (bad graph, bad file).
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public InvalidInstance {
 public:
  CycleDetected() : InvalidInstance("edge relation contains a cycle") {}
};

class IndegreeViolation : public InvalidInstance {
 public:
  IndegreeViolation(std::uint32_t vertex, int expected, int actual)
      : InvalidInstance("vertex " + std::to_string(vertex) + " has indegree " +
                        std::to_string(actual) + ", expected " +
                        std::to_string(expected)),
        vertex_(vertex),
        expected_(expected),
        actual_(actual) {}

  std::uint32_t vertex() const { return vertex_; }
  int expected() const { return expected_; }
  int actual() const { return actual_; }

 private:
  std::uint32_t vertex_;
  int expected_;
  int actual_;
};

class UnknownVertex : public InvalidInstance {
 public:
  explicit UnknownVertex(std::uint64_t id)
      : InvalidInstance("unknown vertex id " + std::to_string(id)), id_(id) {}
  std::uint64_t id() const { return id_; }

 private:
  std::uint64_t id_;
};

class ParseError : public InvalidInstance {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInstance("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Caller handed in something outside an operation's domain (L = 0, weights
// outside [0,1], an infeasible set where a feasible one is required).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InfeasibleInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A configured resource cap was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public ResourceLimit {
 public:
  explicit CapExceeded(std::size_t cap)
      : ResourceLimit("more than " + std::to_string(cap) +
                      " interesting paths"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class TooLarge : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class IterationLimitExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

// Solver-internal failures. These indicate numerical trouble or a bug, never
// bad user input.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class NoFeasibleCandidate : public Error {
 public:
  using Error::Error;
};

}  // namespace noisecut

#endif  // NOISECUT_ERRORS_HPP_
