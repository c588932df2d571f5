// Copyright 2026 The Harem Authors
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

#ifndef HAREM_ERRORS_HPP_
#define HAREM_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace harem {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

// An oracle broke its contract (asymmetric neighbors, degree mismatch).
class OracleError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Exhaustive routine refused an instance above its size limits.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

class WitnessError : public Error {
 public:
  using Error::Error;
};

// The local matching problem of an engine step was infeasible, so the
// supplied margin function is not a valid expansion witness for the graph.
class CEHHCViolation : public Error {
 public:
  using Error::Error;
};

class BallBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class DisjointnessViolation : public Error {
 public:
  DisjointnessViolation(std::uint64_t point, const std::string& what)
      : Error(what + " at " + std::to_string(point)), point_(point) {}
  std::uint64_t point() const { return point_; }

 private:
  std::uint64_t point_;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace harem

#endif  // HAREM_ERRORS_HPP_
