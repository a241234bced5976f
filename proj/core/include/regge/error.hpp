// Copyright 2026 The regge-scissors Authors.
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

#ifndef REGGE_ERROR_HPP_
#define REGGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace regge {

// Input outside the domain of an operation (non-finite angles, wrong
// tetrahedron class, malformed relabeling, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure did not reach its target accuracy.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// Failure of the octahedron holonomy solve. `kind` says which check tripped.
class HolonomyError : public NumericalError {
 public:
  enum class Kind {
    kDegenerateDiscriminant,  // the two roots w = z^2 coincide
    kNonUnitRoot,             // |w| too far from 1: Z would not be real
    kNoPositiveRoot,          // neither root yields a positive volume
  };

  HolonomyError(Kind kind, const std::string& what, double diagnostic)
      : NumericalError(what, diagnostic), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace regge

#endif  // REGGE_ERROR_HPP_
