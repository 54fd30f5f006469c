// Copyright 2026 The ghzlhv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZLHV_ERRORS_H
#define GHZLHV_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghzlhv {

/// Malformed textual input (Pauli strings, settings, circuits, edge lists).
/// `position` is the 0-based character offset (or line number for circuit
/// files) where the problem was detected.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t position)
        : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"), position_(position) {
    }
    size_t position() const {
        return position_;
    }

   private:
    size_t position_;
};

/// Operands disagree on qubit count, or an index is out of range.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A product with imaginary phase was passed where an observable is required.
class NonHermitianError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The C-NOT table update rules are only valid when control and target rows
/// carry the same XYZ phase (both +i or both -i).
class CnotConsistencyError : public std::runtime_error {
   public:
    CnotConsistencyError(size_t control, size_t target, const std::string &detail)
        : std::runtime_error(
              "C-NOT consistency condition violated for control " + std::to_string(control + 1) + ", target " +
              std::to_string(target + 1) + ": " + detail),
          control_(control),
          target_(target) {
    }
    size_t control() const {
        return control_;
    }
    size_t target() const {
        return target_;
    }

   private:
    size_t control_;
    size_t target_;
};

}  // namespace ghzlhv

#endif
