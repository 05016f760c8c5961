/*
   Copyright 2026 The hyperconvo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HYPERCONVO_ERRORS_HPP
#define HYPERCONVO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperconvo {

/// Input that violates a structural invariant (non-commutative table,
/// invalid v-sequence, malformed measure). Carries the offending indices so
/// callers can re-check the witness.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string message, std::vector<std::size_t> witness = {}, std::string location = {})
        : std::invalid_argument(std::move(message)), witness_(std::move(witness)), location_(std::move(location)) {}

    [[nodiscard]] const std::vector<std::size_t>& witness() const { return witness_; }
    /// JSON pointer into the input document, when the error came from parsing.
    [[nodiscard]] const std::string& location() const { return location_; }

private:
    std::vector<std::size_t> witness_;
    std::string location_;
};

/// An operation was called on an object outside its domain, e.g. the
/// max-semigroup checker on a semigroup whose idempotents are not a chain.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hyperconvo

#endif  // HYPERCONVO_ERRORS_HPP
