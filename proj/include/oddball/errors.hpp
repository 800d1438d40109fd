/*
   Copyright 2026 The oddball authors

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

#ifndef ODDBALL_ERRORS_HPP
#define ODDBALL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oddball {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI's error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

    /// True for errors that signal a broken internal invariant rather than
    /// bad input (exit code 3 in the CLI).
    virtual bool is_invariant_violation() const noexcept { return false; }

private:
    std::string kind_;
};

#define ODDBALL_DEFINE_ERROR(Name, Invariant)                                  \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
        bool is_invariant_violation() const noexcept override {                \
            return Invariant;                                                  \
        }                                                                      \
    };

ODDBALL_DEFINE_ERROR(NotDivisible, true)
ODDBALL_DEFINE_ERROR(NonSquare, false)
ODDBALL_DEFINE_ERROR(SingularSystem, true)
ODDBALL_DEFINE_ERROR(ArgumentTooLarge, false)
ODDBALL_DEFINE_ERROR(NonPositiveArgument, false)
ODDBALL_DEFINE_ERROR(TooManyTerms, false)
ODDBALL_DEFINE_ERROR(NonPositiveCoefficient, false)
ODDBALL_DEFINE_ERROR(NoConvergence, false)
ODDBALL_DEFINE_ERROR(TooLarge, false)
ODDBALL_DEFINE_ERROR(InsufficientDepth, false)
ODDBALL_DEFINE_ERROR(PrecisionNotReached, false)
ODDBALL_DEFINE_ERROR(InvalidArgument, false)
ODDBALL_DEFINE_ERROR(ParseError, false)
ODDBALL_DEFINE_ERROR(IoError, false)

#undef ODDBALL_DEFINE_ERROR

} // namespace oddball

#endif // ODDBALL_ERRORS_HPP
