/*
   Copyright 2026 The umbral project authors

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

#ifndef UMBRAL_ERRORS_HPP
#define UMBRAL_ERRORS_HPP

#include <stdexcept>

namespace umbral {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/// Multiplicative inverse requested for a series whose constant term is zero.
struct NotInvertible : Error {
    using Error::Error;
};

/// Compositional inverse requested for a series that is not of order 1.
struct NotDelta : Error {
    using Error::Error;
};

/// Inner series of a composition has a nonzero constant term.
struct InnerNotDelta : Error {
    using Error::Error;
};

/// A series does not carry enough known coefficients for the requested degree.
struct InsufficientPrecision : Error {
    using Error::Error;
};

/// Umbral composition asked for a basis polynomial that was not supplied.
struct MissingBasisElement : Error {
    using Error::Error;
};

/// The Frobenius-Euler parameter must differ from 1.
struct LambdaIsOne : Error {
    using Error::Error;
};

struct UnknownIdentity : Error {
    using Error::Error;
};

struct BadParams : Error {
    using Error::Error;
};

/// Two report sets passed to diff_report do not cover the same parameter grid.
struct CoverageMismatch : Error {
    using Error::Error;
};

} // namespace umbral

#endif
