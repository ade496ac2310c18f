// Copyright 2026 The qotkit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qot {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape or tensor-factor dimensions do not match.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Input to a Hermitian-only routine fails the symmetry tolerance.
struct NonHermitianInput : Error {
  using Error::Error;
};

// Iterative eigensolver exceeded its sweep cap.
struct ConvergenceFailure : Error {
  using Error::Error;
};

// PSD-only routine received a matrix with a negative eigenvalue.
struct NegativeEigenvalue : Error {
  using Error::Error;
};

// Matrix expected to be positive semidefinite is indefinite beyond tolerance.
struct NotPsd : Error {
  using Error::Error;
};

// Recovered Kraus family violates sum v^† v = identity beyond tolerance.
struct BrokenUnitality : Error {
  using Error::Error;
};

// State/observable fails a density-matrix or hermiticity invariant.
struct InvalidState : Error {
  using Error::Error;
};

// Requested rank outside [1, dim] or an impossible generator configuration.
struct InvalidRank : Error {
  using Error::Error;
};

// Channel predual does not carry sigma to rho within tolerance.
struct MarginalMismatch : Error {
  using Error::Error;
};

// Hilbert-Schmidt element violates its attached support condition.
struct SupportViolation : Error {
  using Error::Error;
};

// Operator tuples of different lengths.
struct LengthMismatch : Error {
  using Error::Error;
};

// Out-of-range quadrature/solver parameters.
struct InvalidParameters : Error {
  using Error::Error;
};

// Solver iterates diverged or produced non-finite values.
struct NumericalFailure : Error {
  using Error::Error;
};

// Malformed instance or config file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace qot
