// Copyright 2026 The gaugedrift Authors
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

#ifndef GAUGEDRIFT_TOLERANCES_H
#define GAUGEDRIFT_TOLERANCES_H

namespace gaugedrift::tol {

// Operator-level checks (unitarity, eigen reconstruction).
inline constexpr double kOperator = 1e-10;
// Vector-level checks (idempotence applied to states, cancellation).
inline constexpr double kVector = 1e-12;
// Maximum |M - M^dagger| accepted as Hermitian input.
inline constexpr double kHermitianInput = 1e-12;
// A state labelled "normalized" has |norm - 1| below this.
inline constexpr double kNorm = 1e-9;
// Projector eigenvalues within this of 1 count as physical.
inline constexpr double kPhysicalEigenvalue = 1e-9;
// Projector eigenvalues inside this band indicate a broken projector.
inline constexpr double kAmbiguityLow = 0.1;
inline constexpr double kAmbiguityHigh = 0.9;
// Growth fits ignore values below 10x this noise floor.
inline constexpr double kMachineNoise = 1e-12;

}  // namespace gaugedrift::tol

#endif
