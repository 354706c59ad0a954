// Copyright 2026 The rbgames Authors
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

#ifndef RBG_FOURIER_MOTZKIN_H_
#define RBG_FOURIER_MOTZKIN_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "rbg/rational.h"

namespace rbg {

enum class Relation { kLessEqual, kEqual };

// coefficients . x  (<= | ==)  rhs
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

class LinearSystem {
 public:
  explicit LinearSystem(int num_vars) : num_vars_(num_vars) {}

  void AddLessEqual(std::vector<Rational> coefficients, Rational rhs);
  void AddEqual(std::vector<Rational> coefficients, Rational rhs);
  // x_var >= 0
  void AddNonNegative(int var);

  int num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  bool IsSatisfiedBy(const std::vector<Rational>& point) const;

 private:
  void Add(std::vector<Rational> coefficients, Relation relation, Rational rhs);

  int num_vars_;
  std::vector<LinearConstraint> constraints_;
};

struct FourierMotzkinLimits {
  // Cap on simultaneously live inequalities during elimination.
  std::size_t max_constraints = 200000;
};

// Exact feasibility. Equalities are removed by substitution, then
// inequalities by Fourier-Motzkin elimination with duplicate-direction
// pruning (of two rows with positively proportional left-hand sides only the
// tighter survives). A feasible point is recovered by back-substitution,
// choosing each variable at its lower bound when one exists. Returns
// nullopt iff the system is infeasible; throws CapacityError past the limit.
std::optional<std::vector<Rational>> FindFeasiblePoint(
    const LinearSystem& system, const FourierMotzkinLimits& limits = {});

}  // namespace rbg

#endif  // RBG_FOURIER_MOTZKIN_H_
