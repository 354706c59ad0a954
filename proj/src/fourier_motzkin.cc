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

#include "rbg/fourier_motzkin.h"

#include <map>
#include <utility>

#include "rbg/errors.h"

namespace rbg {
namespace {

struct Row {
  std::vector<Rational> a;
  Rational b;
};

// Scales a row so its first non-zero coefficient has absolute value one.
// Positive scaling keeps the inequality direction.
void Normalize(Row& row) {
  for (const Rational& c : row.a) {
    if (c.IsZero()) continue;
    Rational scale = c.Sign() > 0 ? c : -c;
    for (Rational& x : row.a) x /= scale;
    row.b /= scale;
    return;
  }
}

bool AllZero(const std::vector<Rational>& a) {
  for (const Rational& c : a) {
    if (!c.IsZero()) return false;
  }
  return true;
}

struct VectorLess {
  bool operator()(const std::vector<Rational>& x,
                  const std::vector<Rational>& y) const {
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] != y[k]) return x[k] < y[k];
    }
    return false;
  }
};

// Drops all-zero rows (reporting infeasibility through the return value) and
// keeps only the tightest row per normalized direction.
bool Prune(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, Rational, VectorLess> tightest;
  for (Row& row : rows) {
    Normalize(row);
    if (AllZero(row.a)) {
      if (row.b < 0) return false;
      continue;
    }
    auto [it, inserted] = tightest.emplace(row.a, row.b);
    if (!inserted && row.b < it->second) it->second = row.b;
  }
  rows.clear();
  for (auto& [a, b] : tightest) rows.push_back(Row{a, b});
  return true;
}

struct Substitution {
  int var;
  // x_var = constant + sum coefficients[j] x_j
  std::vector<Rational> coefficients;
  Rational constant;
};

struct Elimination {
  int var;
  std::vector<Row> bounds;  // rows that mentioned `var` when it was removed
};

}  // namespace

void LinearSystem::Add(std::vector<Rational> coefficients, Relation relation,
                       Rational rhs) {
  if (static_cast<int>(coefficients.size()) != num_vars_) {
    throw InputError("constraint width does not match the variable count");
  }
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearSystem::AddLessEqual(std::vector<Rational> coefficients,
                                Rational rhs) {
  Add(std::move(coefficients), Relation::kLessEqual, std::move(rhs));
}

void LinearSystem::AddEqual(std::vector<Rational> coefficients, Rational rhs) {
  Add(std::move(coefficients), Relation::kEqual, std::move(rhs));
}

void LinearSystem::AddNonNegative(int var) {
  std::vector<Rational> a(num_vars_);
  a[var] = -1;
  AddLessEqual(std::move(a), 0);
}

bool LinearSystem::IsSatisfiedBy(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_vars_) return false;
  for (const LinearConstraint& c : constraints_) {
    Rational lhs;
    for (int k = 0; k < num_vars_; ++k) lhs += c.coefficients[k] * point[k];
    if (c.relation == Relation::kEqual ? lhs != c.rhs : lhs > c.rhs) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<Rational>> FindFeasiblePoint(
    const LinearSystem& system, const FourierMotzkinLimits& limits) {
  const int n = system.num_vars();
  std::vector<Row> equalities;
  std::vector<Row> rows;
  for (const LinearConstraint& c : system.constraints()) {
    Row row{c.coefficients, c.rhs};
    (c.relation == Relation::kEqual ? equalities : rows).push_back(row);
  }

  // Gaussian substitution of equalities.
  std::vector<Substitution> substitutions;
  for (std::size_t k = 0; k < equalities.size(); ++k) {
    Row& eq = equalities[k];
    int pivot = -1;
    for (int j = 0; j < n; ++j) {
      if (!eq.a[j].IsZero()) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) {
      if (!eq.b.IsZero()) return std::nullopt;
      continue;
    }
    Substitution sub{pivot, std::vector<Rational>(n), eq.b / eq.a[pivot]};
    for (int j = 0; j < n; ++j) {
      if (j != pivot) sub.coefficients[j] = -eq.a[j] / eq.a[pivot];
    }
    auto apply = [&](Row& row) {
      if (row.a[pivot].IsZero()) return;
      Rational factor = row.a[pivot];
      row.a[pivot] = 0;
      for (int j = 0; j < n; ++j) {
        if (!sub.coefficients[j].IsZero()) {
          row.a[j] += factor * sub.coefficients[j];
        }
      }
      row.b -= factor * sub.constant;
    };
    for (std::size_t later = k + 1; later < equalities.size(); ++later) {
      apply(equalities[later]);
    }
    for (Row& row : rows) apply(row);
    substitutions.push_back(std::move(sub));
  }

  if (!Prune(rows)) return std::nullopt;

  // Fourier-Motzkin elimination.
  std::vector<Elimination> eliminations;
  std::vector<bool> eliminated(n, false);
  while (true) {
    int best = -1;
    long best_score = 0;
    for (int j = 0; j < n; ++j) {
      if (eliminated[j]) continue;
      long pos = 0, neg = 0;
      for (const Row& row : rows) {
        int s = row.a[j].Sign();
        if (s > 0) ++pos;
        if (s < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      long score = pos * neg - pos - neg;
      if (best < 0 || score < best_score) {
        best = j;
        best_score = score;
      }
    }
    if (best < 0) break;
    eliminated[best] = true;

    std::vector<Row> positive, negative, next;
    for (Row& row : rows) {
      int s = row.a[best].Sign();
      if (s > 0) {
        positive.push_back(std::move(row));
      } else if (s < 0) {
        negative.push_back(std::move(row));
      } else {
        next.push_back(std::move(row));
      }
    }
    if (next.size() + positive.size() * negative.size() >
        limits.max_constraints) {
      throw CapacityError("Fourier-Motzkin elimination exceeds " +
                          std::to_string(limits.max_constraints) +
                          " constraints");
    }
    for (const Row& p : positive) {
      for (const Row& q : negative) {
        // Both rows are normalized, so the multipliers are small.
        Rational wp = -q.a[best];
        Rational wq = p.a[best];
        Row combined{std::vector<Rational>(n), wp * p.b + wq * q.b};
        for (int j = 0; j < n; ++j) {
          combined.a[j] = wp * p.a[j] + wq * q.a[j];
        }
        combined.a[best] = 0;
        next.push_back(std::move(combined));
      }
    }
    std::vector<Row> bounds = std::move(positive);
    for (Row& q : negative) bounds.push_back(std::move(q));
    eliminations.push_back({best, std::move(bounds)});
    rows = std::move(next);
    if (!Prune(rows)) return std::nullopt;
  }
  // All remaining rows are 0 <= b with b >= 0 after pruning.

  std::vector<Rational> x(n);
  for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
    std::optional<Rational> lo, hi;
    for (const Row& row : it->bounds) {
      Rational rest;
      for (int j = 0; j < n; ++j) {
        if (j != it->var && !row.a[j].IsZero()) rest += row.a[j] * x[j];
      }
      Rational bound = (row.b - rest) / row.a[it->var];
      if (row.a[it->var] > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (lo && hi && *lo > *hi) {
      throw InvariantViolation("empty interval during back-substitution");
    }
    x[it->var] = lo ? *lo : (hi ? *hi : Rational(0));
  }
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    Rational value = it->constant;
    for (int j = 0; j < n; ++j) {
      if (!it->coefficients[j].IsZero()) value += it->coefficients[j] * x[j];
    }
    x[it->var] = value;
  }
  if (!system.IsSatisfiedBy(x)) {
    throw InvariantViolation("Fourier-Motzkin point violates the system");
  }
  return x;
}

}  // namespace rbg
