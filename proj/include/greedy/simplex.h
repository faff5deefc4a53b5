// Copyright 2026 The Authors.
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

#ifndef GREEDY_SIMPLEX_H_
#define GREEDY_SIMPLEX_H_

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "greedy/errors.h"
#include "greedy/rational.h"

namespace greedy {

// base + eps * (infinitesimal), ordered lexicographically. Used as the
// right-hand side type when capacities carry a symbolic perturbation.
struct EpsRational {
  Rational base;
  Rational eps;

  EpsRational() = default;
  EpsRational(Rational b, Rational e = 0)  // NOLINT
      : base(std::move(b)), eps(std::move(e)) {}

  friend EpsRational operator+(const EpsRational& a, const EpsRational& b) {
    return {Rational(a.base + b.base), Rational(a.eps + b.eps)};
  }
  friend EpsRational operator-(const EpsRational& a, const EpsRational& b) {
    return {Rational(a.base - b.base), Rational(a.eps - b.eps)};
  }
  friend EpsRational operator*(const Rational& s, const EpsRational& a) {
    return {Rational(s * a.base), Rational(s * a.eps)};
  }
  friend EpsRational operator/(const EpsRational& a, const Rational& s) {
    return {Rational(a.base / s), Rational(a.eps / s)};
  }
  friend bool operator==(const EpsRational& a, const EpsRational& b) {
    return a.base == b.base && a.eps == b.eps;
  }
  friend std::strong_ordering operator<=>(const EpsRational& a,
                                          const EpsRational& b) {
    if (int c = cmp(a.base, b.base); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    int c = cmp(a.eps, b.eps);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::string ToString() const {
    return greedy::ToString(base) + "+" + greedy::ToString(eps) + "e";
  }
};

// One row of a sparse constraint matrix: (column, coefficient) pairs.
using SparseRow = std::vector<std::pair<int, Rational>>;

template <typename Rhs>
struct LpSolution {
  Rhs objective;
  std::vector<Rhs> x;
  int pivots = 0;
};

// Maximizes c.x subject to A x <= b, x >= 0, where every b_i >= 0 so that the
// all-slack basis is feasible. Dense tableau, exact arithmetic, Bland's rule
// (lowest-index entering column, lowest-index leaving basic variable on ratio
// ties), so the method terminates. Throws UnboundedProblem.
template <typename Rhs>
LpSolution<Rhs> MaximizeFromOrigin(int num_vars, const std::vector<SparseRow>& a,
                                   const std::vector<Rhs>& b,
                                   const std::vector<Rational>& c) {
  const int m = static_cast<int>(a.size());
  const int cols = num_vars + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
  std::vector<Rhs> rhs = b;
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    if (rhs[i] < Rhs(Rational(0))) {
      throw ParameterError("simplex: negative right-hand side");
    }
    for (const auto& [j, v] : a[i]) t[i][j] += v;
    t[i][num_vars + i] = 1;
    basis[i] = num_vars + i;
  }
  std::vector<Rational> reduced(cols);
  for (int j = 0; j < num_vars; ++j) reduced[j] = c[j];
  Rhs value(Rational(0));

  LpSolution<Rhs> out;
  std::vector<int> nonzero;
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (sgn(reduced[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rhs best_ratio;
    for (int i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rhs ratio = rhs[i] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) throw UnboundedProblem("simplex: objective is unbounded");

    std::vector<Rational>& prow = t[leave];
    const Rational pivot = prow[enter];
    nonzero.clear();
    for (int j = 0; j < cols; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] /= pivot;
        nonzero.push_back(j);
      }
    }
    rhs[leave] = rhs[leave] / pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational factor = t[i][enter];
      std::vector<Rational>& row = t[i];
      for (int j : nonzero) row[j] -= factor * prow[j];
      rhs[i] = rhs[i] - factor * rhs[leave];
    }
    if (sgn(reduced[enter]) != 0) {
      const Rational factor = reduced[enter];
      for (int j : nonzero) reduced[j] -= factor * prow[j];
      value = value + factor * rhs[leave];
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  out.objective = value;
  out.x.assign(num_vars, Rhs(Rational(0)));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < num_vars) out.x[basis[i]] = rhs[i];
  }
  return out;
}

}  // namespace greedy

#endif  // GREEDY_SIMPLEX_H_
