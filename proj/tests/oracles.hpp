// Copyright 2026 The qdiscrim Authors
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

// Reference computations written without the library's algorithms, used to
// cross-check it: explicit index loops, closed-form 2×2 spectra and Bloch
// vector formulas.

#include <array>
#include <cmath>
#include <complex>

#include "qdiscrim/hilbert.hpp"

namespace qdiscrim::oracle {

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Tr_B or Tr_A by direct summation over the traced index.
inline CMatrix partial_trace(const CMatrix& joint, Eigen::Index da, Eigen::Index db, bool keep_first) {
  const Eigen::Index keep = keep_first ? da : db;
  const Eigen::Index drop = keep_first ? db : da;
  CMatrix out = CMatrix::Zero(keep, keep);
  for (Eigen::Index i = 0; i < keep; ++i)
    for (Eigen::Index j = 0; j < keep; ++j)
      for (Eigen::Index t = 0; t < drop; ++t) {
        const Eigen::Index r = keep_first ? i * db + t : t * db + i;
        const Eigen::Index c = keep_first ? j * db + t : t * db + j;
        out(i, j) += joint(r, c);
      }
  return out;
}

// Eigenvalues of [[a, b], [conj(b), d]], descending.
inline std::array<double, 2> eig2(double a, Complex b, double d) {
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  return {mean + radius, mean - radius};
}

inline double helstrom_equal_priors(double overlap) { return 0.5 * (1.0 + std::sqrt(1.0 - overlap * overlap)); }

inline double unambiguous_optimum(double overlap) { return 1.0 - overlap; }

// ρ = ½(I + r·σ).
inline std::array<double, 3> bloch(const CMatrix& rho) {
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

inline double qubit_trace_distance(const CMatrix& rho, const CMatrix& sigma) {
  const auto r = bloch(rho);
  const auto s = bloch(sigma);
  return 0.5 * std::sqrt((r[0] - s[0]) * (r[0] - s[0]) + (r[1] - s[1]) * (r[1] - s[1]) + (r[2] - s[2]) * (r[2] - s[2]));
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace qdiscrim::oracle
