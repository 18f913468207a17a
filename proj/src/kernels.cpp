// Copyright 2026 The lricwalk Authors
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

#include "lric/kernels.hpp"

#include <array>
#include <vector>

#include <omp.h>

namespace lric::kernels {

namespace {

struct Stencil {
  int n = 0;
  int count = 0;  // 2 (cycle) or 4
  std::array<int, 4> offsets{};
};

Stencil make_stencil(const LricSpec& spec) {
  Stencil s;
  s.n = spec.n_nodes();
  const auto offs = spec.neighbor_offsets();
  s.count = static_cast<int>(offs.size());
  for (int i = 0; i < s.count; ++i) s.offsets[i] = offs[i];
  return s;
}

// One output row. `cols` holds (k + o) mod N for every offset, laid out
// offset-major.
inline void commutator_row(const Stencil& st, const ComplexMatrix& rho,
                           const int* cols, int j, Complex* out_row) {
  const int n = st.n;
  const Complex* row = rho.data() + static_cast<std::ptrdiff_t>(j) * n;
  std::array<const Complex*, 4> nrow{};
  for (int o = 0; o < st.count; ++o) {
    nrow[o] = rho.data() +
              static_cast<std::ptrdiff_t>((j + st.offsets[o]) % n) * n;
  }
  for (int k = 0; k < n; ++k) {
    double re = 0.0;
    double im = 0.0;
    for (int o = 0; o < st.count; ++o) {
      const Complex a = row[cols[o * n + k]];
      const Complex b = nrow[o][k];
      re += a.real() - b.real();
      im += a.imag() - b.imag();
    }
    // (i/4) (re + i im)
    out_row[k] = Complex{-0.25 * im, 0.25 * re};
  }
}

std::vector<int> column_table(const Stencil& st) {
  std::vector<int> cols(static_cast<std::size_t>(st.count) * st.n);
  for (int o = 0; o < st.count; ++o) {
    for (int k = 0; k < st.n; ++k) cols[o * st.n + k] = (k + st.offsets[o]) % st.n;
  }
  return cols;
}

}  // namespace

void coherent_commutator_serial(const LricSpec& spec, const ComplexMatrix& rho,
                                ComplexMatrix& out) {
  const Stencil st = make_stencil(spec);
  out.resize(st.n, st.n);
  const auto cols = column_table(st);
  for (int j = 0; j < st.n; ++j) {
    commutator_row(st, rho, cols.data(), j,
                   out.data() + static_cast<std::ptrdiff_t>(j) * st.n);
  }
}

void coherent_commutator_omp(const LricSpec& spec, const ComplexMatrix& rho,
                             ComplexMatrix& out) {
  const Stencil st = make_stencil(spec);
  out.resize(st.n, st.n);
  const auto cols = column_table(st);
  const int n = st.n;
#pragma omp parallel for schedule(static) if (n >= kParallelRowThreshold)
  for (int j = 0; j < n; ++j) {
    commutator_row(st, rho, cols.data(), j,
                   out.data() + static_cast<std::ptrdiff_t>(j) * n);
  }
}

}  // namespace lric::kernels
