// Copyright 2026 The swapsynth Authors
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

// Decomposes a random two-qubit gate both ways and prints what each
// circuit costs on the GaAs profile.

#include <cstdio>

#include "swapsynth/swapsynth.hpp"

int main() {
  using namespace swapsynth;

  const Matrix4 u = haar_random_unitary<4>(2026);
  const CanonicalDecomposition d = kak_decompose(u);
  std::printf("h = (%.6f, %.6f, %.6f)\n", d.params.hx, d.params.hy, d.params.hz);

  const SwapAngles a = swap_angles(d.params);
  std::printf("swap exponents = (%.6f, %.6f, %.6f)\n", a.alpha, a.beta, a.gamma);

  const HardwareProfile gaas = builtin_profile("gaas");
  for (const Circuit& c : {synthesize_swap(d), synthesize_cnot(d)}) {
    const GateCounts n = gate_counts(c);
    const Schedule s = schedule_circuit(c, gaas);
    std::printf("%d swap_pow, %d cnot, %d local: residual %.2e, %.1f ns\n", n.swaps, n.cnots,
                n.locals, phase_distance(evaluate_circuit(c), u), s.total_time * 1e9);
  }

  std::printf("E_p = %.6f (CNOT %.6f, sqrt(SWAP) %.6f)\n", ep_exact(u), ep_exact(cnot()),
              ep_exact(swap_pow(0.5)));
  return 0;
}
