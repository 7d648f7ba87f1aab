// Copyright 2026 The Islands Authors
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

#ifndef ISLANDS_BENCH_H
#define ISLANDS_BENCH_H

#include <cstddef>
#include <cstdint>

#include "islands/circuit.h"

namespace islands {

enum class BenchSuite { Clifford, Matchgate };

struct BenchResult {
    std::size_t num_qubits;
    std::size_t num_gates;
    /// Best wall time of the simulation over all repeats; generation is not timed.
    double wall_ms;
    MeasurementOutcome outcome;
};

/// Generates a seeded random circuit of the suite's island and simulates a Z
/// measurement of line 1 on |0...0>. Throws std::invalid_argument on bad sizes.
BenchResult run_bench(BenchSuite suite, std::size_t num_qubits, std::size_t num_gates, std::uint64_t seed,
                      std::size_t repeat = 1);

}  // namespace islands

#endif
