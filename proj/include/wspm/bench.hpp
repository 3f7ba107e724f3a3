#pragma once

#include <iosfwd>
#include <vector>

namespace wspm {

struct BenchRecord {
    int k = 0;             // necklace block count
    int n = 0;             // vertices
    long long ops = 0;     // forward-phase op counter
    double build_ms = 0;   // cactus construction
    double forward_ms = 0; // forward phase, best of several runs
    int piece_count = 0;
};

/// Forward-phase scaling on necklace(k) for k = kmin, 2*kmin, ..., <= kmax.
/// Empty range yields an empty list.
std::vector<BenchRecord> run_bench(int kmin, int kmax);

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace wspm
