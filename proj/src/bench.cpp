#include "wspm/bench.hpp"

#include <chrono>
#include <ostream>

#include "wspm/cactus.hpp"
#include "wspm/families.hpp"
#include "wspm/reduction.hpp"

namespace wspm {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

std::vector<BenchRecord> run_bench(int kmin, int kmax) {
    if (kmin < 2) throw BadParamsError("bench needs kmin >= 2");
    std::vector<BenchRecord> out;
    for (long long k = kmin; k <= kmax; k *= 2) {
        BenchRecord rec;
        rec.k = static_cast<int>(k);
        CubicGraph g = make_necklace(rec.k);
        rec.n = g.live_vertex_count();

        auto t0 = std::chrono::steady_clock::now();
        CactusModel model = build_cactus(g);
        rec.build_ms = ms_since(t0);

        // Best of several runs; single timings are noise-bound at this scale.
        int runs = 7;
        double best = -1;
        ReductionPlan plan;
        for (int r = 0; r < runs; ++r) {
            auto t1 = std::chrono::steady_clock::now();
            plan = forward_phase(g, model.cactus, model.phi);
            double t = ms_since(t1);
            if (best < 0 || t < best) best = t;
        }
        rec.forward_ms = best;
        rec.ops = plan.op_count;
        rec.piece_count = static_cast<int>(plan.pieces.size());
        out.push_back(rec);
    }
    return out;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "k,n,ops,ops_per_vertex,build_ms,forward_ms,pieces\n";
    for (const BenchRecord& r : records)
        out << r.k << "," << r.n << "," << r.ops << "," << static_cast<double>(r.ops) / r.n << ","
            << r.build_ms << "," << r.forward_ms << "," << r.piece_count << "\n";
}

}  // namespace wspm
