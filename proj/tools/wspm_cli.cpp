#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wspm/assembly.hpp"
#include "wspm/bench.hpp"
#include "wspm/cactus.hpp"
#include "wspm/families.hpp"
#include "wspm/io.hpp"
#include "wspm/oracles.hpp"
#include "wspm/verify.hpp"

namespace {

int log_level() {
    const char* env = std::getenv("WSPM_LOG");
    return env ? std::atoi(env) : 0;
}

wspm::CubicGraph load_input(const std::string& path) {
    wspm::CubicGraph g = path == "-" ? wspm::load_graph(std::cin) : wspm::load_graph_file(path);
    if (!g.is_connected()) throw wspm::DisconnectedError("input graph is not connected");
    return g;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw wspm::InputError("cannot open '" + out_path + "' for writing");
    out << text;
}

int dispatch(const CLI::App& app,
             const std::string& input, const std::string& out_path, const std::string& matching_path,
             const std::string& family, const std::string& backend, long long budget, int cap,
             bool verify_flag, int kmin, int kmax, const std::string& cuts_kind) {
    using namespace wspm;

    if (app.got_subcommand("solve")) {
        CubicGraph g = load_input(input);
        WspmOptions opts;
        opts.verify = verify_flag;
        opts.solve.budget = budget;
        opts.solve.enum_cap = cap;
        solver_backend(backend);  // validate the name; "exact" is the only one
        if (log_level() >= 1)
            opts.forward.after_step = [](const CubicGraph&, const Cactus& t, const Phi&,
                                         const ReductionRecord& r) {
                std::cerr << "step " << r.index << ": removed (" << r.e1 << "," << r.e2
                          << ") added (" << r.e1p << "," << r.e2p << "), cactus edges left "
                          << t.live_edge_count() << "\n";
            };
        Matching m = wspm::wspm(g, opts);
        std::ostringstream text;
        store_matching(m, text);
        write_output(out_path, text.str());
        return 0;
    }

    if (app.got_subcommand("verify")) {
        CubicGraph g = load_graph_file(input);
        Matching m = load_matching_file(matching_path, g);
        VerifyReport report = verify_wspm(g, m, cap);
        std::cout << report.describe();
        return report.valid() ? 0 : 1;
    }

    if (app.got_subcommand("gen")) {
        CubicGraph g = gen_family(family);
        if (family.rfind("block", 0) != 0) {
            g.require_cubic();
            if (EdgeId b = find_bridge(g); b != -1) throw HasBridgeError(b);
        }
        std::ostringstream text;
        store_graph(g, text);
        write_output(out_path, text.str());
        return 0;
    }

    if (app.got_subcommand("trace")) {
        CubicGraph g = load_input(input);
        if (EdgeId b = find_bridge(g); b != -1) throw HasBridgeError(b);
        CactusModel model = build_cactus(g);
        ReductionPlan plan = forward_phase(g, model.cactus, model.phi);
        std::ostringstream text;
        for (const ReductionRecord& r : plan.records) {
            int continuing = plan.original_n;
            for (int i = 0; i <= r.piece; ++i) continuing -= plan.pieces[i].size();
            text << r.index << ": removed (" << r.e1 << "," << r.e2 << ") added (" << r.e1p << ","
                 << r.e2p << ") piece_sizes (" << plan.pieces[r.piece].size() << "," << continuing
                 << ")\n";
        }
        text << "pieces " << plan.pieces.size() << " ops " << plan.op_count << "\n";
        write_output(out_path, text.str());
        return 0;
    }

    if (app.got_subcommand("cuts")) {
        CubicGraph g = load_input(input);
        std::ostringstream text;
        if (cuts_kind == "two") {
            for (const CutPair& c : enumerate_2_edge_cuts(g)) text << c[0] << " " << c[1] << "\n";
        } else if (cuts_kind == "three") {
            for (const CutTriple& c : enumerate_3_edge_cuts(g, cap))
                text << c[0] << " " << c[1] << " " << c[2] << "\n";
        } else {
            throw BadParamsError("cuts kind must be 'two' or 'three'");
        }
        write_output(out_path, text.str());
        return 0;
    }

    if (app.got_subcommand("cactus")) {
        CubicGraph g = load_input(input);
        CactusModel model = build_cactus(g);
        write_output(out_path, cactus_to_dot(model.cactus, model.phi));
        return 0;
    }

    if (app.got_subcommand("bench")) {
        auto records = run_bench(kmin, kmax);
        std::ostringstream text;
        write_bench_csv(records, text);
        write_output(out_path, text.str());
        return 0;
    }

    std::cerr << app.help();
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"well-spread perfect matchings in bridgeless cubic graphs"};
    app.require_subcommand(0, 1);

    std::string input = "-", out_path, matching_path, family, backend = "exact";
    std::string cuts_kind;
    long long budget = 50'000'000;
    int cap = wspm::kDefaultEnumCap;
    bool verify_flag = false;
    int kmin = 2, kmax = 2;

    auto* solve = app.add_subcommand("solve", "compute a well-spread perfect matching");
    solve->add_option("file", input, "edge-list file, or - for stdin");
    solve->add_flag("--verify", verify_flag, "verify the result with the brute-force checker");
    solve->add_option("--backend", backend, "solver backend (exact)");
    solve->add_option("--budget", budget, "solver node-expansion cap");
    solve->add_option("--cap", cap, "cut enumeration cap (edges)");
    solve->add_option("-o,--output", out_path, "matching output file");

    auto* verify = app.add_subcommand("verify", "check a matching file against a graph");
    verify->add_option("graph", input)->required();
    verify->add_option("matching", matching_path)->required();
    verify->add_option("--cap", cap, "cut enumeration cap (edges)");

    auto* gen = app.add_subcommand("gen", "emit a named family member");
    gen->add_option("family", family, "theta|k4|k33|petersen|block|h8|necklace:K|random:N:SEED")
        ->required();
    gen->add_option("-o,--output", out_path);

    auto* trace = app.add_subcommand("trace", "print the reduction records");
    trace->add_option("file", input);
    trace->add_option("-o,--output", out_path);

    auto* cuts = app.add_subcommand("cuts", "enumerate 2- or 3-edge-cuts");
    cuts->add_option("kind", cuts_kind, "two|three")->required();
    cuts->add_option("file", input);
    cuts->add_option("--cap", cap);
    cuts->add_option("-o,--output", out_path);

    auto* cactus = app.add_subcommand("cactus", "operations on the cactus model");
    auto* dump = cactus->add_subcommand("dump", "emit the cactus as DOT");
    dump->add_option("file", input);
    dump->add_option("-o,--output", out_path);
    cactus->require_subcommand(1);

    auto* bench = app.add_subcommand("bench", "forward-phase scaling on necklace(k)");
    bench->add_option("--kmin", kmin, "smallest block count")->required();
    bench->add_option("--kmax", kmax, "largest block count")->required();
    bench->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(app, input, out_path, matching_path, family, backend, budget, cap,
                        verify_flag, kmin, kmax, cuts_kind);
    } catch (const wspm::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wspm::NotCubicError& e) {
        std::cerr << "error: not cubic: " << e.what() << "\n";
        return 2;
    } catch (const wspm::HasBridgeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wspm::DisconnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wspm::BadParamsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wspm::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wspm::TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wspm::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
