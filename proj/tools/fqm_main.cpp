#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fqm/crtfast.hpp"
#include "fqm/dynamics.hpp"
#include "fqm/json_io.hpp"
#include "fqm/metaplectic.hpp"
#include "fqm/tolerance.hpp"
#include "fqm/verify.hpp"

namespace {

std::array<int64_t, 4> parse_quad(const std::string& text, const char* what) {
    std::array<int64_t, 4> out{};
    std::stringstream ss(text);
    std::string item;
    size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) throw fqm::Error(std::string(what) + ": expected 4 comma-separated integers");
        out[i++] = std::stoll(item);
    }
    if (i != 4) throw fqm::Error(std::string(what) + ": expected 4 comma-separated integers");
    return out;
}

std::pair<int64_t, int64_t> parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw fqm::Error("--point: expected q,p");
    return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fqm::Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw fqm::Error("cannot write " + out_path);
    out << content << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite quantum mechanics over Z_N: metaplectic operators, "
                 "their Chinese-remainder factorization, and fast application"};
    app.require_subcommand(1);

    int64_t n_value = 0;
    std::string sl2_text, out_path, map_path, vec_path, point_text, format = "json";
    int samples = 20, reps = 11;
    uint64_t seed = 0;
    std::string mode = "dense";
    bool fast = false;

    auto* cmd_build = app.add_subcommand("build", "Build U(A) as a dense or factored document");
    cmd_build->add_option("--n", n_value, "odd modulus N")->required();
    cmd_build->add_option("--sl2", sl2_text, "matrix entries a,b,c,d")->required();
    cmd_build->add_option("--mode", mode, "dense|factored")
        ->check(CLI::IsMember({"dense", "factored"}));
    cmd_build->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_apply = app.add_subcommand("apply", "Apply a map document to a vector document");
    cmd_apply->add_option("--map", map_path, "map document (unitary or factored), - for stdin")
        ->required();
    cmd_apply->add_option("--vec", vec_path, "vector document, - for stdin")->required();
    cmd_apply->add_flag("--fast", fast, "require the factored fast path");
    cmd_apply->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "Run the invariant suite at modulus N");
    cmd_verify->add_option("--n", n_value, "odd modulus N")->required();
    cmd_verify->add_option("--samples", samples, "random group elements per sampled check");
    cmd_verify->add_option("--seed", seed, "sampling seed");
    cmd_verify->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_bench = app.add_subcommand("bench", "Time dense against factored application");
    cmd_bench->add_option("--n", n_value, "odd modulus N")->required();
    cmd_bench->add_option("--sl2", sl2_text, "matrix entries a,b,c,d")->required();
    cmd_bench->add_option("--reps", reps, "repetitions per timing (median reported)");
    cmd_bench->add_option("--seed", seed, "vector seed");
    cmd_bench->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd_bench->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_orbit = app.add_subcommand("orbit", "Classical torus orbits and map period");
    cmd_orbit->add_option("--n", n_value, "odd modulus N")->required();
    cmd_orbit->add_option("--sl2", sl2_text, "matrix entries a,b,c,d")->required();
    cmd_orbit->add_option("--point", point_text, "single starting point q,p");
    cmd_orbit->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd_orbit->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_factor = app.add_subcommand("factor", "Prime-power factorization and CRT context");
    cmd_factor->add_option("--n", n_value, "odd modulus N")->required();
    cmd_factor->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_build->parsed()) {
            const fqm::OddModulus n(n_value);
            const auto q = parse_quad(sl2_text, "--sl2");
            const fqm::SL2Element a(q[0], q[1], q[2], q[3], n);
            if (mode == "dense") {
                emit(out_path, fqm::dump_unitary(fqm::build_U(a)));
            } else {
                const fqm::SinoContext ctx(n);
                emit(out_path, fqm::dump_factored(fqm::factor_map(a, ctx)));
            }
        } else if (cmd_apply->parsed()) {
            const fqm::Document map_doc = fqm::parse_document(read_file(map_path));
            const fqm::Document vec_doc = fqm::parse_document(read_file(vec_path));
            if (vec_doc.kind != fqm::DocKind::vector)
                throw fqm::Error("--vec: expected a vector document");
            std::vector<fqm::cd> result;
            if (map_doc.kind == fqm::DocKind::factored) {
                result = fqm::apply_factored(fqm::to_factored_map(map_doc), vec_doc.vec);
            } else if (map_doc.kind == fqm::DocKind::unitary) {
                if (fast)
                    throw fqm::Error("--fast needs a factored map document, got a dense one");
                result = fqm::matvec(map_doc.matrix, vec_doc.vec);
            } else {
                throw fqm::Error("--map: expected a unitary or factored document");
            }
            emit(out_path, fqm::dump_vector(result));
        } else if (cmd_verify->parsed()) {
            const fqm::OddModulus n(n_value);
            const auto report =
                fqm::run_verification(n, samples, seed, fqm::ToleranceConfig::from_env());
            emit(out_path, fqm::dump_verification(report));
            return report.all_pass() ? 0 : 1;
        } else if (cmd_bench->parsed()) {
            const fqm::OddModulus n(n_value);
            const auto q = parse_quad(sl2_text, "--sl2");
            const fqm::SL2Element a(q[0], q[1], q[2], q[3], n);
            const auto report = fqm::bench_apply(n, a, reps, seed);
            emit(out_path,
                 format == "csv" ? fqm::dump_bench_csv(report) : fqm::dump_bench_json(report));
        } else if (cmd_orbit->parsed()) {
            const fqm::OddModulus n(n_value);
            const auto q = parse_quad(sl2_text, "--sl2");
            const fqm::SL2Element a(q[0], q[1], q[2], q[3], n);
            const int64_t order = fqm::order_mod(a);
            if (!point_text.empty()) {
                const auto [pq, pp] = parse_point(point_text);
                const auto points = fqm::orbit({pq, pp}, a);
                emit(out_path, format == "csv" ? fqm::dump_orbit_point_csv(points)
                                               : fqm::dump_orbit_point_json(a, order, points));
            } else {
                const auto classes = fqm::orbit_partition(a);
                emit(out_path, format == "csv"
                                   ? fqm::dump_orbit_partition_csv(classes)
                                   : fqm::dump_orbit_partition_json(a, order, classes));
            }
        } else if (cmd_factor->parsed()) {
            const fqm::OddModulus n(n_value);
            emit(out_path, fqm::dump_sino(fqm::SinoContext(n)));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
