// stronggenus command line: generators, embedding queries, genus searches and
// the full instance verifier, all over the text formats of the library.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stronggenus/bounds.hpp"
#include "stronggenus/embedding.hpp"
#include "stronggenus/families.hpp"
#include "stronggenus/graph.hpp"
#include "stronggenus/homology.hpp"
#include "stronggenus/planarity.hpp"
#include "stronggenus/search.hpp"
#include "stronggenus/verify.hpp"

namespace fs = std::filesystem;
using namespace stronggenus;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    out << content;
}

Embedding load_embedding(const std::string& path) { return parse_embedding(slurp(path)); }

int default_threads() {
    if (const char* env = std::getenv("STRONGGENUS_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (...) {
        }
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph embeddings on surfaces: faces, genus, strong embeddings"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    // gen ---------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a family instance and write its files");
    std::string family = "hex";
    int rings = 2;
    std::string out_dir = ".";
    gen->add_option("--family", family, "family name")->check(CLI::IsMember({"hex", "k33"}));
    gen->add_option("--rings", rings, "number of rings (hex family)");
    gen->add_option("--out", out_dir, "output directory");

    // file-based queries --------------------------------------------------
    std::string emb_path, graph_path, out_path;
    int opt_x = 0, opt_y = 0;

    auto* faces_cmd = app.add_subcommand("faces", "trace and print the facial walks");
    faces_cmd->add_option("embedding", emb_path, "embedding file")->required();

    auto* genus_cmd = app.add_subcommand("genus", "surface of an embedding");
    genus_cmd->add_option("embedding", emb_path, "embedding file")->required();

    auto* strong_cmd = app.add_subcommand("strong-check", "is every face a cycle?");
    strong_cmd->add_option("embedding", emb_path, "embedding file")->required();

    auto* poly_cmd = app.add_subcommand("polyhedral-check",
                                        "is every face an induced nonseparating cycle?");
    poly_cmd->add_option("embedding", emb_path, "embedding file")->required();

    auto* fdist_cmd = app.add_subcommand("fdist", "facial distance between two vertices");
    fdist_cmd->add_option("embedding", emb_path, "embedding file")->required();
    fdist_cmd->add_option("--x", opt_x, "first vertex (1-based)")->required();
    fdist_cmd->add_option("--y", opt_y, "second vertex (1-based)")->required();

    auto* cert_cmd = app.add_subcommand("nested-cert",
                                        "extract the nested separating-cycle certificate");
    cert_cmd->add_option("embedding", emb_path, "planar embedding file")->required();
    cert_cmd->add_option("--x", opt_x, "inner terminal (1-based)")->required();
    cert_cmd->add_option("--y", opt_y, "outer terminal (1-based)")->required();
    cert_cmd->add_option("--out", out_path, "write the certificate here");

    // searches ------------------------------------------------------------
    int cap = -1;
    int threads = default_threads();
    double timeout = 0.0;
    unsigned long long seed = 0;
    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--cap", cap, "genus cap (above it: above_cap)");
        cmd->add_option("--threads", threads, "worker threads");
        cmd->add_option("--timeout", timeout, "seconds before giving up");
        cmd->add_option("--seed", seed, "seed echoed into reports");
        cmd->add_option("--out", out_path, "write the witness embedding here");
    };
    auto* sg_cmd = app.add_subcommand("sg-search", "minimum genus of a strong embedding");
    sg_cmd->add_option("graph", graph_path, "graph file")->required();
    add_search_flags(sg_cmd);
    auto* mg_cmd = app.add_subcommand("min-genus", "minimum genus over all rotation systems");
    mg_cmd->add_option("graph", graph_path, "graph file")->required();
    add_search_flags(mg_cmd);

    // bounds ----------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form genus bounds");
    int b_girth = 0, b_n = 0, b_m = 0, b_q = 0;
    bounds_cmd->add_option("--girth", b_girth, "girth")->required();
    bounds_cmd->add_option("--n", b_n, "order")->required();
    bounds_cmd->add_option("--m", b_m, "edge count")->required();
    bounds_cmd->add_option("--q", b_q, "facial distance (optional)");

    // verify ------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "full pipeline on a family instance");
    verify_cmd->add_option("--family", family, "family name")->check(CLI::IsMember({"hex"}));
    verify_cmd->add_option("--rings", rings, "number of rings");
    verify_cmd->add_option("--cap", cap, "search cap (default: computed genus)");
    verify_cmd->add_option("--threads", threads, "worker threads");
    verify_cmd->add_option("--timeout", timeout, "search timeout in seconds");
    verify_cmd->add_option("--seed", seed, "seed echoed into reports");
    verify_cmd->add_option("--out", out_dir, "also write the instance files here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (family == "k33") {
                spit(fs::path(out_dir) / "k33.graph", write_graph(k33()));
                std::cout << (fs::path(out_dir) / "k33.graph").string() << "\n";
                return 0;
            }
            NearPlanarInstance inst = hex_cylinder(rings);
            fs::path dir(out_dir);
            std::string stem = "hex-" + std::to_string(rings);
            spit(dir / (stem + ".graph"), write_graph(inst.graph));
            spit(dir / (stem + "-planar.emb"), write_embedding(inst.reference_planar));
            spit(dir / (stem + "-rings.cert"), write_certificate(inst.reference_rings));
            if (inst.reference_toroidal)
                spit(dir / (stem + "-toroidal.emb"), write_embedding(*inst.reference_toroidal));
            std::cout << (dir / stem).string() << ".{graph,emb,cert}\n";
            return 0;
        }
        if (faces_cmd->parsed()) {
            Embedding e = load_embedding(emb_path);
            auto faces = trace_faces(e);
            for (const auto& w : faces) {
                std::cout << "f";
                for (int v : w.vertices) std::cout << " " << v + 1;
                std::cout << "\n";
            }
            return 0;
        }
        if (genus_cmd->parsed()) {
            Embedding e = load_embedding(emb_path);
            SurfaceKind sk = surface_of(e);
            if (format == "json")
                std::cout << "{\"orientable\": " << (sk.orientable ? "true" : "false")
                          << ", \"genus\": " << sk.genus
                          << ", \"euler_characteristic\": " << sk.euler_characteristic()
                          << "}\n";
            else
                std::cout << (sk.orientable ? "orientable" : "non-orientable") << " genus "
                          << sk.genus << "\n";
            return 0;
        }
        if (strong_cmd->parsed()) {
            bool ok = is_strong(load_embedding(emb_path));
            std::cout << (ok ? "strong" : "not-strong") << "\n";
            return ok ? 0 : 1;
        }
        if (poly_cmd->parsed()) {
            bool ok = is_polyhedral(load_embedding(emb_path));
            std::cout << (ok ? "polyhedral" : "not-polyhedral") << "\n";
            return ok ? 0 : 1;
        }
        if (fdist_cmd->parsed()) {
            Embedding e = load_embedding(emb_path);
            std::cout << facial_distance(e, opt_x - 1, opt_y - 1) << "\n";
            return 0;
        }
        if (cert_cmd->parsed()) {
            Embedding e = load_embedding(emb_path);
            NestedCertificate cert = nested_cycle_certificate(e, opt_x - 1, opt_y - 1);
            std::string text = write_certificate(cert);
            if (!out_path.empty()) spit(out_path, text);
            std::cout << text;
            return 0;
        }
        if (sg_cmd->parsed() || mg_cmd->parsed()) {
            Graph g = parse_graph(slurp(graph_path));
            SearchOptions opts;
            if (cap >= 0) opts.cap = cap;
            opts.threads = threads;
            opts.timeout_sec = timeout;
            SearchResult res =
                sg_cmd->parsed() ? strong_genus(g, opts) : min_genus(g, opts);
            std::string witness_file;
            if (res.witness && !out_path.empty()) {
                spit(out_path, write_embedding(*res.witness));
                witness_file = out_path;
            }
            std::cout << search_result_to_json(res, witness_file) << "\n";
            return 0;
        }
        if (bounds_cmd->parsed()) {
            std::cout << bounds_to_json(b_n, b_m, b_girth,
                                        b_q > 0 ? std::optional<int>(b_q) : std::nullopt)
                      << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            NearPlanarInstance inst = hex_cylinder(rings);
            SearchOptions opts;
            opts.threads = threads;
            opts.timeout_sec = timeout;
            VerificationReport rep =
                verify_instance(inst, "hex-" + std::to_string(rings), cap, opts);
            if (!out_dir.empty() && out_dir != ".") {
                fs::path dir(out_dir);
                std::string stem = "hex-" + std::to_string(rings);
                spit(dir / (stem + ".graph"), write_graph(inst.graph));
                spit(dir / (stem + "-planar.emb"), write_embedding(inst.reference_planar));
                spit(dir / (stem + "-rings.cert"), write_certificate(inst.reference_rings));
            }
            std::cout << (format == "json" ? report_to_json(rep) : report_to_text(rep))
                      << "\n";
            return rep.failed() ? 1 : 0;
        }
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
