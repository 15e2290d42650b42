#include "stronggenus/verify.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "stronggenus/bounds.hpp"
#include "stronggenus/planarity.hpp"

namespace stronggenus {

using nlohmann::json;

bool VerificationReport::all_checks_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

bool VerificationReport::failed() const {
    if (!all_checks_pass()) return true;
    return expected_counterexample && !counterexample;
}

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         t0)
            .count();
    }
};

} // namespace

VerificationReport verify_instance(const NearPlanarInstance& inst,
                                   const std::string& name, int cap,
                                   const SearchOptions& search_opts) {
    VerificationReport rep;
    rep.instance = name;
    rep.rings = inst.rings();
    auto check = [&](const std::string& what, bool ok) {
        rep.checks.push_back({what, ok});
        return ok;
    };

    Stopwatch total;
    // 1. planarity both ways
    {
        Stopwatch sw;
        Graph minus = remove_edge(inst.graph, inst.planarizing_edge);
        auto planar = planar_embedding(minus);
        check("graph_minus_edge_planar", planar.has_value());
        check("reference_planar_chi2", euler_characteristic(inst.reference_planar) == 2);
        auto full = planar_embedding(inst.graph);
        bool full_planar = full.has_value();
        rep.timings_ms.emplace_back("planarity", sw.ms());

        // 2. genus: planar means 0; otherwise the handle-routed witness pins 1
        if (full_planar) {
            rep.gamma = 0;
        } else if (inst.reference_toroidal) {
            SurfaceKind sk = surface_of(*inst.reference_toroidal);
            if (check("toroidal_witness_genus1", sk.orientable && sk.genus == 1))
                rep.gamma = 1;
        }
        check("gamma_certified", rep.gamma.has_value());
    }

    // 3. facial distance and the certificate
    {
        Stopwatch sw;
        rep.q = facial_distance(inst.reference_planar, inst.x, inst.y);
        check("facial_distance_matches_rings", rep.q == inst.rings() + 1);
        std::vector<std::string> reasons;
        bool cert_ok = verify_certificate(remove_edge(inst.graph, inst.planarizing_edge),
                                          inst.reference_rings, inst.reference_planar,
                                          &reasons);
        check("certificate_valid", cert_ok);
        check("certificate_count", inst.reference_rings.ring_count() == rep.q - 1);
        rep.fdist_bound = strong_genus_lower_bound(rep.q);
        rep.timings_ms.emplace_back("facial_distance", sw.ms());
    }

    // 4. strong-genus search below the cap, falling back to the facial-distance
    // bound when the search is not a proof
    {
        Stopwatch sw;
        SearchOptions opts = search_opts;
        opts.cap = cap >= 0 ? cap : rep.gamma.value_or(0);
        rep.config = opts;
        SearchResult sr = strong_genus(inst.graph, opts);
        rep.search = sr;
        rep.timings_ms.emplace_back("sg_search", sw.ms());

        int search_lb = 0;
        if (sr.exhaustive) {
            if (!sr.value) {
                search_lb = sr.cap_used + 1; // proof of emptiness below the cap
            } else {
                search_lb = *sr.value; // exact strong genus found
                rep.sg_exact = sr.value;
            }
        }
        if (search_lb >= rep.fdist_bound && sr.exhaustive) {
            rep.sg_lower = search_lb;
            rep.sg_lower_method = opts.prune ? "search-bnb" : "search-exhaustive";
        } else {
            rep.sg_lower = rep.fdist_bound;
            rep.sg_lower_method = "fdist-bound";
        }
        if (sr.value && sr.exhaustive)
            check("search_consistent_with_fdist_bound", *sr.value >= rep.fdist_bound);
    }

    if (rep.gamma) {
        rep.expected_counterexample = rep.fdist_bound > *rep.gamma;
        rep.counterexample = rep.sg_lower > *rep.gamma;
    }
    rep.timings_ms.emplace_back("total", total.ms());
    return rep;
}

std::string report_to_json(const VerificationReport& r, bool include_timings) {
    json j;
    j["instance"] = r.instance;
    j["rings"] = r.rings;
    j["gamma"] = r.gamma ? json(*r.gamma) : json(nullptr);
    j["q"] = r.q;
    j["fdist_bound"] = r.fdist_bound;
    j["sg_lower"] = {{"value", r.sg_lower}, {"method", r.sg_lower_method}};
    if (r.sg_exact) j["sg_exact"] = *r.sg_exact;
    j["counterexample"] = r.counterexample;
    j["expected_counterexample"] = r.expected_counterexample;
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
    j["checks"] = checks;
    j["config"] = {{"cap", r.config.cap},
                   {"threads", r.config.threads},
                   {"timeout_sec", r.config.timeout_sec},
                   {"prune", r.config.prune}};
    if (r.search) {
        j["search"] = {{"quantity", "strong_genus"},
                       {"value", r.search->value ? json(*r.search->value) : json("above_cap")},
                       {"cap", r.search->cap_used},
                       {"exhaustive", r.search->exhaustive},
                       {"nodes", r.search->nodes}};
    }
    if (include_timings) {
        json t;
        for (const auto& [k, v] : r.timings_ms) t[k] = v;
        j["timings_ms"] = t;
    }
    j["pass"] = !r.failed();
    return j.dump(2);
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "instance " << r.instance << " (rings " << r.rings << ")\n";
    out << "  gamma          " << (r.gamma ? std::to_string(*r.gamma) : "unknown") << "\n";
    out << "  q              " << r.q << "\n";
    out << "  fdist bound    " << r.fdist_bound << "\n";
    out << "  sg lower       " << r.sg_lower << " [" << r.sg_lower_method << "]\n";
    if (r.sg_exact) out << "  sg exact       " << *r.sg_exact << "\n";
    out << "  counterexample " << (r.counterexample ? "yes" : "no") << "\n";
    for (const auto& c : r.checks)
        out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << "\n";
    out << (r.failed() ? "FAILED" : "OK") << "\n";
    return out.str();
}

std::string search_result_to_json(const SearchResult& r, const std::string& witness_file) {
    json j;
    j["quantity"] = r.quantity == SearchQuantity::MinGenus ? "min_genus" : "strong_genus";
    j["value"] = r.value ? json(*r.value) : json("above_cap");
    j["cap"] = r.cap_used;
    j["exhaustive"] = r.exhaustive;
    j["nodes"] = r.nodes;
    if (!witness_file.empty()) j["witness_file"] = witness_file;
    return j.dump(2);
}

std::string bounds_to_json(int n, int m, int girth, std::optional<int> q) {
    BoundsReport rep;
    auto [olb, nlb] = euler_girth_bound(n, m, girth);
    rep.orientable_lb = olb;
    rep.nonorientable_lb = nlb;
    rep.max_genus_ub = max_genus_ub(n, m);
    if (girth >= 4 && girth % 2 == 0) rep.moore_order = moore_bound_cubic(girth);
    if (q) {
        rep.q = q;
        rep.fdist_bound = strong_genus_lower_bound(*q);
    }
    json j;
    j["n"] = n;
    j["m"] = m;
    j["girth"] = girth;
    j["orientable_lb"] = rep.orientable_lb;
    j["nonorientable_lb"] = rep.nonorientable_lb;
    j["max_genus_ub"] = rep.max_genus_ub;
    j["moore_order"] = rep.moore_order ? json(*rep.moore_order) : json(nullptr);
    j["q"] = rep.q ? json(*rep.q) : json(nullptr);
    j["fdist_bound"] = rep.fdist_bound ? json(*rep.fdist_bound) : json(nullptr);
    return j.dump(2);
}

} // namespace stronggenus
