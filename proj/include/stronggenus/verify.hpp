#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stronggenus/families.hpp"
#include "stronggenus/search.hpp"

namespace stronggenus {

/// Machine-checkable summary of one full instance verification run: genus of
/// the graph, certified strong-genus lower bound with its method, facial
/// distance, certificate summary, per-property pass/fail, timings.
struct VerificationReport {
    std::string instance;
    int rings = 0;

    std::optional<int> gamma;        // orientable genus, when certified
    int q = 0;                       // facial distance in the planar part
    int fdist_bound = 0;             // strong-genus lower bound from q
    int sg_lower = 0;                // best certified lower bound
    std::string sg_lower_method;     // "search-bnb" | "search-exhaustive" | "fdist-bound"
    std::optional<int> sg_exact;     // when the search found a strong embedding
    bool counterexample = false;     // sg_lower > gamma
    bool expected_counterexample = false;

    struct Check {
        std::string name;
        bool pass;
    };
    std::vector<Check> checks;

    SearchOptions config;
    std::optional<SearchResult> search; // strong search outcome, when run
    std::vector<std::pair<std::string, double>> timings_ms;

    bool all_checks_pass() const;
    /// exit status contract: 0 ok, 1 failed verification
    bool failed() const;
};

/// Run the full pipeline on an instance: planarity both ways, genus witness,
/// facial distance, ring certificate, capped strong-genus search with the
/// facial-distance bound as fallback.  cap < 0 means "use the computed gamma".
VerificationReport verify_instance(const NearPlanarInstance& inst,
                                   const std::string& name, int cap,
                                   const SearchOptions& search_opts);

std::string report_to_json(const VerificationReport& r, bool include_timings = true);
std::string report_to_text(const VerificationReport& r);

std::string search_result_to_json(const SearchResult& r,
                                  const std::string& witness_file = "");

std::string bounds_to_json(int n, int m, int girth, std::optional<int> q);

} // namespace stronggenus
