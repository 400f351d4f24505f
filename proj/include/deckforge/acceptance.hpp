#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace deckforge {

struct AcceptanceOptions {
    bool stretch = false;    // include the n = 9 exhaustive scans
    int jobs = 1;            // worker threads for the graph scans
    std::uint64_t seed = 0;  // seeds the randomized deck-algebra checks
};

struct AcceptanceResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // ground truth when the check fails, extras when it passes
    double seconds = 0.0;
};

// Runs the full library acceptance suite: fourteen numbered checks covering
// deck censuses, exhaustive same-deck scans, construction families, the
// degree-list and structure reconstructors, and the deck algebra.  Streams
// one PASS/FAIL line per criterion to `out` as it finishes and returns all
// results.  Deterministic for a fixed options value.
std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& out);

}  // namespace deckforge
