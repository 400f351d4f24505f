// deckforge: exact k-deck computation, deck-based reconstruction, same-deck
// family generation, and exhaustive same-deck search for small graphs.
//
// Exit codes: 0 success, 1 verification/reconstruction failure, 2 usage
// error, 3 invalid input data.  Graphs travel as graph6, decks as JSON,
// search reports as JSON Lines.  Emitted graphs are canonical-form relabeled
// so output is stable across runs.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deckforge/acceptance.hpp"
#include "deckforge/canonical.hpp"
#include "deckforge/constructions.hpp"
#include "deckforge/deck.hpp"
#include "deckforge/degree.hpp"
#include "deckforge/family.hpp"
#include "deckforge/graph.hpp"
#include "deckforge/graph6.hpp"
#include "deckforge/search.hpp"

namespace {

using namespace deckforge;

struct ExitWith {
    int code;
    std::string message;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ExitWith{3, "cannot open " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph read_graph6_file(const std::string& path) {
    std::istringstream lines(slurp(path));
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            return parse_graph6(line);
        } catch (const std::exception& e) {
            throw ExitWith{3, path + ": " + e.what()};
        }
    }
    throw ExitWith{3, path + ": no graph6 line found"};
}

Deck read_deck_file(const std::string& path) {
    try {
        Deck d = deck_from_json(slurp(path));
        const DeckValidation v = validate_deck(d);
        if (!v.ok) throw ExitWith{3, path + ": invalid deck: " + v.reason};
        return d;
    } catch (const DeckError& e) {
        throw ExitWith{3, path + ": " + e.what()};
    }
}

// Empty path or "-" selects stdout.
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ExitWith{3, "cannot write " + path};
    out << text;
}

Graph relabeled(const Graph& g) { return graph_from_code(canonical_form(g)); }

std::string checkpoint_dir_for(const std::string& flag_value) {
    if (const char* env = std::getenv("DECKFORGE_CACHE"); env && *env) return env;
    return flag_value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deckforge: exact k-deck toolkit for small graphs"};
    app.require_subcommand(1);
    int rc = 0;

    // deck --k K --in G6 [--out JSON]
    auto* c_deck = app.add_subcommand("deck", "compute the k-deck of a graph6 graph");
    int deck_k = 0;
    std::string deck_in, deck_out;
    c_deck->add_option("--k", deck_k, "card order")->required();
    c_deck->add_option("--in", deck_in, "graph6 input file")->required();
    c_deck->add_option("--out", deck_out, "deck JSON output (default stdout)");
    c_deck->callback([&] {
        const Graph g = read_graph6_file(deck_in);
        try {
            emit(deck_out, deck_to_json(compute_deck(g, deck_k)) + "\n");
        } catch (const std::invalid_argument& e) {
            throw ExitWith{2, e.what()};
        }
    });

    // compare --a JSON --b JSON
    auto* c_cmp = app.add_subcommand("compare", "compare two deck JSON files");
    std::string cmp_a, cmp_b;
    c_cmp->add_option("--a", cmp_a, "first deck")->required();
    c_cmp->add_option("--b", cmp_b, "second deck")->required();
    c_cmp->callback([&] {
        const Deck a = read_deck_file(cmp_a);
        const Deck b = read_deck_file(cmp_b);
        if (decks_equal(a, b)) {
            std::cout << "EQUAL\n";
        } else {
            std::cout << "DIFFERENT\n";
            rc = 1;
        }
    });

    // reconstruct-degrees --in JSON
    auto* c_deg = app.add_subcommand("reconstruct-degrees",
                                     "recover the host degree list from a deck");
    std::string deg_in;
    c_deg->add_option("--in", deg_in, "deck JSON input")->required();
    c_deg->callback([&] {
        const std::vector<int> d = degree_list_from_deck(read_deck_file(deg_in));
        for (std::size_t i = 0; i < d.size(); ++i)
            std::cout << d[i] << (i + 1 < d.size() ? ' ' : '\n');
    });

    // reconstruct-multipartite --in JSON [--out G6]
    auto* c_multi = app.add_subcommand("reconstruct-multipartite",
                                       "recover a complete multipartite host from its deck");
    std::string multi_in, multi_out;
    c_multi->add_option("--in", multi_in, "deck JSON input")->required();
    c_multi->add_option("--out", multi_out, "graph6 output (default stdout)");
    c_multi->callback([&] {
        const std::vector<int> parts = reconstruct_complete_multipartite(read_deck_file(multi_in));
        for (std::size_t i = 0; i < parts.size(); ++i)
            std::cout << parts[i] << (i + 1 < parts.size() ? ' ' : '\n');
        emit(multi_out, write_graph6(relabeled(complete_multipartite(parts))) + "\n");
    });

    // reconstruct-components --in JSON [--out G6]
    auto* c_comp = app.add_subcommand(
        "reconstruct-components",
        "recover a host with small components from its deck via induced counts");
    std::string comp_in, comp_out;
    c_comp->add_option("--in", comp_in, "deck JSON input")->required();
    c_comp->add_option("--out", comp_out, "graph6 output (default stdout)");
    c_comp->callback([&] {
        try {
            const Graph host =
                assemble_components(reconstruct_components(read_deck_file(comp_in)));
            emit(comp_out, write_graph6(relabeled(host)) + "\n");
        } catch (const std::invalid_argument& e) {
            throw ExitWith{3, e.what()};
        }
    });

    // reconstruct-regular --in JSON --r R [--out G6]
    auto* c_reg = app.add_subcommand(
        "reconstruct-regular", "recover an r-regular host that is not 2-connected from its deck");
    std::string reg_in, reg_out;
    int reg_r = 0;
    c_reg->add_option("--in", reg_in, "deck JSON input")->required();
    c_reg->add_option("--r", reg_r, "regularity degree")->required();
    c_reg->add_option("--out", reg_out, "graph6 output (default stdout)");
    c_reg->callback([&] {
        try {
            const Graph host = reconstruct_regular_cutvertex(read_deck_file(reg_in), reg_r);
            emit(reg_out, write_graph6(relabeled(host)) + "\n");
        } catch (const std::invalid_argument& e) {
            throw ExitWith{3, e.what()};
        }
    });

    // gen-family --family NAME [--params a,b,..] [--k K] [--out FILE]
    auto* c_gen = app.add_subcommand("gen-family",
                                     "emit a same-deck (or common-card) pair as graph6");
    std::string gen_family, gen_out;
    std::vector<int> gen_params;
    int gen_k = 0;
    c_gen->add_option("--family", gen_family,
                      "one of cycle_split, cycle_path, path_shift, maxdeg2_general, "
                      "spider_pair, cycle_vs_spider, manvel_stars, erpart_pair, "
                      "path_vs_cycle_path, myrvold_common")
        ->required();
    c_gen->add_option("--params", gen_params, "family parameters")->delimiter(',');
    c_gen->add_option("--k", gen_k, "claimed deck size (0 = family default)");
    c_gen->add_option("--out", gen_out, "output file (default stdout)");
    c_gen->callback([&] {
        const FamilySpec spec{family_from_string(gen_family), gen_params, gen_k};
        const SameDeckPair pair = same_deck_pair(spec);
        std::ostringstream out;
        out << write_graph6(relabeled(pair.g)) << "\n"
            << write_graph6(relabeled(pair.h)) << "\n"
            << "k=" << pair.k << "\n";
        emit(gen_out, out.str());
    });

    // search-pairs --n N --k K [--jobs J] [--checkpoint-dir D] [--resume] [--out JSONL]
    auto* c_search = app.add_subcommand(
        "search-pairs", "exhaustively list same-k-deck classes among all n-vertex graphs");
    int search_n = 0, search_k = 0, search_jobs = 1;
    std::string search_dir, search_out;
    bool search_resume = false;
    c_search->add_option("--n", search_n, "host order")->required();
    c_search->add_option("--k", search_k, "card order")->required();
    c_search->add_option("--jobs", search_jobs, "worker threads");
    c_search->add_option("--checkpoint-dir", search_dir,
                         "chunk checkpoint directory (DECKFORGE_CACHE overrides)");
    c_search->add_flag("--resume", search_resume, "reuse matching checkpoint chunks");
    c_search->add_option("--out", search_out, "JSON Lines output (default stdout)");
    c_search->callback([&] {
        ScanOptions so;
        so.jobs = search_jobs;
        so.checkpoint_dir = checkpoint_dir_for(search_dir);
        so.resume = search_resume;
        const SameDeckScan scan = same_deck_classes(search_n, search_k, so);
        std::ostringstream out;
        for (const auto& cls : scan.classes) {
            nlohmann::json j;
            j["n"] = scan.n;
            j["k"] = scan.k;
            auto& graphs = j["graphs"] = nlohmann::json::array();
            for (std::uint64_t bits : cls)
                graphs.push_back(write_graph6(graph_from_bits(scan.n, bits)));
            out << j.dump() << "\n";
        }
        emit(search_out, out.str());
        std::cerr << scan.classes.size() << " same-deck classes among " << scan.graph_count
                  << " graphs (n=" << scan.n << ", k=" << scan.k << ")\n";
    });

    // max-recon --in G6 [--jobs J]
    auto* c_max = app.add_subcommand(
        "max-recon", "largest l such that the (n-l)-deck determines the graph");
    std::string max_in;
    int max_jobs = 1;
    c_max->add_option("--in", max_in, "graph6 input file")->required();
    c_max->add_option("--jobs", max_jobs, "worker threads");
    c_max->callback([&] {
        try {
            std::cout << max_reconstructibility(read_graph6_file(max_in), max_jobs) << "\n";
        } catch (const std::invalid_argument& e) {
            throw ExitWith{3, e.what()};
        }
    });

    // verify-paper [--stretch] [--jobs J] [--seed S]
    auto* c_verify = app.add_subcommand("verify-paper",
                                        "run the full acceptance suite (14 criteria)");
    AcceptanceOptions vopts;
    vopts.jobs = 4;
    c_verify->add_flag("--stretch", vopts.stretch, "include the n = 9 exhaustive scans");
    c_verify->add_option("--jobs", vopts.jobs, "worker threads");
    c_verify->add_option("--seed", vopts.seed, "seed for the randomized algebra checks");
    c_verify->callback([&] {
        for (const auto& r : run_acceptance(vopts, std::cout))
            if (!r.pass) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ExitWith& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const ReconError& e) {
        std::cerr << "reconstruction failed: " << e.what() << "\n";
        return 1;
    } catch (const DeckError& e) {
        std::cerr << "invalid deck: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
