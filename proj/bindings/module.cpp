// Python bindings for the deckforge core: graphs, canonical codes, k-decks,
// reconstruction algorithms, same-deck families, and the exhaustive search.
// Canonical codes cross the boundary as `bytes`; graphs as a small class.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "deckforge/acceptance.hpp"
#include "deckforge/canonical.hpp"
#include "deckforge/constructions.hpp"
#include "deckforge/deck.hpp"
#include "deckforge/degree.hpp"
#include "deckforge/family.hpp"
#include "deckforge/graph.hpp"
#include "deckforge/graph6.hpp"
#include "deckforge/search.hpp"

namespace py = pybind11;
using namespace deckforge;

namespace {

CanonicalCode code_of(const py::bytes& b) { return CanonicalCode{std::string(b)}; }

py::bytes bytes_of(const CanonicalCode& c) { return py::bytes(c.bytes); }

std::vector<std::pair<py::bytes, std::uint64_t>> cards_out(
    const std::vector<std::pair<CanonicalCode, std::uint64_t>>& cards) {
    std::vector<std::pair<py::bytes, std::uint64_t>> out;
    out.reserve(cards.size());
    for (const auto& [code, cnt] : cards) out.emplace_back(bytes_of(code), cnt);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact k-deck toolkit for small graphs";

    py::register_exception<DeckError>(m, "DeckError", PyExc_ValueError);
    py::register_exception<ReconError>(m, "ReconError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return make_graph(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("order", &Graph::order)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) +
                   ", m=" + std::to_string(g.edges().size()) + ")";
        });

    // Builders.
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("star_graph", &star_graph, py::arg("leaves"));
    m.def("complete_multipartite", &complete_multipartite, py::arg("parts"));
    m.def("spider_graph", &spider_graph, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("complement", &complement, py::arg("g"));
    m.def("disjoint_union", &disjoint_union, py::arg("a"), py::arg("b"));

    // graph6 and canonical codes.
    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("write_graph6", &write_graph6, py::arg("g"));
    m.def("canonical_form", [](const Graph& g) { return bytes_of(canonical_form(g)); },
          py::arg("g"));
    m.def("graph_from_code", [](const py::bytes& b) { return graph_from_code(code_of(b)); },
          py::arg("code"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("a"), py::arg("b"));
    m.def("automorphism_count", &automorphism_count, py::arg("g"));

    // Decks.
    py::class_<Deck>(m, "Deck")
        .def_readonly("n", &Deck::n)
        .def_readonly("k", &Deck::k)
        .def("total", &Deck::total)
        .def("count_of",
             [](const Deck& d, const py::bytes& code) { return d.count_of(code_of(code)); },
             py::arg("code"))
        .def("cards", [](const Deck& d) { return cards_out(d.cards); })
        .def("__eq__", [](const Deck& a, const Deck& b) { return a == b; })
        .def("__repr__", [](const Deck& d) {
            return "Deck(n=" + std::to_string(d.n) + ", k=" + std::to_string(d.k) + ", " +
                   std::to_string(d.cards.size()) + " distinct cards)";
        });
    m.def("compute_deck", &compute_deck, py::arg("g"), py::arg("k"));
    m.def("decks_equal", &decks_equal, py::arg("a"), py::arg("b"));
    m.def("derive_subdeck", &derive_subdeck, py::arg("d"));
    m.def("deck_complement", &deck_complement, py::arg("d"));
    m.def("count_induced", &count_induced, py::arg("d"), py::arg("pattern"));
    m.def("deck_common", &deck_common, py::arg("a"), py::arg("b"));
    m.def("deck_to_json", &deck_to_json, py::arg("d"));
    m.def("deck_from_json", &deck_from_json, py::arg("text"));
    m.def("validate_deck", [](const Deck& d) {
        const DeckValidation v = validate_deck(d);
        return py::make_tuple(v.ok, v.reason);
    }, py::arg("d"));

    // Degree reconstruction.
    m.def("degree_list_from_deck", &degree_list_from_deck, py::arg("d"));
    m.def("taylor_threshold",
          [](int l) { return static_cast<double>(taylor_threshold(l)); }, py::arg("l"));

    // Structure reconstruction.
    py::enum_<HereditaryClass>(m, "HereditaryClass")
        .value("clique_union", HereditaryClass::clique_union)
        .value("complete_multipartite", HereditaryClass::complete_multipartite)
        .value("neither", HereditaryClass::neither);
    m.def("recognize_hereditary_class", &recognize_hereditary_class, py::arg("d"));
    m.def("reconstruct_complete_multipartite", &reconstruct_complete_multipartite,
          py::arg("d"));
    m.def("reconstruct_clique_union", &reconstruct_clique_union, py::arg("d"));
    m.def("reconstruct_components",
          [](const Deck& d) { return cards_out(reconstruct_components(d)); }, py::arg("d"));
    m.def("assemble_components",
          [](const std::vector<std::pair<py::bytes, std::uint64_t>>& comps) {
              ComponentMultiset cm;
              cm.reserve(comps.size());
              for (const auto& [code, cnt] : comps) cm.emplace_back(code_of(code), cnt);
              return assemble_components(cm);
          },
          py::arg("components"));
    m.def("find_leaf_blocks",
          [](const Deck& d, int r) { return cards_out(find_leaf_blocks(d, r)); }, py::arg("d"),
          py::arg("r"));
    m.def("reconstruct_regular_cutvertex", &reconstruct_regular_cutvertex, py::arg("d"),
          py::arg("r"));

    // Same-deck families.
    m.def("same_deck_pair",
          [](const std::string& family, const std::vector<int>& params, int k) {
              const SameDeckPair p =
                  same_deck_pair(FamilySpec{family_from_string(family), params, k});
              return py::make_tuple(p.g, p.h, p.k);
          },
          py::arg("family"), py::arg("params") = std::vector<int>{}, py::arg("k") = 0);
    m.def("verify_construction",
          [](const std::string& family, const std::vector<int>& params, int k) {
              std::string why;
              const bool ok = verify_construction(
                  FamilySpec{family_from_string(family), params, k}, &why);
              return py::make_tuple(ok, why);
          },
          py::arg("family"), py::arg("params") = std::vector<int>{}, py::arg("k") = 0);

    // Exhaustive search.
    m.def("enumerate_graphs",
          [](int n, int jobs) {
              std::vector<Graph> out;
              for (std::uint64_t bits : enumerate_graphs(n, jobs))
                  out.push_back(graph_from_bits(n, bits));
              return out;
          },
          py::arg("n"), py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("same_deck_classes",
          [](int n, int k, int jobs, const std::string& checkpoint_dir, bool resume) {
              ScanOptions so;
              so.jobs = jobs;
              so.checkpoint_dir = checkpoint_dir;
              so.resume = resume;
              const SameDeckScan scan = same_deck_classes(n, k, so);
              std::vector<std::vector<Graph>> classes;
              classes.reserve(scan.classes.size());
              for (const auto& cls : scan.classes) {
                  std::vector<Graph> members;
                  members.reserve(cls.size());
                  for (std::uint64_t bits : cls) members.push_back(graph_from_bits(n, bits));
                  classes.push_back(std::move(members));
              }
              return classes;
          },
          py::arg("n"), py::arg("k"), py::arg("jobs") = 1, py::arg("checkpoint_dir") = "",
          py::arg("resume") = false, py::call_guard<py::gil_scoped_release>());
    m.def("max_reconstructibility", &max_reconstructibility, py::arg("g"),
          py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("check_distinguishing", &check_distinguishing, py::arg("g"), py::arg("l"));
}
