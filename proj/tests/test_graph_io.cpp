#include <doctest.h>

#include <random>

#include "epg/graph_io.hpp"
#include "oracles.hpp"

using epg::GraphDocument;

namespace {
std::size_t error_line(const std::string& text) {
    try {
        epg::parse_document(text);
    } catch (const epg::DocumentError& e) {
        return e.line();
    }
    return 9999;
}
}  // namespace

TEST_CASE("document round trip preserves the graph") {
    std::mt19937 rng(7);
    std::bernoulli_distribution coin(0.3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = trial % 20;
        std::vector<epg::Edge> edges;
        for (epg::Vertex a = 0; a < n; ++a)
            for (epg::Vertex b = a + 1; b < n; ++b)
                if (coin(rng)) edges.emplace_back(a, b);
        const auto graph = epg::Graph::from_edges(n, edges);
        std::vector<std::string> labels;
        if (trial % 2)
            for (std::size_t i = 0; i < n; ++i) labels.push_back("v " + std::to_string(i + 1));
        const auto doc = GraphDocument::from_graph(graph, labels);
        const auto text = epg::format_document(doc, std::vector<std::string>{"comment"});
        const auto back = epg::parse_document(text);
        CHECK(back == doc);
        CHECK(back.to_graph() == graph);
        CHECK(epg::format_document(back, std::vector<std::string>{"comment"}) == text);
    }
}

TEST_CASE("figure document on disk") {
    const auto doc = epg::read_document(std::string(EPG_TEST_DATA) + "/figure1.epg");
    CHECK(doc.vertex_count == 12);
    CHECK(doc.labels.front() == "v1");
    CHECK(doc.to_graph() == epg::Graph::from_edges(12, oracle::figure_solid_edges()));
}

TEST_CASE("malformed documents report their line") {
    CHECK(error_line("graph 1\n") == 1);
    CHECK(error_line("epg-graph 2\n") == 1);
    CHECK(error_line("epg-graph 1\nedges 3\n") == 2);
    CHECK(error_line("epg-graph 1\nvertices 3\nedge 0 3\n") == 3);
    CHECK(error_line("epg-graph 1\nvertices 3\nedge 1 0\n") == 3);
    CHECK(error_line("epg-graph 1\nvertices 3\nedge 1 2\nedge 0 1\n") == 4);
    CHECK(error_line("epg-graph 1\nvertices 3\nedge 0 1\nedge 0 1\n") == 4);
    CHECK(error_line("# c\n\nepg-graph 1\nvertices 3\nedge 0 x\n") == 5);
    CHECK(error_line("epg-graph 1\nvertices 2\nlabel 0 a\n") == 3);
    CHECK(error_line("epg-graph 1\nvertices 2\nlabel 0 a\nlabel 0 b\n") == 4);
    CHECK(error_line("epg-graph 1\nvertices 2\nedge 0 1\nlabel 0 a\n") == 4);
    CHECK(error_line("epg-graph 1\nvertices 2\nnode 0\n") == 3);
    CHECK(error_line("epg-graph 1\nvertices 2\nedge 0 1 7\n") == 3);
    CHECK_THROWS_AS(epg::parse_document(""), epg::DocumentError);
    CHECK_THROWS_AS(epg::read_document("/nonexistent/file.epg"), epg::DocumentError);
}

TEST_CASE("DOT output") {
    const auto graph = epg::Graph::from_edges(12, oracle::figure_solid_edges());
    std::vector<std::string> labels;
    for (int i = 1; i <= 12; ++i) labels.push_back("v" + std::to_string(i));
    const auto dotted = oracle::figure_dotted_edges();
    const auto text = epg::format_dot(graph, labels, dotted, "D12");
    CHECK(text == epg::format_dot(graph, labels, dotted, "D12"));
    CHECK(text.find("7 -- 8 [style=dotted];") != std::string::npos);
    CHECK(text.find("7 -- 10;") != std::string::npos);
    CHECK(text.find("0 [label=\"v1\"];") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t pos = 0; (pos = text.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(edges == 21);

    const std::vector<std::string> quoted{"a\"b", "c"};
    const auto q = epg::format_dot(epg::Graph::complete(2), quoted);
    CHECK(q.find("label=\"a\\\"b\"") != std::string::npos);
}
