#pragma once

#include <sstream>
#include <stdexcept>

#include "hlx/hypergraph.hpp"

// Seven-hyperedge running example used across the test suites. Vertex tokens
// are 1..12; hyperedges are numbered 1..7 in file order.
inline const char* kFixtureText =
    "1 2\n"
    "3 4 5 6 7 8\n"
    "9 10 12\n"
    "3 4 11 12\n"
    "5 6 10\n"
    "7 8 9\n"
    "1 3 4\n";

struct Fixture {
    hlx::Hypergraph h;

    Fixture() {
        std::istringstream in(kFixtureText);
        h = hlx::parse_hypergraph(in);
    }

    // dense id of the vertex with source token `token`
    hlx::VertexId v(unsigned token) const {
        for (std::uint32_t i = 0; i < h.n; ++i)
            if (h.original_id[i] == token) return i;
        throw std::logic_error("fixture token not found");
    }

    // hyperedges keep file order
    hlx::EdgeId e(unsigned one_based) const { return static_cast<hlx::EdgeId>(one_based - 1); }
};
