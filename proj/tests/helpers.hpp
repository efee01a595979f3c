#pragma once

#include "ptg/graph.hpp"

#include <initializer_list>
#include <vector>

namespace ptg::test {

inline Graph make(std::size_t n, std::initializer_list<Edge> edges) {
    return Graph(n, std::vector<Edge>(edges));
}

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph(n, e);
}

inline Graph claw() { return Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace ptg::test
