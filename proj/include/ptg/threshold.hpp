#pragma once

#include "ptg/graph.hpp"
#include "ptg/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ptg {

/// uv is an edge iff weight[u] + weight[v] >= threshold.
struct ThresholdCertificate {
    std::vector<Rational> weight;
    Rational threshold;
};

/// Peels isolated/universal vertices; if nothing survives, replays the peel in
/// reverse and assigns integer weights T/2 +- rank with T = 4(n+1). Returns
/// nullopt when g is not a threshold graph.
std::optional<ThresholdCertificate> recognize_threshold(const Graph& g);

/// All-pairs check of the threshold biconditional.
bool check_threshold_certificate(const Graph& g, const ThresholdCertificate& cert);

/// Orders an independent set by neighborhood containment (degree ascending,
/// then id). nullopt if the neighborhoods are not a chain. Throws
/// ContractError if `independent` is not independent in g.
std::optional<VertexList> neighborhood_containment_order(const Graph& g, std::span<const Vertex> independent);

/// g[X] is a threshold graph.
bool induces_threshold(const Graph& g, std::span<const Vertex> subset);

/// N(a) subset-of N(b), on sorted neighbor lists.
bool neighborhood_contained(const Graph& g, Vertex a, Vertex b);

/// Incremental form of induces_threshold(g, N[I]) for I a growing set of
/// simplicial vertices taken from distinct maximal cliques. For such I, N[I]
/// induces a threshold graph iff the open neighborhoods form a chain.
class SimplicialChain {
public:
    explicit SimplicialChain(const Graph& g) : g_(&g) {}

    /// True iff N(v) is comparable with every neighborhood already accepted.
    bool fits(Vertex v) const;
    void add(Vertex v);

    const VertexList& members() const noexcept { return members_; }

private:
    const Graph* g_;
    std::multimap<std::size_t, Vertex> by_degree_;
    VertexList members_;
};

}  // namespace ptg
