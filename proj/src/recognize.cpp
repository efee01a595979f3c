#include "ptg/errors.hpp"
#include "ptg/paired_threshold.hpp"
#include "ptg/threshold.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptg {

std::string to_string(Reason reason) {
    switch (reason) {
        case Reason::None: return "None";
        case Reason::NotInterval: return "NotInterval";
        case Reason::TwoNonUIGComponents: return "TwoNonUIGComponents";
        case Reason::TooManyCoreComponents: return "TooManyCoreComponents";
        case Reason::TwoComponentShapeFail: return "TwoComponentShapeFail";
        case Reason::NoValidPartition: return "NoValidPartition";
    }
    return "Unknown";
}

namespace {

VertexList lift(std::span<const Vertex> ids, std::span<const Vertex> local) {
    VertexList out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(ids[v]);
    return out;
}

VertexList sorted(VertexList v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::optional<PTPartition> partition_or_bug(const Graph& h, const VertexList& independent) {
    auto part = try_partition(h, independent);
    if (!part) throw std::logic_error("expected partition could not be completed");
    return part;
}

// Connected component that is not unit interval. Returns a partition of h, or
// nullopt with the reason and witnesses (in h's ids) filled in.
std::optional<PTPartition> recognize_connected(const Graph& h, RecognitionResult& result,
                                               std::vector<VertexList>& core_witness) {
    const PeelResult peel = peel_universal_isolated(h);

    if (peel.core.empty()) {
        auto th = recognize_threshold(h);
        VertexList low;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (2 * th->weight[v] < th->threshold) low.push_back(v);
        return partition_or_bug(h, low);
    }

    const Graph core = induced_subgraph(h, peel.core);
    const auto core_comps = connected_components(core);
    for (const auto& c : core_comps) core_witness.push_back(lift(peel.core, c));

    if (core_comps.size() > 2) {
        result.reason = Reason::TooManyCoreComponents;
        return std::nullopt;
    }
    if (core_comps.size() == 2) {
        const VertexList a = lift(peel.core, core_comps[0]);
        const VertexList b = lift(peel.core, core_comps[1]);
        const VertexList* clique = nullptr;
        const VertexList* other = nullptr;
        if (is_clique(h, a) && induces_threshold(h, b)) {
            clique = &a;
            other = &b;
        } else if (is_clique(h, b) && induces_threshold(h, a)) {
            clique = &b;
            other = &a;
        }
        if (!clique) {
            result.reason = Reason::TwoComponentShapeFail;
            return std::nullopt;
        }
        // Everything except the clique component and the universal block is a
        // threshold graph; its low-weight side becomes I.
        std::vector<char> skip(h.vertex_count(), 0);
        for (Vertex v : *clique) skip[v] = 1;
        for (Vertex v : peel.removed_universal) skip[v] = 1;
        VertexList rest;
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (!skip[v]) rest.push_back(v);
        auto th = recognize_threshold(induced_subgraph(h, rest));
        if (!th) throw std::logic_error("threshold side of a two-component core is not threshold");
        VertexList low;
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (2 * th->weight[i] < th->threshold) low.push_back(rest[i]);
        (void)other;
        return partition_or_bug(h, low);
    }

    // One core component: keep a single universal vertex if any were peeled.
    VertexList kept = peel.core;
    if (!peel.removed_universal.empty()) kept.push_back(peel.removed_universal.front());
    kept = sorted(std::move(kept));
    const Graph reduced = induced_subgraph(h, kept);

    auto cp = recognize_interval(reduced);
    if (!cp) {
        result.reason = Reason::NotInterval;
        return std::nullopt;
    }
    auto [left, right] = greedy_candidate_sets(reduced, *cp);
    result.left_candidates = lift(kept, left);
    result.right_candidates = lift(kept, right);

    for (const VertexList* candidate : {&left, &right}) {
        if (!try_partition(reduced, *candidate)) continue;
        VertexList independent = lift(kept, *candidate);
        if (reduced.vertex_count() != h.vertex_count())
            for (Vertex v : peel.removed_isolated) independent.push_back(v);
        return partition_or_bug(h, independent);
    }
    result.reason = Reason::NoValidPartition;
    return std::nullopt;
}

}  // namespace

RecognitionResult recognize(const Graph& g, const RecognizeOptions& options) {
    const std::size_t n = g.vertex_count();
    RecognitionResult result;

    const auto comps = connected_components(g);
    std::vector<VertexList> uig_orders;  // global ids
    std::vector<VertexList> non_uig;
    for (const auto& c : comps) {
        auto order = umbrella_ordering(induced_subgraph(g, c));
        if (order) uig_orders.push_back(lift(c, order->sequence()));
        else non_uig.push_back(c);
    }

    PTPartition part;
    VertexList umbrella;
    if (non_uig.size() > 1) {
        result.reason = Reason::TwoNonUIGComponents;
        result.non_unit_interval_components = non_uig;
        return result;
    }
    if (non_uig.size() == 1) {
        const VertexList& members = non_uig.front();
        const Graph h = induced_subgraph(g, members);
        std::vector<VertexList> core_witness;
        auto local = recognize_connected(h, result, core_witness);
        for (auto& c : core_witness) result.core_components.push_back(sorted(lift(members, c)));
        result.left_candidates = lift(members, result.left_candidates);
        result.right_candidates = lift(members, result.right_candidates);
        if (!local) {
            result.non_unit_interval_components = non_uig;
            return result;
        }
        part.independent = lift(members, local->independent);
        umbrella = lift(members, local->umbrella.sequence());
    }
    for (const auto& order : uig_orders) umbrella.insert(umbrella.end(), order.begin(), order.end());
    part.umbrella = VertexOrdering(std::move(umbrella), n);

    result.paired_threshold = true;
    result.reason = Reason::None;
    result.broom = broom_from_partition(part);
    if (!check_broom(g, *result.broom)) throw std::logic_error("broom certificate failed verification");
    if (options.build_weights) result.weights = synthesize_weights_general(g, part, options.self_check);
    result.partition = std::move(part);
    return result;
}

}  // namespace ptg
