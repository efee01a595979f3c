#include "ptg/errors.hpp"
#include "ptg/paired_threshold.hpp"
#include "ptg/threshold.hpp"

#include <algorithm>
#include <string>

namespace ptg {

namespace {

constexpr Vertex kNone = static_cast<Vertex>(-1);

// Ordered blocks over a flat array; a block is split by swapping the chosen
// members to one of its ends, so each split costs O(|members|).
class BlockSequence {
public:
    BlockSequence(const Graph& h, VertexList order) : seq_(std::move(order)), pos_(h.vertex_count()) {
        block_of_.resize(h.vertex_count());
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            pos_[seq_[i]] = i;
            if (i == 0 || !are_true_twins(h, seq_[i - 1], seq_[i])) {
                begin_.push_back(i);
                end_.push_back(i);
            }
            block_of_[seq_[i]] = begin_.size() - 1;
            end_.back() = i + 1;
        }
    }

    std::size_t position(Vertex v) const { return pos_[v]; }
    std::size_t block(Vertex v) const { return block_of_[v]; }
    std::size_t block_begin(std::size_t b) const { return begin_[b]; }
    std::size_t block_end(std::size_t b) const { return end_[b]; }
    std::size_t block_size(std::size_t b) const { return end_[b] - begin_[b]; }
    const VertexList& sequence() const { return seq_; }

    // Moves `members` (all inside block b) to its right or left end as a new block.
    void split(std::size_t b, const VertexList& members, bool to_right) {
        if (members.empty() || members.size() == block_size(b)) return;
        const std::size_t nb = begin_.size();
        std::size_t k = 0;
        for (Vertex x : members) {
            const std::size_t target = to_right ? end_[b] - 1 - k : begin_[b] + k;
            swap_positions(pos_[x], target);
            block_of_[x] = nb;
            ++k;
        }
        if (to_right) {
            begin_.push_back(end_[b] - k);
            end_.push_back(end_[b]);
            end_[b] -= k;
        } else {
            begin_.push_back(begin_[b]);
            end_.push_back(begin_[b] + k);
            begin_[b] += k;
        }
    }

private:
    void swap_positions(std::size_t i, std::size_t j) {
        std::swap(seq_[i], seq_[j]);
        pos_[seq_[i]] = i;
        pos_[seq_[j]] = j;
    }

    VertexList seq_;
    std::vector<std::size_t> pos_;
    std::vector<std::size_t> block_of_;
    std::vector<std::size_t> begin_, end_;
};

// Refines the twin classes of g - I so every N(u), u in I, becomes a block.
// `containment` lists I by increasing neighborhood. Larger neighborhoods are
// handled first: once N(u) is a union of blocks, every smaller neighborhood
// lies inside it, so placing a neighborhood that falls within a single block
// never constrains later steps.
std::optional<PTPartition> refine_twin_classes(const Graph& g, const VertexList& containment, const VertexList& rest,
                                               const VertexOrdering& local_umbrella) {
    const std::size_t n = g.vertex_count();
    if (rest.empty()) return PTPartition{containment, VertexOrdering(VertexList{}, n)};

    const Graph h = induced_subgraph(g, rest);
    if (!is_connected(h)) return std::nullopt;

    std::vector<Vertex> local(n, kNone);
    for (std::size_t i = 0; i < rest.size(); ++i) local[rest[i]] = static_cast<Vertex>(i);

    VertexList neighborhood_of_i;
    {
        std::vector<char> seen(h.vertex_count(), 0);
        for (Vertex u : containment)
            for (Vertex x : g.neighbors(u))
                if (!seen[local[x]]) {
                    seen[local[x]] = 1;
                    neighborhood_of_i.push_back(local[x]);
                }
    }
    auto dominates = [&](Vertex rep) {
        return std::all_of(neighborhood_of_i.begin(), neighborhood_of_i.end(),
                           [&](Vertex x) { return x == rep || h.adjacent(rep, x); });
    };

    VertexList order = local_umbrella.sequence();
    if (!dominates(order.front())) {
        if (!dominates(order.back())) return std::nullopt;
        std::reverse(order.begin(), order.end());
    }

    BlockSequence blocks(h, std::move(order));
    VertexList inside_left, inside_right;
    for (auto it = containment.rbegin(); it != containment.rend(); ++it) {
        const auto nbrs = g.neighbors(*it);
        if (nbrs.empty()) continue;
        std::size_t lo = rest.size(), hi = 0;
        for (Vertex x : nbrs) {
            lo = std::min(lo, blocks.position(local[x]));
            hi = std::max(hi, blocks.position(local[x]));
        }
        const std::size_t left = blocks.block(blocks.sequence()[lo]);
        const std::size_t right = blocks.block(blocks.sequence()[hi]);
        inside_left.clear();
        inside_right.clear();
        for (Vertex x : nbrs) {
            const std::size_t b = blocks.block(local[x]);
            if (b == left) inside_left.push_back(local[x]);
            else if (b == right) inside_right.push_back(local[x]);
        }
        if (left != right) {
            const std::size_t between = nbrs.size() - inside_left.size() - inside_right.size();
            if (between != blocks.block_begin(right) - blocks.block_end(left)) return std::nullopt;
            blocks.split(left, inside_left, true);
            blocks.split(right, inside_right, false);
        } else {
            blocks.split(left, inside_left, true);
        }
    }

    VertexList umbrella;
    umbrella.reserve(rest.size());
    for (Vertex x : blocks.sequence()) umbrella.push_back(rest[x]);
    return PTPartition{containment, VertexOrdering(std::move(umbrella), n)};
}

struct Precondition {
    std::string failure;
    VertexList containment;
    VertexList rest;
    VertexOrdering local_umbrella;
};

Precondition check_preconditions(const Graph& g, std::span<const Vertex> independent) {
    const std::size_t n = g.vertex_count();
    Precondition pre;
    std::vector<char> in_i(n, 0);
    for (Vertex v : independent) {
        if (v >= n) {
            pre.failure = "vertex " + std::to_string(v) + " out of range";
            return pre;
        }
        if (in_i[v]) {
            pre.failure = "vertex " + std::to_string(v) + " listed twice";
            return pre;
        }
        in_i[v] = 1;
    }
    if (!is_connected(g)) {
        pre.failure = "graph is not connected";
        return pre;
    }
    for (Vertex v : independent)
        for (Vertex x : g.neighbors(v))
            if (in_i[x]) {
                pre.failure = "set is not independent";
                return pre;
            }
    for (Vertex v = 0; v < n; ++v)
        if (!in_i[v]) pre.rest.push_back(v);
    auto umbrella = umbrella_ordering(induced_subgraph(g, pre.rest));
    if (!umbrella) {
        pre.failure = "remaining vertices do not induce a unit interval graph";
        return pre;
    }
    pre.local_umbrella = std::move(*umbrella);

    std::vector<char> closed(n, 0);
    for (Vertex v : independent) {
        closed[v] = 1;
        for (Vertex x : g.neighbors(v)) closed[x] = 1;
    }
    VertexList closed_list;
    for (Vertex v = 0; v < n; ++v)
        if (closed[v]) closed_list.push_back(v);
    auto order = neighborhood_containment_order(g, independent);
    if (!order || !induces_threshold(g, closed_list)) {
        pre.failure = "closed neighborhood of the set does not induce a threshold graph";
        return pre;
    }
    pre.containment = std::move(*order);
    return pre;
}

}  // namespace

std::optional<PTPartition> verify_partition(const Graph& g, std::span<const Vertex> independent) {
    Precondition pre = check_preconditions(g, independent);
    if (!pre.failure.empty()) throw ContractError(pre.failure);
    return refine_twin_classes(g, pre.containment, pre.rest, pre.local_umbrella);
}

std::optional<PTPartition> try_partition(const Graph& g, std::span<const Vertex> independent) {
    Precondition pre = check_preconditions(g, independent);
    if (!pre.failure.empty()) return std::nullopt;
    return refine_twin_classes(g, pre.containment, pre.rest, pre.local_umbrella);
}

std::pair<VertexList, VertexList> greedy_candidate_sets(const Graph& g, const CliquePath& cp) {
    std::vector<std::size_t> clique_count(g.vertex_count(), 0);
    for (const auto& c : cp.cliques)
        for (Vertex v : c) ++clique_count[v];

    auto sweep = [&](auto first, auto last) {
        SimplicialChain chain(g);
        for (auto it = first; it != last; ++it) {
            bool picked = false;
            for (Vertex v : *it) {
                if (clique_count[v] != 1 || !chain.fits(v)) continue;
                chain.add(v);
                picked = true;
                break;
            }
            if (!picked) break;
        }
        return chain.members();
    };
    return {sweep(cp.cliques.begin(), cp.cliques.end()), sweep(cp.cliques.rbegin(), cp.cliques.rend())};
}

}  // namespace ptg
