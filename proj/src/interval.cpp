#include "ptg/interval.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace ptg {

VertexList lex_bfs(const Graph& g) {
    const std::size_t n = g.vertex_count();
    VertexList seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    std::vector<std::size_t> pos(n), cls(n, 0);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    // Classes are contiguous slices [start, end) of seq; class order is slice order.
    std::vector<std::size_t> start{0}, end{n}, split_into{static_cast<std::size_t>(-1)};
    std::vector<std::size_t> touched;
    constexpr auto kNone = static_cast<std::size_t>(-1);

    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = seq[i];
        ++start[cls[v]];
        for (Vertex w : g.neighbors(v)) {
            if (pos[w] <= i) continue;
            const std::size_t c = cls[w];
            if (split_into[c] == kNone) {
                split_into[c] = start.size();
                start.push_back(start[c]);
                end.push_back(start[c]);
                split_into.push_back(kNone);
                touched.push_back(c);
            }
            const std::size_t nc = split_into[c];
            // Swap w to the front of c, then hand that slot to nc.
            const std::size_t front = start[c];
            const Vertex u = seq[front];
            std::swap(seq[front], seq[pos[w]]);
            pos[u] = pos[w];
            pos[w] = front;
            ++start[c];
            ++end[nc];
            cls[w] = nc;
        }
        for (std::size_t c : touched) split_into[c] = kNone;
        touched.clear();
    }
    return seq;
}

namespace {

struct TreeEdge {
    std::size_t a;
    std::size_t b;
    VertexList separator;
};

struct CliqueTree {
    std::vector<VertexList> cliques;                  // sorted members
    std::vector<std::vector<std::size_t>> incident;   // clique -> tree edge ids
    std::vector<TreeEdge> edges;
    std::vector<std::vector<std::size_t>> containing; // vertex -> clique ids
};

// Maximal cliques and a clique tree from a LexBFS order; nullopt if the
// reverse of `order` is not a perfect elimination ordering.
std::optional<CliqueTree> build_clique_tree(const Graph& g, const VertexList& order) {
    const std::size_t n = g.vertex_count();
    constexpr auto kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<VertexList> earlier(n);
    std::vector<std::size_t> parent(n, kNone);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v))
            if (pos[w] < pos[v]) {
                earlier[v].push_back(w);
                if (parent[v] == kNone || pos[w] > pos[parent[v]]) parent[v] = w;
            }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (parent[v] == kNone) continue;
        const auto p = static_cast<Vertex>(parent[v]);
        for (Vertex u : earlier[v])
            if (u != p && !g.adjacent(u, p)) return std::nullopt;
    }

    // v joins its parent's clique exactly when its earlier neighbors are that
    // whole clique; otherwise it opens a new clique hanging off the parent's.
    CliqueTree tree;
    std::vector<std::size_t> clique_of(n, kNone);
    for (Vertex v : order) {
        const std::size_t p = parent[v];
        if (p != kNone && earlier[v].size() == tree.cliques[clique_of[p]].size()) {
            clique_of[v] = clique_of[p];
            tree.cliques[clique_of[v]].push_back(v);
            continue;
        }
        clique_of[v] = tree.cliques.size();
        VertexList members = earlier[v];
        members.push_back(v);
        tree.cliques.push_back(std::move(members));
        tree.incident.emplace_back();
        if (p == kNone) continue;
        const std::size_t e = tree.edges.size();
        VertexList sep = earlier[v];
        std::sort(sep.begin(), sep.end());
        tree.edges.push_back({clique_of[v], clique_of[p], std::move(sep)});
        tree.incident[clique_of[v]].push_back(e);
        tree.incident[clique_of[p]].push_back(e);
    }
    for (auto& c : tree.cliques) std::sort(c.begin(), c.end());
    tree.containing.resize(n);
    for (std::size_t c = 0; c < tree.cliques.size(); ++c)
        for (Vertex v : tree.cliques[c]) tree.containing[v].push_back(c);
    return tree;
}

// Orders the cliques of a connected chordal graph by partition refinement
// over the clique tree. The result is a clique path whenever g is interval.
std::vector<std::size_t> order_cliques(const CliqueTree& tree, std::size_t n) {
    const std::size_t k = tree.cliques.size();
    std::vector<std::size_t> seq(k), pos(k), cls(k, 0);
    std::iota(seq.begin(), seq.end(), std::size_t{0});
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    std::vector<std::size_t> start{0}, end{k};
    std::vector<bool> queued(n, false);
    std::vector<Vertex> pivots;

    auto place = [&](std::size_t clique, std::size_t slot) {
        const std::size_t other = seq[slot];
        std::swap(seq[slot], seq[pos[clique]]);
        pos[other] = pos[clique];
        pos[clique] = slot;
    };

    // Queue separators of tree edges running between classes a and b.
    auto collect_crossing = [&](std::size_t a, std::size_t b) {
        const std::size_t small = (end[a] - start[a] <= end[b] - start[b]) ? a : b;
        const std::size_t other = small == a ? b : a;
        for (std::size_t i = start[small]; i < end[small]; ++i)
            for (std::size_t e : tree.incident[seq[i]]) {
                const TreeEdge& edge = tree.edges[e];
                const std::size_t far = edge.a == seq[i] ? edge.b : edge.a;
                if (cls[far] != other) continue;
                for (Vertex x : edge.separator)
                    if (!queued[x]) {
                        queued[x] = true;
                        pivots.push_back(x);
                    }
            }
    };

    // Moves `members` (all inside class c) to the left or right end of c as a new class.
    auto split = [&](std::size_t c, const std::vector<std::size_t>& members, bool to_right) {
        if (members.empty() || members.size() == end[c] - start[c]) return;
        const std::size_t nc = start.size();
        if (to_right) {
            for (std::size_t clique : members) place(clique, --end[c]);
            start.push_back(end[c]);
            end.push_back(end[c] + members.size());
        } else {
            for (std::size_t clique : members) place(clique, start[c]++);
            start.push_back(start[c] - members.size());
            end.push_back(start[c]);
        }
        for (std::size_t clique : members) cls[clique] = nc;
        collect_crossing(c, nc);
    };

    std::size_t scan = k;
    std::vector<std::size_t> in_first, in_last;
    while (true) {
        if (!pivots.empty()) {
            const Vertex x = pivots.back();
            pivots.pop_back();
            const auto& with_x = tree.containing[x];
            std::size_t lo = k, hi = 0;
            for (std::size_t c : with_x) {
                lo = std::min(lo, pos[c]);
                hi = std::max(hi, pos[c]);
            }
            const std::size_t first = cls[seq[lo]], last = cls[seq[hi]];
            if (first == last) {
                // Re-queued once a tree edge inside its subtree starts crossing.
                queued[x] = false;
                continue;
            }
            in_first.clear();
            in_last.clear();
            for (std::size_t c : with_x) {
                if (cls[c] == first) in_first.push_back(c);
                else if (cls[c] == last) in_last.push_back(c);
            }
            split(first, in_first, true);
            split(last, in_last, false);
            continue;
        }
        while (scan > 0 && end[cls[seq[scan - 1]]] - start[cls[seq[scan - 1]]] == 1) --scan;
        if (scan == 0) break;
        const std::size_t c = cls[seq[scan - 1]];
        std::size_t newest = seq[start[c]];
        for (std::size_t i = start[c]; i < end[c]; ++i) newest = std::max(newest, seq[i]);
        split(c, {newest}, true);
    }
    return seq;
}

std::optional<CliquePath> clique_path_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    auto tree = build_clique_tree(g, lex_bfs(g));
    if (!tree) return std::nullopt;
    const auto order = order_cliques(*tree, n);

    std::vector<std::size_t> first(n, order.size()), last(n, 0), count(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex v : tree->cliques[order[i]]) {
            first[v] = std::min(first[v], i);
            last[v] = std::max(last[v], i);
            ++count[v];
        }
    for (Vertex v = 0; v < n; ++v)
        if (last[v] - first[v] + 1 != count[v]) return std::nullopt;

    CliquePath cp;
    cp.cliques.reserve(order.size());
    for (std::size_t c : order) cp.cliques.push_back(tree->cliques[c]);
    return cp;
}

}  // namespace

std::optional<CliquePath> recognize_interval(const Graph& g) {
    CliquePath out;
    for (const VertexList& comp : connected_components(g)) {
        auto local = clique_path_connected(induced_subgraph(g, comp));
        if (!local) return std::nullopt;
        for (VertexList& clique : local->cliques) {
            for (Vertex& v : clique) v = comp[v];
            std::sort(clique.begin(), clique.end());
        }
        if (local->cliques.back() < local->cliques.front())
            std::reverse(local->cliques.begin(), local->cliques.end());
        for (VertexList& clique : local->cliques) out.cliques.push_back(std::move(clique));
    }
    return out;
}

std::optional<VertexOrdering> umbrella_ordering(const Graph& g) {
    const std::size_t n = g.vertex_count();
    auto cp = recognize_interval(g);
    if (!cp) return std::nullopt;
    // Components occupy disjoint runs of the clique path, so one global sort
    // keeps them consecutive.
    std::vector<std::size_t> first(n, static_cast<std::size_t>(-1)), last(n, 0);
    for (std::size_t i = 0; i < cp->cliques.size(); ++i)
        for (Vertex v : cp->cliques[i]) {
            first[v] = std::min(first[v], i);
            last[v] = std::max(last[v], i);
        }
    VertexList seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
        return std::tie(first[a], last[a], a) < std::tie(first[b], last[b], b);
    });
    VertexOrdering sigma(std::move(seq));
    if (!check_umbrella_ordering(g, sigma)) return std::nullopt;
    return sigma;
}

bool is_valid_clique_path(const Graph& g, const CliquePath& cp) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> first(n, static_cast<std::size_t>(-1)), last(n, 0), count(n, 0);
    std::vector<std::size_t> hits(n, 0);
    for (std::size_t i = 0; i < cp.cliques.size(); ++i) {
        const VertexList& c = cp.cliques[i];
        if (c.empty()) return false;
        for (Vertex v : c)
            if (v >= n) return false;
        if (!is_clique(g, c)) return false;
        std::fill(hits.begin(), hits.end(), 0);
        for (Vertex v : c) {
            ++hits[v];
            for (Vertex w : g.neighbors(v)) ++hits[w];
        }
        for (Vertex w = 0; w < n; ++w)
            if (hits[w] == c.size() && !std::binary_search(c.begin(), c.end(), w)) return false;
        for (Vertex v : c) {
            first[v] = std::min(first[v], i);
            last[v] = std::max(last[v], i);
            ++count[v];
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (count[v] == 0 || last[v] - first[v] + 1 != count[v]) return false;
    for (auto [u, v] : g.edges())
        if (std::max(first[u], first[v]) > std::min(last[u], last[v])) return false;
    std::vector<VertexList> sorted = cp.cliques;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

IntervalModel interval_model_from_clique_path(const Graph& g, const CliquePath& cp) {
    const std::size_t n = g.vertex_count();
    IntervalModel m;
    m.left.assign(n, Rational(0));
    m.right.assign(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < cp.cliques.size(); ++i)
        for (Vertex v : cp.cliques[i]) {
            const Rational idx(static_cast<unsigned long>(i + 1));
            if (!seen[v]) {
                seen[v] = true;
                m.left[v] = idx;
            }
            m.right[v] = idx;
        }
    return m;
}

bool model_represents(const Graph& g, const IntervalModel& model) {
    const std::size_t n = g.vertex_count();
    if (model.size() != n) return false;
    for (Vertex u = 0; u < n; ++u) {
        if (model.left[u] > model.right[u]) return false;
        for (Vertex v = u + 1; v < n; ++v) {
            const bool meet = model.left[u] <= model.right[v] && model.left[v] <= model.right[u];
            if (meet != g.adjacent(u, v)) return false;
        }
    }
    return true;
}

std::size_t max_nesting_depth(const IntervalModel& model) {
    std::vector<std::size_t> idx(model.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (model.left[a] != model.left[b]) return model.left[a] < model.left[b];
        return model.right[a] < model.right[b];
    });
    // Longest strictly decreasing run of right endpoints.
    std::vector<Rational> tails;  // tails[j]: largest possible last rp of a chain of length j+1
    for (std::size_t i : idx) {
        const Rational& r = model.right[i];
        auto it = std::lower_bound(tails.begin(), tails.end(), r, std::greater<>());
        if (it == tails.end()) tails.push_back(r);
        else *it = r;
    }
    return tails.size();
}

}  // namespace ptg
