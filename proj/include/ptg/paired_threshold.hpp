#pragma once

#include "ptg/graph.hpp"
#include "ptg/interval.hpp"
#include "ptg/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ptg {

/// Single-threshold realization: uv is an edge iff
/// weight[u] + weight[v] >= threshold and |weight[u] - weight[v]| <= threshold.
struct WeightCertificate {
    std::vector<Rational> weight;
    Rational threshold;
};

/// An ordering sigma and split index p: the reversal of sigma is an interval
/// ordering, each of the first p vertices has its neighborhood as a block
/// after position p, and the last n - p vertices form an umbrella ordering.
struct BroomCertificate {
    VertexOrdering sigma;
    std::size_t p = 0;
};

/// I (independent, listed in neighborhood-containment order) plus an umbrella
/// ordering of U = V \ I in which every N(v), v in I, is consecutive and
/// N(I) lies inside the closed neighborhood of the first vertex.
struct PTPartition {
    VertexList independent;
    VertexOrdering umbrella;
};

/// Outcome of a certificate check; `violation` is the lexicographically first
/// offending pair when the failure is pair-specific.
struct CertificateCheck {
    bool ok = false;
    std::optional<Edge> violation;
    std::string message;

    explicit operator bool() const noexcept { return ok; }
};

bool pt_adjacent(const Rational& a, const Rational& b, const Rational& threshold);

/// Exact check of the single-threshold biconditional for every pair. Runs in
/// O(n log n + m) comparisons; the quadratic scan only runs to locate a violation.
CertificateCheck check_weight_certificate(const Graph& g, const WeightCertificate& cert);

/// Exact O(n^2) check of the two-threshold definition.
CertificateCheck check_two_threshold(const Graph& g, std::span<const Rational> weight,
                                     const Rational& sum_threshold, const Rational& diff_threshold);

/// Converts a two-threshold realization into an equal-threshold one with
/// threshold diff_threshold. Throws ContractError (naming the violating pair)
/// if the input does not realize g and `validate` is set.
WeightCertificate normalize_thresholds(const Graph& g, std::span<const Rational> weight,
                                       const Rational& sum_threshold, const Rational& diff_threshold,
                                       bool validate = true);

bool check_broom(const Graph& g, const BroomCertificate& cert);

/// Sorts by weight (ties by id); p counts weights below threshold / 2.
/// Throws ContractError if `cert` does not realize g.
BroomCertificate broom_from_weights(const Graph& g, const WeightCertificate& cert);

/// I in containment order followed by the umbrella ordering, p = |I|.
BroomCertificate broom_from_partition(const PTPartition& part);

/// Full validation of all partition conditions.
bool check_partition(const Graph& g, const PTPartition& part);

/// Decides whether V \ I admits an umbrella ordering completing I to a
/// paired threshold partition of the connected graph g, by refining the
/// true-twin classes of g - I. Throws ContractError unless g is connected, I
/// is independent, g - I is unit interval and N[I] induces a threshold graph.
std::optional<PTPartition> verify_partition(const Graph& g, std::span<const Vertex> independent);

/// Like verify_partition, but an unmet precondition yields nullopt.
std::optional<PTPartition> try_partition(const Graph& g, std::span<const Vertex> independent);

/// Weights built from a partition of a connected graph, plus the indices that
/// drive the construction (1-based, over the numbering I then umbrella).
struct WeightSynthesis {
    WeightCertificate certificate;
    VertexList numbering;  ///< numbering[i - 1] is the vertex with index i
    std::size_t p = 0;     ///< |I|
    std::size_t q = 0;     ///< first index adjacent to the first I vertex
    std::size_t t = 0;     ///< last index inside N[first U vertex]
};

/// General-case construction with threshold 2n^2. Requires g connected,
/// I and U nonempty and U not a clique; throws ContractError otherwise.
WeightSynthesis synthesize_weights(const Graph& g, const PTPartition& part);

/// w(v_1) < ... < w(v_p) < n^2 < w(v_{p+1}) < ... < w(v_t) < 3n^2 < w(v_{t+1}) < ... < w(v_n).
bool satisfies_weight_chain(const WeightSynthesis& s);

/// Weights for a unit interval graph from an umbrella ordering: all weights
/// are at least threshold + offset, and distinct components differ by more
/// than threshold. Requires threshold > 0.
std::vector<Rational> unit_interval_weights(const Graph& g, const VertexOrdering& umbrella,
                                            const Rational& threshold, const Rational& offset = 0);

/// Handles every valid partition: empty I or U, threshold graphs, disconnected
/// graphs (one component carries I, the rest are lifted above it), and the
/// general connected case. The result is re-checked when `self_check` is set;
/// a failed re-check throws std::logic_error.
WeightCertificate synthesize_weights_general(const Graph& g, const PTPartition& part, bool self_check = true);

/// Greedy choice of one simplicial vertex per clique from the left end
/// (first) and the right end (second) of the clique path, stopping at the
/// first clique where no choice keeps N[I] a threshold graph.
std::pair<VertexList, VertexList> greedy_candidate_sets(const Graph& g, const CliquePath& cp);

enum class Reason {
    None,
    NotInterval,
    TwoNonUIGComponents,
    TooManyCoreComponents,
    TwoComponentShapeFail,
    NoValidPartition,
};

std::string to_string(Reason reason);

struct RecognizeOptions {
    /// Re-validate weight certificates with the all-pairs check.
    bool self_check = true;
    /// Build the weight certificate on YES (the broom certificate is always built).
    bool build_weights = true;
};

struct RecognitionResult {
    bool paired_threshold = false;
    Reason reason = Reason::None;

    std::optional<WeightCertificate> weights;
    std::optional<BroomCertificate> broom;
    std::optional<PTPartition> partition;

    /// Witnesses, in original vertex ids.
    std::vector<VertexList> non_unit_interval_components;
    std::vector<VertexList> core_components;
    VertexList left_candidates;
    VertexList right_candidates;
};

/// Decides whether g is a paired threshold graph. YES results carry
/// certificates for g itself.
RecognitionResult recognize(const Graph& g, const RecognizeOptions& options = {});

}  // namespace ptg
