#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "greymadm/grey_number.hpp"
#include "greymadm/matrix.hpp"

namespace greymadm {

using VertexId = std::string;

/// Unordered vertex pair, stored with `first < second`.
class EdgeKey {
public:
    EdgeKey(VertexId a, VertexId b);

    const VertexId& first() const noexcept { return first_; }
    const VertexId& second() const noexcept { return second_; }

    auto operator<=>(const EdgeKey&) const = default;
    bool operator==(const EdgeKey&) const = default;

private:
    VertexId first_;
    VertexId second_;
};

std::string to_string(const EdgeKey& e);

enum class BoundComponent { kernel, greyness };

struct Violation {
    EdgeKey edge;
    BoundComponent component;
    double observed;
    double bound;
};

std::string to_string(const Violation& v);

struct ValidityReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
};

using VertexMap = std::map<VertexId, GreyNumber>;
using EdgeMap = std::map<EdgeKey, GreyNumber>;

/// Simple undirected graph with grey-number vertex weights (sigma) and edge
/// weights (mu).
///
/// An edge is valid when its kernel does not exceed either endpoint kernel
/// and its greyness is at least either endpoint greyness. Non-strict
/// construction stores invalid edges as given; `validate` reports them.
class GreyGraph {
public:
    GreyGraph() = default;

    /// Throws InputError on an empty or unknown vertex id, a self-loop, or,
    /// when `strict`, on any validity violation.
    GreyGraph(VertexMap vertices, EdgeMap edges, bool strict = false);

    /// Like the map constructor but rejects duplicate edges, which a map
    /// would otherwise silently merge.
    static GreyGraph from_lists(std::vector<std::pair<VertexId, GreyNumber>> vertices,
                                std::vector<std::pair<EdgeKey, GreyNumber>> edges,
                                bool strict = false);

    const VertexMap& vertices() const noexcept { return vertices_; }
    const EdgeMap& edges() const noexcept { return edges_; }

    bool has_vertex(const VertexId& v) const { return vertices_.contains(v); }
    const GreyNumber& vertex(const VertexId& v) const;
    const GreyNumber* find_edge(const VertexId& a, const VertexId& b) const;

    bool operator==(const GreyGraph&) const = default;

private:
    VertexMap vertices_;
    EdgeMap edges_;
};

ValidityReport validate(const GreyGraph& g);

/// True when every present edge equals (min endpoint kernel, max endpoint
/// greyness). Missing edges are allowed.
bool is_strong(const GreyGraph& g);

/// The edge value a strong grey graph assigns between two vertex weights.
GreyNumber strong_edge(const GreyNumber& p, const GreyNumber& q);

GreyGraph strong_completion(const VertexMap& vertices);

/// Shared vertices and edges take (max kernel, min greyness); everything
/// else carries over unchanged.
GreyGraph graph_union(const GreyGraph& g1, const GreyGraph& g2);

/// Join: the union plus one edge for every (p in g1, q in g2) pair, valued
/// as a strong edge. Requires disjoint vertex sets.
GreyGraph graph_sum(const GreyGraph& g1, const GreyGraph& g2);

/// Product vertex label for the pair (p, q).
VertexId product_vertex(const VertexId& p, const VertexId& q);

GreyGraph cartesian_product(const GreyGraph& g1, const GreyGraph& g2);

/// Attribute-layer graph: vertex j carries weights[j], edge pq carries the
/// influence entry (p, q). Zero-kernel off-diagonal entries are omitted.
/// Vertex labels default to A1..Am when `names` is empty.
GreyGraph attribute_graph(const std::vector<GreyNumber>& weights, const Matrix<GreyNumber>& influence,
                          const std::vector<std::string>& names = {});

}  // namespace greymadm
