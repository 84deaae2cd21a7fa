#include "greymadm/grey_graph.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace greymadm {

EdgeKey::EdgeKey(VertexId a, VertexId b) {
    if (b < a) {
        std::swap(a, b);
    }
    first_ = std::move(a);
    second_ = std::move(b);
}

std::string to_string(const EdgeKey& e) { return e.first() + "--" + e.second(); }

namespace {

void check_edge_bounds(const EdgeKey& key, const GreyNumber& mu, const GreyNumber& sp, const GreyNumber& sq,
                       std::vector<Violation>& out) {
    const double kernel_bound = std::min(sp.kernel(), sq.kernel());
    const double greyness_bound = std::max(sp.greyness(), sq.greyness());
    if (mu.kernel() > kernel_bound) {
        out.push_back({key, BoundComponent::kernel, mu.kernel(), kernel_bound});
    }
    if (mu.greyness() < greyness_bound) {
        out.push_back({key, BoundComponent::greyness, mu.greyness(), greyness_bound});
    }
}

}  // namespace

std::string to_string(const Violation& v) {
    if (v.component == BoundComponent::kernel) {
        return fmt::format("edge {}: kernel {} exceeds endpoint minimum {}", to_string(v.edge), v.observed, v.bound);
    }
    return fmt::format("edge {}: greyness {} is below endpoint maximum {}", to_string(v.edge), v.observed, v.bound);
}

GreyGraph::GreyGraph(VertexMap vertices, EdgeMap edges, bool strict)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (const auto& [id, _] : vertices_) {
        if (id.empty()) {
            throw InputError("vertex id must be non-empty");
        }
    }
    for (const auto& [key, _] : edges_) {
        if (key.first() == key.second()) {
            throw InputError(fmt::format("self-loop on vertex '{}'", key.first()));
        }
        for (const VertexId* end : {&key.first(), &key.second()}) {
            if (!vertices_.contains(*end)) {
                throw InputError(fmt::format("edge {} references unknown vertex '{}'", to_string(key), *end));
            }
        }
    }
    if (strict) {
        const ValidityReport report = validate(*this);
        if (!report.valid()) {
            std::string msg = "grey graph validity violated:";
            for (const auto& v : report.violations) {
                msg += "\n  " + to_string(v);
            }
            throw InputError(msg);
        }
    }
}

GreyGraph GreyGraph::from_lists(std::vector<std::pair<VertexId, GreyNumber>> vertices,
                                std::vector<std::pair<EdgeKey, GreyNumber>> edges, bool strict) {
    VertexMap vmap;
    for (auto& [id, value] : vertices) {
        if (!vmap.emplace(id, value).second) {
            throw InputError(fmt::format("duplicate vertex '{}'", id));
        }
    }
    EdgeMap emap;
    for (auto& [key, value] : edges) {
        if (!emap.emplace(key, value).second) {
            throw InputError(fmt::format("duplicate edge {}", to_string(key)));
        }
    }
    return GreyGraph(std::move(vmap), std::move(emap), strict);
}

const GreyNumber& GreyGraph::vertex(const VertexId& v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) {
        throw InputError(fmt::format("unknown vertex '{}'", v));
    }
    return it->second;
}

const GreyNumber* GreyGraph::find_edge(const VertexId& a, const VertexId& b) const {
    auto it = edges_.find(EdgeKey(a, b));
    return it == edges_.end() ? nullptr : &it->second;
}

ValidityReport validate(const GreyGraph& g) {
    ValidityReport report;
    for (const auto& [key, mu] : g.edges()) {
        check_edge_bounds(key, mu, g.vertex(key.first()), g.vertex(key.second()), report.violations);
    }
    return report;
}

GreyNumber strong_edge(const GreyNumber& p, const GreyNumber& q) {
    return GreyNumber(std::min(p.kernel(), q.kernel()), std::max(p.greyness(), q.greyness()));
}

bool is_strong(const GreyGraph& g) {
    return std::ranges::all_of(g.edges(), [&](const auto& entry) {
        const auto& [key, mu] = entry;
        return mu == strong_edge(g.vertex(key.first()), g.vertex(key.second()));
    });
}

GreyGraph strong_completion(const VertexMap& vertices) {
    if (vertices.empty()) {
        throw InputError("strong completion needs at least one vertex");
    }
    EdgeMap edges;
    for (auto p = vertices.begin(); p != vertices.end(); ++p) {
        for (auto q = std::next(p); q != vertices.end(); ++q) {
            edges.emplace(EdgeKey(p->first, q->first), strong_edge(p->second, q->second));
        }
    }
    return GreyGraph(vertices, std::move(edges));
}

namespace {

GreyNumber merge_shared(const GreyNumber& a, const GreyNumber& b) {
    return GreyNumber(std::max(a.kernel(), b.kernel()), std::min(a.greyness(), b.greyness()));
}

template <typename Map>
Map merge_maps(const Map& m1, const Map& m2) {
    Map out = m1;
    for (const auto& [key, value] : m2) {
        auto [it, inserted] = out.emplace(key, value);
        if (!inserted) {
            it->second = merge_shared(it->second, value);
        }
    }
    return out;
}

}  // namespace

GreyGraph graph_union(const GreyGraph& g1, const GreyGraph& g2) {
    return GreyGraph(merge_maps(g1.vertices(), g2.vertices()), merge_maps(g1.edges(), g2.edges()));
}

GreyGraph graph_sum(const GreyGraph& g1, const GreyGraph& g2) {
    for (const auto& [id, _] : g1.vertices()) {
        if (g2.has_vertex(id)) {
            throw InputError(fmt::format("graph sum requires disjoint vertex sets; '{}' appears in both", id));
        }
    }
    VertexMap vertices = merge_maps(g1.vertices(), g2.vertices());
    EdgeMap edges = merge_maps(g1.edges(), g2.edges());
    for (const auto& [p, sp] : g1.vertices()) {
        for (const auto& [q, sq] : g2.vertices()) {
            edges.emplace(EdgeKey(p, q), strong_edge(sp, sq));
        }
    }
    return GreyGraph(std::move(vertices), std::move(edges));
}

VertexId product_vertex(const VertexId& p, const VertexId& q) { return "(" + p + "," + q + ")"; }

GreyGraph cartesian_product(const GreyGraph& g1, const GreyGraph& g2) {
    if (g1.vertices().empty() || g2.vertices().empty()) {
        throw InputError("cartesian product needs two non-empty graphs");
    }
    VertexMap vertices;
    for (const auto& [p, sp] : g1.vertices()) {
        for (const auto& [q, sq] : g2.vertices()) {
            if (!vertices.emplace(product_vertex(p, q), strong_edge(sp, sq)).second) {
                throw InputError(fmt::format("product vertex label {} is ambiguous", product_vertex(p, q)));
            }
        }
    }
    EdgeMap edges;
    // (r,p)--(r,q) for r in V1, pq in E2
    for (const auto& [r, sr] : g1.vertices()) {
        for (const auto& [pq, mu] : g2.edges()) {
            edges.emplace(EdgeKey(product_vertex(r, pq.first()), product_vertex(r, pq.second())), strong_edge(sr, mu));
        }
    }
    // (p,r)--(q,r) for r in V2, pq in E1
    for (const auto& [r, sr] : g2.vertices()) {
        for (const auto& [pq, mu] : g1.edges()) {
            edges.emplace(EdgeKey(product_vertex(pq.first(), r), product_vertex(pq.second(), r)), strong_edge(mu, sr));
        }
    }
    return GreyGraph(std::move(vertices), std::move(edges));
}

GreyGraph attribute_graph(const std::vector<GreyNumber>& weights, const Matrix<GreyNumber>& influence,
                          const std::vector<std::string>& names) {
    const std::size_t m = weights.size();
    if (influence.rows() != m || influence.cols() != m) {
        throw InputError(fmt::format("influence matrix must be {0}x{0}, got {1}x{2}", m, influence.rows(),
                                     influence.cols()));
    }
    if (!names.empty() && names.size() != m) {
        throw InputError(fmt::format("expected {} attribute names, got {}", m, names.size()));
    }
    auto label = [&](std::size_t j) { return names.empty() ? fmt::format("A{}", j + 1) : names[j]; };

    VertexMap vertices;
    for (std::size_t j = 0; j < m; ++j) {
        if (!vertices.emplace(label(j), weights[j]).second) {
            throw InputError(fmt::format("duplicate attribute name '{}'", label(j)));
        }
    }
    EdgeMap edges;
    for (std::size_t p = 0; p < m; ++p) {
        if (influence(p, p).kernel() != 1.0) {
            throw InputError(fmt::format("influence diagonal ({0},{0}) must have unit kernel, got {1}", p + 1,
                                         influence(p, p).kernel()));
        }
        for (std::size_t q = p + 1; q < m; ++q) {
            if (influence(p, q) != influence(q, p)) {
                throw InputError(fmt::format("influence matrix is asymmetric at ({},{})", p + 1, q + 1));
            }
            if (influence(p, q).kernel() != 0.0) {
                edges.emplace(EdgeKey(label(p), label(q)), influence(p, q));
            }
        }
    }
    return GreyGraph(std::move(vertices), std::move(edges));
}

}  // namespace greymadm
