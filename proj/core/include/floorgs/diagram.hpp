#pragma once

#include "floorgs/polygon.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace floorgs {

struct FloorVertex {
    int left = 0;  // L(v), drawn from b_left
    int right = 0; // R(v), drawn from b_right
    friend auto operator<=>(const FloorVertex&, const FloorVertex&) = default;
};

/// Bounded edge src -> dst.
struct BoundedEdge {
    int src = 0;
    int dst = 0;
    int weight = 1;
    friend auto operator<=>(const BoundedEdge&, const BoundedEdge&) = default;
};

enum class ElementKind { Vertex, Bounded, Source, Sink };

/// A vertex or an edge of a diagram. Element ids are laid out as
/// [vertices | bounded edges | sources | sinks].
struct Element {
    ElementKind kind;
    int index;
};

/// Weighted oriented graph with L/R vertex labels. Infinite edges have
/// weight 1; a source enters its vertex, a sink leaves it.
class FloorDiagram {
public:
    FloorDiagram() = default;
    FloorDiagram(std::vector<FloorVertex> vertices, std::vector<BoundedEdge> edges,
                 std::vector<int> sources, std::vector<int> sinks);

    const std::vector<FloorVertex>& vertices() const { return vertices_; }
    const std::vector<BoundedEdge>& edges() const { return edges_; }
    /// Target vertex of each source edge.
    const std::vector<int>& sources() const { return sources_; }
    /// Origin vertex of each sink edge.
    const std::vector<int>& sinks() const { return sinks_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const
    {
        return static_cast<int>(edges_.size() + sources_.size() + sinks_.size());
    }
    /// n(D) = |V| + |E|
    int element_count() const { return vertex_count() + edge_count(); }

    /// First Betti number, assuming the graph is connected.
    int genus() const { return static_cast<int>(edges_.size()) - vertex_count() + 1; }
    int divergence(int v) const;
    /// sum over all edges of (w - 1)
    int degree() const;

    Element element(int id) const;
    int element_id(ElementKind kind, int index) const;
    /// Weight of an edge element (1 for infinite edges).
    int weight(int id) const;
    /// Tail and head vertex of an edge element; -1 where the edge is infinite.
    int tail(int id) const;
    int head(int id) const;
    std::string element_name(int id) const;

    bool connected() const;
    bool acyclic() const;
    /// reach[u][v]: an oriented path of bounded edges goes from u to v (u != v).
    std::vector<std::vector<bool>> reachability() const;
    /// Some pair of vertices is incomparable in the orientation order.
    bool has_incomparable_vertices() const;

    /// Text encoding: `V<i>:L=..,R=..`, `E:<s>-><d>:w=..`, `SRC:-><d>`, `SNK:<s>->` lines.
    std::string encode() const;

    friend bool operator==(const FloorDiagram&, const FloorDiagram&) = default;

private:
    std::vector<FloorVertex> vertices_;
    std::vector<BoundedEdge> edges_;
    std::vector<int> sources_;
    std::vector<int> sinks_;
};

struct Validation {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every floor-diagram condition against profile h and genus g.
Validation validate(const FloorDiagram& d, const HProfile& h, int g);

struct DiagramStats {
    int n = 0;
    int deg = 0;
    int codeg = 0;
};

/// n, degree and codegree; throws std::logic_error on a negative codegree
/// or when n differs from y - 1 + g.
DiagramStats stats(const FloorDiagram& d, const PolygonData& data);

struct Canonical {
    FloorDiagram diagram; // vertices and edges in canonical order
    std::string key;      // equal keys <=> isomorphic diagrams
};

Canonical canonicalize(const FloorDiagram& d);
std::string canonical_form(const FloorDiagram& d);

/// Label- and weight-preserving vertex permutations (perm[v] = image of v),
/// identity first.
std::vector<std::vector<int>> vertex_automorphisms(const FloorDiagram& d);

/// Groups of interchangeable edges: same kind, same endpoints, same weight.
/// Each group is sorted by element id; singletons included.
std::vector<std::vector<int>> twin_classes(const FloorDiagram& d);

/// Element permutation induced by a vertex automorphism, matching twin
/// edges in id order.
std::vector<int> lift_vertex_automorphism(const FloorDiagram& d, const std::vector<int>& perm);

/// |Aut(D)| = |vertex automorphisms| * prod(|twin class|!). Checked arithmetic.
std::int64_t automorphism_count(const FloorDiagram& d);

/// Every automorphism as an element permutation (perm[id] = image id).
std::vector<std::vector<int>> automorphisms(const FloorDiagram& d);

/// A+: e1 is a bounded edge v1 -> v2 and e2 leaves v1 without entering v2.
/// The tail of e2 moves to v2 and w(e1) grows by w(e2).
FloorDiagram a_plus(const FloorDiagram& d, int e1, int e2);

/// A-: e1 is a bounded edge v1 -> v2 and e2 enters v2 without leaving v1.
/// The head of e2 moves to v1 and w(e1) grows by w(e2).
FloorDiagram a_minus(const FloorDiagram& d, int e1, int e2);

/// Every floor diagram with profile h and genus g, one per isomorphism
/// class, sorted by canonical key.
std::vector<FloorDiagram> enumerate_diagrams(const HProfile& h, int g);

} // namespace floorgs
