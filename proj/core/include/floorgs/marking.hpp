#pragma once

#include "floorgs/diagram.hpp"
#include "floorgs/laurent.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace floorgs {

/// Increasing bijection from the elements of a diagram to {1, ..., n}.
/// labels()[id] is the label of element id.
class Marking {
public:
    Marking() = default;
    explicit Marking(std::vector<int> labels);

    const std::vector<int>& labels() const { return labels_; }
    int label(int element) const { return labels_[element]; }
    int size() const { return static_cast<int>(labels_.size()); }
    /// inverse()[k - 1] is the element labelled k.
    std::vector<int> inverse() const;

    /// `m(<element>)=<k>` lines in element order.
    std::string encode(const FloorDiagram& d) const;

    friend auto operator<=>(const Marking&, const Marking&) = default;

private:
    std::vector<int> labels_;
};

/// Set of disjoint consecutive pairs {i, i+1}, stored by their first element.
class Pairing {
public:
    Pairing() = default;
    /// Throws std::invalid_argument if pairs overlap or start below 1.
    explicit Pairing(std::vector<int> starts);

    /// {{1,2}, {3,4}, ..., {2s-1, 2s}}; throws if 2s > n.
    static Pairing standard(int s, int n);
    /// Parses `i-j,k-l,...` (empty string gives the empty pairing).
    static Pairing parse(std::string_view text);

    const std::vector<int>& starts() const { return starts_; }
    int order() const { return static_cast<int>(starts_.size()); }
    /// Largest label used, 0 for the empty pairing.
    int max_label() const { return starts_.empty() ? 0 : starts_.back() + 1; }
    bool subset_of(const Pairing& other) const;

    std::string to_string() const;

    friend bool operator==(const Pairing&, const Pairing&) = default;

private:
    std::vector<int> starts_;
};

Pairing default_pairing(int s, int n);

/// Edges split by how a pairing meets them. Edge entries are element ids.
struct MultPartition {
    std::vector<int> e0;
    std::vector<int> e1;
    std::vector<std::pair<int, int>> e2;
};

/// Partition of the edges, or nullopt when some pair of S is neither an edge
/// with an adjacent vertex nor two edges both entering or both leaving a
/// common vertex.
std::optional<MultPartition> compat_partition(const FloorDiagram& d, const Marking& m,
                                              const Pairing& s);

/// Refined S-multiplicity; zero for incompatible markings.
SymLaurent multiplicity(const FloorDiagram& d, const Marking& m, const Pairing& s);

/// Immediate successors in the element order: source -> vertex,
/// vertex -> outgoing edge, edge -> head vertex.
std::vector<std::vector<int>> element_successors(const FloorDiagram& d);

/// Whether the marking increases along every oriented relation.
bool is_increasing(const FloorDiagram& d, const Marking& m);

/// Every marking of d up to isomorphism of marked diagrams, in a fixed order.
std::vector<Marking> enumerate_markings(const FloorDiagram& d);

/// nu(D): number of markings up to isomorphism.
std::int64_t nu(const FloorDiagram& d);

/// Linear extensions in which interchangeable edges carry increasing labels.
/// Equals nu(D) times the number of vertex automorphisms.
std::int64_t count_twin_sorted_extensions(const FloorDiagram& d);

} // namespace floorgs
