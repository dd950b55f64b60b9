#include "floorgs/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace floorgs {

namespace {

// Backtracking over vertices in a fixed topological order 0..a-1. Bounded
// edges only point forward, so every acyclic diagram is reached through at
// least one of its topological orders; duplicates are merged by canonical key.
class DiagramSearch {
public:
    DiagramSearch(std::vector<FloorVertex> labels, int bounded_edges, int sources, int sinks,
                  std::map<std::string, FloorDiagram>& found)
        : labels_(std::move(labels)), a_(static_cast<int>(labels_.size())),
          edges_left_(bounded_edges), src_left_(sources), snk_left_(sinks),
          in_weight_(a_, 0), src_(a_, 0), snk_(a_, 0), found_(found)
    {
    }

    void run() { visit(0); }

private:
    int div(int v) const { return labels_[v].left + labels_[v].right; }

    void visit(int j)
    {
        if (j == a_) {
            if (edges_left_ == 0 && src_left_ == 0 && snk_left_ == 0)
                emit();
            return;
        }
        const bool last = j == a_ - 1;
        const int src_lo = last ? src_left_ : 0;
        for (int src = src_lo; src <= src_left_; ++src) {
            const int snk_lo = last ? snk_left_ : 0;
            for (int snk = snk_lo; snk <= snk_left_; ++snk) {
                const int out = in_weight_[j] + src - snk - div(j);
                if (out < 0)
                    break;
                if (last && out != 0)
                    continue;
                src_[j] = src;
                snk_[j] = snk;
                src_left_ -= src;
                snk_left_ -= snk;
                distribute(j, out, j + 1, 1);
                src_left_ += src;
                snk_left_ += snk;
            }
        }
    }

    // Splits the remaining out-weight of vertex j into edges toward later
    // vertices, as a multiset listed in nondecreasing (target, weight) order.
    void distribute(int j, int remaining, int min_target, int min_weight)
    {
        if (remaining == 0) {
            visit(j + 1);
            return;
        }
        if (edges_left_ == 0)
            return;
        for (int t = min_target; t < a_; ++t) {
            for (int w = (t == min_target ? min_weight : 1); w <= remaining; ++w) {
                edges_.push_back({j, t, w});
                in_weight_[t] += w;
                --edges_left_;
                distribute(j, remaining - w, t, w);
                ++edges_left_;
                in_weight_[t] -= w;
                edges_.pop_back();
            }
        }
    }

    void emit()
    {
        std::vector<int> sources, sinks;
        for (int v = 0; v < a_; ++v) {
            sources.insert(sources.end(), src_[v], v);
            sinks.insert(sinks.end(), snk_[v], v);
        }
        FloorDiagram d(labels_, edges_, std::move(sources), std::move(sinks));
        if (!d.connected())
            return;
        Canonical c = canonicalize(d);
        found_.try_emplace(std::move(c.key), std::move(c.diagram));
    }

    std::vector<FloorVertex> labels_;
    int a_;
    int edges_left_;
    int src_left_;
    int snk_left_;
    std::vector<int> in_weight_;
    std::vector<int> src_;
    std::vector<int> snk_;
    std::vector<BoundedEdge> edges_;
    std::map<std::string, FloorDiagram>& found_;
};

} // namespace

std::vector<FloorDiagram> enumerate_diagrams(const HProfile& h, int g)
{
    if (h.a <= 0 || g < 0)
        return {};
    if (!h.closed())
        throw std::invalid_argument("profile violates horizontal closure");
    const PolygonData data = polygon_data(polygon_from_profile(h));
    if (g > data.g_max)
        return {};

    std::map<std::string, FloorDiagram> found;
    std::vector<int> lefts = h.b_left;
    std::sort(lefts.begin(), lefts.end());
    do {
        std::vector<int> rights = h.b_right;
        std::sort(rights.begin(), rights.end());
        do {
            std::vector<FloorVertex> labels(h.a);
            for (int v = 0; v < h.a; ++v)
                labels[v] = {lefts[v], rights[v]};
            DiagramSearch(labels, h.a - 1 + g, h.e_bot, h.e_top, found).run();
        } while (std::next_permutation(rights.begin(), rights.end()));
    } while (std::next_permutation(lefts.begin(), lefts.end()));

    std::vector<FloorDiagram> out;
    out.reserve(found.size());
    for (auto& [key, d] : found)
        out.push_back(std::move(d));
    return out;
}

} // namespace floorgs
