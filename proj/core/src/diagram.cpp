#include "floorgs/diagram.hpp"

#include "floorgs/laurent.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace floorgs {

FloorDiagram::FloorDiagram(std::vector<FloorVertex> vertices, std::vector<BoundedEdge> edges,
                           std::vector<int> sources, std::vector<int> sinks)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), sources_(std::move(sources)),
      sinks_(std::move(sinks))
{
    const int a = vertex_count();
    auto check = [a](int v) {
        if (v < 0 || v >= a)
            throw std::out_of_range("edge endpoint out of range");
    };
    for (const auto& e : edges_) {
        check(e.src);
        check(e.dst);
        if (e.src == e.dst)
            throw std::invalid_argument("loops are not allowed");
        if (e.weight < 1)
            throw std::invalid_argument("edge weights must be positive");
    }
    for (int v : sources_)
        check(v);
    for (int v : sinks_)
        check(v);
}

int FloorDiagram::divergence(int v) const
{
    int div = 0;
    for (const auto& e : edges_) {
        if (e.dst == v)
            div += e.weight;
        if (e.src == v)
            div -= e.weight;
    }
    div += static_cast<int>(std::count(sources_.begin(), sources_.end(), v));
    div -= static_cast<int>(std::count(sinks_.begin(), sinks_.end(), v));
    return div;
}

int FloorDiagram::degree() const
{
    int deg = 0;
    for (const auto& e : edges_)
        deg += e.weight - 1;
    return deg;
}

Element FloorDiagram::element(int id) const
{
    const int nv = vertex_count();
    const int nb = static_cast<int>(edges_.size());
    const int ns = static_cast<int>(sources_.size());
    if (id < 0 || id >= element_count())
        throw std::out_of_range("element id out of range");
    if (id < nv)
        return {ElementKind::Vertex, id};
    if (id < nv + nb)
        return {ElementKind::Bounded, id - nv};
    if (id < nv + nb + ns)
        return {ElementKind::Source, id - nv - nb};
    return {ElementKind::Sink, id - nv - nb - ns};
}

int FloorDiagram::element_id(ElementKind kind, int index) const
{
    const int nv = vertex_count();
    const int nb = static_cast<int>(edges_.size());
    const int ns = static_cast<int>(sources_.size());
    switch (kind) {
    case ElementKind::Vertex: return index;
    case ElementKind::Bounded: return nv + index;
    case ElementKind::Source: return nv + nb + index;
    case ElementKind::Sink: return nv + nb + ns + index;
    }
    return -1;
}

int FloorDiagram::weight(int id) const
{
    const Element el = element(id);
    if (el.kind == ElementKind::Vertex)
        throw std::invalid_argument("vertices carry no weight");
    return el.kind == ElementKind::Bounded ? edges_[el.index].weight : 1;
}

int FloorDiagram::tail(int id) const
{
    const Element el = element(id);
    switch (el.kind) {
    case ElementKind::Bounded: return edges_[el.index].src;
    case ElementKind::Sink: return sinks_[el.index];
    default: return -1;
    }
}

int FloorDiagram::head(int id) const
{
    const Element el = element(id);
    switch (el.kind) {
    case ElementKind::Bounded: return edges_[el.index].dst;
    case ElementKind::Source: return sources_[el.index];
    default: return -1;
    }
}

std::string FloorDiagram::element_name(int id) const
{
    const Element el = element(id);
    switch (el.kind) {
    case ElementKind::Vertex: return "V" + std::to_string(el.index);
    case ElementKind::Bounded: return "E" + std::to_string(el.index);
    case ElementKind::Source: return "SRC" + std::to_string(el.index);
    case ElementKind::Sink: return "SNK" + std::to_string(el.index);
    }
    return {};
}

bool FloorDiagram::connected() const
{
    const int a = vertex_count();
    if (a == 0)
        return false;
    std::vector<int> parent(a);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int components = a;
    for (const auto& e : edges_) {
        const int r1 = find(e.src), r2 = find(e.dst);
        if (r1 != r2) {
            parent[r1] = r2;
            --components;
        }
    }
    return components == 1;
}

std::vector<std::vector<bool>> FloorDiagram::reachability() const
{
    const int a = vertex_count();
    std::vector<std::vector<bool>> reach(a, std::vector<bool>(a, false));
    for (const auto& e : edges_)
        reach[e.src][e.dst] = true;
    for (int k = 0; k < a; ++k)
        for (int i = 0; i < a; ++i)
            if (reach[i][k])
                for (int j = 0; j < a; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
    return reach;
}

bool FloorDiagram::acyclic() const
{
    const auto reach = reachability();
    for (int v = 0; v < vertex_count(); ++v)
        if (reach[v][v])
            return false;
    return true;
}

bool FloorDiagram::has_incomparable_vertices() const
{
    const auto reach = reachability();
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = u + 1; v < vertex_count(); ++v)
            if (!reach[u][v] && !reach[v][u])
                return true;
    return false;
}

std::string FloorDiagram::encode() const
{
    std::ostringstream os;
    for (int v = 0; v < vertex_count(); ++v)
        os << "V" << v << ":L=" << vertices_[v].left << ",R=" << vertices_[v].right << "\n";
    for (const auto& e : edges_)
        os << "E:" << e.src << "->" << e.dst << ":w=" << e.weight << "\n";
    for (int v : sources_)
        os << "SRC:->" << v << "\n";
    for (int v : sinks_)
        os << "SNK:" << v << "->\n";
    return os.str();
}

// -------------------------------------------------------------- validation

Validation validate(const FloorDiagram& d, const HProfile& h, int g)
{
    Validation out;
    auto fail = [&out](std::string msg) { out.violations.push_back(std::move(msg)); };

    if (d.vertex_count() != h.a)
        fail("vertex count " + std::to_string(d.vertex_count()) + " != a = " + std::to_string(h.a));
    if (static_cast<int>(d.sources().size()) != h.e_bot)
        fail("source count != e_bot");
    if (static_cast<int>(d.sinks().size()) != h.e_top)
        fail("sink count != e_top");
    if (d.vertex_count() == 0) {
        fail("empty graph");
        return out;
    }
    if (!d.connected())
        fail("graph is not connected");
    if (!d.acyclic())
        fail("orientation has a cycle");
    if (d.genus() != g)
        fail("genus " + std::to_string(d.genus()) + " != " + std::to_string(g));

    std::vector<int> lefts, rights;
    for (int v = 0; v < d.vertex_count(); ++v) {
        const auto& fv = d.vertices()[v];
        lefts.push_back(fv.left);
        rights.push_back(fv.right);
        if (d.divergence(v) != fv.left + fv.right)
            fail("div(V" + std::to_string(v) + ") = " + std::to_string(d.divergence(v)) +
                 " != L + R = " + std::to_string(fv.left + fv.right));
    }
    std::sort(lefts.begin(), lefts.end());
    std::sort(rights.begin(), rights.end());
    if (lefts != h.b_left)
        fail("L labels do not match b_left");
    if (rights != h.b_right)
        fail("R labels do not match b_right");
    return out;
}

DiagramStats stats(const FloorDiagram& d, const PolygonData& data)
{
    DiagramStats s;
    const int g = d.genus();
    s.n = d.element_count();
    s.deg = d.degree();
    s.codeg = data.g_max - g - s.deg;
    if (s.n != data.y - 1 + g)
        throw std::logic_error("element count differs from y - 1 + g");
    if (s.codeg < 0)
        throw std::logic_error("negative codegree");
    return s;
}

// ------------------------------------------------------------ canonical form

namespace {

using Color = std::array<int, 8>;

std::vector<Color> vertex_colors(const FloorDiagram& d)
{
    std::vector<Color> colors(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) {
        auto& c = colors[v];
        c = {d.vertices()[v].left, d.vertices()[v].right, 0, 0, 0, 0, 0, 0};
    }
    for (int v : d.sources())
        ++colors[v][2];
    for (int v : d.sinks())
        ++colors[v][3];
    for (const auto& e : d.edges()) {
        ++colors[e.dst][4];
        colors[e.dst][5] += e.weight;
        ++colors[e.src][6];
        colors[e.src][7] += e.weight;
    }
    return colors;
}

// Calls fn(order) for every vertex order (position -> vertex) that sorts the
// colors; orders differ only by permutations inside color groups.
void for_each_color_order(const std::vector<Color>& colors,
                          const std::function<void(const std::vector<int>&)>& fn)
{
    const int a = static_cast<int>(colors.size());
    std::vector<int> base(a);
    std::iota(base.begin(), base.end(), 0);
    std::stable_sort(base.begin(), base.end(),
                     [&](int x, int y) { return colors[x] < colors[y]; });

    std::vector<std::pair<int, int>> groups; // [begin, end)
    for (int i = 0; i < a;) {
        int j = i;
        while (j < a && colors[base[j]] == colors[base[i]])
            ++j;
        if (j - i > 1)
            groups.emplace_back(i, j);
        i = j;
    }

    std::vector<int> order = base;
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
            fn(order);
            return;
        }
        auto [b, e] = groups[gi];
        std::sort(order.begin() + b, order.begin() + e);
        do {
            rec(gi + 1);
        } while (std::next_permutation(order.begin() + b, order.begin() + e));
    };
    rec(0);
}

std::vector<BoundedEdge> relabeled_edges(const FloorDiagram& d, const std::vector<int>& order)
{
    std::vector<int> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[order[i]] = static_cast<int>(i);
    std::vector<BoundedEdge> edges;
    edges.reserve(d.edges().size());
    for (const auto& e : d.edges())
        edges.push_back({pos[e.src], pos[e.dst], e.weight});
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace

Canonical canonicalize(const FloorDiagram& d)
{
    const auto colors = vertex_colors(d);
    std::vector<int> best_order;
    std::vector<BoundedEdge> best_edges;
    for_each_color_order(colors, [&](const std::vector<int>& order) {
        auto edges = relabeled_edges(d, order);
        if (best_order.empty() || edges < best_edges) {
            best_edges = std::move(edges);
            best_order = order;
        }
    });

    std::vector<int> pos(best_order.size());
    for (std::size_t i = 0; i < best_order.size(); ++i)
        pos[best_order[i]] = static_cast<int>(i);

    std::vector<FloorVertex> vertices;
    std::vector<int> sources, sinks;
    for (int v : best_order)
        vertices.push_back(d.vertices()[v]);
    for (int v : d.sources())
        sources.push_back(pos[v]);
    for (int v : d.sinks())
        sinks.push_back(pos[v]);
    std::sort(sources.begin(), sources.end());
    std::sort(sinks.begin(), sinks.end());

    std::ostringstream key;
    for (int v : best_order) {
        for (int c : colors[v])
            key << c << ",";
        key << ";";
    }
    key << "|";
    for (const auto& e : best_edges)
        key << e.src << ">" << e.dst << ":" << e.weight << ";";

    return {FloorDiagram(std::move(vertices), std::move(best_edges), std::move(sources),
                         std::move(sinks)),
            key.str()};
}

std::string canonical_form(const FloorDiagram& d)
{
    return canonicalize(d).key;
}

std::vector<std::vector<int>> vertex_automorphisms(const FloorDiagram& d)
{
    const auto colors = vertex_colors(d);
    std::vector<int> base;
    std::vector<BoundedEdge> base_edges;
    std::vector<std::vector<int>> out;
    for_each_color_order(colors, [&](const std::vector<int>& order) {
        auto edges = relabeled_edges(d, order);
        if (base.empty()) {
            base = order;
            base_edges = std::move(edges);
        } else if (edges != base_edges) {
            return;
        }
        std::vector<int> perm(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            perm[base[i]] = order[i];
        out.push_back(std::move(perm));
    });
    // The first order enumerated is the base itself, so the identity leads.
    return out;
}

namespace {

using TwinKey = std::tuple<int, int, int, int>; // kind, tail, head, weight

TwinKey twin_key(const FloorDiagram& d, int id)
{
    return {static_cast<int>(d.element(id).kind), d.tail(id), d.head(id), d.weight(id)};
}

std::map<TwinKey, std::vector<int>> twin_map(const FloorDiagram& d)
{
    std::map<TwinKey, std::vector<int>> m;
    for (int id = d.vertex_count(); id < d.element_count(); ++id)
        m[twin_key(d, id)].push_back(id);
    return m;
}

} // namespace

std::vector<std::vector<int>> twin_classes(const FloorDiagram& d)
{
    std::vector<std::vector<int>> out;
    for (int v = 0; v < d.vertex_count(); ++v)
        out.push_back({v});
    for (auto& [key, ids] : twin_map(d))
        out.push_back(ids);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> lift_vertex_automorphism(const FloorDiagram& d, const std::vector<int>& perm)
{
    std::vector<int> phi(d.element_count());
    for (int v = 0; v < d.vertex_count(); ++v)
        phi[v] = perm[v];
    const auto twins = twin_map(d);
    for (const auto& [key, ids] : twins) {
        auto [kind, tail, head, w] = key;
        const TwinKey image{kind, tail < 0 ? -1 : perm[tail], head < 0 ? -1 : perm[head], w};
        const auto it = twins.find(image);
        if (it == twins.end() || it->second.size() != ids.size())
            throw std::logic_error("vertex permutation is not an automorphism");
        for (std::size_t k = 0; k < ids.size(); ++k)
            phi[ids[k]] = it->second[k];
    }
    return phi;
}

std::int64_t automorphism_count(const FloorDiagram& d)
{
    std::int64_t count = static_cast<std::int64_t>(vertex_automorphisms(d).size());
    for (const auto& cls : twin_classes(d))
        for (std::int64_t k = 2; k <= static_cast<std::int64_t>(cls.size()); ++k)
            count = checked::mul(count, k);
    return count;
}

std::vector<std::vector<int>> automorphisms(const FloorDiagram& d)
{
    std::vector<std::vector<int>> twin_perms{std::vector<int>(d.element_count())};
    std::iota(twin_perms[0].begin(), twin_perms[0].end(), 0);
    for (const auto& cls : twin_classes(d)) {
        if (cls.size() < 2)
            continue;
        std::vector<std::vector<int>> next;
        for (const auto& base : twin_perms) {
            std::vector<int> images = cls;
            do {
                auto p = base;
                for (std::size_t k = 0; k < cls.size(); ++k)
                    p[cls[k]] = images[k];
                next.push_back(std::move(p));
            } while (std::next_permutation(images.begin(), images.end()));
        }
        twin_perms = std::move(next);
    }

    std::vector<std::vector<int>> out;
    for (const auto& perm : vertex_automorphisms(d)) {
        const auto phi = lift_vertex_automorphism(d, perm);
        for (const auto& tau : twin_perms) {
            std::vector<int> p(phi.size());
            for (std::size_t x = 0; x < p.size(); ++x)
                p[x] = phi[tau[x]];
            out.push_back(std::move(p));
        }
    }
    return out;
}

// ------------------------------------------------------------------ A+ / A-

namespace {

FloorDiagram surgery(const FloorDiagram& d, int e1, int e2, bool plus)
{
    const Element b1 = d.element(e1);
    if (b1.kind != ElementKind::Bounded)
        throw std::invalid_argument("e1 must be a bounded edge");
    if (e1 == e2)
        throw std::invalid_argument("e1 and e2 must differ");
    const Element b2 = d.element(e2);
    if (b2.kind == ElementKind::Vertex)
        throw std::invalid_argument("e2 must be an edge");

    const auto& edge1 = d.edges()[b1.index];
    const int v1 = edge1.src;
    const int v2 = edge1.dst;

    auto edges = d.edges();
    auto sources = d.sources();
    auto sinks = d.sinks();
    const int w2 = d.weight(e2);

    if (plus) {
        if (b2.kind == ElementKind::Source)
            throw std::invalid_argument("A+ needs e2 leaving v1; a source has no tail");
        if (d.tail(e2) != v1 || d.head(e2) == v2)
            throw std::invalid_argument("A+ needs e2 leaving v1 and not entering v2");
        if (b2.kind == ElementKind::Bounded)
            edges[b2.index].src = v2;
        else
            sinks[b2.index] = v2;
    } else {
        if (b2.kind == ElementKind::Sink)
            throw std::invalid_argument("A- needs e2 entering v2; a sink has no head");
        if (d.head(e2) != v2 || d.tail(e2) == v1)
            throw std::invalid_argument("A- needs e2 entering v2 and not leaving v1");
        if (b2.kind == ElementKind::Bounded)
            edges[b2.index].dst = v1;
        else
            sources[b2.index] = v1;
    }
    edges[b1.index].weight += w2;

    FloorDiagram out(d.vertices(), std::move(edges), std::move(sources), std::move(sinks));
    if (!out.acyclic())
        throw std::invalid_argument("surgery would create an oriented cycle");
    return out;
}

} // namespace

FloorDiagram a_plus(const FloorDiagram& d, int e1, int e2)
{
    return surgery(d, e1, e2, true);
}

FloorDiagram a_minus(const FloorDiagram& d, int e1, int e2)
{
    return surgery(d, e1, e2, false);
}

} // namespace floorgs
