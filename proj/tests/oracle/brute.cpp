#include "brute.hpp"

#include "floorgs/invariant.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace oracle {

using floorgs::HProfile;
using floorgs::LatticePolygon;
using floorgs::MarkedDiagrams;
using floorgs::SymLaurent;

namespace {

// All vectors of `parts` nonnegative integers summing to `total`.
std::vector<std::vector<int>> compositions(int total, int parts)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == parts - 1) {
            cur[k] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[k] = v;
            rec(k + 1, left - v);
        }
    };
    if (parts > 0)
        rec(0, total);
    return out;
}

bool acyclic(int a, const std::vector<std::array<int, 3>>& edges)
{
    std::vector<int> indeg(a, 0);
    for (const auto& e : edges)
        ++indeg[e[1]];
    std::vector<int> ready;
    for (int v = 0; v < a; ++v)
        if (indeg[v] == 0)
            ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto& e : edges)
            if (e[0] == v && --indeg[e[1]] == 0)
                ready.push_back(e[1]);
    }
    return seen == a;
}

bool connected(int a, const std::vector<std::array<int, 3>>& edges)
{
    std::vector<int> parent(a);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges)
        parent[find(e[0])] = find(e[1]);
    for (int v = 0; v < a; ++v)
        if (find(v) != find(0))
            return false;
    return true;
}

SymLaurent qn(int n)
{
    SymLaurent p;
    for (int j = 0; j < n; ++j)
        p += SymLaurent::monomial(1, n - 1 - 2 * j);
    return p;
}

SymLaurent qn_at_q2(int n)
{
    SymLaurent p;
    for (int j = 0; j < n; ++j)
        p += SymLaurent::monomial(1, 2 * (n - 1 - 2 * j));
    return p;
}

} // namespace

std::vector<BruteDiagram> brute_diagrams(const HProfile& h, int g)
{
    const int a = h.a;
    if (a <= 0 || g < 0)
        return {};
    const int bounded = a - 1 + g;

    const auto source_splits = compositions(h.e_bot, a);
    std::vector<int> rights = h.b_right;
    std::sort(rights.begin(), rights.end());
    std::vector<BruteDiagram> found;

    do {
        std::vector<int> div(a);
        for (int v = 0; v < a; ++v)
            div[v] = h.b_left[v] + rights[v];

        // No edge can carry more than the flow created anywhere: the sources
        // plus the vertices of negative divergence.
        int max_weight = h.e_bot;
        for (int v = 0; v < a; ++v)
            max_weight += std::max(0, -div[v]);
        std::vector<std::array<int, 3>> candidates;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < a; ++v)
                if (u != v)
                    for (int w = 1; w <= max_weight; ++w)
                        candidates.push_back({u, v, w});

        std::vector<std::array<int, 3>> chosen;
        std::vector<std::vector<int>> parallel(a, std::vector<int>(a, 0));
        // whether v reaches u along chosen edges
        std::function<bool(int, int)> reaches = [&](int v, int u) {
            if (v == u)
                return true;
            for (int x = 0; x < a; ++x)
                if (parallel[v][x] > 0 && reaches(x, u))
                    return true;
            return false;
        };
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            if (static_cast<int>(chosen.size()) == bounded) {
                if (!acyclic(a, chosen) || !connected(a, chosen))
                    return;
                std::vector<int> net(a, 0);
                for (const auto& e : chosen) {
                    net[e[0]] -= e[2];
                    net[e[1]] += e[2];
                }
                for (const auto& src : source_splits) {
                    // div(v) = in - out, counting infinite edges.
                    std::vector<int> snk(a);
                    int total = 0;
                    bool ok = true;
                    for (int v = 0; v < a && ok; ++v) {
                        snk[v] = src[v] + net[v] - div[v];
                        ok = snk[v] >= 0;
                        total += snk[v];
                    }
                    if (!ok || total != h.e_top)
                        continue;
                    BruteDiagram d;
                    for (int v = 0; v < a; ++v)
                        d.labels.push_back({h.b_left[v], rights[v]});
                    d.edges = chosen;
                    d.sources = src;
                    d.sinks = snk;
                    const bool seen = std::any_of(found.begin(), found.end(), [&](const BruteDiagram& f) {
                        return brute_isomorphic(f, d);
                    });
                    if (!seen)
                        found.push_back(std::move(d));
                }
                return;
            }
            for (std::size_t c = from; c < candidates.size(); ++c) {
                const auto& e = candidates[c];
                // a cycle stays a cycle in every superset
                if (reaches(e[1], e[0]))
                    continue;
                chosen.push_back(e);
                ++parallel[e[0]][e[1]];
                rec(c);
                --parallel[e[0]][e[1]];
                chosen.pop_back();
            }
        };
        rec(0);
    } while (std::next_permutation(rights.begin(), rights.end()));
    return found;
}

bool brute_isomorphic(const BruteDiagram& x, const BruteDiagram& y)
{
    const int a = static_cast<int>(x.labels.size());
    if (a != static_cast<int>(y.labels.size()) || x.edges.size() != y.edges.size())
        return false;
    std::vector<std::array<int, 3>> target = y.edges;
    std::sort(target.begin(), target.end());
    std::vector<int> pi(a);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < a && ok; ++v)
            ok = x.labels[v] == y.labels[pi[v]] && x.sources[v] == y.sources[pi[v]] &&
                 x.sinks[v] == y.sinks[pi[v]];
        if (!ok)
            continue;
        std::vector<std::array<int, 3>> mapped;
        for (const auto& e : x.edges)
            mapped.push_back({pi[e[0]], pi[e[1]], e[2]});
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target)
            return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
}

BruteDiagram from_engine(const floorgs::FloorDiagram& d)
{
    BruteDiagram b;
    const int a = d.vertex_count();
    for (const auto& v : d.vertices())
        b.labels.push_back({v.left, v.right});
    for (const auto& e : d.edges())
        b.edges.push_back({e.src, e.dst, e.weight});
    b.sources.assign(a, 0);
    b.sinks.assign(a, 0);
    for (int v : d.sources())
        ++b.sources[v];
    for (int v : d.sinks())
        ++b.sinks[v];
    return b;
}

std::vector<MarkedCode> brute_markings(const BruteDiagram& d)
{
    // kind: 0 vertex, 1 bounded edge, 2 source, 3 sink
    struct El {
        int kind, a, b, tail, head;
    };
    const int nv = static_cast<int>(d.labels.size());
    std::vector<El> els;
    for (int v = 0; v < nv; ++v)
        els.push_back({0, d.labels[v][0], d.labels[v][1], -1, -1});
    for (const auto& e : d.edges)
        els.push_back({1, e[2], 0, e[0], e[1]});
    for (int v = 0; v < nv; ++v)
        for (int k = 0; k < d.sources[v]; ++k)
            els.push_back({2, 1, 0, -1, v});
    for (int v = 0; v < nv; ++v)
        for (int k = 0; k < d.sinks[v]; ++k)
            els.push_back({3, 1, 0, v, -1});
    const int n = static_cast<int>(els.size());

    std::vector<std::vector<int>> preds(n);
    for (int x = nv; x < n; ++x) {
        if (els[x].tail >= 0)
            preds[x].push_back(els[x].tail);
        if (els[x].head >= 0)
            preds[els[x].head].push_back(x);
    }

    std::set<MarkedCode> codes;
    std::vector<int> label(n, 0);
    std::vector<int> order;
    std::function<void()> rec = [&] {
        if (static_cast<int>(order.size()) == n) {
            MarkedCode code;
            for (int x : order) {
                const El& e = els[x];
                code.push_back({e.kind, e.a, e.b, e.tail >= 0 ? label[e.tail] : 0,
                                e.head >= 0 ? label[e.head] : 0});
            }
            codes.insert(code);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (label[x])
                continue;
            bool ready = true;
            for (int p : preds[x])
                ready = ready && label[p] != 0;
            if (!ready)
                continue;
            order.push_back(x);
            label[x] = static_cast<int>(order.size());
            rec();
            label[x] = 0;
            order.pop_back();
        }
    };
    rec();
    return {codes.begin(), codes.end()};
}

SymLaurent brute_multiplicity(const MarkedCode& code, const std::vector<int>& starts)
{
    const int n = static_cast<int>(code.size());
    std::vector<bool> used(n + 1, false);
    SymLaurent mu(1);
    for (int i : starts) {
        const auto& x = code[i - 1];
        const auto& y = code[i];
        used[i] = used[i + 1] = true;
        const bool xv = x[0] == 0;
        const bool yv = y[0] == 0;
        if (xv && yv)
            return {};
        if (xv || yv) {
            const auto& edge = xv ? y : x;
            const int vertex_label = xv ? i : i + 1;
            if (edge[3] != vertex_label && edge[4] != vertex_label)
                return {};
            mu *= qn_at_q2(edge[1]);
            continue;
        }
        const bool common_head = x[4] != 0 && x[4] == y[4];
        const bool common_tail = x[3] != 0 && x[3] == y[3];
        if (!common_head && !common_tail)
            return {};
        const int w1 = x[1], w2 = y[1];
        mu *= (qn(w1) * qn(w1) * qn_at_q2(w2) + qn_at_q2(w1) * qn(w2) * qn(w2)).divided_exactly(2);
    }
    for (int k = 1; k <= n; ++k)
        if (!used[k] && code[k - 1][0] != 0)
            mu *= qn(code[k - 1][1]) * qn(code[k - 1][1]);
    return mu;
}

SymLaurent BruteResult::invariant(const std::vector<int>& starts) const
{
    SymLaurent total;
    for (const auto& ms : markings)
        for (const auto& m : ms)
            total += brute_multiplicity(m, starts);
    return total;
}

BruteResult brute_force(const HProfile& h, int g)
{
    BruteResult r;
    r.diagrams = brute_diagrams(h, g);
    for (const auto& d : r.diagrams)
        r.markings.push_back(brute_markings(d));
    return r;
}

namespace {

// Sorted lists of `len` entries from [lo, hi].
void sorted_lists(int len, int lo, int hi, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int v = cur.empty() ? lo : cur.back(); v <= hi; ++v) {
        cur.push_back(v);
        sorted_lists(len, lo, hi, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<HProfile> profile_family(int max_a, int max_y, int k)
{
    std::vector<HProfile> out;
    for (int a = 1; a <= max_a; ++a) {
        std::vector<std::vector<int>> lefts, rights;
        std::vector<int> cur;
        sorted_lists(a, 0, k, cur, lefts);
        sorted_lists(a, -k, k, cur, rights);
        for (const auto& bl : lefts) {
            if (bl.front() != 0)
                continue;
            for (const auto& br : rights) {
                const int net = std::accumulate(bl.begin(), bl.end(), 0) +
                                std::accumulate(br.begin(), br.end(), 0);
                for (int top = 0; 2 * top + net + 2 * a <= max_y; ++top) {
                    const HProfile h{a, top, top + net, bl, br};
                    if (h.e_bot < 0)
                        continue;
                    try {
                        const LatticePolygon p = polygon_from_profile(h);
                        if (twice_area(p) == 0 || profile(p) != h)
                            continue;
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    out.push_back(h);
                }
            }
        }
    }
    return out;
}

std::string compare_with_engine(const HProfile& h, int g, int max_s)
{
    const BruteResult b = brute_force(h, g);
    const MarkedDiagrams md = collect_marked_diagrams(h, g);
    std::ostringstream why;
    if (b.diagrams.size() != md.diagrams.size()) {
        why << "diagram classes " << b.diagrams.size() << " vs " << md.diagrams.size();
        return why.str();
    }
    for (std::size_t k = 0; k < md.diagrams.size(); ++k) {
        const BruteDiagram e = from_engine(md.diagrams[k]);
        std::size_t match = b.diagrams.size();
        for (std::size_t j = 0; j < b.diagrams.size(); ++j)
            if (brute_isomorphic(e, b.diagrams[j]))
                match = j;
        if (match == b.diagrams.size()) {
            why << "engine diagram " << k << " has no oracle counterpart";
            return why.str();
        }
        if (b.markings[match].size() != md.markings[k].size()) {
            why << "markings of diagram " << k << ": " << b.markings[match].size() << " vs "
                << md.markings[k].size();
            return why.str();
        }
    }
    for (int s = 0; s <= std::min(max_s, md.s_max()); ++s) {
        std::vector<int> starts;
        for (int j = 0; j < s; ++j)
            starts.push_back(2 * j + 1);
        const SymLaurent lhs = b.invariant(starts);
        const SymLaurent rhs = md.evaluate(s);
        if (lhs != rhs) {
            why << "s=" << s << ": " << lhs.to_string() << " vs " << rhs.to_string();
            return why.str();
        }
    }
    return {};
}

} // namespace oracle
