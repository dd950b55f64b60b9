#include "floorgs/marking.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace floorgs {

// ---------------------------------------------------------------- Marking

Marking::Marking(std::vector<int> labels) : labels_(std::move(labels))
{
    std::vector<int> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument("marking is not a bijection onto {1..n}");
}

std::vector<int> Marking::inverse() const
{
    std::vector<int> inv(labels_.size());
    for (std::size_t id = 0; id < labels_.size(); ++id)
        inv[labels_[id] - 1] = static_cast<int>(id);
    return inv;
}

std::string Marking::encode(const FloorDiagram& d) const
{
    std::ostringstream os;
    for (int id = 0; id < size(); ++id)
        os << "m(" << d.element_name(id) << ")=" << labels_[id] << "\n";
    return os.str();
}

// ---------------------------------------------------------------- Pairing

Pairing::Pairing(std::vector<int> starts) : starts_(std::move(starts))
{
    std::sort(starts_.begin(), starts_.end());
    for (std::size_t k = 0; k < starts_.size(); ++k) {
        if (starts_[k] < 1)
            throw std::invalid_argument("pair labels start at 1");
        if (k > 0 && starts_[k] - starts_[k - 1] < 2)
            throw std::invalid_argument("pairs overlap");
    }
}

Pairing Pairing::standard(int s, int n)
{
    if (s < 0 || 2 * s > n)
        throw std::invalid_argument("pairing of order " + std::to_string(s) +
                                    " does not fit in {1.." + std::to_string(n) + "}");
    std::vector<int> starts;
    for (int k = 0; k < s; ++k)
        starts.push_back(2 * k + 1);
    return Pairing(std::move(starts));
}

Pairing default_pairing(int s, int n)
{
    return Pairing::standard(s, n);
}

Pairing Pairing::parse(std::string_view text)
{
    std::vector<int> starts;
    std::size_t pos = 0;
    auto number = [&](int& out) {
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        if (ec != std::errc() || ptr == begin)
            throw std::invalid_argument("bad pairing near position " + std::to_string(pos));
        pos += static_cast<std::size_t>(ptr - begin);
    };
    while (pos < text.size()) {
        int i = 0, j = 0;
        number(i);
        if (pos >= text.size() || text[pos] != '-')
            throw std::invalid_argument("expected '-' at position " + std::to_string(pos));
        ++pos;
        number(j);
        if (j != i + 1)
            throw std::invalid_argument("pair " + std::to_string(i) + "-" + std::to_string(j) +
                                        " is not consecutive");
        starts.push_back(i);
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw std::invalid_argument("expected ',' at position " + std::to_string(pos));
            ++pos;
        }
    }
    return Pairing(std::move(starts));
}

bool Pairing::subset_of(const Pairing& other) const
{
    return std::includes(other.starts_.begin(), other.starts_.end(), starts_.begin(),
                         starts_.end());
}

std::string Pairing::to_string() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < starts_.size(); ++k)
        os << (k ? "," : "") << starts_[k] << "-" << starts_[k] + 1;
    return os.str();
}

// ---------------------------------------------------------- multiplicities

std::optional<MultPartition> compat_partition(const FloorDiagram& d, const Marking& m,
                                              const Pairing& s)
{
    const int n = d.element_count();
    if (m.size() != n)
        throw std::invalid_argument("marking size differs from n(D)");
    if (s.max_label() > n)
        throw std::out_of_range("pairing uses label " + std::to_string(s.max_label()) +
                                " > n = " + std::to_string(n));

    const auto inv = m.inverse();
    const int nv = d.vertex_count();
    std::vector<bool> paired(n, false);
    MultPartition part;

    for (int i : s.starts()) {
        int x = inv[i - 1];
        int y = inv[i];
        const bool xv = x < nv;
        const bool yv = y < nv;
        if (xv && yv)
            return std::nullopt;
        if (xv || yv) {
            if (xv)
                std::swap(x, y); // x edge, y vertex
            if (d.tail(x) != y && d.head(x) != y)
                return std::nullopt;
            part.e1.push_back(x);
        } else {
            const bool common_head = d.head(x) >= 0 && d.head(x) == d.head(y);
            const bool common_tail = d.tail(x) >= 0 && d.tail(x) == d.tail(y);
            if (!common_head && !common_tail)
                return std::nullopt;
            part.e2.emplace_back(std::min(x, y), std::max(x, y));
        }
        paired[x] = paired[y] = true;
    }
    for (int id = nv; id < n; ++id)
        if (!paired[id])
            part.e0.push_back(id);
    std::sort(part.e1.begin(), part.e1.end());
    std::sort(part.e2.begin(), part.e2.end());
    return part;
}

SymLaurent multiplicity(const FloorDiagram& d, const Marking& m, const Pairing& s)
{
    const auto part = compat_partition(d, m, s);
    if (!part)
        return {};
    SymLaurent mu(1);
    for (int e : part->e0)
        if (d.weight(e) > 1)
            mu *= bracket_sq(d.weight(e));
    for (int e : part->e1)
        if (d.weight(e) > 1)
            mu *= bracket_sub2(d.weight(e));
    for (auto [e, f] : part->e2)
        if (d.weight(e) > 1 || d.weight(f) > 1)
            mu *= e2_factor(d.weight(e), d.weight(f));
    if (mu.is_zero() || mu.max_exp2() != 2 * d.degree())
        throw std::logic_error("multiplicity degree differs from deg(D)");
    return mu;
}

// ------------------------------------------------------------------ poset

std::vector<std::vector<int>> element_successors(const FloorDiagram& d)
{
    std::vector<std::vector<int>> succ(d.element_count());
    for (int id = d.vertex_count(); id < d.element_count(); ++id) {
        if (d.tail(id) >= 0)
            succ[d.tail(id)].push_back(id);
        if (d.head(id) >= 0)
            succ[id].push_back(d.head(id));
    }
    return succ;
}

bool is_increasing(const FloorDiagram& d, const Marking& m)
{
    const auto succ = element_successors(d);
    for (int x = 0; x < d.element_count(); ++x)
        for (int y : succ[x])
            if (m.label(x) >= m.label(y))
                return false;
    return true;
}

namespace {

// Depth-first generation of linear extensions, always placing the lowest
// twin of a class first.
void walk_twin_sorted_extensions(const FloorDiagram& d,
                                 const std::function<void(const std::vector<int>&)>& fn)
{
    const int n = d.element_count();
    const auto succ = element_successors(d);
    std::vector<int> pending(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y : succ[x])
            ++pending[y];
    std::vector<int> twin_prev(n, -1);
    for (const auto& cls : twin_classes(d))
        for (std::size_t k = 1; k < cls.size(); ++k)
            twin_prev[cls[k]] = cls[k - 1];

    std::vector<int> labels(n, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            fn(labels);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (labels[x] != 0 || pending[x] != 0)
                continue;
            if (twin_prev[x] >= 0 && labels[twin_prev[x]] == 0)
                continue;
            labels[x] = k + 1;
            for (int y : succ[x])
                --pending[y];
            rec(k + 1);
            for (int y : succ[x])
                ++pending[y];
            labels[x] = 0;
        }
    };
    rec(0);
}

} // namespace

std::vector<Marking> enumerate_markings(const FloorDiagram& d)
{
    const auto classes = twin_classes(d);
    std::vector<std::vector<int>> cosets;
    const auto vauts = vertex_automorphisms(d);
    for (std::size_t k = 1; k < vauts.size(); ++k)
        cosets.push_back(lift_vertex_automorphism(d, vauts[k]));

    std::vector<Marking> out;
    std::vector<int> image(d.element_count());
    std::vector<int> pool;
    walk_twin_sorted_extensions(d, [&](const std::vector<int>& labels) {
        for (const auto& phi : cosets) {
            for (std::size_t x = 0; x < image.size(); ++x)
                image[x] = labels[phi[x]];
            for (const auto& cls : classes) {
                if (cls.size() < 2)
                    continue;
                pool.clear();
                for (int x : cls)
                    pool.push_back(image[x]);
                std::sort(pool.begin(), pool.end());
                for (std::size_t k = 0; k < cls.size(); ++k)
                    image[cls[k]] = pool[k];
            }
            if (image < labels)
                return;
        }
        out.emplace_back(labels);
    });
    return out;
}

std::int64_t nu(const FloorDiagram& d)
{
    return static_cast<std::int64_t>(enumerate_markings(d).size());
}

std::int64_t count_twin_sorted_extensions(const FloorDiagram& d)
{
    std::int64_t count = 0;
    walk_twin_sorted_extensions(d, [&](const std::vector<int>&) { ++count; });
    return count;
}

} // namespace floorgs
