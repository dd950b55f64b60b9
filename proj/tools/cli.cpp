#include "cli.hpp"

#include "floorgs/checks.hpp"
#include "floorgs/invariant.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace floorgs::cli {

SyntaxError::SyntaxError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos)
{
}

namespace {

class Scanner {
public:
    Scanner(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    std::int64_t integer()
    {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr == begin)
            throw SyntaxError("expected integer", offset_ + pos_);
        pos_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }

    void expect(char c)
    {
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw SyntaxError(std::string("expected '") + c + "'", offset_ + pos_);
        ++pos_;
    }

    bool accept(char c)
    {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool done() const { return pos_ >= text_.size(); }

    void finish() const
    {
        if (!done())
            throw SyntaxError("unexpected trailing input", offset_ + pos_);
    }

    std::vector<std::int64_t> list(std::size_t count)
    {
        std::vector<std::int64_t> out;
        for (std::size_t k = 0; k < count; ++k) {
            if (k)
                expect(',');
            out.push_back(integer());
        }
        return out;
    }

private:
    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

int small(std::int64_t v, std::size_t pos)
{
    if (v < 0 || v > 10000)
        throw SyntaxError("parameter out of range", pos);
    return static_cast<int>(v);
}

LatticeTransform transform_from(Scanner& sc)
{
    const auto v = sc.list(6);
    LatticeTransform t;
    t.m = {v[0], v[1], v[2], v[3]};
    t.t = {v[4], v[5]};
    return t;
}

} // namespace

LatticeTransform parse_transform(std::string_view text)
{
    Scanner sc(text, 0);
    LatticeTransform t = transform_from(sc);
    sc.finish();
    return t;
}

LatticePolygon parse_polygon_literal(std::string_view text)
{
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw SyntaxError("expected '<family>:'", text.size());
    const std::string_view family = text.substr(0, colon);
    const std::size_t at = text.find('@', colon);
    const std::size_t body_end = at == std::string_view::npos ? text.size() : at;
    const std::size_t body_pos = colon + 1;
    Scanner sc(text.substr(body_pos, body_end - body_pos), body_pos);

    LatticePolygon p = LatticePolygon::point({0, 0});
    if (family == "trapezoid") {
        const auto v = sc.list(3);
        p = trapezoid(small(v[0], body_pos), small(v[1], body_pos), small(v[2], body_pos));
    } else if (family == "triangle") {
        const auto v = sc.list(1);
        p = trapezoid(1, small(v[0], body_pos), 0);
    } else if (family == "rect") {
        const auto v = sc.list(2);
        p = trapezoid(0, small(v[0], body_pos), small(v[1], body_pos));
    } else if (family == "vertices") {
        std::vector<Point> pts;
        do {
            const auto v = sc.list(2);
            pts.push_back({v[0], v[1]});
        } while (sc.accept(';'));
        p = LatticePolygon::from_vertices(pts);
    } else {
        throw SyntaxError("unknown polygon family '" + std::string(family) + "'", 0);
    }
    sc.finish();

    if (at != std::string_view::npos) {
        constexpr std::string_view key = "@transform=";
        if (text.substr(at, key.size()) != key)
            throw SyntaxError("expected '@transform='", at);
        const std::size_t tpos = at + key.size();
        Scanner ts(text.substr(tpos), tpos);
        const LatticeTransform t = transform_from(ts);
        ts.finish();
        p = apply_transform(p, t);
    }
    return p;
}

// ------------------------------------------------------------------ output

namespace {

// Text mode prints free-form lines; records mode prints `key<TAB>value`.
class Printer {
public:
    Printer(std::ostream& out, bool records) : out_(out), records_(records) {}

    bool records() const { return records_; }

    void record(const std::string& key, const std::string& value)
    {
        if (records_)
            out_ << key << '\t' << value << '\n';
    }

    void line(const std::string& text)
    {
        if (!records_)
            out_ << text << '\n';
    }

private:
    std::ostream& out_;
    bool records_;
};

struct Options {
    std::string polygon;
    std::string other;
    std::string cut;
    std::string transform;
    std::string pairing;
    std::string check_name;
    std::string format = "text";
    std::optional<int> genus;
    std::optional<int> s;
    std::optional<int> smax;
    std::optional<int> i;
    std::optional<int> a;
    std::optional<int> b;
    int trials = 20;
    std::uint64_t seed = 1;
    int jobs = 1;
};

int default_jobs()
{
    if (const char* env = std::getenv("FLOORGS_JOBS")) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
        if (ec == std::errc() && v > 0)
            return v;
    }
    return 1;
}

HProfile require_profile(const LatticePolygon& p)
{
    if (!is_h_transverse(p))
        throw PolygonError("polygon " + p.to_string() + " is not h-transverse");
    return profile(p);
}

LatticePolygon require_polygon(const Options& o)
{
    if (o.polygon.empty())
        throw std::invalid_argument("a polygon literal is required");
    return parse_polygon_literal(o.polygon);
}

int require_genus(const Options& o)
{
    if (!o.genus)
        throw std::invalid_argument("-g/--genus is required");
    if (*o.genus < 0)
        throw std::invalid_argument("genus must be >= 0");
    return *o.genus;
}

int require(const std::optional<int>& v, const char* flag)
{
    if (!v)
        throw std::invalid_argument(std::string(flag) + " is required");
    return *v;
}

int cmd_polydata(const Options& o, Printer& pr)
{
    const LatticePolygon p = require_polygon(o);
    const PolygonData d = polygon_data(p);
    const bool ht = is_h_transverse(p);
    pr.record("polygon", p.to_string());
    pr.record("a", std::to_string(d.a));
    pr.record("e_top", std::to_string(d.e_top));
    pr.record("e_bot", std::to_string(d.e_bot));
    pr.record("y", std::to_string(d.y));
    pr.record("chi", std::to_string(d.chi));
    pr.record("g_max", std::to_string(d.g_max));
    pr.record("h_transverse", ht ? "1" : "0");
    std::ostringstream os;
    os << "a=" << d.a << " e_top=" << d.e_top << " e_bot=" << d.e_bot << " y=" << d.y
       << " chi=" << d.chi << " g_max=" << d.g_max;
    pr.line("polygon " + p.to_string());
    pr.line(os.str());
    if (ht) {
        const HProfile h = profile(p);
        pr.record("profile", h.to_string());
        pr.line("profile " + h.to_string());
    } else {
        pr.line("not h-transverse");
    }
    return Ok;
}

std::string one_line(std::string encoding)
{
    std::replace(encoding.begin(), encoding.end(), '\n', ';');
    if (!encoding.empty() && encoding.back() == ';')
        encoding.pop_back();
    return encoding;
}

int cmd_diagrams(const Options& o, Printer& pr)
{
    const HProfile h = require_profile(require_polygon(o));
    const int g = require_genus(o);
    const MarkedDiagrams md = collect_marked_diagrams(h, g, o.jobs);
    pr.record("count", std::to_string(md.diagrams.size()));
    pr.line("diagrams=" + std::to_string(md.diagrams.size()));
    for (std::size_t k = 0; k < md.diagrams.size(); ++k) {
        const FloorDiagram& d = md.diagrams[k];
        const DiagramStats st = stats(d, md.data);
        const std::string name = "D" + std::to_string(k + 1);
        const std::string nu = std::to_string(md.markings[k].size());
        pr.record(name + ".deg", std::to_string(st.deg));
        pr.record(name + ".codeg", std::to_string(st.codeg));
        pr.record(name + ".nu", nu);
        pr.record(name + ".encoding", one_line(d.encode()));
        pr.line("# " + name + " deg=" + std::to_string(st.deg) + " codeg=" +
                std::to_string(st.codeg) + " nu=" + nu +
                (d.has_incomparable_vertices() ? " incomparable-vertices" : ""));
        std::string enc = d.encode();
        if (!enc.empty() && enc.back() == '\n')
            enc.pop_back();
        pr.line(enc);
    }
    return Ok;
}

int cmd_invariant(const Options& o, Printer& pr)
{
    const HProfile h = require_profile(require_polygon(o));
    const int g = require_genus(o);
    const MarkedDiagrams md = collect_marked_diagrams(h, g, o.jobs);
    SymLaurent value;
    std::string pairing;
    if (!o.pairing.empty()) {
        if (o.s)
            throw std::invalid_argument("give either -s or --pairing, not both");
        const Pairing p = Pairing::parse(o.pairing);
        pairing = p.to_string();
        value = md.evaluate(p, o.jobs);
    } else {
        const int s = o.s.value_or(0);
        if (h.a > 0 && (s < 0 || s > md.s_max()))
            throw std::invalid_argument("s=" + std::to_string(s) + " outside 0.." +
                                        std::to_string(md.s_max()));
        pairing = h.a > 0 ? Pairing::standard(s, md.element_count()).to_string() : "";
        value = md.evaluate(s, o.jobs);
    }
    pr.record("pairing", pairing);
    pr.record("invariant", value.to_string());
    pr.record("half_integer_multiplicities",
              std::to_string(md.half_integer_multiplicities(Pairing::parse(pairing))));
    pr.line(value.to_string());
    return Ok;
}

int cmd_table(const Options& o, Printer& pr)
{
    const HProfile h = require_profile(require_polygon(o));
    const int g = require_genus(o);
    const MarkedDiagrams md = collect_marked_diagrams(h, g, o.jobs);
    const int hi = o.smax.value_or(md.s_max());
    const InvariantTable t = contribution_table(md, 0, hi, o.jobs);

    for (std::size_t k = 0; k < t.diagrams.size(); ++k) {
        const std::string name = "D" + std::to_string(k + 1);
        pr.record(name + ".encoding", one_line(t.diagrams[k].encode()));
        pr.line("# " + name + " " + one_line(t.diagrams[k].encode()));
    }
    std::string header = "s";
    for (std::size_t k = 0; k < t.diagrams.size(); ++k)
        header += " | D" + std::to_string(k + 1);
    pr.line(header + " | total");
    for (int s = t.s_lo; s <= t.s_hi; ++s) {
        std::string row = std::to_string(s);
        for (std::size_t k = 0; k < t.diagrams.size(); ++k) {
            const std::string name = "D" + std::to_string(k + 1) + ".s" + std::to_string(s);
            const std::string cell = t.rows[k][s - t.s_lo].to_string();
            const bool star = t.unchanged(k, s);
            pr.record(name, cell);
            pr.record(name + ".unchanged", star ? "1" : "0");
            row += " | " + cell + (star ? " ⋆" : "");
        }
        const std::string total = t.totals[s - t.s_lo].to_string();
        pr.record("total.s" + std::to_string(s), total);
        pr.line(row + " | " + total);
    }
    return Ok;
}

// Runs `one(s)` for the requested s, or for every s in [0, hi] when -s is absent.
int over_s(const Options& o, int hi, Printer& pr, const std::function<CheckReport(int)>& one)
{
    std::vector<int> values;
    if (o.s)
        values.push_back(*o.s);
    else
        for (int s = 0; s <= hi; ++s)
            values.push_back(s);
    bool failed = false;
    for (int s : values) {
        const CheckReport r = one(s);
        failed = failed || r.failed();
        pr.record("report", r.format());
        pr.line(r.format());
    }
    return failed ? CheckFailed : Ok;
}

int cmd_check(const Options& o, Printer& pr)
{
    const std::string& name = o.check_name;
    if (name == "lemma32") {
        const CheckReport r = check_bracket_identities();
        pr.record("report", r.format());
        pr.line(r.format());
        return r.failed() ? CheckFailed : Ok;
    }
    if (name == "ab-formula") {
        const int a = require(o.a, "-a");
        const int b = require(o.b, "-b");
        const int g = require_genus(o);
        const int hi = polygon_data(trapezoid(0, a, a + b)).s_max(g);
        return over_s(o, hi, pr, [&](int s) { return check_ab_formula(a, b, g, s); });
    }

    const LatticePolygon p = require_polygon(o);
    const int g = require_genus(o);
    if (name == "lattice-invariance") {
        const LatticeTransform t =
            o.transform.empty() ? LatticeTransform::rotation90() : parse_transform(o.transform);
        const LatticePolygon p2 =
            o.other.empty() ? apply_transform(p, t) : parse_polygon_literal(o.other);
        const int hi = polygon_data(p).s_max(g);
        return over_s(o, hi, pr, [&](int s) { return check_lattice_invariance(p, p2, t, g, s); });
    }

    const HProfile h = require_profile(p);
    auto single = [&](const CheckReport& r) {
        pr.record("report", r.format());
        pr.line(r.format());
        return r.failed() ? CheckFailed : Ok;
    };
    if (name == "pairing-independence") {
        const int hi = polygon_data(p).s_max(g);
        return over_s(o, hi, pr, [&](int s) {
            return check_pairing_independence(h, g, s, o.trials, o.seed);
        });
    }
    if (name == "monotonicity")
        return single(check_monotonicity(h, g));
    if (name == "positivity")
        return single(check_nested_positivity(h, g, o.trials, o.seed));
    if (name == "polynomiality")
        return single(check_polynomiality(h, g, require(o.i, "-i")));
    if (name == "corner-cut") {
        const HProfile cut =
            o.cut.empty() ? cut_top_corner(h) : require_profile(parse_polygon_literal(o.cut));
        const int hi = polygon_data(p).s_max(g) - 1;
        return over_s(o, hi, pr, [&](int s) { return check_corner_cut(h, cut, g, s); });
    }
    throw std::invalid_argument("unknown check '" + name + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Refined floor-diagram invariants of h-transverse lattice polygons", "floorgs"};
    app.require_subcommand(1);
    Options o;
    o.jobs = default_jobs();

    auto common = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or records")
            ->check(CLI::IsMember({"text", "records"}));
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto poly = [&o](CLI::App* sub) {
        sub->add_option("polygon", o.polygon,
                        "trapezoid:n,a,b | triangle:d | rect:a,b | vertices:x,y;... "
                        "[@transform=m11,m12,m21,m22,tx,ty]");
    };

    CLI::App* polydata = app.add_subcommand("polydata", "combinatorial data of a polygon");
    poly(polydata);
    common(polydata);

    CLI::App* diagrams = app.add_subcommand("diagrams", "floor diagrams with deg, codeg, nu");
    poly(diagrams);
    diagrams->add_option("-g,--genus", o.genus);
    common(diagrams);

    CLI::App* inv = app.add_subcommand("invariant", "G_g(polygon, s)");
    poly(inv);
    inv->add_option("-g,--genus", o.genus);
    inv->add_option("-s,--s", o.s);
    inv->add_option("--pairing", o.pairing, "i-j,k-l,...");
    common(inv);

    CLI::App* table = app.add_subcommand("table", "per-diagram contributions for s = 0..smax");
    poly(table);
    table->add_option("-g,--genus", o.genus);
    table->add_option("--smax", o.smax);
    common(table);

    CLI::App* check = app.add_subcommand("check", "run a named checker");
    check->add_option("name", o.check_name)
        ->required()
        ->check(CLI::IsMember({"pairing-independence", "monotonicity", "positivity",
                               "polynomiality", "corner-cut", "ab-formula",
                               "lattice-invariance", "lemma32"}));
    poly(check);
    check->add_option("-g,--genus", o.genus);
    check->add_option("-s,--s", o.s);
    check->add_option("-i", o.i, "codegree index");
    check->add_option("-a", o.a);
    check->add_option("-b", o.b);
    check->add_option("--other", o.other, "second polygon (lattice-invariance)");
    check->add_option("--transform", o.transform, "m11,m12,m21,m22,tx,ty");
    check->add_option("--cut", o.cut, "cut polygon (corner-cut)");
    check->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
    check->add_option("--seed", o.seed);
    common(check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    Printer pr(out, o.format == "records");
    try {
        if (*polydata)
            return cmd_polydata(o, pr);
        if (*diagrams)
            return cmd_diagrams(o, pr);
        if (*inv)
            return cmd_invariant(o, pr);
        if (*table)
            return cmd_table(o, pr);
        return cmd_check(o, pr);
    } catch (const OverflowError& e) {
        err << "error: arithmetic overflow: " << e.what() << '\n';
        return Overflow;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    }
}

} // namespace floorgs::cli
