#include "optidx/report.hpp"

#include <charconv>
#include <chrono>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "optidx/wavelength.hpp"

namespace optidx {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Json optional_json(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view token, std::string_view context) {
    token = trim(token);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw InputError("not an integer: \"" + std::string(token) + "\" in \"" + std::string(context) + "\"");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> whitespace_tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const auto start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

struct FamilyInfo {
    std::string_view name;
    Family family;
    std::vector<std::string_view> params;
};

const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> table = {
        {"path", Family::Path, {"n"}},
        {"star", Family::Star, {"n"}},
        {"spider", Family::Spider, {"k", "t"}},
        {"mary", Family::Mary, {"m", "depth"}},
        {"random", Family::Random, {"n", "seed"}},
    };
    return table;
}

const FamilyInfo& family_info(Family f) {
    for (const auto& info : families()) {
        if (info.family == f) return info;
    }
    throw std::logic_error("unknown family");
}

FamilySpec make_spec(Family f, const std::vector<std::int64_t>& v) {
    switch (f) {
        case Family::Path: return FamilySpec::path(v[0]);
        case Family::Star: return FamilySpec::star(v[0]);
        case Family::Spider: return FamilySpec::spider(v[0], v[1]);
        case Family::Mary: return FamilySpec::mary(v[0], v[1]);
        case Family::Random:
            if (v[1] < 0) throw InputError("seed must be non-negative");
            return FamilySpec::random(v[0], static_cast<std::uint64_t>(v[1]));
    }
    throw std::logic_error("unknown family");
}

struct SweepRow {
    std::string family;
    std::string params;
    IndexReport report;
};

std::vector<SweepRow> run_sweep(const SweepRequest& request) {
    const auto& info = family_info(request.family);
    if (request.params.size() != info.params.size()) {
        throw InputError("family " + std::string(info.name) + " takes " + std::to_string(info.params.size()) +
                         " parameter ranges");
    }
    std::vector<SweepRow> rows;
    for (const auto& values : request.params) {
        if (values.empty()) return rows;
    }
    // Odometer over the cartesian product, first parameter outermost.
    std::vector<std::size_t> at(request.params.size(), 0);
    while (true) {
        std::vector<std::int64_t> values;
        std::string label;
        for (std::size_t p = 0; p < at.size(); ++p) {
            values.push_back(request.params[p][at[p]]);
            if (p > 0) label += ';';
            label += std::string(info.params[p]) + "=" + std::to_string(values.back());
        }
        const Tree t = generate(make_spec(request.family, values));
        if (t.order() < 2) throw InputError("sweep instance " + label + " has fewer than two vertices");
        rows.push_back({std::string(info.name), label, build_report(t, request.options)});
        std::size_t p = at.size();
        while (p > 0) {
            --p;
            if (++at[p] < request.params[p].size()) break;
            at[p] = 0;
            if (p == 0) return rows;
        }
    }
}

std::string exact_cell(const IndexReport& r) {
    return r.exact_flag.value_or(false) ? std::to_string(*r.exact_upper) : std::string();
}

}  // namespace

IndexReport build_report(const Tree& t, const ReportOptions& options, PathColoring* coloring_out) {
    IndexReport r;
    r.n = t.order();

    auto start = Clock::now();
    const auto profile = edge_load_profile(t);
    r.pi = profile.pi;
    r.argmax_edge = profile.argmax_edge;
    r.elapsed.profile_ms = ms_since(start);

    start = Clock::now();
    PathColoring coloring = color_all_to_all(t);
    r.colors_constructed = coloring.colors_used();
    r.elapsed.coloring_ms = ms_since(start);

    start = Clock::now();
    r.violations = verify_proper(t, coloring).size();
    r.elapsed.verify_ms = ms_since(start);

    if (options.exact) {
        const auto exact = exact_optical_index(t, options.budget_ms);
        r.exact_lower = exact.lower;
        r.exact_upper = exact.upper;
        r.exact_flag = exact.exact;
        r.elapsed.exact_ms = exact.elapsed_ms;
    }

    r.ratio_numerator = 2 * r.colors_constructed;
    r.ratio_denominator = 3 * r.pi;
    r.bound_ok = r.ratio_numerator < r.ratio_denominator && r.pi <= r.colors_constructed;
    if (coloring_out) *coloring_out = std::move(coloring);
    return r;
}

std::string report_json(const IndexReport& r, bool with_timings) {
    Json j;
    j["n"] = r.n;
    j["pi"] = r.pi;
    j["argmax_edge"] = {r.argmax_edge.u, r.argmax_edge.v};
    j["colors_constructed"] = r.colors_constructed;
    j["proper"] = r.proper();
    j["exact_lower"] = optional_json(r.exact_lower);
    j["exact_upper"] = optional_json(r.exact_upper);
    j["exact_flag"] = r.exact_flag ? Json(*r.exact_flag) : Json(nullptr);
    j["ratio_numerator"] = r.ratio_numerator;
    j["ratio_denominator"] = r.ratio_denominator;
    j["bound_ok"] = r.bound_ok;
    if (with_timings) {
        j["elapsed_ms"] = {{"profile", r.elapsed.profile_ms},
                           {"coloring", r.elapsed.coloring_ms},
                           {"verify", r.elapsed.verify_ms},
                           {"exact", r.elapsed.exact_ms}};
    }
    return j.dump() + "\n";
}

std::string report_csv(const IndexReport& r) {
    std::ostringstream out;
    out << "n,pi,argmax_u,argmax_v,colors_constructed,proper,exact_lower,exact_upper,exact_flag,"
           "ratio_numerator,ratio_denominator,bound_ok\n";
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    out << r.n << ',' << r.pi << ',' << r.argmax_edge.u << ',' << r.argmax_edge.v << ',' << r.colors_constructed
        << ',' << (r.proper() ? "true" : "false") << ',' << opt(r.exact_lower) << ',' << opt(r.exact_upper) << ','
        << (r.exact_flag ? (*r.exact_flag ? "true" : "false") : "") << ',' << r.ratio_numerator << ','
        << r.ratio_denominator << ',' << (r.bound_ok ? "true" : "false") << '\n';
    return out.str();
}

std::vector<std::int64_t> parse_range(std::string_view text) {
    if (trim(text).empty()) throw InputError("empty range");
    std::vector<std::int64_t> out;
    for (auto item : split(text, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(parse_int(item, text));
            continue;
        }
        const auto lo = parse_int(item.substr(0, dots), text);
        const auto hi = parse_int(item.substr(dots + 2), text);
        if (hi - lo > 1'000'000) throw InputError("range too long: \"" + std::string(text) + "\"");
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
}

SweepRequest parse_sweep(std::string_view family, const std::vector<std::string>& ranges,
                         std::uint64_t default_seed) {
    for (const auto& info : families()) {
        if (info.name != family) continue;
        SweepRequest request;
        request.family = info.family;
        for (const auto& r : ranges) request.params.push_back(parse_range(r));
        if (info.family == Family::Random && request.params.size() == 1) {
            request.params.push_back({static_cast<std::int64_t>(default_seed)});
        }
        if (request.params.size() != info.params.size()) {
            std::string names;
            for (auto p : info.params) names += " " + std::string(p);
            throw InputError("sweep " + std::string(family) + " expects ranges for:" + names);
        }
        return request;
    }
    throw InputError("unknown tree family \"" + std::string(family) + "\"");
}

std::string sweep_csv(const SweepRequest& request) {
    std::ostringstream out;
    out << "family,params,n,pi,colors,exact_or_blank,two_colors,three_pi\n";
    for (const auto& row : run_sweep(request)) {
        const auto& r = row.report;
        out << row.family << ',' << row.params << ',' << r.n << ',' << r.pi << ',' << r.colors_constructed << ','
            << exact_cell(r) << ',' << r.ratio_numerator << ',' << r.ratio_denominator << '\n';
    }
    return out.str();
}

std::string sweep_json(const SweepRequest& request) {
    Json rows = Json::array();
    for (const auto& row : run_sweep(request)) {
        const auto& r = row.report;
        Json j;
        j["family"] = row.family;
        j["params"] = row.params;
        j["n"] = r.n;
        j["pi"] = r.pi;
        j["colors"] = r.colors_constructed;
        j["exact"] = r.exact_flag.value_or(false) ? Json(*r.exact_upper) : Json(nullptr);
        j["two_colors"] = r.ratio_numerator;
        j["three_pi"] = r.ratio_denominator;
        rows.push_back(std::move(j));
    }
    return rows.dump() + "\n";
}

EnumerateSummary enumerate_trees(Vertex n, const EnumerateOptions& options) {
    if (n < 2) throw InputError("enumerate needs n >= 2");
    if (n > LabeledTreeEnumerator::kDefaultCap && !options.force) {
        throw InputError("n = " + std::to_string(n) + " exceeds the enumeration cap of " +
                         std::to_string(LabeledTreeEnumerator::kDefaultCap) + " (pass --force)");
    }
    LabeledTreeEnumerator trees(n, std::max(n, LabeledTreeEnumerator::kDefaultCap));
    EnumerateSummary s;
    s.n = n;
    const bool run_exact = options.exact && n <= 7;
    while (auto t = trees.next()) {
        ++s.trees;
        const auto pi = forwarding_index(*t);
        std::int64_t colors = 0;
        try {
            const auto c = color_all_to_all(*t);
            colors = c.colors_used();
            if (!verify_proper(*t, c).empty()) ++s.improper;
        } catch (const BoundViolation&) {
            ++s.bound_failures;
            continue;
        }
        if (colors < pi || 2 * colors >= 3 * pi) ++s.bound_failures;
        if (2 * colors * s.max_ratio_denominator > s.max_ratio_numerator * 3 * pi) {
            s.max_ratio_numerator = 2 * colors;
            s.max_ratio_denominator = 3 * pi;
        }
        if (run_exact) {
            ++s.exact_runs;
            const auto exact = exact_optical_index(*t, options.budget_ms);
            if (exact.exact) {
                ++s.exact_closed;
                if (exact.upper < pi || exact.upper > colors || 2 * exact.upper >= 3 * pi) ++s.sandwich_failures;
            }
        }
    }
    return s;
}

std::string summary_json(const EnumerateSummary& s) {
    Json j;
    j["n"] = s.n;
    j["trees"] = s.trees;
    j["improper"] = s.improper;
    j["bound_failures"] = s.bound_failures;
    j["max_ratio_numerator"] = s.max_ratio_numerator;
    j["max_ratio_denominator"] = s.max_ratio_denominator;
    j["exact_runs"] = s.exact_runs;
    j["exact_closed"] = s.exact_closed;
    j["sandwich_failures"] = s.sandwich_failures;
    j["ok"] = s.ok();
    return j.dump() + "\n";
}

PathColoring parse_coloring(std::string_view text, Vertex n) {
    PathColoring c(n);
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto tokens = whitespace_tokens(line);
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (tokens.size() != 3) throw InputError(where + "expected \"u v color\"");
        const auto u = parse_int(tokens[0], line);
        const auto v = parse_int(tokens[1], line);
        const auto col = parse_int(tokens[2], line);
        if (u < 0 || v < 0 || u >= n || v >= n) throw InputError(where + "vertex out of range");
        if (u == v) throw InputError(where + "pair needs two distinct vertices");
        if (col < 0 || col > std::numeric_limits<Color>::max()) throw InputError(where + "color out of range");
        const auto x = static_cast<Vertex>(u);
        const auto y = static_cast<Vertex>(v);
        if (c.color(x, y) != kUncolored) {
            throw InputError(where + "pair {" + std::to_string(std::min(x, y)) + "," + std::to_string(std::max(x, y)) +
                             "} listed twice");
        }
        c.set(x, y, static_cast<Color>(col));
    }
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            if (c.color(x, y) == kUncolored) {
                throw InputError("coloring is missing pair {" + std::to_string(x) + "," + std::to_string(y) + "}");
            }
        }
    }
    return c;
}

std::string format_coloring(const PathColoring& c) {
    std::ostringstream out;
    for (Vertex x = 0; x < c.order(); ++x) {
        for (Vertex y = x + 1; y < c.order(); ++y) out << x << ' ' << y << ' ' << c.color(x, y) << '\n';
    }
    return out.str();
}

std::string format_violation(const Violation& v, const PathColoring& c) {
    auto pair = [](PathId p) { return "{" + std::to_string(p.x) + "," + std::to_string(p.y) + "}"; };
    return "edge " + to_string(v.edge) + ": paths " + pair(v.path_a) + " and " + pair(v.path_b) +
           " both have color " + std::to_string(c.color(v.path_a));
}

std::string to_dot(const Tree& t) {
    std::ostringstream out;
    out << "graph tree {\n";
    for (Vertex v = 0; v < t.order(); ++v) out << "  " << v << ";\n";
    for (Edge e : t.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string format_edge_list(const Tree& t) {
    std::ostringstream out;
    out << t.order() << '\n';
    for (Edge e : t.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace optidx
