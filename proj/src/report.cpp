#include "conf2/report.hpp"
#include "conf2/simplicial.hpp"
#include "conf2/symbolic.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace conf2::report {

using ordered_json = nlohmann::ordered_json;

std::string SurfaceSpec::label() const
{
    if (const auto* kind = std::get_if<SurfaceKind>(&source)) return kind->to_string();
    return "file:" + std::get<std::filesystem::path>(source).string();
}

void RunConfig::validate() const
{
    if (surfaces.empty()) throw std::invalid_argument("no surfaces requested");
    if (window < 4) throw std::invalid_argument("window must be at least 4");
}

bool SurfaceReport::all_checks_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

template <typename T>
std::string str(const T& value)
{
    std::ostringstream os;
    os << value;
    return os.str();
}

template <typename T>
std::string str(const std::vector<T>& values)
{
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + str(values[i]);
    return s + ")";
}

class CheckList {
public:
    explicit CheckList(std::vector<Check>& out) : out_(out) {}

    template <typename A, typename B>
    void equal(std::string name, const A& expected, const B& got)
    {
        out_.push_back({std::move(name), expected == got, str(expected), str(got)});
    }
    void holds(std::string name, bool ok) { out_.push_back({std::move(name), ok, "true", ok ? "true" : "false"}); }

private:
    std::vector<Check>& out_;
};

std::vector<DegreeRow> pad_rows(std::vector<DegreeRow> rows)
{
    for (int q = static_cast<int>(rows.size()); q <= symbolic::kTopDegree; ++q) rows.push_back({q, 0, 0, 0});
    return rows;
}

std::optional<SurfaceKind> classify(const oracle::SurfaceValidation& v)
{
    // F2 Betti numbers only separate the sphere and odd crosscap numbers; an even b1
    // fits both Σ_{b1/2} and N_{b1}.
    const std::size_t b1 = v.betti[1];
    if (b1 == 0) return SurfaceKind::sphere();
    if (b1 % 2 == 1) return SurfaceKind::nonorientable(static_cast<int>(b1));
    return std::nullopt;
}

void run_symbolic(const SurfaceKind& kind, SurfaceReport& r, CheckList& checks)
{
    const auto k = surface::build_kunneth(surface::build_surface_ring(kind));
    checks.holds("algebra.diagonal_swap_invariant", surface::swap_involution(k, k.diagonal) == k.diagonal);
    for (int q = 0; q <= symbolic::kTopDegree; ++q)
        checks.holds("symbolic.kernel_is_ideal_component.H" + std::to_string(q), symbolic::kernel_ideal_check(k, q));

    const auto conf = symbolic::conf_cohomology(k, kind);
    for (const auto& d : conf.degrees) {
        r.conf.push_back({d.degree, d.dim(), d.decomposition.trivial, d.decomposition.free});
        checks.equal("symbolic.rep_accounting.H" + std::to_string(d.degree), d.dim(), d.decomposition.dim());
    }
    const long chi = kind.euler();
    checks.equal("symbolic.euler", chi * chi - chi, conf.euler());
    checks.equal("symbolic.H4_vanishes", std::size_t{0}, conf.dim(4));
}

void run_oracle(const oracle::SimplicialComplex& tri, const RunConfig& cfg, SurfaceReport& r, CheckList& checks)
{
    const long chi_m = tri.euler();
    const oracle::CellComplex dp = oracle::deleted_product(tri);
    checks.holds("oracle.boundary_squared_zero", dp.boundary_squares_to_zero());
    checks.holds("oracle.involution_free", dp.involution_is_free());
    checks.holds("oracle.involution_commutes", dp.involution_commutes());
    checks.equal("oracle.euler_deleted_product", chi_m * chi_m - chi_m, dp.euler());

    const auto h = oracle::cohomology_f2(dp);
    const auto swap = oracle::induced_involution(dp, h);
    for (int q = 0; q <= dp.dimension(); ++q) {
        const auto rep = rep_decompose(h.dims[static_cast<std::size_t>(q)], swap[static_cast<std::size_t>(q)]);
        r.conf_oracle.push_back({q, h.dims[static_cast<std::size_t>(q)], rep.trivial, rep.free});
    }
    r.conf_oracle = pad_rows(std::move(r.conf_oracle));
    if (!r.conf.empty())
        for (int q = 0; q <= symbolic::kTopDegree; ++q) {
            const auto& s = r.conf[static_cast<std::size_t>(q)];
            const auto& o = r.conf_oracle[static_cast<std::size_t>(q)];
            checks.equal("agreement.conf.H" + std::to_string(q), str(std::vector{s.dim, s.t, s.f}),
                         str(std::vector{o.dim, o.t, o.f}));
        }

    const oracle::CellComplex quotient = oracle::quotient_complex(dp);
    checks.equal("quotient.euler_half", dp.euler(), 2 * quotient.euler());
    r.quotient_dims = oracle::cohomology_f2(quotient).dims;

    const borel::EquivariantComplex eq(dp, cfg.window);
    const auto eq_checks = borel::check_complex(eq);
    checks.holds("borel.d_squared_zero", eq_checks.d_squared_zero);
    checks.holds("borel.alpha_chain_map", eq_checks.alpha_is_chain_map);

    const borel::AlphaModule a = borel::equivariant_cohomology_with_alpha(eq);
    r.uconf_dims = a.dims;
    r.towers = a.towers;
    std::sort(r.towers.begin(), r.towers.end());

    std::vector<std::size_t> quotient_padded = r.quotient_dims;
    quotient_padded.resize(a.dims.size(), 0);
    checks.equal("agreement.uconf_dims", str(quotient_padded), str(a.dims));

    bool vanish = true;
    for (std::size_t n = 4; n < a.dims.size(); ++n) vanish = vanish && a.dims[n] == 0;
    checks.holds("borel.vanishes_from_degree_4", vanish);

    std::vector<std::size_t> covered(a.dims.size(), 0);
    for (const auto& t : a.towers)
        for (int n = t.start; n < t.start + t.length && n <= a.window; ++n) ++covered[static_cast<std::size_t>(n)];
    checks.equal("borel.tower_reconstruction", str(a.dims), str(covered));
    checks.holds("borel.no_truncated_towers",
                 std::none_of(a.towers.begin(), a.towers.end(), [](const borel::Tower& t) { return t.truncated; }));
    checks.equal("borel.euler", (chi_m * chi_m - chi_m) / 2, a.euler());

    if (a.dims[0] == 1) r.sw_height = borel::sw_height(a);
}

} // namespace

SurfaceReport run_surface(const SurfaceSpec& spec, const RunConfig& cfg)
{
    SurfaceReport r;
    r.surface = spec.label();
    CheckList checks(r.checks);
    try {
        std::optional<SurfaceKind> kind;
        std::optional<oracle::SimplicialComplex> tri;
        if (const auto* k = std::get_if<SurfaceKind>(&spec.source)) {
            kind = *k;
            if (cfg.oracle_enabled) tri = oracle::builtin_triangulation(*k);
        } else {
            tri = oracle::read_triangulation(std::get<std::filesystem::path>(spec.source));
            const auto v = oracle::validate_surface(*tri);
            if (!v.closed || !v.connected)
                throw oracle::InputError("triangulation is not a connected closed surface");
            kind = classify(v);
        }

        if (kind) {
            r.kind = kind->to_string();
            run_symbolic(*kind, r, checks);
        }
        if (tri && (cfg.oracle_enabled || !kind)) {
            if (kind) {
                const auto v = oracle::validate_surface(*tri);
                const std::size_t b1 = static_cast<std::size_t>(kind->first_betti());
                checks.equal("oracle.triangulation_betti", str(std::vector<std::size_t>{1, b1, 1}),
                             str(std::vector<std::size_t>{v.betti[0], v.betti[1], v.betti[2]}));
            }
            run_oracle(*tri, cfg, r, checks);
        }
        if (cfg.paper_check) r.discrepancies = paper_check(r);
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

std::vector<SurfaceReport> run_pipeline(const RunConfig& cfg)
{
    cfg.validate();
    std::vector<SurfaceReport> reports(cfg.surfaces.size());
    const auto n = static_cast<std::ptrdiff_t>(cfg.surfaces.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        reports[static_cast<std::size_t>(i)] = run_surface(cfg.surfaces[static_cast<std::size_t>(i)], cfg);
    return reports;
}

namespace {

std::string num(long v) { return std::to_string(v); }

struct TowerShape {
    std::optional<int> head;
    long x = 0;
    long y = 0;
    long z = 0;
    std::vector<int> z_starts;
    long other = 0;
};

TowerShape shape_of(const std::vector<borel::Tower>& towers)
{
    TowerShape s;
    for (const auto& t : towers) {
        if (t.start == 0 && !s.head)
            s.head = t.length;
        else if (t.start == 1 && t.length == 1)
            ++s.x;
        else if (t.start == 2 && t.length == 1)
            ++s.y;
        else if (t.length == 2) {
            ++s.z;
            s.z_starts.push_back(t.start);
        } else
            ++s.other;
    }
    return s;
}

std::string z_degree(const TowerShape& s)
{
    if (s.z_starts.empty()) return "none";
    const bool uniform = std::all_of(s.z_starts.begin(), s.z_starts.end(), [&](int d) { return d == s.z_starts[0]; });
    return uniform ? num(s.z_starts[0]) : "mixed";
}

} // namespace

std::vector<Discrepancy> published_comparisons(const SurfaceReport& report)
{
    std::vector<Discrepancy> out;
    if (!report.kind) return out;
    const SurfaceKind kind = SurfaceKind::parse(*report.kind);
    const long n = kind.count();

    const std::vector<DegreeRow>& conf = !report.conf.empty() ? report.conf : report.conf_oracle;
    auto row = [&](int q) { return q < static_cast<int>(conf.size()) ? conf[static_cast<std::size_t>(q)] : DegreeRow{q}; };
    auto add = [&](std::string statement, std::string item, std::string stated, std::string consistent,
                   std::string computed) {
        out.push_back({std::move(statement), std::move(item), std::move(stated), std::move(consistent), std::move(computed)});
    };

    const bool have_towers = !report.towers.empty();
    const TowerShape shape = shape_of(report.towers);
    const std::string head = shape.head ? num(*shape.head) : "none";

    switch (kind.type()) {
    case SurfaceKind::Type::Sphere: {
        const std::string s = "conf/sphere";
        if (!conf.empty()) {
            add(s, "H0.trivial", "1", "1", num(static_cast<long>(row(0).t)));
            add(s, "H1.dim", "0", "0", num(static_cast<long>(row(1).dim)));
            add(s, "H2.trivial", "1", "1", num(static_cast<long>(row(2).t)));
            add(s, "H2.free", "0", "0", num(static_cast<long>(row(2).f)));
            add(s, "H3.dim", "0", "0", num(static_cast<long>(row(3).dim)));
        }
        if (have_towers) {
            // Displayed as the full polynomial ring, while UConf(2,S^2) ≃ RP^2 truncates at α^3.
            add("uconf/sphere", "towers.head.length", "unbounded", "3", head);
            add("uconf/sphere", "towers.other.count", "0", "0", num(shape.x + shape.y + shape.z + shape.other));
        }
        break;
    }
    case SurfaceKind::Type::Orientable: {
        const std::string s = "conf/orientable";
        if (!conf.empty()) {
            add(s, "H0.trivial", "1", "1", num(static_cast<long>(row(0).t)));
            add(s, "H1.trivial", "0", "0", num(static_cast<long>(row(1).t)));
            add(s, "H1.free", num(2 * n), num(2 * n), num(static_cast<long>(row(1).f)));
            add(s, "H2.trivial", num(2 * n + 1), num(2 * n + 1), num(static_cast<long>(row(2).t)));
            add(s, "H2.free", num(2 * n * n + n), num(2 * n * n - n), num(static_cast<long>(row(2).f)));
            add(s, "H3.trivial", num(2 * n), num(2 * n), num(static_cast<long>(row(3).t)));
            add(s, "H3.free", "0", "0", num(static_cast<long>(row(3).f)));
            add(s, "H4.dim", "0", "0", num(static_cast<long>(row(4).dim)));
        }
        if (have_towers) {
            const std::string u = "uconf/orientable";
            add(u, "towers.head.length", "3", "3", head);
            add(u, "towers.x.count", num(n), num(2 * n), num(shape.x));
            add(u, "towers.y.count", num(2 * n * n + n), num(2 * n * n - n), num(shape.y));
            add(u, "towers.z.count", num(2 * n), num(2 * n), num(shape.z));
            add(u, "towers.z.degree", "3", "2", z_degree(shape));
            add(u, "towers.other.count", "0", "0", num(shape.other));
        }
        break;
    }
    case SurfaceKind::Type::Nonorientable: {
        const std::string s = "conf/nonorientable";
        if (!conf.empty()) {
            add(s, "H0.trivial", "1", "1", num(static_cast<long>(row(0).t)));
            add(s, "H1.trivial", "0", "0", num(static_cast<long>(row(1).t)));
            add(s, "H1.free", num(n), num(n), num(static_cast<long>(row(1).f)));
            add(s, "H2.trivial", num(n - 1), num(n - 1), num(static_cast<long>(row(2).t)));
            add(s, "H2.free", num(n * (n + 1) / 2 + 1), num(n * (n - 1) / 2 + 1), num(static_cast<long>(row(2).f)));
            add(s, "H3.trivial", num(n), num(n), num(static_cast<long>(row(3).t)));
            add(s, "H3.free", "0", "0", num(static_cast<long>(row(3).f)));
            add(s, "H4.dim", "0", "0", num(static_cast<long>(row(4).dim)));
        }
        if (have_towers) {
            const std::string u = "uconf/nonorientable";
            add(u, "towers.head.length", "4", "4", head);
            add(u, "towers.x.count", num(n), num(n), num(shape.x));
            add(u, "towers.y.count", num(n * (n + 1) / 2 + 1), num(n * (n - 1) / 2 + 1), num(shape.y));
            add(u, "towers.z.count", num(n - 1), num(n - 1), num(shape.z));
            // With k = 1 there are no z-towers and the degree claim is vacuous.
            if (n > 1) add(u, "towers.z.degree", "3", "2", z_degree(shape));
            add(u, "towers.other.count", "0", "0", num(shape.other));
        }
        break;
    }
    }
    if (report.sw_height) {
        const std::string expected = kind.is_orientable() ? "2" : "3";
        const std::string got = report.sw_height->truncated ? ">=" + num(report.sw_height->value) : num(report.sw_height->value);
        add("sw_height", "height", expected, expected, got);
    }
    return out;
}

std::vector<Discrepancy> paper_check(const SurfaceReport& report)
{
    std::vector<Discrepancy> all = published_comparisons(report);
    std::erase_if(all, [](const Discrepancy& d) { return d.matches_stated(); });
    return all;
}

namespace {

ordered_json rows_json(const std::vector<DegreeRow>& rows)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back({{"q", r.q}, {"dim", r.dim}, {"t", r.t}, {"f", r.f}});
    return arr;
}

std::vector<DegreeRow> rows_from(const ordered_json& arr)
{
    std::vector<DegreeRow> rows;
    for (const auto& r : arr)
        rows.push_back({r.at("q").get<int>(), r.at("dim").get<std::size_t>(), r.at("t").get<std::size_t>(),
                        r.at("f").get<std::size_t>()});
    return rows;
}

ordered_json height_json(const std::optional<borel::SWHeight>& h)
{
    if (!h) return nullptr;
    if (h->truncated) return ">=" + std::to_string(h->value);
    return h->value;
}

std::optional<borel::SWHeight> height_from(const ordered_json& j)
{
    if (j.is_null()) return std::nullopt;
    if (j.is_string()) return borel::SWHeight{std::stoi(j.get<std::string>().substr(2)), true};
    return borel::SWHeight{j.get<int>(), false};
}

ordered_json report_json(const SurfaceReport& r)
{
    ordered_json j;
    j["surface"] = r.surface;
    j["kind"] = r.kind ? ordered_json(*r.kind) : ordered_json(nullptr);
    j["error"] = r.error ? ordered_json(*r.error) : ordered_json(nullptr);
    j["conf"] = rows_json(r.conf);
    j["conf_oracle"] = rows_json(r.conf_oracle);
    ordered_json towers = ordered_json::array();
    for (const auto& t : r.towers) towers.push_back({{"start", t.start}, {"len", t.length}, {"truncated", t.truncated}});
    j["uconf"] = {{"dims", r.uconf_dims},
                  {"quotient_dims", r.quotient_dims},
                  {"towers", towers},
                  {"sw_height", height_json(r.sw_height)}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"got", c.got}});
    j["checks"] = checks;
    ordered_json disc = ordered_json::array();
    for (const auto& d : r.discrepancies)
        disc.push_back({{"statement", d.statement},
                        {"item", d.item},
                        {"stated", d.stated},
                        {"consistent", d.consistent},
                        {"computed", d.computed}});
    j["discrepancies"] = disc;
    return j;
}

SurfaceReport report_from(const ordered_json& j)
{
    SurfaceReport r;
    r.surface = j.at("surface").get<std::string>();
    if (!j.at("kind").is_null()) r.kind = j.at("kind").get<std::string>();
    if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
    r.conf = rows_from(j.at("conf"));
    r.conf_oracle = rows_from(j.at("conf_oracle"));
    const auto& u = j.at("uconf");
    r.uconf_dims = u.at("dims").get<std::vector<std::size_t>>();
    r.quotient_dims = u.at("quotient_dims").get<std::vector<std::size_t>>();
    for (const auto& t : u.at("towers"))
        r.towers.push_back({t.at("start").get<int>(), t.at("len").get<int>(), t.at("truncated").get<bool>()});
    r.sw_height = height_from(u.at("sw_height"));
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                            c.at("expected").get<std::string>(), c.at("got").get<std::string>()});
    for (const auto& d : j.at("discrepancies"))
        r.discrepancies.push_back({d.at("statement").get<std::string>(), d.at("item").get<std::string>(),
                                   d.at("stated").get<std::string>(), d.at("consistent").get<std::string>(),
                                   d.at("computed").get<std::string>()});
    return r;
}

std::string tower_text(const borel::Tower& t)
{
    std::string s = "F2[α]/(α^" + std::to_string(t.length) + ") in degree " + std::to_string(t.start);
    return t.truncated ? s + " (truncated)" : s;
}

void markdown_rows(std::ostringstream& os, const std::vector<DegreeRow>& rows)
{
    os << "| degree | dim | t | f |\n|---|---|---|---|\n";
    for (const auto& r : rows) os << "| H^" << r.q << " | " << r.dim << " | " << r.t << " | " << r.f << " |\n";
    os << '\n';
}

std::string markdown(const std::vector<SurfaceReport>& reports)
{
    std::ostringstream os;
    os << "# Two-point configuration spaces: mod 2 cohomology\n\nschema: " << kSchema << "\n";
    for (const auto& r : reports) {
        os << "\n## " << r.surface << "\n\n";
        if (r.kind) os << "kind: " << *r.kind << "\n\n";
        if (r.error) {
            os << "**error:** " << *r.error << "\n";
            continue;
        }
        if (!r.conf.empty()) {
            os << "### H*(Conf(2,M); F2), symbolic (t trivial, f free summands)\n\n";
            markdown_rows(os, r.conf);
        }
        if (!r.conf_oracle.empty()) {
            os << "### H*(Conf(2,M); F2), deleted product\n\n";
            markdown_rows(os, r.conf_oracle);
        }
        if (!r.uconf_dims.empty()) {
            os << "### H*(UConf(2,M); F2) as an F2[α]-module\n\n";
            os << "dims: " << str(r.uconf_dims) << "\n\n";
            for (const auto& t : r.towers) os << "- " << tower_text(t) << '\n';
            os << '\n';
        }
        if (r.sw_height)
            os << "Stiefel-Whitney height: " << (r.sw_height->truncated ? ">=" : "") << r.sw_height->value << "\n\n";
        if (!r.checks.empty()) {
            os << "### Checks\n\n| check | result | expected | got |\n|---|---|---|---|\n";
            for (const auto& c : r.checks)
                os << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.expected << " | " << c.got
                   << " |\n";
            os << '\n';
        }
        if (!r.discrepancies.empty()) {
            os << "### Published values that disagree with the computation\n\n"
                  "| statement | item | stated | consistent | computed |\n|---|---|---|---|---|\n";
            for (const auto& d : r.discrepancies)
                os << "| " << d.statement << " | " << d.item << " | " << d.stated << " | " << d.consistent << " | "
                   << d.computed << " |\n";
            os << '\n';
        }
    }
    return os.str();
}

} // namespace

std::string emit_report(const std::vector<SurfaceReport>& reports, Format format)
{
    if (format == Format::Markdown) return markdown(reports);
    ordered_json doc;
    doc["schema"] = kSchema;
    doc["surfaces"] = ordered_json::array();
    for (const auto& r : reports) doc["surfaces"].push_back(report_json(r));
    return doc.dump(2) + "\n";
}

std::vector<SurfaceReport> parse_json_report(const std::string& text)
{
    const ordered_json doc = ordered_json::parse(text);
    if (doc.at("schema").get<std::string>() != kSchema) throw std::invalid_argument("unsupported report schema");
    std::vector<SurfaceReport> reports;
    for (const auto& j : doc.at("surfaces")) reports.push_back(report_from(j));
    return reports;
}

int exit_code(const std::vector<SurfaceReport>& reports)
{
    const bool any_ran = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.succeeded(); });
    if (!any_ran) return 2;
    const bool failed = std::any_of(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.succeeded() && !r.all_checks_pass(); });
    return failed ? 1 : 0;
}

} // namespace conf2::report
