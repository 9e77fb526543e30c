// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "conf2/report.hpp"
#include "conf2/symbolic.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace conf2;

namespace {

using Dims = std::vector<std::size_t>;

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what)
{
    if (!ok) throw Failure{what};
}

template <typename T>
std::string show(const std::vector<T>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str() + ')';
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what)
{
    if (!(got == want)) {
        if constexpr (requires { show(got); })
            throw Failure{what + ": expected " + show(want) + ", got " + show(got)};
        else
            throw Failure{what};
    }
}

Dims prefix(const Dims& d, std::size_t n)
{
    Dims out(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(std::min(n, d.size())));
    out.resize(n, 0);
    return out;
}

report::RunConfig config(bool paper_check = false)
{
    report::RunConfig cfg;
    cfg.paper_check = paper_check;
    return cfg;
}

report::SurfaceReport run(const SurfaceKind& kind, bool paper_check = false)
{
    auto r = report::run_surface({kind}, config(paper_check));
    if (!r.succeeded()) throw Failure{kind.to_string() + ": " + *r.error};
    return r;
}

void expect_checks_pass(const report::SurfaceReport& r)
{
    for (const auto& c : r.checks)
        expect(c.pass, r.surface + ": check " + c.name + " expected " + c.expected + " got " + c.got);
}

Dims conf_dims(const std::vector<report::DegreeRow>& rows)
{
    Dims d;
    for (const auto& row : rows) d.push_back(row.dim);
    return d;
}

std::vector<RepDecomposition> conf_reps(const std::vector<report::DegreeRow>& rows)
{
    std::vector<RepDecomposition> out;
    for (const auto& row : rows) out.push_back({row.t, row.f});
    return out;
}

std::vector<borel::Tower> towers(std::initializer_list<std::pair<std::pair<int, int>, int>> spec)
{
    std::vector<borel::Tower> out;
    for (const auto& [shape, count] : spec)
        for (int i = 0; i < count; ++i) out.push_back({shape.first, shape.second, false});
    std::sort(out.begin(), out.end());
    return out;
}

const report::Discrepancy& comparison(const std::vector<report::Discrepancy>& all, std::string_view item)
{
    for (const auto& d : all)
        if (d.item == item) return d;
    throw Failure{"no comparison for " + std::string(item)};
}

std::vector<SurfaceKind> sweep(int max)
{
    std::vector<SurfaceKind> kinds{SurfaceKind::sphere()};
    for (int n = 1; n <= max; ++n) {
        kinds.push_back(SurfaceKind::orientable(n));
        kinds.push_back(SurfaceKind::nonorientable(n));
    }
    return kinds;
}

void criterion1()
{
    expect_eq(symbolic::conf_cohomology(SurfaceKind::sphere()).dims(), Dims{1, 0, 1, 0, 0}, "sphere Conf dims");
    const auto dp = oracle::deleted_product(oracle::builtin_triangulation(SurfaceKind::sphere()));
    expect_eq(dp.counts(), Dims{12, 24, 14}, "deleted product cell counts");
    expect(dp.euler() == 2, "deleted product euler");
    expect_eq(oracle::cohomology_f2(dp).dims, Dims{1, 0, 1}, "deleted product cohomology");
    expect_eq(oracle::cohomology_f2(oracle::quotient_complex(dp)).dims, Dims{1, 1, 1}, "quotient cohomology");
    const auto a = borel::equivariant_cohomology_with_alpha(borel::EquivariantComplex(dp));
    expect_eq(a.dims, Dims{1, 1, 1, 0, 0, 0, 0, 0, 0}, "UConf dims");
    expect(borel::sw_height(a) == borel::SWHeight{2, false}, "sphere sw_height");
}

void criterion2()
{
    const auto r = run(SurfaceKind::orientable(1), true);
    expect_checks_pass(r);
    expect_eq(conf_dims(r.conf), Dims{1, 4, 5, 2, 0}, "symbolic dims");
    expect_eq(conf_dims(r.conf_oracle), Dims{1, 4, 5, 2, 0}, "oracle dims");
    const std::vector<RepDecomposition> reps{{1, 0}, {0, 2}, {3, 1}, {2, 0}, {0, 0}};
    expect(conf_reps(r.conf) == reps, "symbolic (t,f)");
    expect(conf_reps(r.conf_oracle) == reps, "oracle (t,f)");
    const auto all = report::published_comparisons(r);
    for (const char* item : {"H1.free", "H1.trivial", "H3.trivial", "H3.free"})
        expect(comparison(all, item).matches_stated(), std::string("published value for ") + item);
    expect_eq(prefix(r.uconf_dims, 5), Dims{1, 3, 4, 2, 0}, "UConf dims");
    expect(r.towers == towers({{{0, 3}, 1}, {{1, 1}, 2}, {{2, 1}, 1}, {{2, 2}, 2}}), "torus towers");
    expect(r.sw_height == borel::SWHeight{2, false}, "torus sw_height");
}

void criterion3()
{
    const auto r = run(SurfaceKind::nonorientable(1), true);
    expect_checks_pass(r);
    expect_eq(conf_dims(r.conf), Dims{1, 2, 2, 1, 0}, "symbolic dims");
    expect_eq(conf_dims(r.conf_oracle), Dims{1, 2, 2, 1, 0}, "oracle dims");
    const std::vector<RepDecomposition> reps{{1, 0}, {0, 1}, {0, 1}, {1, 0}, {0, 0}};
    expect(conf_reps(r.conf) == reps && conf_reps(r.conf_oracle) == reps, "(t,f)");
    expect_eq(prefix(r.uconf_dims, 5), Dims{1, 2, 2, 1, 0}, "UConf dims");
    expect(!r.towers.empty() && r.towers.front() == borel::Tower{0, 4, false}, "head tower F2[α]/(α^4)");
    expect(comparison(report::published_comparisons(r), "towers.head.length").matches_stated(), "published head");
    expect(r.sw_height == borel::SWHeight{3, false}, "RP^2 sw_height");
}

void check_large(const SurfaceKind& kind)
{
    const auto start = std::chrono::steady_clock::now();
    const auto r = run(kind);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(secs < 60, kind.to_string() + ": over 60 s");
    expect_checks_pass(r);
    expect(r.conf == r.conf_oracle, kind.to_string() + ": symbolic and oracle (dims, t, f) differ");
    const long chi = kind.euler();
    long conf_chi = 0;
    for (const auto& row : r.conf) conf_chi += (row.q % 2 ? -1 : 1) * static_cast<long>(row.dim);
    expect(conf_chi == chi * chi - chi, kind.to_string() + ": χ(Conf)");
    long uconf_chi = 0;
    for (std::size_t n = 0; n < r.uconf_dims.size(); ++n)
        uconf_chi += (n % 2 ? -1 : 1) * static_cast<long>(r.uconf_dims[n]);
    expect(2 * uconf_chi == conf_chi, kind.to_string() + ": χ(UConf) = χ(Conf)/2");
    for (const auto& row : r.conf)
        if (row.q >= 4) expect(row.dim == 0, kind.to_string() + ": H^4(Conf)");
    for (std::size_t n = 4; n < r.uconf_dims.size(); ++n) expect(r.uconf_dims[n] == 0, kind.to_string() + ": H^n(UConf), n >= 4");
}

void criterion4()
{
    check_large(SurfaceKind::orientable(2));
    check_large(SurfaceKind::nonorientable(2));
    check_large(SurfaceKind::nonorientable(3));
}

void criterion5()
{
    for (const auto& kind : {SurfaceKind::sphere(), SurfaceKind::orientable(1), SurfaceKind::orientable(2)})
        expect(run(kind).sw_height == borel::SWHeight{2, false}, kind.to_string() + ": sw_height 2");
    for (int k = 1; k <= 3; ++k)
        expect(run(SurfaceKind::nonorientable(k)).sw_height == borel::SWHeight{3, false},
               "nonorientable:" + std::to_string(k) + ": sw_height 3");
}

void criterion6()
{
    for (const auto& kind : sweep(4)) {
        const auto k = surface::build_kunneth(surface::build_surface_ring(kind));
        surface::Element closed = k.algebra.sum({"u|1", "1|u"});
        for (int i = 1; i <= kind.count(); ++i) {
            const std::string n = std::to_string(i);
            if (kind.type() == SurfaceKind::Type::Orientable)
                closed = closed + k.algebra.sum({"a" + n + "|b" + n, "b" + n + "|a" + n});
            else if (kind.type() == SurfaceKind::Type::Nonorientable)
                closed = closed + k.algebra.element("w" + n + "|w" + n);
        }
        expect(k.diagonal == closed, kind.to_string() + ": diagonal class " + k.algebra.format(k.diagonal));
    }
}

void criterion7()
{
    for (const auto& kind : sweep(4)) {
        const auto k = surface::build_kunneth(surface::build_surface_ring(kind));
        for (int q = 0; q <= 4; ++q)
            expect(symbolic::kernel_ideal_check(k, q), kind.to_string() + ": kernel vs ideal in degree " + std::to_string(q));
    }
}

// The mismatches the published statements are known to carry, by surface family.
std::set<std::string> documented_mismatches(const SurfaceKind& kind)
{
    switch (kind.type()) {
    case SurfaceKind::Type::Sphere: return {"uconf/sphere:towers.head.length"};
    case SurfaceKind::Type::Orientable:
        return {"conf/orientable:H2.free", "uconf/orientable:towers.x.count", "uconf/orientable:towers.y.count",
                "uconf/orientable:towers.z.degree"};
    case SurfaceKind::Type::Nonorientable:
        if (kind.count() == 1) return {"conf/nonorientable:H2.free", "uconf/nonorientable:towers.y.count"};
        return {"conf/nonorientable:H2.free", "uconf/nonorientable:towers.y.count",
                "uconf/nonorientable:towers.z.degree"};
    }
    return {};
}

void criterion8()
{
    for (const auto& kind : sweep(3)) {
        const auto r = run(kind, true);
        std::set<std::string> got;
        for (const auto& d : r.discrepancies) {
            got.insert(d.statement + ":" + d.item);
            // Each disagreement must be explained by the generator-list value.
            expect(d.matches_consistent(), kind.to_string() + ": " + d.item + " computed " + d.computed +
                                               " matches neither stated " + d.stated + " nor " + d.consistent);
        }
        const auto want = documented_mismatches(kind);
        if (got != want) {
            std::string msg = kind.to_string() + ": mismatch set {";
            for (const auto& g : got) msg += " " + g;
            throw Failure{msg + " }"};
        }
    }
}

void criterion9()
{
    for (const auto& kind : {SurfaceKind::sphere(), SurfaceKind::orientable(1), SurfaceKind::orientable(2),
                             SurfaceKind::nonorientable(1), SurfaceKind::nonorientable(2), SurfaceKind::nonorientable(3)}) {
        const auto r = run(kind);
        expect_checks_pass(r);
        const std::string name = kind.to_string();

        const auto k = surface::build_kunneth(surface::build_surface_ring(kind));
        expect(surface::swap_involution(k, k.diagonal) == k.diagonal, name + ": σ(u0) = u0");
        for (int n = 0; n <= k.top_degree(); ++n) {
            const auto& s = k.swap[static_cast<std::size_t>(n)];
            expect(s * s == f2::F2Matrix::identity(k.dim(n)), name + ": σ^2 = 1 on H(MxM)");
        }

        const auto dp = oracle::deleted_product(oracle::builtin_triangulation(kind));
        expect(dp.boundary_squares_to_zero(), name + ": ∂^2 = 0");
        for (int d = 0; d <= dp.dimension(); ++d) {
            const auto s = dp.involution_on_cochains(d);
            expect(s * s == f2::F2Matrix::identity(dp.count(d)), name + ": σ^2 = 1 on cochains");
        }
        const borel::EquivariantComplex e(dp);
        const auto ec = borel::check_complex(e);
        expect(ec.d_squared_zero && ec.alpha_is_chain_map, name + ": equivariant d^2 = 0");

        for (const auto& rows : {r.conf, r.conf_oracle})
            for (const auto& row : rows) expect(row.t + 2 * row.f == row.dim, name + ": t + 2f = dim");

        Dims covered(r.uconf_dims.size(), 0);
        for (const auto& t : r.towers)
            for (int n = t.start; n < t.start + t.length; ++n) ++covered.at(static_cast<std::size_t>(n));
        expect_eq(covered, r.uconf_dims, name + ": tower reconstruction");
    }

    for (const auto& kind : {SurfaceKind::sphere(), SurfaceKind::nonorientable(1)}) {
        const auto tri = oracle::builtin_triangulation(kind);
        const auto a = prefix(oracle::cohomology_f2(oracle::deleted_product(tri)).dims, 5);
        const auto b = prefix(oracle::cohomology_f2(oracle::deleted_product(oracle::barycentric_subdivide(tri))).dims, 5);
        expect_eq(b, a, kind.to_string() + ": subdivision invariance");
    }
}

struct Criterion {
    int number;
    const char* title;
    double limit_seconds; // 0 means no limit
    std::function<void()> body;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "sphere: Conf, deleted product, quotient, UConf, height", 1, criterion1},
        {2, "torus: symbolic = oracle, published H^1/H^3, towers, height", 5, criterion2},
        {3, "RP^2: Conf, UConf, head tower α^4, height", 5, criterion3},
        {4, "genus 2, Klein bottle, N3: agreement, Euler, vanishing", 0, criterion4},
        {5, "Stiefel-Whitney heights 2 / 3", 0, criterion5},
        {6, "diagonal class closed forms, g,k <= 4", 0, criterion6},
        {7, "kernel = ideal (u0), g,k <= 4, q <= 4", 0, criterion7},
        {8, "--paper-check reports exactly the documented mismatches, g,k <= 3", 0, criterion8},
        {9, "property suites across the sweep", 120, criterion9},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.body();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
            ok = false;
            detail = "over time limit of " + std::to_string(c.limit_seconds) + " s";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " ("
                  << std::fixed << std::setprecision(2) << secs << " s)";
        if (!ok) std::cout << "  -- " << detail;
        std::cout << '\n';
        failures += ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
