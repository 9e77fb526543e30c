#include "conf2/report.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

using namespace conf2;
using namespace conf2::report;

namespace {

RunConfig config(std::vector<SurfaceSpec> surfaces, bool paper_check = false)
{
    RunConfig cfg;
    cfg.surfaces = std::move(surfaces);
    cfg.paper_check = paper_check;
    return cfg;
}

const Discrepancy* find(const std::vector<Discrepancy>& ds, std::string_view item)
{
    for (const auto& d : ds)
        if (d.item == item) return &d;
    return nullptr;
}

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args)
{
    const std::string cmd = std::string(CONF2_CLI) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
    const int status = pclose(pipe.release());
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("sphere pipeline")
{
    const auto reports = run_pipeline(config({{SurfaceKind::sphere()}}));
    REQUIRE(reports.size() == 1);
    const auto& r = reports[0];
    REQUIRE(r.succeeded());
    CHECK(r.all_checks_pass());
    std::vector<std::size_t> dims;
    for (const auto& row : r.conf) dims.push_back(row.dim);
    CHECK(dims == std::vector<std::size_t>{1, 0, 1, 0, 0});
    CHECK(std::vector(r.uconf_dims.begin(), r.uconf_dims.begin() + 4) == std::vector<std::size_t>{1, 1, 1, 0});
    REQUIRE(r.sw_height);
    CHECK(*r.sw_height == borel::SWHeight{2, false});
    CHECK(exit_code(reports) == 0);
}

TEST_CASE("torus: symbolic and oracle agree")
{
    const auto r = run_surface({SurfaceKind::orientable(1)}, config({{SurfaceKind::orientable(1)}}));
    REQUIRE(r.succeeded());
    CHECK(r.conf == r.conf_oracle);
    CHECK(r.all_checks_pass());
    for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, c.name, ": expected ", c.expected, " got ", c.got);
}

TEST_CASE("no-oracle runs only the symbolic route")
{
    auto cfg = config({{SurfaceKind::orientable(2)}});
    cfg.oracle_enabled = false;
    const auto r = run_surface(cfg.surfaces[0], cfg);
    REQUIRE(r.succeeded());
    CHECK(r.conf.size() == 5);
    CHECK(r.conf_oracle.empty());
    CHECK(r.towers.empty());
    CHECK_FALSE(r.sw_height);
}

TEST_CASE("error records and exit codes")
{
    const SurfaceSpec bad{std::filesystem::path("/nonexistent/bad.tri")};
    const auto partial = run_pipeline(config({{SurfaceKind::sphere()}, bad}));
    REQUIRE(partial.size() == 2);
    CHECK(partial[0].succeeded());
    CHECK_FALSE(partial[1].succeeded());
    CHECK(partial[1].error->find("cannot open") != std::string::npos);
    CHECK(exit_code(partial) == 0);

    CHECK(exit_code(run_pipeline(config({bad}))) == 2);

    auto failed = partial;
    failed[0].checks.push_back({"synthetic", false, "1", "2"});
    CHECK(exit_code(failed) == 1);

    CHECK_THROWS(RunConfig{}.validate());
    auto small = config({{SurfaceKind::sphere()}});
    small.window = 3;
    CHECK_THROWS(small.validate());
}

TEST_CASE("triangulation files: classification by Betti numbers")
{
    const std::filesystem::path data(CONF2_DATA_DIR);
    const auto rp2 = run_surface({data / "rp2.tri"}, config({}));
    REQUIRE(rp2.succeeded());
    CHECK(rp2.kind == "nonorientable:1");
    CHECK(rp2.conf == rp2.conf_oracle);
    CHECK(rp2.all_checks_pass());

    // b1 = 2 fits both the torus and the Klein bottle, so only the oracle runs.
    const auto torus = run_surface({data / "torus.tri"}, config({}));
    REQUIRE(torus.succeeded());
    CHECK_FALSE(torus.kind);
    CHECK(torus.conf.empty());
    CHECK(torus.conf_oracle[2] == DegreeRow{2, 5, 3, 1});
    CHECK(torus.all_checks_pass());

    const auto tmp = std::filesystem::temp_directory_path() / "conf2_open_disc.tri";
    std::ofstream(tmp) << "vertices 3\nf 0 1 2\n";
    const auto disc = run_surface({tmp}, config({}));
    CHECK_FALSE(disc.succeeded());
    std::filesystem::remove(tmp);
}

TEST_CASE("published closed forms")
{
    const auto g2 = run_surface({SurfaceKind::orientable(2)}, config({}, true));
    const auto* free2 = find(g2.discrepancies, "H2.free");
    REQUIRE(free2);
    CHECK(free2->statement == "conf/orientable");
    CHECK(free2->computed == "6");
    CHECK(free2->stated == "10");
    CHECK(free2->consistent == "6");

    const auto k2 = run_surface({SurfaceKind::nonorientable(2)}, config({}, true));
    const auto* free_k = find(k2.discrepancies, "H2.free");
    REQUIRE(free_k);
    CHECK(free_k->computed == "2");
    CHECK(free_k->stated == "4");
    CHECK(free_k->consistent == "2");

    const auto sphere = run_surface({SurfaceKind::sphere()}, config({}, true));
    const auto all = published_comparisons(sphere);
    const auto* height = find(all, "height");
    REQUIRE(height);
    CHECK(height->matches_stated());
    CHECK(height->computed == "2");
    CHECK_FALSE(find(sphere.discrepancies, "height"));
    REQUIRE(find(sphere.discrepancies, "towers.head.length"));
    CHECK(find(sphere.discrepancies, "towers.head.length")->stated == "unbounded");
}

TEST_CASE("JSON round trip and determinism")
{
    const auto reports = run_pipeline(config({{SurfaceKind::sphere()}, {SurfaceKind::nonorientable(1)}}, true));
    const std::string text = emit_report(reports, Format::Json);
    CHECK(parse_json_report(text) == reports);
    CHECK(emit_report(run_pipeline(config({{SurfaceKind::sphere()}, {SurfaceKind::nonorientable(1)}}, true)),
                      Format::Json) == text);
    CHECK(text.find("\"schema\": \"conf2-report/1\"") != std::string::npos);
    CHECK(text.find("\"surface\"") < text.find("\"conf\""));

    const std::string empty = emit_report({}, Format::Json);
    CHECK(empty.find("conf2-report/1") != std::string::npos);
    CHECK(parse_json_report(empty).empty());
    CHECK_THROWS(parse_json_report("{\"schema\": \"other\", \"surfaces\": []}"));
}

TEST_CASE("markdown")
{
    const auto reports = run_pipeline(config({{SurfaceKind::orientable(1)}}));
    const std::string md = emit_report(reports, Format::Markdown);
    CHECK(md.find("| H^2 | 5 | 3 | 1 |") != std::string::npos);
    CHECK(md.find("F2[α]/(α^3) in degree 0") != std::string::npos);
    CHECK(md.find("Stiefel-Whitney height: 2") != std::string::npos);
}

TEST_CASE("command line")
{
    const auto ok = run_cli("--surface sphere --format md");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("| H^2 | 1 | 1 | 0 |") != std::string::npos);

    const auto json = run_cli("--surface nonorientable:1 --paper-check");
    CHECK(json.code == 0);
    const auto parsed = parse_json_report(json.out);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].sw_height == borel::SWHeight{3, false});
    CHECK_FALSE(parsed[0].discrepancies.empty());

    CHECK(run_cli("--surface sphere --triangulation /nonexistent.tri").code == 0);
    CHECK(run_cli("--triangulation /nonexistent.tri").code == 2);
    CHECK(run_cli("--surface klein").code == 2);
    CHECK(run_cli("--surface sphere --window 2").code != 0);
    CHECK(run_cli("--triangulation " + std::string(CONF2_DATA_DIR) + "/torus.tri --no-oracle").code == 0);
}
