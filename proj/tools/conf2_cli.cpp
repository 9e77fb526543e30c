#include "conf2/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    using namespace conf2;

    CLI::App app{"Mod 2 cohomology of two-point configuration spaces of closed surfaces"};
    std::vector<std::string> kinds;
    std::vector<std::string> files;
    bool no_oracle = false;
    report::RunConfig cfg;
    std::string format = "json";
    std::string output;

    app.add_option("--surface", kinds, "sphere | orientable:G | nonorientable:K (repeatable)");
    app.add_option("--triangulation", files, "triangulation file (repeatable)");
    app.add_flag("--no-oracle", no_oracle, "skip the deleted-product and equivariant computations");
    app.add_option("--window", cfg.window, "highest total degree of the equivariant complex")
        ->check(CLI::Range(4, 64));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "md"}));
    app.add_flag("--paper-check", cfg.paper_check, "list published closed forms that disagree with the computation");
    app.add_option("-o,--output", output, "write the report here instead of stdout");
    CLI11_PARSE(app, argc, argv);

    // Surfaces keep command-line order, kinds first.
    for (const auto& k : kinds) {
        try {
            cfg.surfaces.push_back({SurfaceKind::parse(k)});
        } catch (const std::exception& e) {
            std::cerr << "conf2: " << e.what() << '\n';
            return 2;
        }
    }
    for (const auto& f : files) cfg.surfaces.push_back({std::filesystem::path(f)});
    if (cfg.surfaces.empty()) {
        std::cerr << "conf2: give at least one --surface or --triangulation\n";
        return 2;
    }
    cfg.oracle_enabled = !no_oracle;
    cfg.format = format == "md" ? report::Format::Markdown : report::Format::Json;

    const auto reports = report::run_pipeline(cfg);
    const std::string text = report::emit_report(reports, cfg.format);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "conf2: cannot write " << output << '\n';
            return 2;
        }
        out << text;
    }
    for (const auto& r : reports)
        if (r.error) std::cerr << "conf2: " << r.surface << ": " << *r.error << '\n';
    return report::exit_code(reports);
}
