#pragma once

#include "conf2/borel.hpp"
#include "conf2/surface.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conf2::report {

inline constexpr const char* kSchema = "conf2-report/1";

struct SurfaceSpec {
    std::variant<SurfaceKind, std::filesystem::path> source;

    [[nodiscard]] std::string label() const;
};

enum class Format { Json, Markdown };

struct RunConfig {
    std::vector<SurfaceSpec> surfaces;
    bool oracle_enabled = true;
    int window = borel::kDefaultWindow;
    Format format = Format::Json;
    bool paper_check = false;

    /// Throws std::invalid_argument unless there is a surface and window >= 4.
    void validate() const;
};

struct DegreeRow {
    int q = 0;
    std::size_t dim = 0;
    std::size_t t = 0;
    std::size_t f = 0;

    friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string got;

    friend bool operator==(const Check&, const Check&) = default;
};

/// One comparison between a published closed form and the computed value. `stated` is
/// the value as printed in the published statement, `consistent` the value implied by the
/// accompanying generator lists.
struct Discrepancy {
    std::string statement; ///< e.g. "conf/orientable", "uconf/nonorientable"
    std::string item;      ///< e.g. "H2.free", "towers.x.count"
    std::string stated;
    std::string consistent;
    std::string computed;

    [[nodiscard]] bool matches_stated() const { return stated == computed; }
    [[nodiscard]] bool matches_consistent() const { return consistent == computed; }
    friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct SurfaceReport {
    std::string surface;
    std::optional<std::string> kind;
    std::optional<std::string> error;
    std::vector<DegreeRow> conf;        ///< symbolic route
    std::vector<DegreeRow> conf_oracle; ///< deleted-product route
    std::vector<std::size_t> uconf_dims;
    std::vector<std::size_t> quotient_dims;
    std::vector<borel::Tower> towers;
    std::optional<borel::SWHeight> sw_height;
    std::vector<Check> checks;
    std::vector<Discrepancy> discrepancies;

    [[nodiscard]] bool succeeded() const { return !error.has_value(); }
    [[nodiscard]] bool all_checks_pass() const;
    friend bool operator==(const SurfaceReport&, const SurfaceReport&) = default;
};

SurfaceReport run_surface(const SurfaceSpec& spec, const RunConfig& cfg);
/// Reports are in input order; a failing surface yields an error record, not an exception.
std::vector<SurfaceReport> run_pipeline(const RunConfig& cfg);

/// Every published-vs-computed comparison available for the report's surface kind.
std::vector<Discrepancy> published_comparisons(const SurfaceReport& report);
/// The comparisons whose computed value differs from the stated one.
std::vector<Discrepancy> paper_check(const SurfaceReport& report);

std::string emit_report(const std::vector<SurfaceReport>& reports, Format format);
/// Inverse of emit_report(..., Format::Json).
std::vector<SurfaceReport> parse_json_report(const std::string& text);

/// 2 if no surface succeeded, 1 if a surface that ran has a failed check, else 0
/// (error records alongside successful surfaces still give 0).
int exit_code(const std::vector<SurfaceReport>& reports);

} // namespace conf2::report
