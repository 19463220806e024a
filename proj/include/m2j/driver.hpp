#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "m2j/analyzer.hpp"
#include "m2j/class_model.hpp"
#include "m2j/diagnostics.hpp"
#include "m2j/frontend.hpp"
#include "m2j/packages.hpp"
#include "m2j/project_index.hpp"
#include "m2j/rules.hpp"

namespace m2j {

namespace fs = std::filesystem;

// Read-only tables shared by every file of a run.
struct Toolset {
    RuleSet rules;
    ProjectIndex index;
    PrefixTable prefixes;
    TypedefTable typedefs = TypedefTable::builtin();
};

// Rules directory layout: templates.rules, free_functions.rules, member.rules
// and an optional typedefs.rules ("name = target" lines).
// Throws ConversionError (ConfigError, RuleParseError, IndexParseError).
Toolset load_toolset(const fs::path& rules_dir, const fs::path& index_file, const fs::path& prefixes_file);
void load_typedefs_text(std::string_view text, TypedefTable& tt, std::string_view origin = "<typedefs>");

struct UnitResult {
    std::string class_name;
    std::string package;
    std::string java;
    InheritanceStrategy strategy = InheritanceStrategy::Single;
    SourceSpan span;  // of the class
    DiagnosticList diagnostics;  // warnings
};

// parse -> primary class -> concepts -> Java text. Throws ConversionError.
UnitResult convert_unit(const SourceUnit& src, const Toolset& ts);

enum class FileStatus { Ok, Replaced, StaleReplace, Error };
std::string_view status_name(FileStatus s);

struct FileResult {
    std::string source;
    std::string class_name;
    FileStatus status = FileStatus::Ok;
    std::string output;  // relative path under the output directory, empty if nothing is written
    std::string java;    // text to write
    DiagnosticList diagnostics;
};

// Conversion plus the checked-replace decision; writes nothing.
FileResult convert_file(const SourceUnit& src, const Toolset& ts, const std::optional<fs::path>& replace_dir);

// .cpp files under `input` (or `input` itself), sorted.
std::vector<fs::path> collect_sources(const fs::path& input);

void write_file_atomically(const fs::path& path, const std::string& text);

struct RunResult {
    int exit_code = 0;
    std::vector<FileResult> files;
    std::string report;
};

// Converts every file, writes outputs and conversion-report.txt into out_dir.
RunResult run_transpile(const std::vector<fs::path>& sources, const Toolset& ts, const fs::path& out_dir,
                        const std::optional<fs::path>& replace_dir);

struct AnalyzeResult {
    int exit_code = 0;
    IdiomCounts totals;
    std::string report;
    DiagnosticList diagnostics;
};
AnalyzeResult run_analyze(const std::vector<fs::path>& sources, const ProjectIndex& idx);

}  // namespace m2j
