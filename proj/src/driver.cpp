#include "m2j/driver.hpp"

#include <algorithm>
#include <fstream>

#include "m2j/concepts.hpp"
#include "m2j/transpile.hpp"

namespace m2j {

void load_typedefs_text(std::string_view text, TypedefTable& tt, std::string_view origin) {
    for (const auto& [line, no] : join_continuations(text)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos || trim(t.substr(0, eq)).empty() || trim(t.substr(eq + 1)).empty())
            throw ConversionError(Diagnostic{Severity::Error, code::RuleParseError, std::string(origin), no, 1,
                                             "expected 'name = type'"});
        tt.add(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

Toolset load_toolset(const fs::path& rules_dir, const fs::path& index_file, const fs::path& prefixes_file) {
    if (!fs::is_directory(rules_dir))
        throw ConversionError(code::ConfigError, "rules directory not found: " + rules_dir.string());
    Toolset ts;
    fs::path td = rules_dir / "typedefs.rules";
    if (fs::exists(td)) load_typedefs_text(read_text_file(td), ts.typedefs, td.string());
    ts.rules = load_rules(rules_dir / "templates.rules", rules_dir / "free_functions.rules", rules_dir / "member.rules",
                          ts.typedefs);
    ts.index.load_file(index_file);
    ts.prefixes.load_file(prefixes_file);
    return ts;
}

UnitResult convert_unit(const SourceUnit& src, const Toolset& ts) {
    AstNode tu = parse_translation_unit(src, ts.typedefs);
    const AstNode& cls = locate_primary_class(tu, src.expected_class);
    ProjectIndex idx = index_with_unit(ts.index, tu);
    ClassModel cm = build_class_model(cls, tu, idx);
    cm = apply_concepts(std::move(cm), idx, &ts.rules);

    ConversionContext ctx(ts.rules, idx, ts.prefixes);
    ctx.path = src.path;
    ctx.typedefs = unit_typedefs(tu, ts.typedefs);
    ctx.enum_names = unit_enums(tu);
    for (const auto& top : tu.children) {
        if (top.kind == NodeKind::EnumDecl) ctx.add_enums({enum_model_from(top)}, "");
        if (top.kind != NodeKind::ClassDecl) continue;
        ctx.unit_classes.insert(top.name);
        for (const auto& m : top.children)
            if (m.kind == NodeKind::EnumDecl) ctx.add_enums({enum_model_from(m)}, top.name);
    }

    UnitResult out;
    out.class_name = cm.name;
    out.strategy = cm.strategy;
    out.span = cls.span;
    out.java = transpile_class(cm, ctx);
    out.package = ctx.package;
    out.diagnostics = cm.diagnostics;
    out.diagnostics.insert(out.diagnostics.end(), ctx.diagnostics.begin(), ctx.diagnostics.end());
    for (auto& d : out.diagnostics) {
        if (d.path.empty()) d.path = src.path;
        if (d.line == 0) {
            d.line = cls.span.line;
            d.col = cls.span.col;
        }
    }
    return out;
}

std::string_view status_name(FileStatus s) {
    switch (s) {
        case FileStatus::Ok: return "OK";
        case FileStatus::Replaced: return "REPLACED";
        case FileStatus::StaleReplace: return "STALE_REPLACE";
        case FileStatus::Error: return "ERROR";
    }
    return "?";
}

namespace {

Diagnostic located(Diagnostic d, const std::string& path) {
    if (d.path.empty()) d.path = path;
    if (d.line == 0) d.line = d.col = 1;
    return d;
}

std::string output_path(const std::string& package, const std::string& cls) {
    return (package_directory(package) / (cls + ".java")).generic_string();
}

}  // namespace

FileResult convert_file(const SourceUnit& src, const Toolset& ts, const std::optional<fs::path>& replace_dir) {
    FileResult r;
    r.source = src.path;
    r.class_name = src.expected_class;
    UnitResult u;
    try {
        u = convert_unit(src, ts);
    } catch (const ConversionError& e) {
        r.status = FileStatus::Error;
        r.diagnostics.push_back(located(e.diagnostic(), src.path));
        return r;
    }
    r.class_name = u.class_name;
    r.diagnostics = u.diagnostics;
    r.output = output_path(u.package, u.class_name);

    std::optional<fs::path> expected, manual;
    if (replace_dir) {
        fs::path e = *replace_dir / (u.class_name + ".expected.java");
        fs::path m = *replace_dir / (u.class_name + ".java");
        if (fs::exists(e) && fs::exists(m)) {
            expected = e;
            manual = m;
        }
    }
    if (expected) {
        if (normalize_space(read_text_file(*expected)) == normalize_space(u.java)) {
            r.status = FileStatus::Replaced;
            r.java = read_text_file(*manual);
        } else {
            r.status = FileStatus::StaleReplace;
            r.output.clear();
            r.diagnostics.push_back(located(
                Diagnostic{Severity::Error, code::StaleReplace, src.path, u.span.line, u.span.col,
                           "generated " + u.class_name + " no longer matches " + expected->filename().string() +
                               "; check the manual translation"},
                src.path));
        }
        return r;
    }
    if (u.strategy == InheritanceStrategy::ManualFallback) {
        r.status = FileStatus::Error;
        r.output.clear();
        r.diagnostics.push_back(located(Diagnostic{Severity::Error, code::ManualFallback, src.path, u.span.line, u.span.col,
                                                   "class " + u.class_name +
                                                       " needs manual conversion: no strategy resolves its bases"},
                                        src.path));
        return r;
    }
    r.java = std::move(u.java);
    return r;
}

std::vector<fs::path> collect_sources(const fs::path& input) {
    std::vector<fs::path> out;
    if (fs::is_regular_file(input)) return {input};
    if (!fs::is_directory(input)) throw ConversionError(code::ConfigError, "input not found: " + input.string());
    for (const auto& e : fs::recursive_directory_iterator(input))
        if (e.is_regular_file() && e.path().extension() == ".cpp") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

void write_file_atomically(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConversionError(code::ConfigError, "cannot write " + tmp.string());
        os << text;
        if (!os) throw ConversionError(code::ConfigError, "cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

RunResult run_transpile(const std::vector<fs::path>& sources, const Toolset& ts, const fs::path& out_dir,
                        const std::optional<fs::path>& replace_dir) {
    RunResult run;
    std::vector<fs::path> sorted = sources;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) {
        FileResult r;
        try {
            r = convert_file(SourceUnit::load(p), ts, replace_dir);
        } catch (const ConversionError& e) {
            r.source = p.generic_string();
            r.status = FileStatus::Error;
            r.diagnostics.push_back(located(e.diagnostic(), r.source));
        }
        run.files.push_back(std::move(r));
    }
    std::map<FileStatus, int> tally;
    std::string lines;
    for (const auto& r : run.files) {
        ++tally[r.status];
        if (r.status == FileStatus::Error || r.status == FileStatus::StaleReplace) run.exit_code = 1;
        if (!r.output.empty()) write_file_atomically(out_dir / r.output, r.java);
        lines += r.source + " " + std::string(status_name(r.status));
        if (!r.output.empty()) lines += " " + r.output;
        lines += "\n";
        for (const auto& d : r.diagnostics) lines += "  " + d.format() + "\n";
    }
    run.report = "conversion report\n";
    for (auto s : {FileStatus::Ok, FileStatus::Replaced, FileStatus::StaleReplace, FileStatus::Error})
        run.report += std::string(status_name(s)) + "=" + std::to_string(tally[s]) + "\n";
    run.report += "\n" + lines;
    write_file_atomically(out_dir / "conversion-report.txt", run.report);
    return run;
}

AnalyzeResult run_analyze(const std::vector<fs::path>& sources, const ProjectIndex& idx) {
    AnalyzeResult out;
    std::vector<fs::path> sorted = sources;
    std::sort(sorted.begin(), sorted.end());
    std::vector<IdiomCounts> counts;
    for (const auto& p : sorted) {
        try {
            counts.push_back(scan_unit(SourceUnit::load(p), idx));
        } catch (const ConversionError& e) {
            out.exit_code = 1;
            out.diagnostics.push_back(located(e.diagnostic(), p.generic_string()));
        }
    }
    out.totals = sum_counts(counts);
    out.report = aggregate_report(counts);
    return out;
}

}  // namespace m2j
