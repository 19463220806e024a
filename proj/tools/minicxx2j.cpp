// minicxx2j: MiniCxx to Java converter and idiom census.
#include <CLI11.hpp>

#include <iostream>

#include "m2j/driver.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;

int config_fault(const std::string& what) {
    std::cerr << "minicxx2j: " << what << "\n";
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convert MiniCxx classes to Java"};
    app.require_subcommand(1);

    std::string input, rules_dir, index_file, prefixes_file, out_dir, replace_dir;
    auto* tr = app.add_subcommand("transpile", "convert a file or every .cpp file of a directory");
    tr->add_option("input", input, "source file or directory")->required();
    tr->add_option("--rules", rules_dir, "rule pack directory")->required();
    tr->add_option("--index", index_file, "project index")->required();
    tr->add_option("--prefixes", prefixes_file, "class prefix to package table")->required();
    tr->add_option("--out", out_dir, "output directory")->required();
    tr->add_option("--replace-dir", replace_dir, "checked-replace entries");

    std::string snap_file;
    auto* sn = app.add_subcommand("snapshot", "print the generated Java of one file, for a checked-replace entry");
    sn->add_option("input", snap_file, "source file")->required()->check(CLI::ExistingFile);
    sn->add_option("--rules", rules_dir, "rule pack directory")->required();
    sn->add_option("--index", index_file, "project index")->required();
    sn->add_option("--prefixes", prefixes_file, "class prefix to package table")->required();

    bool kv = false;
    auto* an = app.add_subcommand("analyze", "count migration-relevant idioms");
    an->add_option("input", input, "source directory")->required();
    an->add_option("--index", index_file, "project index")->required();
    an->add_flag("--kv", kv, "print key=value counters instead of tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (sn->parsed()) {
            m2j::Toolset ts = m2j::load_toolset(rules_dir, index_file, prefixes_file);
            try {
                std::cout << m2j::convert_unit(m2j::SourceUnit::load(snap_file), ts).java;
            } catch (const m2j::ConversionError& e) {
                std::cerr << e.diagnostic().format() << "\n";
                return 1;
            }
            return 0;
        }
        std::vector<fs::path> sources = m2j::collect_sources(input);
        if (tr->parsed()) {
            std::optional<fs::path> replace;
            if (!replace_dir.empty()) {
                if (!fs::is_directory(replace_dir)) return config_fault("replace directory not found: " + replace_dir);
                replace = replace_dir;
            }
            m2j::Toolset ts = m2j::load_toolset(rules_dir, index_file, prefixes_file);
            m2j::RunResult run = m2j::run_transpile(sources, ts, out_dir, replace);
            for (const auto& f : run.files)
                for (const auto& d : f.diagnostics) std::cerr << d.format() << "\n";
            for (const auto& f : run.files)
                std::cout << f.source << ": " << m2j::status_name(f.status) << "\n";
            return run.exit_code;
        }
        m2j::ProjectIndex idx;
        idx.load_file(index_file);
        m2j::AnalyzeResult res = m2j::run_analyze(sources, idx);
        for (const auto& d : res.diagnostics) std::cerr << d.format() << "\n";
        std::cout << (kv ? m2j::kv_dump(res.totals) : res.report);
        return res.exit_code;
    } catch (const m2j::ConversionError& e) {
        return config_fault(e.diagnostic().format());
    } catch (const fs::filesystem_error& e) {
        return config_fault(e.what());
    }
}
