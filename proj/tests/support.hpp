// Helpers shared by the test binaries.
#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <cstdlib>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "m2j/driver.hpp"

namespace m2j::testing {

namespace fs = std::filesystem;

inline fs::path source_dir() { return fs::path(M2J_SOURCE_DIR); }
inline fs::path rules_dir() { return source_dir() / "rules"; }
inline fs::path corpus_dir() { return source_dir() / "corpus"; }

inline std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const fs::path& p, const std::string& text) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag = "m2j") {
        std::random_device rd;
        path_ = fs::temp_directory_path() / (tag + "-" + std::to_string(rd()) + "-" +
                                             std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    fs::path path_;
};

// The shipped rule pack with the corpus index and prefix table.
inline const Toolset& corpus_toolset() {
    static const Toolset ts =
        load_toolset(rules_dir(), corpus_dir() / "index.txt", corpus_dir() / "prefixes.txt");
    return ts;
}

// Shipped rule pack, caller-provided index and prefixes.
inline Toolset toolset_with(std::string_view index_text, std::string_view prefixes_text = "*=app\n") {
    Toolset ts = load_toolset(rules_dir(), corpus_dir() / "index.txt", corpus_dir() / "prefixes.txt");
    ts.index = ProjectIndex{};
    ts.index.load_text(index_text);
    ts.prefixes = PrefixTable{};
    ts.prefixes.load_text(prefixes_text);
    return ts;
}

// Converts a single-class source text; the class name is the file stem.
inline UnitResult convert_text(const std::string& cls, const std::string& text, const Toolset& ts) {
    return convert_unit(SourceUnit::from_text(cls + ".cpp", text), ts);
}

inline std::string java_of(const std::string& cls, const std::string& text, const Toolset& ts) {
    return convert_text(cls, text, ts).java;
}

inline bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

inline std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + needle.size())) ++n;
    return n;
}

// ---- emitted Java checks --------------------------------------------------

// Fully qualified names of every class defined by the .java files under the
// given roots, derived from their relative paths.
inline std::set<std::string> java_types_under(const std::vector<fs::path>& roots) {
    std::set<std::string> out;
    for (const auto& root : roots) {
        if (!fs::exists(root)) continue;
        for (const auto& e : fs::recursive_directory_iterator(root)) {
            if (e.path().extension() != ".java") continue;
            std::string rel = fs::relative(e.path(), root).replace_extension().generic_string();
            for (auto& ch : rel)
                if (ch == '/') ch = '.';
            out.insert(rel);
        }
    }
    return out;
}

// Java source with string/char literals and comments blanked out.
inline std::string java_code_only(const std::string& s) {
    std::string out = s;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out.compare(i, 2, "//") == 0) {
            while (i < out.size() && out[i] != '\n') out[i++] = ' ';
        } else if (out.compare(i, 2, "/*") == 0) {
            std::size_t e = out.find("*/", i + 2);
            e = e == std::string::npos ? out.size() : e + 2;
            for (; i < e; ++i)
                if (out[i] != '\n') out[i] = ' ';
            --i;
        } else if (out[i] == '"' || out[i] == '\'') {
            char q = out[i++];
            for (; i < out.size() && out[i] != q; ++i) {
                if (out[i] == '\\') out[i++] = ' ';
                out[i] = ' ';
            }
        }
    }
    return out;
}

// Structural validity of one emitted unit: balanced brackets, package line
// matching the directory, every referenced type declared, imported, in the
// same package or in java.lang. Returns human-readable problems.
inline std::vector<std::string> java_unit_issues(const fs::path& file, const fs::path& root,
                                                 const std::set<std::string>& known) {
    static const std::set<std::string> java_lang{
        "String",  "StringBuilder", "System",  "RuntimeException", "Throwable", "Integer", "Long",
        "Double",  "Character",     "Boolean", "Math",             "Object",    "Exception", "Override"};
    std::vector<std::string> issues;
    std::string code = java_code_only(slurp(file));
    std::string rel_dir = fs::relative(file.parent_path(), root).generic_string();
    std::string want_pkg = rel_dir == "." ? "" : rel_dir;
    for (auto& ch : want_pkg)
        if (ch == '/') ch = '.';

    std::vector<char> stack;
    for (char ch : code) {
        if (ch == '{' || ch == '(' || ch == '[') stack.push_back(ch);
        if (ch == '}' || ch == ')' || ch == ']') {
            char open = ch == '}' ? '{' : ch == ')' ? '(' : '[';
            if (stack.empty() || stack.back() != open) {
                issues.push_back("unbalanced '" + std::string(1, ch) + "'");
                return issues;
            }
            stack.pop_back();
        }
    }
    if (!stack.empty()) issues.push_back("unclosed brackets");

    std::smatch m;
    if (!std::regex_search(code, m, std::regex(R"(^\s*package ([\w.]+);)")) || m[1] != want_pkg)
        issues.push_back("package does not match directory '" + want_pkg + "'");

    std::set<std::string> visible(java_lang.begin(), java_lang.end());
    std::regex imp(R"(\bimport ([\w.]+)\.(\w+);)");
    for (auto it = std::sregex_iterator(code.begin(), code.end(), imp); it != std::sregex_iterator(); ++it) {
        std::string fq = (*it)[1].str() + "." + (*it)[2].str();
        bool jdk = fq.rfind("java.", 0) == 0;
        if (!jdk && !known.count(fq)) issues.push_back("import of unknown type " + fq);
        visible.insert((*it)[2]);
    }
    std::regex decl(R"(\b(?:class|interface|enum) (\w+))");
    for (auto it = std::sregex_iterator(code.begin(), code.end(), decl); it != std::sregex_iterator(); ++it)
        visible.insert((*it)[1]);
    for (const auto& fq : known) {
        auto dot = fq.rfind('.');
        std::string pkg = dot == std::string::npos ? "" : fq.substr(0, dot);
        if (pkg == want_pkg) visible.insert(fq.substr(dot + 1));
    }
    // capitalized identifiers not reached through '.', excluding enum constants
    std::regex ident(R"((^|[^.\w])([A-Z]\w*))");
    for (auto it = std::sregex_iterator(code.begin(), code.end(), ident); it != std::sregex_iterator(); ++it) {
        std::string name = (*it)[2];
        bool constant = std::all_of(name.begin(), name.end(), [](char c) { return !std::islower(static_cast<unsigned char>(c)); });
        if (constant || visible.count(name)) continue;
        issues.push_back("type " + name + " is neither imported nor visible");
        visible.insert(name);  // report once
    }
    return issues;
}

// ---- running the command-line tool -------------------------------------------

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

// Runs the built minicxx2j with `args` from working directory `cwd`.
inline CliRun run_cli(const std::string& args, const fs::path& cwd = source_dir()) {
    TempDir io("m2j-cli");
    fs::path out = io / "stdout", err = io / "stderr";
    std::string cmd = "cd " + shell_quote(cwd.string()) + " && " + shell_quote(M2J_CLI) + " " + args + " >" +
                      shell_quote(out.string()) + " 2>" + shell_quote(err.string());
    int status = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

// Relative path -> content for every regular file under `root`.
inline std::map<std::string, std::string> tree_of(const fs::path& root) {
    std::map<std::string, std::string> out;
    if (!fs::exists(root)) return out;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file()) out[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
    return out;
}

}  // namespace m2j::testing
