#include "m2j/packages.hpp"

#include <sstream>

#include "m2j/diagnostics.hpp"
#include "m2j/rules.hpp"
#include "m2j/types.hpp"

namespace m2j {

void PrefixTable::add(std::string prefix, std::string package) {
    if (prefix.empty()) throw ConversionError(code::ConfigError, "empty prefix");
    for (auto& e : entries_) {
        if (e.first == prefix) {
            e.second = std::move(package);
            return;
        }
    }
    entries_.emplace_back(std::move(prefix), std::move(package));
}

void PrefixTable::load_text(std::string_view text, std::string_view origin) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        std::string prefix = eq == std::string::npos ? "" : trim(t.substr(0, eq));
        std::string pkg = eq == std::string::npos ? "" : trim(t.substr(eq + 1));
        if (prefix.empty() || pkg.empty())
            throw ConversionError(Diagnostic{Severity::Error, code::ConfigError, std::string(origin), lineno, 1,
                                             "expected prefix=package"});
        if (prefix == "*") set_default_package(pkg);
        else add(prefix, pkg);
    }
}

void PrefixTable::load_file(const std::filesystem::path& path) { load_text(read_text_file(path), path.string()); }

std::string package_for_class(std::string_view name, const PrefixTable& pt) {
    std::string out;
    std::size_t pos = 0;
    while (pos < name.size()) {
        const std::pair<std::string, std::string>* best = nullptr;
        for (const auto& e : pt.entries())
            if (name.substr(pos).starts_with(e.first) && (!best || e.first.size() > best->first.size())) best = &e;
        if (!best) break;
        if (!out.empty()) out += '.';
        out += best->second;
        pos += best->first.size();
    }
    return out.empty() ? pt.default_package() : out;
}

std::filesystem::path package_directory(std::string_view package) {
    std::filesystem::path p;
    std::size_t start = 0;
    while (start <= package.size()) {
        auto dot = package.find('.', start);
        std::string_view part = package.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (!part.empty()) p /= std::string(part);
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return p;
}

std::string package_of(std::string_view fq) {
    auto dot = fq.rfind('.');
    return dot == std::string_view::npos ? std::string() : std::string(fq.substr(0, dot));
}

std::string simple_name(std::string_view fq) {
    auto dot = fq.rfind('.');
    return std::string(dot == std::string_view::npos ? fq : fq.substr(dot + 1));
}

void ImportRegistry::register_import(std::string fq) {
    fq = trim(fq);
    if (!fq.empty()) imports_.insert(std::move(fq));
}

bool ImportRegistry::is_emitted(std::string_view fq) const {
    std::string pkg = package_of(fq);
    return !pkg.empty() && pkg != "java.lang" && pkg != own_package_;
}

std::string ImportRegistry::emit_imports() const {
    std::string out;
    for (const auto& fq : imports_)
        if (is_emitted(fq)) out += "import " + fq + ";\n";
    return out;
}

}  // namespace m2j
