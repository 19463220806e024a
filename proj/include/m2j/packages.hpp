#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace m2j {

// Class-name prefixes ("Wem", "Te") mapped to package components.
class PrefixTable {
public:
    static constexpr const char* kDefaultPackage = "app";

    void add(std::string prefix, std::string package);
    void set_default_package(std::string pkg) { default_package_ = std::move(pkg); }
    const std::string& default_package() const { return default_package_; }
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    // "prefix=package.path" per line, '#' comments; "*=pkg" sets the fallback package.
    void load_text(std::string_view text, std::string_view origin = "<prefixes>");
    void load_file(const std::filesystem::path& path);

private:
    std::vector<std::pair<std::string, std::string>> entries_;
    std::string default_package_ = kDefaultPackage;
};

// Consumes the longest matching prefix repeatedly from the start of the name and
// joins the packages with '.'. No match at all gives the default package.
std::string package_for_class(std::string_view name, const PrefixTable& pt);

// "wem.te" -> "wem/te"
std::filesystem::path package_directory(std::string_view package);

// Qualified names needed by one compilation unit.
class ImportRegistry {
public:
    explicit ImportRegistry(std::string own_package = {}) : own_package_(std::move(own_package)) {}

    void register_import(std::string fq);
    template <typename Range>
    void register_all(const Range& r) {
        for (const auto& fq : r) register_import(fq);
    }

    const std::set<std::string>& imports() const { return imports_; }
    const std::string& own_package() const { return own_package_; }
    void reset(std::string own_package) {
        imports_.clear();
        own_package_ = std::move(own_package);
    }

    // One "import x.y.Z;" line per entry, sorted. java.lang and own-package
    // names are left out.
    std::string emit_imports() const;
    bool is_emitted(std::string_view fq) const;

private:
    std::set<std::string> imports_;
    std::string own_package_;
};

std::string package_of(std::string_view fq);
std::string simple_name(std::string_view fq);

}  // namespace m2j
