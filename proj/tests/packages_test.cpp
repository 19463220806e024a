#include <gtest/gtest.h>

#include <random>

#include "m2j/diagnostics.hpp"
#include "m2j/packages.hpp"

using namespace m2j;

namespace {

// Every way of peeling table prefixes off the front of `name`.
void decompositions(std::string_view name, const PrefixTable& pt, std::vector<std::size_t>& lens,
                    std::vector<std::vector<std::size_t>>& out) {
    bool extended = false;
    for (const auto& [p, pkg] : pt.entries()) {
        if (name.starts_with(p)) {
            extended = true;
            lens.push_back(p.size());
            decompositions(name.substr(p.size()), pt, lens, out);
            lens.pop_back();
        }
    }
    if (!extended) out.push_back(lens);
}

// Longest-first: compare decompositions by their first prefix length, then the next.
std::string oracle_package(const std::string& name, const PrefixTable& pt) {
    std::vector<std::size_t> lens;
    std::vector<std::vector<std::size_t>> all;
    decompositions(name, pt, lens, all);
    auto best = *std::max_element(all.begin(), all.end());
    if (best.empty()) return pt.default_package();
    std::string out;
    std::size_t pos = 0;
    for (auto l : best) {
        std::string prefix = name.substr(pos, l);
        for (const auto& [p, pkg] : pt.entries())
            if (p == prefix) out += (out.empty() ? "" : ".") + pkg;
        pos += l;
    }
    return out;
}

}  // namespace

TEST(Packages, PrefixDecomposition) {
    PrefixTable pt;
    pt.add("Wem", "wem");
    pt.add("Te", "te");
    EXPECT_EQ(package_for_class("WemTeRegister", pt), "wem.te");
    EXPECT_EQ(package_for_class("WemStock", pt), "wem");
    EXPECT_EQ(package_for_class("Foo", PrefixTable{}), PrefixTable::kDefaultPackage);
    EXPECT_EQ(package_for_class("Foo", pt), "app");
}

TEST(Packages, LongestPrefixWins) {
    PrefixTable pt;
    pt.add("Te", "te");
    pt.add("TeM", "tem");
    EXPECT_EQ(package_for_class("TeMove", pt), "tem");
    EXPECT_EQ(package_for_class("TeMove", pt), oracle_package("TeMove", pt));
}

TEST(Packages, GreedyMatchesOracle) {
    PrefixTable pt;
    for (auto [p, k] : std::vector<std::pair<const char*, const char*>>{
             {"A", "a"}, {"Ab", "ab"}, {"B", "b"}, {"Bc", "bc"}, {"AbB", "abb"}, {"C", "c"}})
        pt.add(p, k);
    std::mt19937 rng(11);
    const std::string alphabet = "ABbCcx";
    for (int i = 0; i < 500; ++i) {
        std::string name;
        for (int k = 0, n = 1 + static_cast<int>(rng() % 7); k < n; ++k) name += alphabet[rng() % alphabet.size()];
        EXPECT_EQ(package_for_class(name, pt), oracle_package(name, pt)) << name;
    }
}

TEST(Packages, PrefixFile) {
    PrefixTable pt;
    pt.load_text("# prefixes\nWem=wem\n Te = te\n*=base.misc\n");
    EXPECT_EQ(pt.entries().size(), 2u);
    EXPECT_EQ(package_for_class("WemTeX", pt), "wem.te");
    EXPECT_EQ(package_for_class("Other", pt), "base.misc");
    EXPECT_THROW(pt.load_text("=x\n"), ConversionError);
    EXPECT_THROW(pt.load_text("novalue\n"), ConversionError);
    EXPECT_EQ(package_directory("wem.te"), std::filesystem::path("wem") / "te");
}

TEST(Imports, SetSemanticsAndSorting) {
    ImportRegistry reg("wem");
    reg.register_import("java.util.TreeMap");
    reg.register_import("base.util.CStd");
    reg.register_import("base.util.CStd");
    reg.register_import("java.lang.String");
    reg.register_import("wem.WemStock");
    reg.register_import("java.util.ArrayList");
    EXPECT_EQ(reg.emit_imports(),
              "import base.util.CStd;\nimport java.util.ArrayList;\nimport java.util.TreeMap;\n");
    std::string once = reg.emit_imports();
    EXPECT_EQ(once.find("import base.util.CStd;"), once.rfind("import base.util.CStd;"));
    EXPECT_FALSE(reg.is_emitted("java.lang.RuntimeException"));
    EXPECT_TRUE(reg.is_emitted("wem.te.WemTeX"));
    reg.reset("app");
    EXPECT_EQ(reg.emit_imports(), "");
}
