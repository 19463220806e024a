#include <gtest/gtest.h>

#include "m2j/analyzer.hpp"
#include "support.hpp"

using namespace m2j;
using namespace m2j::testing;

namespace {

const char* kIndex =
    "[dao-roots]\nDbRecord\n[chain-root]\nChain\n[hierarchy]\nSomeDAO: DbRecord\nOtherDAO: DbRecord\n";

IdiomCounts scan_text(const std::string& cls, const std::string& text, std::string_view index = kIndex) {
    ProjectIndex idx;
    idx.load_text(index);
    return scan_unit(SourceUnit::from_text(cls + ".cpp", text), idx);
}

std::vector<fs::path> corpus_sources() { return collect_sources(corpus_dir() / "src"); }

ProjectIndex corpus_index() {
    ProjectIndex idx;
    idx.load_file(corpus_dir() / "index.txt");
    return idx;
}

}  // namespace

TEST(AnalyzerExamples, DaoPlusPlainBaseIsDaoOther) {
    IdiomCounts c = scan_text("Bar", "class Foo { };\nclass Bar : public Foo, public SomeDAO { };\n");
    EXPECT_EQ(c.multiple_inheritance, 1);
    EXPECT_EQ(c.mi_dao_other, 1);
    EXPECT_EQ(c.mi_chain_other + c.mi_chain_dao + c.mi_multiple, 0);
    EXPECT_EQ(c.single_base, 0);
}

TEST(AnalyzerExamples, EmptyClassCountsNothingButItself) {
    IdiomCounts c = scan_text("Foo", "class Foo { };\n");
    IdiomCounts want;
    want.files = 1;
    want.classes = 1;
    want.loc = 1;
    EXPECT_EQ(c, want);
}

TEST(AnalyzerExamples, CastIntToEnumIsOneCrossing) {
    IdiomCounts c = scan_text("Paint",
                              "enum Color { RED, GREEN };\n"
                              "class Paint {\npublic:\n    void set() { Color col; col = (Color) 42; }\n};\n");
    EXPECT_EQ(c.enum_int_assignments, 1);
}

TEST(AnalyzerExamples, TwoPlainBasesAreMultiple) {
    IdiomCounts c = scan_text("Z", "class A { };\nclass B { };\nclass Z : public A, public B { };\n");
    EXPECT_EQ(c.single_base, 0);
    EXPECT_EQ(c.mi_multiple, 1);
}

TEST(AnalyzerExamples, ChainWithDaoAndChainWithPlain) {
    EXPECT_EQ(scan_text("S", "class S : public Chain, public SomeDAO { };\n").mi_chain_dao, 1);
    EXPECT_EQ(scan_text("S", "class A { };\nclass S : public Chain, public A { };\n").mi_chain_other, 1);
}

TEST(AnalyzerExamples, StreamsThrowsAndCatches) {
    IdiomCounts c = scan_text("T",
                              "#include <iostream>\n#include <stdexcept>\n"
                              "class T {\npublic:\n"
                              "    void f(int x) {\n"
                              "        std::cout << x << std::endl;\n"
                              "        try { if (x) throw std::runtime_error(\"x\"); } catch (std::exception& e) { }\n"
                              "    }\n};\n");
    EXPECT_EQ(c.stream_io_uses, 1);
    EXPECT_EQ(c.throw_sites, 1);
    EXPECT_EQ(c.catch_sites, 1);
}

TEST(AnalyzerLoc, CommentsAndBlanksAreNotCode) {
    EXPECT_EQ(count_loc(""), 0);
    EXPECT_EQ(count_loc("\n\n   \n"), 0);
    EXPECT_EQ(count_loc("// a\n/* b\n c */\nint x;\n"), 1);
    EXPECT_EQ(count_loc("int x; // tail\n/* lead */ int y;\n"), 2);
    EXPECT_EQ(count_loc("const char* s = \"// not a comment\";\n"), 1);
    EXPECT_EQ(count_loc("char c = '/'; /* x */\n"), 1);
}

TEST(AnalyzerReport, EmptyInputIsAllZeros) {
    IdiomCounts zero;
    EXPECT_EQ(sum_counts({}), zero);
    std::string kv = kv_dump(zero);
    std::istringstream in(kv);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        EXPECT_EQ(line.substr(line.find('=')), "=0") << line;
    }
    EXPECT_EQ(lines, 15);
    AnalyzeResult r = run_analyze({}, ProjectIndex{});
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.totals, zero);
}

TEST(AnalyzerCorpus, MatchesHandCountedFixture) {
    AnalyzeResult r = run_analyze(corpus_sources(), corpus_index());
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(kv_dump(r.totals), slurp(corpus_dir() / "census" / "expected.kv"));
    EXPECT_EQ(r.report, slurp(corpus_dir() / "census" / "expected.txt"));
}

TEST(AnalyzerCorpus, SubRowsPartitionMultipleInheritance) {
    ProjectIndex idx = corpus_index();
    std::vector<fs::path> all = corpus_sources();
    std::mt19937 rng(20261015);
    for (int round = 0; round < 40; ++round) {
        std::vector<fs::path> pick;
        for (const auto& p : all)
            if (rng() % 2) pick.push_back(p);
        IdiomCounts t = run_analyze(pick, idx).totals;
        EXPECT_EQ(t.mi_dao_other + t.mi_chain_other + t.mi_chain_dao + t.mi_multiple, t.multiple_inheritance);
        EXPECT_LE(t.single_base + t.multiple_inheritance, t.classes);
        EXPECT_EQ(t.files, static_cast<long>(pick.size()));
    }
}

TEST(AnalyzerCorpus, TotalsAreSumOfFiles) {
    ProjectIndex idx = corpus_index();
    std::vector<IdiomCounts> per;
    for (const auto& p : corpus_sources()) per.push_back(scan_unit(SourceUnit::load(p), idx));
    EXPECT_EQ(sum_counts(per), run_analyze(corpus_sources(), idx).totals);
    EXPECT_EQ(aggregate_report(per), slurp(corpus_dir() / "census" / "expected.txt"));
}

TEST(AnalyzerCorpus, ClassCountsComposeFromStructureAndMethods) {
    ProjectIndex base = corpus_index();
    for (const auto& p : corpus_sources()) {
        SourceUnit src = SourceUnit::load(p);
        AstNode tu = parse_translation_unit(src, TypedefTable::builtin());
        ProjectIndex idx = index_with_unit(base, tu);
        ScanEnv env = scan_env_for(tu);
        const AstNode& cls = locate_primary_class(tu, src.expected_class);
        ClassModel c = build_class_model(cls, tu, idx);
        IdiomCounts sum = scan_structure(c, idx);
        for (const auto& m : c.methods) sum += scan_method(m, c, env);
        EXPECT_EQ(scan_class(c, idx, env), sum) << p;
        EXPECT_EQ(scan_structure(c, idx).classes, 1);
    }
}

TEST(AnalyzerCorpus, ReadOnlyAndIdempotent) {
    auto before = tree_of(corpus_dir() / "src");
    AnalyzeResult a = run_analyze(corpus_sources(), corpus_index());
    AnalyzeResult b = run_analyze(corpus_sources(), corpus_index());
    EXPECT_EQ(a.report, b.report);
    EXPECT_EQ(a.totals, b.totals);
    EXPECT_EQ(tree_of(corpus_dir() / "src"), before);
}
