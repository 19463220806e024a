#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "m2j/diagnostics.hpp"
#include "m2j/rules.hpp"

using namespace m2j;

namespace {

const char* kCastTemplates =
    "# cast helpers\n"
    "gen_cast:=(({{type}}) ({{expr}}))\n"
    "bool2int:=(({{expr}})? 1: 0)\n"
    "int2bool:=(({{expr}}) != 0)\n";

const char* kStringRows =
    "std::string, operator[](unsigned long long) char,\\\n"
    "    char String(int), $0.charAt($1)\n"
    "std::string, find(std::string, unsigned long long) unsigned long long, int String(String, int), $0.indexOf($1, $2)\n"
    "std::string, find(std::string) unsigned long long, int String(String), $0.indexOf($1)\n"
    "std::string, find(char, unsigned long long) unsigned long long, \\\n"
    "    int String(char), $0.indexOf((int)$1, $2)\n";

CxxType ct(const std::string& t) { return resolve_canonical_type(t, TypedefTable::builtin()); }

JavaType map_simple(const CxxType& t) {
    const std::string& c = t.canonical;
    if (c == "std::string") return JavaType::string();
    if (c == "int") return JavaType::integer();
    if (c == "char") return JavaType::primitive("char");
    if (c == "bool") return JavaType::boolean();
    if (c == "unsigned long long" || c == "long") return JavaType::primitive("long");
    return JavaType::reference(c);
}

EmittedExpr name(const std::string& n, const std::string& cxx) {
    EmittedExpr e;
    e.text = n;
    e.cxx = ct(cxx);
    e.type = map_simple(e.cxx);
    return e;
}

RuleSet string_rules() {
    RuleSet rs;
    rs.load_templates_text(kCastTemplates);
    rs.load_member_rules_text(kStringRows, TypedefTable::builtin());
    return rs;
}

std::string rewrite(const RuleSet& rs, const EmittedExpr& recv, const std::string& method,
                    const std::vector<EmittedExpr>& args, JavaType* type = nullptr) {
    std::vector<CxxType> types;
    for (const auto& a : args) types.push_back(a.cxx);
    EmittedExpr out = rewrite_member_expression(rs, recv, recv.cxx, method, args, types, map_simple);
    if (type) *type = out.type;
    return out.text;
}

}  // namespace

TEST(Templates, CastHelperBodiesInstantiate) {
    RuleSet rs = string_rules();
    EXPECT_EQ(instantiate_template(rs, "gen_cast", {{"type", "int"}, {"expr", "x"}}), "((int) (x))");
    EXPECT_EQ(instantiate_template(rs, "bool2int", {{"expr", "f"}}), "((f)? 1: 0)");
    EXPECT_EQ(instantiate_template(rs, "int2bool", {{"expr", "42"}}), "((42) != 0)");
    EXPECT_EQ(rs.templates.at("int2bool").placeholders(), std::vector<std::string>{"expr"});
    EXPECT_EQ(rs.templates.at("gen_cast").placeholders(), (std::vector<std::string>{"type", "expr"}));
}

TEST(Templates, MissingSubstitutionAborts) {
    RuleSet rs = string_rules();
    try {
        instantiate_template(rs, "gen_cast", {{"type", "int"}});
        FAIL();
    } catch (const ConversionError& e) {
        EXPECT_EQ(e.code(), code::MissingSubstitution);
    }
    try {
        instantiate_template(rs, "nope", {});
        FAIL();
    } catch (const ConversionError& e) {
        EXPECT_EQ(e.code(), code::UnknownTemplate);
    }
}

TEST(Templates, OutputNeverKeepsPlaceholders) {
    RuleSet rs;
    rs.load_templates_text("a:={{x}}{{y}}{{x}}\nb:=plain\nc:=[{{ x }}]\n");
    std::map<std::string, std::string> subs{{"x", "{"}, {"y", "}"}};
    for (const auto& [n, t] : rs.templates) {
        std::string out = instantiate_template(t, subs);
        EXPECT_EQ(out.find("{{"), std::string::npos) << n;
    }
    EXPECT_EQ(instantiate_template(rs, "c", subs), "[{]");
}

TEST(Templates, LoadErrors) {
    RuleSet a;
    EXPECT_THROW(a.load_templates_text("x:=1\nx:=2\n"), ConversionError);
    try {
        RuleSet b;
        b.load_templates_text("x:=1\nx:=2\n", "t.rules");
    } catch (const ConversionError& e) {
        EXPECT_EQ(e.code(), code::DuplicateTemplateName);
        EXPECT_EQ(e.diagnostic().line, 2);
        EXPECT_EQ(e.diagnostic().path, "t.rules");
    }
    for (const char* bad : {"no separator\n", "x:=({{a)\n", "x:=({{a{{b}})\n", "x:={{}}\n"}) {
        RuleSet r;
        try {
            r.load_templates_text(bad);
            ADD_FAILURE() << bad;
        } catch (const ConversionError& e) {
            EXPECT_EQ(e.code(), code::RuleParseError) << bad;
        }
    }
}

TEST(MemberRules, StringRowsLoad) {
    RuleSet rs = string_rules();
    EXPECT_EQ(rs.member_row_count(), 4u);
    auto count = [&](const std::string& m, std::size_t arity) {
        auto it = rs.member_rules.find(MemberRuleKey{"std::string", m, arity});
        return it == rs.member_rules.end() ? 0u : it->second.size();
    };
    EXPECT_EQ(count("operator[]", 1), 1u);
    EXPECT_EQ(count("find", 1) + count("find", 2), 3u);
    const auto& sub = rs.member_rules.at(MemberRuleKey{"std::string", "operator[]", 1})[0];
    EXPECT_EQ(sub.java.result, "char");
    EXPECT_EQ(sub.java.receiver, "String");
    EXPECT_EQ(sub.java.params, std::vector<std::string>{"int"});
    EXPECT_EQ(sub.cxx.result, "char");
    EXPECT_EQ(sub.line, 1);
    EXPECT_EQ(rs.member_rules.at(MemberRuleKey{"std::string", "find", 2})[1].line, 5);
}

TEST(MemberRules, EmptyFile) {
    RuleSet rs;
    rs.load_member_rules_text("", TypedefTable::builtin());
    EXPECT_TRUE(rs.member_rules.empty());
    EXPECT_EQ(rs.serialize_member_rules(), "");
}

TEST(MemberRules, StringRowRewrites) {
    RuleSet rs = string_rules();
    EmittedExpr s = name("s", "std::string");
    JavaType ty;
    EXPECT_EQ(rewrite(rs, s, "operator[]", {name("i", "size_t")}, &ty), "s.charAt(i)");
    EXPECT_EQ(ty.name, "char");
    EXPECT_EQ(rewrite(rs, s, "find", {name("t", "std::string"), name("n", "size_t")}, &ty), "s.indexOf(t, n)");
    EXPECT_EQ(ty.name, "int");
    EXPECT_EQ(rewrite(rs, s, "find", {name("t", "std::string")}, &ty), "s.indexOf(t)");
    EXPECT_EQ(ty.name, "int");
    EXPECT_EQ(rewrite(rs, s, "find", {name("c", "char"), name("n", "size_t")}, &ty), "s.indexOf((int)c, n)");
    EXPECT_EQ(ty.name, "int");
}

TEST(MemberRules, NonAtomicArgumentsAreWrapped) {
    RuleSet rs = string_rules();
    EmittedExpr s = name("s", "std::string");
    EmittedExpr sum = name("a + b", "char");
    sum.atomic = false;
    EXPECT_EQ(rewrite(rs, s, "find", {sum, name("n", "size_t")}), "s.indexOf((int)(a + b), n)");
    EmittedExpr pos = name("n - 1", "size_t");
    pos.atomic = false;
    EXPECT_EQ(rewrite(rs, s, "operator[]", {pos}), "s.charAt(n - 1)");
}

TEST(MemberRules, UnknownClassIsNotAnError) {
    RuleSet rs = string_rules();
    EXPECT_FALSE(match_member_rule(rs, ct("Foo"), "find", {}).has_value());
}

TEST(MemberRules, MismatchIsNoRuleMatch) {
    RuleSet rs = string_rules();
    try {
        match_member_rule(rs, ct("std::string"), "find", {{ct("int"), false}});
        FAIL();
    } catch (const ConversionError& e) {
        EXPECT_EQ(e.code(), code::NoRuleMatch);
    }
    EXPECT_THROW(match_member_rule(rs, ct("std::string"), "rfind", {{ct("char"), false}}), ConversionError);
}

TEST(MemberRules, IntegerLiteralRelaxation) {
    RuleSet rs = string_rules();
    auto m = match_member_rule(rs, ct("std::string"), "operator[]", {{ct("int"), true}});
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->rule->output, "$0.charAt($1)");
    // non-literal int does not match unsigned long long
    EXPECT_THROW(match_member_rule(rs, ct("std::string"), "operator[]", {{ct("int"), false}}), ConversionError);
}

// Permuting parameter types of a row never matches unless the permutation is itself a row.
TEST(MemberRules, PermutedSignaturesDoNotMatch) {
    RuleSet rs;
    rs.load_member_rules_text(
        "Acct, put(int, std::string, char) void, void Acct(int, String, char), $0.put($1, $2, $3)\n"
        "Acct, mix(double, bool) int, int Acct(double, boolean), $0.mix($1, $2)\n"
        "Acct, mix(bool, double) long, long Acct(boolean, double), $0.mixr($1, $2)\n",
        TypedefTable::builtin());
    const std::vector<std::string> pool = {"int", "std::string", "char", "double", "bool", "long", "size_t"};
    std::mt19937 rng(7);
    int checked = 0;
    for (const auto& [key, rows] : rs.member_rules) {
        for (const auto& row : rows) {
            std::vector<std::string> params = row.cxx.params;
            std::sort(params.begin(), params.end());
            do {
                bool is_row = false;
                for (const auto& r : rows) is_row |= r.cxx.params == params;
                std::vector<MemberArg> args;
                for (const auto& p : params) args.push_back({ct(p), false});
                if (is_row) {
                    EXPECT_NO_THROW(match_member_rule(rs, ct("Acct"), key.method, args));
                } else {
                    EXPECT_THROW(match_member_rule(rs, ct("Acct"), key.method, args), ConversionError);
                    ++checked;
                }
            } while (std::next_permutation(params.begin(), params.end()));
            for (int k = 0; k < 50; ++k) {
                std::vector<std::string> rnd;
                for (std::size_t i = 0; i < row.arity(); ++i) rnd.push_back(ct(pool[rng() % pool.size()]).canonical);
                bool is_row = false;
                for (const auto& r : rows) is_row |= r.cxx.params == rnd;
                if (is_row) continue;
                std::vector<MemberArg> args;
                for (const auto& p : rnd) args.push_back({ct(p), false});
                EXPECT_THROW(match_member_rule(rs, ct("Acct"), key.method, args), ConversionError);
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(MemberRules, TemplateClassBindsTypeVariables) {
    RuleSet rs;
    rs.load_member_rules_text(
        "std::map<KEY, VAL>, find(KEY) VAL, VAL TreeMap<KEY, VAL>(KEY), $0.get($1), java.util.TreeMap\n"
        "std::vector<T>, push_back(const T&) void, void ArrayList<T>(T), $0.add($1), java.util.ArrayList\n"
        "std::vector<T>, size() unsigned long long, int ArrayList<T>(), $0.size(), java.util.ArrayList\n",
        TypedefTable::builtin());
    EmittedExpr m = name("m", "std::map<std::string, int>");
    JavaType ty;
    EXPECT_EQ(rewrite(rs, m, "find", {name("k", "std::string")}, &ty), "m.get(k)");
    EXPECT_EQ(ty.name, "int");
    EmittedExpr v = name("v", "std::vector<int>");
    EmittedExpr out = rewrite_member_expression(rs, v, v.cxx, "push_back", {name("x", "int")}, {ct("int")}, map_simple);
    EXPECT_EQ(out.text, "v.add(x)");
    EXPECT_EQ(out.required_imports, std::set<std::string>{"java.util.ArrayList"});
    EXPECT_THROW(rewrite(rs, v, "push_back", {name("s", "std::string")}), ConversionError);

    const auto* ex = rs.class_exemplar("std::map");
    ASSERT_NE(ex, nullptr);
    std::map<std::string, JavaType> vars{{"KEY", JavaType::string()}, {"VAL", JavaType::integer()}};
    EXPECT_EQ(substitute_java_type_vars(ex->java.receiver, vars), "TreeMap<String, Integer>");
    auto match = match_member_rule(rs, m.cxx, "find", {{ct("std::string"), false}});
    auto p0 = rule_param_java_type(*match, 0, map_simple);
    ASSERT_TRUE(p0.has_value());
    EXPECT_EQ(p0->name, "String");
    EXPECT_FALSE(rule_param_java_type(*match, 1, map_simple).has_value());
}

TEST(MemberRules, FlagsAndImports) {
    RuleSet rs;
    rs.load_member_rules_text(
        "Clock, now() long, long Clock(), Clock.now(), static-call, base.util.Clock\n"
        "Clock, at(int) char, char Clock(int), $0.at($1), needs-narrowing-check\n",
        TypedefTable::builtin());
    const auto& now = rs.member_rules.at(MemberRuleKey{"Clock", "now", 0})[0];
    EXPECT_EQ(now.flags, static_cast<unsigned>(kStaticCall));
    EXPECT_EQ(now.imports, std::vector<std::string>{"base.util.Clock"});
    EXPECT_EQ(rs.member_rules.at(MemberRuleKey{"Clock", "at", 1})[0].flags,
              static_cast<unsigned>(kNeedsNarrowingCheck));

    auto code_of = [](const char* text) -> std::string {
        try {
            RuleSet r;
            r.load_member_rules_text(text, TypedefTable::builtin());
        } catch (const ConversionError& e) {
            return e.code();
        }
        return "";
    };
    EXPECT_EQ(code_of("Clock, now() long, long Clock(), $0.now(), static-call\n"), code::RuleParseError);
    EXPECT_EQ(code_of("Clock, at(int) char, char Clock(int), $0.at($2)\n"), code::RuleParseError);
    EXPECT_EQ(code_of("Clock, at(int) char, char Clock(int), $0.at($1), bogus!flag\n"), code::RuleParseError);
    EXPECT_EQ(code_of("Clock, at(int) char, char Clock(int)\n"), code::RuleParseError);
    EXPECT_EQ(code_of("Clock, at(int), char Clock(int), $0.at($1)\n"), code::RuleParseError);
    EXPECT_EQ(code_of("Clock, at(int) char, char Clock(int), $0.at($1)\n"
                      "Clock, at(const int) long, long Clock(int), $0.at2($1)\n"),
              code::DuplicateExactSignature);
}

TEST(MemberRules, TypedefsCanonicalizeParameters) {
    TypedefTable tt = TypedefTable::builtin();
    tt.add("MyLen", "size_t");
    RuleSet rs;
    rs.load_member_rules_text("Buf, at(MyLen) char, char Buf(int), $0.at($1)\n", tt);
    EXPECT_EQ(rs.member_rules.at(MemberRuleKey{"Buf", "at", 1})[0].cxx.params,
              std::vector<std::string>{"unsigned long long"});
}

TEST(FreeFunctions, Mapping) {
    RuleSet rs;
    rs.load_free_functions_text("# C library\natoi, base.util.CStd, parseIntC\nabs, base.util.CStd,\nputs, base.util.CStd\n");
    auto m = map_free_function(rs, "atoi");
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->call_prefix, "CStd.parseIntC");
    EXPECT_EQ(m->java_name, "parseIntC");
    EXPECT_EQ(m->import, "base.util.CStd");
    EXPECT_EQ(map_free_function(rs, "abs")->call_prefix, "CStd.abs");
    EXPECT_EQ(map_free_function(rs, "puts")->call_prefix, "CStd.puts");
    EXPECT_FALSE(map_free_function(rs, "frobnicate").has_value());
}

TEST(FreeFunctions, Errors) {
    for (const char* bad : {"atoi\n", "atoi, CStd\n", "atoi, base.util.CStd, a, b\n", "atoi, base.util.CStd\natoi, x.Y\n"}) {
        RuleSet rs;
        EXPECT_THROW(rs.load_free_functions_text(bad), ConversionError) << bad;
    }
}

TEST(Serialization, RoundTripModuloJoining) {
    RuleSet rs = string_rules();
    std::string joined;
    for (const auto& [line, n] : join_continuations(kStringRows)) joined += line + "\n";
    EXPECT_EQ(rs.serialize_member_rules(), joined);
    EXPECT_EQ(rs.serialize_templates(), kCastTemplates);
    const char* ff = "# C library\natoi, base.util.CStd, parseIntC\n\nabs, base.util.CStd,\nputs, base.util.CStd\n";
    rs.load_free_functions_text(ff);
    EXPECT_EQ(rs.serialize_free_functions(), ff);
}

TEST(Serialization, ContinuationJoin) {
    auto lines = join_continuations("a, b,\\\n   c\nd \\\n e \\\n f\n");
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0].first, "a, b, c");
    EXPECT_EQ(lines[0].second, 1);
    EXPECT_EQ(lines[1].first, "d e f");
    EXPECT_EQ(lines[1].second, 3);
}

TEST(JavaText, Atomicity) {
    for (const char* a : {"x", "s.charAt(i)", "a.b.c(d + e)[1]", "\"a b\"", "'+'", "(a + b)", "42"})
        EXPECT_TRUE(java_text_is_atomic(a)) << a;
    for (const char* n : {"a + b", "(int) x", "!x", "(a) + (b)", "new Foo()", "-1"})
        EXPECT_FALSE(java_text_is_atomic(n)) << n;
}
