#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "m2j/types.hpp"

namespace m2j {

// Named text template with {{symbol}} placeholders, e.g.
//   gen_cast:=(({{type}}) ({{expr}}))
struct Template {
    std::string name;
    std::string body;

    std::vector<std::string> placeholders() const;
};

// "atoi, base.util.CStd, parseIntC". Matching is by name only.
struct FreeFunctionRule {
    std::string cxx_name;
    std::string java_location;  // package-qualified class
    std::string java_name;      // empty: keep cxx_name
    bool third_column = false;  // written with a (possibly empty) third column

    std::string java_class() const;  // last component of java_location
    std::string effective_name() const { return java_name.empty() ? cxx_name : java_name; }
};

struct CxxSignature {
    std::string name;                 // "find", "operator[]"
    std::vector<std::string> params;  // canonical, type variables left as written
    std::string result;
};

struct JavaSignature {
    std::string result;    // "int", "T"
    std::string receiver;  // "String", "ArrayList<T>"
    std::vector<std::string> params;
};

enum RuleFlag : unsigned {
    kStaticCall = 1u,           // receiver discarded; $0 is invalid
    kNeedsNarrowingCheck = 2u,  // report a narrowing site
};

// One row of the member-expression table:
//   class, signature-with-trailing-return, java-signature, output[, flags][, imports]
struct MemberExprRule {
    std::string cxx_class;                // as written, "std::map<KEY, VAL>"
    std::string class_key;                // "std::map"
    std::vector<std::string> type_vars;   // "KEY", "VAL"
    std::string cxx_signature_text;
    CxxSignature cxx;
    std::string java_signature_text;
    JavaSignature java;
    std::string output;                   // "$0.indexOf($1, $2)"
    std::vector<std::string> extra_columns;
    unsigned flags = 0;
    std::vector<std::string> imports;
    int line = 0;

    std::size_t arity() const { return cxx.params.size(); }
};

struct MemberRuleKey {
    std::string class_key;
    std::string method;
    std::size_t arity = 0;

    auto operator<=>(const MemberRuleKey&) const = default;
};

class RuleSet {
public:
    std::map<std::string, Template, std::less<>> templates;
    std::map<std::string, FreeFunctionRule, std::less<>> free_functions;
    std::map<MemberRuleKey, std::vector<MemberExprRule>> member_rules;

    void load_templates_text(std::string_view text, std::string_view origin = "<templates>");
    void load_free_functions_text(std::string_view text, std::string_view origin = "<free-functions>");
    void load_member_rules_text(std::string_view text, const TypedefTable& tt,
                                std::string_view origin = "<member-rules>");

    bool has_class(std::string_view class_key) const;
    // First row declared for a class; its receiver column names the Java class.
    const MemberExprRule* class_exemplar(std::string_view class_key) const;
    std::size_t member_row_count() const;

    std::string serialize_templates() const;
    std::string serialize_free_functions() const;
    std::string serialize_member_rules() const;

private:
    // Comment and blank lines are kept verbatim so serialization reproduces the files.
    struct MemberRowRef {
        MemberRuleKey key;
        std::size_t index;
    };
    struct Verbatim {
        std::string text;
    };
    std::vector<std::variant<Verbatim, std::string>> template_layout_;  // or template name
    std::vector<std::variant<Verbatim, std::string>> free_fn_layout_;   // or cxx name
    std::vector<std::variant<Verbatim, MemberRowRef>> member_layout_;
};

// Joins physical lines ending in a backslash with the following line.
// Returns (logical line, first physical line number) pairs.
std::vector<std::pair<std::string, int>> join_continuations(std::string_view text);

// Throws ConfigError when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);

// True when `text` is a single Java primary/postfix chain (name, literal, call,
// member or index access) that needs no parentheses as an operand.
bool java_text_is_atomic(std::string_view text);

// Drops the outer parentheses of a fully wrapped expression text.
std::string strip_outer_parens(const std::string& text);

// Reads the three rule files. Typedefs canonicalize the parameter columns.
RuleSet load_rules(const std::filesystem::path& templates_file, const std::filesystem::path& free_fn_file,
                   const std::filesystem::path& member_file, const TypedefTable& tt = TypedefTable::builtin());

// Throws UnknownTemplate / MissingSubstitution.
std::string instantiate_template(const Template& t, const std::map<std::string, std::string>& subs);
std::string instantiate_template(const RuleSet& rs, std::string_view name,
                                 const std::map<std::string, std::string>& subs);

struct FreeFunctionMapping {
    std::string call_prefix;  // "CStd.parseIntC"
    std::string java_name;    // "parseIntC"
    std::string import;       // "base.util.CStd"
};

// std::nullopt is the NoMapping signal; callers decide how to report it.
std::optional<FreeFunctionMapping> map_free_function(const RuleSet& rs, std::string_view name);

struct RuleMatch {
    const MemberExprRule* rule = nullptr;
    std::map<std::string, CxxType> bindings;  // type variable -> receiver template argument
};

struct MemberArg {
    CxxType cxx;
    bool int_literal = false;
};

// Exact match on (class, name, arity, canonical parameter types). An integer
// literal argument also matches any integral non-char parameter. Returns
// nullopt when the receiver's class has no rows at all; throws NoRuleMatch when
// the class is mapped but no row fits, AmbiguousRule on a tie.
std::optional<RuleMatch> match_member_rule(const RuleSet& rs, const CxxType& receiver, std::string_view method,
                                           const std::vector<MemberArg>& args);

using JavaTypeMapper = std::function<JavaType(const CxxType&)>;

// Substitutes type variables in a Java type pattern; variables inside <...>
// become boxed names.
std::string substitute_java_type_vars(std::string_view pattern, const std::map<std::string, JavaType>& vars);

// Fills $0..$n and types the result from the row's Java signature.
EmittedExpr apply_member_rule(const RuleMatch& m, const EmittedExpr& receiver, const std::vector<EmittedExpr>& args,
                              const JavaTypeMapper& map_type);

// Java parameter type the row expects for argument i (0-based), if any.
std::optional<JavaType> rule_param_java_type(const RuleMatch& m, std::size_t i, const JavaTypeMapper& map_type);

// match + apply. Throws NoRuleMatch when nothing fits.
EmittedExpr rewrite_member_expression(const RuleSet& rs, const EmittedExpr& receiver, const CxxType& cxx_class,
                                      std::string_view method, const std::vector<EmittedExpr>& args,
                                      const std::vector<CxxType>& arg_cxx_types, const JavaTypeMapper& map_type);

}  // namespace m2j
