#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "m2j/ast.hpp"
#include "m2j/class_model.hpp"
#include "m2j/diagnostics.hpp"
#include "m2j/packages.hpp"
#include "m2j/project_index.hpp"
#include "m2j/rules.hpp"
#include "m2j/types.hpp"

namespace m2j {

class SymbolRegistry {
public:
    SymbolRegistry() { enter_scope(); }

    void enter_scope() { scopes_.emplace_back(); }
    void leave_scope();
    std::size_t depth() const { return scopes_.size(); }

    // Throws DuplicateDeclaration when `name` is already bound in the innermost scope.
    void bind(const std::string& name, TypeBinding tb);
    // Throws UnboundName.
    const TypeBinding& lookup(std::string_view name) const;
    const TypeBinding* find(std::string_view name) const;

private:
    std::vector<std::map<std::string, TypeBinding, std::less<>>> scopes_;
};

// Enters a scope for its lifetime.
class ScopeGuard {
public:
    explicit ScopeGuard(SymbolRegistry& r) : r_(r) { r_.enter_scope(); }
    ~ScopeGuard() { r_.leave_scope(); }
    ScopeGuard(const ScopeGuard&) = delete;
    ScopeGuard& operator=(const ScopeGuard&) = delete;

private:
    SymbolRegistry& r_;
};

void bind_symbol(const std::string& name, TypeBinding tb, SymbolRegistry& syms);
const TypeBinding& lookup_symbol(std::string_view name, const SymbolRegistry& syms);

// Java classes of the hand-written base layer and the JDK that generated code
// refers to by simple name.
const std::map<std::string, std::string, std::less<>>& fixed_java_classes();

// Everything one file's conversion needs. Shared tables are read-only.
struct ConversionContext {
    ConversionContext(const RuleSet& r, const ProjectIndex& i, const PrefixTable& p)
        : rules(r), index(i), prefixes(p), typedefs(TypedefTable::builtin()) {}

    const RuleSet& rules;
    const ProjectIndex& index;
    const PrefixTable& prefixes;
    TypedefTable typedefs;
    std::set<std::string, std::less<>> enum_names;
    std::map<std::string, EnumModel, std::less<>> enums;
    std::map<std::string, std::string, std::less<>> enumerator_owner;  // RED -> Color
    std::set<std::string, std::less<>> unit_classes;

    std::string path;
    std::string package;
    ImportRegistry imports;
    DiagnosticList diagnostics;

    const ClassModel* cls = nullptr;
    SymbolRegistry syms;
    JavaType current_return;
    std::vector<std::string> catch_vars;

    void warn(const char* code, std::string message, const SourceSpan& at);
    // Registers the enums of a class model (names, qualified names, enumerators).
    void add_enums(const std::vector<EnumModel>& enums, std::string_view owner);
    CxxType cxx_type(std::string_view text) const;
};

// Default C++ -> Java type map. Registers whatever import the Java type needs.
JavaType map_java_type(const CxxType& t, ConversionContext& ctx);
TypeBinding bind_type(std::string_view cxx_text, ConversionContext& ctx);

// Instantiates a template and drops the parentheses the template puts around
// an "expr" placeholder when the substituted text is already atomic.
std::string instantiate_elided(const RuleSet& rs, std::string_view name, const std::string& expr, bool expr_atomic,
                               const std::string& type = {});

// Converts `e` to `target` the way Java needs it: int2bool / bool2int,
// asNum / forNum, gen_cast for narrowing. Widening stays implicit.
EmittedExpr coerce(EmittedExpr e, const JavaType& target, ConversionContext& ctx);

EmittedExpr transpile_expression(const AstNode& e, std::optional<JavaType> preferred, ConversionContext& ctx);

// Java lines for one statement at nesting depth `depth` (4 spaces per level),
// each ending in '\n'.
std::string transpile_statement(const AstNode& s, ConversionContext& ctx, int depth = 0);
// Statements of a block body, resource declarations turned into try-with-resources.
std::string transpile_block_body(const std::vector<AstNode>& stmts, ConversionContext& ctx, int depth);

// Constant-operand boolean rewrites applied bottom-up until nothing changes.
// `is_boolean` decides whether an operand has Java type boolean.
AstNode simplify_boolean(const AstNode& e, const std::function<bool(const AstNode&)>& is_boolean);
bool side_effect_free(const AstNode& e);

// One compilation unit: package line, imports, the type.
std::string transpile_class(const ClassModel& c, ConversionContext& ctx);

}  // namespace m2j
