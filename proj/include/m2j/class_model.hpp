#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "m2j/ast.hpp"
#include "m2j/diagnostics.hpp"
#include "m2j/project_index.hpp"

namespace m2j {

enum class BaseCategory { Dao, Chain, InterfaceCandidate, Plain };
enum class InheritanceStrategy { Single, DaoHasA, ChainLink, DaoAndChain, InterfaceImpl, ManualFallback };

std::string_view category_name(BaseCategory c);
std::string_view strategy_name(InheritanceStrategy s);

struct ClassBase {
    std::string name;
    BaseCategory category = BaseCategory::Plain;
};

struct FieldModel {
    std::string name;
    std::string type_text;
    Visibility visibility = Visibility::Private;
    bool is_static = false;
    SourceSpan span;
};

struct ParamModel {
    std::string type_text;
    std::string name;
};

struct MethodModel {
    std::string name;
    std::string return_type;  // empty for constructors and destructors
    std::vector<ParamModel> params;
    std::vector<AstNode> initializers;  // constructor initializer list (Call nodes)
    std::optional<AstNode> body;        // Block
    Visibility visibility = Visibility::Private;
    bool is_virtual = false;
    bool is_pure = false;
    bool is_static = false;
    bool is_const = false;
    bool is_ctor = false;
    bool is_dtor = false;
    bool synthesized = false;
    // arguments for "m_oDAO = new Dao(...)"; taken from the DAO base initializer
    std::vector<AstNode> dao_init_args;
    SourceSpan span;
};

struct EnumModel {
    std::string name;
    std::vector<std::pair<std::string, long long>> entries;
    Visibility visibility = Visibility::Public;
};

// Semantic view of one class, the input of the concept rewriters and the
// transpiler. The rewriters fill the second block of fields.
struct ClassModel {
    std::string name;
    std::vector<ClassBase> bases;
    std::vector<FieldModel> fields;
    std::vector<MethodModel> methods;
    std::vector<EnumModel> enums;
    bool resource_annotated = false;
    bool is_struct = false;
    SourceSpan span;

    InheritanceStrategy strategy = InheritanceStrategy::Single;
    std::string extends;
    std::vector<std::string> implements;
    bool is_interface = false;
    std::string dao_type;            // m_oDAO declared in this class
    std::string inherited_dao_type;  // m_oDAO inherited from an ancestor
    bool chain_link = false;
    std::vector<std::string> unresolved_bases;  // MANUAL_FALLBACK leftovers
    DiagnosticList diagnostics;

    const MethodModel* find_method(std::string_view name) const;
    const FieldModel* find_field(std::string_view name) const;
    bool has_pure_methods() const;
};

inline constexpr const char* kDaoField = "m_oDAO";
inline constexpr const char* kChainMgmParam = "ChainMgm";

EnumModel enum_model_from(const AstNode& enum_decl);

// Base categories come from the index: a base reaching a DAO root is DAO, one
// reaching the chain root is CHAIN, one listed as interface is an interface
// candidate.
BaseCategory categorize_base(std::string_view base, const ProjectIndex& idx);

// `cls` is a ClassDecl inside `tu`. Top-level enums of the unit become nested
// enums of the class.
ClassModel build_class_model(const AstNode& cls, const AstNode& tu, const ProjectIndex& idx);

// True when a constructor body holds anything besides assignments to the
// class's own fields (plain or through this->).
bool body_beyond_member_init(const AstNode& body, const std::set<std::string>& fields);

// The index plus what the unit itself declares: hierarchy, members and
// resource markers of every class defined in `tu`.
ProjectIndex index_with_unit(const ProjectIndex& idx, const AstNode& tu);

}  // namespace m2j
