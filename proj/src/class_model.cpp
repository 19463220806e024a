#include "m2j/class_model.hpp"

#include <algorithm>

namespace m2j {

std::string_view category_name(BaseCategory c) {
    switch (c) {
        case BaseCategory::Dao: return "DAO";
        case BaseCategory::Chain: return "CHAIN";
        case BaseCategory::InterfaceCandidate: return "INTERFACE_CANDIDATE";
        case BaseCategory::Plain: return "PLAIN";
    }
    return "?";
}

std::string_view strategy_name(InheritanceStrategy s) {
    switch (s) {
        case InheritanceStrategy::Single: return "SINGLE";
        case InheritanceStrategy::DaoHasA: return "DAO_HAS_A";
        case InheritanceStrategy::ChainLink: return "CHAIN_LINK";
        case InheritanceStrategy::DaoAndChain: return "DAO_AND_CHAIN";
        case InheritanceStrategy::InterfaceImpl: return "INTERFACE_IMPL";
        case InheritanceStrategy::ManualFallback: return "MANUAL_FALLBACK";
    }
    return "?";
}

const MethodModel* ClassModel::find_method(std::string_view n) const {
    for (const auto& m : methods)
        if (!m.is_ctor && !m.is_dtor && m.name == n) return &m;
    return nullptr;
}

const FieldModel* ClassModel::find_field(std::string_view n) const {
    for (const auto& f : fields)
        if (f.name == n) return &f;
    return nullptr;
}

bool ClassModel::has_pure_methods() const {
    return std::any_of(methods.begin(), methods.end(), [](const MethodModel& m) { return m.is_pure; });
}

EnumModel enum_model_from(const AstNode& e) {
    EnumModel m;
    m.name = e.name;
    m.visibility = e.visibility;
    for (const auto& en : e.enumerators) m.entries.emplace_back(en.name, en.value);
    return m;
}

BaseCategory categorize_base(std::string_view base, const ProjectIndex& idx) {
    if (idx.is_dao(base)) return BaseCategory::Dao;
    if (idx.is_chain(base)) return BaseCategory::Chain;
    if (idx.is_interface(base)) return BaseCategory::InterfaceCandidate;
    return BaseCategory::Plain;
}

namespace {

MethodModel method_from(const AstNode& n) {
    MethodModel m;
    m.name = n.name;
    m.return_type = n.kind == NodeKind::MethodDecl ? n.type_text : "";
    m.visibility = n.visibility;
    m.is_virtual = n.is_virtual;
    m.is_pure = n.is_pure;
    m.is_static = n.is_static;
    m.is_const = n.is_const;
    m.is_ctor = n.kind == NodeKind::CtorDecl;
    m.is_dtor = n.kind == NodeKind::DtorDecl;
    m.span = n.span;
    for (const auto* p : n.params()) m.params.push_back({p->type_text, p->name});
    for (const auto* i : n.initializers()) m.initializers.push_back(*i);
    if (const AstNode* b = n.body()) m.body = *b;
    return m;
}

}  // namespace

ClassModel build_class_model(const AstNode& cls, const AstNode& tu, const ProjectIndex& idx) {
    ClassModel c;
    c.name = cls.name;
    c.is_struct = cls.is_struct;
    c.span = cls.span;
    c.resource_annotated = cls.resource_annotated || idx.is_resource(cls.name);
    for (const auto& b : cls.bases) c.bases.push_back({b.name, categorize_base(b.name, idx)});
    for (const auto& top : tu.children)
        if (top.kind == NodeKind::EnumDecl) c.enums.push_back(enum_model_from(top));
    for (const auto& m : cls.children) {
        switch (m.kind) {
            case NodeKind::FieldDecl: c.fields.push_back({m.name, m.type_text, m.visibility, m.is_static, m.span}); break;
            case NodeKind::MethodDecl:
            case NodeKind::CtorDecl:
            case NodeKind::DtorDecl: c.methods.push_back(method_from(m)); break;
            case NodeKind::EnumDecl: c.enums.push_back(enum_model_from(m)); break;
            default: break;
        }
    }
    return c;
}

bool body_beyond_member_init(const AstNode& body, const std::set<std::string>& fields) {
    for (const auto& s : body.children) {
        if (s.kind != NodeKind::ExprStmt || s.children.empty()) return true;
        const AstNode& e = s.children[0];
        if (e.kind != NodeKind::BinaryOp || e.op != "=") return true;
        const AstNode& lhs = e.children[0];
        if (lhs.kind == NodeKind::NameRef && fields.count(lhs.name)) continue;
        if (lhs.kind == NodeKind::MemberAccess && lhs.children[0].kind == NodeKind::NameRef &&
            lhs.children[0].name == "this" && fields.count(lhs.name))
            continue;
        return true;
    }
    return false;
}

ProjectIndex index_with_unit(const ProjectIndex& idx, const AstNode& tu) {
    ProjectIndex out = idx;
    for (const auto& top : tu.children) {
        if (top.kind != NodeKind::ClassDecl) continue;
        auto& bases = out.hierarchy[top.name];
        bases.clear();
        for (const auto& b : top.bases) bases.push_back(b.name);
        if (top.resource_annotated) out.resource_classes.insert(top.name);
        auto& members = out.members[top.name];
        members.clear();
        for (const auto& m : top.children) {
            if (m.kind == NodeKind::FieldDecl) {
                members.push_back(MemberSig{m.name, false, {}, m.type_text});
            } else if (m.kind == NodeKind::MethodDecl) {
                MemberSig s{m.name, true, {}, m.type_text};
                for (const auto* p : m.params()) s.params.push_back(p->type_text);
                members.push_back(std::move(s));
            }
        }
    }
    out.check_acyclic();
    return out;
}

}  // namespace m2j
