#include "m2j/ast.hpp"

#include <sstream>

namespace m2j {

std::string_view kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::TranslationUnit: return "TranslationUnit";
        case NodeKind::ClassDecl: return "ClassDecl";
        case NodeKind::ForwardDecl: return "ForwardDecl";
        case NodeKind::EnumDecl: return "EnumDecl";
        case NodeKind::TypedefDecl: return "TypedefDecl";
        case NodeKind::FieldDecl: return "FieldDecl";
        case NodeKind::MethodDecl: return "MethodDecl";
        case NodeKind::CtorDecl: return "CtorDecl";
        case NodeKind::DtorDecl: return "DtorDecl";
        case NodeKind::ParamDecl: return "ParamDecl";
        case NodeKind::Block: return "Block";
        case NodeKind::If: return "If";
        case NodeKind::While: return "While";
        case NodeKind::For: return "For";
        case NodeKind::Return: return "Return";
        case NodeKind::ExprStmt: return "ExprStmt";
        case NodeKind::VarDeclStmt: return "VarDeclStmt";
        case NodeKind::Throw: return "Throw";
        case NodeKind::Try: return "Try";
        case NodeKind::Catch: return "Catch";
        case NodeKind::BinaryOp: return "BinaryOp";
        case NodeKind::UnaryOp: return "UnaryOp";
        case NodeKind::Call: return "Call";
        case NodeKind::MemberCall: return "MemberCall";
        case NodeKind::MemberAccess: return "MemberAccess";
        case NodeKind::Index: return "Index";
        case NodeKind::Cast: return "Cast";
        case NodeKind::Literal: return "Literal";
        case NodeKind::NameRef: return "NameRef";
        case NodeKind::StreamShift: return "StreamShift";
    }
    return "?";
}

bool is_expression(NodeKind k) {
    switch (k) {
        case NodeKind::BinaryOp:
        case NodeKind::UnaryOp:
        case NodeKind::Call:
        case NodeKind::MemberCall:
        case NodeKind::MemberAccess:
        case NodeKind::Index:
        case NodeKind::Cast:
        case NodeKind::Literal:
        case NodeKind::NameRef:
        case NodeKind::StreamShift:
            return true;
        default:
            return false;
    }
}

bool is_statement(NodeKind k) {
    switch (k) {
        case NodeKind::Block:
        case NodeKind::If:
        case NodeKind::While:
        case NodeKind::For:
        case NodeKind::Return:
        case NodeKind::ExprStmt:
        case NodeKind::VarDeclStmt:
        case NodeKind::Throw:
        case NodeKind::Try:
            return true;
        default:
            return false;
    }
}

std::string_view visibility_name(Visibility v) {
    switch (v) {
        case Visibility::Public: return "public";
        case Visibility::Protected: return "protected";
        case Visibility::Private: return "private";
    }
    return "private";
}

const AstNode* AstNode::body() const {
    if (!children.empty() && children.back().kind == NodeKind::Block) return &children.back();
    return nullptr;
}

std::vector<const AstNode*> AstNode::params() const {
    std::vector<const AstNode*> out;
    for (const auto& c : children)
        if (c.kind == NodeKind::ParamDecl) out.push_back(&c);
    return out;
}

std::vector<const AstNode*> AstNode::initializers() const {
    std::vector<const AstNode*> out;
    if (kind != NodeKind::CtorDecl) return out;
    for (const auto& c : children)
        if (c.kind == NodeKind::Call) out.push_back(&c);
    return out;
}

bool structurally_equal(const AstNode& a, const AstNode& b) {
    if (a.kind != b.kind || a.name != b.name || a.op != b.op || a.type_text != b.type_text ||
        a.value != b.value || a.literal_kind != b.literal_kind || a.cast_style != b.cast_style ||
        a.visibility != b.visibility || a.bases != b.bases || a.enumerators != b.enumerators ||
        a.for_parts != b.for_parts || a.is_virtual != b.is_virtual || a.is_pure != b.is_pure ||
        a.is_static != b.is_static || a.is_const != b.is_const || a.is_struct != b.is_struct ||
        a.parenthesized != b.parenthesized || a.ctor_style_init != b.ctor_style_init ||
        a.resource_annotated != b.resource_annotated || a.children.size() != b.children.size())
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(a.children[i], b.children[i])) return false;
    return true;
}

namespace {

void dump_into(std::ostringstream& os, const AstNode& n, int depth) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << kind_name(n.kind);
    if (!n.name.empty()) os << " name=" << n.name;
    if (!n.op.empty()) os << " op=" << n.op;
    if (!n.type_text.empty()) os << " type=" << n.type_text;
    if (!n.value.empty()) os << " value=" << n.value;
    for (const auto& b : n.bases) os << " base=" << visibility_name(b.visibility) << ':' << b.name;
    for (const auto& e : n.enumerators) os << ' ' << e.name << '=' << e.value;
    if (n.parenthesized) os << " (paren)";
    os << '\n';
    for (const auto& c : n.children) dump_into(os, c, depth + 1);
}

}  // namespace

std::string dump_ast(const AstNode& n) {
    std::ostringstream os;
    dump_into(os, n, 0);
    return os.str();
}

}  // namespace m2j
