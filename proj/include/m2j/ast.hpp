#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace m2j {

enum class NodeKind {
    TranslationUnit,
    ClassDecl,
    ForwardDecl,
    EnumDecl,
    TypedefDecl,
    FieldDecl,
    MethodDecl,
    CtorDecl,
    DtorDecl,
    ParamDecl,
    Block,
    If,
    While,
    For,
    Return,
    ExprStmt,
    VarDeclStmt,
    Throw,
    Try,
    Catch,
    BinaryOp,
    UnaryOp,
    Call,
    MemberCall,
    MemberAccess,
    Index,
    Cast,
    Literal,
    NameRef,
    StreamShift,
};

std::string_view kind_name(NodeKind k);
bool is_expression(NodeKind k);
bool is_statement(NodeKind k);

enum class Visibility { Public, Protected, Private };
enum class LiteralKind { Int, Float, Char, String, Bool };
enum class CastStyle { CStyle, Static, Reinterpret, Const, Dynamic };

std::string_view visibility_name(Visibility v);

struct SourceSpan {
    std::size_t begin = 0;  // byte offsets into the source, [begin, end)
    std::size_t end = 0;
    int line = 1;
    int col = 1;

    bool contains(const SourceSpan& inner) const {
        return begin <= inner.begin && inner.end <= end;
    }
};

struct BaseSpec {
    std::string name;
    Visibility visibility = Visibility::Private;
    bool is_virtual = false;

    bool operator==(const BaseSpec&) const = default;
};

struct Enumerator {
    std::string name;
    long long value = 0;
    bool explicit_value = false;

    bool operator==(const Enumerator&) const = default;
};

// Bits of AstNode::for_parts.
inline constexpr int kForInit = 1;
inline constexpr int kForCond = 2;
inline constexpr int kForStep = 4;

// One node of the MiniCxx syntax tree. Which payload fields are meaningful
// depends on `kind`; unused fields keep their defaults.
//
// Child layout by kind:
//   CtorDecl    ParamDecl*, Call* (member/base initializers), Block
//   MethodDecl  ParamDecl*, Block? (absent for declarations and pure virtuals)
//   DtorDecl    Block?
//   If          cond, then, else?
//   For         [init] [cond] [step] body  (presence given by for_parts)
//   Call        callee NameRef, args...
//   MemberCall  receiver, args...          (name = method)
//   MemberAccess receiver                  (name = member)
//   Index       receiver, index
//   VarDeclStmt initializer? or ctor args (ctor_style_init)
//   Try         Block, Catch+
//   Catch       Block                      (type_text "..." for catch-all)
struct AstNode {
    NodeKind kind = NodeKind::TranslationUnit;
    std::vector<AstNode> children;
    SourceSpan span;

    std::string name;
    std::string op;
    std::string type_text;
    std::string value;
    LiteralKind literal_kind = LiteralKind::Int;
    CastStyle cast_style = CastStyle::CStyle;
    Visibility visibility = Visibility::Private;
    std::vector<BaseSpec> bases;
    std::vector<Enumerator> enumerators;
    int for_parts = 0;

    bool is_virtual = false;
    bool is_pure = false;
    bool is_static = false;
    bool is_const = false;
    bool is_struct = false;
    bool parenthesized = false;
    bool ctor_style_init = false;
    bool resource_annotated = false;

    AstNode() = default;
    AstNode(NodeKind k, SourceSpan s = {}) : kind(k), span(s) {}

    const AstNode* body() const;  // trailing Block of Ctor/Method/Dtor/Catch, or nullptr
    std::vector<const AstNode*> params() const;
    std::vector<const AstNode*> initializers() const;  // CtorDecl only
};

// Compares kind, payload, and children recursively; spans are ignored.
bool structurally_equal(const AstNode& a, const AstNode& b);

// Indented one-node-per-line dump used in tests and debugging.
std::string dump_ast(const AstNode& n);

template <typename Fn>
void walk(const AstNode& n, Fn&& fn) {
    fn(n);
    for (const auto& c : n.children) walk(c, fn);
}

template <typename Fn>
void walk_mut(AstNode& n, Fn&& fn) {
    fn(n);
    for (auto& c : n.children) walk_mut(c, fn);
}

}  // namespace m2j
