#include <sstream>

#include "m2j/frontend.hpp"

namespace m2j {

namespace {

class MiniCxxPrinter {
public:
    std::string run(const AstNode& n) {
        print(n, 0);
        return os_.str();
    }

private:
    void indent(int d) { os_ << std::string(static_cast<std::size_t>(d) * 4, ' '); }

    std::string expr(const AstNode& e) {
        std::string t = expr_inner(e);
        return e.parenthesized ? "(" + t + ")" : t;
    }

    std::string args(const AstNode& n, std::size_t from) {
        std::string out;
        for (std::size_t i = from; i < n.children.size(); ++i) {
            if (i > from) out += ", ";
            out += expr(n.children[i]);
        }
        return out;
    }

    std::string expr_inner(const AstNode& e) {
        switch (e.kind) {
            case NodeKind::BinaryOp:
            case NodeKind::StreamShift:
                return expr(e.children[0]) + " " + e.op + " " + expr(e.children[1]);
            case NodeKind::UnaryOp: {
                if (e.op.rfind("post", 0) == 0) return expr(e.children[0]) + e.op.substr(4);
                std::string operand = expr(e.children[0]);
                bool sep = !operand.empty() && (operand[0] == '-' || operand[0] == '+');
                return e.op + (sep ? " " : "") + operand;
            }
            case NodeKind::Call: return expr(e.children[0]) + "(" + args(e, 1) + ")";
            case NodeKind::MemberCall: return expr(e.children[0]) + "." + e.name + "(" + args(e, 1) + ")";
            case NodeKind::MemberAccess: return expr(e.children[0]) + "." + e.name;
            case NodeKind::Index: return expr(e.children[0]) + "[" + expr(e.children[1]) + "]";
            case NodeKind::Cast: {
                switch (e.cast_style) {
                    case CastStyle::CStyle: return "(" + e.type_text + ") " + expr(e.children[0]);
                    case CastStyle::Static: return "static_cast<" + e.type_text + ">(" + expr(e.children[0]) + ")";
                    case CastStyle::Reinterpret:
                        return "reinterpret_cast<" + e.type_text + ">(" + expr(e.children[0]) + ")";
                    case CastStyle::Const: return "const_cast<" + e.type_text + ">(" + expr(e.children[0]) + ")";
                    case CastStyle::Dynamic:
                        return "dynamic_cast<" + e.type_text + ">(" + expr(e.children[0]) + ")";
                }
                return {};
            }
            case NodeKind::Literal: return e.value;
            case NodeKind::NameRef: return e.name;
            default: return {};
        }
    }

    void params(const AstNode& n) {
        os_ << '(';
        bool first = true;
        for (const auto* p : n.params()) {
            if (!first) os_ << ", ";
            first = false;
            os_ << p->type_text;
            if (!p->name.empty()) os_ << ' ' << p->name;
        }
        os_ << ')';
    }

    // Statement on its own line(s) at depth d.
    void stmt(const AstNode& s, int d) {
        switch (s.kind) {
            case NodeKind::Block:
                indent(d);
                block_body(s, d);
                os_ << '\n';
                return;
            case NodeKind::If:
                indent(d);
                os_ << "if (" << expr(s.children[0]) << ")\n";
                stmt(s.children[1], d + 1);
                if (s.children.size() > 2) {
                    indent(d);
                    os_ << "else\n";
                    stmt(s.children[2], d + 1);
                }
                return;
            case NodeKind::While:
                indent(d);
                os_ << "while (" << expr(s.children[0]) << ")\n";
                stmt(s.children[1], d + 1);
                return;
            case NodeKind::For: {
                indent(d);
                std::size_t i = 0;
                os_ << "for (";
                if (s.for_parts & kForInit) os_ << inline_stmt(s.children[i++]);
                else os_ << ';';
                if (s.for_parts & kForCond) os_ << ' ' << expr(s.children[i++]);
                os_ << ';';
                if (s.for_parts & kForStep) os_ << ' ' << expr(s.children[i++]);
                os_ << ")\n";
                stmt(s.children[i], d + 1);
                return;
            }
            case NodeKind::Try:
                indent(d);
                os_ << "try ";
                block_body(s.children[0], d);
                for (std::size_t i = 1; i < s.children.size(); ++i) {
                    const auto& c = s.children[i];
                    os_ << " catch (" << c.type_text << (c.name.empty() ? "" : " " + c.name) << ") ";
                    block_body(c.children[0], d);
                }
                os_ << '\n';
                return;
            default:
                indent(d);
                os_ << inline_stmt(s) << '\n';
        }
    }

    std::string inline_stmt(const AstNode& s) {
        switch (s.kind) {
            case NodeKind::Return: return s.children.empty() ? "return;" : "return " + expr(s.children[0]) + ";";
            case NodeKind::Throw: return s.children.empty() ? "throw;" : "throw " + expr(s.children[0]) + ";";
            case NodeKind::ExprStmt: return s.children.empty() ? ";" : expr(s.children[0]) + ";";
            case NodeKind::VarDeclStmt: {
                std::string out = s.type_text + " " + s.name;
                if (s.ctor_style_init) out += "(" + args(s, 0) + ")";
                else if (!s.children.empty()) out += " = " + expr(s.children[0]);
                return out + ";";
            }
            default: return {};
        }
    }

    void block_body(const AstNode& b, int d) {
        os_ << "{\n";
        for (const auto& c : b.children) stmt(c, d + 1);
        indent(d);
        os_ << '}';
    }

    void print(const AstNode& n, int d) {
        switch (n.kind) {
            case NodeKind::TranslationUnit:
                for (const auto& c : n.children) print(c, d);
                return;
            case NodeKind::ForwardDecl:
                indent(d);
                os_ << (n.is_struct ? "struct " : "class ") << n.name << ";\n";
                return;
            case NodeKind::TypedefDecl:
                indent(d);
                os_ << "typedef " << n.type_text << ' ' << n.name << ";\n";
                return;
            case NodeKind::EnumDecl: {
                indent(d);
                os_ << "enum " << n.name << " {";
                for (std::size_t i = 0; i < n.enumerators.size(); ++i) {
                    const auto& e = n.enumerators[i];
                    os_ << (i ? ", " : " ") << e.name;
                    if (e.explicit_value) os_ << " = " << e.value;
                }
                os_ << " };\n";
                return;
            }
            case NodeKind::ClassDecl: {
                if (n.resource_annotated) {
                    indent(d);
                    os_ << "// @resource\n";
                }
                indent(d);
                os_ << (n.is_struct ? "struct " : "class ") << n.name;
                for (std::size_t i = 0; i < n.bases.size(); ++i) {
                    const auto& b = n.bases[i];
                    os_ << (i ? ", " : " : ") << (b.is_virtual ? "virtual " : "") << visibility_name(b.visibility)
                        << ' ' << b.name;
                }
                os_ << " {\n";
                for (const auto& m : n.children) {
                    indent(d);
                    os_ << visibility_name(m.visibility) << ":\n";
                    print(m, d + 1);
                }
                indent(d);
                os_ << "};\n";
                return;
            }
            case NodeKind::FieldDecl:
                indent(d);
                os_ << (n.is_static ? "static " : "") << n.type_text << ' ' << n.name << ";\n";
                return;
            case NodeKind::MethodDecl:
                indent(d);
                os_ << (n.is_virtual ? "virtual " : "") << (n.is_static ? "static " : "") << n.type_text << ' '
                    << n.name;
                params(n);
                if (n.is_const) os_ << " const";
                if (n.is_pure) os_ << " = 0;\n";
                else if (const AstNode* b = n.body()) {
                    os_ << ' ';
                    block_body(*b, d);
                    os_ << '\n';
                } else {
                    os_ << ";\n";
                }
                return;
            case NodeKind::CtorDecl: {
                indent(d);
                os_ << n.name;
                params(n);
                auto inits = n.initializers();
                for (std::size_t i = 0; i < inits.size(); ++i) os_ << (i ? ", " : " : ") << expr(*inits[i]);
                if (const AstNode* b = n.body()) {
                    os_ << ' ';
                    block_body(*b, d);
                    os_ << '\n';
                } else {
                    os_ << ";\n";
                }
                return;
            }
            case NodeKind::DtorDecl:
                indent(d);
                os_ << (n.is_virtual ? "virtual " : "") << n.name << "()";
                if (const AstNode* b = n.body()) {
                    os_ << ' ';
                    block_body(*b, d);
                    os_ << '\n';
                } else {
                    os_ << ";\n";
                }
                return;
            default:
                if (is_statement(n.kind)) stmt(n, d);
                else os_ << expr(n);
        }
    }

    std::ostringstream os_;
};

}  // namespace

std::string print_minicxx(const AstNode& n) { return MiniCxxPrinter().run(n); }

}  // namespace m2j
