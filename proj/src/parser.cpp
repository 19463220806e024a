#include <algorithm>
#include <fstream>
#include <sstream>

#include "m2j/diagnostics.hpp"
#include "m2j/frontend.hpp"
#include "m2j/lexer.hpp"

namespace m2j {

SourceUnit SourceUnit::from_text(std::string path, std::string content) {
    SourceUnit s;
    s.expected_class = std::filesystem::path(path).stem().string();
    s.path = std::move(path);
    s.content = std::move(content);
    return s;
}

SourceUnit SourceUnit::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConversionError(code::ConfigError, "cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(path.string(), buf.str());
}

namespace {

const std::set<std::string, std::less<>> kBuiltinTypeWords = {"unsigned", "signed", "short", "long", "int",
                                                               "char",     "bool",   "double", "float", "void"};

const std::set<std::string, std::less<>> kStdTypes = {
    "std::string",        "std::vector",      "std::map",          "std::ostream",
    "std::istream",       "std::iostream",    "std::ostringstream", "std::stringstream",
    "std::istringstream", "std::exception",   "std::runtime_error", "std::logic_error",
    "std::invalid_argument", "std::out_of_range"};

const std::set<std::string, std::less<>> kKeywords = {
    "class", "struct", "enum",  "typedef", "public", "private", "protected", "virtual", "static", "const",
    "if",    "else",   "while", "for",     "return", "true",    "false",     "this",    "throw",  "try",
    "catch", "template", "using", "namespace", "operator", "friend", "new", "delete", "inline",
    "static_cast", "reinterpret_cast", "const_cast", "dynamic_cast", "break", "continue", "switch"};

class Parser {
public:
    Parser(const SourceUnit& src, const TypedefTable& builtins) : src_(src), toks_(tokenize(src.content)) {
        for (const auto& [name, _] : builtins.entries()) types_.insert(name);
        for (const auto& t : kStdTypes) types_.insert(t);
    }

    AstNode parse_unit() {
        AstNode tu(NodeKind::TranslationUnit);
        tu.name = src_.expected_class;
        while (!at_end()) tu.children.push_back(parse_top_level());
        tu.span.begin = 0;
        tu.span.end = src_.content.size();
        tu.span.line = 1;
        tu.span.col = 1;
        return tu;
    }

private:
    // ---- token helpers ---------------------------------------------------
    const Token& cur() const { return toks_[pos_]; }
    const Token& peek_tok(std::size_t ahead = 1) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    bool at_end() const { return cur().kind == TokenKind::End; }
    bool check(std::string_view p) const { return cur().is(p); }
    bool accept(std::string_view p) {
        if (!check(p)) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& msg, const Token* at = nullptr) const {
        const Token& t = at ? *at : cur();
        std::string near = t.kind == TokenKind::End ? std::string("end of input") : "'" + t.text + "'";
        throw ConversionError(code::SyntaxError, msg + " near " + near, t.line, t.col);
    }

    void expect(std::string_view p) {
        if (!accept(p)) fail("expected '" + std::string(p) + "'");
    }

    std::string expect_identifier() {
        if (cur().kind != TokenKind::Identifier || kKeywords.count(cur().text)) fail("expected identifier");
        return toks_[pos_++].text;
    }

    bool is_identifier(const Token& t) const {
        return t.kind == TokenKind::Identifier && !kKeywords.count(t.text);
    }

    SourceSpan start_span() const {
        SourceSpan s;
        s.begin = cur().offset;
        s.line = cur().line;
        s.col = cur().col;
        return s;
    }

    void finish(AstNode& n, SourceSpan s) const {
        s.end = pos_ > 0 ? toks_[pos_ - 1].end() : s.begin;
        n.span = s;
    }

    // Splits a ">>" token so that nested template argument lists close.
    void split_shift_right() {
        Token& t = toks_[pos_];
        Token second = t;
        t.text = ">";
        t.length = 1;
        second.text = ">";
        second.offset += 1;
        second.length = 1;
        second.col += 1;
        second.resource_marker = false;
        toks_.insert(toks_.begin() + static_cast<std::ptrdiff_t>(pos_) + 1, second);
    }

    // ---- types -----------------------------------------------------------
    std::string parse_qualified_name() {
        std::string name;
        accept("::");
        name = expect_identifier();
        while (check("::") && is_identifier(peek_tok())) {
            ++pos_;
            name += "::" + toks_[pos_++].text;
        }
        return name;
    }

    std::string parse_type() {
        std::string text;
        if (accept("const")) text = "const ";
        if (cur().kind == TokenKind::Identifier && kBuiltinTypeWords.count(cur().text)) {
            std::string words;
            while (cur().kind == TokenKind::Identifier && kBuiltinTypeWords.count(cur().text)) {
                if (!words.empty()) words += ' ';
                words += toks_[pos_++].text;
            }
            text += words;
        } else {
            std::string name = parse_qualified_name();
            text += name;
            if (check("<")) {
                if (!is_known_template(name)) fail("user-defined template '" + name + "' is not supported");
                ++pos_;
                text += '<';
                bool first = true;
                while (true) {
                    if (!first) text += ", ";
                    first = false;
                    text += parse_type();
                    if (check(">>")) split_shift_right();
                    if (accept(">")) break;
                    expect(",");
                }
                text += '>';
            }
        }
        if (accept("const")) {
            if (text.rfind("const ", 0) != 0) text = "const " + text;
        }
        while (check("*") || check("&")) text += toks_[pos_++].text;
        return text;
    }

    bool looks_like_declaration() {
        const Token& t = cur();
        if (t.kind != TokenKind::Identifier) return false;
        if (t.text == "const" || kBuiltinTypeWords.count(t.text)) return true;
        if (kKeywords.count(t.text)) return false;
        std::size_t save = pos_;
        bool ok = false;
        try {
            parse_type();
            ok = is_identifier(cur()) &&
                 (peek_tok().is(";") || peek_tok().is("=") || peek_tok().is("(") || peek_tok().is(")") ||
                  peek_tok().is(","));
        } catch (const ConversionError&) {
            ok = false;
        }
        pos_ = save;
        return ok;
    }

    // ---- top level -------------------------------------------------------
    AstNode parse_top_level() {
        if (check("template")) fail("user-defined templates are not supported");
        if (check("using") || check("namespace")) fail("namespaces are not part of MiniCxx");
        if (check("typedef")) return parse_typedef();
        if (check("enum")) return parse_enum();
        if (check("class") || check("struct")) return parse_class();
        return parse_function(Visibility::Public);
    }

    AstNode parse_typedef() {
        SourceSpan s = start_span();
        expect("typedef");
        AstNode n(NodeKind::TypedefDecl);
        n.type_text = parse_type();
        n.name = expect_identifier();
        expect(";");
        types_.insert(n.name);
        finish(n, s);
        return n;
    }

    AstNode parse_enum() {
        SourceSpan s = start_span();
        expect("enum");
        AstNode n(NodeKind::EnumDecl);
        n.name = expect_identifier();
        types_.insert(n.name);
        expect("{");
        long long next = 0;
        while (!check("}")) {
            Enumerator e;
            e.name = expect_identifier();
            if (accept("=")) {
                bool neg = accept("-");
                if (cur().kind != TokenKind::IntLiteral) fail("expected integer enumerator value");
                e.value = std::stoll(toks_[pos_++].text, nullptr, 0);
                if (neg) e.value = -e.value;
                e.explicit_value = true;
            } else {
                e.value = next;
            }
            next = e.value + 1;
            n.enumerators.push_back(e);
            if (!accept(",")) break;
        }
        expect("}");
        expect(";");
        if (n.enumerators.empty()) fail("empty enum");
        finish(n, s);
        return n;
    }

    AstNode parse_class() {
        SourceSpan s = start_span();
        bool marker = cur().resource_marker;
        bool is_struct = cur().text == "struct";
        ++pos_;
        std::string name = expect_identifier();
        types_.insert(name);
        if (accept(";")) {
            AstNode fwd(NodeKind::ForwardDecl);
            fwd.name = name;
            fwd.is_struct = is_struct;
            finish(fwd, s);
            return fwd;
        }
        AstNode n(NodeKind::ClassDecl);
        n.name = name;
        n.is_struct = is_struct;
        n.resource_annotated = marker;
        if (accept(":")) {
            do {
                BaseSpec b;
                b.visibility = is_struct ? Visibility::Public : Visibility::Private;
                while (true) {
                    if (accept("virtual")) b.is_virtual = true;
                    else if (accept("public")) b.visibility = Visibility::Public;
                    else if (accept("protected")) b.visibility = Visibility::Protected;
                    else if (accept("private")) b.visibility = Visibility::Private;
                    else break;
                }
                b.name = parse_qualified_name();
                if (check("<")) fail("template base classes are not supported");
                n.bases.push_back(b);
            } while (accept(","));
        }
        expect("{");
        Visibility vis = is_struct ? Visibility::Public : Visibility::Private;
        while (!check("}")) {
            if (at_end()) fail("unterminated class body");
            if (check("public") || check("protected") || check("private")) {
                vis = cur().text == "public" ? Visibility::Public
                      : cur().text == "protected" ? Visibility::Protected
                                                   : Visibility::Private;
                ++pos_;
                expect(":");
                continue;
            }
            n.children.push_back(parse_member(name, vis));
        }
        expect("}");
        expect(";");
        finish(n, s);
        return n;
    }

    AstNode parse_member(const std::string& cls, Visibility vis) {
        if (check("typedef")) {
            AstNode t = parse_typedef();
            t.visibility = vis;
            return t;
        }
        if (check("enum")) {
            AstNode e = parse_enum();
            e.visibility = vis;
            return e;
        }
        if (check("friend") || check("template") || check("class") || check("struct"))
            fail("unsupported class member");
        SourceSpan s = start_span();
        bool is_virtual = false, is_static = false;
        while (true) {
            if (accept("virtual")) is_virtual = true;
            else if (accept("static")) is_static = true;
            else if (accept("inline")) {
            } else break;
        }
        if (check("~")) {
            ++pos_;
            if (expect_identifier() != cls) fail("destructor name does not match class");
            expect("(");
            expect(")");
            AstNode d(NodeKind::DtorDecl);
            d.name = "~" + cls;
            d.visibility = vis;
            d.is_virtual = is_virtual;
            if (!accept(";")) d.children.push_back(parse_block());
            finish(d, s);
            return d;
        }
        if (cur().text == cls && peek_tok().is("(")) {
            ++pos_;
            AstNode c(NodeKind::CtorDecl);
            c.name = cls;
            c.visibility = vis;
            parse_params(c);
            if (accept(":")) {
                do {
                    SourceSpan is = start_span();
                    AstNode init(NodeKind::Call);
                    AstNode callee(NodeKind::NameRef);
                    SourceSpan cs = start_span();
                    callee.name = parse_qualified_name();
                    finish(callee, cs);
                    init.children.push_back(std::move(callee));
                    expect("(");
                    parse_args(init);
                    finish(init, is);
                    c.children.push_back(std::move(init));
                } while (accept(","));
            }
            if (!accept(";")) c.children.push_back(parse_block());
            finish(c, s);
            return c;
        }
        std::string type = parse_type();
        std::string name = expect_identifier();
        if (check("(")) {
            AstNode m(NodeKind::MethodDecl);
            m.type_text = type;
            m.name = name;
            m.visibility = vis;
            m.is_virtual = is_virtual;
            m.is_static = is_static;
            parse_params(m);
            if (accept("const")) m.is_const = true;
            if (accept("=")) {
                if (cur().text != "0") fail("expected '0' for pure virtual method");
                ++pos_;
                m.is_pure = true;
                expect(";");
            } else if (!accept(";")) {
                m.children.push_back(parse_block());
            }
            finish(m, s);
            return m;
        }
        AstNode f(NodeKind::FieldDecl);
        f.type_text = type;
        f.name = name;
        f.visibility = vis;
        f.is_static = is_static;
        expect(";");
        finish(f, s);
        return f;
    }

    AstNode parse_function(Visibility vis) {
        SourceSpan s = start_span();
        bool is_static = accept("static");
        AstNode m(NodeKind::MethodDecl);
        m.type_text = parse_type();
        m.name = expect_identifier();
        m.visibility = vis;
        m.is_static = is_static;
        if (!check("(")) fail("expected declaration");
        parse_params(m);
        if (!accept(";")) m.children.push_back(parse_block());
        finish(m, s);
        return m;
    }

    void parse_params(AstNode& owner) {
        expect("(");
        if (check("void") && peek_tok().is(")")) ++pos_;
        if (!accept(")")) {
            do {
                SourceSpan s = start_span();
                AstNode p(NodeKind::ParamDecl);
                p.type_text = parse_type();
                if (is_identifier(cur())) p.name = toks_[pos_++].text;
                finish(p, s);
                owner.children.push_back(std::move(p));
            } while (accept(","));
            expect(")");
        }
    }

    // ---- statements ------------------------------------------------------
    AstNode parse_block() {
        SourceSpan s = start_span();
        expect("{");
        AstNode b(NodeKind::Block);
        while (!check("}")) {
            if (at_end()) fail("unterminated block");
            b.children.push_back(parse_statement());
        }
        expect("}");
        finish(b, s);
        return b;
    }

    AstNode parse_statement() {
        SourceSpan s = start_span();
        if (check("{")) return parse_block();
        if (accept("if")) {
            AstNode n(NodeKind::If);
            expect("(");
            n.children.push_back(parse_expression());
            expect(")");
            n.children.push_back(parse_statement());
            if (accept("else")) n.children.push_back(parse_statement());
            finish(n, s);
            return n;
        }
        if (accept("while")) {
            AstNode n(NodeKind::While);
            expect("(");
            n.children.push_back(parse_expression());
            expect(")");
            n.children.push_back(parse_statement());
            finish(n, s);
            return n;
        }
        if (accept("for")) {
            AstNode n(NodeKind::For);
            expect("(");
            if (!accept(";")) {
                n.for_parts |= kForInit;
                if (looks_like_declaration()) {
                    n.children.push_back(parse_var_decl());
                } else {
                    SourceSpan es = start_span();
                    AstNode e(NodeKind::ExprStmt);
                    e.children.push_back(parse_expression());
                    expect(";");
                    finish(e, es);
                    n.children.push_back(std::move(e));
                }
            }
            if (!check(";")) {
                n.for_parts |= kForCond;
                n.children.push_back(parse_expression());
            }
            expect(";");
            if (!check(")")) {
                n.for_parts |= kForStep;
                n.children.push_back(parse_expression());
            }
            expect(")");
            n.children.push_back(parse_statement());
            finish(n, s);
            return n;
        }
        if (accept("return")) {
            AstNode n(NodeKind::Return);
            if (!check(";")) n.children.push_back(parse_expression());
            expect(";");
            finish(n, s);
            return n;
        }
        if (accept("throw")) {
            AstNode n(NodeKind::Throw);
            if (!check(";")) n.children.push_back(parse_expression());
            expect(";");
            finish(n, s);
            return n;
        }
        if (accept("try")) {
            AstNode n(NodeKind::Try);
            n.children.push_back(parse_block());
            if (!check("catch")) fail("expected catch");
            while (check("catch")) {
                SourceSpan cs = start_span();
                ++pos_;
                AstNode c(NodeKind::Catch);
                expect("(");
                if (check(".")) {
                    expect(".");
                    expect(".");
                    expect(".");
                    c.type_text = "...";
                } else {
                    c.type_text = parse_type();
                    if (is_identifier(cur())) c.name = toks_[pos_++].text;
                }
                expect(")");
                c.children.push_back(parse_block());
                finish(c, cs);
                n.children.push_back(std::move(c));
            }
            finish(n, s);
            return n;
        }
        if (check("break") || check("continue") || check("switch") || check("do") || check("goto"))
            fail("statement not supported in MiniCxx");
        if (accept(";")) {
            AstNode n(NodeKind::ExprStmt);
            finish(n, s);
            return n;
        }
        if (looks_like_declaration()) return parse_var_decl();
        AstNode n(NodeKind::ExprStmt);
        n.children.push_back(parse_expression());
        expect(";");
        finish(n, s);
        return n;
    }

    AstNode parse_var_decl() {
        SourceSpan s = start_span();
        AstNode n(NodeKind::VarDeclStmt);
        n.type_text = parse_type();
        n.name = expect_identifier();
        if (accept("=")) {
            n.children.push_back(parse_assignment());
        } else if (accept("(")) {
            n.ctor_style_init = true;
            parse_args(n);
        }
        expect(";");
        finish(n, s);
        return n;
    }

    // ---- expressions -----------------------------------------------------
    AstNode parse_expression() { return parse_assignment(); }

    AstNode binary(NodeKind k, std::string op, AstNode lhs, AstNode rhs) {
        AstNode n(k);
        n.op = std::move(op);
        n.span.begin = lhs.span.begin;
        n.span.line = lhs.span.line;
        n.span.col = lhs.span.col;
        n.span.end = toks_[pos_ - 1].end();
        if (lhs.parenthesized) {
            // the '(' precedes the operand's own span
            n.span.begin = std::min(n.span.begin, paren_begin_.count(lhs.span.begin) ? paren_begin_[lhs.span.begin]
                                                                                         : lhs.span.begin);
        }
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        return n;
    }

    AstNode parse_assignment() {
        AstNode lhs = parse_binary(0);
        if (accept("=")) {
            AstNode rhs = parse_assignment();
            return binary(NodeKind::BinaryOp, "=", std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    static int precedence(const Token& t) {
        if (t.kind != TokenKind::Punct) return -1;
        const std::string& p = t.text;
        if (p == "||") return 0;
        if (p == "&&") return 1;
        if (p == "==" || p == "!=") return 2;
        if (p == "<" || p == "<=" || p == ">" || p == ">=") return 3;
        if (p == "<<" || p == ">>") return 4;
        if (p == "+" || p == "-") return 5;
        if (p == "*" || p == "/" || p == "%") return 6;
        return -1;
    }

    AstNode parse_binary(int min_prec) {
        AstNode lhs = parse_unary();
        while (true) {
            int prec = precedence(cur());
            if (prec < min_prec || prec < 0) break;
            std::string op = toks_[pos_++].text;
            AstNode rhs = parse_binary(prec + 1);
            NodeKind k = (op == "<<" || op == ">>") ? NodeKind::StreamShift : NodeKind::BinaryOp;
            lhs = binary(k, op, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    bool cast_ahead() {
        // at '(' : decide whether this is a C-style cast
        std::size_t save = pos_;
        ++pos_;
        bool known = false, ok = false;
        const Token& first = cur();
        if (first.kind == TokenKind::Identifier &&
            (kBuiltinTypeWords.count(first.text) || first.text == "const")) {
            known = true;
        } else if (is_identifier(first)) {
            std::size_t p2 = pos_;
            try {
                std::string n = parse_qualified_name();
                known = types_.count(n) > 0;
            } catch (const ConversionError&) {
            }
            pos_ = p2;
        }
        try {
            if (is_identifier(first) || known) {
                parse_type();
                if (check(")")) {
                    const Token& after = peek_tok();
                    bool starts_operand = after.kind == TokenKind::Identifier || after.kind == TokenKind::IntLiteral ||
                                          after.kind == TokenKind::FloatLiteral ||
                                          after.kind == TokenKind::CharLiteral ||
                                          after.kind == TokenKind::StringLiteral || after.is("(");
                    ok = known ? (starts_operand || after.is("!") || after.is("-")) : starts_operand;
                }
            }
        } catch (const ConversionError&) {
            ok = false;
        }
        pos_ = save;
        return ok;
    }

    AstNode parse_unary() {
        SourceSpan s = start_span();
        if (check("!") || check("-") || check("++") || check("--")) {
            AstNode n(NodeKind::UnaryOp);
            n.op = toks_[pos_++].text;
            n.children.push_back(parse_unary());
            finish(n, s);
            return n;
        }
        if (check("(") && cast_ahead()) {
            ++pos_;
            AstNode n(NodeKind::Cast);
            n.type_text = parse_type();
            expect(")");
            n.cast_style = CastStyle::CStyle;
            n.children.push_back(parse_unary());
            finish(n, s);
            return n;
        }
        return parse_postfix();
    }

    void parse_args(AstNode& n) {
        // '(' already consumed
        if (!accept(")")) {
            do n.children.push_back(parse_assignment());
            while (accept(","));
            expect(")");
        }
    }

    AstNode parse_postfix() {
        SourceSpan s = start_span();
        AstNode e = parse_primary();
        if (e.parenthesized) s.begin = paren_begin_.count(e.span.begin) ? paren_begin_[e.span.begin] : s.begin;
        while (true) {
            if (check("(")) {
                if (e.kind != NodeKind::NameRef || e.parenthesized) fail("call of non-name expression");
                ++pos_;
                AstNode c(NodeKind::Call);
                c.children.push_back(std::move(e));
                parse_args(c);
                finish(c, s);
                e = std::move(c);
            } else if (check(".") || check("->")) {
                ++pos_;
                std::string member = expect_identifier();
                if (accept("(")) {
                    AstNode c(NodeKind::MemberCall);
                    c.name = member;
                    c.children.push_back(std::move(e));
                    parse_args(c);
                    finish(c, s);
                    e = std::move(c);
                } else {
                    AstNode a(NodeKind::MemberAccess);
                    a.name = member;
                    a.children.push_back(std::move(e));
                    finish(a, s);
                    e = std::move(a);
                }
            } else if (accept("[")) {
                AstNode ix(NodeKind::Index);
                ix.children.push_back(std::move(e));
                ix.children.push_back(parse_expression());
                expect("]");
                finish(ix, s);
                e = std::move(ix);
            } else if (check("++") || check("--")) {
                AstNode u(NodeKind::UnaryOp);
                u.op = "post" + toks_[pos_++].text;
                u.children.push_back(std::move(e));
                finish(u, s);
                e = std::move(u);
            } else {
                break;
            }
        }
        return e;
    }

    AstNode parse_primary() {
        SourceSpan s = start_span();
        const Token& t = cur();
        auto literal = [&](LiteralKind k) {
            AstNode n(NodeKind::Literal);
            n.literal_kind = k;
            n.value = toks_[pos_++].text;
            finish(n, s);
            return n;
        };
        switch (t.kind) {
            case TokenKind::IntLiteral: return literal(LiteralKind::Int);
            case TokenKind::FloatLiteral: return literal(LiteralKind::Float);
            case TokenKind::CharLiteral: return literal(LiteralKind::Char);
            case TokenKind::StringLiteral: return literal(LiteralKind::String);
            default: break;
        }
        if (t.is("true") || t.is("false")) return literal(LiteralKind::Bool);
        if (t.is("this")) {
            ++pos_;
            AstNode n(NodeKind::NameRef);
            n.name = "this";
            finish(n, s);
            return n;
        }
        if (t.is("static_cast") || t.is("reinterpret_cast") || t.is("const_cast") || t.is("dynamic_cast")) {
            std::string which = toks_[pos_++].text;
            AstNode n(NodeKind::Cast);
            n.cast_style = which == "static_cast"        ? CastStyle::Static
                           : which == "reinterpret_cast" ? CastStyle::Reinterpret
                           : which == "const_cast"       ? CastStyle::Const
                                                         : CastStyle::Dynamic;
            expect("<");
            n.type_text = parse_type();
            if (check(">>")) split_shift_right();
            expect(">");
            expect("(");
            n.children.push_back(parse_expression());
            expect(")");
            finish(n, s);
            return n;
        }
        if (accept("(")) {
            AstNode inner = parse_expression();
            expect(")");
            if (!inner.parenthesized) paren_begin_[inner.span.begin] = s.begin;
            inner.parenthesized = true;
            return inner;
        }
        if (is_identifier(t) || t.is("::")) {
            AstNode n(NodeKind::NameRef);
            n.name = parse_qualified_name();
            finish(n, s);
            return n;
        }
        fail("expected expression");
    }

    const SourceUnit& src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string, std::less<>> types_;
    // inner-expression begin offset -> offset of its enclosing '('
    std::map<std::size_t, std::size_t> paren_begin_;
};

}  // namespace

AstNode parse_translation_unit(const SourceUnit& src, const TypedefTable& builtins) {
    Parser p(src, builtins);
    return p.parse_unit();
}

const AstNode& locate_primary_class(const AstNode& tu, std::string_view expected) {
    for (const auto& c : tu.children)
        if (c.kind == NodeKind::ClassDecl && c.name == expected) return c;
    throw ConversionError(code::PrimaryClassNotFound,
                          "no definition of class '" + std::string(expected) + "' in translation unit");
}

TypedefTable unit_typedefs(const AstNode& tu, const TypedefTable& builtins) {
    TypedefTable t = builtins;
    walk(tu, [&](const AstNode& n) {
        if (n.kind == NodeKind::TypedefDecl) t.add(n.name, n.type_text);
    });
    return t;
}

std::set<std::string, std::less<>> unit_enums(const AstNode& tu) {
    std::set<std::string, std::less<>> out;
    walk(tu, [&](const AstNode& n) {
        if (n.kind == NodeKind::EnumDecl) out.insert(n.name);
    });
    return out;
}

}  // namespace m2j
