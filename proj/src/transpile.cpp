#include "m2j/transpile.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

#include "m2j/concepts.hpp"

namespace m2j {

// ---- symbols -----------------------------------------------------------------

void SymbolRegistry::leave_scope() {
    if (!scopes_.empty()) scopes_.pop_back();
    if (scopes_.empty()) scopes_.emplace_back();
}

void SymbolRegistry::bind(const std::string& name, TypeBinding tb) {
    auto& top = scopes_.back();
    if (top.count(name)) throw ConversionError(code::DuplicateDeclaration, "'" + name + "' is already declared in this scope");
    top.emplace(name, std::move(tb));
}

const TypeBinding* SymbolRegistry::find(std::string_view name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
        auto f = it->find(name);
        if (f != it->end()) return &f->second;
    }
    return nullptr;
}

const TypeBinding& SymbolRegistry::lookup(std::string_view name) const {
    if (const TypeBinding* tb = find(name)) return *tb;
    throw ConversionError(code::UnboundName, "'" + std::string(name) + "' is not declared");
}

void bind_symbol(const std::string& name, TypeBinding tb, SymbolRegistry& syms) { syms.bind(name, std::move(tb)); }
const TypeBinding& lookup_symbol(std::string_view name, const SymbolRegistry& syms) { return syms.lookup(name); }

const std::map<std::string, std::string, std::less<>>& fixed_java_classes() {
    static const std::map<std::string, std::string, std::less<>> k = {
        {"Link", "base.chain.Link"},         {"ChainMgm", "base.chain.ChainMgm"},
        {"ChainBuilder", "base.chain.ChainBuilder"}, {"CStd", "base.util.CStd"},
        {"Closeable", "java.io.Closeable"},  {"PrintStream", "java.io.PrintStream"},
        {"InputStream", "java.io.InputStream"}};
    return k;
}

// ---- context -----------------------------------------------------------------

void ConversionContext::warn(const char* c, std::string message, const SourceSpan& at) {
    diagnostics.push_back(Diagnostic{Severity::Warning, c, path, at.line, at.col, std::move(message)});
}

void ConversionContext::add_enums(const std::vector<EnumModel>& list, std::string_view owner) {
    for (const auto& e : list) {
        enums[e.name] = e;
        enum_names.insert(e.name);
        if (!owner.empty()) enum_names.insert(std::string(owner) + "::" + e.name);
        for (const auto& [n, v] : e.entries) enumerator_owner[n] = e.name;
    }
}

CxxType ConversionContext::cxx_type(std::string_view text) const {
    return resolve_canonical_type(text, typedefs, &enum_names);
}

namespace {

std::string dotted(std::string_view s) {
    std::string out(s);
    for (std::size_t p; (p = out.find("::")) != std::string::npos;) out.replace(p, 2, ".");
    return out;
}

bool is_exception_class(std::string_view c) {
    return c == "std::exception" || c == "std::runtime_error" || c == "std::logic_error" ||
           c == "std::invalid_argument" || c == "std::out_of_range";
}

std::string int_type_name(std::string_view c) {
    if (c == "bool") return "boolean";
    if (c == "char" || c == "signed char" || c == "unsigned char") return "char";
    if (c == "short" || c == "unsigned short" || c == "int" || c == "unsigned int") return "int";
    if (c == "long" || c == "unsigned long" || c == "long long" || c == "unsigned long long") return "long";
    if (c == "double" || c == "float") return "double";
    if (c == "void") return "void";
    return {};
}

}  // namespace

JavaType map_java_type(const CxxType& t, ConversionContext& ctx) {
    if (t.empty()) return JavaType::unknown();
    const std::string& c = t.canonical;
    if (t.is_enum) {
        std::string n = dotted(c);
        auto top = c.substr(0, c.find("::"));
        if (c.find("::") != std::string::npos && (!ctx.cls || top != ctx.cls->name)) {
            std::string pkg = package_for_class(top, ctx.prefixes);
            if (pkg != ctx.package) ctx.imports.register_import(pkg + "." + top);
        }
        return JavaType::enumeration(n);
    }
    if (std::string p = int_type_name(c); !p.empty()) return JavaType::primitive(p);
    if (c == "std::string" || c == "char*") return JavaType::string();
    if (c == "std::ostringstream" || c == "std::stringstream") return JavaType::reference("StringBuilder");
    if (c == "std::ostream") {
        ctx.imports.register_import("java.io.PrintStream");
        return JavaType::reference("PrintStream");
    }
    if (c == "std::istream" || c == "std::istringstream") {
        ctx.imports.register_import("java.io.InputStream");
        return JavaType::reference("InputStream");
    }
    if (is_exception_class(c)) return JavaType::reference("RuntimeException");
    if (t.is_pointer()) {
        CxxType inner = t;
        inner.canonical.pop_back();
        return map_java_type(inner, ctx);
    }
    if (!t.template_args.empty()) {
        std::string key = t.template_name();
        std::map<std::string, JavaType> vars;
        if (const MemberExprRule* ex = ctx.rules.class_exemplar(key)) {
            for (std::size_t i = 0; i < ex->type_vars.size() && i < t.template_args.size(); ++i)
                vars[ex->type_vars[i]] = map_java_type(t.template_args[i], ctx);
            ctx.imports.register_all(ex->imports);
            return JavaType::reference(substitute_java_type_vars(ex->java.receiver, vars));
        }
        // no rule rows for the container: plain java.util names
        std::string out = key == "std::map" ? "TreeMap<" : "ArrayList<";
        ctx.imports.register_import(key == "std::map" ? "java.util.TreeMap" : "java.util.ArrayList");
        for (std::size_t i = 0; i < t.template_args.size(); ++i)
            out += (i ? ", " : "") + boxed_name(map_java_type(t.template_args[i], ctx).name);
        return JavaType::reference(out + ">");
    }
    if (auto f = fixed_java_classes().find(c); f != fixed_java_classes().end()) {
        ctx.imports.register_import(f->second);
        return JavaType::reference(c);
    }
    std::string top = c.substr(0, c.find("::"));
    if (!ctx.cls || top != ctx.cls->name) {
        std::string pkg = package_for_class(top, ctx.prefixes);
        if (pkg != ctx.package) ctx.imports.register_import(pkg + "." + top);
    }
    return JavaType::reference(dotted(c));
}

TypeBinding bind_type(std::string_view text, ConversionContext& ctx) {
    CxxType t = ctx.cxx_type(text);
    return {t, map_java_type(t, ctx)};
}

std::string instantiate_elided(const RuleSet& rs, std::string_view name, const std::string& expr, bool expr_atomic,
                               const std::string& type) {
    static const std::string kMarker = "\x01expr\x01";
    std::map<std::string, std::string> subs{{"expr", kMarker}};
    if (!type.empty()) subs["type"] = type;
    std::string out = instantiate_template(rs, name, subs);
    if (expr_atomic) {
        for (std::size_t p; (p = out.find("(" + kMarker + ")")) != std::string::npos;)
            out.replace(p, kMarker.size() + 2, kMarker);
    }
    for (std::size_t p; (p = out.find(kMarker)) != std::string::npos;) out.replace(p, kMarker.size(), expr);
    return out;
}

namespace {

EmittedExpr with_text(EmittedExpr e, std::string text, JavaType type, bool atomic = true) {
    e.text = std::move(text);
    e.type = std::move(type);
    e.atomic = atomic;
    e.int_literal = false;
    return e;
}

std::string wrap(const EmittedExpr& e) { return e.atomic ? e.text : "(" + e.text + ")"; }

EmittedExpr apply_template(const char* name, const EmittedExpr& e, JavaType result, ConversionContext& ctx,
                           const std::string& type = {}) {
    EmittedExpr out = e;
    out.text = instantiate_elided(ctx.rules, name, e.text, e.atomic, type);
    out.type = std::move(result);
    out.atomic = java_text_is_atomic(out.text);
    out.int_literal = false;
    return out;
}

}  // namespace

EmittedExpr coerce(EmittedExpr e, const JavaType& target, ConversionContext& ctx) {
    if (target.is_unknown() || e.type.is_unknown() || target.name == "void" || e.type == target) return e;
    if (target.is_boolean()) {
        if (e.type.is_enum) e = rewrite_enum_int_bridge(e, EnumBridge::EnumToInt, JavaType::integer());
        if (e.type.is_numeric()) {
            if (e.int_literal && (e.text == "0" || e.text == "1"))
                return with_text(e, e.text == "1" ? "true" : "false", JavaType::boolean());
            return apply_template("int2bool", e, JavaType::boolean(), ctx);
        }
        if (!e.type.is_primitive) return with_text(e, wrap(e) + " != null", JavaType::boolean(), false);
        return e;
    }
    if (e.type.is_boolean() && (target.is_numeric() || target.is_enum)) {
        e = apply_template("bool2int", e, JavaType::integer(), ctx);
        return coerce(std::move(e), target, ctx);
    }
    if (e.type.is_enum && target.is_numeric()) {
        e = rewrite_enum_int_bridge(e, EnumBridge::EnumToInt, JavaType::integer());
        return coerce(std::move(e), target, ctx);
    }
    if (target.is_enum && e.type.is_numeric()) {
        e = coerce(std::move(e), JavaType::integer(), ctx);
        return rewrite_enum_int_bridge(e, EnumBridge::IntToEnum, target);
    }
    if (e.type.is_numeric() && target.is_numeric()) {
        if (e.int_literal) {
            e.type = target;
            return e;
        }
        bool widening = numeric_rank(e.type) < numeric_rank(target) && target.name != "char";
        if (widening) {
            e.type = target;
            return e;
        }
        return apply_template("gen_cast", e, target, ctx, target.name);
    }
    if (!target.is_primitive && !target.is_enum && target.name != "String" && e.int_literal && e.text == "0")
        return with_text(e, "null", target);
    return e;
}

// ---- boolean simplification ----------------------------------------------------

bool side_effect_free(const AstNode& e) {
    switch (e.kind) {
        case NodeKind::NameRef:
        case NodeKind::Literal: return true;
        case NodeKind::MemberAccess: return side_effect_free(e.children[0]);
        // operators over such operands; '=' and '++' never qualify
        case NodeKind::UnaryOp: return (e.op == "!" || e.op == "-") && side_effect_free(e.children[0]);
        case NodeKind::BinaryOp:
            if (e.op.find('=') != std::string::npos && e.op != "==" && e.op != "!=" && e.op != "<=" && e.op != ">=")
                return false;
            return side_effect_free(e.children[0]) && side_effect_free(e.children[1]);
        default: return false;
    }
}

namespace {

bool is_bool_literal(const AstNode& n) { return n.kind == NodeKind::Literal && n.literal_kind == LiteralKind::Bool; }

AstNode bool_literal(bool v, const SourceSpan& s) {
    AstNode n(NodeKind::Literal, s);
    n.literal_kind = LiteralKind::Bool;
    n.value = v ? "true" : "false";
    return n;
}

AstNode negate(AstNode x, const SourceSpan& s) {
    if (is_bool_literal(x)) return bool_literal(x.value != "true", s);
    if (x.kind == NodeKind::UnaryOp && x.op == "!") return std::move(x.children[0]);
    AstNode n(NodeKind::UnaryOp, s);
    n.op = "!";
    x.parenthesized = false;
    n.children.push_back(std::move(x));
    return n;
}

bool simplify_once(AstNode& n, const std::function<bool(const AstNode&)>& is_boolean) {
    bool changed = false;
    for (auto& c : n.children) changed |= simplify_once(c, is_boolean);
    if (n.kind != NodeKind::BinaryOp) return changed;
    if (n.op != "==" && n.op != "!=" && n.op != "&&" && n.op != "||") return changed;
    int lit = is_bool_literal(n.children[1]) ? 1 : is_bool_literal(n.children[0]) ? 0 : -1;
    if (lit < 0) return changed;
    AstNode& x = n.children[1 - lit];
    if (!side_effect_free(x) || !is_boolean(x)) return changed;
    bool v = n.children[static_cast<std::size_t>(lit)].value == "true";
    AstNode out;
    SourceSpan s = n.span;
    if (n.op == "==") out = v ? x : negate(x, s);
    else if (n.op == "!=") out = v ? negate(x, s) : x;
    else if (n.op == "&&") out = v ? x : bool_literal(false, s);
    else out = v ? bool_literal(true, s) : x;
    out.parenthesized = false;
    out.span = s;
    n = std::move(out);
    return true;
}

}  // namespace

AstNode simplify_boolean(const AstNode& e, const std::function<bool(const AstNode&)>& is_boolean) {
    AstNode n = e;
    while (simplify_once(n, is_boolean)) {
    }
    return n;
}

// ---- expressions ---------------------------------------------------------------

namespace {

[[noreturn]] void fail_at(const char* c, std::string msg, const AstNode& n) {
    throw ConversionError(c, std::move(msg), n.span.line, n.span.col);
}

bool is_stream_name(std::string_view n) {
    return n == "std::cout" || n == "cout" || n == "std::cerr" || n == "cerr" || n == "std::clog" || n == "clog" ||
           n == "std::cin" || n == "cin";
}

bool is_endl(const AstNode& n) { return n.kind == NodeKind::NameRef && (n.name == "std::endl" || n.name == "endl"); }

class ExprTx {
public:
    explicit ExprTx(ConversionContext& ctx) : ctx_(ctx) {}

    EmittedExpr run(const AstNode& e, std::optional<JavaType> pref) {
        EmittedExpr out = dispatch(e, pref);
        if (e.parenthesized) {
            out.text = "(" + out.text + ")";
            out.atomic = true;
        }
        ctx_.imports.register_all(out.required_imports);
        return out;
    }

private:
    JavaTypeMapper mapper() {
        return [this](const CxxType& t) { return map_java_type(t, ctx_); };
    }

    EmittedExpr make(std::string text, JavaType type, CxxType cxx, bool atomic = true) {
        EmittedExpr e;
        e.text = std::move(text);
        e.type = std::move(type);
        e.cxx = std::move(cxx);
        e.atomic = atomic;
        return e;
    }

    CxxType cxx(std::string_view text) {
        try {
            return ctx_.cxx_type(text);
        } catch (const ConversionError&) {
            return {};
        }
    }

    // operand text inside a binary expression
    std::string operand(const EmittedExpr& e, const AstNode& n) {
        if (e.atomic || n.kind == NodeKind::BinaryOp || n.kind == NodeKind::UnaryOp) return e.text;
        return "(" + e.text + ")";
    }

    EmittedExpr dispatch(const AstNode& e, const std::optional<JavaType>& pref) {
        switch (e.kind) {
            case NodeKind::Literal: return literal(e, pref);
            case NodeKind::NameRef: return name(e);
            case NodeKind::BinaryOp: return binary(e, pref);
            case NodeKind::UnaryOp: return unary(e, pref);
            case NodeKind::Call: return call(e);
            case NodeKind::MemberCall: return member_call(e);
            case NodeKind::MemberAccess: return member_access(e);
            case NodeKind::Index: return index(e);
            case NodeKind::Cast: return cast(e);
            case NodeKind::StreamShift: return shift(e, pref);
            default: fail_at(code::UnsupportedConstruct, "not an expression", e);
        }
    }

    EmittedExpr literal(const AstNode& e, const std::optional<JavaType>& pref) {
        switch (e.literal_kind) {
            case LiteralKind::Int: {
                std::string v = e.value;
                bool is_long = false;
                while (!v.empty() && std::strchr("uUlL", v.back())) {
                    if (v.back() == 'l' || v.back() == 'L') is_long = true;
                    v.pop_back();
                }
                EmittedExpr out = make(is_long ? v + "L" : v, JavaType::primitive(is_long ? "long" : "int"),
                                       cxx(is_long ? "long" : "int"));
                out.int_literal = !is_long;
                if (pref && pref->is_numeric() && out.int_literal) out.type = *pref;
                if (pref && pref->is_boolean()) return coerce(out, *pref, ctx_);
                return out;
            }
            case LiteralKind::Float: {
                std::string v = e.value;
                if (!v.empty() && (v.back() == 'f' || v.back() == 'F')) v.pop_back();
                return make(v, JavaType::primitive("double"), cxx("double"));
            }
            case LiteralKind::Char: return make(e.value, JavaType::primitive("char"), cxx("char"));
            case LiteralKind::String: return make(e.value, JavaType::string(), cxx("const char*"));
            case LiteralKind::Bool: return make(e.value, JavaType::boolean(), cxx("bool"));
        }
        return {};
    }

    EmittedExpr enumerator(const std::string& owner, const std::string& member) {
        CxxType t = cxx(owner);
        return make(dotted(owner) + "." + member, map_java_type(t, ctx_), t);
    }

    EmittedExpr name(const AstNode& e) {
        const std::string& n = e.name;
        if (n == "this") {
            CxxType t = ctx_.cls ? cxx(ctx_.cls->name) : CxxType{};
            return make("this", ctx_.cls ? JavaType::reference(ctx_.cls->name) : JavaType::unknown(), t);
        }
        if (n == "NULL") return make("null", JavaType::unknown(), {});
        if (n == "std::string::npos" || n == "string::npos") return make("-1", JavaType::integer(), cxx("unsigned long long"));
        if (is_endl(e) || is_stream_name(n))
            fail_at(code::UnsupportedConstruct, "stream object '" + n + "' outside an output statement", e);
        auto qual = n.rfind("::");
        if (qual != std::string::npos) {
            std::string q = n.substr(0, qual), m = n.substr(qual + 2);
            if (ctx_.enum_names.count(q)) return enumerator(q, m);
            if (auto it = ctx_.enumerator_owner.find(m); it != ctx_.enumerator_owner.end()) return enumerator(it->second, m);
            CxxType t;
            if (const MemberSig* s = ctx_.index.own_member(q, m); s && !s->is_method) t = cxx(s->type);
            return make(dotted(q) + "." + m, map_java_type(t, ctx_), t);
        }
        if (const TypeBinding* tb = ctx_.syms.find(n)) return make(n, tb->java, tb->cxx);
        if (auto it = ctx_.enumerator_owner.find(n); it != ctx_.enumerator_owner.end()) return enumerator(it->second, n);
        if (ctx_.cls) {
            for (const auto& owner : ctx_.index.declaring_classes(ctx_.cls->name, n)) {
                const MemberSig* s = ctx_.index.own_member(owner, n);
                if (s && !s->is_method) {
                    CxxType t = cxx(s->type);
                    return make(n, map_java_type(t, ctx_), t);
                }
            }
        }
        fail_at(code::UnboundName, "'" + n + "' is not declared", e);
    }

    std::vector<EmittedExpr> args(const AstNode& e, std::size_t from, const std::vector<JavaType>& params) {
        std::vector<EmittedExpr> out;
        for (std::size_t i = from; i < e.children.size(); ++i) {
            std::size_t k = i - from;
            std::optional<JavaType> p;
            if (k < params.size() && !params[k].is_unknown()) p = params[k];
            EmittedExpr a = run(e.children[i], p);
            if (p) a = coerce(std::move(a), *p, ctx_);
            out.push_back(std::move(a));
        }
        return out;
    }

    static std::string join_args(const std::vector<EmittedExpr>& a) {
        std::string s;
        for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + strip_outer_parens(a[i].text);
        return s;
    }

    std::vector<JavaType> param_types(const std::vector<std::string>& texts) {
        std::vector<JavaType> out;
        for (const auto& t : texts) {
            try {
                out.push_back(bind_type(t, ctx_).java);
            } catch (const ConversionError&) {
                out.push_back(JavaType::unknown());
            }
        }
        return out;
    }

    bool is_class_name(std::string_view n) {
        if (ctx_.cls && n == ctx_.cls->name) return true;
        return ctx_.unit_classes.count(n) || ctx_.index.knows_class(n) || is_exception_class(n) ||
               fixed_java_classes().count(n);
    }

    // own method with matching arity first, then what the index knows about ancestors
    std::optional<std::pair<std::vector<std::string>, std::string>> method_sig(std::string_view cls,
                                                                              std::string_view m, std::size_t arity) {
        if (ctx_.cls && cls == ctx_.cls->name) {
            for (const auto& mm : ctx_.cls->methods) {
                if (mm.is_ctor || mm.is_dtor || mm.name != m || mm.params.size() != arity) continue;
                std::vector<std::string> ps;
                for (const auto& p : mm.params) ps.push_back(p.type_text);
                return std::make_pair(ps, mm.return_type);
            }
        }
        for (const auto& owner : ctx_.index.declaring_classes(cls, m)) {
            for (const auto& s : ctx_.index.members.at(owner))
                if (s.is_method && s.name == m && s.params.size() == arity) return std::make_pair(s.params, s.type);
        }
        return std::nullopt;
    }

    EmittedExpr typed_call(std::string text, const std::optional<std::pair<std::vector<std::string>, std::string>>& sig,
                           const AstNode& e, std::size_t from, const std::string& prefix) {
        std::vector<JavaType> ps = sig ? param_types(sig->first) : std::vector<JavaType>{};
        auto a = args(e, from, ps);
        CxxType rt = sig ? cxx(sig->second) : CxxType{};
        EmittedExpr out = make(prefix + text + "(" + join_args(a) + ")", map_java_type(rt, ctx_), rt);
        for (const auto& x : a) out.required_imports.insert(x.required_imports.begin(), x.required_imports.end());
        return out;
    }

    EmittedExpr call(const AstNode& e) {
        const std::string& callee = e.children[0].name;
        std::size_t arity = e.children.size() - 1;
        if (is_class_name(callee)) {
            CxxType t = cxx(callee);
            JavaType jt = map_java_type(t, ctx_);
            std::optional<std::pair<std::vector<std::string>, std::string>> sig;
            if (ctx_.cls && callee == ctx_.cls->name) {
                for (const auto& m : ctx_.cls->methods) {
                    if (!m.is_ctor || m.params.size() != arity) continue;
                    std::vector<std::string> ps;
                    for (const auto& p : m.params) ps.push_back(p.type_text);
                    sig = std::make_pair(ps, callee);
                }
            }
            auto a = args(e, 1, sig ? param_types(sig->first) : std::vector<JavaType>{});
            EmittedExpr out = make("new " + jt.name + "(" + join_args(a) + ")", jt, t, false);
            return out;
        }
        auto qual = callee.rfind("::");
        if (qual != std::string::npos) {
            std::string q = callee.substr(0, qual), m = callee.substr(qual + 2);
            bool is_base = false;
            if (ctx_.cls) {
                for (const auto& b : ctx_.cls->bases) is_base |= b.name == q;
                auto anc = ctx_.index.ancestors(ctx_.cls->name);
                is_base |= std::find(anc.begin(), anc.end(), q) != anc.end();
            }
            if (ctx_.cls && q == ctx_.cls->name) return typed_call(m, method_sig(q, m, arity), e, 1, "");
            if (is_base) return typed_call(m, method_sig(q, m, arity), e, 1, "super.");
            return typed_call(m, method_sig(q, m, arity), e, 1, dotted(q) + ".");
        }
        if (ctx_.cls) {
            if (auto sig = method_sig(ctx_.cls->name, callee, arity)) return typed_call(callee, sig, e, 1, "");
        }
        if (auto f = map_free_function(ctx_.rules, callee)) {
            EmittedExpr out = typed_call(f->call_prefix, std::nullopt, e, 1, "");
            out.required_imports.insert(f->import);
            return out;
        }
        fail_at(code::NoMapping, "no mapping for free function '" + callee + "'", e);
    }

    // Rows are matched on the first pass's C++ types; arguments whose Java
    // type differs from the row's are transpiled again with the row's type
    // as preferred type.
    EmittedExpr rule_call(const EmittedExpr& recv, const std::string& method, const std::vector<const AstNode*>& arg_nodes,
                          const AstNode& at) {
        std::vector<EmittedExpr> a;
        std::vector<MemberArg> margs;
        for (const auto* n : arg_nodes) {
            a.push_back(run(*n, std::nullopt));
            margs.push_back({a.back().cxx, a.back().int_literal});
        }
        std::optional<RuleMatch> m;
        try {
            m = match_member_rule(ctx_.rules, recv.cxx, method, margs);
        } catch (const ConversionError& err) {
            fail_at(err.code().c_str(), err.diagnostic().message, at);
        }
        if (!m) fail_at(code::NoRuleMatch, "no member rules for " + recv.cxx.canonical, at);
        auto map = mapper();
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto pj = rule_param_java_type(*m, i, map);
            if (!pj || pj->is_unknown() || a[i].type == *pj) continue;
            a[i] = coerce(run(*arg_nodes[i], pj), *pj, ctx_);
        }
        EmittedExpr out = apply_member_rule(*m, recv, a, map);
        if (m->rule->flags & kNeedsNarrowingCheck)
            ctx_.warn(code::NarrowingCheck, "narrowing in " + recv.cxx.canonical + "::" + method, at.span);
        return out;
    }

    bool is_rule_class(const CxxType& t) { return !t.empty() && ctx_.rules.has_class(t.template_name()); }

    EmittedExpr member_call(const AstNode& e) {
        const AstNode& rn = e.children[0];
        if (rn.kind == NodeKind::NameRef && is_stream_name(rn.name))
            fail_at(code::UnsupportedConstruct, "member call on a console stream", e);
        EmittedExpr recv = run(rn, std::nullopt);
        if (is_rule_class(recv.cxx)) {
            std::vector<const AstNode*> an;
            for (std::size_t i = 1; i < e.children.size(); ++i) an.push_back(&e.children[i]);
            return rule_call(recv, e.name, an, e);
        }
        std::string cls = recv.cxx.canonical;
        if (!cls.empty() && cls.back() == '*') cls.pop_back();
        auto sig = method_sig(cls, e.name, e.children.size() - 1);
        EmittedExpr out = typed_call(e.name, sig, e, 1, wrap(recv) + ".");
        return out;
    }

    EmittedExpr member_access(const AstNode& e) {
        EmittedExpr recv = run(e.children[0], std::nullopt);
        std::string cls = recv.cxx.canonical;
        if (!cls.empty() && cls.back() == '*') cls.pop_back();
        CxxType t;
        if (ctx_.cls && cls == ctx_.cls->name) {
            if (const FieldModel* f = ctx_.cls->find_field(e.name)) t = cxx(f->type_text);
            else if (e.name == kDaoField) t = cxx(!ctx_.cls->dao_type.empty() ? ctx_.cls->dao_type : ctx_.cls->inherited_dao_type);
        }
        if (t.empty()) {
            for (const auto& owner : ctx_.index.declaring_classes(cls, e.name)) {
                const MemberSig* s = ctx_.index.own_member(owner, e.name);
                if (s && !s->is_method) {
                    t = cxx(s->type);
                    break;
                }
            }
        }
        return make(wrap(recv) + "." + e.name, map_java_type(t, ctx_), t);
    }

    EmittedExpr index(const AstNode& e) {
        EmittedExpr recv = run(e.children[0], std::nullopt);
        if (!is_rule_class(recv.cxx)) fail_at(code::UnsupportedConstruct, "indexing a non-container", e);
        return rule_call(recv, "operator[]", {&e.children[1]}, e);
    }

    EmittedExpr cast(const AstNode& e) {
        TypeBinding target = bind_type(e.type_text, ctx_);
        EmittedExpr v = run(e.children[0], target.java.is_numeric() ? std::optional<JavaType>(target.java) : std::nullopt);
        EmittedExpr out;
        if (v.type == target.java || target.java.is_unknown()) {
            out = v;
        } else if (target.java.is_enum || v.type.is_enum || target.java.is_boolean() || v.type.is_boolean()) {
            out = coerce(v, target.java, ctx_);
        } else if (v.int_literal && target.java.is_numeric() && target.java.name != "char") {
            out = v;
            out.type = target.java;
        } else {
            out = apply_template("gen_cast", v, target.java, ctx_, target.java.name);
        }
        out.cxx = target.cxx;
        out.int_literal = false;
        return out;
    }

    EmittedExpr binary(const AstNode& e, const std::optional<JavaType>& pref) {
        const std::string& op = e.op;
        const AstNode& ln = e.children[0];
        const AstNode& rn = e.children[1];
        if (op == "=") return assign(e);
        if (op == "&&" || op == "||") {
            EmittedExpr l = coerce(run(ln, JavaType::boolean()), JavaType::boolean(), ctx_);
            EmittedExpr r = coerce(run(rn, JavaType::boolean()), JavaType::boolean(), ctx_);
            return make(operand(l, ln) + " " + op + " " + operand(r, rn), JavaType::boolean(), cxx("bool"), false);
        }
        if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=") return compare(e);
        // arithmetic
        std::optional<JavaType> p = pref && pref->is_numeric() ? pref : std::nullopt;
        EmittedExpr l = run(ln, p);
        EmittedExpr r = run(rn, p ? p : (l.type.is_numeric() ? std::optional<JavaType>(l.type) : std::nullopt));
        if (op == "+" && (l.type.name == "String" || r.type.name == "String")) {
            return make(operand(l, ln) + " + " + operand(r, rn), JavaType::string(), cxx("std::string"), false);
        }
        auto numeric = [&](EmittedExpr x) {
            if (x.type.is_enum) x = rewrite_enum_int_bridge(x, EnumBridge::EnumToInt, JavaType::integer());
            if (x.type.is_boolean()) x = coerce(x, JavaType::integer(), ctx_);
            return x;
        };
        l = numeric(l);
        r = numeric(r);
        JavaType t = binary_numeric_promotion(l.type, r.type);
        if (l.int_literal && r.int_literal && p) t = *p;
        std::string rc = arithmetic_result(l.cxx.is_enum ? "int" : l.cxx.canonical, r.cxx.is_enum ? "int" : r.cxx.canonical);
        EmittedExpr out = make(operand(l, ln) + " " + op + " " + operand(r, rn), t, rc.empty() ? CxxType{} : cxx(rc), false);
        out.int_literal = l.int_literal && r.int_literal;
        return out;
    }

    EmittedExpr compare(const AstNode& e) {
        const std::string& op = e.op;
        const AstNode& ln = e.children[0];
        const AstNode& rn = e.children[1];
        EmittedExpr l = run(ln, std::nullopt);
        if (is_rule_class(l.cxx)) return rule_call(l, "operator" + op, {&rn}, e);
        std::optional<JavaType> rp;
        if (l.type.is_numeric() || l.type.is_boolean()) rp = l.type;
        EmittedExpr r = run(rn, rp);
        if (l.int_literal && !r.type.is_unknown() && r.type.is_numeric()) l.type = r.type;
        bool equality = op == "==" || op == "!=";
        if (l.type.is_enum && r.type.is_enum && equality) {
            // enum objects compare directly
        } else {
            auto side = [&](EmittedExpr& x, const EmittedExpr& other) {
                if (x.type.is_enum) x = rewrite_enum_int_bridge(x, EnumBridge::EnumToInt, JavaType::integer());
                if (x.type.is_boolean() && !other.type.is_boolean() && !other.type.is_unknown())
                    x = coerce(x, JavaType::integer(), ctx_);
                if (!other.type.is_primitive && !other.type.is_unknown() && !other.type.is_enum &&
                    other.type.name != "String" && x.int_literal && x.text == "0")
                    x = with_text(x, "null", other.type);
            };
            side(l, r);
            side(r, l);
        }
        return make(operand(l, ln) + " " + op + " " + operand(r, rn), JavaType::boolean(), cxx("bool"), false);
    }

    EmittedExpr assign(const AstNode& e) {
        const AstNode& ln = e.children[0];
        const AstNode& rn = e.children[1];
        if (ln.kind == NodeKind::Index) {
            EmittedExpr recv = run(ln.children[0], std::nullopt);
            if (is_rule_class(recv.cxx)) return rule_call(recv, "operator[]=", {&ln.children[1], &rn}, e);
        }
        EmittedExpr l = run(ln, std::nullopt);
        std::optional<JavaType> p;
        if (!l.type.is_unknown()) p = l.type;
        EmittedExpr r = run(rn, p);
        if (p) r = coerce(std::move(r), *p, ctx_);
        EmittedExpr out = make(l.text + " = " + strip_outer_parens(r.text), l.type, l.cxx, false);
        return out;
    }

    EmittedExpr unary(const AstNode& e, const std::optional<JavaType>& pref) {
        const AstNode& on = e.children[0];
        if (e.op == "!") {
            EmittedExpr x = coerce(run(on, JavaType::boolean()), JavaType::boolean(), ctx_);
            return make("!" + wrap(x), JavaType::boolean(), cxx("bool"), false);
        }
        if (e.op == "-" || e.op == "+") {
            EmittedExpr x = run(on, pref && pref->is_numeric() ? pref : std::nullopt);
            if (x.type.is_enum) x = rewrite_enum_int_bridge(x, EnumBridge::EnumToInt, JavaType::integer());
            std::string t = wrap(x);
            if (!t.empty() && (t[0] == '-' || t[0] == '+')) t = " " + t;
            EmittedExpr out = make(e.op + t, x.type, x.cxx, false);
            out.int_literal = x.int_literal;
            if (out.type.name == "char") out.type = JavaType::integer();
            return out;
        }
        EmittedExpr x = run(on, std::nullopt);
        if (e.op.rfind("post", 0) == 0) return make(wrap(x) + e.op.substr(4), x.type, x.cxx, false);
        return make(e.op + wrap(x), x.type, x.cxx, false);
    }

    EmittedExpr shift(const AstNode& e, const std::optional<JavaType>& pref) {
        const AstNode* left = &e;
        while (left->kind == NodeKind::StreamShift && !left->parenthesized) left = &left->children[0];
        if (left->kind == NodeKind::NameRef && is_stream_name(left->name))
            fail_at(code::UnsupportedConstruct, "stream output used as a value", e);
        EmittedExpr l = run(e.children[0], pref);
        if (!l.type.is_integral())
            fail_at(code::UnsupportedConstruct, "stream output used as a value", e);
        EmittedExpr r = run(e.children[1], std::nullopt);
        return make(operand(l, e.children[0]) + " " + e.op + " " + operand(r, e.children[1]), l.type, l.cxx, false);
    }

    ConversionContext& ctx_;
};

bool probe_boolean(const AstNode& x, ConversionContext& ctx) {
    ImportRegistry saved = ctx.imports;
    std::size_t ndiag = ctx.diagnostics.size();
    bool result = false;
    try {
        result = ExprTx(ctx).run(x, std::nullopt).type.is_boolean();
    } catch (const ConversionError&) {
        result = false;
    }
    ctx.imports = saved;
    ctx.diagnostics.resize(ndiag);
    return result;
}

}  // namespace

EmittedExpr transpile_expression(const AstNode& e, std::optional<JavaType> preferred, ConversionContext& ctx) {
    AstNode s = simplify_boolean(e, [&](const AstNode& x) { return probe_boolean(x, ctx); });
    return ExprTx(ctx).run(s, preferred);
}

// ---- statements ------------------------------------------------------------------

namespace {

std::string pad(int depth) { return std::string(static_cast<std::size_t>(depth) * 4, ' '); }

std::string condition(const AstNode& c, ConversionContext& ctx) {
    EmittedExpr e = coerce(transpile_expression(c, JavaType::boolean(), ctx), JavaType::boolean(), ctx);
    return strip_outer_parens(e.text);
}

bool is_value_class(const TypeBinding& tb) {
    return !tb.java.is_primitive && !tb.java.is_enum && !tb.java.is_unknown() && !tb.cxx.is_pointer();
}

std::string join_texts(const std::vector<EmittedExpr>& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + strip_outer_parens(a[i].text);
    return s;
}

std::vector<JavaType> ctor_param_types(const std::string& cls, std::size_t arity, ConversionContext& ctx) {
    std::vector<JavaType> out;
    if (!ctx.cls || cls != ctx.cls->name) return out;
    for (const auto& m : ctx.cls->methods) {
        if (!m.is_ctor || m.params.size() != arity) continue;
        for (const auto& p : m.params) out.push_back(bind_type(p.type_text, ctx).java);
        break;
    }
    return out;
}

std::vector<EmittedExpr> transpile_args(const std::vector<const AstNode*>& nodes, const std::vector<JavaType>& ps,
                                        ConversionContext& ctx) {
    std::vector<EmittedExpr> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::optional<JavaType> p;
        if (i < ps.size() && !ps[i].is_unknown()) p = ps[i];
        EmittedExpr a = transpile_expression(*nodes[i], p, ctx);
        if (p) a = coerce(std::move(a), *p, ctx);
        out.push_back(std::move(a));
    }
    return out;
}

// "Type name = init" without the semicolon; binds the name.
std::string declaration(const AstNode& s, ConversionContext& ctx) {
    TypeBinding tb = bind_type(s.type_text, ctx);
    const std::string& j = tb.java.name;
    std::string init;
    std::vector<const AstNode*> argn;
    for (const auto& c : s.children) argn.push_back(&c);
    if (s.ctor_style_init || s.children.empty()) {
        if (tb.java.name == "String") {
            if (argn.empty()) init = "\"\"";
            else if (argn.size() == 1) init = strip_outer_parens(transpile_args(argn, {JavaType::string()}, ctx)[0].text);
            else throw ConversionError(code::UnsupportedConstruct, "std::string constructor with " +
                                           std::to_string(argn.size()) + " arguments", s.span.line, s.span.col);
        } else if (is_value_class(tb)) {
            bool container = !tb.cxx.template_args.empty();
            if (container && !argn.empty())
                throw ConversionError(code::UnsupportedConstruct, "container constructor arguments", s.span.line,
                                      s.span.col);
            auto a = transpile_args(argn, ctor_param_types(tb.cxx.canonical, argn.size(), ctx), ctx);
            init = "new " + j + "(" + join_texts(a) + ")";
        } else if (!argn.empty()) {
            if (argn.size() != 1)
                throw ConversionError(code::UnsupportedConstruct, "scalar initialized with several values",
                                      s.span.line, s.span.col);
            init = strip_outer_parens(transpile_args(argn, {tb.java}, ctx)[0].text);
        }
    } else {
        init = strip_outer_parens(transpile_args(argn, {tb.java}, ctx)[0].text);
    }
    try {
        ctx.syms.bind(s.name, tb);
    } catch (ConversionError& e) {
        throw ConversionError(e.code(), e.diagnostic().message, s.span.line, s.span.col);
    }
    return j + " " + s.name + (init.empty() ? "" : " = " + init);
}

std::string catch_type(const AstNode& c, ConversionContext& ctx, std::string& var) {
    if (c.type_text == "...") {
        var = "ex";
        return "Throwable";
    }
    var = c.name.empty() ? "e" : c.name;
    return bind_type(c.type_text, ctx).java.name;
}

void emit_statement(const AstNode& s, ConversionContext& ctx, int depth, std::string& out);

// body of if/while/for: blocks open on the header line, single statements go
// on the next line one level deeper
void emit_branch(const std::string& header, const AstNode& body, ConversionContext& ctx, int depth, std::string& out) {
    if (body.kind == NodeKind::Block) {
        ScopeGuard g(ctx.syms);
        out += pad(depth) + header + " {\n" + transpile_block_body(body.children, ctx, depth + 1) + pad(depth) + "}\n";
    } else {
        ScopeGuard g(ctx.syms);
        out += pad(depth) + header + "\n";
        emit_statement(body, ctx, depth + 1, out);
    }
}

void emit_statement(const AstNode& s, ConversionContext& ctx, int depth, std::string& out) {
    switch (s.kind) {
        case NodeKind::Block: {
            out += pad(depth) + apply_try_with_resources(s, ctx, depth).substr(0) + "\n";
            return;
        }
        case NodeKind::If: {
            emit_branch("if (" + condition(s.children[0], ctx) + ")", s.children[1], ctx, depth, out);
            if (s.children.size() > 2) {
                const AstNode& el = s.children[2];
                if (el.kind == NodeKind::If) {
                    std::string nested;
                    emit_statement(el, ctx, depth, nested);
                    out += pad(depth) + "else " + nested.substr(static_cast<std::size_t>(depth) * 4);
                } else {
                    emit_branch("else", el, ctx, depth, out);
                }
            }
            return;
        }
        case NodeKind::While:
            emit_branch("while (" + condition(s.children[0], ctx) + ")", s.children[1], ctx, depth, out);
            return;
        case NodeKind::For: {
            ScopeGuard g(ctx.syms);
            std::size_t i = 0;
            std::string init, cond, step;
            if (s.for_parts & kForInit) {
                const AstNode& in = s.children[i++];
                if (in.kind == NodeKind::VarDeclStmt) init = declaration(in, ctx);
                else if (in.kind == NodeKind::ExprStmt && !in.children.empty())
                    init = transpile_expression(in.children[0], std::nullopt, ctx).text;
            }
            if (s.for_parts & kForCond) cond = condition(s.children[i++], ctx);
            if (s.for_parts & kForStep) step = transpile_expression(s.children[i++], std::nullopt, ctx).text;
            std::string header = "for (" + init + ";" + (cond.empty() ? "" : " " + cond) + ";" +
                                 (step.empty() ? "" : " " + step) + ")";
            emit_branch(header, s.children[i], ctx, depth, out);
            return;
        }
        case NodeKind::Return: {
            if (s.children.empty()) {
                out += pad(depth) + "return;\n";
                return;
            }
            std::optional<JavaType> p;
            if (!ctx.current_return.is_unknown() && ctx.current_return.name != "void") p = ctx.current_return;
            EmittedExpr e = transpile_expression(s.children[0], p, ctx);
            if (p) e = coerce(std::move(e), *p, ctx);
            out += pad(depth) + "return " + strip_outer_parens(e.text) + ";\n";
            return;
        }
        case NodeKind::Throw: {
            if (s.children.empty()) {
                if (ctx.catch_vars.empty())
                    throw ConversionError(code::UnsupportedConstruct, "rethrow outside a catch block", s.span.line,
                                          s.span.col);
                out += pad(depth) + "throw " + ctx.catch_vars.back() + ";\n";
                return;
            }
            out += pad(depth) + "throw " + transpile_expression(s.children[0], std::nullopt, ctx).text + ";\n";
            return;
        }
        case NodeKind::Try: {
            std::string text;
            {
                ScopeGuard g(ctx.syms);
                text = pad(depth) + "try {\n" + transpile_block_body(s.children[0].children, ctx, depth + 1) + pad(depth) + "}";
            }
            for (std::size_t i = 1; i < s.children.size(); ++i) {
                const AstNode& c = s.children[i];
                ScopeGuard g(ctx.syms);
                std::string var;
                std::string type = catch_type(c, ctx, var);
                if (c.type_text != "...") ctx.syms.bind(var, bind_type(c.type_text, ctx));
                ctx.catch_vars.push_back(var);
                text += " catch (" + type + " " + var + ") {\n";
                text += transpile_block_body(c.children[0].children, ctx, depth + 1);
                text += pad(depth) + "}";
                ctx.catch_vars.pop_back();
            }
            out += text + "\n";
            return;
        }
        case NodeKind::VarDeclStmt:
            out += pad(depth) + declaration(s, ctx) + ";\n";
            return;
        case NodeKind::ExprStmt: {
            if (s.children.empty()) {
                out += pad(depth) + ";\n";
                return;
            }
            if (is_stream_statement(s, ctx)) {
                out += pad(depth) + rewrite_stream_statement(s, ctx) + "\n";
                return;
            }
            out += pad(depth) + transpile_expression(s.children[0], std::nullopt, ctx).text + ";\n";
            return;
        }
        default:
            throw ConversionError(code::UnsupportedConstruct, std::string("unexpected ") + std::string(kind_name(s.kind)),
                                  s.span.line, s.span.col);
    }
}

}  // namespace

std::string transpile_statement(const AstNode& s, ConversionContext& ctx, int depth) {
    std::string out;
    emit_statement(s, ctx, depth, out);
    return out;
}

std::string transpile_block_body(const std::vector<AstNode>& stmts, ConversionContext& ctx, int depth) {
    std::string out;
    for (std::size_t i = 0; i < stmts.size(); ++i) {
        if (!is_resource_declaration(stmts[i], ctx)) {
            emit_statement(stmts[i], ctx, depth, out);
            continue;
        }
        if (i > 0)
            ctx.warn(code::ResourceAfterUse, "resource '" + stmts[i].name + "' declared after other statements",
                     stmts[i].span);
        std::vector<std::string> decls;
        std::size_t k = i;
        while (k < stmts.size() && is_resource_declaration(stmts[k], ctx)) decls.push_back(declaration(stmts[k++], ctx));
        std::string header = "try (";
        for (std::size_t d = 0; d < decls.size(); ++d) header += (d ? "; " : "") + decls[d];
        out += pad(depth) + header + ") {\n";
        std::vector<AstNode> rest(stmts.begin() + static_cast<std::ptrdiff_t>(k), stmts.end());
        out += transpile_block_body(rest, ctx, depth + 1);
        out += pad(depth) + "}\n";
        break;
    }
    return out;
}

// ---- classes ---------------------------------------------------------------------

namespace {

std::string vis_word(Visibility v) {
    switch (v) {
        case Visibility::Public: return "public";
        case Visibility::Protected: return "protected";
        case Visibility::Private: return "private";
    }
    return "";
}

std::string param_list(const MethodModel& m, ConversionContext& ctx) {
    std::string s;
    for (std::size_t i = 0; i < m.params.size(); ++i) {
        const auto& p = m.params[i];
        s += (i ? ", " : "") + bind_type(p.type_text, ctx).java.name + " " + (p.name.empty() ? "arg" + std::to_string(i) : p.name);
    }
    return s;
}

void bind_params(const MethodModel& m, ConversionContext& ctx) {
    for (std::size_t i = 0; i < m.params.size(); ++i) {
        const auto& p = m.params[i];
        ctx.syms.bind(p.name.empty() ? "arg" + std::to_string(i) : p.name, bind_type(p.type_text, ctx));
    }
}

bool initialized_in_ctor(const ClassModel& c, const std::string& field) {
    for (const auto& m : c.methods)
        for (const auto& init : m.initializers)
            if (init.children[0].name == field) return true;
    return false;
}

std::string field_default(const FieldModel& f, const TypeBinding& tb, const ClassModel& c) {
    if (initialized_in_ctor(c, f.name)) return "";
    if (tb.java.name == "String") return " = \"\"";
    if (is_value_class(tb)) return " = new " + tb.java.name + "()";
    return "";
}

std::string emit_ctor(const MethodModel& m, const ClassModel& c, ConversionContext& ctx, int depth) {
    ScopeGuard g(ctx.syms);
    ctx.current_return = JavaType::primitive("void");
    std::string head = pad(depth) + vis_word(m.visibility) + " " + c.name + "(" + param_list(m, ctx) + ") {\n";
    bind_params(m, ctx);
    std::string body;
    std::set<std::string> fields;
    for (const auto& f : c.fields) fields.insert(f.name);
    // base delegation first, Java requires it
    for (const auto& init : m.initializers) {
        const std::string& callee = init.children[0].name;
        if (callee != c.extends) continue;
        std::vector<const AstNode*> an;
        for (std::size_t i = 1; i < init.children.size(); ++i) an.push_back(&init.children[i]);
        body += pad(depth + 1) + "super(" + join_texts(transpile_args(an, {}, ctx)) + ");\n";
    }
    if (!c.dao_type.empty()) {
        std::vector<const AstNode*> an;
        for (const auto& a : m.dao_init_args) an.push_back(&a);
        std::string dao = bind_type(c.dao_type, ctx).java.name;
        body += pad(depth + 1) + std::string(kDaoField) + " = new " + dao + "(" + join_texts(transpile_args(an, {}, ctx)) + ");\n";
    }
    for (const auto& init : m.initializers) {
        const std::string& callee = init.children[0].name;
        if (!fields.count(callee)) continue;
        const FieldModel* f = c.find_field(callee);
        TypeBinding tb = bind_type(f->type_text, ctx);
        std::vector<const AstNode*> an;
        for (std::size_t i = 1; i < init.children.size(); ++i) an.push_back(&init.children[i]);
        std::string value;
        if (is_value_class(tb) && tb.java.name != "String") {
            value = "new " + tb.java.name + "(" + join_texts(transpile_args(an, ctor_param_types(tb.cxx.canonical, an.size(), ctx), ctx)) + ")";
        } else if (an.size() == 1) {
            value = strip_outer_parens(transpile_args(an, {tb.java}, ctx)[0].text);
        } else if (an.empty()) {
            value = tb.java.name == "String" ? "\"\"" : tb.java.is_boolean() ? "false" : "0";
        } else {
            throw ConversionError(code::UnsupportedConstruct, "member initializer with several values",
                                  init.span.line, init.span.col);
        }
        bool shadowed = std::any_of(m.params.begin(), m.params.end(), [&](const ParamModel& p) { return p.name == callee; });
        body += pad(depth + 1) + (shadowed ? "this." : "") + callee + " = " + value + ";\n";
    }
    if (m.body) body += transpile_block_body(m.body->children, ctx, depth + 1);
    std::string note;
    if (m.body && body_beyond_member_init(*m.body, fields)) {
        note = pad(depth) + "// WARNING: constructor has side effects\n";
        ctx.warn(code::CtorSideEffects, "constructor of " + c.name + " does more than initialize members", m.span);
    }
    return note + head + body + pad(depth) + "}\n";
}

std::string emit_method(const MethodModel& m, const ClassModel& c, ConversionContext& ctx, int depth) {
    ScopeGuard g(ctx.syms);
    TypeBinding rt = bind_type(m.return_type, ctx);
    ctx.current_return = rt.java;
    std::string mods;
    if (c.is_interface) mods = m.is_pure ? "" : "default ";
    else mods = vis_word(m.visibility) + " " + (m.is_static ? "static " : "") + (m.is_pure ? "abstract " : "");
    std::string head = pad(depth) + mods + rt.java.name + " " + m.name + "(" + param_list(m, ctx) + ")";
    if (m.is_pure) return head + ";\n";
    bind_params(m, ctx);
    return head + " {\n" + transpile_block_body(m.body->children, ctx, depth + 1) + pad(depth) + "}\n";
}

}  // namespace

std::string transpile_class(const ClassModel& c, ConversionContext& ctx) {
    ctx.cls = &c;
    ctx.package = package_for_class(c.name, ctx.prefixes);
    ctx.imports.reset(ctx.package);
    ctx.add_enums(c.enums, c.name);
    ctx.unit_classes.insert(c.name);

    ScopeGuard class_scope(ctx.syms);
    for (const auto& f : c.fields) ctx.syms.bind(f.name, bind_type(f.type_text, ctx));
    std::string dao = !c.dao_type.empty() ? c.dao_type : c.inherited_dao_type;
    if (!dao.empty() && !ctx.syms.find(kDaoField)) ctx.syms.bind(kDaoField, bind_type(dao, ctx));

    std::vector<std::string> sections;
    for (const auto& e : c.enums) sections.push_back(generate_enum(e, 1, &ctx.diagnostics));

    std::string fields;
    if (!c.dao_type.empty()) fields += pad(1) + "protected " + bind_type(c.dao_type, ctx).java.name + " " + kDaoField + ";\n";
    for (const auto& f : c.fields) {
        TypeBinding tb = bind_type(f.type_text, ctx);
        fields += pad(1) + vis_word(f.visibility) + " " + (f.is_static ? "static " : "") + tb.java.name + " " + f.name +
                  field_default(f, tb, c) + ";\n";
    }
    if (!fields.empty()) sections.push_back(fields);

    bool resource = c.resource_annotated;
    for (const auto& m : c.methods) {
        if (m.is_ctor) {
            if (!c.is_interface) sections.push_back(emit_ctor(m, c, ctx, 1));
        } else if (m.is_dtor) {
            if (resource) {
                ScopeGuard g(ctx.syms);
                ctx.current_return = JavaType::primitive("void");
                std::string body = m.body ? transpile_block_body(m.body->children, ctx, 2) : "";
                sections.push_back(pad(1) + "@Override\n" + pad(1) + "public void close() {\n" + body + pad(1) + "}\n");
            } else if (m.body && !m.body->children.empty()) {
                ctx.warn(code::DestructorDropped, "destructor of " + c.name + " has code and is dropped", m.span);
            }
        } else if (!m.is_pure && !m.body) {
            ctx.warn(code::MissingMethodBody, "method " + c.name + "::" + m.name + " has no body here", m.span);
        } else {
            sections.push_back(emit_method(m, c, ctx, 1));
        }
    }

    std::vector<std::string> impl;
    for (const auto& i : c.implements) impl.push_back(bind_type(i, ctx).java.name);
    if (resource && std::find(impl.begin(), impl.end(), "Closeable") == impl.end()) {
        ctx.imports.register_import("java.io.Closeable");
        impl.push_back("Closeable");
    }
    std::string header = "public ";
    if (c.is_interface) {
        header += "interface " + c.name;
        if (!impl.empty()) header += " extends ";
    } else {
        if (c.has_pure_methods()) header += "abstract ";
        header += "class " + c.name;
        if (!c.extends.empty()) header += " extends " + bind_type(c.extends, ctx).java.name;
        if (!impl.empty()) header += " implements ";
    }
    for (std::size_t i = 0; i < impl.size(); ++i) header += (i ? ", " : "") + impl[i];

    std::string out = "package " + ctx.package + ";\n\n";
    std::string imports = ctx.imports.emit_imports();
    if (!imports.empty()) out += imports + "\n";
    if (!c.unresolved_bases.empty()) {
        out += "// MANUAL: unresolved base classes:";
        for (const auto& b : c.unresolved_bases) out += " " + b;
        out += "\n";
    }
    ctx.cls = nullptr;
    if (sections.empty()) return out + header + " { }\n";
    out += header + " {\n";
    for (std::size_t i = 0; i < sections.size(); ++i) out += (i ? "\n" : "") + sections[i];
    out += "}\n";
    return out;
}

}  // namespace m2j
