#include "m2j/concepts.hpp"

#include <algorithm>
#include <map>

namespace m2j {

namespace {

struct BaseCounts {
    int dao = 0, chain = 0, intf = 0, plain = 0;
};

InheritanceStrategy decide(const std::vector<BaseCategory>& cats) {
    BaseCounts n;
    for (auto c : cats) {
        switch (c) {
            case BaseCategory::Dao: ++n.dao; break;
            case BaseCategory::Chain: ++n.chain; break;
            case BaseCategory::InterfaceCandidate: ++n.intf; break;
            case BaseCategory::Plain: ++n.plain; break;
        }
    }
    if (n.dao > 1 || n.chain > 1 || n.plain > 1) return InheritanceStrategy::ManualFallback;
    if (cats.size() <= 1) {
        if (n.chain) return InheritanceStrategy::ChainLink;
        if (n.intf) return InheritanceStrategy::InterfaceImpl;
        return InheritanceStrategy::Single;
    }
    if (n.dao && n.chain) return InheritanceStrategy::DaoAndChain;
    if (n.dao) return InheritanceStrategy::DaoHasA;
    if (n.chain) return InheritanceStrategy::ChainLink;
    return InheritanceStrategy::InterfaceImpl;
}

bool has_dao_member(InheritanceStrategy s) {
    return s == InheritanceStrategy::DaoHasA || s == InheritanceStrategy::DaoAndChain;
}

std::string dao_base_indexed(std::string_view cls, const ProjectIndex& idx) {
    for (const auto& b : idx.bases_of(cls))
        if (categorize_base(b, idx) == BaseCategory::Dao) return b;
    return {};
}

// DAO type held as m_oDAO by the nearest ancestor reached through extends-bases.
std::string inherited_dao(std::string_view cls, const ProjectIndex& idx, int guard = 0) {
    if (guard > 64) return {};
    for (const auto& b : idx.bases_of(cls)) {
        BaseCategory cat = categorize_base(b, idx);
        if (cat == BaseCategory::Chain || cat == BaseCategory::InterfaceCandidate) continue;
        if (has_dao_member(classify_indexed(b, idx))) return dao_base_indexed(b, idx);
        if (std::string d = inherited_dao(b, idx, guard + 1); !d.empty()) return d;
    }
    return {};
}

std::set<std::string> lineage(std::string_view cls, const ProjectIndex& idx) {
    std::set<std::string> out{std::string(cls)};
    for (auto& a : idx.ancestors(cls)) out.insert(a);
    return out;
}

bool declared_in(const std::set<std::string>& classes, std::string_view name, const ProjectIndex& idx, bool* is_method) {
    for (const auto& c : classes) {
        if (const MemberSig* s = idx.own_member(c, name)) {
            if (is_method) *is_method = s->is_method;
            return true;
        }
    }
    return false;
}

AstNode dao_ref(const SourceSpan& s) {
    AstNode n(NodeKind::NameRef, s);
    n.name = kDaoField;
    return n;
}

[[noreturn]] void unresolved(const std::string& what, const SourceSpan& at) {
    throw ConversionError(code::UnresolvedDaoAccess, what, at.line, at.col);
}

class DaoRerooter {
public:
    DaoRerooter(const ClassModel& c, const std::set<std::string>& dao, const std::set<std::string>& other,
                const ProjectIndex& idx, const RuleSet* rules)
        : c_(c), dao_(dao), other_(other), idx_(idx), rules_(rules) {}

    void method(MethodModel& m) {
        locals_.clear();
        for (const auto& p : m.params) locals_.insert(p.name);
        if (m.body) {
            walk(*m.body, [&](const AstNode& n) {
                if (n.kind == NodeKind::VarDeclStmt) locals_.insert(n.name);
                if (n.kind == NodeKind::Catch) locals_.insert(n.name);
            });
            node(*m.body);
        }
        for (auto& i : m.initializers)
            for (std::size_t k = 1; k < i.children.size(); ++k) node(i.children[k]);
    }

private:
    bool in_dao(std::string_view n, bool* is_method = nullptr) const { return declared_in(dao_, n, idx_, is_method); }
    bool in_other(std::string_view n) const { return declared_in(other_, n, idx_, nullptr); }
    bool own(std::string_view n) const {
        if (c_.find_field(n)) return true;
        return std::any_of(c_.methods.begin(), c_.methods.end(), [&](const MethodModel& m) { return m.name == n; });
    }

    bool outside_class(std::string_view n) const {
        if (idx_.knows_class(n) || fixed_java_classes().count(n)) return true;
        if (rules_ && map_free_function(*rules_, n)) return true;
        return n.rfind("std::", 0) == 0;
    }

    void to_dao_call(AstNode& call, const std::string& method) {
        AstNode mc(NodeKind::MemberCall, call.span);
        mc.name = method;
        mc.children.push_back(dao_ref(call.span));
        for (std::size_t i = 1; i < call.children.size(); ++i) mc.children.push_back(std::move(call.children[i]));
        mc.parenthesized = call.parenthesized;
        call = std::move(mc);
    }

    void node(AstNode& n) {
        if (n.kind == NodeKind::Call) {
            for (std::size_t i = 1; i < n.children.size(); ++i) node(n.children[i]);
            const std::string callee = n.children[0].name;
            auto q = callee.rfind("::");
            if (q != std::string::npos) {
                std::string cls = callee.substr(0, q);
                if (dao_.count(cls)) to_dao_call(n, callee.substr(q + 2));
                return;
            }
            if (own(callee)) return;
            bool d = in_dao(callee), o = in_other(callee);
            if (d && o) unresolved("'" + callee + "' is declared both by the DAO and by another base", n.span);
            if (d) return to_dao_call(n, callee);
            if (!o && !outside_class(callee))
                unresolved("call of '" + callee + "' cannot be attributed to the DAO or to " + c_.name, n.span);
            return;
        }
        if ((n.kind == NodeKind::MemberCall || n.kind == NodeKind::MemberAccess) &&
            n.children[0].kind == NodeKind::NameRef && n.children[0].name == "this") {
            for (std::size_t i = 1; i < n.children.size(); ++i) node(n.children[i]);
            if (own(n.name)) return;
            bool d = in_dao(n.name), o = in_other(n.name);
            if (d && o) unresolved("'" + n.name + "' is declared both by the DAO and by another base", n.span);
            if (d) n.children[0] = dao_ref(n.children[0].span);
            return;
        }
        if (n.kind == NodeKind::NameRef) {
            if (n.name.find("::") != std::string::npos || n.name == "this" || locals_.count(n.name) || own(n.name)) return;
            bool is_method = false;
            if (!in_dao(n.name, &is_method) || is_method) return;
            if (in_other(n.name)) unresolved("'" + n.name + "' is declared both by the DAO and by another base", n.span);
            AstNode ma(NodeKind::MemberAccess, n.span);
            ma.name = n.name;
            ma.parenthesized = n.parenthesized;
            ma.children.push_back(dao_ref(n.span));
            n = std::move(ma);
            return;
        }
        for (auto& c : n.children) node(c);
    }

    const ClassModel& c_;
    const std::set<std::string>& dao_;
    const std::set<std::string>& other_;
    const ProjectIndex& idx_;
    const RuleSet* rules_;
    std::set<std::string> locals_;
};

}  // namespace

InheritanceStrategy classify_inheritance(const ClassModel& c, const ProjectIndex& idx) {
    std::vector<BaseCategory> cats;
    for (const auto& b : c.bases) cats.push_back(categorize_base(b.name, idx));
    return decide(cats);
}

InheritanceStrategy classify_indexed(std::string_view cls, const ProjectIndex& idx) {
    std::vector<BaseCategory> cats;
    for (const auto& b : idx.bases_of(cls)) cats.push_back(categorize_base(b, idx));
    return decide(cats);
}

ClassModel rewrite_dao_inheritance(ClassModel c, const ProjectIndex& idx, const RuleSet* rules) {
    std::string dao;
    if (has_dao_member(classify_inheritance(c, idx)))
        for (const auto& b : c.bases)
            if (b.category == BaseCategory::Dao) dao = b.name;
    std::set<std::string> dao_lineage, other;
    if (!dao.empty()) {
        dao_lineage = lineage(dao, idx);
        for (const auto& b : c.bases) {
            if (b.name == dao) continue;
            for (const auto& x : lineage(b.name, idx))
                if (!dao_lineage.count(x)) other.insert(x);
        }
        c.bases.erase(std::remove_if(c.bases.begin(), c.bases.end(), [&](const ClassBase& b) { return b.name == dao; }),
                      c.bases.end());
        c.dao_type = dao;
        bool has_ctor = false;
        for (auto& m : c.methods) {
            if (!m.is_ctor) continue;
            has_ctor = true;
            for (auto it = m.initializers.begin(); it != m.initializers.end(); ++it) {
                if (it->children[0].name != dao) continue;
                m.dao_init_args.assign(it->children.begin() + 1, it->children.end());
                m.initializers.erase(it);
                break;
            }
        }
        if (!has_ctor) {
            MethodModel ctor;
            ctor.name = c.name;
            ctor.is_ctor = true;
            ctor.synthesized = true;
            ctor.visibility = Visibility::Public;
            ctor.span = c.span;
            ctor.body = AstNode(NodeKind::Block, c.span);
            c.methods.insert(c.methods.begin(), std::move(ctor));
        }
    } else {
        dao = inherited_dao(c.name, idx);
        if (dao.empty()) {
            // the class may not be in the index yet; look at its own bases
            for (const auto& b : c.bases) {
                if (b.category == BaseCategory::Chain || b.category == BaseCategory::InterfaceCandidate) continue;
                if (has_dao_member(classify_indexed(b.name, idx))) dao = dao_base_indexed(b.name, idx);
                else dao = inherited_dao(b.name, idx);
                if (!dao.empty()) break;
            }
        }
        if (dao.empty()) return c;
        c.inherited_dao_type = dao;
        dao_lineage = lineage(dao, idx);
        for (const auto& b : c.bases)
            for (const auto& x : lineage(b.name, idx))
                if (!dao_lineage.count(x)) other.insert(x);
    }
    DaoRerooter r(c, dao_lineage, other, idx, rules);
    for (auto& m : c.methods) r.method(m);
    return c;
}

ClassModel rewrite_chain_inheritance(ClassModel c, const ProjectIndex& idx) {
    std::string chain;
    for (const auto& b : c.bases)
        if (b.category == BaseCategory::Chain) chain = b.name;
    if (chain.empty()) return c;
    std::set<std::string> chain_lineage = lineage(chain, idx);
    if (!idx.chain_root.empty()) chain_lineage.insert(idx.chain_root);
    c.bases.erase(std::remove_if(c.bases.begin(), c.bases.end(), [&](const ClassBase& b) { return b.name == chain; }),
                  c.bases.end());
    c.chain_link = true;
    c.implements.push_back("Link");

    MethodModel* run = nullptr;
    for (auto& m : c.methods)
        if (!m.is_ctor && !m.is_dtor && m.name == "run" && m.params.empty()) run = &m;
    if (!run) throw ConversionError(code::MissingRunMethod, "chain link " + c.name + " declares no run()", c.span.line, c.span.col);
    run->params.push_back({kChainMgmParam, kChainMgmParam});
    run->visibility = Visibility::Public;
    run->is_virtual = false;

    for (auto& m : c.methods) {
        if (m.name == "getName" && !m.is_ctor) m.visibility = Visibility::Public;
        if (m.is_ctor)
            m.initializers.erase(std::remove_if(m.initializers.begin(), m.initializers.end(),
                                                [&](const AstNode& i) { return i.children[0].name == chain; }),
                                 m.initializers.end());
        if (!m.body) continue;
        walk_mut(*m.body, [&](AstNode& n) {
            if (n.kind != NodeKind::Call || n.children.size() != 1) return;
            const std::string& callee = n.children[0].name;
            auto q = callee.rfind("::");
            if (q == std::string::npos || callee.substr(q + 2) != "run" || !chain_lineage.count(callee.substr(0, q)))
                return;
            AstNode mc(NodeKind::MemberCall, n.span);
            mc.name = "runNext";
            AstNode recv(NodeKind::NameRef, n.span);
            recv.name = kChainMgmParam;
            mc.children.push_back(std::move(recv));
            n = std::move(mc);
        });
    }
    return c;
}

bool detect_interface_candidate(const ClassModel& c) {
    if (!c.fields.empty()) return false;
    std::size_t n = 0;
    for (const auto& m : c.methods) {
        if (m.is_ctor || m.is_dtor) {
            if (!m.initializers.empty() || (m.body && !m.body->children.empty())) return false;
            continue;
        }
        if (!m.is_virtual || m.is_static) return false;
        ++n;
    }
    if (n == 0) return false;
    return std::all_of(c.bases.begin(), c.bases.end(),
                       [](const ClassBase& b) { return b.category == BaseCategory::InterfaceCandidate; });
}

ClassModel apply_concepts(ClassModel c, const ProjectIndex& idx, const RuleSet* rules) {
    for (auto& b : c.bases) b.category = categorize_base(b.name, idx);
    c.strategy = classify_inheritance(c, idx);
    switch (c.strategy) {
        case InheritanceStrategy::ManualFallback:
            for (const auto& b : c.bases) c.unresolved_bases.push_back(b.name);
            c.bases.clear();
            return c;
        case InheritanceStrategy::DaoHasA: c = rewrite_dao_inheritance(std::move(c), idx, rules); break;
        case InheritanceStrategy::ChainLink: c = rewrite_chain_inheritance(std::move(c), idx); break;
        case InheritanceStrategy::DaoAndChain:
            c = rewrite_dao_inheritance(std::move(c), idx, rules);
            c = rewrite_chain_inheritance(std::move(c), idx);
            break;
        default: break;
    }
    if (c.is_interface = detect_interface_candidate(c); c.is_interface) {
        for (const auto& b : c.bases) c.implements.push_back(b.name);
        return c;
    }
    for (const auto& b : c.bases) {
        if (b.category == BaseCategory::InterfaceCandidate) c.implements.push_back(b.name);
        else c.extends = b.name;
    }
    if (c.dao_type.empty()) c = rewrite_dao_inheritance(std::move(c), idx, rules);
    return c;
}

// ---- enums ---------------------------------------------------------------------

std::string generate_enum(const EnumModel& e, int depth, DiagnosticList* diags) {
    const std::string p0(static_cast<std::size_t>(depth) * 4, ' ');
    const std::string p1 = p0 + "    ", p2 = p1 + "    ", p3 = p2 + "    ";
    std::string out = p0 + "public enum " + e.name + " {\n" + p1;
    for (std::size_t i = 0; i < e.entries.size(); ++i)
        out += (i ? ", " : "") + e.entries[i].first + "(" + std::to_string(e.entries[i].second) + ")";
    out += ";\n\n";
    out += p1 + e.name + "(int val) {\n" + p2 + "m_Value = val;\n" + p1 + "}\n\n";
    out += p1 + "public int asNum() {\n" + p2 + "return m_Value;\n" + p1 + "}\n\n";
    out += p1 + "public static " + e.name + " forNum(int val) {\n" + p2 + "switch (val) {\n";
    std::map<long long, std::string> first;
    for (const auto& [n, v] : e.entries) {
        if (first.count(v)) {
            if (diags)
                diags->push_back(Diagnostic{Severity::Warning, code::DuplicateEnumValue, "", 0, 0,
                                            e.name + "::" + n + " repeats value " + std::to_string(v) + " of " + first[v]});
            continue;
        }
        first[v] = n;
        out += p3 + "case " + std::to_string(v) + ": return " + n + ";\n";
    }
    out += p3 + "default:\n" + p3 + "    throw new RuntimeException(\"Invalid enum value\");\n";
    out += p2 + "}\n" + p1 + "}\n\n";
    out += p1 + "private int m_Value;\n" + p0 + "}\n";
    return out;
}

EmittedExpr rewrite_enum_int_bridge(const EmittedExpr& e, EnumBridge direction, const JavaType& target) {
    EmittedExpr out = e;
    out.int_literal = false;
    out.atomic = true;
    if (direction == EnumBridge::EnumToInt) {
        out.text = (e.atomic ? e.text : "(" + e.text + ")") + ".asNum()";
        out.type = target.is_numeric() ? target : JavaType::integer();
        out.cxx = CxxType{};
        out.cxx.spelling = out.cxx.canonical = "int";
        return out;
    }
    out.text = target.name + ".forNum(" + e.text + ")";
    out.type = target;
    std::string c = target.name;
    for (std::size_t p; (p = c.find('.')) != std::string::npos;) c.replace(p, 1, "::");
    out.cxx = CxxType{};
    out.cxx.spelling = out.cxx.canonical = c;
    out.cxx.is_enum = true;
    return out;
}

// ---- streams -------------------------------------------------------------------

std::vector<const AstNode*> flatten_stream_chain(const AstNode& e) {
    std::vector<const AstNode*> out;
    const AstNode* n = &e;
    std::vector<const AstNode*> rights;
    while (n->kind == NodeKind::StreamShift && !n->parenthesized) {
        rights.push_back(&n->children[1]);
        n = &n->children[0];
    }
    out.push_back(n);
    out.insert(out.end(), rights.rbegin(), rights.rend());
    return out;
}

namespace {

enum class StreamKind { None, ConsoleOut, ConsoleErr, ConsoleIn, StringStream, Generic };

StreamKind stream_kind(const AstNode& left, ConversionContext& ctx) {
    if (left.kind != NodeKind::NameRef) return StreamKind::None;
    const std::string& n = left.name;
    if (n == "std::cout" || n == "cout") return StreamKind::ConsoleOut;
    if (n == "std::cerr" || n == "cerr" || n == "std::clog" || n == "clog") return StreamKind::ConsoleErr;
    if (n == "std::cin" || n == "cin") return StreamKind::ConsoleIn;
    const TypeBinding* tb = ctx.syms.find(n);
    if (!tb) {
        if (ctx.cls && ctx.cls->find_field(n)) {
            try {
                CxxType t = ctx.cxx_type(ctx.cls->find_field(n)->type_text);
                if (t.canonical == "std::ostringstream" || t.canonical == "std::stringstream") return StreamKind::StringStream;
                if (is_stream_type(t.canonical)) return StreamKind::Generic;
            } catch (const ConversionError&) {
            }
        }
        return StreamKind::None;
    }
    const std::string& c = tb->cxx.canonical;
    if (c == "std::ostringstream" || c == "std::stringstream") return StreamKind::StringStream;
    if (c == "std::istream" || c == "std::istringstream") return StreamKind::ConsoleIn;
    if (is_stream_type(c)) return StreamKind::Generic;
    return StreamKind::None;
}

bool is_endl_node(const AstNode& n) {
    return n.kind == NodeKind::NameRef && (n.name == "std::endl" || n.name == "endl");
}

std::string printable(const AstNode& n, ConversionContext& ctx) {
    EmittedExpr e = transpile_expression(n, std::nullopt, ctx);
    if (e.type.is_enum) e = rewrite_enum_int_bridge(e, EnumBridge::EnumToInt, JavaType::integer());
    if (e.type.is_boolean()) e = coerce(e, JavaType::integer(), ctx);
    return strip_outer_parens(e.text);
}

}  // namespace

bool is_stream_statement(const AstNode& s, ConversionContext& ctx) {
    if (s.kind != NodeKind::ExprStmt || s.children.empty() || s.children[0].kind != NodeKind::StreamShift) return false;
    return stream_kind(*flatten_stream_chain(s.children[0]).front(), ctx) != StreamKind::None;
}

std::string rewrite_stream_statement(const AstNode& s, ConversionContext& ctx) {
    const AstNode& e = s.children[0];
    auto parts = flatten_stream_chain(e);
    StreamKind kind = stream_kind(*parts[0], ctx);
    bool input = kind == StreamKind::ConsoleIn;
    walk(e, [&](const AstNode& n) { input |= n.kind == NodeKind::StreamShift && n.op == ">>"; });
    if (input) throw ConversionError(code::UnsupportedStreamKind, "stream input is not converted", s.span.line, s.span.col);

    std::vector<const AstNode*> ops(parts.begin() + 1, parts.end());
    if (kind == StreamKind::StringStream) {
        std::string out = parts[0]->name;
        for (const auto* o : ops) out += ".append(" + (is_endl_node(*o) ? std::string("'\\n'") : printable(*o, ctx)) + ")";
        return out + ";";
    }
    std::string target = kind == StreamKind::ConsoleOut ? "System.out" : kind == StreamKind::ConsoleErr ? "System.err"
                                                                                                        : parts[0]->name;
    bool newline = !ops.empty() && is_endl_node(*ops.back());
    if (newline) ops.pop_back();
    std::string call = target + (newline ? ".println(" : ".print(");
    if (ops.empty()) return call + ");";
    if (ops.size() == 1 && !is_endl_node(*ops[0])) return call + printable(*ops[0], ctx) + ");";
    std::string sb = "new StringBuilder()";
    for (const auto* o : ops) sb += ".append(" + (is_endl_node(*o) ? std::string("'\\n'") : printable(*o, ctx)) + ")";
    return call + sb + ");";
}

// ---- resources -------------------------------------------------------------------

bool is_resource_declaration(const AstNode& s, ConversionContext& ctx) {
    if (s.kind != NodeKind::VarDeclStmt) return false;
    try {
        CxxType t = ctx.cxx_type(s.type_text);
        return !t.is_pointer() && ctx.index.is_resource(t.canonical);
    } catch (const ConversionError&) {
        return false;
    }
}

std::string apply_try_with_resources(const AstNode& block, ConversionContext& ctx, int depth) {
    ScopeGuard g(ctx.syms);
    std::string pad(static_cast<std::size_t>(depth) * 4, ' ');
    return "{\n" + transpile_block_body(block.children, ctx, depth + 1) + pad + "}";
}

}  // namespace m2j
