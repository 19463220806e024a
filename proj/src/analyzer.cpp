#include "m2j/analyzer.hpp"

#include <sstream>

namespace m2j {

IdiomCounts& IdiomCounts::operator+=(const IdiomCounts& o) {
    files += o.files;
    classes += o.classes;
    loc += o.loc;
    single_base += o.single_base;
    multiple_inheritance += o.multiple_inheritance;
    mi_dao_other += o.mi_dao_other;
    mi_chain_other += o.mi_chain_other;
    mi_chain_dao += o.mi_chain_dao;
    mi_multiple += o.mi_multiple;
    stream_io_uses += o.stream_io_uses;
    ctors_beyond_delegation += o.ctors_beyond_delegation;
    dtors_with_code += o.dtors_with_code;
    enum_int_assignments += o.enum_int_assignments;
    throw_sites += o.throw_sites;
    catch_sites += o.catch_sites;
    return *this;
}

ScanEnv scan_env_for(const AstNode& tu, const TypedefTable& builtins) {
    ScanEnv env;
    env.typedefs = unit_typedefs(tu, builtins);
    env.enum_names = unit_enums(tu);
    walk(tu, [&](const AstNode& n) {
        if (n.kind != NodeKind::EnumDecl) return;
        for (const auto& e : n.enumerators) env.enumerator_owner[e.name] = n.name;
    });
    for (const auto& top : tu.children) {
        if (top.kind != NodeKind::ClassDecl) continue;
        for (const auto& m : top.children)
            if (m.kind == NodeKind::EnumDecl) env.enum_names.insert(top.name + "::" + m.name);
    }
    return env;
}

IdiomCounts scan_structure(const ClassModel& c, const ProjectIndex& idx) {
    IdiomCounts out;
    out.classes = 1;
    if (c.bases.size() == 1) out.single_base = 1;
    if (c.bases.size() > 1) {
        out.multiple_inheritance = 1;
        int dao = 0, chain = 0;
        for (const auto& b : c.bases) {
            BaseCategory cat = categorize_base(b.name, idx);
            dao += cat == BaseCategory::Dao;
            chain += cat == BaseCategory::Chain;
        }
        if (c.bases.size() == 2 && dao == 1 && chain == 1) out.mi_chain_dao = 1;
        else if (c.bases.size() == 2 && dao == 1 && chain == 0) out.mi_dao_other = 1;
        else if (c.bases.size() == 2 && chain == 1 && dao == 0) out.mi_chain_other = 1;
        else out.mi_multiple = 1;
    }
    std::set<std::string> fields;
    for (const auto& f : c.fields) fields.insert(f.name);
    for (const auto& m : c.methods) {
        if (m.is_ctor && m.body && body_beyond_member_init(*m.body, fields)) ++out.ctors_beyond_delegation;
        if (m.is_dtor && m.body && !m.body->children.empty()) ++out.dtors_with_code;
    }
    return out;
}

namespace {

// C++-side type of an expression, as far as a census needs it.
class Typer {
public:
    Typer(const ClassModel& c, const ScanEnv& env) : c_(c), env_(env) {
        for (const auto& f : c.fields) declare(f.name, f.type_text);
    }

    void declare(const std::string& name, const std::string& type_text) { vars_[name] = resolve(type_text); }

    CxxType resolve(std::string_view text) const {
        try {
            return resolve_canonical_type(text, env_.typedefs, &env_.enum_names);
        } catch (const ConversionError&) {
            return {};
        }
    }

    CxxType type_of(const AstNode& e) const {
        switch (e.kind) {
            case NodeKind::Literal:
                switch (e.literal_kind) {
                    case LiteralKind::Int: return resolve("int");
                    case LiteralKind::Float: return resolve("double");
                    case LiteralKind::Char: return resolve("char");
                    case LiteralKind::Bool: return resolve("bool");
                    case LiteralKind::String: return resolve("const char*");
                }
                return {};
            case NodeKind::NameRef: {
                if (auto it = vars_.find(e.name); it != vars_.end()) return it->second;
                std::string n = e.name;
                if (auto q = n.rfind("::"); q != std::string::npos) n = n.substr(q + 2);
                if (auto it = env_.enumerator_owner.find(n); it != env_.enumerator_owner.end()) return resolve(it->second);
                return {};
            }
            case NodeKind::Cast: return resolve(e.type_text);
            case NodeKind::Call: {
                const MethodModel* m = c_.find_method(e.children[0].name);
                return m ? resolve(m->return_type) : CxxType{};
            }
            case NodeKind::MemberAccess:
                if (e.children[0].kind == NodeKind::NameRef && e.children[0].name == "this")
                    if (const FieldModel* f = c_.find_field(e.name)) return resolve(f->type_text);
                return {};
            case NodeKind::UnaryOp:
                if (e.op == "!") return resolve("bool");
                return type_of(e.children[0]);
            case NodeKind::BinaryOp: {
                const std::string& op = e.op;
                if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=" || op == "&&" ||
                    op == "||")
                    return resolve("bool");
                if (op == "=") return type_of(e.children[0]);
                CxxType l = type_of(e.children[0]), r = type_of(e.children[1]);
                if (l.empty() || r.empty()) return {};
                std::string res = arithmetic_result(l.is_enum ? "int" : l.canonical, r.is_enum ? "int" : r.canonical);
                return res.empty() ? CxxType{} : resolve(res);
            }
            default: return {};
        }
    }

private:
    const ClassModel& c_;
    const ScanEnv& env_;
    std::map<std::string, CxxType> vars_;
};

bool numeric(const CxxType& t) { return !t.empty() && !t.is_enum && (is_integral(t.canonical) || is_floating(t.canonical)); }

bool crosses(const CxxType& to, const CxxType& from) {
    return (to.is_enum && numeric(from)) || (numeric(to) && from.is_enum);
}

bool stream_name(std::string_view n) {
    return n == "std::cout" || n == "cout" || n == "std::cerr" || n == "cerr" || n == "std::clog" || n == "clog" ||
           n == "std::cin" || n == "cin";
}

class MethodScanner {
public:
    MethodScanner(const MethodModel& m, const ClassModel& c, const ScanEnv& env) : m_(m), typer_(c, env) {
        for (const auto& p : m.params) typer_.declare(p.name, p.type_text);
        ret_ = typer_.resolve(m.return_type.empty() ? "void" : m.return_type);
    }

    IdiomCounts run() {
        for (const auto& i : m_.initializers) expr(i);
        if (m_.body) stmt(*m_.body);
        return out_;
    }

private:
    void stmt(const AstNode& s) {
        switch (s.kind) {
            case NodeKind::VarDeclStmt:
                typer_.declare(s.name, s.type_text);
                for (const auto& c : s.children) expr(c);
                if (!s.children.empty() && (!s.ctor_style_init || s.children.size() == 1) &&
                    crosses(typer_.resolve(s.type_text), typer_.type_of(s.children[0])))
                    ++out_.enum_int_assignments;
                return;
            case NodeKind::Return:
                if (!s.children.empty()) {
                    expr(s.children[0]);
                    if (crosses(ret_, typer_.type_of(s.children[0]))) ++out_.enum_int_assignments;
                }
                return;
            case NodeKind::Throw:
                ++out_.throw_sites;
                for (const auto& c : s.children) expr(c);
                return;
            case NodeKind::Catch:
                ++out_.catch_sites;
                if (s.type_text != "..." && !s.name.empty()) typer_.declare(s.name, s.type_text);
                for (const auto& c : s.children) stmt(c);
                return;
            case NodeKind::ExprStmt:
                if (!s.children.empty()) {
                    const AstNode* left = &s.children[0];
                    if (left->kind == NodeKind::StreamShift) {
                        while (left->kind == NodeKind::StreamShift && !left->parenthesized) left = &left->children[0];
                        if (left->kind == NodeKind::NameRef &&
                            (stream_name(left->name) || is_stream_type(typer_.type_of(*left).canonical)))
                            ++out_.stream_io_uses;
                    }
                    expr(s.children[0]);
                }
                return;
            default:
                for (const auto& c : s.children) {
                    if (is_expression(c.kind)) expr(c);
                    else stmt(c);
                }
        }
    }

    void expr(const AstNode& e) {
        for (const auto& c : e.children) expr(c);
        if (e.kind == NodeKind::Cast && crosses(typer_.resolve(e.type_text), typer_.type_of(e.children[0])))
            ++out_.enum_int_assignments;
        if (e.kind == NodeKind::BinaryOp && e.op == "=" &&
            crosses(typer_.type_of(e.children[0]), typer_.type_of(e.children[1])))
            ++out_.enum_int_assignments;
    }

    const MethodModel& m_;
    Typer typer_;
    CxxType ret_;
    IdiomCounts out_;
};

}  // namespace

IdiomCounts scan_method(const MethodModel& m, const ClassModel& c, const ScanEnv& env) {
    return MethodScanner(m, c, env).run();
}

IdiomCounts scan_class(const ClassModel& c, const ProjectIndex& idx, const ScanEnv& env) {
    IdiomCounts out = scan_structure(c, idx);
    for (const auto& m : c.methods) out += scan_method(m, c, env);
    return out;
}

IdiomCounts scan_class(const ClassModel& c, const ProjectIndex& idx) {
    ScanEnv env;
    for (const auto& e : c.enums) {
        env.enum_names.insert(e.name);
        env.enum_names.insert(c.name + "::" + e.name);
        for (const auto& [n, v] : e.entries) env.enumerator_owner[n] = e.name;
    }
    return scan_class(c, idx, env);
}

long count_loc(std::string_view text) {
    long n = 0;
    bool in_block = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        // strip comments, remember whether anything else is left
        bool code = false;
        char quote = 0;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (quote) {
                if (line[i] == '\\') ++i;
                else if (line[i] == quote) quote = 0;
                continue;
            }
            if (in_block) {
                if (line.compare(i, 2, "*/") == 0) {
                    in_block = false;
                    ++i;
                }
                continue;
            }
            if (line.compare(i, 2, "//") == 0) break;
            if (line.compare(i, 2, "/*") == 0) {
                in_block = true;
                ++i;
                continue;
            }
            if (line[i] == '"' || line[i] == '\'') quote = line[i];
            if (!std::isspace(static_cast<unsigned char>(line[i]))) code = true;
        }
        if (code) ++n;
        if (eol == text.size()) break;
    }
    return n;
}

IdiomCounts scan_unit(const SourceUnit& src, const ProjectIndex& idx) {
    AstNode tu = parse_translation_unit(src, TypedefTable::builtin());
    ProjectIndex full = index_with_unit(idx, tu);
    ScanEnv env = scan_env_for(tu);
    IdiomCounts out;
    out.files = 1;
    out.loc = count_loc(src.content);
    for (const auto& top : tu.children) {
        if (top.kind != NodeKind::ClassDecl) continue;
        out += scan_class(build_class_model(top, tu, full), full, env);
    }
    return out;
}

IdiomCounts sum_counts(const std::vector<IdiomCounts>& counts) {
    IdiomCounts s;
    for (const auto& c : counts) s += c;
    return s;
}

namespace {

std::string row(const std::string& label, long v) {
    std::string l = label;
    if (l.size() < 40) l.resize(40, ' ');
    return l + " " + std::to_string(v) + "\n";
}

}  // namespace

std::string aggregate_report(const std::vector<IdiomCounts>& counts) {
    IdiomCounts s = sum_counts(counts);
    std::string out = "Artifact statistics\n";
    out += row("files (*.cpp)", s.files);
    out += row("classes", s.classes);
    out += row("lines of code", s.loc);
    out += "\nClasses using one or more base class\n";
    out += row("one base class", s.single_base);
    out += row("more than one base class", s.multiple_inheritance);
    out += row("  one DAO, one other", s.mi_dao_other);
    out += row("  one Chain, one other", s.mi_chain_other);
    out += row("  one Chain, one DAO", s.mi_chain_dao);
    out += row("  multiple, including DAO and Chain", s.mi_multiple);
    out += "\nIdioms\n";
    out += row("stream IO uses", s.stream_io_uses);
    out += row("constructors beyond delegation", s.ctors_beyond_delegation);
    out += row("destructors with code", s.dtors_with_code);
    out += row("enum/int assignments", s.enum_int_assignments);
    out += row("throw sites", s.throw_sites);
    out += row("catch sites", s.catch_sites);
    return out;
}

std::string kv_dump(const IdiomCounts& c) {
    std::ostringstream os;
    os << "files=" << c.files << "\nclasses=" << c.classes << "\nloc=" << c.loc << "\nsingle_base=" << c.single_base
       << "\nmultiple_inheritance=" << c.multiple_inheritance << "\nmi_dao_other=" << c.mi_dao_other
       << "\nmi_chain_other=" << c.mi_chain_other << "\nmi_chain_dao=" << c.mi_chain_dao
       << "\nmi_multiple=" << c.mi_multiple << "\nstream_io_uses=" << c.stream_io_uses
       << "\nctors_beyond_delegation=" << c.ctors_beyond_delegation << "\ndtors_with_code=" << c.dtors_with_code
       << "\nenum_int_assignments=" << c.enum_int_assignments << "\nthrow_sites=" << c.throw_sites
       << "\ncatch_sites=" << c.catch_sites << "\n";
    return os.str();
}

}  // namespace m2j
