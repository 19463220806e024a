#include "m2j/rules.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "m2j/diagnostics.hpp"

namespace m2j {

namespace {

[[noreturn]] void parse_error(std::string_view origin, int line, std::string message,
                              const char* c = code::RuleParseError) {
    throw ConversionError(Diagnostic{Severity::Error, c, std::string(origin), line, 1, std::move(message)});
}

bool is_comment_or_blank(std::string_view line) {
    std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Column split for member rows. The first `angle_cols` columns also treat <>
// as brackets; output templates may contain comparison operators.
std::vector<std::string> split_columns(std::string_view text, std::size_t angle_cols) {
    std::vector<std::string> out;
    int depth = 0;
    char quote = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quote) {
            if (c == '\\') ++i;
            else if (c == quote) quote = 0;
            continue;
        }
        bool angles = out.size() < angle_cols;
        if (c == '"' || c == '\'') quote = c;
        else if (c == '(' || c == '[' || (angles && c == '<')) ++depth;
        else if (c == ')' || c == ']' || (angles && c == '>')) --depth;
        else if (c == ',' && depth == 0) {
            out.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(text.substr(start)));
    return out;
}

// Finds the ')' matching the '(' at `open`.
std::size_t matching_paren(std::string_view s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')' && --depth == 0) return i;
    }
    return std::string_view::npos;
}

std::vector<std::string> split_params(std::string_view inner) {
    std::string t = trim(inner);
    if (t.empty() || t == "void") return {};
    return split_top_level(t);
}

// Largest $N index in an output template, -1 if none.
int max_placeholder(std::string_view out, bool& uses_receiver) {
    int best = -1;
    uses_receiver = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] != '$' || i + 1 >= out.size() || !std::isdigit(static_cast<unsigned char>(out[i + 1]))) continue;
        std::size_t j = i + 1;
        int n = 0;
        while (j < out.size() && std::isdigit(static_cast<unsigned char>(out[j]))) n = n * 10 + (out[j++] - '0');
        if (n == 0) uses_receiver = true;
        best = std::max(best, n);
    }
    return best;
}

bool is_dotted_name(std::string_view s) {
    if (s.empty() || s.front() == '.' || s.back() == '.' || s.find('.') == std::string_view::npos) return false;
    char prev = '.';
    for (char c : s) {
        if (c == '.') {
            if (prev == '.') return false;
        } else if (!is_ident_char(c)) {
            return false;
        }
        prev = c;
    }
    return true;
}

CxxSignature parse_cxx_signature(std::string_view text, const TypedefTable& tt, std::string_view origin, int line) {
    CxxSignature sig;
    std::string t = trim(text);
    std::size_t open = t.find('(');
    // operator() has its own parentheses before the parameter list
    if (t.rfind("operator()", 0) == 0) open = t.find('(', 10);
    if (open == std::string::npos || open == 0) parse_error(origin, line, "signature without parameter list: " + t);
    std::size_t close = matching_paren(t, open);
    if (close == std::string::npos) parse_error(origin, line, "unbalanced parentheses in signature: " + t);
    sig.name = trim(t.substr(0, open));
    std::string result = trim(t.substr(close + 1));
    if (result.empty()) parse_error(origin, line, "signature needs a trailing return type: " + t);

    // type variables pass through resolution unchanged ("const KEY&" -> "KEY")
    auto canon = [&](const std::string& p) -> std::string {
        try {
            return resolve_canonical_type(p, tt).canonical;
        } catch (const ConversionError& e) {
            parse_error(origin, line, e.diagnostic().message);
        }
    };
    for (const auto& p : split_params(std::string_view(t).substr(open + 1, close - open - 1)))
        sig.params.push_back(canon(p));
    sig.result = canon(result);
    return sig;
}

JavaSignature parse_java_signature(std::string_view text, std::string_view origin, int line) {
    JavaSignature sig;
    std::string t = trim(text);
    int angle = 0;
    std::size_t open = std::string::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '<') ++angle;
        else if (t[i] == '>') --angle;
        else if (t[i] == '(' && angle == 0) {
            open = i;
            break;
        }
    }
    if (open == std::string::npos) parse_error(origin, line, "java signature without parameter list: " + t);
    std::size_t close = matching_paren(t, open);
    if (close == std::string::npos || !trim(std::string_view(t).substr(close + 1)).empty())
        parse_error(origin, line, "malformed java signature: " + t);
    std::string head = trim(std::string_view(t).substr(0, open));
    // split "result receiver" at the last space outside <>
    angle = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (head[i] == '<') ++angle;
        else if (head[i] == '>') --angle;
        else if (head[i] == ' ' && angle == 0) split = i;
    }
    if (split == std::string::npos) parse_error(origin, line, "java signature needs result and receiver: " + t);
    sig.result = trim(head.substr(0, split));
    sig.receiver = trim(head.substr(split + 1));
    sig.params = split_params(std::string_view(t).substr(open + 1, close - open - 1));
    return sig;
}

bool params_equal(const MemberExprRule& a, const MemberExprRule& b) { return a.cxx.params == b.cxx.params; }

}  // namespace

std::vector<std::string> Template::placeholders() const {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while ((pos = body.find("{{", pos)) != std::string::npos) {
        std::size_t end = body.find("}}", pos + 2);
        if (end == std::string::npos) break;
        std::string sym = trim(std::string_view(body).substr(pos + 2, end - pos - 2));
        if (std::find(out.begin(), out.end(), sym) == out.end()) out.push_back(sym);
        pos = end + 2;
    }
    return out;
}

std::string FreeFunctionRule::java_class() const {
    auto dot = java_location.rfind('.');
    return dot == std::string::npos ? java_location : java_location.substr(dot + 1);
}

std::vector<std::pair<std::string, int>> join_continuations(std::string_view text) {
    std::vector<std::pair<std::string, int>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool continuing = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string piece = continuing ? trim(line) : line;
        if (continuing) {
            out.back().first += ' ';
            out.back().first += piece;
        } else {
            out.emplace_back(piece, lineno);
        }
        std::string& cur = out.back().first;
        std::size_t e = cur.find_last_not_of(" \t");
        continuing = e != std::string::npos && cur[e] == '\\';
        if (continuing) {
            cur.erase(e);
            while (!cur.empty() && (cur.back() == ' ' || cur.back() == '\t')) cur.pop_back();
        }
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConversionError(code::ConfigError, "cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string strip_outer_parens(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') return text;
    int depth = 0;
    char quote = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quote) {
            if (c == '\\') ++i;
            else if (c == quote) quote = 0;
            continue;
        }
        if (c == '"' || c == '\'') quote = c;
        else if (c == '(') ++depth;
        else if (c == ')' && --depth == 0 && i + 1 != text.size()) return text;
    }
    return text.substr(1, text.size() - 2);
}

bool java_text_is_atomic(std::string_view text) {
    std::string t = trim(text);
    if (t.empty()) return false;
    if (t.rfind("new ", 0) == 0) return false;
    int depth = 0;
    char quote = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (quote) {
            if (c == '\\') ++i;
            else if (c == quote) quote = 0;
            continue;
        }
        if (c == '"' || c == '\'') quote = c;
        else if (c == '(' || c == '[') {
            // a leading '(' is a cast or a parenthesized expression; only a
            // fully wrapped "( ... )" counts as atomic
            if (depth == 0 && i == 0) {
                std::size_t close = matching_paren(t, 0);
                if (close == t.size() - 1) return true;
                return false;
            }
            ++depth;
        } else if (c == ')' || c == ']') {
            --depth;
        } else if (depth == 0 && !is_ident_char(c) && c != '.') {
            return false;
        }
    }
    return true;
}

void RuleSet::load_templates_text(std::string_view text, std::string_view origin) {
    for (auto& [line, lineno] : join_continuations(text)) {
        if (is_comment_or_blank(line)) {
            template_layout_.emplace_back(Verbatim{line});
            continue;
        }
        auto sep = line.find(":=");
        if (sep == std::string::npos) parse_error(origin, lineno, "expected name:=body");
        Template t{trim(std::string_view(line).substr(0, sep)), line.substr(sep + 2)};
        if (t.name.empty() || !std::all_of(t.name.begin(), t.name.end(), is_ident_char))
            parse_error(origin, lineno, "bad template name '" + t.name + "'");
        std::size_t pos = 0;
        while ((pos = t.body.find("{{", pos)) != std::string::npos) {
            std::size_t end = t.body.find("}}", pos + 2);
            if (end == std::string::npos) parse_error(origin, lineno, "unterminated placeholder in " + t.name);
            std::string_view inner = std::string_view(t.body).substr(pos + 2, end - pos - 2);
            if (inner.find("{{") != std::string_view::npos)
                parse_error(origin, lineno, "nested placeholder in " + t.name);
            if (trim(inner).empty()) parse_error(origin, lineno, "empty placeholder in " + t.name);
            pos = end + 2;
        }
        if (templates.count(t.name))
            parse_error(origin, lineno, "template '" + t.name + "' defined twice", code::DuplicateTemplateName);
        template_layout_.emplace_back(t.name);
        templates.emplace(t.name, std::move(t));
    }
}

void RuleSet::load_free_functions_text(std::string_view text, std::string_view origin) {
    for (auto& [line, lineno] : join_continuations(text)) {
        if (is_comment_or_blank(line)) {
            free_fn_layout_.emplace_back(Verbatim{line});
            continue;
        }
        auto cols = split_columns(line, 0);
        if (cols.size() < 2 || cols.size() > 3 || cols[0].empty() || cols[1].empty())
            parse_error(origin, lineno, "expected cxx_name, package.Class[, java_name]");
        FreeFunctionRule r;
        r.cxx_name = cols[0];
        r.java_location = cols[1];
        r.third_column = cols.size() == 3;
        if (r.third_column) r.java_name = cols[2];
        if (!std::all_of(r.cxx_name.begin(), r.cxx_name.end(), [](char c) { return is_ident_char(c) || c == ':'; }))
            parse_error(origin, lineno, "bad function name '" + r.cxx_name + "'");
        if (!is_dotted_name(r.java_location))
            parse_error(origin, lineno, "java location must be package-qualified: '" + r.java_location + "'");
        if (free_functions.count(r.cxx_name))
            parse_error(origin, lineno, "free function '" + r.cxx_name + "' mapped twice",
                        code::DuplicateExactSignature);
        free_fn_layout_.emplace_back(r.cxx_name);
        free_functions.emplace(r.cxx_name, std::move(r));
    }
}

void RuleSet::load_member_rules_text(std::string_view text, const TypedefTable& tt, std::string_view origin) {
    for (auto& [line, lineno] : join_continuations(text)) {
        if (is_comment_or_blank(line)) {
            member_layout_.emplace_back(Verbatim{line});
            continue;
        }
        auto cols = split_columns(line, 3);
        if (cols.size() < 4) parse_error(origin, lineno, "member rule needs at least four columns");
        MemberExprRule r;
        r.line = lineno;
        r.cxx_class = cols[0];
        auto lt = r.cxx_class.find('<');
        if (lt != std::string::npos) {
            auto gt = r.cxx_class.rfind('>');
            if (gt == std::string::npos || gt < lt) parse_error(origin, lineno, "unbalanced '<' in class column");
            r.class_key = trim(std::string_view(r.cxx_class).substr(0, lt));
            r.type_vars = split_top_level(std::string_view(r.cxx_class).substr(lt + 1, gt - lt - 1));
        } else {
            try {
                r.class_key = resolve_canonical_type(r.cxx_class, tt).canonical;
            } catch (const ConversionError& e) {
                parse_error(origin, lineno, e.diagnostic().message);
            }
        }
        r.cxx_signature_text = cols[1];
        r.cxx = parse_cxx_signature(cols[1], tt, origin, lineno);
        r.java_signature_text = cols[2];
        r.java = parse_java_signature(cols[2], origin, lineno);
        r.output = cols[3];
        if (r.output.empty()) parse_error(origin, lineno, "empty output template");
        for (std::size_t k = 4; k < cols.size(); ++k) {
            r.extra_columns.push_back(cols[k]);
            std::istringstream words(cols[k]);
            std::string w;
            while (words >> w) {
                if (w == "static-call") r.flags |= kStaticCall;
                else if (w == "needs-narrowing-check") r.flags |= kNeedsNarrowingCheck;
                else if (is_dotted_name(w)) r.imports.push_back(w);
                else parse_error(origin, lineno, "unknown flag or import '" + w + "'");
            }
        }
        bool uses_receiver = false;
        int maxp = max_placeholder(r.output, uses_receiver);
        if (maxp > static_cast<int>(r.arity()))
            parse_error(origin, lineno,
                        "placeholder $" + std::to_string(maxp) + " exceeds " + std::to_string(r.arity()) +
                            " parameters");
        if ((r.flags & kStaticCall) && uses_receiver)
            parse_error(origin, lineno, "static-call rule must not use $0");

        MemberRuleKey key{r.class_key, r.cxx.name, r.arity()};
        auto& bucket = member_rules[key];
        for (const auto& other : bucket)
            if (params_equal(other, r))
                parse_error(origin, lineno,
                            "signature " + r.cxx_signature_text + " already defined at line " +
                                std::to_string(other.line),
                            code::DuplicateExactSignature);
        bucket.push_back(std::move(r));
        member_layout_.emplace_back(MemberRowRef{key, bucket.size() - 1});
    }
}

bool RuleSet::has_class(std::string_view class_key) const { return class_exemplar(class_key) != nullptr; }

const MemberExprRule* RuleSet::class_exemplar(std::string_view class_key) const {
    // layout order gives the first declared row
    for (const auto& item : member_layout_) {
        if (const auto* ref = std::get_if<MemberRowRef>(&item))
            if (ref->key.class_key == class_key) return &member_rules.at(ref->key)[ref->index];
    }
    return nullptr;
}

std::size_t RuleSet::member_row_count() const {
    std::size_t n = 0;
    for (const auto& [k, v] : member_rules) n += v.size();
    return n;
}

std::string RuleSet::serialize_templates() const {
    std::string out;
    for (const auto& item : template_layout_) {
        if (const auto* v = std::get_if<Verbatim>(&item)) out += v->text;
        else {
            const auto& t = templates.at(std::get<std::string>(item));
            out += t.name + ":=" + t.body;
        }
        out += '\n';
    }
    return out;
}

std::string RuleSet::serialize_free_functions() const {
    std::string out;
    for (const auto& item : free_fn_layout_) {
        if (const auto* v = std::get_if<Verbatim>(&item)) out += v->text;
        else {
            const auto& r = free_functions.at(std::get<std::string>(item));
            out += r.cxx_name + ", " + r.java_location;
            if (r.third_column) out += r.java_name.empty() ? "," : ", " + r.java_name;
        }
        out += '\n';
    }
    return out;
}

std::string RuleSet::serialize_member_rules() const {
    std::string out;
    for (const auto& item : member_layout_) {
        if (const auto* v = std::get_if<Verbatim>(&item)) out += v->text;
        else {
            const auto& ref = std::get<MemberRowRef>(item);
            const auto& r = member_rules.at(ref.key)[ref.index];
            out += r.cxx_class + ", " + r.cxx_signature_text + ", " + r.java_signature_text + ", " + r.output;
            for (const auto& c : r.extra_columns) out += ", " + c;
        }
        out += '\n';
    }
    return out;
}

RuleSet load_rules(const std::filesystem::path& templates_file, const std::filesystem::path& free_fn_file,
                   const std::filesystem::path& member_file, const TypedefTable& tt) {
    RuleSet rs;
    rs.load_templates_text(read_text_file(templates_file), templates_file.string());
    rs.load_free_functions_text(read_text_file(free_fn_file), free_fn_file.string());
    rs.load_member_rules_text(read_text_file(member_file), tt, member_file.string());
    return rs;
}

std::string instantiate_template(const Template& t, const std::map<std::string, std::string>& subs) {
    std::string out;
    std::size_t pos = 0;
    while (true) {
        std::size_t open = t.body.find("{{", pos);
        if (open == std::string::npos) break;
        std::size_t close = t.body.find("}}", open + 2);
        if (close == std::string::npos) break;
        std::string sym = trim(std::string_view(t.body).substr(open + 2, close - open - 2));
        auto it = subs.find(sym);
        if (it == subs.end())
            throw ConversionError(code::MissingSubstitution,
                                  "template '" + t.name + "' needs a value for {{" + sym + "}}");
        out.append(t.body, pos, open - pos);
        out += it->second;
        pos = close + 2;
    }
    out.append(t.body, pos);
    return out;
}

std::string instantiate_template(const RuleSet& rs, std::string_view name,
                                 const std::map<std::string, std::string>& subs) {
    auto it = rs.templates.find(name);
    if (it == rs.templates.end())
        throw ConversionError(code::UnknownTemplate, "no template named '" + std::string(name) + "'");
    return instantiate_template(it->second, subs);
}

std::optional<FreeFunctionMapping> map_free_function(const RuleSet& rs, std::string_view name) {
    auto it = rs.free_functions.find(name);
    if (it == rs.free_functions.end()) return std::nullopt;
    const FreeFunctionRule& r = it->second;
    return FreeFunctionMapping{r.java_class() + "." + r.effective_name(), r.effective_name(), r.java_location};
}

std::optional<RuleMatch> match_member_rule(const RuleSet& rs, const CxxType& receiver, std::string_view method,
                                           const std::vector<MemberArg>& args) {
    std::string key = receiver.template_name();
    if (!rs.has_class(key)) return std::nullopt;
    auto it = rs.member_rules.find(MemberRuleKey{key, std::string(method), args.size()});
    auto describe = [&] {
        std::string s = receiver.canonical + "::" + std::string(method) + "(";
        for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i].cxx.canonical;
        return s + ")";
    };
    if (it == rs.member_rules.end()) throw ConversionError(code::NoRuleMatch, "no rule for " + describe());

    std::vector<std::pair<int, RuleMatch>> hits;
    for (const auto& r : it->second) {
        RuleMatch m{&r, {}};
        if (!r.type_vars.empty()) {
            if (r.type_vars.size() != receiver.template_args.size()) continue;
            for (std::size_t i = 0; i < r.type_vars.size(); ++i) m.bindings[r.type_vars[i]] = receiver.template_args[i];
        }
        int exact = 0;
        bool ok = true;
        for (std::size_t i = 0; i < args.size() && ok; ++i) {
            std::string want = r.cxx.params[i];
            if (auto b = m.bindings.find(want); b != m.bindings.end()) want = b->second.canonical;
            if (args[i].cxx.canonical == want) ++exact;
            else
                ok = args[i].int_literal && is_integral(want) && want != "char" && want != "bool";
        }
        if (ok) hits.emplace_back(exact, std::move(m));
    }
    if (hits.empty()) throw ConversionError(code::NoRuleMatch, "no rule for " + describe());
    std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    if (hits.size() > 1 && hits[0].first == hits[1].first)
        throw ConversionError(code::AmbiguousRule, "rules at lines " + std::to_string(hits[0].second.rule->line) +
                                                       " and " + std::to_string(hits[1].second.rule->line) +
                                                       " both match " + describe());
    return std::move(hits[0].second);
}

std::string substitute_java_type_vars(std::string_view pattern, const std::map<std::string, JavaType>& vars) {
    std::string out;
    int angle = 0;
    for (std::size_t i = 0; i < pattern.size();) {
        char c = pattern[i];
        if (is_ident_char(c)) {
            std::size_t s = i;
            while (i < pattern.size() && is_ident_char(pattern[i])) ++i;
            std::string word(pattern.substr(s, i - s));
            auto it = vars.find(word);
            if (it == vars.end()) out += word;
            else out += angle > 0 ? boxed_name(it->second.name) : it->second.name;
            continue;
        }
        if (c == '<') ++angle;
        else if (c == '>') --angle;
        out += c;
        ++i;
    }
    return out;
}

namespace {

std::map<std::string, JavaType> java_bindings(const RuleMatch& m, const JavaTypeMapper& map_type) {
    std::map<std::string, JavaType> out;
    for (const auto& [var, t] : m.bindings) out[var] = map_type(t);
    return out;
}

JavaType java_type_for_pattern(const std::string& pattern, const std::map<std::string, JavaType>& vars) {
    if (auto it = vars.find(trim(pattern)); it != vars.end()) return it->second;
    return java_type_from_name(substitute_java_type_vars(pattern, vars));
}

// A placeholder sits in an argument slot when it is the whole text between
// '(' / ',' and ')' / ','.
bool delimited_slot(std::string_view out, std::size_t begin, std::size_t end) {
    std::size_t b = begin;
    while (b > 0 && out[b - 1] == ' ') --b;
    std::size_t e = end;
    while (e < out.size() && out[e] == ' ') ++e;
    bool left = b > 0 && (out[b - 1] == '(' || out[b - 1] == ',');
    bool right = e < out.size() && (out[e] == ')' || out[e] == ',');
    return left && right;
}

}  // namespace

std::optional<JavaType> rule_param_java_type(const RuleMatch& m, std::size_t i, const JavaTypeMapper& map_type) {
    if (!m.rule || i >= m.rule->java.params.size()) return std::nullopt;
    return java_type_for_pattern(m.rule->java.params[i], java_bindings(m, map_type));
}

EmittedExpr apply_member_rule(const RuleMatch& m, const EmittedExpr& receiver, const std::vector<EmittedExpr>& args,
                              const JavaTypeMapper& map_type) {
    const MemberExprRule& r = *m.rule;
    EmittedExpr out;
    const std::string& tpl = r.output;
    for (std::size_t i = 0; i < tpl.size();) {
        if (tpl[i] == '$' && i + 1 < tpl.size() && std::isdigit(static_cast<unsigned char>(tpl[i + 1]))) {
            std::size_t j = i + 1;
            std::size_t n = 0;
            while (j < tpl.size() && std::isdigit(static_cast<unsigned char>(tpl[j]))) n = n * 10 + (tpl[j++] - '0');
            const EmittedExpr& e = n == 0 ? receiver : args.at(n - 1);
            bool wrap = !e.atomic && !java_text_is_atomic(e.text) && (n == 0 || !delimited_slot(tpl, i, j));
            if (wrap) out.text += "(" + e.text + ")";
            else out.text += n == 0 ? e.text : strip_outer_parens(e.text);
            i = j;
            continue;
        }
        out.text += tpl[i++];
    }
    auto vars = java_bindings(m, map_type);
    out.type = java_type_for_pattern(r.java.result, vars);
    if (auto it = m.bindings.find(r.cxx.result); it != m.bindings.end()) out.cxx = it->second;
    else out.cxx = CxxType{r.cxx.result, r.cxx.result, {}, false, !is_builtin_scalar(r.cxx.result)};
    if (!(r.flags & kStaticCall)) out.required_imports = receiver.required_imports;
    for (const auto& a : args) out.required_imports.insert(a.required_imports.begin(), a.required_imports.end());
    out.required_imports.insert(r.imports.begin(), r.imports.end());
    out.atomic = java_text_is_atomic(out.text);
    return out;
}

EmittedExpr rewrite_member_expression(const RuleSet& rs, const EmittedExpr& receiver, const CxxType& cxx_class,
                                      std::string_view method, const std::vector<EmittedExpr>& args,
                                      const std::vector<CxxType>& arg_cxx_types, const JavaTypeMapper& map_type) {
    std::vector<MemberArg> margs;
    for (std::size_t i = 0; i < arg_cxx_types.size(); ++i)
        margs.push_back(MemberArg{arg_cxx_types[i], i < args.size() && args[i].int_literal});
    auto m = match_member_rule(rs, cxx_class, method, margs);
    if (!m)
        throw ConversionError(code::NoRuleMatch,
                              "class " + cxx_class.canonical + " has no member rules (" + std::string(method) + ")");
    return apply_member_rule(*m, receiver, args, map_type);
}

}  // namespace m2j
