#include "m2j/types.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "m2j/diagnostics.hpp"

namespace m2j {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string normalize_space(std::string_view s) {
    std::string out;
    bool pending = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending = !out.empty();
            continue;
        }
        if (pending) out += ' ';
        pending = false;
        out += c;
    }
    return out;
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '<' || c == '[') ++depth;
        else if (c == ')' || c == '>' || c == ']') --depth;
        else if (c == sep && depth == 0) {
            out.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    std::string last = trim(text.substr(start));
    if (!last.empty() || !out.empty()) out.push_back(last);
    return out;
}

std::string CxxType::template_name() const {
    auto lt = canonical.find('<');
    return lt == std::string::npos ? canonical : canonical.substr(0, lt);
}

bool operator==(const CxxType& a, const CxxType& b) {
    return a.canonical == b.canonical && a.is_enum == b.is_enum;
}

TypedefTable TypedefTable::builtin() {
    TypedefTable t;
    t.add("size_t", "unsigned long long");
    t.add("std::size_t", "unsigned long long");
    return t;
}

void TypedefTable::add(std::string name, std::string target) {
    entries_[normalize_space(name)] = normalize_space(target);
}

const std::string* TypedefTable::find(std::string_view name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

void TypedefTable::load_text(std::string_view text, std::string_view origin) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos || trim(t.substr(0, eq)).empty() || trim(t.substr(eq + 1)).empty()) {
            Diagnostic d{Severity::Error, code::RuleParseError, std::string(origin), lineno, 1,
                         "expected name=target"};
            throw ConversionError(d);
        }
        add(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void TypedefTable::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConversionError(code::ConfigError, "cannot read typedef file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    load_text(buf.str(), path.string());
}

namespace {

const std::set<std::string, std::less<>> kBuiltinWords = {"unsigned", "signed", "short", "long", "int",
                                                          "char",     "bool",   "double", "float", "void"};

struct ParsedType {
    std::string base;  // normalized builtin or qualified name
    bool builtin = false;
    std::vector<std::string> args;
    int pointers = 0;
};

std::string normalize_builtin(const std::vector<std::string>& words) {
    int longs = 0;
    bool is_unsigned = false, is_signed = false, has_short = false, has_char = false;
    std::string other;
    for (const auto& w : words) {
        if (w == "long") ++longs;
        else if (w == "unsigned") is_unsigned = true;
        else if (w == "signed") is_signed = true;
        else if (w == "short") has_short = true;
        else if (w == "char") has_char = true;
        else if (w != "int") other = w;
    }
    if (!other.empty()) return other;  // bool, double, float, void
    if (has_char) return is_unsigned ? "unsigned char" : is_signed ? "signed char" : "char";
    if (has_short) return is_unsigned ? "unsigned short" : "short";
    if (longs >= 2) return is_unsigned ? "unsigned long long" : "long long";
    if (longs == 1) return is_unsigned ? "unsigned long" : "long";
    return is_unsigned ? "unsigned int" : "int";
}

ParsedType parse_type_text(std::string_view text) {
    ParsedType out;
    std::vector<std::string> words;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool saw_name = false;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t s = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == ':'))
                ++i;
            std::string w(text.substr(s, i - s));
            if (w == "const" || w == "volatile" || w == "typename" || w == "struct" || w == "class" ||
                w == "enum")
                continue;
            if (kBuiltinWords.count(w) && !saw_name) {
                words.push_back(w);
                out.builtin = true;
            } else if (!out.builtin && !saw_name) {
                out.base = w;
                saw_name = true;
            } else {
                throw ConversionError(code::SyntaxError, "malformed type '" + std::string(text) + "'");
            }
        } else if (c == '<') {
            int depth = 0;
            std::size_t s = i + 1;
            for (; i < text.size(); ++i) {
                if (text[i] == '<') ++depth;
                else if (text[i] == '>' && --depth == 0) break;
            }
            if (i >= text.size()) throw ConversionError(code::SyntaxError, "unbalanced '<' in type");
            out.args = split_top_level(text.substr(s, i - s));
            ++i;
        } else if (c == '*') {
            ++out.pointers;
            ++i;
        } else if (c == '&') {
            ++i;
        } else {
            throw ConversionError(code::SyntaxError, "unexpected '" + std::string(1, c) + "' in type '" +
                                                         std::string(text) + "'");
        }
    }
    if (out.builtin) out.base = normalize_builtin(words);
    if (out.base.empty()) throw ConversionError(code::SyntaxError, "empty type");
    return out;
}

CxxType resolve_depth(std::string_view text, const TypedefTable& tt,
                      const std::set<std::string, std::less<>>* enums, int depth) {
    if (depth > kMaxTypedefDepth)
        throw ConversionError(code::TypedefCycle,
                              "typedef substitution exceeds depth " + std::to_string(kMaxTypedefDepth) + " at '" +
                                  std::string(text) + "'");
    ParsedType p = parse_type_text(text);
    CxxType out;
    out.spelling = normalize_space(text);
    if (!p.builtin && p.args.empty()) {
        if (const std::string* target = tt.find(p.base)) {
            CxxType inner = resolve_depth(*target, tt, enums, depth + 1);
            inner.spelling = out.spelling;
            inner.canonical += std::string(static_cast<std::size_t>(p.pointers), '*');
            return inner;
        }
    }
    std::string canonical = p.base;
    if (!p.args.empty()) {
        canonical += '<';
        for (std::size_t k = 0; k < p.args.size(); ++k) {
            out.template_args.push_back(resolve_depth(p.args[k], tt, enums, depth + 1));
            if (k) canonical += ", ";
            canonical += out.template_args.back().canonical;
        }
        canonical += '>';
    }
    out.is_enum = p.pointers == 0 && enums && enums->count(p.base) > 0;
    out.is_class = !p.builtin && !out.is_enum;
    canonical += std::string(static_cast<std::size_t>(p.pointers), '*');
    out.canonical = canonical;
    return out;
}

}  // namespace

CxxType resolve_canonical_type(std::string_view text, const TypedefTable& tt,
                               const std::set<std::string, std::less<>>* enums) {
    return resolve_depth(text, tt, enums, 0);
}

bool is_integral(std::string_view c) {
    static const std::set<std::string, std::less<>> k = {
        "char", "signed char", "unsigned char", "short", "unsigned short", "int", "unsigned int",
        "long", "unsigned long", "long long", "unsigned long long", "bool"};
    return k.count(c) > 0;
}

bool is_floating(std::string_view c) { return c == "double" || c == "float"; }

bool is_builtin_scalar(std::string_view c) { return is_integral(c) || is_floating(c) || c == "void"; }

bool is_stream_type(std::string_view c) {
    return c == "std::ostream" || c == "std::istream" || c == "std::ostringstream" ||
           c == "std::stringstream" || c == "std::istringstream" || c == "std::iostream";
}

bool is_known_template(std::string_view name) { return name == "std::vector" || name == "std::map"; }

std::string arithmetic_result(std::string_view lhs, std::string_view rhs) {
    auto rank = [](std::string_view c) -> int {
        if (c == "double" || c == "float") return 10;
        if (c == "unsigned long long") return 6;
        if (c == "long long") return 5;
        if (c == "unsigned long") return 4;
        if (c == "long") return 3;
        if (c == "unsigned int") return 2;
        if (is_integral(c)) return 1;
        return -1;
    };
    int a = rank(lhs), b = rank(rhs);
    if (a < 0 || b < 0) return {};
    int r = std::max(a, b);
    switch (r) {
        case 10: return "double";
        case 6: return "unsigned long long";
        case 5: return "long long";
        case 4: return "unsigned long";
        case 3: return "long";
        case 2: return "unsigned int";
        default: return "int";
    }
}

bool is_java_primitive(std::string_view n) {
    return n == "boolean" || n == "char" || n == "int" || n == "long" || n == "double" || n == "void";
}

bool JavaType::is_numeric() const { return name == "char" || name == "int" || name == "long" || name == "double"; }
bool JavaType::is_integral() const { return name == "char" || name == "int" || name == "long"; }

std::string boxed_name(std::string_view p) {
    if (p == "int") return "Integer";
    if (p == "long") return "Long";
    if (p == "char") return "Character";
    if (p == "boolean") return "Boolean";
    if (p == "double") return "Double";
    return std::string(p);
}

JavaType java_type_from_name(std::string_view name) {
    std::string n = trim(name);
    if (is_java_primitive(n)) return JavaType::primitive(n);
    return JavaType::reference(n);
}

int numeric_rank(const JavaType& t) {
    if (t.name == "char") return 0;
    if (t.name == "int") return 1;
    if (t.name == "long") return 2;
    if (t.name == "double") return 3;
    return -1;
}

JavaType binary_numeric_promotion(const JavaType& a, const JavaType& b) {
    int r = std::max({numeric_rank(a), numeric_rank(b), 1});
    if (numeric_rank(a) < 0 || numeric_rank(b) < 0) return JavaType::unknown();
    return JavaType::primitive(r == 3 ? "double" : r == 2 ? "long" : "int");
}

}  // namespace m2j
