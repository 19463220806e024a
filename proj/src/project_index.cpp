#include "m2j/project_index.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "m2j/diagnostics.hpp"
#include "m2j/rules.hpp"
#include "m2j/types.hpp"

namespace m2j {

namespace {

[[noreturn]] void index_error(std::string_view origin, int line, std::string msg) {
    throw ConversionError(Diagnostic{Severity::Error, code::IndexParseError, std::string(origin), line, 1, std::move(msg)});
}

bool is_class_name(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':'; });
}

}  // namespace

MemberSig parse_member_sig(std::string_view text) {
    MemberSig m;
    std::string t = trim(text);
    auto open = t.find('(');
    if (open == std::string::npos) {
        auto sp = t.find(' ');
        if (sp == std::string::npos) throw ConversionError(code::IndexParseError, "member needs a type: " + t);
        m.name = trim(t.substr(0, sp));
        m.type = trim(t.substr(sp + 1));
        return m;
    }
    auto close = t.find(')', open);
    if (close == std::string::npos) throw ConversionError(code::IndexParseError, "unbalanced '(' in " + t);
    m.is_method = true;
    m.name = trim(t.substr(0, open));
    std::string inner = trim(t.substr(open + 1, close - open - 1));
    if (!inner.empty() && inner != "void") m.params = split_top_level(inner);
    m.type = trim(t.substr(close + 1));
    if (m.type.empty()) throw ConversionError(code::IndexParseError, "method needs a trailing return type: " + t);
    return m;
}

void ProjectIndex::load_text(std::string_view text, std::string_view origin) {
    std::istringstream in{std::string(text)};
    std::string line, section;
    int lineno = 0;
    static const std::set<std::string> kSections = {"dao-roots", "chain-root", "hierarchy",
                                                    "resources", "interfaces", "members"};
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') index_error(origin, lineno, "unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (!kSections.count(section)) index_error(origin, lineno, "unknown section [" + section + "]");
            continue;
        }
        if (section.empty()) index_error(origin, lineno, "entry outside of a section");
        if (section == "dao-roots" || section == "resources" || section == "interfaces") {
            if (!is_class_name(t)) index_error(origin, lineno, "expected a class name");
            (section == "dao-roots" ? dao_roots : section == "resources" ? resource_classes : interfaces).insert(t);
        } else if (section == "chain-root") {
            if (!is_class_name(t)) index_error(origin, lineno, "expected a class name");
            if (!chain_root.empty() && chain_root != t) index_error(origin, lineno, "only one chain root");
            chain_root = t;
        } else {
            auto colon = t.find(':');
            // "A::B: x" is not allowed; class names here are unqualified
            if (colon == std::string::npos || (colon + 1 < t.size() && t[colon + 1] == ':'))
                index_error(origin, lineno, "expected 'Class: ...'");
            std::string cls = trim(t.substr(0, colon));
            if (!is_class_name(cls)) index_error(origin, lineno, "bad class name '" + cls + "'");
            std::string rest = trim(t.substr(colon + 1));
            if (section == "hierarchy") {
                auto& bases = hierarchy[cls];
                for (auto& b : split_top_level(rest)) {
                    if (!is_class_name(b)) index_error(origin, lineno, "bad base name '" + b + "'");
                    if (std::find(bases.begin(), bases.end(), b) == bases.end()) bases.push_back(b);
                }
            } else {
                auto& list = members[cls];
                std::size_t start = 0;
                while (start <= rest.size()) {
                    auto semi = rest.find(';', start);
                    std::string part = trim(rest.substr(start, semi == std::string::npos ? std::string::npos
                                                                                          : semi - start));
                    if (!part.empty()) {
                        try {
                            list.push_back(parse_member_sig(part));
                        } catch (const ConversionError& e) {
                            index_error(origin, lineno, e.diagnostic().message);
                        }
                    }
                    if (semi == std::string::npos) break;
                    start = semi + 1;
                }
            }
        }
    }
    try {
        check_acyclic();
    } catch (const ConversionError& e) {
        index_error(origin, 0, e.diagnostic().message);
    }
}

void ProjectIndex::load_file(const std::filesystem::path& path) { load_text(read_text_file(path), path.string()); }

void ProjectIndex::check_acyclic() const {
    std::map<std::string, int, std::less<>> state;  // 1 visiting, 2 done
    std::function<void(const std::string&)> visit = [&](const std::string& c) {
        int& s = state[c];
        if (s == 2) return;
        if (s == 1) throw ConversionError(code::IndexParseError, "class hierarchy has a cycle through " + c);
        s = 1;
        for (const auto& b : bases_of(c)) visit(b);
        state[c] = 2;
    };
    for (const auto& [c, bases] : hierarchy) visit(c);
}

const std::vector<std::string>& ProjectIndex::bases_of(std::string_view cls) const {
    static const std::vector<std::string> kNone;
    auto it = hierarchy.find(cls);
    return it == hierarchy.end() ? kNone : it->second;
}

std::vector<std::string> ProjectIndex::ancestors(std::string_view cls) const {
    std::vector<std::string> out;
    std::vector<std::string> frontier = bases_of(cls);
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& b : frontier) {
            if (b == cls || std::find(out.begin(), out.end(), b) != out.end()) continue;
            out.push_back(b);
            for (const auto& bb : bases_of(b)) next.push_back(bb);
        }
        frontier = std::move(next);
    }
    return out;
}

bool ProjectIndex::is_dao(std::string_view cls) const {
    if (dao_roots.count(cls)) return true;
    for (const auto& a : ancestors(cls))
        if (dao_roots.count(a)) return true;
    return false;
}

bool ProjectIndex::is_chain(std::string_view cls) const {
    if (chain_root.empty()) return false;
    if (cls == chain_root) return true;
    auto anc = ancestors(cls);
    return std::find(anc.begin(), anc.end(), chain_root) != anc.end();
}

bool ProjectIndex::knows_class(std::string_view cls) const {
    return hierarchy.count(cls) || dao_roots.count(cls) || cls == chain_root || resource_classes.count(cls) ||
           interfaces.count(cls) || members.count(cls);
}

const MemberSig* ProjectIndex::own_member(std::string_view cls, std::string_view name) const {
    auto it = members.find(cls);
    if (it == members.end()) return nullptr;
    for (const auto& m : it->second)
        if (m.name == name) return &m;
    return nullptr;
}

std::vector<std::string> ProjectIndex::declaring_classes(std::string_view cls, std::string_view name) const {
    std::vector<std::string> out;
    if (own_member(cls, name)) out.emplace_back(cls);
    for (const auto& a : ancestors(cls))
        if (own_member(a, name)) out.push_back(a);
    return out;
}

}  // namespace m2j
