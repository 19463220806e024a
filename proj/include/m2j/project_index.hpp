#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace m2j {

// A method or field of a class defined outside the file being converted,
// written like a member-rule signature: "getName() std::string", "m_iRow int".
struct MemberSig {
    std::string name;
    bool is_method = false;
    std::vector<std::string> params;  // C++ type text
    std::string type;                 // return or field type

    bool operator==(const MemberSig&) const = default;
};

// Cross-file knowledge: the only thing a conversion may know about other
// classes. Sections: [dao-roots] [chain-root] [hierarchy] [resources]
// [interfaces] [members].
class ProjectIndex {
public:
    std::set<std::string, std::less<>> dao_roots;
    std::string chain_root;
    std::map<std::string, std::vector<std::string>, std::less<>> hierarchy;
    std::set<std::string, std::less<>> resource_classes;
    std::set<std::string, std::less<>> interfaces;
    std::map<std::string, std::vector<MemberSig>, std::less<>> members;

    // Throws IndexParseError (with line) on malformed input or a hierarchy cycle.
    void load_text(std::string_view text, std::string_view origin = "<index>");
    void load_file(const std::filesystem::path& path);
    // Throws IndexParseError when class_hierarchy has a cycle.
    void check_acyclic() const;

    const std::vector<std::string>& bases_of(std::string_view cls) const;
    // Transitive bases, nearest first, each once.
    std::vector<std::string> ancestors(std::string_view cls) const;
    bool is_dao(std::string_view cls) const;  // cls or an ancestor is a DAO root
    bool is_chain(std::string_view cls) const;
    bool is_interface(std::string_view cls) const { return interfaces.count(cls) > 0; }
    bool is_resource(std::string_view cls) const { return resource_classes.count(cls) > 0; }
    bool knows_class(std::string_view cls) const;

    // Member declared by `cls` itself.
    const MemberSig* own_member(std::string_view cls, std::string_view name) const;
    // Classes among {cls} + ancestors(cls) that declare `name`, nearest first.
    std::vector<std::string> declaring_classes(std::string_view cls, std::string_view name) const;
};

MemberSig parse_member_sig(std::string_view text);

}  // namespace m2j
