#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

#include "m2j/ast.hpp"
#include "m2j/types.hpp"

namespace m2j {

struct SourceUnit {
    std::string path;
    std::string content;
    std::string expected_class;  // file stem

    static SourceUnit from_text(std::string path, std::string content);
    static SourceUnit load(const std::filesystem::path& path);
};

// Parses one MiniCxx translation unit. Identifiers that are not declared in the
// unit or in `builtins` are left as external references for later resolution.
AstNode parse_translation_unit(const SourceUnit& src, const TypedefTable& builtins);

// First full ClassDecl named `expected`; forward declarations are skipped.
// Throws PrimaryClassNotFound.
const AstNode& locate_primary_class(const AstNode& tu, std::string_view expected);

// builtins plus every TypedefDecl in the unit (including class-nested ones).
TypedefTable unit_typedefs(const AstNode& tu, const TypedefTable& builtins);

// Names of every enum declared anywhere in the unit.
std::set<std::string, std::less<>> unit_enums(const AstNode& tu);

// Re-emits an AST as MiniCxx source; parsing the result yields a structurally
// equal tree.
std::string print_minicxx(const AstNode& n);

}  // namespace m2j
