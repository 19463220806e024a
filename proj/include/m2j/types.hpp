#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace m2j {

// A C++ type as written plus its canonical form. `canonical` has every typedef
// followed, `const` and references removed, and builtin spellings normalized
// ("unsigned" -> "unsigned int", "long int" -> "long"). Pointers are kept.
struct CxxType {
    std::string spelling;
    std::string canonical;
    std::vector<CxxType> template_args;
    bool is_enum = false;
    bool is_class = false;

    // canonical without template arguments, e.g. "std::map"
    std::string template_name() const;
    bool is_pointer() const { return !canonical.empty() && canonical.back() == '*'; }
    bool empty() const { return canonical.empty(); }
};

bool operator==(const CxxType& a, const CxxType& b);

class TypedefTable {
public:
    // size_t -> unsigned long long (64-bit model only)
    static TypedefTable builtin();

    void add(std::string name, std::string target);
    const std::string* find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }
    const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }

    // "name=target" lines, '#' comments; later entries override earlier ones.
    void load_file(const std::filesystem::path& path);
    void load_text(std::string_view text, std::string_view origin = "<typedefs>");

private:
    std::map<std::string, std::string, std::less<>> entries_;
};

inline constexpr int kMaxTypedefDepth = 32;

// Throws ConversionError(TypedefCycle) when substitution exceeds kMaxTypedefDepth.
CxxType resolve_canonical_type(std::string_view text, const TypedefTable& tt,
                               const std::set<std::string, std::less<>>* enums = nullptr);

bool is_builtin_scalar(std::string_view canonical);
bool is_integral(std::string_view canonical);
bool is_floating(std::string_view canonical);
bool is_stream_type(std::string_view canonical);
// std::vector / std::map; the only templates MiniCxx accepts.
bool is_known_template(std::string_view name);

// Usual arithmetic conversions over canonical builtin spellings; enums promote
// to int. Returns empty when either side is not arithmetic.
std::string arithmetic_result(std::string_view lhs, std::string_view rhs);

// Splits "a, b<c, d>, e" at top-level commas (angle- and paren-aware) and trims.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');
std::string trim(std::string_view s);
std::string normalize_space(std::string_view s);

struct JavaType {
    std::string name;  // empty = unknown (opaque to coercions)
    bool is_primitive = false;
    bool is_enum = false;

    static JavaType unknown() { return {}; }
    static JavaType primitive(std::string n) { return {std::move(n), true, false}; }
    static JavaType reference(std::string n) { return {std::move(n), false, false}; }
    static JavaType enumeration(std::string n) { return {std::move(n), false, true}; }
    static JavaType boolean() { return primitive("boolean"); }
    static JavaType integer() { return primitive("int"); }
    static JavaType string() { return reference("String"); }

    bool is_unknown() const { return name.empty(); }
    bool is_boolean() const { return name == "boolean"; }
    bool is_numeric() const;  // char, int, long, double
    bool is_integral() const;  // char, int, long
    bool operator==(const JavaType& o) const { return name == o.name; }
};

bool is_java_primitive(std::string_view name);
std::string boxed_name(std::string_view primitive);
// 0 char, 1 int, 2 long, 3 double, -1 otherwise
int numeric_rank(const JavaType& t);
JavaType binary_numeric_promotion(const JavaType& a, const JavaType& b);

struct TypeBinding {
    CxxType cxx;
    JavaType java;
};

// A translated expression: Java text, its static Java type, the C++ type it
// came from, and the imports it needs.
struct EmittedExpr {
    std::string text;
    JavaType type;
    std::set<std::string> required_imports;
    CxxType cxx;
    // true for names, literals, calls, member and index expressions: safe as a
    // receiver or operand without extra parentheses
    bool atomic = true;
    bool int_literal = false;
};

// Builds a JavaType from a plain Java type name ("int", "String", "ArrayList<Integer>").
JavaType java_type_from_name(std::string_view name);

}  // namespace m2j
