#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace m2j {

// Stable diagnostic codes. CI scripts grep for these, so never rename one.
namespace code {
inline constexpr const char* SyntaxError = "SyntaxError";
inline constexpr const char* TypedefCycle = "TypedefCycle";
inline constexpr const char* PrimaryClassNotFound = "PrimaryClassNotFound";
inline constexpr const char* NoRuleMatch = "NoRuleMatch";
inline constexpr const char* AmbiguousRule = "AmbiguousRule";
inline constexpr const char* UnboundName = "UnboundName";
inline constexpr const char* DuplicateDeclaration = "DuplicateDeclaration";
inline constexpr const char* RuleParseError = "RuleParseError";
inline constexpr const char* DuplicateTemplateName = "DuplicateTemplateName";
inline constexpr const char* DuplicateExactSignature = "DuplicateExactSignature";
inline constexpr const char* UnknownTemplate = "UnknownTemplate";
inline constexpr const char* MissingSubstitution = "MissingSubstitution";
inline constexpr const char* NoMapping = "NoMapping";
inline constexpr const char* UnresolvedDaoAccess = "UnresolvedDaoAccess";
inline constexpr const char* MissingRunMethod = "MissingRunMethod";
inline constexpr const char* UnsupportedStreamKind = "UnsupportedStreamKind";
inline constexpr const char* UnsupportedConstruct = "UnsupportedConstruct";
inline constexpr const char* ManualFallback = "ManualFallback";
inline constexpr const char* StaleReplace = "StaleReplace";
inline constexpr const char* ConfigError = "ConfigError";
inline constexpr const char* IndexParseError = "IndexParseError";
// warnings
inline constexpr const char* DuplicateEnumValue = "DuplicateEnumValue";
inline constexpr const char* ResourceAfterUse = "ResourceAfterUse";
inline constexpr const char* CtorSideEffects = "CtorSideEffects";
inline constexpr const char* DestructorDropped = "DestructorDropped";
inline constexpr const char* MissingMethodBody = "MissingMethodBody";
inline constexpr const char* NarrowingCheck = "NarrowingCheck";
}  // namespace code

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string path;
    int line = 0;
    int col = 0;
    std::string message;

    // "path:line:col: CODE message"
    std::string format() const;
};

class ConversionError : public std::runtime_error {
public:
    explicit ConversionError(Diagnostic d);
    ConversionError(std::string code, std::string message, int line = 0, int col = 0);

    const Diagnostic& diagnostic() const noexcept { return diag_; }
    const std::string& code() const noexcept { return diag_.code; }

private:
    Diagnostic diag_;
};

using DiagnosticList = std::vector<Diagnostic>;

}  // namespace m2j
