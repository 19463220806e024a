#include "m2j/diagnostics.hpp"

namespace m2j {

std::string Diagnostic::format() const {
    std::string out = path.empty() ? std::string("<input>") : path;
    out += ':' + std::to_string(line) + ':' + std::to_string(col) + ": " + code;
    if (!message.empty()) out += ' ' + message;
    return out;
}

ConversionError::ConversionError(Diagnostic d)
    : std::runtime_error(d.format()), diag_(std::move(d)) {}

ConversionError::ConversionError(std::string code, std::string message, int line, int col)
    : ConversionError(Diagnostic{Severity::Error, std::move(code), {}, line, col, std::move(message)}) {}

}  // namespace m2j
