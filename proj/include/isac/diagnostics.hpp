#pragma once

#include <functional>
#include <string>

namespace isac {

enum class Severity { Info, Warning };

using DiagnosticHandler = std::function<void(Severity, const std::string&)>;

// Replaces the global diagnostic sink; pass nullptr to restore the default
// (stderr). Returns the previous handler.
DiagnosticHandler set_diagnostic_handler(DiagnosticHandler handler);

void diagnostic(Severity severity, const std::string& message);

inline void warn(const std::string& message) { diagnostic(Severity::Warning, message); }
inline void info(const std::string& message) { diagnostic(Severity::Info, message); }

}  // namespace isac
