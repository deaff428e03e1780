#include "isac/diagnostics.hpp"

#include <cstdio>
#include <mutex>
#include <utility>

namespace isac {

namespace {

std::mutex handler_mutex;
DiagnosticHandler handler;

void default_handler(Severity severity, const std::string& message) {
  std::fprintf(stderr, "[isac %s] %s\n", severity == Severity::Warning ? "warning" : "info",
               message.c_str());
}

}  // namespace

DiagnosticHandler set_diagnostic_handler(DiagnosticHandler next) {
  std::lock_guard<std::mutex> lock(handler_mutex);
  std::swap(handler, next);
  return next;
}

void diagnostic(Severity severity, const std::string& message) {
  DiagnosticHandler local;
  {
    std::lock_guard<std::mutex> lock(handler_mutex);
    local = handler;
  }
  if (local)
    local(severity, message);
  else
    default_handler(severity, message);
}

}  // namespace isac
