#ifndef SQZ_DIAGNOSTICS_HPP
#define SQZ_DIAGNOSTICS_HPP

#include <string>
#include <vector>

namespace sqz {

/// Structured warning emitted by operations when a numerical budget is
/// exceeded (truncation leakage, tail mass, quadrature residual, ...).
struct Diagnostic {
    std::string code;     // e.g. "tail_mass", "truncation_leakage"
    std::string message;
    double value = 0.0;   // the offending quantity
    double threshold = 0.0;
};

/// Collects diagnostics; a null sink means "print to stderr".
class DiagnosticSink {
  public:
    void emit(const Diagnostic& d) { items_.push_back(d); }
    const std::vector<Diagnostic>& items() const { return items_; }
    bool empty() const { return items_.empty(); }

  private:
    std::vector<Diagnostic> items_;
};

/// Emit to sink if non-null, otherwise write a structured line on stderr.
void emit_diagnostic(DiagnosticSink* sink, const Diagnostic& d);

}  // namespace sqz

#endif
