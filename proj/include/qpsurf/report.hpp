#pragma once

#include <string>
#include <vector>

#include "qpsurf/json_io.hpp"

namespace qpsurf {

struct CaseResult {
    std::string fixture;
    std::string operation;
    bool ok = false;
    std::string witness;
};

// Deterministic verification report; byte-identical across runs for the
// same inputs and configuration.
struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool all_ok() const;
    void add(const std::string& fixture, const std::string& operation, bool ok,
             const std::string& witness = "");
};

// toolchain/config fingerprint, including the frozen sign convention
Json config_fingerprint();

Json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

// the named suites: d2, ky-hom, resolutions, homotopies, flip-mutation,
// ext-compat, transport-paths, k0
VerificationReport run_suite(const std::string& name);
std::vector<std::string> suite_names();

// the same suites scoped to one input instead of the builtin fixtures
VerificationReport run_suite_on_qp(const std::string& name, const std::string& label,
                                   const QP& qp, const std::string& vertex = "");
VerificationReport run_suite_on_surface(const std::string& name, const std::string& label,
                                        const Triangulation& t, int depth = 1);

// transcribed block matrices for audit (--dump-matrices)
Json dump_matrices_json(const QP& qp);

}  // namespace qpsurf
