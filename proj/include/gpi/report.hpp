#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gpi/freealg.hpp"
#include "gpi/grading.hpp"
#include "gpi/identities.hpp"
#include "gpi/symalg.hpp"

namespace gpi::report {

/// Value of the top-level "schema" field of every JSON report.
inline constexpr const char* kSchema = "gpi.report/1";

/// {"schema", "command", "grading"} envelope; callers add the payload.
nlohmann::json envelope(const std::string& command, const Grading& grading);

nlohmann::json grading_info(const Grading& grading);
nlohmann::json matrix(const SparseMatrix& m);
nlohmann::json witness(const Witness& w);
nlohmann::json verdict(const IdentityVerdict& v);
nlohmann::json reduction(const UReduction& r, const Group& group);
nlohmann::json basis(const BasisReport& report);
nlohmann::json words(std::span<const SignedWord> words, const Group& group);
nlohmann::json derivation(const std::optional<std::vector<RewriteStep>>& steps, const Group& group);

/// Plain-text renderings used by the CLI in text mode.
std::string grading_info_text(const Grading& grading);
std::string reduction_text(const UReduction& r, const Group& group);

}  // namespace gpi::report
