#pragma once

#include <string>
#include <vector>

#include "ptri/diophantine.hpp"
#include "ptri/elements.hpp"
#include "ptri/families.hpp"
#include "ptri/papercheck.hpp"

namespace ptri {

enum class OutputFormat { Table, Json, Csv };

// Accepts "table", "json" or "csv"; throws std::domain_error otherwise.
OutputFormat parse_format(const std::string& name);

// Short CLI-facing tokens ("A"/"B", "mixed"/"both-odd"/"unconstrained").
std::string equation_token(QuarticId eq);
std::string regime_token(Regime regime);
QuarticId parse_equation(const std::string& token);
Regime parse_regime(const std::string& token);

// All renderers return the complete report text, newline-terminated, and are
// byte-stable for identical inputs.
std::string render_elements(const ElementReport& report, OutputFormat format, unsigned digits);

std::string render_family(int family, const FamilyEnumeration& enumeration, const Int& delta,
                          OutputFormat format, unsigned digits);

std::string render_search(QuarticId eq, Regime regime, const Int& bound,
                          const std::vector<QuarticSolution>& solutions, OutputFormat format);

std::string render_claims(const std::vector<ClaimOutcome>& claims, const Int& survey_m,
                          bool expected_match, const std::vector<std::string>& diagnostics,
                          OutputFormat format);

}  // namespace ptri
