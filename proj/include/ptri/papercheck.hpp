#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptri/elements.hpp"
#include "ptri/triples.hpp"

namespace ptri {

enum class ClaimStatus { Confirmed, Refuted, ConfirmedWithErratum };

std::string to_string(ClaimStatus s);

// One checked claim from the source survey: a simplified formula or a worked
// numeric example. Refuted and ConfirmedWithErratum outcomes always carry
// both the claimed and the normative value.
struct ClaimOutcome {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::Confirmed;
  std::optional<std::string> claimed_value;
  std::optional<std::string> normative_value;
  std::string note;
};

// The per-element claim ids used by compare_reports, in canonical element
// order ("i.R" ... "vi.mu_gamma").
std::string formula_claim_id(ElementId id);

// Evaluates the surveyed simplified formulas exactly as printed, including
// the four erroneous ones, without applying any cross-identity checks.
ElementReport claimed_simplified(const TripleParams& p);

// Element-by-element exact comparison of two reports for the same params.
// Equality -> Confirmed; inequality -> Refuted with both values attached.
std::vector<ClaimOutcome> compare_reports(const ElementReport& normative,
                                          const ElementReport& claimed);

// Aggregates compare_reports over every valid (m, n) with m <= survey_m and
// delta in {1, 2, 3}: a formula claim is Confirmed only if it agrees for all
// surveyed parameters, and Refuted outcomes carry the (1, 2, 1) values.
// Throws std::logic_error if any formula agrees for some parameters but not
// others (no surveyed formula behaves that way).
std::vector<ClaimOutcome> survey_formulas(const Int& survey_m);

// Recomputes the worked numeric examples (family tuples, bisector numerators
// and denominators, the smallest-member claim, and the two single-triangle
// spot checks) and grades each against the printed value.
std::vector<ClaimOutcome> verify_numeric_examples();

// survey_formulas + verify_numeric_examples in one report.
std::vector<ClaimOutcome> verify_all(const Int& survey_m);

// The documented expectation: which claim ids end up non-Confirmed and why.
// Every claim id absent from this list is expected to be Confirmed.
std::vector<std::pair<std::string, ClaimStatus>> expected_non_confirmed();

// True iff `outcomes` carries exactly the non-Confirmed set promised by
// expected_non_confirmed(); unexpected ids are appended to `diagnostics`.
bool outcomes_match_expected(const std::vector<ClaimOutcome>& outcomes,
                             std::vector<std::string>* diagnostics = nullptr);

}  // namespace ptri
