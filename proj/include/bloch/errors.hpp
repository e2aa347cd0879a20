#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bloch {

// All library failures carry a stable machine-readable code plus a human message.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* non_positive_e = "NonPositiveE";
inline constexpr const char* alpha_out_of_range = "AlphaOutOfRange";
inline constexpr const char* beta_out_of_range = "BetaOutOfRange";
inline constexpr const char* empty_schedule = "EmptySchedule";
inline constexpr const char* not_normalized = "NotNormalized";
inline constexpr const char* no_switching = "NoSwitching";
inline constexpr const char* degenerate_covector = "DegenerateCovector";
inline constexpr const char* no_root = "NoRoot";
inline constexpr const char* root_outside_range = "RootOutsideRange";
inline constexpr const char* beta_not_quarter_pi = "BetaNotQuarterPi";
inline constexpr const char* domain_error = "DomainError";
inline constexpr const char* solve_failed = "SolveFailed";
inline constexpr const char* budget_exceeded = "BudgetExceeded";
inline constexpr const char* target_in_cut_locus = "TargetInCutLocusNeighborhood";
inline constexpr const char* no_convergence = "NoConvergence";
inline constexpr const char* degenerate_fields = "DegenerateFields";
inline constexpr const char* bad_arguments = "BadArguments";
} // namespace errc

} // namespace bloch
