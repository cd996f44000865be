#ifndef PRABHAKAR_VERIFY_HPP
#define PRABHAKAR_VERIFY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prabhakar {

/// Verification suites.  Each one turns a transform identity, an operator
/// relation, or a solver's governing equation into randomized numerical
/// checks with an independently computed reference side.  The enum tokens
/// are the stable CLI names for the suites.
enum class Suite {
    lemma_2_14, // kernel transform pair: numerical Sumudu vs algebraic symbol
    thm_2_13,   // convolution identity S[f*g] = u S[f] S[g]
    lemma_3_1,  // Hilfer-type derivative vs its transform symbol
    lemma_3_2,  // regularized derivative vs its transform symbol
    relation_3_6, // difference of the two derivatives = initial-value kernel
    limit_3_3,  // weighted initial limits: vanishing and conjugate-kernel
    thm_4_1,    // linear fractional ODE: residual closure of the series
    thm_4_2,    // counting-process generating function: normalization,
                // classical collapse, residual closure
    thm_4_3,    // fractional diffusion, weighted datum: factorization,
                // datum recovery, residual closure
    thm_4_4,    // fractional diffusion, regularized: classical limit, mass,
                // small-time limit, residual closure
    reductions, // classical special cases across the whole stack
};

inline constexpr std::array<Suite, 11> all_suites{
    Suite::lemma_2_14, Suite::thm_2_13,     Suite::lemma_3_1,
    Suite::lemma_3_2,  Suite::relation_3_6, Suite::limit_3_3,
    Suite::thm_4_1,    Suite::thm_4_2,      Suite::thm_4_3,
    Suite::thm_4_4,    Suite::reductions,
};

const char* suite_name(Suite s);
std::optional<Suite> suite_from_name(std::string_view name);

/// One checked identity instance.  rel_err = |lhs - rhs| / max(|rhs|, 1e-30);
/// passed means rel_err <= tolerance, or abs_err <= tolerance when |rhs| is
/// below the floor.  Upstream numerical errors become failed reports with
/// the message in notes, never exceptions.
struct VerificationReport {
    std::string case_id;
    double lhs;
    double rhs;
    double abs_err;
    double rel_err;
    double tolerance;
    bool passed;
    std::string notes;
};

/// Run one suite.  The seed fixes every randomized parameter draw; the same
/// seed gives bit-identical reports.  Cases are emitted sorted by case_id.
std::vector<VerificationReport> run_suite(Suite s, std::uint64_t seed);

/// Every suite in enum order, reports concatenated.
std::vector<VerificationReport> run_all(std::uint64_t seed);

/// Static registry check: every suite has a registered generator and a
/// non-empty list of covered identities, and the union of those lists is
/// exactly the library's in-scope identity set.
bool registry_complete();

bool all_passed(const std::vector<VerificationReport>& reports);

/// CSV with header case_id,lhs,rhs,abs_err,rel_err,tolerance,passed,notes;
/// 17 significant digits, LF endings, notes kept comma-free.
void write_reports_csv(std::ostream& os,
                       const std::vector<VerificationReport>& reports);

/// Aligned human-readable table plus a pass/fail tally line.
void write_summary(std::ostream& os,
                   const std::vector<VerificationReport>& reports);

} // namespace prabhakar

#endif
