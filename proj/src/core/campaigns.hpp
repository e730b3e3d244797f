#pragma once

// Verification campaigns behind the CLI subcommands. Each returns a Report
// whose failures are the asserted identities that did not hold.

#include "core/conjugacy.hpp"
#include "core/expectation.hpp"
#include "core/report.hpp"

#include <optional>
#include <string_view>

namespace radial {

Report run_validate(const SpecDocument& doc);

Report run_enumerate(const SpecPtr& spec, int n);

/// Eq. w_1 w_n recurrence residuals, commutation, norms and orthogonality for
/// n <= n_max, plus the informational verdict on w_1^2.
Report run_verify(const SpecPtr& spec, int k, int n_max);

Report run_defects(const SpecPtr& spec, const WordTuple& x, const WordTuple& y, int n_max);

struct ConjugacyRequest {
  /// When both are empty every pair of non-trivial words with
  /// |a|, |b| <= ab_max is swept.
  std::optional<Word> a;
  std::optional<Word> b;
  std::vector<ConjugacyMode> modes{ConjugacyMode::reduced_concat, ConjugacyMode::plain};
  int l_max = 6;
  int ab_max = 2;
};

Report run_conjugacy(const SpecPtr& spec, const ConjugacyRequest& request);

/// Single tuple when `x` is set, otherwise every tuple of rank 1..k with
/// component lengths <= len_max.
Report run_nonzero_check(const SpecPtr& spec, int k, const std::optional<WordTuple>& x, int len_max);

/// Single pair when x and y are set, otherwise every pair of length-2 words.
Report run_k0_check(const SpecPtr& spec, int k, const std::optional<Word>& x, const std::optional<Word>& y,
                    int n_max, HypothesisMode mode);

}  // namespace radial
