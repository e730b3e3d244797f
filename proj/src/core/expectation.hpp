#pragma once

// The trace-preserving conditional expectation E_k onto the radial subalgebra
// spanned by {w_n^(k)}, and the asymptotic-homomorphism defect terms
//
//   || E_k(x w_n y) - E_k(x) E_k(y) w_n ||_2^2
//
// for simple tensors x = x_1 (x) ... (x) x_k and y = y_1 (x) ... (x) y_k.

#include "core/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radial {

/// E_k in closed form. tau(x w_n) only sees the diagonal tuples (u, ..., u)
/// with |u| = n, so E_k(x) = sum_u c(u,...,u) w_|u| / word_count(|u|).
RadialVector expect(const TensorElement& x);

/// E_k(x) = sum_n tau(x w_n) w_n / ||w_n||^2, with tau(x w_n) summed
/// explicitly over the enumerated words of length n. Independent of the
/// diagonal shortcut used by `expect`; kept as its cross-check.
RadialVector expect_by_definition(const TensorElement& x, WordCache* cache = nullptr);

/// Product inside the radial subalgebra, computed by expanding both factors,
/// convolving, and projecting back.
RadialVector radial_product(const RadialVector& a, const RadialVector& b);

bool is_constant(const WordTuple& t);

struct NonzeroVerdict {
  bool components_equal = false;
  bool closed_form_nonzero = false;
  std::optional<bool> definition_nonzero;  ///< set when cross-checked

  /// closed form, definition and the "all components equal" criterion agree.
  bool consistent() const {
    return closed_form_nonzero == components_equal &&
           (!definition_nonzero || *definition_nonzero == closed_form_nonzero);
  }
};

/// E_k(x_1 (x) ... (x) x_k) != 0 exactly when x_1 = ... = x_k.
NonzeroVerdict nonzero_criterion(const SpecPtr& spec, const WordTuple& x, bool cross_check = true,
                                 WordCache* cache = nullptr);

struct DefectTerm {
  int n = 0;
  /// Words v of length n with x_1 v y_1 = ... = x_k v y_k.
  std::vector<Word> solutions;
  Rational defect_sq;
};

/// A = E_k(sum_{|v|=n} x_1 v y_1 (x) ... (x) x_k v y_k),
/// B = E_k(x) E_k(y) w_n, and defect_sq = ||A - B||_2^2.
DefectTerm defect(const SpecPtr& spec, const WordTuple& x, const WordTuple& y, int n, WordCache* cache = nullptr);

struct DefectRow {
  int n = 0;
  std::size_t solution_count = 0;
  Rational defect_sq;
  Rational normalized_term;  ///< defect_sq / word_count(n)
  Rational partial_sum;      ///< running sum of normalized_term
  Rational tail_bound;       ///< 1 / word_count(n)^2
  /// solution_count^2 / (word_count(n) word_count(max(0, n - n0))): the term
  /// bound when B = 0. Distinct solutions give distinct u = x_1 v y_1, each
  /// contributing w_|u| / word_count(|u|) with |u| >= n - n0. Only for
  /// non-constant tuples.
  std::optional<Rational> window_bound;
  std::vector<Word> solutions;
};

struct DefectReport {
  SpecPtr spec;
  int k = 1;
  WordTuple x, y;
  int n_max = 0;
  int n0 = 0;  ///< max |x_i| + max |y_j|
  bool x_constant = false;
  bool y_constant = false;
  /// x, y constant with |x|, |y| >= 2 (the k-reduction hypotheses).
  bool k_reduction_hypotheses = false;
  std::vector<DefectRow> rows;
  /// sum of tail_bound over n0 <= n <= n_max
  Rational tail_sum_from_n0;
  /// sum of 1/word_count(n)^2 over all n >= n0; empty when it diverges.
  std::optional<Rational> tail_series_from_n0;

  bool constant_tuples() const { return x_constant && y_constant; }

  /// Violated invariants: negative terms, decreasing partial sums, and for
  /// non-constant tuples more than one solution or a term above its window
  /// bound beyond n0. Empty when everything holds.
  std::vector<std::string> violations() const;
};

DefectReport defect_series(const SpecPtr& spec, const WordTuple& x, const WordTuple& y, int n_max);

enum class HypothesisMode { strict, exploratory };

struct KReductionResult {
  Rational lhs;  ///< rank-k defect for x^(k), y^(k)
  Rational rhs;  ///< rank-1 defect for x, y
  bool equal = false;
  bool within_hypotheses = false;  ///< |x|, |y| >= 2 and n >= |x| + |y|
};

/// Compares the rank-k and rank-1 defects at n. In strict mode a call outside
/// |x| >= 2, |y| >= 2, n >= |x| + |y| throws PreconditionError.
KReductionResult k_reduction_check(const SpecPtr& spec, const Word& x, const Word& y, int k, int n,
                                   HypothesisMode mode = HypothesisMode::strict, WordCache* cache = nullptr);

}  // namespace radial
