#pragma once

// Exhaustive solvers for the conjugacy-type equations
//   x . a = b . x   (both concatenations reduced), and
//   x a = b x       (cancellation allowed),
// over words x of one fixed length.

#include "core/group.hpp"

#include <string>
#include <vector>

namespace radial {

enum class ConjugacyMode { reduced_concat, plain };

std::string to_string(ConjugacyMode mode);
ConjugacyMode parse_conjugacy_mode(std::string_view text);

struct EquationInstance {
  SpecPtr spec;
  Word a;
  Word b;
  ConjugacyMode mode = ConjugacyMode::plain;

  /// Throws InputError if a or b is the identity.
  static EquationInstance make(SpecPtr spec, Word a, Word b, ConjugacyMode mode);
};

/// True when x solves the instance's equation.
bool solves(const EquationInstance& inst, const Word& x);

/// All solutions of length l, in enumeration order. Reduced-concatenation mode
/// requires l >= 1.
std::vector<Word> solve_fixed_length(const EquationInstance& inst, int l, WordCache* cache = nullptr);

struct UniquenessRow {
  int l = 0;
  /// Whether at most one solution is claimed at this length: every l >= 1 for
  /// reduced concatenation, l > |a| + |b| for the plain equation.
  bool asserted = false;
  std::vector<Word> solutions;

  bool violation() const { return asserted && solutions.size() > 1; }
};

struct UniquenessReport {
  EquationInstance instance;
  std::vector<UniquenessRow> rows;

  bool holds() const;
  std::vector<UniquenessRow> violations() const;
};

/// Rows for l = 1..l_max (reduced concatenation) or l = 0..l_max (plain).
UniquenessReport verify_uniqueness(const EquationInstance& inst, int l_max, WordCache* cache = nullptr);

}  // namespace radial
