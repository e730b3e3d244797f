#pragma once

// Reduced-word arithmetic for free products of finite groups and for free
// groups.
//
// A free product G_1 * ... * G_m is described by one Cayley table per factor;
// every factor has the same order p and the identity is element 0 in each
// table. A non-identity element is a reduced word g_1 ... g_l where each g_j is
// a non-identity element of some factor and adjacent letters come from
// different factors. A free group of rank N uses letters (generator, +-1) and
// forbids adjacent inverse pairs.

#include "core/types.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radial {

/// One letter of a word. For a free product `slot` is the factor index and
/// `value` the element index inside that factor (never 0 in a reduced word).
/// For a free group `slot` is the generator and `value` its sign (+1 or -1).
struct Letter {
  std::int8_t slot = 0;
  std::int8_t value = 0;

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// A sequence of letters. Words produced by this module are always reduced;
/// `reduce` is the only way to normalize arbitrary input.
class Word {
 public:
  using Storage = boost::container::small_vector<Letter, 12>;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(Storage letters) : letters_(std::move(letters)) {}

  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return {letters_.data(), letters_.size()}; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_.size() == b.letters_.size() &&
           std::equal(a.letters_.begin(), a.letters_.end(), b.letters_.begin());
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  Storage letters_;
};

/// A k-tuple of words, the basis index of the k-fold tensor power.
using WordTuple = std::vector<Word>;

/// Multiplication table of one finite factor. Element 0 is the identity.
class FactorTable {
 public:
  /// Z_p with element i standing for the i-th power of a generator.
  static FactorTable cyclic(int order);

  /// Builds a table from explicit rows; throws InputError listing every
  /// violated group axiom.
  static FactorTable from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return order_; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const FactorTable&, const FactorTable&) = default;

 private:
  int order_ = 0;
  std::vector<std::int8_t> table_;
  std::vector<std::int8_t> inverse_;
};

/// Problems found in a candidate Cayley table; empty means it is a group.
/// `expected_inverse`, when given, must agree with the table.
std::vector<std::string> check_cayley_table(const std::vector<std::vector<int>>& rows,
                                            const std::optional<std::vector<int>>& expected_inverse = {});

/// Unvalidated description of a group, as read from a spec document.
struct SpecDocument {
  struct Factor {
    std::optional<int> declared_order;
    std::vector<std::vector<int>> table;
    std::optional<std::vector<int>> inverse;
  };
  enum class Variant { free_product, free_group };

  Variant variant = Variant::free_product;
  std::vector<Factor> factors;
  int rank = 0;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> errors;
  bool free_group = false;
  int m = 0;  ///< number of factors (2N for a free group)
  int p = 0;  ///< common factor order (2 for a free group)
  bool m_at_least_3 = false;
  bool m_at_least_p = false;
};

/// Checks a raw description. The main hypotheses (m >= 3, m >= p) are only
/// reported as flags.
ValidationReport validate_spec(const SpecDocument& doc);

class GroupSpec {
 public:
  /// Requires m >= 2 factors of one common order.
  static GroupSpec free_product(std::vector<FactorTable> factors);
  /// Requires rank >= 2.
  static GroupSpec free_group(int rank);
  /// Free product of m copies of Z_p.
  static GroupSpec cyclic_product(int m, int p);
  /// Validates then builds; throws InputError with every problem found.
  static GroupSpec from_document(const SpecDocument& doc);

  bool is_free_group() const { return rank_ > 0; }
  /// Number of factors, or 2N for a free group (used by the counting and
  /// recurrence formulas only).
  int m() const;
  /// Common factor order, or 2 for a free group.
  int p() const;
  /// Number of letter slots: factors, or generators.
  int slot_count() const;
  int rank() const { return rank_; }
  const std::vector<FactorTable>& factors() const { return factors_; }

  std::string describe() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec() = default;

  std::vector<FactorTable> factors_;
  int rank_ = 0;
};

using SpecPtr = std::shared_ptr<const GroupSpec>;

inline SpecPtr share(GroupSpec spec) { return std::make_shared<const GroupSpec>(std::move(spec)); }

/// Throws InputError if the letter's indices are out of range for `spec`.
/// Identity letters (free product value 0) are accepted.
void check_letter(const GroupSpec& spec, Letter letter);

/// The unique reduced form of an arbitrary letter sequence.
Word reduce(const GroupSpec& spec, std::span<const Letter> raw);

bool is_reduced(const GroupSpec& spec, const Word& w);

Word multiply(const GroupSpec& spec, const Word& x, const Word& y);
Word inverse(const GroupSpec& spec, const Word& x);
Letter inverse(const GroupSpec& spec, Letter letter);

/// True when x * y is the identity, i.e. y == inverse(x). Does not allocate.
bool product_is_identity(const GroupSpec& spec, const Word& x, const Word& y);

/// True when the juxtaposition x y is already reduced (no cancellation and no
/// merge at the junction), so |xy| = |x| + |y|.
bool is_reduced_concat(const GroupSpec& spec, const Word& x, const Word& y);

/// Non-identity letters in ascending (slot, value) order.
std::vector<Letter> alphabet(const GroupSpec& spec);

/// Every reduced word of length n, in lexicographic order of (slot, value)
/// letter pairs.
std::vector<Word> enumerate_words(const GroupSpec& spec, int n);

/// m(p-1)[(m-1)(p-1)]^(n-1) for n >= 1, and 1 for n = 0.
Integer word_count(const GroupSpec& spec, int n);

/// Lazily filled enumerate_words results, one list per length. Not safe to
/// share between threads; give each worker its own cache.
class WordCache {
 public:
  explicit WordCache(SpecPtr spec) : spec_(std::move(spec)) {}

  const std::vector<Word>& words(int n);
  const GroupSpec& spec() const { return *spec_; }

 private:
  SpecPtr spec_;
  std::vector<std::optional<std::vector<Word>>> by_length_;
};

}  // namespace radial
