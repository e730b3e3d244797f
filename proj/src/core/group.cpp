#include "core/group.hpp"

#include <limits>
#include <sstream>

namespace radial {

namespace {

// Letters store indices in int8_t.
constexpr int kMaxIndex = std::numeric_limits<std::int8_t>::max();

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

FactorTable FactorTable::cyclic(int order) {
  if (order < 2 || order > kMaxIndex) {
    throw InputError("cyclic factor order must lie in [2, " + std::to_string(kMaxIndex) + "], got " +
                     std::to_string(order));
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % order;
  return from_rows(rows);
}

std::vector<std::string> check_cayley_table(const std::vector<std::vector<int>>& rows,
                                            const std::optional<std::vector<int>>& expected_inverse) {
  std::vector<std::string> problems;
  const auto p = static_cast<int>(rows.size());
  if (p < 2) {
    problems.push_back("order must be at least 2, got " + std::to_string(p));
    return problems;
  }
  if (p > kMaxIndex) {
    problems.push_back("order " + std::to_string(p) + " exceeds the supported maximum " + std::to_string(kMaxIndex));
    return problems;
  }
  for (int a = 0; a < p; ++a) {
    const auto& row = rows[static_cast<std::size_t>(a)];
    if (static_cast<int>(row.size()) != p) {
      problems.push_back("row " + std::to_string(a) + " has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(p));
      continue;
    }
    for (int b = 0; b < p; ++b) {
      const int v = row[static_cast<std::size_t>(b)];
      if (v < 0 || v >= p) problems.push_back("entry (" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                                              std::to_string(v) + " is out of range");
    }
  }
  if (!problems.empty()) return problems;

  auto at = [&](int a, int b) { return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  for (int a = 0; a < p; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      problems.push_back("element 0 is not a two-sided identity at " + std::to_string(a));
      break;
    }
  }
  for (int a = 0; a < p; ++a) {
    std::vector<bool> row_seen(static_cast<std::size_t>(p)), col_seen(static_cast<std::size_t>(p));
    bool row_ok = true, col_ok = true;
    for (int b = 0; b < p; ++b) {
      auto r = static_cast<std::size_t>(at(a, b));
      auto c = static_cast<std::size_t>(at(b, a));
      if (row_seen[r]) row_ok = false;
      if (col_seen[c]) col_ok = false;
      row_seen[r] = col_seen[c] = true;
    }
    if (!row_ok) problems.push_back("row " + std::to_string(a) + " is not a permutation");
    if (!col_ok) problems.push_back("column " + std::to_string(a) + " is not a permutation");
  }
  if (!problems.empty()) return problems;

  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          problems.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
          return problems;
        }

  if (expected_inverse) {
    const auto& inv = *expected_inverse;
    if (static_cast<int>(inv.size()) != p) {
      problems.push_back("inverse array has " + std::to_string(inv.size()) + " entries, expected " + std::to_string(p));
    } else {
      for (int a = 0; a < p; ++a) {
        const int b = inv[static_cast<std::size_t>(a)];
        if (b < 0 || b >= p || at(a, b) != 0) {
          problems.push_back("inverse[" + std::to_string(a) + "] = " + std::to_string(b) + " is inconsistent with the table");
        }
      }
    }
  }
  return problems;
}

FactorTable FactorTable::from_rows(const std::vector<std::vector<int>>& rows) {
  auto problems = check_cayley_table(rows);
  if (!problems.empty()) throw InputError("invalid Cayley table: " + join(problems, "; "));

  FactorTable t;
  t.order_ = static_cast<int>(rows.size());
  t.table_.reserve(rows.size() * rows.size());
  for (const auto& row : rows)
    for (int v : row) t.table_.push_back(static_cast<std::int8_t>(v));
  t.inverse_.resize(rows.size());
  for (int a = 0; a < t.order_; ++a)
    for (int b = 0; b < t.order_; ++b)
      if (t.multiply(a, b) == 0) t.inverse_[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
  return t;
}

std::vector<std::vector<int>> FactorTable::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) out[static_cast<std::size_t>(a)].push_back(multiply(a, b));
  return out;
}

ValidationReport validate_spec(const SpecDocument& doc) {
  ValidationReport r;
  auto error = [&](std::string msg) {
    r.valid = false;
    r.errors.push_back(std::move(msg));
  };

  if (doc.variant == SpecDocument::Variant::free_group) {
    r.free_group = true;
    if (doc.rank < 2) error("free group rank must be at least 2, got " + std::to_string(doc.rank));
    if (doc.rank > kMaxIndex) error("free group rank exceeds the supported maximum " + std::to_string(kMaxIndex));
    r.m = 2 * doc.rank;
    r.p = 2;
  } else {
    r.m = static_cast<int>(doc.factors.size());
    if (r.m < 2) error("a free product needs at least 2 factors, got " + std::to_string(r.m));
    if (r.m > kMaxIndex) error("number of factors exceeds the supported maximum " + std::to_string(kMaxIndex));
    for (std::size_t i = 0; i < doc.factors.size(); ++i) {
      const auto& f = doc.factors[i];
      const auto actual = static_cast<int>(f.table.size());
      if (f.declared_order && *f.declared_order != actual) {
        error("factor " + std::to_string(i) + ": declared order " + std::to_string(*f.declared_order) +
              " but table has " + std::to_string(actual) + " rows");
      }
      for (auto& problem : check_cayley_table(f.table, f.inverse))
        error("factor " + std::to_string(i) + ": " + problem);
      if (i == 0) {
        r.p = actual;
      } else if (actual != r.p) {
        error("factor " + std::to_string(i) + " has order " + std::to_string(actual) + ", factor 0 has order " +
              std::to_string(r.p) + "; all factors must share one order");
      }
    }
  }
  r.m_at_least_3 = r.m >= 3;
  r.m_at_least_p = r.m >= r.p;
  return r;
}

GroupSpec GroupSpec::free_product(std::vector<FactorTable> factors) {
  if (factors.size() < 2) throw InputError("a free product needs at least 2 factors");
  if (factors.size() > static_cast<std::size_t>(kMaxIndex)) throw InputError("too many factors");
  for (const auto& f : factors)
    if (f.order() != factors.front().order()) throw InputError("all factors must share one order");
  GroupSpec s;
  s.factors_ = std::move(factors);
  return s;
}

GroupSpec GroupSpec::free_group(int rank) {
  if (rank < 2 || rank > kMaxIndex) throw InputError("free group rank must lie in [2, 127], got " + std::to_string(rank));
  GroupSpec s;
  s.rank_ = rank;
  return s;
}

GroupSpec GroupSpec::cyclic_product(int m, int p) {
  if (m < 2) throw InputError("a free product needs at least 2 factors, got " + std::to_string(m));
  return free_product(std::vector<FactorTable>(static_cast<std::size_t>(m), FactorTable::cyclic(p)));
}

GroupSpec GroupSpec::from_document(const SpecDocument& doc) {
  auto report = validate_spec(doc);
  if (!report.valid) throw InputError("invalid group spec: " + join(report.errors, "; "));
  if (doc.variant == SpecDocument::Variant::free_group) return free_group(doc.rank);
  std::vector<FactorTable> factors;
  for (const auto& f : doc.factors) factors.push_back(FactorTable::from_rows(f.table));
  return free_product(std::move(factors));
}

int GroupSpec::m() const { return is_free_group() ? 2 * rank_ : static_cast<int>(factors_.size()); }

int GroupSpec::p() const { return is_free_group() ? 2 : factors_.front().order(); }

int GroupSpec::slot_count() const { return is_free_group() ? rank_ : static_cast<int>(factors_.size()); }

std::string GroupSpec::describe() const {
  std::ostringstream os;
  if (is_free_group()) {
    os << "free group of rank " << rank_;
  } else {
    os << "free product of " << factors_.size() << " groups of order " << p();
  }
  return os.str();
}

void check_letter(const GroupSpec& spec, Letter letter) {
  if (letter.slot < 0 || letter.slot >= spec.slot_count()) {
    throw InputError("letter slot " + std::to_string(letter.slot) + " out of range [0, " +
                     std::to_string(spec.slot_count()) + ")");
  }
  if (spec.is_free_group()) {
    if (letter.value != 1 && letter.value != -1)
      throw InputError("free group letter sign must be +1 or -1, got " + std::to_string(letter.value));
  } else if (letter.value < 0 || letter.value >= spec.p()) {
    throw InputError("element index " + std::to_string(letter.value) + " out of range [0, " + std::to_string(spec.p()) +
                     ")");
  }
}

namespace {

// Appends one letter to an already reduced stack, cancelling or merging at
// the top as needed. The stack stays reduced: after a pop the new top lies in
// a different slot from the popped letter, so at most one merge happens.
void push_reduced(const GroupSpec& spec, Word::Storage& stack, Letter letter) {
  if (!spec.is_free_group() && letter.value == 0) return;
  if (!stack.empty() && stack.back().slot == letter.slot) {
    if (spec.is_free_group()) {
      if (stack.back().value == -letter.value) {
        stack.pop_back();
        return;
      }
    } else {
      const int merged = spec.factors()[static_cast<std::size_t>(letter.slot)].multiply(stack.back().value, letter.value);
      stack.pop_back();
      if (merged != 0) stack.push_back({letter.slot, static_cast<std::int8_t>(merged)});
      return;
    }
  }
  stack.push_back(letter);
}

}  // namespace

Word reduce(const GroupSpec& spec, std::span<const Letter> raw) {
  Word::Storage stack;
  stack.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(spec, l);
    push_reduced(spec, stack, l);
  }
  return Word(std::move(stack));
}

bool is_reduced(const GroupSpec& spec, const Word& w) {
  auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter l = letters[i];
    if (l.slot < 0 || l.slot >= spec.slot_count()) return false;
    if (spec.is_free_group()) {
      if (l.value != 1 && l.value != -1) return false;
      if (i > 0 && letters[i - 1].slot == l.slot && letters[i - 1].value == -l.value) return false;
    } else {
      if (l.value <= 0 || l.value >= spec.p()) return false;
      if (i > 0 && letters[i - 1].slot == l.slot) return false;
    }
  }
  return true;
}

Word multiply(const GroupSpec& spec, const Word& x, const Word& y) {
  Word::Storage stack;
  stack.reserve(x.length() + y.length());
  stack.assign(x.letters().begin(), x.letters().end());
  for (Letter l : y.letters()) push_reduced(spec, stack, l);
  return Word(std::move(stack));
}

Letter inverse(const GroupSpec& spec, Letter letter) {
  if (spec.is_free_group()) return {letter.slot, static_cast<std::int8_t>(-letter.value)};
  return {letter.slot,
          static_cast<std::int8_t>(spec.factors()[static_cast<std::size_t>(letter.slot)].inverse(letter.value))};
}

Word inverse(const GroupSpec& spec, const Word& x) {
  Word::Storage out;
  out.reserve(x.length());
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it) out.push_back(inverse(spec, *it));
  return Word(std::move(out));
}

bool product_is_identity(const GroupSpec& spec, const Word& x, const Word& y) {
  const std::size_t n = x.length();
  if (y.length() != n) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (y[j] != inverse(spec, x[n - 1 - j])) return false;
  return true;
}

bool is_reduced_concat(const GroupSpec& spec, const Word& x, const Word& y) {
  if (x.is_identity() || y.is_identity()) return true;
  const Letter a = x.back(), b = y.front();
  if (a.slot != b.slot) return true;
  // Same generator and same sign is still reduced in a free group.
  return spec.is_free_group() && a.value == b.value;
}

std::vector<Letter> alphabet(const GroupSpec& spec) {
  std::vector<Letter> out;
  for (int s = 0; s < spec.slot_count(); ++s) {
    if (spec.is_free_group()) {
      out.push_back({static_cast<std::int8_t>(s), -1});
      out.push_back({static_cast<std::int8_t>(s), 1});
    } else {
      for (int v = 1; v < spec.p(); ++v) out.push_back({static_cast<std::int8_t>(s), static_cast<std::int8_t>(v)});
    }
  }
  return out;
}

std::vector<Word> enumerate_words(const GroupSpec& spec, int n) {
  if (n < 0) throw InputError("word length must be non-negative, got " + std::to_string(n));
  const auto letters = alphabet(spec);
  std::vector<Word> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  out.reserve(word_count(spec, n).get_ui());

  auto may_follow = [&](Letter prev, Letter next) {
    if (prev.slot != next.slot) return true;
    return spec.is_free_group() && prev.value == next.value;
  };

  // Depth-first over letter positions; ascending choices at each position
  // give lexicographic output.
  Word::Storage current;
  current.reserve(static_cast<std::size_t>(n));
  auto extend = [&](auto& self) -> void {
    if (current.size() == static_cast<std::size_t>(n)) {
      out.emplace_back(current);
      return;
    }
    for (Letter l : letters) {
      if (!current.empty() && !may_follow(current.back(), l)) continue;
      current.push_back(l);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

Integer word_count(const GroupSpec& spec, int n) {
  if (n < 0) throw InputError("word length must be non-negative, got " + std::to_string(n));
  if (n == 0) return 1;
  const Integer first = spec.m() * (spec.p() - 1);
  Integer ratio = (spec.m() - 1) * (spec.p() - 1);
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return first * power;
}

const std::vector<Word>& WordCache::words(int n) {
  if (n < 0) throw InputError("word length must be non-negative, got " + std::to_string(n));
  const auto i = static_cast<std::size_t>(n);
  if (by_length_.size() <= i) by_length_.resize(i + 1);
  if (!by_length_[i]) by_length_[i] = enumerate_words(*spec_, n);
  return *by_length_[i];
}

}  // namespace radial
