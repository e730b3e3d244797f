#include "core/campaigns.hpp"

#include "core/serialize.hpp"

namespace radial {

namespace {

constexpr std::size_t kMaxListedFailures = 20;

void describe_spec(Report& r, const GroupSpec& spec) {
  r.note("spec", spec.describe());
  r.note("m", std::int64_t{spec.m()});
  r.note("p", std::int64_t{spec.p()});
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

std::string radial_string(const RadialVector& r) {
  if (r.is_zero()) return "0";
  std::string out;
  for (auto it = r.coeffs().rbegin(); it != r.coeffs().rend(); ++it) {
    const auto& [n, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += rational_string(magnitude) + " ";
    out += "w_" + std::to_string(n);
  }
  return out;
}

std::vector<Word> words_between(WordCache& cache, int shortest, int longest) {
  std::vector<Word> out;
  for (int n = shortest; n <= longest; ++n) {
    const auto& ws = cache.words(n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

void fail_limited(Report& r, std::size_t& count, const std::string& message) {
  if (count < kMaxListedFailures) r.fail(message);
  ++count;
}

void close_failures(Report& r, std::size_t count) {
  if (count > kMaxListedFailures) r.fail("... and " + std::to_string(count - kMaxListedFailures) + " more");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace

Report run_validate(const SpecDocument& doc) {
  Report r("validate");
  const auto v = validate_spec(doc);
  r.note("variant", std::string(v.free_group ? "free_group" : "free_product"));
  r.note("valid", v.valid);
  r.note("m", std::int64_t{v.m});
  r.note("p", std::int64_t{v.p});
  r.note("m_at_least_3", v.m_at_least_3);
  r.note("m_at_least_p", v.m_at_least_p);
  auto& t = r.add_table("errors", {"error"});
  for (const auto& e : v.errors) t.add_row({e});
  if (!v.valid) r.fail("spec is not a valid free product or free group description");
  return r;
}

Report run_enumerate(const SpecPtr& spec, int n) {
  require(n >= 0, "n must be non-negative");
  Report r("enumerate");
  describe_spec(r, *spec);
  const auto words = enumerate_words(*spec, n);
  const auto expected = word_count(*spec, n);
  r.note("n", std::int64_t{n});
  r.note("word_count", expected);
  r.note("enumerated", as_int(words.size()));
  auto& t = r.add_table("words", {"index", "length", "word"});
  for (std::size_t i = 0; i < words.size(); ++i) t.add_row({as_int(i), as_int(words[i].length()), word_to_json(words[i])});
  if (Integer(static_cast<unsigned long>(words.size())) != expected)
    r.fail("enumerated " + std::to_string(words.size()) + " words but the count formula gives " + expected.get_str());
  return r;
}

Report run_verify(const SpecPtr& spec, int k, int n_max) {
  require(k >= 1, "k must be at least 1");
  require(n_max >= 2, "n_max must be at least 2");
  Report r("verify");
  describe_spec(r, *spec);
  r.note("k", std::int64_t{k});
  r.note("n_max", std::int64_t{n_max});

  std::vector<TensorElement> radials;
  for (int n = 0; n <= n_max; ++n) radials.push_back(build_radial(spec, k, n));
  const auto recurrence = verify_recurrence_w1wn(spec, k, n_max);

  auto& t = r.add_table("radial", {"n", "word_count", "support", "norm_sq", "orthogonal", "residual_norm_sq",
                                   "commutator_norm_sq"});
  for (int n = 0; n <= n_max; ++n) {
    const auto& w = radials[static_cast<std::size_t>(n)];
    const Integer expected = word_count(*spec, n);
    const Rational norm = norm_sq(w);
    bool orthogonal = true;
    for (int m = 0; m <= n_max; ++m)
      if (m != n && sgn(inner_product(w, radials[static_cast<std::size_t>(m)])) != 0) orthogonal = false;

    Cell residual, commutator;
    if (n >= 2) {
      const auto& row = recurrence[static_cast<std::size_t>(n - 2)];
      residual = row.residual_norm_sq;
      commutator = row.commutator_norm_sq;
      if (!row.residual.is_zero()) r.fail("w_1 w_n recurrence residual is nonzero at n = " + std::to_string(n));
      if (sgn(row.commutator_norm_sq) != 0) r.fail("w_1 and w_n do not commute at n = " + std::to_string(n));
    }
    t.add_row({std::int64_t{n}, expected, as_int(w.support_size()), norm, orthogonal, residual, commutator});
    if (norm != Rational(expected)) r.fail("norm_sq(w_" + std::to_string(n) + ") differs from word_count");
    if (Integer(static_cast<unsigned long>(w.support_size())) != expected)
      r.fail("support of w_" + std::to_string(n) + " differs from word_count");
    if (!orthogonal) r.fail("w_" + std::to_string(n) + " is not orthogonal to the other radial elements");
  }

  const auto sq = verify_recurrence_w1sq(spec, k);
  r.note("w1_squared", radial_string(sq.expansion));
  r.note("w1_squared_is_radial", sq.is_radial);
  r.note("printed_candidate", radial_string(sq.printed_candidate));
  r.note("plus_candidate", radial_string(sq.plus_candidate));
  r.note("printed_form_matches", sq.printed_matches);
  r.note("plus_form_matches", sq.plus_matches);
  r.note("w1_squared_verdict", sq.summary());
  if (!sq.is_radial) r.fail("w_1^2 is not a combination of w_0, w_1, w_2");

  auto& sq_table = r.add_table("w1_squared", {"n", "coefficient", "printed_candidate", "plus_candidate"});
  for (int n = 2; n >= 0; --n)
    sq_table.add_row({std::int64_t{n}, sq.expansion.coeff(n), sq.printed_candidate.coeff(n), sq.plus_candidate.coeff(n)});
  return r;
}

Report run_defects(const SpecPtr& spec, const WordTuple& x, const WordTuple& y, int n_max) {
  Report r("defects");
  describe_spec(r, *spec);
  const auto rep = defect_series(spec, x, y, n_max);
  r.note("k", std::int64_t{rep.k});
  r.note("x", tuple_to_json(x));
  r.note("y", tuple_to_json(y));
  r.note("n_max", std::int64_t{n_max});
  r.note("n0", std::int64_t{rep.n0});
  r.note("x_constant", rep.x_constant);
  r.note("y_constant", rep.y_constant);
  r.note("k_reduction_hypotheses", rep.k_reduction_hypotheses);
  r.note("tail_sum_from_n0", rep.tail_sum_from_n0);
  r.note("tail_series_from_n0", rep.tail_series_from_n0 ? Cell(*rep.tail_series_from_n0) : Cell(std::string("diverges")));

  // Decay of the normalized terms after n0, for the published rows.
  bool nonincreasing = true;
  const DefectRow* previous = nullptr;
  for (const auto& row : rep.rows) {
    if (row.n <= rep.n0) continue;
    if (previous && row.normalized_term > previous->normalized_term) nonincreasing = false;
    previous = &row;
  }
  r.note("terms_nonincreasing_after_n0", nonincreasing);
  // n_max >= 1, so there are at least two rows.
  const auto& last = rep.rows.back();
  const auto& before = rep.rows[rep.rows.size() - 2];
  if (sgn(before.normalized_term) != 0)
    r.note("last_term_ratio", Rational(last.normalized_term / before.normalized_term));

  auto& t = r.add_table("defects", {"n", "solution_count", "defect_sq_num", "defect_sq_den", "normalized_term_num",
                                    "normalized_term_den", "partial_sum", "tail_bound", "window_bound", "solutions"});
  for (const auto& row : rep.rows) {
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& v : row.solutions) sols.push_back(word_to_json(v));
    // Constant tuples make every v a solution; listing them adds nothing.
    Cell solutions = rep.x_constant && rep.y_constant ? Cell() : Cell(sols);
    t.add_row({std::int64_t{row.n}, as_int(row.solution_count), row.defect_sq.get_num(), row.defect_sq.get_den(),
               row.normalized_term.get_num(), row.normalized_term.get_den(), row.partial_sum, row.tail_bound,
               row.window_bound ? Cell(*row.window_bound) : Cell(), solutions});
  }
  for (const auto& v : rep.violations()) r.fail(v);
  return r;
}

Report run_conjugacy(const SpecPtr& spec, const ConjugacyRequest& req) {
  require(req.a.has_value() == req.b.has_value(), "give both a and b, or neither for a sweep");
  require(req.l_max >= 1, "l_max must be at least 1");
  require(!req.modes.empty(), "at least one equation mode is needed");
  Report r("conjugacy");
  describe_spec(r, *spec);

  std::vector<std::pair<Word, Word>> pairs;
  if (req.a) {
    require(!req.a->is_identity() && !req.b->is_identity(), "a and b must be non-trivial");
    pairs.emplace_back(*req.a, *req.b);
  } else {
    require(req.ab_max >= 1, "ab_max must be at least 1");
    WordCache cache(spec);
    const auto candidates = words_between(cache, 1, req.ab_max);
    for (const auto& a : candidates)
      for (const auto& b : candidates) pairs.emplace_back(a, b);
    r.note("ab_max", std::int64_t{req.ab_max});
  }
  std::string modes;
  for (auto m : req.modes) modes += (modes.empty() ? "" : ",") + to_string(m);
  r.note("modes", modes);
  r.note("l_max", std::int64_t{req.l_max});
  r.note("instances", as_int(pairs.size() * req.modes.size()));

  auto& t = r.add_table("solutions", {"mode", "a", "b", "l", "asserted", "count", "solutions"});
  WordCache cache(spec);
  std::size_t violations = 0;
  std::size_t failures = 0;
  std::size_t max_asserted = 0;
  for (auto mode : req.modes)
    for (const auto& [a, b] : pairs) {
      const auto inst = EquationInstance::make(spec, a, b, mode);
      const auto rep = verify_uniqueness(inst, req.l_max, &cache);
      for (const auto& row : rep.rows) {
        nlohmann::json sols = nlohmann::json::array();
        for (const auto& x : row.solutions) sols.push_back(word_to_json(x));
        t.add_row({to_string(mode), word_to_json(a), word_to_json(b), std::int64_t{row.l}, row.asserted,
                   as_int(row.solutions.size()), sols});
        if (row.asserted) max_asserted = std::max(max_asserted, row.solutions.size());
        if (row.violation()) {
          ++violations;
          fail_limited(r, failures,
                       to_string(mode) + " a=" + render_word(a) + " b=" + render_word(b) + " l=" +
                           std::to_string(row.l) + ": " + std::to_string(row.solutions.size()) + " solutions " +
                           sols.dump());
        }
      }
    }
  close_failures(r, failures);
  r.note("violations", as_int(violations));
  r.note("max_count_in_asserted_range", as_int(max_asserted));
  return r;
}

Report run_nonzero_check(const SpecPtr& spec, int k, const std::optional<WordTuple>& x, int len_max) {
  require(k >= 1, "k must be at least 1");
  Report r("nonzero-check");
  describe_spec(r, *spec);
  WordCache cache(spec);

  if (x) {
    const auto v = nonzero_criterion(spec, *x, true, &cache);
    r.note("k", as_int(x->size()));
    auto& t = r.add_table("verdict", {"tuple", "components_equal", "closed_form_nonzero", "definition_nonzero",
                                      "consistent"});
    t.add_row({tuple_to_json(*x), v.components_equal, v.closed_form_nonzero, *v.definition_nonzero, v.consistent()});
    if (!v.consistent()) r.fail("closed form, definition and equal-components criterion disagree");
    return r;
  }

  require(len_max >= 0, "len_max must be non-negative");
  r.note("k_max", std::int64_t{k});
  r.note("len_max", std::int64_t{len_max});
  const auto words = words_between(cache, 0, len_max);
  auto& t = r.add_table("sweep", {"k", "tuples", "components_equal", "closed_form_nonzero", "definition_nonzero",
                                  "inconsistent"});
  std::size_t failures = 0;
  for (int rank = 1; rank <= k; ++rank) {
    std::size_t tuples = 0, equal = 0, closed = 0, definition = 0, inconsistent = 0;
    std::vector<std::size_t> index(static_cast<std::size_t>(rank), 0);
    WordTuple tuple(static_cast<std::size_t>(rank));
    while (true) {
      for (std::size_t i = 0; i < index.size(); ++i) tuple[i] = words[index[i]];
      const auto v = nonzero_criterion(spec, tuple, true, &cache);
      ++tuples;
      equal += v.components_equal;
      closed += v.closed_form_nonzero;
      definition += *v.definition_nonzero;
      if (!v.consistent()) {
        ++inconsistent;
        fail_limited(r, failures, "criterion disagrees on " + tuple_to_json(tuple).dump());
      }
      std::size_t pos = 0;
      while (pos < index.size() && ++index[pos] == words.size()) index[pos++] = 0;
      if (pos == index.size()) break;
    }
    t.add_row({std::int64_t{rank}, as_int(tuples), as_int(equal), as_int(closed), as_int(definition),
               as_int(inconsistent)});
  }
  close_failures(r, failures);
  return r;
}

Report run_k0_check(const SpecPtr& spec, int k, const std::optional<Word>& x, const std::optional<Word>& y,
                    int n_max, HypothesisMode mode) {
  require(k >= 1, "k must be at least 1");
  require(x.has_value() == y.has_value(), "give both x and y, or neither for a sweep");
  Report r("k0-check");
  describe_spec(r, *spec);
  r.note("k", std::int64_t{k});
  r.note("n_max", std::int64_t{n_max});
  r.note("mode", std::string(mode == HypothesisMode::strict ? "strict" : "exploratory"));

  std::vector<std::pair<Word, Word>> pairs;
  WordCache cache(spec);
  if (x) {
    pairs.emplace_back(*x, *y);
  } else {
    for (const auto& a : cache.words(2))
      for (const auto& b : cache.words(2)) pairs.emplace_back(a, b);
  }

  auto& t = r.add_table("k0", {"x", "y", "k", "n", "lhs", "rhs", "equal", "within_hypotheses"});
  std::size_t failures = 0, checked = 0, equal = 0;
  for (const auto& [a, b] : pairs) {
    const int first = mode == HypothesisMode::strict ? static_cast<int>(a.length() + b.length()) : 0;
    if (mode == HypothesisMode::strict && (a.length() < 2 || b.length() < 2 || n_max < first)) {
      throw PreconditionError("k-reduction equality needs |x| >= 2, |y| >= 2 and n_max >= |x| + |y|; "
                              "use exploratory mode to compute outside these hypotheses");
    }
    for (int n = first; n <= n_max; ++n) {
      const auto res = k_reduction_check(spec, a, b, k, n, mode, &cache);
      t.add_row({word_to_json(a), word_to_json(b), std::int64_t{k}, std::int64_t{n}, res.lhs, res.rhs, res.equal,
                 res.within_hypotheses});
      if (res.within_hypotheses) {
        ++checked;
        equal += res.equal;
        if (!res.equal)
          fail_limited(r, failures,
                       "x=" + render_word(a) + " y=" + render_word(b) + " n=" + std::to_string(n) + ": " +
                           rational_string(res.lhs) + " != " + rational_string(res.rhs));
      }
    }
  }
  close_failures(r, failures);
  r.note("checked_within_hypotheses", as_int(checked));
  r.note("equal_within_hypotheses", as_int(equal));
  return r;
}

}  // namespace radial
