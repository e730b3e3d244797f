#include "core/expectation.hpp"

#include <algorithm>

namespace radial {

RadialVector expect(const TensorElement& x) {
  RadialVector out(x.spec_ptr(), x.rank());
  for (const auto& [t, c] : x.terms()) {
    if (!is_constant(t)) continue;
    const int n = static_cast<int>(t.front().length());
    out.add(n, c / Rational(word_count(x.spec(), n)));
  }
  return out;
}

RadialVector expect_by_definition(const TensorElement& x, WordCache* cache) {
  std::optional<WordCache> local;
  if (!cache) cache = &local.emplace(x.spec_ptr());

  std::size_t longest = 0;
  for (const auto& [t, c] : x.terms())
    for (const auto& u : t) longest = std::max(longest, u.length());

  RadialVector out(x.spec_ptr(), x.rank());
  if (x.is_zero()) return out;
  // tau((t_1 (x) ... (x) t_k) v^(k)) = prod_i tau(t_i v), and tau(t_i v) = 1
  // iff t_i v = e. Only n <= longest can contribute.
  for (int n = 0; n <= static_cast<int>(longest); ++n) {
    Rational tau = 0;
    for (const auto& v : cache->words(n))
      for (const auto& [t, c] : x.terms()) {
        bool all = true;
        for (const auto& u : t)
          if (!product_is_identity(x.spec(), u, v)) {
            all = false;
            break;
          }
        if (all) tau += c;
      }
    out.add(n, tau / Rational(word_count(x.spec(), n)));
  }
  return out;
}

RadialVector radial_product(const RadialVector& a, const RadialVector& b) {
  require_same_spec(a.spec_ptr(), b.spec_ptr());
  if (a.rank() != b.rank()) throw InputError("radial vectors have different tensor ranks");
  return expect(convolve(radial_expand(a), radial_expand(b)));
}

bool is_constant(const WordTuple& t) {
  return std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
}

NonzeroVerdict nonzero_criterion(const SpecPtr& spec, const WordTuple& x, bool cross_check, WordCache* cache) {
  if (x.empty()) throw InputError("tuple must have at least one component");
  const auto delta = TensorElement::delta(spec, x);
  NonzeroVerdict v;
  v.components_equal = is_constant(x);
  v.closed_form_nonzero = !expect(delta).is_zero();
  if (cross_check) v.definition_nonzero = !expect_by_definition(delta, cache).is_zero();
  return v;
}

namespace {

void require_tuples(const WordTuple& x, const WordTuple& y) {
  if (x.empty() || x.size() != y.size())
    throw InputError("x and y must be non-empty tuples of the same rank (got " + std::to_string(x.size()) + " and " +
                     std::to_string(y.size()) + ")");
}

std::size_t max_length(const WordTuple& t) {
  std::size_t out = 0;
  for (const auto& w : t) out = std::max(out, w.length());
  return out;
}

}  // namespace

DefectTerm defect(const SpecPtr& spec, const WordTuple& x, const WordTuple& y, int n, WordCache* cache) {
  require_tuples(x, y);
  if (n < 0) throw InputError("n must be non-negative, got " + std::to_string(n));
  std::optional<WordCache> local;
  if (!cache) cache = &local.emplace(spec);

  const int k = static_cast<int>(x.size());
  DefectTerm term;
  term.n = n;

  TensorElement sum(spec, k);
  WordTuple key(x.size());
  const Rational one = 1;
  for (const auto& v : cache->words(n)) {
    for (std::size_t i = 0; i < x.size(); ++i) key[i] = multiply(*spec, multiply(*spec, x[i], v), y[i]);
    if (is_constant(key)) term.solutions.push_back(v);
    sum.add(key, one);
  }
  const auto a = expect(sum);

  const auto ex = expect(TensorElement::delta(spec, x));
  const auto ey = expect(TensorElement::delta(spec, y));
  auto difference = radial_expand(a);
  if (!ex.is_zero() && !ey.is_zero()) {
    const auto b = convolve(convolve(radial_expand(ex), radial_expand(ey)), build_radial(spec, k, n));
    difference -= b;
  }
  term.defect_sq = norm_sq(difference);
  return term;
}

std::vector<std::string> DefectReport::violations() const {
  std::vector<std::string> out;
  const bool non_constant = !constant_tuples();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto at = " at n = " + std::to_string(r.n);
    if (sgn(r.defect_sq) < 0) out.push_back("negative defect" + at);
    if (i > 0 && r.partial_sum < rows[i - 1].partial_sum) out.push_back("partial sum decreases" + at);
    if (non_constant && r.n > n0) {
      if (r.solution_count > 1) out.push_back(std::to_string(r.solution_count) + " solutions beyond n0" + at);
      if (r.window_bound && r.normalized_term > *r.window_bound) out.push_back("term exceeds its window bound" + at);
    }
  }
  return out;
}

DefectReport defect_series(const SpecPtr& spec, const WordTuple& x, const WordTuple& y, int n_max) {
  require_tuples(x, y);
  if (n_max < 1) throw InputError("n_max must be at least 1, got " + std::to_string(n_max));

  DefectReport rep;
  rep.spec = spec;
  rep.k = static_cast<int>(x.size());
  rep.x = x;
  rep.y = y;
  rep.n_max = n_max;
  rep.n0 = static_cast<int>(max_length(x) + max_length(y));
  rep.x_constant = is_constant(x);
  rep.y_constant = is_constant(y);
  rep.k_reduction_hypotheses = rep.constant_tuples() && x.front().length() >= 2 && y.front().length() >= 2;

  WordCache cache(spec);
  Rational running = 0;
  for (int n = 0; n <= n_max; ++n) {
    auto term = defect(spec, x, y, n, &cache);
    const Rational count(word_count(*spec, n));
    DefectRow row;
    row.n = n;
    row.solution_count = term.solutions.size();
    row.defect_sq = term.defect_sq;
    row.normalized_term = term.defect_sq / count;
    running += row.normalized_term;
    row.partial_sum = running;
    row.tail_bound = 1 / (count * count);
    if (!rep.constant_tuples()) {
      const Rational shortest(word_count(*spec, std::max(0, n - rep.n0)));
      const Rational s(static_cast<long>(row.solution_count));
      row.window_bound = s * s / (count * shortest);
    }
    row.solutions = std::move(term.solutions);
    rep.rows.push_back(std::move(row));
  }

  rep.tail_sum_from_n0 = 0;
  for (const auto& r : rep.rows)
    if (r.n >= rep.n0) rep.tail_sum_from_n0 += r.tail_bound;

  // word_count(n) = a q^(n-1) for n >= 1 with a = m(p-1), q = (m-1)(p-1).
  const Integer q = (spec->m() - 1) * (spec->p() - 1);
  if (q > 1) {
    const int start = std::max(rep.n0, 1);
    const Rational first(word_count(*spec, start));
    const Rational q2 = Rational(q * q);
    Rational series = q2 / (first * first * (q2 - 1));
    if (rep.n0 == 0) series += 1;
    rep.tail_series_from_n0 = series;
  }
  return rep;
}

KReductionResult k_reduction_check(const SpecPtr& spec, const Word& x, const Word& y, int k, int n,
                                   HypothesisMode mode, WordCache* cache) {
  if (k < 1) throw InputError("tensor rank k must be at least 1, got " + std::to_string(k));
  KReductionResult r;
  r.within_hypotheses = x.length() >= 2 && y.length() >= 2 && n >= static_cast<int>(x.length() + y.length());
  if (!r.within_hypotheses && mode == HypothesisMode::strict) {
    throw PreconditionError("k-reduction equality needs |x| >= 2, |y| >= 2 and n >= |x| + |y| (got |x| = " +
                            std::to_string(x.length()) + ", |y| = " + std::to_string(y.length()) +
                            ", n = " + std::to_string(n) + ")");
  }
  std::optional<WordCache> local;
  if (!cache) cache = &local.emplace(spec);
  const auto ks = static_cast<std::size_t>(k);
  r.lhs = defect(spec, WordTuple(ks, x), WordTuple(ks, y), n, cache).defect_sq;
  r.rhs = defect(spec, WordTuple{x}, WordTuple{y}, n, cache).defect_sq;
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace radial
