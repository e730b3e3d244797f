#include "core/algebra.hpp"

#include <sstream>

namespace radial {

void require_same_spec(const SpecPtr& a, const SpecPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw InputError("operands are built over different group specs");
}

AlgebraElement AlgebraElement::delta(SpecPtr spec, const Word& w, const Rational& c) {
  AlgebraElement x(std::move(spec));
  x.add(w, c);
  return x;
}

TensorElement::TensorElement(SpecPtr spec, int rank) : SparseTerms(std::move(spec)), rank_(rank) {
  if (rank < 1) throw InputError("tensor rank k must be at least 1, got " + std::to_string(rank));
}

TensorElement TensorElement::delta(SpecPtr spec, const WordTuple& t, const Rational& c) {
  TensorElement x(std::move(spec), static_cast<int>(t.size()));
  x.add(t, c);
  return x;
}

void TensorElement::require_compatible(const TensorElement& other) const {
  require_same_spec(spec_, other.spec_);
  if (rank_ != other.rank_)
    throw InputError("tensor ranks differ: " + std::to_string(rank_) + " vs " + std::to_string(other.rank_));
}

RadialVector::RadialVector(SpecPtr spec, int rank) : spec_(std::move(spec)), rank_(rank) {
  if (rank < 1) throw InputError("tensor rank k must be at least 1, got " + std::to_string(rank));
}

RadialVector RadialVector::unit(SpecPtr spec, int rank, int n, const Rational& c) {
  RadialVector r(std::move(spec), rank);
  r.add(n, c);
  return r;
}

Rational RadialVector::coeff(int n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void RadialVector::add(int n, const Rational& c) {
  if (n < 0) throw InputError("radial index must be non-negative, got " + std::to_string(n));
  if (sgn(c) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

void RadialVector::require_compatible(const RadialVector& other) const {
  require_same_spec(spec_, other.spec_);
  if (rank_ != other.rank_) throw InputError("radial vectors have different tensor ranks");
}

RadialVector& RadialVector::operator+=(const RadialVector& other) {
  require_compatible(other);
  for (const auto& [n, c] : other.coeffs_) add(n, c);
  return *this;
}

RadialVector& RadialVector::operator-=(const RadialVector& other) {
  require_compatible(other);
  for (const auto& [n, c] : other.coeffs_) add(n, -c);
  return *this;
}

RadialVector& RadialVector::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    coeffs_.clear();
  } else {
    for (auto& [n, c] : coeffs_) c *= s;
  }
  return *this;
}

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
  x.require_compatible(y);
  const auto& spec = x.spec();
  AlgebraElement out(x.spec_ptr());
  Rational product;
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) {
      mpq_mul(product.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      out.add(multiply(spec, u, v), product);
    }
  return out;
}

TensorElement convolve(const TensorElement& x, const TensorElement& y) {
  x.require_compatible(y);
  const auto& spec = x.spec();
  const auto k = static_cast<std::size_t>(x.rank());
  TensorElement out(x.spec_ptr(), x.rank());
  Rational product;
  WordTuple key(k);
  for (const auto& [s, a] : x.terms())
    for (const auto& [t, b] : y.terms()) {
      for (std::size_t i = 0; i < k; ++i) key[i] = multiply(spec, s[i], t[i]);
      mpq_mul(product.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
      out.add(key, product);
    }
  return out;
}

AlgebraElement adjoint(const AlgebraElement& x) {
  AlgebraElement out(x.spec_ptr());
  for (const auto& [u, c] : x.terms()) out.add(inverse(x.spec(), u), c);
  return out;
}

TensorElement adjoint(const TensorElement& x) {
  TensorElement out(x.spec_ptr(), x.rank());
  WordTuple key;
  for (const auto& [t, c] : x.terms()) {
    key.clear();
    for (const auto& u : t) key.push_back(inverse(x.spec(), u));
    out.add(key, c);
  }
  return out;
}

Rational trace(const AlgebraElement& x) { return x.coeff(Word{}); }

Rational trace(const TensorElement& x) {
  return x.coeff(WordTuple(static_cast<std::size_t>(x.rank())));
}

namespace {

template <class Map>
Rational dot(const Map& a, const Map& b) {
  Rational sum = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return sum;
}

}  // namespace

Rational inner_product(const AlgebraElement& x, const AlgebraElement& y) {
  x.require_compatible(y);
  return dot(x.terms(), y.terms());
}

Rational inner_product(const TensorElement& x, const TensorElement& y) {
  x.require_compatible(y);
  return dot(x.terms(), y.terms());
}

Rational norm_sq(const AlgebraElement& x) { return dot(x.terms(), x.terms()); }

Rational norm_sq(const TensorElement& x) { return dot(x.terms(), x.terms()); }

TensorElement build_radial(const SpecPtr& spec, int k, int n) {
  TensorElement out(spec, k);
  const Rational one = 1;
  for (auto& v : enumerate_words(*spec, n)) out.add(WordTuple(static_cast<std::size_t>(k), v), one);
  return out;
}

TensorElement radial_expand(const RadialVector& r) {
  TensorElement out(r.spec_ptr(), r.rank());
  for (const auto& [n, c] : r.coeffs())
    for (auto& v : enumerate_words(r.spec(), n)) out.add(WordTuple(static_cast<std::size_t>(r.rank()), v), c);
  return out;
}

Rational radial_norm_sq(const RadialVector& r) {
  Rational sum = 0;
  for (const auto& [n, c] : r.coeffs()) sum += c * c * Rational(word_count(r.spec(), n));
  return sum;
}

TensorElement tensor_pow(const AlgebraElement& x, int k) {
  if (k < 1) throw InputError("tensor rank k must be at least 1, got " + std::to_string(k));
  std::vector<AlgebraElement> xs(static_cast<std::size_t>(k), x);
  return tensor_of(xs);
}

TensorElement tensor_of(std::span<const AlgebraElement> xs) {
  if (xs.empty()) throw InputError("tensor_of needs at least one factor");
  for (const auto& x : xs) xs.front().require_compatible(x);
  TensorElement out(xs.front().spec_ptr(), static_cast<int>(xs.size()));
  WordTuple key;
  auto expand = [&](auto& self, std::size_t i, const Rational& c) -> void {
    if (i == xs.size()) {
      out.add(key, c);
      return;
    }
    for (const auto& [u, a] : xs[i].terms()) {
      key.push_back(u);
      self(self, i + 1, c * a);
      key.pop_back();
    }
  };
  expand(expand, 0, Rational(1));
  return out;
}

AlgebraElement to_algebra(const TensorElement& x) {
  if (x.rank() != 1) throw InputError("only rank-1 tensors convert to algebra elements");
  AlgebraElement out(x.spec_ptr());
  for (const auto& [t, c] : x.terms()) out.add(t.front(), c);
  return out;
}

TensorElement to_tensor(const AlgebraElement& x) {
  TensorElement out(x.spec_ptr(), 1);
  for (const auto& [u, c] : x.terms()) out.add(WordTuple{u}, c);
  return out;
}

std::vector<RecurrenceRow> verify_recurrence_w1wn(const SpecPtr& spec, int k, int n_max) {
  if (n_max < 2) throw InputError("n_max must be at least 2, got " + std::to_string(n_max));
  const Rational same_factor = spec->p() - 2;
  const Rational backward = (spec->m() - 1) * (spec->p() - 1);

  const auto w1 = build_radial(spec, k, 1);
  auto previous = build_radial(spec, k, 1);
  auto current = build_radial(spec, k, 2);
  std::vector<RecurrenceRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    auto next = build_radial(spec, k, n + 1);
    const auto left = convolve(w1, current);
    const auto right = convolve(current, w1);

    auto residual = left - (next + same_factor * current + backward * previous);
    const auto commutator = left - right;
    RecurrenceRow row{n, residual, norm_sq(residual), norm_sq(commutator)};
    rows.push_back(std::move(row));

    previous = std::move(current);
    current = std::move(next);
  }
  return rows;
}

std::string W1SquaredVerdict::summary() const {
  if (plus_matches && !printed_matches) return "plus-sign form matches; printed form does not";
  if (plus_matches && printed_matches) return "both forms match";
  if (printed_matches) return "printed form matches; plus-sign form does not";
  return "neither form matches";
}

W1SquaredVerdict verify_recurrence_w1sq(const SpecPtr& spec, int k) {
  const auto w1 = build_radial(spec, k, 1);
  const auto square = convolve(w1, w1);

  W1SquaredVerdict v{RadialVector(spec, k), false, RadialVector(spec, k), RadialVector(spec, k), false, false};
  // Orthogonal projection onto each w_n; lengths above 2 cannot occur.
  for (int n = 0; n <= 2; ++n)
    v.expansion.add(n, inner_product(square, build_radial(spec, k, n)) / Rational(word_count(*spec, n)));
  v.is_radial = radial_expand(v.expansion) == square;

  const Rational same_factor = spec->p() - 2;
  const Rational identity_hits = spec->m() * (spec->p() - 1);
  v.printed_candidate.add(2, 1);
  v.printed_candidate.add(1, -same_factor);
  v.printed_candidate.add(0, -identity_hits);
  v.plus_candidate.add(2, 1);
  v.plus_candidate.add(1, same_factor);
  v.plus_candidate.add(0, identity_hits);

  v.printed_matches = radial_expand(v.printed_candidate) == square;
  v.plus_matches = radial_expand(v.plus_candidate) == square;
  return v;
}

}  // namespace radial
