#include "core/conjugacy.hpp"

#include <optional>

namespace radial {

std::string to_string(ConjugacyMode mode) {
  return mode == ConjugacyMode::reduced_concat ? "reduced" : "plain";
}

ConjugacyMode parse_conjugacy_mode(std::string_view text) {
  if (text == "reduced" || text == "reduced_concat") return ConjugacyMode::reduced_concat;
  if (text == "plain") return ConjugacyMode::plain;
  throw InputError("unknown equation mode '" + std::string(text) + "' (expected reduced or plain)");
}

EquationInstance EquationInstance::make(SpecPtr spec, Word a, Word b, ConjugacyMode mode) {
  if (a.is_identity() || b.is_identity()) throw InputError("a and b must be non-trivial");
  return {std::move(spec), std::move(a), std::move(b), mode};
}

bool solves(const EquationInstance& inst, const Word& x) {
  const auto& spec = *inst.spec;
  if (inst.mode == ConjugacyMode::plain) return multiply(spec, x, inst.a) == multiply(spec, inst.b, x);

  if (!is_reduced_concat(spec, x, inst.a) || !is_reduced_concat(spec, inst.b, x)) return false;
  // Both sides are reduced juxtapositions, so compare letter by letter.
  const auto xs = x.letters(), as = inst.a.letters(), bs = inst.b.letters();
  if (xs.size() + as.size() != bs.size() + xs.size()) return false;
  auto left = [&](std::size_t i) { return i < xs.size() ? xs[i] : as[i - xs.size()]; };
  auto right = [&](std::size_t i) { return i < bs.size() ? bs[i] : xs[i - bs.size()]; };
  for (std::size_t i = 0; i < xs.size() + as.size(); ++i)
    if (left(i) != right(i)) return false;
  return true;
}

std::vector<Word> solve_fixed_length(const EquationInstance& inst, int l, WordCache* cache) {
  if (inst.a.is_identity() || inst.b.is_identity()) throw InputError("a and b must be non-trivial");
  if (l < 0) throw InputError("length must be non-negative, got " + std::to_string(l));
  if (inst.mode == ConjugacyMode::reduced_concat && l < 1)
    throw PreconditionError("reduced-concatenation equation is only considered for l >= 1");
  std::optional<WordCache> local;
  if (!cache) cache = &local.emplace(inst.spec);

  std::vector<Word> out;
  for (const auto& x : cache->words(l))
    if (solves(inst, x)) out.push_back(x);
  return out;
}

bool UniquenessReport::holds() const {
  for (const auto& r : rows)
    if (r.violation()) return false;
  return true;
}

std::vector<UniquenessRow> UniquenessReport::violations() const {
  std::vector<UniquenessRow> out;
  for (const auto& r : rows)
    if (r.violation()) out.push_back(r);
  return out;
}

UniquenessReport verify_uniqueness(const EquationInstance& inst, int l_max, WordCache* cache) {
  std::optional<WordCache> local;
  if (!cache) cache = &local.emplace(inst.spec);

  UniquenessReport rep{inst, {}};
  const int bound = static_cast<int>(inst.a.length() + inst.b.length());
  const int first = inst.mode == ConjugacyMode::reduced_concat ? 1 : 0;
  for (int l = first; l <= l_max; ++l) {
    UniquenessRow row;
    row.l = l;
    row.asserted = inst.mode == ConjugacyMode::reduced_concat || l > bound;
    row.solutions = solve_fixed_length(inst, l, cache);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace radial
