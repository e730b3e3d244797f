#pragma once

#include "core/algebra.hpp"
#include "oracles.hpp"

#include <string>
#include <vector>

namespace testsupport {

struct DeskSpec {
  std::string name;
  radial::SpecPtr spec;
  oracle::Group group;
};

inline DeskSpec desk(int m, int p) {
  return {"fp:" + std::to_string(m) + "x" + std::to_string(p), radial::share(radial::GroupSpec::cyclic_product(m, p)),
          oracle::Group::cyclic(m, p)};
}

inline DeskSpec desk_free(int rank) {
  return {"free:" + std::to_string(rank), radial::share(radial::GroupSpec::free_group(rank)),
          oracle::Group::free_group(rank)};
}

inline std::vector<DeskSpec> desk_specs() {
  return {desk(3, 2), desk(3, 3), desk(4, 2), desk(4, 3), desk_free(2), desk_free(3)};
}

inline radial::TensorElement to_lib(const radial::SpecPtr& spec, int k, const oracle::Elem& e) {
  radial::TensorElement out(spec, k);
  for (const auto& [t, c] : e) out.add(oracle::to_lib(t), c);
  return out;
}

inline oracle::Elem from_lib(const radial::TensorElement& x) {
  oracle::Elem out;
  for (const auto& [t, c] : x.terms()) out[oracle::from_lib(t)] = c;
  return out;
}

inline oracle::Radial from_lib(const radial::RadialVector& r) {
  return oracle::Radial(r.coeffs().begin(), r.coeffs().end());
}

}  // namespace testsupport
