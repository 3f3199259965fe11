#pragma once

#include <random>
#include <set>

#include <doctest.h>

#include "lieboson/model_catalog.hpp"

namespace lieboson::test {

/// Models are expensive enough to share across test cases.
inline const Model& model(const std::string& name) {
  static std::map<std::string, Model> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build(name)).first;
  return it->second;
}

inline std::multiset<HalfInt> ranks_of(const std::vector<TensorMultiplet>& ts) {
  std::multiset<HalfInt> out;
  for (const auto& t : ts) out.insert(t.rank);
  return out;
}

inline std::multiset<HalfInt> ranks(std::initializer_list<int> twice) {
  std::multiset<HalfInt> out;
  for (int t : twice) out.insert(HalfInt::from_twice(t));
  return out;
}

inline RadicalScalar s(long n) { return sqrt_int(n); }
inline RadicalScalar q(long a, long b = 1) { return RadicalScalar::rational(a, b); }

}  // namespace lieboson::test
