#include "hmcat/fixtures.hpp"

namespace hmcat {

namespace {

LinComb basis_vec(Field f, std::size_t i) { return {{i, Scalar::one(f)}}; }

}  // namespace

Fixture fix_triv(Field f) {
  return {"FIX-TRIV", trivial_action(FiniteGroup::cyclic(2), single_object_category(field_algebra(f)))};
}

Fixture fix_swap(Field f) {
  auto c = std::make_shared<LinCat>(f, std::vector<std::string>{"x", "y"});
  const auto ix = c->add_basis("1x", 0, 0);
  const auto iy = c->add_basis("1y", 1, 1);
  const auto a = c->add_basis("a", 0, 1);
  const auto b = c->add_basis("b", 1, 0);
  c->set_identity(0, basis_vec(f, ix));
  c->set_identity(1, basis_vec(f, iy));
  c->set_comp(ix, ix, basis_vec(f, ix));
  c->set_comp(iy, iy, basis_vec(f, iy));
  c->set_comp(iy, a, basis_vec(f, a));
  c->set_comp(a, ix, basis_vec(f, a));
  c->set_comp(ix, b, basis_vec(f, b));
  c->set_comp(b, iy, basis_vec(f, b));
  GroupAction act{FiniteGroup::cyclic(2), c, {{0, 1}, {1, 0}}, {}};
  act.images.push_back({basis_vec(f, ix), basis_vec(f, iy), basis_vec(f, a), basis_vec(f, b)});
  act.images.push_back({basis_vec(f, iy), basis_vec(f, ix), basis_vec(f, b), basis_vec(f, a)});
  return {"FIX-SWAP", act};
}

Fixture fix_sign(Field f) {
  const AlgebraAction aa = sign_algebra_action(f);
  return {"FIX-SIGN", algebra_action(aa.group, single_object_category(aa.lambda), aa.mats)};
}

Fixture discrete_swap(Field f) {
  auto c = std::make_shared<LinCat>(f, std::vector<std::string>{"x", "y"});
  c->add_basis("1x", 0, 0);
  c->add_basis("1y", 1, 1);
  c->set_identity(0, basis_vec(f, 0));
  c->set_identity(1, basis_vec(f, 1));
  c->set_comp(0, 0, basis_vec(f, 0));
  c->set_comp(1, 1, basis_vec(f, 1));
  GroupAction act{FiniteGroup::cyclic(2), c, {{0, 1}, {1, 0}}, {}};
  act.images.push_back({basis_vec(f, 0), basis_vec(f, 1)});
  act.images.push_back({basis_vec(f, 1), basis_vec(f, 0)});
  return {"DISCRETE-SWAP", act};
}

std::vector<Fixture> standard_fixtures(Field f) { return {fix_triv(f), fix_swap(f), fix_sign(f)}; }

Fixture fixture_by_name(const std::string& name, Field f) {
  if (name == "triv" || name == "FIX-TRIV") return fix_triv(f);
  if (name == "swap" || name == "FIX-SWAP") return fix_swap(f);
  if (name == "sign" || name == "FIX-SIGN") return fix_sign(f);
  if (name == "discrete" || name == "DISCRETE-SWAP") return discrete_swap(f);
  throw InvalidInput("unknown fixture '" + name + "'");
}

AlgebraView field_algebra(Field f) {
  return {f, 1, {"1"}, {basis_vec(f, 0)}, basis_vec(f, 0)};
}

AlgebraView dual_numbers(Field f) {
  AlgebraView a{f, 2, {"1", "t"}, std::vector<LinComb>(4), basis_vec(f, 0)};
  a.mul[0] = basis_vec(f, 0);
  a.mul[1] = basis_vec(f, 1);
  a.mul[2] = basis_vec(f, 1);
  return a;
}

AlgebraView group_algebra(const FiniteGroup& g, Field f) {
  const std::size_t n = g.size();
  AlgebraView a{f, n, g.labels(), std::vector<LinComb>(n * n), basis_vec(f, 0)};
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) a.mul[s * n + t] = basis_vec(f, g.mul(s, t));
  return a;
}

AlgebraView matrix_algebra(std::size_t n, Field f) {
  const std::size_t d = n * n;
  AlgebraView a{f, d, {}, std::vector<LinComb>(d * d), {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) a.mul[(i * n + j) * d + (j * n + l)] = basis_vec(f, i * n + l);
  for (std::size_t i = 0; i < n; ++i) a.unit.emplace_back(i * n + i, Scalar::one(f));
  return a;
}

AlgebraAction sign_algebra_action(Field f) {
  const Scalar one = Scalar::one(f);
  return {dual_numbers(f), FiniteGroup::cyclic(2),
          {SparseMatrix::identity(f, 2), SparseMatrix::from_triplets(f, 2, 2, {{0, 0, one}, {1, 1, -one}})}};
}

AlgebraAction trivial_algebra_action(const AlgebraView& lambda, const FiniteGroup& g) {
  return {lambda, g, std::vector<SparseMatrix>(g.size(), SparseMatrix::identity(lambda.field, lambda.dim))};
}

}  // namespace hmcat
