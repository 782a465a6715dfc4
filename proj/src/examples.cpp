#include "homalg/examples.hpp"

#include "homalg/errors.hpp"

namespace homalg::examples {

HomHopfAlgebra ground_hopf(Field field) {
  const LinearMap one = LinearMap::identity(1, field);
  return HomHopfAlgebra(HomBialgebra(HomAlgebra(one, one, one), HomCoalgebra(one, one, one)), one);
}

HomHopfAlgebra cyclic_group_algebra(std::size_t n, Field field) {
  LinearMap mult(n, n * n, field), unit(n, 1, field), comult(n * n, n, field),
      counit(1, n, field), antipode(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult((i + j) % n, i * n + j) = field.one();
    comult(i * n + i, i) = field.one();
    counit(0, i) = field.one();
    antipode((n - i) % n, i) = field.one();
  }
  unit(0, 0) = field.one();
  const LinearMap id = LinearMap::identity(n, field);
  return HomHopfAlgebra(HomBialgebra(HomAlgebra(mult, unit, id), HomCoalgebra(comult, counit, id)),
                        antipode);
}

LinearMap cyclic_power_map(std::size_t n, std::size_t k, Field field) {
  LinearMap m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m((i * k) % n, i) = field.one();
  if (rank(m) != n) throw NotAutomorphism("power map is not bijective");
  return m;
}

HomHopfAlgebra sweedler_h4(Field field) {
  // Basis index a + 2b for g^a x^b.
  auto idx = [](std::size_t a, std::size_t b) { return a + 2 * b; };
  LinearMap mult(4, 16, field), unit(4, 1, field), comult(16, 4, field), counit(1, 4, field),
      antipode(4, 4, field);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          if (b + d > 1) continue;
          // x^b g^c = (−1)^{bc} g^c x^b
          const long sign = (b * c) % 2 ? -1 : 1;
          mult(idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d)) = field.from_int(sign);
        }
  unit(0, 0) = field.one();
  const std::size_t one = 0, g = 1, x = 2, gx = 3;
  comult(one * 4 + one, one) = field.one();
  comult(g * 4 + g, g) = field.one();
  comult(x * 4 + one, x) = field.one();
  comult(g * 4 + x, x) = field.one();
  comult(gx * 4 + g, gx) = field.one();
  comult(one * 4 + gx, gx) = field.one();
  counit(0, one) = field.one();
  counit(0, g) = field.one();
  antipode(one, one) = field.one();
  antipode(g, g) = field.one();
  antipode(gx, x) = field.from_int(-1);
  antipode(x, gx) = field.one();
  const LinearMap id = LinearMap::identity(4, field);
  return HomHopfAlgebra(HomBialgebra(HomAlgebra(mult, unit, id), HomCoalgebra(comult, counit, id)),
                        antipode);
}

LinearMap h4_scaling(const Scalar& lambda) {
  LinearMap m = LinearMap::identity(4, lambda.field());
  m(2, 2) = lambda;
  m(3, 3) = lambda;
  return m;
}

HomHopfAlgebra twisted_h4(Field field) {
  return yau_twist(sweedler_h4(field), h4_scaling(field.from_int(2)));
}

HomHopfAlgebra twisted_z3(Field field) {
  return yau_twist(cyclic_group_algebra(3, field), cyclic_power_map(3, 2, field));
}

HomCoalgebra cyclic_function_coalgebra(std::size_t n, Field field) {
  LinearMap comult(n * n, n, field), counit(1, n, field);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) comult(j * n + k, (j + k) % n) = field.one();
  counit(0, 0) = field.one();
  return HomCoalgebra(comult, counit, LinearMap::identity(n, field));
}

LinearMap degree_coaction(std::size_t n, Field field) {
  LinearMap m(n * n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i * n + i, i) = field.one();
  return m;
}

LinearMap sign_action_z2(Field field) {
  LinearMap m(2, 4, field);
  m(0, 0 * 2 + 0) = field.one();       // 1·1 = 1
  m(1, 0 * 2 + 1) = field.one();       // 1·g = g
  m(0, 1 * 2 + 0) = field.one();       // g·1 = 1
  m(1, 1 * 2 + 1) = field.from_int(-1);  // g·g = −g
  return m;
}

}  // namespace homalg::examples
