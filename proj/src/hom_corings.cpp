#include "homalg/hom_corings.hpp"

#include <optional>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

/// The reduced relation basis of q as tensors on the given legs.
std::vector<Tensor> relation_tensors(const QuotientSpace& q, const Dims& legs) {
  std::vector<Tensor> out;
  for (const auto& r : q.relations()) out.emplace_back(legs, to_dense(r, q.ambient_dim(), q.field()));
  return out;
}

/// Each tensor t becomes t ⊗ e_j for every basis vector e_j of k^extra.
std::vector<Tensor> with_extra_right(const std::vector<Tensor>& ts, std::size_t extra) {
  std::vector<Tensor> out;
  for (const auto& t : ts) {
    for (std::size_t j = 0; j < extra; ++j) {
      const Field f = t.field();
      LinearMap e(extra, 1, f);
      e(j, 0) = f.one();
      out.push_back(t.on(t.legs(), LegMap(e, {}, {extra})));
    }
  }
  return out;
}

/// Throws NonDescendingMap unless g sends every relation to zero, either
/// exactly or after projection into `target`.
void require_kills(const std::vector<Tensor>& relations, const TensorFn& g,
                   const QuotientSpace* target, const std::string& what) {
  for (const auto& r : relations) {
    const Tensor image = g(r);
    const bool zero = target ? is_zero(target->project(image.entries())) : image.is_zero();
    if (!zero) throw NonDescendingMap(what + " is not well defined on the quotient");
  }
}

}  // namespace

LinearMap HomCoring::comult() const { return square.space.projection() * comult_lift; }

HomCoring make_coring(HomAlgebra base, LinearMap chi, LinearMap left_action,
                      LinearMap right_action, LinearMap comult_lift, LinearMap counit) {
  ModuleWitness w(std::move(chi));
  const std::size_t d = w.dim();
  if (left_action.rows() != d || left_action.cols() != base.dim() * d)
    throw ShapeMismatch("coring left action has the wrong shape");
  if (right_action.rows() != d || right_action.cols() != d * base.dim())
    throw ShapeMismatch("coring right action has the wrong shape");
  if (comult_lift.rows() != d * d || comult_lift.cols() != d)
    throw ShapeMismatch("coring comultiplication has the wrong shape");
  if (counit.rows() != base.dim() || counit.cols() != d)
    throw ShapeMismatch("coring counit has the wrong shape");
  w.left_action = std::move(left_action);
  w.right_action = std::move(right_action);
  BalancedTensor square = tensor_over_A(base, w, w);
  return HomCoring{std::move(base), std::move(w), std::move(square), std::move(comult_lift),
                   std::move(counit)};
}

ModuleWitness square_witness(const HomCoring& c) {
  ModuleWitness w = c.square.witness();
  w.left_action = induced_left_action(c.square, c.base, c.bimodule, c.bimodule);
  w.right_action = induced_right_action(c.square, c.base, c.bimodule, c.bimodule);
  return w;
}

BalancedTensor cube(const HomCoring& c) { return tensor_over_A(c.base, c.bimodule, square_witness(c)); }

CheckResult check_coring(const HomCoring& c) {
  const HomAlgebra& a = c.base;
  const std::size_t d = c.dim();
  const Field f = c.field();
  const LegMap lift = c.lift(), eps = c.eps();
  std::optional<ModuleWitness> sq;
  return first_failure({
      [&] { return check_bimodule(a, a, c.bimodule).within("bimodule"); },
      [&] {
        sq = square_witness(c);
        return check_bimodule_morphism(a, a, c.bimodule, *sq, c.comult()).within("Δ");
      },
      [&] {
        return check_bimodule_morphism(a, a, c.bimodule, regular_bimodule(a), c.counit)
            .within("ε");
      },
      [&] {
        const LegMap lact = c.bimodule.left_act();
        return check_identity(
            "counit ε(c₁)c₂=c", {d}, f,
            [&](const Tensor& x) { return x.on(0, lift).on(0, eps).on(0, lact); },
            [&](const Tensor& x) { return x; });
      },
      [&] {
        const LegMap ract = c.bimodule.right_act();
        return check_identity(
            "counit c₁ε(c₂)=c", {d}, f,
            [&](const Tensor& x) { return x.on(0, lift).on(1, eps).on(0, ract); },
            [&](const Tensor& x) { return x; });
      },
      [&] {
        const BalancedTensor c3 = tensor_over_A(a, c.bimodule, *sq);
        const LegMap p2 = c.square.projection(), p3 = c3.projection();
        const LegMap chi = c.bimodule.m(), chi_inv = c.bimodule.m(-1);
        return check_identity(
            "hom-coassociativity c₁⊗Δ(c₂)=χ(c₁₁)⊗c₁₂⊗χ⁻¹(c₂)", {d}, f,
            [&](const Tensor& x) { return x.on(0, lift).on(1, lift).on(1, p2).on(0, p3); },
            [&](const Tensor& x) {
              return x.on(0, lift).on(0, lift).on(0, chi).on(2, chi_inv).on(1, p2).on(0, p3);
            });
      },
  });
}

HomCoring trivial_coring(const HomAlgebra& a) {
  const std::size_t d = a.dim();
  LinearMap lift = tabulate({d}, {d, d}, a.field(),
                            [&](const Tensor& x) { return x.on(0, a.a(-1)).on(1, a.eta()); });
  return make_coring(a, a.alpha(), a.mult(), a.mult(), std::move(lift),
                     LinearMap::identity(d, a.field()));
}

HomCoring sweedler_coring(const AlgebraMorphism& phi) {
  const HomAlgebra& b = phi.source;
  const HomAlgebra& a = phi.target;
  const std::size_t da = a.dim();
  const Field f = a.field();
  const ModuleWitness along = bimodule_along(phi);
  const BalancedTensor t = tensor_over_A(b, along, along);
  const ModuleWitness reg = regular_bimodule(a);
  LinearMap left = induced_left_action(t, a, reg, along);
  LinearMap right = induced_right_action(t, a, along, reg);

  const LegMap proj = t.projection(), sec = t.section();
  const LegMap ai = a.a(-1), eta = a.eta(), m = a.m();
  const TensorFn delta = [&](const Tensor& x) {
    return x.on(0, ai).on(1, ai).on(1, eta).on(2, eta).on(0, proj).on(1, proj);
  };
  const TensorFn counit = [&](const Tensor& x) { return x.on(0, m); };
  const std::size_t q = t.dim();
  HomCoring c = make_coring(
      a, t.automorphism, std::move(left), std::move(right),
      tabulate({q}, {q, q}, f, [&](const Tensor& x) { return delta(x.on(0, sec)); }),
      tabulate({q}, {da}, f, [&](const Tensor& x) { return counit(x.on(0, sec)); }));
  const auto rels = relation_tensors(t.space, {da, da});
  require_kills(rels, delta, &c.square.space, "Sweedler comultiplication");
  require_kills(rels, counit, nullptr, "Sweedler counit");
  return c;
}

namespace {

struct ExtensionParts {
  HomCoring coring;
  BalancedTensor inner;  // B ⊗_A C
  BalancedTensor outer;  // (B ⊗_A C) ⊗_A B
};

ExtensionParts extend(const HomCoring& c, const AlgebraMorphism& phi) {
  const HomAlgebra& a = c.base;
  const HomAlgebra& b = phi.target;
  if (phi.source.dim() != a.dim()) throw ShapeMismatch("morphism source is not the coring base");
  const std::size_t db = b.dim(), dc = c.dim();
  const Field f = a.field();
  const ModuleWitness along = bimodule_along(phi);

  // B with a right A-action through φ and its own left B-action, and the mirror image.
  ModuleWitness b_left(b.alpha());
  b_left.right_action = *along.right_action;
  b_left.left_action = b.mult();
  ModuleWitness b_right(b.alpha());
  b_right.left_action = *along.left_action;
  b_right.right_action = b.mult();

  BalancedTensor inner = tensor_over_A(a, b_left, c.bimodule);
  ModuleWitness inner_w = inner.witness();
  inner_w.right_action = induced_right_action(inner, a, b_left, c.bimodule);
  inner_w.left_action = induced_left_action(inner, b, b_left, c.bimodule);
  BalancedTensor outer = tensor_over_A(a, inner_w, b_right);
  LinearMap left = induced_left_action(outer, b, inner_w, b_right);
  LinearMap right = induced_right_action(outer, b, inner_w, b_right);

  const LegMap p_in = inner.projection(), p_out = outer.projection();
  const LegMap s_in = inner.section(), s_out = outer.section();
  const LegMap bi = b.a(-1), eta = b.eta(), mb = b.m(), lift = c.lift(), eps = c.eps();
  const LegMap fm(phi.matrix, {a.dim()}, {db});

  // (b, c, b') ↦ ((β⁻¹b⊗c₁)⊗1)⊗((1⊗c₂)⊗β⁻¹b')
  const TensorFn delta = [&](const Tensor& x) {
    return x.on(0, bi)
        .on(1, lift)
        .on(3, bi)
        .on(2, eta)
        .on(2, eta)
        .on(0, p_in)
        .on(2, p_in)
        .on(0, p_out)
        .on(1, p_out);
  };
  // (b, c, b') ↦ (bφ(ε(c)))b'
  const TensorFn counit = [&](const Tensor& x) {
    return x.on(1, eps).on(1, fm).on(0, mb).on(0, mb);
  };
  const TensorFn unfold = [&](const Tensor& x) { return x.on(0, s_out).on(0, s_in); };

  const std::size_t q = outer.dim();
  HomCoring coring = make_coring(
      b, outer.automorphism, std::move(left), std::move(right),
      tabulate({q}, {q, q}, f, [&](const Tensor& x) { return delta(unfold(x)); }),
      tabulate({q}, {db}, f, [&](const Tensor& x) { return counit(unfold(x)); }));

  const auto inner_rels = with_extra_right(relation_tensors(inner.space, {db, dc}), db);
  std::vector<Tensor> outer_rels;
  for (const auto& r : relation_tensors(outer.space, {inner.dim(), db}))
    outer_rels.push_back(r.on(0, s_in));
  for (const std::vector<Tensor>* rels : std::vector<const std::vector<Tensor>*>{&inner_rels, &outer_rels}) {
    require_kills(*rels, delta, &coring.square.space, "extended comultiplication");
    require_kills(*rels, counit, nullptr, "extended counit");
  }
  return {std::move(coring), std::move(inner), std::move(outer)};
}

}  // namespace

HomCoring base_ring_extension(const HomCoring& c, const AlgebraMorphism& phi) {
  return extend(c, phi).coring;
}

CheckResult check_sweedler_identification(const AlgebraMorphism& phi) {
  const HomAlgebra& b = phi.source;
  const HomAlgebra& a = phi.target;
  const std::size_t da = a.dim(), db = b.dim();
  const Field f = a.field();

  const ExtensionParts ext = extend(trivial_coring(b), phi);
  const HomCoring sw = sweedler_coring(phi);
  const BalancedTensor& ab = ext.inner;  // A ⊗_B B
  const LegMap p_ab = ab.projection(), s_ab = ab.section();
  const LegMap fm(phi.matrix, {db}, {da});

  const LinearMap to_ab = tabulate({da}, {ab.dim()}, f, [&](const Tensor& x) {
    return x.on(0, a.a(-1)).on(1, b.eta()).on(0, p_ab);
  });
  const TensorFn psi_flat = [&](const Tensor& x) { return x.on(1, fm).on(0, a.m()); };
  require_kills(relation_tensors(ab.space, {da, db}), psi_flat, nullptr, "a⊗b ↦ aφ(b)");
  const LinearMap from_ab =
      tabulate({ab.dim()}, {da}, f, [&](const Tensor& x) { return psi_flat(x.on(0, s_ab)); });

  if (!(from_ab * to_ab).is_identity() || !(to_ab * from_ab).is_identity())
    return CheckResult::fail("identification maps A ≅ A⊗_B B are mutually inverse");
  if (a.alpha() * from_ab != from_ab * ab.automorphism || ab.automorphism * to_ab != to_ab * a.alpha())
    return CheckResult::fail("identification maps commute with the automorphisms");

  // T: (A⊗_B B)⊗_B A → A⊗_B A induced by ψ⊗id.
  const LegMap psi_leg(from_ab, {ab.dim()}, {da});
  const LegMap p_sw = sw.square.projection();
  const BalancedTensor& outer = ext.outer;
  const ModuleWitness along = bimodule_along(phi);
  const LegMap p_carrier = tensor_over_A(b, along, along).projection();  // onto A⊗_B A
  const TensorFn t_flat = [&](const Tensor& x) { return x.on(0, psi_leg).on(0, p_carrier); };
  require_kills(relation_tensors(outer.space, {ab.dim(), da}), t_flat, nullptr,
                "ψ⊗id on the extended carrier");
  const LinearMap t = tabulate({outer.dim()}, {sw.dim()}, f,
                               [&](const Tensor& x) { return t_flat(x.on(0, outer.section())); });
  if (t.rows() != t.cols() || rank(t) != t.rows())
    return CheckResult::fail("ψ⊗id is an isomorphism of carriers");
  const LegMap t_leg(t, {outer.dim()}, {sw.dim()});
  return first_failure({
      [&] {
        return check_identity(
            "Δ transported along ψ⊗id", {outer.dim()}, f,
            [&](const Tensor& x) { return x.on(0, t_leg).on(0, sw.lift()).on(0, p_sw); },
            [&](const Tensor& x) {
              return x.on(0, ext.coring.lift()).on(0, t_leg).on(1, t_leg).on(0, p_sw);
            });
      },
      [&] {
        return check_identity(
            "ε transported along ψ⊗id", {outer.dim()}, f,
            [&](const Tensor& x) { return x.on(0, t_leg).on(0, sw.eps()); },
            [&](const Tensor& x) { return x.on(0, ext.coring.eps()); });
      },
  });
}

BalancedTensor comodule_target(const HomCoring& c, const ModuleWitness& m) {
  return tensor_over_A(c.base, m, c.bimodule);
}

CheckResult check_comodule_over_coring(const HomCoring& c, const ModuleWitness& m) {
  const HomAlgebra& a = c.base;
  const std::size_t n = m.dim();
  const Field f = c.field();
  std::optional<BalancedTensor> mc;
  std::optional<LegMap> rho, act, p_mc;
  return first_failure({
      [&] { return check_right_module(a, m).within("module"); },
      [&] {
        rho = m.right_coact();
        if (rho->out()[1] != c.dim()) throw ShapeMismatch("coaction does not land in M⊗C");
        act = m.right_act();
        mc = comodule_target(c, m);
        p_mc = mc->projection();
        const LegMap ract = c.bimodule.right_act();
        return check_identity(
            "ρ(ma)=ρ(m)a", {n, a.dim()}, f,
            [&](const Tensor& x) { return x.on(0, *act).on(0, *rho).on(0, *p_mc); },
            [&](const Tensor& x) {
              return x.on(0, *rho).on(2, a.a(-1)).on(1, ract).on(0, m.m()).on(0, *p_mc);
            });
      },
      [&] {
        return check_identity(
            "ρμ=(μ⊗χ)ρ", {n}, f,
            [&](const Tensor& x) { return x.on(0, m.m()).on(0, *rho).on(0, *p_mc); },
            [&](const Tensor& x) {
              return x.on(0, *rho).on(0, m.m()).on(1, c.bimodule.m()).on(0, *p_mc);
            });
      },
      [&] {
        return check_identity(
            "counit m₀ε(m₁)=m", {n}, f,
            [&](const Tensor& x) { return x.on(0, *rho).on(1, c.eps()).on(0, *act); },
            [&](const Tensor& x) { return x; });
      },
      [&] {
        // M ⊗_A (C ⊗_A C) only needs the left action on the square.
        ModuleWitness sq = c.square.witness();
        sq.left_action = induced_left_action(c.square, c.base, c.bimodule, c.bimodule);
        const BalancedTensor mcc = tensor_over_A(a, m, sq);
        const LegMap p2 = c.square.projection(), p3 = mcc.projection();
        const LegMap lift = c.lift();
        return check_identity(
            "comodule coassociativity m₀⊗Δ(m₁)=μ(m₀₀)⊗m₀₁⊗χ⁻¹(m₁)", {n}, f,
            [&](const Tensor& x) { return x.on(0, *rho).on(1, lift).on(1, p2).on(0, p3); },
            [&](const Tensor& x) {
              return x.on(0, *rho)
                  .on(0, *rho)
                  .on(0, m.m())
                  .on(2, c.bimodule.m(-1))
                  .on(1, p2)
                  .on(0, p3);
            });
      },
  });
}

// ---------------------------------------------------------------------------
// Dual algebras.

const char* to_string(DualSide side) {
  switch (side) {
    case DualSide::Left: return "left";
    case DualSide::Right: return "right";
    case DualSide::TwoSided: return "two-sided";
  }
  return "?";
}

Vector MapAlgebra::coordinates(const LinearMap& f) const {
  Vector coords;
  coords.reserve(coordinate_positions.size());
  for (auto p : coordinate_positions) coords.push_back(f.entries()[p]);
  if (element(coords) != f) throw NotClosed("map lies outside the dual algebra");
  return coords;
}

LinearMap MapAlgebra::element(const Vector& coords) const {
  if (basis.empty()) return LinearMap();
  LinearMap out(basis.front().rows(), basis.front().cols(), basis.front().field());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out += basis[i] * coords[i];
  return out;
}

ConstrainedMaps solve_map_constraints(std::size_t rows, std::size_t cols, Field field,
                                      const std::function<Vector(const LinearMap&)>& constraints) {
  const std::size_t n = rows * cols;
  std::vector<Vector> columns;
  std::size_t len = 0;
  for (std::size_t u = 0; u < n; ++u) {
    LinearMap e(rows, cols, field);
    e.entries()[u] = field.one();
    columns.push_back(constraints(e));
    len = columns.back().size();
  }
  const RowReduction rr = row_reduce(LinearMap::from_columns(len, columns, field));
  std::vector<bool> pivot(n, false);
  for (auto p : rr.pivots) pivot[p] = true;
  ConstrainedMaps out;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot[free]) continue;
    LinearMap b(rows, cols, field);
    b.entries()[free] = field.one();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) b.entries()[rr.pivots[i]] = -rr.reduced(i, free);
    out.basis.push_back(std::move(b));
    out.free_positions.push_back(free);
  }
  return out;
}

LinearMap dual_product(const HomCoring& c, DualSide side, const LinearMap& f, const LinearMap& g) {
  const std::size_t d = c.dim(), da = c.base.dim();
  const LegMap fl(f, {d}, {da}), gl(g, {d}, {da}), lift = c.lift();
  switch (side) {
    case DualSide::Left: {
      const LegMap ract = c.bimodule.right_act();
      return tabulate({d}, {da}, c.field(), [&](const Tensor& x) {
        return x.on(0, lift).on(1, gl).on(0, ract).on(0, fl);
      });
    }
    case DualSide::Right: {
      const LegMap lact = c.bimodule.left_act();
      return tabulate({d}, {da}, c.field(), [&](const Tensor& x) {
        return x.on(0, lift).on(0, fl).on(0, lact).on(0, gl);
      });
    }
    case DualSide::TwoSided:
      return tabulate({d}, {da}, c.field(), [&](const Tensor& x) {
        return x.on(0, lift).on(0, fl).on(1, gl).on(0, c.base.m());
      });
  }
  throw PreconditionFailed("unknown dual side");
}

DualAlgebra dual_algebra(const HomCoring& c, DualSide side) {
  const std::size_t d = c.dim(), da = c.base.dim();
  const Field f = c.field();
  const LegMap lact = c.bimodule.left_act(), ract = c.bimodule.right_act(), m = c.base.m();
  const bool left = side != DualSide::Right, right = side != DualSide::Left;
  auto constraints = [&](const LinearMap& e) {
    const LegMap el(e, {d}, {da});
    Vector out;
    auto append = [&](const LinearMap& diff) {
      out.insert(out.end(), diff.entries().begin(), diff.entries().end());
    };
    if (left) {
      append(tabulate({da, d}, {da}, f, [&](const Tensor& x) {
        return x.on(0, lact).on(0, el) - x.on(1, el).on(0, m);
      }));
    }
    if (right) {
      append(tabulate({d, da}, {da}, f, [&](const Tensor& x) {
        return x.on(0, ract).on(0, el) - x.on(0, el).on(0, m);
      }));
    }
    append(e * c.chi() - c.base.alpha() * e);
    return out;
  };
  DualAlgebra out;
  static_cast<MapAlgebra&>(out) = make_map_algebra(
      solve_map_constraints(da, d, f, constraints),
      [&](const LinearMap& x, const LinearMap& y) { return dual_product(c, side, x, y); }, c.counit,
      f);
  out.side = side;
  return out;
}

MapAlgebra make_map_algebra(ConstrainedMaps maps,
                            const std::function<LinearMap(const LinearMap&, const LinearMap&)>& product,
                            const LinearMap& unit, Field field) {
  MapAlgebra out;
  out.basis = std::move(maps.basis);
  out.coordinate_positions = std::move(maps.free_positions);
  const std::size_t n = out.basis.size();
  out.mult_table = LinearMap(n, n * n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.mult_table.set_column(i * n + j, out.coordinates(product(out.basis[i], out.basis[j])));
  out.unit = LinearMap::from_columns(n, {out.coordinates(unit)}, field);
  return out;
}

CheckResult check_associative_unital(const LinearMap& mult, const LinearMap& unit) {
  const std::size_t n = unit.rows();
  const Field f = unit.field();
  const LegMap m(mult, {n, n}, {n}), eta(unit, {}, {n});
  return first_failure({
      [&] {
        return check_identity(
            "associativity (fg)h=f(gh)", {n, n, n}, f,
            [&](const Tensor& x) { return x.on(0, m).on(0, m); },
            [&](const Tensor& x) { return x.on(1, m).on(0, m); });
      },
      [&] {
        return check_identity(
            "left unit 1f=f", {n}, f, [&](const Tensor& x) { return x.on(0, eta).on(0, m); },
            [&](const Tensor& x) { return x; });
      },
      [&] {
        return check_identity(
            "right unit f1=f", {n}, f, [&](const Tensor& x) { return x.on(1, eta).on(0, m); },
            [&](const Tensor& x) { return x; });
      },
  });
}

CheckResult check_map_algebra(const MapAlgebra& d) {
  return check_associative_unital(d.mult_table, d.unit);
}

CheckResult check_dual_algebra(const DualAlgebra& d) {
  return check_associative_unital(d.mult_table, d.unit)
      .within(std::string(to_string(d.side)) + " dual");
}

}  // namespace homalg
