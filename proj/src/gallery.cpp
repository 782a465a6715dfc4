#include "homalg/gallery.hpp"

#include <functional>
#include <map>

#include "homalg/errors.hpp"
#include "homalg/examples.hpp"
#include "homalg/witnesses.hpp"

namespace homalg {

namespace {

using Condition = std::function<bool(const ModuleWitness&)>;

/// One-dimensional witnesses of a gallery Hopf algebra whose basis starts
/// with 1 and a grouplike g of order two that generates the grouplikes:
/// g acts by ±1, the other basis elements by 0, and m coacts as m⊗1 or m⊗g.
std::vector<ModuleWitness> sign_characters(const HomBialgebra& h) {
  const Field f = h.field();
  std::vector<ModuleWitness> out;
  for (const int sign : {1, -1})
    for (const std::size_t grouplike : {0, 1}) {
      std::vector<Scalar> act(h.dim(), f.zero()), coact(h.dim(), f.zero());
      act[0] = f.one();
      act[1] = f.from_int(sign);
      coact[grouplike] = f.one();
      ModuleWitness m(LinearMap::identity(1, f));
      m.right_action = LinearMap::from_entries(1, h.dim(), std::move(act), f);
      m.right_coaction = LinearMap::from_entries(h.dim(), 1, std::move(coact), f);
      out.push_back(std::move(m));
    }
  return out;
}

/// Candidate witnesses for an entwining of a bialgebra with itself or of
/// small dimension.
std::vector<ModuleWitness> candidates(const EntwiningStructure& e, const HomBialgebra* h) {
  std::vector<ModuleWitness> out;
  if (h) {
    out.push_back(witnesses::trivial(*h));
    out.push_back(witnesses::regular(*h));
    out.push_back(witnesses::regular_action_trivial_coaction(*h));
    out.push_back(witnesses::trivial_action_regular_coaction(*h));
    for (auto& m : sign_characters(*h)) out.push_back(std::move(m));
  }
  if (e.algebra.dim() * e.coalgebra.dim() <= 4) out.push_back(regular_entwined_module(e));
  return out;
}

/// Appends up to `limit` candidates satisfying `ok`, named prefix_1, prefix_2, ...
void add_witnesses(StructureFile& f, const std::string& prefix, const std::string& over,
                   const std::vector<ModuleWitness>& pool, const Condition& ok, std::size_t limit = 2) {
  std::size_t added = 0;
  for (const auto& m : pool) {
    if (added == limit) break;
    if (!ok(m)) continue;
    f.put(witness_object(prefix + "_" + std::to_string(++added), m, over));
  }
  if (added == 0) throw PreconditionFailed("no valid witness for " + over);
}

StructureFile hopf_file(const std::string& name, const HomHopfAlgebra& h) {
  StructureFile f;
  f.field = h.field();
  f.put(hopf_object(name, h));
  const HomBialgebra& b = h.bialgebra();
  f.put(witness_object("regular", witnesses::regular(b), name));
  ModuleWitness trivial = witnesses::trivial(b);
  trivial.right_coaction.reset();
  f.put(witness_object("trivial_module", trivial, name));
  return f;
}

StructureFile entwining_file(const std::string& hopf_name, const HomHopfAlgebra& h,
                             const EntwiningStructure& e, const std::string& source = {}) {
  StructureFile f;
  f.field = h.field();
  f.put(hopf_object(hopf_name, h));
  f.put(entwining_object("psi", e, hopf_name, hopf_name, source));
  add_witnesses(f, "module", "psi", candidates(e, &h.bialgebra()),
                [&](const ModuleWitness& m) { return check_entwined_module(e, m).passed(); });
  return f;
}

StructureFile flip_z2() {
  const HomHopfAlgebra h = examples::cyclic_group_algebra(2);
  return entwining_file("kZ2", h, flip_entwining(h.algebra(), h.coalgebra()));
}

StructureFile long_z2() {
  const HomHopfAlgebra h = examples::cyclic_group_algebra(2);
  return entwining_file("kZ2", h, long_entwining(h.bialgebra()), "kZ2");
}

StructureFile dk_self_h4() {
  const HomHopfAlgebra h = examples::twisted_h4();
  const DoiKoppinenDatum d = dual_relative_datum(h.bialgebra(), h.coalgebra(), h.algebra().mult());
  const EntwiningStructure e = entwining_from_dk(d);
  StructureFile f;
  f.field = h.field();
  f.put(hopf_object("H4", h));
  f.put(dk_datum_object("datum", d, "H4", "H4", "H4"));
  f.put(entwining_object("psi", e, "H4", "H4", "datum"));
  add_witnesses(f, "dk_module", "datum", candidates(e, &h.bialgebra()),
                [&](const ModuleWitness& m) { return check_dk_module(d, m).passed(); });
  return f;
}

StructureFile yd_file(const HomHopfAlgebra& h, const std::string& hopf_name, bool anti) {
  const LinearMap id = LinearMap::identity(h.dim(), h.field());
  const HopfAutomorphismPair p{h, id, anti ? antipode_squared_inverse(h) : id};
  const EntwiningStructure e = yetter_drinfeld_entwining(p);
  StructureFile f;
  f.field = h.field();
  f.put(hopf_object(hopf_name, h));
  f.put(automorphism_pair_object("pair", p, hopf_name));
  f.put(entwining_object("psi", e, hopf_name, hopf_name, "pair"));
  add_witnesses(f, "yd_module", "pair", candidates(e, &h.bialgebra()),
                [&](const ModuleWitness& m) { return check_yd_module(p, m).passed(); });
  return f;
}

StructureFile sweedler_coring_z2_over_k() {
  const HomHopfAlgebra h = examples::cyclic_group_algebra(2);
  const HomAlgebra k = examples::ground_hopf(h.field()).algebra();
  const HomCoring c = sweedler_coring({k, h.algebra(), h.algebra().unit()});
  StructureFile f;
  f.field = h.field();
  f.put(algebra_object("k", k));
  f.put(algebra_object("kZ2", h.algebra()));
  f.put(coring_object("sweedler", c, "kZ2"));
  ModuleWitness self = c.bimodule;
  self.left_action.reset();
  self.right_coaction = c.comult_lift;
  f.put(witness_object("comodule", self, "sweedler"));
  return f;
}

StructureFile alt_dk_z2() {
  const HomHopfAlgebra h = examples::cyclic_group_algebra(2);
  const AlternativeDKDatum d{h.bialgebra(), h.algebra(), examples::sign_action_z2(h.field()),
                             examples::cyclic_function_coalgebra(2, h.field()),
                             examples::degree_coaction(2, h.field())};
  const EntwiningStructure e = entwining_from_alt_dk(d);
  StructureFile f;
  f.field = h.field();
  f.put(hopf_object("kZ2", h));
  f.put(coalgebra_object("functions", d.coalgebra));
  f.put(alt_dk_datum_object("datum", d, "kZ2", "kZ2", "functions"));
  f.put(entwining_object("psi", e, "kZ2", "functions", "datum"));
  add_witnesses(f, "alt_module", "datum", candidates(e, nullptr),
                [&](const ModuleWitness& m) { return check_alt_dk_module(d, m).passed(); });
  return f;
}

const std::vector<std::pair<std::string, std::function<StructureFile()>>>& builders() {
  static const std::vector<std::pair<std::string, std::function<StructureFile()>>> list = {
      {"group_z2", [] { return hopf_file("kZ2", examples::cyclic_group_algebra(2)); }},
      {"group_z3_twist", [] { return hopf_file("kZ3", examples::twisted_z3()); }},
      {"h4_twisted", [] { return hopf_file("H4", examples::twisted_h4()); }},
      {"flip_entwining_z2", flip_z2},
      {"dk_self_h4", dk_self_h4},
      {"yd_z2_id", [] { return yd_file(examples::cyclic_group_algebra(2), "kZ2", false); }},
      {"yd_h4_antipode_sq_inv", [] { return yd_file(examples::twisted_h4(), "H4", true); }},
      {"long_z2", long_z2},
      {"sweedler_coring_z2_over_k", sweedler_coring_z2_over_k},
      {"alt_dk_z2", alt_dk_z2},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : builders()) out.push_back(name);
    return out;
  }();
  return names;
}

StructureFile build_example(const std::string& name) {
  for (const auto& [n, fn] : builders())
    if (n == name) return fn();
  throw UnknownExample(name);
}

}  // namespace homalg
