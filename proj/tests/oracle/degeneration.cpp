#include "degeneration.hpp"

#include <functional>

#include "classical.hpp"
#include "homalg/doi_koppinen.hpp"
#include "homalg/examples.hpp"
#include "homalg/witnesses.hpp"

namespace oracle {

using namespace homalg;

namespace {

Algebra plain(const HomAlgebra& a) { return {a.mult(), a.unit()}; }
Coalgebra plain(const HomCoalgebra& c) { return {c.comult(), c.counit()}; }
Dimodule plain(const ModuleWitness& m) { return {*m.right_action, *m.right_coaction}; }

class Recorder {
 public:
  explicit Recorder(Tally& t) : t_(t) {}

  void operator()(const std::string& label, bool library, bool classical) {
    ++t_.compared;
    (library ? t_.passes : t_.failures)++;
    if (library != classical) t_.mismatches.push_back(label);
  }

 private:
  Tally& t_;
};

/// Every +1 mutation of m, passed to fn with its flat position.
void each_mutation(const LinearMap& m, const std::function<void(const LinearMap&, std::size_t)>& fn) {
  for (std::size_t i = 0; i < m.entries().size(); ++i) {
    LinearMap x = m;
    x.entries()[i] += m.field().one();
    fn(x, i);
  }
}

void hopf_checks(Recorder& rec, const std::string& name, const HomHopfAlgebra& h) {
  const HomAlgebra& a = h.algebra();
  const HomCoalgebra& c = h.coalgebra();
  const LinearMap& s = h.antipode();
  auto run = [&](const std::string& label, const HomAlgebra& a2, const HomCoalgebra& c2,
                 const LinearMap& s2) {
    rec(label + " algebra", check_hom_algebra(a2).passed(), algebra(plain(a2)));
    rec(label + " coalgebra", check_hom_coalgebra(c2).passed(), coalgebra(plain(c2)));
    const HomBialgebra b(a2, c2);
    rec(label + " bialgebra", check_hom_bialgebra(b).passed(), bialgebra(plain(a2), plain(c2)));
    // Anti-(co)multiplicativity of S is an axiom of the library checker and a
    // theorem classically, so the comparable verdict is the Hopf one.
    rec(label + " Hopf", check_hom_bialgebra(b).passed() && check_antipode(HomHopfAlgebra(b, s2)).passed(),
        bialgebra(plain(a2), plain(c2)) && antipode(plain(a2), plain(c2), s2));
  };
  run(name, a, c, s);
  each_mutation(a.mult(), [&](const LinearMap& x, std::size_t i) {
    run(name + " mult+1@" + std::to_string(i), HomAlgebra(x, a.unit(), a.alpha()), c, s);
  });
  each_mutation(a.unit(), [&](const LinearMap& x, std::size_t i) {
    run(name + " unit+1@" + std::to_string(i), HomAlgebra(a.mult(), x, a.alpha()), c, s);
  });
  each_mutation(c.comult(), [&](const LinearMap& x, std::size_t i) {
    run(name + " comult+1@" + std::to_string(i), a, HomCoalgebra(x, c.counit(), c.gamma()), s);
  });
  each_mutation(c.counit(), [&](const LinearMap& x, std::size_t i) {
    run(name + " counit+1@" + std::to_string(i), a, HomCoalgebra(c.comult(), x, c.gamma()), s);
  });
  each_mutation(s, [&](const LinearMap& x, std::size_t i) {
    run(name + " antipode+1@" + std::to_string(i), a, c, x);
  });
}

void entwining_checks(Recorder& rec, const std::string& name, const EntwiningStructure& e) {
  rec(name + " entwining", check_entwining(e).passed(), entwining(plain(e.algebra), plain(e.coalgebra), e.psi));
  each_mutation(e.psi, [&](const LinearMap& x, std::size_t i) {
    const EntwiningStructure m{e.algebra, e.coalgebra, x};
    rec(name + " ψ+1@" + std::to_string(i), check_entwining(m).passed(),
        entwining(plain(e.algebra), plain(e.coalgebra), x));
  });
}

std::vector<ModuleWitness> small_family(const EntwiningStructure& e, std::vector<ModuleWitness> bases,
                                        std::uint64_t seed) {
  if (e.algebra.dim() * e.coalgebra.dim() <= 4) bases.push_back(regular_entwined_module(e));
  return witnesses::random_family(bases, seed, {.transported = 8, .scrambled = 4, .bumped = 8});
}

/// Generic and datum-specific module verdicts on a witness family.
void module_checks(Recorder& rec, const std::string& name, const EntwiningStructure& e,
                   const std::vector<ModuleWitness>& family,
                   const std::function<bool(const ModuleWitness&)>& specific_library,
                   const std::function<bool(const Dimodule&)>& specific_classical) {
  const Algebra a = plain(e.algebra);
  const Coalgebra c = plain(e.coalgebra);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string label = name + " witness " + std::to_string(i);
    const Dimodule d = plain(family[i]);
    rec(label + " entwined", check_entwined_module(e, family[i]).passed(), entwined_module(a, c, e.psi, d));
    rec(label + " specific", specific_library(family[i]), specific_classical(d));
  }
}

std::vector<ModuleWitness> hopf_bases(const HomBialgebra& h) {
  return {witnesses::trivial(h), witnesses::regular(h), witnesses::regular_action_trivial_coaction(h),
          witnesses::trivial_action_regular_coaction(h)};
}

}  // namespace

Tally classical_degeneration(std::uint64_t seed) {
  Tally tally;
  Recorder rec(tally);
  const HomHopfAlgebra z2 = examples::cyclic_group_algebra(2);
  const HomHopfAlgebra z3 = examples::cyclic_group_algebra(3);
  const HomHopfAlgebra h4 = examples::sweedler_h4();

  hopf_checks(rec, "k[Z/2]", z2);
  hopf_checks(rec, "k[Z/3]", z3);
  hopf_checks(rec, "H4", h4);

  // Doi-Koppinen: H4 over itself.
  {
    const DoiKoppinenDatum d = dual_relative_datum(h4.bialgebra(), h4.coalgebra(), h4.algebra().mult());
    const Algebra b = plain(h4.algebra());
    const Coalgebra bc = plain(h4.coalgebra());
    rec("H4 comodule algebra", check_comodule_algebra(d.bialgebra, d.algebra, d.coaction).passed(),
        comodule_algebra(b, bc, b, d.coaction));
    rec("H4 module coalgebra", check_module_coalgebra(d.bialgebra, d.coalgebra, d.action).passed(),
        module_coalgebra(b, bc, bc, d.action));
    each_mutation(d.coaction, [&](const LinearMap& x, std::size_t i) {
      rec("H4 coaction+1@" + std::to_string(i), check_comodule_algebra(d.bialgebra, d.algebra, x).passed(),
          comodule_algebra(b, bc, b, x));
    });
    each_mutation(d.action, [&](const LinearMap& x, std::size_t i) {
      rec("H4 action+1@" + std::to_string(i), check_module_coalgebra(d.bialgebra, d.coalgebra, x).passed(),
          module_coalgebra(b, bc, bc, x));
    });
    const EntwiningStructure e = entwining_from_dk(d);
    entwining_checks(rec, "DK H4", e);
    module_checks(
        rec, "DK H4", e, small_family(e, hopf_bases(h4.bialgebra()), seed),
        [&](const ModuleWitness& m) { return check_dk_module(d, m).passed(); },
        [&](const Dimodule& m) { return dk_module(b, bc, d.coaction, d.action, 4, m); });
  }

  // Yetter-Drinfeld for (id, id) on k[Z/2] and H4, and (id, S⁻²) on H4.
  for (const auto& [name, hopf, anti] : std::vector<std::tuple<std::string, HomHopfAlgebra, bool>>{
           {"YD k[Z/2]", z2, false}, {"YD H4", h4, false}, {"anti-YD H4", h4, true}}) {
    const LinearMap id = LinearMap::identity(hopf.dim(), hopf.field());
    const HopfAutomorphismPair p{hopf, id, anti ? antipode_squared_inverse(hopf) : id};
    const EntwiningStructure e = yetter_drinfeld_entwining(p);
    entwining_checks(rec, name, e);
    const Algebra a = plain(hopf.algebra());
    const Coalgebra c = plain(hopf.coalgebra());
    module_checks(
        rec, name, e, small_family(e, hopf_bases(hopf.bialgebra()), seed + 1),
        [&](const ModuleWitness& m) { return check_yd_module(p, m).passed(); },
        [&](const Dimodule& m) { return yd_module(a, c, hopf.antipode(), p.phi, p.varphi, m); });
  }

  // Long dimodules on k[Z/2] and H4.
  for (const auto& [name, hopf] :
       std::vector<std::pair<std::string, HomHopfAlgebra>>{{"Long k[Z/2]", z2}, {"Long H4", h4}}) {
    const EntwiningStructure e = long_entwining(hopf.bialgebra());
    entwining_checks(rec, name, e);
    const Algebra a = plain(hopf.algebra());
    const Coalgebra c = plain(hopf.coalgebra());
    module_checks(
        rec, name, e, small_family(e, hopf_bases(hopf.bialgebra()), seed + 2),
        [&](const ModuleWitness& m) { return check_long_module(hopf.bialgebra(), m).passed(); },
        [&](const Dimodule& m) { return long_module(a, c, m); });
  }

  // Alternative Doi-Koppinen on k[Z/2] with the graded function coalgebra.
  {
    const AlternativeDKDatum d{z2.bialgebra(), z2.algebra(), examples::sign_action_z2(),
                               examples::cyclic_function_coalgebra(2), examples::degree_coaction(2)};
    const Algebra b = plain(z2.algebra());
    const Coalgebra bc = plain(z2.coalgebra());
    const Coalgebra c = plain(d.coalgebra);
    rec("alt k[Z/2] module algebra", check_module_algebra(d.bialgebra, d.algebra, d.action).passed(),
        module_algebra(b, bc, b, d.action));
    rec("alt k[Z/2] comodule coalgebra",
        check_comodule_coalgebra(d.bialgebra, d.coalgebra, d.coaction).passed(),
        comodule_coalgebra(b, bc, c, d.coaction));
    each_mutation(d.action, [&](const LinearMap& x, std::size_t i) {
      rec("alt action+1@" + std::to_string(i), check_module_algebra(d.bialgebra, d.algebra, x).passed(),
          module_algebra(b, bc, b, x));
    });
    each_mutation(d.coaction, [&](const LinearMap& x, std::size_t i) {
      rec("alt coaction+1@" + std::to_string(i),
          check_comodule_coalgebra(d.bialgebra, d.coalgebra, x).passed(), comodule_coalgebra(b, bc, c, x));
    });
    const EntwiningStructure e = entwining_from_alt_dk(d);
    entwining_checks(rec, "alt DK k[Z/2]", e);
    module_checks(
        rec, "alt DK k[Z/2]", e, small_family(e, {}, seed + 3),
        [&](const ModuleWitness& m) { return check_alt_dk_module(d, m).passed(); },
        [&](const Dimodule& m) { return alt_dk_module(b, c, d.action, d.coaction, 2, m); });
  }

  // Flip on k[Z/3].
  {
    const EntwiningStructure e = flip_entwining(z3.algebra(), z3.coalgebra());
    entwining_checks(rec, "flip k[Z/3]", e);
  }
  return tally;
}

}  // namespace oracle
