// Acceptance run: one PASS/FAIL line per criterion with its wall time.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "homalg/cli.hpp"
#include "homalg/errors.hpp"
#include "homalg/examples.hpp"
#include "homalg/gallery.hpp"
#include "homalg/verify.hpp"
#include "homalg/witnesses.hpp"
#include "oracle/classical.hpp"
#include "oracle/degeneration.hpp"
#include "support/mutation.hpp"

using namespace homalg;
namespace fs = std::filesystem;

namespace {

/// Accumulates the first problem found by a criterion.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && problem_.empty()) problem_ = what;
  }
  bool ok() const { return problem_.empty(); }
  const std::string& problem() const { return problem_; }
  std::ostringstream note;

 private:
  std::string problem_;
};

struct Criterion {
  int number;
  double limit_seconds;
  std::function<void(Verdict&)> run;
};

struct NamedEntwining {
  std::string label;
  EntwiningStructure e;
  std::vector<ModuleWitness> witnesses;  // gallery witnesses that are entwined modules
};

std::vector<NamedEntwining> gallery_entwinings() {
  std::vector<NamedEntwining> out;
  for (const auto& name : gallery_names()) {
    const StructureFile f = build_example(name);
    for (const auto& o : f.objects) {
      if (o.kind != ObjectKind::Entwining) continue;
      NamedEntwining n{name + ":" + o.name, entwining_of(f, o.name), {}};
      for (const auto& w : f.objects)
        if (w.kind == ObjectKind::ModuleWitness) {
          const ModuleWitness m = witness_of(f, w.name);
          if (m.right_action && m.right_coaction && check_entwined_module(n.e, m)) n.witnesses.push_back(m);
        }
      out.push_back(std::move(n));
    }
  }
  return out;
}

HopfAutomorphismPair identity_pair(const HomHopfAlgebra& h) {
  const LinearMap id = LinearMap::identity(h.dim(), h.field());
  return {h, id, id};
}

HopfAutomorphismPair anti_pair(const HomHopfAlgebra& h) {
  return {h, LinearMap::identity(h.dim(), h.field()), antipode_squared_inverse(h)};
}

AlternativeDKDatum alt_dk_z2() {
  const HomHopfAlgebra h = examples::cyclic_group_algebra(2);
  return {h.bialgebra(), h.algebra(), examples::sign_action_z2(), examples::cyclic_function_coalgebra(2),
          examples::degree_coaction(2)};
}

std::vector<ModuleWitness> hopf_bases(const HomBialgebra& h) {
  return {witnesses::trivial(h), witnesses::regular(h), witnesses::regular_action_trivial_coaction(h),
          witnesses::trivial_action_regular_coaction(h)};
}

LinearMap right_action_of(const EntwiningStructure& e) { return *coring_from_entwining(e).bimodule.right_action; }

// 1. Associated coring and round trip.
void coring_round_trip(Verdict& v) {
  const auto all = gallery_entwinings();
  v.require(all.size() >= 4, "fewer than four gallery entwinings");
  for (const auto& n : all) {
    const std::size_t da = n.e.algebra.dim(), dc = n.e.coalgebra.dim();
    v.require(da >= 2 && da <= 4 && dc >= 2 && dc <= 4, n.label + " outside dimensions 2 to 4");
    const HomCoring c = coring_from_entwining(n.e);
    v.require(check_coring(c).passed(), n.label + " associated coring fails");
    v.require(entwining_from_coring(c, n.e.algebra, n.e.coalgebra).psi == n.e.psi, n.label + " round trip");
  }
  v.note << all.size() << " entwinings";
}

// 2. Entwined modules and comodules over the associated coring.
void module_translation(Verdict& v) {
  std::size_t total = 0, failures = 0;
  const auto all = gallery_entwinings();
  for (const auto& n : all) {
    v.require(!n.witnesses.empty(), n.label + " has no gallery witness");
    if (n.witnesses.empty()) continue;
    const HomCoring c = coring_from_entwining(n.e);
    const auto family =
        witnesses::random_family(n.witnesses, 2, {.transported = 6, .scrambled = 3, .bumped = 4});
    std::size_t fails_here = 0;
    for (const auto& m : family) {
      const bool entwined = check_entwined_module(n.e, m).passed();
      const ModuleWitness w = comodule_from_entwined(n.e, m);
      v.require(check_comodule_over_coring(c, w).passed() == entwined, n.label + " verdicts differ");
      if (entwined)
        v.require(*entwined_from_comodule(n.e, w).right_coaction == *m.right_coaction,
                  n.label + " translation is not a bijection");
      else
        ++fails_here;
    }
    v.require(family.size() >= 10, n.label + " has fewer than ten witnesses");
    v.require(fails_here >= 3, n.label + " has fewer than three failing witnesses");
    total += family.size();
    failures += fails_here;
  }
  v.note << total << " witnesses on " << all.size() << " entwinings, " << failures << " failing";
}

// 3. Koppinen smash.
void koppinen(Verdict& v) {
  const auto all = gallery_entwinings();
  for (const auto& n : all) {
    const KoppinenAlgebra k = koppinen_smash(n.e);
    v.require(check_map_algebra(k).passed(), n.label + " smash not associative and unital");
    v.require(check_koppinen_anti_isomorphism(n.e).passed(), n.label + " anti-isomorphism fails");
  }
  // Flip entwining: the table against a loop-coded convolution.
  const HomHopfAlgebra z2 = examples::cyclic_group_algebra(2);
  const EntwiningStructure flip = flip_entwining(z2.algebra(), z2.coalgebra());
  const KoppinenAlgebra k = koppinen_smash(flip);
  const oracle::Algebra a{flip.algebra.mult(), flip.algebra.unit()};
  const oracle::Coalgebra c{flip.coalgebra.comult(), flip.coalgebra.counit()};
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = 0; j < k.dim(); ++j) {
      const LinearMap expected = oracle::convolution(a, c, flip.psi, k.basis[i], k.basis[j]);
      v.require(k.element(k.mult_table.column(i * k.dim() + j)) == expected, "flip table differs from oracle");
    }
  v.note << all.size() << " entwinings, flip table " << k.dim() << "x" << k.dim() << " matches oracle";
}

// 4. Base ring extension and the Sweedler coring.
void base_extension(Verdict& v) {
  const HomAlgebra k = examples::ground_hopf().algebra();
  const HomAlgebra z2 = examples::cyclic_group_algebra(2).algebra();
  const HomAlgebra z3 = examples::twisted_z3().algebra();
  const HomAlgebra h4 = examples::twisted_h4().algebra();
  const std::vector<AlgebraMorphism> pairs = {
      {k, z2, z2.unit()},
      {k, z3, z3.unit()},
      {k, h4, h4.unit()},
      {z2, z2, LinearMap::identity(2, z2.field())},
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string label = "pair " + std::to_string(i);
    v.require(check_algebra_morphism(pairs[i]).passed(), label + " is not a morphism");
    v.require(check_coring(sweedler_coring(pairs[i])).passed(), label + " Sweedler coring fails");
    v.require(check_coring(base_ring_extension(trivial_coring(pairs[i].source), pairs[i])).passed(),
              label + " base ring extension fails");
    v.require(check_sweedler_identification(pairs[i]).passed(), label + " identification fails");
  }
  v.note << pairs.size() << " algebra maps";
}

// 5. The three dual algebras.
void dual_rings(Verdict& v) {
  const HomAlgebra k = examples::ground_hopf().algebra();
  const HomHopfAlgebra z2 = examples::cyclic_group_algebra(2);
  const HomHopfAlgebra h4 = examples::twisted_h4();
  const std::vector<std::pair<std::string, HomCoring>> corings = {
      {"Sweedler k to kZ2", sweedler_coring({k, z2.algebra(), z2.algebra().unit()})},
      {"flip kZ2", coring_from_entwining(flip_entwining(z2.algebra(), z2.coalgebra()))},
      {"Long kZ2", coring_from_entwining(long_entwining(z2.bialgebra()))},
      {"trivial H4", trivial_coring(h4.algebra())},
  };
  for (const auto& [label, c] : corings)
    for (const DualSide side : {DualSide::Left, DualSide::Right, DualSide::TwoSided})
      v.require(check_dual_algebra(dual_algebra(c, side)).passed(), label + " " + to_string(side) + " dual fails");
  v.note << corings.size() << " corings";
}

// 6. Data, their entwinings and module verdicts.
void data_agreement(Verdict& v) {
  const HomHopfAlgebra h4 = examples::twisted_h4();
  const HomHopfAlgebra z3 = examples::twisted_z3();
  const HomHopfAlgebra z2 = examples::cyclic_group_algebra(2);
  const std::vector<std::pair<std::string, DoiKoppinenDatum>> data = {
      {"dual relative H4", dual_relative_datum(h4.bialgebra(), h4.coalgebra(), h4.algebra().mult())},
      {"relative Z3", relative_datum(z3.bialgebra(), z3.algebra(), z3.coalgebra().comult())},
      {"Long Z2", long_datum(z2.bialgebra())},
  };
  std::size_t compared = 0;
  std::uint64_t seed = 60;
  auto compare = [&](const std::string& label, const EntwiningStructure& e, std::vector<ModuleWitness> bases,
                     const std::function<bool(const ModuleWitness&)>& specific) {
    bases.insert(bases.begin(), regular_entwined_module(e));
    const auto family = witnesses::random_family(bases, ++seed, {.transported = 14, .scrambled = 6, .bumped = 4});
    std::size_t random = 0, passes = 0, fails = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const bool generic = check_entwined_module(e, family[i]).passed();
      v.require(specific(family[i]) == generic, label + " verdicts differ on witness " + std::to_string(i));
      (generic ? passes : fails)++;
      if (i >= bases.size()) ++random;
    }
    v.require(random >= 20, label + " has fewer than 20 random witnesses");
    v.require(passes > 0 && fails > 0, label + " lacks passing or failing witnesses");
    compared += family.size();
  };
  for (const auto& [label, d] : data) {
    v.require(check_dk_datum(d).passed(), label + " datum fails");
    const EntwiningStructure e = entwining_from_dk(d);
    v.require(check_entwining(e).passed(), label + " entwining fails");
    compare(label, e, hopf_bases(d.bialgebra),
            [&d](const ModuleWitness& m) { return check_dk_module(d, m).passed(); });
  }
  const AlternativeDKDatum alt = alt_dk_z2();
  v.require(check_alt_dk_datum(alt).passed(), "alternative datum fails");
  const EntwiningStructure e = entwining_from_alt_dk(alt);
  v.require(check_entwining(e).passed(), "alternative entwining fails");
  compare("alternative Z2", e, {}, [&alt](const ModuleWitness& m) { return check_alt_dk_module(alt, m).passed(); });
  v.note << data.size() + 1 << " data, " << compared << " witnesses compared";
}

// 7. The two Yetter-Drinfeld conditions.
void yd_conditions(Verdict& v) {
  const HomHopfAlgebra h = examples::twisted_h4();
  std::size_t total_valid = 0, total_failing = 0, rejected = 0;
  for (const auto& [label, p] : std::vector<std::pair<std::string, HopfAutomorphismPair>>{
           {"(id, id)", identity_pair(h)}, {"(id, S^-2)", anti_pair(h)}}) {
    const EntwiningStructure e = yetter_drinfeld_entwining(p);
    std::vector<ModuleWitness> bases = {regular_entwined_module(e), witnesses::trivial(h.bialgebra())};
    const auto family = witnesses::random_family(bases, 70, {.transported = 24, .scrambled = 8, .bumped = 4});
    std::size_t valid = 0, failing = 0;
    for (const auto& m : family) {
      if (!check_right_module(e.algebra, m) || !check_right_comodule(e.coalgebra, m)) {
        bool thrown = false;
        try {
          check_yd_equivalent_condition(p, m);
        } catch (const PreconditionFailed&) {
          thrown = true;
        }
        v.require(thrown, label + " accepted an invalid witness");
        ++rejected;
        continue;
      }
      const YdConditions c = check_yd_equivalent_condition(p, m);
      v.require(c.direct.passed() == c.equivalent.passed(), label + " conditions differ");
      v.require(c.direct.passed() == check_entwined_module(e, m).passed(), label + " differs from entwined module");
      ++valid;
      if (!c.direct) ++failing;
    }
    v.require(valid >= 20, label + " has fewer than 20 valid witnesses");
    v.require(failing >= 3, label + " has fewer than three failing witnesses");
    total_valid += valid;
    total_failing += failing;
  }
  v.note << total_valid << " valid witnesses, " << total_failing << " failing both, " << rejected
         << " rejected as invalid";
}

// 8. Yetter-Drinfeld delegation and specialized right actions.
void specializations(Verdict& v) {
  const HomHopfAlgebra h4 = examples::twisted_h4();
  const HomHopfAlgebra z2 = examples::cyclic_group_algebra(2);
  for (const auto& p : {identity_pair(z2), identity_pair(h4), anti_pair(h4)}) {
    const EntwiningStructure e = yetter_drinfeld_entwining(p);
    v.require(e.psi == entwining_from_dk(yd_datum(p)).psi, "direct psi differs from the datum");
    v.require(yd_coring_right_action(p) == right_action_of(e), "Yetter-Drinfeld right action");
  }
  const DoiKoppinenDatum rel = relative_datum(h4.bialgebra(), h4.algebra(), h4.coalgebra().comult());
  const DoiKoppinenDatum dual = dual_relative_datum(h4.bialgebra(), h4.coalgebra(), h4.algebra().mult());
  v.require(dk_coring_right_action(rel) == right_action_of(relative_entwining(h4.bialgebra(), h4.algebra(),
                                                                             h4.coalgebra().comult())),
            "relative right action");
  v.require(dk_coring_right_action(dual) == right_action_of(dual_relative_entwining(h4.bialgebra(), h4.coalgebra(),
                                                                                    h4.algebra().mult())),
            "dual relative right action");
  for (const auto& h : {z2, h4})
    v.require(long_coring_right_action(h.bialgebra()) == right_action_of(long_entwining(h.bialgebra())),
              "Long right action");
  v.require(alt_dk_coring_right_action(alt_dk_z2()) == right_action_of(entwining_from_alt_dk(alt_dk_z2())),
            "alternative right action");
  v.note << "3 parameter choices, 5 right actions";
}

// 9. Identity automorphisms against the classical checkers.
void classical(Verdict& v) {
  const oracle::Tally t = oracle::classical_degeneration(2024);
  v.require(t.mismatches.empty(), t.mismatches.empty() ? "" : "mismatch at " + t.mismatches.front());
  v.require(t.passes > 0 && t.failures > 0, "no contrast between passes and failures");
  v.note << t.compared << " verdicts compared, " << t.passes << " pass, " << t.failures << " fail, "
         << t.mismatches.size() << " mismatches";
}

int spawn(const std::vector<std::string>& args) {
  std::string cmd = HOMCHECK_PATH;
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 10. Mutation suite and exit codes.
void mutations(Verdict& v) {
  const fs::path dir = fs::temp_directory_path() / "homcheck_acceptance";
  fs::create_directories(dir);
  std::size_t total = 0, validation = 0;
  for (const auto& name : gallery_names()) {
    const StructureFile f = build_example(name);
    const support::MutationOutcome m = support::mutation_suite(f);
    v.require(m.undetected.empty(), name + " mutation undetected: " + (m.undetected.empty() ? "" : m.undetected[0]));
    v.require(m.unexpected.empty(), name + " mutation gave an unexpected exit code");
    total += m.total;
    validation += m.validation_errors;

    // The tool itself on the clean file and on one mutated file.
    const fs::path clean = dir / (name + ".json");
    std::ofstream(clean) << serialize(f);
    v.require(spawn({"verify", clean.string()}) == kExitPass, name + " does not verify with exit 0");
    StructureFile bad = f;
    bad.objects.front().maps.begin()->second.matrix.entries().front() += f.field.one();
    const fs::path mutated = dir / (name + ".mutated.json");
    std::ofstream(mutated) << serialize(bad);
    const int code = spawn({"verify", mutated.string()});
    v.require(code == kExitCheckFailure || code == kExitValidation, name + " mutated file exit " + std::to_string(code));
  }
  const fs::path broken = dir / "broken.json";
  std::ofstream(broken) << "{\"format_version\": 1,";
  v.require(spawn({"verify", broken.string()}) == kExitParse, "malformed file does not exit 2");
  StructureFile singular = build_example("group_z2");
  for (auto& x : singular.objects.front().maps.at("alpha").matrix.entries()) x = singular.field.zero();
  const fs::path s = dir / "singular.json";
  std::ofstream(s) << serialize(singular);
  v.require(spawn({"verify", s.string()}) == kExitValidation, "singular automorphism does not exit 3");
  v.note << total << " mutations over " << gallery_names().size() << " files, " << validation
         << " caught on load; exit codes 0/2/3/4 confirmed";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, 5, coring_round_trip}, {2, 5, module_translation}, {3, 10, koppinen},
      {4, 5, base_extension},    {5, 5, dual_rings},         {6, 10, data_agreement},
      {7, 10, yd_conditions},    {8, 5, specializations},    {9, 5, classical},
      {10, 60, mutations},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = v.ok() && in_time;
    all = all && pass;
    std::printf("criterion %2d: %s  %6.2f s (limit %g s)  %s\n", c.number, pass ? "PASS" : "FAIL", seconds,
                c.limit_seconds,
                v.ok() ? (in_time ? v.note.str().c_str() : "over the time limit") : v.problem().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
