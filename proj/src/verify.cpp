#include "homalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "homalg/errors.hpp"
#include "json.hpp"

namespace homalg {

namespace {

struct CheckDef {
  std::string name;
  std::string prerequisite;  // empty when independent
  std::function<CheckResult()> run;
};

CheckResult all_of(std::initializer_list<std::pair<const char*, std::function<CheckResult()>>> parts) {
  for (const auto& [label, fn] : parts) {
    const CheckResult r = fn();
    if (!r.passed()) return r.within(label);
  }
  return CheckResult::pass();
}

CheckResult equal_maps(const std::string& identity, const LinearMap& lhs, const LinearMap& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return CheckResult::fail(identity + " (shape)");
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    const Vector l = lhs.column(j), r = rhs.column(j);
    if (l != r) return CheckResult::fail(Failure{identity, {j}, l, r});
  }
  return CheckResult::pass();
}

bool is_algebra_like(ObjectKind k) {
  return k == ObjectKind::Algebra || k == ObjectKind::Bialgebra || k == ObjectKind::Hopf;
}
bool is_coalgebra_like(ObjectKind k) {
  return k == ObjectKind::Coalgebra || k == ObjectKind::Bialgebra || k == ObjectKind::Hopf;
}

/// ψ induced by an entwining source: Long for a bialgebra, otherwise the
/// datum or Yetter-Drinfeld construction.
LinearMap induced_psi(const StructureFile& f, const std::string& source) {
  const StructureObject& s = f.get(source);
  switch (s.kind) {
    case ObjectKind::DkDatum:
      return entwining_from_dk(dk_datum_of(f, source)).psi;
    case ObjectKind::AltDkDatum:
      return entwining_from_alt_dk(alt_dk_datum_of(f, source)).psi;
    case ObjectKind::AutomorphismPair:
      return yetter_drinfeld_entwining(automorphism_pair_of(f, source)).psi;
    default:
      return long_entwining(bialgebra_of(f, source)).psi;
  }
}

std::vector<CheckDef> witness_checks(const StructureFile& f, const StructureObject& o) {
  std::vector<CheckDef> out;
  const StructureObject& over = f.get(o.refs.at("over"));
  const std::string on = over.name, name = o.name;
  auto m = [&f, name] { return witness_of(f, name); };
  auto has = [&](const char* key) { return o.maps.count(key) > 0; };
  if (is_algebra_like(over.kind)) {
    if (has("right_action"))
      out.push_back({"right-module", "", [&f, on, m] { return check_right_module(algebra_of(f, on), m()); }});
    if (has("left_action"))
      out.push_back({"left-module", "", [&f, on, m] { return check_left_module(algebra_of(f, on), m()); }});
  }
  if (is_coalgebra_like(over.kind)) {
    if (has("right_coaction"))
      out.push_back(
          {"right-comodule", "", [&f, on, m] { return check_right_comodule(coalgebra_of(f, on), m()); }});
    if (has("left_coaction"))
      out.push_back(
          {"left-comodule", "", [&f, on, m] { return check_left_comodule(coalgebra_of(f, on), m()); }});
  }
  if ((over.kind == ObjectKind::Bialgebra || over.kind == ObjectKind::Hopf) && has("right_action") &&
      has("right_coaction"))
    out.push_back({"relative-hopf-module", "", [&f, on, m] {
                     const HomBialgebra b = bialgebra_of(f, on);
                     return check_dk_module(relative_datum(b, b.algebra(), b.coalgebra().comult()), m());
                   }});
  switch (over.kind) {
    case ObjectKind::Entwining:
      out.push_back({"entwined-module", "", [&f, on, m] { return check_entwined_module(entwining_of(f, on), m()); }});
      out.push_back({"entwined-translation", "entwined-module", [&f, on, m] {
                       const EntwiningStructure e = entwining_of(f, on);
                       const ModuleWitness w = comodule_from_entwined(e, m());
                       return all_of({{"comodule over the associated coring",
                                       [&] { return check_comodule_over_coring(coring_from_entwining(e), w); }},
                                      {"translation back",
                                       [&] {
                                         return equal_maps("coaction recovered",
                                                           *entwined_from_comodule(e, w).right_coaction,
                                                           *m().right_coaction);
                                       }}});
                     }});
      break;
    case ObjectKind::Coring:
      out.push_back({"coring-comodule", "", [&f, on, m] { return check_comodule_over_coring(coring_of(f, on), m()); }});
      break;
    case ObjectKind::DkDatum:
      out.push_back({"dk-module", "", [&f, on, m] { return check_dk_module(dk_datum_of(f, on), m()); }});
      break;
    case ObjectKind::AltDkDatum:
      out.push_back({"alt-dk-module", "", [&f, on, m] { return check_alt_dk_module(alt_dk_datum_of(f, on), m()); }});
      break;
    case ObjectKind::AutomorphismPair:
      out.push_back({"yd-module", "", [&f, on, m] { return check_yd_module(automorphism_pair_of(f, on), m()); }});
      out.push_back({"yd-equivalence", "", [&f, on, m] {
                       const YdConditions c = check_yd_equivalent_condition(automorphism_pair_of(f, on), m());
                       if (c.direct.passed() != c.equivalent.passed())
                         return CheckResult::fail("the two Yetter-Drinfeld conditions disagree");
                       return c.direct.passed() ? CheckResult::pass() : c.direct;
                     }});
      break;
    default:
      break;
  }
  if (out.empty())
    out.push_back({"witness-structure", "", [] {
                     return CheckResult::fail("no action or coaction to check");
                   }});
  return out;
}

std::vector<CheckDef> object_checks(const StructureFile& f, const StructureObject& o) {
  const std::string n = o.name;
  std::vector<CheckDef> out;
  switch (o.kind) {
    case ObjectKind::Hopf:
    case ObjectKind::Bialgebra:
      out.push_back({"hom-algebra", "", [&f, n] { return check_hom_algebra(algebra_of(f, n)); }});
      out.push_back({"hom-coalgebra", "", [&f, n] { return check_hom_coalgebra(coalgebra_of(f, n)); }});
      out.push_back({"hom-bialgebra", "", [&f, n] { return check_hom_bialgebra(bialgebra_of(f, n)); }});
      if (o.kind == ObjectKind::Hopf)
        out.push_back({"antipode", "hom-bialgebra", [&f, n] { return check_antipode(hopf_of(f, n)); }});
      break;
    case ObjectKind::Algebra:
      out.push_back({"hom-algebra", "", [&f, n] { return check_hom_algebra(algebra_of(f, n)); }});
      break;
    case ObjectKind::Coalgebra:
      out.push_back({"hom-coalgebra", "", [&f, n] { return check_hom_coalgebra(coalgebra_of(f, n)); }});
      break;
    case ObjectKind::ModuleWitness:
      return witness_checks(f, o);
    case ObjectKind::Entwining:
      out.push_back({"entwining", "", [&f, n] { return check_entwining(entwining_of(f, n)); }});
      out.push_back({"associated-coring", "entwining",
                     [&f, n] { return check_coring(coring_from_entwining(entwining_of(f, n))); }});
      out.push_back({"coring-round-trip", "entwining", [&f, n] {
                       const EntwiningStructure e = entwining_of(f, n);
                       const EntwiningStructure back =
                           entwining_from_coring(coring_from_entwining(e), e.algebra, e.coalgebra);
                       return equal_maps("psi recovered", back.psi, e.psi);
                     }});
      if (o.refs.count("source"))
        out.push_back({"source-agreement", "", [&f, n] {
                         return equal_maps("psi induced by " + f.get(n).refs.at("source"),
                                           entwining_of(f, n).psi, induced_psi(f, f.get(n).refs.at("source")));
                       }});
      out.push_back({"koppinen-smash", "entwining",
                     [&f, n] { return check_map_algebra(koppinen_smash(entwining_of(f, n))); }});
      out.push_back({"koppinen-anti-isomorphism", "entwining",
                     [&f, n] { return check_koppinen_anti_isomorphism(entwining_of(f, n)); }});
      break;
    case ObjectKind::Coring:
      out.push_back({"coring", "", [&f, n] { return check_coring(coring_of(f, n)); }});
      for (const DualSide side : {DualSide::Left, DualSide::Right, DualSide::TwoSided})
        out.push_back({std::string("dual-algebra-") + to_string(side), "coring",
                       [&f, n, side] { return check_dual_algebra(dual_algebra(coring_of(f, n), side)); }});
      break;
    case ObjectKind::DkDatum:
      out.push_back({"dk-datum", "", [&f, n] { return check_dk_datum(dk_datum_of(f, n)); }});
      out.push_back({"dk-entwining", "dk-datum",
                     [&f, n] { return check_entwining(entwining_from_dk(dk_datum_of(f, n))); }});
      out.push_back({"dk-right-action", "dk-datum", [&f, n] {
                       const DoiKoppinenDatum d = dk_datum_of(f, n);
                       return equal_maps("specialized right action", dk_coring_right_action(d),
                                         *coring_from_entwining(entwining_from_dk(d)).bimodule.right_action);
                     }});
      break;
    case ObjectKind::AltDkDatum:
      out.push_back({"alt-dk-datum", "", [&f, n] { return check_alt_dk_datum(alt_dk_datum_of(f, n)); }});
      out.push_back({"alt-dk-entwining", "alt-dk-datum",
                     [&f, n] { return check_entwining(entwining_from_alt_dk(alt_dk_datum_of(f, n))); }});
      out.push_back({"alt-dk-right-action", "alt-dk-datum", [&f, n] {
                       const AlternativeDKDatum d = alt_dk_datum_of(f, n);
                       return equal_maps("specialized right action", alt_dk_coring_right_action(d),
                                         *coring_from_entwining(entwining_from_alt_dk(d)).bimodule.right_action);
                     }});
      break;
    case ObjectKind::AutomorphismPair:
      out.push_back({"automorphism-pair", "", [&f, n] { return check_automorphism_pair(automorphism_pair_of(f, n)); }});
      out.push_back({"yd-entwining", "automorphism-pair",
                     [&f, n] { return check_entwining(yetter_drinfeld_entwining(automorphism_pair_of(f, n))); }});
      out.push_back({"yd-delegation", "automorphism-pair", [&f, n] {
                       const HopfAutomorphismPair p = automorphism_pair_of(f, n);
                       return equal_maps("direct psi equals datum psi", yetter_drinfeld_entwining(p).psi,
                                         entwining_from_dk(yd_datum(p)).psi);
                     }});
      out.push_back({"yd-right-action", "automorphism-pair", [&f, n] {
                       const HopfAutomorphismPair p = automorphism_pair_of(f, n);
                       return equal_maps("specialized right action", yd_coring_right_action(p),
                                         *coring_from_entwining(yetter_drinfeld_entwining(p)).bimodule.right_action);
                     }});
      break;
  }
  return out;
}

std::vector<std::string> render(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

CheckRecord run_check(const std::string& file, const std::string& object, const CheckDef& def) {
  CheckRecord rec;
  rec.file = file;
  rec.object = object;
  rec.check = def.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    const CheckResult r = def.run();
    if (!r.passed()) {
      const Failure& fl = *r.failure();
      rec.status = CheckStatus::Fail;
      rec.identity = fl.identity;
      rec.indices = fl.indices;
      rec.lhs = render(fl.lhs);
      rec.rhs = render(fl.rhs);
    }
  } catch (const Error& e) {
    rec.status = CheckStatus::Fail;
    rec.message = e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

std::size_t Report::count(CheckStatus s) const {
  return std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; });
}

bool Report::ok() const { return count(CheckStatus::Pass) == records.size(); }

void Report::append(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::vector<std::string> applicable_checks(const StructureFile& f, const StructureObject& o) {
  std::vector<std::string> out;
  for (const auto& def : object_checks(f, o)) out.push_back(def.name);
  return out;
}

Report verify(const StructureFile& f, const VerifyOptions& options) {
  if (options.object && !f.find(*options.object))
    throw std::invalid_argument("no object named '" + *options.object + "'");
  Report report;
  bool check_found = false;
  for (const auto& o : f.objects) {
    if (options.object && o.name != *options.object) continue;
    std::map<std::string, CheckStatus> done;
    for (const auto& def : object_checks(f, o)) {
      if (options.check && def.name != *options.check) continue;
      check_found = true;
      CheckRecord rec;
      const auto pre = done.find(def.prerequisite);
      if (!options.check && !def.prerequisite.empty() && pre != done.end() &&
          pre->second != CheckStatus::Pass) {
        rec.file = options.file_label;
        rec.object = o.name;
        rec.check = def.name;
        rec.status = CheckStatus::Skipped;
        rec.message = "prerequisite " + def.prerequisite + " did not pass";
      } else {
        rec = run_check(options.file_label, o.name, def);
      }
      done[def.name] = rec.status;
      report.records.push_back(std::move(rec));
      if (options.fail_fast && report.records.back().status == CheckStatus::Fail) return report;
    }
  }
  if (options.check && !check_found)
    throw std::invalid_argument("check '" + *options.check + "' does not apply to the selected objects");
  return report;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    out << to_string(rec.status) << "  ";
    if (!rec.file.empty()) out << rec.file << ": ";
    out << rec.object << " " << rec.check;
    out << " (" << static_cast<long>(rec.seconds * 1000) << " ms)\n";
    if (rec.status == CheckStatus::Fail) {
      if (!rec.identity.empty()) out << "    violated: " << rec.identity << "\n";
      if (!rec.indices.empty()) {
        std::vector<std::string> idx;
        for (auto i : rec.indices) idx.push_back(std::to_string(i));
        out << "    at basis indices (" << join(idx, ", ") << ")\n";
      }
      if (!rec.lhs.empty() || !rec.rhs.empty()) {
        out << "    lhs = [" << join(rec.lhs, ", ") << "]\n";
        out << "    rhs = [" << join(rec.rhs, ", ") << "]\n";
      }
    }
    if (!rec.message.empty()) out << "    " << rec.message << "\n";
  }
  out << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
      << r.count(CheckStatus::Skipped) << " skipped\n";
  return out.str();
}

std::string render_json(const Report& r) {
  using ordered_json = nlohmann::ordered_json;
  ordered_json j;
  j["summary"] = {{"passed", r.count(CheckStatus::Pass)},
                  {"failed", r.count(CheckStatus::Fail)},
                  {"skipped", r.count(CheckStatus::Skipped)},
                  {"ok", r.ok()}};
  ordered_json records = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json x;
    if (!rec.file.empty()) x["file"] = rec.file;
    x["object"] = rec.object;
    x["check"] = rec.check;
    x["status"] = to_string(rec.status);
    x["seconds"] = rec.seconds;
    if (rec.status != CheckStatus::Pass) {
      ordered_json cx;
      if (!rec.identity.empty()) cx["identity"] = rec.identity;
      if (!rec.indices.empty()) cx["indices"] = rec.indices;
      if (!rec.lhs.empty() || !rec.rhs.empty()) {
        cx["lhs"] = rec.lhs;
        cx["rhs"] = rec.rhs;
      }
      if (!rec.message.empty()) cx["message"] = rec.message;
      x["counterexample"] = std::move(cx);
    }
    records.push_back(std::move(x));
  }
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

}  // namespace homalg
