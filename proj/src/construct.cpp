#include "homalg/construct.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

struct Context {
  const StructureFile& file;
  const ConstructArgs& args;
  std::set<std::string> used;

  /// The object named by args[key], or the only object whose kind satisfies `ok`.
  const StructureObject& pick(const std::string& key, bool (*ok)(ObjectKind), const char* what) {
    used.insert(key);
    const auto it = args.find(key);
    if (it != args.end()) {
      const StructureObject& o = file.get(it->second);
      if (!ok(o.kind)) throw ValidationError("'" + o.name + "' is not " + what);
      return o;
    }
    const StructureObject* found = nullptr;
    for (const auto& o : file.objects) {
      if (!ok(o.kind)) continue;
      if (found) throw ValidationError(std::string("several candidates for ") + key + "; pass --arg " + key + "=NAME");
      found = &o;
    }
    if (!found) throw ValidationError(std::string("no ") + what + " in the file");
    return *found;
  }

  std::string option(const std::string& key, const std::string& fallback) {
    used.insert(key);
    const auto it = args.find(key);
    return it == args.end() ? fallback : it->second;
  }
};

bool algebra_like(ObjectKind k) {
  return k == ObjectKind::Algebra || k == ObjectKind::Bialgebra || k == ObjectKind::Hopf;
}
bool coalgebra_like(ObjectKind k) {
  return k == ObjectKind::Coalgebra || k == ObjectKind::Bialgebra || k == ObjectKind::Hopf;
}
bool bialgebra_like(ObjectKind k) { return k == ObjectKind::Bialgebra || k == ObjectKind::Hopf; }
bool entwining(ObjectKind k) { return k == ObjectKind::Entwining; }
bool coring(ObjectKind k) { return k == ObjectKind::Coring; }
bool dk(ObjectKind k) { return k == ObjectKind::DkDatum; }
bool alt_dk(ObjectKind k) { return k == ObjectKind::AltDkDatum; }
bool pair(ObjectKind k) { return k == ObjectKind::AutomorphismPair; }

/// φ: source → target, either the unit map of a one-dimensional source or
/// the identity.
AlgebraMorphism along(Context& c, const HomAlgebra& source, const HomAlgebra& target) {
  const std::string kind = c.option("along", "unit");
  if (kind == "unit") {
    if (source.dim() != 1) throw ValidationError("along=unit needs a one-dimensional source algebra");
    return {source, target, target.unit()};
  }
  if (kind == "identity") {
    if (!(source.mult() == target.mult() && source.unit() == target.unit() && source.alpha() == target.alpha()))
      throw ValidationError("along=identity needs the same source and target algebra");
    return {source, target, LinearMap::identity(target.dim(), target.field())};
  }
  throw std::invalid_argument("along must be unit or identity");
}

StructureObject map_algebra_object(const std::string& name, const MapAlgebra& m, Field field) {
  return algebra_object(name, HomAlgebra(m.mult_table, m.unit, LinearMap::identity(m.dim(), field)));
}

DualSide parse_side(const std::string& s) {
  for (const DualSide side : {DualSide::Left, DualSide::Right, DualSide::TwoSided})
    if (s == to_string(side)) return side;
  throw std::invalid_argument("side must be left, right or two-sided");
}

using Builder = std::function<StructureObject(Context&, const std::string&)>;

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> list = {
      {"trivial_coring",
       [](Context& c, const std::string& name) {
         const StructureObject& a = c.pick("algebra", algebra_like, "an algebra");
         return coring_object(name, trivial_coring(algebra_of(c.file, a.name)), a.name);
       }},
      {"sweedler_coring",
       [](Context& c, const std::string& name) {
         const StructureObject& t = c.pick("target", algebra_like, "an algebra");
         const HomAlgebra target = algebra_of(c.file, t.name);
         const std::string kind = c.option("along", "unit");
         const HomAlgebra source =
             kind == "unit" ? HomAlgebra(LinearMap::identity(1, c.file.field), LinearMap::identity(1, c.file.field),
                                         LinearMap::identity(1, c.file.field))
                            : target;
         return coring_object(name, sweedler_coring(along(c, source, target)), t.name);
       }},
      {"base_ring_extension",
       [](Context& c, const std::string& name) {
         const StructureObject& co = c.pick("coring", coring, "a coring");
         const HomCoring cr = coring_of(c.file, co.name);
         const StructureObject& t = c.pick("target", algebra_like, "an algebra");
         return coring_object(name, base_ring_extension(cr, along(c, cr.base, algebra_of(c.file, t.name))),
                              t.name);
       }},
      {"coring_from_entwining",
       [](Context& c, const std::string& name) {
         const StructureObject& e = c.pick("entwining", entwining, "an entwining");
         return coring_object(name, coring_from_entwining(entwining_of(c.file, e.name)), e.refs.at("algebra"));
       }},
      {"entwining_from_coring",
       [](Context& c, const std::string& name) {
         const StructureObject& co = c.pick("coring", coring, "a coring");
         const std::string a = c.option("algebra", co.refs.at("base"));
         const StructureObject& cc = c.pick("coalgebra", coalgebra_like, "a coalgebra");
         const EntwiningStructure e = entwining_from_coring(coring_of(c.file, co.name), algebra_of(c.file, a),
                                                            coalgebra_of(c.file, cc.name));
         return entwining_object(name, e, a, cc.name);
       }},
      {"entwining_from_dk",
       [](Context& c, const std::string& name) {
         const StructureObject& d = c.pick("datum", dk, "a Doi-Koppinen datum");
         return entwining_object(name, entwining_from_dk(dk_datum_of(c.file, d.name)), d.refs.at("algebra"),
                                 d.refs.at("coalgebra"), d.name);
       }},
      {"yetter_drinfeld_entwining",
       [](Context& c, const std::string& name) {
         const StructureObject& p = c.pick("pair", pair, "an automorphism pair");
         const std::string h = p.refs.at("hopf");
         return entwining_object(name, yetter_drinfeld_entwining(automorphism_pair_of(c.file, p.name)), h, h, p.name);
       }},
      {"long_entwining",
       [](Context& c, const std::string& name) {
         const StructureObject& b = c.pick("bialgebra", bialgebra_like, "a bialgebra");
         return entwining_object(name, long_entwining(bialgebra_of(c.file, b.name)), b.name, b.name, b.name);
       }},
      {"entwining_from_alt_dk",
       [](Context& c, const std::string& name) {
         const StructureObject& d = c.pick("datum", alt_dk, "an alternative Doi-Koppinen datum");
         return entwining_object(name, entwining_from_alt_dk(alt_dk_datum_of(c.file, d.name)),
                                 d.refs.at("algebra"), d.refs.at("coalgebra"), d.name);
       }},
      {"koppinen_smash",
       [](Context& c, const std::string& name) {
         const StructureObject& e = c.pick("entwining", entwining, "an entwining");
         return map_algebra_object(name, koppinen_smash(entwining_of(c.file, e.name)), c.file.field);
       }},
      {"dual_algebra",
       [](Context& c, const std::string& name) {
         const StructureObject& co = c.pick("coring", coring, "a coring");
         const DualSide side = parse_side(c.option("side", "left"));
         return map_algebra_object(name, dual_algebra(coring_of(c.file, co.name), side), c.file.field);
       }},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, b] : builders()) out.push_back(n);
    return out;
  }();
  return names;
}

StructureFile construct(const StructureFile& in, const std::string& construction, const ConstructArgs& args) {
  for (const auto& [n, build] : builders()) {
    if (n != construction) continue;
    Context c{in, args, {"name"}};
    const std::string name = c.option("name", construction);
    if (in.find(name)) throw ValidationError("an object named '" + name + "' already exists");
    StructureObject o = build(c, name);
    for (const auto& [k, v] : args)
      if (!c.used.count(k)) throw std::invalid_argument("unknown argument '" + k + "' for " + construction);
    StructureFile out = in;
    out.put(std::move(o));
    validate(out);
    return out;
  }
  throw std::invalid_argument("unknown construction '" + construction + "'");
}

}  // namespace homalg
