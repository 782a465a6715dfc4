#include "homalg/structure_file.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "homalg/errors.hpp"
#include "json.hpp"

namespace homalg {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const std::vector<std::pair<ObjectKind, std::string>>& kind_names() {
  static const std::vector<std::pair<ObjectKind, std::string>> names = {
      {ObjectKind::Algebra, "hom-algebra"},
      {ObjectKind::Coalgebra, "hom-coalgebra"},
      {ObjectKind::Bialgebra, "hom-bialgebra"},
      {ObjectKind::Hopf, "hom-hopf"},
      {ObjectKind::ModuleWitness, "module-witness"},
      {ObjectKind::Entwining, "entwining"},
      {ObjectKind::Coring, "coring"},
      {ObjectKind::DkDatum, "dk-datum"},
      {ObjectKind::AltDkDatum, "alt-dk-datum"},
      {ObjectKind::AutomorphismPair, "automorphism-pair"},
  };
  return names;
}

bool is_algebra_like(ObjectKind k) {
  return k == ObjectKind::Algebra || k == ObjectKind::Bialgebra || k == ObjectKind::Hopf;
}
bool is_coalgebra_like(ObjectKind k) {
  return k == ObjectKind::Coalgebra || k == ObjectKind::Bialgebra || k == ObjectKind::Hopf;
}
bool is_bialgebra_like(ObjectKind k) { return k == ObjectKind::Bialgebra || k == ObjectKind::Hopf; }

bool has_dim(ObjectKind k) {
  return k == ObjectKind::Algebra || k == ObjectKind::Coalgebra || k == ObjectKind::Bialgebra ||
         k == ObjectKind::Hopf || k == ObjectKind::ModuleWitness || k == ObjectKind::Coring;
}

struct RefSpec {
  std::string name;
  bool (*allowed)(ObjectKind);
  const char* description;
  bool optional = false;
};

bool any_kind(ObjectKind) { return true; }
bool is_hopf(ObjectKind k) { return k == ObjectKind::Hopf; }
bool is_entwining_source(ObjectKind k) {
  return is_bialgebra_like(k) || k == ObjectKind::DkDatum || k == ObjectKind::AltDkDatum ||
         k == ObjectKind::AutomorphismPair;
}

std::vector<RefSpec> ref_specs(ObjectKind k) {
  switch (k) {
    case ObjectKind::ModuleWitness:
      return {{"over", any_kind, "any structure"}};
    case ObjectKind::Entwining:
      return {{"algebra", is_algebra_like, "an algebra"},
              {"coalgebra", is_coalgebra_like, "a coalgebra"},
              {"source", is_entwining_source, "a bialgebra, datum or automorphism pair", true}};
    case ObjectKind::Coring:
      return {{"base", is_algebra_like, "an algebra"}};
    case ObjectKind::DkDatum:
    case ObjectKind::AltDkDatum:
      return {{"bialgebra", is_bialgebra_like, "a bialgebra"},
              {"algebra", is_algebra_like, "an algebra"},
              {"coalgebra", is_coalgebra_like, "a coalgebra"}};
    case ObjectKind::AutomorphismPair:
      return {{"hopf", is_hopf, "a Hopf algebra"}};
    default:
      return {};
  }
}

std::size_t dim_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o = f.get(name);
  if (!o.dim) throw ValidationError("object '" + name + "' has no dimension");
  return *o.dim;
}

const StructureObject& ref(const StructureFile& f, const StructureObject& o, const std::string& key) {
  const auto it = o.refs.find(key);
  if (it == o.refs.end()) throw ValidationError("object '" + o.name + "' lacks reference '" + key + "'");
  const StructureObject* target = f.find(it->second);
  if (!target)
    throw ValidationError("object '" + o.name + "' references unknown object '" + it->second + "'");
  return *target;
}

MapLayout layout(std::string axes, std::vector<std::size_t> out, std::vector<std::size_t> in,
                 bool required = true, bool automorphism = false) {
  return {std::move(axes), std::move(out), std::move(in), required, automorphism};
}

/// Algebra and coalgebra dimensions that a witness over `over` acts and
/// coacts with; zero means the side is unavailable.
std::pair<std::size_t, std::size_t> witness_dims(const StructureFile& f, const StructureObject& over) {
  switch (over.kind) {
    case ObjectKind::Algebra:
      return {*over.dim, 0};
    case ObjectKind::Coalgebra:
      return {0, *over.dim};
    case ObjectKind::Bialgebra:
    case ObjectKind::Hopf:
      return {*over.dim, *over.dim};
    case ObjectKind::Entwining:
    case ObjectKind::DkDatum:
    case ObjectKind::AltDkDatum:
      return {dim_of(f, ref(f, over, "algebra").name), dim_of(f, ref(f, over, "coalgebra").name)};
    case ObjectKind::Coring:
      return {dim_of(f, ref(f, over, "base").name), *over.dim};
    case ObjectKind::AutomorphismPair: {
      const std::size_t d = dim_of(f, ref(f, over, "hopf").name);
      return {d, d};
    }
    case ObjectKind::ModuleWitness:
      break;
  }
  throw ValidationError("a module witness cannot be checked against another witness");
}

/// Names of the algebra and coalgebra an entwining source entwines.
std::pair<std::string, std::string> source_factors(const StructureObject& s) {
  switch (s.kind) {
    case ObjectKind::DkDatum:
    case ObjectKind::AltDkDatum:
      return {s.refs.at("algebra"), s.refs.at("coalgebra")};
    case ObjectKind::AutomorphismPair:
      return {s.refs.at("hopf"), s.refs.at("hopf")};
    default:
      return {s.name, s.name};
  }
}

std::size_t split_position(const std::string& axes) {
  std::size_t outs = 0;
  std::stringstream ss(axes);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.rfind("out", 0) == 0)
      ++outs;
    else
      break;
  }
  return outs;
}

std::size_t prod(const std::vector<std::size_t>& v, std::size_t from, std::size_t to) {
  std::size_t p = 1;
  for (std::size_t i = from; i < to; ++i) p *= v[i];
  return p;
}

StoredMap stored(const MapLayout& l, const LinearMap& m) {
  std::vector<std::size_t> shape = l.out;
  shape.insert(shape.end(), l.in.begin(), l.in.end());
  return {l.axes, std::move(shape), m};
}

// ---------------------------------------------------------------------------
// Parsing.

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("schema violation at " + path + ": " + what);
}

void only_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) schema_error(path, "unknown field '" + k + "'");
}

const json& need(const json& j, const std::string& path, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) schema_error(path, "missing field '" + key + "'");
  return *it;
}

std::string need_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::size_t need_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) schema_error(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

StoredMap parse_map(const json& j, const std::string& path, Field field) {
  only_keys(j, path, {"axes", "shape", "data"});
  StoredMap m;
  m.axes = need_string(need(j, path, "axes"), path + ".axes");
  const json& shape = need(j, path, "shape");
  if (!shape.is_array()) schema_error(path + ".shape", "expected an array");
  for (std::size_t i = 0; i < shape.size(); ++i)
    m.shape.push_back(need_count(shape[i], path + ".shape[" + std::to_string(i) + "]"));
  const std::size_t axes_count = std::count(m.axes.begin(), m.axes.end(), ',') + 1;
  if (m.axes.empty() || axes_count != m.shape.size())
    schema_error(path, "axes and shape have different lengths");
  const json& data = need(j, path, "data");
  if (!data.is_array()) schema_error(path + ".data", "expected an array");
  const std::size_t split = split_position(m.axes);
  const std::size_t rows = prod(m.shape, 0, split), cols = prod(m.shape, split, m.shape.size());
  if (data.size() != rows * cols)
    schema_error(path + ".data", "expected " + std::to_string(rows * cols) + " entries, found " +
                                     std::to_string(data.size()));
  std::vector<Scalar> entries;
  entries.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::string p = path + ".data[" + std::to_string(i) + "]";
    const std::string text = need_string(data[i], p);
    try {
      entries.push_back(field.parse_scalar(text));
    } catch (const Error& e) {
      schema_error(p, std::string("bad scalar '") + text + "': " + e.what());
    }
  }
  m.matrix = LinearMap::from_entries(rows, cols, std::move(entries), field);
  return m;
}

StructureObject parse_object(const json& j, const std::string& path, Field field) {
  only_keys(j, path, {"name", "kind", "dim", "refs", "maps"});
  StructureObject o;
  o.name = need_string(need(j, path, "name"), path + ".name");
  if (o.name.empty()) schema_error(path + ".name", "empty name");
  o.kind = parse_kind(need_string(need(j, path, "kind"), path + ".kind"));
  if (j.contains("dim")) o.dim = need_count(j["dim"], path + ".dim");
  if (j.contains("refs")) {
    const json& refs = j["refs"];
    if (!refs.is_object()) schema_error(path + ".refs", "expected an object");
    for (const auto& [k, v] : refs.items()) o.refs[k] = need_string(v, path + ".refs." + k);
  }
  const json& maps = need(j, path, "maps");
  if (!maps.is_object()) schema_error(path + ".maps", "expected an object");
  for (const auto& [k, v] : maps.items()) o.maps[k] = parse_map(v, path + ".maps." + k, field);
  return o;
}

ordered_json map_json(const StoredMap& m) {
  ordered_json j;
  j["axes"] = m.axes;
  j["shape"] = m.shape;
  ordered_json data = ordered_json::array();
  for (const auto& x : m.matrix.entries()) data.push_back(x.to_string());
  j["data"] = std::move(data);
  return j;
}

LinearMap map_of(const StructureObject& o, const std::string& key) {
  const auto it = o.maps.find(key);
  if (it == o.maps.end()) throw ValidationError("object '" + o.name + "' lacks map '" + key + "'");
  return it->second.matrix;
}

std::optional<LinearMap> optional_map(const StructureObject& o, const std::string& key) {
  const auto it = o.maps.find(key);
  if (it == o.maps.end()) return std::nullopt;
  return it->second.matrix;
}

const StructureObject& typed(const StructureFile& f, const std::string& name, bool (*ok)(ObjectKind),
                             const char* what) {
  const StructureObject& o = f.get(name);
  if (!ok(o.kind)) throw ValidationError("object '" + name + "' is not " + what);
  return o;
}

template <ObjectKind K>
bool is(ObjectKind k) {
  return k == K;
}

}  // namespace

std::string to_string(ObjectKind k) {
  for (const auto& [kind, name] : kind_names())
    if (kind == k) return name;
  return "unknown";
}

ObjectKind parse_kind(const std::string& name) {
  for (const auto& [kind, n] : kind_names())
    if (n == name) return kind;
  throw ParseError("unknown object kind '" + name + "'");
}

const StructureObject* StructureFile::find(const std::string& name) const {
  for (const auto& o : objects)
    if (o.name == name) return &o;
  return nullptr;
}

const StructureObject& StructureFile::get(const std::string& name) const {
  const StructureObject* o = find(name);
  if (!o) throw ValidationError("unknown object '" + name + "'");
  return *o;
}

void StructureFile::put(StructureObject object) {
  for (auto& o : objects)
    if (o.name == object.name) {
      o = std::move(object);
      return;
    }
  objects.push_back(std::move(object));
}

std::map<std::string, MapLayout> expected_layouts(const StructureFile& f, const StructureObject& o) {
  auto sq = [](std::size_t d) { return layout("out,in", {d}, {d}, true, true); };
  if (has_dim(o.kind) && !o.dim) throw ValidationError("object '" + o.name + "' needs a dimension");
  if (!has_dim(o.kind) && o.dim) throw ValidationError("object '" + o.name + "' must not declare a dimension");
  for (const auto& spec : ref_specs(o.kind)) {
    if (spec.optional && !o.refs.count(spec.name)) continue;
    const StructureObject& target = ref(f, o, spec.name);
    if (!spec.allowed(target.kind))
      throw ValidationError("reference '" + spec.name + "' of '" + o.name + "' must name " +
                            spec.description);
  }
  for (const auto& [key, target] : o.refs) {
    const auto specs = ref_specs(o.kind);
    if (std::none_of(specs.begin(), specs.end(), [&](const RefSpec& s) { return s.name == key; }))
      throw ValidationError("object '" + o.name + "' has unknown reference '" + key + "'");
  }

  std::map<std::string, MapLayout> out;
  const std::size_t d = o.dim.value_or(0);
  switch (o.kind) {
    case ObjectKind::Hopf:
      out["antipode"] = layout("out,in", {d}, {d});
      [[fallthrough]];
    case ObjectKind::Bialgebra:
      out["comult"] = layout("out1,out2,in", {d, d}, {d});
      out["counit"] = layout("in", {}, {d});
      [[fallthrough]];
    case ObjectKind::Algebra:
      out["mult"] = layout("out,in1,in2", {d}, {d, d});
      out["unit"] = layout("out", {d}, {});
      out["alpha"] = sq(d);
      break;
    case ObjectKind::Coalgebra:
      out["comult"] = layout("out1,out2,in", {d, d}, {d});
      out["counit"] = layout("in", {}, {d});
      out["gamma"] = sq(d);
      break;
    case ObjectKind::ModuleWitness: {
      const auto [da, dc] = witness_dims(f, ref(f, o, "over"));
      out["mu"] = sq(d);
      if (da) {
        out["right_action"] = layout("out,in_m,in_a", {d}, {d, da}, false);
        out["left_action"] = layout("out,in_a,in_m", {d}, {da, d}, false);
      }
      if (dc) {
        out["right_coaction"] = layout("out_m,out_c,in", {d, dc}, {d}, false);
        out["left_coaction"] = layout("out_c,out_m,in", {dc, d}, {d}, false);
      }
      break;
    }
    case ObjectKind::Entwining: {
      if (o.refs.count("source")) {
        const auto [a, c] = source_factors(f.get(o.refs.at("source")));
        if (a != o.refs.at("algebra") || c != o.refs.at("coalgebra"))
          throw ValidationError("entwining '" + o.name + "' names a source over other factors");
      }
      const std::size_t da = dim_of(f, o.refs.at("algebra")), dc = dim_of(f, o.refs.at("coalgebra"));
      out["psi"] = layout("out_a,out_c,in_c,in_a", {da, dc}, {dc, da});
      break;
    }
    case ObjectKind::Coring: {
      const std::size_t da = dim_of(f, o.refs.at("base"));
      out["chi"] = sq(d);
      out["left_action"] = layout("out,in_a,in_c", {d}, {da, d});
      out["right_action"] = layout("out,in_c,in_a", {d}, {d, da});
      out["comult"] = layout("out1,out2,in", {d, d}, {d});
      out["counit"] = layout("out_a,in", {da}, {d});
      break;
    }
    case ObjectKind::DkDatum: {
      const std::size_t db = dim_of(f, o.refs.at("bialgebra")), da = dim_of(f, o.refs.at("algebra")),
                        dc = dim_of(f, o.refs.at("coalgebra"));
      out["coaction"] = layout("out_a,out_b,in", {da, db}, {da});
      out["action"] = layout("out,in_c,in_b", {dc}, {dc, db});
      break;
    }
    case ObjectKind::AltDkDatum: {
      const std::size_t db = dim_of(f, o.refs.at("bialgebra")), da = dim_of(f, o.refs.at("algebra")),
                        dc = dim_of(f, o.refs.at("coalgebra"));
      out["action"] = layout("out,in_b,in_a", {da}, {db, da});
      out["coaction"] = layout("out_b,out_c,in", {db, dc}, {dc});
      break;
    }
    case ObjectKind::AutomorphismPair: {
      const std::size_t dh = dim_of(f, o.refs.at("hopf"));
      out["phi"] = sq(dh);
      out["varphi"] = sq(dh);
      break;
    }
  }
  return out;
}

void validate(const StructureFile& f) {
  std::set<std::string> names;
  for (const auto& o : f.objects)
    if (!names.insert(o.name).second) throw ValidationError("duplicate object name '" + o.name + "'");
  for (const auto& o : f.objects) {
    const auto layouts = expected_layouts(f, o);
    for (const auto& [key, m] : o.maps)
      if (!layouts.count(key)) throw ValidationError("object '" + o.name + "' has unexpected map '" + key + "'");
    for (const auto& [key, l] : layouts) {
      const auto it = o.maps.find(key);
      if (it == o.maps.end()) {
        if (l.required) throw ValidationError("object '" + o.name + "' lacks map '" + key + "'");
        continue;
      }
      const StoredMap expected = stored(l, LinearMap());
      if (it->second.axes != l.axes)
        throw ValidationError("map '" + o.name + "." + key + "' must have axes '" + l.axes + "'");
      if (it->second.shape != expected.shape)
        throw ValidationError("shape mismatch in map '" + o.name + "." + key + "'");
      if (it->second.matrix.field() != f.field)
        throw ValidationError("map '" + o.name + "." + key + "' is over another field");
      if (l.automorphism && rank(it->second.matrix) != it->second.matrix.rows())
        throw ValidationError("automorphism singular: '" + o.name + "." + key + "'");
    }
  }
}

StructureFile parse_structure_file_unchecked(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
  only_keys(j, "$", {"format_version", "field", "objects"});
  const json& version = need(j, "$", "format_version");
  if (!version.is_number_integer() || version.get<long>() != StructureFile::kFormatVersion)
    schema_error("$.format_version", "unsupported version");
  StructureFile f;
  try {
    f.field = Field::parse(need_string(need(j, "$", "field"), "$.field"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    schema_error("$.field", e.what());
  }
  const json& objects = need(j, "$", "objects");
  if (!objects.is_array()) schema_error("$.objects", "expected an array");
  for (std::size_t i = 0; i < objects.size(); ++i)
    f.objects.push_back(parse_object(objects[i], "$.objects[" + std::to_string(i) + "]", f.field));
  return f;
}

StructureFile parse_structure_file(const std::string& text) {
  StructureFile f = parse_structure_file_unchecked(text);
  validate(f);
  return f;
}

std::string serialize(const StructureFile& f) {
  ordered_json j;
  j["format_version"] = StructureFile::kFormatVersion;
  j["field"] = f.field.descriptor();
  ordered_json objects = ordered_json::array();
  for (const auto& o : f.objects) {
    ordered_json oj;
    oj["name"] = o.name;
    oj["kind"] = to_string(o.kind);
    if (o.dim) oj["dim"] = *o.dim;
    if (!o.refs.empty()) {
      ordered_json refs;
      for (const auto& [k, v] : o.refs) refs[k] = v;
      oj["refs"] = std::move(refs);
    }
    ordered_json maps = ordered_json::object();
    for (const auto& [k, m] : o.maps) maps[k] = map_json(m);
    oj["maps"] = std::move(maps);
    objects.push_back(std::move(oj));
  }
  j["objects"] = std::move(objects);
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Typed views.

HomAlgebra algebra_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o = typed(f, name, is_algebra_like, "an algebra");
  return HomAlgebra(map_of(o, "mult"), map_of(o, "unit"), map_of(o, "alpha"));
}

HomCoalgebra coalgebra_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o = typed(f, name, is_coalgebra_like, "a coalgebra");
  return HomCoalgebra(map_of(o, "comult"), map_of(o, "counit"),
                      map_of(o, o.kind == ObjectKind::Coalgebra ? "gamma" : "alpha"));
}

HomBialgebra bialgebra_of(const StructureFile& f, const std::string& name) {
  typed(f, name, is_bialgebra_like, "a bialgebra");
  return HomBialgebra(algebra_of(f, name), coalgebra_of(f, name));
}

HomHopfAlgebra hopf_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o = typed(f, name, is_hopf, "a Hopf algebra");
  return HomHopfAlgebra(bialgebra_of(f, name), map_of(o, "antipode"));
}

ModuleWitness witness_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o = typed(f, name, is<ObjectKind::ModuleWitness>, "a module witness");
  ModuleWitness m(map_of(o, "mu"));
  m.right_action = optional_map(o, "right_action");
  m.left_action = optional_map(o, "left_action");
  m.right_coaction = optional_map(o, "right_coaction");
  m.left_coaction = optional_map(o, "left_coaction");
  return m;
}

EntwiningStructure entwining_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o = typed(f, name, is<ObjectKind::Entwining>, "an entwining");
  return make_entwining(algebra_of(f, o.refs.at("algebra")), coalgebra_of(f, o.refs.at("coalgebra")),
                        map_of(o, "psi"));
}

HomCoring coring_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o = typed(f, name, is<ObjectKind::Coring>, "a coring");
  return make_coring(algebra_of(f, o.refs.at("base")), map_of(o, "chi"), map_of(o, "left_action"),
                     map_of(o, "right_action"), map_of(o, "comult"), map_of(o, "counit"));
}

DoiKoppinenDatum dk_datum_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o = typed(f, name, is<ObjectKind::DkDatum>, "a Doi-Koppinen datum");
  return {bialgebra_of(f, o.refs.at("bialgebra")), algebra_of(f, o.refs.at("algebra")),
          map_of(o, "coaction"), coalgebra_of(f, o.refs.at("coalgebra")), map_of(o, "action")};
}

AlternativeDKDatum alt_dk_datum_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o =
      typed(f, name, is<ObjectKind::AltDkDatum>, "an alternative Doi-Koppinen datum");
  return {bialgebra_of(f, o.refs.at("bialgebra")), algebra_of(f, o.refs.at("algebra")),
          map_of(o, "action"), coalgebra_of(f, o.refs.at("coalgebra")), map_of(o, "coaction")};
}

HopfAutomorphismPair automorphism_pair_of(const StructureFile& f, const std::string& name) {
  const StructureObject& o =
      typed(f, name, is<ObjectKind::AutomorphismPair>, "an automorphism pair");
  return {hopf_of(f, o.refs.at("hopf")), map_of(o, "phi"), map_of(o, "varphi")};
}

// ---------------------------------------------------------------------------
// Builders.

namespace {

StructureObject object(const std::string& name, ObjectKind kind, std::optional<std::size_t> dim) {
  StructureObject o;
  o.name = name;
  o.kind = kind;
  o.dim = dim;
  return o;
}

void put_map(StructureObject& o, const std::string& key, const MapLayout& l, const LinearMap& m) {
  o.maps[key] = stored(l, m);
}

void put_algebra_maps(StructureObject& o, const HomAlgebra& a) {
  const std::size_t d = a.dim();
  put_map(o, "mult", layout("out,in1,in2", {d}, {d, d}), a.mult());
  put_map(o, "unit", layout("out", {d}, {}), a.unit());
  put_map(o, "alpha", layout("out,in", {d}, {d}), a.alpha());
}

void put_coalgebra_maps(StructureObject& o, const HomCoalgebra& c) {
  const std::size_t d = c.dim();
  put_map(o, "comult", layout("out1,out2,in", {d, d}, {d}), c.comult());
  put_map(o, "counit", layout("in", {}, {d}), c.counit());
}

std::size_t rows_over(const LinearMap& m, std::size_t n) { return m.rows() / n; }
std::size_t cols_over(const LinearMap& m, std::size_t n) { return m.cols() / n; }

}  // namespace

StructureObject algebra_object(const std::string& name, const HomAlgebra& a) {
  StructureObject o = object(name, ObjectKind::Algebra, a.dim());
  put_algebra_maps(o, a);
  return o;
}

StructureObject coalgebra_object(const std::string& name, const HomCoalgebra& c) {
  StructureObject o = object(name, ObjectKind::Coalgebra, c.dim());
  put_coalgebra_maps(o, c);
  put_map(o, "gamma", layout("out,in", {c.dim()}, {c.dim()}), c.gamma());
  return o;
}

StructureObject bialgebra_object(const std::string& name, const HomBialgebra& b) {
  if (b.coalgebra().gamma() != b.alpha())
    throw ValidationError("bialgebra objects share one automorphism");
  StructureObject o = object(name, ObjectKind::Bialgebra, b.dim());
  put_algebra_maps(o, b.algebra());
  put_coalgebra_maps(o, b.coalgebra());
  return o;
}

StructureObject hopf_object(const std::string& name, const HomHopfAlgebra& h) {
  StructureObject o = bialgebra_object(name, h.bialgebra());
  o.kind = ObjectKind::Hopf;
  put_map(o, "antipode", layout("out,in", {h.dim()}, {h.dim()}), h.antipode());
  return o;
}

StructureObject witness_object(const std::string& name, const ModuleWitness& m, const std::string& over) {
  const std::size_t n = m.dim();
  StructureObject o = object(name, ObjectKind::ModuleWitness, n);
  o.refs["over"] = over;
  put_map(o, "mu", layout("out,in", {n}, {n}), m.mu);
  if (m.right_action)
    put_map(o, "right_action", layout("out,in_m,in_a", {n}, {n, cols_over(*m.right_action, n)}),
            *m.right_action);
  if (m.left_action)
    put_map(o, "left_action", layout("out,in_a,in_m", {n}, {cols_over(*m.left_action, n), n}),
            *m.left_action);
  if (m.right_coaction)
    put_map(o, "right_coaction", layout("out_m,out_c,in", {n, rows_over(*m.right_coaction, n)}, {n}),
            *m.right_coaction);
  if (m.left_coaction)
    put_map(o, "left_coaction", layout("out_c,out_m,in", {rows_over(*m.left_coaction, n), n}, {n}),
            *m.left_coaction);
  return o;
}

StructureObject entwining_object(const std::string& name, const EntwiningStructure& e,
                                 const std::string& algebra, const std::string& coalgebra,
                                 const std::string& source) {
  StructureObject o = object(name, ObjectKind::Entwining, std::nullopt);
  o.refs = {{"algebra", algebra}, {"coalgebra", coalgebra}};
  if (!source.empty()) o.refs["source"] = source;
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  put_map(o, "psi", layout("out_a,out_c,in_c,in_a", {da, dc}, {dc, da}), e.psi);
  return o;
}

StructureObject coring_object(const std::string& name, const HomCoring& c, const std::string& base) {
  const std::size_t n = c.dim(), da = c.base.dim();
  StructureObject o = object(name, ObjectKind::Coring, n);
  o.refs["base"] = base;
  put_map(o, "chi", layout("out,in", {n}, {n}), c.chi());
  put_map(o, "left_action", layout("out,in_a,in_c", {n}, {da, n}), *c.bimodule.left_action);
  put_map(o, "right_action", layout("out,in_c,in_a", {n}, {n, da}), *c.bimodule.right_action);
  put_map(o, "comult", layout("out1,out2,in", {n, n}, {n}), c.comult_lift);
  put_map(o, "counit", layout("out_a,in", {da}, {n}), c.counit);
  return o;
}

StructureObject dk_datum_object(const std::string& name, const DoiKoppinenDatum& d,
                                const std::string& bialgebra, const std::string& algebra,
                                const std::string& coalgebra) {
  StructureObject o = object(name, ObjectKind::DkDatum, std::nullopt);
  o.refs = {{"bialgebra", bialgebra}, {"algebra", algebra}, {"coalgebra", coalgebra}};
  const std::size_t db = d.bialgebra.dim(), da = d.algebra.dim(), dc = d.coalgebra.dim();
  put_map(o, "coaction", layout("out_a,out_b,in", {da, db}, {da}), d.coaction);
  put_map(o, "action", layout("out,in_c,in_b", {dc}, {dc, db}), d.action);
  return o;
}

StructureObject alt_dk_datum_object(const std::string& name, const AlternativeDKDatum& d,
                                    const std::string& bialgebra, const std::string& algebra,
                                    const std::string& coalgebra) {
  StructureObject o = object(name, ObjectKind::AltDkDatum, std::nullopt);
  o.refs = {{"bialgebra", bialgebra}, {"algebra", algebra}, {"coalgebra", coalgebra}};
  const std::size_t db = d.bialgebra.dim(), da = d.algebra.dim(), dc = d.coalgebra.dim();
  put_map(o, "action", layout("out,in_b,in_a", {da}, {db, da}), d.action);
  put_map(o, "coaction", layout("out_b,out_c,in", {db, dc}, {dc}), d.coaction);
  return o;
}

StructureObject automorphism_pair_object(const std::string& name, const HopfAutomorphismPair& p,
                                         const std::string& hopf) {
  StructureObject o = object(name, ObjectKind::AutomorphismPair, std::nullopt);
  o.refs["hopf"] = hopf;
  const std::size_t d = p.hopf.dim();
  put_map(o, "phi", layout("out,in", {d}, {d}), p.phi);
  put_map(o, "varphi", layout("out,in", {d}, {d}), p.varphi);
  return o;
}

}  // namespace homalg
