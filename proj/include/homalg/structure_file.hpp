#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homalg/doi_koppinen.hpp"

namespace homalg {

/// Object kinds of a structure file.
enum class ObjectKind {
  Algebra,
  Coalgebra,
  Bialgebra,
  Hopf,
  ModuleWitness,
  Entwining,
  Coring,
  DkDatum,
  AltDkDatum,
  AutomorphismPair,
};

std::string to_string(ObjectKind k);
/// Throws ParseError for unknown names.
ObjectKind parse_kind(const std::string& name);

/// A structure map with its axis names (outputs first, e.g. "out,in1,in2")
/// and axis lengths. The matrix rows range over the output axes and its
/// columns over the input axes, both flattened row-major.
struct StoredMap {
  std::string axes;
  std::vector<std::size_t> shape;
  LinearMap matrix;
};

/// A named object: kind, optional dimension, references to other objects
/// and its structure maps.
struct StructureObject {
  std::string name;
  ObjectKind kind = ObjectKind::Algebra;
  std::optional<std::size_t> dim;
  std::map<std::string, std::string> refs;
  std::map<std::string, StoredMap> maps;
};

struct StructureFile {
  static constexpr int kFormatVersion = 1;
  Field field;
  std::vector<StructureObject> objects;

  const StructureObject* find(const std::string& name) const;
  const StructureObject& get(const std::string& name) const;
  /// Appends or replaces the object with the same name.
  void put(StructureObject object);
};

/// Layout of one map: axis names and lengths, outputs first.
struct MapLayout {
  std::string axes;
  std::vector<std::size_t> out;
  std::vector<std::size_t> in;
  bool required = true;
  bool automorphism = false;
};

/// The expected layouts of every map of an object, given the dimensions of
/// the objects it references. Throws ValidationError for bad references.
std::map<std::string, MapLayout> expected_layouts(const StructureFile& f, const StructureObject& o);

/// Checks that references resolve to objects of allowed kinds, that all
/// shapes agree with the schema and that automorphisms are invertible.
/// Throws ValidationError naming the failed invariant.
void validate(const StructureFile& f);

/// Parses and validates a file. Throws ParseError (syntax, with line and
/// column, or schema, with a JSON path) or ValidationError.
StructureFile parse_structure_file(const std::string& text);
/// Parses without validation; for tools that report validation separately.
StructureFile parse_structure_file_unchecked(const std::string& text);
/// Canonical text: fixed key order, rationals as "n" or "p/q" in lowest terms.
std::string serialize(const StructureFile& f);

/// Typed views of objects. Algebra views accept algebras, bialgebras and
/// Hopf algebras; coalgebra views accept coalgebras, bialgebras and Hopf
/// algebras; bialgebra views accept bialgebras and Hopf algebras.
HomAlgebra algebra_of(const StructureFile& f, const std::string& name);
HomCoalgebra coalgebra_of(const StructureFile& f, const std::string& name);
HomBialgebra bialgebra_of(const StructureFile& f, const std::string& name);
HomHopfAlgebra hopf_of(const StructureFile& f, const std::string& name);
ModuleWitness witness_of(const StructureFile& f, const std::string& name);
EntwiningStructure entwining_of(const StructureFile& f, const std::string& name);
HomCoring coring_of(const StructureFile& f, const std::string& name);
DoiKoppinenDatum dk_datum_of(const StructureFile& f, const std::string& name);
AlternativeDKDatum alt_dk_datum_of(const StructureFile& f, const std::string& name);
HopfAutomorphismPair automorphism_pair_of(const StructureFile& f, const std::string& name);

/// Object builders. References are stored by name and are not resolved.
StructureObject algebra_object(const std::string& name, const HomAlgebra& a);
StructureObject coalgebra_object(const std::string& name, const HomCoalgebra& c);
StructureObject bialgebra_object(const std::string& name, const HomBialgebra& b);
StructureObject hopf_object(const std::string& name, const HomHopfAlgebra& h);
/// `over` names the structure the witness is checked against.
StructureObject witness_object(const std::string& name, const ModuleWitness& m, const std::string& over);
/// `source`, when given, names the bialgebra (Long), datum or automorphism
/// pair that induces ψ.
StructureObject entwining_object(const std::string& name, const EntwiningStructure& e,
                                 const std::string& algebra, const std::string& coalgebra,
                                 const std::string& source = {});
StructureObject coring_object(const std::string& name, const HomCoring& c, const std::string& base);
StructureObject dk_datum_object(const std::string& name, const DoiKoppinenDatum& d,
                                const std::string& bialgebra, const std::string& algebra,
                                const std::string& coalgebra);
StructureObject alt_dk_datum_object(const std::string& name, const AlternativeDKDatum& d,
                                    const std::string& bialgebra, const std::string& algebra,
                                    const std::string& coalgebra);
StructureObject automorphism_pair_object(const std::string& name, const HopfAutomorphismPair& p,
                                         const std::string& hopf);

}  // namespace homalg
