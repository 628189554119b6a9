#ifndef SMALG_DESCRIPTOR_HPP
#define SMALG_DESCRIPTOR_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smalg/automata.hpp"
#include "smalg/constructors.hpp"
#include "smalg/detect.hpp"
#include "smalg/errors.hpp"
#include "smalg/group_ring.hpp"
#include "smalg/polyquot.hpp"

namespace smalg {

using Json = nlohmann::json;

/// External representation of a supported structure. Field names are
/// normative; polynomial coefficients are constant-term-first and Cayley
/// tables index the left operand by row.
struct StructureDescriptor {
  std::string kind;
  Json payload;  // validated kind-specific fields

  std::string serialize() const {
    Json j = payload;
    j["kind"] = kind;
    return j.dump();
  }
};

namespace descdetail {

inline std::vector<std::vector<ElementId>> parse_table(const Json& j,
                                                       const std::string& field) {
  if (!j.contains(field) || !j[field].is_array())
    throw Malformed("missing table field '" + field + "'");
  std::vector<std::vector<ElementId>> t;
  std::size_t width = j[field].size();
  int row_idx = 0;
  for (const auto& row : j[field]) {
    if (!row.is_array() || row.size() != width)
      throw TableShape("ragged table in '" + field + "' at row " +
                       std::to_string(row_idx));
    std::vector<ElementId> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer())
        throw Malformed("non-integer entry in '" + field + "' row " +
                        std::to_string(row_idx));
      r.push_back(cell.get<ElementId>());
    }
    t.push_back(std::move(r));
    ++row_idx;
  }
  return t;
}

inline std::vector<std::string> labels_or_default(const Json& j, std::size_t n) {
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
    if (labels.size() != n) throw TableShape("label count != table size");
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  return labels;
}

inline int int_field(const Json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw Malformed("missing integer field '" + field + "'");
  return j[field].get<int>();
}

}  // namespace descdetail

inline StructureDescriptor parse_descriptor(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Malformed(std::string("descriptor is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Malformed("descriptor must be an object with a 'kind' string");
  std::string kind = j["kind"].get<std::string>();
  static const std::vector<std::string> kinds = {
      "cayley_magma",  "cayley_ring",    "zn",
      "near_ring_zn",  "poly_quotient",  "group",
      "symmetric_semigroup", "group_ring", "semigroup_ring",
      "matrix_ring",   "lattice_semiring", "symbolic"};
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw UnknownKind("unknown descriptor kind '" + kind + "'");
  Json payload = j;
  payload.erase("kind");
  StructureDescriptor d{kind, payload};

  // eager validation: building the structure surfaces shape errors now
  using namespace descdetail;
  if (kind == "cayley_magma") {
    auto op = parse_table(payload, "op");
    FiniteMagma m{labels_or_default(payload, op.size()), op};
    m.validate();
  } else if (kind == "cayley_ring") {
    auto add = parse_table(payload, "add");
    auto mul = parse_table(payload, "mul");
    FiniteRingTable r{labels_or_default(payload, add.size()), add, mul};
    r.validate();
  } else if (kind == "zn" || kind == "near_ring_zn") {
    if (int_field(payload, "n") < 1) throw Malformed("'n' must be >= 1");
  } else if (kind == "poly_quotient") {
    int p = int_field(payload, "p");
    if (!payload.contains("modulus") || !payload["modulus"].is_array())
      throw Malformed("missing 'modulus' coefficient array");
    PolyZp f;
    for (const auto& c : payload["modulus"]) f.push_back(c.get<int>());
    PolyModRing check(p, f);  // validates prime p and degree
  } else if (kind == "group") {
    std::string family = payload.value("family", "");
    if (family != "cyclic" && family != "dihedral" && family != "symmetric")
      throw Malformed("group 'family' must be cyclic, dihedral or symmetric");
    int_field(payload, "n");
  } else if (kind == "symmetric_semigroup") {
    int_field(payload, "n");
  } else if (kind == "group_ring" || kind == "semigroup_ring") {
    int_field(payload, "coeff");
    if (!payload.contains("base"))
      throw Malformed("group ring needs a 'base' descriptor");
    parse_descriptor(payload["base"].dump());
  } else if (kind == "matrix_ring") {
    int_field(payload, "k");
    if (!payload.contains("coeff"))
      throw Malformed("matrix ring needs a 'coeff' descriptor");
    parse_descriptor(payload["coeff"].dump());
  } else if (kind == "lattice_semiring") {
    auto join = parse_table(payload, "join");
    parse_table(payload, "meet");
    labels_or_default(payload, join.size());
  } else {  // symbolic
    std::string name = payload.value("name", "");
    if (!symbolic_name_parse(name))
      throw Malformed("unknown symbolic structure name '" + name + "'");
  }
  return d;
}

/// A descriptor realized into library objects; exactly one member is set.
struct RealizedStructure {
  std::optional<AnyStructure> any;
  std::optional<PolyModRing> poly;
  std::optional<GroupRingAlgebra> group_ring;
};

inline RealizedStructure realize(const StructureDescriptor& d) {
  using namespace descdetail;
  RealizedStructure out;
  const Json& p = d.payload;
  if (d.kind == "cayley_magma") {
    auto op = parse_table(p, "op");
    out.any = MagmaStructure{FiniteMagma{labels_or_default(p, op.size()), op}};
  } else if (d.kind == "cayley_ring") {
    auto add = parse_table(p, "add");
    auto mul = parse_table(p, "mul");
    out.any = RingStructure{
        FiniteRingTable{labels_or_default(p, add.size()), add, mul}};
  } else if (d.kind == "zn") {
    out.any = RingStructure{build_zn(int_field(p, "n"))};
  } else if (d.kind == "near_ring_zn") {
    out.any = RingStructure{trivial_mul_near_ring(int_field(p, "n")), true};
  } else if (d.kind == "poly_quotient") {
    PolyZp f;
    for (const auto& c : p["modulus"]) f.push_back(c.get<int>());
    out.poly = PolyModRing(int_field(p, "p"), f);
  } else if (d.kind == "group") {
    std::string family = p["family"].get<std::string>();
    int n = int_field(p, "n");
    if (family == "cyclic") out.any = MagmaStructure{cyclic(n)};
    else if (family == "dihedral") out.any = MagmaStructure{dihedral(n)};
    else out.any = MagmaStructure{symmetric_group(n)};
  } else if (d.kind == "symmetric_semigroup") {
    out.any = MagmaStructure{symmetric_semigroup(int_field(p, "n"))};
  } else if (d.kind == "group_ring" || d.kind == "semigroup_ring") {
    RealizedStructure base = realize(parse_descriptor(p["base"].dump()));
    if (!base.any || !std::holds_alternative<MagmaStructure>(*base.any))
      throw Malformed("group ring base must be a one-operation structure");
    out.group_ring = GroupRingAlgebra(
        CoeffRing{int_field(p, "coeff")},
        std::get<MagmaStructure>(*base.any).magma);
  } else if (d.kind == "matrix_ring") {
    RealizedStructure coeff = realize(parse_descriptor(p["coeff"].dump()));
    if (!coeff.any || !std::holds_alternative<RingStructure>(*coeff.any))
      throw Malformed("matrix ring coefficients must be a ring descriptor");
    out.any = RingStructure{matrix_ring(
        std::get<RingStructure>(*coeff.any).table, int_field(p, "k"))};
  } else if (d.kind == "lattice_semiring") {
    auto join = parse_table(p, "join");
    auto meet = parse_table(p, "meet");
    out.any = RingStructure{lattice_semiring(
        labels_or_default(p, join.size()), join, meet)};
  } else {  // symbolic
    out.any = *symbolic_name_parse(p["name"].get<std::string>());
  }
  return out;
}

}  // namespace smalg

#endif  // SMALG_DESCRIPTOR_HPP
