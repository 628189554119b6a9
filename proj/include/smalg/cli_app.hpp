#ifndef SMALG_CLI_APP_HPP
#define SMALG_CLI_APP_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smalg/automata.hpp"
#include "smalg/descriptor.hpp"
#include "smalg/detect.hpp"
#include "smalg/ideals.hpp"
#include "smalg/lattice_set.hpp"
#include "smalg/linear.hpp"
#include "smalg/polyquot.hpp"

namespace smalg {

// Exit-code contract: 0 = success / found, 1 = verified-not-found,
// 2 = usage or runtime error. Sweeps invert: 0 means zero witnesses.
namespace cli {

inline Json json_of(const AxiomReport& rep) {
  Json j;
  j["claimed_class"] = rep.claimed_class;
  j["ok"] = rep.ok();
  j["truncated"] = rep.truncated;
  j["violations"] = Json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return j;
}

inline Json json_of(const Certificate& c) {
  Json j;
  j["property"] = property_name(c.property);
  j["witness"] = c.witness_text;
  if (c.finite_witness) j["witness_elements"] = *c.finite_witness;
  if (c.symbolic_witness) j["witness_set"] = c.symbolic_witness->str();
  j["weak_axioms"] = json_of(c.weak_axioms);
  j["strong_failure"] = c.strong_failure;
  j["exhaustive"] = c.exhaustive;
  return j;
}

inline Json json_of(const IdealClassification& c) {
  Json j;
  j["prime"] = c.prime;
  j["maximal"] = c.maximal;
  j["minimal"] = c.minimal;
  j["principal"] = c.principal;
  if (c.generator) j["generator"] = *c.generator;
  return j;
}

inline Json json_of(const LinearReport& rep) {
  Json j;
  j["ok"] = rep.ok();
  j["violations"] = Json::array();
  for (const auto& v : rep.violations)
    j["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return j;
}

/// Report written to stdout; json mode dumps the object, text mode prints
/// "key: value" lines in key order plus one line per annotation.
struct Report {
  std::string command;
  Json payload = Json::object();
  std::vector<std::string> annotations;
  int status = 0;

  void emit(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      Json j;
      j["command"] = command;
      j["result"] = payload;
      j["annotations"] = annotations;
      j["status"] = status;
      out << j.dump(2) << "\n";
      return;
    }
    out << "command: " << command << "\n";
    for (auto it = payload.begin(); it != payload.end(); ++it)
      out << it.key() << ": "
          << (it.value().is_string() ? it.value().get<std::string>()
                                     : it.value().dump())
          << "\n";
    for (const auto& a : annotations) out << "note: " << a << "\n";
    out << "status: " << status << "\n";
  }
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Malformed("cannot open descriptor file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) out.push_back(Rat::parse(cur));
  return out;
}

inline std::vector<int> parse_int_list(const std::string& text, char sep) {
  std::vector<int> out;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep))
    if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

inline Component parse_component(const std::string& s) {
  if (s == "Zo") return Component::Zo;
  if (s == "Qo") return Component::Qo;
  if (s == "Q") return Component::Q;
  if (s == "0") return Component::Zero;
  throw Malformed("unknown component '" + s + "' (want Zo, Qo, Q or 0)");
}

inline const FiniteMagma& as_magma(const RealizedStructure& r) {
  if (r.any && std::holds_alternative<MagmaStructure>(*r.any))
    return std::get<MagmaStructure>(*r.any).magma;
  throw ClassMismatch("this command needs a one-operation finite structure");
}

inline const FiniteRingTable& as_ring(const RealizedStructure& r) {
  if (r.any && std::holds_alternative<RingStructure>(*r.any))
    return std::get<RingStructure>(*r.any).table;
  throw ClassMismatch("this command needs a two-operation finite structure");
}

// ---------------------------------------------------------------- verify

inline Report cmd_verify(const std::string& in, const std::string& cls) {
  Report rep;
  rep.command = "verify";
  RealizedStructure s = realize(parse_descriptor(slurp(in)));
  AxiomReport ax{cls};
  if (cls == "semigroup") ax = check_semigroup(as_magma(s));
  else if (cls == "monoid") ax = check_monoid(as_magma(s));
  else if (cls == "group") ax = check_group(as_magma(s));
  else if (cls == "commutative-group") {
    ax = check_group(as_magma(s));
    for (const auto& v : check_commutative(as_magma(s)).violations)
      ax.add(v.axiom, v.witness);
  } else if (cls == "ring") ax = check_ring(as_ring(s));
  else if (cls == "commutative-ring") ax = check_commutative_ring(as_ring(s));
  else if (cls == "semiring") ax = check_semiring(as_ring(s));
  else if (cls == "semifield") ax = check_semifield(as_ring(s));
  else if (cls == "field") ax = check_field(as_ring(s));
  else if (cls == "near-ring") ax = check_near_ring(as_ring(s));
  else if (cls == "seminear-ring") ax = check_seminear_ring(as_ring(s));
  else throw Malformed("unknown class '" + cls + "'");
  rep.payload = json_of(ax);
  rep.status = ax.ok() ? 0 : 1;
  return rep;
}

// ---------------------------------------------------------------- detect

inline Report cmd_detect(const std::string& in, const std::string& prop_name,
                         const std::string& mode_name, bool include_trivial) {
  Report rep;
  rep.command = "detect";
  RealizedStructure s = realize(parse_descriptor(slurp(in)));
  if (!s.any)
    throw ClassMismatch("detect needs a finite table or symbolic structure");
  auto prop = property_from_name(prop_name);
  if (!prop) throw Malformed("unknown property '" + prop_name + "'");
  if (*prop == Property::StronglyCommutativeSSDG) {
    StronglyCommutativeResult r = detect_strongly_commutative(*s.any);
    using V = StronglyCommutativeResult::Verdict;
    rep.payload["verdict"] =
        r.verdict == V::True ? "true"
        : r.verdict == V::False ? "false"
        : r.verdict == V::NoSemigroupSubsets ? "no-semigroup-subsets"
                                             : "unknown";
    if (!r.counterexample.empty()) rep.payload["counterexample"] = r.counterexample;
    rep.status = r.verdict == V::True ? 0 : 1;
    return rep;
  }
  DetectMode mode =
      mode_name == "catalog" ? DetectMode::Catalog : DetectMode::Exhaustive;
  if (std::holds_alternative<SymbolicName>(*s.any)) mode = DetectMode::Catalog;
  DetectOptions opt;
  opt.include_trivial = include_trivial;
  DetectResult r = detect(*s.any, *prop, mode, opt);
  rep.payload["found"] = r.found();
  rep.payload["exhaustive"] = r.found() ? r.certificate->exhaustive : r.exhaustive;
  if (r.found()) rep.payload["certificate"] = json_of(*r.certificate);
  rep.status = r.found() ? 0 : 1;
  return rep;
}

// ---------------------------------------------------------------- ideals

inline Report cmd_ideals(const std::string& in, long long nz, bool classify,
                         bool s_ideal, const std::string& field_subset) {
  Report rep;
  rep.command = "ideals";
  if (nz > 0) {
    rep.payload["ideal"] = std::to_string(nz) + "Z";
    rep.payload["classification"] = json_of(classify_nZ(nz));
    return rep;
  }
  RealizedStructure s = realize(parse_descriptor(slurp(in)));
  const FiniteRingTable& r = as_ring(s);
  if (s_ideal) {
    auto w = find_s_ideal(r);
    rep.payload["found"] = w.has_value();
    if (w) {
      rep.payload["ideal"] = detectdetail::subset_text(r.labels, w->ideal);
      rep.payload["field_subset"] =
          detectdetail::subset_text(r.labels, w->field_subset);
    }
    rep.status = w ? 0 : 1;
    return rep;
  }
  if (!field_subset.empty()) {
    Subset b;
    for (int x : parse_int_list(field_subset, ',')) b.push_back(x);
    std::sort(b.begin(), b.end());
    Json arr = Json::array();
    for (const auto& w : find_s_definite_ideals(r, b))
      arr.push_back(detectdetail::subset_text(r.labels, w.ideal));
    rep.payload["reference_field"] = detectdetail::subset_text(r.labels, b);
    rep.payload["ideals"] = arr;
    rep.status = arr.empty() ? 1 : 0;
    return rep;
  }
  auto ideals = enumerate_ideals(r);
  Json arr = Json::array();
  for (const Subset& i : ideals) {
    Json e;
    e["elements"] = detectdetail::subset_text(r.labels, i);
    if (classify) e["classification"] = json_of(classify_ideal(r, i));
    arr.push_back(e);
  }
  rep.payload["count"] = ideals.size();
  rep.payload["ideals"] = arr;
  return rep;
}

// ----------------------------------------------------- coset / dcoset / product

inline Report cmd_coset(const std::string& a, const std::string& h,
                        const std::string& ambient) {
  Report rep;
  rep.command = "coset";
  LatticeSet H = LatticeSet::parse(h);
  SymbolicAmbient amb = ambient == "add" ? SymbolicAmbient::QAdd
                                         : SymbolicAmbient::QNonZeroMul;
  LatticeSet res = left_coset(Rat::parse(a), H, amb);
  rep.payload["coset"] = res.str();
  rep.payload["subset_of_H"] = subset_of(res, H);
  rep.payload["superset_of_H"] = subset_of(H, res);
  return rep;
}

inline Report cmd_dcoset(const std::string& h, const std::string& x,
                         const std::string& k) {
  Report rep;
  rep.command = "dcoset";
  LatticeSet H = LatticeSet::parse(h), K = LatticeSet::parse(k);
  Rat xv = Rat::parse(x);
  LatticeSet res = double_coset(H, xv, K);
  rep.payload["double_coset"] = res.str();
  rep.payload["closed_under_mul"] = is_closed_mul(res);
  auto meet = intersect(res, H);
  rep.payload["intersection_with_H"] = meet ? meet->str() : "empty";
  if (res.is_lattice() && res.scale().is_integer()) {
    // the result is the full lattice {h*x*k}: every multiple of the scale
    // with an admissible sign occurs, not only products of small h, k
    std::string q = res.scale().str();
    rep.annotations.push_back(
        "the double coset is a complete lattice: " + q + "*1, " + q + "*2, " +
        q + "*3, ... (with the indicated signs) all arise as h*x*k products;"
        " any finite listing that skips one of them is incomplete");
  }
  return rep;
}

inline Report cmd_product(const std::string& a, const std::string& b,
                          const std::string& op) {
  Report rep;
  rep.command = "product";
  LatticeSet A = LatticeSet::parse(a), B = LatticeSet::parse(b);
  if (op == "product") {
    LatticeSet res = set_product(A, B);
    rep.payload["product"] = res.str();
    rep.payload["closed_under_mul"] = is_closed_mul(res);
  } else if (op == "intersect") {
    auto res = intersect(A, B);
    rep.payload["intersection"] = res ? res->str() : "empty";
  } else if (op == "subset") {
    bool sub = subset_of(A, B);
    rep.payload["subset"] = sub;
    rep.status = sub ? 0 : 1;
  } else if (op == "closure") {
    rep.payload["closed_under_mul"] = is_closed_mul(A);
    rep.payload["closed_under_add"] = is_closed_add(A);
  } else {
    throw Malformed("unknown set op '" + op + "'");
  }
  return rep;
}

// -------------------------------------------------------------- quotient

inline Report cmd_quotient(int p, const std::string& modulus,
                           const std::string& invert) {
  Report rep;
  rep.command = "quotient";
  PolyZp f;
  for (int c : parse_int_list(modulus, ',')) f.push_back(c);
  PolyModRing ring(p, f);
  rep.payload["p"] = ring.p();
  rep.payload["modulus"] = poly_to_string(ring.modulus());
  rep.payload["element_count"] = ring.element_count();
  auto [irred, factors] = is_irreducible(p, ring.modulus());
  rep.payload["irreducible"] = irred;
  if (!irred) {
    rep.payload["factor_pair"] = {poly_to_string(factors->first),
                                  poly_to_string(factors->second)};
  }
  auto [field, zdiv] = quotient_is_field(ring);
  rep.payload["is_field"] = field;
  if (!field)
    rep.payload["zero_divisor_pair"] = {poly_to_string(zdiv->first),
                                        poly_to_string(zdiv->second)};
  if (!invert.empty()) {
    PolyZp e;
    for (int c : parse_int_list(invert, ',')) e.push_back(c);
    auto inv = ring.inverse(e);
    rep.payload["inverse_of"] = poly_to_string(ring.reduce(e));
    rep.payload["inverse"] = inv ? poly_to_string(*inv) : "none";
    if (!inv) rep.status = 1;
  }
  if (p == 3 && ring.modulus() == PolyZp{1, 0, 0, 0, 1}) {
    rep.annotations.push_back(
        "x^4+1 is reducible over Z_3: (x^2+x+2)(x^2+2x+2) = x^4+1, so the "
        "quotient has zero divisors and is not a field; individual units "
        "such as 2x^2 (inverse x^2) still exist");
  }
  return rep;
}

// ------------------------------------------------------ basis / innerprod

inline SemiVecDescriptor parse_space(const std::string& components,
                                     const std::string& scalars) {
  SemiVecDescriptor w;
  std::string cur;
  std::istringstream ss(components);
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) w.components.push_back(parse_component(cur));
  if (scalars == "Qo") w.scalars = SemiField::Qo;
  else if (scalars == "Zo") w.scalars = SemiField::Zo;
  else throw Malformed("scalars must be Zo or Qo");
  return w;
}

inline std::vector<VecQ> parse_vectors(const std::string& text) {
  std::vector<VecQ> out;
  std::string row;
  std::istringstream ss(text);
  while (std::getline(ss, row, ';'))
    if (!row.empty()) out.push_back(parse_rat_list(row));
  return out;
}

inline Report cmd_basis(const std::string& components, const std::string& scalars,
                        const std::string& vectors, bool dimension,
                        unsigned seed) {
  Report rep;
  rep.command = "basis";
  SemiVecDescriptor w = parse_space(components, scalars);
  auto [space_ok, space_rep] = is_semivector_space(w, 500, seed);
  rep.payload["semivector_space"] = space_ok;
  if (!space_ok) rep.payload["space_audit"] = json_of(space_rep);
  if (dimension) {
    auto d = s_definite_dimension(w.dim(), {w});
    rep.payload["dimension"] = d ? Json(*d) : Json("none");
    rep.status = d ? 0 : 1;
    return rep;
  }
  std::vector<VecQ> basis = parse_vectors(vectors);
  bool ok = is_s_definite_basis(basis, w.dim(), w);
  rep.payload["basis"] = ok;
  rep.status = ok ? 0 : 1;
  return rep;
}

inline Report cmd_innerprod(const std::string& components,
                            const std::string& scalars, const std::string& x,
                            const std::string& y, bool audit, unsigned seed) {
  Report rep;
  rep.command = "innerprod";
  SemiVecDescriptor w = parse_space(components, scalars);
  VecQ xv = parse_rat_list(x), yv = parse_rat_list(y);
  Rat val = inner_product(xv, yv, w);
  rep.payload["value"] = val.str();
  if (audit)
    rep.payload["audit"] =
        json_of(inner_product_audit(w, std::nullopt, 300, seed));
  bool dense = false;
  for (Component c : w.components)
    if (c == Component::Q) dense = true;
  if (!dense) {
    rep.annotations.push_back(
        "over nonnegative components the inner product of nonzero vectors "
        "vanishes exactly when their supports are disjoint; in particular "
        "no nonzero vector is orthogonal to itself");
  }
  return rep;
}

// ------------------------------------------------------------- automaton

inline Report cmd_automaton(int states, const std::string& inputs,
                            int start, const std::string& word,
                            const std::string& generators, int freeness_bound) {
  Report rep;
  rep.command = "automaton";
  if (!generators.empty()) {
    std::vector<std::vector<long long>> gens;
    std::string row;
    std::istringstream ss(generators);
    while (std::getline(ss, row, ';')) {
      std::vector<long long> g;
      for (int v : parse_int_list(row, ',')) g.push_back(v);
      if (!g.empty()) gens.push_back(std::move(g));
    }
    FreenessResult fr = freeness_check(gens, freeness_bound);
    rep.payload["free_within_bound"] = fr.free;
    rep.payload["bound"] = fr.bound;
    if (!fr.free) {
      rep.payload["multiset_a"] = fr.multiset_a;
      rep.payload["multiset_b"] = fr.multiset_b;
      rep.payload["collision_sum"] = fr.sum;
      rep.status = 1;
    }
    return rep;
  }
  std::vector<long long> p;
  for (int v : parse_int_list(inputs, ',')) p.push_back(v);
  SemiAutomaton sa = build_semiautomaton_add_mod(states, p);
  std::vector<int> letters;
  {
    std::istringstream ss(word);
    int v;
    while (ss >> v) letters.push_back(v);
  }
  std::vector<ElementId> trace = run(sa, start, letters);
  rep.payload["states"] = states;
  rep.payload["trace"] = trace;
  return rep;
}

// ----------------------------------------------------------------- sweep

inline Report cmd_sweep(const std::string& conjecture, const std::string& family,
                        int max_size) {
  Report rep;
  rep.command = "sweep";
  SweepFamily fam;
  if (family == "cyclic") fam = SweepFamily::Cyclic;
  else if (family == "dihedral") fam = SweepFamily::Dihedral;
  else if (family == "symmetric") fam = SweepFamily::Symmetric;
  else if (family == "zn-rings") fam = SweepFamily::ZnRings;
  else if (family == "zp-fields") fam = SweepFamily::ZpFields;
  else if (family == "zn-near-rings") fam = SweepFamily::ZnNearRings;
  else if (family == "poly-quotients") fam = SweepFamily::PolyQuotients;
  else throw Malformed("unknown family '" + family + "'");
  SweepReport sr = sweep(conjecture, fam, max_size);
  rep.payload["conjecture"] = sr.conjecture;
  rep.payload["family"] = sr.family;
  rep.payload["sizes_checked"] = sr.sizes.size();
  rep.payload["witness_count"] = sr.witness_count;
  Json arr = Json::array();
  for (const auto& c : sr.counterexamples) arr.push_back(json_of(c));
  rep.payload["counterexamples"] = arr;
  // nonexistence is the success condition here
  rep.status = sr.witness_count == 0 ? 0 : 1;
  return rep;
}

}  // namespace cli

/// Entry point shared by the binary and the end-to-end tests.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err = std::cerr) {
  CLI::App app{"finite and symbolic algebraic structure toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized audits");

  std::string in, cls = "group", prop, mode = "exhaustive";
  bool include_trivial = false;
  auto* verify = app.add_subcommand("verify", "check axioms of a structure");
  verify->add_option("--in", in)->required();
  verify->add_option("--class", cls)->required();

  auto* detect_cmd = app.add_subcommand("detect", "detect an s-property");
  detect_cmd->add_option("--in", in)->required();
  detect_cmd->add_option("--property", prop)->required();
  detect_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"exhaustive", "catalog"}));
  detect_cmd->add_flag("--include-trivial", include_trivial);

  long long nz = 0;
  bool classify = false, s_ideal = false;
  std::string field_subset;
  auto* ideals_cmd = app.add_subcommand("ideals", "enumerate and classify ideals");
  ideals_cmd->add_option("--in", in);
  ideals_cmd->add_option("--nz", nz, "classify the ideal nZ of Z");
  ideals_cmd->add_flag("--classify", classify);
  ideals_cmd->add_flag("--s-ideal", s_ideal);
  ideals_cmd->add_option("--field-subset", field_subset,
                         "comma-separated field subset for relative ideals");

  std::string a, H, K, x, ambient = "mul", setop = "product";
  auto* coset = app.add_subcommand("coset", "left coset of a symbolic set");
  coset->add_option("--a", a)->required();
  coset->add_option("--H", H)->required();
  coset->add_option("--ambient", ambient)->check(CLI::IsMember({"mul", "add"}));

  auto* dcoset = app.add_subcommand("dcoset", "double coset HxK");
  dcoset->add_option("--H", H)->required();
  dcoset->add_option("--x", x)->required();
  dcoset->add_option("--K", K)->required();

  auto* product = app.add_subcommand("product", "symbolic set algebra");
  product->add_option("--A", a)->required();
  product->add_option("--B", H);
  product->add_option("--op", setop)
      ->check(CLI::IsMember({"product", "intersect", "subset", "closure"}));

  int p = 2;
  std::string modulus, invert;
  auto* quotient = app.add_subcommand("quotient", "polynomial quotient ring");
  quotient->add_option("--p", p)->required();
  quotient->add_option("--modulus", modulus, "coefficients, constant term first")
      ->required();
  quotient->add_option("--invert", invert, "element to invert, same format");

  std::string components, scalars = "Zo", vectors, yvec;
  bool dimension = false, audit = false;
  auto* basis = app.add_subcommand("basis", "semivector-space basis check");
  basis->add_option("--components", components)->required();
  basis->add_option("--scalars", scalars);
  basis->add_option("--vectors", vectors, "rows 'a,b,c;d,e,f'");
  basis->add_flag("--dimension", dimension);

  auto* innerprod = app.add_subcommand("innerprod", "inner product over the space");
  innerprod->add_option("--components", components)->required();
  innerprod->add_option("--scalars", scalars);
  innerprod->add_option("--x", vectors)->required();
  innerprod->add_option("--y", yvec)->required();
  innerprod->add_flag("--audit", audit);

  int states = 1, start = 0, freeness_bound = 12;
  std::string inputs, word, generators;
  auto* automaton = app.add_subcommand("automaton", "run a semiautomaton");
  automaton->add_option("--states", states);
  automaton->add_option("--inputs", inputs, "comma-separated input values");
  automaton->add_option("--start", start);
  automaton->add_option("--word", word, "space-separated letter indices");
  automaton->add_option("--generators", generators,
                        "freeness check generators 'a,b;c,d'");
  automaton->add_option("--freeness-bound", freeness_bound);

  std::string conjecture, family;
  int max_size = 16;
  auto* sweep_cmd = app.add_subcommand("sweep", "finiteness conjecture sweep");
  sweep_cmd->add_option("--conjecture", conjecture)->required();
  sweep_cmd->add_option("--family", family)->required();
  sweep_cmd->add_option("--max", max_size)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    cli::Report rep;
    if (*verify) rep = cli::cmd_verify(in, cls);
    else if (*detect_cmd) rep = cli::cmd_detect(in, prop, mode, include_trivial);
    else if (*ideals_cmd) rep = cli::cmd_ideals(in, nz, classify, s_ideal, field_subset);
    else if (*coset) rep = cli::cmd_coset(a, H, ambient);
    else if (*dcoset) rep = cli::cmd_dcoset(H, x, K);
    else if (*product) rep = cli::cmd_product(a, H, setop);
    else if (*quotient) rep = cli::cmd_quotient(p, modulus, invert);
    else if (*basis) rep = cli::cmd_basis(components, scalars, vectors, dimension, seed);
    else if (*innerprod) rep = cli::cmd_innerprod(components, scalars, vectors, yvec, audit, seed);
    else if (*automaton) rep = cli::cmd_automaton(states, inputs, start, word, generators, freeness_bound);
    else if (*sweep_cmd) rep = cli::cmd_sweep(conjecture, family, max_size);
    else {
      err << "no subcommand\n";
      return 2;
    }
    rep.emit(out, format);
    return rep.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace smalg

#endif  // SMALG_CLI_APP_HPP
