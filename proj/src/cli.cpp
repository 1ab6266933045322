#include "superroot/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "superroot/clifford.hpp"
#include "superroot/hyperalg.hpp"
#include "superroot/json_io.hpp"
#include "superroot/liesuper.hpp"
#include "superroot/rootdata.hpp"
#include "superroot/steinberg.hpp"

namespace superroot::cli {

namespace {

/// Bad or missing flags; exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::optional<int> m, n;
  std::string file;
  std::string order;
  bool json = false;

  std::optional<std::int64_t> p, r;
  std::string weight;
  std::string psi_odd, psi_even;
  std::string semantics = "assisted";
  std::optional<std::int64_t> dim_module;
  std::optional<int> radius;

  std::string op;
  std::vector<std::string> chars, char_files;

  std::int64_t M = 4, N = 4, degree = 16;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Weight parse_weight(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + ": empty weight");
  std::vector<Integer> coords;
  for (const auto& part : split(text, ',')) {
    try {
      coords.push_back(parse_integer(part));
    } catch (const Error&) {
      throw UsageError(std::string(flag) + ": malformed weight \"" + text + "\"");
    }
  }
  return Weight(std::move(coords));
}

std::vector<Weight> parse_weights(const std::string& text, const char* flag) {
  std::vector<Weight> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_weight(part, flag));
  return out;
}

SuperRootDatum resolve_datum(const Options& o) {
  auto need = [](const std::optional<int>& v, const char* flag, const std::string& family) {
    if (!v) throw UsageError("--family " + family + " needs " + flag);
    return *v;
  };
  if (o.family == "gl") return build_gl(need(o.m, "--m", o.family), need(o.n, "--n", o.family));
  if (o.family == "q") return build_q(need(o.n, "--n", o.family));
  if (o.family == "p") return build_p(need(o.n, "--n", o.family));
  if (o.family == "file") {
    if (o.file.empty()) throw UsageError("--family file needs --file");
    return load_datum_file(o.file);
  }
  if (o.family.empty()) throw UsageError("--family is required");
  throw UsageError("unknown family \"" + o.family + "\"");
}

OrderFunctional resolve_order(const Options& o, const SuperRootDatum& d) {
  if (o.order.empty()) return default_order(d);
  std::vector<Rational> values;
  for (const auto& part : split(o.order, ',')) {
    try {
      values.push_back(parse_rational(part));
    } catch (const Error&) {
      throw UsageError("--order: malformed value \"" + part + "\"");
    }
  }
  if (values.size() != d.rank()) {
    throw DimensionError("--order has " + std::to_string(values.size()) + " values for a datum of rank " +
                         std::to_string(d.rank()));
  }
  OrderFunctional u(std::move(values));
  u.validate(d);
  return u;
}

LieSuperAlgebra require_algebra(const SuperRootDatum& d) {
  if (!d.lie_handle()) throw PreconditionError(d.label() + " has no built-in Lie superalgebra");
  return LieSuperAlgebra::from_handle(*d.lie_handle());
}

std::int64_t require(const std::optional<std::int64_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

Json weights_json(const std::vector<Weight>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(weight_to_json(w));
  return out;
}

Json rational_json(const Rational& q) {
  if (denominator(q) == 1) return integer_to_json(numerator(q));
  return Json(to_string(q));
}

AdmissibleBase resolve_base(const Options& o, const LieSuperAlgebra& L, const SuperRootDatum& d,
                            const OrderFunctional& u) {
  std::vector<Weight> psi_even =
      o.psi_even.empty() ? even_simple_roots(positive_system(d, u)) : parse_weights(o.psi_even, "--psi-even");
  std::vector<Weight> psi_odd = o.psi_odd.empty() ? standard_odd_base(d) : parse_weights(o.psi_odd, "--psi-odd");
  return AdmissibleBase::verify(L, d, u, std::move(psi_even), std::move(psi_odd));
}

GenerationSemantics resolve_semantics(const Options& o) {
  if (o.semantics == "assisted") return GenerationSemantics::assisted;
  if (o.semantics == "strict") return GenerationSemantics::strict;
  throw UsageError("--semantics must be strict or assisted");
}

Json unimodularity_json(const UnimodularityReport& rep) {
  Json out;
  out["verdict"] = rep.verdict;
  out["odd_root_sum"] = weight_to_json(rep.odd_root_sum);
  if (rep.modulus) out["modulus"] = integer_to_json(*rep.modulus);
  Json coords = Json::array();
  for (const auto& c : rep.per_coordinate) {
    coords.push_back(Json{{"index", c.index + 1}, {"value", integer_to_json(c.value)}, {"divides", c.divides}});
  }
  out["per_coordinate"] = coords;
  return out;
}

Json cmd_describe(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  const OrderFunctional u = resolve_order(o, d);
  const PositiveSystem ps = positive_system(d, u);
  Json out = datum_to_json(d);
  Json derived;
  derived["lie_superalgebra"] = d.lie_handle() ? Json(family_label(*d.lie_handle())) : Json(nullptr);
  derived["n_even"] = d.n_even();
  derived["n_odd"] = d.n_odd();
  Json order = Json::array();
  for (const auto& v : u.values()) order.push_back(rational_json(v));
  derived["order"] = order;
  std::vector<Weight> even_pos, odd_pos;
  for (const auto& e : ps.even_pos) even_pos.push_back(e.root);
  for (const auto& e : ps.odd_pos) odd_pos.push_back(e.root);
  derived["even_positive"] = weights_json(even_pos);
  derived["odd_positive"] = weights_json(odd_pos);
  derived["even_simple"] = weights_json(even_simple_roots(ps));
  std::vector<Coweight> coroots;
  for (const auto& e : d.even_roots()) coroots.push_back(e.coroot);
  derived["x0_basis"] = weights_json(pairing_kernel(coroots, d.rank()));
  derived["may_fail_absolute_simplicity"] = may_fail_absolute_simplicity(d);
  if (!o.weight.empty()) {
    const LieSuperAlgebra L = require_algebra(d);
    const CliffordForm f = gram_form(L, parse_weight(o.weight, "--weight"), o.p.value_or(0));
    const SimpleModuleDim u_dim = u_lambda_dim_closed(f);
    Json gram = Json::array();
    for (const auto& row : f.gram) {
      Json jr = Json::array();
      for (const auto& x : row) jr.push_back(integer_to_json(x));
      gram.push_back(jr);
    }
    derived["clifford"] = Json{{"weight", weight_to_json(f.lambda)},
                               {"char_p", f.char_p},
                               {"gram", gram},
                               {"rank", u_dim.rank},
                               {"u_lambda_dim", integer_to_json(u_dim.dim)},
                               {"type", clifford_type_name(u_dim.type)}};
  }
  out["derived"] = derived;
  return out;
}

Json cmd_unimodular(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  if (o.p || o.r) {
    return unimodularity_json(is_frobenius_unimodular(d, require(o.p, "--p"), o.r.value_or(1)));
  }
  return unimodularity_json(is_unimodular_char0(d));
}

Json cmd_frobenius(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  if (o.p || o.r) {
    return unimodularity_json(is_frobenius_unimodular(d, require(o.p, "--p"), o.r.value_or(1)));
  }
  Json out;
  out["all_frobenius_unimodular"] = all_frobenius_unimodular(d);
  out["chi_r_on_torus"] = weight_to_json(chi_r_on_torus(d));
  return out;
}

Json cmd_delta(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  const OrderFunctional u = resolve_order(o, d);
  const std::int64_t p = require(o.p, "--p");
  const std::int64_t r = o.r.value_or(1);
  Json out;
  out["p"] = p;
  out["r"] = r;
  out["delta_r"] = weight_to_json(delta_r(d, u, p, r));
  return out;
}

Json cmd_dims(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  const std::int64_t p = require(o.p, "--p");
  const std::int64_t r = o.r.value_or(1);
  Json out;
  out["dim_O_Gr"] = integer_to_json(dim_O_Gr(d, p, r));
  out["pbw_count"] = integer_to_json(pbw_monomial_count(d, p, r));
  if (o.dim_module) {
    if (*o.dim_module < 0) throw ParameterError("--dim-module must be >= 0");
    const InducedDims dims = induced_dims(d, resolve_order(o, d), p, r, Integer(*o.dim_module));
    out["dim_ind"] = integer_to_json(dims.dim_ind);
    out["dim_coind"] = integer_to_json(dims.dim_coind);
  }
  return out;
}

Json cmd_admissible(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  const OrderFunctional u = resolve_order(o, d);
  const LieSuperAlgebra L = require_algebra(d);
  const std::vector<Weight> psi_even =
      o.psi_even.empty() ? even_simple_roots(positive_system(d, u)) : parse_weights(o.psi_even, "--psi-even");
  const std::vector<Weight> psi_odd =
      o.psi_odd.empty() ? standard_odd_base(d) : parse_weights(o.psi_odd, "--psi-odd");
  const AdmissibilityReport rep = check_admissible_base(L, d, u, psi_even, psi_odd, resolve_semantics(o));
  Json out;
  out["ok"] = rep.ok;
  out["semantics"] = semantics_name(rep.semantics);
  out["psi_even"] = weights_json(psi_even);
  out["psi_odd"] = weights_json(psi_odd);
  out["generation"] = rep.generation;
  out["separation"] = rep.separation;
  out["multiplicity_one"] = rep.multiplicity_one;
  out["closure_dim"] = rep.closure_dim;
  Json failures = Json::array();
  for (const auto& f : rep.failures) failures.push_back(Json{{"condition", f.condition}, {"detail", f.detail}});
  out["failures"] = failures;
  return out;
}

Json cmd_restricted(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  const OrderFunctional u = resolve_order(o, d);
  const LieSuperAlgebra L = require_algebra(d);
  const AdmissibleBase base = resolve_base(o, L, d, u);
  if (o.weight.empty()) throw UsageError("--weight is required");
  const RestrictionReport rep =
      is_restricted(d, L, base, parse_weight(o.weight, "--weight"), require(o.p, "--p"), o.r.value_or(1));
  Json out;
  out["weight"] = weight_to_json(rep.weight);
  out["p"] = rep.p;
  out["r"] = rep.r;
  out["verdict"] = rep.verdict;
  out["weakened"] = rep.weakened;
  Json roots = Json::array();
  for (const auto& c : rep.per_root) {
    roots.push_back(Json{{"alpha", weight_to_json(c.alpha)},
                         {"class", root_class_name(c.cls)},
                         {"pairing", integer_to_json(c.pairing)},
                         {"kform_value", c.kform_value ? integer_to_json(*c.kform_value) : Json(nullptr)},
                         {"bound", integer_to_json(c.bound)},
                         {"ok", c.ok}});
  }
  out["per_root"] = roots;
  return out;
}

int search_radius(const Options& o) {
  if (o.radius) return *o.radius;
  if (const char* env = std::getenv("SUPERROOT_SEARCH_RADIUS")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw ParameterError(std::string("SUPERROOT_SEARCH_RADIUS must be a non-negative integer, got \"") + env +
                         "\"");
  }
  return DecomposeOptions{}.radius;
}

Json cmd_decompose(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  const OrderFunctional u = resolve_order(o, d);
  const LieSuperAlgebra L = require_algebra(d);
  const AdmissibleBase base = resolve_base(o, L, d, u);
  if (o.weight.empty()) throw UsageError("--weight is required");
  DecomposeOptions opts;
  opts.radius = search_radius(o);
  const SteinbergDecomposition dec =
      steinberg_decompose(d, L, base, parse_weight(o.weight, "--weight"), require(o.p, "--p"), opts);
  Json out;
  out["digits"] = weights_json(dec.digits);
  if (!dec.flatness_checked) out["flatness"] = "unchecked";
  return out;
}

CharacterElement parse_character(const std::string& text) {
  std::optional<CharacterElement> out;
  for (const auto& term : split(text, ';')) {
    const auto colon = term.find(':');
    const Weight w = parse_weight(term.substr(0, colon), "--char");
    Integer mult = 1;
    if (colon != std::string::npos) {
      try {
        mult = parse_integer(term.substr(colon + 1));
      } catch (const Error&) {
        throw UsageError("--char: malformed multiplicity in \"" + term + "\"");
      }
    }
    if (!out) out.emplace(w.rank());
    out->add_term(w, mult);
  }
  if (!out) throw UsageError("--char: empty character");
  return *out;
}

std::vector<CharacterElement> resolve_characters(const Options& o) {
  if (!o.chars.empty() && !o.char_files.empty()) throw UsageError("use either --char or --char-file, not both");
  std::vector<CharacterElement> out;
  for (const auto& c : o.chars) out.push_back(parse_character(c));
  for (const auto& path : o.char_files) {
    std::ifstream in(path);
    if (!in) throw ValidationError("$: cannot open " + path);
    try {
      out.push_back(character_from_json(Json::parse(in)));
    } catch (const Json::parse_error& e) {
      throw ValidationError(std::string("$: ") + e.what());
    }
  }
  if (out.empty()) throw UsageError("char needs --char or --char-file");
  return out;
}

Json cmd_char(const Options& o) {
  const std::vector<CharacterElement> chars = resolve_characters(o);
  auto single = [&]() -> const CharacterElement& {
    if (chars.size() != 1) throw UsageError("--op " + o.op + " takes exactly one character");
    return chars.front();
  };
  if (o.op == "show") return character_to_json(single());
  if (o.op == "add" || o.op == "mul") {
    CharacterElement acc = chars.front();
    for (std::size_t i = 1; i < chars.size(); ++i) {
      acc = o.op == "add" ? char_add(acc, chars[i]) : char_mul(acc, chars[i]);
    }
    return character_to_json(acc);
  }
  if (o.op == "twist") return character_to_json(frobenius_twist(single(), require(o.p, "--p"), o.r.value_or(1)));
  if (o.op == "steinberg") return character_to_json(steinberg_character(chars, require(o.p, "--p")));
  if (o.op == "max") {
    const CharacterElement& c = single();
    OrderFunctional u;
    if (!o.family.empty()) {
      u = resolve_order(o, resolve_datum(o));
    } else {
      if (o.order.empty()) throw UsageError("--op max needs --order or a datum");
      std::vector<Rational> values;
      for (const auto& part : split(o.order, ',')) {
        try {
          values.push_back(parse_rational(part));
        } catch (const Error&) {
          throw UsageError("--order: malformed value \"" + part + "\"");
        }
      }
      u = OrderFunctional(std::move(values));
    }
    if (u.rank() != c.rank()) throw DimensionError("order and character ranks differ");
    Json terms = Json::array();
    for (const auto& [w, m] : upsilon_max_terms(c, u)) {
      terms.push_back(Json{{"weight", weight_to_json(w)}, {"mult", integer_to_json(m)}});
    }
    return Json{{"terms", terms}};
  }
  throw UsageError("--op must be one of show, add, mul, twist, steinberg, max");
}

Json poly_json(const Poly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f) out.push_back(Json{{"x", e.first}, {"y", e.second}, {"coeff", integer_to_json(c)}});
  return out;
}

Json cmd_verify_commutator(const Options& o) {
  const CommutatorReport rep = verify_commutator_formula(o.M, o.N, o.degree, o.p.value_or(0));
  Json out;
  out["ok"] = rep.ok;
  out["p"] = rep.p;
  out["cases"] = rep.cases;
  if (rep.counterexample) {
    const auto& c = *rep.counterexample;
    out["counterexample"] = Json{{"m", c.m}, {"n", c.n}, {"a", c.a}, {"b", c.b},
                                 {"lhs", poly_json(c.lhs)}, {"rhs", poly_json(c.rhs)}};
  }
  return out;
}

Json cmd_flatcheck(const Options& o) {
  const SuperRootDatum d = resolve_datum(o);
  const OrderFunctional u = resolve_order(o, d);
  if (o.weight.empty()) throw UsageError("--weight is required");
  const Weight w = parse_weight(o.weight, "--weight");
  const std::int64_t p = o.p.value_or(0);
  Json out;
  out["weight"] = weight_to_json(w);
  out["p"] = p;
  out["flat"] = is_flat(d, p, w);
  out["dominant"] = is_dominant(d, u, w);
  return out;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_table(const Json& j, std::ostream& out, const std::string& indent = "") {
  std::size_t width = 0;
  for (const auto& [key, value] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && !value.empty()) {
      out << indent << key << ":\n";
      render_table(value, out, indent + "  ");
      continue;
    }
    const bool rows = value.is_array() && !value.empty() && value.front().is_object();
    if (!rows) {
      out << indent << key << std::string(width - key.size() + 2, ' ') << cell(value) << "\n";
      continue;
    }
    out << indent << key << ":\n";
    std::vector<std::string> cols;
    for (const auto& [k, v] : value.front().items()) cols.push_back(k);
    std::vector<std::size_t> widths;
    for (const auto& c : cols) widths.push_back(c.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : value) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        line.push_back(row.contains(cols[i]) ? cell(row[cols[i]]) : "");
        widths[i] = std::max(widths[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      std::string s = indent + " ";
      for (std::size_t i = 0; i < line.size(); ++i) {
        s += " " + line[i];
        if (i + 1 < line.size()) s += std::string(widths[i] - line[i].size() + 1, ' ');
      }
      out << s << "\n";
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
  }
}

void add_datum_options(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "gl, q, p or file");
  sub->add_option("--m", o.m, "even block size for gl");
  sub->add_option("--n", o.n, "odd block size for gl, size for q and p");
  sub->add_option("--file", o.file, "root datum JSON file (with --family file)");
  sub->add_option("--order", o.order, "order functional values v1,v2,... (rationals)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Root data of split quasireductive supergroups", "superroot"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "machine-readable output");
  app.fallthrough();

  using Handler = Json (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto verb = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    verbs.emplace_back(sub, h);
    return sub;
  };

  auto* describe = verb("describe", "root datum, positive system and derived data", cmd_describe);
  add_datum_options(describe, o);
  describe->add_option("--weight", o.weight, "weight for the Clifford form on h_odd");
  describe->add_option("--p", o.p, "characteristic for the Clifford form (0 or an odd prime)");

  auto* unimodular = verb("unimodular", "unimodularity in characteristic 0, or of G_r with --p/--r", cmd_unimodular);
  add_datum_options(unimodular, o);
  unimodular->add_option("--p", o.p, "odd prime");
  unimodular->add_option("--r", o.r, "Frobenius kernel height");

  auto* frobenius = verb("frobenius", "Frobenius kernel unimodularity", cmd_frobenius);
  add_datum_options(frobenius, o);
  frobenius->add_option("--p", o.p, "odd prime");
  frobenius->add_option("--r", o.r, "Frobenius kernel height");

  auto* delta = verb("delta", "delta_r restricted to the torus", cmd_delta);
  add_datum_options(delta, o);
  delta->add_option("--p", o.p, "odd prime");
  delta->add_option("--r", o.r, "Frobenius kernel height (default 1)");

  auto* dims = verb("dims", "dim O(G_r), PBW count and induced module dimensions", cmd_dims);
  add_datum_options(dims, o);
  dims->add_option("--p", o.p, "odd prime");
  dims->add_option("--r", o.r, "Frobenius kernel height (default 1)");
  dims->add_option("--dim-module", o.dim_module, "dim N for induced/coinduced dimensions");

  auto* admissible = verb("admissible", "check an admissible base", cmd_admissible);
  add_datum_options(admissible, o);
  admissible->add_option("--psi-odd", o.psi_odd, "odd base, weights separated by ';'");
  admissible->add_option("--psi-even", o.psi_even, "even simple roots (default: computed)");
  admissible->add_option("--semantics", o.semantics, "strict or assisted (default)");

  auto* restricted = verb("restricted", "p^r-restriction of a weight", cmd_restricted);
  add_datum_options(restricted, o);
  restricted->add_option("--weight", o.weight, "weight c1,c2,...");
  restricted->add_option("--p", o.p, "odd prime");
  restricted->add_option("--r", o.r, "height (default 1)");
  restricted->add_option("--psi-odd", o.psi_odd, "odd base (default: standard for the family)");

  auto* decompose = verb("decompose", "Steinberg decomposition of a weight", cmd_decompose);
  add_datum_options(decompose, o);
  decompose->add_option("--weight", o.weight, "weight c1,c2,...");
  decompose->add_option("--p", o.p, "odd prime");
  decompose->add_option("--psi-odd", o.psi_odd, "odd base (default: standard for the family)");
  decompose->add_option("--radius", o.radius, "digit search radius (default SUPERROOT_SEARCH_RADIUS or 2)");

  auto* chr = verb("char", "character ring operations", cmd_char);
  add_datum_options(chr, o);
  chr->add_option("--op", o.op, "show, add, mul, twist, steinberg or max")->required();
  chr->add_option("--char", o.chars, "character as w:mult;w:mult with w = c1,c2,...");
  chr->add_option("--char-file", o.char_files, "character JSON file");
  chr->add_option("--p", o.p, "prime for twist/steinberg");
  chr->add_option("--r", o.r, "twist exponent (default 1)");

  auto* commutator = verb("verify-commutator", "check the divided-power commutator formula", cmd_verify_commutator);
  commutator->add_option("--M", o.M, "largest raising exponent (default 4)");
  commutator->add_option("--N", o.N, "largest lowering exponent (default 4)");
  commutator->add_option("--degree", o.degree, "largest total degree (default 16)");
  commutator->add_option("--p", o.p, "0 or an odd prime (default 0)");

  auto* flat = verb("flatcheck", "flatness and dominance of a weight", cmd_flatcheck);
  add_datum_options(flat, o);
  flat->add_option("--weight", o.weight, "weight c1,c2,...");
  flat->add_option("--p", o.p, "0 or an odd prime (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, handler] : verbs) {
      if (!sub->parsed()) continue;
      const Json result = handler(o);
      if (o.json) {
        out << result.dump() << "\n";
      } else {
        render_table(result, out);
      }
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    Json obj{{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* f = dynamic_cast<const DecompositionFailure*>(&e)) obj["frontier"] = f->frontier();
    if (o.json) {
      out << Json{{"error", obj}}.dump() << "\n";
    } else {
      err << "error (" << e.kind() << "): " << e.what() << "\n";
    }
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"superroot"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace superroot::cli
