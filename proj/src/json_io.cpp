#include "superroot/json_io.hpp"

#include <fstream>
#include <sstream>

namespace superroot {

namespace {

const Integer kExactLimit = Integer(1) << 53;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

std::vector<Integer> coords_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(integer_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::int64_t small_from_json(const Json& j, const std::string& path) {
  const Integer v = integer_from_json(j, path);
  if (abs(v) > kExactLimit) fail(path, "out of range");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (abs(x) <= kExactLimit) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (v == static_cast<double>(static_cast<std::int64_t>(v)) && std::abs(v) <= 9007199254740992.0) {
      return Integer(static_cast<std::int64_t>(v));
    }
    fail(path, "expected an integer");
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error&) {
      fail(path, "malformed integer string \"" + j.get<std::string>() + "\"");
    }
  }
  fail(path, "expected an integer");
}

Json weight_to_json(const Weight& w) {
  Json out = Json::array();
  for (const auto& c : w.coords()) out.push_back(integer_to_json(c));
  return out;
}

Weight weight_from_json(const Json& j, const std::string& path) { return Weight(coords_from_json(j, path)); }

Coweight coweight_from_json(const Json& j, const std::string& path) {
  return Coweight(coords_from_json(j, path));
}

Json datum_to_json(const SuperRootDatum& d) {
  Json out;
  out["rank"] = d.rank();
  out["label"] = d.label();
  Json even = Json::array();
  for (const auto& e : d.even_roots()) {
    Json coroot = Json::array();
    for (const auto& c : e.coroot.coords()) coroot.push_back(integer_to_json(c));
    even.push_back(Json{{"root", weight_to_json(e.root)}, {"coroot", coroot}});
  }
  out["even_roots"] = even;
  Json odd = Json::array();
  for (const auto& o : d.odd_roots()) odd.push_back(Json{{"root", weight_to_json(o.root)}, {"mult", o.multiplicity}});
  out["odd_roots"] = odd;
  out["h_odd_dim"] = d.h_odd_dim();
  return out;
}

SuperRootDatum datum_from_json(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  const std::int64_t rank = small_from_json(field(j, "rank", "$"), "$.rank");
  if (rank <= 0) fail("$.rank", "must be positive");
  const Json& label_json = field(j, "label", "$");
  if (!label_json.is_string()) fail("$.label", "expected a string");
  const std::string label = label_json.get<std::string>();

  std::vector<EvenRoot> even;
  const Json& even_json = field(j, "even_roots", "$");
  if (!even_json.is_array()) fail("$.even_roots", "expected an array");
  for (std::size_t i = 0; i < even_json.size(); ++i) {
    const std::string path = "$.even_roots[" + std::to_string(i) + "]";
    even.push_back({weight_from_json(field(even_json[i], "root", path), path + ".root"),
                    coweight_from_json(field(even_json[i], "coroot", path), path + ".coroot")});
  }
  std::vector<OddRoot> odd;
  const Json& odd_json = field(j, "odd_roots", "$");
  if (!odd_json.is_array()) fail("$.odd_roots", "expected an array");
  for (std::size_t i = 0; i < odd_json.size(); ++i) {
    const std::string path = "$.odd_roots[" + std::to_string(i) + "]";
    odd.push_back({weight_from_json(field(odd_json[i], "root", path), path + ".root"),
                   small_from_json(field(odd_json[i], "mult", path), path + ".mult")});
  }
  const std::int64_t h_odd = small_from_json(field(j, "h_odd_dim", "$"), "$.h_odd_dim");

  SuperRootDatum d(static_cast<std::size_t>(rank), label, std::move(even), std::move(odd), h_odd);
  const auto handle = parse_family_label(label);
  if (!handle) return d;
  std::optional<SuperRootDatum> builtin;
  try {
    switch (handle->family) {
      case Family::gl:
        builtin = build_gl(handle->m, handle->n);
        break;
      case Family::q:
        builtin = build_q(handle->n);
        break;
      case Family::p:
        builtin = build_p(handle->n);
        break;
    }
  } catch (const ParameterError& e) {
    fail("$.label", e.what());
  }
  if (builtin->rank() != d.rank() || builtin->even_roots() != d.even_roots() ||
      builtin->odd_roots() != d.odd_roots() || builtin->h_odd_dim() != d.h_odd_dim()) {
    fail("$.label", "\"" + label + "\" names a built-in family but the root data differ from it");
  }
  return *builtin;
}

SuperRootDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("$: cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("$: ") + e.what());
  }
  return datum_from_json(j);
}

Json character_to_json(const CharacterElement& c) {
  Json terms = Json::array();
  for (const auto& [w, m] : c.terms()) terms.push_back(Json{{"weight", weight_to_json(w)}, {"mult", integer_to_json(m)}});
  return Json{{"terms", terms}};
}

CharacterElement character_from_json(const Json& j) {
  const Json& terms = field(j, "terms", "$");
  if (!terms.is_array()) fail("$.terms", "expected an array");
  if (terms.empty()) fail("$.terms", "cannot infer the rank of an empty character");
  std::optional<CharacterElement> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = "$.terms[" + std::to_string(i) + "]";
    Weight w = weight_from_json(field(terms[i], "weight", path), path + ".weight");
    Integer m = integer_from_json(field(terms[i], "mult", path), path + ".mult");
    if (!out) out.emplace(w.rank());
    if (w.rank() != out->rank()) fail(path + ".weight", "rank differs from the first term");
    out->add_term(w, m);
  }
  return *out;
}

}  // namespace superroot
