#include "weil/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "weil/ring_ops.hpp"

namespace weil {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kSections{"algebras", "homs", "carve_maps", "smooth_maps", "points", "fields", "forms"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

/// Splits at every top-level occurrence of `sep`.
std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0, depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (depth == 0 && s.compare(i, sep.size(), sep) == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + sep.size();
      i = start - 1;
      continue;
    }
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && depth) --depth;
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

std::optional<std::size_t> exponent_suffix(const std::string& s, const std::string& head) {
  if (s == head) return 1;
  if (s.size() <= head.size() + 1 || s.compare(0, head.size() + 1, head + "^") != 0) return std::nullopt;
  const std::string digits = s.substr(head.size() + 1);
  if (digits.empty() || digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  return std::stoul(digits);
}

template <class Lookup>
algebra parse_reference(const std::string& ref, const Lookup& lookup) {
  const auto tensors = split(ref, "(x)");
  if (tensors.size() > 1) {
    algebra a = parse_reference(tensors[0], lookup);
    for (std::size_t i = 1; i < tensors.size(); ++i) a = tensor(a, parse_reference(tensors[i], lookup));
    return a;
  }
  const auto factors = split(ref, " x ");
  if (factors.size() > 1) {
    carved_space s(parse_reference(factors[0], lookup));
    for (std::size_t i = 1; i < factors.size(); ++i) s = space_product(s, carved_space(parse_reference(factors[i], lookup)));
    return s.algebra_of();
  }
  const std::string atom = trim(ref);
  if (auto a = lookup(atom)) return *a;
  if (atom == "k") return algebra();
  if (atom == "D(2)") return space_D2().algebra_of();
  if (atom.size() > 2 && atom.front() == '(' && atom.back() == ')') return parse_reference(atom.substr(1, atom.size() - 2), lookup);
  if (auto n = exponent_suffix(atom, "D")) return space_D(*n).algebra_of();
  if (auto n = exponent_suffix(atom, "R")) return space_R(*n).algebra_of();
  throw unknown_name("unknown algebra '" + atom + "'");
}

monomial parse_relation(const json& r, const std::vector<std::string>& gens) {
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == name) return i;
    throw unknown_name("relation mentions unknown generator '" + name + "'");
  };
  monomial m(gens.size());
  if (r.is_object()) {
    for (const auto& [name, e] : r.items()) {
      if (!e.is_number_unsigned()) throw document_error("", "exponent of " + name + " must be a non-negative integer");
      m[index(name)] += e.get<std::uint32_t>();
    }
    return m;
  }
  if (!r.is_string()) throw document_error("", "relation must be an exponent map or a monomial string");
  for (const auto& factor : split(r.get<std::string>(), "*")) {
    const auto caret = factor.find('^');
    const std::string name = trim(factor.substr(0, caret));
    std::uint32_t e = 1;
    if (caret != std::string::npos) {
      const std::string digits = trim(factor.substr(caret + 1));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw document_error("", "bad exponent in relation '" + r.get<std::string>() + "'");
      e = static_cast<std::uint32_t>(std::stoul(digits));
    }
    m[index(name)] += e;
  }
  return m;
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw document_error(path, "missing field '" + key + "'");
  return obj.at(key);
}

std::string string_at(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_string()) throw document_error(child(path, key), "expected a string");
  return v.get<std::string>();
}

std::size_t count_at(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_number_unsigned()) throw document_error(child(path, key), "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::vector<std::string> strings_at(const json& obj, const std::string& key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_array()) throw document_error(child(path, key), "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw document_error(child(child(path, key), i), "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

/// Runs `f`, relabelling library input errors with the document path.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const document_error& e) {
    if (e.path().empty()) throw document_error(path, std::string(e.what()).substr(2));
    throw;
  } catch (const relation_violated&) {
    throw;
  } catch (const error& e) {
    throw document_error(path, e.what());
  }
}

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

algebra builtin_algebra(const std::string& ref) {
  return parse_reference(ref, [](const std::string&) -> std::optional<algebra> { return std::nullopt; });
}

document document::parse(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // Keep only nlohmann's reason, not its own position prefix.
    std::string reason = e.what();
    if (auto at = reason.find("syntax error"); at != std::string::npos) reason = reason.substr(at);
    if (auto at = reason.rfind(" at column"); at != std::string::npos) reason.erase(at);
    throw parse_error("invalid JSON (" + position(text, e.byte ? e.byte - 1 : 0) + "): " + reason, e.byte ? e.byte - 1 : 0);
  }
  if (!root.is_object()) throw document_error("", "document must be a JSON object");
  document doc;
  for (const auto& [key, value] : root.items()) {
    if (key == "version") {
      if (!(value.is_number_unsigned() && value.get<unsigned>() == 1)) throw document_error("/version", "unsupported version (expected 1)");
      continue;
    }
    if (std::find(kSections.begin(), kSections.end(), key) == kSections.end())
      throw document_error("/" + key, "unknown section");
    if (!value.is_object()) throw document_error("/" + key, "section must be an object of named items");
    auto& order = doc.order_[key];
    for (const auto& [name, v] : value.items()) {
      if (name.empty()) throw document_error("/" + key, "empty name");
      order.push_back(name);
      doc.sections_[key][name] = item{"/" + key + "/" + name, v.dump()};
    }
  }
  // Algebras are resolved eagerly, in document order, so later ones may
  // refer to earlier ones.
  for (const auto& name : doc.names("algebras")) {
    const item& it = doc.find("algebras", name);
    const json v = json::parse(it.json);
    doc.algebras_.emplace(name, located(it.path, [&] {
      if (v.is_string()) return doc.algebra_named(v.get<std::string>());
      const auto gens = strings_at(v, "generators", it.path);
      const json& rels = member(v, "relations", it.path);
      if (!rels.is_array()) throw document_error(it.path + "/relations", "expected an array");
      std::vector<monomial> relations;
      for (std::size_t i = 0; i < rels.size(); ++i)
        relations.push_back(located(child(it.path + "/relations", i), [&] { return parse_relation(rels[i], gens); }));
      return algebra(gens, relations);
    }));
  }
  return doc;
}

document document::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw document_error(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const std::vector<std::string>& document::names(const std::string& section) const {
  static const std::vector<std::string> none;
  auto it = order_.find(section);
  return it == order_.end() ? none : it->second;
}

const document::item& document::find(const std::string& section, const std::string& name) const {
  auto s = sections_.find(section);
  if (s != sections_.end()) {
    auto it = s->second.find(name);
    if (it != s->second.end()) return it->second;
  }
  throw unknown_name("no " + section.substr(0, section.size() - 1) + " named '" + name + "'");
}

algebra document::algebra_named(const std::string& ref) const {
  return parse_reference(ref, [&](const std::string& atom) -> std::optional<algebra> {
    auto it = algebras_.find(atom);
    if (it == algebras_.end()) return std::nullopt;
    return it->second;
  });
}

algebra_hom document::hom(const std::string& name) const {
  const item& it = find("homs", name);
  const json v = json::parse(it.json);
  const algebra source = located(it.path + "/source", [&] { return algebra_named(string_at(v, "source", it.path)); });
  const algebra target = located(it.path + "/target", [&] { return algebra_named(string_at(v, "target", it.path)); });
  const json& images = member(v, "images", it.path);
  std::vector<element> parsed;
  if (images.is_array()) {
    if (images.size() != source.num_generators())
      throw document_error(it.path + "/images", "expected " + std::to_string(source.num_generators()) + " images");
    for (std::size_t i = 0; i < images.size(); ++i) {
      const std::string p = child(it.path + "/images", i);
      if (!images[i].is_string()) throw document_error(p, "expected an expression string");
      parsed.push_back(located(p, [&] { return parse_element(target, images[i].get<std::string>()); }));
    }
  } else if (images.is_object()) {
    for (const auto& g : source.generators()) {
      const std::string p = it.path + "/images/" + g;
      if (!images.contains(g)) throw document_error(p, "missing image");
      if (!images.at(g).is_string()) throw document_error(p, "expected an expression string");
      parsed.push_back(located(p, [&] { return parse_element(target, images.at(g).get<std::string>()); }));
    }
    for (const auto& [g, _] : images.items())
      if (!source.generator_index(g)) throw document_error(it.path + "/images/" + g, "not a generator of the source");
  } else {
    throw document_error(it.path + "/images", "expected an array or an object of expression strings");
  }
  return algebra_hom::make(source, target, std::move(parsed));
}

carve_map document::carve(const std::string& name) const {
  const item& it = find("carve_maps", name);
  const json v = json::parse(it.json);
  const algebra source = located(it.path + "/source", [&] { return algebra_named(string_at(v, "source", it.path)); });
  const algebra target = located(it.path + "/target", [&] { return algebra_named(string_at(v, "target", it.path)); });
  const auto comps = strings_at(v, "components", it.path);
  return located(it.path + "/components",
                 [&] { return carve_map::parse(carved_space(source), carved_space(target), comps); });
}

smooth_map document::smooth(const std::string& name) const {
  const item& it = find("smooth_maps", name);
  const json v = json::parse(it.json);
  const std::size_t dim = count_at(v, "dim", it.path);
  std::vector<std::string> vars;
  if (v.contains("variables")) vars = strings_at(v, "variables", it.path);
  const auto comps = strings_at(v, "components", it.path);
  return located(it.path + "/components", [&] { return smooth_map::parse(dim, comps, vars); });
}

wpoint document::point(const std::string& name) const {
  const item& it = find("points", name);
  const json v = json::parse(it.json);
  const algebra a = located(it.path + "/algebra", [&] { return algebra_named(string_at(v, "algebra", it.path)); });
  const auto coords = strings_at(v, "coords", it.path);
  std::vector<element> parsed;
  for (std::size_t i = 0; i < coords.size(); ++i)
    parsed.push_back(located(child(it.path + "/coords", i), [&] { return parse_element(a, coords[i]); }));
  return wpoint(a, std::move(parsed));
}

classical_field document::field(const std::string& name) const {
  const item& it = find("fields", name);
  const json v = json::parse(it.json);
  const std::size_t n = count_at(v, "degree", it.path);
  const std::size_t m = count_at(v, "dim", it.path);
  const json& coeffs = member(v, "coefficients", it.path);
  if (!coeffs.is_object()) throw document_error(it.path + "/coefficients", "expected an object keyed by index tuples");
  const auto vars = default_variables(m);
  std::map<std::vector<std::size_t>, expr> parsed;
  for (const auto& [key, e] : coeffs.items()) {
    const std::string p = it.path + "/coefficients/" + key;
    std::vector<std::size_t> tuple;
    for (const auto& part : key.empty() ? std::vector<std::string>{} : split(key, ",")) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || std::stoul(part) == 0)
        throw document_error(p, "index tuples are 1-based and comma separated");
      tuple.push_back(std::stoul(part) - 1);
    }
    if (!e.is_string()) throw document_error(p, "expected an expression string");
    if (parsed.contains(tuple)) throw document_error(p, "duplicate index tuple");
    parsed.emplace(tuple, located(p, [&] { return parse_expr(e.get<std::string>(), vars); }));
  }
  return located(it.path, [&] { return classical_field::make(n, m, parsed); });
}

differential_form document::form(const std::string& name) const {
  const item& it = find("forms", name);
  const json v = json::parse(it.json);
  const std::size_t n = count_at(v, "degree", it.path);
  const std::size_t m = count_at(v, "dim", it.path);
  if (n > 9) throw document_error(it.path + "/degree", "raw forms support degree at most 9");
  const auto comps = strings_at(v, "components", it.path);
  const auto coords = default_variables(m);
  // Variable order: subset masks ascending, then coordinates.
  std::vector<std::string> vars;
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    std::string label = "c";
    for (std::size_t d = 0; d < n; ++d)
      if ((s >> d) & 1u) label += std::to_string(d + 1);
    if (s == 0) label += "0";
    for (const auto& c : coords) vars.push_back(label + "_" + c);
  }
  std::vector<expr> body;
  for (std::size_t i = 0; i < comps.size(); ++i)
    body.push_back(located(child(it.path + "/components", i), [&] { return parse_expr(comps[i], vars); }));
  differential_form w;
  w.n = n;
  w.m = m;
  w.e = comps.size();
  w.name = name;
  w.body = [body, n, m](const microcube& c) {
    element_ops<rational> ops{c.scalars()};
    std::vector<element> flat;
    for (std::size_t s = 0; s < (std::size_t{1} << n); ++s)
      for (std::size_t k = 0; k < m; ++k) flat.push_back(c.at(s, k));
    std::vector<element> out;
    for (const auto& b : body) out.push_back(evaluate<element>(b, std::span<const element>(flat), ops));
    return out;
  };
  return w;
}

}  // namespace weil
