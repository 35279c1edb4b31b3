#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "weil/document.hpp"
#include "weil/exterior.hpp"
#include "weil/oracle.hpp"
#include "weil/random.hpp"
#include "weil/suite.hpp"

using namespace weil;

namespace {

struct options {
  std::string input;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  bool json = false;
};

enum exit_code { ok = 0, law_failure = 1, input_error = 2 };

document load(const options& o) { return o.input.empty() ? suite::default_document() : document::load(o.input); }

int emit(const report& r, const options& o) {
  std::cout << (o.json ? r.to_json() : r.to_text());
  if (o.json) std::cout << '\n';
  return r.all_passed() ? ok : law_failure;
}

int algebra_show(const options& o, const std::string& name) {
  const algebra a = load(o).algebra_named(name);
  if (!a.is_weil()) {
    std::string free;
    for (std::size_t i = 0; i < a.num_generators(); ++i)
      if (!a.is_nilpotent(i)) free += (free.empty() ? "" : ", ") + a.generators()[i];
    std::cout << a.to_string() << "\nnot a Weil algebra: free generators " << free << '\n';
    return ok;
  }
  const auto& basis = a.weil_basis();
  std::cout << a.to_string() << "\ndim " << basis.size() << ':';
  for (std::size_t i = 0; i < basis.size(); ++i) std::cout << (i ? ", " : " ") << a.format_monomial(basis[i]);
  std::cout << '\n';
  return ok;
}

int hom_check(const options& o, const std::string& name) {
  const document doc = load(o);
  report r("hom-check", o.seed);
  try {
    const algebra_hom h = doc.hom(name);
    r.add("relations", "algebra/hom-validation", h.to_string(), true);
    sampler rng(o.seed);
    law l(r, "ring-map", "algebra/hom-apply", h.to_string() + ", " + std::to_string(o.samples) + " random pairs");
    for (std::size_t t = 0; t < o.samples; ++t) {
      element a = rng.random_element(h.source()), b = rng.random_element(h.source());
      l.expect(h(a + b) == h(a) + h(b) && h(a * b) == h(a) * h(b), [&] { return a.to_string() + " ; " + b.to_string(); });
    }
  } catch (const relation_violated& e) {
    r.add("relations", "algebra/hom-validation", name, false, e.what());
  }
  return emit(r, o);
}

int prolong_eval(const options& o, const std::string& map_name, const std::string& point_name) {
  const document doc = load(o);
  const smooth_map f = doc.smooth(map_name);
  const wpoint p = doc.point(point_name);
  if (p.dim() != f.domain_dim())
    throw dimension_mismatch(map_name + " takes " + std::to_string(f.domain_dim()) + " coordinates, " + point_name + " has " +
                             std::to_string(p.dim()));
  std::string value;
  bool exact = f.is_polynomial();
  if (exact) {
    value = prolong(f, p).to_string();
  } else {
    std::vector<basic_element<double>> coords;
    for (const auto& c : p.coords()) coords.push_back(convert<double>(c));
    value = prolong(f, float_wpoint(p.algebra_of(), std::move(coords))).to_string();
  }
  if (o.json) {
    std::cout << "{\"map\": \"" << map_name << "\", \"point\": \"" << point_name << "\", \"exact\": " << (exact ? "true" : "false")
              << ", \"value\": \"" << value << "\"}\n";
  } else {
    std::cout << f.to_string() << " at " << p.to_string() << " over " << p.algebra_of().to_string() << '\n'
              << (exact ? "" : "(floating point) ") << value << '\n';
  }
  return ok;
}

int form_validate(const options& o, const std::string& name) {
  const document doc = load(o);
  const auto& fields = doc.names("fields");
  const bool is_field = std::find(fields.begin(), fields.end(), name) != fields.end();
  const differential_form w = is_field ? from_classical(doc.field(name)) : doc.form(name);
  return emit(validate_form(w, o.samples, o.seed), o);
}

int form_d(const options& o, const std::string& name) {
  const classical_field f = load(o).field(name);
  if (!o.json) {
    std::cout << "omega    = " << f.to_string() << " on R^" << f.dim() << '\n'
              << "classical d omega = " << oracle::classical_d(f).to_string() << '\n';
    const auto d = exterior_derivative(from_classical(f), 10, o.seed);
    sampler rng(derive_seed(o.seed, 99));
    for (int t = 0; t < 3; ++t) {
      const microcube c = random_microcube(rng, f.degree() + 1, f.dim());
      std::cout << "d omega " << c.to_string() << " = ";
      const auto v = d(c);
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i].to_string();
      std::cout << '\n';
    }
  }
  return emit(suite::form_d(f, name, o.seed, o.samples), o);
}

int check_all(const options& o) {
  const document doc = load(o);
  return emit(suite::check_all(&doc, o.seed, o.samples), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil algebras, prolongation and differential forms over exact rationals"};
  app.require_subcommand(1);
  options o;
  app.add_option("--input", o.input, "JSON document (default: built-in example document)");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--samples", o.samples, "random trials per law")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "machine-readable report on stdout");

  std::function<int()> run;
  std::string a1, a2;

  auto* alg = app.add_subcommand("algebra", "algebra commands")->require_subcommand(1)->fallthrough();
  alg->add_subcommand("show", "print the Weil basis")->fallthrough()->callback([&] { run = [&] { return algebra_show(o, a1); }; })
      ->add_option("name", a1, "algebra name or reference")->required();
  auto* hom = app.add_subcommand("hom", "hom commands")->require_subcommand(1)->fallthrough();
  hom->add_subcommand("check", "validate a hom and its ring laws")->fallthrough()->callback([&] { run = [&] { return hom_check(o, a1); }; })
      ->add_option("name", a1)->required();
  auto* pro = app.add_subcommand("prolong", "prolongation commands")->require_subcommand(1)->fallthrough();
  auto* eval = pro->add_subcommand("eval", "apply T^A f to a point")->fallthrough();
  eval->add_option("map", a1)->required();
  eval->add_option("point", a2)->required();
  eval->callback([&] { run = [&] { return prolong_eval(o, a1, a2); }; });
  auto* form = app.add_subcommand("form", "differential form commands")->require_subcommand(1)->fallthrough();
  form->add_subcommand("validate", "check homogeneity and alternation")->fallthrough()
      ->callback([&] { run = [&] { return form_validate(o, a1); }; })
      ->add_option("name", a1)->required();
  form->add_subcommand("d", "exterior derivative against the classical formula")->fallthrough()
      ->callback([&] { run = [&] { return form_d(o, a1); }; })
      ->add_option("field", a1)->required();
  auto* check = app.add_subcommand("check", "law suites")->require_subcommand(1)->fallthrough();
  check->add_subcommand("all", "run every law")->fallthrough()->callback([&] { run = [&] { return check_all(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }
  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  }
}
