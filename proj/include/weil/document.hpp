#pragma once

#include <map>
#include <string>
#include <vector>

#include "weil/duality.hpp"
#include "weil/forms.hpp"
#include "weil/hom.hpp"
#include "weil/prolongation.hpp"

namespace weil {

/// Input error in a document, located by a JSON pointer (and a column
/// inside the offending string when there is one).
class document_error : public error {
 public:
  document_error(const std::string& path, const std::string& msg) : error(path + ": " + msg), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A JSON document of named objects:
///
///   { "version": 1,
///     "algebras":    { "A": {"generators": ["X","Y"], "relations": [{"X":2}, "X*Y", "Y^2"]} },
///     "homs":        { "h": {"source": "D(2)", "target": "D", "images": ["X", "0"]} },
///     "carve_maps":  { "s": {"source": "R x D", "target": "D", "components": ["Z*X"]} },
///     "smooth_maps": { "f": {"dim": 2, "components": ["x*y", "x^2"]} },
///     "points":      { "p": {"algebra": "D", "coords": ["1 + 2*X", "3"]} },
///     "fields":      { "w": {"degree": 1, "dim": 2, "coefficients": {"2": "x"}} },
///     "forms":       { "q": {"degree": 2, "dim": 1, "components": ["c1_x*c2_x"]} } }
///
/// Algebra references are document names or built-ins: k, D, D(2), D^n, R,
/// R^n, products "A x B" (carved-space product) and "A (x) B" (tensor).
/// Field coefficients are keyed by 1-based index tuples such as "1,2".
/// Raw form components are expressions in the microcube coefficients
/// c<S>_<coord>, S a digit string of directions or 0 for the base.
///
/// Homs, fields and forms are built on demand, so a document may hold an
/// invalid hom and still load.
class document {
 public:
  document() = default;
  /// Throws parse_error (with line/column) or document_error.
  static document parse(const std::string& text);
  static document load(const std::string& path);

  algebra algebra_named(const std::string& ref) const;
  algebra_hom hom(const std::string& name) const;
  carve_map carve(const std::string& name) const;
  smooth_map smooth(const std::string& name) const;
  wpoint point(const std::string& name) const;
  classical_field field(const std::string& name) const;
  differential_form form(const std::string& name) const;

  const std::vector<std::string>& names(const std::string& section) const;
  bool empty() const noexcept { return sections_.empty(); }

 private:
  struct item {
    std::string path;
    std::string json;  // the raw value, re-read on demand
  };
  const item& find(const std::string& section, const std::string& name) const;

  std::map<std::string, std::vector<std::string>> order_;
  std::map<std::string, std::map<std::string, item>> sections_;
  std::map<std::string, algebra> algebras_;
};

/// Parses an algebra reference without a document.
algebra builtin_algebra(const std::string& ref);

}  // namespace weil
