#include "weil/hom.hpp"

namespace weil {

algebra_hom algebra_hom::make(algebra source, algebra target, std::vector<element> images) {
  if (images.size() != source.num_generators())
    throw dimension_mismatch("expected " + std::to_string(source.num_generators()) + " generator images, got " +
                             std::to_string(images.size()));
  for (const auto& im : images)
    if (!(im.parent() == target)) throw algebra_mismatch("generator image not in target " + target.to_string());
  algebra_hom h(std::move(source), std::move(target), std::move(images));
  for (const auto& r : h.source_.relations())
    if (!h.image(r).is_zero()) throw relation_violated(h.source_.format_monomial(r));
  return h;
}

algebra_hom algebra_hom::identity(const algebra& a) {
  std::vector<element> im;
  for (std::size_t i = 0; i < a.num_generators(); ++i) im.push_back(element::generator(a, i));
  return algebra_hom(a, a, std::move(im));
}

algebra_hom algebra_hom::augmentation(const algebra& a) {
  algebra k;
  return algebra_hom(a, k, std::vector<element>(a.num_generators(), element(k)));
}

algebra_hom algebra_hom::unit(const algebra& a) { return algebra_hom(algebra{}, a, {}); }

element algebra_hom::image(const monomial& m) const {
  if (m.size() != source_.num_generators()) throw algebra_mismatch("monomial arity mismatch");
  element r = element::one(target_);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) r *= images_[i].pow(m[i]);
  return r;
}

std::string algebra_hom::to_string() const {
  std::string out = source_.to_string() + " -> " + target_.to_string() + " {";
  for (std::size_t i = 0; i < images_.size(); ++i)
    out += (i ? ", " : "") + source_.generators()[i] + " |-> " + images_[i].to_string();
  return out + "}";
}

algebra_hom compose(const algebra_hom& psi, const algebra_hom& phi) {
  if (!(phi.target() == psi.source()))
    throw algebra_mismatch("cannot compose: " + phi.target().to_string() + " vs " + psi.source().to_string());
  std::vector<element> im;
  for (const auto& x : phi.images()) im.push_back(psi(x));
  return algebra_hom::make(phi.source(), psi.target(), std::move(im));
}

algebra_hom tensor(const algebra_hom& phi, const algebra_hom& psi) {
  algebra src = tensor(phi.source(), psi.source());
  algebra tgt = tensor(phi.target(), psi.target());
  const std::size_t na = phi.target().num_generators();
  auto embed = [&](const element& e, std::size_t offset) {
    element r(tgt);
    for (const auto& [m, c] : e.terms()) {
      monomial big(tgt.num_generators());
      for (std::size_t i = 0; i < m.size(); ++i) big[offset + i] = m[i];
      r.add_term(big, c);
    }
    return r;
  };
  std::vector<element> im;
  for (const auto& x : phi.images()) im.push_back(embed(x, 0));
  for (const auto& x : psi.images()) im.push_back(embed(x, na));
  return algebra_hom::make(src, tgt, std::move(im));
}

algebra_hom rename_iso(const algebra& from, const algebra& to) {
  if (!from.same_shape(to)) throw algebra_mismatch("rename between differently shaped algebras");
  std::vector<element> im;
  for (std::size_t i = 0; i < to.num_generators(); ++i) im.push_back(element::generator(to, i));
  return algebra_hom::make(from, to, std::move(im));
}

}  // namespace weil
