#include "toughwalks/toughness.hpp"

#include <algorithm>

namespace toughwalks {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ToughnessCertificate make_certificate(const Graph& g, std::vector<Vertex> cutset) {
  std::sort(cutset.begin(), cutset.end());
  cutset.erase(std::unique(cutset.begin(), cutset.end()), cutset.end());
  VertexSet removed(g.n());
  for (Vertex v : cutset) removed.set(v);
  const auto parts = connected_components(g, removed).size();
  return ToughnessCertificate{std::move(cutset), parts};
}

bool is_valid_certificate(const Graph& g, const ToughnessCertificate& cert) {
  VertexSet removed(g.n());
  for (Vertex v : cert.cutset) {
    if (v >= g.n() || removed.test(v)) return false;
    removed.set(v);
  }
  const auto parts = connected_components(g, removed).size();
  return parts >= 2 && parts == cert.components;
}

std::string Toughness::to_string() const {
  return is_infinite() ? std::string("infinite") : toughwalks::to_string(value());
}

}  // namespace toughwalks
