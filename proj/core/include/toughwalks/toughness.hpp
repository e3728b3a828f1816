#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "toughwalks/graph.hpp"

namespace toughwalks {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// Removing `cutset` leaves `components` >= 2 components, so the toughness of
/// the graph is at most bound = |cutset| / components.
struct ToughnessCertificate {
  std::vector<Vertex> cutset;
  std::size_t components = 0;

  Rational bound() const {
    return Rational(static_cast<std::int64_t>(cutset.size()),
                    static_cast<std::int64_t>(components));
  }

  friend bool operator==(const ToughnessCertificate&,
                         const ToughnessCertificate&) = default;
};

/// Builds the certificate for `cutset` by counting components of g - cutset.
ToughnessCertificate make_certificate(const Graph& g, std::vector<Vertex> cutset);

/// True iff the component count is exact and at least 2.
bool is_valid_certificate(const Graph& g, const ToughnessCertificate& cert);

/// Exact toughness value. Complete graphs have no separating set and get the
/// distinguished infinite value.
class Toughness {
 public:
  static Toughness infinite() { return Toughness(); }
  static Toughness attained_by(ToughnessCertificate cert) {
    Toughness t;
    t.minimizer_ = std::move(cert);
    return t;
  }

  bool is_infinite() const noexcept { return !minimizer_.has_value(); }
  Rational value() const { return minimizer_.value().bound(); }
  const std::optional<ToughnessCertificate>& minimizer() const noexcept {
    return minimizer_;
  }

  bool at_least(const Rational& r) const { return is_infinite() || value() >= r; }
  bool greater_than(const Rational& r) const { return is_infinite() || value() > r; }

  std::string to_string() const;

 private:
  Toughness() = default;
  std::optional<ToughnessCertificate> minimizer_;
};

}  // namespace toughwalks
