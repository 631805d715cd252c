#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mapasym/real.hpp"

namespace mapasym {

/// Where a numeric output comes from.
enum class Provenance {
  kExactRecursion,
  kClosedForm,
  kRootSolve,
  kPaperNumeric,
  kConjectured,
  kCensus,
};

std::string_view to_string(Provenance p);

/// The exact rationals a_0..a_gmax of the t_g recursion:
///   a_0 = 1,
///   a_g = (5g-4)(5g-6)/48 a_{g-1} - 1/2 sum_{h=1}^{g-1} a_h a_{g-h}.
class AgSequence {
 public:
  explicit AgSequence(std::vector<mpq_class> values) : values_(std::move(values)) {}

  const mpq_class& operator[](std::size_t g) const { return values_.at(g); }
  std::size_t size() const { return values_.size(); }
  int g_max() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<mpq_class>& values() const { return values_; }

 private:
  std::vector<mpq_class> values_;
};

AgSequence compute_a(int g_max);

/// Re-evaluates the recursion term by term against the stored values.
bool verify_recursion(const AgSequence& a);

/// t_g = -a_g / (2^{g-2} Gamma((5g-1)/2)).
Real compute_t(int g, Precision prec = kDefaultPrecision);
Real compute_t(const AgSequence& a, int g, Precision prec);

/// v_0..v_gmax of the nonorientable recursion
///   v_g = (1/(2 sqrt 3)) (-3 a_{g/2} + (5g-6)/2 v_{g-1} + sum_{k=1}^{g-1} v_k v_{g-k}),
/// with a_j = 0 for non-integer j. v_0 is not determined by the recursion and
/// must be supplied.
std::vector<Real> compute_v(int g_max, const Real& v0);

/// Conjectured nonorientable constant p_g = v_{2g-1} / (2^{g-2} Gamma((5g-3)/2)),
/// g >= 1.
Real compute_p(int g, const Real& v0);

/// Named high-precision constants with provenance, in insertion order.
class ConstantsTable {
 public:
  struct Entry {
    std::string name;
    Real value;
    Provenance provenance;
  };

  void set(std::string name, Real value, Provenance provenance);
  bool contains(std::string_view name) const;
  const Entry& at(std::string_view name) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace mapasym
