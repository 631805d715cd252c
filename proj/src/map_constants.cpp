#include "mapasym/map_constants.hpp"

#include <stdexcept>

#include "mapasym/errors.hpp"
#include "mapasym/special.hpp"

namespace mapasym {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kExactRecursion: return "exact-recursion";
    case Provenance::kClosedForm: return "closed-form";
    case Provenance::kRootSolve: return "root-solve";
    case Provenance::kPaperNumeric: return "paper-numeric";
    case Provenance::kConjectured: return "conjectured";
    case Provenance::kCensus: return "census";
  }
  return "unknown";
}

namespace {

mpq_class a_term(const std::vector<mpq_class>& a, int g) {
  mpq_class value = mpq_class((5 * g - 4) * (5 * g - 6), 48) * a[g - 1];
  mpq_class sum = 0;
  for (int h = 1; h <= g - 1; ++h) sum += a[h] * a[g - h];
  value -= sum / 2;
  value.canonicalize();
  return value;
}

}  // namespace

AgSequence compute_a(int g_max) {
  if (g_max < 0) throw DomainError("compute_a requires g_max >= 0");
  std::vector<mpq_class> a;
  a.reserve(static_cast<std::size_t>(g_max) + 1);
  a.emplace_back(1);
  for (int g = 1; g <= g_max; ++g) a.push_back(a_term(a, g));
  return AgSequence(std::move(a));
}

bool verify_recursion(const AgSequence& a) {
  const auto& v = a.values();
  if (v.empty() || v[0] != 1) return false;
  for (int g = 1; g < static_cast<int>(v.size()); ++g) {
    // Sum the convolution in the opposite order from the construction pass.
    mpq_class sum = 0;
    for (int h = g - 1; h >= 1; --h) sum += v[g - h] * v[h];
    const mpq_class expected = mpq_class((5 * g - 4) * (5 * g - 6), 48) * v[g - 1] - sum / 2;
    if (expected != v[g]) return false;
    if (v[g].get_den() <= 0 || gcd(v[g].get_num(), v[g].get_den()) != 1) return false;
  }
  return true;
}

Real compute_t(const AgSequence& a, int g, Precision prec) {
  if (g < 0 || g > a.g_max()) throw DomainError("compute_t: genus outside the a_g table");
  const Real half_arg = Real(5L * g - 1, prec) / 2L;
  const LogMagnitude gamma = gamma_signed(half_arg);
  // -a_g / (2^{g-2} Gamma(...)); Gamma((5g-1)/2) < 0 only at g = 0.
  const Real numer(-a[g], prec);
  const Real denom = exp2i(g - 2, prec) * gamma.to_real();
  return numer / denom;
}

Real compute_t(int g, Precision prec) { return compute_t(compute_a(g), g, prec); }

std::vector<Real> compute_v(int g_max, const Real& v0) {
  if (g_max < 1) throw DomainError("compute_v requires g_max >= 1");
  const Precision prec = v0.precision();
  const AgSequence a = compute_a(g_max / 2);
  const Real scale = 1L / (2L * sqrt(Real(3L, prec)));
  std::vector<Real> v;
  v.reserve(static_cast<std::size_t>(g_max) + 1);
  v.push_back(v0);
  for (int g = 1; g <= g_max; ++g) {
    Real inner(prec);
    if (g % 2 == 0) inner = Real(a[g / 2], prec) * -3L;
    inner += Real(5L * g - 6, prec) / 2L * v[g - 1];
    for (int k = 1; k <= g - 1; ++k) inner += v[k] * v[g - k];
    v.push_back(scale * inner);
  }
  return v;
}

Real compute_p(int g, const Real& v0) {
  if (g < 1) throw DomainError("compute_p requires g >= 1");
  const Precision prec = v0.precision();
  const std::vector<Real> v = compute_v(2 * g - 1, v0);
  const Real gamma = exp(log_gamma(Real(5L * g - 3, prec) / 2L));
  return v[2 * g - 1] / (exp2i(g - 2, prec) * gamma);
}

void ConstantsTable::set(std::string name, Real value, Provenance provenance) {
  for (auto& e : entries_) {
    if (e.name == name) {
      e.value = std::move(value);
      e.provenance = provenance;
      return;
    }
  }
  entries_.push_back(Entry{std::move(name), std::move(value), provenance});
}

bool ConstantsTable::contains(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return true;
  }
  return false;
}

const ConstantsTable::Entry& ConstantsTable::at(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no constant named '" + std::string(name) + "'");
}

}  // namespace mapasym
