#pragma once

#include <gmpxx.h>

#include <vector>

#include "mapasym/log_magnitude.hpp"
#include "mapasym/parametric.hpp"
#include "mapasym/real.hpp"

namespace mapasym {

/// Rooted k-connected maps of genus g with n vertices and m edges.
struct CountQuery {
  int g = 0;
  MapConnectivity k = MapConnectivity::kConnected;
  long n = 0;
  long m = 0;
};

/// amplitude * extra_factor * n^{n_exponent} * per_vertex_base^n * per_edge_base^m
struct AsymptoticEstimate {
  int g = 0;
  MapConnectivity k = MapConnectivity::kConnected;
  Real r;
  Real amplitude;        ///< C_k(r) A_g(r)
  Real n_exponent;       ///< 5g/2 - 3
  Real per_vertex_base;  ///< 1 / rho(r)
  Real per_edge_base;    ///< 1 / eta_k(r)
  Real extra_factor;     ///< (2+r)^{(k-1)(5g-3)/2}

  LogMagnitude evaluate(long n, long m) const;
};

struct MapEstimate {
  AsymptoticEstimate estimate;
  LogMagnitude value;
};

/// Asymptotic count of rooted k-connected genus-g maps. Throws
/// DomainError when m/n is outside the class's density interval.
MapEstimate map_estimate(const CountQuery& q, Precision prec = kDefaultPrecision);

/// Same, with t_g supplied by the caller.
MapEstimate map_estimate(const CountQuery& q, const Real& t_g);

/// Root r* of eta_k(r) = 1. Only k = 3 has one (r* = sqrt(7)/2 - 1); eta_1 < 1
/// and eta_2 < 1 on r > 0, so k = 1, 2 raise DomainError.
Real concentration_r(MapConnectivity k, Precision prec = kDefaultPrecision);

/// Asymptotic mean and variance of the edge count of a random k-connected map
/// on n vertices: density_mu(k, r*) n and sigma_k^2(r*) n.
Real mean_edges(int g, MapConnectivity k, long n, Precision prec = kDefaultPrecision);
Real edge_variance(int g, MapConnectivity k, long n, Precision prec = kDefaultPrecision);

/// Rooted 2-connected planar maps with i+1 vertices and j+1 faces:
///   (2i+j-2)! (2j+i-2)! / (i! j! (2i-1)! (2j-1)!)
mpz_class exact_2conn_planar(long i, long j);

/// Natural log of the same count, through log-gamma.
Real log_exact_2conn_planar(long i, long j, Precision prec = kDefaultPrecision);

/// binom(2i, j+3) binom(2j, i+3) / (3^5 i j), the asymptotic number of rooted
/// 3-connected planar maps with i+1 vertices and j+1 faces. Zero when either
/// binomial vanishes.
LogMagnitude exact_3conn_planar_asym(long i, long j, Precision prec = kDefaultPrecision);

struct G0ConsistencyRow {
  long i = 0;
  long n = 0;
  long m = 0;
  Real log_exact;
  Real log_asymptotic;
  Real ratio;      ///< exact / asymptotic
  Real deviation;  ///< |ratio - 1|
};

struct G0ConsistencyReport {
  MapConnectivity k = MapConnectivity::kTwoConnected;
  std::vector<G0ConsistencyRow> rows;
  /// True when deviation strictly decreases along the rows.
  bool decreasing = false;
};

/// Exact (k=2) or cited asymptotic (k=3) planar counts against map_estimate
/// along i = j = step, 2 step, ..., i_max with (n, m) = (i+1, 2i).
G0ConsistencyReport g0_consistency(MapConnectivity k, long i_max, long step = 100,
                                   Precision prec = kDefaultPrecision);

}  // namespace mapasym
