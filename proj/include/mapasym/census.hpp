#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "mapasym/real.hpp"

namespace mapasym {

/// Rotation-system encoding of a map with m edges on darts 0..2m-1. Dart d
/// and d^1 form an edge (the fixed involution alpha0); sigma lists the
/// successor of each dart around its vertex.
struct DartMap {
  int m = 0;
  std::vector<int> sigma;
};

/// Largest k in {1,2,3} the underlying multigraph of a connected map satisfies:
///   1 connected,
///   2 nonseparable (no cut vertex, no loop; the one-edge maps count as 2),
///   3 simple, at least 4 vertices and no separating pair.
int classify_connectivity(const DartMap& map);

/// Rooted maps with the given edges, vertices, faces, genus and k_max.
struct MapCensusEntry {
  int edges = 0;
  int vertices = 0;
  int faces = 0;
  int genus = 0;
  int connectivity = 0;
  mpz_class count;

  friend bool operator==(const MapCensusEntry&, const MapCensusEntry&) = default;
};

struct CensusOptions {
  int workers = 1;
  /// Permits m = 6 (12! rotation systems).
  bool allow_large = false;
};

inline constexpr int kCensusDefaultMax = 5;
inline constexpr int kCensusHardMax = 6;

/// Exhaustive census for every m in 1..m_max, sorted by
/// (edges, vertices, faces, genus, connectivity). Throws ResourceError when
/// m_max exceeds the guard.
std::vector<MapCensusEntry> census(int m_max, const CensusOptions& options = {});

/// CSV with header edges,vertices,faces,genus,connectivity,count.
std::string census_csv(const std::vector<MapCensusEntry>& entries);

/// Sum of counts over entries matching the filters (k_min: connectivity >= k_min).
mpz_class census_total(const std::vector<MapCensusEntry>& entries, int edges,
                       std::optional<int> genus = std::nullopt, int k_min = 1);

/// Exact census count next to the asymptotic estimate at (n, m) = (V, edges).
struct TrendRow {
  int edges = 0;
  int vertices = 0;
  int faces = 0;
  mpz_class exact;
  /// log10 of map_estimate; empty when m/n is outside the density interval.
  std::optional<Real> log10_estimate;
};

/// Rooted maps of genus g that are at least k-connected, one row per (m, V).
std::vector<TrendRow> trend_report(const std::vector<MapCensusEntry>& entries, int g, int k,
                                   Precision prec = kDefaultPrecision);

}  // namespace mapasym
