#include "mapasym/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "mapasym/errors.hpp"
#include "mapasym/map_counts.hpp"

namespace mapasym {

namespace {

constexpr int kMaxDarts = 2 * kCensusHardMax;
constexpr int kMaxVertices = kCensusHardMax + 2;

/// Underlying multigraph of a map: vertex of each dart plus vertex count.
struct Underlying {
  int m = 0;
  int vertices = 0;
  std::array<int, kMaxDarts> vertex_of{};
};

int label_cycles(const int* perm, int n, int* label) {
  std::fill(label, label + n, -1);
  int cycles = 0;
  for (int d = 0; d < n; ++d) {
    if (label[d] >= 0) continue;
    for (int e = d; label[e] < 0; e = perm[e]) label[e] = cycles;
    ++cycles;
  }
  return cycles;
}

/// Connected after deleting the vertices in `removed` (bitmask)?
bool connected_without(const Underlying& g, unsigned removed) {
  std::array<int, kMaxVertices> parent{};
  std::iota(parent.begin(), parent.begin() + g.vertices, 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e = 0; e < g.m; ++e) {
    const int a = g.vertex_of[2 * e];
    const int b = g.vertex_of[2 * e + 1];
    if ((removed >> a) & 1U || (removed >> b) & 1U) continue;
    parent[find(a)] = find(b);
  }
  int root = -1;
  for (int v = 0; v < g.vertices; ++v) {
    if ((removed >> v) & 1U) continue;
    const int rv = find(v);
    if (root < 0) {
      root = rv;
    } else if (rv != root) {
      return false;
    }
  }
  return true;
}

int classify(const Underlying& g) {
  if (g.m == 1) return 2;
  if (g.vertices < 2) return 1;
  bool simple = true;
  for (int e = 0; e < g.m; ++e) {
    const int a = g.vertex_of[2 * e];
    const int b = g.vertex_of[2 * e + 1];
    if (a == b) return 1;
    for (int f = 0; f < e && simple; ++f) {
      const int c = g.vertex_of[2 * f];
      const int d = g.vertex_of[2 * f + 1];
      if ((a == c && b == d) || (a == d && b == c)) simple = false;
    }
  }
  for (int v = 0; v < g.vertices; ++v) {
    if (!connected_without(g, 1U << v)) return 1;
  }
  if (!simple || g.vertices < 4) return 2;
  for (int u = 0; u < g.vertices; ++u) {
    for (int v = u + 1; v < g.vertices; ++v) {
      if (!connected_without(g, (1U << u) | (1U << v))) return 2;
    }
  }
  return 3;
}

bool darts_connected(const Underlying& g) { return connected_without(g, 0U); }

/// counts[V][F][k] of rotation systems for one edge count.
using Tally = std::array<std::array<std::array<std::uint64_t, 4>, kMaxVertices>, kMaxVertices>;

void scan_prefix(int m, int first, int second, Tally& tally) {
  const int n = 2 * m;
  std::array<int, kMaxDarts> perm{};
  std::array<int, kMaxDarts> face_perm{};
  std::array<int, kMaxDarts> scratch{};
  perm[0] = first;
  perm[1] = second;
  int pos = 2;
  for (int d = 0; d < n; ++d) {
    if (d != first && d != second) perm[pos++] = d;
  }
  Underlying g;
  g.m = m;
  do {
    g.vertices = label_cycles(perm.data(), n, g.vertex_of.data());
    if (!darts_connected(g)) continue;
    for (int d = 0; d < n; ++d) face_perm[d] = perm[d ^ 1];
    const int faces = label_cycles(face_perm.data(), n, scratch.data());
    ++tally[g.vertices][faces][classify(g)];
  } while (std::next_permutation(perm.begin() + 2, perm.begin() + n));
}

Tally scan_edges(int m, int workers) {
  const int n = 2 * m;
  std::vector<std::pair<int, int>> tasks;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) tasks.emplace_back(a, b);
    }
  }
  std::vector<Tally> partial(static_cast<std::size_t>(workers), Tally{});
  std::atomic<std::size_t> next{0};
  const auto run = [&](int w) {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      scan_prefix(m, tasks[i].first, tasks[i].second, partial[static_cast<std::size_t>(w)]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Tally total{};
  for (const auto& p : partial) {
    for (int v = 0; v < kMaxVertices; ++v) {
      for (int f = 0; f < kMaxVertices; ++f) {
        for (int k = 0; k < 4; ++k) total[v][f][k] += p[v][f][k];
      }
    }
  }
  return total;
}

}  // namespace

int classify_connectivity(const DartMap& map) {
  const int n = 2 * map.m;
  if (map.m < 1 || map.m > kCensusHardMax || static_cast<int>(map.sigma.size()) != n) {
    throw DomainError("classify_connectivity: sigma must permute 2m darts, 1 <= m <= " +
                      std::to_string(kCensusHardMax));
  }
  std::array<bool, kMaxDarts> seen{};
  for (int d : map.sigma) {
    if (d < 0 || d >= n || seen[d]) throw DomainError("classify_connectivity: not a permutation");
    seen[d] = true;
  }
  Underlying g;
  g.m = map.m;
  g.vertices = label_cycles(map.sigma.data(), n, g.vertex_of.data());
  if (!darts_connected(g)) throw DomainError("classify_connectivity: map is not connected");
  return classify(g);
}

std::vector<MapCensusEntry> census(int m_max, const CensusOptions& options) {
  if (m_max < 1) throw DomainError("census requires m_max >= 1");
  if (m_max > kCensusHardMax || (m_max > kCensusDefaultMax && !options.allow_large)) {
    throw ResourceError("census with m_max = " + std::to_string(m_max) + " exceeds the guard (" +
                        std::to_string(kCensusDefaultMax) + ", or " +
                        std::to_string(kCensusHardMax) + " with allow_large)");
  }
  if (options.workers < 1) throw DomainError("census requires at least one worker");

  std::vector<MapCensusEntry> out;
  for (int m = 1; m <= m_max; ++m) {
    const Tally tally = scan_edges(m, options.workers);
    mpz_class centralizer;
    mpz_fac_ui(centralizer.get_mpz_t(), static_cast<unsigned long>(m));
    centralizer <<= m;
    for (int v = 0; v < kMaxVertices; ++v) {
      for (int f = 0; f < kMaxVertices; ++f) {
        for (int k = 1; k <= 3; ++k) {
          if (tally[v][f][k] == 0) continue;
          const int euler = v - m + f;
          if (euler > 2 || euler % 2 != 0) {
            throw std::logic_error("census: Euler characteristic violated");
          }
          mpz_class rooted = mpz_class(std::to_string(tally[v][f][k])) * (2 * m);
          if (!mpz_divisible_p(rooted.get_mpz_t(), centralizer.get_mpz_t())) {
            throw std::logic_error("census: rooted count not integral at m = " + std::to_string(m));
          }
          rooted /= centralizer;
          out.push_back(MapCensusEntry{m, v, f, (2 - euler) / 2, k, rooted});
        }
      }
    }
  }
  return out;
}

std::string census_csv(const std::vector<MapCensusEntry>& entries) {
  std::ostringstream os;
  os << "edges,vertices,faces,genus,connectivity,count\n";
  for (const auto& e : entries) {
    os << e.edges << ',' << e.vertices << ',' << e.faces << ',' << e.genus << ','
       << e.connectivity << ',' << e.count.get_str() << '\n';
  }
  return os.str();
}

mpz_class census_total(const std::vector<MapCensusEntry>& entries, int edges,
                       std::optional<int> genus, int k_min) {
  mpz_class total = 0;
  for (const auto& e : entries) {
    if (e.edges != edges || e.connectivity < k_min) continue;
    if (genus && e.genus != *genus) continue;
    total += e.count;
  }
  return total;
}

std::vector<TrendRow> trend_report(const std::vector<MapCensusEntry>& entries, int g, int k,
                                   Precision prec) {
  const MapConnectivity kc = map_connectivity(k);
  std::vector<TrendRow> rows;
  for (const auto& e : entries) {
    if (e.genus != g || e.connectivity < k) continue;
    auto it = std::find_if(rows.begin(), rows.end(), [&](const TrendRow& r) {
      return r.edges == e.edges && r.vertices == e.vertices;
    });
    if (it == rows.end()) {
      rows.push_back(TrendRow{e.edges, e.vertices, e.faces, 0, std::nullopt});
      it = rows.end() - 1;
    }
    it->exact += e.count;
  }
  for (auto& row : rows) {
    try {
      const MapEstimate est = map_estimate(CountQuery{g, kc, row.vertices, row.edges}, prec);
      row.log10_estimate = est.value.log10_abs();
    } catch (const DomainError&) {
      row.log10_estimate.reset();
    }
  }
  return rows;
}

}  // namespace mapasym
