#ifndef BOREL_INCIDENCE_HPP
#define BOREL_INCIDENCE_HPP

// Essential-variable incidence matrices, the L-free test and chordal bipartite
// recognition by brute force at small sizes.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "family.hpp"

namespace borel {

/// 0/1 matrix with rows labelled by x-indices and columns by t-indices.
struct BiAdjacency {
  std::vector<std::size_t> rows; // x-indices, in display order
  std::vector<std::size_t> cols; // t-indices, in display order
  std::vector<std::vector<std::uint8_t>> a;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return cols.size(); }
  bool at(std::size_t r, std::size_t c) const { return a[r][c] != 0; }

  static BiAdjacency from_rows(const std::vector<std::string>& bits) {
    BiAdjacency m;
    for (std::size_t r = 0; r < bits.size(); ++r) {
      m.rows.push_back(r + 1);
      std::vector<std::uint8_t> row;
      for (char ch : bits[r]) {
        if (ch != '0' && ch != '1') throw InvalidArgument("matrix rows must be 0/1 strings");
        row.push_back(ch == '1');
      }
      if (!m.a.empty() && row.size() != m.a.front().size())
        throw InvalidArgument("matrix rows have different lengths");
      m.a.push_back(std::move(row));
    }
    std::size_t nc = m.a.empty() ? 0 : m.a.front().size();
    for (std::size_t c = 0; c < nc; ++c) m.cols.push_back(c + 1);
    return m;
  }

  std::vector<std::string> row_strings() const {
    std::vector<std::string> out;
    for (const auto& row : a) {
      std::string s;
      for (auto v : row) s += v ? '1' : '0';
      out.push_back(s);
    }
    return out;
  }

  BiAdjacency permuted(const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm) const {
    BiAdjacency m;
    for (std::size_t r : row_perm) m.rows.push_back(rows.at(r));
    for (std::size_t c : col_perm) m.cols.push_back(cols.at(c));
    for (std::size_t r : row_perm) {
      std::vector<std::uint8_t> row;
      for (std::size_t c : col_perm) row.push_back(a[r][c]);
      m.a.push_back(std::move(row));
    }
    return m;
  }

  BiAdjacency with_column_order(const std::vector<std::size_t>& col_perm) const {
    std::vector<std::size_t> id(num_rows());
    std::iota(id.begin(), id.end(), 0);
    return permuted(id, col_perm);
  }
};

/// Entry (x_i, t_j) is 1 iff x_i is an essential variable of I_j.
inline BiAdjacency incidence_matrix(const IdealFamily& family) {
  family.validate();
  BiAdjacency m;
  for (std::size_t i = 1; i <= family.n; ++i) m.rows.push_back(i);
  for (std::size_t j = 1; j <= family.size(); ++j) m.cols.push_back(j);
  m.a.assign(family.n, std::vector<std::uint8_t>(family.size(), 0));
  for (std::size_t j = 1; j <= family.size(); ++j)
    for (std::size_t i : family.essential(j)) m.a[i - 1][j - 1] = 1;
  return m;
}

/// Positions (0-based) of a forbidden [[1,0],[1,1]] pattern: rows h < j, columns u < v.
struct LWitness {
  std::size_t h, j, u, v;
  friend bool operator==(const LWitness&, const LWitness&) = default;
};

struct LFreeResult {
  bool lfree = true;
  std::optional<LWitness> witness; // first in (h, j, u, v) order
};

namespace detail {

/// Does placing column u before column v create the pattern?
inline bool pair_violates(const BiAdjacency& m, std::size_t u, std::size_t v) {
  bool seen_h = false; // some earlier row with 1 in u and 0 in v
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    if (seen_h && m.at(r, u) && m.at(r, v)) return true;
    if (m.at(r, u) && !m.at(r, v)) seen_h = true;
  }
  return false;
}

} // namespace detail

inline LFreeResult is_lfree(const BiAdjacency& m) {
  const std::size_t R = m.num_rows(), C = m.num_cols();
  for (std::size_t h = 0; h < R; ++h)
    for (std::size_t j = h + 1; j < R; ++j)
      for (std::size_t u = 0; u < C; ++u) {
        if (!m.at(h, u) || !m.at(j, u)) continue;
        for (std::size_t v = u + 1; v < C; ++v)
          if (!m.at(h, v) && m.at(j, v)) return {false, LWitness{h, j, u, v}};
      }
  return {};
}

inline constexpr std::size_t kMaxColumnSearch = 10;
inline constexpr std::size_t kMaxChordalRows = 8;

/// First column permutation, in lexicographic order, that makes m L-free.
/// The x-row order is fixed. Entries of the result index the current columns (0-based).
inline std::optional<std::vector<std::size_t>> find_lfree_column_order(const BiAdjacency& m,
                                                                       std::size_t max_cols = kMaxColumnSearch) {
  const std::size_t C = m.num_cols();
  if (C > max_cols)
    throw ResourceLimit("column-order search limited to " + std::to_string(max_cols) + " columns, got " +
                        std::to_string(C));
  // bad[u][v]: u may not precede v.
  std::vector<std::vector<bool>> bad(C, std::vector<bool>(C, false));
  for (std::size_t u = 0; u < C; ++u)
    for (std::size_t v = 0; v < C; ++v)
      if (u != v) bad[u][v] = detail::pair_violates(m, u, v);

  std::vector<std::size_t> perm;
  std::vector<bool> used(C, false);
  auto dfs = [&](auto&& self) -> bool {
    if (perm.size() == C) return true;
    for (std::size_t c = 0; c < C; ++c) {
      if (used[c]) continue;
      bool ok = std::none_of(perm.begin(), perm.end(), [&](std::size_t p) { return bad[p][c]; });
      if (!ok) continue;
      used[c] = true;
      perm.push_back(c);
      if (self(self)) return true;
      perm.pop_back();
      used[c] = false;
    }
    return false;
  };
  if (dfs(dfs)) return perm;
  return std::nullopt;
}

inline std::optional<std::vector<std::size_t>> find_lfree_column_order(const IdealFamily& family) {
  return find_lfree_column_order(incidence_matrix(family));
}

namespace detail {

/// Drops all-zero rows and repeated rows; neither affects chordality.
inline BiAdjacency compress_rows(const BiAdjacency& m) {
  BiAdjacency out;
  out.cols = m.cols;
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    if (std::none_of(m.a[r].begin(), m.a[r].end(), [](auto v) { return v != 0; })) continue;
    if (std::find(out.a.begin(), out.a.end(), m.a[r]) != out.a.end()) continue;
    out.rows.push_back(m.rows[r]);
    out.a.push_back(m.a[r]);
  }
  return out;
}

/// With rows fixed, the pattern only involves column pairs, so a good column
/// order exists iff the forced precedences form an acyclic graph.
inline bool some_column_order_works(const BiAdjacency& m) {
  const std::size_t C = m.num_cols();
  std::vector<std::vector<std::size_t>> succ(C);
  std::vector<std::size_t> indeg(C, 0);
  for (std::size_t u = 0; u < C; ++u)
    for (std::size_t v = u + 1; v < C; ++v) {
      bool uv = pair_violates(m, u, v), vu = pair_violates(m, v, u);
      if (uv && vu) return false;
      if (uv) { // v must come first
        succ[v].push_back(u);
        ++indeg[u];
      } else if (vu) {
        succ[u].push_back(v);
        ++indeg[v];
      }
    }
  std::vector<std::size_t> ready;
  for (std::size_t c = 0; c < C; ++c)
    if (indeg[c] == 0) ready.push_back(c);
  std::size_t done = 0;
  while (!ready.empty()) {
    std::size_t c = ready.back();
    ready.pop_back();
    ++done;
    for (std::size_t s : succ[c])
      if (--indeg[s] == 0) ready.push_back(s);
  }
  return done == C;
}

} // namespace detail

/// Some simultaneous reordering of rows and columns is L-free. Brute force
/// over row orders; limited to kMaxChordalRows distinct nonzero rows.
inline bool is_chordal_bipartite(const BiAdjacency& m, std::size_t max_rows = kMaxChordalRows) {
  BiAdjacency c = detail::compress_rows(m);
  if (c.num_rows() > max_rows)
    throw ResourceLimit("chordal test limited to " + std::to_string(max_rows) + " distinct rows, got " +
                        std::to_string(c.num_rows()));
  std::vector<std::size_t> rp(c.num_rows());
  std::iota(rp.begin(), rp.end(), 0);
  std::vector<std::size_t> cp(c.num_cols());
  std::iota(cp.begin(), cp.end(), 0);
  do {
    if (detail::some_column_order_works(c.permuted(rp, cp))) return true;
  } while (std::next_permutation(rp.begin(), rp.end()));
  return false;
}

/// Independent check straight from the definition: look for an induced cycle
/// of length at least six. Returns its vertices (rows as 0..R-1, columns as R..R+C-1).
inline std::optional<std::vector<std::size_t>> find_chordless_long_cycle(const BiAdjacency& m,
                                                                         std::size_t max_vertices = 24) {
  const std::size_t R = m.num_rows(), C = m.num_cols(), V = R + C;
  if (V > max_vertices)
    throw ResourceLimit("cycle search limited to " + std::to_string(max_vertices) + " vertices");
  std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      if (m.at(r, c)) adj[r][R + c] = adj[R + c][r] = true;

  std::vector<std::size_t> path;
  std::vector<bool> on(V, false);
  std::optional<std::vector<std::size_t>> found;
  // Grow induced paths whose first vertex is the smallest on the cycle.
  auto grow = [&](auto&& self) -> void {
    if (found) return;
    std::size_t last = path.back();
    for (std::size_t v = path.front() + 1; v < V && !found; ++v) {
      if (on[v] || !adj[last][v]) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size(); ++k) chord = chord || adj[v][path[k]];
      if (chord) continue;
      if (path.size() >= 2 && adj[v][path.front()]) {
        if (path.size() + 1 >= 6) {
          found = path;
          found->push_back(v);
        }
        continue;
      }
      on[v] = true;
      path.push_back(v);
      self(self);
      path.pop_back();
      on[v] = false;
    }
  };
  for (std::size_t s = 0; s < V && !found; ++s) {
    path = {s};
    on[s] = true;
    grow(grow);
    on[s] = false;
  }
  return found;
}

/// Row/column labels for messages: x<i> and t<j>.
inline std::string row_label(const BiAdjacency& m, std::size_t r) { return "x" + std::to_string(m.rows.at(r)); }
inline std::string col_label(const BiAdjacency& m, std::size_t c) { return "t" + std::to_string(m.cols.at(c)); }

} // namespace borel

#endif
