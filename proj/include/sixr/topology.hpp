#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixr/grid.hpp"
#include "sixr/scalar_field.hpp"

namespace sixr {

/// Grid cells (indexed by their base corner) whose 2^D corner nodes carry
/// mixed signs; the discrete trace of the zero hypersurface.
template <int D>
struct ZeroCellSet {
  GridSpec<D> grid;
  std::vector<std::int64_t> cells;  ///< sorted linear cell ids
};

template <int D>
struct BranchData {
  int id = 0;
  std::int64_t min_cell = 0;             ///< smallest member cell (ordering key)
  std::int64_t cell_count = 0;
  std::array<int, D> class_signed{};     ///< signed generator-circle intersection count
  std::array<int, D> class_label{};      ///< |class_signed|
  std::array<int, D> crossing_max{};     ///< max unsigned crossings over circles, per axis
  bool separating = false;               ///< complement disconnects when this branch is removed
  bool parity_even = false;              ///< all per-circle crossing parities even
  bool resolved = true;                  ///< false when any consistency check failed
};

/// Partition of the zero cells into face-connected components.
template <int D>
struct BranchPartition {
  GridSpec<D> grid;
  std::vector<std::int32_t> cell_branch;  ///< dense, per cell; -1 where not mixed
  std::vector<BranchData<D>> branches;    ///< ordered by smallest member cell
};

struct SheetDecomposition {
  std::int64_t count = 0;
  std::vector<std::int64_t> sizes;  ///< node counts per sheet, descending
};

/// Ambiguity flags raised while classifying; drives the refinement pass.
template <int D>
struct TopologyFlags {
  std::array<bool, D> axis{};
  std::vector<std::string> notes;

  bool any() const {
    for (bool b : axis)
      if (b) return true;
    return !notes.empty();
  }
  void raise(int ax, std::string note) {
    if (ax >= 0) axis[static_cast<std::size_t>(ax)] = true;
    if (std::find(notes.begin(), notes.end(), note) == notes.end())
      notes.push_back(std::move(note));
  }
};

namespace detail {

struct UnionFind {
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> size;

  explicit UnionFind(std::int64_t n)
      : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::int32_t find(std::int32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];  // path halving
      v = parent[v];
    }
    return v;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace detail

/// Cells whose corners carry both signs. Periodic on all axes.
template <int D>
ZeroCellSet<D> extract_zero_cells(const SignField<D>& signs) {
  ZeroCellSet<D> out;
  out.grid = signs.grid;
  const auto& g = signs.grid;
  const std::int64_t total = g.node_count();
  for (std::int64_t cell = 0; cell < total; ++cell) {
    const auto base = g.coords(cell);
    const std::int8_t first = signs.signs[static_cast<std::size_t>(cell)];
    bool mixed = false;
    for (unsigned corner = 1; corner < (1u << D) && !mixed; ++corner) {
      auto c = base;
      for (int j = 0; j < D; ++j)
        if (corner & (1u << j)) c[j] = g.wrap(j, c[j] + 1);
      if (signs.signs[static_cast<std::size_t>(g.index(c))] != first) mixed = true;
    }
    if (mixed) out.cells.push_back(cell);
  }
  return out;
}

/// Face-connected components of the zero cells (cells sharing a (D-1)-face,
/// i.e. adjacent along one axis, periodic). Ids follow the smallest member.
template <int D>
BranchPartition<D> branches(const ZeroCellSet<D>& cells) {
  BranchPartition<D> out;
  out.grid = cells.grid;
  const auto& g = cells.grid;
  out.cell_branch.assign(static_cast<std::size_t>(g.node_count()), -1);
  const std::int32_t m = static_cast<std::int32_t>(cells.cells.size());
  if (m == 0) return out;

  // compact index per mixed cell
  std::vector<std::int32_t> compact(static_cast<std::size_t>(g.node_count()), -1);
  for (std::int32_t i = 0; i < m; ++i)
    compact[static_cast<std::size_t>(cells.cells[static_cast<std::size_t>(i)])] = i;

  detail::UnionFind uf(m);
  for (std::int32_t i = 0; i < m; ++i) {
    const std::int64_t cell = cells.cells[static_cast<std::size_t>(i)];
    for (int axis = 0; axis < D; ++axis) {
      const std::int64_t nb = g.neighbor(cell, axis);
      const std::int32_t j = compact[static_cast<std::size_t>(nb)];
      if (j >= 0) uf.unite(i, j);
    }
  }

  // map roots to ids ordered by smallest member cell (cells are sorted, so
  // the first appearance of a root is its smallest member)
  std::map<std::int32_t, std::int32_t> root_to_id;
  for (std::int32_t i = 0; i < m; ++i) {
    const std::int32_t root = uf.find(i);
    auto [it, inserted] = root_to_id.try_emplace(root, 0);
    if (inserted) {
      it->second = static_cast<std::int32_t>(out.branches.size());
      BranchData<D> b;
      b.id = it->second;
      b.min_cell = cells.cells[static_cast<std::size_t>(i)];
      out.branches.push_back(b);
    }
    const std::int32_t id = it->second;
    out.branches[static_cast<std::size_t>(id)].cell_count++;
    out.cell_branch[static_cast<std::size_t>(cells.cells[static_cast<std::size_t>(i)])] = id;
  }
  return out;
}

namespace detail {

/// Branch owning the sign-change edge from `node` one step along `axis`.
/// The candidates are the 2^(D-1) cells containing the edge; they are all
/// mixed by construction. Distinct owners mean two branches meet at the
/// edge, which the caller must treat as an ambiguity.
template <int D>
inline std::int32_t edge_owner(const BranchPartition<D>& part, int axis, std::int64_t node,
                               bool* conflict) {
  const auto& g = part.grid;
  const auto u = g.coords(node);
  std::int32_t owner = -1;
  bool clash = false;
  for (unsigned med = 0; med < (1u << (D - 1)); ++med) {
    auto c = u;
    unsigned bit = 0;
    for (int j = 0; j < D; ++j) {
      if (j == axis) continue;
      if (med & (1u << bit)) c[j] = g.wrap(j, c[j] - 1);
      ++bit;
    }
    const std::int32_t b = part.cell_branch[static_cast<std::size_t>(g.index(c))];
    if (b < 0) continue;  // cannot happen for a true sign-change edge
    if (owner < 0)
      owner = b;
    else if (owner != b) {
      clash = true;
      owner = std::min(owner, b);
    }
  }
  if (conflict) *conflict = clash;
  return owner;
}

/// Visit every generator circle along `axis`; cb(base_node) is called once
/// per circle with the node at coordinate 0 on that axis.
template <int D, typename Cb>
inline void for_each_circle(const GridSpec<D>& g, int axis, Cb&& cb) {
  const std::int64_t total = g.node_count();
  const std::int64_t stride = g.stride(axis);
  const int n = g.n[axis];
  for (std::int64_t id = 0; id < total; ++id) {
    if ((id / stride) % n == 0) cb(id);
  }
}

}  // namespace detail

/// Unsigned sign changes along the closed circle of `axis` through `base`
/// (coordinates of the other axes in ascending axis order). Always even.
template <int D>
int circle_crossings(const SignField<D>& signs, int axis, const std::array<int, D - 1>& base) {
  const auto& g = signs.grid;
  std::array<int, D> c{};
  int k = 0;
  for (int j = 0; j < D; ++j) {
    if (j == axis) continue;
    c[j] = base[static_cast<std::size_t>(k++)];
  }
  c[axis] = 0;
  const std::int64_t start = g.index(c);
  const std::int64_t stride = g.stride(axis);
  const int n = g.n[axis];
  int crossings = 0;
  for (int m = 0; m < n; ++m) {
    const std::int8_t s0 = signs.signs[static_cast<std::size_t>(start + m * stride)];
    const std::int8_t s1 = signs.signs[static_cast<std::size_t>(start + ((m + 1) % n) * stride)];
    if (s0 != s1) ++crossings;
  }
  return crossings;
}

/// Per-axis maximum of circle_crossings over every circle.
template <int D>
std::array<int, D> max_circle_crossings(const SignField<D>& signs) {
  const auto& g = signs.grid;
  std::array<int, D> out{};
  for (int axis = 0; axis < D; ++axis) {
    const std::int64_t stride = g.stride(axis);
    const int n = g.n[axis];
    detail::for_each_circle(g, axis, [&](std::int64_t base) {
      int crossings = 0;
      for (int m = 0; m < n; ++m) {
        const std::int8_t s0 = signs.signs[static_cast<std::size_t>(base + m * stride)];
        const std::int8_t s1 = signs.signs[static_cast<std::size_t>(base + ((m + 1) % n) * stride)];
        if (s0 != s1) ++crossings;
      }
      out[axis] = std::max(out[axis], crossings);
    });
  }
  return out;
}

/// Fill class_signed / class_label / crossing_max / parity for every branch.
///
/// For each axis, each generator circle is walked once; each sign-change
/// edge is a crossing with sign +1 for (- -> +) in increasing coordinate,
/// attributed to the branch owning the edge. The signed sum per circle must
/// agree across all parallel circles a branch meets, and a branch whose sum
/// is nonzero (or whose crossing parity is odd) must meet every circle;
/// violations raise refinement flags and mark the branch unresolved.
template <int D>
TopologyFlags<D> compute_branch_classes(BranchPartition<D>& part, const SignField<D>& signs) {
  TopologyFlags<D> flags;
  const auto& g = part.grid;
  const std::int64_t total_nodes = g.node_count();
  const auto nb = static_cast<std::int32_t>(part.branches.size());
  if (nb == 0) return flags;

  struct AxisAcc {
    std::int64_t circles_met = 0;
    int signed_sum = 0;
    int parity = 0;
    int max_cross = 0;
    bool consistent = true;
  };

  for (int axis = 0; axis < D; ++axis) {
    std::vector<AxisAcc> acc(static_cast<std::size_t>(nb));
    const std::int64_t stride = g.stride(axis);
    const int n = g.n[axis];
    const std::int64_t circle_count = total_nodes / n;

    // per-circle scratch: (branch, signed, count), few entries per circle
    std::vector<std::array<int, 3>> scratch;
    detail::for_each_circle(g, axis, [&](std::int64_t base) {
      scratch.clear();
      for (int m = 0; m < n; ++m) {
        const std::int64_t u = base + m * stride;
        const std::int64_t v = base + ((m + 1) % n) * stride;
        const std::int8_t su = signs.signs[static_cast<std::size_t>(u)];
        const std::int8_t sv = signs.signs[static_cast<std::size_t>(v)];
        if (su == sv) continue;
        const int cross_sign = (su < 0) ? 1 : -1;
        bool conflict = false;
        const std::int32_t owner = detail::edge_owner(part, axis, u, &conflict);
        if (conflict) {
          flags.raise(axis, "crossing ownership conflict on axis " + std::to_string(axis));
          if (owner >= 0) part.branches[static_cast<std::size_t>(owner)].resolved = false;
          continue;
        }
        if (owner < 0) continue;
        bool found = false;
        for (auto& e : scratch)
          if (e[0] == owner) {
            e[1] += cross_sign;
            e[2] += 1;
            found = true;
            break;
          }
        if (!found) scratch.push_back({owner, cross_sign, 1});
      }
      for (const auto& e : scratch) {
        AxisAcc& a = acc[static_cast<std::size_t>(e[0])];
        if (a.circles_met == 0) {
          a.signed_sum = e[1];
          a.parity = e[2] & 1;
          a.max_cross = e[2];
        } else {
          if (a.signed_sum != e[1] || a.parity != (e[2] & 1)) a.consistent = false;
          a.max_cross = std::max(a.max_cross, e[2]);
        }
        a.circles_met++;
      }
    });

    for (std::int32_t b = 0; b < nb; ++b) {
      AxisAcc& a = acc[static_cast<std::size_t>(b)];
      BranchData<D>& br = part.branches[static_cast<std::size_t>(b)];
      if (!a.consistent) {
        flags.raise(axis, "branch " + std::to_string(b) +
                              ": parallel circles disagree on axis " + std::to_string(axis));
        br.resolved = false;
      }
      if (a.circles_met > 0 && a.circles_met < circle_count &&
          (a.signed_sum != 0 || a.parity != 0)) {
        flags.raise(axis, "branch " + std::to_string(b) +
                              ": nonzero class misses circles on axis " + std::to_string(axis));
        br.resolved = false;
      }
      br.class_signed[axis] = (a.circles_met > 0 && a.consistent) ? a.signed_sum : 0;
      br.class_label[axis] = std::abs(br.class_signed[axis]);
      br.crossing_max[axis] = a.max_cross;
    }
  }

  for (auto& br : part.branches) {
    br.parity_even = true;
    for (int axis = 0; axis < D; ++axis)
      if (br.crossing_max[axis] % 2 != 0) br.parity_even = false;
  }
  return flags;
}

/// Owners of all sign-change edges, keyed by node*D+axis in ascending order.
/// owner -2 marks a conflicted edge (two branches meet there).
struct EdgeOwnerIndex {
  std::vector<std::pair<std::int64_t, std::int32_t>> entries;
  bool any_conflict = false;
};

template <int D>
EdgeOwnerIndex build_edge_owner_index(const BranchPartition<D>& part, const SignField<D>& signs) {
  EdgeOwnerIndex index;
  const auto& g = part.grid;
  const std::int64_t total = g.node_count();
  for (std::int64_t u = 0; u < total; ++u) {
    for (int axis = 0; axis < D; ++axis) {
      const std::int64_t v = g.neighbor(u, axis);
      if (signs.signs[static_cast<std::size_t>(u)] == signs.signs[static_cast<std::size_t>(v)])
        continue;
      bool conflict = false;
      const std::int32_t owner = detail::edge_owner(part, axis, u, &conflict);
      if (conflict) index.any_conflict = true;
      index.entries.emplace_back(u * D + axis, conflict ? -2 : owner);
    }
  }
  return index;
}

/// Does removing this branch disconnect the torus? Nodes stay; edges whose
/// sign-change crossing belongs to the branch are dropped; the remaining
/// graph is checked for >= 2 components. Conflicted edges count as removed.
template <int D>
bool is_separating(const BranchPartition<D>& part, int branch_id, const SignField<D>& signs,
                   const EdgeOwnerIndex* index = nullptr, bool* saw_conflict = nullptr) {
  const auto& g = part.grid;
  const std::int64_t total = g.node_count();
  detail::UnionFind uf(total);
  if (saw_conflict) *saw_conflict = false;
  std::size_t cursor = 0;
  for (std::int64_t u = 0; u < total; ++u) {
    for (int axis = 0; axis < D; ++axis) {
      const std::int64_t v = g.neighbor(u, axis);
      if (signs.signs[static_cast<std::size_t>(u)] == signs.signs[static_cast<std::size_t>(v)]) {
        uf.unite(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
        continue;
      }
      std::int32_t owner;
      bool conflict = false;
      if (index) {
        const std::int64_t key = u * D + axis;
        while (cursor < index->entries.size() && index->entries[cursor].first < key) ++cursor;
        owner = (cursor < index->entries.size() && index->entries[cursor].first == key)
                    ? index->entries[cursor].second
                    : -1;
        conflict = (owner == -2);
      } else {
        owner = detail::edge_owner(part, axis, u, &conflict);
      }
      if (conflict && saw_conflict) *saw_conflict = true;
      if (owner == branch_id || conflict) continue;  // edge removed
      uf.unite(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
    }
  }
  std::int32_t first_root = -1;
  for (std::int64_t u = 0; u < total; ++u) {
    const std::int32_t r = uf.find(static_cast<std::int32_t>(u));
    if (first_root < 0)
      first_root = r;
    else if (r != first_root)
      return true;
  }
  return false;
}

/// Singularity-free sheets: components of the node graph with every
/// sign-change edge removed. Nodes inside the zero band (nudged during
/// thresholding) sit on the surface and are not assigned to sheets.
template <int D>
SheetDecomposition count_sheets(const SignField<D>& signs) {
  const auto& g = signs.grid;
  const std::int64_t total = g.node_count();
  std::vector<bool> on_surface(static_cast<std::size_t>(total), false);
  for (std::int64_t id : signs.nudged) on_surface[static_cast<std::size_t>(id)] = true;

  detail::UnionFind uf(total);
  for (std::int64_t u = 0; u < total; ++u) {
    if (on_surface[static_cast<std::size_t>(u)]) continue;
    for (int axis = 0; axis < D; ++axis) {
      const std::int64_t v = g.neighbor(u, axis);
      if (on_surface[static_cast<std::size_t>(v)]) continue;
      if (signs.signs[static_cast<std::size_t>(u)] == signs.signs[static_cast<std::size_t>(v)])
        uf.unite(static_cast<std::int32_t>(u), static_cast<std::int32_t>(v));
    }
  }
  std::map<std::int32_t, std::int64_t> root_sizes;
  for (std::int64_t u = 0; u < total; ++u) {
    if (on_surface[static_cast<std::size_t>(u)]) continue;
    root_sizes[uf.find(static_cast<std::int32_t>(u))]++;
  }
  SheetDecomposition out;
  out.count = static_cast<std::int64_t>(root_sizes.size());
  for (const auto& [root, size] : root_sizes) out.sizes.push_back(size);
  std::sort(out.sizes.rbegin(), out.sizes.rend());
  return out;
}

}  // namespace sixr
