#pragma once

// Multipartitions: finitely supported maps from Frobenius orbits to
// partitions. On the element side they label conjugacy classes, on the
// character side irreducible characters.

#include "ucm/partitions.hpp"
#include "ucm/tori.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace ucm {

class MultiPartition {
 public:
  explicit MultiPartition(Side side = Side::character) : side_(side) {}

  MultiPartition(Side side, std::initializer_list<std::pair<const OrbitLabel, Partition>> entries) : side_(side) {
    for (const auto& [orbit, part] : entries) set(orbit, part);
  }

  Side side() const { return side_; }

  /// Partition assigned to the orbit (empty when unassigned).
  Partition at(const OrbitLabel& orbit) const {
    auto it = parts_.find(orbit);
    return it == parts_.end() ? Partition() : it->second;
  }

  void set(const OrbitLabel& orbit, Partition part) {
    require(orbit.side == side_, "MultiPartition: orbit on the wrong side");
    if (part.empty()) {
      parts_.erase(orbit);
    } else {
      parts_[orbit] = std::move(part);
    }
  }

  const std::map<OrbitLabel, Partition>& entries() const { return parts_; }

  /// sum over orbits of |orbit| * |partition|
  int size() const {
    int total = 0;
    for (const auto& [orbit, part] : parts_) total += orbit.size() * part.size();
    return total;
  }

  auto operator<=>(const MultiPartition&) const = default;

 private:
  Side side_;
  std::map<OrbitLabel, Partition> parts_;
};

/// Compact text key, e.g. "theta:1:0=(1,1)|theta:2:1=(1)"; "{}" when empty.
inline std::string to_string(const MultiPartition& mp) {
  if (mp.entries().empty()) return "{}";
  std::string out;
  for (const auto& [orbit, part] : mp.entries()) {
    if (!out.empty()) out += "|";
    out += to_string(orbit) + "=" + to_string(part);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MultiPartition& mp) { return os << to_string(mp); }

/// n(mp) = sum |orbit| n(partition)
inline int n_stat(const MultiPartition& mp) {
  int total = 0;
  for (const auto& [orbit, part] : mp.entries()) total += orbit.size() * n_stat(part);
  return total;
}

inline int length(const MultiPartition& mp) {
  int total = 0;
  for (const auto& [orbit, part] : mp.entries()) total += part.length();
  return total;
}

inline MultiPartition conjugate(const MultiPartition& mp) {
  MultiPartition out(mp.side());
  for (const auto& [orbit, part] : mp.entries()) out.set(orbit, conjugate(part));
  return out;
}

/// Hook lengths scaled by the orbit size.
inline std::vector<int> weighted_hooks(const MultiPartition& mp) {
  std::vector<int> out;
  for (const auto& [orbit, part] : mp.entries()) {
    for (int h : hook_lengths(part)) out.push_back(orbit.size() * h);
  }
  return out;
}

/// bar(mp)^(phi) = mp^(conjugate phi)
inline MultiPartition bar(const TorusContext& ctx, const MultiPartition& mp) {
  MultiPartition out(mp.side());
  for (const auto& [orbit, part] : mp.entries()) out.set(conjugate_orbit(ctx, orbit), part);
  return out;
}

struct MultiPartitionStats {
  int size;
  int n;
  int n_conjugate;
  int length;
  std::vector<int> weighted_hooks;
  MultiPartition bar;
};

inline MultiPartitionStats mp_stats(const TorusContext& ctx, const MultiPartition& mp) {
  return {mp.size(), n_stat(mp), n_stat(conjugate(mp)), length(mp), weighted_hooks(mp), bar(ctx, mp)};
}

/// Which partitions may be assigned to an orbit during enumeration.
enum class PartFamily { all, columns, rows };

inline bool in_family(const Partition& p, PartFamily family) {
  switch (family) {
    case PartFamily::columns:
      return p.is_column();
    case PartFamily::rows:
      return p.is_row();
    case PartFamily::all:
      break;
  }
  return true;
}

/// All multipartitions of total size n on the given side, sorted.
inline std::vector<MultiPartition> enumerate_multipartitions(const TorusContext& ctx, int n, Side side,
                                                             PartFamily family = PartFamily::all) {
  require(n >= 0, "enumerate_multipartitions: negative size");
  const auto universe = orbit_universe(ctx, side, n);
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    for (auto& p : enumerate_partitions(k)) {
      if (in_family(p, family)) by_size[static_cast<std::size_t>(k)].push_back(std::move(p));
    }
  }
  std::vector<MultiPartition> out;
  MultiPartition current(side);
  std::function<void(std::size_t, int)> extend = [&](std::size_t first, int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = first; i < universe.size(); ++i) {
      const OrbitLabel& orbit = universe[i];
      if (orbit.size() > remaining) break;  // universe is sorted by level
      for (int k = 1; k * orbit.size() <= remaining; ++k) {
        for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
          current.set(orbit, p);
          extend(i + 1, remaining - k * orbit.size());
        }
      }
      current.set(orbit, Partition());
    }
  };
  extend(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

/// Delta: relabel each character orbit by the element orbit with the same
/// level and exponent.
inline MultiPartition delta_map(const MultiPartition& theta) {
  require(theta.side() == Side::character, "delta_map: expected a character-side multipartition");
  MultiPartition out(Side::element);
  for (const auto& [orbit, part] : theta.entries()) out.set(delta_orbit(orbit), part);
  return out;
}

inline MultiPartition delta_inverse(const MultiPartition& phi) {
  require(phi.side() == Side::element, "delta_inverse: expected an element-side multipartition");
  MultiPartition out(Side::character);
  for (const auto& [orbit, part] : phi.entries()) out.set(delta_orbit_inverse(orbit), part);
  return out;
}

}  // namespace ucm
