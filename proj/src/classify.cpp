#include "coxtwist/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxtwist {

  namespace {

    std::uint64_t factorial(int n) {
      std::uint64_t f = 1;
      for (int k = 2; k <= n; ++k) {
        f *= static_cast<std::uint64_t>(k);
      }
      return f;
    }

    // Largest lcm over partitions of n where a part l may count as l or, if
    // `signed_cycles`, as 2l (a negative cycle of a signed permutation).
    std::uint64_t max_partition_lcm(int n, bool signed_cycles) {
      std::uint64_t best = 1;
      auto          rec  = [&](auto& self, int left, int max_part, std::uint64_t acc)
          -> void {
        best = std::max(best, acc);
        if (left == 0) {
          return;
        }
        for (int part = std::min(left, max_part); part >= 1; --part) {
          self(self, left - part, part, std::lcm(acc, std::uint64_t(part)));
          if (signed_cycles) {
            self(self, left - part, part, std::lcm(acc, std::uint64_t(2 * part)));
          }
        }
      };
      rec(rec, n, n, 1);
      return best;
    }

    struct Shape {
      SphericalType            type;
      std::vector<std::size_t> opposition;  // pairs swapped, flattened
    };

    std::optional<Shape> recognize(CoxeterMatrix const& M, VertexSet C) {
      auto const v = C.members();
      auto const n = static_cast<int>(v.size());
      if (n == 0) {
        return std::nullopt;
      }
      if (n == 1) {
        return Shape{type_A(1), {}};
      }
      int edges = 0;
      for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) {
          auto m = M.label(v[a], v[b]);
          if (m.is_infinite()) {
            return std::nullopt;
          }
          if (m.is_edge()) {
            ++edges;
          }
        }
      }
      if (n == 2) {
        int m = M.label(v[0], v[1]).value();
        if (m == 3) {
          return Shape{type_A(2), {v[0], v[1]}};
        }
        Shape s{type_I2(m), {}};
        if (m % 2 == 1) {
          s.opposition = {v[0], v[1]};
        }
        return s;
      }
      if (edges != n - 1) {
        return std::nullopt;
      }
      auto neighbours = [&](std::size_t x) {
        std::vector<std::size_t> out;
        for (auto y : v) {
          if (y != x && M.label(x, y).is_edge()) {
            out.push_back(y);
          }
        }
        return out;
      };
      std::vector<std::size_t> branch;
      std::vector<std::size_t> ends;
      for (auto x : v) {
        auto d = neighbours(x).size();
        if (d > 3) {
          return std::nullopt;
        }
        if (d == 3) {
          branch.push_back(x);
        } else if (d == 1) {
          ends.push_back(x);
        }
      }
      // Follows a chain away from `from`; the diagram is a tree here.
      auto walk = [&](std::size_t from, std::size_t start) {
        std::vector<std::size_t> path{start};
        std::size_t              prev = from, cur = start;
        while (true) {
          std::size_t next = M.rank();
          for (auto y : neighbours(cur)) {
            if (y != prev) {
              next = y;
            }
          }
          if (next == M.rank()) {
            break;
          }
          prev = cur;
          cur  = next;
          path.push_back(cur);
        }
        return path;
      };

      if (branch.empty()) {
        auto path = walk(M.rank(), ends[0]);
        if (path.size() != v.size()) {
          return std::nullopt;
        }
        std::vector<int> lab;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
          lab.push_back(M.label(path[k], path[k + 1]).value());
        }
        int odd_one = -1;
        for (std::size_t k = 0; k < lab.size(); ++k) {
          if (lab[k] != 3) {
            if (odd_one != -1) {
              return std::nullopt;
            }
            odd_one = static_cast<int>(k);
          }
        }
        if (odd_one == -1) {
          Shape s{type_A(n), {}};
          for (int k = 0; k < n / 2; ++k) {
            s.opposition.push_back(path[k]);
            s.opposition.push_back(path[n - 1 - k]);
          }
          return s;
        }
        int  m       = lab[odd_one];
        bool at_end  = odd_one == 0 || odd_one == n - 2;
        if (m == 4 && at_end) {
          return Shape{type_B(n), {}};
        }
        if (m == 4 && n == 4 && odd_one == 1) {
          return Shape{{Family::F, 4, 0}, {}};
        }
        if (m == 5 && at_end && (n == 3 || n == 4)) {
          return Shape{type_H(n), {}};
        }
        return std::nullopt;
      }

      if (branch.size() != 1) {
        return std::nullopt;
      }
      for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) {
          auto m = M.label(v[a], v[b]);
          if (m.is_edge() && m.value() != 3) {
            return std::nullopt;
          }
        }
      }
      auto const                            centre = branch[0];
      std::vector<std::vector<std::size_t>> arms;
      for (auto y : neighbours(centre)) {
        arms.push_back(walk(centre, y));
      }
      std::sort(arms.begin(), arms.end(), [](auto const& a, auto const& b) {
        return a.size() < b.size();
      });
      auto const p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
      if (p == 1 && q == 1) {
        Shape s{type_D(n), {}};
        if (n % 2 == 1) {
          s.opposition = {arms[0][0], arms[1][0]};
        }
        return s;
      }
      if (p == 1 && q == 2 && r >= 2 && r <= 4) {
        Shape s{{Family::E, n, 0}, {}};
        if (n == 6) {
          for (std::size_t k = 0; k < 2; ++k) {
            s.opposition.push_back(arms[1][k]);
            s.opposition.push_back(arms[2][k]);
          }
        }
        return s;
      }
      return std::nullopt;
    }

  }  // namespace

  SphericalType type_A(int n) {
    return {Family::A, n, 0};
  }
  SphericalType type_B(int n) {
    return {Family::B, n, 0};
  }
  SphericalType type_D(int n) {
    return {Family::D, n, 0};
  }
  SphericalType type_H(int n) {
    return {Family::H, n, 0};
  }
  SphericalType type_I2(int m) {
    if (m == 3) {
      return type_A(2);
    }
    if (m == 4) {
      return type_B(2);
    }
    return {Family::I, 2, m};
  }

  std::string SphericalType::to_string() const {
    switch (family) {
      case Family::A:
        return "A" + std::to_string(rank);
      case Family::B:
        return "B" + std::to_string(rank);
      case Family::D:
        return "D" + std::to_string(rank);
      case Family::E:
        return "E" + std::to_string(rank);
      case Family::F:
        return "F4";
      case Family::H:
        return "H" + std::to_string(rank);
      case Family::I:
        return "I2(" + std::to_string(parameter) + ")";
    }
    return "?";
  }

  std::uint64_t SphericalType::group_order() const {
    switch (family) {
      case Family::A:
        return factorial(rank + 1);
      case Family::B:
        return (std::uint64_t{1} << rank) * factorial(rank);
      case Family::D:
        return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
      case Family::E:
        return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
      case Family::F:
        return 1152;
      case Family::H:
        return rank == 3 ? 120 : 14400;
      case Family::I:
        return 2 * static_cast<std::uint64_t>(parameter);
    }
    return 0;
  }

  std::uint64_t SphericalType::max_element_order() const {
    switch (family) {
      case Family::A:
        return max_partition_lcm(rank + 1, false);
      case Family::B:
      case Family::D:
        return max_partition_lcm(rank, true);
      case Family::E:
        return rank == 6 ? 12 : 30;
      case Family::F:
        return 12;
      case Family::H:
        return rank == 3 ? 10 : 30;
      case Family::I:
        return static_cast<std::uint64_t>(parameter);
    }
    return 0;
  }

  std::optional<SphericalType> recognize_component(CoxeterMatrix const& M,
                                                   VertexSet            C) {
    auto comps = components(M, C);
    if (comps.size() != 1) {
      throw PreconditionError("recognition needs a connected diagram");
    }
    auto s = recognize(M, C);
    if (!s) {
      return std::nullopt;
    }
    return s->type;
  }

  std::optional<SphericalType> recognize_irreducible(CoxeterMatrix const& M) {
    return recognize_component(M, M.all());
  }

  std::optional<std::vector<SphericalComponent>>
  spherical_decomposition(CoxeterMatrix const& M, VertexSet J) {
    if (!J.is_subset_of(M.all())) {
      throw Error("subset is not contained in the diagram");
    }
    std::vector<SphericalComponent> out;
    for (auto C : components(M, J)) {
      auto s = recognize(M, C);
      if (!s) {
        return std::nullopt;
      }
      out.push_back({C, s->type});
    }
    return out;
  }

  bool is_spherical(CoxeterMatrix const& M, VertexSet J) {
    if (!J.is_subset_of(M.all())) {
      throw Error("subset is not contained in the diagram");
    }
    auto v = J.members();
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        if (M.label(v[a], v[b]).is_infinite()) {
          return false;
        }
      }
    }
    return spherical_decomposition(M, J).has_value();
  }

  std::vector<VertexSet> spherical_subsets(CoxeterMatrix const& M,
                                           VertexSet            within) {
    std::vector<VertexSet> out;
    auto const             cand = (within & M.all()).members();
    auto rec = [&](auto& self, VertexSet J, std::size_t from) -> void {
      for (std::size_t k = from; k < cand.size(); ++k) {
        auto K = J;
        K.insert(cand[k]);
        if (is_spherical(M, K)) {
          out.push_back(K);
          self(self, K, k + 1);
        }
      }
    };
    rec(rec, VertexSet(), 0);
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
      return a.bits() < b.bits();
    });
    return out;
  }

  std::vector<VertexSet> spherical_subsets(CoxeterMatrix const& M) {
    return spherical_subsets(M, M.all());
  }

  bool Opposition::is_identity() const {
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] != i) {
        return false;
      }
    }
    return true;
  }

  Opposition opposition_involution(CoxeterMatrix const& M, VertexSet J) {
    if (!J.is_subset_of(M.all())) {
      throw Error("subset is not contained in the diagram");
    }
    Opposition out{J, std::vector<std::size_t>(M.rank())};
    std::iota(out.image.begin(), out.image.end(), 0);
    for (auto C : components(M, J)) {
      auto s = recognize(M, C);
      if (!s) {
        throw PreconditionError("opposition involution of a non-spherical "
                                "subset "
                                + M.format(J));
      }
      for (std::size_t k = 0; k + 1 < s->opposition.size(); k += 2) {
        out.image[s->opposition[k]]     = s->opposition[k + 1];
        out.image[s->opposition[k + 1]] = s->opposition[k];
      }
    }
    return out;
  }

  std::optional<VertexSet>
  find_subdiagram_of_type(CoxeterMatrix const&              M,
                          std::vector<SphericalType> const& types) {
    std::vector<int> sizes;
    for (auto const& t : types) {
      sizes.push_back(t.rank);
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    auto const n = M.rank();
    for (auto size : sizes) {
      if (static_cast<std::size_t>(size) > n) {
        continue;
      }
      // k-subsets in colex order
      std::vector<std::size_t> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        VertexSet S;
        for (auto i : idx) {
          S.insert(i);
        }
        if (components(M, S).size() == 1) {
          auto s = recognize(M, S);
          if (s
              && std::find(types.begin(), types.end(), s->type)
                     != types.end()) {
            return S;
          }
        }
        int k = size - 1;
        while (k >= 0 && idx[k] == n - size + static_cast<std::size_t>(k)) {
          --k;
        }
        if (k < 0) {
          break;
        }
        ++idx[k];
        for (int r = k + 1; r < size; ++r) {
          idx[r] = idx[r - 1] + 1;
        }
      }
    }
    return std::nullopt;
  }

  std::uint64_t finite_order_bound(CoxeterMatrix const& M) {
    std::uint64_t best = 1;
    for (auto J : spherical_subsets(M)) {
      std::uint64_t prod = 1;
      auto const    dec  = spherical_decomposition(M, J);
      for (auto const& c : *dec) {
        prod *= c.type.max_element_order();
      }
      best = std::max(best, prod);
    }
    return best;
  }

  std::string describe_type(CoxeterMatrix const& M, VertexSet J) {
    if (J.empty()) {
      return "empty";
    }
    auto dec = spherical_decomposition(M, J);
    if (!dec) {
      return "non-spherical";
    }
    std::ostringstream out;
    bool               sep = false;
    for (auto const& c : *dec) {
      if (sep) {
        out << " x ";
      }
      out << c.type.to_string();
      sep = true;
    }
    return out.str();
  }

}  // namespace coxtwist
