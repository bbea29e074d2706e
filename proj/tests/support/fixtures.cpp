#include "support/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "coxtwist/canonical.hpp"

namespace fixtures {

  Label to_label(int code) {
    return code == 0 ? Label::infinity() : Label(code);
  }

  CoxeterMatrix make(std::vector<std::string> const& vertices,
                     std::vector<std::tuple<std::string, std::string, std::string>> const& edges) {
    CoxeterMatrix M(vertices);
    for (auto const& [u, v, l] : edges) {
      M.set_label(u, v, l == "inf" ? Label::infinity() : Label(std::stoi(l)));
    }
    return M;
  }

  CoxeterMatrix path_example() {
    return make({"s1", "s2", "s3", "s4"},
                {{"s1", "s2", "3"},
                 {"s2", "s3", "3"},
                 {"s3", "s4", "3"},
                 {"s1", "s3", "inf"},
                 {"s1", "s4", "inf"},
                 {"s2", "s4", "inf"}});
  }

  CoxeterMatrix star_example() {
    return make({"s1", "s2", "s3", "s4"},
                {{"s1", "s2", "3"},
                 {"s2", "s3", "3"},
                 {"s2", "s4", "3"},
                 {"s1", "s3", "inf"},
                 {"s1", "s4", "inf"},
                 {"s3", "s4", "inf"}});
  }

  CoxeterMatrix path(std::vector<int> const& labels, std::string const& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= labels.size(); ++i) {
      names.push_back(prefix + std::to_string(i + 1));
    }
    CoxeterMatrix M(names);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      M.set_label(i, i + 1, to_label(labels[i]));
    }
    return M;
  }

  CoxeterMatrix type_D(int n) {
    // x1 - ... - x(n-2) with x(n-1) and xn both attached to x(n-2)
    auto M = path(std::vector<int>(static_cast<std::size_t>(n - 2), 3));
    M.add_vertex("x" + std::to_string(n));
    M.set_label(static_cast<std::size_t>(n - 3), static_cast<std::size_t>(n - 1), Label(3));
    return M;
  }

  CoxeterMatrix type_E(int n) {
    // path x1 .. x(n-1), extra vertex xn attached to x3
    auto M = path(std::vector<int>(static_cast<std::size_t>(n - 2), 3));
    M.add_vertex("x" + std::to_string(n));
    M.set_label(2, static_cast<std::size_t>(n - 1), Label(3));
    return M;
  }

  namespace {

    bool connected(CoxeterMatrix const& M) {
      return M.rank() > 0 && coxtwist::components(M).size() == 1;
    }

  }  // namespace

  std::vector<CoxeterMatrix> connected_corpus(std::size_t max_rank, std::vector<int> const& labels) {
    std::vector<CoxeterMatrix> out;
    for (std::size_t n = 1; n <= max_rank; ++n) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back("v" + std::to_string(i));
      }
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          pairs.emplace_back(i, j);
        }
      }
      std::set<std::string>    seen;
      std::vector<std::size_t> digits(pairs.size(), 0);
      while (true) {
        CoxeterMatrix M(names);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          M.set_label(pairs[p].first, pairs[p].second, to_label(labels[digits[p]]));
        }
        if (connected(M) && seen.insert(coxtwist::canonical_form(M).key()).second) {
          out.push_back(M);
        }
        std::size_t p = 0;
        while (p < digits.size() && ++digits[p] == labels.size()) {
          digits[p++] = 0;
        }
        if (p == digits.size()) {
          break;
        }
      }
    }
    return out;
  }

  CoxeterMatrix random_diagram(std::mt19937_64& rng, std::size_t n, std::vector<int> const& labels) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("v" + std::to_string(i));
    }
    CoxeterMatrix                              M(names);
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        M.set_label(i, j, to_label(labels[pick(rng)]));
      }
    }
    return M;
  }

  CoxeterMatrix shuffled(std::mt19937_64& rng, CoxeterMatrix const& M) {
    std::vector<std::size_t> order(M.rank());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < M.rank(); ++i) {
      names.push_back("w" + std::to_string(i));
    }
    CoxeterMatrix out(names);
    for (std::size_t i = 0; i < M.rank(); ++i) {
      for (std::size_t j = i + 1; j < M.rank(); ++j) {
        out.set_label(i, j, M.label(order[i], order[j]));
      }
    }
    return out;
  }

  Perm compose(Perm const& a, Perm const& b) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i] = a[static_cast<std::size_t>(b[i])];
    }
    return out;
  }

  std::uint64_t perm_order(Perm const& p) {
    Perm          id(p.size());
    std::iota(id.begin(), id.end(), 0);
    auto          q = p;
    std::uint64_t k = 1;
    while (q != id) {
      q = compose(p, q);
      ++k;
    }
    return k;
  }

  Perm transposition(int n, int i, int j) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    return p;
  }

  std::size_t group_size(std::vector<Perm> const& gens) {
    Perm id(gens.front().size());
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm>    seen{id};
    std::vector<Perm> queue{id};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (auto const& g : gens) {
        auto x = compose(g, queue[h]);
        if (seen.insert(x).second) {
          queue.push_back(x);
        }
      }
    }
    return seen.size();
  }

}  // namespace fixtures
