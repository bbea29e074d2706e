#ifndef COXTWIST_TESTS_FIXTURES_HPP_
#define COXTWIST_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coxtwist/diagram.hpp"

namespace fixtures {

  using coxtwist::CoxeterMatrix;
  using coxtwist::Label;

  // Four vertices s1..s4: path with labels 3, every other pair infinite.
  CoxeterMatrix path_example();
  // The twist of path_example by J = {s2, s3}, K = {s1}: a star at s2.
  CoxeterMatrix star_example();

  // Linear diagram with the given consecutive labels, vertices named x1, x2, ...
  CoxeterMatrix path(std::vector<int> const& labels, std::string const& prefix = "x");
  CoxeterMatrix type_D(int n);
  CoxeterMatrix type_E(int n);

  // Parses "a b 3; b c inf" style edge lists over the named vertices.
  CoxeterMatrix make(std::vector<std::string> const& vertices,
                     std::vector<std::tuple<std::string, std::string, std::string>> const& edges);

  // All connected diagrams with rank in [1, max_rank] whose labels come from
  // `labels` (0 stands for infinity, 2 for no edge), one per isomorphism class.
  std::vector<CoxeterMatrix> connected_corpus(std::size_t max_rank, std::vector<int> const& labels);

  // Random diagram over vertices v0..v{n-1} with labels drawn from `labels`.
  CoxeterMatrix random_diagram(std::mt19937_64& rng, std::size_t n, std::vector<int> const& labels);

  // The same diagram with vertices shuffled and renamed w0, w1, ...
  CoxeterMatrix shuffled(std::mt19937_64& rng, CoxeterMatrix const& M);

  Label to_label(int code);

  // Permutations of {0..n-1} for test-side group models.
  using Perm = std::vector<int>;
  Perm          compose(Perm const& a, Perm const& b);  // a after b
  std::uint64_t perm_order(Perm const& p);
  Perm          transposition(int n, int i, int j);
  // Closure of a set of permutations (brute force).
  std::size_t group_size(std::vector<Perm> const& gens);

}  // namespace fixtures

#endif  // COXTWIST_TESTS_FIXTURES_HPP_
