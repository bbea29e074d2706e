#ifndef COXTWIST_DIAGRAM_HPP_
#define COXTWIST_DIAGRAM_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxtwist/error.hpp"

namespace coxtwist {

  // Order of the product of two distinct generators: an integer m >= 2 or
  // infinity. The diagonal value 1 is never represented.
  class Label {
   public:
    constexpr Label() = default;

    explicit Label(int m);

    static constexpr Label infinity() noexcept {
      Label l;
      l._value = kInfinity;
      return l;
    }

    constexpr bool is_infinite() const noexcept {
      return _value == kInfinity;
    }
    constexpr bool is_finite() const noexcept {
      return _value != kInfinity;
    }
    // True for label 2, i.e. the two generators commute.
    constexpr bool commutes() const noexcept {
      return _value == 2;
    }
    constexpr bool is_edge() const noexcept {
      return _value != 2;
    }
    int value() const;

    // Total order key: finite labels by value, infinity last.
    constexpr int code() const noexcept {
      return _value;
    }

    std::string to_string() const;

    constexpr auto operator<=>(Label const&) const noexcept = default;

   private:
    static constexpr int kInfinity = std::numeric_limits<int>::max();
    int                  _value    = 2;
  };

  // Subset of the vertices of a diagram, stored positionally. Diagrams are
  // limited to 64 vertices.
  class VertexSet {
   public:
    static constexpr std::size_t kMaxRank = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : _bits(bits) {}
    VertexSet(std::initializer_list<std::size_t> members);

    static VertexSet all(std::size_t n);

    constexpr bool contains(std::size_t i) const noexcept {
      return i < kMaxRank && ((_bits >> i) & 1U) != 0;
    }
    void insert(std::size_t i);
    void erase(std::size_t i) noexcept {
      if (i < kMaxRank) {
        _bits &= ~(std::uint64_t{1} << i);
      }
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }
    // Position of the smallest member; only meaningful when non-empty.
    constexpr std::size_t first() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(_bits));
    }
    constexpr bool is_subset_of(VertexSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }

    std::vector<std::size_t> members() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept {
      return VertexSet(a._bits | b._bits);
    }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept {
      return VertexSet(a._bits & b._bits);
    }
    // Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept {
      return VertexSet(a._bits & ~b._bits);
    }
    constexpr auto operator<=>(VertexSet const&) const noexcept = default;

   private:
    std::uint64_t _bits = 0;
  };

  // Label-preserving bijection between the vertex names of two diagrams.
  struct DiagramIso {
    std::map<std::string, std::string> mapping;

    std::string const& operator()(std::string const& v) const;
    DiagramIso         inverse() const;
    // (*this) after `first`.
    DiagramIso compose(DiagramIso const& first) const;

    bool operator==(DiagramIso const&) const = default;
  };

  // Coxeter matrix over an ordered list of named vertices. Pairs that are not
  // set carry label 2. Equality ignores the vertex order.
  class CoxeterMatrix {
   public:
    CoxeterMatrix() = default;
    explicit CoxeterMatrix(std::vector<std::string> vertices);

    std::size_t rank() const noexcept {
      return _names.size();
    }
    std::span<std::string const> vertices() const noexcept {
      return _names;
    }
    std::string const& name(std::size_t i) const {
      return _names.at(i);
    }
    std::optional<std::size_t> find(std::string_view name) const;
    // Throws UnknownVertex.
    std::size_t index_of(std::string_view name) const;
    VertexSet   vertex_set(std::span<std::string const> names) const;
    VertexSet   all() const {
      return VertexSet::all(rank());
    }

    Label label(std::size_t i, std::size_t j) const;
    Label label(std::string_view u, std::string_view v) const {
      return label(index_of(u), index_of(v));
    }
    void set_label(std::size_t i, std::size_t j, Label m);
    void set_label(std::string_view u, std::string_view v, Label m) {
      set_label(index_of(u), index_of(v), m);
    }

    // Appends an isolated vertex and returns its position.
    std::size_t add_vertex(std::string name);
    void        rename(std::size_t i, std::string name);

    // "{a,b,c}" in positional order.
    std::string format(VertexSet J) const;

    bool operator==(CoxeterMatrix const& other) const;

   private:
    std::vector<std::string> _names;
    std::vector<Label>       _labels;  // row-major rank x rank
  };

  bool is_valid_vertex_name(std::string_view name);

  CoxeterMatrix parse_diagram(std::string_view text);
  // Vertices sorted by name, then edges sorted lexicographically.
  std::string serialize(CoxeterMatrix const& M);

  CoxeterMatrix subdiagram(CoxeterMatrix const& M, VertexSet J);
  // Vertices outside J commuting with every member of J.
  VertexSet perp(CoxeterMatrix const& M, VertexSet J);
  // Connected components of the diagram (edges are labels >= 3 or infinity)
  // restricted to `within`, ordered by smallest member.
  std::vector<VertexSet> components(CoxeterMatrix const& M, VertexSet within);
  std::vector<VertexSet> components(CoxeterMatrix const& M);

  // The same diagram with every vertex renamed through `iso`.
  CoxeterMatrix relabel(CoxeterMatrix const& M, DiagramIso const& iso);
  // All off-diagonal labels (including 2), sorted.
  std::vector<Label> label_multiset(CoxeterMatrix const& M);
  // True if `iso` is a bijection from M's vertices onto M2's preserving labels.
  bool is_isomorphism(CoxeterMatrix const& M,
                      CoxeterMatrix const& M2,
                      DiagramIso const&    iso);

  // Diagram builders used throughout tests and examples.
  CoxeterMatrix dihedral(int m, std::string a = "a", std::string b = "b");
  CoxeterMatrix dihedral_infinite(std::string a = "a", std::string b = "b");
  CoxeterMatrix disjoint_union(CoxeterMatrix const& A, CoxeterMatrix const& B);

}  // namespace coxtwist

#endif  // COXTWIST_DIAGRAM_HPP_
