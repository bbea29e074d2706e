#ifndef COXTWIST_CYCLOTOMIC_HPP_
#define COXTWIST_CYCLOTOMIC_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace coxtwist {

  // Z[x] / Phi_N(x), with x a primitive N-th root of unity. Elements are
  // coefficient vectors of length degree() in the power basis; coefficients
  // are int64 and every operation throws ArithmeticLimit rather than wrap.
  class CyclotomicRing {
   public:
    using Coeffs = std::vector<std::int64_t>;

    explicit CyclotomicRing(int N);

    // Shared instance per modulus.
    static std::shared_ptr<CyclotomicRing const> get(int N);

    int modulus() const noexcept {
      return _N;
    }
    std::size_t degree() const noexcept {
      return _d;
    }
    // Coefficients of Phi_N, constant term first; degree() + 1 entries.
    Coeffs const& phi() const noexcept {
      return _phi;
    }

    Coeffs zero() const {
      return Coeffs(_d, 0);
    }
    Coeffs constant(std::int64_t c) const;
    // x^k reduced, for any integer k.
    Coeffs zeta_power(long k) const;
    // 2 cos(pi / m) = x^(N/2m) + x^(-N/2m); needs 2m | N.
    Coeffs two_cos_pi_over(int m) const;

    void multiply(std::span<std::int64_t const> a,
                  std::span<std::int64_t const> b,
                  std::span<std::int64_t>       out) const;

    // Folds a product buffer of length 2 degree() - 1 into `out`.
    void reduce(std::span<__int128 const> wide, std::span<std::int64_t> out) const;

    // Bits of the largest reduction-table entry; used for overflow guards.
    int table_bits() const noexcept {
      return _table_bits;
    }

    // Value at x = exp(2 pi i / N); real part only.
    long double evaluate(std::span<std::int64_t const> a) const;

   private:
    int                 _N;
    std::size_t         _d;
    Coeffs              _phi;
    std::vector<Coeffs> _table;  // x^(d + k) mod Phi_N, k = 0 .. d - 2
    int                 _table_bits = 0;
    std::vector<long double> _cos;
  };

  // Integer coefficients of Phi_N.
  std::vector<std::int64_t> cyclotomic_polynomial(int N);

  int bit_length(std::int64_t v) noexcept;
  int bit_length(std::span<std::int64_t const> v) noexcept;

  // An element of Q(zeta_N): integer numerator over a positive denominator,
  // always stored in lowest terms.
  class CycNumber {
   public:
    CycNumber() = default;
    CycNumber(std::shared_ptr<CyclotomicRing const> ring,
              CyclotomicRing::Coeffs                num,
              std::int64_t                          den = 1);

    static CycNumber integer(std::shared_ptr<CyclotomicRing const> ring,
                             std::int64_t                          v);
    // 2 cos(pi/m), or 2 for m = 0 (the infinite label convention).
    static CycNumber two_cos(std::shared_ptr<CyclotomicRing const> ring, int m);

    CyclotomicRing const& ring() const {
      return *_ring;
    }
    std::shared_ptr<CyclotomicRing const> const& ring_ptr() const noexcept {
      return _ring;
    }
    CyclotomicRing::Coeffs const& numerator() const noexcept {
      return _num;
    }
    std::int64_t denominator() const noexcept {
      return _den;
    }

    bool is_zero() const;
    bool is_integer() const noexcept {
      return _den == 1;
    }

    CycNumber operator-() const;
    CycNumber operator+(CycNumber const& o) const;
    CycNumber operator-(CycNumber const& o) const;
    CycNumber operator*(CycNumber const& o) const;
    // Throws on division by zero.
    CycNumber inverse() const;
    CycNumber operator/(CycNumber const& o) const {
      return *this * o.inverse();
    }

    bool operator==(CycNumber const& o) const;

    long double to_long_double() const;
    std::string to_string() const;

   private:
    void normalize();

    std::shared_ptr<CyclotomicRing const> _ring;
    CyclotomicRing::Coeffs                _num;
    std::int64_t                          _den = 1;
  };

}  // namespace coxtwist

#endif  // COXTWIST_CYCLOTOMIC_HPP_
