#pragma once

// Truncated bivariate formal power series over Integer and the generating
// functions of intersection-counted path pairs built on top of them.
//
// A BiSeries with cap D stores every coefficient c(i, j) of x^i y^j with
// i + j <= D. The coefficient of x^r y^(n-r) has total degree n, so a cap of
// D determines every count with path length n <= D exactly.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathpairs/exactmath.hpp"

namespace pathpairs::series {

/// A coefficient outside the truncation triangle was requested.
class OutOfCap : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Division by a monomial that does not divide the series.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BiSeries {
 public:
  /// The zero series with the given cap.
  explicit BiSeries(int cap);

  static BiSeries constant(const Integer& value, int cap);
  static BiSeries monomial(int x_exp, int y_exp, const Integer& value, int cap);
  static BiSeries x(int cap) { return monomial(1, 0, 1, cap); }
  static BiSeries y(int cap) { return monomial(0, 1, 1, cap); }

  int cap() const { return cap_; }

  /// Throws OutOfCap when i + j > cap; never returns a silent zero.
  const Integer& coefficient(int i, int j) const;

  /// Writes one coefficient. Entries beyond the cap are dropped.
  void set(int i, int j, const Integer& value);

  /// The same series truncated to a cap no larger than the current one.
  BiSeries truncated(int cap) const;

  bool is_zero() const;

  /// Entrywise equality over the smaller of the two caps.
  friend bool operator==(const BiSeries& a, const BiSeries& b);

 private:
  static std::size_t index(int i, int j) {
    const auto d = static_cast<std::size_t>(i + j);
    return d * (d + 1) / 2 + static_cast<std::size_t>(i);
  }
  Integer& at(int i, int j) { return coeffs_[index(i, j)]; }
  const Integer& at(int i, int j) const { return coeffs_[index(i, j)]; }

  int cap_;
  // Triangle ordered by total degree, then by x-exponent.
  std::vector<Integer> coeffs_;

  friend BiSeries add(const BiSeries&, const BiSeries&);
  friend BiSeries sub(const BiSeries&, const BiSeries&);
  friend BiSeries mul(const BiSeries&, const BiSeries&);
  friend BiSeries scale(const BiSeries&, const Integer&);
};

// Ring operations; mixed caps truncate to the smaller one.
BiSeries add(const BiSeries& a, const BiSeries& b);
BiSeries sub(const BiSeries& a, const BiSeries& b);
BiSeries mul(const BiSeries& a, const BiSeries& b);
BiSeries scale(const BiSeries& a, const Integer& c);
BiSeries pow(const BiSeries& a, unsigned exponent);

inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return add(a, b); }
inline BiSeries operator-(const BiSeries& a, const BiSeries& b) { return sub(a, b); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return mul(a, b); }
inline BiSeries operator*(const Integer& c, const BiSeries& a) { return scale(a, c); }

/// a / x. Requires every x^0 coefficient to vanish (NotDivisible otherwise);
/// the result cap is one less than the input cap.
BiSeries div_monomial_x(const BiSeries& a);
BiSeries div_monomial_y(const BiSeries& a);

/// 1 / (1 - g) for g with zero constant term (DomainError otherwise).
BiSeries geom_inverse(const BiSeries& g);

/// Formal partial derivatives; result cap is input cap - 1.
BiSeries partial_x(const BiSeries& a);
BiSeries partial_y(const BiSeries& a);

/// f(x, y) -> f(y, x).
BiSeries swap_xy(const BiSeries& a);

/// The series f with f(0,0) = 0 and f = (x + f)(y + f), modulo degree cap + 1.
BiSeries solve_f(int cap);

/// Names of the generating functions the library knows how to build.
struct SeriesId {
  enum class Kind {
    F,                   // f itself
    U0Pow,               // (x + y + 2f)^k: x^r y^(n-r) -> N_{k-1}^{n,r}
    MDiag,               // (x + y + 2f)^k (f/x)^j: x^r y^(n-r) -> M_{r,r+j}^{n,k}, j >= 1
                         // (j = 0 coincides with U0Pow(k))
    NE,                  // x^p y^(n-p) -> N_E(n, k, p)
    NO,                  // x^p y^(n-p) -> N_O(n, k, p)
    SquareBinomShifted,  // y f / (xy - f^2): x^p y^(n-p) -> C(n-1, p)^2
    SquareBinom,         // 1 / (1 - x - y - 2f): x^p y^(n-p) -> C(n, p)^2
  };
  Kind kind = Kind::F;
  int k = 0;
  int j = 0;

  static SeriesId f() { return {Kind::F, 0, 0}; }
  static SeriesId u0_pow(int k) { return {Kind::U0Pow, k, 0}; }
  static SeriesId m_diag(int k, int j) { return {Kind::MDiag, k, j}; }
  static SeriesId ne(int k) { return {Kind::NE, k, 0}; }
  static SeriesId no(int k) { return {Kind::NO, k, 0}; }
  static SeriesId square_binom_shifted() { return {Kind::SquareBinomShifted, 0, 0}; }
  static SeriesId square_binom() { return {Kind::SquareBinom, 0, 0}; }

  /// CLI name: f, u0pow, mdiag, ne, no, sqbinom-shifted, sqbinom.
  std::string name() const;
  static std::optional<Kind> kind_from_name(const std::string& name);
};

/// Precomputes f, u0 = x + y + 2f, f/x, f^2/(xy) and their powers for one
/// cap, so that many generating functions can be assembled cheaply.
/// f is solved to cap + 2 internally so monomial divisions lose nothing.
/// Immutable after construction.
class SeriesBuilder {
 public:
  explicit SeriesBuilder(int cap);

  int cap() const { return cap_; }
  const BiSeries& f() const { return f_; }
  const BiSeries& u0() const { return u0_pows_[1]; }
  /// u0^e; zero once e exceeds the cap.
  BiSeries u0_pow(int e) const;
  /// (f/x)^e; zero once e exceeds the cap.
  BiSeries f_over_x_pow(int e) const;
  /// f^2 / (xy)
  const BiSeries& f2_over_xy() const { return h_; }

  BiSeries build(const SeriesId& id) const;

 private:
  int cap_;
  BiSeries f_;
  BiSeries h_;
  BiSeries geom_h_;
  std::vector<BiSeries> u0_pows_;
  std::vector<BiSeries> f_over_x_pows_;
};

/// Assembles the named generating function with exactly the requested cap.
BiSeries build(const SeriesId& id, int cap);

/// Free-function accessor mirroring BiSeries::coefficient.
inline const Integer& coefficient(const BiSeries& a, int i, int j) { return a.coefficient(i, j); }

/// Dump format: header "cap=<D>", then "i j value" for every nonzero
/// coefficient, ordered by total degree and then by i.
void write_dump(std::ostream& out, const BiSeries& a);

}  // namespace pathpairs::series
