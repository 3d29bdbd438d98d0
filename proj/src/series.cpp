#include "pathpairs/series.hpp"

#include <algorithm>
#include <ostream>

namespace pathpairs::series {

BiSeries::BiSeries(int cap) : cap_(cap) {
  if (cap < 0) throw DomainError("BiSeries: negative cap");
  const auto d = static_cast<std::size_t>(cap) + 1;
  coeffs_.assign(d * (d + 1) / 2, Integer(0));
}

BiSeries BiSeries::constant(const Integer& value, int cap) {
  return monomial(0, 0, value, cap);
}

BiSeries BiSeries::monomial(int x_exp, int y_exp, const Integer& value, int cap) {
  BiSeries s(cap);
  s.set(x_exp, y_exp, value);
  return s;
}

const Integer& BiSeries::coefficient(int i, int j) const {
  if (i < 0 || j < 0) {
    throw DomainError("coefficient: negative exponent (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
  }
  if (i + j > cap_) {
    throw OutOfCap("coefficient (" + std::to_string(i) + ", " + std::to_string(j) +
                   ") exceeds cap " + std::to_string(cap_));
  }
  return at(i, j);
}

void BiSeries::set(int i, int j, const Integer& value) {
  if (i < 0 || j < 0) throw DomainError("set: negative exponent");
  if (i + j > cap_) return;
  at(i, j) = value;
}

BiSeries BiSeries::truncated(int cap) const {
  if (cap >= cap_) return *this;
  BiSeries out(cap);
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

bool BiSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  const auto n = std::min(a.coeffs_.size(), b.coeffs_.size());
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + static_cast<std::ptrdiff_t>(n),
                    b.coeffs_.begin());
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.cap_, b.cap_));
  for (std::size_t t = 0; t < out.coeffs_.size(); ++t) out.coeffs_[t] = a.coeffs_[t] + b.coeffs_[t];
  return out;
}

BiSeries sub(const BiSeries& a, const BiSeries& b) {
  BiSeries out(std::min(a.cap_, b.cap_));
  for (std::size_t t = 0; t < out.coeffs_.size(); ++t) out.coeffs_[t] = a.coeffs_[t] - b.coeffs_[t];
  return out;
}

BiSeries scale(const BiSeries& a, const Integer& c) {
  BiSeries out(a.cap_);
  for (std::size_t t = 0; t < out.coeffs_.size(); ++t) out.coeffs_[t] = a.coeffs_[t] * c;
  return out;
}

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  const int cap = std::min(a.cap_, b.cap_);
  BiSeries out(cap);
  for (int da = 0; da <= cap; ++da) {
    for (int ia = 0; ia <= da; ++ia) {
      const Integer& ca = a.at(ia, da - ia);
      if (sgn(ca) == 0) continue;
      for (int db = 0; da + db <= cap; ++db) {
        for (int ib = 0; ib <= db; ++ib) {
          const Integer& cb = b.at(ib, db - ib);
          if (sgn(cb) == 0) continue;
          Integer& dst = out.at(ia + ib, (da - ia) + (db - ib));
          mpz_addmul(dst.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
      }
    }
  }
  return out;
}

BiSeries pow(const BiSeries& a, unsigned exponent) {
  BiSeries result = BiSeries::constant(1, a.cap());
  BiSeries base = a;
  while (exponent != 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1;
    if (exponent != 0) base = mul(base, base);
  }
  return result;
}

BiSeries div_monomial_x(const BiSeries& a) {
  for (int j = 0; j <= a.cap(); ++j) {
    if (sgn(a.coefficient(0, j)) != 0) {
      throw NotDivisible("div_monomial_x: nonzero coefficient at x^0 y^" + std::to_string(j));
    }
  }
  if (a.cap() == 0) throw NotDivisible("div_monomial_x: cap 0 leaves nothing to divide");
  BiSeries out(a.cap() - 1);
  for (int d = 0; d <= out.cap(); ++d) {
    for (int i = 0; i <= d; ++i) out.set(i, d - i, a.coefficient(i + 1, d - i));
  }
  return out;
}

BiSeries div_monomial_y(const BiSeries& a) {
  return swap_xy(div_monomial_x(swap_xy(a)));
}

BiSeries geom_inverse(const BiSeries& g) {
  if (sgn(g.coefficient(0, 0)) != 0) {
    throw DomainError("geom_inverse: series has nonzero constant term");
  }
  const BiSeries one = BiSeries::constant(1, g.cap());
  // Horner: after t rounds acc = 1 + g + ... + g^t; g^(cap+1) is truncated away.
  BiSeries acc = one;
  for (int t = 0; t < g.cap(); ++t) acc = add(one, mul(g, acc));
  return acc;
}

BiSeries partial_x(const BiSeries& a) {
  if (a.cap() == 0) return BiSeries(0);
  BiSeries out(a.cap() - 1);
  for (int d = 0; d <= out.cap(); ++d) {
    for (int i = 0; i <= d; ++i) {
      out.set(i, d - i, a.coefficient(i + 1, d - i) * (i + 1));
    }
  }
  return out;
}

BiSeries partial_y(const BiSeries& a) { return swap_xy(partial_x(swap_xy(a))); }

BiSeries swap_xy(const BiSeries& a) {
  BiSeries out(a.cap());
  for (int d = 0; d <= a.cap(); ++d) {
    for (int i = 0; i <= d; ++i) out.set(d - i, i, a.coefficient(i, d - i));
  }
  return out;
}

BiSeries solve_f(int cap) {
  const BiSeries xy = BiSeries::monomial(1, 1, 1, cap);
  const BiSeries x_plus_y = BiSeries::x(cap) + BiSeries::y(cap);
  // Each round fixes one more total degree; degree <= m+1 is final after m rounds.
  BiSeries f(cap);
  for (int m = 0; m < cap; ++m) f = xy + x_plus_y * f + f * f;
  return f;
}

std::string SeriesId::name() const {
  switch (kind) {
    case Kind::F: return "f";
    case Kind::U0Pow: return "u0pow";
    case Kind::MDiag: return "mdiag";
    case Kind::NE: return "ne";
    case Kind::NO: return "no";
    case Kind::SquareBinomShifted: return "sqbinom-shifted";
    case Kind::SquareBinom: return "sqbinom";
  }
  return "?";
}

std::optional<SeriesId::Kind> SeriesId::kind_from_name(const std::string& name) {
  for (auto kind : {Kind::F, Kind::U0Pow, Kind::MDiag, Kind::NE, Kind::NO,
                    Kind::SquareBinomShifted, Kind::SquareBinom}) {
    if (SeriesId{kind, 0, 0}.name() == name) return kind;
  }
  return std::nullopt;
}

SeriesBuilder::SeriesBuilder(int cap)
    : cap_(cap), f_(0), h_(0), geom_h_(0) {
  if (cap < 0) throw DomainError("SeriesBuilder: negative cap");
  const BiSeries f_wide = solve_f(cap + 2);
  f_ = f_wide.truncated(cap);
  h_ = div_monomial_y(div_monomial_x(f_wide * f_wide)).truncated(cap);
  geom_h_ = geom_inverse(h_);

  const BiSeries u0 = BiSeries::x(cap) + BiSeries::y(cap) + scale(f_, 2);
  const BiSeries f_over_x = div_monomial_x(f_wide).truncated(cap);
  // Both have zero constant term, so powers beyond the cap vanish.
  u0_pows_.push_back(BiSeries::constant(1, cap));
  f_over_x_pows_.push_back(BiSeries::constant(1, cap));
  for (int e = 1; e <= cap + 1; ++e) {
    u0_pows_.push_back(u0_pows_.back() * u0);
    f_over_x_pows_.push_back(f_over_x_pows_.back() * f_over_x);
  }
}

BiSeries SeriesBuilder::u0_pow(int e) const {
  if (e < 0) throw DomainError("u0_pow: negative exponent");
  return e < static_cast<int>(u0_pows_.size()) ? u0_pows_[e] : BiSeries(cap_);
}

BiSeries SeriesBuilder::f_over_x_pow(int e) const {
  if (e < 0) throw DomainError("f_over_x_pow: negative exponent");
  return e < static_cast<int>(f_over_x_pows_.size()) ? f_over_x_pows_[e] : BiSeries(cap_);
}

BiSeries SeriesBuilder::build(const SeriesId& id) const {
  if (id.k < 0 || id.j < 0) throw DomainError("build: negative series parameter");
  switch (id.kind) {
    case SeriesId::Kind::F:
      return f_;
    case SeriesId::Kind::U0Pow:
      return u0_pow(id.k);
    case SeriesId::Kind::MDiag:
      return u0_pow(id.k) * f_over_x_pow(id.j);
    case SeriesId::Kind::NE:
      return scale(u0_pow(id.k) * h_ * geom_h_, 2) + u0_pow(id.k + 1);
    case SeriesId::Kind::NO:
      return scale(u0_pow(id.k) * f_over_x_pow(1) * geom_h_, 2);
    case SeriesId::Kind::SquareBinomShifted:
      // y f / (xy - f^2) = (f / x) / (1 - f^2 / (xy))
      return f_over_x_pow(1) * geom_h_;
    case SeriesId::Kind::SquareBinom:
      return geom_inverse(u0());
  }
  throw DomainError("build: unknown series kind");
}

BiSeries build(const SeriesId& id, int cap) { return SeriesBuilder(cap).build(id); }

void write_dump(std::ostream& out, const BiSeries& a) {
  out << "cap=" << a.cap() << '\n';
  for (int d = 0; d <= a.cap(); ++d) {
    for (int i = 0; i <= d; ++i) {
      const Integer& c = a.coefficient(i, d - i);
      if (sgn(c) != 0) out << i << ' ' << d - i << ' ' << c.get_str() << '\n';
    }
  }
}

}  // namespace pathpairs::series
