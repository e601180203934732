#include "semistar/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace semistar {

std::vector<std::vector<Integer>> integer_echelon(std::vector<std::vector<Integer>> rows) {
  std::vector<std::vector<Integer>> out;
  if (rows.empty()) return out;
  const std::size_t width = rows.front().size();
  for (std::size_t col = 0; col < width && !rows.empty(); ++col) {
    // Euclid on column `col` until at most one row is nonzero there.
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (pivot == rows.size() || abs(rows[r][col]) < abs(rows[pivot][col])) pivot = r;
      }
      if (pivot == rows.size()) break;
      bool reduced_any = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == pivot || rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
        for (std::size_t k = col; k < width; ++k) rows[r][k] -= q * rows[pivot][k];
        reduced_any = true;
      }
      if (!reduced_any) {
        if (rows[pivot][col] < 0)
          for (auto& v : rows[pivot]) v = -v;
        out.push_back(rows[pivot]);
        rows.erase(rows.begin() + static_cast<long>(pivot));
        break;
      }
    }
  }
  // Reduce entries above pivots into [0, pivot).
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t pc = 0;
    while (pc < width && out[i][pc] == 0) ++pc;
    for (std::size_t j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), out[j][pc].get_mpz_t(), out[i][pc].get_mpz_t());
      for (std::size_t k = pc; k < width; ++k) out[j][k] -= q * out[i][k];
    }
  }
  return out;
}

namespace {

Integer lcm_int(const Integer& x, const Integer& y) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

Integer gcd_int(const Integer& x, const Integer& y) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

}  // namespace

QuadLattice QuadLattice::z_span(const std::vector<QuadNum>& gens, long d) {
  Integer den = 1;
  for (const auto& g : gens) {
    if (g.d != d) throw std::invalid_argument("lattice generator from another field");
    den = lcm_int(den, g.a.get_den());
    den = lcm_int(den, g.b.get_den());
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : gens) {
    Rational x = g.a * den, y = g.b * den;
    rows.push_back({x.get_num(), y.get_num()});
  }
  auto e = integer_echelon(rows);
  if (e.size() != 2 || e[0][0] == 0 || e[1][1] == 0)
    throw std::invalid_argument("lattice is not of full rank");
  QuadLattice l;
  l.d_ = d;
  l.a_ = e[0][0];
  l.b_ = e[0][1];
  l.c_ = e[1][1];
  l.den_ = den;
  Integer g = gcd_int(gcd_int(l.a_, l.b_), gcd_int(l.c_, l.den_));
  l.a_ /= g;
  l.b_ /= g;
  l.c_ /= g;
  l.den_ /= g;
  mpz_fdiv_r(l.b_.get_mpz_t(), l.b_.get_mpz_t(), l.c_.get_mpz_t());
  return l;
}

QuadLattice QuadLattice::ideal_span(const std::vector<QuadNum>& gens, long d) {
  std::vector<QuadNum> zgens;
  for (const auto& g : gens) {
    zgens.push_back(g);
    zgens.push_back(QuadNum{g.b * d, g.a, d});  // g·ω
  }
  return z_span(zgens, d);
}

std::array<QuadNum, 2> QuadLattice::basis() const {
  Rational inv(1);
  inv /= Rational(den_);
  return {QuadNum{Rational(a_) * inv, Rational(b_) * inv, d_}, QuadNum{0, Rational(c_) * inv, d_}};
}

bool QuadLattice::contains(const QuadNum& z) const {
  if (z.d != d_) throw std::invalid_argument("element from another field");
  Rational x = z.a * Rational(den_), y = z.b * Rational(den_);
  if (x.get_den() != 1 || y.get_den() != 1) return false;
  Integer xi = x.get_num(), yi = y.get_num();
  if (!mpz_divisible_p(xi.get_mpz_t(), a_.get_mpz_t())) return false;
  Integer m = xi / a_;
  Integer rest = yi - m * b_;
  return mpz_divisible_p(rest.get_mpz_t(), c_.get_mpz_t()) != 0;
}

bool QuadLattice::contains(const QuadLattice& other) const {
  auto b = other.basis();
  return contains(b[0]) && contains(b[1]);
}

QuadLattice QuadLattice::intersect(const QuadLattice& other) const {
  Integer den = lcm_int(den_, other.den_);
  auto scaled_rows = [&](const QuadLattice& l) {
    Integer f = den / l.den_;
    return std::array<std::array<Integer, 2>, 2>{
        {{l.a_ * f, l.b_ * f}, {Integer(0), l.c_ * f}}};
  };
  auto r1 = scaled_rows(*this), r2 = scaled_rows(other);
  // Zassenhaus: [v | v] for the first lattice, [w | 0] for the second.
  std::vector<std::vector<Integer>> rows;
  for (auto& v : r1) rows.push_back({v[0], v[1], v[0], v[1]});
  for (auto& w : r2) rows.push_back({w[0], w[1], Integer(0), Integer(0)});
  auto e = integer_echelon(rows);
  std::vector<QuadNum> gens;
  for (auto& row : e) {
    if (row[0] == 0 && row[1] == 0)
      gens.push_back(QuadNum{Rational(row[2], den), Rational(row[3], den), d_});
  }
  for (auto& g : gens) {
    g.a.canonicalize();
    g.b.canonicalize();
  }
  return z_span(gens, d_);
}

QuadLattice QuadLattice::sum(const QuadLattice& other) const {
  auto x = basis(), y = other.basis();
  return z_span({x[0], x[1], y[0], y[1]}, d_);
}

QuadLattice QuadLattice::product(const QuadLattice& other) const {
  auto x = basis(), y = other.basis();
  std::vector<QuadNum> gens;
  for (const auto& u : x)
    for (const auto& v : y) gens.push_back(std::get<QuadNum>(Elem(u) * Elem(v)));
  return z_span(gens, d_);
}

QuadLattice QuadLattice::scaled(const QuadNum& z) const {
  auto x = basis();
  return z_span({std::get<QuadNum>(Elem(x[0]) * Elem(z)), std::get<QuadNum>(Elem(x[1]) * Elem(z))}, d_);
}

QuadLattice QuadLattice::colon(const QuadLattice& other) const {
  auto y = other.basis();
  QuadNum one{1, 0, d_};
  QuadLattice r = scaled(std::get<QuadNum>(Elem(one) / Elem(y[0])));
  return r.intersect(scaled(std::get<QuadNum>(Elem(one) / Elem(y[1]))));
}

bool is_square(long n) {
  if (n < 0) return false;
  auto r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (long k = std::max(0L, r - 2); k <= r + 2; ++k)
    if (k * k == n) return true;
  return false;
}

bool is_prime_integer(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

int legendre(const Integer& n, const Integer& p) {
  return mpz_legendre(n.get_mpz_t(), p.get_mpz_t());
}

}  // namespace semistar
