#include "collapse_lab/gf.hpp"

#include <map>
#include <mutex>

#include "collapse_lab/error.hpp"
#include "collapse_lab/qarith.hpp"

namespace clab {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomials over the prime field, low-degree first.
Coeffs pmod(Coeffs a, const Coeffs& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = [&] {
    std::uint64_t r = 1, b = f.back(), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > df) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    trim(a);
  }
  return a;
}

Coeffs pmulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return pmod(std::move(r), f, p);
}

Coeffs pgcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(X^{p^k} - X, f) = 1 for k <= m/2.
bool prime_field_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  if (f[0] == 0) return false;
  Coeffs xpk = {0, 1};
  for (std::size_t k = 1; k <= m / 2; ++k) {
    Coeffs acc = {1};
    Coeffs base = xpk;
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) acc = pmulmod(acc, base, f, p);
      base = pmulmod(base, base, f, p);
    }
    xpk = acc;
    Coeffs diff = xpk;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (pgcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> r;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      r.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) r.push_back(n);
  return r;
}

}  // namespace

Field::Field(std::uint32_t p, unsigned m) : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))) {
  if (m == 1) {
    modulus_ = {0, 1};
  } else {
    // Least monic irreducible by index of its non-leading coefficients.
    for (std::uint32_t idx = 0; idx < q_; ++idx) {
      Coeffs f(m + 1, 0);
      std::uint32_t t = idx;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = t % p;
        t /= p;
      }
      f[m] = 1;
      if (prime_field_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
    if (p != 2 && q_ <= 256) {
      add_table_.resize(std::size_t{q_} * q_);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) add_table_[std::size_t{a} * q_ + b] = add_slow(a, b);
    }
  }
  const auto factors = prime_factors(q_ - 1);
  for (Elem g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto f : factors)
      if (pow(g, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  if (m > 1 && q_ <= (1u << 16)) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = mul_slow(x, generator_);
    }
  }
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, unsigned m, std::uint64_t cap) {
  if (!is_prime(p)) throw InvalidArgument("field_create: p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidArgument("field_create: m must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > cap) throw CapExceeded("field_create: p^m exceeds cap", cap);
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const Field>> memo;
  std::lock_guard lock(mu);
  auto& slot = memo[{p, m}];
  if (!slot) slot = std::make_shared<const Field>(p, m);
  return slot;
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q, std::uint64_t cap) {
  const auto pp = prime_power(q);
  if (!pp) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  return create(static_cast<std::uint32_t>(pp->p), pp->m, cap);
}

std::string Field::name() const { return std::to_string(p_) + "^" + std::to_string(m_); }

Field::Elem Field::from_int(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(m_);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Field::Elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  Elem r = 0, w = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += (i < c.size() ? c[i] % p_ : 0) * w;
    w *= p_;
  }
  return r;
}

Field::Elem Field::add_slow(Elem a, Elem b) const {
  Elem r = 0, w = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return r;
}

Field::Elem Field::neg_slow(Elem a) const {
  Elem r = 0, w = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((p_ - a % p_) % p_) * w;
    a /= p_;
    w *= p_;
  }
  return r;
}

Field::Elem Field::mul_slow(Elem a, Elem b) const {
  Coeffs ca = coeffs(a), cb = coeffs(b);
  trim(ca);
  trim(cb);
  return from_coeffs(pmulmod(ca, cb, modulus_, p_));
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool Field::is_square(Elem a) const {
  if (a == 0) throw InvalidArgument("is_square: zero argument");
  if (p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

Field::Elem Field::multiplicative_generator() const { return generator_; }

std::uint64_t Field::elem_order(Elem a) const {
  if (a == 0) throw InvalidArgument("elem_order: zero argument");
  std::uint64_t ord = q_ - 1;
  for (auto f : prime_factors(q_ - 1))
    while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
  return ord;
}

FieldElement::FieldElement(FieldPtr f, Field::Elem v) : f_(std::move(f)), v_(v) {
  if (!f_) throw InvalidArgument("FieldElement: null field");
  if (v_ >= f_->q()) throw InvalidArgument("FieldElement: index out of range");
}

FieldElement FieldElement::from_int(FieldPtr f, std::int64_t k) {
  const auto v = f->from_int(k);
  return {std::move(f), v};
}

void FieldElement::check(const FieldElement& o) const {
  if (!f_->same(*o.f_)) throw InvalidArgument("field mismatch: GF(" + f_->name() + ") vs GF(" + o.f_->name() + ")");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {f_, f_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {f_, f_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {f_, f_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {f_, f_->div(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {f_, f_->neg(v_)}; }
FieldElement FieldElement::inv() const { return {f_, f_->inv(v_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
FieldElement FieldElement::frobenius() const { return {f_, f_->frobenius(v_)}; }
bool FieldElement::is_square() const { return f_->is_square(v_); }
std::uint64_t FieldElement::order() const { return f_->elem_order(v_); }
bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  return v_ == o.v_;
}
bool FieldElement::operator<(const FieldElement& o) const {
  check(o);
  return v_ < o.v_;
}

}  // namespace clab
