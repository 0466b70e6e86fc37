#include "ellcode/field.hpp"

#include <algorithm>
#include <sstream>

#include "ellcode/error.hpp"

namespace ellcode {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      std::uint64_t sub = c * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::uint64_t checked_order(std::uint32_t p, unsigned m) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > (std::uint64_t{1} << 62) / p)
      throw Error(ErrorKind::FieldTooLarge, "finite_field", "p^m does not fit in 62 bits");
    q *= p;
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // Ben-Or: f irreducible iff gcd(f, X^(p^i) - X) = 1 for i <= m/2.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct Field::Impl {
  std::uint32_t p = 2;
  unsigned m = 1;
  std::uint64_t q = 2;
  Poly modulus;
  std::array<std::uint16_t, kMaxExtensionDegree> neg_tail{};  // -modulus[i] mod p
  // Tonelli-Shanks data for odd q.
  std::uint64_t odd_part = 0;
  unsigned two_adicity = 0;
  FieldElement nonresidue_root{};  // z^odd_part
};

Field Field::prime(std::uint32_t p) { return extension(p, 1); }

Field Field::extension(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "finite_field", std::to_string(p) + " is not prime");
  if (p > kMaxCharacteristic)
    throw Error(ErrorKind::FieldTooLarge, "finite_field", "characteristic must be below 2^16");
  if (m < 1 || m > kMaxExtensionDegree)
    throw Error(ErrorKind::DegreeMismatch, "finite_field",
                "extension degree must lie in [1, " + std::to_string(kMaxExtensionDegree) + "]");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = checked_order(p, m);

  if (modulus) {
    Poly f = *modulus;
    if (f.size() != m + 1 || f.back() != 1)
      throw Error(ErrorKind::DegreeMismatch, "finite_field",
                  "modulus must be monic of degree " + std::to_string(m));
    for (auto c : f)
      if (c >= p) throw Error(ErrorKind::DegreeMismatch, "finite_field", "modulus coefficient out of range");
    if (!is_irreducible_mod_p(f, p))
      throw Error(ErrorKind::ReducibleModulus, "finite_field", "modulus is reducible over GF(p)");
    impl->modulus = std::move(f);
  } else {
    const std::uint64_t tail = impl->q;
    Poly f(m + 1, 0);
    f[m] = 1;
    bool found = false;
    for (std::uint64_t t = 0; t < tail && !found; ++t) {
      std::uint64_t v = t;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      found = is_irreducible_mod_p(f, p);
    }
    impl->modulus = f;
  }
  for (unsigned i = 0; i < m; ++i)
    impl->neg_tail[i] = static_cast<std::uint16_t>((p - impl->modulus[i]) % p);

  Field field(impl);
  if (p != 2) {
    std::uint64_t odd = impl->q - 1;
    unsigned s = 0;
    while (odd % 2 == 0) {
      odd /= 2;
      ++s;
    }
    impl->odd_part = odd;
    impl->two_adicity = s;
    const FieldElement minus_one = field.neg(field.one());
    for (std::uint64_t idx = 2; idx < impl->q; ++idx) {
      FieldElement z = field.element(idx);
      if (field.pow(z, (impl->q - 1) / 2) == minus_one) {
        impl->nonresidue_root = field.pow(z, odd);
        break;
      }
    }
  }
  return field;
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
unsigned Field::degree() const noexcept { return impl_->m; }
std::uint64_t Field::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }

FieldElement Field::one() const noexcept {
  FieldElement e;
  e.coeffs[0] = 1;
  return e;
}

FieldElement Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = impl_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  FieldElement e;
  e.coeffs[0] = static_cast<std::uint16_t>(r);
  return e;
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > impl_->m)
    throw Error(ErrorKind::FieldMismatch, "finite_field", "too many coefficients for this field");
  FieldElement e;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= impl_->p)
      throw Error(ErrorKind::FieldMismatch, "finite_field", "coefficient out of range");
    e.coeffs[i] = static_cast<std::uint16_t>(coeffs[i]);
  }
  return e;
}

FieldElement Field::generator() const noexcept {
  if (impl_->m == 1) return from_int(-static_cast<std::int64_t>(impl_->modulus[0]));
  FieldElement e;
  e.coeffs[1] = 1;
  return e;
}

bool Field::contains(const FieldElement& a) const noexcept {
  for (unsigned i = 0; i < kMaxExtensionDegree; ++i) {
    if (i >= impl_->m && a.coeffs[i] != 0) return false;
    if (a.coeffs[i] >= impl_->p) return false;
  }
  return true;
}

void Field::check(const FieldElement& a) const {
  if (!contains(a)) throw Error(ErrorKind::FieldMismatch, "finite_field", "element does not belong to " + describe());
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const noexcept {
  FieldElement r;
  const std::uint32_t p = impl_->p;
  for (unsigned i = 0; i < impl_->m; ++i) {
    std::uint32_t s = std::uint32_t{a.coeffs[i]} + b.coeffs[i];
    r.coeffs[i] = static_cast<std::uint16_t>(s >= p ? s - p : s);
  }
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const noexcept {
  FieldElement r;
  const std::uint32_t p = impl_->p;
  for (unsigned i = 0; i < impl_->m; ++i) {
    std::uint32_t s = std::uint32_t{a.coeffs[i]} + p - b.coeffs[i];
    r.coeffs[i] = static_cast<std::uint16_t>(s >= p ? s - p : s);
  }
  return r;
}

FieldElement Field::neg(const FieldElement& a) const noexcept {
  FieldElement r;
  const std::uint32_t p = impl_->p;
  for (unsigned i = 0; i < impl_->m; ++i)
    r.coeffs[i] = static_cast<std::uint16_t>(a.coeffs[i] == 0 ? 0 : p - a.coeffs[i]);
  return r;
}

FieldElement Field::scale(const FieldElement& a, std::uint32_t k) const noexcept {
  FieldElement r;
  const std::uint64_t p = impl_->p;
  const std::uint64_t kk = k % p;
  for (unsigned i = 0; i < impl_->m; ++i)
    r.coeffs[i] = static_cast<std::uint16_t>(a.coeffs[i] * kk % p);
  return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const noexcept {
  const unsigned m = impl_->m;
  const std::uint64_t p = impl_->p;
  FieldElement r;
  if (m == 1) {
    r.coeffs[0] = static_cast<std::uint16_t>(std::uint64_t{a.coeffs[0]} * b.coeffs[0] % p);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
  for (unsigned i = 0; i < m; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) acc[i + j] += std::uint64_t{a.coeffs[i]} * b.coeffs[j];
  }
  for (unsigned k = 2 * m - 2; k >= m; --k) {
    const std::uint64_t c = acc[k] % p;
    if (c == 0) continue;
    for (unsigned i = 0; i < m; ++i) acc[k - m + i] += c * impl_->neg_tail[i];
  }
  for (unsigned i = 0; i < m; ++i) r.coeffs[i] = static_cast<std::uint16_t>(acc[i] % p);
  return r;
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const noexcept {
  FieldElement result = one();
  FieldElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "finite_field", "inverse of zero");
  if (impl_->m == 1) {
    FieldElement r;
    r.coeffs[0] = static_cast<std::uint16_t>(inv_mod(a.coeffs[0], impl_->p));
    return r;
  }
  return pow(a, impl_->q - 2);
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "finite_field", "division by zero");
  return mul(a, inv(b));
}

FieldElement Field::checked_add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return add(a, b);
}

FieldElement Field::checked_mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return mul(a, b);
}

std::uint64_t Field::index(const FieldElement& a) const noexcept {
  std::uint64_t idx = 0;
  for (unsigned i = impl_->m; i-- > 0;) idx = idx * impl_->p + a.coeffs[i];
  return idx;
}

FieldElement Field::element(std::uint64_t idx) const noexcept {
  FieldElement e;
  for (unsigned i = 0; i < impl_->m; ++i) {
    e.coeffs[i] = static_cast<std::uint16_t>(idx % impl_->p);
    idx /= impl_->p;
  }
  return e;
}

std::vector<std::uint32_t> Field::decompose(const FieldElement& a) const {
  check(a);
  return std::vector<std::uint32_t>(a.coeffs.begin(), a.coeffs.begin() + impl_->m);
}

FieldElement Field::recompose(std::span<const std::uint32_t> parts) const {
  if (parts.size() != impl_->m)
    throw Error(ErrorKind::DegreeMismatch, "finite_field", "expected one residue per basis element");
  return from_coeffs(parts);
}

FieldElement Field::frobenius(const FieldElement& a, unsigned d) const noexcept {
  FieldElement r = a;
  for (unsigned i = 0; i < d % impl_->m; ++i) r = pow(r, impl_->p);
  return r;
}

bool Field::in_subfield(const FieldElement& a, unsigned d) const {
  if (d == 0 || impl_->m % d != 0)
    throw Error(ErrorKind::InvalidSubfieldDegree, "finite_field",
                std::to_string(d) + " does not divide " + std::to_string(impl_->m));
  check(a);
  if (d == impl_->m) return true;
  return frobenius(a, d) == a;
}

std::optional<FieldElement> Field::sqrt(const FieldElement& a) const {
  if (a.is_zero()) return a;
  if (impl_->p == 2) return pow(a, impl_->q / 2);
  const std::uint64_t q = impl_->q;
  if (pow(a, (q - 1) / 2) != one()) return std::nullopt;
  // Tonelli-Shanks.
  unsigned mexp = impl_->two_adicity;
  FieldElement c = impl_->nonresidue_root;
  FieldElement t = pow(a, impl_->odd_part);
  FieldElement r = pow(a, (impl_->odd_part + 1) / 2);
  while (t != one()) {
    unsigned i = 0;
    FieldElement t2 = t;
    while (t2 != one()) {
      t2 = mul(t2, t2);
      ++i;
    }
    FieldElement b = c;
    for (unsigned j = 0; j + i + 1 < mexp; ++j) b = mul(b, b);
    mexp = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

std::optional<FieldElement> Field::solve_artin_schreier(const FieldElement& c) const {
  if (impl_->p != 2)
    throw Error(ErrorKind::FieldMismatch, "finite_field", "Artin-Schreier solver needs characteristic 2");
  const unsigned m = impl_->m;
  // Columns: image of basis vector x^j under w -> w^2 + w, as GF(2) bit rows.
  std::vector<std::uint32_t> rows(m, 0);  // rows[i] bit j = coefficient i of L(x^j)
  for (unsigned j = 0; j < m; ++j) {
    FieldElement e;
    e.coeffs[j] = 1;
    FieldElement img = add(mul(e, e), e);
    for (unsigned i = 0; i < m; ++i)
      if (img.coeffs[i]) rows[i] |= (1u << j);
  }
  std::vector<std::uint32_t> rhs(m);
  for (unsigned i = 0; i < m; ++i) rhs[i] = c.coeffs[i] & 1u;
  std::vector<int> pivot_col;
  unsigned r = 0;
  for (unsigned col = 0; col < m && r < m; ++col) {
    unsigned piv = r;
    while (piv < m && !((rows[piv] >> col) & 1u)) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(rhs[piv], rhs[r]);
    for (unsigned i = 0; i < m; ++i) {
      if (i != r && ((rows[i] >> col) & 1u)) {
        rows[i] ^= rows[r];
        rhs[i] ^= rhs[r];
      }
    }
    pivot_col.push_back(static_cast<int>(col));
    ++r;
  }
  for (unsigned i = r; i < m; ++i)
    if (rhs[i]) return std::nullopt;
  FieldElement w;
  for (unsigned i = 0; i < r; ++i) w.coeffs[pivot_col[i]] = static_cast<std::uint16_t>(rhs[i]);
  return w;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << impl_->p;
  if (impl_->m > 1) os << "^" << impl_->m;
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m && a.impl_->modulus == b.impl_->modulus;
}

}  // namespace ellcode
