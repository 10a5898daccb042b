#include "cuspforms/qseries.hpp"

#include <algorithm>
#include <set>

namespace cuspforms {

namespace {

static_assert(sizeof(mp_limb_t) == 8, "packing assumes 64-bit GMP limbs");

std::size_t bits_needed(std::uint64_t v) {
  std::size_t bits = 0;
  while (v) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

struct Term {
  std::size_t index;
  const Int* value;
};

std::vector<Term> nonzero_terms(const QSeries& s, std::size_t up_to) {
  std::vector<Term> terms;
  for (std::size_t n = 0; n <= up_to; ++n)
    if (s.coeff[n] != 0) terms.push_back({n, &s.coeff[n]});
  return terms;
}

QSeries mul_schoolbook(const QSeries& a, const QSeries& b, std::size_t order) {
  QSeries out(order);
  auto ta = nonzero_terms(a, order);
  auto tb = nonzero_terms(b, order);
  for (const Term& x : ta) {
    for (const Term& y : tb) {
      std::size_t n = x.index + y.index;
      if (n > order) break;
      mpz_addmul(out.coeff[n].get_mpz_t(), x.value->get_mpz_t(),
                 y.value->get_mpz_t());
    }
  }
  return out;
}

// Packs the nonnegative and negated-negative parts of both factors into big
// integers with 64-bit-aligned slots, multiplies once per sign combination,
// and reads the convolution back out of the slots.  Slot width bounds
// (order+1) * max|a| * max|b|, so no slot can overflow into its neighbor.
QSeries mul_kronecker(const QSeries& a, const QSeries& b, std::size_t order) {
  auto max_bits = [order](const QSeries& s) {
    std::size_t bits = 1;
    for (std::size_t n = 0; n <= order; ++n)
      if (s.coeff[n] != 0)
        bits = std::max(bits, mpz_sizeinbase(s.coeff[n].get_mpz_t(), 2));
    return bits;
  };
  std::size_t slot_bits =
      max_bits(a) + max_bits(b) + bits_needed(order + 1) + 2;
  slot_bits = (slot_bits + 63) & ~std::size_t{63};
  const std::size_t lps = slot_bits / 64;

  auto pack = [&](const QSeries& s, bool negative_part) {
    std::vector<mp_limb_t> buf((order + 1) * lps + 1, 0);
    for (std::size_t n = 0; n <= order; ++n) {
      int sg = sgn(s.coeff[n]);
      if (negative_part ? sg >= 0 : sg <= 0) continue;
      std::size_t count = 0;
      mpz_export(&buf[n * lps], &count, -1, sizeof(mp_limb_t), 0, 0,
                 s.coeff[n].get_mpz_t());
    }
    Int packed;
    mpz_import(packed.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0,
               buf.data());
    return packed;
  };

  Int ap = pack(a, false), am = pack(a, true);
  Int bp = pack(b, false), bm = pack(b, true);
  Int pos = ap * bp + am * bm;
  Int neg = ap * bm + am * bp;

  auto unpack = [&](const Int& v, std::vector<Int>& out) {
    std::vector<mp_limb_t> buf(2 * (order + 1) * lps + 2, 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, v.get_mpz_t());
    for (std::size_t n = 0; n <= order; ++n)
      mpz_import(out[n].get_mpz_t(), lps, -1, sizeof(mp_limb_t), 0, 0,
                 &buf[n * lps]);
  };

  std::vector<Int> pv(order + 1), nv(order + 1);
  unpack(pos, pv);
  unpack(neg, nv);
  QSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) out.coeff[n] = pv[n] - nv[n];
  return out;
}

constexpr std::size_t kSchoolbookOrderLimit = 256;
constexpr std::size_t kSchoolbookWorkLimit = std::size_t{1} << 21;

}  // namespace

bool series_equal(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (a.coeff[i] != b.coeff[i]) return false;
  return true;
}

bool series_equal(const QSeriesQ& a, const QSeriesQ& b) {
  std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (a.coeff[i] != b.coeff[i]) return false;
  return true;
}

QSeries series_mul(const QSeries& a, const QSeries& b, std::size_t order) {
  if (a.order() < order || b.order() < order)
    throw std::invalid_argument("series_mul: insufficient truncation order");
  std::size_t nza = a.nonzero_count(order);
  std::size_t nzb = b.nonzero_count(order);
  if (nza == 0 || nzb == 0) return QSeries(order);
  if (order <= kSchoolbookOrderLimit || nza * nzb <= kSchoolbookWorkLimit)
    return mul_schoolbook(a, b, order);
  return mul_kronecker(a, b, order);
}

QSeriesQ series_mul(const QSeriesQ& a, const QSeriesQ& b, std::size_t order) {
  if (a.order() < order || b.order() < order)
    throw std::invalid_argument("series_mul: insufficient truncation order");
  QSeriesQ out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeff[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b.coeff[j] == 0) continue;
      out.coeff[i + j] += a.coeff[i] * b.coeff[j];
    }
  }
  return out;
}

QSeries series_pow(const QSeries& a, unsigned e, std::size_t order) {
  if (e == 0) throw std::invalid_argument("series_pow: exponent must be positive");
  if (a.order() < order)
    throw std::invalid_argument("series_pow: insufficient truncation order");
  QSeries base(order);
  for (std::size_t n = 0; n <= order; ++n) base.coeff[n] = a.coeff[n];
  QSeries result;
  bool have = false;
  while (e) {
    if (e & 1) {
      result = have ? series_mul(result, base, order) : base;
      have = true;
    }
    e >>= 1;
    if (e) base = series_mul(base, base, order);
  }
  return result;
}

QSeries eta_series(std::size_t order) {
  QSeries s(order);
  s.coeff[0] = 1;
  for (std::uint64_t k = 1;; ++k) {
    std::uint64_t g_minus = k * (3 * k - 1) / 2;
    std::uint64_t g_plus = k * (3 * k + 1) / 2;
    if (g_minus > order) break;
    int sign = (k % 2 == 0) ? 1 : -1;
    s.coeff[g_minus] = sign;
    if (g_plus <= order) s.coeff[g_plus] = sign;
  }
  return s;
}

QSeries jacobi_cube_series(std::size_t order) {
  QSeries s(order);
  for (std::uint64_t n = 0;; ++n) {
    std::uint64_t t = n * (n + 1) / 2;
    if (t > order) break;
    long v = static_cast<long>(2 * n + 1);
    s.coeff[t] = (n % 2 == 0) ? v : -v;
  }
  return s;
}

QSeries eta_power_series(unsigned r, std::size_t order) {
  if (r == 0)
    throw std::invalid_argument("eta_power_series: exponent must be positive");
  return series_pow(eta_series(order), r, order);
}

Rat EtaProductSpec::weight() const {
  Rat sum;
  for (const auto& [d, r] : factors) {
    (void)d;
    sum += r;
  }
  Rat w = sum / 2;
  return w;
}

Rat EtaProductSpec::prefactor_exponent() const {
  Rat sum;
  for (const auto& [d, r] : factors) sum += Rat(static_cast<long>(d)) * r;
  return sum / 24;
}

void EtaProductSpec::validate() const {
  std::set<unsigned> seen;
  for (const auto& [d, r] : factors) {
    if (d == 0)
      throw std::invalid_argument("eta product: scales must be positive");
    if (!seen.insert(d).second)
      throw std::invalid_argument("eta product: duplicate scale " +
                                  std::to_string(d));
    if (r < 0)
      throw negative_exponent_error(
          "eta product: negative exponents are not supported (scale " +
          std::to_string(d) + ")");
    if (r == 0)
      throw std::invalid_argument("eta product: exponents must be nonzero");
  }
}

QSeries eta_product_series(const EtaProductSpec& spec, std::size_t order) {
  spec.validate();
  QSeries acc(order);
  acc.coeff[0] = 1;
  for (const auto& [d, r] : spec.factors) {
    QSeries f = eta_power_series(static_cast<unsigned>(r), order / d);
    QSeries stretched(order);
    for (std::size_t i = 0; i <= order / d; ++i)
      stretched.coeff[i * d] = f.coeff[i];
    acc = series_mul(acc, stretched, order);
  }
  return acc;
}

QSeriesQ eisenstein_series(unsigned w, std::size_t order) {
  if (w < 4 || w % 2 != 0)
    throw std::invalid_argument("eisenstein_series: weight must be even and >= 4");
  QSeriesQ s(order);
  s.coeff[0] = 1;
  Rat factor = Rat(-2 * static_cast<long>(w)) / bernoulli(w);
  auto sig = sigma_table(w - 1, order);
  for (std::size_t m = 1; m <= order; ++m) s.coeff[m] = factor * Rat(sig[m]);
  return s;
}

QSeries eisenstein_series_int(unsigned w, std::size_t order) {
  QSeriesQ q = eisenstein_series(w, order);
  QSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (q.coeff[n].get_den() != 1)
      throw std::domain_error("eisenstein_series_int: weight " +
                              std::to_string(w) +
                              " has non-integral coefficients");
    s.coeff[n] = q.coeff[n].get_num();
  }
  return s;
}

Rat lacunarity_density(const QSeries& a, std::size_t x) {
  if (x < 1 || x > a.order())
    throw std::invalid_argument(
        "lacunarity_density: x must lie in [1, truncation order]");
  unsigned long count = 0;
  for (std::size_t n = 1; n <= x; ++n)
    if (a.coeff[n] != 0) ++count;
  Rat density(count, static_cast<unsigned long>(x));
  density.canonicalize();
  return density;
}

}  // namespace cuspforms
