#include "core/spectra.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "core/checked.hpp"

namespace daa {
namespace {

using ZMat = std::vector<mpz_class>;  // n×n row-major

void require_matrix(const IntTensor& m, const char* who) {
  if (m.dims() != 2) throw std::invalid_argument(std::string(who) + ": input must be 2-D");
}

ZMat to_zmat(const IntTensor& m) {
  ZMat out;
  out.reserve(m.size());
  for (std::int64_t v : m.data()) out.emplace_back(static_cast<long>(v));
  return out;
}

ZMat zmat_mul(const ZMat& x, const ZMat& y, int n) {
  ZMat out(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const mpz_class& xik = x[static_cast<std::size_t>(i) * n + k];
      if (xik == 0) continue;
      for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(i) * n + j] += xik * y[static_cast<std::size_t>(k) * n + j];
    }
  return out;
}

mpz_class zmat_trace(const ZMat& x, int n) {
  mpz_class t = 0;
  for (int i = 0; i < n; ++i) t += x[static_cast<std::size_t>(i) * n + i];
  return t;
}

ZMat gram_zmat(const IntTensor& m) {
  const int n = m.side();
  ZMat out(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      mpz_class acc = 0;
      for (int k = 0; k < n; ++k)
        acc += mpz_class(static_cast<long>(m[static_cast<std::size_t>(k) * n + i])) *
               static_cast<long>(m[static_cast<std::size_t>(k) * n + j]);
      out[static_cast<std::size_t>(i) * n + j] = acc;
      out[static_cast<std::size_t>(j) * n + i] = acc;
    }
  return out;
}

// Faddeev–LeVerrier: M₁ = A, c₁ = −tr M₁; M_k = A(M_{k−1} + c_{k−1}I),
// c_k = −tr(M_k)/k. Every division is exact over the integers.
IntPoly charpoly_zmat(const ZMat& a, int n) {
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1, 0);
  coeffs[static_cast<std::size_t>(n)] = 1;
  ZMat b = a;
  mpz_class c = -zmat_trace(b, n);
  if (n >= 1) coeffs[static_cast<std::size_t>(n - 1)] = c;
  for (int step = 2; step <= n; ++step) {
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i) * n + i] += c;
    b = zmat_mul(a, b, n);
    const mpz_class t = zmat_trace(b, n);
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(step));
    if (q * step != t) throw std::logic_error("charpoly: non-exact division");
    c = -q;
    coeffs[static_cast<std::size_t>(n - step)] = c;
  }
  return IntPoly(std::move(coeffs));
}

struct PredictWeights {
  mpz_class scale_b;  // multiplies seed-B non-dominant roots
  mpz_class scale_a;  // multiplies seed-A non-dominant roots
  mpz_class dominant;
};

PredictWeights predict_weights(std::int64_t sa, std::int64_t sb, int m, int n, int k, Variant v) {
  if (m < 1 || n < 1) throw std::invalid_argument("predict: seed orders must be positive");
  if (v != Variant::Gapda && (k < 1 || k > 62))
    throw std::invalid_argument("predict: class parameter k out of range");
  mpz_class mz = m, nz = n;
  PredictWeights w;
  switch (v) {
    case Variant::Aggregated:
    case Variant::ReverseAggregated: {
      mpz_class nk1;
      mpz_pow_ui(nk1.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(k) + 1);
      w.scale_b = mz;
      w.scale_a = nk1;
      w.dominant = nk1 * sa + mz * sb;
      break;
    }
    case Variant::Dispersed:
    case Variant::ReverseDispersed: {
      mpz_class mk1;
      mpz_pow_ui(mk1.get_mpz_t(), mz.get_mpz_t(), static_cast<unsigned long>(k) + 1);
      w.scale_b = mk1;
      w.scale_a = nz;
      w.dominant = nz * sa + mk1 * sb;
      break;
    }
    case Variant::Gapda:
      w.scale_b = mz;
      w.scale_a = nz;
      w.dominant = nz * sa + mz * sb;
      break;
  }
  return w;
}

IntPoly assemble_prediction(const IntPoly& pa, const IntPoly& pb, const mpz_class& root_a,
                            const mpz_class& root_b, const PredictWeights& w,
                            const mpz_class& dominant, int m, int n, const char* who) {
  if (pa.degree() != m || !pa.is_monic())
    throw std::invalid_argument(std::string(who) + ": seed-A polynomial must be monic of degree m");
  if (pb.degree() != n || !pb.is_monic())
    throw std::invalid_argument(std::string(who) + ": seed-B polynomial must be monic of degree n");
  if (pa(root_a) != 0)
    throw std::domain_error(std::string(who) + ": seed-A polynomial lacks its dominant root " +
                            root_a.get_str());
  if (pb(root_b) != 0)
    throw std::domain_error(std::string(who) + ": seed-B polynomial lacks its dominant root " +
                            root_b.get_str());
  const IntPoly qa = scale_roots(divide_by_linear(pa, root_a), w.scale_a);
  const IntPoly qb = scale_roots(divide_by_linear(pb, root_b), w.scale_b);
  const IntPoly dominant_factor(std::vector<mpz_class>{-dominant, 1});
  return (dominant_factor * qb * qa).shifted((m - 1) * (n - 1));
}

constexpr std::uint64_t kRootFilterModulus = (std::uint64_t{1} << 61) - 1;
constexpr std::int64_t kRootScanLimit = 10'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kRootFilterModulus);
}

std::vector<std::uint64_t> coeffs_mod(const IntPoly& p) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(p.degree()) + 1);
  for (int i = 0; i <= p.degree(); ++i)
    out[static_cast<std::size_t>(i)] =
        mpz_fdiv_ui(p.coeff(i).get_mpz_t(), static_cast<unsigned long>(kRootFilterModulus));
  return out;
}

bool filter_eval_is_zero(const std::vector<std::uint64_t>& c, std::uint64_t x) {
  std::uint64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (mulmod(acc, x) + *it) % kRootFilterModulus;
  return acc == 0;
}

bool matvec_is_zero(const IntTensor& m, const std::vector<std::int64_t>& x) {
  const int n = m.side();
  for (int i = 0; i < n; ++i) {
    __int128 acc = 0;
    for (int j = 0; j < n; ++j)
      acc += static_cast<__int128>(m[static_cast<std::size_t>(i) * n + j]) * x[static_cast<std::size_t>(j)];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

IntPoly charpoly(const IntTensor& m) {
  require_matrix(m, "charpoly");
  return charpoly_zmat(to_zmat(m), m.side());
}

IntTensor gramian(const IntTensor& m) {
  require_matrix(m, "gramian");
  const int n = m.side();
  std::vector<std::int64_t> out(m.size(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < n; ++k)
        acc += static_cast<__int128>(m[static_cast<std::size_t>(k) * n + i]) *
               m[static_cast<std::size_t>(k) * n + j];
      if (acc > std::numeric_limits<std::int64_t>::max() || acc < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("gramian: entry overflows 64-bit range");
      out[static_cast<std::size_t>(i) * n + j] = static_cast<std::int64_t>(acc);
      out[static_cast<std::size_t>(j) * n + i] = static_cast<std::int64_t>(acc);
    }
  return IntTensor(2, n, std::move(out));
}

IntPoly gramian_charpoly(const IntTensor& m) {
  require_matrix(m, "gramian_charpoly");
  return charpoly_zmat(gram_zmat(m), m.side());
}

int rank_exact(const IntTensor& m) {
  require_matrix(m, "rank_exact");
  const int n = m.side();
  ZMat a = to_zmat(m);
  auto entry = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * n + j]; };
  mpz_class prev = 1;
  int rank = 0;
  for (int step = 0; step < n; ++step) {
    // Pivot anywhere in the remaining submatrix; row/column swaps do not
    // change the rank.
    int pi = -1, pj = -1;
    for (int i = step; i < n && pi < 0; ++i)
      for (int j = step; j < n; ++j)
        if (entry(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    if (pi != step)
      for (int j = 0; j < n; ++j) std::swap(entry(step, j), entry(pi, j));
    if (pj != step)
      for (int i = 0; i < n; ++i) std::swap(entry(i, step), entry(i, pj));
    for (int i = step + 1; i < n; ++i) {
      for (int j = step + 1; j < n; ++j) {
        mpz_class t = entry(i, j) * entry(step, step) - entry(i, step) * entry(step, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        entry(i, j) = std::move(t);
      }
      entry(i, step) = 0;
    }
    prev = entry(step, step);
    ++rank;
  }
  return rank;
}

mpz_class r_index(const IntTensor& m) {
  require_matrix(m, "r_index");
  for (std::int64_t v : m.data())
    if (v < 0) throw std::domain_error("r_index: elements must be non-negative");
  const PropertyReport sm = check_semi_magic(m);
  if (!sm.holds) throw std::domain_error("r_index: input is not semi-magic (" + sm.witness + ")");
  const ZMat g = gram_zmat(m);
  // G is symmetric, so trace(G²) = Σ G_ij².
  mpz_class fourth_power_sum = 0;
  for (const mpz_class& v : g) fourth_power_sum += v * v;
  mpz_class s = static_cast<long>(*sm.common_sum);
  return fourth_power_sum - s * s * s * s;
}

IntPoly predict_charpoly(const IntPoly& pa, const IntPoly& pb, std::int64_t sa, std::int64_t sb,
                         int m, int n, int k, Variant variant) {
  const PredictWeights w = predict_weights(sa, sb, m, n, k, variant);
  return assemble_prediction(pa, pb, mpz_class(static_cast<long>(sa)),
                             mpz_class(static_cast<long>(sb)), w, w.dominant, m, n,
                             "predict_charpoly");
}

IntPoly predict_gramian_charpoly(const IntPoly& ga, const IntPoly& gb, std::int64_t sa,
                                 std::int64_t sb, int m, int n, int k, Variant variant) {
  PredictWeights w = predict_weights(sa, sb, m, n, k, variant);
  const mpz_class dominant_sq = w.dominant * w.dominant;
  w.scale_a = w.scale_a * w.scale_a;
  w.scale_b = w.scale_b * w.scale_b;
  const mpz_class sa2 = mpz_class(static_cast<long>(sa)) * static_cast<long>(sa);
  const mpz_class sb2 = mpz_class(static_cast<long>(sb)) * static_cast<long>(sb);
  return assemble_prediction(ga, gb, sa2, sb2, w, dominant_sq, m, n, "predict_gramian_charpoly");
}

PredictionVerdict verify_prediction(const IntTensor& c, const IntTensor& a, const IntTensor& b,
                                    const CompoundRecipe& recipe) {
  require_matrix(c, "verify_prediction");
  require_matrix(a, "verify_prediction");
  require_matrix(b, "verify_prediction");
  const int m = a.side();
  const int n = b.side();
  if (recipe.m != m || recipe.n != n)
    throw std::invalid_argument("verify_prediction: recipe orders do not match the seeds");
  if (static_cast<std::int64_t>(c.side()) != static_cast<std::int64_t>(m) * n)
    throw std::invalid_argument("verify_prediction: recipe inconsistent with the compound order");
  const PropertyReport sma = check_semi_magic(a);
  if (!sma.holds) throw std::domain_error("verify_prediction: seed A is not semi-magic (" + sma.witness + ")");
  const PropertyReport smb = check_semi_magic(b);
  if (!smb.holds) throw std::domain_error("verify_prediction: seed B is not semi-magic (" + smb.witness + ")");
  const std::int64_t sa = *sma.common_sum;
  const std::int64_t sb = *smb.common_sum;

  PredictionVerdict verdict;
  verdict.eigen_match =
      charpoly(c) == predict_charpoly(charpoly(a), charpoly(b), sa, sb, m, n, recipe.k, recipe.variant);
  verdict.sv_match =
      gramian_charpoly(c) == predict_gramian_charpoly(gramian_charpoly(a), gramian_charpoly(b), sa,
                                                      sb, m, n, recipe.k, recipe.variant);
  return verdict;
}

bool annihilation_check(const IntTensor& a, const IntTensor& b, int trials, std::uint64_t seed) {
  require_matrix(a, "annihilation_check");
  require_matrix(b, "annihilation_check");
  const int m = a.side();
  const int n = b.side();
  const IntTensor alpha = kron(a, IntTensor::ones(2, n));
  const IntTensor beta = kron(IntTensor::ones(2, m), b);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);

  auto zero_sum_vector = [&](int len) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(len), 0);
    std::int64_t sum = 0;
    for (int i = 0; i + 1 < len; ++i) {
      v[static_cast<std::size_t>(i)] = dist(rng);
      sum += v[static_cast<std::size_t>(i)];
    }
    v[static_cast<std::size_t>(len - 1)] = -sum;
    return v;
  };

  for (int t = 0; t < trials; ++t) {
    const auto w = zero_sum_vector(n);
    const auto v = zero_sum_vector(m);
    std::vector<std::int64_t> ew(static_cast<std::size_t>(m) * n);   // e_m ⊗ w
    std::vector<std::int64_t> ve(static_cast<std::size_t>(m) * n);   // v ⊗ e_n
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < n; ++r) {
        ew[static_cast<std::size_t>(q) * n + r] = w[static_cast<std::size_t>(r)];
        ve[static_cast<std::size_t>(q) * n + r] = v[static_cast<std::size_t>(q)];
      }
    if (!matvec_is_zero(alpha, ew)) return false;
    if (!matvec_is_zero(beta, ve)) return false;
  }
  return true;
}

std::optional<std::vector<mpz_class>> integer_roots(const IntPoly& p) {
  if (p.is_zero() || !p.is_monic()) return std::nullopt;
  std::vector<mpz_class> roots;
  IntPoly q = p;
  while (q.degree() > 0 && q.coeff(0) == 0) {
    roots.emplace_back(0);
    q = divide_by_linear(q, 0);
  }
  mpz_class candidate = 1;
  while (q.degree() > 0) {
    // Remaining roots, if they are all positive integers, sum to minus the
    // subleading coefficient; that bounds the scan.
    const mpz_class bound = -q.coeff(q.degree() - 1);
    if (bound < candidate || bound > kRootScanLimit) return std::nullopt;
    const auto filter = coeffs_mod(q);
    bool found = false;
    for (; candidate <= bound; ++candidate) {
      const std::uint64_t c_mod =
          mpz_fdiv_ui(candidate.get_mpz_t(), static_cast<unsigned long>(kRootFilterModulus));
      if (!filter_eval_is_zero(filter, c_mod)) continue;
      if (q(candidate) == 0) { found = true; break; }
    }
    if (!found) return std::nullopt;
    roots.push_back(candidate);
    q = divide_by_linear(q, candidate);
    // The same value may repeat, so do not advance the candidate.
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

SpectralReport make_spectral_report(const IntTensor& m) {
  require_matrix(m, "spectral report");
  SpectralReport report;
  report.order = m.side();
  const PropertyReport sm = check_semi_magic(m);
  if (sm.holds) report.line_sum = sm.common_sum;
  report.rank = rank_exact(m);
  report.charpoly = charpoly(m);
  report.gramian_charpoly = gramian_charpoly(m);
  report.sv_squares = integer_roots(report.gramian_charpoly);
  const bool non_negative =
      std::all_of(m.data().begin(), m.data().end(), [](std::int64_t v) { return v >= 0; });
  if (sm.holds && non_negative) report.r_index = r_index(m);
  return report;
}

}  // namespace daa
