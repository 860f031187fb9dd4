#pragma once

// Dirichlet series, Euler products, and numerical checks of the series
// identities built on the unitary convolution ring.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unitary/characters.hpp"
#include "unitary/mfunc.hpp"

namespace unitary {

struct SeriesPoint {
  double x = 2.0;
  double y = 0.0;

  Complex s() const { return {x, y}; }
  SeriesPoint conj() const { return {x, -y}; }
};

enum class SummationMode { kDirect, kCesaro };

std::string_view mode_name(SummationMode mode);
SummationMode parse_mode(std::string_view name);

struct SummationConfig {
  std::uint64_t N = 100000;
  std::uint64_t P = 100000;
  SummationMode mode = SummationMode::kDirect;
  unsigned workers = 1;
  /// Allows 1/2 < x <= 1. Such results never count as pass or fail.
  bool exploratory = false;
  /// Overrides the default: the tail bound, clamped to [1e-9, 1e-2].
  std::optional<double> tolerance;
};

/// Throws unless cfg is well formed and s lies where the series converge:
/// x > 1, or 1/2 < x <= 1 with the exploratory flag.
void validate(SeriesPoint s, const SummationConfig& cfg);
bool in_exploratory_strip(SeriesPoint s);

enum class CheckStatus { kPass, kFail, kNotApplicable };

std::string_view status_name(CheckStatus status);

struct IdentityReport {
  std::string identity;
  SeriesPoint point;
  SummationConfig config;
  std::vector<std::string> labels;
  std::optional<std::uint64_t> seed;
  Complex lhs;
  Complex rhs;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tol = 0.0;
  double tail_bound = 0.0;
  /// The truncation estimate exceeds the tolerance, so the error is mostly tail.
  bool tail_dominated = false;
  CheckStatus status = CheckStatus::kFail;

  bool applicable() const { return status != CheckStatus::kNotApplicable; }
  bool passed() const { return status == CheckStatus::kPass; }
};

/// Crude truncation estimate C (1 + ln N) N^{1-x} / (x - 1).
double tail_estimate(SeriesPoint s, std::uint64_t N);

/// Fills errors, tolerance and status from lhs, rhs and the config.
/// extra_tail is added to the N-based estimate (e.g. for a prime cutoff P).
IdentityReport make_report(std::string identity, SeriesPoint s, const SummationConfig& cfg,
                           std::vector<std::string> labels, Complex lhs, Complex rhs,
                           double extra_tail = 0.0);

/// Sum of term(n) for first <= n <= last. Contiguous blocks go to workers and
/// are added back in block order, so results depend only on the worker count.
Complex parallel_sum(std::uint64_t first, std::uint64_t last, unsigned workers,
                     const std::function<Complex(std::uint64_t)>& term);

/// n^{-s} = exp(-s ln n).
Complex power_neg(std::uint64_t n, Complex s);

/// sum a(n)/n^s over n <= N, or its Cesaro mean with weights (N - n + 1)/N.
Complex dirichlet_sum(const std::function<Complex(std::uint64_t)>& a, SeriesPoint s,
                      const SummationConfig& cfg);
Complex dirichlet_series(const MultiplicativeFunction& f, SeriesPoint s,
                         const SummationConfig& cfg);
/// Partial zeta sum over n <= N.
Complex zeta_partial(SeriesPoint s, const SummationConfig& cfg);
/// Prime zeta sum over p <= P.
Complex prime_zeta_partial(SeriesPoint s, std::uint64_t P);

/// prod over p <= P of (1 - chi(p) p^{-s})^{-1}.
Complex euler_product_L(const DirichletCharacter& chi, SeriesPoint s, const SummationConfig& cfg);

/// |sum_{n <= N} chi(n)/n^s|^2.
double lseries_modsq_direct(const DirichletCharacter& chi, SeriesPoint s,
                            const SummationConfig& cfg);
/// The same quantity as the full double sum over n, q <= N.
double lseries_modsq_double_sum(const DirichletCharacter& chi, SeriesPoint s, std::uint64_t N);

/// (p, m, k) with gcd(m, k) = 1 and p <= min(N/m, N/k): each (n, q) in
/// [1, N]^2 arises exactly once as (pm, pk).
std::vector<std::array<std::uint64_t, 3>> coprime_reindex(std::uint64_t N);
/// The double sum taken in the (p, m, k) order.
double lseries_modsq_reindexed(const DirichletCharacter& chi, SeriesPoint s, std::uint64_t N);

/// Q(p^v) = 2 [cos(y ln p^v) Re chi(p^v) + sin(y ln p^v) Im chi(p^v)].
MultiplicativeFunction q_function(const DirichletCharacter& chi, double y);

struct QForms {
  double dot;          // 2 (cos, sin) . (Re, Im)
  double det_real;     // 2 det [[cos, -Im], [sin, Re]]
  Complex det_imag;    // 2 det [[cos, i Im], [i sin, Re]]
};
QForms q_forms(Complex chi_value, double y, double log_prime_power);
/// det of the product over p | n of the sqrt(2)-scaled i-matrices.
Complex q_matrix_product(const DirichletCharacter& chi, double y, std::uint64_t n);
/// 2^omega x [Cosa_y x Re chi box Sina_y x Im chi], which equals Q.
MultiplicativeFunction q_from_cosa_sina(const DirichletCharacter& chi, double y);

/// (sum_{r <= N} |chi(r)|^2 / r^{2x}) (sum_{l <= N} Q(l) / l^x).
double lseries_modsq_factored(const DirichletCharacter& chi, SeriesPoint s,
                              const SummationConfig& cfg);
/// First factor as above times prod_{q <= P} [1 + sum_{m <= M} Q(q^m)/q^{mx}],
/// with M the first exponent where q^{Mx} > 1e15.
double modsq_euler_product(const DirichletCharacter& chi, SeriesPoint s,
                           const SummationConfig& cfg);

/// zeta_N(2x) sum_{m <= N} 2^omega(m)/m^x prod_{p | m} cos(y ln p^{v_p(m)}).
double zeta_modsq_cosine(SeriesPoint s, const SummationConfig& cfg);

// Identity checks. Each returns one report comparing the two sides.
IdentityReport hardy_identity_check(double x, const SummationConfig& cfg);
IdentityReport zeta_cosine_check(SeriesPoint s, const SummationConfig& cfg);
IdentityReport lseries_factored_check(const DirichletCharacter& chi, SeriesPoint s,
                                      const SummationConfig& cfg);
IdentityReport lseries_euler_check(const DirichletCharacter& chi, SeriesPoint s,
                                   const SummationConfig& cfg);
IdentityReport euler_product_L_check(const DirichletCharacter& chi, SeriesPoint s,
                                     const SummationConfig& cfg);
/// D(F,s) D(G,s) = D(F x G, 2s) D(F box G, s). F and G must carry the
/// completely multiplicative flag.
IdentityReport product_identity_check(const MultiplicativeFunction& f,
                                      const MultiplicativeFunction& g, SeriesPoint s,
                                      const SummationConfig& cfg);
/// D(F,s) D(G,conj s) = D(F x G, 2x) D(F n^{-iy} box G n^{iy}, x).
IdentityReport conj_identity_check(const MultiplicativeFunction& f,
                                   const MultiplicativeFunction& g, SeriesPoint s,
                                   const SummationConfig& cfg);
/// |D(F,s)|^2 = D(|F|^2, 2x) D(F n^{-iy} box conj(F) n^{iy}, x).
IdentityReport modsq_identity_check(const MultiplicativeFunction& f, SeriesPoint s,
                                    const SummationConfig& cfg);
/// D(1_A x F, s) D(1_{not A} x F, s) = D(F, s) for a finite prime set A.
IdentityReport euler_complement_check(const MultiplicativeFunction& f,
                                      const std::set<std::uint64_t>& primes, SeriesPoint s,
                                      const SummationConfig& cfg);
/// P(s) zeta(s) = sum omega(n)/n^s.
IdentityReport omega_series_check(SeriesPoint s, const SummationConfig& cfg);
/// Two reports against zeta(s) - 1: the double sum with weight 1/omega(np),
/// and its rearrangement with weight 1/(omega(n) + 1).
std::array<IdentityReport, 2> omega_reciprocal_check(SeriesPoint s, const SummationConfig& cfg);
/// |cesaro - direct| for D(F, s).
IdentityReport cesaro_direct_check(const MultiplicativeFunction& f, SeriesPoint s,
                                   const SummationConfig& cfg);

}  // namespace unitary
