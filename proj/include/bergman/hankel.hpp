#pragma once

// Finite sections of multiplicative and one-variable Hankel forms, their
// singular values, Hilbert-Schmidt masses, the Hilbert-type form on the
// half-plane, and the diagonal/extension operators between A^2(D) and H^2(D^2).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bergman/arith.hpp"
#include "bergman/disc.hpp"
#include "bergman/parallel.hpp"
#include "bergman/polydisc.hpp"

namespace bergman {

/// Coefficients rho_n of the form sum a_m b_n rho_mn / d(mn). rho is known for
/// n <= n_sym; entries missing from the map are zero.
struct HankelSymbol {
  std::map<std::uint64_t, cplx> rho;
  std::uint64_t n_sym = 0;

  [[nodiscard]] cplx operator()(std::uint64_t n) const;
};

enum class HankelScheme { hardy, bergman, disc_bergman, bidisc_hardy };

std::string to_string(HankelScheme s);
HankelScheme parse_scheme(const std::string& s);

/// Dense section of a form on an orthonormal basis. Labels are prime-exponent
/// indices for the multiplicative schemes and monomial degrees otherwise.
struct HankelMatrix {
  HankelScheme scheme = HankelScheme::hardy;
  std::uint64_t n_basis = 0;
  std::vector<MultiIndex> labels;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> entries;  // row-major

  [[nodiscard]] cplx operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  [[nodiscard]] double frobenius_sq() const;
};

/// Header "scheme n_basis rows cols", a line of labels, then one line per row
/// of "re im" pairs.
void write_text(std::ostream& os, const HankelMatrix& M);
/// Throws std::invalid_argument on malformed input.
HankelMatrix read_hankel_text(std::istream& is);

/// entry(m, n) = rho_mn sqrt(d(m) d(n)) / d(mn) for 1 <= m, n <= n_basis.
/// Throws std::invalid_argument if the symbol is not known up to n_basis^2.
HankelMatrix build_bergman_hankel(const HankelSymbol& sym, std::uint64_t n_basis, Exec exec = Exec::parallel);
/// entry(m, n) = rho_mn.
HankelMatrix build_hardy_hankel(const HankelSymbol& sym, std::uint64_t n_basis, Exec exec = Exec::parallel);
/// Same on an explicit basis of integers.
HankelMatrix build_hardy_hankel(const HankelSymbol& sym, const std::vector<std::uint64_t>& basis,
                                Exec exec = Exec::parallel);

/// H_phi on A^2(D) with basis w^j sqrt(j + 1), 0 <= j <= D:
/// entry(j, k) = conj(b_{j+k}) sqrt((j+1)(k+1)) / (j+k+1). Throws
/// std::invalid_argument if deg phi > 2D.
HankelMatrix build_disc_bergman_hankel(const DiscPolynomial& phi, int D);
/// H_psi on H^2(D^2) with basis z1^j1 z2^j2, j1 + j2 <= D, ordered by total
/// degree then j1 descending: entry = conj(psi coefficient at j + k). Throws
/// std::invalid_argument if psi has more than two variables or total degree > 2D.
HankelMatrix build_bidisc_hardy_hankel(const PolydiscPolynomial& psi, int D, Exec exec = Exec::parallel);

struct SingularSpectrum {
  std::vector<double> values;  // nonincreasing, length min(rows, cols)

  [[nodiscard]] double sum_sq() const;
};

/// LAPACK zgesdd on the matrix with its exactly zero rows and columns removed;
/// those contribute zeros at the end of the spectrum.
SingularSpectrum singular_values(const HankelMatrix& M);
/// Square roots of the eigenvalues of M* M. Loses singular values below about
/// sqrt(eps) * s_0; kept as an independent route.
SingularSpectrum singular_values_gram(const HankelMatrix& M);

/// Frobenius mass of a multiplicative-scheme matrix over entries with mn <= L.
double frobenius_sq_upto(const HankelMatrix& M, std::uint64_t L);

/// Exact Frobenius mass of the Bergman section on 1 <= m, n <= n_basis over
/// pairs with mn <= L, from rational |rho_l|^2.
Rational bergman_section_mass_exact(const std::map<std::uint64_t, Rational>& rho_sq, std::uint64_t n_basis,
                                    std::uint64_t L);
/// sum |rho_l|^2 d_4(l) / d(l)^2 and sum |rho_l|^2 d(l), exactly.
Rational hs_mass_bergman_exact(const std::map<std::uint64_t, Rational>& rho_sq);
Rational hs_mass_hardy_exact(const std::map<std::uint64_t, Rational>& rho_sq);

/// (sum |rho_l|^2 d_4(l) / d(l)^2)^(1/2).
double hs_norm_bergman(const HankelSymbol& sym);
/// (sum |rho_n|^2 d(n))^(1/2).
double hs_norm_hardy(const HankelSymbol& sym);

/// rho_n = d(n) / (sqrt(n) (log n)^2) for 2 <= n <= N, rho_1 = 0.
HankelSymbol hilbert_type_symbol(std::uint64_t N);

/// integral_{1/2}^inf f(sigma) g(sigma) (sigma - 1/2) dsigma. Throws
/// std::invalid_argument if f or g has a constant term.
struct FormValue {
  cplx value;
  double error;
};
FormValue hilbert_form_eval(const DirichletPolynomial& f, const DirichletPolynomial& g);
/// sum_{m,n} a_m b_n (mn)^(-1/2) / (log mn)^2, the same form on coefficients.
cplx hilbert_form_coeff(const DirichletPolynomial& f, const DirichletPolynomial& g);

/// Growth diagnostic for the Bergman HS mass of the Hilbert-type symbol.
struct HsPartialSums {
  std::vector<std::uint64_t> N;
  std::vector<double> mass;  // sum_{l <= N} |rho_l|^2 d_4(l) / d(l)^2
};
HsPartialSums hilbert_type_hs_partial_sums(const std::vector<std::uint64_t>& N);

struct WitnessValue {
  double value;          // H(k_eps^2)
  double error;
  double normalization;  // ||k_eps||^2 from the kernel on the diagonal
};
/// H(k_eps k_eps) for the normalized kernel of A^2_0 at 1/2 + eps/2. Throws
/// std::domain_error unless 0 < eps <= 1/2.
WitnessValue noncompactness_witness(double eps);

/// E g: coefficient b_l / (l + 1) on every z1^j z2^k with j + k = l.
PolydiscPolynomial extend_E(const DiscPolynomial& g);
/// D F (w) = F(w, w). Throws std::invalid_argument for more than two variables.
DiscPolynomial diagonal_D(const PolydiscPolynomial& F);
/// P = E D.
PolydiscPolynomial project_P(const PolydiscPolynomial& F);

/// <F, G> in H^2 of the polydisc: sum a_k conj(b_k).
cplx hardy_inner(const PolydiscPolynomial& F, const PolydiscPolynomial& G);
/// <f, g> in A^2(D): sum a_j conj(b_j) / (j + 1).
cplx bergman_inner(const DiscPolynomial& f, const DiscPolynomial& g);

struct SvPreservation {
  double residual;     // max_n |s_n(H_phi) - s_n(H_{E phi})| at truncation D
  double residual_2d;  // the same at 2D
  std::vector<double> disc_values;
  std::vector<double> bidisc_values;
};
/// Throws std::invalid_argument if deg phi > 2D.
SvPreservation sv_preservation_residual(const DiscPolynomial& phi, int D);

struct WeakfacConstants {
  double phi_a1;          // ||sqrt2 w||_{A^1} by quadrature
  double phi_a1_closed;   // 2 sqrt2 / 3
  double phi_a2;          // 1
  double hankel_norm;     // top singular value of H_phi
  double c1_bound;        // phi_a2^2 / (phi_a1 hankel_norm)
  double c1_closed;       // 3 / (2 sqrt 2)
  std::vector<double> cd_bound;  // c1_bound^d for d = 1..4
};
WeakfacConstants weakfac_constants();

struct DualityTail {
  double sum_n;           // sum_{2 <= n <= N} d(n) alpha^Omega(n) / (n (log n)^4)
  double sum_2n;          // the same up to 2N
  double increment;       // sum_2n - sum_n
  double predicted_increment;  // from the average-order asymptotic
  double tail_n;          // predicted tail beyond N
  double relative_change; // increment / sum_n
};
/// Throws std::domain_error unless 1 < alpha < 2.
DualityTail duality_tail(double alpha, std::uint64_t N, Exec exec = Exec::parallel);

}  // namespace bergman
