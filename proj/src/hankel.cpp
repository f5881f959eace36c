#include "bergman/hankel.hpp"

#include <lapacke.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bergman/series.hpp"
#include "bergman/special.hpp"

namespace bergman {

cplx HankelSymbol::operator()(std::uint64_t n) const {
  auto it = rho.find(n);
  return it == rho.end() ? cplx{} : it->second;
}

std::string to_string(HankelScheme s) {
  switch (s) {
    case HankelScheme::hardy: return "hardy";
    case HankelScheme::bergman: return "bergman";
    case HankelScheme::disc_bergman: return "disc-bergman";
    case HankelScheme::bidisc_hardy: return "two-var-hardy";
  }
  return "";
}

HankelScheme parse_scheme(const std::string& s) {
  for (auto t : {HankelScheme::hardy, HankelScheme::bergman, HankelScheme::disc_bergman, HankelScheme::bidisc_hardy})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown Hankel scheme: " + s);
}

double HankelMatrix::frobenius_sq() const {
  double s = 0;
  for (const auto& e : entries) s += std::norm(e);
  return s;
}

void write_text(std::ostream& os, const HankelMatrix& M) {
  const auto old = os.precision(17);
  os << to_string(M.scheme) << ' ' << M.n_basis << ' ' << M.rows << ' ' << M.cols << '\n';
  for (std::size_t i = 0; i < M.labels.size(); ++i) os << (i ? " " : "") << M.labels[i];
  os << '\n';
  for (std::size_t i = 0; i < M.rows; ++i) {
    for (std::size_t j = 0; j < M.cols; ++j) {
      const cplx e = M(i, j);
      os << (j ? " " : "") << e.real() << ' ' << e.imag();
    }
    os << '\n';
  }
  os.precision(old);
}

namespace {

MultiIndex parse_label(const std::string& tok) {
  if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') throw std::invalid_argument("bad label: " + tok);
  std::vector<std::uint32_t> e;
  std::stringstream ss(tok.substr(1, tok.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad label: " + tok);
    e.push_back(static_cast<std::uint32_t>(v));
  }
  return MultiIndex(std::move(e));
}

}  // namespace

HankelMatrix read_hankel_text(std::istream& is) {
  HankelMatrix M;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("missing header");
  {
    std::stringstream ss(line);
    std::string scheme;
    if (!(ss >> scheme >> M.n_basis >> M.rows >> M.cols)) throw std::invalid_argument("bad header: " + line);
    M.scheme = parse_scheme(scheme);
  }
  if (!std::getline(is, line)) throw std::invalid_argument("missing labels");
  {
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) M.labels.push_back(parse_label(tok));
  }
  M.entries.reserve(M.rows * M.cols);
  for (std::size_t i = 0; i < M.rows; ++i) {
    if (!std::getline(is, line)) throw std::invalid_argument("missing row");
    std::stringstream ss(line);
    for (std::size_t j = 0; j < M.cols; ++j) {
      double re = 0, im = 0;
      if (!(ss >> re >> im)) throw std::invalid_argument("short row");
      M.entries.emplace_back(re, im);
    }
    std::string extra;
    if (ss >> extra) throw std::invalid_argument("long row");
  }
  return M;
}

namespace {

double d2_of(const MultiIndex& k) {
  double d = 1;
  for (auto e : k.exponents()) d *= e + 1.0;
  return d;
}

template <class F>
void fill_rows(HankelMatrix& M, Exec exec, F&& entry) {
  M.entries.assign(M.rows * M.cols, cplx{});
  const auto n = static_cast<long long>(M.rows);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i)
      for (std::size_t j = 0; j < M.cols; ++j)
        M.entries[static_cast<std::size_t>(i) * M.cols + j] = entry(static_cast<std::size_t>(i), j);
  } else {
    for (long long i = 0; i < n; ++i)
      for (std::size_t j = 0; j < M.cols; ++j)
        M.entries[static_cast<std::size_t>(i) * M.cols + j] = entry(static_cast<std::size_t>(i), j);
  }
}

void check_support(const HankelSymbol& sym, std::uint64_t largest_product) {
  if (sym.n_sym < largest_product)
    throw std::invalid_argument("symbol known up to " + std::to_string(sym.n_sym) + ", section needs " +
                                std::to_string(largest_product));
}

HankelMatrix multiplicative(const HankelSymbol& sym, const std::vector<std::uint64_t>& basis, HankelScheme scheme,
                            Exec exec) {
  if (basis.empty()) throw std::invalid_argument("empty basis");
  const std::uint64_t top = *std::max_element(basis.begin(), basis.end());
  check_support(sym, top * top);
  HankelMatrix M;
  M.scheme = scheme;
  M.n_basis = basis.size();
  M.rows = M.cols = basis.size();
  for (auto n : basis) M.labels.push_back(factorize(n));
  std::vector<double> dn(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) dn[i] = d2_of(M.labels[i]);
  const bool weighted = scheme == HankelScheme::bergman;
  fill_rows(M, exec, [&](std::size_t i, std::size_t j) {
    const cplx r = sym(basis[i] * basis[j]);
    if (!weighted || r == cplx{}) return r;
    return r * std::sqrt(dn[i] * dn[j]) / d2_of(M.labels[i] + M.labels[j]);
  });
  return M;
}

std::vector<std::uint64_t> first_integers(std::uint64_t n) {
  std::vector<std::uint64_t> b(n);
  for (std::uint64_t i = 0; i < n; ++i) b[i] = i + 1;
  return b;
}

}  // namespace

HankelMatrix build_bergman_hankel(const HankelSymbol& sym, std::uint64_t n_basis, Exec exec) {
  return multiplicative(sym, first_integers(n_basis), HankelScheme::bergman, exec);
}

HankelMatrix build_hardy_hankel(const HankelSymbol& sym, std::uint64_t n_basis, Exec exec) {
  return multiplicative(sym, first_integers(n_basis), HankelScheme::hardy, exec);
}

HankelMatrix build_hardy_hankel(const HankelSymbol& sym, const std::vector<std::uint64_t>& basis, Exec exec) {
  auto M = multiplicative(sym, basis, HankelScheme::hardy, exec);
  M.n_basis = basis.size();
  return M;
}

HankelMatrix build_disc_bergman_hankel(const DiscPolynomial& phi, int D) {
  if (D < 0) throw std::invalid_argument("negative truncation");
  if (phi.degree() > 2 * D) throw std::invalid_argument("symbol degree exceeds 2D");
  HankelMatrix M;
  M.scheme = HankelScheme::disc_bergman;
  M.n_basis = static_cast<std::uint64_t>(D) + 1;
  M.rows = M.cols = M.n_basis;
  for (int j = 0; j <= D; ++j) M.labels.push_back(MultiIndex({static_cast<std::uint32_t>(j)}));
  fill_rows(M, Exec::serial, [&](std::size_t j, std::size_t k) {
    const int l = static_cast<int>(j + k);
    return std::conj(phi.coeff(l)) * std::sqrt((j + 1.0) * (k + 1.0)) / (l + 1.0);
  });
  return M;
}

HankelMatrix build_bidisc_hardy_hankel(const PolydiscPolynomial& psi, int D, Exec exec) {
  if (D < 0) throw std::invalid_argument("negative truncation");
  if (psi.dimension() > 2) throw std::invalid_argument("more than two variables");
  for (const auto& [k, a] : psi.coeffs())
    if (k.total_degree() > 2 * static_cast<std::uint64_t>(D))
      throw std::invalid_argument("symbol degree exceeds 2D");
  const std::size_t n = static_cast<std::size_t>(D + 1) * static_cast<std::size_t>(D + 2) / 2;
  HankelMatrix M;
  M.scheme = HankelScheme::bidisc_hardy;
  M.n_basis = static_cast<std::uint64_t>(D);
  M.rows = M.cols = n;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> deg;
  for (std::uint32_t t = 0; t <= static_cast<std::uint32_t>(D); ++t)
    for (std::uint32_t a = t + 1; a-- > 0;) {
      deg.emplace_back(a, t - a);
      M.labels.push_back(MultiIndex({a, t - a}));
    }
  // dense coefficient table indexed by (a, b) with a, b <= 2D
  const std::size_t w = 2 * static_cast<std::size_t>(D) + 1;
  std::vector<cplx> c(w * w);
  for (const auto& [k, a] : psi.coeffs()) c[k[0] * w + k[1]] = std::conj(a);
  fill_rows(M, exec, [&](std::size_t i, std::size_t j) {
    return c[(deg[i].first + deg[j].first) * w + deg[i].second + deg[j].second];
  });
  return M;
}

double SingularSpectrum::sum_sq() const {
  double s = 0;
  for (double v : values) s += v * v;
  return s;
}

SingularSpectrum singular_values(const HankelMatrix& M) {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < M.rows; ++i)
    for (std::size_t j = 0; j < M.cols; ++j)
      if (M(i, j) != cplx{}) {
        rows.push_back(i);
        break;
      }
  for (std::size_t j = 0; j < M.cols; ++j)
    for (std::size_t i = 0; i < M.rows; ++i)
      if (M(i, j) != cplx{}) {
        cols.push_back(j);
        break;
      }
  SingularSpectrum out;
  out.values.assign(std::min(M.rows, M.cols), 0.0);
  const auto r = static_cast<lapack_int>(rows.size());
  const auto c = static_cast<lapack_int>(cols.size());
  if (r == 0 || c == 0) return out;
  std::vector<lapack_complex_double> a(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const cplx e = M(rows[i], cols[j]);
      a[j * rows.size() + i] = lapack_make_complex_double(e.real(), e.imag());
    }
  std::vector<double> s(std::min(rows.size(), cols.size()));
  const lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', r, c, a.data(), r, s.data(), nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("zgesdd failed with info " + std::to_string(info));
  std::copy(s.begin(), s.end(), out.values.begin());
  return out;
}

SingularSpectrum singular_values_gram(const HankelMatrix& M) {
  Eigen::MatrixXcd A(M.rows, M.cols);
  for (std::size_t i = 0; i < M.rows; ++i)
    for (std::size_t j = 0; j < M.cols; ++j) A(i, j) = M(i, j);
  const bool wide = M.cols > M.rows;
  Eigen::MatrixXcd G = wide ? Eigen::MatrixXcd(A * A.adjoint()) : Eigen::MatrixXcd(A.adjoint() * A);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
  SingularSpectrum out;
  const auto& ev = es.eigenvalues();
  for (Eigen::Index i = ev.size(); i-- > 0;) out.values.push_back(std::sqrt(std::max(ev(i), 0.0)));
  return out;
}

double frobenius_sq_upto(const HankelMatrix& M, std::uint64_t L) {
  if (M.scheme != HankelScheme::hardy && M.scheme != HankelScheme::bergman)
    throw std::invalid_argument("frobenius_sq_upto needs a multiplicative scheme");
  std::vector<std::uint64_t> n;
  for (const auto& k : M.labels) n.push_back(index_to_integer(k));
  double s = 0;
  for (std::size_t i = 0; i < M.rows; ++i)
    for (std::size_t j = 0; j < M.cols; ++j)
      if (n[i] <= L / n[j]) s += std::norm(M(i, j));
  return s;
}

Rational bergman_section_mass_exact(const std::map<std::uint64_t, Rational>& rho_sq, std::uint64_t n_basis,
                                    std::uint64_t L) {
  Rational s;
  for (std::uint64_t m = 1; m <= n_basis; ++m)
    for (std::uint64_t n = 1; n <= n_basis && m * n <= L; ++n) {
      auto it = rho_sq.find(m * n);
      if (it == rho_sq.end()) continue;
      const auto km = factorize(m), kn = factorize(n);
      const auto dm = static_cast<std::int64_t>(d2_of(km)), dn = static_cast<std::int64_t>(d2_of(kn));
      const auto dmn = static_cast<std::int64_t>(d2_of(km + kn));
      s += it->second * Rational(dm * dn, dmn * dmn);
    }
  return s;
}

Rational hs_mass_bergman_exact(const std::map<std::uint64_t, Rational>& rho_sq) {
  Rational s;
  for (const auto& [l, r] : rho_sq) {
    const auto d = static_cast<std::int64_t>(d2_of(factorize(l)));
    s += r * divisor_fn(Rational(4), l) / Rational(d * d);
  }
  return s;
}

Rational hs_mass_hardy_exact(const std::map<std::uint64_t, Rational>& rho_sq) {
  Rational s;
  for (const auto& [l, r] : rho_sq) s += r * Rational(static_cast<std::int64_t>(d2_of(factorize(l))));
  return s;
}

double hs_norm_bergman(const HankelSymbol& sym) {
  double s = 0;
  for (const auto& [l, r] : sym.rho) {
    const auto k = factorize(l);
    const double d = d2_of(k);
    s += std::norm(r) * divisor_fn(4.0, k) / (d * d);
  }
  return std::sqrt(s);
}

double hs_norm_hardy(const HankelSymbol& sym) {
  double s = 0;
  for (const auto& [l, r] : sym.rho) s += std::norm(r) * d2_of(factorize(l));
  return std::sqrt(s);
}

HankelSymbol hilbert_type_symbol(std::uint64_t N) {
  if (N < 2) throw std::invalid_argument("hilbert_type_symbol needs N >= 2");
  const auto& tab = arithmetic_tables(N);
  HankelSymbol sym;
  sym.n_sym = N;
  for (std::uint64_t n = 2; n <= N; ++n) {
    const double x = static_cast<double>(n);
    const double lg = std::log(x);
    sym.rho[n] = static_cast<double>(tab.d2(n)) / (std::sqrt(x) * lg * lg);
  }
  return sym;
}

namespace {

void require_no_constant(const DirichletPolynomial& f) {
  if (f.coeff(1) != cplx{}) throw std::invalid_argument("Hilbert-type form needs a_1 = 0");
}

cplx eval_real(const DirichletPolynomial& f, double sigma) {
  cplx s{};
  for (const auto& [n, a] : f.coeffs()) s += a * std::pow(static_cast<double>(n), -sigma);
  return s;
}

}  // namespace

FormValue hilbert_form_eval(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  require_no_constant(f);
  require_no_constant(g);
  auto h = [&](double u) { return eval_real(f, 0.5 + u) * eval_real(g, 0.5 + u) * u; };
  const auto re = integrate_half_line([&](double u) { return h(u).real(); }, 0.0);
  const auto im = integrate_half_line([&](double u) { return h(u).imag(); }, 0.0);
  return {cplx(re.value, im.value), re.error + im.error};
}

cplx hilbert_form_coeff(const DirichletPolynomial& f, const DirichletPolynomial& g) {
  require_no_constant(f);
  require_no_constant(g);
  cplx s{};
  for (const auto& [m, a] : f.coeffs())
    for (const auto& [n, b] : g.coeffs()) {
      const double l = static_cast<double>(m) * static_cast<double>(n);
      const double lg = std::log(l);
      s += a * b / (std::sqrt(l) * lg * lg);
    }
  return s;
}

HsPartialSums hilbert_type_hs_partial_sums(const std::vector<std::uint64_t>& N) {
  HsPartialSums out;
  if (N.empty()) return out;
  const std::uint64_t top = *std::max_element(N.begin(), N.end());
  const auto& tab = arithmetic_tables(std::max<std::uint64_t>(top, 2));
  std::vector<std::uint64_t> sorted = N;
  std::sort(sorted.begin(), sorted.end());
  double s = 0;
  std::uint64_t n = 2;
  for (auto cut : sorted) {
    for (; n <= cut; ++n) {
      const double x = static_cast<double>(n);
      const double lg = std::log(x);
      // |rho_n|^2 d_4 / d^2 with rho_n = d(n) / (sqrt n log^2 n)
      s += static_cast<double>(tab.d4(n)) / (x * lg * lg * lg * lg);
    }
    out.N.push_back(cut);
    out.mass.push_back(s);
  }
  return out;
}

WitnessValue noncompactness_witness(double eps) {
  if (!(eps > 0 && eps <= 0.5)) throw std::domain_error("noncompactness_witness needs 0 < eps <= 1/2");
  const double z = zeta_real(1 + eps);
  const double norm = std::sqrt(z * z - 1);
  auto k = [&](double sigma) {
    const double zs = zeta_real(sigma + 0.5 + eps / 2);
    return (zs * zs - 1) / norm;
  };
  auto integrand = [&](double sigma) {
    const double v = k(sigma);
    return v * v * (sigma - 0.5);
  };
  // k_eps lives on the scale eps next to sigma = 1/2
  const double cuts[] = {0.5, 0.5 + eps / 2, 0.5 + 2 * eps, 0.5 + 8 * eps, 2.0};
  WitnessValue out{0, 0, 0};
  for (int i = 0; i + 1 < 5; ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    const auto piece = integrate_interval(integrand, cuts[i], cuts[i + 1], 1e-11);
    out.value += piece.value;
    out.error += piece.error;
  }
  const auto tail = integrate_half_line(integrand, 2.0, 1e-11);
  out.value += tail.value;
  out.error += tail.error;
  // ||k_eps||^2 = K(w, w) / (zeta^2(1 + eps) - 1) with K(w, w) = zeta^2(2 Re w) - 1
  const double zw = zeta_real(2 * (0.5 + eps / 2));
  out.normalization = (zw * zw - 1) / (z * z - 1);
  return out;
}

PolydiscPolynomial extend_E(const DiscPolynomial& g) {
  std::map<MultiIndex, cplx> c;
  for (int l = 0; l <= g.degree(); ++l) {
    const cplx b = g.coeff(l);
    if (b == cplx{}) continue;
    for (int j = 0; j <= l; ++j)
      c[MultiIndex({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(l - j)})] = b / (l + 1.0);
  }
  return PolydiscPolynomial(std::move(c));
}

DiscPolynomial diagonal_D(const PolydiscPolynomial& F) {
  if (F.dimension() > 2) throw std::invalid_argument("diagonal_D needs at most two variables");
  std::vector<cplx> c(1);
  for (const auto& [k, a] : F.coeffs()) {
    const auto l = static_cast<std::size_t>(k.total_degree());
    if (c.size() <= l) c.resize(l + 1);
    c[l] += a;
  }
  return DiscPolynomial(std::move(c));
}

PolydiscPolynomial project_P(const PolydiscPolynomial& F) { return extend_E(diagonal_D(F)); }

cplx hardy_inner(const PolydiscPolynomial& F, const PolydiscPolynomial& G) {
  cplx s{};
  for (const auto& [k, a] : F.coeffs()) s += a * std::conj(G.coeff(k));
  return s;
}

cplx bergman_inner(const DiscPolynomial& f, const DiscPolynomial& g) {
  cplx s{};
  const int n = std::min(f.degree(), g.degree());
  for (int j = 0; j <= n; ++j) s += f.coeff(j) * std::conj(g.coeff(j)) / (j + 1.0);
  return s;
}

namespace {

double spectrum_residual(const std::vector<double>& a, const std::vector<double>& b) {
  double r = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    r = std::max(r, std::abs(x - y));
  }
  return r;
}

}  // namespace

SvPreservation sv_preservation_residual(const DiscPolynomial& phi, int D) {
  if (phi.degree() > 2 * D) throw std::invalid_argument("symbol degree exceeds 2D");
  const auto Ephi = extend_E(phi);
  SvPreservation out;
  out.disc_values = singular_values(build_disc_bergman_hankel(phi, D)).values;
  out.bidisc_values = singular_values(build_bidisc_hardy_hankel(Ephi, D)).values;
  out.residual = spectrum_residual(out.disc_values, out.bidisc_values);
  const auto disc2 = singular_values(build_disc_bergman_hankel(phi, 2 * D)).values;
  const auto bidisc2 = singular_values(build_bidisc_hardy_hankel(Ephi, 2 * D)).values;
  out.residual_2d = spectrum_residual(disc2, bidisc2);
  return out;
}

WeakfacConstants weakfac_constants() {
  const DiscPolynomial phi({0.0, std::sqrt(2.0)});
  WeakfacConstants w{};
  w.phi_a1 = norm_quad(phi, {1.0, 2.0}).value;
  w.phi_a1_closed = 2 * std::sqrt(2.0) / 3;
  w.phi_a2 = norm_a2alpha_coeff(phi, 2.0);
  w.hankel_norm = singular_values(build_disc_bergman_hankel(phi, 1)).values.front();
  w.c1_bound = w.phi_a2 * w.phi_a2 / (w.phi_a1 * w.hankel_norm);
  w.c1_closed = 3 / (2 * std::sqrt(2.0));
  for (int d = 1; d <= 4; ++d) w.cd_bound.push_back(std::pow(w.c1_bound, d));
  return w;
}

DualityTail duality_tail(double alpha, std::uint64_t N, Exec exec) {
  if (!(alpha > 1 && alpha < 2)) throw std::domain_error("duality_tail needs 1 < alpha < 2");
  if (N < 100) throw std::domain_error("duality_tail needs N >= 100");
  const auto& tab = arithmetic_tables(2 * N);
  auto term = [&](std::size_t n) {
    const double x = static_cast<double>(n);
    const double lg = std::log(x);
    return static_cast<double>(tab.d2(n)) * std::pow(alpha, tab.big_omega(n)) / (x * lg * lg * lg * lg);
  };
  DualityTail out{};
  out.sum_n = sum<double>(exec, 2, N + 1, term);
  out.increment = sum<double>(exec, N + 1, 2 * N + 1, term);
  out.sum_2n = out.sum_n + out.increment;
  // sum_{n <= x} d(n) alpha^Omega(n) ~ C x (log x)^k with k = 2 alpha - 1
  const double C = average_order_ratio(alpha, 100, Exec::serial).constant;
  const double k = 2 * alpha - 1;
  auto tail = [&](double x) {
    const double L = std::log(x);
    return C * (std::pow(L, k - 3) / (3 - k) + k * std::pow(L, k - 4) / (4 - k));
  };
  out.tail_n = tail(static_cast<double>(N));
  out.predicted_increment = out.tail_n - tail(2.0 * static_cast<double>(N));
  out.relative_change = out.increment / out.sum_n;
  return out;
}

}  // namespace bergman
