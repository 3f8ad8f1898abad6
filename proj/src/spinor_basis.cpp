#include "epalg/spinor_basis.hpp"

#include <cmath>
#include <sstream>

namespace epalg {

std::string SpinorLabel::to_string() const {
  std::ostringstream os;
  os << "(Lambda=" << Lambda.to_string() << ",J=" << J.to_string()
     << ",gamma=" << gamma.to_string() << ",M=" << M.to_string() << ")";
  return os.str();
}

bool label_valid(const SpinorLabel& l) {
  if (!l.Lambda.is_nonneg() || !l.J.is_nonneg()) return false;
  HalfInt d = l.Lambda - l.J;
  if (!d.is_integer() || d.twice() < 0) return false;
  auto in_range = [&](HalfInt x) {
    HalfInt lo = -l.J;
    if (x < lo || l.J < x) return false;
    return (l.J - x).is_integer();  // integer steps within the multiplet
  };
  return in_range(l.gamma) && in_range(l.M);
}

void require_valid(const SpinorLabel& l) {
  if (!label_valid(l)) throw InvalidLabel("invalid spinor label " + l.to_string());
}

bool SpinorPoly::is_zero() const {
  for (const auto& [m, c] : terms)
    if (!c.is_zero()) return false;
  return true;
}

int SpinorPoly::total_degree() const {
  for (const auto& [m, c] : terms)
    if (!c.is_zero()) return m[0] + m[1] + m[2] + m[3];
  return -1;
}

bool SpinorPoly::homogeneous() const {
  int deg = -1;
  for (const auto& [m, c] : terms) {
    if (c.is_zero()) continue;
    int d = m[0] + m[1] + m[2] + m[3];
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  return true;
}

SpinorPoly SpinorPoly::normalized() const {
  ExactScalar s = ExactScalar::sqrt_of_rational(prefactor_sq);
  SpinorPoly out;
  out.prefactor_sq = Rational(1);
  out.source = source;
  for (const auto& [m, c] : terms) {
    if (!c.is_zero()) out.terms[m] = c * s;
  }
  return out;
}

LadderCoeff LadderCoeff::sqrt_of(const Rational& radicand, int sign) {
  if (radicand < 0) throw std::domain_error("sqrt of negative ladder radicand");
  if (radicand == 0) return {Rational(0), 1};
  // sqrt(p/q) = sqrt(p*q)/q; split p*q = s^2 * r
  mpz_class pq = radicand.get_num() * radicand.get_den();
  if (!pq.fits_ulong_p()) throw std::domain_error("ladder radicand too large");
  auto split = split_squarefree(pq.get_ui());
  Rational rat(mpz_class(split.square_root_part), radicand.get_den());
  rat.canonicalize();
  if (sign < 0) rat = -rat;
  return {rat, split.squarefree_part};
}

LadderCoeff LadderCoeff::operator*(const LadderCoeff& o) const {
  if (rat == 0 || o.rat == 0) return {Rational(0), 1};
  // sqrt(r1)*sqrt(r2) = g * sqrt((r1/g)*(r2/g)) with g = gcd(r1,r2)
  std::uint64_t g = std::__gcd(root, o.root);
  LadderCoeff out;
  out.rat = rat * o.rat * Rational(static_cast<unsigned long>(g));
  out.root = (root / g) * (o.root / g);
  return out;
}

double LadderCoeff::as_double() const {
  return to_double(rat) * std::sqrt(static_cast<double>(root));
}

ExactScalar LadderCoeff::as_exact() const {
  if (rat == 0) return ExactScalar();
  if (root == 1) return ExactScalar(rat);
  if (root == 2) return ExactScalar(Rational(0), rat, Rational(0), Rational(0));
  throw std::domain_error("ladder coefficient sqrt(" + std::to_string(root) +
                          ") not in Q(i,sqrt2)");
}

std::string LadderCoeff::to_string() const {
  if (rat == 0) return "0";
  if (root == 1) return epalg::to_string(rat);
  return epalg::to_string(rat) + "*sqrt(" + std::to_string(root) + ")";
}

LadderResult apply_ladder(LadderOp op, const SpinorLabel& l) {
  require_valid(l);
  const Rational J = l.J.as_rational();
  const Rational M = l.M.as_rational();
  const Rational gam = l.gamma.as_rational();
  const Rational Lam = l.Lambda.as_rational();
  switch (op) {
    case LadderOp::Jz:
      return {LadderCoeff::from_rational(M), l};
    case LadderOp::Gamma0:
      return {LadderCoeff::from_rational(gam), l};
    case LadderOp::J2:
      return {LadderCoeff::from_rational(J * (J + 1)), l};
    case LadderOp::Casimir:
      return {LadderCoeff::from_rational(2 * Lam * (Lam + 2)), l};
    case LadderOp::Jplus: {
      Rational rad = (J + M + 1) * (J - M);
      if (rad == 0) return {LadderCoeff{}, std::nullopt};
      return {LadderCoeff::sqrt_of(rad), SpinorLabel{l.Lambda, l.J, l.gamma, l.M + HalfInt::from_int(1)}};
    }
    case LadderOp::Jminus: {
      Rational rad = (J - M + 1) * (J + M);
      if (rad == 0) return {LadderCoeff{}, std::nullopt};
      return {LadderCoeff::sqrt_of(rad), SpinorLabel{l.Lambda, l.J, l.gamma, l.M - HalfInt::from_int(1)}};
    }
    case LadderOp::DeltaJplus: {
      Rational c = (Lam + 1) * (J - gam);
      if (c == 0) return {LadderCoeff{}, std::nullopt};
      return {LadderCoeff::from_rational(c), SpinorLabel{l.Lambda, l.J, l.gamma + HalfInt::from_int(1), l.M}};
    }
    case LadderOp::DeltaJminus: {
      Rational c = -(Lam + 1) * (J + gam);
      if (c == 0) return {LadderCoeff{}, std::nullopt};
      return {LadderCoeff::from_rational(c), SpinorLabel{l.Lambda, l.J, l.gamma - HalfInt::from_int(1), l.M}};
    }
  }
  throw std::logic_error("unreachable ladder op");
}

ExactScalar spinor_metric(const SpinorLabel& l) {
  HalfInt d = l.Lambda - l.gamma;
  if (!d.is_integer()) throw InvalidLabel("Lambda - gamma not an integer for " + l.to_string());
  return ExactScalar::from_int(d.as_int() % 2 == 0 ? 1 : -1);
}

std::size_t multiplet_dimension(HalfInt Lambda) {
  if (!Lambda.is_nonneg()) throw InvalidLabel("negative Lambda");
  std::size_t total = 0;
  for (int tj = Lambda.twice(); tj >= 0; tj -= 2) {
    std::size_t n = static_cast<std::size_t>(tj) + 1;  // 2J+1
    total += n * n;
  }
  return total;
}

std::vector<SpinorLabel> multiplet_labels(HalfInt Lambda) {
  if (!Lambda.is_nonneg()) throw InvalidLabel("negative Lambda");
  std::vector<SpinorLabel> out;
  for (int tj = Lambda.twice(); tj >= 0; tj -= 2) {
    HalfInt J(tj);
    for (int tg = tj; tg >= -tj; tg -= 2)
      for (int tm = tj; tm >= -tj; tm -= 2)
        out.push_back({Lambda, J, HalfInt(tg), HalfInt(tm)});
  }
  return out;
}

bool formula_buildable(const SpinorLabel& l) {
  return label_valid(l) && (l.M + l.gamma).twice() >= 0 && (l.M - l.gamma).twice() >= 0;
}

SpinorPoly build_state(const SpinorLabel& l) {
  require_valid(l);
  HalfInt mpg = l.M + l.gamma, mmg = l.M - l.gamma;
  if (mpg.twice() < 0 || mmg.twice() < 0)
    throw InvalidLabel("chi exponent M+gamma or M-gamma negative for " + l.to_string() +
                       "; state is reached by ladder action");
  const int n_pg = mpg.as_int();          // chi_+^(+) prefactor exponent
  const int n_mg = mmg.as_int();          // chi_+^(-) prefactor exponent
  const int lj = (l.Lambda - l.J).as_int();       // [x-y]^(Lambda-J)
  const int a = (l.J - l.gamma).as_int();         // x^a
  const int b = (l.J + l.gamma).as_int();         // y^b
  const int n = (l.J + l.M).as_int();             // (d/dx + d/dy)^n

  SpinorPoly out;
  // prefactor^2 = (J-M)! / ((J+M)! (2J)!), with A^{Lambda J} = 1
  out.prefactor_sq = factorial_rational(static_cast<unsigned>((l.J - l.M).as_int())) /
                     (factorial_rational(static_cast<unsigned>(n)) *
                      factorial_rational(static_cast<unsigned>(l.J.twice())));
  out.source = SpinorPoly::Source::Formula;

  // (d_x + d_y)^n x^a y^b = sum_k C(n,k) a!/(a-k)! b!/(b-n+k)! x^(a-k) y^(b-n+k)
  // then substitute x = chi_+^(+) chi_-^(-), y = chi_-^(+) chi_+^(-), multiply by
  // [x-y]^(Lambda-J) expanded and by the chi prefactors.
  for (int k = std::max(0, n - b); k <= std::min(n, a); ++k) {
    mpz_class binom_nk, fall_a, fall_b;
    mpz_bin_uiui(binom_nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    // a!/(a-k)!  and  b!/(b-(n-k))!
    mpz_class fa, fak, fb, fbk;
    mpz_fac_ui(fa.get_mpz_t(), static_cast<unsigned long>(a));
    mpz_fac_ui(fak.get_mpz_t(), static_cast<unsigned long>(a - k));
    mpz_fac_ui(fb.get_mpz_t(), static_cast<unsigned long>(b));
    mpz_fac_ui(fbk.get_mpz_t(), static_cast<unsigned long>(b - (n - k)));
    Rational deriv_coeff(binom_nk * (fa / fak) * (fb / fbk));
    const int px = a - k;          // power of x after derivatives
    const int py = b - (n - k);    // power of y
    for (int j = 0; j <= lj; ++j) {
      mpz_class binom_lj;
      mpz_bin_uiui(binom_lj.get_mpz_t(), static_cast<unsigned long>(lj), static_cast<unsigned long>(j));
      Rational c = deriv_coeff * Rational(binom_lj);
      if ((j % 2) == 1) c = -c;
      // x^(px + lj - j) y^(py + j) * chi_+^(+)n_pg chi_+^(-)n_mg
      const int xx = px + lj - j, yy = py + j;
      Monomial m{xx + n_pg, yy, yy + n_mg, xx};
      out.terms[m] += ExactScalar(c);
    }
  }
  // drop exact zeros
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second.is_zero())
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

SpinorPoly lower_M(const SpinorPoly& p) {
  // J- = chi_-^(+) d/d chi_+^(+) + chi_-^(-) d/d chi_+^(-)
  SpinorPoly out;
  out.prefactor_sq = p.prefactor_sq;
  out.source = SpinorPoly::Source::Ladder;
  for (const auto& [m, c] : p.terms) {
    if (m[0] > 0) {  // chi_+^(+) -> chi_-^(+)
      Monomial t = m;
      --t[0];
      ++t[1];
      out.terms[t] += c * ExactScalar::from_int(m[0]);
    }
    if (m[2] > 0) {  // chi_+^(-) -> chi_-^(-)
      Monomial t = m;
      --t[2];
      ++t[3];
      out.terms[t] += c * ExactScalar::from_int(m[2]);
    }
  }
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second.is_zero())
      it = out.terms.erase(it);
    else
      ++it;
  }
  return out;
}

std::vector<SpinorPoly> multiplet_states(HalfInt Lambda) {
  std::vector<SpinorPoly> out;
  for (int tj = Lambda.twice(); tj >= 0; tj -= 2) {
    HalfInt J(tj);
    for (int tg = tj; tg >= -tj; tg -= 2) {
      // top state M = J is always formula-buildable; lower by ladder,
      // tracking the squared normalization exactly:
      // J-^n |J,J> has norm^2 factor n! (2J)!/(2J-n)!.
      SpinorLabel top{Lambda, J, HalfInt(tg), J};
      SpinorPoly state = build_state(top);
      const Rational top_prefactor_sq = state.prefactor_sq;
      out.push_back(state);
      Rational ladder_norm_sq(1);
      for (int n = 1; n <= tj; ++n) {
        state = lower_M(state);
        // J- coefficient squared at step n (from M = J-n+1): n * (2J - n + 1)
        ladder_norm_sq *= Rational(n) * Rational(tj - n + 1);
        state.prefactor_sq = top_prefactor_sq / ladder_norm_sq;
        out.push_back(state);
      }
    }
  }
  return out;
}

ExactMatrix gram_matrix(HalfInt Lambda) {
  if (HalfInt::from_int(3) < Lambda)
    throw std::invalid_argument("gram_matrix guarded to Lambda <= 3");
  auto states = multiplet_states(Lambda);
  std::map<Monomial, std::size_t> cols;
  for (const auto& s : states)
    for (const auto& [m, c] : s.terms)
      if (!c.is_zero()) cols.emplace(m, 0);
  std::size_t idx = 0;
  for (auto& [m, i] : cols) i = idx++;
  ExactMatrix g(states.size(), cols.size());
  for (std::size_t r = 0; r < states.size(); ++r)
    for (const auto& [m, c] : states[r].terms) g.at(r, cols[m]) = c;
  return g;
}

}  // namespace epalg
