#include "cxb/cyclo.hpp"

#include <gmpxx.h>

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace cxb {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
  std::vector<long long> q(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    long long c = num[k + dd] / den[dd];
    q[k] = c;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  for (long long v : num)
    if (v != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

std::vector<long long> minimal_polynomial(int level) {
  if (level < 1) throw std::invalid_argument("minimal_polynomial: level >= 1");
  if (level == 1) return {2, 1};  // 2cos(pi) = -2
  // Phi_{2L} is palindromic of even degree 2e; with T_k the rescaled
  // Chebyshev basis (x^k + x^-k = T_k(x + 1/x)) the minimal polynomial of
  // theta = zeta_{2L} + zeta_{2L}^{-1} is  c_e + sum_{k>=1} c_{e+k} T_k.
  std::vector<long long> phi = cyclotomic_polynomial(2 * level);
  int e = ((int)phi.size() - 1) / 2;
  std::vector<long long> acc(e + 1, 0);
  acc[0] = phi[e];
  std::vector<long long> tprev = {2};      // T_0
  std::vector<long long> tcur = {0, 1};    // T_1
  for (int k = 1; k <= e; ++k) {
    for (size_t i = 0; i < tcur.size(); ++i) acc[i] += phi[e + k] * tcur[i];
    if (k == e) break;
    // T_{k+1} = x*T_k - T_{k-1}
    std::vector<long long> tnext(k + 2, 0);
    for (size_t i = 0; i < tcur.size(); ++i) tnext[i + 1] += tcur[i];
    for (size_t i = 0; i < tprev.size(); ++i) tnext[i] -= tprev[i];
    tprev = std::move(tcur);
    tcur = std::move(tnext);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Enclosure: rational interval around theta_L, bisected on demand.

struct CycloLevel::Enclosure {
  std::mutex mu;
  mpq_class lo, hi;
  // doubles read lock-free on the fast path; stale values are just wider
  std::atomic<double> dlo{0}, dhi{0};

  static int mp_sign_at(const std::vector<long long>& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) acc = acc * x + (long)p[i];
    return sgn(acc);
  }

  void refine(const std::vector<long long>& p) {
    // invariant: p(lo) < 0 < p(hi), theta the only root in [lo, hi]
    mpq_class mid = (lo + hi) / 2;
    int s = mp_sign_at(p, mid);
    if (s == 0) {  // mid hit the root exactly: shrink both sides around it
      mpq_class w = (hi - lo) / 4;
      lo = mid - w;
      hi = mid + w;
    } else if (s < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    dlo = std::nextafter(lo.get_d(), -1e30);
    dhi = std::nextafter(hi.get_d(), 1e30);
  }
};

CycloLevel::CycloLevel(int level) : level_(level) {
  mu_ = minimal_polynomial(level);
  degree_ = (int)mu_.size() - 1;
  // power reduction table x^(deg+k) mod mu
  CoeffVec cur(degree_);
  for (int i = 0; i < degree_; ++i) cur[i] = Rational(-mu_[i]);  // x^deg mod mu
  xpow_.push_back(cur);
  for (int k = 1; k + 1 < degree_; ++k) {
    CoeffVec nxt(degree_);
    Rational top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
    nxt[0] = Rational(0);
    if (!top.is_zero())
      for (int i = 0; i < degree_; ++i) nxt[i] += top * Rational(-mu_[i]);
    xpow_.push_back(nxt);
    cur = std::move(nxt);
  }

  // initial enclosure of theta = 2cos(pi/L): largest root of mu, simple.
  // Propose endpoints from the double value, then certify exactly.
  enc_ = std::make_unique<Enclosure>();
  double th = 2.0 * std::cos(M_PI / level);
  enc_->hi = 2;
  long long denom = 1LL << 40;
  for (double slack = 1e-9;; slack *= 16) {
    double cand = th - slack;
    mpq_class lo((long)std::floor(cand * (double)denom), (long)denom);
    lo.canonicalize();
    if (Enclosure::mp_sign_at(mu_, lo) < 0) {
      enc_->lo = lo;
      break;
    }
    if (slack > 1.0) throw std::logic_error("CycloLevel: enclosure setup failed");
  }
  enc_->dlo = std::nextafter(enc_->lo.get_d(), -1e30);
  enc_->dhi = 2.0;
}

CycloLevel::~CycloLevel() = default;

const CycloLevel* CycloLevel::get(int level) {
  static std::mutex reg_mu;
  static std::map<int, std::unique_ptr<CycloLevel>> registry;
  std::lock_guard<std::mutex> lk(reg_mu);
  auto& slot = registry[level];
  if (!slot) slot.reset(new CycloLevel(level));
  return slot.get();
}

CoeffVec CycloLevel::reduce(CoeffVec p) const {
  CoeffVec out(degree_);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if ((int)i < degree_) {
      out[i] += p[i];
    } else {
      const auto& row = xpow_[i - degree_];
      for (int j = 0; j < degree_; ++j) out[j] += p[i] * row[j];
    }
  }
  return out;
}

CoeffVec CycloLevel::embed_weight(int m) const {
  if (m == 2) return CoeffVec(degree_);
  CoeffVec one(degree_);
  one[0] = Rational(1);
  if (m == 3) return one;
  if (m == level_) {
    CoeffVec th(degree_);
    if (degree_ == 1) {
      // theta lies in Q: mu = x - c
      th[0] = Rational(-mu_[0]);
    } else {
      th[1] = Rational(1);
    }
    return th;
  }
  if (level_ % m != 0)
    throw std::invalid_argument("embed_weight: weight does not divide level");
  // 2cos(pi/m) = T_{L/m}(theta_L)
  int k = level_ / m;
  CoeffVec tprev = {Rational(2)};
  CoeffVec tcur = {Rational(0), Rational(1)};
  for (int i = 1; i < k; ++i) {
    CoeffVec tnext(i + 2);
    for (size_t j = 0; j < tcur.size(); ++j) tnext[j + 1] += tcur[j];
    for (size_t j = 0; j < tprev.size(); ++j) tnext[j] -= tprev[j];
    tprev = std::move(tcur);
    tcur = std::move(tnext);
  }
  return reduce(std::move(tcur));
}

int CycloLevel::sign(const CoeffVec& coeffs) const {
  bool zero = true;
  for (const auto& c : coeffs)
    if (!c.is_zero()) { zero = false; break; }
  if (zero) return 0;
  if (degree_ == 1 || [&] {
        for (size_t i = 1; i < coeffs.size(); ++i)
          if (!coeffs[i].is_zero()) return false;
        return true;
      }())
    return coeffs[0].sign();

  // fast path: outward-rounded double interval Horner
  auto up = [](double x) { return std::nextafter(x, 1e300); };
  auto dn = [](double x) { return std::nextafter(x, -1e300); };
  {
    double tlo = enc_->dlo, thi = enc_->dhi;
    double lo = 0, hi = 0;
    for (int i = degree_ - 1; i >= 0; --i) {
      double cands[4] = {lo * tlo, lo * thi, hi * tlo, hi * thi};
      double nlo = cands[0], nhi = cands[0];
      for (double v : cands) { nlo = std::min(nlo, v); nhi = std::max(nhi, v); }
      double c = (double)coeffs[i].num() / (double)coeffs[i].den();
      lo = dn(dn(nlo) + dn(c));
      hi = up(up(nhi) + up(c));
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }

  // exact fallback: rational interval Horner with bisection refinement
  std::lock_guard<std::mutex> lk(enc_->mu);
  for (int round = 0; round < 4096; ++round) {
    mpq_class lo = 0, hi = 0;
    for (int i = degree_ - 1; i >= 0; --i) {
      mpq_class a = lo * enc_->lo, b = lo * enc_->hi, c = hi * enc_->lo,
                d = hi * enc_->hi;
      mpq_class nlo = std::min(std::min(a, b), std::min(c, d));
      mpq_class nhi = std::max(std::max(a, b), std::max(c, d));
      mpq_class cf((long)coeffs[i].num(), (long)coeffs[i].den());
      lo = nlo + cf;
      hi = nhi + cf;
    }
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    enc_->refine(mu_);
  }
  throw std::logic_error("CycloLevel::sign: refinement did not converge");
}

// ---------------------------------------------------------------------------

CycloReal::CycloReal(const CycloLevel* lvl, CoeffVec coeffs)
    : lvl_(lvl), c_(std::move(coeffs)) {
  if ((int)c_.size() != lvl->degree()) c_ = lvl->reduce(std::move(c_));
}

CycloReal CycloReal::from_rational(const CycloLevel* lvl, const Rational& r) {
  CycloReal x(lvl);
  x.c_[0] = r;
  return x;
}

CycloReal CycloReal::theta(const CycloLevel* lvl) {
  return CycloReal(lvl, lvl->embed_weight(lvl->level()));
}

CycloReal CycloReal::weight(const CycloLevel* lvl, int m) {
  return CycloReal(lvl, lvl->embed_weight(m));
}

bool CycloReal::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloReal::is_one() const {
  if (!lvl_) return false;
  if (c_[0] != Rational(1)) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

int CycloReal::sign() const {
  if (!lvl_) return 0;
  return lvl_->sign(c_);
}

double CycloReal::approx() const {
  if (!lvl_) return 0.0;
  double th = 2.0 * std::cos(M_PI / lvl_->level());
  double acc = 0;
  for (int i = (int)c_.size() - 1; i >= 0; --i)
    acc = acc * th + (double)c_[i].num() / (double)c_[i].den();
  return acc;
}

const CycloLevel* CycloReal::common_level(const CycloReal& a, const CycloReal& b) {
  if (a.lvl_ && b.lvl_ && a.lvl_ != b.lvl_)
    throw std::invalid_argument("CycloReal: level mismatch");
  return a.lvl_ ? a.lvl_ : b.lvl_;
}

CycloReal operator+(const CycloReal& a, const CycloReal& b) {
  const CycloLevel* lvl = CycloReal::common_level(a, b);
  if (!lvl) return CycloReal();
  CycloReal out(lvl);
  for (int i = 0; i < lvl->degree(); ++i) {
    if (a.lvl_) out.c_[i] += a.c_[i];
    if (b.lvl_) out.c_[i] += b.c_[i];
  }
  return out;
}

CycloReal operator-(const CycloReal& a, const CycloReal& b) {
  return a + (-b);
}

CycloReal& CycloReal::operator+=(const CycloReal& o) {
  if (!o.lvl_) return *this;
  if (!lvl_) return *this = o;
  if (lvl_ != o.lvl_) throw std::invalid_argument("CycloReal: level mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloReal& CycloReal::operator-=(const CycloReal& o) {
  if (!o.lvl_) return *this;
  if (!lvl_) return *this = -o;
  if (lvl_ != o.lvl_) throw std::invalid_argument("CycloReal: level mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

void CycloReal::addmul(const CycloReal& a, const CycloReal& b) {
  if (!a.lvl_ || !b.lvl_) return;
  const CycloLevel* lvl = common_level(a, b);
  if (lvl_ && lvl_ != lvl) throw std::invalid_argument("CycloReal: level mismatch");
  int d = lvl->degree();
  if (!lvl_) {
    lvl_ = lvl;
    c_.assign(d, Rational());
  }
  if (d == 1) {
    c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  if (d > 16) {  // no fixed buffer for very large fields
    *this += a * b;
    return;
  }
  Rational prod[31];
  int pd = 2 * d - 1;
  for (int i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const auto& mu = lvl->min_poly();
  // fold high powers down using x^(d+k) = xpow rows; do it by repeated
  // x^d = -mu rewriting from the top
  for (int k = pd - 1; k >= d; --k) {
    if (prod[k].is_zero()) continue;
    Rational top = prod[k];
    prod[k] = Rational();
    for (int i = 0; i < d; ++i)
      if (mu[i] != 0) prod[k - d + i] -= top * Rational(mu[i]);
  }
  for (int i = 0; i < d; ++i) c_[i] += prod[i];
}

CycloReal CycloReal::operator-() const {
  CycloReal out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

CycloReal operator*(const CycloReal& a, const CycloReal& b) {
  const CycloLevel* lvl = CycloReal::common_level(a, b);
  if (!lvl || !a.lvl_ || !b.lvl_) return CycloReal();
  int d = lvl->degree();
  CoeffVec prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return CycloReal(lvl, lvl->reduce(std::move(prod)));
}

bool operator==(const CycloReal& a, const CycloReal& b) {
  if (!a.lvl_ || !b.lvl_) {
    const CycloReal& x = a.lvl_ ? a : b;
    return x.is_zero();
  }
  if (a.lvl_ != b.lvl_) return false;
  return a.c_ == b.c_;
}

size_t CycloReal::hash() const {
  if (is_zero()) return 0x9e3779b97f4a7c15ull;  // null-level and reduced zeros agree
  size_t h = 1469598103934665603ull;
  for (const auto& c : c_) {
    h = (h ^ c.hash()) * 1099511628211ull;
  }
  return h;
}

std::string CycloReal::str() const {
  if (!lvl_ || is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i].str();
    if (i >= 1) os << "*t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace cxb
