#include "igusa/point_counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

inline u64 reduce_signed(long c, u64 m) {
  const long mm = static_cast<long>(m);
  long r = c % mm;
  if (r < 0) r += mm;
  return static_cast<u64>(r);
}

u64 ipow(u64 base, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(int n, std::vector<Term> terms) : n_(n) {
  if (n < 1) throw SchemaError("polynomial needs at least one variable");
  std::map<std::vector<int>, long> merged;
  for (auto& t : terms) {
    if (static_cast<int>(t.exps.size()) != n) {
      throw SchemaError("term exponent vector has length " + std::to_string(t.exps.size()) +
                        ", expected " + std::to_string(n));
    }
    for (int e : t.exps) {
      if (e < 0) throw SchemaError("negative exponent in polynomial term");
    }
    merged[t.exps] += t.coeff;
  }
  for (auto& [exps, c] : merged) {
    if (c != 0) terms_.push_back(Term{c, exps});
  }
}

int IntPolynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[static_cast<std::size_t>(var)]);
  return d;
}

IntPolynomial IntPolynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.exps[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Term d = t;
    d.coeff *= e;
    d.exps[static_cast<std::size_t>(var)] -= 1;
    out.push_back(std::move(d));
  }
  return IntPolynomial(n_, std::move(out));
}

u64 IntPolynomial::eval_mod(const std::vector<u64>& x, u64 m) const {
  u64 acc = 0;
  for (const auto& t : terms_) {
    u64 v = reduce_signed(t.coeff, m);
    for (int j = 0; j < n_ && v != 0; ++j) {
      const u64 xj = x[static_cast<std::size_t>(j)] % m;
      for (int e = 0; e < t.exps[static_cast<std::size_t>(j)]; ++e) v = mulmod(v, xj, m);
    }
    acc = (acc + v) % m;
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += (t.coeff < 0) ? " - " : " + ";
    else if (t.coeff < 0) out += "-";
    const long mag = std::labs(t.coeff);
    std::string mono;
    for (int j = 0; j < n_; ++j) {
      const int e = t.exps[static_cast<std::size_t>(j)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j + 1) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    if (mono.empty()) out += std::to_string(mag);
    else if (mag == 1) out += mono;
    else out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

namespace {

// Enumerates coordinates x_j = step * i_j (i_j < range) and counts zeros of f
// mod m. The last variable is handled by Horner's rule on a coefficient vector
// specialised to the leading coordinates.
class NaiveCounter {
 public:
  NaiveCounter(const IntPolynomial& f, u64 m, u64 range, u64 step)
      : f_(f), n_(f.nvars()), m_(m), range_(range), step_(step % m),
        last_deg_(f.degree_in(f.nvars() - 1)) {}

  // Counts points whose first coordinate index lies in [lo, hi) (n >= 2), or
  // whose only coordinate index lies in [lo, hi) (n == 1).
  u64 count(u64 lo, u64 hi) const {
    std::vector<u64> coef(static_cast<std::size_t>(last_deg_) + 1);
    if (n_ == 1) {
      specialise({}, coef);
      return count_last(coef, lo, hi);
    }
    std::vector<u64> idx(static_cast<std::size_t>(n_ - 1), 0);
    std::vector<u64> lead(static_cast<std::size_t>(n_ - 1), 0);
    u64 total = 0;
    for (u64 first = lo; first < hi; ++first) {
      idx[0] = first;
      std::fill(idx.begin() + 1, idx.end(), 0);
      do {
        for (std::size_t j = 0; j < lead.size(); ++j) lead[j] = mulmod(idx[j], step_, m_);
        specialise(lead, coef);
        total += count_last(coef, 0, range_);
      } while (advance(idx));
    }
    return total;
  }

 private:
  // Mixed-radix increment of coordinates 2 .. n-1; false after wrapping around.
  bool advance(std::vector<u64>& idx) const {
    for (std::size_t j = idx.size(); j-- > 1;) {
      if (++idx[j] < range_) return true;
      idx[j] = 0;
    }
    return false;
  }

  void specialise(const std::vector<u64>& lead, std::vector<u64>& coef) const {
    std::fill(coef.begin(), coef.end(), 0);
    for (const auto& t : f_.terms()) {
      u64 v = reduce_signed(t.coeff, m_);
      for (std::size_t j = 0; j < lead.size() && v != 0; ++j) {
        for (int e = 0; e < t.exps[j]; ++e) v = mulmod(v, lead[j], m_);
      }
      auto& slot = coef[static_cast<std::size_t>(t.exps.back())];
      slot = (slot + v) % m_;
    }
  }

  u64 count_last(const std::vector<u64>& coef, u64 lo, u64 hi) const {
    u64 zeros = 0;
    if (m_ < (u64{1} << 32)) {
      for (u64 i = lo; i < hi; ++i) {
        const u64 x = (i * step_) % m_;
        u64 acc = coef.back();
        for (int d = last_deg_ - 1; d >= 0; --d) acc = (acc * x + coef[static_cast<std::size_t>(d)]) % m_;
        zeros += (acc == 0);
      }
    } else {
      for (u64 i = lo; i < hi; ++i) {
        const u64 x = mulmod(i, step_, m_);
        u64 acc = coef.back();
        for (int d = last_deg_ - 1; d >= 0; --d) {
          acc = (mulmod(acc, x, m_) + coef[static_cast<std::size_t>(d)]) % m_;
        }
        zeros += (acc == 0);
      }
    }
    return zeros;
  }

  const IntPolynomial& f_;
  int n_;
  u64 m_;
  u64 range_;
  u64 step_;
  int last_deg_;
};

}  // namespace

Integer count_zeros_naive(const IntPolynomial& f, long p, int k, Domain domain, const CountOptions& opts) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("k must be >= 1");
  const int n = f.nvars();
  const int range_exp = (domain == Domain::full) ? k : k - 1;
  const double required = std::pow(static_cast<double>(p), static_cast<double>(range_exp) * n);
  if (required > opts.guard) {
    throw GuardExceeded("naive enumeration needs " + std::to_string(static_cast<long long>(required)) +
                            " evaluations, guard is " + std::to_string(static_cast<long long>(opts.guard)),
                        required);
  }
  if (std::pow(static_cast<double>(p), k) >= 9.2e18) throw DomainError("modulus p^k too large");
  const u64 m = ipow(static_cast<u64>(p), k);
  const u64 range = ipow(static_cast<u64>(p), range_exp);
  const u64 step = (domain == Domain::full) ? 1 : static_cast<u64>(p);
  if (f.is_zero()) {
    Integer all;
    mpz_ui_pow_ui(all.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(range_exp * n));
    return all;
  }

  NaiveCounter counter(f, m, range, step);
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, range));
  if (threads <= 1 || required < 1e5) return Integer(static_cast<unsigned long>(counter.count(0, range)));

  // Partition by the residue of the leading coordinate; partial counts add up.
  std::vector<u64> partial(threads, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const u64 lo = range * t / threads;
      const u64 hi = range * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] { partial[t] = counter.count(lo, hi); });
    }
  }
  u64 total = 0;
  for (u64 c : partial) total += c;
  return Integer(static_cast<unsigned long>(total));
}

CountProfile count_zeros_hensel(const IntPolynomial& f, long p, int k_max, Domain domain) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  const int n = f.nvars();
  if (std::pow(static_cast<double>(p), k_max) >= 9.2e18) throw DomainError("modulus p^k_max too large");

  CountProfile prof;
  prof.p = p;
  prof.k_max = k_max;
  prof.domain = domain;
  prof.counts.assign(static_cast<std::size_t>(k_max), Integer(0));

  if (f.is_zero()) {
    // every point is a zero
    for (int k = 1; k <= k_max; ++k) {
      Integer c;
      const int range_exp = (domain == Domain::full) ? k : k - 1;
      mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(range_exp * n));
      prof.counts[static_cast<std::size_t>(k - 1)] = c;
    }
    return prof;
  }

  std::vector<IntPolynomial> grad;
  for (int j = 0; j < n; ++j) grad.push_back(f.derivative(j));
  const u64 up = static_cast<u64>(p);

  // Level 1.
  std::vector<std::vector<u64>> frontier;
  u64 smooth = 0;
  {
    std::vector<std::vector<u64>> level1;
    if (domain == Domain::full) {
      std::vector<u64> x(static_cast<std::size_t>(n), 0);
      while (true) {
        level1.push_back(x);
        int j = n - 1;
        while (j >= 0 && ++x[static_cast<std::size_t>(j)] == up) x[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) break;
      }
    } else {
      level1.emplace_back(static_cast<std::size_t>(n), 0);
    }
    for (auto& x : level1) {
      if (f.eval_mod(x, up) != 0) continue;
      bool is_smooth = false;
      for (const auto& g : grad) {
        if (g.eval_mod(x, up) != 0) {
          is_smooth = true;
          break;
        }
      }
      if (is_smooth) ++smooth;
      else frontier.push_back(std::move(x));
    }
  }
  prof.tree_width = frontier.size();

  Integer smooth_part(static_cast<unsigned long>(smooth));
  Integer lift_factor;
  mpz_ui_pow_ui(lift_factor.get_mpz_t(), up, static_cast<unsigned long>(n - 1));

  u64 modulus = up;  // p^k for the current level k
  for (int k = 1; k <= k_max; ++k) {
    prof.counts[static_cast<std::size_t>(k - 1)] = smooth_part + Integer(static_cast<unsigned long>(frontier.size()));
    if (k == k_max) break;
    smooth_part *= lift_factor;
    const u64 next = modulus * up;
    std::vector<std::vector<u64>> children;
    std::vector<u64> d(static_cast<std::size_t>(n), 0);
    std::vector<u64> y(static_cast<std::size_t>(n));
    for (const auto& x : frontier) {
      std::fill(d.begin(), d.end(), 0);
      while (true) {
        for (int j = 0; j < n; ++j) {
          y[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] + modulus * d[static_cast<std::size_t>(j)];
        }
        if (f.eval_mod(y, next) == 0) children.push_back(y);
        int j = n - 1;
        while (j >= 0 && ++d[static_cast<std::size_t>(j)] == up) d[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) break;
      }
    }
    frontier = std::move(children);
    prof.tree_width = std::max<u64>(prof.tree_width, frontier.size());
    modulus = next;
  }
  return prof;
}

namespace {

// c0 - (1 - t) sum_k N_k w^k t^(k-1) with w = p^-n, expanded to order k_max - 1.
TruncatedSeries assemble_count_series(const Rational& leading, const std::vector<Integer>& counts,
                                      long q, int n) {
  const int k_max = static_cast<int>(counts.size());
  if (k_max < 1) throw DomainError("need at least one count");
  std::vector<Rational> term(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    term[static_cast<std::size_t>(k - 1)] = Rational(counts[static_cast<std::size_t>(k - 1)]) * q_pow(q, -static_cast<long>(k) * n);
  }
  std::vector<Rational> c(static_cast<std::size_t>(k_max));
  c[0] = leading - term[0];
  for (int j = 1; j < k_max; ++j) {
    c[static_cast<std::size_t>(j)] = term[static_cast<std::size_t>(j - 1)] - term[static_cast<std::size_t>(j)];
  }
  return TruncatedSeries(ZetaVariable{1}, 0, std::move(c));
}

}  // namespace

TruncatedSeries local_zeta_series(const CountProfile& profile, int nvars) {
  if (profile.domain != Domain::full) throw DomainError("local zeta series needs full-domain counts");
  return assemble_count_series(Rational(1), profile.counts, profile.p, nvars);
}

TruncatedSeries local_zeta_series(const IntPolynomial& f, long p, int k_max) {
  return local_zeta_series(count_zeros_hensel(f, p, k_max, Domain::full), f.nvars());
}

std::vector<Integer> global_counts(const GlobalPointModel& model, int k_max) {
  if (model.params.f() != 1) throw DomainError("point counting supports f = 1 only");
  std::vector<Integer> total(static_cast<std::size_t>(k_max), Integer(0));
  for (const auto& fiber : model.fibers) {
    if (fiber.poly.nvars() != model.n) {
      throw SchemaError("fiber '" + fiber.label + "' has " + std::to_string(fiber.poly.nvars()) +
                        " variables, model dimension is " + std::to_string(model.n));
    }
    const CountProfile prof = count_zeros_hensel(fiber.poly, model.params.p(), k_max, Domain::shifted);
    for (int k = 0; k < k_max; ++k) total[static_cast<std::size_t>(k)] += prof.counts[static_cast<std::size_t>(k)];
  }
  return total;
}

TruncatedSeries global_norm_series(const GlobalPointModel& model, const std::vector<Integer>& counts) {
  const long q = model.params.q();
  const Rational lead = Rational(model.residue_count()) * q_pow(q, -model.n);
  return assemble_count_series(lead, counts, q, model.n);
}

TruncatedSeries global_norm_series(const GlobalPointModel& model, int k_max) {
  return global_norm_series(model, global_counts(model, k_max));
}

Rational global_norm_partial_form(const GlobalPointModel& model, const std::vector<Integer>& counts,
                                  const Rational& t0) {
  const long q = model.params.q();
  Rational sum = 0;
  for (std::size_t k = 1; k <= counts.size(); ++k) {
    sum += Rational(counts[k - 1]) * q_pow(q, -static_cast<long>(k) * model.n) * rational_pow(t0, static_cast<long>(k) - 1);
  }
  return Rational(model.residue_count()) * q_pow(q, -model.n) - (1 - t0) * sum;
}

NormLimits norm_limits(const GlobalPointModel& model) {
  const long q = model.params.q();
  const Rational scale = q_pow(q, -model.n);
  Integer n1 = 0;
  if (!model.fibers.empty()) n1 = global_counts(model, 1).front();
  return NormLimits{Rational(model.residue_count()) * scale,
                    Rational(Integer(model.residue_count()) - n1) * scale};
}

}  // namespace igusa
