#include "kpareto/construction.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace kpareto {

namespace {

constexpr double kFixedPointTolerance = 1e-9;
constexpr int kBisectIterations = 200;

std::int64_t clamp_floor(double value, std::int64_t lo, std::int64_t hi) {
  const double floored = std::floor(value);
  if (floored <= static_cast<double>(lo)) {
    return lo;
  }
  if (floored >= static_cast<double>(hi)) {
    return hi;
  }
  return static_cast<std::int64_t>(floored);
}

Rational pow2(std::int64_t exponent) {
  return Rational(BigInt(1) << exponent);
}

/// Bisects a strictly decreasing gap function to its unique root in
/// (domain_low, inf). The monotonicity the construction relies on is spot
/// checked on the bracket before solving.
double bisect_fixed_point(double domain_low, const std::function<double(double)>& gap,
                          const char* what) {
  double lo = domain_low + 0x1.0p-20;
  double hi = std::max(2.0 * lo, lo + 1.0);
  int expand = 0;
  while (gap(hi) > 0.0) {
    hi *= 2.0;
    if (++expand > kBisectIterations || !std::isfinite(hi)) {
      throw std::runtime_error(std::string(what) + ": bracket failure");
    }
  }
  if (!(gap(lo) > 0.0)) {
    throw std::runtime_error(std::string(what) + ": bracket failure");
  }

  const int probes = 32;
  double previous = std::numeric_limits<double>::infinity();
  for (int t = 0; t <= probes; ++t) {
    const double x = lo * std::pow(hi / lo, static_cast<double>(t) / probes);
    const double g = gap(x);
    if (g > previous + 1e-9 + 1e-12 * std::fabs(previous)) {
      throw std::runtime_error(std::string(what) + ": gap function not decreasing on bracket");
    }
    previous = g;
  }

  for (int it = 0; it < kBisectIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;  // interval collapsed to adjacent doubles
    }
    if (gap(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  if (std::fabs(gap(root)) >= kFixedPointTolerance) {
    throw std::runtime_error(std::string(what) + ": fixed-point residual too large");
  }
  return root;
}

}  // namespace

const char* family_name(Family family) {
  switch (family) {
    case Family::baseline:
      return "baseline";
    case Family::bicriteria:
      return "bicriteria";
    case Family::multicriteria:
      return "multicriteria";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "baseline" || name == "base") {
    return Family::baseline;
  }
  if (name == "bicriteria" || name == "bi") {
    return Family::bicriteria;
  }
  if (name == "multicriteria" || name == "multi") {
    return Family::multicriteria;
  }
  throw std::invalid_argument("unknown family: '" + std::string(name) + "'");
}

const char* regime_name(Regime regime) {
  return regime == Regime::poly ? "poly" : "exponential";
}

Regime parse_regime(std::string_view name) {
  if (name == "poly") {
    return Regime::poly;
  }
  if (name == "exponential") {
    return Regime::exponential;
  }
  throw std::invalid_argument("unknown regime: '" + std::string(name) + "'");
}

KnapsackInstance build_uniform_baseline(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("baseline requires n >= 1");
  }
  KnapsackInstance instance;
  instance.d = 1;
  instance.phi = 1;
  instance.groups.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    Group group;
    group.objects.push_back(KnapsackObject{pow2(i), ProfitBox::cube(1, 0, 1), std::nullopt});
    group.choices = {Choice{0}, Choice{1}};
    instance.groups.push_back(std::move(group));
  }
  return instance;
}

std::vector<Rational> m_sequence_bi(std::int64_t n_p, const Rational& phi, std::int64_t n_q) {
  if (phi <= 1) {
    throw std::invalid_argument("m_sequence_bi requires phi > 1");
  }
  if (n_p < 1 || n_q < 1) {
    throw std::invalid_argument("m_sequence_bi requires n_p >= 1 and n_q >= 1");
  }
  const Rational ratio = (2 * phi - 1) / (phi - 1);
  std::vector<Rational> m;
  m.reserve(static_cast<std::size_t>(n_q));
  Rational current = Rational(n_p + 1) / (phi - 1);
  for (std::int64_t i = 1; i <= n_q; ++i) {
    m.push_back(current);
    current *= ratio;
  }
  return m;
}

std::vector<Rational> m_sequence_multi(int d, const Rational& phi, std::int64_t n_q) {
  if (d < 2) {
    throw std::invalid_argument("m_sequence_multi requires d >= 2");
  }
  if (phi <= d) {
    throw std::invalid_argument("m_sequence_multi requires phi > d");
  }
  if (n_q < 1) {
    throw std::invalid_argument("m_sequence_multi requires n_q >= 1");
  }
  std::vector<Rational> m;
  m.reserve(static_cast<std::size_t>(n_q));
  Rational running = 0;  // sum over l < i of m_l (phi + d) + d, with m_0 = 0
  for (std::int64_t i = 1; i <= n_q; ++i) {
    running += (i == 1 ? Rational(0) : m.back()) * (phi + d) + d;
    m.push_back(running / (phi - d));
  }
  return m;
}

std::vector<Rational> m_sequence_multi_explicit(int d, const Rational& phi, std::int64_t n_q) {
  if (d < 2) {
    throw std::invalid_argument("m_sequence_multi_explicit requires d >= 2");
  }
  if (phi <= d) {
    throw std::invalid_argument("m_sequence_multi_explicit requires phi > d");
  }
  const Rational rho = 2 * phi / (phi - d);
  const Rational scale = Rational(d) / (phi + d);
  std::vector<Rational> m;
  m.reserve(static_cast<std::size_t>(n_q));
  Rational power = 1;
  for (std::int64_t i = 1; i <= n_q; ++i) {
    power *= rho;
    m.push_back(scale * (power - 1));
  }
  return m;
}

double solve_phi_prime_bi(std::int64_t n) {
  if (n < 4) {
    throw std::invalid_argument("solve_phi_prime_bi requires n >= 4");
  }
  const double exponent = static_cast<double>(n - 1) / 3.0;
  const auto gap = [exponent](double x) {
    return std::pow((2.0 * x - 1.0) / (x - 1.0), exponent) - x;
  };
  return bisect_fixed_point(1.0, gap, "solve_phi_prime_bi");
}

double solve_phi_prime_multi(std::int64_t n, int d) {
  if (d < 2) {
    throw std::invalid_argument("solve_phi_prime_multi requires d >= 2");
  }
  if (n < 16 * static_cast<std::int64_t>(d)) {
    throw std::invalid_argument("solve_phi_prime_multi requires n >= 16 d");
  }
  const double exponent = static_cast<double>(n) / (2.0 * d);
  const double scale = 4.0 * d * d / static_cast<double>(n);
  const double dd = d;
  const auto gap = [exponent, scale, dd](double x) {
    return scale * std::pow(2.0 * x / (x - dd), exponent) - (x - dd);
  };
  return bisect_fixed_point(dd, gap, "solve_phi_prime_multi");
}

ConstructionPlan plan_baseline(std::int64_t n) {
  if (n < 1) {
    throw std::invalid_argument("baseline planner requires n >= 1");
  }
  ConstructionPlan plan;
  plan.kind = Family::baseline;
  plan.n = n;
  plan.d = 1;
  plan.phi_input = 1;
  plan.regime = Regime::poly;
  plan.phi_eff = 1;
  plan.n_p = n;
  plan.n_q = 0;
  plan.n_hat_p = static_cast<double>(n);
  plan.n_hat_q = 0.0;
  plan.d_hat = 1;
  plan.objects_built = n;
  return plan;
}

ConstructionPlan plan_bicriteria(std::int64_t n, const Rational& phi) {
  if (n < 4) {
    throw std::invalid_argument("bicriteria planner requires n >= 4");
  }
  // phi >= (3+sqrt(5))/2, tested exactly: phi >= 2 and phi^2 - 3 phi + 1 >= 0.
  if (!(phi >= 2 && phi * phi - 3 * phi + 1 >= 0)) {
    throw std::invalid_argument("bicriteria planner requires phi >= (3+sqrt(5))/2");
  }

  ConstructionPlan plan;
  plan.kind = Family::bicriteria;
  plan.n = n;
  plan.d = 1;
  plan.phi_input = phi;
  plan.d_hat = 1;

  const Rational ratio = (2 * phi - 1) / (phi - 1);
  const bool poly =
      rational_pow(phi, 3) <= rational_pow(ratio, static_cast<unsigned>(n - 1));
  if (poly) {
    plan.regime = Regime::poly;
    plan.phi_eff = phi;
    plan.n_hat_q = std::log(to_double(phi)) / std::log(to_double(ratio));
    plan.n_q = clamp_floor(plan.n_hat_q, 1, (n - 1) / 3);
    plan.n_hat_p = (static_cast<double>(n - 1) - plan.n_hat_q) / 2.0;
    plan.n_p = clamp_floor(plan.n_hat_p, 1, n);
  } else {
    plan.regime = Regime::exponential;
    plan.phi_eff = rational_from_double(solve_phi_prime_bi(n));
    plan.n_hat_q = static_cast<double>(n - 1) / 3.0;  // log phi'/log ratio(phi') exactly
    plan.n_q = (n - 1) / 3;
    plan.n_hat_p = (static_cast<double>(n - 1) - plan.n_hat_q) / 2.0;
    plan.n_p = (n - 1) / 3;
  }

  plan.m = m_sequence_bi(plan.n_p, plan.phi_eff, plan.n_q);
  std::int64_t split_objects = 0;
  for (const Rational& mi : plan.m) {
    plan.k.push_back(checked_int64(rational_ceil(mi), "k_i"));
    split_objects += plan.k.back();
  }
  plan.objects_built = plan.n_p + split_objects;
  if (plan.objects_built > n) {
    throw std::runtime_error("bicriteria construction exceeded its object budget");
  }
  return plan;
}

ConstructionPlan plan_multicriteria(std::int64_t n, int d, const Rational& phi) {
  if (d < 2) {
    throw std::invalid_argument("multicriteria planner requires d >= 2");
  }
  if (n < 16 * static_cast<std::int64_t>(d)) {
    throw std::invalid_argument("multicriteria planner requires n >= 16 d");
  }
  if (phi < 2 * d) {
    throw std::invalid_argument("multicriteria planner requires phi >= 2 d");
  }

  ConstructionPlan plan;
  plan.kind = Family::multicriteria;
  plan.n = n;
  plan.d = d;
  plan.phi_input = phi;
  plan.d_hat = (d + 1) / 2;

  const Rational rho = 2 * phi / (phi - d);
  // phi - d <= (4 d^2 / n) rho^(n/(2d)), raised to the 2d-th power.
  const bool poly =
      rational_pow(phi - d, static_cast<unsigned>(2 * d)) <=
      rational_pow(Rational(4 * static_cast<std::int64_t>(d) * d, n),
                   static_cast<unsigned>(2 * d)) *
          rational_pow(rho, static_cast<unsigned>(n));
  const std::int64_t nq_max = n / (2 * static_cast<std::int64_t>(d));
  if (poly) {
    plan.regime = Regime::poly;
    plan.phi_eff = phi;
    plan.n_hat_q =
        std::log(to_double((phi - d) * n / (4 * static_cast<std::int64_t>(d) * d))) /
        std::log(to_double(rho));
    plan.n_q = clamp_floor(plan.n_hat_q, 1, nq_max);
  } else {
    plan.regime = Regime::exponential;
    plan.phi_eff = rational_from_double(solve_phi_prime_multi(n, d));
    plan.n_hat_q = static_cast<double>(n) / (2.0 * d);
    plan.n_q = nq_max;
  }

  plan.m = m_sequence_multi(d, plan.phi_eff, plan.n_q);
  std::int64_t split_objects = 0;
  for (const Rational& mi : plan.m) {
    plan.k.push_back(checked_int64(rational_ceil(mi), "k_i"));
    split_objects += plan.k.back();
  }
  plan.objects_built = static_cast<std::int64_t>(d) * split_objects;
  if (plan.objects_built > n) {
    throw std::runtime_error("multicriteria construction exceeded its object budget");
  }
  return plan;
}

ConstructionPlan bicriteria_plan_for(std::int64_t n_p, const Rational& phi, std::int64_t n_q) {
  if (n_p < 1 || n_q < 1) {
    throw std::invalid_argument("bicriteria_plan_for requires n_p >= 1 and n_q >= 1");
  }
  if (phi <= 1) {
    throw std::invalid_argument("bicriteria_plan_for requires phi > 1");
  }
  ConstructionPlan plan;
  plan.kind = Family::bicriteria;
  plan.d = 1;
  plan.phi_input = phi;
  plan.regime = Regime::poly;
  plan.phi_eff = phi;
  plan.n_p = n_p;
  plan.n_q = n_q;
  plan.n_hat_p = static_cast<double>(n_p);
  plan.n_hat_q = static_cast<double>(n_q);
  plan.d_hat = 1;
  plan.m = m_sequence_bi(n_p, phi, n_q);
  std::int64_t split_objects = 0;
  for (const Rational& mi : plan.m) {
    plan.k.push_back(checked_int64(rational_ceil(mi), "k_i"));
    split_objects += plan.k.back();
  }
  plan.objects_built = n_p + split_objects;
  plan.n = plan.objects_built;
  return plan;
}

ConstructionPlan multicriteria_plan_for(int d, const Rational& phi, std::int64_t n_q) {
  if (d < 2) {
    throw std::invalid_argument("multicriteria_plan_for requires d >= 2");
  }
  if (phi <= d) {
    throw std::invalid_argument("multicriteria_plan_for requires phi > d");
  }
  if (n_q < 1) {
    throw std::invalid_argument("multicriteria_plan_for requires n_q >= 1");
  }
  ConstructionPlan plan;
  plan.kind = Family::multicriteria;
  plan.d = d;
  plan.phi_input = phi;
  plan.regime = Regime::poly;
  plan.phi_eff = phi;
  plan.n_p = 0;
  plan.n_q = n_q;
  plan.n_hat_p = 0.0;
  plan.n_hat_q = static_cast<double>(n_q);
  plan.d_hat = (d + 1) / 2;
  plan.m = m_sequence_multi(d, phi, n_q);
  std::int64_t split_objects = 0;
  for (const Rational& mi : plan.m) {
    plan.k.push_back(checked_int64(rational_ceil(mi), "k_i"));
    split_objects += plan.k.back();
  }
  plan.objects_built = static_cast<std::int64_t>(d) * split_objects;
  plan.n = plan.objects_built;
  return plan;
}

KnapsackInstance build_bicriteria(const ConstructionPlan& plan) {
  if (plan.kind != Family::bicriteria) {
    throw std::invalid_argument("plan is not a bicriteria plan");
  }
  KnapsackInstance instance;
  instance.d = 1;
  instance.phi = plan.phi_eff;
  const Rational inv_phi = Rational(1) / plan.phi_eff;

  for (std::int64_t i = 1; i <= plan.n_p; ++i) {
    Group group;
    group.objects.push_back(
        KnapsackObject{pow2(i), ProfitBox::cube(1, 0, inv_phi), std::nullopt});
    group.choices = {Choice{0}, Choice{1}};
    instance.groups.push_back(std::move(group));
  }

  for (std::int64_t i = 1; i <= plan.n_q; ++i) {
    const Rational& mi = plan.m[static_cast<std::size_t>(i - 1)];
    const std::int64_t ki = plan.k[static_cast<std::size_t>(i - 1)];
    const Rational top = mi / ki;
    const Rational weight = pow2(plan.n_p + i) / ki;
    Group group;
    group.objects.reserve(static_cast<std::size_t>(ki));
    for (std::int64_t l = 0; l < ki; ++l) {
      group.objects.push_back(
          KnapsackObject{weight, ProfitBox::cube(1, top - inv_phi, top), std::nullopt});
    }
    group.choices = {Choice(static_cast<std::size_t>(ki), 0),
                     Choice(static_cast<std::size_t>(ki), 1)};
    instance.groups.push_back(std::move(group));
  }
  return instance;
}

KnapsackInstance build_multicriteria(const ConstructionPlan& plan) {
  if (plan.kind != Family::multicriteria) {
    throw std::invalid_argument("plan is not a multicriteria plan");
  }
  KnapsackInstance instance;
  instance.d = plan.d;
  instance.phi = plan.phi_eff;
  const Rational inv_phi = Rational(1) / plan.phi_eff;
  const int d = plan.d;
  const int d_hat = plan.d_hat;

  for (std::int64_t i = 1; i <= plan.n_q; ++i) {
    const Rational& mi = plan.m[static_cast<std::size_t>(i - 1)];
    const std::int64_t ki = plan.k[static_cast<std::size_t>(i - 1)];
    const Rational top = mi / ki;
    const Rational weight = pow2(i) / (Rational(ki) * d_hat);

    Group group;
    group.objects.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(ki));
    for (int j = 0; j < d; ++j) {
      ProfitBox box = ProfitBox::cube(d, 0, inv_phi);
      box.intervals[static_cast<std::size_t>(j)] = ProfitBox::Interval{top - inv_phi, top};
      for (std::int64_t l = 0; l < ki; ++l) {
        group.objects.push_back(KnapsackObject{weight, box, std::nullopt});
      }
    }

    // Lifts of the Hamming-weight-{0, d_hat} selectors: virtual object j
    // expands to its k_i physical objects all-or-none.
    const std::size_t group_size = group.objects.size();
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      const int ones = std::popcount(mask);
      if (ones != 0 && ones != d_hat) {
        continue;
      }
      Choice choice(group_size, 0);
      for (int j = 0; j < d; ++j) {
        if (mask & (1u << j)) {
          for (std::int64_t l = 0; l < ki; ++l) {
            choice[static_cast<std::size_t>(j) * static_cast<std::size_t>(ki) +
                   static_cast<std::size_t>(l)] = 1;
          }
        }
      }
      group.choices.push_back(std::move(choice));
    }
    instance.groups.push_back(std::move(group));
  }
  return instance;
}

KnapsackInstance build_instance(const ConstructionPlan& plan) {
  switch (plan.kind) {
    case Family::baseline:
      return build_uniform_baseline(plan.n);
    case Family::bicriteria:
      return build_bicriteria(plan);
    case Family::multicriteria:
      return build_multicriteria(plan);
  }
  throw std::invalid_argument("unknown plan kind");
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

}  // namespace kpareto
