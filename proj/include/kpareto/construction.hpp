#ifndef KPARETO_CONSTRUCTION_HPP
#define KPARETO_CONSTRUCTION_HPP

#include "kpareto/model.hpp"
#include "kpareto/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace kpareto {

enum class Family { baseline, bicriteria, multicriteria };
enum class Regime { poly, exponential };

const char* family_name(Family family);
Family parse_family(std::string_view name);
const char* regime_name(Regime regime);
Regime parse_regime(std::string_view name);

/// Resolved construction parameters: regime, effective density, copy-step and
/// padding counts, the m-sequence with its ceilings, and the object total.
struct ConstructionPlan {
  Family kind = Family::baseline;
  std::int64_t n = 0;  // object budget
  int d = 1;
  Rational phi_input = 1;
  Regime regime = Regime::poly;
  Rational phi_eff = 1;  // phi, or phi' in the exponential regime
  std::int64_t n_p = 0;
  std::int64_t n_q = 0;
  double n_hat_p = 0.0;
  double n_hat_q = 0.0;
  int d_hat = 1;  // ceil(d/2)
  std::vector<Rational> m;
  std::vector<std::int64_t> k;  // k_i = ceil(m_i)
  std::int64_t objects_built = 0;  // N; always <= n
};

/// n singleton binary groups, object i with weight 2^i and a unit profit box
/// (d = 1, phi = 1).
KnapsackInstance build_uniform_baseline(std::int64_t n);

/// m_i = (n_p+1)/(phi-1) * ((2 phi - 1)/(phi - 1))^(i-1), i = 1..n_q, exact.
std::vector<Rational> m_sequence_bi(std::int64_t n_p, const Rational& phi, std::int64_t n_q);

/// m_0 = 0, m_i = (sum_{l<i} (m_l (phi+d) + d)) / (phi - d), i = 1..n_q, exact.
std::vector<Rational> m_sequence_multi(int d, const Rational& phi, std::int64_t n_q);

/// Closed form of the same sequence: m_i = d/(phi+d) * ((2 phi/(phi-d))^i - 1).
std::vector<Rational> m_sequence_multi_explicit(int d, const Rational& phi, std::int64_t n_q);

/// Unique phi' > 1 with phi' = ((2 phi' - 1)/(phi' - 1))^((n-1)/3), by
/// bisection to absolute residual < 1e-9. Requires n >= 4.
double solve_phi_prime_bi(std::int64_t n);

/// Unique phi' > d with phi' - d = (4 d^2 / n) (2 phi'/(phi' - d))^(n/(2d)),
/// by bisection to absolute residual < 1e-9. Requires n >= 16 d, d >= 2.
double solve_phi_prime_multi(std::int64_t n, int d);

ConstructionPlan plan_baseline(std::int64_t n);

/// Requires n >= 4 and phi >= (3+sqrt(5))/2. Poly regime iff
/// phi <= ((2 phi - 1)/(phi - 1))^((n-1)/3) (ties resolve to poly; tested
/// exactly as phi^3 <= ratio^(n-1)).
ConstructionPlan plan_bicriteria(std::int64_t n, const Rational& phi);

/// Requires n >= 16 d, phi >= 2 d, d >= 2. Poly regime iff
/// phi - d <= (4 d^2/n) (2 phi/(phi - d))^(n/(2d)), tested exactly after
/// raising both sides to the 2d-th power.
ConstructionPlan plan_multicriteria(std::int64_t n, int d, const Rational& phi);

/// Plan assembled directly from (n_p, n_q) instead of an object budget; the
/// budget is set to the object count actually used.
ConstructionPlan bicriteria_plan_for(std::int64_t n_p, const Rational& phi, std::int64_t n_q);

/// Plan assembled directly from (d, n_q); requires phi > d.
ConstructionPlan multicriteria_plan_for(int d, const Rational& phi, std::int64_t n_q);

/// d = 1 instance: n_p singleton groups (weights 2^i, box [0, 1/phi]) plus
/// n_q all-or-none split groups of k_i objects with weight 2^(n_p+i)/k_i and
/// box (m_i/k_i - 1/phi, m_i/k_i].
KnapsackInstance build_bicriteria(const ConstructionPlan& plan);

/// d-profit instance with n_q groups of d*k_i objects; object (j, l) of group
/// i has weight 2^i/(k_i d_hat) and a box that is large in dimension j and
/// [0, 1/phi] elsewhere. Choices are the lifts of the Hamming-weight-{0,
/// d_hat} selectors, 1 + C(d, d_hat) per group.
KnapsackInstance build_multicriteria(const ConstructionPlan& plan);

/// Dispatch on plan.kind.
KnapsackInstance build_instance(const ConstructionPlan& plan);

BigInt binomial(int n, int k);

}  // namespace kpareto

#endif  // KPARETO_CONSTRUCTION_HPP
