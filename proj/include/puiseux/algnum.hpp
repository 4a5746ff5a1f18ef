#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace puiseux {

using Rational = mpq_class;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

Rational rational_from_string(const std::string& s);
std::string to_string(const Rational& q);
Rational rational_pow(const Rational& q, long e);
// Exact nu-th root of a rational, if one exists.
bool rational_nth_root(const Rational& q, unsigned long nu, Rational& out);

// ---------------------------------------------------------------------------
// Polynomials in the formal parameters (free constants of solution families).
// Exponent vectors are trailing-zero trimmed so the set of parameters can grow
// without invalidating existing values.
// ---------------------------------------------------------------------------

using Mono = std::vector<uint32_t>;

class ParamPoly {
 public:
  ParamPoly() = default;
  static ParamPoly constant(const Rational& q);
  static ParamPoly variable(size_t index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Rational& constant_value() const;  // pre: is_constant()
  size_t num_terms() const { return terms_.size(); }
  // Largest parameter index occurring (0 if none); vars() = index+1 bound.
  size_t var_bound() const;

  ParamPoly operator-() const;
  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

  // Exact division; throws if not divisible.
  ParamPoly divexact(const ParamPoly& d) const;
  static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

  // Coefficient of the lexicographically largest monomial.
  const Rational& leading_coeff() const;

  const std::map<Mono, Rational>& terms() const { return terms_; }
  void set_term(const Mono& m, const Rational& c);

  std::string to_string(const std::vector<std::string>& param_names) const;

 private:
  std::map<Mono, Rational> terms_;  // monomial -> nonzero coefficient
};

// Rational function in the parameters.  Values without parameters take a fast
// path carrying a plain Rational.
class Scalar {
 public:
  Scalar() : is_q_(true), q_(0) {}
  Scalar(const Rational& q) : is_q_(true), q_(q) {}
  Scalar(long n) : is_q_(true), q_(n) {}
  static Scalar parameter(size_t index);

  bool is_rational() const { return is_q_; }
  const Rational& rational_value() const;  // pre: is_rational()
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  bool operator==(const Scalar& o) const;

  Scalar inv() const;  // pre: nonzero

  // Substitute rational values for parameters (index -> value); parameters
  // without an assigned value cause an error.
  Scalar substitute_params(const std::map<size_t, Rational>& values) const;
  // Rename parameter indices (old index -> new index).
  Scalar remap_params(const std::map<size_t, size_t>& mapping) const;
  size_t var_bound() const;
  bool depends_on_param(size_t index) const;
  // Decompose as polynomial in parameter `index` with Scalar coefficients;
  // requires the denominator to be free of that parameter.
  std::vector<Scalar> coeffs_in_param(size_t index) const;

  std::string to_string(const std::vector<std::string>& param_names) const;

 private:
  void normalize();
  static void promote(Scalar& a);

  bool is_q_;
  Rational q_;
  ParamPoly num_, den_;
};

// ---------------------------------------------------------------------------
// Towers of simple extensions of Q, with dynamic evaluation.  A tower is
// immutable; adjoining a generator or splitting a reducible level creates a
// new tower.  Elements store their reduced representation as nested dense
// coefficient vectors, innermost coefficients being Scalars.
// ---------------------------------------------------------------------------

class Rep {
 public:
  Rep() : v_(Scalar()) {}
  explicit Rep(Scalar s) : v_(std::move(s)) {}
  explicit Rep(std::vector<Rep> coeffs) : v_(std::move(coeffs)) {}

  bool is_scalar() const { return std::holds_alternative<Scalar>(v_); }
  const Scalar& scalar() const { return std::get<Scalar>(v_); }
  Scalar& scalar() { return std::get<Scalar>(v_); }
  const std::vector<Rep>& vec() const { return std::get<std::vector<Rep>>(v_); }
  std::vector<Rep>& vec() { return std::get<std::vector<Rep>>(v_); }

  bool operator==(const Rep& o) const { return v_ == o.v_; }

 private:
  std::variant<Scalar, std::vector<Rep>> v_;
};

struct TowerLevel {
  std::string name;
  // Dense monic defining polynomial; coefficient i multiplies gen^i and lives
  // in the tower below this level.  degree = defpoly.size()-1 >= 1 (after the
  // linear shortcut degree >= 2 in practice, but 1 can appear via splits).
  std::vector<Rep> defpoly;
  size_t degree() const { return defpoly.size() - 1; }
};

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Tower {
 public:
  static TowerPtr rationals();

  size_t height() const { return levels_.size(); }
  const TowerLevel& level(size_t i) const { return levels_[i]; }
  const std::vector<TowerLevel>& levels() const { return levels_; }
  size_t num_params() const { return param_names_.size(); }
  const std::string& param_name(size_t i) const { return param_names_[i]; }
  const std::vector<std::string>& param_names() const { return param_names_; }

  // Total degree over Q (product of level degrees).
  unsigned long absolute_degree() const;

  // Structure-sharing helpers (used by adjoin/split/parameter creation).
  static TowerPtr with_level(const TowerPtr& t, TowerLevel lvl);
  static TowerPtr with_param(const TowerPtr& t, const std::string& name);
  static TowerPtr with_levels(std::vector<TowerLevel> levels,
                              std::vector<std::string> params);

  std::string describe() const;

 private:
  std::vector<TowerLevel> levels_;
  std::vector<std::string> param_names_;
};

// Request to split a reducible level; thrown by inversion when a zero divisor
// is met and handled by the nearest driver owning that level.
struct SplitRequest {
  size_t level;             // index of the reducible level
  std::vector<Rep> factor;  // monic nontrivial factor of its defining poly
};

class Elem {
 public:
  Elem() : tower_(Tower::rationals()), rep_(Scalar()) {}
  Elem(TowerPtr tower, Rep rep);

  static Elem from_rational(const TowerPtr& t, const Rational& q);
  static Elem from_scalar(const TowerPtr& t, const Scalar& s);
  static Elem generator(const TowerPtr& t, size_t level_index);
  static Elem parameter(const TowerPtr& t, size_t param_index);

  const TowerPtr& tower() const { return tower_; }
  const Rep& rep() const { return rep_; }

  bool is_structural_zero() const;
  bool is_rational() const;            // rep collapses to a rational constant
  Rational rational_value() const;     // pre: is_rational()
  bool is_scalar_only() const;         // no generator occurs in the rep
  Scalar scalar_value() const;         // pre: is_scalar_only()

  Elem operator-() const;
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  Elem inv() const;  // throws SplitRequest on zero divisor, error on zero
  Elem pow(long e) const;
  bool operator==(const Elem& o) const;

  // Re-reduce into a refined/extended tower (same level prefix structure).
  Elem migrate(const TowerPtr& target) const;

  Elem substitute_params(const std::map<size_t, Rational>& values) const;
  Elem remap_params(const std::map<size_t, size_t>& mapping) const;
  bool depends_on_param(size_t index) const;

  std::string to_string() const;

 private:
  TowerPtr tower_;
  Rep rep_;
};

// ---------------------------------------------------------------------------
// Zero testing with dynamic evaluation.
// ---------------------------------------------------------------------------

enum class ZeroKind { Zero, NonZero, Split };

struct ZeroTestOutcome {
  ZeroKind kind;
  // For Split: the branch towers, in canonical order.
  std::vector<TowerPtr> branches;
};

ZeroTestOutcome is_zero(const Elem& x);

// Definite zero test; throws SplitRequest when the answer differs between
// branches of a reducible level.
bool decide_zero(const Elem& x);

// Materialize a split: branch towers in canonical (lexicographic) order.
std::vector<TowerPtr> split_tower(const TowerPtr& t, const SplitRequest& s);

// ---------------------------------------------------------------------------
// Adjunction.
// ---------------------------------------------------------------------------

// Adjoin a root of `defpoly` (dense, univariate over t; coefficients are
// elements of t).  The polynomial is made monic and squarefree internally.
// Degree-1 results return the rational... the explicit root, no new level.
std::pair<TowerPtr, Elem> adjoin_root(const TowerPtr& t,
                                      const std::vector<Elem>& defpoly,
                                      const std::string& name_hint = "");

// nu-th root of x: reuses an existing generator satisfying g^nu = x if any,
// otherwise adjoins X^nu - x.  x = 0 returns 0 without extension.
std::pair<TowerPtr, Elem> nth_root(const Elem& x, unsigned long nu);

// Primitive nu-th root of unity (cached per tower by generator name).
std::pair<TowerPtr, Elem> root_of_unity(const TowerPtr& t, unsigned long nu);

// Fresh parameter with a deterministic name c1, c2, ...
std::pair<TowerPtr, Elem> fresh_parameter(const TowerPtr& t);

// Cyclotomic polynomial of order nu over Q (dense rational coefficients).
std::vector<Rational> cyclotomic(unsigned long nu);

// ---------------------------------------------------------------------------
// Branch exploration driver: runs `body` on the tower, materializing splits
// whose level the tower owns; deeper splits propagate to the caller.  Results
// are collected per branch in canonical order.
// ---------------------------------------------------------------------------

template <typename Body>
void explore_branches(const TowerPtr& base, Body body) {
  std::vector<TowerPtr> work{base};
  while (!work.empty()) {
    TowerPtr t = work.front();
    work.erase(work.begin());
    try {
      body(t);
    } catch (SplitRequest& s) {
      if (s.level >= t->height()) throw;  // inner adjunction: not ours
      auto branches = split_tower(t, s);
      work.insert(work.begin(), branches.begin(), branches.end());
    }
  }
}

}  // namespace puiseux
