#include "tangle4/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "tangle4/invariants.hpp"

namespace tangle4 {

namespace {

using Vec2 = std::array<Complex, 2>;

const Vec2 kKet0 = {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
const Vec2 kKet1 = {Complex{0.0, 0.0}, Complex{1.0, 0.0}};

PureState4 product_state(const Vec2& q1, const Vec2& q2, const Vec2& q3, const Vec2& q4) {
  PureState4 out;
  for (int x = 0; x < PureState4::kDim; ++x) {
    out[x] = q1[(x >> 3) & 1] * q2[(x >> 2) & 1] * q3[(x >> 1) & 1] * q4[x & 1];
  }
  return out;
}

Complex get_param(const ParamMap& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) {
    throw std::invalid_argument("missing parameter '" + name + "'");
  }
  return it->second;
}

Vec2 get_vector(const ParamMap& params, const std::string& base) {
  return {get_param(params, base + "0"), get_param(params, base + "1")};
}

void require_independent(const Vec2& x, const Vec2& y, const std::string& what) {
  if (std::abs(x[0] * y[1] - x[1] * y[0]) <= 1e-9) {
    throw std::invalid_argument("catalog constraint: " + what +
                                " must be linearly independent vectors");
  }
}

int integer_value(Complex value, const std::string& name) {
  const double rounded = std::round(value.real());
  if (std::abs(value.imag()) > 1e-12 || std::abs(value.real() - rounded) > 1e-9) {
    throw std::invalid_argument("parameter '" + name + "' must be an integer");
  }
  return static_cast<int>(rounded);
}

ParamSpec scalar_param(const std::string& name, Complex def, const std::string& doc) {
  return {name, def, false, doc};
}

// A two-component parameter vector appears as <base>0 and <base>1.
void add_vector_param(std::vector<ParamSpec>& out, const std::string& base, Complex c0,
                      Complex c1, const std::string& doc) {
  out.push_back({base + "0", c0, false, doc + " (component 0)"});
  out.push_back({base + "1", c1, false, doc + " (component 1)"});
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> entries;

  // Symmetric hierarchy: degeneracy-configuration labels.
  {
    CatalogEntry e;
    e.name = "D4";
    e.aliases = {"dicke"};
    e.family = "D_{4} / D_{3,1} / D_{2,2} (depends on k)";
    e.ket_form = "sum of all weight-k basis strings, divided by sqrt(C(4,k))";
    e.description = "Symmetric basis state with k excitations";
    e.params = {{"k", Complex{2.0, 0.0}, true, "number of excitations, 0..4"}};
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Dcfg-4";
    e.family = "D_{4}";
    e.ket_form = "|0000>";
    e.description = "Separable symmetric representative";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Dcfg-3-1";
    e.family = "D_{3,1}";
    e.ket_form = "(|0001> + |0010> + |0100> + |1000>) / 2";
    e.description = "Symmetric representative with a triply degenerate root";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Dcfg-2-2";
    e.family = "D_{2,2}";
    e.ket_form = "(|0011> + |0101> + |0110> + |1001> + |1010> + |1100>) / sqrt(6)";
    e.description = "Symmetric representative with two doubly degenerate roots";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Dcfg-2-1-1";
    e.family = "D_{2,1,1}";
    e.ket_form = "|0000> + (weight-2 symmetric state)";
    e.description = "Symmetric representative with one doubly degenerate root";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "Dcfg-1-1-1-1";
    e.family = "D_{1,1,1,1}";
    e.ket_form = "|0000> + |1111> + mu * (weight-2 symmetric state)";
    e.description = "Symmetric family with four distinct roots; mu^2 != 2/3";
    e.params = {scalar_param("mu", Complex{1.0, 0.0}, "family parameter")};
    entries.push_back(e);
  }

  // LLSS inductive families.
  {
    CatalogEntry e;
    e.name = "W-000-0kPsi-b";
    e.family = "W_{000,0_k Psi} b)";
    e.ket_form = "|0000> + |1101> + |1110>";
    e.description = "All invariants vanish";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-000-W";
    e.aliases = {"W4"};
    e.family = "W_{000,W}";
    e.ket_form = "|0001> + |0010> + |0100> + |1000>";
    e.description = "Four-qubit W state";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-000-000";
    e.aliases = {"GHZ"};
    e.family = "W_{000,000}";
    e.ket_form = "|0000> + |1111>";
    e.description = "Four-qubit GHZ state";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-000-0kPsi-a";
    e.family = "W_{000,0_k Psi} a)";
    e.ket_form = "|0000> + |1100> + |1111>";
    e.description = "Shares the GHZ invariant values";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-000-GHZ";
    e.family = "W_{000,GHZ}";
    e.ket_form = "|0 varphi phi psi> + |1000> + |1111>";
    e.description = "GHZ-like family with one product branch";
    add_vector_param(e.params, "varphi", {1, 0}, {2, 0}, "qubit-2 factor");
    add_vector_param(e.params, "phi", {2, 0}, {-1, 0}, "qubit-3 factor");
    add_vector_param(e.params, "psi", {1, 0}, {1, 0}, "qubit-4 factor");
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-0kPsi-0jPsi-a";
    e.family = "W_{0_k Psi,0_j Psi} a)";
    e.ket_form = "|0 phi 0 0> + |0 phi 1 psi> + |1000> + |1101>";
    e.description = "GHZ-like pattern, A = -2(phi.psi)";
    add_vector_param(e.params, "phi", {1, 0}, {2, 0}, "qubit-2 factor");
    add_vector_param(e.params, "psi", {2, 0}, {1, 0}, "qubit-4 factor");
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-0kPsi-0jPsi-b";
    e.family = "W_{0_k Psi,0_j Psi} b)";
    e.ket_form = "|0 phi 0 psi> + |0 phi 1 0> + |1000> + |1101>";
    e.description = "GHZ-like pattern, A = -2 phi0";
    add_vector_param(e.params, "phi", {3, 0}, {1, 0}, "qubit-2 factor");
    add_vector_param(e.params, "psi", {1, 0}, {2, 0}, "qubit-4 factor");
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-0kPsi-0kPsi-a";
    e.family = "W_{0_k Psi,0_k Psi} a)";
    e.ket_form = "|0000> + |1100> + lambda1 |0011> + lambda2 |1111>";
    e.description = "Contains the cluster state at lambda = (1, -1); needs lambda1*lambda2 != 0";
    e.params = {scalar_param("lambda1", {2, 0}, "coefficient of |0011>"),
                scalar_param("lambda2", {1, 0}, "coefficient of |1111>")};
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-0kPsi-0kPsi-b";
    e.family = "W_{0_k Psi,0_k Psi} b)";
    e.ket_form = "|0000> + |1100> + lambda1 (|0001> + |0010>) + lambda2 (|1101> + |1110>)";
    e.description = "Only B1 survives: (B1, B2, B3) = (3A^2, 0, 0)";
    e.params = {scalar_param("lambda1", {1, 0}, "coefficient of |0001>+|0010>"),
                scalar_param("lambda2", {2, 0}, "coefficient of |1101>+|1110>")};
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-0kPsi-GHZ";
    e.family = "W_{0_k Psi,GHZ}";
    e.ket_form = "|0 varphi> (x) (|phi psi> + |phibar psibar>) + |1000> + |1111>";
    e.description = "Needs (phi, phibar) and (psi, psibar) linearly independent";
    add_vector_param(e.params, "varphi", {2, 0}, {1, 0}, "qubit-2 factor");
    add_vector_param(e.params, "phi", {1, 0}, {1, 0}, "qubit-3 factor, first branch");
    add_vector_param(e.params, "phibar", {1, 0}, {-1, 0}, "qubit-3 factor, second branch");
    add_vector_param(e.params, "psi", {1, 0}, {2, 0}, "qubit-4 factor, first branch");
    add_vector_param(e.params, "psibar", {2, 0}, {1, 0}, "qubit-4 factor, second branch");
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "W-GHZ-W";
    e.family = "W_{GHZ,W}";
    e.ket_form =
        "|0001> + |0010> + |0100> + |1 varphi phi psi> + |1 varphibar phibar psibar>";
    e.description = "Needs each barred pair linearly independent";
    add_vector_param(e.params, "varphi", {1, 0}, {2, 0}, "qubit-2 factor, first branch");
    add_vector_param(e.params, "phi", {1, 0}, {-1, 0}, "qubit-3 factor, first branch");
    add_vector_param(e.params, "psi", {2, 0}, {1, 0}, "qubit-4 factor, first branch");
    add_vector_param(e.params, "varphibar", {2, 0}, {-1, 0}, "qubit-2 factor, second branch");
    add_vector_param(e.params, "phibar", {1, 0}, {1, 0}, "qubit-3 factor, second branch");
    add_vector_param(e.params, "psibar", {1, 0}, {1, 0}, "qubit-4 factor, second branch");
    entries.push_back(e);
  }

  // Named anchor states.
  {
    CatalogEntry e;
    e.name = "X4";
    e.family = "W_{GHZ,W} (X anchor)";
    e.ket_form = "|0001> + |0010> + |0100> + |1000> + sqrt(2) |1111>";
    e.description = "Symmetric anchor of the X family";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "cluster";
    e.family = "W_{0_k Psi,0_k Psi} a) at lambda = (1, -1)";
    e.ket_form = "|0000> + |1100> + |0011> - |1111>";
    e.description = "Cluster-family anchor";
    entries.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "G-ab00";
    e.aliases = {"G_ab00"};
    e.family = "G_{abcd} slice at b = c = 0";
    e.ket_form = "(a+d)/2 (|0000> + |1111>) + (a-d)/2 (|0011> + |1100>)";
    e.description = "Two-parameter slice with closed-form invariants; needs a, d != 0";
    e.params = {scalar_param("a", {1, 0}, "slice parameter a"),
                scalar_param("d", {1, 0}, "slice parameter d")};
    entries.push_back(e);
  }

  return entries;
}

PureState4 weight_sum(int k) {
  PureState4 out;
  for (int x = 0; x < PureState4::kDim; ++x) {
    if (__builtin_popcount(static_cast<unsigned>(x)) == k) {
      out[x] += Complex{1.0, 0.0};
    }
  }
  return out;
}

PureState4 build_ghz() {
  PureState4 s;
  s[0b0000] = Complex{1.0, 0.0};
  s[0b1111] = Complex{1.0, 0.0};
  return s;
}

PureState4 build_w4() { return weight_sum(1); }

PureState4 build_x4() {
  PureState4 s = weight_sum(1);
  s[0b1111] = Complex{std::sqrt(2.0), 0.0};
  return s;
}

PureState4 build_cluster() {
  PureState4 s;
  s[0b0000] = Complex{1.0, 0.0};
  s[0b1100] = Complex{1.0, 0.0};
  s[0b0011] = Complex{1.0, 0.0};
  s[0b1111] = Complex{-1.0, 0.0};
  return s;
}

PureState4 build_d1111(Complex mu) {
  if (std::abs(mu * mu - Complex{2.0 / 3.0, 0.0}) <= 1e-12) {
    throw std::invalid_argument(
        "catalog constraint: D_{1,1,1,1} needs mu^2 != 2/3 (the family boundary)");
  }
  return build_ghz() + mu * build_dicke(2);
}

PureState4 build_w000ghz(const ParamMap& p) {
  const Vec2 f = get_vector(p, "varphi");
  const Vec2 g = get_vector(p, "phi");
  const Vec2 h = get_vector(p, "psi");
  return product_state(kKet0, f, g, h) + PureState4::basis(0b1000) + PureState4::basis(0b1111);
}

PureState4 build_w0k0j_a(const ParamMap& p) {
  const Vec2 g = get_vector(p, "phi");
  const Vec2 h = get_vector(p, "psi");
  return product_state(kKet0, g, kKet0, kKet0) + product_state(kKet0, g, kKet1, h) +
         PureState4::basis(0b1000) + PureState4::basis(0b1101);
}

PureState4 build_w0k0j_b(const ParamMap& p) {
  const Vec2 g = get_vector(p, "phi");
  const Vec2 h = get_vector(p, "psi");
  return product_state(kKet0, g, kKet0, h) + product_state(kKet0, g, kKet1, kKet0) +
         PureState4::basis(0b1000) + PureState4::basis(0b1101);
}

PureState4 build_w0k0k_a(const ParamMap& p) {
  const Complex l1 = get_param(p, "lambda1");
  const Complex l2 = get_param(p, "lambda2");
  if (std::abs(l1 * l2) <= 1e-9) {
    throw std::invalid_argument(
        "catalog constraint: W_{0_k Psi,0_k Psi} a) needs lambda1 * lambda2 != 0");
  }
  PureState4 s;
  s[0b0000] = Complex{1.0, 0.0};
  s[0b1100] = Complex{1.0, 0.0};
  s[0b0011] = l1;
  s[0b1111] = l2;
  return s;
}

PureState4 build_w0k0k_b(const ParamMap& p) {
  const Complex l1 = get_param(p, "lambda1");
  const Complex l2 = get_param(p, "lambda2");
  PureState4 s;
  s[0b0000] = Complex{1.0, 0.0};
  s[0b1100] = Complex{1.0, 0.0};
  s[0b0001] = l1;
  s[0b0010] = l1;
  s[0b1101] = l2;
  s[0b1110] = l2;
  return s;
}

PureState4 build_w0kghz(const ParamMap& p) {
  const Vec2 f = get_vector(p, "varphi");
  const Vec2 g = get_vector(p, "phi");
  const Vec2 gbar = get_vector(p, "phibar");
  const Vec2 h = get_vector(p, "psi");
  const Vec2 hbar = get_vector(p, "psibar");
  require_independent(g, gbar, "phi and phibar");
  require_independent(h, hbar, "psi and psibar");
  return product_state(kKet0, f, g, h) + product_state(kKet0, f, gbar, hbar) +
         PureState4::basis(0b1000) + PureState4::basis(0b1111);
}

PureState4 build_wghzw(const ParamMap& p) {
  const Vec2 f = get_vector(p, "varphi");
  const Vec2 g = get_vector(p, "phi");
  const Vec2 h = get_vector(p, "psi");
  const Vec2 fbar = get_vector(p, "varphibar");
  const Vec2 gbar = get_vector(p, "phibar");
  const Vec2 hbar = get_vector(p, "psibar");
  require_independent(f, fbar, "varphi and varphibar");
  require_independent(g, gbar, "phi and phibar");
  require_independent(h, hbar, "psi and psibar");
  return PureState4::basis(0b0001) + PureState4::basis(0b0010) + PureState4::basis(0b0100) +
         product_state(kKet1, f, g, h) + product_state(kKet1, fbar, gbar, hbar);
}

PureState4 build_gab00(const ParamMap& p) {
  const Complex a = get_param(p, "a");
  const Complex d = get_param(p, "d");
  if (std::abs(a) <= 1e-9 || std::abs(d) <= 1e-9) {
    throw std::invalid_argument("catalog constraint: G slice needs a != 0 and d != 0");
  }
  const Complex plus = (a + d) / 2.0;
  const Complex minus = (a - d) / 2.0;
  PureState4 s;
  s[0b0000] = plus;
  s[0b1111] = plus;
  s[0b0011] = minus;
  s[0b1100] = minus;
  return s;
}

void set_all_values(ExpectedPattern& pattern, Complex a, Complex b1, Complex b2, Complex b3,
                    Complex c) {
  pattern.values["A"] = a;
  pattern.values["B1"] = b1;
  pattern.values["B2"] = b2;
  pattern.values["B3"] = b3;
  pattern.values["C"] = c;
  pattern.values["D"] = c + (5.0 / 9.0) * a * a * a;
  pattern.values["L"] = (b2 - b3) / 48.0;
  pattern.values["M"] = (b3 - b1) / 48.0;
  pattern.values["N"] = (b1 - b2) / 48.0;
  const Complex base = c + a * a * a;
  const Complex lmn = pattern.values["L"] * pattern.values["L"] +
                      pattern.values["M"] * pattern.values["M"] +
                      pattern.values["N"] * pattern.values["N"];
  pattern.values["X"] = base * base - 128.0 * a * a * lmn;
}

ExpectedPattern all_zero_pattern() {
  ExpectedPattern pattern;
  set_all_values(pattern, {}, {}, {}, {}, {});
  pattern.relations = {Relation::AllZero};
  return pattern;
}

// GHZ-like rows: (A, A^2, A^2, A^2, -A^3).
ExpectedPattern ghz_like_pattern(Complex a) {
  ExpectedPattern pattern;
  set_all_values(pattern, a, a * a, a * a, a * a, -a * a * a);
  pattern.relations = {Relation::BjEqualsASquared, Relation::CEqualsMinusACubed};
  return pattern;
}

ExpectedPattern expected_for(const std::string& name, const ParamMap& p) {
  if (name == "D4") {
    const int k = integer_value(get_param(p, "k"), "k");
    if (k < 0 || k > 4) {
      throw std::out_of_range("parameter 'k' must lie in [0, 4]");
    }
    if (k == 2) {
      ExpectedPattern pattern;
      set_all_values(pattern, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0},
                     {-5.0 / 9.0, 0.0});
      pattern.relations = {Relation::BjEqualsASquared, Relation::DZero};
      return pattern;
    }
    ExpectedPattern pattern = all_zero_pattern();
    pattern.relations.push_back(Relation::BjEqualsASquared);
    return pattern;
  }
  if (name == "Dcfg-4" || name == "Dcfg-3-1") {
    ExpectedPattern pattern = all_zero_pattern();
    pattern.relations.push_back(Relation::BjEqualsASquared);
    return pattern;
  }
  if (name == "Dcfg-2-2" || name == "Dcfg-2-1-1") {
    ExpectedPattern pattern;
    set_all_values(pattern, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {-5.0 / 9.0, 0.0});
    pattern.relations = {Relation::BjEqualsASquared, Relation::DZero};
    return pattern;
  }
  if (name == "Dcfg-1-1-1-1") {
    const Complex mu = get_param(p, "mu");
    const Complex mu2 = mu * mu;
    const Complex a = 2.0 + mu2;
    const Complex c =
        -8.0 + 4.0 * mu2 - (102.0 * mu2 * mu2 + 5.0 * mu2 * mu2 * mu2) / 9.0;
    ExpectedPattern pattern;
    set_all_values(pattern, a, a * a, a * a, a * a, c);
    pattern.relations = {Relation::BjEqualsASquared, Relation::DNonzero};
    return pattern;
  }
  if (name == "W-000-0kPsi-b" || name == "W-000-W") {
    return all_zero_pattern();
  }
  if (name == "W-000-000" || name == "W-000-0kPsi-a") {
    return ghz_like_pattern({2.0, 0.0});
  }
  if (name == "W-000-GHZ") {
    const Vec2 f = get_vector(p, "varphi");
    const Vec2 g = get_vector(p, "phi");
    const Vec2 h = get_vector(p, "psi");
    return ghz_like_pattern(2.0 * (f[0] * g[0] * h[0] - f[1] * g[1] * h[1]));
  }
  if (name == "W-0kPsi-0jPsi-a") {
    const Vec2 g = get_vector(p, "phi");
    const Vec2 h = get_vector(p, "psi");
    return ghz_like_pattern(-2.0 * (g[0] * h[0] + g[1] * h[1]));
  }
  if (name == "W-0kPsi-0jPsi-b") {
    const Vec2 g = get_vector(p, "phi");
    return ghz_like_pattern(-2.0 * g[0]);
  }
  if (name == "W-0kPsi-0kPsi-a") {
    const Complex l1 = get_param(p, "lambda1");
    const Complex l2 = get_param(p, "lambda2");
    ExpectedPattern pattern;
    pattern.values["A"] = 2.0 * (l1 + l2);
    pattern.values["L"] = Complex{};
    pattern.relations = {Relation::B3EqualsB2, Relation::B1NotEqualB2,
                         Relation::CEqualsMinusAB2};
    return pattern;
  }
  if (name == "W-0kPsi-0kPsi-b") {
    const Complex l1 = get_param(p, "lambda1");
    const Complex l2 = get_param(p, "lambda2");
    const Complex a = -4.0 * l1 * l2;
    ExpectedPattern pattern;
    set_all_values(pattern, a, 3.0 * a * a, {}, {}, {});
    pattern.relations = {Relation::B1Equals3ASquared, Relation::B2Zero, Relation::B3Zero,
                         Relation::CZero};
    return pattern;
  }
  if (name == "W-0kPsi-GHZ") {
    ExpectedPattern pattern;
    pattern.values["L"] = Complex{};
    pattern.relations = {Relation::B3EqualsB2, Relation::B1NotEqualB2,
                         Relation::CEqualsMinusAB2};
    return pattern;
  }
  if (name == "W-GHZ-W") {
    return {};
  }
  if (name == "X4") {
    ExpectedPattern pattern;
    pattern.values["A"] = Complex{};
    pattern.values["B1"] = Complex{};
    pattern.values["B2"] = Complex{};
    pattern.values["B3"] = Complex{};
    pattern.relations = {Relation::BjEqualsASquared, Relation::DNonzero};
    return pattern;
  }
  if (name == "cluster") {
    ExpectedPattern pattern;
    pattern.values["A"] = Complex{};
    pattern.values["C"] = Complex{};
    pattern.values["L"] = Complex{};
    pattern.values["X"] = Complex{};
    pattern.relations = {Relation::B3EqualsB2, Relation::B1NotEqualB2,
                         Relation::CEqualsMinusAB2};
    return pattern;
  }
  if (name == "G-ab00") {
    const Complex a = get_param(p, "a");
    const Complex d = get_param(p, "d");
    const Complex a2 = a * a;
    const Complex d2 = d * d;
    const Complex alpha = a2 + d2;
    const Complex beta1 = 3.0 * a2 * a2 - 2.0 * a2 * d2 + 3.0 * d2 * d2;
    const Complex beta2 = 4.0 * a2 * d2;
    const Complex gamma = -4.0 * a2 * d2 * alpha;
    ExpectedPattern pattern;
    pattern.values["A"] = alpha;
    pattern.values["C"] = gamma;
    pattern.values["D"] = gamma + (5.0 / 9.0) * alpha * alpha * alpha;
    pattern.values["X"] = Complex{};
    pattern.b_multiset = {{beta1, beta2, beta2}};
    return pattern;
  }
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

}  // namespace

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::AllZero: return "all-zero";
    case Relation::BjEqualsASquared: return "Bj=A^2";
    case Relation::CEqualsMinusACubed: return "C=-A^3";
    case Relation::B3EqualsB2: return "B3=B2";
    case Relation::B1NotEqualB2: return "B1!=B2";
    case Relation::CEqualsMinusAB2: return "C=-A*B2";
    case Relation::B1Equals3ASquared: return "B1=3A^2";
    case Relation::B2Zero: return "B2=0";
    case Relation::B3Zero: return "B3=0";
    case Relation::CZero: return "C=0";
    case Relation::DZero: return "D=0";
    case Relation::DNonzero: return "D!=0";
  }
  throw std::logic_error("unreachable relation");
}

std::optional<Relation> relation_from_string(const std::string& token) {
  for (const Relation r :
       {Relation::AllZero, Relation::BjEqualsASquared, Relation::CEqualsMinusACubed,
        Relation::B3EqualsB2, Relation::B1NotEqualB2, Relation::CEqualsMinusAB2,
        Relation::B1Equals3ASquared, Relation::B2Zero, Relation::B3Zero, Relation::CZero,
        Relation::DZero, Relation::DNonzero}) {
    if (to_string(r) == token) {
      return r;
    }
  }
  return std::nullopt;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name_or_alias) {
  for (const CatalogEntry& entry : catalog_entries()) {
    if (entry.name == name_or_alias) {
      return &entry;
    }
    for (const std::string& alias : entry.aliases) {
      if (alias == name_or_alias) {
        return &entry;
      }
    }
  }
  return nullptr;
}

ParamMap resolve_params(const CatalogEntry& entry, const ParamMap& overrides) {
  ParamMap params;
  for (const ParamSpec& spec : entry.params) {
    params[spec.name] = spec.default_value;
  }
  for (const auto& [name, value] : overrides) {
    const auto it = params.find(name);
    if (it == params.end()) {
      throw std::invalid_argument("entry '" + entry.name + "' has no parameter '" + name + "'");
    }
    it->second = value;
  }
  for (const ParamSpec& spec : entry.params) {
    if (spec.integer) {
      integer_value(params[spec.name], spec.name);  // validates
    }
  }
  return params;
}

PureState4 build_dicke(int k) {
  if (k < 0 || k > 4) {
    throw std::out_of_range("Dicke excitation number must lie in [0, 4]");
  }
  static const std::array<double, 5> kChoose = {1.0, 4.0, 6.0, 4.0, 1.0};
  return (1.0 / std::sqrt(kChoose[k])) * weight_sum(k);
}

PureState4 build_representative(const std::string& name, const ParamMap& overrides) {
  const CatalogEntry* entry = find_catalog_entry(name);
  if (entry == nullptr) {
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
  }
  const ParamMap p = resolve_params(*entry, overrides);
  const std::string& canonical = entry->name;

  if (canonical == "D4") {
    return build_dicke(integer_value(get_param(p, "k"), "k"));
  }
  if (canonical == "Dcfg-4") {
    return build_dicke(0);
  }
  if (canonical == "Dcfg-3-1") {
    return build_dicke(1);
  }
  if (canonical == "Dcfg-2-2") {
    return build_dicke(2);
  }
  if (canonical == "Dcfg-2-1-1") {
    return build_dicke(0) + build_dicke(2);
  }
  if (canonical == "Dcfg-1-1-1-1") {
    return build_d1111(get_param(p, "mu"));
  }
  if (canonical == "W-000-0kPsi-b") {
    return PureState4::basis(0b0000) + PureState4::basis(0b1101) + PureState4::basis(0b1110);
  }
  if (canonical == "W-000-W") {
    return build_w4();
  }
  if (canonical == "W-000-000") {
    return build_ghz();
  }
  if (canonical == "W-000-0kPsi-a") {
    return PureState4::basis(0b0000) + PureState4::basis(0b1100) + PureState4::basis(0b1111);
  }
  if (canonical == "W-000-GHZ") {
    return build_w000ghz(p);
  }
  if (canonical == "W-0kPsi-0jPsi-a") {
    return build_w0k0j_a(p);
  }
  if (canonical == "W-0kPsi-0jPsi-b") {
    return build_w0k0j_b(p);
  }
  if (canonical == "W-0kPsi-0kPsi-a") {
    return build_w0k0k_a(p);
  }
  if (canonical == "W-0kPsi-0kPsi-b") {
    return build_w0k0k_b(p);
  }
  if (canonical == "W-0kPsi-GHZ") {
    return build_w0kghz(p);
  }
  if (canonical == "W-GHZ-W") {
    return build_wghzw(p);
  }
  if (canonical == "X4") {
    return build_x4();
  }
  if (canonical == "cluster") {
    return build_cluster();
  }
  if (canonical == "G-ab00") {
    return build_gab00(p);
  }
  throw std::logic_error("catalog entry '" + canonical + "' has no builder");
}

ExpectedPattern expected_pattern(const std::string& name, const ParamMap& overrides) {
  const CatalogEntry* entry = find_catalog_entry(name);
  if (entry == nullptr) {
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
  }
  return expected_for(entry->name, resolve_params(*entry, overrides));
}

}  // namespace tangle4
