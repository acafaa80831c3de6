#include "modwitt/report.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace modwitt {
namespace {

enum class Status { pass, fail, skipped };

class Checklist {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    push(std::move(name), ok ? Status::pass : Status::fail, std::move(detail));
  }
  void skip(std::string name, std::string reason) {
    push(std::move(name), Status::skipped, std::move(reason));
  }
  bool passed() const { return passed_; }
  Json json() const { return items_; }

 private:
  void push(std::string name, Status status, std::string detail) {
    static constexpr const char* kNames[] = {"pass", "fail", "skipped"};
    Json item;
    item["name"] = std::move(name);
    item["status"] = kNames[static_cast<int>(status)];
    if (!detail.empty()) item["detail"] = std::move(detail);
    items_.push_back(std::move(item));
    if (status == Status::fail) passed_ = false;
  }

  Json items_ = Json::array();
  bool passed_ = true;
};

std::string index_key(int i) { return std::to_string(i); }

WittElement random_witt(const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> coeff(0, f.order() - 1);
  WittElement g(f);
  for (int i = -1; i <= static_cast<int>(f.order()) - 2; ++i) g[i] = coeff(rng);
  return g;
}

std::vector<WittElement> witt_basis(const PrimeField& f) {
  std::vector<WittElement> basis;
  for (int i = -1; i <= static_cast<int>(f.order()) - 2; ++i) basis.push_back(WittElement::basis(f, i));
  return basis;
}

void check_witt_algebra(const PrimeField& f, const VerifyOptions& opt, std::mt19937_64& rng,
                        Checklist& checks) {
  const Scalar p = f.order();
  const auto basis = witt_basis(f);

  bool lie = true;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      if (!(bracket(x, y) + bracket(y, x)).is_zero()) lie = false;
      for (const auto& z : basis)
        if (!(bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero())
          lie = false;
    }
  for (std::size_t t = 0; t < opt.random_trials && lie; ++t) {
    WittElement x = random_witt(f, rng), y = random_witt(f, rng), z = random_witt(f, rng);
    lie = (bracket(x, y) + bracket(y, x)).is_zero() &&
          (bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)).is_zero();
  }
  checks.add("witt_antisymmetry_jacobi", lie);

  std::vector<WittElement> samples = basis;
  for (std::size_t t = 0; t < opt.random_trials; ++t) samples.push_back(random_witt(f, rng));
  std::vector<char> oracle_ok(samples.size(), 1), proportional(samples.size(), 1);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(samples.size()); ++s) {
    const auto& g = samples[static_cast<std::size_t>(s)];
    const WittElement folded = pth_power(g);
    oracle_ok[static_cast<std::size_t>(s)] = folded == pth_power_via_derivation(g);
    if (!g.is_zero()) {
      try {
        gamma(g);
      } catch (const ProportionalityViolation&) {
        proportional[static_cast<std::size_t>(s)] = 0;
      }
    }
  }
  const bool oracle = std::all_of(oracle_ok.begin(), oracle_ok.end(), [](char c) { return c; });
  checks.add("pth_power_oracle", oracle,
             std::to_string(samples.size()) + " elements: Jacobson fold vs derivation power");
  checks.add("pth_power_proportional",
             std::all_of(proportional.begin(), proportional.end(), [](char c) { return c; }));

  bool fold_order = true, homogeneous = true;
  std::uniform_int_distribution<Scalar> scalar(0, p - 1);
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), -1);
  for (std::size_t t = 0; t < std::min<std::size_t>(opt.random_trials, 10); ++t) {
    const WittElement g = random_witt(f, rng);
    std::shuffle(order.begin(), order.end(), rng);
    const WittElement power = pth_power_via_derivation(g);
    fold_order = fold_order && pth_power(g, order) == power;
    const Scalar lambda = scalar(rng);
    homogeneous = homogeneous &&
                  pth_power_via_derivation(g.scaled(lambda)) == power.scaled(f.frobenius(lambda));
  }
  checks.add("pth_power_fold_order", fold_order);
  checks.add("pth_power_homogeneity", homogeneous);

  // [h, g^[p]] = [h, g, ..., g] (p copies)
  bool adjoint = true;
  auto adjoint_ok = [&](const WittElement& h, const WittElement& g) {
    std::vector<WittElement> copies(p, g);
    return bracket(h, pth_power_via_derivation(g)) == bracket_chain(h, copies);
  };
  for (const auto& h : basis)
    for (const auto& g : basis) adjoint = adjoint && adjoint_ok(h, g);
  for (std::size_t t = 0; t < opt.random_trials && adjoint; ++t) {
    WittElement h = random_witt(f, rng);
    adjoint = adjoint_ok(h, random_witt(f, rng));
  }
  checks.add("witt_adjoint_power", adjoint);
}

void check_ordinary(const PrimeField& f, const OrdinaryCohomology& cl, Checklist& checks) {
  const Scalar p = f.order();
  const Matrix d1 = delta1_cl_matrix(f);
  const Matrix d2 = delta2_cl_matrix(f);
  checks.add("ordinary_complex", (d2 * d1).is_zero(), "delta2_cl o delta1_cl = 0");

  const WedgeBasis basis(p);
  bool graded = true;
  for (std::size_t r = 0; r < d2.rows(); ++r)
    for (std::size_t c = 0; c < d2.cols(); ++c)
      if (d2(r, c) && basis.grade(basis.triples()[r]) != basis.grade(basis.pairs()[c])) graded = false;
  for (std::size_t r = 0; r < d1.rows(); ++r)
    for (std::size_t c = 0; c < d1.cols(); ++c)
      if (d1(r, c) && basis.grade(basis.pairs()[r]) != static_cast<int>(c) - 1) graded = false;
  const std::size_t full_kernel = d2.cols() - rank(d2);
  graded = graded && full_kernel == cl.ker_delta2 && rank(d1) == cl.rank_delta1;
  checks.add("ordinary_grading", graded, "block-diagonal; graded and full ranks agree");

  std::vector<std::size_t> pair_counts(p, 0), triple_counts(p, 0);
  for (const auto& pr : basis.pairs()) ++pair_counts[static_cast<std::size_t>(basis.grade(pr) + 1)];
  for (const auto& tr : basis.triples()) ++triple_counts[static_cast<std::size_t>(basis.grade(tr) + 1)];
  // (p-1)(p-2)/6 is integral only for p > 3; p = 3 has a single triple
  const bool graded_dims =
      std::all_of(pair_counts.begin(), pair_counts.end(), [&](auto n) { return n == (p - 1) / 2; }) &&
      (p == 3 || std::all_of(triple_counts.begin(), triple_counts.end(),
                             [&](auto n) { return n == (p - 1) * (p - 2) / 6; }));
  checks.add("graded_cochain_dimensions", graded_dims);

  if (p == 3) {
    checks.skip("ordinary_cohomology", "stated for p > 3 only");
    checks.skip("grade_kernel_dimensions", "stated for p > 3 only");
    checks.skip("phi10_cocycle", "phi_{1,0} needs p > 3");
  } else {
    checks.add("ordinary_cohomology", cl.h0 == 1 && cl.h1 == 0 && cl.h2 == 1);
    bool grades = true;
    for (int k = -1; k <= static_cast<int>(p) - 2; ++k)
      grades = grades && cl.grade_kernel_dims[static_cast<std::size_t>(k + 1)] == (k == 0 ? 2u : 1u);
    checks.add("grade_kernel_dimensions", grades);
    const Cochain2Ord phi = phi_one_zero(f);
    checks.add("phi10_cocycle", delta2_cl(phi).is_zero() && !is_ordinary_coboundary(phi),
               "in ker delta2_cl, outside im delta1_cl");
  }
  checks.add("phi_2_p_minus_4_identity",
             phi_two_p_minus_four(f) == delta1_cl(Cochain1::dual_basis(f, 0)));

  const GradedBlock zero = graded_block(f, 0, 2);
  bool recursion = true;
  for (const auto& v : kernel_basis(zero.matrix)) {
    Cochain2Ord phi(f);
    for (std::size_t c = 0; c < v.size(); ++c) phi.a[zero.source[c]] = v[c];
    recursion = recursion && satisfies_grade_zero_recursion(phi);
  }
  checks.add("grade_zero_recursion", recursion);
}

void check_restricted(const PrimeField& f, const RestrictedH2& h2, const VerifyOptions& opt,
                      std::mt19937_64& rng, Checklist& checks) {
  const Scalar p = f.order();
  const Matrix d1 = delta1_res_matrix(f);
  const Matrix d2 = delta2_res_matrix(f);
  checks.add("restricted_complex", (d2 * d1).is_zero(), "delta2 o delta1 = 0");

  bool beta_zero = true;
  const std::size_t alpha_rows = d2.rows() - p * p;
  for (std::size_t r = alpha_rows; r < d2.rows(); ++r)
    for (std::size_t c = 0; c < d2.cols(); ++c)
      if (d2(r, c)) beta_zero = false;
  checks.add("ind2_vanishes", beta_zero, "beta-block of the delta2 matrix");

  bool pointwise = true;
  const std::size_t pairs = std::min<std::size_t>(opt.random_trials, p <= 13 ? 20 : 3);
  for (std::size_t t = 0; t < pairs && pointwise; ++t) {
    Cochain2Res c(f);
    std::uniform_int_distribution<Scalar> coeff(0, p - 1);
    for (auto& a : c.phi.a) a = coeff(rng);
    WittElement g = random_witt(f, rng);
    pointwise = ind2_at(c, g, random_witt(f, rng)) == 0;
  }
  checks.add("ind2_vanishes_pointwise", pointwise, "random cochains and elements");

  checks.add("delta1_injective", h2.image_delta1 == p);
  const std::size_t ker_cl = d2.cols() - p - rank(delta2_cl_matrix(f));
  checks.add("restricted_kernel_formula", h2.ker_delta2 == ker_cl + p,
             "ker delta2 = ker delta2_cl + p");

  if (p == 3) {
    checks.add("h2_dimensions", h2.h2 == 3, "p = 3: H^2 is 3-dimensional");
  } else {
    checks.add("h2_dimensions",
               h2.h2 == p + 1 && h2.ker_delta2 == 2 * p + 1 && h2.image_delta1 == p);
  }
  checks.add("standard_basis",
             h2.standard_basis_in_kernel && h2.standard_basis_completes_image,
             "standard cocycles are independent mod im delta1 and span ker delta2 with it");
}

void check_enumerations(const PrimeField& f, const VerifyOptions& opt, std::mt19937_64& rng,
                        Checklist& checks) {
  const Scalar p = f.order();
  const std::vector<std::string> names = {"star_property_consistency", "omega_fold_order",
                                          "starstar_symmetric", "virasoro_omega_nonzero"};
  if (p > opt.max_enum_prime) {
    for (const auto& n : names) checks.skip(n, "p exceeds --max-enum-prime");
    return;
  }
  std::uniform_int_distribution<Scalar> coeff(0, p - 1);
  const std::size_t trials = 5;

  bool consistent = true;
  for (std::size_t t = 0; t < trials; ++t) {
    Cochain1 psi(f);
    for (auto& c : psi.c) c = coeff(rng);
    WittElement g = random_witt(f, rng), h = random_witt(f, rng);
    Scalar lhs = f.sub(f.sub(psi(pth_power_via_derivation(g + h)), psi(pth_power_via_derivation(g))),
                       psi(pth_power_via_derivation(h)));
    consistent = consistent && lhs == star_correction(delta1_cl(psi), g, h);
  }
  checks.add("star_property_consistency", consistent,
             "psi((g+h)^[p]) - psi(g^[p]) - psi(h^[p]) = star correction of delta1_cl psi");

  // the *-property fold is only well defined when phi is closed
  const std::vector<Vector> closed = kernel_basis(delta2_cl_matrix(f));
  bool invariant = true;
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), -1);
  for (std::size_t t = 0; t < trials; ++t) {
    Cochain2Res c(f);
    for (const auto& v : closed) {
      const Scalar s = coeff(rng);
      for (std::size_t k = 0; k < v.size(); ++k) c.phi.a[k] = f.add(c.phi.a[k], f.mul(s, v[k]));
    }
    for (auto& a : c.omega_basis) a = coeff(rng);
    const WittElement g = random_witt(f, rng);
    std::shuffle(order.begin(), order.end(), rng);
    invariant = invariant && eval_omega(c, g) == eval_omega(c, g, order);
  }
  checks.add("omega_fold_order", invariant, "random cocycles");

  bool starstar = true;
  for (std::size_t t = 0; t < 2; ++t) {
    Cochain3Ord alpha(f);
    for (auto& a : alpha.a) a = coeff(rng);
    WittElement g = random_witt(f, rng), h1 = random_witt(f, rng), h2 = random_witt(f, rng);
    starstar = starstar && starstar_correction(alpha, g, h1, h2) == starstar_correction(alpha, g, h2, h1);
  }
  checks.add("starstar_symmetric", starstar, "correction is symmetric in h1, h2");

  if (p == 3) {
    checks.skip("virasoro_omega_nonzero", "phi_{1,0} needs p > 3");
    return;
  }
  const Cochain2Res vir = virasoro_cocycle(f);
  std::string witness;
  const int top = static_cast<int>(p) - 2;
  for (int a = -1; a <= top && witness.empty(); ++a)
    for (int b = a + 1; b <= top && witness.empty(); ++b)
      for (int c = b + 1; c <= top && witness.empty(); ++c) {
        WittElement g = WittElement::basis(f, a) + WittElement::basis(f, b) + WittElement::basis(f, c);
        const Scalar value = eval_omega(vir, g);
        std::vector<int> reversed(p);
        std::iota(reversed.rbegin(), reversed.rend(), -1);
        if (value != 0 && eval_omega(vir, g, reversed) == value)
          witness = "omega(e" + std::to_string(a) + "+e" + std::to_string(b) + "+e" +
                    std::to_string(c) + ") = " + std::to_string(value);
      }
  checks.add("virasoro_omega_nonzero", !witness.empty(), witness);
}

void check_extensions(const PrimeField& f, const VerifyOptions& opt, Checklist& checks) {
  const Scalar p = f.order();
  if (p > opt.max_enum_prime) {
    for (const char* n : {"extension_axioms", "extension_negative_controls", "extension_round_trip",
                          "extension_classes", "extension_classification"})
      checks.skip(n, "p exceeds --max-enum-prime");
    return;
  }
  const std::vector<Cochain2Res> standard = standard_h2_basis(f);

  std::vector<std::string> failures;
  std::vector<std::string> labels;
  if (p > 3) labels.push_back("virasoro");
  for (int i = -1; i <= static_cast<int>(p) - 2; ++i) labels.push_back("E_" + std::to_string(i));
  std::vector<std::string> detail(standard.size());
  for (std::size_t k = 0; k < standard.size(); ++k) {
    const AxiomReport report =
        verify_restricted_axioms(build_extension(standard[k]), opt.extension_trials, opt.seed + k);
    for (const auto& c : report.checks)
      if (!c.passed) detail[k] = c.name + ": " + c.detail;
  }
  for (std::size_t k = 0; k < standard.size(); ++k)
    if (!detail[k].empty()) failures.push_back(labels[k] + " " + detail[k]);
  checks.add("extension_axioms", failures.empty(),
             failures.empty() ? std::to_string(standard.size()) + " extensions" : failures.front());

  if (p >= 5) {
    CentralExtension corrupted = build_extension(omega_cocycle(f, 0));
    corrupted.set_bracket(2, 3, ExtElement(f));  // [e1, e2] := 0
    const bool jacobi_caught = !verify_restricted_axioms(corrupted, 0).find("jacobi")->passed;
    const auto bogus = Cochain2Res(Cochain2Ord::dual_basis(f, 0, 1), Vector(p, 0));
    const bool non_cocycle_caught =
        !verify_restricted_axioms(build_extension_unchecked(bogus), 0).find("jacobi")->passed;
    checks.add("extension_negative_controls", jacobi_caught && non_cocycle_caught,
               "corrupted [e1,e2] and a non-cocycle both fail Jacobi");
  } else {
    checks.skip("extension_negative_controls", "needs e_2 (p >= 5)");
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Scalar> coeff(0, p - 1);
  bool round_trip = true;
  for (std::size_t k = 0; k < standard.size(); ++k) {
    Cochain1 psi(f);
    for (auto& x : psi.c) x = coeff(rng);
    Cochain2Res c = standard[k] + delta1_res(psi);
    const CentralExtension ext = build_extension(c);
    const Cochain2Res shifted = extract_cocycle(ext, Splitting::shifted(psi));
    round_trip = round_trip && extract_cocycle(ext, Splitting::canonical(f)) == c &&
                 shifted == c - delta1_res(psi) && cohomologous(shifted, c).has_value();
  }
  checks.add("extension_round_trip", round_trip, "canonical and shifted splittings");

  bool distinct = true;
  for (std::size_t a = 0; a < standard.size(); ++a)
    for (std::size_t b = a + 1; b < standard.size(); ++b)
      distinct = distinct && !cohomologous(standard[a], standard[b]);
  checks.add("extension_classes", distinct,
             std::to_string(standard.size()) + " pairwise non-cohomologous classes");

  std::size_t levi_only = 0, non_levi = 0;
  for (const auto& c : standard) {
    const ExtensionKind kind = classify_extension(c);
    levi_only += kind == ExtensionKind::ordinary_levi_only;
    non_levi += kind == ExtensionKind::non_levi;
  }
  const bool classified = levi_only == p && non_levi == (p > 3 ? 1u : 0u);
  checks.add("extension_classification", classified,
             std::to_string(levi_only) + " ordinary-Levi-only, " + std::to_string(non_levi) + " non-Levi");
}

}  // namespace

Json cochain2_json(const Cochain2Ord& phi) {
  Json out = Json::object();
  const WedgeBasis basis(phi.field.order());
  for (std::size_t k = 0; k < basis.pairs().size(); ++k) {
    const auto [i, j] = basis.pairs()[k];
    out["(" + std::to_string(i) + "," + std::to_string(j) + ")"] = phi.a[k];
  }
  return out;
}

Json omega_json(const Vector& omega_basis) {
  Json out = Json::object();
  for (std::size_t t = 0; t < omega_basis.size(); ++t) out[index_key(static_cast<int>(t) - 1)] = omega_basis[t];
  return out;
}

PrimeReport verify_prime(std::int64_t p_in, const VerifyOptions& opt) {
  const PrimeField f(p_in);
  const Scalar p = f.order();
  std::mt19937_64 rng(opt.seed);
  Checklist checks;

  const WedgeBasis basis(p);
  const std::size_t c2 = Cochain2Res::dimension(p);
  const std::size_t c3 = Cochain3Res::dimension(p);
  checks.add("cochain_dimensions",
             c2 == p * (p + 1) / 2 && c3 == p * (p + 1) * (p + 2) / 6,
             "C2 = " + std::to_string(c2) + ", C3 = " + std::to_string(c3));

  const OrdinaryCohomology cl = h_cl_dims(f);
  const RestrictedH2 h2 = h2_res(f);

  check_witt_algebra(f, opt, rng, checks);
  check_ordinary(f, cl, checks);
  check_restricted(f, h2, opt, rng, checks);
  check_enumerations(f, opt, rng, checks);
  check_extensions(f, opt, checks);

  Json dims;
  dims["C1"] = p;
  dims["C2_cl"] = basis.pairs().size();
  dims["C2"] = c2;
  dims["C3_cl"] = basis.triples().size();
  dims["C3"] = c3;
  dims["H0_cl"] = cl.h0;
  dims["H1_cl"] = cl.h1;
  dims["H2_cl"] = cl.h2;
  dims["H0_res"] = 1;
  dims["H1_res"] = p - h2.image_delta1;
  dims["H2_res"] = h2.h2;
  dims["ker_delta2"] = h2.ker_delta2;
  dims["im_delta1"] = h2.image_delta1;
  Json grades = Json::object();
  for (std::size_t t = 0; t < p; ++t) grades[index_key(static_cast<int>(t) - 1)] = cl.grade_kernel_dims[t];
  dims["grade_kernel_dims"] = grades;

  Json reps = Json::array();
  for (const auto& c : h2.standard_basis) {
    Json rep;
    rep["phi"] = cochain2_json(c.phi);
    rep["omega"] = omega_json(c.omega_basis);
    reps.push_back(std::move(rep));
  }

  PrimeReport out;
  out.passed = checks.passed();
  out.json["prime"] = p;
  out.json["passed"] = out.passed;
  out.json["dims"] = std::move(dims);
  out.json["h2_basis"] = std::move(reps);
  out.json["checks"] = checks.json();
  return out;
}

std::string basis_label(Scalar p, std::size_t u) {
  if (u == p) return "c";
  return "e" + std::to_string(static_cast<int>(u) - 1);
}

CentralExtension selected_extension(const PrimeField& f, ExtensionSelector which) {
  if (!which) return build_extension(virasoro_cocycle(f));
  return build_extension(omega_cocycle(f, *which));
}

std::string extension_name(ExtensionSelector which) {
  return which ? "E_" + std::to_string(*which) : "virasoro";
}

Json extension_json(const CentralExtension& ext, ExtensionSelector which,
                    const std::optional<AxiomReport>& verification) {
  const Scalar p = ext.prime();
  const std::size_t n = ext.dimension();
  Json out;
  out["prime"] = p;
  out["extension"] = extension_name(which);
  Json labels = Json::array();
  for (std::size_t u = 0; u < n; ++u) labels.push_back(basis_label(p, u));
  out["basis"] = labels;

  Json triples = Json::array();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (Scalar s = ext.structure(u, v, w)) {
          Json t;
          t["u"] = basis_label(p, u);
          t["v"] = basis_label(p, v);
          t["basis"] = basis_label(p, w);
          t["coeff"] = s;
          triples.push_back(std::move(t));
        }
  out["bracket"] = std::move(triples);

  Json pmap = Json::array();
  for (std::size_t u = 0; u < n; ++u) {
    Json row;
    row["element"] = basis_label(p, u);
    Json image = Json::object();
    for (std::size_t w = 0; w < n; ++w)
      if (Scalar s = ext.pmap_basis(u).coefficient(w)) image[basis_label(p, w)] = s;
    row["image"] = std::move(image);
    pmap.push_back(std::move(row));
  }
  out["pmap"] = std::move(pmap);

  Json stamp;
  if (!verification) {
    stamp["status"] = "skipped";
  } else {
    stamp["status"] = verification->all_passed() ? "pass" : "fail";
    Json items = Json::array();
    for (const auto& c : verification->checks) {
      Json item;
      item["name"] = c.name;
      item["status"] = c.passed ? "pass" : "fail";
      if (!c.detail.empty()) item["detail"] = c.detail;
      items.push_back(std::move(item));
    }
    stamp["checks"] = std::move(items);
  }
  out["verification"] = std::move(stamp);
  return out;
}

std::string extension_csv(const CentralExtension& ext) {
  const Scalar p = ext.prime();
  const std::size_t n = ext.dimension();
  std::ostringstream os;
  os << "u,v,basis,coeff\n";
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (Scalar s = ext.structure(u, v, w))
          os << basis_label(p, u) << ',' << basis_label(p, v) << ',' << basis_label(p, w) << ',' << s << '\n';
  return os.str();
}

}  // namespace modwitt
