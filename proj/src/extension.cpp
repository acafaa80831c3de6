#include "modwitt/extension.hpp"

#include <random>
#include <sstream>

#include "modwitt/jacobson.hpp"

namespace modwitt {

ExtElement ExtElement::basis(PrimeField f, std::size_t u, Scalar coeff) {
  if (u > f.order()) throw std::out_of_range("extension basis index out of range");
  if (u == f.order()) return central(f, coeff);
  return ExtElement(WittElement::basis(f, static_cast<int>(u) - 1, coeff), 0);
}

ExtElement ExtElement::central(PrimeField f, Scalar coeff) {
  return ExtElement(WittElement(f), coeff % f.order());
}

Scalar ExtElement::coefficient(std::size_t u) const {
  return u == field().order() ? c : witt.coeffs().at(u);
}

ExtElement ExtElement::scaled(Scalar a) const { return ExtElement(witt.scaled(a), field().mul(c, a)); }

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  witt += o.witt;
  c = field().add(c, o.c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  witt -= o.witt;
  c = field().sub(c, o.c);
  return *this;
}

CentralExtension::CentralExtension(Cochain2Res source) : source_(std::move(source)) {
  const PrimeField& f = field();
  const std::size_t n = dimension();
  const int p = static_cast<int>(prime());
  table_.assign(n * n * n, 0);
  for (int i = -1; i <= p - 2; ++i)
    for (int j = -1; j <= p - 2; ++j) {
      if (i == j) continue;
      const std::size_t u = static_cast<std::size_t>(i + 1);
      const std::size_t v = static_cast<std::size_t>(j + 1);
      const std::size_t w = static_cast<std::size_t>(normalize_index(i + j, prime()) + 1);
      table_[(u * n + v) * n + w] = f.reduce(j - i);
      table_[(u * n + v) * n + central_slot()] = source_.phi.at(i, j);
    }
  for (int j = -1; j <= p - 2; ++j)
    pmap_.emplace_back(pth_power_basis(f, j), source_.omega_basis[static_cast<std::size_t>(j + 1)]);
  pmap_.push_back(ExtElement(f));
}

ExtElement CentralExtension::bracket_basis(std::size_t u, std::size_t v) const {
  const std::size_t n = dimension();
  ExtElement out(field());
  for (std::size_t w = 0; w < n; ++w) {
    Scalar s = structure(u, v, w);
    if (!s) continue;
    if (w == central_slot())
      out.c = s;
    else
      out.witt[static_cast<int>(w) - 1] = s;
  }
  return out;
}

ExtElement CentralExtension::bracket(const ExtElement& x, const ExtElement& y) const {
  const PrimeField& f = field();
  const std::size_t n = dimension();
  std::vector<std::uint64_t> acc(n, 0);
  const std::uint64_t p = prime();
  for (std::size_t u = 0; u < n; ++u) {
    const Scalar a = x.coefficient(u);
    if (!a) continue;
    for (std::size_t v = 0; v < n; ++v) {
      const Scalar b = y.coefficient(v);
      if (!b) continue;
      const std::uint64_t ab = f.mul(a, b);
      const Scalar* row = &table_[(u * n + v) * n];
      for (std::size_t w = 0; w < n; ++w)
        if (row[w]) acc[w] = (acc[w] + ab * row[w]) % p;
    }
  }
  ExtElement out(f);
  for (std::size_t w = 0; w + 1 < n; ++w) out.witt[static_cast<int>(w) - 1] = static_cast<Scalar>(acc[w]);
  out.c = static_cast<Scalar>(acc[n - 1]);
  return out;
}

void CentralExtension::set_bracket(std::size_t u, std::size_t v, const ExtElement& value) {
  const std::size_t n = dimension();
  if (u >= n || v >= n) throw std::out_of_range("extension basis index out of range");
  for (std::size_t w = 0; w < n; ++w) {
    table_[(u * n + v) * n + w] = value.coefficient(w);
    table_[(v * n + u) * n + w] = field().neg(value.coefficient(w));
  }
}

ExtElement CentralExtension::pth_power(const ExtElement& x) const {
  return ExtElement(pth_power_via_derivation(x.witt), eval_omega(source_, x.witt));
}

CentralExtension build_extension_unchecked(const Cochain2Res& c) { return CentralExtension(c); }

CentralExtension build_extension(const Cochain2Res& c) {
  if (!is_cocycle(c)) throw NotACocycle();
  return build_extension_unchecked(c);
}

Splitting Splitting::canonical(const PrimeField& f) {
  Splitting s;
  for (std::size_t u = 0; u < f.order(); ++u) s.images.push_back(ExtElement::basis(f, u));
  return s;
}

Splitting Splitting::shifted(const Cochain1& psi) {
  Splitting s = canonical(psi.field);
  for (std::size_t u = 0; u < s.images.size(); ++u) s.images[u].c = psi.c[u];
  return s;
}

ExtElement Splitting::operator()(const WittElement& g) const {
  ExtElement out(g.field());
  for (std::size_t u = 0; u < images.size(); ++u)
    if (g.coeffs()[u]) out += images[u].scaled(g.coeffs()[u]);
  return out;
}

Cochain2Res extract_cocycle(const CentralExtension& ext, const Splitting& sigma) {
  const PrimeField& f = ext.field();
  const int p = static_cast<int>(f.order());
  if (sigma.images.size() != f.order()) throw NotASplitting();
  for (int i = -1; i <= p - 2; ++i)
    if (sigma.images[static_cast<std::size_t>(i + 1)].witt != WittElement::basis(f, i))
      throw NotASplitting();

  Cochain2Res out(f);
  for (int i = -1; i <= p - 2; ++i)
    for (int j = i + 1; j <= p - 2; ++j) {
      const WittElement ei = WittElement::basis(f, i);
      const WittElement ej = WittElement::basis(f, j);
      const ExtElement defect =
          ext.bracket(sigma(ei), sigma(ej)) - sigma(modwitt::bracket(ei, ej));
      if (!defect.witt.is_zero()) throw std::logic_error("extension bracket does not cover W");
      out.phi.add_to(i, j, defect.c);
    }
  for (int j = -1; j <= p - 2; ++j) {
    const WittElement ej = WittElement::basis(f, j);
    const ExtElement defect = ext.pth_power(sigma(ej)) - sigma(pth_power(ej));
    if (!defect.witt.is_zero()) throw std::logic_error("extension p-map does not cover W");
    out.omega_basis[static_cast<std::size_t>(j + 1)] = defect.c;
  }
  return out;
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult* AxiomReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string basis_label(const CentralExtension& ext, std::size_t u) {
  if (u == ext.central_slot()) return "c";
  return "e" + std::to_string(static_cast<int>(u) - 1);
}

ExtElement random_element(const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> coeff(0, f.order() - 1);
  ExtElement x(f);
  for (int i = -1; i <= static_cast<int>(f.order()) - 2; ++i) x.witt[i] = coeff(rng);
  x.c = coeff(rng);
  return x;
}

ExtElement jacobson_sum(const CentralExtension& ext, const ExtElement& x, const ExtElement& y) {
  ExtElement total(ext.field());
  auto br = [&ext](const ExtElement& a, const ExtElement& b) { return ext.bracket(a, b); };
  for (const auto& s : jacobson_terms(ext.field(), x, y, br)) total += s;
  return total;
}

ExtElement adjoint_chain(const CentralExtension& ext, ExtElement h, const ExtElement& g, Scalar times) {
  for (Scalar k = 0; k < times && !h.is_zero(); ++k) h = ext.bracket(h, g);
  return h;
}

// Records the first failure only; later ones would repeat the diagnosis.
void expect(CheckResult& check, bool ok, const std::string& what) {
  if (ok || !check.passed) return;
  check.passed = false;
  check.detail = what;
}

}  // namespace

AxiomReport verify_restricted_axioms(const CentralExtension& ext, std::size_t trials,
                                     std::uint64_t seed) {
  const PrimeField& f = ext.field();
  const std::size_t n = ext.dimension();
  const Scalar p = f.order();
  std::mt19937_64 rng(seed);
  AxiomReport report;

  CheckResult antisymmetry{"antisymmetry", true, ""};
  CheckResult central{"central", true, ""};
  for (std::size_t u = 0; u < n; ++u) {
    expect(central, ext.bracket_basis(u, ext.central_slot()).is_zero(),
           "[" + basis_label(ext, u) + ",c] != 0");
    for (std::size_t v = 0; v < n; ++v)
      expect(antisymmetry, (ext.bracket_basis(u, v) + ext.bracket_basis(v, u)).is_zero(),
             "[" + basis_label(ext, u) + "," + basis_label(ext, v) + "] not antisymmetric");
  }

  CheckResult jacobi{"jacobi", true, ""};
  for (std::size_t u = 0; u < n && jacobi.passed; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        const ExtElement bu = ExtElement::basis(f, u), bv = ExtElement::basis(f, v),
                         bw = ExtElement::basis(f, w);
        const ExtElement sum = ext.bracket(ext.bracket_basis(u, v), bw) +
                               ext.bracket(ext.bracket_basis(v, w), bu) +
                               ext.bracket(ext.bracket_basis(w, u), bv);
        expect(jacobi, sum.is_zero(),
               "Jacobi fails on (" + basis_label(ext, u) + "," + basis_label(ext, v) + "," +
                   basis_label(ext, w) + ")");
      }

  CheckResult pmap_table{"pmap_table", true, ""};
  for (std::size_t u = 0; u < n; ++u)
    expect(pmap_table, ext.pth_power(ExtElement::basis(f, u)) == ext.pmap_basis(u),
           basis_label(ext, u) + "^[p] disagrees with the table");

  // (lambda x)^[p] = lambda^p x^[p]
  CheckResult homogeneity{"homogeneity", true, ""};
  {
    std::uniform_int_distribution<Scalar> scalar(0, p - 1);
    auto check_one = [&](const ExtElement& x, Scalar lambda) {
      expect(homogeneity, ext.pth_power(x.scaled(lambda)) == ext.pth_power(x).scaled(f.frobenius(lambda)),
             "homogeneity fails for lambda = " + std::to_string(lambda));
    };
    for (std::size_t u = 0; u < n; ++u)
      for (Scalar lambda = 0; lambda < p; ++lambda) check_one(ExtElement::basis(f, u), lambda);
    for (std::size_t t = 0; t < trials; ++t) check_one(random_element(f, rng), scalar(rng));
  }

  // ad(g^[p]) = (ad g)^p
  CheckResult adjoint{"adjoint_power", true, ""};
  {
    auto check_one = [&](const ExtElement& h, const ExtElement& g) {
      expect(adjoint, ext.bracket(h, ext.pth_power(g)) == adjoint_chain(ext, h, g, p),
             "ad(g^[p]) != (ad g)^p");
    };
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) check_one(ExtElement::basis(f, u), ExtElement::basis(f, v));
    for (std::size_t t = 0; t < trials; ++t) {
      ExtElement h = random_element(f, rng);
      check_one(h, random_element(f, rng));
    }
  }

  // (x+y)^[p] = x^[p] + y^[p] + sum s_i(x,y)
  CheckResult additivity{"jacobson_formula", true, ""};
  {
    auto check_one = [&](const ExtElement& x, const ExtElement& y) {
      expect(additivity,
             ext.pth_power(x + y) == ext.pth_power(x) + ext.pth_power(y) + jacobson_sum(ext, x, y),
             "(x+y)^[p] violates the Jacobson formula");
    };
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v) check_one(ExtElement::basis(f, u), ExtElement::basis(f, v));
    for (std::size_t t = 0; t < trials; ++t) {
      ExtElement x = random_element(f, rng);
      check_one(x, random_element(f, rng));
    }
  }

  for (auto* c : {&antisymmetry, &central, &jacobi, &pmap_table, &homogeneity, &adjoint, &additivity})
    report.checks.push_back(std::move(*c));
  return report;
}

std::optional<Cochain1> cohomologous(const Cochain2Res& a, const Cochain2Res& b) {
  if (!is_cocycle(a) || !is_cocycle(b)) throw NotACocycle();
  const PrimeField& f = a.field();
  std::vector<Vector> columns;
  for (int k = -1; k <= static_cast<int>(f.order()) - 2; ++k)
    columns.push_back(delta1_res(Cochain1::dual_basis(f, k)).coordinates());
  auto coeffs = solve_membership(f, columns, (a - b).coordinates());
  if (!coeffs) return std::nullopt;
  Cochain1 psi(f);
  psi.c = std::move(*coeffs);
  return psi;
}

std::string_view to_string(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::split:
      return "split";
    case ExtensionKind::ordinary_levi_only:
      return "ordinary-Levi-only";
    case ExtensionKind::non_levi:
      return "non-Levi";
  }
  return "unknown";
}

ExtensionKind classify_extension(const Cochain2Res& c) {
  if (cohomologous(c, Cochain2Res(c.field()))) return ExtensionKind::split;
  if (is_ordinary_coboundary(c.phi)) return ExtensionKind::ordinary_levi_only;
  return ExtensionKind::non_levi;
}

}  // namespace modwitt
