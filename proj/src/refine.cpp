#include "fproots/refine.hpp"

#include <algorithm>

namespace fproots {

namespace {

bool basis_less(const Poly& a, const Poly& b) {
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return false;
}

// gcd(f, b) for monic b of degree 1 reduces to a root-membership test, which
// skips the Euclid loop the generic path would run.
Poly gcd_with(const Poly& f, const Poly& b) {
  if (b.degree() == 1) {
    const FpContext& ctx = f.field();
    const u64 root = ctx.neg(b.coeff(0));
    return eval(f, root) == 0 ? b : Poly::constant(ctx, 1);
  }
  return gcd(f, b);
}

} // namespace

std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs) {
  std::vector<Poly> basis;
  if (inputs.empty()) return basis;

  const FpContext& ctx = inputs.front().field();
  std::vector<Poly> work;
  for (const Poly& f : inputs) {
    require_same_field(ctx, f.field());
    if (f.is_zero()) throw Error(Errc::zero_input, "cannot refine the zero polynomial");
    if (!f.is_constant()) work.push_back(monic(f));
  }

  // Worklist splitting: pop a candidate; the first basis element sharing a
  // factor gets replaced by the gcd, and both cofactors go back on the list.
  // The combined degree of (worklist + basis) drops by deg(gcd) every split,
  // so the loop terminates.
  while (!work.empty()) {
    Poly f = std::move(work.back());
    work.pop_back();
    if (f.is_constant()) continue;
    bool split = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Poly g = gcd_with(f, basis[i]);
      if (g.is_constant()) continue;
      Poly b = std::move(basis[i]);
      basis.erase(basis.begin() + (std::ptrdiff_t)i);
      Poly bq = div_rem(b, g).quot;
      Poly fq = div_rem(f, g).quot;
      work.push_back(std::move(g));
      if (!bq.is_constant()) work.push_back(std::move(bq));
      if (!fq.is_constant()) work.push_back(std::move(fq));
      split = true;
      break;
    }
    if (!split) basis.push_back(std::move(f));
  }
  std::sort(basis.begin(), basis.end(), basis_less);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

RefinedBasis factor_refine(const std::vector<Poly>& inputs) {
  RefinedBasis out;
  if (inputs.empty()) return out;

  const FpContext& ctx = inputs.front().field();
  for (const Poly& f : inputs) {
    require_same_field(ctx, f.field());
    if (f.is_zero()) throw Error(Errc::zero_input, "cannot refine the zero polynomial");
    out.units.push_back(f.leading());
  }
  std::vector<Poly> basis = coprime_basis(inputs);

  out.exponents.assign(inputs.size(), std::vector<u32>(basis.size(), 0));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].is_constant()) continue;
    Poly m = monic(inputs[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      // The basis is degree-sorted, so nothing past this point can divide m.
      if (m.degree() < basis[j].degree()) break;
      if (basis[j].degree() == 1) {
        const u64 root = ctx.neg(basis[j].coeff(0));
        while (!m.is_constant() && eval(m, root) == 0) {
          m = div_rem(m, basis[j]).quot;
          ++out.exponents[i][j];
        }
        continue;
      }
      while (true) {
        DivRem qr = div_rem(m, basis[j]);
        if (!qr.rem.is_zero()) break;
        m = std::move(qr.quot);
        ++out.exponents[i][j];
      }
    }
    if (!m.is_one()) throw Error(Errc::internal, "basis does not cover an input");
  }
  out.basis = std::move(basis);
  return out;
}

std::vector<Poly> refine_pair(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) throw Error(Errc::zero_input, "cannot refine the zero polynomial");
  if (a.is_constant() || b.is_constant())
    throw Error(Errc::bad_input, "refine_pair needs degree >= 1 on both sides");
  return factor_refine({a, b}).basis;
}

} // namespace fproots
